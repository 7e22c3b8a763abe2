//! A small catalogue of finite groups.

use super::group::GroupTable;
use crate::ids::VertexId;

/// `Z_n` on `"0".."n-1"`.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n > 0, "cyclic group of order 0");
    let elements = (0..n).map(|i| VertexId::new(i.to_string())).collect();
    let product = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
    GroupTable::from_indices(elements, product, 0).expect("distinct names")
}

/// Direct product with elements named `x.y`.
pub fn product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    g.direct_product(h, |x, y| VertexId::new(format!("{x}.{y}")))
}

/// `Z_2 × Z_2`.
pub fn klein() -> GroupTable {
    product(&cyclic(2), &cyclic(2))
}

/// Dihedral group of order `2n`: rotations `r0..`, reflections `s0..`,
/// with `r_i r_j = r_{i+j}`, `r_i s_j = s_{i+j}`, `s_i r_j = s_{i-j}`,
/// `s_i s_j = r_{i-j}`.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n > 0, "dihedral group of order 0");
    let elements: Vec<VertexId> = (0..n)
        .map(|i| VertexId::new(format!("r{i}")))
        .chain((0..n).map(|i| VertexId::new(format!("s{i}"))))
        .collect();
    let mul = |x: usize, y: usize| -> usize {
        let (xr, xi) = (x < n, x % n);
        let (yr, yi) = (y < n, y % n);
        match (xr, yr) {
            (true, true) => (xi + yi) % n,
            (true, false) => n + (xi + yi) % n,
            (false, true) => n + (xi + n - yi) % n,
            (false, false) => (xi + n - yi) % n,
        }
    };
    let product = (0..2 * n).map(|x| (0..2 * n).map(|y| mul(x, y)).collect()).collect();
    GroupTable::from_indices(elements, product, 0).expect("distinct names")
}

/// Permutations of `{0,1,2}`, named by their image strings (`"120"` sends
/// 0 to 1, 1 to 2 and 2 to 0).
pub fn symmetric3() -> GroupTable {
    let perms: Vec<(VertexId, Vec<usize>)> = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
        .into_iter()
        .map(|p| {
            let name: String = p.iter().map(|d| d.to_string()).collect();
            (VertexId::new(name), p.to_vec())
        })
        .collect();
    GroupTable::from_permutations(&perms).expect("S3 is closed")
}

/// Quaternion group on `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> GroupTable {
    // unit u in {1,i,j,k} as 0..4, sign as bool
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    let decode = |x: usize| (x / 2, x % 2 == 1);
    let encode = |u: usize, neg: bool| 2 * u + usize::from(neg);
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, b) => (b, false),
            (a, 0) => (a, false),
            (a, b) if a == b => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let product = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let ((a, sa), (b, sb)) = (decode(x), decode(y));
                    let (c, sc) = unit_mul(a, b);
                    encode(c, sa ^ sb ^ sc)
                })
                .collect()
        })
        .collect();
    GroupTable::from_indices(names.iter().map(|&n| VertexId::from(n)).collect(), product, 0)
        .expect("distinct names")
}

/// Every group of order at most 8 used by the test corpus, with a short
/// name: `Z1`..`Z8`, `Z2xZ2`, `Z2xZ2xZ2`, `Z4xZ2`, `S3`, `D4`, `Q8`.
pub fn small_groups() -> Vec<(&'static str, GroupTable)> {
    let mut groups: Vec<(&'static str, GroupTable)> = Vec::new();
    let names = ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8"];
    for (i, name) in names.into_iter().enumerate() {
        groups.push((name, cyclic(i + 1)));
    }
    groups.push(("Z2xZ2", klein()));
    groups.push(("Z2xZ2xZ2", product(&klein(), &cyclic(2))));
    groups.push(("Z4xZ2", product(&cyclic(4), &cyclic(2))));
    groups.push(("S3", symmetric3()));
    groups.push(("D4", dihedral(4)));
    groups.push(("Q8", quaternion()));
    groups
}
