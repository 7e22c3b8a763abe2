//! Finite groups as explicit multiplication tables.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::ids::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("duplicate element {0}")]
    DuplicateElement(VertexId),
    #[error("product table is not total: row {row} has {len} entries, expected {expected}")]
    NonTotalTable { row: usize, len: usize, expected: usize },
    #[error("unknown element {0}")]
    UnknownElement(VertexId),
    #[error("permutation {0} is not a bijection of the carrier")]
    NotAPermutation(VertexId),
    #[error("permutations are not closed under composition")]
    NotClosed,
}

/// A failed group law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum GroupWitness {
    /// `(a·b)·c ≠ a·(b·c)`.
    Associativity { a: VertexId, b: VertexId, c: VertexId },
    /// `e·x ≠ x` or `x·e ≠ x`.
    Identity { element: VertexId },
    /// No two-sided inverse.
    Inverse { element: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupCheck {
    pub valid: bool,
    pub witness: Option<GroupWitness>,
}

/// A finite magma table with a designated identity, which
/// [`verify_group`] checks to be a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    elements: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    product: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<Option<usize>>,
}

impl GroupTable {
    /// Validates the table's shape: distinct elements, a total product table
    /// over them and a known identity. Group laws are not checked here.
    pub fn new(
        elements: Vec<VertexId>,
        product: Vec<Vec<VertexId>>,
        identity: VertexId,
    ) -> Result<GroupTable, GroupError> {
        let mut index = BTreeMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(GroupError::DuplicateElement(e.clone()));
            }
        }
        let lookup = |v: &VertexId| index.get(v).copied().ok_or_else(|| GroupError::UnknownElement(v.clone()));
        let n = elements.len();
        if product.len() != n {
            return Err(GroupError::NonTotalTable {
                row: product.len().min(n),
                len: 0,
                expected: n,
            });
        }
        let mut table = Vec::with_capacity(n);
        for (row, entries) in product.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NonTotalTable {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            table.push(entries.iter().map(lookup).collect::<Result<Vec<_>, _>>()?);
        }
        let identity = lookup(&identity)?;
        GroupTable::from_indices(elements, table, identity)
    }

    pub(crate) fn from_indices(
        elements: Vec<VertexId>,
        product: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<GroupTable, GroupError> {
        if elements.is_empty() {
            return Err(GroupError::Empty);
        }
        let mut index = BTreeMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(GroupError::DuplicateElement(e.clone()));
            }
        }
        let n = elements.len();
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| product[x][y] == identity && product[y][x] == identity))
            .collect();
        Ok(GroupTable {
            elements,
            index,
            product,
            identity,
            inverse,
        })
    }

    /// The group generated by permutations of `0..degree`, composed as
    /// functions: `(f·g)(x) = f(g(x))`. Elements keep the given names; the
    /// list must be closed under composition and contain the identity.
    pub fn from_permutations(perms: &[(VertexId, Vec<usize>)]) -> Result<GroupTable, GroupError> {
        let degree = perms.first().map_or(0, |(_, p)| p.len());
        let mut by_perm: BTreeMap<&[usize], usize> = BTreeMap::new();
        for (i, (name, p)) in perms.iter().enumerate() {
            let image: BTreeSet<usize> = p.iter().copied().collect();
            if p.len() != degree || image.len() != degree || p.iter().any(|&x| x >= degree) {
                return Err(GroupError::NotAPermutation(name.clone()));
            }
            if by_perm.insert(p.as_slice(), i).is_some() {
                return Err(GroupError::DuplicateElement(name.clone()));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let id = *by_perm.get(identity.as_slice()).ok_or(GroupError::NotClosed)?;
        let mut product = Vec::with_capacity(perms.len());
        for (_, f) in perms {
            let mut row = Vec::with_capacity(perms.len());
            for (_, g) in perms {
                let fg: Vec<usize> = g.iter().map(|&x| f[x]).collect();
                row.push(*by_perm.get(fg.as_slice()).ok_or(GroupError::NotClosed)?);
            }
            product.push(row);
        }
        GroupTable::from_indices(perms.iter().map(|(n, _)| n.clone()).collect(), product, id)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[VertexId] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &VertexId {
        &self.elements[i]
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.product[x][y]
    }

    /// Product by name; `None` for unknown elements.
    pub fn mul_named(&self, x: &VertexId, y: &VertexId) -> Option<&VertexId> {
        Some(&self.elements[self.mul(self.index_of(x)?, self.index_of(y)?)])
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn identity_name(&self) -> &VertexId {
        &self.elements[self.identity]
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inverse[x]
    }

    pub fn product_rows(&self) -> Vec<Vec<VertexId>> {
        self.product
            .iter()
            .map(|row| row.iter().map(|&x| self.elements[x].clone()).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Smallest `k ≥ 1` with `x^k = e`, if any.
    pub fn element_order(&self, x: usize) -> Option<usize> {
        let mut p = x;
        for k in 1..=self.order() {
            if p == self.identity {
                return Some(k);
            }
            p = self.mul(p, x);
        }
        None
    }

    /// Elements reachable from the identity by right multiplication with
    /// members of `subset`.
    pub fn closure(&self, subset: &[usize]) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &h in subset {
                let y = self.mul(x, h);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn generated_by(&self, subset: &[usize]) -> bool {
        self.closure(subset).len() == self.order()
    }

    /// Direct product; element `(x, y)` is named by `name(x, y)`.
    pub fn direct_product(&self, other: &GroupTable, name: impl Fn(&VertexId, &VertexId) -> VertexId) -> GroupTable {
        let (n, m) = (self.order(), other.order());
        let elements = (0..n)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .map(|(x, y)| name(&self.elements[x], &other.elements[y]))
            .collect();
        let product = (0..n * m)
            .map(|p| {
                (0..n * m)
                    .map(|q| self.mul(p / m, q / m) * m + other.mul(p % m, q % m))
                    .collect()
            })
            .collect();
        GroupTable::from_indices(elements, product, self.identity * m + other.identity)
            .expect("product names must be distinct")
    }

    /// The same table with every element renamed.
    pub fn rename(&self, name: impl Fn(&VertexId) -> VertexId) -> Result<GroupTable, GroupError> {
        GroupTable::from_indices(
            self.elements.iter().map(name).collect(),
            self.product.clone(),
            self.identity,
        )
    }
}

/// Checks associativity, the identity law and two-sided inverses, in that
/// order, returning the first failure.
pub fn verify_group(g: &GroupTable) -> GroupCheck {
    let n = g.order();
    let name = |x: usize| g.elements[x].clone();
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            for c in 0..n {
                if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                    return GroupCheck {
                        valid: false,
                        witness: Some(GroupWitness::Associativity {
                            a: name(a),
                            b: name(b),
                            c: name(c),
                        }),
                    };
                }
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| g.mul(g.identity, x) != x || g.mul(x, g.identity) != x) {
        return GroupCheck {
            valid: false,
            witness: Some(GroupWitness::Identity { element: name(x) }),
        };
    }
    if let Some(x) = (0..n).find(|&x| g.inverse[x].is_none()) {
        return GroupCheck {
            valid: false,
            witness: Some(GroupWitness::Inverse { element: name(x) }),
        };
    }
    GroupCheck {
        valid: true,
        witness: None,
    }
}

#[derive(Serialize)]
struct TableForm<'a> {
    elements: &'a [VertexId],
    product: Vec<Vec<VertexId>>,
    identity: &'a VertexId,
}

impl Serialize for GroupTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableForm {
            elements: &self.elements,
            product: self.product_rows(),
            identity: self.identity_name(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::groups::cyclic;

    #[test]
    fn cyclic_tables_are_groups() {
        let z6 = cyclic(6);
        assert!(verify_group(&z6).valid);
        assert_eq!(z6.element_order(1), Some(6));
        assert!(z6.is_abelian());
        assert!(z6.generated_by(&[1]));
        assert!(!z6.generated_by(&[2]));
    }

    #[test]
    fn corrupted_cell_is_caught() {
        let z6 = cyclic(6);
        let mut rows = z6.product_rows();
        rows[2][3] = VertexId::from("0");
        let bad = GroupTable::new(z6.elements().to_vec(), rows, "0".into()).unwrap();
        let check = verify_group(&bad);
        assert!(!check.valid);
        assert!(matches!(check.witness, Some(GroupWitness::Associativity { .. })));
    }

    #[test]
    fn shape_errors() {
        let e = VertexId::from("e");
        assert_eq!(
            GroupTable::new(vec![e.clone(), "x".into()], vec![vec![e.clone()], vec![]], e.clone()),
            Err(GroupError::NonTotalTable { row: 0, len: 1, expected: 2 })
        );
        assert_eq!(
            GroupTable::new(vec![e.clone()], vec![vec!["y".into()]], e.clone()),
            Err(GroupError::UnknownElement("y".into()))
        );
    }

    #[test]
    fn permutation_groups() {
        let k4 = GroupTable::from_permutations(&[
            ("id".into(), vec![0, 1, 2, 3]),
            ("a".into(), vec![1, 0, 3, 2]),
            ("b".into(), vec![2, 3, 0, 1]),
            ("c".into(), vec![3, 2, 1, 0]),
        ])
        .unwrap();
        assert!(verify_group(&k4).valid);
        assert!(k4.is_abelian());
        assert_eq!(k4.mul_named(&"a".into(), &"b".into()), Some(&VertexId::from("c")));
        let open = GroupTable::from_permutations(&[("id".into(), vec![0, 1, 2]), ("r".into(), vec![1, 2, 0])]);
        assert_eq!(open, Err(GroupError::NotClosed));
    }
}
