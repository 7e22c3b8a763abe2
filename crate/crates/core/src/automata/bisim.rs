//! Simulations, bisimulations and quotients by congruences.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{AutomataError, Automaton};
use crate::ids::{Edge, VertexId};

/// A binary relation between the states of two automata.
pub type Relation = BTreeSet<(VertexId, VertexId)>;

/// Checks the four simulation clauses from `a` into `b`:
///
/// 1. every state of `a` is related to some state of `b`;
/// 2. if `s R s'` and `s -x-> t` then `s' -x-> t'` for some `t'` with `t R t'`;
/// 3. every initial state of `a` is related to some initial state of `b`;
/// 4. if `s R s'` and `s` is final then `s'` is final.
///
/// Pairs naming unknown states make the relation fail.
pub fn is_simulation(r: &Relation, a: &Automaton, b: &Automaton) -> bool {
    let (la, lb) = (a.lts(), b.lts());
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(r.len());
    for (s, t) in r {
        match (la.vertex_index(s), lb.vertex_index(t)) {
            (Some(s), Some(t)) => pairs.push((s, t)),
            _ => return false,
        }
    }
    let mut image: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); la.num_vertices()];
    for &(s, t) in &pairs {
        image[s].insert(t);
    }
    if image.iter().any(|img| img.is_empty()) {
        return false;
    }
    for &(s, s2) in &pairs {
        if a.is_final(s) && !b.is_final(s2) {
            return false;
        }
        for &(x, t) in la.out(s) {
            let Some(bx) = lb.label_index(la.label(x)) else {
                return false;
            };
            if !lb.successors(s2, bx).any(|t2| image[t].contains(&t2)) {
                return false;
            }
        }
    }
    a.initial_indices()
        .into_iter()
        .all(|s| image[s].iter().any(|&t| b.is_initial(t)))
}

pub fn is_bisimulation(r: &Relation, a: &Automaton, b: &Automaton) -> bool {
    let inverse: Relation = r.iter().map(|(s, t)| (t.clone(), s.clone())).collect();
    is_simulation(r, a, b) && is_simulation(&inverse, b, a)
}

/// A partition of an automaton's states into blocks, numbered in order of
/// their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    #[serde(skip)]
    vertices: Vec<VertexId>,
    #[serde(skip)]
    block: Vec<usize>,
    blocks: Vec<BTreeSet<VertexId>>,
}

impl Partition {
    fn from_block_ids(vertices: Vec<VertexId>, raw: &[usize]) -> Partition {
        let mut renumber: BTreeMap<usize, usize> = BTreeMap::new();
        let block: Vec<usize> = raw
            .iter()
            .map(|&b| {
                let next = renumber.len();
                *renumber.entry(b).or_insert(next)
            })
            .collect();
        let mut blocks = vec![BTreeSet::new(); renumber.len()];
        for (v, &b) in block.iter().enumerate() {
            blocks[b].insert(vertices[v].clone());
        }
        Partition {
            vertices,
            block,
            blocks,
        }
    }

    /// Validates that `blocks` partitions the states of `a`.
    pub fn from_blocks(a: &Automaton, blocks: &[BTreeSet<VertexId>]) -> Result<Partition, AutomataError> {
        let lts = a.lts();
        let mut raw = vec![usize::MAX; lts.num_vertices()];
        for (b, members) in blocks.iter().enumerate() {
            if members.is_empty() {
                return Err(AutomataError::NotAPartition);
            }
            for v in members {
                let i = lts.vertex_index(v).ok_or_else(|| AutomataError::UnknownVertex(v.clone()))?;
                if raw[i] != usize::MAX {
                    return Err(AutomataError::NotAPartition);
                }
                raw[i] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(AutomataError::NotAPartition);
        }
        Ok(Partition::from_block_ids(lts.vertices().to_vec(), &raw))
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[BTreeSet<VertexId>] {
        &self.blocks
    }

    pub fn block_of(&self, v: &VertexId) -> Option<usize> {
        let i = self.vertices.binary_search(v).ok()?;
        Some(self.block[i])
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.vertices.len()
    }

    /// The equivalence relation of the partition.
    pub fn as_relation(&self) -> Relation {
        let mut r = Relation::new();
        for b in &self.blocks {
            for s in b {
                for t in b {
                    r.insert((s.clone(), t.clone()));
                }
            }
        }
        r
    }

    fn block_name(&self, b: usize) -> VertexId {
        let names: Vec<&str> = self.blocks[b].iter().map(|v| v.as_str()).collect();
        VertexId::new(format!("{{{}}}", names.join(",")))
    }
}

/// The greatest bisimulation of `a` with itself, by signature refinement:
/// start from the split by final membership and split blocks by the set of
/// `(label, successor block)` pairs until stable.
pub fn greatest_bisimulation(a: &Automaton) -> Partition {
    let lts = a.lts();
    let n = lts.num_vertices();
    let mut block: Vec<usize> = (0..n).map(|v| usize::from(a.is_final(v))).collect();
    let mut count = block.iter().collect::<BTreeSet<_>>().len();
    loop {
        let mut ids: BTreeMap<(usize, BTreeSet<(usize, usize)>), usize> = BTreeMap::new();
        let next: Vec<usize> = (0..n)
            .map(|v| {
                let sig: BTreeSet<(usize, usize)> = lts.out(v).iter().map(|&(x, t)| (x, block[t])).collect();
                let fresh = ids.len();
                *ids.entry((block[v], sig)).or_insert(fresh)
            })
            .collect();
        let new_count = ids.len();
        block = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    Partition::from_block_ids(lts.vertices().to_vec(), &block)
}

/// The map sending each state to its block in the quotient.
pub fn quotient_map(p: &Partition) -> BTreeMap<VertexId, VertexId> {
    p.vertices
        .iter()
        .zip(&p.block)
        .map(|(v, &b)| (v.clone(), p.block_name(b)))
        .collect()
}

/// `A/p`: blocks as states, named by their sorted members (`{1,2}`).
pub fn quotient(a: &Automaton, p: &Partition) -> Automaton {
    let lts = a.lts();
    let name = |v: usize| p.block_name(p.block[v]);
    let edges: Vec<Edge> = lts
        .dense_edges()
        .iter()
        .map(|&(s, x, t)| Edge {
            source: name(s),
            label: lts.label(x).clone(),
            target: name(t),
        })
        .collect();
    let initial = a.initial_indices().into_iter().map(name).collect();
    let finals = a.final_indices().into_iter().map(name).collect();
    Automaton::from_parts(edges, &initial, &finals)
}

/// `Min(A)`: the quotient by the greatest bisimulation.
pub fn minimize(a: &Automaton) -> Automaton {
    quotient(a, &greatest_bisimulation(a))
}

/// Whether `map` (a total function from the states of `a`) is a
/// bisimulation from `a` onto `b`.
pub fn is_reduction(map: &BTreeMap<VertexId, VertexId>, a: &Automaton, b: &Automaton) -> bool {
    let relation: Relation = map.iter().map(|(s, t)| (s.clone(), t.clone())).collect();
    a.lts().vertices().iter().all(|v| map.contains_key(v)) && is_bisimulation(&relation, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::tests::{even, even_auto};
    use crate::graph::LabeledDigraph;
    use crate::ids::Word;

    fn pairs(list: &[(&str, &str)]) -> Relation {
        list.iter().map(|&(s, t)| (s.into(), t.into())).collect()
    }

    fn abc_star() -> Automaton {
        let g = LabeledDigraph::from_triples([("0", "a", "1"), ("0", "b", "2"), ("1", "c", "0"), ("2", "c", "0")])
            .unwrap();
        Automaton::new(&g, ["0".into()], ["0".into()]).unwrap()
    }

    #[test]
    fn simulation_clauses() {
        let a = even_auto("p", "p");
        assert!(is_bisimulation(&pairs(&[("p", "p"), ("q", "q")]), &a, &a));
        let bare = Automaton::new(&even(), [], []).unwrap();
        assert!(is_bisimulation(&pairs(&[("p", "q"), ("q", "p")]), &bare, &bare));
        assert!(!is_bisimulation(&pairs(&[("p", "q"), ("q", "p")]), &a, &a));
        assert!(!is_simulation(&Relation::new(), &a, &a));
        assert!(!is_simulation(&pairs(&[("p", "x")]), &a, &a));
    }

    #[test]
    fn even_is_already_minimal() {
        let p = greatest_bisimulation(&even_auto("p", "p"));
        assert!(p.is_discrete());
        assert_eq!(p.block_of(&"q".into()), Some(1));
    }

    #[test]
    fn merges_equal_residuals() {
        let a = abc_star();
        let p = greatest_bisimulation(&a);
        let expected: Vec<BTreeSet<VertexId>> = vec![
            ["0".into()].into_iter().collect(),
            ["1".into(), "2".into()].into_iter().collect(),
        ];
        assert_eq!(p.blocks(), expected.as_slice());
        let m = minimize(&a);
        assert_eq!(m.num_states(), 2);
        assert!(is_reduction(&quotient_map(&p), &a, &m));
        for w in ["", "ac", "bcac", "ab", "c"] {
            let w = Word::from_chars(w);
            assert_eq!(m.recognizes(&w), a.recognizes(&w));
        }
    }

    #[test]
    fn uniform_complete_automaton_collapses() {
        let a = Automaton::new(&even(), ["p".into()], ["p".into(), "q".into()]).unwrap();
        assert_eq!(greatest_bisimulation(&a).num_blocks(), 1);
    }

    #[test]
    fn partition_validation() {
        let a = even_auto("p", "p");
        let one: BTreeSet<VertexId> = ["p".into()].into_iter().collect();
        assert_eq!(Partition::from_blocks(&a, std::slice::from_ref(&one)), Err(AutomataError::NotAPartition));
        let two: BTreeSet<VertexId> = ["q".into()].into_iter().collect();
        let p = Partition::from_blocks(&a, &[one, two]).unwrap();
        assert!(p.is_discrete());
    }
}
