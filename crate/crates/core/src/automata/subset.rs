//! Subset construction and its mirror images.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Automaton, Dfa};
use crate::graph::Lts;
use crate::ids::{Label, VertexId};

fn step(lts: &Lts, set: &[usize], a: usize) -> Vec<usize> {
    let mut next: BTreeSet<usize> = BTreeSet::new();
    for &v in set {
        next.extend(lts.successors(v, a));
    }
    next.into_iter().collect()
}

fn subset_name(lts: &Lts, set: &[usize]) -> VertexId {
    let names: Vec<&str> = set.iter().map(|&v| lts.vertex(v).as_str()).collect();
    VertexId::new(format!("{{{}}}", names.join(",")))
}

/// `Det(A)`: reachable subsets `I·u`, named by their sorted member lists
/// (`{p,q}`). The result is deterministic and accessible and recognizes the
/// same language.
pub fn determinize(a: &Automaton) -> Automaton {
    let lts = a.lts();
    let start = a.initial_indices();
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut sets = vec![start.clone()];
    index.insert(start, 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for l in 0..lts.num_labels() {
            let next = step(lts, &sets[i], l);
            if next.is_empty() {
                continue;
            }
            let j = *index.entry(next.clone()).or_insert_with(|| {
                sets.push(next);
                queue.push_back(sets.len() - 1);
                sets.len() - 1
            });
            edges.push((i, l, j));
        }
    }
    let names: Vec<VertexId> = sets.iter().map(|s| subset_name(lts, s)).collect();
    let named_edges = edges.iter().map(|&(i, l, j)| crate::ids::Edge {
        source: names[i].clone(),
        label: lts.label(l).clone(),
        target: names[j].clone(),
    });
    let initial: BTreeSet<VertexId> = [names[0].clone()].into_iter().collect();
    let finals: BTreeSet<VertexId> = sets
        .iter()
        .zip(&names)
        .filter(|(s, _)| s.iter().any(|&v| a.is_final(v)))
        .map(|(_, n)| n.clone())
        .collect();
    Automaton::from_parts(named_edges.collect::<Vec<_>>(), &initial, &finals)
}

/// `CoDet(A) = Det(A⁻¹)⁻¹`.
pub fn co_determinize(a: &Automaton) -> Automaton {
    determinize(&a.inverse()).inverse()
}

/// `Det(CoDet(A))`: the minimal deterministic reduced automaton of `L(A)`.
pub fn brzozowski(a: &Automaton) -> Automaton {
    determinize(&co_determinize(a))
}

/// Complete DFA of `L(A)` over its labels plus `extra`.
pub(crate) fn language_dfa(a: &Automaton, extra: &[Label]) -> Dfa {
    let lts = a.lts();
    let alphabet: Vec<Label> = lts
        .labels()
        .iter()
        .chain(extra)
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let letter: Vec<Option<usize>> = alphabet.iter().map(|l| lts.label_index(l)).collect();
    let k = alphabet.len();
    let start = a.initial_indices();
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut sets = vec![start.clone()];
    index.insert(start, 0);
    let mut delta: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < sets.len() {
        for l in letter.iter() {
            let next = match l {
                Some(l) => step(lts, &sets[i], *l),
                None => Vec::new(),
            };
            let j = *index.entry(next.clone()).or_insert_with(|| {
                sets.push(next);
                sets.len() - 1
            });
            delta.push(j);
        }
        i += 1;
    }
    let accepting: Vec<bool> = sets.iter().map(|s| s.iter().any(|&v| a.is_final(v))).collect();
    let sink = index.get(&Vec::new()).copied();
    debug_assert_eq!(delta.len(), sets.len() * k);
    Dfa::new(alphabet, delta, 0, accepting, sink).expect("subset construction is total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::tests::even_auto;
    use crate::automata::{graph_iso, iso, IsoConfig};
    use crate::graph::LabeledDigraph;
    use crate::ids::Word;

    fn chain_nfa() -> Automaton {
        let g = LabeledDigraph::from_triples([("s", "a", "t"), ("s", "a", "u"), ("t", "b", "f"), ("u", "b", "f")])
            .unwrap();
        Automaton::new(&g, ["s".into()], ["f".into()]).unwrap()
    }

    #[test]
    fn subset_construction_by_hand() {
        let d = determinize(&chain_nfa());
        assert_eq!(d.num_states(), 3);
        let names: Vec<&str> = d.lts().vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(names, ["{f}", "{s}", "{t,u}"]);
        assert!(d.is_deterministic());
        assert!(d.is_accessible());
        assert!(d.recognizes(&Word::from_chars("ab")));
        assert_eq!(d.initial(), ["{s}".into()].into_iter().collect());
    }

    #[test]
    fn co_determinize_mirrors() {
        let c = co_determinize(&chain_nfa());
        assert!(c.is_co_deterministic());
        assert!(c.is_co_accessible());
        assert_eq!(c.num_states(), 3);
        assert!(c.recognizes(&Word::from_chars("ab")));
        let again = co_determinize(&c);
        assert!(iso(&again, &c, &IsoConfig::default()).unwrap().is_some());
    }

    #[test]
    fn deterministic_input_is_preserved() {
        let a = even_auto("p", "q");
        let d = determinize(&a);
        assert!(iso(&d, &a, &IsoConfig::default()).unwrap().is_some());
        let g = d.graph().unwrap();
        assert!(graph_iso(&g, &a.graph().unwrap(), &IsoConfig::default()).unwrap().is_some());
    }

    #[test]
    fn empty_initial_set() {
        let g = LabeledDigraph::from_triples([("s", "a", "s")]).unwrap();
        let a = Automaton::new(&g, [], ["s".into()]).unwrap();
        let d = determinize(&a);
        assert_eq!(d.num_states(), 1);
        assert!(!d.recognizes(&Word::empty()));
        assert!(a.to_dfa(&[]).is_empty());
    }
}
