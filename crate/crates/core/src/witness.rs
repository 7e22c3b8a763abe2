//! Finite counterexamples attached to failed graph predicates.

use std::fmt;

use serde::Serialize;

use crate::automata::{automorphism, Automaton, IsoConfig};
use crate::graph::LabeledDigraph;
use crate::ids::{Edge, Label, VertexId, Word};

/// Why a structural predicate fails. Every variant can be re-checked
/// against the graph with [`Witness::certifies`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two edges with the same source and target.
    ParallelEdges { first: Edge, second: Edge },
    /// Two edges with the same source and label.
    LabelClash { first: Edge, second: Edge },
    /// Two edges with the same target and label.
    CoLabelClash { first: Edge, second: Edge },
    /// No vertex reaches both.
    NoCommonAncestor { first: VertexId, second: VertexId },
    Unreachable { from: VertexId, to: VertexId },
    /// The vertices lie in different components of `G ∪ G⁻¹`.
    Disconnected { from: VertexId, to: VertexId },
    MissingOutEdge { vertex: VertexId, label: Label },
    MissingInEdge { vertex: VertexId, label: Label },
    /// `word` labels a cycle at `first` but no cycle at `second`.
    CycleWord { first: VertexId, second: VertexId, word: Word },
    /// `word` labels an elementary cycle at `first` but not at `second`.
    ElementaryCycleWord { first: VertexId, second: VertexId, word: Word },
    /// No automorphism sends `from` to `to`.
    NoAutomorphism { from: VertexId, to: VertexId },
    /// No automorphism sends the first edge onto the second.
    NoEdgeAutomorphism { first: Edge, second: Edge },
}

impl Witness {
    /// Re-validates the witness against `g`.
    pub fn certifies(&self, g: &LabeledDigraph) -> bool {
        let has = |e: &Edge| g.contains_edge(e);
        let idx = |v: &VertexId| g.vertex_index(v);
        match self {
            Witness::ParallelEdges { first, second } => {
                has(first)
                    && has(second)
                    && first != second
                    && first.source == second.source
                    && first.target == second.target
            }
            Witness::LabelClash { first, second } => {
                has(first)
                    && has(second)
                    && first != second
                    && first.source == second.source
                    && first.label == second.label
            }
            Witness::CoLabelClash { first, second } => {
                has(first)
                    && has(second)
                    && first != second
                    && first.target == second.target
                    && first.label == second.label
            }
            Witness::NoCommonAncestor { first, second } => match (idx(first), idx(second)) {
                (Some(x), Some(y)) => {
                    let rx = g.reachable(&[x], true);
                    let ry = g.reachable(&[y], true);
                    !rx.iter().zip(&ry).any(|(&p, &q)| p && q)
                }
                _ => false,
            },
            Witness::Unreachable { from, to } => match (idx(from), idx(to)) {
                (Some(x), Some(y)) => !g.reachable(&[x], false)[y],
                _ => false,
            },
            Witness::Disconnected { from, to } => match (idx(from), idx(to)) {
                (Some(x), Some(y)) => {
                    let (comp, _) = g.weak_components();
                    comp[x] != comp[y]
                }
                _ => false,
            },
            Witness::MissingOutEdge { vertex, label } => match (idx(vertex), g.label_index(label)) {
                (Some(v), Some(a)) => g.successors(v, a).next().is_none(),
                _ => false,
            },
            Witness::MissingInEdge { vertex, label } => match (idx(vertex), g.label_index(label)) {
                (Some(v), Some(a)) => !g.inc(v).iter().any(|&(l, _)| l == a),
                _ => false,
            },
            Witness::CycleWord { first, second, word } => {
                let cycle = |v: &VertexId| {
                    Automaton::new(g, [v.clone()], [v.clone()])
                        .map(|a| a.recognizes(word))
                        .ok()
                };
                cycle(first) == Some(true) && cycle(second) == Some(false)
            }
            Witness::ElementaryCycleWord { first, second, word } => {
                match (idx(first), idx(second)) {
                    (Some(x), Some(y)) => {
                        labels_elementary_cycle(g, x, word) && !labels_elementary_cycle(g, y, word)
                    }
                    _ => false,
                }
            }
            Witness::NoAutomorphism { from, to } => {
                idx(from).is_some()
                    && idx(to).is_some()
                    && matches!(
                        automorphism(g, &[(from.clone(), to.clone())], &unbounded()),
                        Ok(None)
                    )
            }
            Witness::NoEdgeAutomorphism { first, second } => {
                has(first)
                    && has(second)
                    && first.label == second.label
                    && matches!(
                        automorphism(
                            g,
                            &[
                                (first.source.clone(), second.source.clone()),
                                (first.target.clone(), second.target.clone()),
                            ],
                            &unbounded(),
                        ),
                        Ok(None)
                    )
            }
        }
    }
}

fn unbounded() -> IsoConfig {
    IsoConfig {
        max_vertices: usize::MAX,
    }
}

/// Whether `word` labels a cycle at `s` whose other vertices are pairwise
/// distinct and different from `s`.
pub(crate) fn labels_elementary_cycle(g: &LabeledDigraph, s: usize, word: &Word) -> bool {
    fn walk(g: &LabeledDigraph, s: usize, at: usize, rest: &[usize], used: &mut Vec<bool>) -> bool {
        let Some((&a, tail)) = rest.split_first() else {
            return at == s;
        };
        for t in g.successors(at, a).collect::<Vec<_>>() {
            if tail.is_empty() {
                if t == s {
                    return true;
                }
            } else if t != s && !used[t] {
                used[t] = true;
                let found = walk(g, s, t, tail, used);
                used[t] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    if word.is_empty() {
        return false;
    }
    let Some(letters) = word
        .letters()
        .iter()
        .map(|l| g.label_index(l))
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    let mut used = vec![false; g.num_vertices()];
    walk(g, s, s, &letters, &mut used)
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ParallelEdges { first, second } => write!(f, "parallel edges {first} and {second}"),
            Witness::LabelClash { first, second } => write!(f, "edges {first} and {second} share source and label"),
            Witness::CoLabelClash { first, second } => write!(f, "edges {first} and {second} share target and label"),
            Witness::NoCommonAncestor { first, second } => write!(f, "no vertex reaches both {first} and {second}"),
            Witness::Unreachable { from, to } => write!(f, "{to} is unreachable from {from}"),
            Witness::Disconnected { from, to } => write!(f, "{from} and {to} are in different components"),
            Witness::MissingOutEdge { vertex, label } => write!(f, "{vertex} has no outgoing {label}-edge"),
            Witness::MissingInEdge { vertex, label } => write!(f, "{vertex} has no incoming {label}-edge"),
            Witness::CycleWord { first, second, word } => {
                write!(f, "{word} labels a cycle at {first} but not at {second}")
            }
            Witness::ElementaryCycleWord { first, second, word } => {
                write!(f, "{word} labels an elementary cycle at {first} but not at {second}")
            }
            Witness::NoAutomorphism { from, to } => write!(f, "no automorphism maps {from} to {to}"),
            Witness::NoEdgeAutomorphism { first, second } => {
                write!(f, "no automorphism maps {first} to {second}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_star() -> LabeledDigraph {
        LabeledDigraph::from_triples([
            ("1", "a", "1"),
            ("2", "a", "2"),
            ("3", "a", "3"),
            ("1", "a", "2"),
            ("2", "a", "1"),
            ("2", "a", "3"),
            ("3", "a", "1"),
        ])
        .unwrap()
    }

    #[test]
    fn elementary_cycle_words() {
        let g = a_star();
        let three = g.vertex_index(&"3".into()).unwrap();
        let one = g.vertex_index(&"1".into()).unwrap();
        assert!(labels_elementary_cycle(&g, three, &Word::from_chars("a")));
        assert!(!labels_elementary_cycle(&g, three, &Word::from_chars("aa")));
        assert!(labels_elementary_cycle(&g, three, &Word::from_chars("aaa")));
        assert!(labels_elementary_cycle(&g, one, &Word::from_chars("aa")));
        assert!(!labels_elementary_cycle(&g, one, &Word::from_chars("aaaa")));
        let w = Witness::ElementaryCycleWord {
            first: "1".into(),
            second: "3".into(),
            word: Word::from_chars("aa"),
        };
        assert!(w.certifies(&g));
    }

    #[test]
    fn bogus_witnesses_do_not_certify() {
        let g = a_star();
        let w = Witness::Unreachable { from: "1".into(), to: "3".into() };
        assert!(!w.certifies(&g));
        let w = Witness::LabelClash {
            first: Edge::new("1", "a", "1"),
            second: Edge::new("1", "a", "2"),
        };
        assert!(w.certifies(&g));
        assert!(!Witness::MissingOutEdge { vertex: "1".into(), label: "a".into() }.certifies(&g));
    }
}
