//! Path and cycle languages, circularity, elementary cycles and
//! vertex/edge transitivity.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::automata::{automorphism, AutomataError, Automaton, Dfa, IsoConfig};
use crate::graph::LabeledDigraph;
use crate::ids::{Edge, VertexId, Word};
use crate::witness::Witness;

/// Default limit on the number of elementary cycles enumerated per vertex.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycleError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("more than {cap} elementary cycles through {vertex}")]
    EnumerationCapExceeded { vertex: VertexId, cap: usize },
    #[error("isomorphism search over {vertices} vertices exceeds the cap of {cap}")]
    SearchCapExceeded { vertices: usize, cap: usize },
}

impl From<AutomataError> for CycleError {
    fn from(e: AutomataError) -> Self {
        match e {
            AutomataError::UnknownVertex(v) => CycleError::UnknownVertex(v),
            AutomataError::SearchCapExceeded { vertices, cap } => CycleError::SearchCapExceeded { vertices, cap },
            other => unreachable!("automorphism search cannot fail with {other}"),
        }
    }
}

/// `L_G(s, t)`: labels of paths from `s` to `t`, over the labels of `g`.
pub fn path_language(g: &LabeledDigraph, s: &VertexId, t: &VertexId) -> Result<Dfa, CycleError> {
    let a = Automaton::new(g, [s.clone()], [t.clone()])?;
    Ok(a.to_dfa(&[]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLanguage {
    pub vertex: VertexId,
    pub language: Dfa,
}

/// `L_G(s, s)`; always contains `ε`.
pub fn cycle_language(g: &LabeledDigraph, s: &VertexId) -> Result<CycleLanguage, CycleError> {
    Ok(CycleLanguage {
        vertex: s.clone(),
        language: path_language(g, s, s)?,
    })
}

fn cycle_dfa(g: &LabeledDigraph, v: usize) -> Dfa {
    let s = g.vertex(v);
    path_language(g, s, s).expect("vertex of the graph")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircularityVerdict {
    pub circular: bool,
    /// A [`Witness::CycleWord`] when not circular.
    pub witness: Option<Witness>,
}

/// Whether all vertices have the same cycle language. The smallest vertex
/// is compared with every other one; the first difference gives the
/// shortlex-least word in the symmetric difference.
pub fn is_circular(g: &LabeledDigraph) -> CircularityVerdict {
    let base = cycle_dfa(g, 0);
    for v in 1..g.num_vertices() {
        let other = cycle_dfa(g, v);
        if let Some(word) = base.distinguishing_word(&other) {
            let (first, second) = if base.accepts(&word) {
                (g.vertex(0).clone(), g.vertex(v).clone())
            } else {
                (g.vertex(v).clone(), g.vertex(0).clone())
            };
            return CircularityVerdict {
                circular: false,
                witness: Some(Witness::CycleWord { first, second, word }),
            };
        }
    }
    CircularityVerdict {
        circular: true,
        witness: None,
    }
}

/// The common cycle language of a circular graph.
pub fn common_cycle_language(g: &LabeledDigraph) -> Option<Dfa> {
    is_circular(g).circular.then(|| cycle_dfa(g, 0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementaryCycleSet {
    pub vertex: VertexId,
    pub words: BTreeSet<Word>,
}

/// `E_G(s)`: labels of the cycles from `s` back to `s` that visit no vertex
/// twice. Counting stops with an error after `cap` cycles.
pub fn elementary_cycles(g: &LabeledDigraph, s: &VertexId, cap: usize) -> Result<ElementaryCycleSet, CycleError> {
    let start = g.vertex_index(s).ok_or_else(|| CycleError::UnknownVertex(s.clone()))?;
    let n = g.num_vertices();
    let mut words = BTreeSet::new();
    let mut found = 0usize;
    let mut on_path = vec![false; n];
    on_path[start] = true;
    let mut labels: Vec<usize> = Vec::new();
    // iterative DFS: (vertex, position in its out list)
    let mut frames: Vec<(usize, usize)> = vec![(start, 0)];
    while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
        let Some(&(a, t)) = g.out(v).get(*pos) else {
            frames.pop();
            if frames.is_empty() {
                break;
            }
            on_path[v] = false;
            labels.pop();
            continue;
        };
        *pos += 1;
        if t == start {
            found += 1;
            if found > cap {
                return Err(CycleError::EnumerationCapExceeded { vertex: s.clone(), cap });
            }
            let mut w: Vec<_> = labels.iter().map(|&l| g.label(l).clone()).collect();
            w.push(g.label(a).clone());
            words.insert(Word(w));
        } else if !on_path[t] {
            on_path[t] = true;
            labels.push(a);
            frames.push((t, 0));
        }
    }
    Ok(ElementaryCycleSet {
        vertex: s.clone(),
        words,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementaryCircularity {
    pub circular: bool,
    /// The common set when circular.
    pub words: Option<BTreeSet<Word>>,
    /// A [`Witness::ElementaryCycleWord`] otherwise.
    pub witness: Option<Witness>,
}

/// Whether all vertices have the same elementary cycle words.
pub fn is_elementary_circular(g: &LabeledDigraph, cap: usize) -> Result<ElementaryCircularity, CycleError> {
    let base = elementary_cycles(g, g.vertex(0), cap)?;
    for v in 1..g.num_vertices() {
        let other = elementary_cycles(g, g.vertex(v), cap)?;
        if let Some(word) = base.words.symmetric_difference(&other.words).min_by(|x, y| {
            x.len().cmp(&y.len()).then_with(|| x.cmp(y))
        }) {
            let (first, second) = if base.words.contains(word) {
                (base.vertex.clone(), other.vertex.clone())
            } else {
                (other.vertex.clone(), base.vertex.clone())
            };
            return Ok(ElementaryCircularity {
                circular: false,
                words: None,
                witness: Some(Witness::ElementaryCycleWord {
                    first,
                    second,
                    word: word.clone(),
                }),
            });
        }
    }
    Ok(ElementaryCircularity {
        circular: true,
        words: Some(base.words),
        witness: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransitivityMethod {
    /// Deterministic strongly connected graphs: vertex transitivity is
    /// circularity.
    CycleLanguages,
    Automorphisms,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitivityVerdict {
    pub transitive: bool,
    pub witness: Option<Witness>,
    pub method: TransitivityMethod,
}

/// Whether every vertex can be mapped to every other by an automorphism.
///
/// Deterministic strongly connected graphs are decided by comparing cycle
/// languages; other graphs by searching an automorphism from the smallest
/// vertex to each other vertex.
pub fn is_vertex_transitive(g: &LabeledDigraph, cfg: &IsoConfig) -> Result<TransitivityVerdict, CycleError> {
    if g.is_deterministic() && g.is_strongly_connected() {
        let c = is_circular(g);
        return Ok(TransitivityVerdict {
            transitive: c.circular,
            witness: c.witness,
            method: TransitivityMethod::CycleLanguages,
        });
    }
    vertex_transitive_by_automorphisms(g, cfg)
}

/// The automorphism-search decision, for any graph.
pub fn vertex_transitive_by_automorphisms(
    g: &LabeledDigraph,
    cfg: &IsoConfig,
) -> Result<TransitivityVerdict, CycleError> {
    let base = g.vertex(0);
    for v in g.vertices().iter().skip(1) {
        if automorphism(g, &[(base.clone(), v.clone())], cfg)?.is_none() {
            return Ok(TransitivityVerdict {
                transitive: false,
                witness: Some(Witness::NoAutomorphism {
                    from: base.clone(),
                    to: v.clone(),
                }),
                method: TransitivityMethod::Automorphisms,
            });
        }
    }
    Ok(TransitivityVerdict {
        transitive: true,
        witness: None,
        method: TransitivityMethod::Automorphisms,
    })
}

/// Whether, for each label, every edge with that label can be mapped to
/// every other by an automorphism.
pub fn is_edge_transitive(g: &LabeledDigraph, cfg: &IsoConfig) -> Result<TransitivityVerdict, CycleError> {
    for a in 0..g.num_labels() {
        let edges: Vec<Edge> = g
            .dense_edges()
            .iter()
            .filter(|e| e.1 == a)
            .map(|&e| g.named_edge(e))
            .collect();
        let base = &edges[0];
        for e in &edges[1..] {
            let forced = [
                (base.source.clone(), e.source.clone()),
                (base.target.clone(), e.target.clone()),
            ];
            if automorphism(g, &forced, cfg)?.is_none() {
                return Ok(TransitivityVerdict {
                    transitive: false,
                    witness: Some(Witness::NoEdgeAutomorphism {
                        first: base.clone(),
                        second: e.clone(),
                    }),
                    method: TransitivityMethod::Automorphisms,
                });
            }
        }
    }
    Ok(TransitivityVerdict {
        transitive: true,
        witness: None,
        method: TransitivityMethod::Automorphisms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even() -> LabeledDigraph {
        LabeledDigraph::from_triples([("p", "a", "q"), ("p", "b", "p"), ("q", "a", "p"), ("q", "b", "q")])
            .unwrap()
    }

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

    fn words(ws: &[&str]) -> BTreeSet<Word> {
        ws.iter().map(|w| Word::from_chars(w)).collect()
    }

    #[test]
    fn even_path_languages() {
        let g = even();
        let pp = path_language(&g, &"p".into(), &"p".into()).unwrap();
        let pq = path_language(&g, &"p".into(), &"q".into()).unwrap();
        for w in ["", "aa", "bb", "abba"] {
            assert!(pp.accepts(&Word::from_chars(w)));
            assert!(!pq.accepts(&Word::from_chars(w)));
        }
        assert!(pq.accepts(&Word::from_chars("ba")));
        assert!(path_language(&g, &"x".into(), &"p".into()).is_err());
    }

    #[test]
    fn acyclic_graphs_are_circular() {
        let g = LabeledDigraph::from_triples([("s", "a", "t"), ("t", "b", "u")]).unwrap();
        assert!(is_circular(&g).circular);
        let l = cycle_language(&g, &"s".into()).unwrap().language;
        assert_eq!(l.words_up_to(4), vec![Word::empty()]);
    }

    #[test]
    fn elementary_cycles_of_examples() {
        let g = even();
        assert_eq!(elementary_cycles(&g, &"p".into(), 100).unwrap().words, words(&["aa", "b"]));
        let h = a_star();
        assert_eq!(elementary_cycles(&h, &"3".into(), 100).unwrap().words, words(&["a", "aaa"]));
        assert_eq!(elementary_cycles(&h, &"1".into(), 100).unwrap().words, words(&["a", "aa", "aaa"]));
        let e = is_elementary_circular(&h, 100).unwrap();
        assert_eq!(
            e.witness,
            Some(Witness::ElementaryCycleWord {
                first: "1".into(),
                second: "3".into(),
                word: Word::from_chars("aa")
            })
        );
        assert!(is_elementary_circular(&even(), 100).unwrap().circular);
        let two = LabeledDigraph::from_triples([("s", "a", "t"), ("t", "a", "s")]).unwrap();
        assert_eq!(is_elementary_circular(&two, 100).unwrap().words, Some(words(&["aa"])));
        assert!(matches!(
            elementary_cycles(&h, &"1".into(), 2),
            Err(CycleError::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn circular_but_not_vertex_transitive() {
        let g = a_star();
        assert!(is_circular(&g).circular);
        assert!(g.is_strongly_connected());
        let v = is_vertex_transitive(&g, &IsoConfig::default()).unwrap();
        assert!(!v.transitive);
        assert_eq!(v.method, TransitivityMethod::Automorphisms);
        assert!(v.witness.unwrap().certifies(&g));
    }

    #[test]
    fn transitivity_of_even() {
        let cfg = IsoConfig::default();
        let v = is_vertex_transitive(&even(), &cfg).unwrap();
        assert!(v.transitive);
        assert_eq!(v.method, TransitivityMethod::CycleLanguages);
        assert!(vertex_transitive_by_automorphisms(&even(), &cfg).unwrap().transitive);
        assert!(is_edge_transitive(&even(), &cfg).unwrap().transitive);
    }

    #[test]
    fn loops_and_edges_are_not_swapped() {
        let g = LabeledDigraph::from_triples([("s", "a", "t"), ("u", "a", "u")]).unwrap();
        let v = is_edge_transitive(&g, &IsoConfig::default()).unwrap();
        assert!(!v.transitive);
        assert!(v.witness.unwrap().certifies(&g));
        let single = LabeledDigraph::from_triples([("s", "a", "t")]).unwrap();
        assert!(is_edge_transitive(&single, &IsoConfig::default()).unwrap().transitive);
    }
}
