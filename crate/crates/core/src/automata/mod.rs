//! Automata `(G, I, F)` over labelled graphs: recognition, bisimulation and
//! quotients, subset constructions, canonical automata and isomorphism.

mod bisim;
mod canonical;
mod dfa;
mod iso;
mod subset;

use std::collections::BTreeSet;

pub use bisim::{
    greatest_bisimulation, is_bisimulation, is_reduction, is_simulation, minimize, quotient, quotient_map, Partition,
    Relation,
};
pub use canonical::{canonical, equivalent, residual, residual_name, Equivalence};
pub use dfa::{Dfa, DfaError};
pub use iso::{anchored_iso, automorphism, graph_iso, iso, IsoConfig, IsoWitness};
pub use subset::{brzozowski, co_determinize, determinize};

use crate::graph::{LabeledDigraph, Lts};
use crate::ids::{Edge, Label, VertexId, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomataError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("the language is empty")]
    EmptyLanguage,
    #[error("graph is not deterministic")]
    NotDeterministic,
    #[error("isomorphism search over {vertices} vertices exceeds the cap of {cap}")]
    SearchCapExceeded { vertices: usize, cap: usize },
    #[error("blocks do not partition the vertex set")]
    NotAPartition,
}

/// An automaton: a transition structure with initial and final vertices.
///
/// Built from a [`LabeledDigraph`], the initial and final vertices must be
/// vertices of the graph. Automata produced by the constructions in this
/// module may additionally hold initial or final states that no edge touches
/// (the canonical automaton of `{ε}` is one accepting state and no edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    lts: Lts,
    initial: Vec<bool>,
    finals: Vec<bool>,
}

impl Automaton {
    pub fn new(
        graph: &LabeledDigraph,
        initial: impl IntoIterator<Item = VertexId>,
        finals: impl IntoIterator<Item = VertexId>,
    ) -> Result<Automaton, AutomataError> {
        let lts = graph.lts().clone();
        let mark = |set: &mut Vec<bool>, v: VertexId| -> Result<(), AutomataError> {
            let i = lts.vertex_index(&v).ok_or(AutomataError::UnknownVertex(v))?;
            set[i] = true;
            Ok(())
        };
        let mut ini = vec![false; lts.num_vertices()];
        let mut fin = vec![false; lts.num_vertices()];
        for v in initial {
            mark(&mut ini, v)?;
        }
        for v in finals {
            mark(&mut fin, v)?;
        }
        Ok(Automaton {
            lts,
            initial: ini,
            finals: fin,
        })
    }

    /// Builds from edges and named initial/final states, which may be
    /// isolated.
    pub fn from_parts(
        edges: impl IntoIterator<Item = Edge>,
        initial: &BTreeSet<VertexId>,
        finals: &BTreeSet<VertexId>,
    ) -> Automaton {
        let lts = Lts::build(edges, initial.iter().chain(finals).cloned());
        Automaton::from_lts(lts, initial, finals)
    }

    pub(crate) fn from_lts(lts: Lts, initial: &BTreeSet<VertexId>, finals: &BTreeSet<VertexId>) -> Automaton {
        let mask = |set: &BTreeSet<VertexId>| lts.vertices().iter().map(|v| set.contains(v)).collect();
        Automaton {
            initial: mask(initial),
            finals: mask(finals),
            lts,
        }
    }

    pub fn lts(&self) -> &Lts {
        &self.lts
    }

    /// The underlying graph, or `None` when the automaton has no edge.
    /// Isolated initial or final states are dropped.
    pub fn graph(&self) -> Option<LabeledDigraph> {
        LabeledDigraph::from_lts(self.lts.clone()).ok()
    }

    pub fn is_initial(&self, v: usize) -> bool {
        self.initial[v]
    }

    pub fn is_final(&self, v: usize) -> bool {
        self.finals[v]
    }

    pub fn initial_mask(&self) -> &[bool] {
        &self.initial
    }

    pub fn final_mask(&self) -> &[bool] {
        &self.finals
    }

    pub fn initial_indices(&self) -> Vec<usize> {
        (0..self.initial.len()).filter(|&v| self.initial[v]).collect()
    }

    pub fn final_indices(&self) -> Vec<usize> {
        (0..self.finals.len()).filter(|&v| self.finals[v]).collect()
    }

    pub fn initial(&self) -> BTreeSet<VertexId> {
        self.initial_indices().into_iter().map(|v| self.lts.vertex(v).clone()).collect()
    }

    pub fn finals(&self) -> BTreeSet<VertexId> {
        self.final_indices().into_iter().map(|v| self.lts.vertex(v).clone()).collect()
    }

    pub fn num_states(&self) -> usize {
        self.lts.num_vertices()
    }

    pub fn labels(&self) -> &[Label] {
        self.lts.labels()
    }

    /// States reached from the initial states by `word`.
    pub fn run(&self, word: &Word) -> Vec<bool> {
        let mut current = self.initial.clone();
        for l in word.letters() {
            let Some(a) = self.lts.label_index(l) else {
                return vec![false; self.num_states()];
            };
            let mut next = vec![false; self.num_states()];
            for v in (0..current.len()).filter(|&v| current[v]) {
                for t in self.lts.successors(v, a) {
                    next[t] = true;
                }
            }
            current = next;
        }
        current
    }

    pub fn recognizes(&self, word: &Word) -> bool {
        self.run(word)
            .iter()
            .zip(&self.finals)
            .any(|(&r, &f)| r && f)
    }

    /// `(G⁻¹, F, I)`, recognizing the mirror language.
    pub fn inverse(&self) -> Automaton {
        Automaton {
            lts: self.lts.reversed(),
            initial: self.finals.clone(),
            finals: self.initial.clone(),
        }
    }

    /// One initial state and a deterministic graph.
    pub fn is_deterministic(&self) -> bool {
        self.initial_indices().len() == 1 && self.lts.is_deterministic()
    }

    pub fn is_co_deterministic(&self) -> bool {
        self.inverse().is_deterministic()
    }

    /// Every state is reachable from an initial state.
    pub fn is_accessible(&self) -> bool {
        self.lts.reachable(&self.initial_indices(), false).iter().all(|&r| r)
    }

    /// Every state reaches a final state.
    pub fn is_co_accessible(&self) -> bool {
        self.lts.reachable(&self.final_indices(), true).iter().all(|&r| r)
    }

    pub fn is_reduced(&self) -> bool {
        self.is_accessible() && self.is_co_accessible()
    }

    /// The recognized language as a complete DFA, with `extra` letters
    /// added to the alphabet. Plain subset construction; the empty subset
    /// is the sink.
    pub fn to_dfa(&self, extra: &[Label]) -> Dfa {
        subset::language_dfa(self, extra)
    }

    /// The language `L(G, {s}, F)` of a single state.
    pub fn state_language(&self, s: usize) -> Dfa {
        let mut initial = vec![false; self.num_states()];
        initial[s] = true;
        Automaton {
            lts: self.lts.clone(),
            initial,
            finals: self.finals.clone(),
        }
        .to_dfa(&[])
    }

    /// Same automaton with vertices renamed through `name`.
    pub fn rename(&self, name: impl Fn(&VertexId) -> VertexId) -> Automaton {
        let edges = self.lts.named_edges().map(|e| Edge {
            source: name(&e.source),
            label: e.label,
            target: name(&e.target),
        });
        let initial = self.initial().iter().map(&name).collect();
        let finals = self.finals().iter().map(&name).collect();
        Automaton::from_parts(edges.collect::<Vec<_>>(), &initial, &finals)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn even() -> LabeledDigraph {
        LabeledDigraph::from_triples([("p", "a", "q"), ("p", "b", "p"), ("q", "a", "p"), ("q", "b", "q")])
            .unwrap()
    }

    pub(crate) fn even_auto(i: &str, f: &str) -> Automaton {
        Automaton::new(&even(), [i.into()], [f.into()]).unwrap()
    }

    #[test]
    fn even_recognition() {
        let a = even_auto("p", "p");
        assert!(a.recognizes(&Word::from_chars("abba")));
        assert!(a.recognizes(&Word::empty()));
        assert!(!a.recognizes(&Word::from_chars("ab")));
        assert!(!even_auto("p", "q").recognizes(&Word::from_chars("b")));
        assert!(!even_auto("p", "q").recognizes(&Word::empty()));
        assert!(!a.recognizes(&Word::from_chars("c")));
    }

    #[test]
    fn unknown_states_are_rejected() {
        assert_eq!(
            Automaton::new(&even(), ["x".into()], []),
            Err(AutomataError::UnknownVertex("x".into()))
        );
    }

    #[test]
    fn inverse_swaps_roles() {
        let a = even_auto("p", "q");
        let inv = a.inverse();
        assert_eq!(inv.initial(), ["q".into()].into_iter().collect());
        assert!(inv.recognizes(&Word::from_chars("ba")));
        assert_eq!(inv.inverse(), a);
    }

    #[test]
    fn language_dfa_matches_recognition() {
        let a = even_auto("p", "p");
        let d = a.to_dfa(&[]);
        for w in ["", "a", "aa", "ab", "bab", "abab"] {
            let w = Word::from_chars(w);
            assert_eq!(d.accepts(&w), a.recognizes(&w));
        }
    }
}
