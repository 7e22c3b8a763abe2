//! Labelled graphs, finite automata and Cayley graph recognition.
//!
//! The crate decides whether a finite labelled digraph is the Cayley graph
//! of a group and, when it is, reconstructs the group table. Around that it
//! provides the automata toolkit the recognizers rely on: subset
//! constructions, bisimulation quotients, canonical residual automata, cycle
//! languages and isomorphism search, plus bounded tools for group
//! presentations (Thue rewriting, coset enumeration).

pub mod automata;
pub mod cayley;
pub mod cycles;
pub mod dot;
pub mod fixtures;
pub mod graph;
pub mod ids;
pub mod io;
pub mod lang;
pub mod presentations;
pub mod report;
pub mod witness;

pub use automata::{Automaton, Dfa};
pub use graph::{GraphError, LabeledDigraph, Lts};
pub use ids::{Edge, Label, VertexId, Word};
pub use witness::Witness;
