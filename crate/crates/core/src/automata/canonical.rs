//! Residual automata of regular languages.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{AutomataError, Automaton, Dfa};
use crate::ids::{Edge, VertexId, Word};

/// Name of the residual state reached by `u`.
pub fn residual_name(u: &Word) -> VertexId {
    VertexId::new(format!("[{u}]"))
}

/// `Can(L)`: one state per non-empty residual `u⁻¹L`, named `[u]` after
/// the shortlex-least word reaching it. Initial state `[ε]`, final states
/// the residuals containing `ε`.
pub fn canonical(l: &Dfa) -> Result<Automaton, AutomataError> {
    let m = l.minimize();
    if m.is_empty() {
        return Err(AutomataError::EmptyLanguage);
    }
    let live = m.co_reachable();
    let access = m.access_words();
    let name = |q: usize| residual_name(access[q].as_ref().expect("minimal DFA is accessible"));
    let mut edges = Vec::new();
    for q in (0..m.num_states()).filter(|&q| live[q]) {
        for (a, label) in m.alphabet().iter().enumerate() {
            let t = m.next(q, a);
            if live[t] {
                edges.push(Edge {
                    source: name(q),
                    label: label.clone(),
                    target: name(t),
                });
            }
        }
    }
    let initial: BTreeSet<VertexId> = [name(m.start())].into_iter().collect();
    let finals: BTreeSet<VertexId> = (0..m.num_states())
        .filter(|&q| m.is_accepting(q))
        .map(name)
        .collect();
    Ok(Automaton::from_parts(edges, &initial, &finals))
}

/// `u⁻¹L`.
pub fn residual(l: &Dfa, u: &Word) -> Dfa {
    l.residual(u)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub equivalent: bool,
    /// Shortlex-least word in exactly one of the two languages.
    pub witness: Option<Word>,
}

pub fn equivalent(l1: &Dfa, l2: &Dfa) -> Equivalence {
    let witness = l1.distinguishing_word(l2);
    Equivalence {
        equivalent: witness.is_none(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::tests::{even, even_auto};
    use crate::automata::{graph_iso, IsoConfig};
    use crate::ids::Label;

    #[test]
    fn canonical_of_even() {
        let l = even_auto("p", "p").to_dfa(&[]);
        let c = canonical(&l).unwrap();
        assert_eq!(c.num_states(), 2);
        assert!(c.is_deterministic());
        assert!(c.is_reduced());
        let names: Vec<&str> = c.lts().vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(names, ["[a]", "[ε]"]);
        assert_eq!(c.initial(), c.finals());
        let g = c.graph().unwrap();
        assert!(graph_iso(&g, &even(), &IsoConfig::default()).unwrap().is_some());

        let odd = canonical(&even_auto("p", "q").to_dfa(&[])).unwrap();
        assert_eq!(odd.graph(), c.graph());
        assert_ne!(odd.finals(), c.finals());
    }

    #[test]
    fn canonical_of_epsilon() {
        let l = Dfa::from_words(&[Label::from("a")], [Word::empty()].iter());
        let c = canonical(&l).unwrap();
        assert_eq!(c.num_states(), 1);
        assert_eq!(c.lts().num_edges(), 0);
        assert!(c.recognizes(&Word::empty()));
        assert!(c.graph().is_none());
    }

    #[test]
    fn empty_language_has_no_canonical_automaton() {
        let l = Dfa::empty_language(vec![Label::from("a")]);
        assert_eq!(canonical(&l), Err(AutomataError::EmptyLanguage));
    }

    #[test]
    fn residual_identities() {
        let l = even_auto("p", "p").to_dfa(&[]);
        let odd = even_auto("p", "q").to_dfa(&[]);
        assert!(equivalent(&residual(&l, &Word::from_chars("a")), &odd).equivalent);
        assert!(equivalent(&residual(&l, &Word::from_chars("b")), &l).equivalent);
        assert!(equivalent(&residual(&l, &Word::from_chars("ab")), &odd).equivalent);
        assert!(equivalent(&residual(&odd, &Word::from_chars("b")), &odd).equivalent);
        let e = equivalent(&l, &odd);
        assert!(!e.equivalent);
        assert_eq!(e.witness, Some(Word::empty()));
    }
}
