//! Language-level predicates on regular languages given as DFAs:
//! stability, closure under conjugacy, letter sets and the conditions for
//! a language to present a group.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::automata::{Automaton, Dfa};
use crate::ids::{Edge, Label, VertexId, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LangError {
    #[error("the language is empty")]
    EmptyLanguage,
}

/// A triple with `v ∈ L` and exactly one of `uvw`, `uw` in `L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityWitness {
    pub u: Word,
    pub v: Word,
    pub w: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub witness: Option<StabilityWitness>,
}

fn non_empty_minimal(l: &Dfa) -> Result<Dfa, LangError> {
    let m = l.minimize();
    if m.is_empty() {
        Err(LangError::EmptyLanguage)
    } else {
        Ok(m)
    }
}

/// `L` is stable when inserting or deleting a word of `L` anywhere never
/// changes membership. On the minimal DFA this says every word of `L` fixes
/// every state, which is checked one state at a time as `L ⊆ Fix(q)`.
pub fn is_stable(l: &Dfa) -> Result<StabilityVerdict, LangError> {
    let m = non_empty_minimal(l)?;
    let access = m.access_words();
    for q in 0..m.num_states() {
        let mut only_q = vec![false; m.num_states()];
        only_q[q] = true;
        let fix = m.with_start(q).with_accepting(&only_q);
        if let Some(v) = m.difference_witness(&fix) {
            let moved = m.run_from(q, &v).expect("word over the alphabet");
            let w = m
                .with_start(q)
                .distinguishing_word(&m.with_start(moved))
                .expect("distinct states of a minimal DFA are distinguishable");
            let u = access[q].clone().expect("minimal DFA is accessible");
            return Ok(StabilityVerdict {
                stable: false,
                witness: Some(StabilityWitness { u, v, w }),
            });
        }
    }
    Ok(StabilityVerdict {
        stable: true,
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyVerdict {
    pub closed: bool,
    /// A word `yx` with `xy ∈ L` and `yx ∉ L`.
    pub witness: Option<Word>,
}

/// The cyclic shifts `{ yx | xy ∈ L }` of `L`, as a complete DFA.
///
/// A shift `yx` is read by guessing the state `q = δ(start, x)`: first `y`
/// is read from `q` until an accepting state, then `x` is read from the
/// start and must end in `q`.
pub fn shifts(l: &Dfa) -> Dfa {
    let m = l.minimize();
    let n = m.num_states();
    let k = m.alphabet().len();
    let name = |q: usize, phase: u8, p: usize| VertexId::new(format!("{q}.{phase}.{p}"));
    let mut edges = Vec::new();
    let mut initial = BTreeSet::new();
    let mut finals = BTreeSet::new();
    for q in 0..n {
        initial.insert(name(q, 0, q));
        if m.is_accepting(q) {
            initial.insert(name(q, 1, m.start()));
        }
        finals.insert(name(q, 1, q));
        if q == m.start() {
            for p in (0..n).filter(|&p| m.is_accepting(p)) {
                finals.insert(name(q, 0, p));
            }
        }
        for p in 0..n {
            for a in 0..k {
                let label = m.alphabet()[a].clone();
                edges.push(Edge {
                    source: name(q, 0, p),
                    label: label.clone(),
                    target: name(q, 0, m.next(p, a)),
                });
                edges.push(Edge {
                    source: name(q, 1, p),
                    label: label.clone(),
                    target: name(q, 1, m.next(p, a)),
                });
                if m.is_accepting(p) {
                    edges.push(Edge {
                        source: name(q, 0, p),
                        label,
                        target: name(q, 1, m.next(m.start(), a)),
                    });
                }
            }
        }
    }
    Automaton::from_parts(edges, &initial, &finals).to_dfa(m.alphabet())
}

pub fn is_conjugacy_closed(l: &Dfa) -> ConjugacyVerdict {
    let witness = shifts(l).difference_witness(l);
    ConjugacyVerdict {
        closed: witness.is_none(),
        witness,
    }
}

/// Letters occurring in some word of `L`.
pub fn letter_set(l: &Dfa) -> BTreeSet<Label> {
    let reach = l.reachable();
    let live = l.co_reachable();
    let mut letters = BTreeSet::new();
    for q in (0..l.num_states()).filter(|&q| reach[q] && live[q]) {
        for (a, label) in l.alphabet().iter().enumerate() {
            if live[l.next(q, a)] {
                letters.insert(label.clone());
            }
        }
    }
    letters
}

/// Two distinct letters `a`, `b` and a word `u` with `ua, ub ∈ L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LetterCollision {
    pub a: Label,
    pub b: Label,
    pub u: Word,
}

/// The three conditions for `L` to present a group, evaluated through the
/// class of the empty word. That class is `L` itself exactly when `L` is
/// stable, so conditions (ii) and (iii) are only evaluated then
/// (`applicable`); otherwise they are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationVerdict {
    pub applicable: bool,
    pub letters: BTreeSet<Label>,
    /// `L` uses at least one letter.
    pub cond_i: bool,
    /// Every letter `a` has some `u` with `au ∈ L` and `ua ∈ L`.
    pub cond_ii: Option<bool>,
    /// Per letter, the shortlex-least such `u` (or `None` if there is none).
    pub inverses: BTreeMap<Label, Option<Word>>,
    /// No `u` and distinct letters `a`, `b` with `ua ∈ L` and `ub ∈ L`.
    pub cond_iii: Option<bool>,
    pub collision: Option<LetterCollision>,
}

impl PresentationVerdict {
    pub fn holds(&self) -> bool {
        self.applicable && self.cond_i && self.cond_ii == Some(true) && self.cond_iii == Some(true)
    }
}

/// `{ u | ua ∈ L }` on the states of `m`.
fn right_quotient(m: &Dfa, a: usize) -> Dfa {
    let finals: Vec<bool> = (0..m.num_states()).map(|q| m.is_accepting(m.next(q, a))).collect();
    m.with_accepting(&finals)
}

pub fn presentation_conditions(l: &Dfa) -> Result<PresentationVerdict, LangError> {
    let m = non_empty_minimal(l)?;
    let stable = is_stable(&m)?.stable;
    let letters = letter_set(&m);
    let mut verdict = PresentationVerdict {
        applicable: stable,
        cond_i: !letters.is_empty(),
        letters,
        cond_ii: None,
        inverses: BTreeMap::new(),
        cond_iii: None,
        collision: None,
    };
    if !stable {
        return Ok(verdict);
    }
    let index: Vec<usize> = verdict
        .letters
        .iter()
        .map(|l| m.letter_index(l).expect("letter of the alphabet"))
        .collect();
    for (label, &a) in verdict.letters.iter().zip(&index) {
        let after_a = m.with_start(m.next(m.start(), a));
        let u = after_a.intersection(&right_quotient(&m, a)).shortest_accepted();
        verdict.inverses.insert(label.clone(), u);
    }
    verdict.cond_ii = Some(verdict.inverses.values().all(Option::is_some));
    let letters: Vec<&Label> = verdict.letters.iter().collect();
    'pairs: for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            let both = right_quotient(&m, index[i]).intersection(&right_quotient(&m, index[j]));
            if let Some(u) = both.shortest_accepted() {
                verdict.collision = Some(LetterCollision {
                    a: letters[i].clone(),
                    b: letters[j].clone(),
                    u,
                });
                break 'pairs;
            }
        }
    }
    verdict.cond_iii = Some(verdict.collision.is_none());
    Ok(verdict)
}
