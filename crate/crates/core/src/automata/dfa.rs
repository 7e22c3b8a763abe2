//! Complete deterministic automata, the concrete carrier for regular
//! languages (residuals, path and cycle languages).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::ids::{Label, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DfaError {
    #[error("transition table has {got} entries, expected {expected}")]
    NotTotal { expected: usize, got: usize },
    #[error("state {0} is out of range")]
    BadState(usize),
    #[error("sink state {0} is accepting or not absorbing")]
    BadSink(usize),
    #[error("alphabet must be sorted and free of duplicates")]
    BadAlphabet,
}

/// A complete DFA over a sorted alphabet, with states `0..n`.
///
/// The transition function is total. The optional sink is a non-accepting
/// state that every letter maps back to itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<Label>,
    delta: Vec<usize>,
    start: usize,
    accepting: Vec<bool>,
    sink: Option<usize>,
}

impl Dfa {
    /// `delta[q * |alphabet| + a]` is the successor of `q` under letter `a`.
    pub fn new(
        alphabet: Vec<Label>,
        delta: Vec<usize>,
        start: usize,
        accepting: Vec<bool>,
        sink: Option<usize>,
    ) -> Result<Dfa, DfaError> {
        if alphabet.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DfaError::BadAlphabet);
        }
        let n = accepting.len();
        let k = alphabet.len();
        if delta.len() != n * k {
            return Err(DfaError::NotTotal {
                expected: n * k,
                got: delta.len(),
            });
        }
        if start >= n {
            return Err(DfaError::BadState(start));
        }
        if let Some(&bad) = delta.iter().find(|&&q| q >= n) {
            return Err(DfaError::BadState(bad));
        }
        if let Some(s) = sink {
            if s >= n {
                return Err(DfaError::BadState(s));
            }
            if accepting[s] || (0..k).any(|a| delta[s * k + a] != s) {
                return Err(DfaError::BadSink(s));
            }
        }
        Ok(Dfa {
            alphabet,
            delta,
            start,
            accepting,
            sink,
        })
    }

    /// The empty language over `alphabet`: a lone sink.
    pub fn empty_language(alphabet: Vec<Label>) -> Dfa {
        let k = alphabet.len();
        Dfa {
            alphabet,
            delta: vec![0; k],
            start: 0,
            accepting: vec![false],
            sink: Some(0),
        }
    }

    /// The finite language `words`, compiled to a trie plus sink. Letters of
    /// the words are added to `alphabet`.
    pub fn from_words<'a, I>(alphabet: &[Label], words: I) -> Dfa
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let words: Vec<&Word> = words.into_iter().collect();
        let mut letters: BTreeSet<Label> = alphabet.iter().cloned().collect();
        for w in &words {
            letters.extend(w.letters().iter().cloned());
        }
        let alphabet: Vec<Label> = letters.into_iter().collect();
        let k = alphabet.len();
        // state 0 is the sink, state 1 the root
        let mut delta = vec![0; 2 * k];
        let mut accepting = vec![false, false];
        for w in words {
            let mut q = 1;
            for l in w.letters() {
                let a = alphabet.binary_search(l).expect("letter collected");
                if delta[q * k + a] == 0 {
                    let fresh = accepting.len();
                    accepting.push(false);
                    delta.extend(std::iter::repeat_n(0, k));
                    delta[q * k + a] = fresh;
                }
                q = delta[q * k + a];
            }
            accepting[q] = true;
        }
        Dfa {
            alphabet,
            delta,
            start: 1,
            accepting,
            sink: Some(0),
        }
    }

    pub fn alphabet(&self) -> &[Label] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn sink(&self) -> Option<usize> {
        self.sink
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn next(&self, q: usize, a: usize) -> usize {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn letter_index(&self, l: &Label) -> Option<usize> {
        self.alphabet.binary_search(l).ok()
    }

    /// Runs `word` from `q`; `None` when the word uses a letter outside the
    /// alphabet (such a word is in no residual).
    pub fn run_from(&self, q: usize, word: &Word) -> Option<usize> {
        let mut q = q;
        for l in word.letters() {
            q = self.next(q, self.letter_index(l)?);
        }
        Some(q)
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.run_from(self.start, word)
            .is_some_and(|q| self.accepting[q])
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let q = word.iter().fold(self.start, |q, &a| self.next(q, a));
        self.accepting[q]
    }

    /// The same automaton started at `q`: the residual language of `q`.
    pub fn with_start(&self, q: usize) -> Dfa {
        Dfa {
            start: q,
            ..self.clone()
        }
    }

    /// Same states, accepting exactly at `finals`.
    pub fn with_accepting(&self, finals: &[bool]) -> Dfa {
        let sink = self.sink.filter(|&s| !finals[s]);
        Dfa {
            accepting: finals.to_vec(),
            sink,
            ..self.clone()
        }
    }

    /// Left residual `u⁻¹L`.
    pub fn residual(&self, u: &Word) -> Dfa {
        match self.run_from(self.start, u) {
            Some(q) => self.with_start(q),
            None => Dfa::empty_language(self.alphabet.clone()),
        }
    }

    /// Extends the alphabet; new letters lead to the sink (added if absent).
    pub fn with_alphabet(&self, extra: &[Label]) -> Dfa {
        let merged: BTreeSet<Label> = self.alphabet.iter().chain(extra).cloned().collect();
        if merged.len() == self.alphabet.len() {
            return self.clone();
        }
        let alphabet: Vec<Label> = merged.into_iter().collect();
        let (mut accepting, sink) = (self.accepting.clone(), self.sink);
        let sink = match sink {
            Some(s) => s,
            None => {
                accepting.push(false);
                accepting.len() - 1
            }
        };
        let n = accepting.len();
        let k = alphabet.len();
        let mut delta = vec![sink; n * k];
        for q in 0..self.num_states() {
            for (a, l) in alphabet.iter().enumerate() {
                if let Some(old) = self.letter_index(l) {
                    delta[q * k + a] = self.next(q, old);
                }
            }
        }
        Dfa {
            alphabet,
            delta,
            start: self.start,
            accepting,
            sink: Some(sink),
        }
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|&f| !f).collect(),
            sink: None,
            ..self.clone()
        }
    }

    /// States reachable from the start.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            for a in 0..self.alphabet.len() {
                let t = self.next(q, a);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// States from which an accepting state is reachable.
    pub fn co_reachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let k = self.alphabet.len();
        let mut pred = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..k {
                pred[self.next(q, a)].push(q);
            }
        }
        let mut seen = self.accepting.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &pred[q] {
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    /// Shortlex-least accepted word.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let k = self.alphabet.len();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.num_states()];
        let mut seen = vec![false; self.num_states()];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                return Some(self.trace_back(&parent, q));
            }
            for a in 0..k {
                let t = self.next(q, a);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, a));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    fn trace_back(&self, parent: &[Option<(usize, usize)>], mut q: usize) -> Word {
        let mut letters = Vec::new();
        while let Some((p, a)) = parent[q] {
            letters.push(self.alphabet[a].clone());
            q = p;
        }
        letters.reverse();
        Word(letters)
    }

    /// Shortlex-least access word of every reachable state.
    pub fn access_words(&self) -> Vec<Option<Word>> {
        let k = self.alphabet.len();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.num_states()];
        let mut seen = vec![false; self.num_states()];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            for a in 0..k {
                let t = self.next(q, a);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, a));
                    queue.push_back(t);
                }
            }
        }
        (0..self.num_states())
            .map(|q| seen[q].then(|| self.trace_back(&parent, q)))
            .collect()
    }

    /// Shortlex-least word accepted by `self` and rejected by `other`,
    /// searched on the product automaton.
    pub fn difference_witness(&self, other: &Dfa) -> Option<Word> {
        product_search(self, other, |x, y| x && !y)
    }

    /// Shortlex-least word in the symmetric difference of the two languages.
    pub fn distinguishing_word(&self, other: &Dfa) -> Option<Word> {
        product_search(self, other, |x, y| x != y)
    }

    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.distinguishing_word(other).is_none()
    }

    pub fn is_subset_of(&self, other: &Dfa) -> bool {
        self.difference_witness(other).is_none()
    }

    pub fn intersection(&self, other: &Dfa) -> Dfa {
        product(self, other, |x, y| x && y)
    }

    /// Minimal complete DFA of the same language (Hopcroft refinement on the
    /// reachable part), states numbered in breadth-first order from the start.
    /// The dead state, if any, is designated as the sink.
    pub fn minimize(&self) -> Dfa {
        let reach = self.reachable();
        let live: Vec<usize> = (0..self.num_states()).filter(|&q| reach[q]).collect();
        let mut local = vec![usize::MAX; self.num_states()];
        for (i, &q) in live.iter().enumerate() {
            local[q] = i;
        }
        let k = self.alphabet.len();
        let n = live.len();
        let delta: Vec<usize> = live
            .iter()
            .flat_map(|&q| (0..k).map(move |a| (q, a)))
            .map(|(q, a)| local[self.next(q, a)])
            .collect();
        let accepting: Vec<bool> = live.iter().map(|&q| self.accepting[q]).collect();
        let block = hopcroft(n, k, &delta, &accepting);
        let nblocks = block.iter().max().map_or(0, |&m| m + 1);

        // renumber blocks breadth-first from the start block
        let start = block[local[self.start]];
        let mut rep = vec![usize::MAX; nblocks];
        for q in 0..n {
            if rep[block[q]] == usize::MAX {
                rep[block[q]] = q;
            }
        }
        let mut order = vec![usize::MAX; nblocks];
        let mut next_id = 0;
        order[start] = 0;
        next_id += 1;
        let mut queue = VecDeque::from([start]);
        let mut seq = vec![start];
        while let Some(b) = queue.pop_front() {
            for a in 0..k {
                let t = block[delta[rep[b] * k + a]];
                if order[t] == usize::MAX {
                    order[t] = next_id;
                    next_id += 1;
                    queue.push_back(t);
                    seq.push(t);
                }
            }
        }
        let mut new_delta = vec![0; nblocks * k];
        let mut new_acc = vec![false; nblocks];
        for &b in &seq {
            let id = order[b];
            new_acc[id] = accepting[rep[b]];
            for a in 0..k {
                new_delta[id * k + a] = order[block[delta[rep[b] * k + a]]];
            }
        }
        let sink = (0..nblocks).find(|&q| !new_acc[q] && (0..k).all(|a| new_delta[q * k + a] == q));
        Dfa {
            alphabet: self.alphabet.clone(),
            delta: new_delta,
            start: 0,
            accepting: new_acc,
            sink,
        }
    }

    /// All accepted words of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut result = Vec::new();
        let mut layer: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), self.start)];
        for len in 0..=max_len {
            for (w, q) in &layer {
                if self.accepting[*q] {
                    result.push(Word(w.iter().map(|&a| self.alphabet[a].clone()).collect()));
                }
            }
            if len == max_len {
                break;
            }
            let co = self.co_reachable();
            layer = layer
                .iter()
                .flat_map(|(w, q)| {
                    (0..self.alphabet.len()).map(move |a| {
                        let mut w2 = w.clone();
                        w2.push(a);
                        (w2, self.next(*q, a))
                    })
                })
                .filter(|(_, q)| co[*q])
                .collect();
        }
        result
    }

    /// A renaming-independent fingerprint: transition table in breadth-first
    /// order from the start. Two minimal DFAs of the same language over the
    /// same alphabet have equal fingerprints.
    pub fn transition_rows(&self) -> Vec<(bool, Vec<usize>)> {
        (0..self.num_states())
            .map(|q| {
                (
                    self.accepting[q],
                    (0..self.alphabet.len()).map(|a| self.next(q, a)).collect(),
                )
            })
            .collect()
    }
}

fn align(a: &Dfa, b: &Dfa) -> (Dfa, Dfa) {
    if a.alphabet == b.alphabet {
        (a.clone(), b.clone())
    } else {
        (a.with_alphabet(&b.alphabet), b.with_alphabet(&a.alphabet))
    }
}

fn product_search(a: &Dfa, b: &Dfa, goal: impl Fn(bool, bool) -> bool) -> Option<Word> {
    let (a, b) = align(a, b);
    let k = a.alphabet.len();
    let nb = b.num_states();
    let key = |p: usize, q: usize| p * nb + q;
    let mut parent: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut seen = vec![false; a.num_states() * nb];
    let start = key(a.start, b.start);
    seen[start] = true;
    let mut queue = VecDeque::from([(a.start, b.start)]);
    while let Some((p, q)) = queue.pop_front() {
        if goal(a.accepting[p], b.accepting[q]) {
            let mut letters = Vec::new();
            let mut cur = key(p, q);
            while let Some(&(prev, l)) = parent.get(&cur) {
                letters.push(a.alphabet[l].clone());
                cur = prev;
            }
            letters.reverse();
            return Some(Word(letters));
        }
        for l in 0..k {
            let (p2, q2) = (a.next(p, l), b.next(q, l));
            let id = key(p2, q2);
            if !seen[id] {
                seen[id] = true;
                parent.insert(id, (key(p, q), l));
                queue.push_back((p2, q2));
            }
        }
    }
    None
}

fn product(a: &Dfa, b: &Dfa, accept: impl Fn(bool, bool) -> bool) -> Dfa {
    let (a, b) = align(a, b);
    let k = a.alphabet.len();
    let nb = b.num_states();
    let n = a.num_states() * nb;
    let mut delta = vec![0; n * k];
    let mut accepting = vec![false; n];
    for p in 0..a.num_states() {
        for q in 0..nb {
            let id = p * nb + q;
            accepting[id] = accept(a.accepting[p], b.accepting[q]);
            for l in 0..k {
                delta[id * k + l] = a.next(p, l) * nb + b.next(q, l);
            }
        }
    }
    let start = a.start * nb + b.start;
    let sink = (0..n).find(|&q| !accepting[q] && (0..k).all(|l| delta[q * k + l] == q));
    Dfa {
        alphabet: a.alphabet.clone(),
        delta,
        start,
        accepting,
        sink,
    }
    .minimize()
}

/// Hopcroft's partition refinement. Returns the block of each state.
fn hopcroft(n: usize, k: usize, delta: &[usize], accepting: &[bool]) -> Vec<usize> {
    let mut inverse: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; k];
    for q in 0..n {
        for a in 0..k {
            inverse[a][delta[q * k + a]].push(q);
        }
    }
    let mut block = vec![0usize; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let finals: Vec<usize> = (0..n).filter(|&q| accepting[q]).collect();
    let others: Vec<usize> = (0..n).filter(|&q| !accepting[q]).collect();
    for part in [finals, others] {
        if !part.is_empty() {
            let id = members.len();
            for &q in &part {
                block[q] = id;
            }
            members.push(part);
        }
    }
    let mut in_work = vec![true; members.len()];
    let mut work: Vec<usize> = (0..members.len()).collect();
    let mut marked = vec![false; n];
    while let Some(splitter) = work.pop() {
        in_work[splitter] = false;
        let splitter_members = members[splitter].clone();
        for inv in inverse.iter() {
            let mut touched: Vec<usize> = Vec::new();
            let mut hits: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &t in &splitter_members {
                for &q in &inv[t] {
                    if !marked[q] {
                        marked[q] = true;
                        touched.push(q);
                        hits.entry(block[q]).or_default().push(q);
                    }
                }
            }
            for &q in &touched {
                marked[q] = false;
            }
            for (b, hit) in hits {
                if hit.len() == members[b].len() {
                    continue;
                }
                let hit_set: BTreeSet<usize> = hit.iter().copied().collect();
                let rest: Vec<usize> = members[b]
                    .iter()
                    .copied()
                    .filter(|q| !hit_set.contains(q))
                    .collect();
                let new_id = members.len();
                for &q in &hit {
                    block[q] = new_id;
                }
                members[b] = rest;
                members.push(hit);
                in_work.push(false);
                if in_work[b] {
                    in_work[new_id] = true;
                    work.push(new_id);
                } else {
                    let smaller = if members[new_id].len() <= members[b].len() {
                        new_id
                    } else {
                        b
                    };
                    in_work[smaller] = true;
                    work.push(smaller);
                }
            }
        }
    }
    block
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Vec<Label> {
        vec![Label::from("a"), Label::from("b")]
    }

    /// Even number of `a`s (state 0) / odd (state 1).
    pub(crate) fn even_a() -> Dfa {
        Dfa::new(ab(), vec![1, 0, 0, 1], 0, vec![true, false], None).unwrap()
    }

    #[test]
    fn rejects_partial_tables() {
        assert_eq!(
            Dfa::new(ab(), vec![0, 0, 1], 0, vec![true, false], None),
            Err(DfaError::NotTotal { expected: 4, got: 3 })
        );
        assert_eq!(
            Dfa::new(ab(), vec![1, 0, 0, 0], 0, vec![true, false], Some(1)),
            Err(DfaError::BadSink(1))
        );
    }

    #[test]
    fn residuals_of_even() {
        let l = even_a();
        let odd = l.with_start(1);
        let a = Word::from_chars("a");
        assert!(l.residual(&a).equivalent(&odd));
        assert!(l.residual(&Word::from_chars("ab")).equivalent(&odd));
        assert!(l.residual(&Word::empty()).equivalent(&l));
        assert_eq!(l.distinguishing_word(&odd), Some(Word::empty()));
    }

    #[test]
    fn minimization_merges_equivalent_states() {
        // four states tracking a-count mod 4 but accepting on parity
        let delta = vec![1, 0, 2, 1, 3, 2, 0, 3];
        let d = Dfa::new(ab(), delta, 0, vec![true, false, true, false], None).unwrap();
        let m = d.minimize();
        assert_eq!(m.num_states(), 2);
        assert!(m.equivalent(&d));
        assert_eq!(m, even_a().minimize());
    }

    #[test]
    fn finite_language_trie() {
        let words = [Word::from_chars("ab"), Word::empty()];
        let d = Dfa::from_words(&[], words.iter());
        assert!(d.accepts(&Word::empty()));
        assert!(d.accepts(&Word::from_chars("ab")));
        assert!(!d.accepts(&Word::from_chars("a")));
        assert_eq!(d.words_up_to(3), vec![Word::empty(), Word::from_chars("ab")]);
        assert_eq!(d.minimize().num_states(), 4);
    }

    #[test]
    fn alphabet_extension_keeps_language() {
        let d = even_a();
        let ext = d.with_alphabet(&[Label::from("c")]);
        assert_eq!(ext.alphabet().len(), 3);
        assert!(!ext.accepts(&Word::from_chars("c")));
        assert!(ext.equivalent(&d));
    }
}
