//! Group presentations given by positive relators: bounded Thue rewriting,
//! coset enumeration of the quotient monoid, and the Cayley graph of the
//! quotient.
//!
//! A relator `u` stands for the rule `xuy ⇔ xy`. Letters have no formal
//! inverses; when the quotient is a finite group, inverses come from the
//! relators themselves.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::cayley::GroupTable;
use crate::graph::LabeledDigraph;
use crate::ids::{Edge, Label, VertexId, Word, WordError};

pub const DEFAULT_MAX_COSETS: usize = 10_000;
pub const DEFAULT_MAX_LEN: usize = 12;
pub const DEFAULT_MAX_STEPS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Condition::I => "(i)",
            Condition::II => "(ii)",
            Condition::III => "(iii)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("presentation alphabet is empty")]
    EmptyAlphabet,
    #[error("relators must be non-empty words")]
    EmptyRelator,
    #[error("relator letter {0} is not in the alphabet")]
    UnknownLetter(Label),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("condition {condition} fails for letters {letters:?}")]
    ConditionViolation { condition: Condition, letters: Vec<Label> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    alphabet: BTreeSet<Label>,
    relators: BTreeSet<Word>,
}

impl Presentation {
    pub fn new<I>(alphabet: BTreeSet<Label>, relators: I) -> Result<Presentation, PresentationError>
    where
        I: IntoIterator<Item = Word>,
    {
        if alphabet.is_empty() {
            return Err(PresentationError::EmptyAlphabet);
        }
        let relators: BTreeSet<Word> = relators.into_iter().collect();
        for r in &relators {
            if r.is_empty() {
                return Err(PresentationError::EmptyRelator);
            }
            if let Some(l) = r.letters().iter().find(|l| !alphabet.contains(*l)) {
                return Err(PresentationError::UnknownLetter(l.clone()));
            }
        }
        Ok(Presentation { alphabet, relators })
    }

    /// Relators as strings, over the letters they use.
    pub fn from_relators(relators: &[&str]) -> Result<Presentation, PresentationError> {
        let words: Vec<Word> = relators
            .iter()
            .map(|r| Word::parse(r, &[]))
            .collect::<Result<_, _>>()?;
        let alphabet = words.iter().flat_map(|w| w.letters().iter().cloned()).collect();
        Presentation::new(alphabet, words)
    }

    pub fn alphabet(&self) -> &BTreeSet<Label> {
        &self.alphabet
    }

    pub fn relators(&self) -> &BTreeSet<Word> {
        &self.relators
    }

    fn letters(&self) -> Vec<Label> {
        self.alphabet.iter().cloned().collect()
    }

    fn coded_relators(&self) -> Vec<Vec<usize>> {
        let letters = self.letters();
        self.relators
            .iter()
            .map(|r| {
                r.letters()
                    .iter()
                    .map(|l| letters.binary_search(l).expect("relators are over the alphabet"))
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Operation {
    Delete,
    Insert,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    /// The word after the step.
    pub word: Word,
    pub operation: Operation,
    pub position: usize,
    pub relator: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteTrace {
    pub from: Word,
    pub steps: Vec<RewriteStep>,
}

impl RewriteTrace {
    pub fn end(&self) -> &Word {
        self.steps.last().map_or(&self.from, |s| &s.word)
    }

    /// Replays the trace, checking every step against the relators of `p`.
    pub fn is_valid(&self, p: &Presentation) -> bool {
        let mut current = self.from.letters().to_vec();
        for step in &self.steps {
            if !p.relators.contains(&step.relator) || step.position > current.len() {
                return false;
            }
            let r = step.relator.letters();
            match step.operation {
                Operation::Insert => {
                    current.splice(step.position..step.position, r.iter().cloned());
                }
                Operation::Delete => {
                    if !current[step.position..].starts_with(r) {
                        return false;
                    }
                    current.drain(step.position..step.position + r.len());
                }
            }
            if current != step.word.letters() {
                return false;
            }
        }
        true
    }
}

/// Words reachable in one step, as `(word, operation, position, relator)`.
/// Relators indexed for one-step rewriting.
struct Rules<'a> {
    rels: &'a [Vec<usize>],
    by_word: HashMap<&'a [usize], usize>,
    lengths: BTreeSet<usize>,
    by_len: Vec<usize>,
}

impl<'a> Rules<'a> {
    fn new(rels: &'a [Vec<usize>]) -> Self {
        let mut by_len: Vec<usize> = (0..rels.len()).collect();
        by_len.sort_by_key(|&i| rels[i].len());
        Rules {
            rels,
            by_word: rels.iter().enumerate().map(|(i, r)| (r.as_slice(), i)).collect(),
            lengths: rels.iter().map(Vec::len).collect(),
            by_len,
        }
    }

    /// Every word one deletion or insertion away from `w`, staying within
    /// `max_len`.
    fn neighbours(&self, w: &[usize], max_len: usize) -> Vec<(Vec<usize>, Operation, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            for &n in self.lengths.range(..=w.len() - i) {
                if let Some(&ri) = self.by_word.get(&w[i..i + n]) {
                    let mut v = w[..i].to_vec();
                    v.extend_from_slice(&w[i + n..]);
                    out.push((v, Operation::Delete, i, ri));
                }
            }
        }
        for &ri in &self.by_len {
            let r = &self.rels[ri];
            if w.len() + r.len() > max_len {
                break;
            }
            for i in 0..=w.len() {
                let mut v = w[..i].to_vec();
                v.extend_from_slice(r);
                v.extend_from_slice(&w[i..]);
                out.push((v, Operation::Insert, i, ri));
            }
        }
        out
    }
}

/// Breadth-first search for a rewriting of `from` into `to` through words
/// of length at most `max_len`, expanding at most `max_steps` words. `None`
/// only means no trace was found within the bounds.
pub fn thue_reachable(p: &Presentation, from: &Word, to: &Word, max_len: usize, max_steps: usize) -> Option<RewriteTrace> {
    let mut letters = p.letters();
    for l in from.letters().iter().chain(to.letters()) {
        if !letters.contains(l) {
            letters.push(l.clone());
        }
    }
    let code = |w: &Word| -> Vec<usize> {
        w.letters().iter().map(|l| letters.iter().position(|x| x == l).expect("added above")).collect()
    };
    let decode = |w: &[usize]| -> Word { w.iter().map(|&i| letters[i].clone()).collect() };
    let rels = p.coded_relators();
    let rules = Rules::new(&rels);
    let relator_words: Vec<Word> = p.relators.iter().cloned().collect();
    let (start, goal) = (code(from), code(to));

    let mut parent: HashMap<Vec<usize>, Option<(Vec<usize>, Operation, usize, usize)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    let mut steps = 0;
    let mut found = parent.contains_key(&goal);
    while !found {
        let Some(w) = queue.pop_front() else { break };
        steps += 1;
        if steps > max_steps {
            break;
        }
        for (v, op, pos, ri) in rules.neighbours(&w, max_len) {
            if parent.contains_key(&v) {
                continue;
            }
            parent.insert(v.clone(), Some((w.clone(), op, pos, ri)));
            if v == goal {
                found = true;
                break;
            }
            queue.push_back(v);
        }
    }
    if !found {
        return None;
    }
    let mut trace = Vec::new();
    let mut cur = goal;
    while let Some(Some((prev, op, pos, ri))) = parent.get(&cur) {
        trace.push(RewriteStep {
            word: decode(&cur),
            operation: *op,
            position: *pos,
            relator: relator_words[*ri].clone(),
        });
        cur = prev.clone();
    }
    trace.reverse();
    Some(RewriteTrace {
        from: from.clone(),
        steps: trace,
    })
}

/// Words of length at most `max_len` that rewrite to `ε` without ever
/// exceeding that length. Grows with `max_len` towards the class of `ε`.
pub fn bounded_class(p: &Presentation, max_len: usize) -> BTreeSet<Word> {
    let letters = p.letters();
    let rels = p.coded_relators();
    let rules = Rules::new(&rels);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([Vec::new()]);
    let mut queue = VecDeque::from([Vec::new()]);
    while let Some(w) = queue.pop_front() {
        for (v, ..) in rules.neighbours(&w, max_len) {
            if !seen.contains(&v) {
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    seen.into_iter()
        .map(|w| w.into_iter().map(|i| letters[i].clone()).collect())
        .collect()
}

/// Outcome of a capped enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Quotient<T> {
    Closed(T),
    Overflow { cosets: usize },
}

impl<T> Quotient<T> {
    pub fn closed(self) -> Option<T> {
        match self {
            Quotient::Closed(t) => Some(t),
            Quotient::Overflow { .. } => None,
        }
    }

    pub fn is_overflow(&self) -> bool {
        matches!(self, Quotient::Overflow { .. })
    }
}

/// A closed coset table. Coset `0` is the class of `ε` and cosets are
/// numbered in shortlex order of their least representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    alphabet: Vec<Label>,
    words: Vec<Word>,
    action: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.words.len()
    }

    pub fn alphabet(&self) -> &[Label] {
        &self.alphabet
    }

    /// Least representative of a coset.
    pub fn word(&self, c: usize) -> &Word {
        &self.words[c]
    }

    pub fn act(&self, c: usize, letter: usize) -> usize {
        self.action[c][letter]
    }

    /// The coset reached from `c` by `w`; `None` for a letter outside the
    /// alphabet.
    pub fn run(&self, c: usize, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(c, |c, l| {
            let a = self.alphabet.binary_search(l).ok()?;
            Some(self.action[c][a])
        })
    }

    /// `w` equals `ε` in the quotient.
    pub fn is_identity(&self, w: &Word) -> bool {
        self.run(0, w) == Some(0)
    }

    pub fn coset_name(&self, c: usize) -> VertexId {
        VertexId::new(format!("[{}]", self.words[c]))
    }

    /// Letters whose action on cosets is not injective.
    pub fn non_permutation_letters(&self) -> Vec<Label> {
        (0..self.alphabet.len())
            .filter(|&a| {
                let images: BTreeSet<usize> = self.action.iter().map(|row| row[a]).collect();
                images.len() != self.action.len()
            })
            .map(|a| self.alphabet[a].clone())
            .collect()
    }

    /// The quotient as a group on the coset names, with
    /// `[u]·[v] = [uv]`.
    pub fn to_group(&self) -> GroupTable {
        let n = self.num_cosets();
        let product = (0..n)
            .map(|x| (0..n).map(|y| self.run(x, &self.words[y]).expect("own alphabet")).collect())
            .collect();
        GroupTable::from_indices((0..n).map(|c| self.coset_name(c)).collect(), product, 0)
            .expect("coset names are distinct")
    }
}

/// Coset enumeration on the quotient monoid, defining along every relator
/// at every coset in creation order.
struct Enumerator {
    letters: usize,
    rels: Vec<Vec<usize>>,
    next: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    active: usize,
    limit: usize,
}

impl Enumerator {
    fn new(p: &Presentation, max_cosets: usize) -> Enumerator {
        let letters = p.alphabet.len();
        Enumerator {
            letters,
            rels: p.coded_relators(),
            next: vec![vec![None; letters]],
            parent: vec![0],
            active: 1,
            limit: max_cosets,
        }
    }

    fn find(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = c;
        while self.parent[cur] != root {
            let up = self.parent[cur];
            self.parent[cur] = root;
            cur = up;
        }
        root
    }

    fn overflowing(&self) -> bool {
        self.active > self.limit || self.next.len() > self.limit.saturating_mul(20)
    }

    fn define(&mut self, c: usize, a: usize) -> usize {
        let n = self.next.len();
        self.next.push(vec![None; self.letters]);
        self.parent.push(n);
        self.next[c][a] = Some(n);
        self.active += 1;
        n
    }

    fn target(&mut self, c: usize, a: usize) -> Option<usize> {
        let t = self.next[c][a]?;
        Some(self.find(t))
    }

    fn merge(&mut self, x: usize, y: usize) {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            let (x, y) = (self.find(x), self.find(y));
            if x == y {
                continue;
            }
            let (keep, drop) = (x.min(y), x.max(y));
            self.parent[drop] = keep;
            self.active -= 1;
            for a in 0..self.letters {
                if let Some(t) = self.next[drop][a] {
                    match self.next[keep][a] {
                        Some(s) => queue.push((s, t)),
                        None => self.next[keep][a] = Some(t),
                    }
                }
            }
        }
    }

    /// Runs until closed (`true`) or over the cap (`false`).
    fn run(&mut self) -> bool {
        let mut c = 0;
        while c < self.next.len() {
            for ri in 0..self.rels.len() {
                if self.find(c) != c {
                    break;
                }
                let mut x = c;
                for i in 0..self.rels[ri].len() {
                    let a = self.rels[ri][i];
                    x = match self.target(x, a) {
                        Some(t) => t,
                        None => self.define(x, a),
                    };
                    if self.overflowing() {
                        return false;
                    }
                }
                self.merge(x, c);
            }
            if self.find(c) == c {
                for a in 0..self.letters {
                    if self.next[c][a].is_none() {
                        self.define(c, a);
                        if self.overflowing() {
                            return false;
                        }
                    }
                }
            }
            c += 1;
        }
        true
    }

    /// Live cosets within `radius` letters of the start, in shortlex order
    /// of their least representatives, with the edges between them.
    fn ball(&mut self, radius: usize) -> (Vec<Vec<usize>>, Vec<Vec<Option<usize>>>) {
        let start = self.find(0);
        let mut index: HashMap<usize, usize> = HashMap::from([(start, 0)]);
        let mut order = vec![start];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            if words[i].len() < radius {
                for a in 0..self.letters {
                    if let Some(t) = self.target(c, a) {
                        if let std::collections::hash_map::Entry::Vacant(e) = index.entry(t) {
                            e.insert(order.len());
                            order.push(t);
                            let mut w = words[i].clone();
                            w.push(a);
                            words.push(w);
                        }
                    }
                }
            }
            i += 1;
        }
        let action = order
            .iter()
            .map(|&c| {
                (0..self.letters)
                    .map(|a| self.target(c, a).and_then(|t| index.get(&t).copied()))
                    .collect()
            })
            .collect();
        (words, action)
    }
}

fn decode(letters: &[Label], w: &[usize]) -> Word {
    w.iter().map(|&a| letters[a].clone()).collect()
}

/// Coset enumeration of `A*/⇔*` for the relators of `p`, giving up once
/// more than `max_cosets` cosets are live at the same time.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Quotient<CosetTable> {
    let mut e = Enumerator::new(p, max_cosets);
    if !e.run() {
        return Quotient::Overflow { cosets: e.active };
    }
    let (words, action) = e.ball(usize::MAX);
    let letters = p.letters();
    Quotient::Closed(CosetTable {
        words: words.iter().map(|w| decode(&letters, w)).collect(),
        action: action
            .into_iter()
            .map(|row| row.into_iter().map(|t| t.expect("closed table is total")).collect())
            .collect(),
        alphabet: letters,
    })
}

/// The Cayley graph of the quotient group generated by the letter classes,
/// each coded by its letter. Vertices are named `[u]` after the least
/// representative `u` of their class.
pub fn cayley_of_presentation(p: &Presentation, max_cosets: usize) -> Result<Quotient<LabeledDigraph>, PresentationError> {
    if p.relators.is_empty() {
        return Err(PresentationError::ConditionViolation {
            condition: Condition::I,
            letters: Vec::new(),
        });
    }
    let table = match todd_coxeter(p, max_cosets) {
        Quotient::Closed(t) => t,
        Quotient::Overflow { cosets } => return Ok(Quotient::Overflow { cosets }),
    };
    let bad = table.non_permutation_letters();
    if !bad.is_empty() {
        return Err(PresentationError::ConditionViolation {
            condition: Condition::II,
            letters: bad,
        });
    }
    let k = table.alphabet.len();
    for a in 0..k {
        for b in a + 1..k {
            if table.act(0, a) == table.act(0, b) {
                return Err(PresentationError::ConditionViolation {
                    condition: Condition::III,
                    letters: vec![table.alphabet[a].clone(), table.alphabet[b].clone()],
                });
            }
        }
    }
    let edges = (0..table.num_cosets()).flat_map(|c| {
        let table = &table;
        (0..k).map(move |a| Edge {
            source: table.coset_name(c),
            label: table.alphabet[a].clone(),
            target: table.coset_name(table.act(c, a)),
        })
    });
    Ok(Quotient::Closed(
        LabeledDigraph::from_edges(edges).expect("alphabet is non-empty"),
    ))
}

/// A finite patch of a possibly infinite Cayley graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ball {
    pub vertices: Vec<VertexId>,
    pub edges: BTreeSet<Edge>,
    /// Some vertex misses an out-edge, or the enumeration did not close.
    pub partial: bool,
}

impl Ball {
    /// `None` when the ball has no edges.
    pub fn graph(&self) -> Option<LabeledDigraph> {
        LabeledDigraph::from_edges(self.edges.iter().cloned()).ok()
    }
}

/// Cosets within `radius` letters of `[ε]`, read from the enumeration
/// (closed or stopped at `max_cosets`). Far from the root an unfinished
/// enumeration may still hold cosets that would later merge.
pub fn cayley_ball(p: &Presentation, radius: usize, max_cosets: usize) -> Ball {
    let mut e = Enumerator::new(p, max_cosets);
    let closed = e.run();
    let (words, action) = e.ball(radius);
    let letters = p.letters();
    let names: Vec<VertexId> = words
        .iter()
        .map(|w| VertexId::new(format!("[{}]", decode(&letters, w))))
        .collect();
    let mut edges = BTreeSet::new();
    let mut missing = false;
    for (c, row) in action.iter().enumerate() {
        for (a, t) in row.iter().enumerate() {
            match t {
                Some(t) => {
                    edges.insert(Edge {
                        source: names[c].clone(),
                        label: letters[a].clone(),
                        target: names[*t].clone(),
                    });
                }
                None => missing = true,
            }
        }
    }
    Ball {
        vertices: names,
        edges,
        partial: missing || !closed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    fn z6() -> Presentation {
        Presentation::from_relators(&["aaaaaa", "bbb", "aba"]).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert_eq!(
            Presentation::new(BTreeSet::new(), []),
            Err(PresentationError::EmptyAlphabet)
        );
        let ab: BTreeSet<Label> = ["a".into(), "b".into()].into_iter().collect();
        assert_eq!(Presentation::new(ab.clone(), [Word::empty()]), Err(PresentationError::EmptyRelator));
        assert_eq!(
            Presentation::new(ab, [w("ac")]),
            Err(PresentationError::UnknownLetter("c".into()))
        );
    }

    #[test]
    fn thue_traces() {
        let p = Presentation::from_relators(&["aa"]).unwrap();
        let t = thue_reachable(&p, &w("aaaa"), &Word::empty(), 12, 1000).unwrap();
        assert_eq!(t.steps.len(), 2);
        assert!(t.steps.iter().all(|s| s.operation == Operation::Delete));
        assert!(t.is_valid(&p));
        let refl = thue_reachable(&p, &w("a"), &w("a"), 12, 1000).unwrap();
        assert!(refl.steps.is_empty());
        assert!(thue_reachable(&p, &w("a"), &Word::empty(), 12, 1000).is_none());

        let t = thue_reachable(&z6(), &w("b"), &w("aaaa"), 10, DEFAULT_MAX_STEPS).unwrap();
        assert!(t.is_valid(&z6()));
        assert_eq!(t.end(), &w("aaaa"));
    }

    #[test]
    fn class_of_empty_word() {
        let p = Presentation::from_relators(&["aa"]).unwrap();
        let expected: BTreeSet<Word> = ["", "aa", "aaaa"].into_iter().map(w).collect();
        assert_eq!(bounded_class(&p, 4), expected);
        let small = bounded_class(&z6(), 6);
        assert!(small.is_subset(&bounded_class(&z6(), 7)));
        for r in z6().relators() {
            assert!(small.contains(r));
        }
    }

    #[test]
    fn enumerations() {
        let t = todd_coxeter(&z6(), DEFAULT_MAX_COSETS).closed().unwrap();
        assert_eq!(t.num_cosets(), 6);
        assert_eq!(t.run(0, &w("b")), t.run(0, &w("aaaa")));
        assert!(t.non_permutation_letters().is_empty());
        let trivial = todd_coxeter(&Presentation::from_relators(&["a"]).unwrap(), 10).closed().unwrap();
        assert_eq!(trivial.num_cosets(), 1);
        let triangle = Presentation::from_relators(&["aaaaaa", "bb", "ababab"]).unwrap();
        assert!(todd_coxeter(&triangle, 2000).is_overflow());
        let s3 = Presentation::from_relators(&["aaa", "bb", "abab"]).unwrap();
        let t = todd_coxeter(&s3, 100).closed().unwrap();
        assert_eq!(t.num_cosets(), 6);
        assert!(!t.to_group().is_abelian());
    }

    #[test]
    fn cayley_graphs_of_presentations() {
        let g = cayley_of_presentation(&z6(), DEFAULT_MAX_COSETS).unwrap().closed().unwrap();
        assert_eq!(g.num_vertices(), 6);
        assert!(g.is_deterministic() && g.is_co_deterministic() && g.is_simple());
        let z2 = cayley_of_presentation(&Presentation::from_relators(&["aa"]).unwrap(), 10)
            .unwrap()
            .closed()
            .unwrap();
        let expected: BTreeSet<Edge> = [Edge::new("[ε]", "a", "[a]"), Edge::new("[a]", "a", "[ε]")].into_iter().collect();
        assert_eq!(z2.edges(), expected);
        let collapsed = cayley_of_presentation(&Presentation::from_relators(&["a", "b"]).unwrap(), 10);
        assert_eq!(
            collapsed,
            Err(PresentationError::ConditionViolation {
                condition: Condition::III,
                letters: vec!["a".into(), "b".into()],
            })
        );
    }

    #[test]
    fn balls() {
        let p = Presentation::from_relators(&["a"]).unwrap();
        let b = cayley_ball(&p, 0, 10);
        assert_eq!(b.vertices.len(), 1);
        let b = cayley_ball(&z6(), 10, DEFAULT_MAX_COSETS);
        assert_eq!(b.vertices.len(), 6);
        assert!(!b.partial);
        let triangle = Presentation::from_relators(&["aaaaaa", "bb", "ababab"]).unwrap();
        let b = cayley_ball(&triangle, 4, 2000);
        assert!(b.partial);
        assert!(b.vertices.len() > 6);
    }
}
