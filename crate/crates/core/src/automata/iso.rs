//! Label-preserving isomorphisms between graphs and automata.
//!
//! The search first refines vertex colours jointly on both structures
//! (label-degree signatures iterated to a fixpoint), then backtracks over
//! colour-compatible candidates. Every assignment is propagated: when a
//! mapped pair has exactly one `a`-successor (or `a`-predecessor) on each
//! side, those are mapped too. On deterministic graphs this forces the whole
//! reachable part from one anchor, so only nondeterministic inputs are
//! subject to the size cap.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{AutomataError, Automaton};
use crate::graph::{LabeledDigraph, Lts};
use crate::ids::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoConfig {
    /// Largest nondeterministic graph searched by backtracking.
    pub max_vertices: usize,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig { max_vertices: 12 }
    }
}

/// A vertex bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IsoWitness {
    pub map: BTreeMap<VertexId, VertexId>,
}

impl IsoWitness {
    /// Re-checks that the map is a label-preserving edge bijection from `g`
    /// onto `h`.
    pub fn verify_graphs(&self, g: &LabeledDigraph, h: &LabeledDigraph) -> bool {
        self.verify_lts(g.lts(), h.lts())
    }

    /// As [`IsoWitness::verify_graphs`], also preserving initial and final
    /// states.
    pub fn verify(&self, a: &Automaton, b: &Automaton) -> bool {
        if !self.verify_lts(a.lts(), b.lts()) {
            return false;
        }
        let image = |set: std::collections::BTreeSet<VertexId>| {
            set.iter().map(|v| self.map[v].clone()).collect::<std::collections::BTreeSet<_>>()
        };
        image(a.initial()) == b.initial() && image(a.finals()) == b.finals()
    }

    fn verify_lts(&self, a: &Lts, b: &Lts) -> bool {
        if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
            return false;
        }
        if self.map.len() != a.num_vertices() || !a.vertices().iter().all(|v| self.map.contains_key(v)) {
            return false;
        }
        let targets: std::collections::BTreeSet<&VertexId> = self.map.values().collect();
        if targets.len() != self.map.len() || !targets.iter().all(|v| b.vertex_index(v).is_some()) {
            return false;
        }
        a.named_edges().all(|e| {
            let mapped = crate::ids::Edge {
                source: self.map[&e.source].clone(),
                label: e.label,
                target: self.map[&e.target].clone(),
            };
            b.contains_edge(&mapped)
        })
    }
}

const UNMAPPED: usize = usize::MAX;

struct Search<'a> {
    a: &'a Lts,
    b: &'a Lts,
    colour_a: Vec<usize>,
    colour_b: Vec<usize>,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    trail: Vec<usize>,
}

fn has_edge(lts: &Lts, s: usize, l: usize, t: usize) -> bool {
    lts.out(s).binary_search(&(l, t)).is_ok()
}

/// Joint colour refinement on the disjoint union of `a` and `b`.
fn refine(a: &Lts, ca: &[usize], b: &Lts, cb: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (mut ca, mut cb) = (ca.to_vec(), cb.to_vec());
    let classes = |x: &[usize], y: &[usize]| {
        x.iter().chain(y).collect::<std::collections::BTreeSet<_>>().len()
    };
    let mut count = classes(&ca, &cb);
    loop {
        let mut ids: BTreeMap<(usize, Vec<(u8, usize, usize)>), usize> = BTreeMap::new();
        let mut recolour = |lts: &Lts, c: &[usize]| -> Vec<usize> {
            (0..lts.num_vertices())
                .map(|v| {
                    let mut sig: Vec<(u8, usize, usize)> = lts
                        .out(v)
                        .iter()
                        .map(|&(l, t)| (0, l, c[t]))
                        .chain(lts.inc(v).iter().map(|&(l, s)| (1, l, c[s])))
                        .collect();
                    sig.sort_unstable();
                    let fresh = ids.len();
                    *ids.entry((c[v], sig)).or_insert(fresh)
                })
                .collect()
        };
        let na = recolour(a, &ca);
        let nb = recolour(b, &cb);
        let new_count = ids.len();
        ca = na;
        cb = nb;
        if new_count == count {
            return (ca, cb);
        }
        count = new_count;
    }
}

impl<'a> Search<'a> {
    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail entry");
            self.bwd[self.fwd[x]] = UNMAPPED;
            self.fwd[x] = UNMAPPED;
        }
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            if self.fwd[x] != UNMAPPED {
                if self.fwd[x] != y {
                    return false;
                }
                continue;
            }
            if self.bwd[y] != UNMAPPED || self.colour_a[x] != self.colour_b[y] {
                return false;
            }
            self.fwd[x] = y;
            self.bwd[y] = x;
            self.trail.push(x);
            let (a, b) = (self.a, self.b);
            for &(l, t) in a.out(x) {
                if self.fwd[t] != UNMAPPED && !has_edge(b, y, l, self.fwd[t]) {
                    return false;
                }
            }
            for &(l, s) in a.inc(x) {
                if self.fwd[s] != UNMAPPED && !has_edge(b, self.fwd[s], l, y) {
                    return false;
                }
            }
            for &(l, t) in b.out(y) {
                if self.bwd[t] != UNMAPPED && !has_edge(a, x, l, self.bwd[t]) {
                    return false;
                }
            }
            for &(l, s) in b.inc(y) {
                if self.bwd[s] != UNMAPPED && !has_edge(a, self.bwd[s], l, x) {
                    return false;
                }
            }
            for (list_a, list_b) in [(a.out(x), b.out(y)), (a.inc(x), b.inc(y))] {
                for l in 0..a.num_labels() {
                    let mut na = list_a.iter().filter(|&&(m, _)| m == l).map(|&(_, v)| v);
                    let mut nb = list_b.iter().filter(|&&(m, _)| m == l).map(|&(_, v)| v);
                    match (na.next(), nb.next(), na.next(), nb.next()) {
                        (Some(u), Some(v), None, None) => pending.push((u, v)),
                        (None, None, _, _) => {}
                        (Some(_), Some(_), Some(_), Some(_)) => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    fn next_vertex(&self) -> Option<usize> {
        let n = self.a.num_vertices();
        let touches_mapped = |x: usize| {
            self.a
                .out(x)
                .iter()
                .chain(self.a.inc(x))
                .any(|&(_, v)| self.fwd[v] != UNMAPPED)
        };
        (0..n)
            .filter(|&x| self.fwd[x] == UNMAPPED)
            .find(|&x| touches_mapped(x))
            .or_else(|| (0..n).find(|&x| self.fwd[x] == UNMAPPED))
    }

    fn solve(&mut self) -> bool {
        let Some(x) = self.next_vertex() else {
            return true;
        };
        for y in 0..self.b.num_vertices() {
            if self.bwd[y] != UNMAPPED || self.colour_b[y] != self.colour_a[x] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.solve() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

fn search(
    a: &Lts,
    ca: &[usize],
    b: &Lts,
    cb: &[usize],
    forced: &[(usize, usize)],
    cfg: &IsoConfig,
) -> Result<Option<Vec<usize>>, AutomataError> {
    let n = a.num_vertices();
    if n != b.num_vertices() || a.num_edges() != b.num_edges() || a.labels() != b.labels() {
        return Ok(None);
    }
    let forced_by_edges = a.is_deterministic() || a.is_co_deterministic();
    if !forced_by_edges && n > cfg.max_vertices {
        return Err(AutomataError::SearchCapExceeded {
            vertices: n,
            cap: cfg.max_vertices,
        });
    }
    let (colour_a, colour_b) = refine(a, ca, b, cb);
    let histogram = |c: &[usize]| {
        let mut h: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_default() += 1;
        }
        h
    };
    if histogram(&colour_a) != histogram(&colour_b) {
        return Ok(None);
    }
    let mut s = Search {
        a,
        b,
        colour_a,
        colour_b,
        fwd: vec![UNMAPPED; n],
        bwd: vec![UNMAPPED; n],
        trail: Vec::new(),
    };
    for &(x, y) in forced {
        if !s.assign(x, y) {
            return Ok(None);
        }
    }
    Ok(s.solve().then_some(s.fwd))
}

fn witness(a: &Lts, b: &Lts, map: Vec<usize>) -> IsoWitness {
    IsoWitness {
        map: map
            .into_iter()
            .enumerate()
            .map(|(x, y)| (a.vertex(x).clone(), b.vertex(y).clone()))
            .collect(),
    }
}

fn automaton_colours(a: &Automaton) -> Vec<usize> {
    (0..a.num_states())
        .map(|v| usize::from(a.is_initial(v)) + 2 * usize::from(a.is_final(v)))
        .collect()
}

/// An isomorphism of automata: a graph isomorphism that maps initial states
/// onto initial states and final states onto final states.
pub fn iso(a: &Automaton, b: &Automaton, cfg: &IsoConfig) -> Result<Option<IsoWitness>, AutomataError> {
    let found = search(a.lts(), &automaton_colours(a), b.lts(), &automaton_colours(b), &[], cfg)?;
    Ok(found.map(|m| witness(a.lts(), b.lts(), m)))
}

pub fn graph_iso(
    g: &LabeledDigraph,
    h: &LabeledDigraph,
    cfg: &IsoConfig,
) -> Result<Option<IsoWitness>, AutomataError> {
    let (ca, cb) = (vec![0; g.num_vertices()], vec![0; h.num_vertices()]);
    let found = search(g.lts(), &ca, h.lts(), &cb, &[], cfg)?;
    Ok(found.map(|m| witness(g.lts(), h.lts(), m)))
}

fn index_pairs(
    g: &Lts,
    h: &Lts,
    pairs: &[(VertexId, VertexId)],
) -> Result<Vec<(usize, usize)>, AutomataError> {
    pairs
        .iter()
        .map(|(s, t)| {
            let s = g.vertex_index(s).ok_or_else(|| AutomataError::UnknownVertex(s.clone()))?;
            let t = h.vertex_index(t).ok_or_else(|| AutomataError::UnknownVertex(t.clone()))?;
            Ok((s, t))
        })
        .collect()
}

/// An isomorphism of deterministic graphs sending `s` to `t`. The map is
/// forced along edges from the anchor (and against them when the graphs
/// are co-deterministic); any conflict means no such isomorphism exists.
pub fn anchored_iso(
    g: &LabeledDigraph,
    s: &VertexId,
    h: &LabeledDigraph,
    t: &VertexId,
) -> Result<Option<IsoWitness>, AutomataError> {
    if !g.is_deterministic() || !h.is_deterministic() {
        return Err(AutomataError::NotDeterministic);
    }
    let pairs = index_pairs(g.lts(), h.lts(), &[(s.clone(), t.clone())])?;
    let (ca, cb) = (vec![0; g.num_vertices()], vec![0; h.num_vertices()]);
    let found = search(g.lts(), &ca, h.lts(), &cb, &pairs, &IsoConfig::default())?;
    Ok(found.map(|m| witness(g.lts(), h.lts(), m)))
}

/// An automorphism of `g` extending the given vertex pairs.
pub fn automorphism(
    g: &LabeledDigraph,
    forced: &[(VertexId, VertexId)],
    cfg: &IsoConfig,
) -> Result<Option<IsoWitness>, AutomataError> {
    let pairs = index_pairs(g.lts(), g.lts(), forced)?;
    let colours = vec![0; g.num_vertices()];
    let found = search(g.lts(), &colours, g.lts(), &colours, &pairs, cfg)?;
    Ok(found.map(|m| witness(g.lts(), g.lts(), m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::tests::{even, even_auto};

    fn renamed_even() -> LabeledDigraph {
        LabeledDigraph::from_triples([("x", "a", "y"), ("x", "b", "x"), ("y", "a", "x"), ("y", "b", "y")])
            .unwrap()
    }

    #[test]
    fn renaming_is_found() {
        let w = graph_iso(&even(), &renamed_even(), &IsoConfig::default()).unwrap().unwrap();
        assert!(w.verify_graphs(&even(), &renamed_even()));
        let a = Automaton::new(&renamed_even(), ["y".into()], ["y".into()]).unwrap();
        let w = iso(&even_auto("p", "p"), &a, &IsoConfig::default()).unwrap().unwrap();
        assert_eq!(w.map[&VertexId::from("p")], VertexId::from("y"));
        assert!(w.verify(&even_auto("p", "p"), &a));
    }

    #[test]
    fn label_sets_must_agree() {
        let one_label = LabeledDigraph::from_triples([("p", "a", "q"), ("q", "a", "p")]).unwrap();
        assert_eq!(graph_iso(&even(), &one_label, &IsoConfig::default()).unwrap(), None);
    }

    #[test]
    fn anchored_search() {
        let g = even();
        let w = anchored_iso(&g, &"p".into(), &g, &"q".into()).unwrap().unwrap();
        assert_eq!(w.map[&VertexId::from("q")], VertexId::from("p"));
        let path = LabeledDigraph::from_triples([("s", "a", "t"), ("t", "a", "u")]).unwrap();
        assert_eq!(anchored_iso(&path, &"s".into(), &path, &"t".into()).unwrap(), None);
        let nd = LabeledDigraph::from_triples([("s", "a", "t"), ("s", "a", "u")]).unwrap();
        assert_eq!(anchored_iso(&nd, &"s".into(), &nd, &"s".into()), Err(AutomataError::NotDeterministic));
    }

    #[test]
    fn loops_are_not_mapped_to_edges() {
        let g = LabeledDigraph::from_triples([("s", "a", "t"), ("u", "a", "u")]).unwrap();
        let forced = [("s".into(), "u".into())];
        assert_eq!(automorphism(&g, &forced, &IsoConfig::default()).unwrap(), None);
    }

    #[test]
    fn nondeterministic_cap() {
        let mut triples = Vec::new();
        let names: Vec<String> = (0..14).map(|i| i.to_string()).collect();
        for i in 0..14 {
            triples.push((names[i].as_str(), "a", names[(i + 1) % 14].as_str()));
            triples.push((names[i].as_str(), "a", names[(i + 2) % 14].as_str()));
        }
        let g = LabeledDigraph::from_triples(triples).unwrap();
        assert!(matches!(
            graph_iso(&g, &g, &IsoConfig::default()),
            Err(AutomataError::SearchCapExceeded { vertices: 14, cap: 12 })
        ));
        assert!(graph_iso(&g, &g, &IsoConfig { max_vertices: 20 }).unwrap().is_some());
    }
}
