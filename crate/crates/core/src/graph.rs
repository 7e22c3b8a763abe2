//! Finite directed labelled graphs and their first-order structural
//! predicates.
//!
//! A [`LabeledDigraph`] is a non-empty set of edges; its vertex and label
//! sets are whatever the edges mention, so isolated vertices cannot exist.
//! Internally every vertex and label is given a dense index (in sorted
//! order) and all algorithms run on those indices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::Deref;

use serde::Serialize;

use crate::ids::{Edge, Label, VertexId};
use crate::witness::Witness;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("a graph needs at least one edge")]
    EmptyGraph,
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("empty vertex or label token in edge {0}")]
    EmptyToken(Edge),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// Indexed labelled transition structure.
///
/// This is the shared carrier behind [`LabeledDigraph`] and automata. Unlike
/// a graph it may have no edges and may hold vertices that no edge touches
/// (an automaton's initial or final states).
#[derive(Debug, Clone)]
pub struct Lts {
    vertices: Vec<VertexId>,
    labels: Vec<Label>,
    edges: Vec<(usize, usize, usize)>,
    out: Vec<Vec<(usize, usize)>>,
    inc: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for Lts {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Lts {}

impl Lts {
    /// Builds the structure from named edges plus extra vertices. Duplicate
    /// edges are merged.
    pub fn build<I, V>(edges: I, extra_vertices: V) -> Lts
    where
        I: IntoIterator<Item = Edge>,
        V: IntoIterator<Item = VertexId>,
    {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let mut vertices: BTreeSet<VertexId> = extra_vertices.into_iter().collect();
        let mut labels = BTreeSet::new();
        for e in &edges {
            vertices.insert(e.source.clone());
            vertices.insert(e.target.clone());
            labels.insert(e.label.clone());
        }
        let vertices: Vec<VertexId> = vertices.into_iter().collect();
        let labels: Vec<Label> = labels.into_iter().collect();
        let vidx = |v: &VertexId| vertices.binary_search(v).expect("vertex collected");
        let lidx = |l: &Label| labels.binary_search(l).expect("label collected");
        let dense = edges
            .iter()
            .map(|e| (vidx(&e.source), lidx(&e.label), vidx(&e.target)))
            .collect();
        Lts::from_dense(vertices, labels, dense)
    }

    /// Builds from already-indexed parts. `vertices` and `labels` must be
    /// sorted and duplicate-free; `edges` is sorted and deduplicated here.
    pub(crate) fn from_dense(
        vertices: Vec<VertexId>,
        labels: Vec<Label>,
        mut edges: Vec<(usize, usize, usize)>,
    ) -> Lts {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        edges.sort_unstable();
        edges.dedup();
        let n = vertices.len();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for &(s, a, t) in &edges {
            out[s].push((a, t));
            inc[t].push((a, s));
        }
        for list in inc.iter_mut() {
            list.sort_unstable();
        }
        Lts {
            vertices,
            labels,
            edges,
            out,
            inc,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_labels(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn vertex(&self, v: usize) -> &VertexId {
        &self.vertices[v]
    }

    pub fn label(&self, a: usize) -> &Label {
        &self.labels[a]
    }

    pub fn vertex_index(&self, v: &VertexId) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn label_index(&self, l: &Label) -> Option<usize> {
        self.labels.binary_search(l).ok()
    }

    /// Dense edges `(source, label, target)` in sorted order.
    pub fn dense_edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    /// Outgoing `(label, target)` pairs of `v`, sorted.
    pub fn out(&self, v: usize) -> &[(usize, usize)] {
        &self.out[v]
    }

    /// Incoming `(label, source)` pairs of `v`, sorted.
    pub fn inc(&self, v: usize) -> &[(usize, usize)] {
        &self.inc[v]
    }

    /// Targets of `a`-edges leaving `v`.
    pub fn successors(&self, v: usize, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v]
            .iter()
            .filter(move |&&(l, _)| l == a)
            .map(|&(_, t)| t)
    }

    /// First `a`-successor of `v` (the only one in a deterministic graph).
    pub fn step(&self, v: usize, a: usize) -> Option<usize> {
        self.successors(v, a).next()
    }

    pub fn named_edge(&self, e: (usize, usize, usize)) -> Edge {
        Edge {
            source: self.vertices[e.0].clone(),
            label: self.labels[e.1].clone(),
            target: self.vertices[e.2].clone(),
        }
    }

    pub fn named_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(move |&e| self.named_edge(e))
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        match (
            self.vertex_index(&e.source),
            self.label_index(&e.label),
            self.vertex_index(&e.target),
        ) {
            (Some(s), Some(a), Some(t)) => self.edges.binary_search(&(s, a, t)).is_ok(),
            _ => false,
        }
    }

    /// Same vertices and labels, every edge reversed.
    pub fn reversed(&self) -> Lts {
        let edges = self.edges.iter().map(|&(s, a, t)| (t, a, s)).collect();
        Lts::from_dense(self.vertices.clone(), self.labels.clone(), edges)
    }

    /// Vertices reachable from `sources` along edges (forward) or against
    /// them (`backward`).
    pub fn reachable(&self, sources: &[usize], backward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.num_vertices()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in sources {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let next = if backward { &self.inc[v] } else { &self.out[v] };
            for &(_, t) in next {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Strongly connected components (Tarjan, iterative). Returns the
    /// component index of each vertex; components are numbered in reverse
    /// topological order of the condensation.
    pub fn scc(&self) -> (Vec<usize>, usize) {
        let n = self.num_vertices();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut comp = vec![UNSEEN; n];
        let mut stack = Vec::new();
        let mut counter = 0;
        let mut ncomp = 0;
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
                if *pos < self.out[v].len() {
                    let (_, w) = self.out[v][*pos];
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(parent, _)) = frames.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            comp[w] = ncomp;
                            if w == v {
                                break;
                            }
                        }
                        ncomp += 1;
                    }
                }
            }
        }
        (comp, ncomp)
    }

    /// Weakly connected component of each vertex, numbered by smallest member.
    pub fn weak_components(&self) -> (Vec<usize>, usize) {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(_, w) in self.out[v].iter().chain(self.inc[v].iter()) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// First pair of edges with equal `key`, for the determinism-like checks.
    fn first_clash<K: Ord>(
        &self,
        key: impl Fn(&(usize, usize, usize)) -> K,
    ) -> Option<(Edge, Edge)> {
        let mut seen: BTreeMap<K, (usize, usize, usize)> = BTreeMap::new();
        for e in &self.edges {
            if let Some(prev) = seen.insert(key(e), *e) {
                return Some((self.named_edge(prev), self.named_edge(*e)));
            }
        }
        None
    }

    pub fn check_deterministic(&self) -> Result<(), Witness> {
        match self.first_clash(|&(s, a, _)| (s, a)) {
            Some((first, second)) => Err(Witness::LabelClash { first, second }),
            None => Ok(()),
        }
    }

    pub fn is_deterministic(&self) -> bool {
        self.check_deterministic().is_ok()
    }

    pub fn check_co_deterministic(&self) -> Result<(), Witness> {
        match self.first_clash(|&(_, a, t)| (t, a)) {
            Some((first, second)) => Err(Witness::CoLabelClash { first, second }),
            None => Ok(()),
        }
    }

    pub fn is_co_deterministic(&self) -> bool {
        self.check_co_deterministic().is_ok()
    }
}

/// A finite, non-empty set of labelled edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph(Lts);

impl Deref for LabeledDigraph {
    type Target = Lts;

    fn deref(&self) -> &Lts {
        &self.0
    }
}

impl Serialize for LabeledDigraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Form {
            edges: BTreeSet<Edge>,
        }
        Form { edges: self.edges() }.serialize(serializer)
    }
}

/// Undirected, unlabelled view of a graph: unordered vertex pairs, with a
/// self-loop recorded as a pair `(s, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skeleton {
    pub pairs: BTreeSet<(VertexId, VertexId)>,
}

impl LabeledDigraph {
    /// Strict constructor: rejects empty edge sets, duplicate edges and
    /// empty tokens.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for e in edges {
            if e.source.as_str().is_empty()
                || e.target.as_str().is_empty()
                || e.label.as_str().is_empty()
            {
                return Err(GraphError::EmptyToken(e));
            }
            if set.contains(&e) {
                return Err(GraphError::DuplicateEdge(e));
            }
            set.insert(e);
        }
        if set.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        Ok(LabeledDigraph(Lts::build(set, std::iter::empty())))
    }

    /// Convenience constructor from string triples. Duplicates are merged.
    pub fn from_triples<'a, I>(triples: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    {
        let set: BTreeSet<Edge> = triples
            .into_iter()
            .map(|(s, a, t)| Edge::new(s, a, t))
            .collect();
        Self::from_edges(set)
    }

    /// Wraps an [`Lts`] that has at least one edge and no isolated vertex.
    pub fn from_lts(lts: Lts) -> Result<Self, GraphError> {
        if lts.num_edges() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let isolated = (0..lts.num_vertices()).any(|v| lts.out(v).is_empty() && lts.inc(v).is_empty());
        if isolated {
            Ok(LabeledDigraph(Lts::build(lts.named_edges(), std::iter::empty())))
        } else {
            Ok(LabeledDigraph(lts))
        }
    }

    pub fn lts(&self) -> &Lts {
        &self.0
    }

    pub fn into_lts(self) -> Lts {
        self.0
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        self.named_edges().collect()
    }

    pub fn inverse(&self) -> LabeledDigraph {
        LabeledDigraph(self.0.reversed())
    }

    pub fn check_simple(&self) -> Result<(), Witness> {
        match self.first_clash(|&(s, _, t)| (s, t)) {
            Some((first, second)) => Err(Witness::ParallelEdges { first, second }),
            None => Ok(()),
        }
    }

    pub fn is_simple(&self) -> bool {
        self.check_simple().is_ok()
    }

    /// Vertices from which every vertex is reachable.
    ///
    /// Computed on the condensation: there are roots iff exactly one
    /// strongly connected component has no incoming edge from another
    /// component, and then the roots are that component's vertices.
    pub fn roots(&self) -> BTreeSet<VertexId> {
        match self.source_components() {
            (comp, sources) if sources.len() == 1 => (0..self.num_vertices())
                .filter(|&v| comp[v] == sources[0])
                .map(|v| self.vertex(v).clone())
                .collect(),
            _ => BTreeSet::new(),
        }
    }

    fn source_components(&self) -> (Vec<usize>, Vec<usize>) {
        let (comp, ncomp) = self.scc();
        let mut has_pred = vec![false; ncomp];
        for &(s, _, t) in self.dense_edges() {
            if comp[s] != comp[t] {
                has_pred[comp[t]] = true;
            }
        }
        let sources = (0..ncomp).filter(|&c| !has_pred[c]).collect();
        (comp, sources)
    }

    /// On failure the witness is a pair of vertices that no vertex reaches
    /// together.
    pub fn check_rooted(&self) -> Result<(), Witness> {
        let (comp, sources) = self.source_components();
        if sources.len() == 1 {
            return Ok(());
        }
        let rep = |c: usize| {
            let v = (0..self.num_vertices()).find(|&v| comp[v] == c).expect("component member");
            self.vertex(v).clone()
        };
        Err(Witness::NoCommonAncestor {
            first: rep(sources[0]),
            second: rep(sources[1]),
        })
    }

    pub fn is_rooted(&self) -> bool {
        self.check_rooted().is_ok()
    }

    pub fn check_strongly_connected(&self) -> Result<(), Witness> {
        let from = 0;
        let fwd = self.reachable(&[from], false);
        if let Some(to) = fwd.iter().position(|&r| !r) {
            return Err(Witness::Unreachable {
                from: self.vertex(from).clone(),
                to: self.vertex(to).clone(),
            });
        }
        let bwd = self.reachable(&[from], true);
        if let Some(v) = bwd.iter().position(|&r| !r) {
            return Err(Witness::Unreachable {
                from: self.vertex(v).clone(),
                to: self.vertex(from).clone(),
            });
        }
        Ok(())
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.check_strongly_connected().is_ok()
    }

    pub fn check_connected(&self) -> Result<(), Witness> {
        let (comp, count) = self.weak_components();
        if count == 1 {
            return Ok(());
        }
        let other = comp.iter().position(|&c| c != comp[0]).expect("second component");
        Err(Witness::Disconnected {
            from: self.vertex(0).clone(),
            to: self.vertex(other).clone(),
        })
    }

    pub fn is_connected(&self) -> bool {
        self.check_connected().is_ok()
    }

    /// Connected components of `G ∪ G⁻¹`, each as its own graph, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<LabeledDigraph> {
        let (comp, count) = self.weak_components();
        let mut parts: Vec<Vec<Edge>> = vec![Vec::new(); count];
        for &e in self.dense_edges() {
            parts[comp[e.0]].push(self.named_edge(e));
        }
        parts
            .into_iter()
            .map(|edges| LabeledDigraph(Lts::build(edges, std::iter::empty())))
            .collect()
    }

    fn missing_out(lts: &Lts) -> Option<(usize, usize)> {
        for v in 0..lts.num_vertices() {
            let mut present = vec![false; lts.num_labels()];
            for &(a, _) in lts.out(v) {
                present[a] = true;
            }
            if let Some(a) = present.iter().position(|&p| !p) {
                return Some((v, a));
            }
        }
        None
    }

    /// Every vertex has an outgoing edge with every label of the graph.
    pub fn check_source_complete(&self) -> Result<(), Witness> {
        match Self::missing_out(&self.0) {
            Some((v, a)) => Err(Witness::MissingOutEdge {
                vertex: self.vertex(v).clone(),
                label: self.label(a).clone(),
            }),
            None => Ok(()),
        }
    }

    pub fn is_source_complete(&self) -> bool {
        self.check_source_complete().is_ok()
    }

    pub fn check_co_complete(&self) -> Result<(), Witness> {
        match Self::missing_out(&self.0.reversed()) {
            Some((v, a)) => Err(Witness::MissingInEdge {
                vertex: self.vertex(v).clone(),
                label: self.label(a).clone(),
            }),
            None => Ok(()),
        }
    }

    pub fn is_co_complete(&self) -> bool {
        self.check_co_complete().is_ok()
    }

    pub fn skeleton(&self) -> Skeleton {
        let pairs = self
            .dense_edges()
            .iter()
            .map(|&(s, _, t)| {
                let (a, b) = (self.vertex(s).clone(), self.vertex(t).clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        Skeleton { pairs }
    }

    /// The subgraph induced by the given vertices, if it has edges.
    pub fn restrict(&self, keep: &BTreeSet<VertexId>) -> Option<LabeledDigraph> {
        let edges: Vec<Edge> = self
            .named_edges()
            .filter(|e| keep.contains(&e.source) && keep.contains(&e.target))
            .collect();
        LabeledDigraph::from_edges(edges).ok()
    }

    /// Renames every vertex through `map`; vertices missing from the map keep
    /// their name.
    pub fn rename(&self, map: &BTreeMap<VertexId, VertexId>) -> LabeledDigraph {
        let edges: BTreeSet<Edge> = self
            .named_edges()
            .map(|e| Edge {
                source: map.get(&e.source).cloned().unwrap_or(e.source),
                label: e.label,
                target: map.get(&e.target).cloned().unwrap_or(e.target),
            })
            .collect();
        LabeledDigraph(Lts::build(edges, std::iter::empty()))
    }

    /// Disjoint union; vertex names must not overlap.
    pub fn union(&self, other: &LabeledDigraph) -> LabeledDigraph {
        let edges: BTreeSet<Edge> = self.named_edges().chain(other.named_edges()).collect();
        LabeledDigraph(Lts::build(edges, std::iter::empty()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn even() -> LabeledDigraph {
        LabeledDigraph::from_triples([("p", "a", "q"), ("p", "b", "p"), ("q", "a", "p"), ("q", "b", "q")])
            .unwrap()
    }

    fn vs(names: &[&str]) -> BTreeSet<VertexId> {
        names.iter().map(|&n| VertexId::from(n)).collect()
    }

    #[test]
    fn even_is_deterministic_and_co_deterministic() {
        let g = even();
        assert!(g.is_simple());
        assert!(g.is_deterministic());
        assert!(g.is_co_deterministic());
        assert!(g.is_strongly_connected());
        assert!(g.is_source_complete());
        assert!(g.is_co_complete());
        assert_eq!(g.roots(), vs(&["p", "q"]));
    }

    #[test]
    fn parallel_edges_are_not_simple() {
        let g = LabeledDigraph::from_triples([("s", "a", "t"), ("s", "b", "t")]).unwrap();
        match g.check_simple() {
            Err(Witness::ParallelEdges { first, second }) => {
                assert_eq!(first, Edge::new("s", "a", "t"));
                assert_eq!(second, Edge::new("s", "b", "t"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let loop_graph = LabeledDigraph::from_triples([("s", "a", "s")]).unwrap();
        assert!(loop_graph.is_simple());
    }

    #[test]
    fn label_clashes() {
        let g = LabeledDigraph::from_triples([("s", "a", "t"), ("s", "a", "u")]).unwrap();
        assert!(!g.is_deterministic());
        let h = LabeledDigraph::from_triples([("t", "a", "s"), ("u", "a", "s")]).unwrap();
        assert!(!h.is_co_deterministic());
        assert!(h.is_deterministic());
        assert!(h.inverse().is_deterministic() == h.is_co_deterministic());
    }

    #[test]
    fn inverse_is_an_involution() {
        let g = even();
        let inv = g.inverse();
        assert!(inv.contains_edge(&Edge::new("q", "a", "p")));
        assert_eq!(inv.inverse(), g);
        let single = LabeledDigraph::from_triples([("s", "a", "t")]).unwrap();
        assert_eq!(single.inverse().edges(), [Edge::new("t", "a", "s")].into_iter().collect());
    }

    #[test]
    fn roots_and_connectivity() {
        let loops = LabeledDigraph::from_triples([("s", "a", "s"), ("t", "a", "t")]).unwrap();
        assert!(loops.roots().is_empty());
        assert!(!loops.is_rooted());
        let path = LabeledDigraph::from_triples([("s", "a", "t")]).unwrap();
        assert_eq!(path.roots(), vs(&["s"]));
        let two = LabeledDigraph::from_triples([("1", "a", "2"), ("3", "a", "4")]).unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_connected());

        let line: Vec<(String, String)> = (0..10).map(|n| (n.to_string(), (n + 1).to_string())).collect();
        let semi_line = LabeledDigraph::from_edges(line.iter().map(|(s, t)| Edge::new(s.as_str(), "a", t.as_str()))).unwrap();
        assert!(semi_line.is_connected());
        assert!(!semi_line.is_strongly_connected());
        assert_eq!(semi_line.roots(), vs(&["0"]));
    }

    #[test]
    fn completeness() {
        let g = LabeledDigraph::from_triples([("s", "a", "t"), ("t", "b", "s")]).unwrap();
        assert_eq!(
            g.check_source_complete(),
            Err(Witness::MissingOutEdge { vertex: "s".into(), label: "b".into() })
        );
        assert!(!g.is_co_complete());
    }

    #[test]
    fn skeleton_of_even() {
        let sk = even().skeleton();
        let expected: BTreeSet<(VertexId, VertexId)> = [("p", "p"), ("p", "q"), ("q", "q")]
            .into_iter()
            .map(|(a, b)| (a.into(), b.into()))
            .collect();
        assert_eq!(sk.pairs, expected);
        assert_eq!(even().inverse().skeleton(), sk);
    }

    #[test]
    fn strict_construction() {
        assert_eq!(LabeledDigraph::from_edges(Vec::new()), Err(GraphError::EmptyGraph));
        let e = Edge::new("s", "a", "t");
        assert_eq!(
            LabeledDigraph::from_edges(vec![e.clone(), e.clone()]),
            Err(GraphError::DuplicateEdge(e))
        );
    }
}
