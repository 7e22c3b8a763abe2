//! Graphviz output with vertices and edges in sorted order.

use std::fmt::Write;

use crate::automata::Automaton;
use crate::graph::{LabeledDigraph, Skeleton};
use crate::ids::VertexId;
use crate::presentations::Ball;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn sorted_vertices(g: &LabeledDigraph) -> Vec<&VertexId> {
    let mut vs: Vec<&VertexId> = g.vertices().iter().collect();
    vs.sort();
    vs
}

pub fn graph_dot(g: &LabeledDigraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in sorted_vertices(g) {
        writeln!(out, "  {};", quote(v.as_str())).unwrap();
    }
    for e in g.edges() {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(e.source.as_str()),
            quote(e.target.as_str()),
            quote(e.label.as_str())
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Final states are double circles; an unnamed point points at each
/// initial state.
pub fn automaton_dot(a: &Automaton) -> String {
    let mut out = String::from("digraph A {\n  node [shape=circle];\n");
    let finals = a.finals();
    let mut vs: Vec<&VertexId> = a.lts().vertices().iter().collect();
    vs.sort();
    for v in vs {
        let shape = if finals.contains(v) { " [shape=doublecircle]" } else { "" };
        writeln!(out, "  {}{};", quote(v.as_str()), shape).unwrap();
    }
    for (k, v) in a.initial().iter().enumerate() {
        writeln!(out, "  \"__start{k}\" [shape=point];").unwrap();
        writeln!(out, "  \"__start{k}\" -> {};", quote(v.as_str())).unwrap();
    }
    let edges: std::collections::BTreeSet<_> = a.lts().named_edges().collect();
    for e in edges {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(e.source.as_str()),
            quote(e.target.as_str()),
            quote(e.label.as_str())
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn skeleton_dot(s: &Skeleton) -> String {
    let mut out = String::from("graph G {\n");
    let mut vs: Vec<&VertexId> = s.pairs.iter().flat_map(|(a, b)| [a, b]).collect();
    vs.sort();
    vs.dedup();
    for v in vs {
        writeln!(out, "  {};", quote(v.as_str())).unwrap();
    }
    for (a, b) in &s.pairs {
        writeln!(out, "  {} -- {};", quote(a.as_str()), quote(b.as_str())).unwrap();
    }
    out.push_str("}\n");
    out
}

/// A ball, with a comment line marking it when partial.
pub fn ball_dot(b: &Ball) -> String {
    let mut out = String::from("digraph G {\n");
    if b.partial {
        out.push_str("  // partial: boundary vertices may miss edges\n");
    }
    let mut vs: Vec<&VertexId> = b.vertices.iter().collect();
    vs.sort();
    for v in vs {
        writeln!(out, "  {};", quote(v.as_str())).unwrap();
    }
    for e in &b.edges {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(e.source.as_str()),
            quote(e.target.as_str()),
            quote(e.label.as_str())
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::even;

    #[test]
    fn even_graph() {
        let d = graph_dot(&even());
        assert_eq!(d.matches(" -> ").count(), 4);
        assert_eq!(d.lines().filter(|l| l.ends_with(';') && !l.contains("->")).count(), 2);
        assert_eq!(d, graph_dot(&even()));
    }

    #[test]
    fn automaton_marks_initial_and_final() {
        let d = automaton_dot(&crate::fixtures::abc_automaton());
        assert!(d.contains("\"0\" [shape=doublecircle]"));
        assert!(d.contains("\"__start0\" -> \"0\""));
        assert_eq!(d.matches("[label=").count(), 4);
    }

    #[test]
    fn even_skeleton_has_three_edges() {
        let d = skeleton_dot(&even().skeleton());
        assert_eq!(d.matches(" -- ").count(), 3);
        assert!(d.starts_with("graph "));
    }
}
