//! JSON file formats. Every value is written with sorted keys, so emitting a
//! parsed file reproduces it byte for byte.
//!
//! - graph: `{"edges": [["s", "a", "t"], ...]}`
//! - automaton: a graph plus `"initial"` and `"final"` vertex lists
//! - group: `{"elements", "product", "identity"}` plus an optional
//!   generating `"subset"` and its `"labels"` (element to label)
//! - presentation: `{"alphabet": ["a", "b"], "relators": ["aba", ...]}`
//! - dfa: `{"alphabet", "start", "accepting", "transitions", "sink"}`, see
//!   [`dfa_json`]

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::automata::{Automaton, Dfa, DfaError};
use crate::cayley::{GroupError, GroupTable, Labeling};
use crate::graph::{GraphError, LabeledDigraph};
use crate::ids::{Edge, Label, VertexId, Word};
use crate::presentations::{Presentation, PresentationError};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("empty vertex or label in edge {0}")]
    EmptyToken(Edge),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("product table is not total: row {row} has {len} entries, expected {expected}")]
    NonTotalTable { row: usize, len: usize, expected: usize },
    #[error(transparent)]
    Group(GroupError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("invalid DFA: {0}")]
    Dfa(#[from] DfaError),
}

impl From<GraphError> for IoError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::EmptyGraph => IoError::EmptyGraph,
            GraphError::DuplicateEdge(e) => IoError::DuplicateEdge(e),
            GraphError::EmptyToken(e) => IoError::EmptyToken(e),
            GraphError::UnknownVertex(v) => IoError::UnknownVertex(v),
        }
    }
}

impl From<GroupError> for IoError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::NonTotalTable { row, len, expected } => IoError::NonTotalTable { row, len, expected },
            other => IoError::Group(other),
        }
    }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Schema(e.to_string())
    }
}

pub fn read(path: impl AsRef<Path>) -> Result<String, IoError> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

/// Pretty JSON with object keys in sorted order.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("valid JSON value")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonFile {
    edges: Vec<Edge>,
    initial: Vec<VertexId>,
    #[serde(rename = "final")]
    finals: Vec<VertexId>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    elements: Vec<VertexId>,
    product: Vec<Vec<VertexId>>,
    identity: VertexId,
    #[serde(default)]
    subset: Option<Vec<VertexId>>,
    #[serde(default)]
    labels: Option<BTreeMap<VertexId, Label>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    alphabet: Vec<Label>,
    relators: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaFile {
    alphabet: Vec<Label>,
    start: usize,
    accepting: Vec<usize>,
    transitions: Vec<Vec<usize>>,
    #[serde(default)]
    sink: Option<usize>,
}

pub fn parse_graph(json: &str) -> Result<LabeledDigraph, IoError> {
    let f: GraphFile = serde_json::from_str(json)?;
    Ok(LabeledDigraph::from_edges(f.edges)?)
}

pub fn parse_automaton(json: &str) -> Result<Automaton, IoError> {
    let f: AutomatonFile = serde_json::from_str(json)?;
    let g = LabeledDigraph::from_edges(f.edges)?;
    for v in f.initial.iter().chain(&f.finals) {
        if g.vertex_index(v).is_none() {
            return Err(IoError::UnknownVertex(v.clone()));
        }
    }
    Ok(Automaton::new(&g, f.initial, f.finals).expect("vertices checked above"))
}

/// A group table with an optional labelled generating subset. Without
/// `labels`, each subset element is labelled by its own name; without
/// `subset`, the labelled elements form the subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub table: GroupTable,
    pub labeling: Option<Labeling>,
}

pub fn parse_group(json: &str) -> Result<GroupSpec, IoError> {
    let f: GroupFile = serde_json::from_str(json)?;
    let table = GroupTable::new(f.elements, f.product, f.identity)?;
    let labeling = match (f.subset, f.labels) {
        (None, None) => None,
        (Some(subset), None) => Some(
            subset
                .into_iter()
                .map(|h| {
                    let l = Label::new(h.as_str());
                    (h, l)
                })
                .collect(),
        ),
        (subset, Some(labels)) => {
            if let Some(subset) = subset {
                let keys: BTreeSet<&VertexId> = labels.keys().collect();
                let given: BTreeSet<&VertexId> = subset.iter().collect();
                if keys != given {
                    return Err(IoError::Schema("\"labels\" must label exactly the \"subset\"".into()));
                }
            }
            Some(labels)
        }
    };
    if let Some(l) = &labeling {
        if let Some(h) = l.keys().find(|h| table.index_of(h).is_none()) {
            return Err(IoError::UnknownVertex(h.clone()));
        }
    }
    Ok(GroupSpec { table, labeling })
}

pub fn parse_presentation(json: &str) -> Result<Presentation, IoError> {
    let f: PresentationFile = serde_json::from_str(json)?;
    let relators = f
        .relators
        .iter()
        .map(|r| Word::parse(r, &f.alphabet))
        .collect::<Result<Vec<_>, _>>()
        .map_err(PresentationError::from)?;
    Ok(Presentation::new(f.alphabet.into_iter().collect(), relators)?)
}

pub fn parse_dfa(json: &str) -> Result<Dfa, IoError> {
    let f: DfaFile = serde_json::from_str(json)?;
    let k = f.alphabet.len();
    let n = f.transitions.len();
    if let Some(row) = f.transitions.iter().position(|r| r.len() != k) {
        return Err(IoError::NonTotalTable {
            row,
            len: f.transitions[row].len(),
            expected: k,
        });
    }
    let mut accepting = vec![false; n];
    for q in f.accepting {
        *accepting.get_mut(q).ok_or(DfaError::BadState(q))? = true;
    }
    Ok(Dfa::new(f.alphabet, f.transitions.concat(), f.start, accepting, f.sink)?)
}

/// A language given either as a DFA file or as an automaton file.
pub fn parse_language(json: &str) -> Result<Dfa, IoError> {
    let v: Value = serde_json::from_str(json)?;
    if v.get("transitions").is_some() {
        parse_dfa(json)
    } else {
        Ok(parse_automaton(json)?.to_dfa(&[]))
    }
}

pub fn graph_json(g: &LabeledDigraph) -> String {
    to_canonical_json(g)
}

pub fn automaton_json(a: &Automaton) -> String {
    to_canonical_json(&automaton_value(a))
}

pub fn automaton_value(a: &Automaton) -> Value {
    #[derive(Serialize)]
    struct Form {
        edges: BTreeSet<Edge>,
        initial: BTreeSet<VertexId>,
        #[serde(rename = "final")]
        finals: BTreeSet<VertexId>,
    }
    serde_json::to_value(Form {
        edges: a.lts().named_edges().collect(),
        initial: a.initial(),
        finals: a.finals(),
    })
    .expect("serializable")
}

pub fn group_json(spec: &GroupSpec) -> String {
    to_canonical_json(&group_value(spec))
}

pub fn group_value(spec: &GroupSpec) -> Value {
    #[derive(Serialize)]
    struct Form<'a> {
        elements: &'a [VertexId],
        product: Vec<Vec<VertexId>>,
        identity: &'a VertexId,
        #[serde(skip_serializing_if = "Option::is_none")]
        subset: Option<Vec<&'a VertexId>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<&'a Labeling>,
    }
    let t = &spec.table;
    serde_json::to_value(Form {
        elements: t.elements(),
        product: t.product_rows(),
        identity: t.identity_name(),
        subset: spec.labeling.as_ref().map(|l| l.keys().collect()),
        labels: spec.labeling.as_ref(),
    })
    .expect("serializable")
}

pub fn presentation_json(p: &Presentation) -> String {
    to_canonical_json(p)
}

/// A complete DFA: states `0..n`, `transitions[q][i]` the successor of `q`
/// by the `i`-th letter of `alphabet`.
pub fn dfa_json(d: &Dfa) -> String {
    to_canonical_json(&dfa_value(d))
}

pub fn dfa_value(d: &Dfa) -> Value {
    #[derive(Serialize)]
    struct Form<'a> {
        alphabet: &'a [Label],
        start: usize,
        accepting: Vec<usize>,
        transitions: Vec<Vec<usize>>,
        sink: Option<usize>,
    }
    serde_json::to_value(Form {
        alphabet: d.alphabet(),
        start: d.start(),
        accepting: (0..d.num_states()).filter(|&q| d.is_accepting(q)).collect(),
        transitions: d.transition_rows().into_iter().map(|(_, row)| row).collect(),
        sink: d.sink(),
    })
    .expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{corpus, Payload};

    #[test]
    fn parse_errors_name_the_problem() {
        assert!(matches!(parse_graph(r#"{"edges": []}"#), Err(IoError::EmptyGraph)));
        assert!(matches!(
            parse_graph(r#"{"edges": [["p","a","q"],["p","a","q"]]}"#),
            Err(IoError::DuplicateEdge(_))
        ));
        assert!(matches!(parse_graph(r#"{"vertices": []}"#), Err(IoError::Schema(_))));
        let missing_cell = r#"{"elements":["0","1"],"product":[["0","1"],["1"]],"identity":"0"}"#;
        assert!(matches!(
            parse_group(missing_cell),
            Err(IoError::NonTotalTable { row: 1, len: 1, expected: 2 })
        ));
    }

    #[test]
    fn emit_then_parse_is_identity() {
        for f in corpus() {
            match &f.payload {
                Payload::Graph(g) => {
                    let s = graph_json(g);
                    assert_eq!(graph_json(&parse_graph(&s).unwrap()), s, "{}", f.name);
                }
                Payload::Automaton(a) => {
                    let s = automaton_json(a);
                    assert_eq!(automaton_json(&parse_automaton(&s).unwrap()), s, "{}", f.name);
                }
                Payload::Group(t) => {
                    let spec = GroupSpec {
                        table: t.clone(),
                        labeling: None,
                    };
                    let s = group_json(&spec);
                    assert_eq!(group_json(&parse_group(&s).unwrap()), s, "{}", f.name);
                }
                Payload::Presentation(p) => {
                    let s = presentation_json(p);
                    assert_eq!(parse_presentation(&s).unwrap(), *p, "{}", f.name);
                    assert_eq!(presentation_json(&parse_presentation(&s).unwrap()), s, "{}", f.name);
                }
            }
        }
    }

    #[test]
    fn dfa_round_trip() {
        let l = crate::fixtures::abc_automaton().to_dfa(&[]);
        let s = dfa_json(&l);
        assert_eq!(parse_dfa(&s).unwrap(), l);
        assert_eq!(parse_language(&s).unwrap(), l);
        let a = automaton_json(&crate::fixtures::abc_automaton());
        assert!(parse_language(&a).unwrap().equivalent(&l));
        let short = r#"{"alphabet":["a"],"start":0,"accepting":[0],"transitions":[[]]}"#;
        assert!(matches!(parse_dfa(short), Err(IoError::NonTotalTable { .. })));
    }

    #[test]
    fn group_subset_defaults_to_element_names() {
        let s = r#"{"elements":["0","1"],"product":[["0","1"],["1","0"]],"identity":"0","subset":["1"]}"#;
        let spec = parse_group(s).unwrap();
        assert_eq!(spec.labeling.unwrap()[&VertexId::from("1")], Label::from("1"));
    }
}
