//! Python module `cayley`: graphs, automata, languages and presentations.
//!
//! Structured results (verdicts, certificates, witnesses) come back as
//! plain dicts and lists with the same shape as the CLI's JSON output.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde::Serialize;
use serde_json::Value;

use cayley_core::automata::{self, IsoConfig};
use cayley_core::cayley::{self as core_cayley, CayleyError};
use cayley_core::cycles;
use cayley_core::fixtures::{self, Payload};
use cayley_core::io;
use cayley_core::lang;
use cayley_core::presentations::{self, Quotient};
use cayley_core::report::{self, CheckConfig};
use cayley_core::{dot, Edge, Label, VertexId, Word};

create_exception!(cayley, CayleyException, PyException);
create_exception!(cayley, CapExceeded, CayleyException);

fn err(e: impl std::fmt::Display) -> PyErr {
    CayleyException::new_err(e.to_string())
}

fn cap(e: impl std::fmt::Display) -> PyErr {
    CapExceeded::new_err(e.to_string())
}

fn cayley_err(e: CayleyError) -> PyErr {
    match e {
        CayleyError::SearchCapExceeded { .. } => cap(e),
        other => err(other),
    }
}

fn cycle_err(e: cycles::CycleError) -> PyErr {
    match e {
        cycles::CycleError::UnknownVertex(_) => err(e),
        other => cap(other),
    }
}

fn value_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_bound_py_any(py)?,
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_bound_py_any(py)?,
            None => n.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py)?,
        },
        Value::String(s) => s.into_bound_py_any(py)?,
        Value::Array(xs) => {
            let list = PyList::empty(py);
            for x in xs {
                list.append(value_to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(m) => {
            let dict = PyDict::new(py);
            for (k, x) in m {
                dict.set_item(k, value_to_py(py, x)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_py<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    value_to_py(py, &serde_json::to_value(v).map_err(err)?)
}

fn iso_config(iso_cap: usize) -> IsoConfig {
    IsoConfig { max_vertices: iso_cap }
}

/// A finite labelled directed graph.
#[pyclass(module = "cayley")]
struct Graph {
    inner: cayley_core::LabeledDigraph,
}

#[pymethods]
impl Graph {
    /// `edges` is a list of `(source, label, target)` triples.
    #[new]
    fn new(edges: Vec<(String, String, String)>) -> PyResult<Self> {
        let edges = edges.into_iter().map(|(s, a, t)| Edge::new(s, a, t));
        Ok(Graph {
            inner: cayley_core::LabeledDigraph::from_edges(edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: io::parse_graph(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        io::graph_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        dot::graph_dot(&self.inner)
    }

    fn skeleton_dot(&self) -> String {
        dot::skeleton_dot(&self.inner.skeleton())
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        let mut vs = self.inner.vertices().to_vec();
        vs.sort();
        vs.iter().map(|v| v.as_str().to_owned()).collect()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().iter().map(|l| l.as_str().to_owned()).collect()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String, String)> {
        self.inner
            .edges()
            .into_iter()
            .map(|e| (e.source.as_str().to_owned(), e.label.as_str().to_owned(), e.target.as_str().to_owned()))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.num_vertices()
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph({} vertices, {} edges)", self.inner.num_vertices(), self.inner.num_edges())
    }

    /// Every graph property with witnesses, keyed by property name.
    #[pyo3(signature = (iso_cap = 12))]
    fn check<'py>(&self, py: Python<'py>, iso_cap: usize) -> PyResult<Bound<'py, PyAny>> {
        let cfg = CheckConfig {
            iso: iso_config(iso_cap),
            ..CheckConfig::default()
        };
        to_py(py, &report::check_graph(&self.inner, &cfg))
    }

    fn is_circular<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &cycles::is_circular(&self.inner))
    }

    /// Cycle language at `vertex`.
    fn cycle_language(&self, vertex: &str) -> PyResult<Language> {
        let c = cycles::cycle_language(&self.inner, &VertexId::from(vertex)).map_err(cycle_err)?;
        Ok(Language { inner: c.language })
    }

    /// Words labelling the cycles through `vertex` that repeat no vertex.
    #[pyo3(signature = (vertex, cap = cycles::DEFAULT_CYCLE_CAP))]
    fn elementary_cycles(&self, vertex: &str, cap: usize) -> PyResult<Vec<String>> {
        let e = cycles::elementary_cycles(&self.inner, &VertexId::from(vertex), cap).map_err(cycle_err)?;
        Ok(e.words.iter().map(Word::render).collect())
    }

    #[pyo3(signature = (iso_cap = 12))]
    fn is_vertex_transitive<'py>(&self, py: Python<'py>, iso_cap: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &cycles::is_vertex_transitive(&self.inner, &iso_config(iso_cap)).map_err(cycle_err)?)
    }

    fn is_cayley<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &core_cayley::recognize_cayley(&self.inner).map_err(cayley_err)?)
    }

    fn is_weak_cayley<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &core_cayley::recognize_weak_cayley(&self.inner).map_err(cayley_err)?)
    }

    fn is_generalized_cayley<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &core_cayley::recognize_generalized_cayley(&self.inner).map_err(cayley_err)?)
    }

    /// The group read off the graph from `root`, as a certificate dict.
    fn reconstruct<'py>(&self, py: Python<'py>, root: &str) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &core_cayley::reconstruct_group(&self.inner, &VertexId::from(root)).map_err(cayley_err)?)
    }

    fn pipeline<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &report::pipeline(&self.inner))
    }

    /// An isomorphism onto `other` as a vertex map, or `None`.
    #[pyo3(signature = (other, iso_cap = 12))]
    fn isomorphism(&self, other: &Graph, iso_cap: usize) -> PyResult<Option<Vec<(String, String)>>> {
        let w = automata::graph_iso(&self.inner, &other.inner, &iso_config(iso_cap)).map_err(|e| match e {
            automata::AutomataError::SearchCapExceeded { .. } => cap(e),
            other => err(other),
        })?;
        Ok(w.map(|w| w.map.iter().map(|(a, b)| (a.as_str().to_owned(), b.as_str().to_owned())).collect()))
    }
}

/// An automaton: a graph with initial and final vertices.
#[pyclass(module = "cayley")]
struct Automaton {
    inner: automata::Automaton,
}

#[pymethods]
impl Automaton {
    #[new]
    fn new(edges: Vec<(String, String, String)>, initial: Vec<String>, finals: Vec<String>) -> PyResult<Self> {
        let g = Graph::new(edges)?.inner;
        let a = automata::Automaton::new(
            &g,
            initial.into_iter().map(VertexId::new),
            finals.into_iter().map(VertexId::new),
        )
        .map_err(err)?;
        Ok(Automaton { inner: a })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Automaton {
            inner: io::parse_automaton(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        io::automaton_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        dot::automaton_dot(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.num_states()
    }

    fn __repr__(&self) -> String {
        format!("Automaton({} states)", self.inner.num_states())
    }

    fn accepts(&self, word: &str) -> PyResult<bool> {
        let w = Word::parse(word, self.inner.labels()).map_err(err)?;
        Ok(self.inner.recognizes(&w))
    }

    fn determinize(&self) -> Automaton {
        Automaton {
            inner: automata::determinize(&self.inner),
        }
    }

    fn co_determinize(&self) -> Automaton {
        Automaton {
            inner: automata::co_determinize(&self.inner),
        }
    }

    fn brzozowski(&self) -> Automaton {
        Automaton {
            inner: automata::brzozowski(&self.inner),
        }
    }

    /// Quotient by the greatest bisimulation.
    fn minimize(&self) -> Automaton {
        Automaton {
            inner: automata::minimize(&self.inner),
        }
    }

    #[getter]
    fn is_deterministic(&self) -> bool {
        self.inner.is_deterministic()
    }

    #[getter]
    fn is_co_deterministic(&self) -> bool {
        self.inner.is_co_deterministic()
    }

    fn language(&self) -> Language {
        Language {
            inner: self.inner.to_dfa(&[]),
        }
    }

    #[pyo3(signature = (other, iso_cap = 12))]
    fn is_isomorphic(&self, other: &Automaton, iso_cap: usize) -> PyResult<bool> {
        let w = automata::iso(&self.inner, &other.inner, &iso_config(iso_cap)).map_err(|e| match e {
            automata::AutomataError::SearchCapExceeded { .. } => cap(e),
            other => err(other),
        })?;
        Ok(w.is_some())
    }
}

/// A regular language, held as a complete DFA.
#[pyclass(module = "cayley")]
struct Language {
    inner: cayley_core::Dfa,
}

#[pymethods]
impl Language {
    /// Reads a DFA file or an automaton file.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Language {
            inner: io::parse_language(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        io::dfa_json(&self.inner)
    }

    #[getter]
    fn alphabet(&self) -> Vec<String> {
        self.inner.alphabet().iter().map(|l| l.as_str().to_owned()).collect()
    }

    fn __contains__(&self, word: &str) -> PyResult<bool> {
        let w = Word::parse(word, self.inner.alphabet()).map_err(err)?;
        Ok(self.inner.accepts(&w))
    }

    /// Accepted words up to `max_len`, in shortlex order.
    fn words(&self, max_len: usize) -> Vec<String> {
        self.inner.words_up_to(max_len).iter().map(Word::render).collect()
    }

    /// `None` when equal, else the shortlex-least word in exactly one.
    fn difference(&self, other: &Language) -> Option<String> {
        self.inner.distinguishing_word(&other.inner).map(|w| w.render())
    }

    fn __eq__(&self, other: &Language) -> bool {
        self.inner.equivalent(&other.inner)
    }

    fn canonical(&self) -> PyResult<Automaton> {
        Ok(Automaton {
            inner: automata::canonical(&self.inner).map_err(err)?,
        })
    }

    fn is_stable<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &lang::is_stable(&self.inner).map_err(err)?)
    }

    fn is_conjugacy_closed<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &lang::is_conjugacy_closed(&self.inner))
    }

    fn presentation_conditions<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &lang::presentation_conditions(&self.inner).map_err(err)?)
    }
}

/// A monoid presentation by relators equal to the identity.
#[pyclass(module = "cayley")]
struct Presentation {
    inner: presentations::Presentation,
}

#[pymethods]
impl Presentation {
    /// Relators are strings; without `alphabet`, one letter per character.
    #[new]
    #[pyo3(signature = (relators, alphabet = None))]
    fn new(relators: Vec<String>, alphabet: Option<Vec<String>>) -> PyResult<Self> {
        let inner = match alphabet {
            None => {
                let rs: Vec<&str> = relators.iter().map(String::as_str).collect();
                presentations::Presentation::from_relators(&rs).map_err(err)?
            }
            Some(alphabet) => {
                let mut alphabet: Vec<Label> = alphabet.into_iter().map(Label::new).collect();
                alphabet.sort();
                let words = relators
                    .iter()
                    .map(|r| Word::parse(r, &alphabet))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                presentations::Presentation::new(alphabet.into_iter().collect(), words).map_err(err)?
            }
        };
        Ok(Presentation { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Presentation {
            inner: io::parse_presentation(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        io::presentation_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        let rs: Vec<String> = self.inner.relators().iter().map(Word::render).collect();
        format!("Presentation({rs:?})")
    }

    /// Raises `CapExceeded` when enumeration does not close within
    /// `max_cosets`.
    #[pyo3(signature = (max_cosets = presentations::DEFAULT_MAX_COSETS))]
    fn cayley_graph(&self, max_cosets: usize) -> PyResult<Graph> {
        match presentations::cayley_of_presentation(&self.inner, max_cosets).map_err(err)? {
            Quotient::Closed(g) => Ok(Graph { inner: g }),
            Quotient::Overflow { cosets } => Err(cap(format!("enumeration passed {cosets} cosets without closing"))),
        }
    }

    #[pyo3(signature = (radius, max_cosets = presentations::DEFAULT_MAX_COSETS))]
    fn ball<'py>(&self, py: Python<'py>, radius: usize, max_cosets: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &presentations::cayley_ball(&self.inner, radius, max_cosets))
    }

    /// A rewriting trace from `source` to `target`, or `None` if none was
    /// found within the bounds.
    #[pyo3(signature = (source, target, max_len = presentations::DEFAULT_MAX_LEN, max_steps = presentations::DEFAULT_MAX_STEPS))]
    fn thue<'py>(
        &self,
        py: Python<'py>,
        source: &str,
        target: &str,
        max_len: usize,
        max_steps: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let alphabet: Vec<Label> = self.inner.alphabet().iter().cloned().collect();
        let from = Word::parse(source, &alphabet).map_err(err)?;
        let to = Word::parse(target, &alphabet).map_err(err)?;
        to_py(py, &presentations::thue_reachable(&self.inner, &from, &to, max_len, max_steps))
    }

    /// Words up to `max_len` that rewrite to the empty word within that length.
    fn bounded_class(&self, max_len: usize) -> Vec<String> {
        presentations::bounded_class(&self.inner, max_len).iter().map(Word::render).collect()
    }
}

/// Cayley graph of a group file (table plus labelled generating subset).
#[pyfunction]
fn cayley_from_group(text: &str) -> PyResult<Graph> {
    let spec = io::parse_group(text).map_err(err)?;
    let labeling = spec
        .labeling
        .ok_or_else(|| err("group file has no \"subset\" or \"labels\""))?;
    Ok(Graph {
        inner: core_cayley::cayley_from_group(&spec.table, &labeling).map_err(cayley_err)?,
    })
}

#[pyfunction]
fn fixture_names() -> Vec<String> {
    fixtures::corpus().into_iter().map(|f| f.name).collect()
}

/// A built-in fixture: a `Graph`, `Automaton` or `Presentation`, or the
/// JSON text of a group table.
#[pyfunction]
fn fixture<'py>(py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyAny>> {
    let f = fixtures::find(name).ok_or_else(|| err(format!("no fixture named {name}")))?;
    match f.payload {
        Payload::Graph(g) => Graph { inner: g }.into_bound_py_any(py),
        Payload::Automaton(a) => Automaton { inner: a }.into_bound_py_any(py),
        Payload::Presentation(p) => Presentation { inner: p }.into_bound_py_any(py),
        Payload::Group(t) => io::group_json(&io::GroupSpec { table: t, labeling: None }).into_bound_py_any(py),
    }
}

#[pymodule]
fn cayley(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Automaton>()?;
    m.add_class::<Language>()?;
    m.add_class::<Presentation>()?;
    m.add_function(wrap_pyfunction!(cayley_from_group, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add("CayleyException", m.py().get_type::<CayleyException>())?;
    m.add("CapExceeded", m.py().get_type::<CapExceeded>())?;
    Ok(())
}
