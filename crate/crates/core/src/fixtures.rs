//! Named example graphs, automata, groups and presentations, each with the
//! property values it is known to have. The test suite re-checks every
//! expectation.

use std::collections::{BTreeMap, BTreeSet};

use crate::automata::Automaton;
use crate::cayley::groups::small_groups;
use crate::cayley::{Action, GroupTable};
use crate::graph::LabeledDigraph;
use crate::ids::{Edge, VertexId};
use crate::presentations::Presentation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Graph(LabeledDigraph),
    Automaton(Automaton),
    Group(GroupTable),
    Presentation(Presentation),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Graph(_) => "graph",
            Payload::Automaton(_) => "automaton",
            Payload::Group(_) => "group",
            Payload::Presentation(_) => "presentation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub payload: Payload,
    pub expected: BTreeMap<&'static str, bool>,
}

fn fixture(name: &str, payload: Payload, expected: &[(&'static str, bool)]) -> Fixture {
    Fixture {
        name: name.to_owned(),
        payload,
        expected: expected.iter().copied().collect(),
    }
}

fn graph(triples: &[(&str, &str, &str)]) -> LabeledDigraph {
    LabeledDigraph::from_triples(triples.iter().copied()).expect("fixture graphs are well formed")
}

/// `p -a-> q -a-> p` with a `b`-loop on both: the cycle language at `p` is
/// the words with an even number of `a`.
pub fn even() -> LabeledDigraph {
    graph(&[("p", "a", "q"), ("p", "b", "p"), ("q", "a", "p"), ("q", "b", "q")])
}

/// A deterministic, source-complete labelling of the Petersen graph on
/// `1..=10`: outer cycle `1 2 3 4 5`, inner pentagram `6 8 10 7 9`, spokes
/// `k -- k+5`. Vertices `1` and `2` have different cycle languages, first
/// told apart by `ababa`.
pub fn petersen() -> LabeledDigraph {
    let out: [(usize, usize); 10] = [(2, 5), (1, 3), (8, 4), (3, 9), (4, 10), (1, 8), (2, 9), (10, 6), (7, 6), (8, 7)];
    let edges = out.iter().enumerate().flat_map(|(v, &(a, b))| {
        let s = VertexId::new((v + 1).to_string());
        [
            Edge::new(s.clone(), "a", VertexId::new(a.to_string())),
            Edge::new(s, "b", VertexId::new(b.to_string())),
        ]
    });
    LabeledDigraph::from_edges(edges).expect("fixture graphs are well formed")
}

/// Triangle with both directions of every side labelled `a`.
pub fn doubled_triangle() -> LabeledDigraph {
    graph(&[
        ("0", "a", "1"),
        ("0", "a", "2"),
        ("1", "a", "0"),
        ("1", "a", "2"),
        ("2", "a", "0"),
        ("2", "a", "1"),
    ])
}

/// The free transitive action of `Z_3` on [`doubled_triangle`] by
/// rotation.
pub fn triangle_rotation() -> Action {
    let perms: Vec<(VertexId, Vec<usize>)> = (0..3)
        .map(|k| (VertexId::new(k.to_string()), (0..3).map(|s| (s + k) % 3).collect()))
        .collect();
    Action::from_permutations(["0", "1", "2"].map(VertexId::from).to_vec(), &perms).expect("rotations form a group")
}

/// Three vertices whose cycle language at `0` is `((a+b)c)*`.
pub fn abc_graph() -> LabeledDigraph {
    graph(&[("0", "a", "1"), ("0", "b", "2"), ("1", "c", "0"), ("2", "c", "0")])
}

pub fn abc_automaton() -> Automaton {
    Automaton::new(&abc_graph(), [VertexId::from("0")], [VertexId::from("0")]).expect("vertex 0 exists")
}

/// A `a`-loop on each of three vertices plus `1 → 2 → 1`, `2 → 3 → 1`:
/// circular (every cycle language is `a*`) but the elementary cycles
/// differ between vertices.
pub fn loops_graph() -> LabeledDigraph {
    graph(&[
        ("1", "a", "1"),
        ("2", "a", "2"),
        ("3", "a", "3"),
        ("1", "a", "2"),
        ("2", "a", "1"),
        ("2", "a", "3"),
        ("3", "a", "1"),
    ])
}

/// Two disjoint edges `1 -- 2`, `3 -- 4`, both ways, labelled `#`.
pub fn two_edges() -> LabeledDigraph {
    graph(&[("1", "#", "2"), ("2", "#", "1"), ("3", "#", "4"), ("4", "#", "3")])
}

/// The Klein four-group `{(), (12)(34), (13)(24), (14)(23)}` acting on
/// [`two_edges`].
pub fn klein_action() -> Action {
    let perms = [
        ("()", [0, 1, 2, 3]),
        ("(12)(34)", [1, 0, 3, 2]),
        ("(13)(24)", [2, 3, 0, 1]),
        ("(14)(23)", [3, 2, 1, 0]),
    ]
    .map(|(n, p)| (VertexId::from(n), p.to_vec()));
    Action::from_permutations(["1", "2", "3", "4"].map(VertexId::from).to_vec(), &perms).expect("Klein group")
}

/// An `a`-cycle on `prefix0 .. prefix{n-1}`.
pub fn cycle(n: usize, prefix: &str) -> LabeledDigraph {
    let name = |i: usize| VertexId::new(format!("{prefix}{}", i % n));
    LabeledDigraph::from_edges((0..n).map(|i| Edge::new(name(i), "a", name(i + 1)))).expect("n > 0")
}

/// Two vertices joined both ways by an `a` and a `b` edge.
pub fn doubled_pair() -> LabeledDigraph {
    graph(&[("s", "a", "t"), ("s", "b", "t"), ("t", "a", "s"), ("t", "b", "s")])
}

pub fn presentation(relators: &[&str]) -> Presentation {
    Presentation::from_relators(relators).expect("fixture relators are non-empty")
}

/// Every fixture with its expected property values.
pub fn corpus() -> Vec<Fixture> {
    use Payload::*;
    let mut all = vec![
        fixture(
            "even",
            Graph(even()),
            &[
                ("simple", true),
                ("deterministic", true),
                ("co_deterministic", true),
                ("source_complete", true),
                ("co_complete", true),
                ("rooted", true),
                ("strongly_connected", true),
                ("connected", true),
                ("circular", true),
                ("elementary_circular", true),
                ("vertex_transitive", true),
                ("edge_transitive", true),
                ("cayley", true),
                ("weak_cayley", true),
                ("generalized_cayley", true),
            ],
        ),
        fixture(
            "petersen",
            Graph(petersen()),
            &[
                ("simple", true),
                ("deterministic", true),
                ("co_deterministic", false),
                ("source_complete", true),
                ("strongly_connected", true),
                ("circular", false),
                ("elementary_circular", false),
                ("vertex_transitive", false),
                ("edge_transitive", false),
                ("cayley", false),
                ("weak_cayley", false),
                ("generalized_cayley", false),
            ],
        ),
        fixture(
            "doubled_triangle",
            Graph(doubled_triangle()),
            &[
                ("simple", true),
                ("deterministic", false),
                ("co_deterministic", false),
                ("strongly_connected", true),
                ("circular", true),
                ("elementary_circular", true),
                ("vertex_transitive", true),
                ("edge_transitive", true),
                ("cayley", false),
                ("generalized_cayley", false),
            ],
        ),
        fixture(
            "abc",
            Graph(abc_graph()),
            &[
                ("simple", true),
                ("deterministic", true),
                ("co_deterministic", false),
                ("source_complete", false),
                ("strongly_connected", true),
                ("circular", false),
                ("elementary_circular", false),
                ("vertex_transitive", false),
                ("cayley", false),
            ],
        ),
        fixture(
            "loops",
            Graph(loops_graph()),
            &[
                ("simple", true),
                ("deterministic", false),
                ("strongly_connected", true),
                ("circular", true),
                ("elementary_circular", false),
                ("vertex_transitive", false),
                ("cayley", false),
            ],
        ),
        fixture(
            "two_edges",
            Graph(two_edges()),
            &[
                ("simple", true),
                ("deterministic", true),
                ("co_deterministic", true),
                ("rooted", false),
                ("connected", false),
                ("circular", true),
                ("vertex_transitive", true),
                ("cayley", false),
                ("weak_cayley", false),
                ("generalized_cayley", true),
            ],
        ),
        fixture(
            "six_cycle",
            Graph(cycle(6, "v")),
            &[
                ("simple", true),
                ("deterministic", true),
                ("co_deterministic", true),
                ("strongly_connected", true),
                ("circular", true),
                ("elementary_circular", true),
                ("vertex_transitive", true),
                ("edge_transitive", true),
                ("cayley", true),
                ("weak_cayley", true),
                ("generalized_cayley", true),
            ],
        ),
        fixture(
            "three_four_cycles",
            Graph(cycle(4, "a").union(&cycle(4, "b")).union(&cycle(4, "c"))),
            &[
                ("connected", false),
                ("circular", true),
                ("vertex_transitive", true),
                ("cayley", false),
                ("weak_cayley", false),
                ("generalized_cayley", true),
            ],
        ),
        fixture(
            "four_and_six_cycles",
            Graph(cycle(4, "a").union(&cycle(6, "b"))),
            &[
                ("deterministic", true),
                ("co_deterministic", true),
                ("circular", false),
                ("vertex_transitive", false),
                ("generalized_cayley", false),
            ],
        ),
        fixture(
            "doubled_pair",
            Graph(doubled_pair()),
            &[
                ("simple", false),
                ("deterministic", true),
                ("co_deterministic", true),
                ("strongly_connected", true),
                ("circular", true),
                ("cayley", false),
            ],
        ),
        fixture(
            "single_edge",
            Graph(graph(&[("s", "a", "t")])),
            &[
                ("rooted", true),
                ("connected", true),
                ("strongly_connected", false),
                ("circular", true),
                ("vertex_transitive", false),
                ("cayley", false),
            ],
        ),
        fixture(
            "even_automaton",
            Automaton(crate::automata::Automaton::new(&even(), ["p".into()], ["p".into()]).expect("p exists")),
            &[("deterministic", true), ("co_deterministic", true), ("reduced", true)],
        ),
        fixture(
            "abc_automaton",
            Automaton(abc_automaton()),
            &[("deterministic", true), ("co_deterministic", false), ("reduced", true)],
        ),
        fixture("z6_presentation", Presentation(presentation(&["aaaaaa", "bbb", "aba"])), &[("closes", true), ("presents_group", true)]),
        fixture("triangle_presentation", Presentation(presentation(&["aaaaaa", "bb", "ababab"])), &[("closes", false)]),
        fixture("z2_presentation", Presentation(presentation(&["aa"])), &[("closes", true), ("presents_group", true)]),
        fixture("trivial_presentation", Presentation(presentation(&["a"])), &[("closes", true), ("presents_group", true)]),
        fixture("collapsed_presentation", Presentation(presentation(&["a", "b"])), &[("closes", true), ("presents_group", false)]),
    ];
    let non_abelian: BTreeSet<&str> = ["S3", "D4", "Q8"].into_iter().collect();
    for (name, table) in small_groups() {
        all.push(fixture(
            name,
            Group(table),
            &[("group", true), ("abelian", !non_abelian.contains(name))],
        ));
    }
    all
}

pub fn find(name: &str) -> Option<Fixture> {
    corpus().into_iter().find(|f| f.name == name)
}
