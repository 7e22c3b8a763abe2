//! Whole-graph property reports and the step-by-step Cayley recognition
//! pipeline.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::automata::IsoConfig;
use crate::cayley::{
    cayley_from_group, recognize_cayley, recognize_generalized_cayley, recognize_weak_cayley, reconstruct_group,
    verify_group, CayleyCertificate, CayleyError,
};
use crate::cycles::{common_cycle_language, is_circular, is_edge_transitive, is_elementary_circular, is_vertex_transitive};
use crate::fixtures::{Fixture, Payload};
use crate::graph::LabeledDigraph;
use crate::lang::{is_stable, presentation_conditions};
use crate::presentations::{cayley_of_presentation, todd_coxeter};
use crate::witness::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub iso: IsoConfig,
    pub cycle_cap: usize,
    pub max_cosets: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            iso: IsoConfig::default(),
            cycle_cap: crate::cycles::DEFAULT_CYCLE_CAP,
            max_cosets: crate::presentations::DEFAULT_MAX_COSETS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl PropertyResult {
    fn from_check(r: Result<(), Witness>) -> Self {
        PropertyResult {
            holds: r.is_ok(),
            witness: r.err(),
        }
    }

    fn of(holds: bool, witness: Option<Witness>) -> Self {
        PropertyResult { holds, witness }
    }
}

/// Every graph predicate, with a witness for each failure. Predicates whose
/// search hit a cap are listed under `skipped` with the reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct PropertyReport {
    pub properties: BTreeMap<&'static str, PropertyResult>,
    pub skipped: BTreeMap<&'static str, String>,
}

impl PropertyReport {
    pub fn get(&self, name: &str) -> Option<bool> {
        self.properties.get(name).map(|r| r.holds)
    }

    fn put(&mut self, name: &'static str, r: PropertyResult) {
        self.properties.insert(name, r);
    }

    fn put_or_skip<E: std::fmt::Display>(&mut self, name: &'static str, r: Result<PropertyResult, E>) {
        match r {
            Ok(r) => self.put(name, r),
            Err(e) => {
                self.skipped.insert(name, e.to_string());
            }
        }
    }
}

pub fn check_graph(g: &LabeledDigraph, cfg: &CheckConfig) -> PropertyReport {
    let mut r = PropertyReport::default();
    r.put("simple", PropertyResult::from_check(g.check_simple()));
    r.put("deterministic", PropertyResult::from_check(g.check_deterministic()));
    r.put("co_deterministic", PropertyResult::from_check(g.check_co_deterministic()));
    r.put("source_complete", PropertyResult::from_check(g.check_source_complete()));
    r.put("co_complete", PropertyResult::from_check(g.check_co_complete()));
    r.put("rooted", PropertyResult::from_check(g.check_rooted()));
    r.put("strongly_connected", PropertyResult::from_check(g.check_strongly_connected()));
    r.put("connected", PropertyResult::from_check(g.check_connected()));
    let c = is_circular(g);
    r.put("circular", PropertyResult::of(c.circular, c.witness));
    r.put_or_skip(
        "elementary_circular",
        is_elementary_circular(g, cfg.cycle_cap).map(|e| PropertyResult::of(e.circular, e.witness)),
    );
    r.put_or_skip(
        "vertex_transitive",
        is_vertex_transitive(g, &cfg.iso).map(|v| PropertyResult::of(v.transitive, v.witness)),
    );
    r.put_or_skip(
        "edge_transitive",
        is_edge_transitive(g, &cfg.iso).map(|v| PropertyResult::of(v.transitive, v.witness)),
    );
    let verdict = |v: Result<crate::cayley::Verdict, CayleyError>| {
        v.map(|v| PropertyResult::of(v.accepted, v.failure.map(|f| f.witness)))
    };
    r.put_or_skip("cayley", verdict(recognize_cayley(g)));
    r.put_or_skip("weak_cayley", verdict(recognize_weak_cayley(g)));
    r.put_or_skip("generalized_cayley", verdict(recognize_generalized_cayley(g)));
    r
}

/// Property values of any fixture payload, keyed like
/// [`Fixture::expected`].
pub fn evaluate(f: &Fixture, cfg: &CheckConfig) -> BTreeMap<String, bool> {
    match &f.payload {
        Payload::Graph(g) => check_graph(g, cfg)
            .properties
            .into_iter()
            .map(|(k, v)| (k.to_owned(), v.holds))
            .collect(),
        Payload::Automaton(a) => BTreeMap::from([
            ("deterministic".to_owned(), a.is_deterministic()),
            ("co_deterministic".to_owned(), a.is_co_deterministic()),
            ("reduced".to_owned(), a.is_reduced()),
        ]),
        Payload::Group(t) => BTreeMap::from([
            ("group".to_owned(), verify_group(t).valid),
            ("abelian".to_owned(), t.is_abelian()),
        ]),
        Payload::Presentation(p) => {
            let closes = !todd_coxeter(p, cfg.max_cosets).is_overflow();
            let mut m = BTreeMap::from([("closes".to_owned(), closes)]);
            if closes {
                m.insert(
                    "presents_group".to_owned(),
                    cayley_of_presentation(p, cfg.max_cosets).is_ok(),
                );
            }
            m
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// The recognition argument instantiated on one graph: each step's
/// hypothesis comes from the steps before it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pipeline {
    pub steps: Vec<Step>,
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CayleyCertificate>,
}

/// Runs, stopping at the first failure:
///
/// 1. `simple`, `deterministic`, `rooted`;
/// 2. `strongly_connected` (a rooted vertex-transitive graph is);
/// 3. `circular` (vertex transitivity on such graphs);
/// 4. `co_deterministic` (a deterministic strongly connected circular
///    graph is);
/// 5. `cycle_language_presents_group`: the common cycle language meets
///    the three presentation conditions;
/// 6. `cycle_language_stable`: it is the class of `ε` under its own
///    rewriting;
/// 7. `group_reconstructed`: the quotient, read off the graph, is a group;
/// 8. `cayley_graph_matches`: its Cayley graph is the input graph.
pub fn pipeline(g: &LabeledDigraph) -> Pipeline {
    let mut steps = Vec::new();
    let mut push = |name: &'static str, passed: bool, detail: Option<String>| {
        steps.push(Step { name, passed, detail });
        passed
    };
    let mut certificate = None;
    let accepted = {
        let w = |r: Result<(), Witness>| r.err().map(|w| w.to_string());
        push("simple", g.is_simple(), w(g.check_simple()))
            && push("deterministic", g.is_deterministic(), w(g.check_deterministic()))
            && push("rooted", g.is_rooted(), w(g.check_rooted()))
            && push("strongly_connected", g.is_strongly_connected(), w(g.check_strongly_connected()))
            && {
                let c = is_circular(g);
                push("circular", c.circular, c.witness.map(|w| w.to_string()))
            }
            && push("co_deterministic", g.is_co_deterministic(), w(g.check_co_deterministic()))
            && {
                let l = common_cycle_language(g).expect("circular");
                match presentation_conditions(&l) {
                    Ok(v) => push(
                        "cycle_language_presents_group",
                        v.holds(),
                        (!v.holds()).then(|| format!("{v:?}")),
                    ),
                    Err(e) => push("cycle_language_presents_group", false, Some(e.to_string())),
                }
            }
            && {
                let l = common_cycle_language(g).expect("circular");
                match is_stable(&l) {
                    Ok(v) => push(
                        "cycle_language_stable",
                        v.stable,
                        v.witness.map(|w| format!("{w:?}")),
                    ),
                    Err(e) => push("cycle_language_stable", false, Some(e.to_string())),
                }
            }
            && match reconstruct_group(g, g.vertex(0)) {
                Ok(c) => {
                    let valid = verify_group(&c.group).valid;
                    let ok = push("group_reconstructed", valid, None);
                    let matches = cayley_from_group(&c.group, &c.labeling).map(|h| h == *g).unwrap_or(false);
                    certificate = Some(c);
                    ok && push("cayley_graph_matches", matches, None)
                }
                Err(e) => push("group_reconstructed", false, Some(e.to_string())),
            }
    };
    Pipeline {
        steps,
        accepted,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cycle, doubled_triangle, even, petersen};

    #[test]
    fn even_passes_every_step() {
        let p = pipeline(&even());
        assert!(p.accepted);
        assert_eq!(p.steps.len(), 10);
        assert_eq!(p.certificate.unwrap().group.order(), 2);
    }

    #[test]
    fn petersen_stops_at_circularity() {
        let p = pipeline(&petersen());
        assert!(!p.accepted);
        let last = p.steps.last().unwrap();
        assert_eq!(last.name, "circular");
        assert!(!last.passed);
    }

    #[test]
    fn six_cycle_certificate() {
        let p = pipeline(&cycle(6, "v"));
        assert!(p.accepted);
        let c = p.certificate.unwrap();
        assert_eq!(c.group.order(), 6);
        assert!(c.group.is_abelian());
    }

    #[test]
    fn triangle_report() {
        let r = check_graph(&doubled_triangle(), &CheckConfig::default());
        assert_eq!(r.get("deterministic"), Some(false));
        assert_eq!(r.get("vertex_transitive"), Some(true));
        assert!(r.skipped.is_empty());
    }
}
