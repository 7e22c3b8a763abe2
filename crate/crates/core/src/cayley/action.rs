//! Left group actions on vertex sets.

use std::collections::BTreeMap;

use serde::Serialize;

use super::group::{GroupError, GroupTable};
use crate::graph::LabeledDigraph;
use crate::ids::{Edge, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("action table is not total: element {element} has {len} images, expected {expected}")]
    NonTotalAction { element: VertexId, len: usize, expected: usize },
    #[error("unknown carrier point {0}")]
    UnknownPoint(VertexId),
}

/// A map `G × V → V`, written `g•s`. The action laws are checked by
/// [`check_action`], not at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    group: GroupTable,
    carrier: Vec<VertexId>,
    /// `map[g][s]` is the index of `g•s` in `carrier`.
    map: Vec<Vec<usize>>,
}

impl Action {
    /// `images[g]` lists `g•s` for the points `s` of `carrier` in order.
    pub fn new(
        group: GroupTable,
        carrier: Vec<VertexId>,
        images: &BTreeMap<VertexId, Vec<VertexId>>,
    ) -> Result<Action, ActionError> {
        let point: BTreeMap<&VertexId, usize> = carrier.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut map = Vec::with_capacity(group.order());
        for g in group.elements() {
            let row = images.get(g).ok_or_else(|| ActionError::NonTotalAction {
                element: g.clone(),
                len: 0,
                expected: carrier.len(),
            })?;
            if row.len() != carrier.len() {
                return Err(ActionError::NonTotalAction {
                    element: g.clone(),
                    len: row.len(),
                    expected: carrier.len(),
                });
            }
            let row = row
                .iter()
                .map(|v| point.get(v).copied().ok_or_else(|| ActionError::UnknownPoint(v.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            map.push(row);
        }
        Ok(Action { group, carrier, map })
    }

    /// The natural action of a permutation group: the group table is built
    /// by composing the permutations, and each acts on `carrier` by position.
    pub fn from_permutations(
        carrier: Vec<VertexId>,
        perms: &[(VertexId, Vec<usize>)],
    ) -> Result<Action, ActionError> {
        let group = GroupTable::from_permutations(perms)?;
        let map = perms.iter().map(|(_, p)| p.clone()).collect();
        if perms.iter().any(|(_, p)| p.len() != carrier.len()) {
            let (name, p) = perms.iter().find(|(_, p)| p.len() != carrier.len()).expect("found above");
            return Err(ActionError::NonTotalAction {
                element: name.clone(),
                len: p.len(),
                expected: carrier.len(),
            });
        }
        Ok(Action { group, carrier, map })
    }

    /// The group acting on itself by left multiplication.
    pub fn left_multiplication(group: &GroupTable) -> Action {
        let n = group.order();
        let map = (0..n).map(|g| (0..n).map(|s| group.mul(g, s)).collect()).collect();
        Action {
            group: group.clone(),
            carrier: group.elements().to_vec(),
            map,
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn carrier(&self) -> &[VertexId] {
        &self.carrier
    }

    /// `g•s` by name.
    pub fn apply(&self, g: &VertexId, s: &VertexId) -> Option<&VertexId> {
        let gi = self.group.index_of(g)?;
        let si = self.carrier.iter().position(|v| v == s)?;
        Some(&self.carrier[self.map[gi][si]])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ActionWitness {
    /// `1•s ≠ s`.
    IdentityMoves { point: VertexId },
    /// `h•(g•s) ≠ (h·g)•s`.
    Composition { h: VertexId, g: VertexId, point: VertexId },
    /// The carrier is not the vertex set of the graph.
    CarrierMismatch { vertex: VertexId },
    /// `g` sends this edge outside the graph.
    EdgeNotPreserved { element: VertexId, edge: Edge },
    /// No element sends `from` to `to`.
    NotTransitive { from: VertexId, to: VertexId },
    /// A non-identity element fixes a point.
    NotFree { element: VertexId, point: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub holds: bool,
    pub witness: Option<ActionWitness>,
}

impl LawResult {
    fn from(witness: Option<ActionWitness>) -> Self {
        LawResult {
            holds: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub is_action: LawResult,
    /// Every `s ↦ g•s` is an automorphism of the graph.
    pub is_morphism: LawResult,
    pub is_transitive: LawResult,
    pub is_free: LawResult,
}

/// Checks each law exhaustively.
pub fn check_action(act: &Action, g: &LabeledDigraph) -> ActionReport {
    let grp = &act.group;
    let n = act.carrier.len();
    let e = grp.identity();
    let point = |s: usize| act.carrier[s].clone();
    let elem = |x: usize| grp.element(x).clone();

    let action_witness = (0..n)
        .find(|&s| act.map[e][s] != s)
        .map(|s| ActionWitness::IdentityMoves { point: point(s) })
        .or_else(|| {
            for h in 0..grp.order() {
                for x in 0..grp.order() {
                    for s in 0..n {
                        if act.map[h][act.map[x][s]] != act.map[grp.mul(h, x)][s] {
                            return Some(ActionWitness::Composition {
                                h: elem(h),
                                g: elem(x),
                                point: point(s),
                            });
                        }
                    }
                }
            }
            None
        });

    let morphism_witness = {
        let on_carrier: BTreeMap<&VertexId, usize> = act.carrier.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mismatch = g
            .vertices()
            .iter()
            .find(|v| !on_carrier.contains_key(v))
            .or_else(|| act.carrier.iter().find(|v| g.vertex_index(v).is_none()))
            .map(|v| ActionWitness::CarrierMismatch { vertex: v.clone() });
        mismatch.or_else(|| {
            for x in 0..grp.order() {
                for edge in g.named_edges() {
                    let image = Edge {
                        source: point(act.map[x][on_carrier[&edge.source]]),
                        label: edge.label.clone(),
                        target: point(act.map[x][on_carrier[&edge.target]]),
                    };
                    if !g.contains_edge(&image) {
                        return Some(ActionWitness::EdgeNotPreserved { element: elem(x), edge });
                    }
                }
            }
            None
        })
    };

    let transitive_witness = (0..n).find_map(|s| {
        let mut hit = vec![false; n];
        for x in 0..grp.order() {
            hit[act.map[x][s]] = true;
        }
        hit.iter().position(|&h| !h).map(|t| ActionWitness::NotTransitive {
            from: point(s),
            to: point(t),
        })
    });

    let free_witness = (0..grp.order()).filter(|&x| x != e).find_map(|x| {
        (0..n).find(|&s| act.map[x][s] == s).map(|s| ActionWitness::NotFree {
            element: elem(x),
            point: point(s),
        })
    });

    ActionReport {
        is_action: LawResult::from(action_witness),
        is_morphism: LawResult::from(morphism_witness),
        is_transitive: LawResult::from(transitive_witness),
        is_free: LawResult::from(free_witness),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::groups::cyclic;

    #[test]
    fn rotation_of_the_doubled_triangle() {
        let g = LabeledDigraph::from_triples([
            ("0", "a", "1"),
            ("0", "a", "2"),
            ("1", "a", "0"),
            ("1", "a", "2"),
            ("2", "a", "0"),
            ("2", "a", "1"),
        ])
        .unwrap();
        let carrier: Vec<VertexId> = ["0", "1", "2"].into_iter().map(VertexId::from).collect();
        let images: BTreeMap<VertexId, Vec<VertexId>> = (0..3)
            .map(|k| {
                let row = (0..3).map(|s| VertexId::new(((s + k) % 3).to_string())).collect();
                (VertexId::new(k.to_string()), row)
            })
            .collect();
        let act = Action::new(cyclic(3), carrier, &images).unwrap();
        let r = check_action(&act, &g);
        assert!(r.is_action.holds && r.is_morphism.holds && r.is_transitive.holds && r.is_free.holds);
    }

    #[test]
    fn trivial_group_is_not_transitive() {
        let g = LabeledDigraph::from_triples([("x", "a", "y")]).unwrap();
        let carrier = vec![VertexId::from("x"), VertexId::from("y")];
        let images = BTreeMap::from([(VertexId::from("0"), carrier.clone())]);
        let act = Action::new(cyclic(1), carrier, &images).unwrap();
        let r = check_action(&act, &g);
        assert!(r.is_action.holds);
        assert!(r.is_free.holds);
        assert_eq!(
            r.is_transitive.witness,
            Some(ActionWitness::NotTransitive { from: "x".into(), to: "y".into() })
        );
    }

    #[test]
    fn broken_action_law() {
        let g = LabeledDigraph::from_triples([("x", "a", "x"), ("y", "a", "y")]).unwrap();
        let carrier = vec![VertexId::from("x"), VertexId::from("y")];
        let images = BTreeMap::from([
            (VertexId::from("0"), vec!["y".into(), "x".into()]),
            (VertexId::from("1"), vec!["y".into(), "x".into()]),
        ]);
        let act = Action::new(cyclic(2), carrier, &images).unwrap();
        let r = check_action(&act, &g);
        assert_eq!(r.is_action.witness, Some(ActionWitness::IdentityMoves { point: "x".into() }));
    }

    #[test]
    fn left_multiplication_is_free_and_transitive() {
        let z4 = cyclic(4);
        let act = Action::left_multiplication(&z4);
        let g = crate::cayley::cayley_from_group(&z4, &BTreeMap::from([(VertexId::from("1"), "a".into())])).unwrap();
        let r = check_action(&act, &g);
        assert!(r.is_action.holds && r.is_morphism.holds && r.is_transitive.holds && r.is_free.holds);
    }
}
