//! Cayley graphs of finite groups: construction, recognition with group
//! reconstruction, and group actions.

mod action;
mod group;
pub mod groups;
mod recognize;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

pub use action::{check_action, Action, ActionError, ActionReport, ActionWitness, LawResult};
pub use group::{verify_group, GroupCheck, GroupError, GroupTable, GroupWitness};
pub use recognize::{
    complete_weak, inv_labels, reconstruct_group, recognize_cayley, recognize_cayley_finite,
    recognize_generalized_cayley, recognize_weak_cayley, INVERSE_SUFFIX,
};

use crate::automata::IsoWitness;
use crate::graph::LabeledDigraph;
use crate::ids::{Edge, Label, VertexId};
use crate::witness::Witness;

/// Injective coding of a generating subset by labels.
pub type Labeling = BTreeMap<VertexId, Label>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CayleyError {
    #[error("the generating subset is empty")]
    EmptySubset,
    #[error("label {0} codes two elements")]
    NonInjectiveLabeling(Label),
    #[error("unknown group element {0}")]
    UnknownElement(VertexId),
    #[error("precondition {property} fails: {witness}")]
    PreconditionViolated { property: Property, witness: Witness },
    #[error("label {0} already exists, cannot add it as an inverse label")]
    LabelCollision(Label),
    #[error("isomorphism search over {vertices} vertices exceeds the cap of {cap}")]
    SearchCapExceeded { vertices: usize, cap: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<crate::cycles::CycleError> for CayleyError {
    fn from(e: crate::cycles::CycleError) -> Self {
        match e {
            crate::cycles::CycleError::SearchCapExceeded { vertices, cap } => {
                CayleyError::SearchCapExceeded { vertices, cap }
            }
            other => CayleyError::Internal(other.to_string()),
        }
    }
}

impl From<crate::automata::AutomataError> for CayleyError {
    fn from(e: crate::automata::AutomataError) -> Self {
        match e {
            crate::automata::AutomataError::SearchCapExceeded { vertices, cap } => {
                CayleyError::SearchCapExceeded { vertices, cap }
            }
            other => CayleyError::Internal(other.to_string()),
        }
    }
}

/// `C⟦G,H⟧ = { g -⟦h⟧-> g·h | g ∈ G, h ∈ H }`, with `H` the domain of
/// `labeling`.
pub fn cayley_from_group(group: &GroupTable, labeling: &Labeling) -> Result<LabeledDigraph, CayleyError> {
    if labeling.is_empty() {
        return Err(CayleyError::EmptySubset);
    }
    let mut used = BTreeSet::new();
    let mut gens = Vec::with_capacity(labeling.len());
    for (h, label) in labeling {
        let hi = group.index_of(h).ok_or_else(|| CayleyError::UnknownElement(h.clone()))?;
        if !used.insert(label) {
            return Err(CayleyError::NonInjectiveLabeling(label.clone()));
        }
        gens.push((hi, label));
    }
    let edges: Vec<Edge> = (0..group.order())
        .flat_map(|g| {
            gens.iter().map(move |&(h, label)| Edge {
                source: group.element(g).clone(),
                label: label.clone(),
                target: group.element(group.mul(g, h)).clone(),
            })
        })
        .collect();
    Ok(LabeledDigraph::from_edges(edges).expect("one edge per element and generator"))
}

/// A group, a labelled generating subset and a root, such that the Cayley
/// graph of the group is exactly the recognized graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyCertificate {
    pub group: GroupTable,
    pub subset: BTreeSet<VertexId>,
    pub labeling: Labeling,
    pub root: VertexId,
}

impl CayleyCertificate {
    pub fn regenerate(&self) -> Result<LabeledDigraph, CayleyError> {
        cayley_from_group(&self.group, &self.labeling)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Simple,
    Deterministic,
    CoDeterministic,
    Rooted,
    StronglyConnected,
    Connected,
    Circular,
    VertexTransitive,
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Property::Simple => "simple",
            Property::Deterministic => "deterministic",
            Property::CoDeterministic => "co_deterministic",
            Property::Rooted => "rooted",
            Property::StronglyConnected => "strongly_connected",
            Property::Connected => "connected",
            Property::Circular => "circular",
            Property::VertexTransitive => "vertex_transitive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: Property,
    pub witness: Witness,
}

/// How a disconnected graph was assembled from copies of one component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assembly {
    /// The component of the smallest vertex.
    pub representative: LabeledDigraph,
    /// Isomorphisms from the representative onto each component, in order
    /// of smallest vertex. The element `(x, j)` of the product group is the
    /// vertex `isomorphisms[j](x)`.
    pub isomorphisms: Vec<IsoWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub accepted: bool,
    pub certificate: Option<CayleyCertificate>,
    pub failure: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assembly: Option<Assembly>,
}

impl Verdict {
    pub(crate) fn accept(certificate: CayleyCertificate) -> Verdict {
        Verdict {
            accepted: true,
            certificate: Some(certificate),
            failure: None,
            assembly: None,
        }
    }

    pub(crate) fn reject(property: Property, witness: Witness) -> Verdict {
        Verdict {
            accepted: false,
            certificate: None,
            failure: Some(Failure { property, witness }),
            assembly: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::groups::{cyclic, klein};

    fn lab(pairs: &[(&str, &str)]) -> Labeling {
        pairs.iter().map(|&(h, l)| (VertexId::from(h), Label::from(l))).collect()
    }

    #[test]
    fn order_two() {
        let g = cayley_from_group(&cyclic(2), &lab(&[("1", "a")])).unwrap();
        let expected: BTreeSet<Edge> = [Edge::new("0", "a", "1"), Edge::new("1", "a", "0")].into_iter().collect();
        assert_eq!(g.edges(), expected);
    }

    #[test]
    fn six_cycle() {
        let g = cayley_from_group(&cyclic(6), &lab(&[("1", "a")])).unwrap();
        assert_eq!(g.num_edges(), 6);
        assert!(g.is_strongly_connected());
        assert!(g.is_deterministic() && g.is_co_deterministic() && g.is_simple());
        let not_generating = cayley_from_group(&cyclic(6), &lab(&[("2", "a")])).unwrap();
        assert!(!not_generating.is_strongly_connected());
    }

    #[test]
    fn klein_square() {
        let g = cayley_from_group(&klein(), &lab(&[("0.1", "a"), ("1.0", "b")])).unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert!(g.is_deterministic() && g.is_co_deterministic());
        let vt = crate::cycles::is_vertex_transitive(&g, &Default::default()).unwrap();
        assert!(vt.transitive);
    }

    #[test]
    fn labeling_errors() {
        assert_eq!(cayley_from_group(&cyclic(3), &Labeling::new()), Err(CayleyError::EmptySubset));
        assert_eq!(
            cayley_from_group(&cyclic(3), &lab(&[("1", "a"), ("2", "a")])),
            Err(CayleyError::NonInjectiveLabeling("a".into()))
        );
        assert_eq!(
            cayley_from_group(&cyclic(3), &lab(&[("7", "a")])),
            Err(CayleyError::UnknownElement("7".into()))
        );
    }
}
