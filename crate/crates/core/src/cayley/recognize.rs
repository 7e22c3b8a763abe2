//! Recognizers for Cayley graphs and their weak and generalized variants.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::group::{verify_group, GroupTable};
use super::groups::cyclic;
use super::{Assembly, CayleyCertificate, CayleyError, Labeling, Property, Verdict};
use crate::automata::{anchored_iso, IsoConfig, IsoWitness};
use crate::cycles::{common_cycle_language, is_circular, is_vertex_transitive};
use crate::graph::LabeledDigraph;
use crate::ids::{Edge, Label, VertexId, Word};
use crate::witness::Witness;

/// Suffix of the labels added by [`complete_weak`].
pub const INVERSE_SUFFIX: &str = "~inv";

/// Largest graph on which products are re-derived from alternative words.
const ALT_WORD_CHECK_LIMIT: usize = 64;

fn precondition(result: Result<(), Witness>, property: Property) -> Result<(), CayleyError> {
    result.map_err(|witness| CayleyError::PreconditionViolated { property, witness })
}

fn circularity(g: &LabeledDigraph) -> Result<(), Witness> {
    match is_circular(g).witness {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// Shortlex-least word from `root` to every vertex, as label indices.
fn access_words(g: &LabeledDigraph, root: usize) -> Vec<Option<Vec<usize>>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; g.num_vertices()];
    words[root] = Some(Vec::new());
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(a, t) in g.out(v) {
            if words[t].is_none() {
                let mut w = words[v].clone().expect("visited");
                w.push(a);
                words[t] = Some(w);
                queue.push_back(t);
            }
        }
    }
    words
}

fn walk(g: &LabeledDigraph, from: usize, word: &[usize]) -> Option<usize> {
    word.iter().try_fold(from, |v, &a| g.step(v, a))
}

/// Reads a group off a Cayley graph: the elements are the vertices, `root`
/// is the identity, and `s·t` is the vertex reached from `s` by a word
/// labelling a path from `root` to `t`. The generators are the successors
/// of the root, coded by the labels of the root's edges.
///
/// The graph must be simple, deterministic, co-deterministic, strongly
/// connected and circular. The resulting certificate is checked to be a
/// group whose Cayley graph is exactly `g`.
pub fn reconstruct_group(g: &LabeledDigraph, root: &VertexId) -> Result<CayleyCertificate, CayleyError> {
    let r = g.vertex_index(root).ok_or_else(|| CayleyError::UnknownElement(root.clone()))?;
    precondition(g.check_simple(), Property::Simple)?;
    precondition(g.check_deterministic(), Property::Deterministic)?;
    precondition(g.check_co_deterministic(), Property::CoDeterministic)?;
    precondition(g.check_strongly_connected(), Property::StronglyConnected)?;
    precondition(circularity(g), Property::Circular)?;

    let n = g.num_vertices();
    let words: Vec<Vec<usize>> = access_words(g, r)
        .into_iter()
        .map(|w| w.expect("strongly connected"))
        .collect();
    let mut product = vec![vec![0; n]; n];
    for s in 0..n {
        for t in 0..n {
            product[s][t] = walk(g, s, &words[t])
                .ok_or_else(|| CayleyError::Internal(format!("no path from {} along the word of {}", g.vertex(s), g.vertex(t))))?;
        }
    }
    if n <= ALT_WORD_CHECK_LIMIT {
        for t in 0..n {
            for &(a, p) in g.inc(t).iter().take(3) {
                let mut alt = words[p].clone();
                alt.push(a);
                if (0..n).any(|s| walk(g, s, &alt) != Some(product[s][t])) {
                    return Err(CayleyError::Internal(format!(
                        "product with {} depends on the chosen word",
                        g.vertex(t)
                    )));
                }
            }
        }
    }
    let group = GroupTable::from_indices(g.vertices().to_vec(), product, r)
        .map_err(|e| CayleyError::Internal(e.to_string()))?;
    if let Some(w) = verify_group(&group).witness {
        return Err(CayleyError::Internal(format!("reconstructed table is not a group: {w:?}")));
    }
    let labeling: Labeling = g
        .out(r)
        .iter()
        .map(|&(a, t)| (g.vertex(t).clone(), g.label(a).clone()))
        .collect();
    let certificate = CayleyCertificate {
        group,
        subset: labeling.keys().cloned().collect(),
        labeling,
        root: root.clone(),
    };
    if certificate.regenerate()? != *g {
        return Err(CayleyError::Internal("certificate does not regenerate the graph".into()));
    }
    Ok(certificate)
}

macro_rules! require {
    ($check:expr, $property:expr) => {
        if let Err(w) = $check {
            return Ok(Verdict::reject($property, w));
        }
    };
}

/// Cayley graphs are exactly the deterministic, rooted, simple,
/// vertex-transitive graphs. A rooted vertex-transitive graph is strongly
/// connected, and on deterministic strongly connected graphs vertex
/// transitivity is circularity, so the checks run in that order.
pub fn recognize_cayley(g: &LabeledDigraph) -> Result<Verdict, CayleyError> {
    require!(g.check_simple(), Property::Simple);
    require!(g.check_deterministic(), Property::Deterministic);
    require!(g.check_rooted(), Property::Rooted);
    require!(g.check_strongly_connected(), Property::StronglyConnected);
    require!(circularity(g), Property::Circular);
    Ok(Verdict::accept(reconstruct_group(g, g.vertex(0))?))
}

/// As [`recognize_cayley`], asking for connectivity instead of a root; on
/// finite graphs the two agree.
pub fn recognize_cayley_finite(g: &LabeledDigraph) -> Result<Verdict, CayleyError> {
    require!(g.check_simple(), Property::Simple);
    require!(g.check_deterministic(), Property::Deterministic);
    require!(g.check_connected(), Property::Connected);
    require!(g.check_strongly_connected(), Property::StronglyConnected);
    require!(circularity(g), Property::Circular);
    Ok(Verdict::accept(reconstruct_group(g, g.vertex(0))?))
}

/// Labels `a` such that `ab` labels a cycle for some label `b`. The graph
/// must be circular.
pub fn inv_labels(g: &LabeledDigraph) -> Result<BTreeSet<Label>, CayleyError> {
    let Some(l) = common_cycle_language(g) else {
        let witness = is_circular(g).witness.expect("not circular");
        return Err(CayleyError::PreconditionViolated {
            property: Property::Circular,
            witness,
        });
    };
    Ok(g.labels()
        .iter()
        .filter(|a| {
            g.labels()
                .iter()
                .any(|b| l.accepts(&Word(vec![(*a).clone(), b.clone()])))
        })
        .cloned()
        .collect())
}

/// Adds a reversed edge labelled `a~inv` for every edge whose label `a` is
/// not in [`inv_labels`].
pub fn complete_weak(g: &LabeledDigraph) -> Result<LabeledDigraph, CayleyError> {
    let inv = inv_labels(g)?;
    let mut bars: BTreeMap<Label, Label> = BTreeMap::new();
    for a in g.labels().iter().filter(|a| !inv.contains(*a)) {
        let bar = Label::new(format!("{a}{INVERSE_SUFFIX}"));
        if g.label_index(&bar).is_some() {
            return Err(CayleyError::LabelCollision(bar));
        }
        bars.insert(a.clone(), bar);
    }
    let mut edges = g.edges();
    for e in g.named_edges() {
        if let Some(bar) = bars.get(&e.label) {
            edges.insert(Edge {
                source: e.target,
                label: bar.clone(),
                target: e.source,
            });
        }
    }
    Ok(LabeledDigraph::from_edges(edges).expect("non-empty"))
}

/// Cayley graphs of weak generating sets (whose inverses generate along
/// with them): the deterministic, co-deterministic, connected, simple,
/// vertex-transitive graphs. The group is found on the completed graph and
/// the generating set restricted to the original labels.
pub fn recognize_weak_cayley(g: &LabeledDigraph) -> Result<Verdict, CayleyError> {
    require!(g.check_simple(), Property::Simple);
    require!(g.check_deterministic(), Property::Deterministic);
    require!(g.check_co_deterministic(), Property::CoDeterministic);
    require!(g.check_connected(), Property::Connected);
    let vt = is_vertex_transitive(g, &IsoConfig::default())?;
    if let Some(w) = vt.witness {
        return Ok(Verdict::reject(Property::VertexTransitive, w));
    }
    let completed = complete_weak(g)?;
    let verdict = recognize_cayley(&completed)?;
    let Some(full) = verdict.certificate else {
        return Err(CayleyError::Internal(format!(
            "completed graph rejected: {:?}",
            verdict.failure
        )));
    };
    let labeling: Labeling = full
        .labeling
        .into_iter()
        .filter(|(_, label)| g.label_index(label).is_some())
        .collect();
    let certificate = CayleyCertificate {
        group: full.group,
        subset: labeling.keys().cloned().collect(),
        labeling,
        root: full.root,
    };
    if certificate.regenerate()? != *g {
        return Err(CayleyError::Internal("restricted certificate does not regenerate the graph".into()));
    }
    Ok(Verdict::accept(certificate))
}

/// Generalized Cayley graphs (any non-empty generating subset, possibly
/// disconnected): the deterministic, co-deterministic, simple,
/// vertex-transitive graphs.
///
/// All components must be isomorphic to the component of the smallest
/// vertex, which must itself be a weak Cayley graph of some group `G`. The
/// `k` components are then indexed by `Z_k` and the certificate group is
/// `G × Z_k`, whose element `(x, j)` is the image of `x` in component `j`.
pub fn recognize_generalized_cayley(g: &LabeledDigraph) -> Result<Verdict, CayleyError> {
    require!(g.check_simple(), Property::Simple);
    require!(g.check_deterministic(), Property::Deterministic);
    require!(g.check_co_deterministic(), Property::CoDeterministic);
    let components = g.components();
    let rep = &components[0];
    let anchor = rep.vertex(0).clone();
    let vt = is_vertex_transitive(rep, &IsoConfig::default())?;
    if let Some(w) = vt.witness {
        return Ok(Verdict::reject(Property::VertexTransitive, w));
    }
    let mut isomorphisms: Vec<IsoWitness> = Vec::with_capacity(components.len());
    for c in &components {
        let mut found = None;
        for t in c.vertices() {
            if let Some(f) = anchored_iso(rep, &anchor, c, t)? {
                found = Some(f);
                break;
            }
        }
        match found {
            Some(f) => isomorphisms.push(f),
            None => {
                return Ok(Verdict::reject(
                    Property::VertexTransitive,
                    Witness::NoAutomorphism {
                        from: anchor,
                        to: c.vertex(0).clone(),
                    },
                ))
            }
        }
    }
    let weak = recognize_weak_cayley(rep)?;
    let Some(base) = weak.certificate else {
        return Err(CayleyError::Internal(format!(
            "representative component rejected: {:?}",
            weak.failure
        )));
    };
    let k = components.len();
    let group = base.group.direct_product(&cyclic(k), |x, j| {
        let j: usize = j.as_str().parse().expect("cyclic element names are numerals");
        isomorphisms[j].map[x].clone()
    });
    let certificate = CayleyCertificate {
        group,
        subset: base.subset,
        labeling: base.labeling,
        root: base.root,
    };
    if certificate.regenerate()? != *g {
        return Err(CayleyError::Internal("assembled certificate does not regenerate the graph".into()));
    }
    if !isomorphisms.iter().zip(&components).all(|(f, c)| f.verify_graphs(rep, c)) {
        return Err(CayleyError::Internal("component isomorphism does not verify".into()));
    }
    let mut verdict = Verdict::accept(certificate);
    verdict.assembly = Some(Assembly {
        representative: rep.clone(),
        isomorphisms,
    });
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::cayley_from_group;
    use crate::cayley::groups::{cyclic, quaternion};

    fn even() -> LabeledDigraph {
        LabeledDigraph::from_triples([("p", "a", "q"), ("p", "b", "p"), ("q", "a", "p"), ("q", "b", "q")])
            .unwrap()
    }

    fn cycle(n: usize, prefix: &str) -> LabeledDigraph {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        LabeledDigraph::from_edges((0..n).map(|i| Edge::new(names[i].as_str(), "a", names[(i + 1) % n].as_str())))
            .unwrap()
    }

    #[test]
    fn even_is_cayley() {
        let v = recognize_cayley(&even()).unwrap();
        assert!(v.accepted);
        let c = v.certificate.unwrap();
        assert_eq!(c.group.order(), 2);
        assert_eq!(c.root, VertexId::from("p"));
        assert_eq!(c.labeling[&VertexId::from("q")], Label::from("a"));
        assert_eq!(c.labeling[&VertexId::from("p")], Label::from("b"));
        assert_eq!(c.regenerate().unwrap(), even());
        assert!(recognize_cayley_finite(&even()).unwrap().accepted);
    }

    #[test]
    fn six_cycle_reconstructs_z6() {
        let g = cycle(6, "v");
        let c = reconstruct_group(&g, &"v0".into()).unwrap();
        assert!(c.group.is_abelian());
        let gen = c.group.index_of(&"v1".into()).unwrap();
        assert_eq!(c.group.element_order(gen), Some(6));
    }

    #[test]
    fn quaternion_round_trip() {
        let q8 = quaternion();
        let lab: Labeling = [("i", "x"), ("j", "y")].iter().map(|&(h, l)| (h.into(), l.into())).collect();
        let g = cayley_from_group(&q8, &lab).unwrap();
        let v = recognize_cayley(&g).unwrap();
        let c = v.certificate.unwrap();
        assert_eq!(c.regenerate().unwrap(), g);
        assert!(!c.group.is_abelian());
    }

    #[test]
    fn rejections_name_the_failed_property() {
        let path = LabeledDigraph::from_triples([("s", "a", "t")]).unwrap();
        let v = recognize_cayley(&path).unwrap();
        assert_eq!(v.failure.unwrap().property, Property::StronglyConnected);
        let two = cycle(3, "x").union(&cycle(3, "y"));
        let v = recognize_cayley(&two).unwrap();
        assert_eq!(v.failure.unwrap().property, Property::Rooted);
        let v = recognize_cayley_finite(&two).unwrap();
        assert_eq!(v.failure.unwrap().property, Property::Connected);
        assert!(recognize_cayley_finite(&cycle(6, "v")).unwrap().accepted);
    }

    #[test]
    fn inverse_labels() {
        let ab: BTreeSet<Label> = ["a".into(), "b".into()].into_iter().collect();
        assert_eq!(inv_labels(&even()).unwrap(), ab);
        assert!(inv_labels(&cycle(6, "v")).unwrap().is_empty());
        let a: BTreeSet<Label> = ["a".into()].into_iter().collect();
        assert_eq!(inv_labels(&cycle(2, "v")).unwrap(), a);
        assert_eq!(complete_weak(&even()).unwrap(), even());
        let c6 = complete_weak(&cycle(6, "v")).unwrap();
        assert_eq!(c6.num_edges(), 12);
        assert!(c6.contains_edge(&Edge::new("v1", "a~inv", "v0")));
    }

    #[test]
    fn weak_cayley_through_completion() {
        let v = recognize_weak_cayley(&cycle(6, "v")).unwrap();
        let c = v.certificate.unwrap();
        assert_eq!(c.subset.len(), 1);
        assert_eq!(c.group.order(), 6);
        let v = recognize_weak_cayley(&even()).unwrap();
        assert_eq!(v.certificate.unwrap().subset.len(), 2);
    }

    #[test]
    fn generalized_cayley() {
        let g = cycle(4, "a").union(&cycle(4, "b")).union(&cycle(4, "c"));
        let v = recognize_generalized_cayley(&g).unwrap();
        assert!(v.accepted);
        let c = v.certificate.as_ref().unwrap();
        assert_eq!(c.group.order(), 12);
        assert_eq!(c.subset.len(), 1);
        assert_eq!(v.assembly.unwrap().isomorphisms.len(), 3);
        let mixed = cycle(4, "a").union(&cycle(6, "b"));
        let v = recognize_generalized_cayley(&mixed).unwrap();
        assert_eq!(v.failure.as_ref().unwrap().property, Property::VertexTransitive);
        assert!(v.failure.unwrap().witness.certifies(&mixed));
        assert!(recognize_generalized_cayley(&even()).unwrap().accepted);
        let z = cayley_from_group(&cyclic(6), &[("2".into(), "a".into())].into_iter().collect()).unwrap();
        assert!(recognize_generalized_cayley(&z).unwrap().accepted);
    }
}
