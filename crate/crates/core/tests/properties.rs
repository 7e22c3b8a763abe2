use std::collections::BTreeSet;

use proptest::prelude::*;

use cayley_core::automata::{
    brzozowski, canonical, co_determinize, determinize, greatest_bisimulation, is_bisimulation, iso, minimize,
    Automaton, IsoConfig,
};
use cayley_core::cayley::groups::small_groups;
use cayley_core::cayley::{cayley_from_group, recognize_cayley, Labeling};
use cayley_core::cycles::{cycle_language, is_circular};
use cayley_core::io;
use cayley_core::presentations::{bounded_class, todd_coxeter, Presentation, Quotient};
use cayley_core::report::{check_graph, CheckConfig};
use cayley_core::{Edge, Label, LabeledDigraph, VertexId, Word};

const LABELS: [&str; 2] = ["a", "b"];

fn graph_from_mask(n: usize, mask: &[bool]) -> Option<LabeledDigraph> {
    let mut edges = Vec::new();
    for s in 0..n {
        for (a, l) in LABELS.iter().enumerate() {
            for t in 0..n {
                if mask[(s * LABELS.len() + a) * n + t] {
                    edges.push(Edge::new(s.to_string(), *l, t.to_string()));
                }
            }
        }
    }
    LabeledDigraph::from_edges(edges).ok()
}

fn graphs() -> impl Strategy<Value = LabeledDigraph> {
    (1usize..=5)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(proptest::bool::weighted(0.3), n * n * 2)))
        .prop_filter_map("no edges", |(n, mask)| graph_from_mask(n, &mask))
}

fn automata() -> impl Strategy<Value = Automaton> {
    (graphs(), any::<u64>(), any::<u64>()).prop_map(|(g, i, f)| {
        let pick = |bits: u64| -> Vec<VertexId> {
            g.vertices()
                .iter()
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, v)| v.clone())
                .collect()
        };
        Automaton::new(&g, pick(i), pick(f)).unwrap()
    })
}

fn words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| LABELS.iter().map(move |l| w.concat(&Word(vec![Label::from(*l)]))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn same_language(a: &Automaton, b: &Automaton) -> Result<(), TestCaseError> {
    for w in words(6) {
        prop_assert_eq!(a.recognizes(&w), b.recognizes(&w), "differ on {}", w);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_json_round_trips(g in graphs()) {
        let s = io::graph_json(&g);
        let back = io::parse_graph(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(io::graph_json(&back), s);
    }

    #[test]
    fn automaton_json_round_trips(a in automata()) {
        let s = io::automaton_json(&a);
        prop_assert_eq!(io::automaton_json(&io::parse_automaton(&s).unwrap()), s);
    }

    #[test]
    fn constructions_preserve_the_language(a in automata()) {
        let d = determinize(&a);
        prop_assert!(d.is_deterministic());
        same_language(&a, &d)?;
        let c = co_determinize(&a);
        prop_assert!(c.is_co_deterministic());
        same_language(&a, &c)?;
        let m = minimize(&a);
        same_language(&a, &m)?;
        prop_assert!(m.num_states() <= a.num_states());
        let b = brzozowski(&a);
        prop_assert!(b.is_deterministic());
        same_language(&a, &b)?;
    }

    #[test]
    fn greatest_bisimulation_is_a_bisimulation(a in automata()) {
        let p = greatest_bisimulation(&a);
        prop_assert!(is_bisimulation(&p.as_relation(), &a, &a));
        prop_assert_eq!(greatest_bisimulation(&minimize(&a)).num_blocks(), p.num_blocks());
    }

    #[test]
    fn brzozowski_is_the_canonical_automaton(a in automata()) {
        let l = a.to_dfa(&[]);
        prop_assume!(!l.is_empty());
        let b = brzozowski(&a);
        let c = canonical(&l).unwrap();
        let unbounded = IsoConfig { max_vertices: usize::MAX };
        prop_assert!(iso(&b, &c, &unbounded).unwrap().is_some());
        prop_assert_eq!(b.num_states(), l.minimize().num_states() - usize::from(l.minimize().sink().is_some()));
    }

    #[test]
    fn witnesses_certify(g in graphs()) {
        let r = check_graph(&g, &CheckConfig::default());
        for (name, res) in &r.properties {
            if let Some(w) = &res.witness {
                prop_assert!(!res.holds, "{} holds with a witness", name);
                prop_assert!(w.certifies(&g), "{}: {:?} does not certify", name, w);
            }
        }
    }

    #[test]
    fn circularity_agrees_with_cycle_membership(g in graphs()) {
        let c = is_circular(&g);
        let langs: Vec<_> = g.vertices().iter().map(|v| cycle_language(&g, v).unwrap().language).collect();
        if c.circular {
            for w in words(5) {
                let first = langs[0].accepts(&w);
                prop_assert!(langs.iter().all(|l| l.accepts(&w) == first), "{} splits vertices", w);
            }
        } else {
            prop_assert!(c.witness.is_some());
        }
    }

    #[test]
    fn cayley_graphs_are_recognized(gi in 0usize..14, mask in any::<u64>()) {
        let groups = small_groups();
        let (_, t) = &groups[gi % groups.len()];
        let subset: Vec<usize> = (0..t.order()).filter(|k| mask >> k & 1 == 1).collect();
        prop_assume!(!subset.is_empty() && t.generated_by(&subset));
        let labeling: Labeling = subset
            .iter()
            .enumerate()
            .map(|(i, &x)| (t.element(x).clone(), Label::new(format!("g{i}"))))
            .collect();
        let g = cayley_from_group(t, &labeling).unwrap();
        let v = recognize_cayley(&g).unwrap();
        prop_assert!(v.accepted);
        let cert = v.certificate.unwrap();
        prop_assert_eq!(cert.group.order(), t.order());
        prop_assert_eq!(cert.regenerate().unwrap(), g);
    }

    #[test]
    fn bounded_class_is_monotone(rels in proptest::collection::vec("[ab]{1,4}", 1..=3)) {
        let rs: Vec<&str> = rels.iter().map(String::as_str).collect();
        let p = Presentation::from_relators(&rs).unwrap();
        let mut prev: BTreeSet<Word> = BTreeSet::new();
        for n in 0..=6 {
            let c = bounded_class(&p, n);
            prop_assert!(prev.is_subset(&c));
            prop_assert!(c.iter().all(|w| w.len() <= n));
            prev = c;
        }
        for r in p.relators() {
            if r.len() <= 6 {
                prop_assert!(prev.contains(r));
            }
        }
    }

    #[test]
    fn closed_tables_satisfy_the_relators(rels in proptest::collection::vec("[ab]{1,5}", 1..=3)) {
        let rs: Vec<&str> = rels.iter().map(String::as_str).collect();
        let p = Presentation::from_relators(&rs).unwrap();
        if let Quotient::Closed(t) = todd_coxeter(&p, 500) {
            prop_assert!(t.word(0).is_empty());
            for c in 0..t.num_cosets() {
                prop_assert_eq!(t.run(0, t.word(c)), Some(c));
                for r in p.relators() {
                    prop_assert_eq!(t.run(c, r), Some(c), "relator {} moves coset {}", r, c);
                }
            }
        }
    }
}
