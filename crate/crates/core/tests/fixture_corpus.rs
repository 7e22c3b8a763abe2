use cayley_core::fixtures::corpus;
use cayley_core::report::{evaluate, CheckConfig};

#[test]
fn every_fixture_has_its_expected_properties() {
    let cfg = CheckConfig::default();
    let mut mismatches = Vec::new();
    for f in corpus() {
        let actual = evaluate(&f, &cfg);
        for (&key, &want) in &f.expected {
            match actual.get(key) {
                Some(&got) if got == want => {}
                got => mismatches.push(format!("{}: {key} expected {want}, got {got:?}", f.name)),
            }
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn corpus_names_are_unique() {
    let names: std::collections::BTreeSet<String> = corpus().into_iter().map(|f| f.name).collect();
    assert_eq!(names.len(), corpus().len());
}
