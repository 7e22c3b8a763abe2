use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn cayley(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_cayley")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

/// Writes a built-in fixture to a file.
fn fixture(dir: &TempDir, name: &str) -> String {
    let r = cayley(&["fixtures", name]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    write(dir, &format!("{name}.json"), &r.stdout)
}

#[test]
fn even_is_cayley() {
    let d = TempDir::new().unwrap();
    let r = cayley(&["is-cayley", &fixture(&d, "even")]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["accepted"], true);
    assert_eq!(v["certificate"]["group"]["elements"].as_array().unwrap().len(), 2);
}

#[test]
fn petersen_rejected_with_witness() {
    let d = TempDir::new().unwrap();
    let r = cayley(&["is-cayley", &fixture(&d, "petersen")]);
    assert_eq!(r.code, 1);
    let v = r.json();
    assert_eq!(v["failure"]["property"], "circular");
    assert_eq!(v["failure"]["witness"]["word"], "ababa");
}

#[test]
fn check_reports_every_property() {
    let d = TempDir::new().unwrap();
    let r = cayley(&["check", &fixture(&d, "doubled_triangle")]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["properties"]["deterministic"]["holds"], false);
    assert_eq!(v["properties"]["vertex_transitive"]["holds"], true);
}

#[test]
fn parse_errors_exit_with_two() {
    let d = TempDir::new().unwrap();
    let empty = write(&d, "empty.json", r#"{"edges": []}"#);
    let r = cayley(&["check", &empty]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("no edges"), "{}", r.stderr);
    assert_eq!(cayley(&["check", "/nonexistent/graph.json"]).code, 2);
    assert_eq!(cayley(&["no-such-command"]).code, 2);
    let g = fixture(&d, "even");
    assert_eq!(cayley(&["reconstruct", &g, "--root", "zz"]).code, 2);
}

#[test]
fn presentation_commands() {
    let d = TempDir::new().unwrap();
    let z6 = fixture(&d, "z6_presentation");
    let r = cayley(&["from-presentation", &z6]);
    assert_eq!(r.code, 0);
    let edges = r.json()["edges"].as_array().unwrap().len();
    assert_eq!(edges, 12);

    let tri = fixture(&d, "triangle_presentation");
    let r = cayley(&["from-presentation", &tri, "--max-cosets", "100"]);
    assert_eq!(r.code, 3, "{}", r.stdout);

    let dot = d.path().join("ball.dot");
    let r = cayley(&["ball", &tri, "--radius", "2", "--max-cosets", "100", "--dot", dot.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["partial"], true);
    assert!(std::fs::read_to_string(&dot).unwrap().contains("partial"));

    let r = cayley(&["thue", &z6, "--from", "aab", "--to", ""]);
    assert_eq!(r.code, 0);
    assert!(!r.json()["steps"].as_array().unwrap().is_empty());
    let r = cayley(&["thue", &z6, "--from", "a", "--to", "", "--max-len", "4"]);
    assert_eq!(r.code, 3);

    let collapsed = fixture(&d, "collapsed_presentation");
    let r = cayley(&["from-presentation", &collapsed]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["condition"], "iii");
}

#[test]
fn automaton_transformers() {
    let d = TempDir::new().unwrap();
    let abc = fixture(&d, "abc_automaton");
    for cmd in ["det", "codet", "brzozowski", "min", "canon"] {
        let r = cayley(&[cmd, &abc]);
        assert_eq!(r.code, 0, "{cmd}: {}", r.stderr);
        let v = r.json();
        assert!(v["initial"].is_array() && v["final"].is_array(), "{cmd}");
    }
    let r = cayley(&["brzozowski", &abc]);
    let first = write(&d, "b.json", &r.stdout);
    let r = cayley(&["canon", &abc]);
    let second = write(&d, "c.json", &r.stdout);
    let r = cayley(&["iso", &first, &second]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json()["isomorphic"], true);
}

#[test]
fn language_predicates() {
    let d = TempDir::new().unwrap();
    let even = fixture(&d, "even_automaton");
    assert_eq!(cayley(&["stable", &even]).code, 0);
    assert_eq!(cayley(&["conjugacy", &even]).code, 0);
    assert_eq!(cayley(&["presentation-conditions", &even]).code, 0);
    let abc = fixture(&d, "abc_automaton");
    let r = cayley(&["conjugacy", &abc]);
    assert_eq!(r.code, 1);
    assert!(r.json()["witness"].is_string());
}

#[test]
fn cycles_and_dot() {
    let d = TempDir::new().unwrap();
    let even = fixture(&d, "even");
    let r = cayley(&["elem-cycles", &even, "p"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()[0]["words"], serde_json::json!(["aa", "b"]));
    let r = cayley(&["cycle-lang", &even, "q"]);
    assert_eq!(r.code, 0);
    assert!(r.json()["language"]["transitions"].is_array());
    let r = cayley(&["emit-dot", &even, "--skeleton"]);
    assert_eq!(r.stdout.matches(" -- ").count(), 3);
    let r = cayley(&["pipeline", &even, "--format", "text"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("accepted: true"));
    assert_eq!(cayley(&["check", &even, "--format", "dot"]).code, 2);
}

#[test]
fn group_round_trip() {
    let d = TempDir::new().unwrap();
    let g = write(
        &d,
        "z3.json",
        r#"{"elements":["0","1","2"],"product":[["0","1","2"],["1","2","0"],["2","0","1"]],"identity":"0","labels":{"1":"a"}}"#,
    );
    let r = cayley(&["from-group", &g]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let graph = write(&d, "c3.json", &r.stdout);
    let r = cayley(&["reconstruct", &graph, "--root", "0"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["group"]["elements"].as_array().unwrap().len(), 3);
    let r = cayley(&["is-generalized-cayley", &graph]);
    assert_eq!(r.code, 0);
}

#[test]
fn fixtures_verify_and_sample() {
    let r = cayley(&["fixtures", "--verify", "--sample", "10", "--seed", "3"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json()["mismatches"], serde_json::json!([]));
    let list = cayley(&["fixtures"]).json();
    assert!(list.as_array().unwrap().iter().any(|f| f["name"] == "petersen"));
}
