//! `cayley`: command-line front end.
//!
//! Exit codes: 0 accepted / true, 1 rejected / false (the witness is on
//! stdout), 2 usage or parse error, 3 a search cap was hit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use cayley_core::automata::{self, AutomataError, Automaton, IsoConfig};
use cayley_core::cayley::{
    self, cayley_from_group, recognize_cayley, recognize_generalized_cayley, recognize_weak_cayley,
    reconstruct_group, CayleyError,
};
use cayley_core::cycles::{self, CycleError};
use cayley_core::fixtures::{self, Payload};
use cayley_core::io::{self, GroupSpec, IoError};
use cayley_core::lang::{self, LangError};
use cayley_core::presentations::{self, PresentationError, Quotient};
use cayley_core::report::{self, CheckConfig};
use cayley_core::{dot, LabeledDigraph, VertexId, Word};

#[derive(Parser)]
#[command(name = "cayley", version, about = "Automata, cycle languages and Cayley graph recognition")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Coset cap for Todd-Coxeter enumeration.
    #[arg(long, default_value_t = presentations::DEFAULT_MAX_COSETS, global = true, value_parser = positive)]
    max_cosets: usize,
    /// Longest intermediate word in rewriting searches.
    #[arg(long, default_value_t = presentations::DEFAULT_MAX_LEN, global = true, value_parser = positive)]
    max_len: usize,
    /// Largest nondeterministic graph searched for isomorphisms.
    #[arg(long, default_value_t = IsoConfig::default().max_vertices, global = true, value_parser = positive)]
    iso_cap: usize,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Every graph property, with witnesses.
    Check { graph: PathBuf },
    /// Isomorphism of two graphs or two automata.
    Iso { first: PathBuf, second: PathBuf },
    /// Quotient of an automaton by its greatest bisimulation.
    Min { automaton: PathBuf },
    /// Accessible subset construction.
    Det { automaton: PathBuf },
    /// Subset construction on the inverse automaton, inverted back.
    Codet { automaton: PathBuf },
    /// Minimal deterministic automaton by double reversal.
    Brzozowski { automaton: PathBuf },
    /// Canonical automaton of residuals of a language.
    Canon { language: PathBuf },
    /// Cycle language at a vertex, as a DFA.
    CycleLang { graph: PathBuf, vertex: String },
    /// Elementary cycle words at one vertex or at every vertex.
    ElemCycles { graph: PathBuf, vertex: Option<String> },
    /// Stability of a language under insertion and deletion of its words.
    Stable { language: PathBuf },
    /// Closure of a language under cyclic shifts.
    Conjugacy { language: PathBuf },
    /// Whether a language presents a group.
    PresentationConditions { language: PathBuf },
    IsCayley { graph: PathBuf },
    IsWeakCayley { graph: PathBuf },
    IsGeneralizedCayley { graph: PathBuf },
    /// Group read off a graph from a root.
    Reconstruct {
        graph: PathBuf,
        #[arg(long)]
        root: String,
    },
    /// Cayley graph of a group table with a labelled generating subset.
    FromGroup { group: PathBuf },
    /// Cayley graph of a finite presentation.
    FromPresentation { presentation: PathBuf },
    /// Vertices within a radius of the identity in a presentation's Cayley graph.
    Ball {
        presentation: PathBuf,
        #[arg(long)]
        radius: usize,
        /// Also write the ball as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// A rewriting of one word into another by inserting and deleting relators.
    Thue {
        presentation: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value_t = presentations::DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// DOT for a graph or automaton file.
    EmitDot {
        file: PathBuf,
        /// Emit the undirected skeleton instead.
        #[arg(long)]
        skeleton: bool,
    },
    /// List the built-in fixtures, print one, or re-verify them all.
    Fixtures {
        name: Option<String>,
        /// Re-check every expected property.
        #[arg(long)]
        verify: bool,
        /// Also check this many Cayley graphs of random generating subsets.
        #[arg(long, default_value_t = 0)]
        sample: usize,
    },
    /// The recognition argument step by step.
    Pipeline { graph: PathBuf },
}

/// What a command produced.
enum Output {
    Value { value: Value, verdict: Option<bool>, dot: Option<String> },
    Text(String),
}

impl Output {
    fn of<T: Serialize>(v: &T) -> Output {
        Output::Value {
            value: serde_json::to_value(v).expect("serializable"),
            verdict: None,
            dot: None,
        }
    }

    fn verdict<T: Serialize>(v: &T, holds: bool) -> Output {
        Output::Value {
            value: serde_json::to_value(v).expect("serializable"),
            verdict: Some(holds),
            dot: None,
        }
    }

    fn graph(g: &LabeledDigraph) -> Output {
        Output::Value {
            value: serde_json::to_value(g).expect("serializable"),
            verdict: None,
            dot: Some(dot::graph_dot(g)),
        }
    }

    fn automaton(a: &Automaton) -> Output {
        Output::Value {
            value: io::automaton_value(a),
            verdict: None,
            dot: Some(dot::automaton_dot(a)),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<CayleyError> for Failure {
    fn from(e: CayleyError) -> Self {
        match e {
            CayleyError::SearchCapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<CycleError> for Failure {
    fn from(e: CycleError) -> Self {
        match e {
            CycleError::UnknownVertex(_) => Failure::Usage(e.to_string()),
            _ => Failure::Cap(e.to_string()),
        }
    }
}

impl From<AutomataError> for Failure {
    fn from(e: AutomataError) -> Self {
        match e {
            AutomataError::SearchCapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<LangError> for Failure {
    fn from(e: LangError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<PresentationError> for Failure {
    fn from(e: PresentationError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn graph(path: &Path) -> Result<LabeledDigraph, Failure> {
    Ok(io::parse_graph(&io::read(path)?)?)
}

fn automaton(path: &Path) -> Result<Automaton, Failure> {
    Ok(io::parse_automaton(&io::read(path)?)?)
}

/// Automaton files carry `"initial"`; anything else is read as a graph.
fn graph_or_automaton(path: &Path) -> Result<Result<LabeledDigraph, Automaton>, Failure> {
    let text = io::read(path)?;
    let v: Value = serde_json::from_str(&text).map_err(IoError::from)?;
    if v.get("initial").is_some() {
        Ok(Err(io::parse_automaton(&text)?))
    } else {
        Ok(Ok(io::parse_graph(&text)?))
    }
}

fn vertex_in(g: &LabeledDigraph, v: &str) -> Result<VertexId, Failure> {
    let v = VertexId::from(v);
    g.vertex_index(&v)
        .map(|_| v.clone())
        .ok_or_else(|| Failure::Usage(format!("unknown vertex {v}")))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let iso = IsoConfig {
        max_vertices: cli.iso_cap,
    };
    let cfg = CheckConfig {
        iso,
        max_cosets: cli.max_cosets,
        ..CheckConfig::default()
    };
    Ok(match &cli.command {
        Command::Check { graph: p } => Output::of(&report::check_graph(&graph(p)?, &cfg)),
        Command::Iso { first, second } => {
            let map = match (graph_or_automaton(first)?, graph_or_automaton(second)?) {
                (Ok(g), Ok(h)) => automata::graph_iso(&g, &h, &iso)?,
                (Err(a), Err(b)) => automata::iso(&a, &b, &iso)?,
                _ => return Err(Failure::Usage("cannot compare a graph with an automaton".into())),
            };
            Output::verdict(&json!({"isomorphic": map.is_some(), "map": map}), map.is_some())
        }
        Command::Min { automaton: p } => Output::automaton(&automata::minimize(&automaton(p)?)),
        Command::Det { automaton: p } => Output::automaton(&automata::determinize(&automaton(p)?)),
        Command::Codet { automaton: p } => Output::automaton(&automata::co_determinize(&automaton(p)?)),
        Command::Brzozowski { automaton: p } => Output::automaton(&automata::brzozowski(&automaton(p)?)),
        Command::Canon { language } => {
            let l = io::parse_language(&io::read(language)?)?;
            Output::automaton(&automata::canonical(&l)?)
        }
        Command::CycleLang { graph: p, vertex } => {
            let g = graph(p)?;
            let c = cycles::cycle_language(&g, &vertex_in(&g, vertex)?)?;
            Output::of(&json!({"vertex": c.vertex, "language": io::dfa_value(&c.language)}))
        }
        Command::ElemCycles { graph: p, vertex } => {
            let g = graph(p)?;
            let vertices = match vertex {
                Some(v) => vec![vertex_in(&g, v)?],
                None => {
                    let mut vs = g.vertices().to_vec();
                    vs.sort();
                    vs
                }
            };
            let sets = vertices
                .iter()
                .map(|v| cycles::elementary_cycles(&g, v, cycles::DEFAULT_CYCLE_CAP))
                .collect::<Result<Vec<_>, _>>()?;
            Output::of(&sets)
        }
        Command::Stable { language } => {
            let v = lang::is_stable(&io::parse_language(&io::read(language)?)?)?;
            Output::verdict(&v, v.stable)
        }
        Command::Conjugacy { language } => {
            let v = lang::is_conjugacy_closed(&io::parse_language(&io::read(language)?)?);
            Output::verdict(&v, v.closed)
        }
        Command::PresentationConditions { language } => {
            let v = lang::presentation_conditions(&io::parse_language(&io::read(language)?)?)?;
            Output::verdict(&v, v.holds())
        }
        Command::IsCayley { graph: p } => {
            let v = recognize_cayley(&graph(p)?)?;
            Output::verdict(&v, v.accepted)
        }
        Command::IsWeakCayley { graph: p } => {
            let v = recognize_weak_cayley(&graph(p)?)?;
            Output::verdict(&v, v.accepted)
        }
        Command::IsGeneralizedCayley { graph: p } => {
            let v = recognize_generalized_cayley(&graph(p)?)?;
            Output::verdict(&v, v.accepted)
        }
        Command::Reconstruct { graph: p, root } => {
            let g = graph(p)?;
            match reconstruct_group(&g, &vertex_in(&g, root)?) {
                Ok(c) => Output::verdict(&c, true),
                Err(CayleyError::PreconditionViolated { property, witness }) => Output::verdict(
                    &json!({"property": property, "witness": witness}),
                    false,
                ),
                Err(e) => return Err(e.into()),
            }
        }
        Command::FromGroup { group } => {
            let GroupSpec { table, labeling } = io::parse_group(&io::read(group)?)?;
            let labeling = labeling.ok_or_else(|| Failure::Usage("group file has no \"subset\" or \"labels\"".into()))?;
            Output::graph(&cayley_from_group(&table, &labeling)?)
        }
        Command::FromPresentation { presentation } => {
            let p = io::parse_presentation(&io::read(presentation)?)?;
            match presentations::cayley_of_presentation(&p, cli.max_cosets) {
                Ok(Quotient::Closed(g)) => Output::graph(&g),
                Ok(Quotient::Overflow { cosets }) => {
                    return Err(Failure::Cap(format!("coset enumeration passed {cosets} cosets without closing")))
                }
                Err(e @ PresentationError::ConditionViolation { .. }) => Output::verdict(&violation_value(&e), false),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Ball {
            presentation,
            radius,
            dot: dot_path,
        } => {
            let p = io::parse_presentation(&io::read(presentation)?)?;
            let b = presentations::cayley_ball(&p, *radius, cli.max_cosets);
            let d = dot::ball_dot(&b);
            if let Some(path) = dot_path {
                std::fs::write(path, &d).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Output::Value {
                value: serde_json::to_value(&b).expect("serializable"),
                verdict: None,
                dot: Some(d),
            }
        }
        Command::Thue {
            presentation,
            from,
            to,
            max_steps,
        } => {
            let p = io::parse_presentation(&io::read(presentation)?)?;
            let alphabet: Vec<_> = p.alphabet().iter().cloned().collect();
            let word = |s: &str| Word::parse(s, &alphabet).map_err(|e| Failure::Usage(e.to_string()));
            match presentations::thue_reachable(&p, &word(from)?, &word(to)?, cli.max_len, *max_steps) {
                Some(trace) => Output::verdict(&trace, true),
                None => {
                    return Err(Failure::Cap(format!(
                        "no rewriting found within length {} and {max_steps} steps",
                        cli.max_len
                    )))
                }
            }
        }
        Command::EmitDot { file, skeleton } => match graph_or_automaton(file)? {
            Ok(g) if *skeleton => Output::Text(dot::skeleton_dot(&g.skeleton())),
            Ok(g) => Output::Text(dot::graph_dot(&g)),
            Err(a) if *skeleton => match a.graph() {
                Some(g) => Output::Text(dot::skeleton_dot(&g.skeleton())),
                None => return Err(Failure::Usage("automaton has no edges".into())),
            },
            Err(a) => Output::Text(dot::automaton_dot(&a)),
        },
        Command::Fixtures { name, verify, sample } => fixtures_command(name.as_deref(), *verify, *sample, cli.seed, &cfg)?,
        Command::Pipeline { graph: p } => {
            let r = report::pipeline(&graph(p)?);
            Output::verdict(&r, r.accepted)
        }
    })
}

fn violation_value(e: &PresentationError) -> Value {
    match e {
        PresentationError::ConditionViolation { condition, letters } => {
            json!({"error": e.to_string(), "condition": condition, "letters": letters})
        }
        _ => json!({"error": e.to_string()}),
    }
}

fn payload_value(p: &Payload) -> Value {
    match p {
        Payload::Graph(g) => serde_json::to_value(g).expect("serializable"),
        Payload::Automaton(a) => io::automaton_value(a),
        Payload::Group(t) => io::group_value(&GroupSpec {
            table: t.clone(),
            labeling: None,
        }),
        Payload::Presentation(p) => serde_json::to_value(p).expect("serializable"),
    }
}

fn fixtures_command(name: Option<&str>, verify: bool, sample: usize, seed: u64, cfg: &CheckConfig) -> Result<Output, Failure> {
    if let Some(name) = name {
        let f = fixtures::find(name).ok_or_else(|| Failure::Usage(format!("no fixture named {name}")))?;
        let dot = match &f.payload {
            Payload::Graph(g) => Some(dot::graph_dot(g)),
            Payload::Automaton(a) => Some(dot::automaton_dot(a)),
            _ => None,
        };
        return Ok(Output::Value {
            value: payload_value(&f.payload),
            verdict: None,
            dot,
        });
    }
    let corpus = fixtures::corpus();
    if !verify && sample == 0 {
        let list: Vec<Value> = corpus
            .iter()
            .map(|f| json!({"name": f.name, "kind": f.payload.kind(), "expected": f.expected}))
            .collect();
        return Ok(Output::of(&list));
    }
    let mut mismatches = Vec::new();
    if verify {
        for f in &corpus {
            let got = report::evaluate(f, cfg);
            for (&prop, &want) in &f.expected {
                if got.get(prop) != Some(&want) {
                    mismatches.push(json!({"fixture": f.name, "property": prop, "expected": want, "got": got.get(prop)}));
                }
            }
        }
    }
    let sampled = sample_cayley(sample, seed, &mut mismatches)?;
    let ok = mismatches.is_empty();
    Ok(Output::verdict(
        &json!({"verified": if verify { corpus.len() } else { 0 }, "sampled": sampled, "mismatches": mismatches}),
        ok,
    ))
}

/// Cayley graphs of random generating subsets of the small groups must be
/// recognized, and the certificate must regenerate the graph.
fn sample_cayley(n: usize, seed: u64, mismatches: &mut Vec<Value>) -> Result<usize, Failure> {
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let groups = cayley::groups::small_groups();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut done = 0;
    while done < n {
        let (name, t) = groups.choose(&mut rng).expect("non-empty list");
        let subset: Vec<usize> = (0..t.order()).filter(|_| rng.gen_bool(0.5)).collect();
        if subset.is_empty() || !t.generated_by(&subset) {
            continue;
        }
        let labeling = subset
            .iter()
            .enumerate()
            .map(|(i, &x)| (t.element(x).clone(), cayley_core::Label::new(format!("g{i}"))))
            .collect();
        let g = cayley_from_group(t, &labeling)?;
        let v = recognize_cayley(&g)?;
        let regenerates = v.certificate.as_ref().and_then(|c| c.regenerate().ok()) == Some(g);
        if !v.accepted || !regenerates {
            let elements: Vec<&VertexId> = subset.iter().map(|&x| t.element(x)).collect();
            mismatches.push(json!({"group": name, "subset": elements, "failure": v.failure.map(|f| f.property)}));
        }
        done += 1;
    }
    Ok(done)
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                if is_flat(x) {
                    out.push_str(&format!("{pad}- {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    text(x, indent + 1, out);
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) if s.is_empty() => "ε".into(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Value { value, verdict, dot }) => {
            match cli.format {
                Format::Json => println!("{}", io::to_canonical_json(&value)),
                Format::Text => {
                    let mut s = String::new();
                    text(&value, 0, &mut s);
                    print!("{s}");
                }
                Format::Dot => match dot {
                    Some(d) => print!("{d}"),
                    None => {
                        eprintln!("error: this command has no DOT output");
                        return ExitCode::from(2);
                    }
                },
            }
            match verdict {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
