//! The command line: `analyze`, `realize`, `verify` and `graphs`.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but refused
//! (graph not undecided, verification failed, graph unavailable), 2 when the
//! input or the arguments are malformed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::config_graph::{classify, configuration_graph, BipartiteMultigraph, Bounds, PeriodicityVerdict};
use crate::error::Error;
use crate::format::{
    bipartite_dot, configuration_json, endpoint_map_dot, endpoint_map_json, generator_json,
    letter_label, pair_label, substitution_text,
};
use crate::generators::{enumerate_basic, left_tail_equivalent, right_tail_equivalent, TailVerdict};
use crate::letter_graphs::{subfixing_power, Bounded, EndpointMap, LetterGraphs, SegregationReport};
use crate::words::{parse_substitution, Primitivity, Substitution};
use crate::zorro::{realize, verify_roundtrip};
use crate::Side;

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "zorro", version, about = "Configuration graphs of substitutions and the Zorro construction")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Largest power tried when looking for subfixed letter graphs.
    #[arg(long, global = true, default_value_t = 64, value_parser = positive)]
    pub power_bound: usize,
    /// Largest segregating number tried.
    #[arg(long, global = true, default_value_t = 8, value_parser = positive)]
    pub seg_bound: usize,
    /// Longest extension chain in the tail-equivalence search.
    #[arg(long, global = true, default_value_t = 32, value_parser = positive)]
    pub max_ext: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write substitutions in the token format even when they fit the compact one.
    #[arg(long, global = true)]
    pub tokens: bool,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Report primitivity, letter graphs, generators and the configuration graph of a substitution file.
    Analyze { path: PathBuf },
    /// Build a substitution realizing an undecided graph file.
    Realize {
        path: PathBuf,
        /// Also print the construction steps.
        #[arg(long)]
        trace: bool,
    },
    /// Realize a graph file and check the result end to end.
    Verify { path: PathBuf },
    /// Emit one graph of a substitution file.
    Graphs {
        path: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Ll,
    Rl,
    Ls,
    Rs,
    Config,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl RunConfig {
    pub fn bounds(&self) -> Bounds {
        Bounds {
            power: self.power_bound,
            segregating: self.seg_bound,
            max_ext: self.max_ext,
        }
    }
}

/// A failed command: exit code and message.
#[derive(Debug)]
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

/// 2 for malformed input, 1 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed { .. }
        | Error::UnknownLetter { .. }
        | Error::EmptyImage { .. }
        | Error::DuplicateRule { .. }
        | Error::DuplicateVertex { .. }
        | Error::UnknownVertex { .. }
        | Error::DuplicateToken(_)
        | Error::LetterOutsideAlphabet(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&config) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn execute(config: &RunConfig) -> Result<String, Failure> {
    match &config.command {
        Command::Analyze { path } => analyze(config, &load_substitution(path)?),
        Command::Realize { path, trace } => realize_cmd(config, &load_graph(path)?, *trace),
        Command::Verify { path } => verify_cmd(config, &load_graph(path)?),
        Command::Graphs { path, which } => graphs_cmd(config, &load_substitution(path)?, *which),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn with_path(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure(exit_code(&e), format!("{}: {e}", path.display()))
}

fn load_substitution(path: &Path) -> Result<Substitution, Failure> {
    parse_substitution(&read(path)?).map_err(with_path(path))
}

fn load_graph(path: &Path) -> Result<BipartiteMultigraph, Failure> {
    BipartiteMultigraph::parse(&read(path)?).map_err(with_path(path))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn no_dot(command: &str) -> Failure {
    Failure(2, format!("--format dot is not available for `{command}`"))
}

struct Analysis {
    sub: Substitution,
    primitivity: Primitivity,
    prefix: Option<Error>,
    postfix: Option<Error>,
    graphs: Result<LetterGraphs, Error>,
    subfixing: Result<usize, Error>,
    /// Power whose basics were enumerated, and the basics.
    basics: Result<(usize, Substitution, Vec<crate::generators::Generator>), Error>,
    configuration: Result<crate::config_graph::ConfigurationGraph, Error>,
    verdict: PeriodicityVerdict,
    tails: Vec<(usize, usize, TailVerdict, TailVerdict)>,
}

fn run_analysis(config: &RunConfig, sub: &Substitution) -> Analysis {
    let bounds = config.bounds();
    let subfixing = subfixing_power(sub, bounds.power, bounds.segregating);
    let configuration = configuration_graph(sub, &bounds);
    let basics = match &configuration {
        Ok(cg) => Ok((cg.power, cg.substitution.clone(), cg.basics.clone())),
        Err(_) => enumerate_basic(sub).map(|b| (1, sub.clone(), b)),
    };
    let mut tails = Vec::new();
    if let Ok((_, q, bs)) = &basics {
        for i in 0..bs.len() {
            for j in i + 1..bs.len() {
                let left = left_tail_equivalent(q, &bs[i], &bs[j], bounds.max_ext);
                let right = right_tail_equivalent(q, &bs[i], &bs[j], bounds.max_ext);
                if let (Ok(l), Ok(r)) = (left, right) {
                    if l != TailVerdict::NotEquivalent || r != TailVerdict::NotEquivalent {
                        tails.push((i, j, l, r));
                    }
                }
            }
        }
    }
    Analysis {
        sub: sub.clone(),
        primitivity: sub.primitivity(),
        prefix: sub.conflict_error(true),
        postfix: sub.conflict_error(false),
        graphs: LetterGraphs::compute(sub, bounds.segregating),
        subfixing,
        basics,
        configuration,
        verdict: classify(sub, &bounds),
        tails,
    }
}

fn verdict_name(v: &TailVerdict) -> &'static str {
    match v {
        TailVerdict::Equivalent(_) => "equivalent",
        TailVerdict::NotEquivalent => "not equivalent",
        TailVerdict::Indeterminate => "indeterminate",
    }
}

fn segregating_text(r: &SegregationReport) -> String {
    let mut s = match r.least {
        Bounded::Found(n) => format!("{} {n}", r.side),
        Bounded::NotFoundUpTo(b) => format!("{} none up to {b}", r.side),
    };
    if let Some(a) = r.advisory {
        s.push_str(&format!(" (advisory bound {}, requires regularity)", a.value));
    }
    s
}

/// Edges listed per letter graph in the analyze summary.
const SUMMARY_EDGES: usize = 24;

fn map_text<V: Clone + Ord>(
    name: &str,
    map: &EndpointMap<V>,
    label: impl Fn(&V) -> String,
    limit: Option<usize>,
) -> String {
    let limit = limit.unwrap_or(usize::MAX);
    let mut edges: Vec<String> = map
        .edges()
        .take(limit)
        .map(|(a, b)| format!("{} -> {}", label(a), label(b)))
        .collect();
    if map.len() > limit {
        edges.push(format!("... {} more", map.len() - limit));
    }
    let state = if map.is_subfixed() { "subfixed" } else { "not subfixed" };
    format!("{name}: {state}; {}\n", edges.join(", "))
}

fn verdict_json(sub: &Substitution, v: &PeriodicityVerdict) -> Value {
    match v {
        PeriodicityVerdict::Periodic => json!({"kind": "periodic"}),
        PeriodicityVerdict::Aperiodic { power, certificate: (a, b) } => {
            let q = sub.power(*power).expect("power was already computed");
            json!({"kind": "aperiodic", "power": power, "certificate": [a.render(&q), b.render(&q)]})
        }
        PeriodicityVerdict::Unsupported(e) => json!({"kind": "unsupported", "reason": e.to_string()}),
    }
}

fn verdict_text(sub: &Substitution, v: &PeriodicityVerdict) -> String {
    match verdict_json(sub, v) {
        Value::Object(m) => match m["kind"].as_str().unwrap() {
            "aperiodic" => format!(
                "aperiodic (power {}, certificate {} {})",
                m["power"], m["certificate"][0].as_str().unwrap(), m["certificate"][1].as_str().unwrap()
            ),
            "unsupported" => format!("unsupported: {}", m["reason"].as_str().unwrap()),
            other => other.to_string(),
        },
        _ => unreachable!(),
    }
}

fn analysis_json(a: &Analysis) -> Value {
    let sub = &a.sub;
    let conflict = |e: &Option<Error>| match e {
        None => json!(true),
        Some(_) => json!(false),
    };
    let graphs = match &a.graphs {
        Ok(g) => json!({
            "ll": endpoint_map_json(&g.ll, |l| letter_label(sub, l)),
            "rl": endpoint_map_json(&g.rl, |l| letter_label(sub, l)),
            "ls": g.ls.as_ref().map(|m| endpoint_map_json(m, |p| pair_label(sub, p))),
            "rs": g.rs.as_ref().map(|m| endpoint_map_json(m, |p| pair_label(sub, p))),
            "all_subfixed": g.all_subfixed(),
        }),
        Err(e) => json!({"error": e.to_string()}),
    };
    let segregating = match &a.graphs {
        Ok(g) => json!({"left": g.left, "right": g.right}),
        Err(e) => json!({"error": e.to_string()}),
    };
    let basics = match &a.basics {
        Ok((p, q, bs)) => json!({
            "power": p,
            "generators": bs.iter().map(|g| generator_json(q, g)).collect::<Vec<_>>(),
            "tail_equivalences": a.tails.iter().map(|(i, j, l, r)| json!({
                "first": bs[*i].render(q),
                "second": bs[*j].render(q),
                "left": verdict_name(l),
                "right": verdict_name(r),
            })).collect::<Vec<_>>(),
        }),
        Err(e) => json!({"error": e.to_string()}),
    };
    json!({
        "primitive": a.primitivity.is_primitive(),
        "prefix_free": conflict(&a.prefix),
        "postfix_free": conflict(&a.postfix),
        "segregating": segregating,
        "graphs": graphs,
        "subfixing_power": match &a.subfixing {
            Ok(p) => json!(p),
            Err(e) => json!({"error": e.to_string()}),
        },
        "basic_generators": basics,
        "configuration_graph": match &a.configuration {
            Ok(cg) => configuration_json(cg),
            Err(e) => json!({"unsupported": e.to_string()}),
        },
        "verdict": verdict_json(sub, &a.verdict),
    })
}

fn analysis_text(a: &Analysis) -> String {
    let sub = &a.sub;
    let mut out = String::new();
    out.push_str(&format!("letters: {}\n", sub.len()));
    out.push_str(&match &a.primitivity {
        Primitivity::Primitive { exponent } => format!("primitive: yes (positive power {exponent})\n"),
        Primitivity::NotPrimitive(reason) => format!("primitive: no ({reason:?})\n"),
    });
    for (name, e) in [("prefix free", &a.prefix), ("postfix free", &a.postfix)] {
        match e {
            None => out.push_str(&format!("{name}: yes\n")),
            Some(e) => out.push_str(&format!("{name}: no ({e})\n")),
        }
    }
    match &a.graphs {
        Ok(g) => {
            out.push_str(&format!(
                "segregating: {}; {}\n",
                segregating_text(&g.left),
                segregating_text(&g.right)
            ));
            out.push_str(&map_text("ll", &g.ll, |l| letter_label(sub, l), Some(SUMMARY_EDGES)));
            out.push_str(&map_text("rl", &g.rl, |l| letter_label(sub, l), Some(SUMMARY_EDGES)));
            for (name, m) in [("ls", &g.ls), ("rs", &g.rs)] {
                match m {
                    Some(m) => out.push_str(&map_text(name, m, |p| pair_label(sub, p), Some(SUMMARY_EDGES))),
                    None => out.push_str(&format!("{name}: unavailable (no segregating number)\n")),
                }
            }
        }
        Err(e) => out.push_str(&format!("letter graphs: {e}\n")),
    }
    match &a.subfixing {
        Ok(p) => out.push_str(&format!("subfixing power: {p}\n")),
        Err(e) => out.push_str(&format!("subfixing power: {e}\n")),
    }
    match &a.basics {
        Ok((p, q, bs)) => {
            out.push_str(&format!("basic generators (power {p}):\n"));
            for g in bs {
                out.push_str(&format!("  {}\n", g.render(q)));
            }
            for (i, j, l, r) in &a.tails {
                out.push_str(&format!(
                    "  {} ~ {}: left {}, right {}\n",
                    bs[*i].render(q),
                    bs[*j].render(q),
                    verdict_name(l),
                    verdict_name(r)
                ));
            }
        }
        Err(e) => out.push_str(&format!("basic generators: {e}\n")),
    }
    match &a.configuration {
        Ok(cg) => {
            out.push_str(&format!(
                "configuration graph (power {}): {} left, {} right, {} edges\n",
                cg.power,
                cg.left_labels.len(),
                cg.right_labels.len(),
                cg.graph.edges().len()
            ));
            for (k, (&(l, r), g)) in cg.graph.edges().iter().zip(&cg.edge_generators).enumerate() {
                out.push_str(&format!(
                    "  edge {}: {} -- {} from {}\n",
                    k + 1,
                    cg.graph.vertex(l).id,
                    cg.graph.vertex(r).id,
                    g.render(&cg.substitution)
                ));
            }
        }
        Err(e) => out.push_str(&format!("configuration graph: unsupported ({e})\n")),
    }
    out.push_str(&format!("verdict: {}\n", verdict_text(sub, &a.verdict)));
    out
}

fn analyze(config: &RunConfig, sub: &Substitution) -> Result<String, Failure> {
    let a = run_analysis(config, sub);
    match config.format {
        OutputFormat::Text => Ok(analysis_text(&a)),
        OutputFormat::Json => Ok(json_text(&analysis_json(&a))),
        OutputFormat::Dot => match &a.configuration {
            Ok(cg) => Ok(bipartite_dot("config", &cg.graph)),
            Err(e) => Err(Failure(1, format!("configuration graph unsupported: {e}"))),
        },
    }
}

fn realize_cmd(config: &RunConfig, g: &BipartiteMultigraph, trace: bool) -> Result<String, Failure> {
    let (sub, t) = realize(g)?;
    let text = substitution_text(&sub, config.tokens);
    match config.format {
        OutputFormat::Text => {
            let mut out = text;
            if trace {
                for line in t.lines() {
                    out.push_str(&format!("# {line}\n"));
                }
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let mut v = json!({"substitution": text});
            if trace {
                v["trace"] = serde_json::to_value(&t).expect("trace serializes");
            }
            Ok(json_text(&v))
        }
        OutputFormat::Dot => Err(no_dot("realize")),
    }
}

fn verify_cmd(config: &RunConfig, g: &BipartiteMultigraph) -> Result<String, Failure> {
    let report = verify_roundtrip(g, &config.bounds())?;
    if let Some(c) = report.first_failure() {
        return Err(Failure(1, format!("verification failed at `{}`: {}", c.name, c.detail)));
    }
    let cg = report.configuration.as_ref().expect("passing report has a configuration graph");
    let iso = report.isomorphism.as_ref().expect("passing report has an isomorphism");
    let witness: Vec<(String, String, String)> = iso
        .mapping
        .iter()
        .enumerate()
        .map(|(v, &w)| {
            let from = cg.graph.vertex(v);
            (from.side.to_string(), from.id.clone(), g.vertex(w).id.clone())
        })
        .collect();
    match config.format {
        OutputFormat::Text => {
            let mut out = String::new();
            for c in &report.checks {
                out.push_str(&format!("ok {}\n", c.name));
            }
            out.push_str(&substitution_text(&report.substitution, config.tokens));
            for (side, wing, vertex) in &witness {
                out.push_str(&format!("{side} wing {wing} => {vertex}\n"));
            }
            Ok(out)
        }
        OutputFormat::Json => Ok(json_text(&json!({
            "passed": true,
            "checks": report.checks,
            "substitution": substitution_text(&report.substitution, config.tokens),
            "configuration_graph": configuration_json(cg),
            "isomorphism": witness.iter().map(|(s, w, v)| json!({"side": s, "wing": w, "vertex": v})).collect::<Vec<_>>(),
        }))),
        OutputFormat::Dot => Ok(bipartite_dot("config", &cg.graph)),
    }
}

fn graphs_cmd(config: &RunConfig, sub: &Substitution, which: Which) -> Result<String, Failure> {
    let name = match which {
        Which::Ll => "ll",
        Which::Rl => "rl",
        Which::Ls => "ls",
        Which::Rs => "rs",
        Which::Config => "config",
    };
    if which == Which::Config {
        let cg = configuration_graph(sub, &config.bounds())
            .map_err(|e| Failure(1, format!("configuration graph unsupported: {e}")))?;
        return Ok(match config.format {
            OutputFormat::Dot => bipartite_dot(name, &cg.graph),
            OutputFormat::Json => json_text(&configuration_json(&cg)),
            OutputFormat::Text => cg.graph.to_text(),
        });
    }
    let graphs = LetterGraphs::compute(sub, config.seg_bound)?;
    let emit = |map_dot: String, map_json: Value, map_txt: String| match config.format {
        OutputFormat::Dot => map_dot,
        OutputFormat::Json => json_text(&map_json),
        OutputFormat::Text => map_txt,
    };
    let letters = |m: &EndpointMap<_>| {
        emit(
            endpoint_map_dot(name, m, |l| letter_label(sub, l)),
            endpoint_map_json(m, |l| letter_label(sub, l)),
            map_text(name, m, |l| letter_label(sub, l), None),
        )
    };
    let pairs = |m: Option<&EndpointMap<_>>, side: Side| match m {
        Some(m) => Ok(emit(
            endpoint_map_dot(name, m, |p| pair_label(sub, p)),
            endpoint_map_json(m, |p| pair_label(sub, p)),
            map_text(name, m, |p| pair_label(sub, p), None),
        )),
        None => Err(Failure(
            1,
            format!("{name} unavailable: no {side} segregating number up to {}", config.seg_bound),
        )),
    };
    match which {
        Which::Ll => Ok(letters(&graphs.ll)),
        Which::Rl => Ok(letters(&graphs.rl)),
        Which::Ls => pairs(graphs.ls.as_ref(), Side::Left),
        Which::Rs => pairs(graphs.rs.as_ref(), Side::Right),
        Which::Config => unreachable!(),
    }
}
