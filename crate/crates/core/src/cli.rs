//! Command-line front end: `analyze`, `verify` and `gen`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 64 usage error.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::AnalysisReport;
use crate::error::Error;
use crate::format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use crate::generators::{self, Labeled, LABELED_CAP, NAMED};
use crate::graph::Graph;
use crate::stable::DEFAULT_OMEGA_CAP;
use crate::verify::{verify_corpus, CorpusSpec, VerifyOptions, SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "stablecore", version, about = "Maximum stable sets, cores and matchings of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report invariants of each input graph.
    Analyze(AnalyzeArgs),
    /// Check every structural statement over a graph corpus.
    Verify(VerifyArgs),
    /// Print a named graph or a member of a parametric family.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Input file; stdin when absent or `-`.
    pub input: Option<PathBuf>,
    /// Read one graph6 string per line (default).
    #[arg(long, conflicts_with = "edge_list")]
    pub graph6: bool,
    /// Read a single graph in edge-list format.
    #[arg(long)]
    pub edge_list: bool,
    /// Stop counting maximum stable sets after this many.
    #[arg(long, default_value_t = DEFAULT_OMEGA_CAP)]
    pub omega_cap: usize,
    /// Emit one JSON object per graph.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sweep all labeled graphs on this many vertices. Defaults to 6 unless
    /// only sampled orders are requested.
    #[arg(long)]
    pub exhaustive_n: Option<usize>,
    /// Also sweep every smaller order down to this one.
    #[arg(long)]
    pub exhaustive_min: Option<usize>,
    /// Orders to sample G(n, p) graphs on.
    #[arg(long, value_delimiter = ',')]
    pub sample_n: Vec<usize>,
    /// Samples per order and edge probability.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Edge probabilities for sampling.
    #[arg(long, value_delimiter = ',', default_values_t = [0.2, 0.5])]
    pub edge_prob: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest k for parameterized statements.
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
    /// Stop after the first graph with a failing statement.
    #[arg(long)]
    pub fail_fast: bool,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family or named graph.
    pub family: String,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
    pub format: OutputFormat,
    /// Write the vertex labels as JSON to this file.
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => analyze(a, stdin, out),
        Command::Verify(v) => verify(v, out),
        Command::Gen(g) => gen(g, out),
    };
    match result {
        Ok(code) => code,
        Err((code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn io_err(e: std::io::Error) -> (i32, String) {
    (EXIT_INPUT, e.to_string())
}

fn analyze(a: AnalyzeArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    let mut text = String::new();
    match &a.input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| (EXIT_INPUT, format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin.read_to_string(&mut text).map_err(io_err)?;
        }
    }
    let graphs = if a.edge_list {
        let blank = text
            .lines()
            .all(|l| l.split('#').next().unwrap_or("").trim().is_empty());
        if blank {
            Vec::new()
        } else {
            vec![parse_edge_list(&text).map_err(|e| (EXIT_INPUT, e.to_string()))?]
        }
    } else {
        parse_graph6(&text).map_err(|e| (EXIT_INPUT, e.to_string()))?
    };
    let reports: Vec<AnalysisReport> = graphs
        .iter()
        .map(|g| AnalysisReport::with_omega_cap(g, a.omega_cap))
        .collect();
    if a.json {
        for r in &reports {
            writeln!(out, "{}", r.to_json()).map_err(io_err)?;
        }
    } else if !reports.is_empty() {
        write_table(&reports, out).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn write_table(reports: &[AnalysisReport], out: &mut dyn Write) -> std::io::Result<()> {
    let header = [
        "graph6", "n", "m", "alpha", "mu", "xi", "core", "|N(core)|", "ke", "pm", "qr", "class",
        "omega", "obstruction",
    ];
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.alpha.to_string(),
                r.mu.to_string(),
                r.xi.to_string(),
                r.core.to_string(),
                r.n_core_neighborhood_size.to_string(),
                r.is_ke.to_string(),
                r.has_perfect_matching.to_string(),
                r.is_quasi_regularizable.to_string(),
                r.classification.as_str().to_string(),
                r.omega_count.to_string(),
                r.obstruction.map_or("-".to_string(), |s| s.to_string()),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for r in &rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn verify(v: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let usage = |m: String| (EXIT_USAGE, m);
    let top = match v.exhaustive_n {
        Some(n) => Some(n),
        None if v.sample_n.is_empty() => Some(6),
        None => None,
    };
    if let Some(n) = top {
        if n > LABELED_CAP {
            return Err(usage(format!(
                "--exhaustive-n {n} exceeds the supported maximum of {LABELED_CAP}"
            )));
        }
    }
    let exhaustive = match (top, v.exhaustive_min) {
        (Some(n), Some(m)) if m > n => {
            return Err(usage(format!("--exhaustive-min {m} exceeds --exhaustive-n {n}")))
        }
        (Some(n), m) => m.unwrap_or(n)..=n,
        (None, Some(_)) => return Err(usage("--exhaustive-min needs --exhaustive-n".into())),
        #[allow(clippy::reversed_empty_ranges)]
        (None, None) => 1..=0,
    };
    if v.jobs == 0 {
        return Err(usage("--jobs must be at least 1".into()));
    }
    let corpus = CorpusSpec {
        exhaustive,
        sample_orders: v.sample_n.clone(),
        edge_probs: v.edge_prob.clone(),
        samples: v.samples,
        seed: v.seed,
    };
    corpus.validate().map_err(|e| usage(e.to_string()))?;
    let opts = VerifyOptions {
        k_range: 1..=v.k_max,
        fail_fast: v.fail_fast,
        jobs: v.jobs,
    };
    let summary = verify_corpus(&corpus, &opts).map_err(|e| usage(e.to_string()))?;
    if v.json {
        writeln!(out, "{}", summary.to_json()).map_err(io_err)?;
    } else {
        writeln!(out, "graphs: {}", summary.tally.graphs).map_err(io_err)?;
        let w = summary.tally.predicates.keys().map(String::len).max().unwrap_or(0);
        writeln!(out, "{:<w$}  {:>10}  {:>10}  {:>6}", "statement", "applicable", "passed", "failed")
            .map_err(io_err)?;
        for (id, c) in &summary.tally.predicates {
            writeln!(out, "{id:<w$}  {:>10}  {:>10}  {:>6}", c.applicable, c.passed, c.failed)
                .map_err(io_err)?;
        }
        for f in &summary.failures {
            let witness = serde_json::to_string(&f.witness).expect("serializable");
            writeln!(out, "FAIL {} {} {}", f.id, f.graph6, witness).map_err(io_err)?;
        }
        writeln!(out, "{}", if summary.ok { "ok" } else { "FAILED" }).map_err(io_err)?;
    }
    Ok(if summary.ok { EXIT_OK } else { EXIT_FAILURE })
}

#[derive(Serialize)]
struct LabelSidecar<'a> {
    schema: &'static str,
    family: &'a str,
    graph6: String,
    labels: Vec<String>,
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, (i32, String)> {
    value.ok_or_else(|| (EXIT_USAGE, format!("{family} needs --{flag}")))
}

/// Builds the graph for `gen`; errors carry an exit code.
pub fn generate(a: &GenArgs) -> Result<Labeled, (i32, String)> {
    let f = a.family.as_str();
    let usage = |e: Error| (EXIT_USAGE, e.to_string());
    let plain = |g: Graph| Labeled {
        labels: (0..g.order()).map(|v| v.to_string()).collect(),
        graph: g,
    };
    let labeled = match f {
        "fig45" => generators::fig45(require(a.p, "p", f)?, require(a.r, "r", f)?),
        "fig77" => generators::fig77(require(a.p, "p", f)?),
        "fig77_odd" => generators::fig77_odd(require(a.p, "p", f)?),
        "remark_family" => generators::remark_family(require(a.k, "k", f)?, require(a.p, "p", f)?),
        "k1_union_c4" => generators::k1_union_c4().map(plain),
        "path" | "cycle" | "complete" | "k1_union_complete" => {
            generators::standard(f, require(a.n, "n", f)?).map(plain)
        }
        _ if NAMED.contains(&f) => generators::named(f),
        _ => Err(Error::UnknownFamily(f.to_string())),
    };
    labeled.map_err(usage)
}

fn gen(a: GenArgs, out: &mut dyn Write) -> CmdResult {
    let lg = generate(&a)?;
    let text = match a.format {
        OutputFormat::Graph6 => format!("{}\n", emit_graph6(&lg.graph)),
        OutputFormat::EdgeList => emit_edge_list(&lg.graph),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    if let Some(path) = &a.labels {
        let sidecar = LabelSidecar {
            schema: SCHEMA,
            family: &a.family,
            graph6: emit_graph6(&lg.graph),
            labels: lg.labels.clone(),
        };
        let v = serde_json::to_value(&sidecar).expect("serializable");
        std::fs::write(path, format!("{}\n", v))
            .map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("stablecore").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_cycle() {
        assert_eq!(call(&["gen", "cycle", "--n", "4"], ""), (0, "Cl\n".into(), String::new()));
    }

    #[test]
    fn gen_unknown_family() {
        let (code, _, err) = call(&["gen", "nonesuch"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("nonesuch"));
    }

    #[test]
    fn gen_missing_parameter() {
        assert_eq!(call(&["gen", "fig45", "--p", "2"], "").0, EXIT_USAGE);
    }

    #[test]
    fn analyze_empty_and_bad() {
        assert_eq!(call(&["analyze", "--json"], ""), (0, String::new(), String::new()));
        let (code, _, err) = call(&["analyze"], "Cl\nC\n");
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn analyze_edge_list() {
        let (code, out, _) = call(&["analyze", "--edge-list", "--json"], "3\n0 1\n1 2\n");
        assert_eq!(code, 0);
        assert!(out.contains("\"obstruction\":[0,2]"));
    }

    #[test]
    fn verify_bounds() {
        assert_eq!(call(&["verify", "--exhaustive-n", "8"], "").0, EXIT_USAGE);
        let (code, out, _) = call(&["verify", "--exhaustive-n", "1", "--json"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"graphs\":1"));
        // The edgeless graph on 3 vertices breaks two bounds.
        let (code, out, _) = call(&["verify", "--exhaustive-n", "3"], "");
        assert_eq!(code, EXIT_FAILURE);
        assert!(out.contains("FAIL T5[k=2] B? "), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--samples", "x"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
    }
}
