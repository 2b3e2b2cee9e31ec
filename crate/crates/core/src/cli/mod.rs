//! Command-line front end: the graph JSON format, the random graph
//! generator, and the `validate`, `count`, `verify`, `census` and `fuzz`
//! commands.
//!
//! Every command returns a [`CommandOutput`]; exit codes are 0 on success,
//! 1 when a check or validation fails, and 2 on unreadable input or bad
//! arguments.

mod document;
pub mod fuzz;

pub use document::{EdgeDoc, GraphDocument, Id, SquareDoc};

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::corr::check_generating_system;
use crate::iterate::census::census;
use crate::iterate::representation::{check_iota_phi, check_representation, check_veq};
use crate::iterate::suites::{check_hexagon, check_mlem1, check_mlem2, check_module};
use crate::iterate::{IterateError, Stage};
use crate::kgraph::{Grade, KGraph, KGraphError, MultiDegree};
use crate::kpalg::fuzz::{check_kp, DEFAULT_CASES, DEFAULT_SEED};
use crate::report::{Failure, Recorder, Status, VerificationReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("cannot read {0}")]
    Io(String),
    #[error("malformed graph document: {0}")]
    Parse(String),
    #[error("{kind}: {0}", kind = .0.kind())]
    Graph(#[from] KGraphError),
    #[error("bad argument: {0}")]
    BadArgument(String),
    #[error("generation exhausted: {0}")]
    GenerationExhausted(String),
    #[error(transparent)]
    Iterate(#[from] IterateError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Graph(_) => EXIT_FAIL,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Gensys,
    Kp,
    Module,
    Mlem1,
    Mlem2,
    Hexagon,
    Rep,
    Veq,
    Iotaphi,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Gensys,
        Suite::Kp,
        Suite::Module,
        Suite::Mlem1,
        Suite::Mlem2,
        Suite::Hexagon,
        Suite::Rep,
        Suite::Veq,
        Suite::Iotaphi,
    ];

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }

    /// Coefficient level used when none is given.
    pub fn default_level(self) -> u32 {
        match self {
            Suite::Module | Suite::Rep => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub coeff_level: Option<u32>,
    pub timings: bool,
}

pub fn run_suite(graph: &KGraph, suite: Suite, opts: VerifyOptions) -> Vec<VerificationReport> {
    let level = opts.coeff_level.unwrap_or(suite.default_level());
    let timed = opts.timings;
    match suite {
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| run_suite(graph, s, opts))
            .collect(),
        Suite::Gensys => vec![check_generating_system(graph, timed)],
        Suite::Kp => vec![check_kp(graph, DEFAULT_CASES, DEFAULT_SEED, timed)],
        Suite::Module => vec![check_module(graph, level, timed)],
        Suite::Mlem1 => vec![check_mlem1(graph, level, timed)],
        Suite::Mlem2 => vec![check_mlem2(graph, level, timed)],
        Suite::Hexagon => vec![check_hexagon(graph, level, timed)],
        Suite::Rep => vec![check_representation(graph, level, timed)],
        Suite::Veq => vec![check_veq(graph, timed)],
        Suite::Iotaphi => vec![check_iota_phi(graph, level, timed)],
    }
}

/// The reports for one graph under one `verify` invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRun {
    pub graph: String,
    pub reports: Vec<VerificationReport>,
}

impl GraphRun {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

/// Runs the suites on separate threads; reports come back in suite order.
pub fn verify_graph(name: &str, graph: &KGraph, suite: Suite, opts: VerifyOptions) -> GraphRun {
    let suites = suite.expand();
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| scope.spawn(move || run_suite(graph, s, opts)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    GraphRun {
        graph: name.to_string(),
        reports,
    }
}

/// Like [`verify_graph`], but a document that fails validation yields a
/// failing `gensys` report whose input is the offending fragment.
pub fn verify_document(
    name: &str,
    doc: &GraphDocument,
    suite: Suite,
    opts: VerifyOptions,
) -> GraphRun {
    match doc.build() {
        Ok(graph) => verify_graph(name, &graph, suite, opts),
        Err(e) => {
            let mut rec = Recorder::new("gensys");
            let fragment = serde_json::to_string(&doc.fragment(&e)).expect("documents serialize");
            rec.fail(fragment, e.kind().to_string(), e.to_string());
            GraphRun {
                graph: name.to_string(),
                reports: vec![rec.finish(opts.timings)],
            }
        }
    }
}

/// `|Lambda^n|` in total and per range vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCount {
    pub degree: Vec<u32>,
    pub total: usize,
    pub by_vertex: BTreeMap<String, usize>,
}

pub fn parse_degree(text: &str, k: usize) -> Result<MultiDegree, CliError> {
    let coords = text
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::BadArgument(format!("degree `{text}`: {e}")))?;
    if coords.len() != k {
        return Err(CliError::BadArgument(format!(
            "degree `{text}` has {} entries, the graph has rank {k}",
            coords.len()
        )));
    }
    Ok(MultiDegree::new(coords))
}

pub fn count_paths(graph: &KGraph, degree: &MultiDegree) -> PathCount {
    let by_vertex: BTreeMap<String, usize> = graph
        .vertices()
        .map(|v| {
            let n = graph.paths_of_degree(degree, Some(v)).len();
            (graph.vertex_name(v).to_string(), n)
        })
        .collect();
    PathCount {
        degree: degree.coords().to_vec(),
        total: by_vertex.values().sum(),
        by_vertex,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub m: usize,
    pub level: u32,
    pub rows: Vec<crate::iterate::census::CensusRow>,
}

impl CensusTable {
    pub fn agrees(&self) -> bool {
        self.rows.iter().all(|r| r.agrees())
    }
}

pub fn census_table(graph: &KGraph, m: usize, level: u32) -> Result<CensusTable, CliError> {
    let stage = Stage::new(graph, m)?;
    Ok(CensusTable {
        m,
        level,
        rows: census(&stage, level)?,
    })
}

/// One generated graph with its verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzRun {
    pub document: GraphDocument,
    #[serde(flatten)]
    pub run: GraphRun,
}

pub fn fuzz_runs(
    shape: &fuzz::FuzzShape,
    count: usize,
    seed: u64,
    opts: VerifyOptions,
) -> Result<Vec<FuzzRun>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let docs = fuzz::generate_many(shape, count, &mut rng)?;
    Ok(docs
        .into_iter()
        .enumerate()
        .map(|(i, document)| {
            let run = verify_document(&format!("fuzz-{seed}-{i}"), &document, Suite::All, opts);
            FuzzRun { document, run }
        })
        .collect())
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(code: i32, stdout: String) -> Self {
        CommandOutput {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &CliError) -> Self {
        CommandOutput {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn graph_name(path: &FsPath) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_graph(path: &FsPath) -> Result<KGraph, CliError> {
    Ok(GraphDocument::load(path)?.build()?)
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
    }
}

fn render_failure(out: &mut String, f: &Failure) {
    let _ = writeln!(out, "    input: {}", f.input);
    let _ = writeln!(out, "    lhs:   {}", f.lhs);
    let _ = writeln!(out, "    rhs:   {}", f.rhs);
}

pub fn render_run(run: &GraphRun) -> String {
    let mut out = format!("graph {}\n", run.graph);
    for r in &run.reports {
        let _ = write!(
            out,
            "  {:<8} {} {:>7} cases",
            r.suite,
            status_word(r.status),
            r.cases
        );
        if r.millis > 0 {
            let _ = write!(out, " {:>7} ms", r.millis);
        }
        out.push('\n');
        for f in &r.failures {
            render_failure(&mut out, f);
        }
    }
    out
}

pub fn cmd_validate(path: &FsPath) -> CommandOutput {
    let doc = match GraphDocument::load(path) {
        Ok(d) => d,
        Err(e) => return CommandOutput::error(&e),
    };
    match doc.build() {
        Ok(g) => CommandOutput::ok(
            EXIT_PASS,
            format!(
                "valid {}-graph: {} vertices, {} edges, {} squares\n",
                g.k(),
                g.vertices().count(),
                g.edges().count(),
                doc.squares.len()
            ),
        ),
        Err(e) => {
            let fragment = doc.fragment(&e).to_json();
            CommandOutput {
                code: EXIT_FAIL,
                stdout: format!("invalid: {}: {e}\n{fragment}\n", e.kind()),
                stderr: String::new(),
            }
        }
    }
}

pub fn cmd_count(path: &FsPath, degree: &str, by_vertex: bool, json: bool) -> CommandOutput {
    let result = load_graph(path).and_then(|g| {
        let n = parse_degree(degree, g.k())?;
        Ok(count_paths(&g, &n))
    });
    let count = match result {
        Ok(c) => c,
        Err(e) => return CommandOutput::error(&e),
    };
    if json {
        return CommandOutput::ok(EXIT_PASS, to_json(&count));
    }
    let mut out = format!("{}\n", count.total);
    if by_vertex {
        for (v, n) in &count.by_vertex {
            let _ = writeln!(out, "  {v}: {n}");
        }
    }
    CommandOutput::ok(EXIT_PASS, out)
}

pub fn cmd_verify(path: &FsPath, suite: Suite, opts: VerifyOptions, json: bool) -> CommandOutput {
    let doc = match GraphDocument::load(path) {
        Ok(d) => d,
        Err(e) => return CommandOutput::error(&e),
    };
    let run = verify_document(&graph_name(path), &doc, suite, opts);
    let code = if run.passed() { EXIT_PASS } else { EXIT_FAIL };
    let stdout = if json {
        to_json(&run)
    } else {
        render_run(&run)
    };
    CommandOutput::ok(code, stdout)
}

pub fn cmd_census(path: &FsPath, m: usize, level: u32, json: bool) -> CommandOutput {
    let table = match load_graph(path).and_then(|g| census_table(&g, m, level)) {
        Ok(t) => t,
        Err(e) => return CommandOutput::error(&e),
    };
    let code = if table.agrees() { EXIT_PASS } else { EXIT_FAIL };
    if json {
        return CommandOutput::ok(code, to_json(&table));
    }
    let mut out = format!(
        "census m={m} level={level}\n  {:<16} {:>10} {:>10}\n",
        "grade", "dictionary", "direct"
    );
    for row in &table.rows {
        let mark = if row.agrees() { "" } else { "  MISMATCH" };
        let grade = Grade(row.grade.clone()).to_string();
        let _ = writeln!(
            out,
            "  {grade:<16} {:>10} {:>10}{mark}",
            row.dictionary, row.direct
        );
    }
    CommandOutput::ok(code, out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzArgs {
    pub shape: fuzz::FuzzShape,
    pub count: usize,
    pub seed: u64,
    pub out_dir: Option<PathBuf>,
    pub opts: VerifyOptions,
}

pub fn cmd_fuzz(args: &FuzzArgs, json: bool) -> CommandOutput {
    let runs = match fuzz_runs(&args.shape, args.count, args.seed, args.opts) {
        Ok(r) => r,
        Err(e) => return CommandOutput::error(&e),
    };
    if let Some(dir) = &args.out_dir {
        for r in &runs {
            let file = dir.join(format!("{}.json", r.run.graph));
            if let Err(e) = std::fs::write(&file, r.document.to_json() + "\n") {
                return CommandOutput::error(&CliError::Io(format!("{}: {e}", file.display())));
            }
        }
    }
    let code = if runs.iter().all(|r| r.run.passed()) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    if runs.is_empty() {
        return CommandOutput::ok(code, String::new());
    }
    let stdout = if json {
        to_json(&runs)
    } else {
        runs.iter()
            .map(|r| format!("{}\n{}", r.document.to_json(), render_run(&r.run)))
            .collect()
    };
    CommandOutput::ok(code, stdout)
}

#[derive(Debug, Parser)]
#[command(
    name = "kladder",
    version,
    about = "Check k-graph data and the algebra built on it"
)]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a graph document is a valid k-graph.
    Validate { path: PathBuf },
    /// Count the paths of one degree.
    Count {
        path: PathBuf,
        /// Comma-separated degree, one entry per color.
        #[arg(long)]
        degree: String,
        /// Also count per range vertex.
        #[arg(long)]
        by_vertex: bool,
    },
    /// Run verification suites.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Coefficient length bound for the module suites.
        #[arg(long)]
        coeff_level: Option<u32>,
        /// Record wall time per suite.
        #[arg(long)]
        timings: bool,
    },
    /// Compare graded ranks of the dictionary and the direct span.
    Census {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        level: u32,
    },
    /// Generate random valid k-graphs and verify each.
    Fuzz {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        vertices: usize,
        /// Comma-separated edge counts, one per color.
        #[arg(long, value_delimiter = ',', default_value = "2,2")]
        edges_per_color: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write each generated document into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        coeff_level: Option<u32>,
        #[arg(long)]
        timings: bool,
    },
}

pub fn run(cli: Cli) -> CommandOutput {
    match cli.command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Count {
            path,
            degree,
            by_vertex,
        } => cmd_count(&path, &degree, by_vertex, cli.json),
        Command::Verify {
            path,
            suite,
            coeff_level,
            timings,
        } => cmd_verify(
            &path,
            suite,
            VerifyOptions {
                coeff_level,
                timings,
            },
            cli.json,
        ),
        Command::Census { path, m, level } => cmd_census(&path, m, level, cli.json),
        Command::Fuzz {
            k,
            vertices,
            edges_per_color,
            count,
            seed,
            out,
            coeff_level,
            timings,
        } => cmd_fuzz(
            &FuzzArgs {
                shape: fuzz::FuzzShape {
                    k,
                    vertices,
                    edges_per_color,
                },
                count,
                seed,
                out_dir: out,
                opts: VerifyOptions {
                    coeff_level,
                    timings,
                },
            },
            cli.json,
        ),
    }
}

#[cfg(test)]
mod tests;
