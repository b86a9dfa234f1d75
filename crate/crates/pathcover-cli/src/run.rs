//! Drivers for the `enumerate`, `cover`, and `check` subcommands.
//!
//! Each driver takes its parsed arguments plus explicit output handles and
//! returns a process exit code, which keeps the whole command behaviour
//! testable without spawning the binary. Item and test-path lines go to
//! `out` and are flushed one by one so downstream consumers see results as
//! they are produced; diagnostics and statistics go to `err`.

use crate::formats::{parse_graph, LabeledGraph};
use crate::stats::{graph_bytes, RunOutcome, StatTracker};
use clap::{Args, ValueEnum};
use pathcover::cover::{
    e_acyclic_path_coverage, prime_path_coverage, simple_cycle_coverage, simple_path_coverage,
    CoverageConfig, TestCase,
};
use pathcover::enumerate::{
    non_extendable_simple_paths, prime_paths, simple_cycles, RetainedState,
};
use pathcover::line::{line_graph, line_path_reduce};
use pathcover::{covers, Digraph, Path, SeseGraph, SeseViolation, VertexId};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

/// Everything finished and the output is complete.
pub const EXIT_OK: i32 = 0;
/// An internal failure: a verification miss or an output error.
pub const EXIT_INTERNAL: i32 = 1;
/// The input document was missing, malformed, or inconsistent.
pub const EXIT_INVALID_INPUT: i32 = 2;
/// The run stopped at an item or time budget with items still pending.
pub const EXIT_TRUNCATED: i32 = 3;
/// The graph is not single-entry single-exit but the command needs it.
pub const EXIT_NOT_SESE: i32 = 4;

/// Upper bound on items re-enumerated by `cover --verify`.
const VERIFY_ITEM_CAP: usize = 100_000;

/// Which item family `enumerate` streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateTarget {
    /// Simple cycles, one canonical representative per cyclic class.
    SimpleCycles,
    /// Non-extendable simple paths.
    SimplePaths,
    /// Prime paths: every rotation of every simple cycle, then the
    /// non-extendable simple paths.
    PrimePaths,
}

/// Coverage criterion for `cover`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverCriterion {
    /// Cover every simple cycle.
    SimpleCycle,
    /// Cover every non-extendable simple path.
    SimplePath,
    /// Cover every prime path.
    PrimePath,
    /// Cover every path without repeated edges.
    EAcyclicPath,
}

/// Line format for enumerated items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Comma-joined vertex labels, one path per line.
    Lines,
    /// One JSON object per line: `{"path": [...labels]}`.
    Ndjson,
}

/// Arguments for `pathcover enumerate`.
#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Item family to stream.
    #[arg(value_enum)]
    pub target: EnumerateTarget,
    /// Graph document (JSON or DOT).
    #[arg(long)]
    pub input: PathBuf,
    /// Stop after this many items; exits 3 if more were pending.
    #[arg(long)]
    pub max_items: Option<u64>,
    /// Stop after this many seconds; exits 3 if the budget ran out.
    #[arg(long)]
    pub timeout_secs: Option<f64>,
    /// Output line format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Lines)]
    pub format: OutputFormat,
    /// Print run statistics to stderr when done.
    #[arg(long)]
    pub stats: bool,
}

/// Arguments for `pathcover cover`.
#[derive(Debug, Args)]
pub struct CoverArgs {
    /// Coverage criterion to satisfy.
    #[arg(value_enum)]
    pub criterion: CoverCriterion,
    /// Graph document (JSON or DOT); must carry entry and exit roles.
    #[arg(long)]
    pub input: PathBuf,
    /// Number of items each test path covers (the last one may cover fewer).
    #[arg(long)]
    pub k: usize,
    /// Traverse each simple cycle twice in a row (simple-cycle only).
    #[arg(long)]
    pub double_cycle: bool,
    /// Re-enumerate the items afterwards and check each one is covered.
    #[arg(long)]
    pub verify: bool,
}

/// Arguments for `pathcover check`.
#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Graph document (JSON or DOT).
    #[arg(long)]
    pub input: PathBuf,
    /// Entry label; overrides the one in the document.
    #[arg(long)]
    pub entry: Option<String>,
    /// Exit label; overrides the one in the document.
    #[arg(long)]
    pub exit: Option<String>,
}

/// An item stream with observable retained state, boxable per target.
pub trait ItemStream: Iterator<Item = Path> + RetainedState {}
impl<T: Iterator<Item = Path> + RetainedState> ItemStream for T {}

/// A test-case stream with observable retained state.
pub trait CaseStream: Iterator<Item = TestCase> + RetainedState {}
impl<T: Iterator<Item = TestCase> + RetainedState> CaseStream for T {}

/// Reads and parses a graph document, reporting failures on `err`.
pub fn load_graph(path: &std::path::Path, err: &mut dyn Write) -> Result<LabeledGraph, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(err, "error: failed to read {}: {e}", path.display());
            return Err(EXIT_INVALID_INPUT);
        }
    };
    parse_graph(&text).map_err(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_INVALID_INPUT
    })
}

/// Opens the item stream for an enumerate target.
pub fn open_item_stream(target: EnumerateTarget, g: &Digraph) -> Box<dyn ItemStream> {
    match target {
        EnumerateTarget::SimpleCycles => Box::new(simple_cycles(g)),
        EnumerateTarget::SimplePaths => Box::new(non_extendable_simple_paths(g)),
        EnumerateTarget::PrimePaths => Box::new(prime_paths(g)),
    }
}

#[derive(Serialize)]
struct PathRecord<'a> {
    path: Vec<&'a str>,
}

fn emit_path(
    format: OutputFormat,
    labeled: &LabeledGraph,
    path: &Path,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Lines => writeln!(out, "{}", labeled.path_line(path))?,
        OutputFormat::Ndjson => {
            let record = PathRecord {
                path: path.vertices().iter().map(|v| labeled.label(*v)).collect(),
            };
            serde_json::to_writer(&mut *out, &record)?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()
}

/// Runs `pathcover enumerate`.
pub fn run_enumerate(args: &EnumerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let labeled = match load_graph(&args.input, err) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let mut stream = open_item_stream(args.target, &labeled.graph);
    let deadline = args
        .timeout_secs
        .map(|s| Instant::now() + Duration::from_secs_f64(s));
    let budget = args.max_items.unwrap_or(u64::MAX);
    let mut tracker = StatTracker::start("stream");
    let mut peak_cells = 0u64;
    let outcome = loop {
        if tracker.items() >= budget {
            // Probe one item further so a budget that exactly matches the
            // stream length still counts as a complete run.
            break if stream.next().is_some() {
                RunOutcome::TruncatedItems
            } else {
                RunOutcome::Completed
            };
        }
        if deadline.is_some_and(|d| Instant::now() >= d) {
            break RunOutcome::TruncatedTime;
        }
        match stream.next() {
            Some(path) => {
                if let Err(e) = emit_path(args.format, &labeled, &path, out) {
                    let _ = writeln!(err, "error: output failed: {e}");
                    return EXIT_INTERNAL;
                }
                tracker.record_item();
                tracker.record_retained(stream.retained_paths());
                peak_cells = peak_cells.max(stream.retained_cells() as u64);
            }
            None => break RunOutcome::Completed,
        }
    };
    if args.stats {
        let stats = tracker.finish(outcome, graph_bytes(&labeled.graph), peak_cells);
        let _ = writeln!(err, "{}", stats.render());
    }
    match outcome {
        RunOutcome::Completed => EXIT_OK,
        _ => EXIT_TRUNCATED,
    }
}

fn render_violation(labeled: &LabeledGraph, violation: &SeseViolation) -> String {
    let list = |vs: &[VertexId]| {
        vs.iter()
            .map(|v| labeled.label(*v).to_owned())
            .collect::<Vec<_>>()
            .join(", ")
    };
    match violation {
        SeseViolation::TooFewVertices { vertex_count } => {
            format!("graph has {vertex_count} vertices but needs at least 2")
        }
        SeseViolation::EntryEqualsExit { vertex } => {
            format!("entry and exit are the same vertex {:?}", labeled.label(*vertex))
        }
        SeseViolation::EntryHasIncoming { entry, sources } => format!(
            "entry {:?} has incoming edges from: {}",
            labeled.label(*entry),
            list(sources)
        ),
        SeseViolation::ExitHasOutgoing { exit, targets } => format!(
            "exit {:?} has outgoing edges to: {}",
            labeled.label(*exit),
            list(targets)
        ),
        SeseViolation::NotOnEntryExitPath { vertices } => format!(
            "not on any entry-to-exit path: {}",
            list(vertices)
        ),
    }
}

/// Opens the test-case stream for a cover criterion.
pub fn open_case_stream(
    criterion: CoverCriterion,
    sese: &SeseGraph,
    config: CoverageConfig,
) -> Box<dyn CaseStream> {
    match criterion {
        CoverCriterion::SimpleCycle => Box::new(simple_cycle_coverage(sese, config)),
        CoverCriterion::SimplePath => Box::new(simple_path_coverage(sese, config)),
        CoverCriterion::PrimePath => Box::new(prime_path_coverage(sese, config)),
        CoverCriterion::EAcyclicPath => Box::new(e_acyclic_path_coverage(sese, config)),
    }
}

/// Runs `pathcover cover`.
pub fn run_cover(args: &CoverArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let labeled = match load_graph(&args.input, err) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let (entry, exit) = match (labeled.entry, labeled.exit) {
        (Some(entry), Some(exit)) => (entry, exit),
        _ => {
            let _ = writeln!(
                err,
                "error: cover requires a graph document with entry and exit roles"
            );
            return EXIT_INVALID_INPUT;
        }
    };
    let config = match CoverageConfig::new(args.k, args.double_cycle) {
        Ok(config) => config,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID_INPUT;
        }
    };
    if args.double_cycle && args.criterion != CoverCriterion::SimpleCycle {
        let _ = writeln!(err, "note: --double-cycle only affects simple-cycle coverage");
    }
    let sese = match SeseGraph::try_new(labeled.graph.clone(), entry, exit) {
        Ok(sese) => sese,
        Err(report) => {
            for violation in report.violations() {
                let _ = writeln!(err, "error: {}", render_violation(&labeled, violation));
            }
            return EXIT_NOT_SESE;
        }
    };

    let mut stream = open_case_stream(args.criterion, &sese, config);
    let mut cases = 0u64;
    let mut items = 0u64;
    let mut kept: Vec<TestCase> = Vec::new();
    for case in stream.by_ref() {
        if let Err(e) = emit_path(OutputFormat::Lines, &labeled, &case.path, out) {
            let _ = writeln!(err, "error: output failed: {e}");
            return EXIT_INTERNAL;
        }
        cases += 1;
        items += case.items_covered as u64;
        if args.verify {
            kept.push(case);
        }
    }
    let _ = writeln!(err, "cases: {cases}");
    let _ = writeln!(err, "items covered: {items}");
    if args.verify {
        verify_cover(args.criterion, config, &labeled, &sese, &kept, err)
    } else {
        EXIT_OK
    }
}

/// Collects every simple path of the line graph of `g`, mapped back to the
/// edge path it spells in `g`, up to `cap` items. The second component tells
/// whether the collection is complete.
fn collect_edge_path_items(g: &Digraph, cap: usize) -> (Vec<Path>, bool) {
    let line = line_graph(g);
    let lg = line.graph().clone();
    let succ: Vec<Vec<VertexId>> = lg
        .vertices()
        .map(|v| lg.successors(v).collect())
        .collect();
    let mut items = Vec::new();
    let record = |verts: &[VertexId], items: &mut Vec<Path>| {
        let p = Path::new(&lg, verts.to_vec()).expect("walked along line graph edges");
        items.push(line_path_reduce(&line, &p).expect("path lives in this line graph"));
    };
    for s in lg.vertices() {
        if items.len() >= cap {
            return (items, false);
        }
        let mut path = vec![s];
        let mut cursors = vec![0usize];
        let mut on_path = vec![false; lg.vertex_count()];
        on_path[s.index()] = true;
        record(&path, &mut items);
        loop {
            let v = *path.last().expect("loop runs while the path is nonempty");
            let advanced = {
                let cursor = cursors.last_mut().expect("one cursor per path vertex");
                if let Some(&w) = succ[v.index()].get(*cursor) {
                    *cursor += 1;
                    Some(w)
                } else {
                    None
                }
            };
            match advanced {
                Some(w) => {
                    if !on_path[w.index()] {
                        on_path[w.index()] = true;
                        path.push(w);
                        cursors.push(0);
                        if items.len() >= cap {
                            return (items, false);
                        }
                        record(&path, &mut items);
                    }
                }
                None => {
                    on_path[v.index()] = false;
                    path.pop();
                    cursors.pop();
                    if path.is_empty() {
                        break;
                    }
                }
            }
        }
    }
    (items, true)
}

fn drain_items(mut it: impl Iterator<Item = Path>, cap: usize) -> (Vec<Path>, bool) {
    let mut items = Vec::new();
    for p in it.by_ref() {
        items.push(p);
        if items.len() >= cap {
            return (items, it.next().is_none());
        }
    }
    (items, true)
}

fn verify_cover(
    criterion: CoverCriterion,
    config: CoverageConfig,
    labeled: &LabeledGraph,
    sese: &SeseGraph,
    cases: &[TestCase],
    err: &mut dyn Write,
) -> i32 {
    let g = sese.graph();
    let mut failures = 0u64;
    for case in cases {
        if case.path.head() != sese.entry() || case.path.last() != sese.exit() {
            let _ = writeln!(
                err,
                "verify: case does not run entry to exit: {}",
                labeled.path_line(&case.path)
            );
            failures += 1;
        }
        // A case may cover fewer than k items when the stream ran out or no
        // connecting path existed, but never more than k and never zero.
        if case.items_covered > config.k() || case.items_covered == 0 {
            let _ = writeln!(
                err,
                "verify: case covers {} items, outside 1..={}",
                case.items_covered,
                config.k()
            );
            failures += 1;
        }
    }

    let (items, complete) = match criterion {
        CoverCriterion::SimpleCycle => drain_items(simple_cycles(g), VERIFY_ITEM_CAP),
        CoverCriterion::SimplePath => drain_items(non_extendable_simple_paths(g), VERIFY_ITEM_CAP),
        CoverCriterion::PrimePath => drain_items(prime_paths(g), VERIFY_ITEM_CAP),
        CoverCriterion::EAcyclicPath => collect_edge_path_items(g, VERIFY_ITEM_CAP),
    };
    let mut missed = 0u64;
    for item in &items {
        if !cases.iter().any(|case| covers(&case.path, item)) {
            if missed < 5 {
                let _ = writeln!(err, "verify: item not covered: {}", labeled.path_line(item));
            }
            missed += 1;
        }
    }
    if missed > 0 {
        let _ = writeln!(err, "verify: {missed} of {} items not covered", items.len());
        failures += 1;
    }
    if failures > 0 {
        let _ = writeln!(err, "verify: FAILED with {failures} finding(s)");
        return EXIT_INTERNAL;
    }
    let scope = if complete { "all" } else { "first" };
    let _ = writeln!(err, "verify: {scope} {} items covered", items.len());
    EXIT_OK
}

/// Runs `pathcover check`.
pub fn run_check(args: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let labeled = match load_graph(&args.input, err) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let resolve = |flag: &Option<String>, doc: Option<VertexId>, role: &str| match flag {
        Some(label) => match labeled.vertex_by_label(label) {
            Some(v) => Ok(Some(v)),
            None => {
                Err(format!("{role} label {label:?} is not a vertex"))
            }
        },
        None => Ok(doc),
    };
    let resolved = resolve(&args.entry, labeled.entry, "entry")
        .and_then(|e| resolve(&args.exit, labeled.exit, "exit").map(|x| (e, x)));
    let (entry, exit) = match resolved {
        Ok((Some(entry), Some(exit))) => (entry, exit),
        Ok(_) => {
            let _ = writeln!(
                err,
                "error: entry and exit must come either from the document or from --entry/--exit"
            );
            return EXIT_INVALID_INPUT;
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return EXIT_INVALID_INPUT;
        }
    };
    match pathcover::validate_sese(&labeled.graph, entry, exit) {
        Ok(()) => {
            let _ = writeln!(
                out,
                "ok: single entry {:?} and single exit {:?} over {} vertices and {} edges",
                labeled.label(entry),
                labeled.label(exit),
                labeled.graph.vertex_count(),
                labeled.graph.edge_count()
            );
            EXIT_OK
        }
        Err(report) => {
            for violation in report.violations() {
                let _ = writeln!(out, "violation: {}", render_violation(&labeled, violation));
            }
            EXIT_NOT_SESE
        }
    }
}
