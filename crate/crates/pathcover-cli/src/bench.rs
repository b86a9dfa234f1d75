//! Driver for the `bench` subcommand.
//!
//! Runs the requested engines one after another on the same graph and
//! reports a [`RunStats`] record per engine. Engines are bounded
//! independently: a timeout or memory cap on one never aborts the others.

use crate::formats::LabeledGraph;
use crate::run::{load_graph, EXIT_INTERNAL, EXIT_INVALID_INPUT, EXIT_OK};
use crate::stats::{graph_bytes, RunOutcome, RunStats, StatTracker};
use clap::{Args, ValueEnum};
use pathcover::enumerate::{
    baseline_prime_paths_bounded, prime_paths, BaselineLimits, BaselineOutcome, RetainedState,
};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

/// Memory guard for the baseline engine, in vertex cells (4 bytes each).
/// Keeps a runaway frontier near 1 GiB instead of exhausting the machine.
const BASELINE_CELL_GUARD: usize = 256_000_000;

/// Reference item budget of the `paper` preset before scaling.
const PAPER_MAX_ITEMS: f64 = 10_000_000.0;
/// Reference baseline timeout of the `paper` preset before scaling, seconds.
const PAPER_TIMEOUT_SECS: f64 = 3600.0;

/// An enumeration engine the bench can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// The lazy streaming enumerator.
    Stream,
    /// The all-at-once breadth-first baseline.
    AoBaseline,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Stream => "stream",
            Engine::AoBaseline => "ao-baseline",
        }
    }
}

/// Named bundles of default budgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Ten million items and a one hour timeout, multiplied by `--scale`.
    Paper,
}

/// Prime path item counts quickly exceed what fits in memory, so the bench
/// always compares engines on the same graph under explicit budgets.
#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Graph document (JSON or DOT).
    #[arg(long)]
    pub input: PathBuf,
    /// Engines to run, in order.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "stream,ao-baseline")]
    pub engines: Vec<Engine>,
    /// Per-engine time budget in seconds.
    #[arg(long)]
    pub timeout_secs: Option<f64>,
    /// Item budget for the stream engine.
    #[arg(long)]
    pub max_items: Option<u64>,
    /// Write the collected statistics as JSON to this file.
    #[arg(long)]
    pub stats_out: Option<PathBuf>,
    /// Budget preset; explicit --timeout-secs / --max-items override it.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Factor applied to the preset budgets, e.g. 0.01 for a quick pass.
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
}

/// Resolves the effective budgets from explicit flags, preset, and scale.
pub fn effective_limits(args: &BenchArgs) -> (Option<u64>, Option<f64>) {
    let preset_items = args
        .preset
        .map(|Preset::Paper| ((PAPER_MAX_ITEMS * args.scale).round() as u64).max(1));
    let preset_timeout = args.preset.map(|Preset::Paper| PAPER_TIMEOUT_SECS * args.scale);
    (
        args.max_items.or(preset_items),
        args.timeout_secs.or(preset_timeout),
    )
}

#[derive(Serialize)]
struct BenchReport<'a> {
    name: Option<&'a str>,
    vertex_count: usize,
    edge_count: usize,
    runs: &'a [RunStats],
}

fn run_stream_engine(
    labeled: &LabeledGraph,
    max_items: Option<u64>,
    timeout: Option<f64>,
) -> RunStats {
    let mut stream = prime_paths(&labeled.graph);
    let deadline = timeout.map(|s| Instant::now() + Duration::from_secs_f64(s));
    let budget = max_items.unwrap_or(u64::MAX);
    let mut tracker = StatTracker::start(Engine::Stream.name());
    let mut peak_cells = 0u64;
    let outcome = loop {
        if tracker.items() >= budget {
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
            Some(_) => {
                tracker.record_item();
                tracker.record_retained(stream.retained_paths());
                peak_cells = peak_cells.max(stream.retained_cells() as u64);
            }
            None => break RunOutcome::Completed,
        }
    };
    tracker.finish(outcome, graph_bytes(&labeled.graph), peak_cells)
}

fn run_baseline_engine(labeled: &LabeledGraph, timeout: Option<f64>) -> RunStats {
    let limits = BaselineLimits {
        deadline: timeout.map(|s| Instant::now() + Duration::from_secs_f64(s)),
        max_cells: Some(BASELINE_CELL_GUARD),
    };
    let started = Instant::now();
    let outcome = baseline_prime_paths_bounded(&labeled.graph, &limits);
    let elapsed = started.elapsed().as_secs_f64();
    let (run_outcome, items, peak_paths, peak_cells) = match outcome {
        BaselineOutcome::Completed {
            paths,
            peak_retained_paths,
            peak_retained_cells,
        } => (
            RunOutcome::Completed,
            paths.len() as u64,
            peak_retained_paths,
            peak_retained_cells,
        ),
        BaselineOutcome::TimedOut {
            peak_retained_paths,
            peak_retained_cells,
            ..
        } => (
            RunOutcome::TruncatedTime,
            0,
            peak_retained_paths,
            peak_retained_cells,
        ),
        BaselineOutcome::MemoryCapped {
            peak_retained_paths,
            peak_retained_cells,
            ..
        } => (
            RunOutcome::MemoryCapped,
            0,
            peak_retained_paths,
            peak_retained_cells,
        ),
    };
    RunStats {
        engine: Engine::AoBaseline.name().to_owned(),
        outcome: run_outcome,
        items_emitted: items,
        elapsed_secs: elapsed,
        avg_period_secs: if items == 0 { 0.0 } else { elapsed / items as f64 },
        // The baseline delivers everything at the end, so its longest gap
        // is the whole run.
        max_period_secs: elapsed,
        peak_retained_paths: peak_paths,
        peak_memory_estimate_bytes: graph_bytes(&labeled.graph) + (peak_cells as u64) * 4,
    }
}

/// Runs `pathcover bench`.
pub fn run_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if !(args.scale.is_finite() && args.scale > 0.0) {
        let _ = writeln!(err, "error: --scale must be a positive number");
        return EXIT_INVALID_INPUT;
    }
    let labeled = match load_graph(&args.input, err) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let (max_items, timeout) = effective_limits(args);
    let mut runs = Vec::with_capacity(args.engines.len());
    for engine in &args.engines {
        let stats = match engine {
            Engine::Stream => run_stream_engine(&labeled, max_items, timeout),
            Engine::AoBaseline => run_baseline_engine(&labeled, timeout),
        };
        let _ = writeln!(out, "{}\n", stats.render());
        runs.push(stats);
    }
    if let Some(path) = &args.stats_out {
        let report = BenchReport {
            name: labeled.name.as_deref(),
            vertex_count: labeled.graph.vertex_count(),
            edge_count: labeled.graph.edge_count(),
            runs: &runs,
        };
        let json = serde_json::to_string_pretty(&report).expect("report serialisation is infallible");
        if let Err(e) = std::fs::write(path, json + "\n") {
            let _ = writeln!(err, "error: failed to write {}: {e}", path.display());
            return EXIT_INTERNAL;
        }
    }
    EXIT_OK
}
