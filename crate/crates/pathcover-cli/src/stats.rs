//! Run statistics shared by the `enumerate` and `bench` subcommands.

use serde::Serialize;
use std::time::{Duration, Instant};

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunOutcome {
    /// The stream was drained to the end.
    Completed,
    /// The item budget was reached with more items still pending.
    TruncatedItems,
    /// The time budget was reached first.
    TruncatedTime,
    /// The memory guard stopped the run (baseline engine only).
    MemoryCapped,
}

/// Measurements from one enumeration run.
#[derive(Debug, Clone, Serialize)]
pub struct RunStats {
    /// Which engine produced the run.
    pub engine: String,
    /// How the run ended.
    pub outcome: RunOutcome,
    /// Number of items emitted.
    pub items_emitted: u64,
    /// Wall-clock time for the whole run in seconds.
    pub elapsed_secs: f64,
    /// Mean time per emitted item in seconds (zero when nothing was emitted).
    pub avg_period_secs: f64,
    /// Longest gap between two consecutive emissions (or start to first
    /// emission) in seconds.
    pub max_period_secs: f64,
    /// Largest number of in-progress paths held at any point.
    pub peak_retained_paths: usize,
    /// Coarse upper bound on working-set bytes: adjacency storage plus four
    /// bytes per retained path cell at the peak.
    pub peak_memory_estimate_bytes: u64,
}

impl RunStats {
    /// Renders the stats as human-readable `key: value` lines.
    pub fn render(&self) -> String {
        format!(
            "engine: {}\noutcome: {}\nitems emitted: {}\nelapsed: {:.3}s\navg period: {:.9}s\nmax period: {:.6}s\npeak retained paths: {}\npeak memory estimate: {} bytes",
            self.engine,
            match self.outcome {
                RunOutcome::Completed => "completed",
                RunOutcome::TruncatedItems => "truncated-items",
                RunOutcome::TruncatedTime => "truncated-time",
                RunOutcome::MemoryCapped => "memory-capped",
            },
            self.items_emitted,
            self.elapsed_secs,
            self.avg_period_secs,
            self.max_period_secs,
            self.peak_retained_paths,
            self.peak_memory_estimate_bytes,
        )
    }
}

/// Incremental tracker that turns per-item observations into [`RunStats`].
#[derive(Debug)]
pub struct StatTracker {
    engine: String,
    started: Instant,
    last_emit: Instant,
    items: u64,
    max_period: Duration,
    peak_paths: usize,
}

impl StatTracker {
    /// Starts the clock for `engine`.
    pub fn start(engine: &str) -> Self {
        let now = Instant::now();
        StatTracker {
            engine: engine.to_owned(),
            started: now,
            last_emit: now,
            items: 0,
            max_period: Duration::ZERO,
            peak_paths: 0,
        }
    }

    /// Records one emitted item.
    pub fn record_item(&mut self) {
        let now = Instant::now();
        self.max_period = self.max_period.max(now - self.last_emit);
        self.last_emit = now;
        self.items += 1;
    }

    /// Records a retained-path gauge reading.
    pub fn record_retained(&mut self, paths: usize) {
        self.peak_paths = self.peak_paths.max(paths);
    }

    /// Time since the tracker started.
    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }

    /// Number of items recorded so far.
    pub fn items(&self) -> u64 {
        self.items
    }

    /// Finishes the run and produces the stats record.
    ///
    /// `graph_bytes` is the adjacency storage estimate and `peak_cells` the
    /// largest retained-cell count observed, used for the memory estimate.
    pub fn finish(self, outcome: RunOutcome, graph_bytes: u64, peak_cells: u64) -> RunStats {
        let elapsed = self.started.elapsed();
        let avg = if self.items == 0 {
            0.0
        } else {
            elapsed.as_secs_f64() / self.items as f64
        };
        RunStats {
            engine: self.engine,
            outcome,
            items_emitted: self.items,
            elapsed_secs: elapsed.as_secs_f64(),
            avg_period_secs: avg,
            max_period_secs: self.max_period.as_secs_f64(),
            peak_retained_paths: self.peak_paths,
            peak_memory_estimate_bytes: graph_bytes + peak_cells * 4,
        }
    }
}

/// Estimates the bytes held by one adjacency representation of a graph:
/// both edge directions as 32-bit ids plus two list headers per vertex.
pub fn graph_bytes(g: &pathcover::Digraph) -> u64 {
    (g.edge_count() as u64) * 2 * 4 + (g.vertex_count() as u64) * 48
}
