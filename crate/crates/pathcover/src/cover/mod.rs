//! Streaming test-path generation over coverage item streams.
//!
//! Each strategy consumes an item stream lazily and emits entry-to-exit
//! test cases, where every test case covers up to a configured number of
//! consecutive items, stitched together with shortest connecting
//! segments. Only one test case is under construction at any time, so
//! memory stays bounded by the graph size regardless of how many items
//! the stream holds.

mod accumulate;
mod eacyclic;

pub use accumulate::CoverageStream;
pub use eacyclic::{e_acyclic_path_coverage, EAcyclicPathCoverage};

use thiserror::Error;

use crate::enumerate::{
    non_extendable_simple_paths, simple_cycles, NonExtendableSimplePaths, RetainedState,
    SimpleCycles,
};
use crate::graph::VertexId;
use crate::path::Path;
use crate::sese::SeseGraph;

/// Errors raised while configuring or composing coverage runs.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CoverageError {
    /// The per-case item budget must be at least one.
    #[error("item budget k must be at least 1, got {0}")]
    InvalidBudget(usize),
    /// Two paths were joined at mismatched junction vertices.
    #[error("cannot join: left path ends at {left_last} but right path starts at {right_head}")]
    JunctionMismatch {
        left_last: VertexId,
        right_head: VertexId,
    },
}

/// Configuration shared by all coverage strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverageConfig {
    k: usize,
    double_cycle: bool,
}

impl CoverageConfig {
    /// Validates an item budget of `k` items per test case and the
    /// double-cycle flag.
    ///
    /// The flag only affects the simple-cycle strategy: when set, each
    /// cycle item is traversed twice in a row, which makes the resulting
    /// test case cover every rotation of the cycle. Other strategies
    /// ignore it.
    pub fn new(k: usize, double_cycle: bool) -> Result<Self, CoverageError> {
        if k == 0 {
            return Err(CoverageError::InvalidBudget(k));
        }
        Ok(CoverageConfig { k, double_cycle })
    }

    /// The per-case item budget.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Whether cycle items are traversed twice.
    pub fn double_cycle(&self) -> bool {
        self.double_cycle
    }
}

/// One emitted test path and the number of stream items it covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestCase {
    /// The entry-to-exit path.
    pub path: Path,
    /// How many consecutive items of the stream this case covers.
    pub items_covered: usize,
}

/// Concatenates two paths sharing a junction vertex, keeping the junction
/// once.
pub fn join(left: &Path, right: &Path) -> Result<Path, CoverageError> {
    if left.last() != right.head() {
        return Err(CoverageError::JunctionMismatch {
            left_last: left.last(),
            right_head: right.head(),
        });
    }
    let mut verts: Vec<u32> = left.raw().collect();
    verts.extend(right.raw().skip(1));
    Ok(Path::from_raw(verts))
}

/// Test paths covering every simple cycle of the graph.
///
/// With `double_cycle` unset, each case covers the canonical rotation of
/// each cycle; with it set, each cycle is walked twice so the case covers
/// all of its rotations.
pub fn simple_cycle_coverage(
    g: &SeseGraph,
    config: CoverageConfig,
) -> CoverageStream<SimpleCycles> {
    CoverageStream::new(g, simple_cycles(g.graph()), config.k, config.double_cycle)
}

/// Test paths covering every non-extendable simple path of the graph.
pub fn simple_path_coverage(
    g: &SeseGraph,
    config: CoverageConfig,
) -> CoverageStream<NonExtendableSimplePaths> {
    CoverageStream::new(g, non_extendable_simple_paths(g.graph()), config.k, false)
}

/// Test paths covering every prime path of the graph: a doubled-cycle
/// phase covering all rotations of every simple cycle, followed by a
/// phase covering every non-extendable simple path.
pub struct PrimePathCoverage {
    cycles: Option<CoverageStream<SimpleCycles>>,
    paths: CoverageStream<NonExtendableSimplePaths>,
}

/// Builds the prime path strategy; `config.double_cycle` is implied.
pub fn prime_path_coverage(g: &SeseGraph, config: CoverageConfig) -> PrimePathCoverage {
    PrimePathCoverage {
        cycles: Some(CoverageStream::new(
            g,
            simple_cycles(g.graph()),
            config.k,
            true,
        )),
        paths: CoverageStream::new(g, non_extendable_simple_paths(g.graph()), config.k, false),
    }
}

impl Iterator for PrimePathCoverage {
    type Item = TestCase;

    fn next(&mut self) -> Option<TestCase> {
        if let Some(cycles) = self.cycles.as_mut() {
            if let Some(case) = cycles.next() {
                return Some(case);
            }
            self.cycles = None;
        }
        self.paths.next()
    }
}

impl RetainedState for PrimePathCoverage {
    fn retained_paths(&self) -> usize {
        self.cycles.as_ref().map_or(0, RetainedState::retained_paths) + self.paths.retained_paths()
    }

    fn retained_cells(&self) -> usize {
        self.cycles.as_ref().map_or(0, RetainedState::retained_cells) + self.paths.retained_cells()
    }
}
