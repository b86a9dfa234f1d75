//! Streaming enumeration of coverage items.
//!
//! Every producer here is an ordinary [`Iterator`] over [`Path`]s whose
//! retained state is bounded by the size of the input graph, not by the
//! number of items it will produce. Producers clone the adjacency they
//! need up front, so they own their data and can outlive the graph
//! reference they were built from.
//!
//! [`Path`]: crate::path::Path

mod baseline;
mod circuit;
mod cycles;
mod extended;
mod filter;
mod nonext;
mod prime;

pub use baseline::{
    baseline_prime_paths, baseline_prime_paths_bounded, BaselineLimits, BaselineOutcome,
};
pub use cycles::{simple_cycles, SimpleCycles};
pub use extended::{extend_graph, ExtendedGraph};
pub use filter::{end_signals, end_start_pair_ok, start_end_filter, start_signals};
pub use filter::{EndSignals, StartEndFilter, StartSignals};
pub use nonext::{is_non_extendable, non_extendable_simple_paths, NonExtendableSimplePaths};
pub use prime::{prime_paths, PrimePaths};

use thiserror::Error;

/// Errors raised by enumeration helpers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    /// The operation is only defined on simple paths.
    #[error("path is not simple")]
    NotSimplePath,
}

/// Gauge over the live state of a streaming producer.
///
/// `retained_paths` counts the whole path buffers a producer currently
/// holds; `retained_cells` counts the vertex slots across those buffers.
/// Both are instantaneous readings, so a consumer that polls after every
/// item observes the peak within one item of its true value.
pub trait RetainedState {
    /// Path buffers currently held.
    fn retained_paths(&self) -> usize;

    /// Vertex slots across all held path buffers.
    fn retained_cells(&self) -> usize;
}
