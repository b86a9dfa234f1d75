//! Path-based coverage items for directed graphs, enumerated lazily.
//!
//! The crate has three layers:
//!
//! * [`graph`], [`path`], [`scc`], [`sese`], [`line`]: core types for
//!   directed graphs, vertex paths, strongly connected components,
//!   single-entry single-exit validation, and line graphs.
//! * [`enumerate`]: streaming producers for simple cycles, non-extendable
//!   simple paths, and prime paths, plus a breadth-first reference
//!   enumerator used for cross-checking and benchmarking. All producers
//!   are plain [`Iterator`]s whose live state stays bounded by the input
//!   graph size, never by the number of items produced.
//! * [`cover`]: streaming test-path generators that turn an item stream
//!   into entry-to-exit test cases, accumulating up to a configured number
//!   of items per case.
//!
//! Every producer is deterministic: item order depends only on the input
//! graph, so repeated runs yield identical streams.

pub mod cover;
pub mod enumerate;
pub mod graph;
pub mod line;
pub mod path;
pub mod scc;
pub mod sese;
pub mod verify;

pub use graph::{Digraph, GraphError, VertexId};
pub use path::{classify_path, covers, rotations, Path, PathClass, PathError, RotationError};
pub use sese::{validate_sese, SeseGraph, SeseReport, SeseViolation};
