//! Sentinel extension that turns path search into cycle search.

use crate::enumerate::filter::StartEndFilter;
use crate::graph::{Digraph, VertexId};

/// A graph extended with one sentinel vertex wired so that simple cycles
/// through the sentinel correspond to simple paths starting at a chosen
/// start candidate.
///
/// The sentinel has one outgoing edge to the start candidate and one
/// incoming edge from every end candidate that lacks a direct edge back
/// to the start. Stripping the sentinel from a cycle through it leaves a
/// simple path from the start candidate to some end candidate that
/// cannot close into a cycle.
#[derive(Clone, Debug)]
pub struct ExtendedGraph {
    graph: Digraph,
    sentinel: VertexId,
    start: VertexId,
}

/// Extends `g` with a sentinel for the start candidate `start`.
///
/// `filter` must come from [`start_end_filter`] on the same graph, and
/// `start` must be one of its start candidates.
///
/// [`start_end_filter`]: crate::enumerate::start_end_filter
pub fn extend_graph(g: &Digraph, filter: &StartEndFilter, start: VertexId) -> ExtendedGraph {
    debug_assert!(filter.is_start(start));
    let sentinel = g.vertex_count() as u32;
    let mut edges: Vec<(u32, u32)> = g.edges_raw().collect();
    edges.push((sentinel, start.0));
    for &end in filter.ends() {
        if !g.has_edge(end, start) {
            edges.push((end.0, sentinel));
        }
    }
    let graph = Digraph::from_edges(g.vertex_count() + 1, edges)
        .expect("extension adds a fresh vertex, so no edge can repeat");
    ExtendedGraph {
        graph,
        sentinel: VertexId(sentinel),
        start,
    }
}

impl ExtendedGraph {
    /// The extended graph.
    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    /// The sentinel vertex, one past the original range.
    pub fn sentinel(&self) -> VertexId {
        self.sentinel
    }

    /// The start candidate this extension was built for.
    pub fn start(&self) -> VertexId {
        self.start
    }
}
