//! Degree and component signals that bound where prime paths can start
//! and end.
//!
//! A non-extendable simple path must start at a vertex whose incoming
//! neighborhood is narrow enough to be swallowed by the path and end at a
//! vertex whose outgoing neighborhood is. The signals below are cheap
//! per-vertex tests that are each necessary for that, so their
//! conjunction prunes start and end candidates without losing any item.

use std::collections::HashSet;

use crate::graph::{Digraph, VertexId};
use crate::scc::SccPartition;

/// Necessary conditions for a vertex to start a non-extendable simple
/// path. Each flag is independent; a start candidate must satisfy all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StartSignals {
    /// Every predecessor lies in the vertex's own strongly connected
    /// class.
    pub incoming_within_class: bool,
    /// The predecessors' successor pool, including the vertex itself, is
    /// strictly larger than the predecessor set.
    pub fanout_exceeds_indegree: bool,
    /// Within the vertex's class, the predecessors' successor pool is at
    /// least as large as the predecessor set.
    pub class_fanout_covers_indegree: bool,
    /// Within the vertex's class, the predecessors' predecessor pool is
    /// at least as large as the predecessor set.
    pub class_fanin_covers_indegree: bool,
}

impl StartSignals {
    /// Whether all signals hold.
    pub fn all(&self) -> bool {
        self.incoming_within_class
            && self.fanout_exceeds_indegree
            && self.class_fanout_covers_indegree
            && self.class_fanin_covers_indegree
    }
}

/// Necessary conditions for a vertex to end a non-extendable simple path,
/// mirroring [`StartSignals`] with edge directions reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndSignals {
    /// Every successor lies in the vertex's own strongly connected class.
    pub outgoing_within_class: bool,
    /// The successors' predecessor pool, including the vertex itself, is
    /// strictly larger than the successor set.
    pub fanin_exceeds_outdegree: bool,
    /// Within the vertex's class, the successors' predecessor pool is at
    /// least as large as the successor set.
    pub class_fanin_covers_outdegree: bool,
    /// Within the vertex's class, the successors' successor pool is at
    /// least as large as the successor set.
    pub class_fanout_covers_outdegree: bool,
}

impl EndSignals {
    /// Whether all signals hold.
    pub fn all(&self) -> bool {
        self.outgoing_within_class
            && self.fanin_exceeds_outdegree
            && self.class_fanin_covers_outdegree
            && self.class_fanout_covers_outdegree
    }
}

/// Evaluates the start signals of `v`.
pub fn start_signals(g: &Digraph, part: &SccPartition, v: VertexId) -> StartSignals {
    let class = part.class_of_raw(v.0);
    let preds = g.in_raw(v.0);
    let incoming_within_class = preds.iter().all(|&u| part.class_of_raw(u) == class);

    let mut fanout: HashSet<u32> = HashSet::new();
    for &u in preds {
        fanout.extend(g.out_raw(u).iter().copied());
    }
    let fanout_with_self = fanout.len() + usize::from(!fanout.contains(&v.0));
    let fanout_in_class = fanout
        .iter()
        .filter(|&&w| part.class_of_raw(w) == class)
        .count();

    let mut fanin: HashSet<u32> = HashSet::new();
    for &u in preds {
        fanin.extend(g.in_raw(u).iter().copied());
    }
    let fanin_in_class = fanin
        .iter()
        .filter(|&&w| part.class_of_raw(w) == class)
        .count();

    StartSignals {
        incoming_within_class,
        fanout_exceeds_indegree: fanout_with_self > preds.len(),
        class_fanout_covers_indegree: fanout_in_class >= preds.len(),
        class_fanin_covers_indegree: fanin_in_class >= preds.len(),
    }
}

/// Evaluates the end signals of `v`.
pub fn end_signals(g: &Digraph, part: &SccPartition, v: VertexId) -> EndSignals {
    let class = part.class_of_raw(v.0);
    let succs = g.out_raw(v.0);
    let outgoing_within_class = succs.iter().all(|&w| part.class_of_raw(w) == class);

    let mut fanin: HashSet<u32> = HashSet::new();
    for &w in succs {
        fanin.extend(g.in_raw(w).iter().copied());
    }
    let fanin_with_self = fanin.len() + usize::from(!fanin.contains(&v.0));
    let fanin_in_class = fanin
        .iter()
        .filter(|&&u| part.class_of_raw(u) == class)
        .count();

    let mut fanout: HashSet<u32> = HashSet::new();
    for &w in succs {
        fanout.extend(g.out_raw(w).iter().copied());
    }
    let fanout_in_class = fanout
        .iter()
        .filter(|&&u| part.class_of_raw(u) == class)
        .count();

    EndSignals {
        outgoing_within_class,
        fanin_exceeds_outdegree: fanin_with_self > succs.len(),
        class_fanin_covers_outdegree: fanin_in_class >= succs.len(),
        class_fanout_covers_outdegree: fanout_in_class >= succs.len(),
    }
}

/// Start and end candidates of a graph, precomputed for every vertex.
#[derive(Clone, Debug)]
pub struct StartEndFilter {
    start: Vec<bool>,
    end: Vec<bool>,
    starts: Vec<VertexId>,
    ends: Vec<VertexId>,
}

impl StartEndFilter {
    /// Whether `v` passed all start signals.
    pub fn is_start(&self, v: VertexId) -> bool {
        self.start[v.index()]
    }

    /// Whether `v` passed all end signals.
    pub fn is_end(&self, v: VertexId) -> bool {
        self.end[v.index()]
    }

    /// All start candidates, ascending.
    pub fn starts(&self) -> &[VertexId] {
        &self.starts
    }

    /// All end candidates, ascending.
    pub fn ends(&self) -> &[VertexId] {
        &self.ends
    }
}

/// Evaluates all signals for every vertex of `g`.
pub fn start_end_filter(g: &Digraph, part: &SccPartition) -> StartEndFilter {
    let mut start = Vec::with_capacity(g.vertex_count());
    let mut end = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        start.push(start_signals(g, part, v).all());
        end.push(end_signals(g, part, v).all());
    }
    let starts = g.vertices().filter(|&v| start[v.index()]).collect();
    let ends = g.vertices().filter(|&v| end[v.index()]).collect();
    StartEndFilter {
        start,
        end,
        starts,
        ends,
    }
}

/// Whether a non-extendable simple path may end at `end` and have started
/// at `start`: the direct edge from `end` back to `start` must be absent,
/// since its presence would close the path into a cycle.
pub fn end_start_pair_ok(g: &Digraph, end: VertexId, start: VertexId) -> bool {
    !g.has_edge(end, start)
}
