//! Streaming enumeration of non-extendable simple paths.

use std::collections::HashSet;

use crate::enumerate::circuit::CircuitIter;
use crate::enumerate::extended::extend_graph;
use crate::enumerate::filter::{start_end_filter, StartEndFilter};
use crate::enumerate::{EnumerateError, RetainedState};
use crate::graph::{Digraph, VertexId};
use crate::path::Path;
use crate::scc::{scc_containing, scc_partition};

/// Whether the simple path `p` is non-extendable in `g`: no vertex can be
/// prepended or appended while keeping the result a simple path, and no
/// edge closes it into a cycle.
///
/// Concretely, every predecessor of the head must lie on the path and
/// differ from the last vertex, and every successor of the last vertex
/// must lie on the path and differ from the head. A single vertex is
/// non-extendable exactly when it is isolated.
pub fn is_non_extendable(g: &Digraph, p: &Path) -> Result<bool, EnumerateError> {
    let on_path: HashSet<u32> = p.raw().collect();
    if on_path.len() != p.vertex_count() {
        return Err(EnumerateError::NotSimplePath);
    }
    let head = p.head().0;
    let last = p.last().0;
    let head_closed = g
        .in_raw(head)
        .iter()
        .all(|&u| on_path.contains(&u) && u != last);
    let last_closed = g
        .out_raw(last)
        .iter()
        .all(|&w| on_path.contains(&w) && w != head);
    Ok(head_closed && last_closed)
}

/// Iterator over every non-extendable simple path of a graph.
///
/// Isolated vertices come first as single-vertex paths, ascending. Then,
/// for each start candidate in ascending order, the iterator searches the
/// sentinel extension of the graph for cycles through the sentinel; each
/// such cycle, with the sentinel stripped, is a candidate path from the
/// start candidate, kept when it passes [`is_non_extendable`]. Candidate
/// order within a start is the ascending depth-first order of the cycle
/// search, so the overall stream is deterministic.
pub struct NonExtendableSimplePaths {
    graph: Digraph,
    filter: StartEndFilter,
    isolated: std::vec::IntoIter<u32>,
    starts: Vec<u32>,
    next_start: usize,
    current: Option<CircuitIter>,
}

/// Enumerates the non-extendable simple paths of `g` lazily.
pub fn non_extendable_simple_paths(g: &Digraph) -> NonExtendableSimplePaths {
    let part = scc_partition(g);
    let filter = start_end_filter(g, &part);
    let isolated: Vec<u32> = g
        .vertices()
        .filter(|&v| g.in_degree(v) == 0 && g.out_degree(v) == 0)
        .map(|v| v.0)
        .collect();
    // start candidates with successors; the only start candidate without
    // any is an isolated vertex, already emitted directly
    let starts: Vec<u32> = filter
        .starts()
        .iter()
        .filter(|&&v| g.out_degree(v) > 0)
        .map(|v| v.0)
        .collect();
    NonExtendableSimplePaths {
        graph: g.clone(),
        filter,
        isolated: isolated.into_iter(),
        starts,
        next_start: 0,
        current: None,
    }
}

impl Iterator for NonExtendableSimplePaths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if let Some(v) = self.isolated.next() {
            return Some(Path::from_raw(vec![v]));
        }
        loop {
            if let Some(iter) = self.current.as_mut() {
                for cycle in iter {
                    // cycle = (sentinel, start, ..., end, sentinel)
                    let candidate = &cycle[1..cycle.len() - 1];
                    if candidate.len() < 2 {
                        continue;
                    }
                    let path = Path::from_raw(candidate.to_vec());
                    let keep = is_non_extendable(&self.graph, &path)
                        .expect("cycle bodies are simple");
                    if keep {
                        return Some(path);
                    }
                }
                self.current = None;
            }
            if self.next_start >= self.starts.len() {
                return None;
            }
            let start = self.starts[self.next_start];
            self.next_start += 1;
            let ext = extend_graph(&self.graph, &self.filter, VertexId(start));
            let adj = ext.graph().out_lists();
            let sentinel = ext.sentinel().0;
            let component = scc_containing(adj, 0, sentinel);
            if component.len() > 1 {
                self.current = Some(CircuitIter::new(component, adj, sentinel));
            }
        }
    }
}

impl RetainedState for NonExtendableSimplePaths {
    fn retained_paths(&self) -> usize {
        usize::from(self.current.is_some())
    }

    fn retained_cells(&self) -> usize {
        self.current.as_ref().map_or(0, CircuitIter::depth)
    }
}
