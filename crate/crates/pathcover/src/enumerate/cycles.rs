//! Streaming enumeration of all simple cycles of a graph.

use crate::enumerate::circuit::CircuitIter;
use crate::enumerate::RetainedState;
use crate::graph::Digraph;
use crate::path::Path;
use crate::scc::scc_containing;

/// Iterator over every simple cycle of a graph, one canonical rotation
/// each, in closed form.
///
/// Cycles are grouped by their smallest vertex, ascending: for each
/// anchor, the iterator searches the strongly connected component of the
/// anchor within the subgraph of vertices at least as large, so each
/// cycle appears exactly once, starting and ending at its smallest
/// vertex. Within one anchor, cycles come out in ascending neighbor
/// order.
pub struct SimpleCycles {
    adj: Vec<Vec<u32>>,
    next_anchor: u32,
    current: Option<CircuitIter>,
}

/// Enumerates the simple cycles of `g` lazily.
pub fn simple_cycles(g: &Digraph) -> SimpleCycles {
    SimpleCycles {
        adj: g.out_lists().to_vec(),
        next_anchor: 0,
        current: None,
    }
}

impl Iterator for SimpleCycles {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        loop {
            if let Some(iter) = self.current.as_mut() {
                if let Some(cycle) = iter.next() {
                    return Some(Path::from_raw(cycle));
                }
                self.current = None;
                self.next_anchor += 1;
            }
            let n = self.adj.len() as u32;
            while self.next_anchor < n {
                let anchor = self.next_anchor;
                let component = scc_containing(&self.adj, anchor, anchor);
                let has_cycle = component.len() > 1 || self.adj[anchor as usize].contains(&anchor);
                if has_cycle {
                    self.current = Some(CircuitIter::new(component, &self.adj, anchor));
                    break;
                }
                self.next_anchor += 1;
            }
            self.current.as_ref()?;
        }
    }
}

impl RetainedState for SimpleCycles {
    fn retained_paths(&self) -> usize {
        usize::from(self.current.is_some())
    }

    fn retained_cells(&self) -> usize {
        self.current.as_ref().map_or(0, CircuitIter::depth)
    }
}
