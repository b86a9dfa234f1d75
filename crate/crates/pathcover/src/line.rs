//! Line graphs and the reduction from line-graph paths to edge walks.

use thiserror::Error;

use crate::graph::{Digraph, VertexId};
use crate::path::Path;

/// The line graph of a directed graph.
///
/// Each vertex stands for one edge of the base graph, numbered in ascending
/// lexicographic edge order; there is an edge between two line vertices
/// exactly when the first base edge ends where the second begins.
#[derive(Clone, Debug)]
pub struct LineGraph {
    graph: Digraph,
    edge_of: Vec<(VertexId, VertexId)>,
}

/// Builds the line graph of `g`.
pub fn line_graph(g: &Digraph) -> LineGraph {
    let edge_of: Vec<(VertexId, VertexId)> = g.edges().collect();
    // offsets[v]..offsets[v + 1] is the range of line vertices whose base
    // edge starts at v, thanks to the lexicographic numbering
    let mut offsets = vec![0u32; g.vertex_count() + 1];
    for &(from, _) in &edge_of {
        offsets[from.index() + 1] += 1;
    }
    for i in 1..offsets.len() {
        offsets[i] += offsets[i - 1];
    }
    let mut edges = Vec::new();
    for (id, &(_, to)) in edge_of.iter().enumerate() {
        for next in offsets[to.index()]..offsets[to.index() + 1] {
            edges.push((id as u32, next));
        }
    }
    let graph = Digraph::from_edges(edge_of.len(), edges)
        .expect("line graph edges are in range and distinct");
    LineGraph { graph, edge_of }
}

impl LineGraph {
    /// The line graph itself.
    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    /// The base edge represented by line vertex `lv`.
    pub fn edge_of(&self, lv: VertexId) -> (VertexId, VertexId) {
        self.edge_of[lv.index()]
    }

    /// All base edges in line-vertex order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edge_of
    }

    /// The line vertex representing base edge `(from, to)`, if present.
    pub fn vertex_for_edge(&self, from: VertexId, to: VertexId) -> Option<VertexId> {
        self.edge_of
            .binary_search(&(from, to))
            .ok()
            .map(|i| VertexId(i as u32))
    }
}

/// Errors raised by [`line_path_reduce`].
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LineReduceError {
    /// A vertex of the input is not a line vertex.
    #[error("vertex {0} is not a line-graph vertex")]
    NotALineVertex(u32),
    /// Two consecutive base edges do not share their junction vertex.
    #[error("edges ({0}, {1}) and ({2}, {3}) do not chain")]
    BrokenChain(u32, u32, u32, u32),
}

/// Maps a path of the line graph back to the base-graph walk that traverses
/// the corresponding edges in order.
///
/// A line path with `n` vertices reduces to a base walk with `n` edges, so
/// the reduction always adds one to the length.
pub fn line_path_reduce(line: &LineGraph, p: &Path) -> Result<Path, LineReduceError> {
    let mut raw: Vec<u32> = Vec::with_capacity(p.vertex_count() + 1);
    let mut prev: Option<(VertexId, VertexId)> = None;
    for lv in p.vertices() {
        if lv.index() >= line.edge_of.len() {
            return Err(LineReduceError::NotALineVertex(lv.0));
        }
        let (from, to) = line.edge_of[lv.index()];
        match prev {
            None => {
                raw.push(from.0);
                raw.push(to.0);
            }
            Some((pf, pt)) => {
                if pt != from {
                    return Err(LineReduceError::BrokenChain(pf.0, pt.0, from.0, to.0));
                }
                raw.push(to.0);
            }
        }
        prev = Some((from, to));
    }
    Ok(Path::from_raw(raw))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn looped() -> Digraph {
        // 0 -> 1 <-> 2 -> 3
        Digraph::from_edges(4, [(0, 1), (1, 2), (2, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn line_vertices_follow_edge_order() {
        let g = looped();
        let line = line_graph(&g);
        assert_eq!(line.graph().vertex_count(), 4);
        assert_eq!(
            line.edges(),
            &[
                (VertexId(0), VertexId(1)),
                (VertexId(1), VertexId(2)),
                (VertexId(2), VertexId(1)),
                (VertexId(2), VertexId(3)),
            ]
        );
        let lv_edges: Vec<_> = line.graph().edges().map(|(a, b)| (a.0, b.0)).collect();
        // (0,1)->(1,2); (1,2)->(2,1) and (2,3); (2,1)->(1,2)
        assert_eq!(lv_edges, vec![(0, 1), (1, 2), (1, 3), (2, 1)]);
        assert_eq!(
            line.vertex_for_edge(VertexId(2), VertexId(1)),
            Some(VertexId(2))
        );
        assert_eq!(line.vertex_for_edge(VertexId(1), VertexId(0)), None);
    }

    #[test]
    fn self_loop_becomes_line_self_loop() {
        let g = Digraph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
        let line = line_graph(&g);
        let lv_edges: Vec<_> = line.graph().edges().map(|(a, b)| (a.0, b.0)).collect();
        // (0,0) chains to itself and to (0,1)
        assert_eq!(lv_edges, vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn reduce_chains_edges_into_a_walk() {
        let g = looped();
        let line = line_graph(&g);
        // (0,1) (1,2) (2,1) (1,2) (2,3) as line vertices 0,1,2,1,3
        let p = Path::new(
            line.graph(),
            [0, 1, 2, 1, 3].iter().map(|&v| VertexId(v)).collect(),
        )
        .unwrap();
        let reduced = line_path_reduce(&line, &p).unwrap();
        let raw: Vec<u32> = reduced.raw().collect();
        assert_eq!(raw, vec![0, 1, 2, 1, 2, 3]);
        assert_eq!(reduced.len(), p.vertex_count());
    }

    #[test]
    fn reduce_single_line_vertex_is_one_edge() {
        let g = looped();
        let line = line_graph(&g);
        let p = Path::single(VertexId(3));
        let reduced = line_path_reduce(&line, &p).unwrap();
        assert_eq!(reduced.raw().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn reduce_rejects_foreign_and_broken_input() {
        let g = looped();
        let line = line_graph(&g);
        assert_eq!(
            line_path_reduce(&line, &Path::single(VertexId(9))),
            Err(LineReduceError::NotALineVertex(9))
        );
        let broken = Path::from_raw(vec![0, 3]);
        assert_eq!(
            line_path_reduce(&line, &broken),
            Err(LineReduceError::BrokenChain(0, 1, 2, 3))
        );
    }
}
