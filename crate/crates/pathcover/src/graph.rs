//! Directed graphs over dense vertex indices.

use std::collections::VecDeque;

use thiserror::Error;

use crate::path::Path;

/// Dense index of a vertex within a [`Digraph`].
///
/// External identifiers (labels, raw integers) are mapped to dense indices
/// `0..vertex_count` at construction time; every algorithm in this crate
/// works on these indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub(crate) u32);

impl VertexId {
    /// Wraps a raw dense index.
    pub const fn new(index: u32) -> Self {
        VertexId(index)
    }

    /// The raw dense index as a usize.
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Errors raised while building a [`Digraph`].
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint is not a valid vertex index.
    #[error("vertex index {index} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { index: u32, vertex_count: usize },
    /// The same directed edge was given twice.
    #[error("duplicate edge ({from}, {to})")]
    DuplicateEdge { from: u32, to: u32 },
}

/// A finite directed graph with adjacency stored in both directions.
///
/// Successor and predecessor lists are kept sorted ascending, which makes
/// edge membership a binary search and gives every traversal in the crate a
/// deterministic vertex order. Self-loops are allowed; parallel edges are
/// rejected at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Digraph {
    /// Creates a graph with `vertex_count` vertices and no edges.
    pub fn new(vertex_count: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); vertex_count],
            in_adj: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list.
    ///
    /// Fails if an endpoint is out of range or an edge repeats.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut out_adj = vec![Vec::new(); vertex_count];
        let mut in_adj = vec![Vec::new(); vertex_count];
        let mut edge_count = 0usize;
        for (from, to) in edges {
            for &index in &[from, to] {
                if index as usize >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        index,
                        vertex_count,
                    });
                }
            }
            out_adj[from as usize].push(to);
            in_adj[to as usize].push(from);
            edge_count += 1;
        }
        for list in out_adj.iter_mut() {
            list.sort_unstable();
        }
        for (from, list) in out_adj.iter().enumerate() {
            if let Some(window) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge {
                    from: from as u32,
                    to: window[0],
                });
            }
        }
        for list in in_adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Digraph {
            out_adj,
            in_adj,
            edge_count,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// All vertices in ascending index order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.out_adj.len() as u32).map(VertexId)
    }

    /// All edges in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out_adj.iter().enumerate().flat_map(|(from, list)| {
            list.iter()
                .map(move |&to| (VertexId(from as u32), VertexId(to)))
        })
    }

    /// Successors of `v` in ascending order.
    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_adj[v.index()].iter().map(|&w| VertexId(w))
    }

    /// Predecessors of `v` in ascending order.
    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_adj[v.index()].iter().map(|&w| VertexId(w))
    }

    /// Out-degree of `v`.
    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v.index()].len()
    }

    /// In-degree of `v`.
    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v.index()].len()
    }

    /// Whether the edge `(from, to)` is present.
    pub fn has_edge(&self, from: VertexId, to: VertexId) -> bool {
        self.has_edge_raw(from.0, to.0)
    }

    pub(crate) fn has_edge_raw(&self, from: u32, to: u32) -> bool {
        self.out_adj[from as usize].binary_search(&to).is_ok()
    }

    pub(crate) fn out_raw(&self, v: u32) -> &[u32] {
        &self.out_adj[v as usize]
    }

    pub(crate) fn in_raw(&self, v: u32) -> &[u32] {
        &self.in_adj[v as usize]
    }

    pub(crate) fn out_lists(&self) -> &[Vec<u32>] {
        &self.out_adj
    }

    pub(crate) fn edges_raw(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(from, list)| list.iter().map(move |&to| (from as u32, to)))
    }

    /// A shortest path from `from` to `to` by edge count, or `None` when
    /// `to` is unreachable.
    ///
    /// Ties are broken toward smaller vertex indices, so the result is
    /// deterministic. `shortest_path(v, v)` is the single-vertex path.
    pub fn shortest_path(&self, from: VertexId, to: VertexId) -> Option<Path> {
        let n = self.vertex_count();
        assert!(from.index() < n && to.index() < n, "vertex out of range");
        if from == to {
            return Some(Path::from_raw(vec![from.0]));
        }
        let mut parent: Vec<u32> = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        parent[from.index()] = from.0;
        queue.push_back(from.0);
        while let Some(v) = queue.pop_front() {
            for &w in self.out_raw(v) {
                if parent[w as usize] != u32::MAX {
                    continue;
                }
                parent[w as usize] = v;
                if w == to.0 {
                    let mut verts = vec![w];
                    let mut cur = w;
                    while cur != from.0 {
                        cur = parent[cur as usize];
                        verts.push(cur);
                    }
                    verts.reverse();
                    return Some(Path::from_raw(verts));
                }
                queue.push_back(w);
            }
        }
        None
    }
}
