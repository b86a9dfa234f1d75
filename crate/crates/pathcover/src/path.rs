//! Vertex paths and their structural classification.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Digraph, VertexId};

/// Errors raised while validating a vertex sequence against a graph.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PathError {
    /// A path needs at least one vertex.
    #[error("a path must contain at least one vertex")]
    Empty,
    /// A vertex index does not exist in the graph.
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(u32),
    /// Two consecutive vertices are not joined by an edge.
    #[error("({0}, {1}) is not an edge of the graph")]
    MissingEdge(u32, u32),
}

/// A non-empty walk through a graph, stored as its vertex sequence.
///
/// The length of a path is its number of edges, so a single vertex is a
/// path of length zero. Construction through [`Path::new`] checks every
/// consecutive pair against the graph; paths produced by the enumerators
/// in this crate are valid by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Path {
    verts: Vec<VertexId>,
}

impl Path {
    /// Validates `vertices` as a walk in `graph`.
    pub fn new(graph: &Digraph, vertices: Vec<VertexId>) -> Result<Self, PathError> {
        if vertices.is_empty() {
            return Err(PathError::Empty);
        }
        for &v in &vertices {
            if v.index() >= graph.vertex_count() {
                return Err(PathError::VertexOutOfRange(v.0));
            }
        }
        for pair in vertices.windows(2) {
            if !graph.has_edge(pair[0], pair[1]) {
                return Err(PathError::MissingEdge(pair[0].0, pair[1].0));
            }
        }
        Ok(Path { verts: vertices })
    }

    /// A path holding a single vertex.
    pub fn single(v: VertexId) -> Self {
        Path { verts: vec![v] }
    }

    pub(crate) fn from_raw(raw: Vec<u32>) -> Self {
        debug_assert!(!raw.is_empty(), "paths are non-empty");
        Path {
            verts: raw.into_iter().map(VertexId).collect(),
        }
    }

    pub(crate) fn into_raw(self) -> Vec<u32> {
        self.verts.into_iter().map(|v| v.0).collect()
    }

    pub(crate) fn raw(&self) -> impl Iterator<Item = u32> + '_ {
        self.verts.iter().map(|v| v.0)
    }

    /// The vertex sequence.
    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    /// First vertex.
    pub fn head(&self) -> VertexId {
        self.verts[0]
    }

    /// Last vertex.
    pub fn last(&self) -> VertexId {
        *self.verts.last().expect("paths are non-empty")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    /// Whether the path has zero edges.
    pub fn is_empty(&self) -> bool {
        self.verts.len() == 1
    }

    /// Number of vertices, including repeats.
    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Structural flags of a path, as reported by [`classify_path`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathClass {
    /// All vertices distinct.
    pub simple: bool,
    /// First and last vertex equal, at least one edge, and the prefix
    /// without the final vertex is simple.
    pub simple_cycle: bool,
    /// No edge occurs twice.
    pub e_acyclic: bool,
}

/// Classifies a path as simple, a simple cycle, and/or edge-acyclic.
///
/// The three flags are independent: a simple path is always edge-acyclic,
/// a simple cycle is edge-acyclic but not simple, and a longer walk can be
/// edge-acyclic while being neither.
pub fn classify_path(p: &Path) -> PathClass {
    let verts = p.vertices();
    let mut seen: HashSet<VertexId> = HashSet::with_capacity(verts.len());
    let simple = verts.iter().all(|&v| seen.insert(v));

    let closed = verts.len() >= 2 && verts[0] == verts[verts.len() - 1];
    let simple_cycle = closed && {
        let prefix = &verts[..verts.len() - 1];
        let mut seen: HashSet<VertexId> = HashSet::with_capacity(prefix.len());
        prefix.iter().all(|&v| seen.insert(v))
    };

    let mut edges: HashSet<(VertexId, VertexId)> = HashSet::with_capacity(verts.len());
    let e_acyclic = verts.windows(2).all(|w| edges.insert((w[0], w[1])));

    PathClass {
        simple,
        simple_cycle,
        e_acyclic,
    }
}

/// Whether `p` contains `item` as a contiguous vertex subsequence.
///
/// Every path covers itself, and a single-vertex item is covered exactly
/// when its vertex occurs somewhere on `p`.
pub fn covers(p: &Path, item: &Path) -> bool {
    let hay = p.vertices();
    let needle = item.vertices();
    if needle.len() > hay.len() {
        return false;
    }
    if needle.len() == 1 {
        return hay.contains(&needle[0]);
    }
    hay.windows(needle.len()).any(|w| w == needle)
}

/// Error raised by [`rotations`] on input that is not a simple cycle.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RotationError {
    /// Rotations are only defined for simple cycles in closed form.
    #[error("rotations require a simple cycle")]
    NotASimpleCycle,
}

/// All rotations of a simple cycle, each in closed form.
///
/// A cycle with `n` distinct vertices has exactly `n` rotations; the input
/// itself is the rotation at offset zero. A self-loop has a single
/// rotation.
pub fn rotations(cycle: &Path) -> Result<Vec<Path>, RotationError> {
    if !classify_path(cycle).simple_cycle {
        return Err(RotationError::NotASimpleCycle);
    }
    let body = &cycle.vertices()[..cycle.vertex_count() - 1];
    let n = body.len();
    let mut out = Vec::with_capacity(n);
    for offset in 0..n {
        let mut verts = Vec::with_capacity(n + 1);
        verts.extend_from_slice(&body[offset..]);
        verts.extend_from_slice(&body[..offset]);
        verts.push(body[offset]);
        out.push(Path { verts });
    }
    Ok(out)
}
