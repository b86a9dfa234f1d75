//! Strongly connected components and the condensation graph.

use std::collections::HashSet;

use crate::graph::{Digraph, VertexId};
use crate::path::Path;

const UNDEF: u32 = u32::MAX;

/// The strongly connected components of a graph.
///
/// Classes are sorted by their smallest member and each class lists its
/// members ascending, so the partition of a given graph is unique.
#[derive(Clone, Debug)]
pub struct SccPartition {
    classes: Vec<Vec<VertexId>>,
    class_of: Vec<u32>,
    condensation: Digraph,
}

/// Computes the strongly connected components of `g`.
pub fn scc_partition(g: &Digraph) -> SccPartition {
    let mut raw = tarjan_components(g.out_lists(), 0);
    raw.sort_by_key(|c| c[0]);
    let mut class_of = vec![0u32; g.vertex_count()];
    for (i, class) in raw.iter().enumerate() {
        for &v in class {
            class_of[v as usize] = i as u32;
        }
    }
    let mut cond_edges: HashSet<(u32, u32)> = HashSet::new();
    for (from, to) in g.edges_raw() {
        let (a, b) = (class_of[from as usize], class_of[to as usize]);
        if a != b {
            cond_edges.insert((a, b));
        }
    }
    let condensation = Digraph::from_edges(raw.len(), cond_edges)
        .expect("condensation edges are deduplicated and in range");
    SccPartition {
        classes: raw
            .into_iter()
            .map(|c| c.into_iter().map(VertexId).collect())
            .collect(),
        class_of,
        condensation,
    }
}

impl SccPartition {
    /// Number of classes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// All classes, ordered by smallest member.
    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    /// Members of class `index`, ascending.
    pub fn class(&self, index: usize) -> &[VertexId] {
        &self.classes[index]
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v.index()] as usize
    }

    pub(crate) fn class_of_raw(&self, v: u32) -> u32 {
        self.class_of[v as usize]
    }

    /// Whether `u` and `v` share a class.
    pub fn same_class(&self, u: VertexId, v: VertexId) -> bool {
        self.class_of[u.index()] == self.class_of[v.index()]
    }

    /// The condensation: one vertex per class, one edge per pair of
    /// classes joined by at least one graph edge. Always acyclic.
    pub fn condensation(&self) -> &Digraph {
        &self.condensation
    }
}

/// The distinct vertices of `p` lying in class `class_index`, ascending.
pub fn cut(part: &SccPartition, class_index: usize, p: &Path) -> Vec<VertexId> {
    let mut verts: Vec<VertexId> = p
        .vertices()
        .iter()
        .copied()
        .filter(|&v| part.class_of(v) == class_index)
        .collect();
    verts.sort_unstable();
    verts.dedup();
    verts
}

/// Tarjan's algorithm, iterative, restricted to vertices `>= min_vertex`.
///
/// Edges into vertices below `min_vertex` are ignored, which yields the
/// components of the induced subgraph on `{min_vertex, ...}`. Each
/// component comes back sorted ascending; component order follows the
/// traversal and is normalized by callers.
pub(crate) fn tarjan_components(adj: &[Vec<u32>], min_vertex: u32) -> Vec<Vec<u32>> {
    let mut state = TarjanState::new(adj.len());
    let mut comps = Vec::new();
    for root in (min_vertex as usize)..adj.len() {
        let root = root as u32;
        if state.index[root as usize] == UNDEF {
            state.visit(adj, min_vertex, root, &mut |comp| {
                comps.push(comp);
                false
            });
        }
    }
    comps
}

/// The strongly connected component containing `root` within the induced
/// subgraph on `{min_vertex, ...}`, sorted ascending.
pub(crate) fn scc_containing(adj: &[Vec<u32>], min_vertex: u32, root: u32) -> Vec<u32> {
    debug_assert!(root >= min_vertex);
    let mut state = TarjanState::new(adj.len());
    let mut found = Vec::new();
    state.visit(adj, min_vertex, root, &mut |comp| {
        if comp.binary_search(&root).is_ok() {
            found = comp;
            true
        } else {
            false
        }
    });
    found
}

struct TarjanState {
    index: Vec<u32>,
    low: Vec<u32>,
    on_stack: Vec<bool>,
    stack: Vec<u32>,
    next_index: u32,
}

impl TarjanState {
    fn new(n: usize) -> Self {
        TarjanState {
            index: vec![UNDEF; n],
            low: vec![0; n],
            on_stack: vec![false; n],
            stack: Vec::new(),
            next_index: 0,
        }
    }

    fn open(&mut self, v: u32) {
        let vi = v as usize;
        self.index[vi] = self.next_index;
        self.low[vi] = self.next_index;
        self.next_index += 1;
        self.on_stack[vi] = true;
        self.stack.push(v);
    }

    /// Depth-first walk from `root`; calls `sink` for each completed
    /// component and stops early when the sink returns true.
    fn visit(
        &mut self,
        adj: &[Vec<u32>],
        min_vertex: u32,
        root: u32,
        sink: &mut impl FnMut(Vec<u32>) -> bool,
    ) {
        self.open(root);
        let mut frames: Vec<(u32, usize)> = vec![(root, 0)];
        while let Some(&(v, cursor)) = frames.last() {
            let vi = v as usize;
            if cursor < adj[vi].len() {
                frames.last_mut().expect("frame present").1 += 1;
                let w = adj[vi][cursor];
                if w < min_vertex {
                    continue;
                }
                let wi = w as usize;
                if self.index[wi] == UNDEF {
                    self.open(w);
                    frames.push((w, 0));
                } else if self.on_stack[wi] {
                    self.low[vi] = self.low[vi].min(self.index[wi]);
                }
            } else {
                frames.pop();
                if self.low[vi] == self.index[vi] {
                    let mut comp = Vec::new();
                    loop {
                        let w = self.stack.pop().expect("component root on stack");
                        self.on_stack[w as usize] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    if sink(comp) {
                        return;
                    }
                }
                if let Some(&(parent, _)) = frames.last() {
                    let pi = parent as usize;
                    self.low[pi] = self.low[pi].min(self.low[vi]);
                }
            }
        }
    }
}
