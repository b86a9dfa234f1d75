//! Single-entry single-exit validation.

use std::collections::VecDeque;

use crate::graph::{Digraph, VertexId};

/// One way a graph can fail the single-entry single-exit shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeseViolation {
    /// Fewer than two vertices.
    TooFewVertices { vertex_count: usize },
    /// Entry and exit are the same vertex.
    EntryEqualsExit { vertex: VertexId },
    /// The entry has incoming edges.
    EntryHasIncoming {
        entry: VertexId,
        sources: Vec<VertexId>,
    },
    /// The exit has outgoing edges.
    ExitHasOutgoing {
        exit: VertexId,
        targets: Vec<VertexId>,
    },
    /// Vertices not lying on any entry-to-exit path.
    NotOnEntryExitPath { vertices: Vec<VertexId> },
}

impl std::fmt::Display for SeseViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn list(vs: &[VertexId]) -> String {
            let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
            items.join(", ")
        }
        match self {
            SeseViolation::TooFewVertices { vertex_count } => {
                write!(f, "graph has {vertex_count} vertices, at least 2 required")
            }
            SeseViolation::EntryEqualsExit { vertex } => {
                write!(f, "entry and exit are both vertex {vertex}")
            }
            SeseViolation::EntryHasIncoming { entry, sources } => {
                write!(f, "entry {entry} has incoming edges from: {}", list(sources))
            }
            SeseViolation::ExitHasOutgoing { exit, targets } => {
                write!(f, "exit {exit} has outgoing edges to: {}", list(targets))
            }
            SeseViolation::NotOnEntryExitPath { vertices } => {
                write!(f, "not on any entry-to-exit path: {}", list(vertices))
            }
        }
    }
}

/// All violations found by [`validate_sese`], usable as an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeseReport {
    violations: Vec<SeseViolation>,
}

impl std::error::Error for SeseReport {}

impl SeseReport {
    /// Every violation found, in a fixed order.
    pub fn violations(&self) -> &[SeseViolation] {
        &self.violations
    }
}

impl std::fmt::Display for SeseReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks that `g` with the given entry and exit is single-entry
/// single-exit: at least two vertices, distinct entry and exit, no edge
/// into the entry, no edge out of the exit, and every vertex on some
/// entry-to-exit path.
///
/// All violations are collected; vertices inside a violation are listed
/// ascending.
///
/// # Panics
///
/// Panics if `entry` or `exit` is out of range for `g`.
pub fn validate_sese(g: &Digraph, entry: VertexId, exit: VertexId) -> Result<(), SeseReport> {
    let n = g.vertex_count();
    assert!(
        entry.index() < n && exit.index() < n,
        "entry or exit out of range"
    );
    let mut violations = Vec::new();
    if n < 2 {
        violations.push(SeseViolation::TooFewVertices { vertex_count: n });
    }
    if entry == exit {
        violations.push(SeseViolation::EntryEqualsExit { vertex: entry });
    }
    if g.in_degree(entry) > 0 {
        violations.push(SeseViolation::EntryHasIncoming {
            entry,
            sources: g.predecessors(entry).collect(),
        });
    }
    if g.out_degree(exit) > 0 {
        violations.push(SeseViolation::ExitHasOutgoing {
            exit,
            targets: g.successors(exit).collect(),
        });
    }
    let forward = reach(g, entry.0, Direction::Forward);
    let backward = reach(g, exit.0, Direction::Backward);
    let stranded: Vec<VertexId> = (0..n as u32)
        .filter(|&v| !(forward[v as usize] && backward[v as usize]))
        .map(VertexId)
        .collect();
    if !stranded.is_empty() {
        violations.push(SeseViolation::NotOnEntryExitPath { vertices: stranded });
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(SeseReport { violations })
    }
}

enum Direction {
    Forward,
    Backward,
}

fn reach(g: &Digraph, start: u32, dir: Direction) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[start as usize] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let next = match dir {
            Direction::Forward => g.out_raw(v),
            Direction::Backward => g.in_raw(v),
        };
        for &w in next {
            if !seen[w as usize] {
                seen[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// A graph that passed [`validate_sese`], together with its entry and
/// exit. Coverage generation requires this type, which guarantees that
/// the connecting-segment lookups it performs always succeed.
#[derive(Clone, Debug)]
pub struct SeseGraph {
    graph: Digraph,
    entry: VertexId,
    exit: VertexId,
}

impl SeseGraph {
    /// Validates and wraps a graph.
    pub fn try_new(graph: Digraph, entry: VertexId, exit: VertexId) -> Result<Self, SeseReport> {
        validate_sese(&graph, entry, exit)?;
        Ok(SeseGraph { graph, entry, exit })
    }

    /// The underlying graph.
    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    /// The entry vertex.
    pub fn entry(&self) -> VertexId {
        self.entry
    }

    /// The exit vertex.
    pub fn exit(&self) -> VertexId {
        self.exit
    }
}
