//! Structural conditions characterizing prime paths.

use std::collections::HashSet;

use crate::graph::Digraph;
use crate::path::{classify_path, Path};
use crate::scc::SccPartition;

/// Which of the three mutually exclusive prime-path shapes a path matches.
///
/// A path is prime exactly when one of the flags holds: it is a simple
/// cycle, or it is a non-extendable simple path confined to one strongly
/// connected class, or it is a non-extendable simple path crossing two or
/// more classes with its endpoints anchored in the first and last class
/// segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeConditions {
    /// Closed form of a simple cycle.
    pub simple_cycle: bool,
    /// Simple path inside a single class whose head admits no predecessor
    /// outside the path (other than its last vertex) and whose last vertex
    /// admits no successor outside the path (other than its head).
    pub single_class_path: bool,
    /// Simple path through at least two classes whose head's predecessors
    /// all lie on the path's first class segment and whose last vertex's
    /// successors all lie on its final class segment.
    pub multi_class_path: bool,
}

impl PrimeConditions {
    /// Whether any shape matches.
    pub fn any(&self) -> bool {
        self.simple_cycle || self.single_class_path || self.multi_class_path
    }

    /// Whether exactly one shape matches.
    pub fn exactly_one(&self) -> bool {
        u8::from(self.simple_cycle)
            + u8::from(self.single_class_path)
            + u8::from(self.multi_class_path)
            == 1
    }
}

/// Evaluates the three prime-path shapes for `p` against `g`.
///
/// `part` must be the strongly-connected-component partition of `g`.
pub fn prime_conditions(g: &Digraph, part: &SccPartition, p: &Path) -> PrimeConditions {
    let class = classify_path(p);
    let mut out = PrimeConditions {
        simple_cycle: class.simple_cycle,
        single_class_path: false,
        multi_class_path: false,
    };
    if !class.simple {
        return out;
    }

    let verts: Vec<u32> = p.raw().collect();
    let head = verts[0];
    let last = *verts.last().expect("paths are non-empty");

    // collapse the path to its sequence of class segments
    let mut segments: Vec<u32> = Vec::new();
    for &v in &verts {
        let c = part.class_of_raw(v);
        if segments.last() != Some(&c) {
            segments.push(c);
        }
    }
    // a simple path cannot revisit a class segment, but arbitrary inputs
    // can, and those match neither path shape
    let distinct: HashSet<u32> = segments.iter().copied().collect();
    if distinct.len() != segments.len() {
        return out;
    }

    if segments.len() == 1 {
        let on_path: HashSet<u32> = verts.iter().copied().collect();
        let head_closed = g
            .in_raw(head)
            .iter()
            .all(|&u| on_path.contains(&u) && u != last);
        let last_closed = g
            .out_raw(last)
            .iter()
            .all(|&w| on_path.contains(&w) && w != head);
        out.single_class_path = head_closed && last_closed;
    } else {
        let first_class = segments[0];
        let last_class = *segments.last().expect("segments are non-empty");
        let first_segment: HashSet<u32> = verts
            .iter()
            .copied()
            .filter(|&v| part.class_of_raw(v) == first_class)
            .collect();
        let last_segment: HashSet<u32> = verts
            .iter()
            .copied()
            .filter(|&v| part.class_of_raw(v) == last_class)
            .collect();
        let head_closed = g.in_raw(head).iter().all(|&u| first_segment.contains(&u));
        let last_closed = g.out_raw(last).iter().all(|&w| last_segment.contains(&w));
        out.multi_class_path = head_closed && last_closed;
    }
    out
}

/// Whether `p` is a prime path of `g`, decided structurally from the
/// conditions above without enumerating extensions.
pub fn is_prime_path(g: &Digraph, part: &SccPartition, p: &Path) -> bool {
    prime_conditions(g, part, p).any()
}
