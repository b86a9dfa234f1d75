//! Streaming enumeration of prime paths.

use crate::enumerate::cycles::{simple_cycles, SimpleCycles};
use crate::enumerate::nonext::{non_extendable_simple_paths, NonExtendableSimplePaths};
use crate::enumerate::RetainedState;
use crate::graph::Digraph;
use crate::path::Path;

/// Iterator over every prime path of a graph: first all rotations of
/// every simple cycle in closed form, then every non-extendable simple
/// path.
///
/// Cycles are grouped by canonical representative; each representative is
/// followed immediately by its remaining rotations, in offset order.
pub struct PrimePaths {
    cycles: Option<SimpleCycles>,
    rotation: Option<RotationState>,
    paths: NonExtendableSimplePaths,
}

struct RotationState {
    body: Vec<u32>,
    next_offset: usize,
}

/// Enumerates the prime paths of `g` lazily.
pub fn prime_paths(g: &Digraph) -> PrimePaths {
    PrimePaths {
        cycles: Some(simple_cycles(g)),
        rotation: None,
        paths: non_extendable_simple_paths(g),
    }
}

impl Iterator for PrimePaths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        loop {
            if let Some(rot) = self.rotation.as_mut() {
                if rot.next_offset < rot.body.len() {
                    let offset = rot.next_offset;
                    rot.next_offset += 1;
                    let n = rot.body.len();
                    let mut verts = Vec::with_capacity(n + 1);
                    verts.extend_from_slice(&rot.body[offset..]);
                    verts.extend_from_slice(&rot.body[..offset]);
                    verts.push(rot.body[offset]);
                    return Some(Path::from_raw(verts));
                }
                self.rotation = None;
            }
            if let Some(cycles) = self.cycles.as_mut() {
                if let Some(cycle) = cycles.next() {
                    let mut body = cycle.into_raw();
                    body.pop();
                    self.rotation = Some(RotationState {
                        body,
                        next_offset: 0,
                    });
                    continue;
                }
                self.cycles = None;
            }
            return self.paths.next();
        }
    }
}

impl RetainedState for PrimePaths {
    fn retained_paths(&self) -> usize {
        usize::from(self.rotation.is_some())
            + self.cycles.as_ref().map_or(0, RetainedState::retained_paths)
            + self.paths.retained_paths()
    }

    fn retained_cells(&self) -> usize {
        self.rotation.as_ref().map_or(0, |r| r.body.len())
            + self.cycles.as_ref().map_or(0, RetainedState::retained_cells)
            + self.paths.retained_cells()
    }
}
