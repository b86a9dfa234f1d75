//! Breadth-first reference enumerator for prime paths.
//!
//! This is the textbook approach: materialize every simple path of every
//! length, round by round, then discard the ones that occur inside a
//! longer one. It is simple and complete but holds the whole frontier in
//! memory, so it serves as a correctness cross-check and a benchmarking
//! baseline rather than a production enumerator.

use std::time::{Duration, Instant};

use crate::graph::Digraph;
use crate::path::Path;

/// Optional bounds on a [`baseline_prime_paths_bounded`] run.
#[derive(Clone, Copy, Debug, Default)]
pub struct BaselineLimits {
    /// Stop once this instant passes.
    pub deadline: Option<Instant>,
    /// Stop once the materialized vertex cells exceed this count.
    pub max_cells: Option<usize>,
}

/// Result of a bounded baseline run.
///
/// Every variant reports the peak number of materialized paths and the peak
/// number of vertex cells those paths held, observed at round boundaries and
/// at early exits.
#[derive(Clone, Debug)]
pub enum BaselineOutcome {
    /// The full prime path set was computed.
    Completed {
        paths: Vec<Path>,
        peak_retained_paths: usize,
        peak_retained_cells: usize,
    },
    /// The deadline passed before the frontier drained.
    TimedOut {
        elapsed: Duration,
        peak_retained_paths: usize,
        peak_retained_cells: usize,
    },
    /// The cell bound was hit before the frontier drained.
    MemoryCapped {
        cells: usize,
        peak_retained_paths: usize,
        peak_retained_cells: usize,
    },
}

/// Computes the complete prime path set of `g` by breadth-first
/// materialization. Memory grows with the number of simple paths of the
/// graph, which can be exponential in its size.
pub fn baseline_prime_paths(g: &Digraph) -> Vec<Path> {
    match baseline_prime_paths_bounded(g, &BaselineLimits::default()) {
        BaselineOutcome::Completed { paths, .. } => paths,
        _ => unreachable!("an unbounded run always completes"),
    }
}

/// [`baseline_prime_paths`] with a cooperative deadline and a cell cap,
/// checked between extension steps.
pub fn baseline_prime_paths_bounded(g: &Digraph, limits: &BaselineLimits) -> BaselineOutcome {
    let start = Instant::now();
    let mut frontier: Vec<Vec<u32>> = (0..g.vertex_count() as u32).map(|v| vec![v]).collect();
    let mut finals: Vec<Vec<u32>> = Vec::new();
    let mut cells = frontier.len();
    let mut peak_paths = frontier.len();
    let mut peak_cells = cells;
    let mut tick = 0u32;

    while !frontier.is_empty() {
        let mut grown: Vec<Vec<u32>> = Vec::new();
        for p in std::mem::take(&mut frontier) {
            tick = tick.wrapping_add(1);
            if tick % 256 == 0 {
                if let Some(deadline) = limits.deadline {
                    if Instant::now() >= deadline {
                        return BaselineOutcome::TimedOut {
                            elapsed: start.elapsed(),
                            peak_retained_paths: peak_paths.max(grown.len() + finals.len()),
                            peak_retained_cells: peak_cells.max(cells),
                        };
                    }
                }
            }
            let head = p[0];
            let last = *p.last().expect("frontier paths are non-empty");
            let mut extended = false;
            for &w in g.out_raw(last) {
                if w == head {
                    let mut cycle = Vec::with_capacity(p.len() + 1);
                    cycle.extend_from_slice(&p);
                    cycle.push(w);
                    cells += cycle.len();
                    finals.push(cycle);
                } else if !p.contains(&w) {
                    let mut longer = Vec::with_capacity(p.len() + 1);
                    longer.extend_from_slice(&p);
                    longer.push(w);
                    cells += longer.len();
                    grown.push(longer);
                    extended = true;
                }
            }
            if extended {
                cells -= p.len();
            } else {
                finals.push(p);
            }
            if let Some(cap) = limits.max_cells {
                if cells > cap {
                    return BaselineOutcome::MemoryCapped {
                        cells,
                        peak_retained_paths: peak_paths.max(grown.len() + finals.len()),
                        peak_retained_cells: peak_cells.max(cells),
                    };
                }
            }
        }
        peak_paths = peak_paths.max(grown.len() + finals.len());
        peak_cells = peak_cells.max(cells);
        frontier = grown;
    }

    if let Some(deadline) = limits.deadline {
        if Instant::now() >= deadline {
            return BaselineOutcome::TimedOut {
                elapsed: start.elapsed(),
                peak_retained_paths: peak_paths,
                peak_retained_cells: peak_cells,
            };
        }
    }
    let paths = eliminate_covered(finals);
    BaselineOutcome::Completed {
        paths: paths.into_iter().map(Path::from_raw).collect(),
        peak_retained_paths: peak_paths,
        peak_retained_cells: peak_cells,
    }
}

/// Drops every candidate that occurs as a proper contiguous subsequence
/// of another.
///
/// Candidates are grown forward from every start vertex, so a kept path
/// is always right-maximal: nothing after its last vertex could have been
/// appended. An interior occurrence inside another candidate would place
/// an appendable vertex right after it, and a closed cycle cannot sit
/// inside any simple sequence, so the only containment shape left is a
/// proper suffix. Sorting by reversed sequence puts every proper suffix
/// immediately before the candidates it is a suffix of, which makes the
/// check a single adjacent-pair scan instead of an all-pairs one.
fn eliminate_covered(finals: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut order: Vec<usize> = (0..finals.len()).collect();
    order.sort_unstable_by(|&a, &b| finals[a].iter().rev().cmp(finals[b].iter().rev()));
    let mut keep = vec![true; finals.len()];
    for w in order.windows(2) {
        let (p, q) = (&finals[w[0]], &finals[w[1]]);
        if p.len() < q.len() && q[q.len() - p.len()..] == p[..] {
            keep[w[0]] = false;
        }
    }
    finals
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect()
}
