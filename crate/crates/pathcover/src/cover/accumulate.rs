//! The streaming accumulator that folds items into test cases.

use crate::enumerate::RetainedState;
use crate::graph::Digraph;
use crate::path::Path;
use crate::sese::SeseGraph;

use super::TestCase;

/// Folds an item stream into entry-to-exit test cases.
///
/// Items are consumed one at a time. The case under construction starts
/// with a shortest segment from the entry to the first item's head; each
/// further item is attached through a shortest segment from the current
/// endpoint to the item's head. A case is emitted once it covers `k`
/// items, or early when no connecting segment exists, in which case the
/// next item opens a fresh case; the final case may cover fewer than `k`
/// items. Each emitted case is finished with a shortest segment to the
/// exit, which always exists because the graph was validated as
/// single-entry single-exit.
///
/// At most one case is under construction at any time, so the retained
/// state is that case plus whatever the item producer holds.
pub struct CoverageStream<I> {
    graph: Digraph,
    entry: u32,
    exit: u32,
    items: I,
    k: usize,
    double_cycle: bool,
    building: Option<(Vec<u32>, usize)>,
    done: bool,
}

impl<I: Iterator<Item = Path>> CoverageStream<I> {
    pub(crate) fn new(g: &SeseGraph, items: I, k: usize, double_cycle: bool) -> Self {
        debug_assert!(k >= 1);
        CoverageStream {
            graph: g.graph().clone(),
            entry: g.entry().0,
            exit: g.exit().0,
            items,
            k,
            double_cycle,
            building: None,
            done: false,
        }
    }

    fn segment(&self, from: u32, to: u32) -> Option<Vec<u32>> {
        self.graph
            .shortest_path(crate::graph::VertexId(from), crate::graph::VertexId(to))
            .map(Path::into_raw)
    }

    fn open(&self, item: &[u32]) -> Vec<u32> {
        let mut case = self
            .segment(self.entry, item[0])
            .expect("every vertex is reachable from the entry of a validated graph");
        append_from_junction(&mut case, item);
        case
    }

    fn close(&self, mut case: Vec<u32>, items_covered: usize) -> TestCase {
        let last = *case.last().expect("cases are non-empty");
        let tail = self
            .segment(last, self.exit)
            .expect("every vertex reaches the exit of a validated graph");
        append_from_junction(&mut case, &tail);
        TestCase {
            path: Path::from_raw(case),
            items_covered,
        }
    }
}

/// Appends `suffix` to `case`, which must already end with the suffix's
/// first vertex.
fn append_from_junction(case: &mut Vec<u32>, suffix: &[u32]) {
    debug_assert_eq!(case.last(), suffix.first());
    case.extend_from_slice(&suffix[1..]);
}

/// Walks a closed cycle twice: the closed form followed by its own body
/// once more.
fn double_cycle_walk(raw: &mut Vec<u32>) {
    debug_assert!(raw.len() >= 2 && raw[0] == raw[raw.len() - 1]);
    let again: Vec<u32> = raw[1..].to_vec();
    raw.extend_from_slice(&again);
}

impl<I: Iterator<Item = Path>> Iterator for CoverageStream<I> {
    type Item = TestCase;

    fn next(&mut self) -> Option<TestCase> {
        if self.done {
            return None;
        }
        loop {
            let Some(item) = self.items.next() else {
                self.done = true;
                return self
                    .building
                    .take()
                    .map(|(case, covered)| self.close(case, covered));
            };
            let mut raw = item.into_raw();
            if self.double_cycle {
                double_cycle_walk(&mut raw);
            }
            match self.building.take() {
                None => {
                    let case = self.open(&raw);
                    if self.k == 1 {
                        return Some(self.close(case, 1));
                    }
                    self.building = Some((case, 1));
                }
                Some((mut case, covered)) => {
                    let last = *case.last().expect("cases are non-empty");
                    match self.segment(last, raw[0]) {
                        Some(connector) => {
                            append_from_junction(&mut case, &connector);
                            append_from_junction(&mut case, &raw);
                            let covered = covered + 1;
                            if covered == self.k {
                                return Some(self.close(case, covered));
                            }
                            self.building = Some((case, covered));
                        }
                        None => {
                            let finished = self.close(case, covered);
                            self.building = Some((self.open(&raw), 1));
                            return Some(finished);
                        }
                    }
                }
            }
        }
    }
}

impl<I: Iterator<Item = Path> + RetainedState> RetainedState for CoverageStream<I> {
    fn retained_paths(&self) -> usize {
        usize::from(self.building.is_some()) + self.items.retained_paths()
    }

    fn retained_cells(&self) -> usize {
        self.building.as_ref().map_or(0, |(case, _)| case.len()) + self.items.retained_cells()
    }
}
