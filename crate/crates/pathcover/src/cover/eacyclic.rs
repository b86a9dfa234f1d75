//! Coverage of edge-acyclic paths through the line graph.

use crate::enumerate::{
    non_extendable_simple_paths, simple_cycles, NonExtendableSimplePaths, RetainedState,
    SimpleCycles,
};
use crate::graph::{Digraph, VertexId};
use crate::line::line_graph;
use crate::path::Path;
use crate::sese::SeseGraph;

use super::accumulate::CoverageStream;
use super::{CoverageConfig, TestCase};

/// Test paths covering every edge-acyclic path of the graph that has at
/// least one edge.
///
/// An edge-acyclic walk of the base graph is exactly a simple path of its
/// line graph, read back as an edge sequence. The strategy therefore
/// works entirely in an augmented line graph: the line graph of the base
/// graph plus a fresh source feeding every edge out of the entry and a
/// fresh sink fed by every edge into the exit, which is itself
/// single-entry single-exit. A doubled-cycle phase covers all rotations
/// of every line-graph cycle, then a path phase covers every
/// non-extendable simple path; together these cover every simple path of
/// the line graph. Each emitted case is stripped of the fresh endpoints
/// and mapped back to the base graph by chaining its edges.
pub struct EAcyclicPathCoverage {
    cycles: Option<CoverageStream<SimpleCycles>>,
    paths: CoverageStream<NonExtendableSimplePaths>,
    edge_of: Vec<(u32, u32)>,
    source: u32,
    sink: u32,
}

/// Builds the edge-acyclic strategy; `config.double_cycle` is implied.
pub fn e_acyclic_path_coverage(g: &SeseGraph, config: CoverageConfig) -> EAcyclicPathCoverage {
    let line = line_graph(g.graph());
    let line_count = line.graph().vertex_count();
    let source = line_count as u32;
    let sink = line_count as u32 + 1;
    let mut edges: Vec<(u32, u32)> = line.graph().edges_raw().collect();
    for (id, &(from, to)) in line.edges().iter().enumerate() {
        if from == g.entry() {
            edges.push((source, id as u32));
        }
        if to == g.exit() {
            edges.push((id as u32, sink));
        }
    }
    let augmented = Digraph::from_edges(line_count + 2, edges)
        .expect("augmenting the line graph adds fresh vertices only");
    let augmented = SeseGraph::try_new(augmented, VertexId(source), VertexId(sink))
        .expect("the augmented line graph of a validated graph is single-entry single-exit");
    EAcyclicPathCoverage {
        cycles: Some(CoverageStream::new(
            &augmented,
            simple_cycles(augmented.graph()),
            config.k,
            true,
        )),
        paths: CoverageStream::new(
            &augmented,
            non_extendable_simple_paths(augmented.graph()),
            config.k,
            false,
        ),
        edge_of: line.edges().iter().map(|&(a, b)| (a.0, b.0)).collect(),
        source,
        sink,
    }
}

impl EAcyclicPathCoverage {
    fn map_back(&self, case: TestCase) -> TestCase {
        let raw = case.path.into_raw();
        // the fresh source and sink can only sit at the two ends
        let core = &raw[usize::from(raw.first() == Some(&self.source))
            ..raw.len() - usize::from(raw.last() == Some(&self.sink))];
        debug_assert!(!core.is_empty());
        debug_assert!(core.iter().all(|&lv| lv < self.source));
        let mut walk = Vec::with_capacity(core.len() + 1);
        walk.push(self.edge_of[core[0] as usize].0);
        for &lv in core {
            walk.push(self.edge_of[lv as usize].1);
        }
        TestCase {
            path: Path::from_raw(walk),
            items_covered: case.items_covered,
        }
    }
}

impl Iterator for EAcyclicPathCoverage {
    type Item = TestCase;

    fn next(&mut self) -> Option<TestCase> {
        let case = loop {
            if let Some(cycles) = self.cycles.as_mut() {
                if let Some(case) = cycles.next() {
                    break case;
                }
                self.cycles = None;
            }
            match self.paths.next() {
                Some(case) => break case,
                None => return None,
            }
        };
        Some(self.map_back(case))
    }
}

impl RetainedState for EAcyclicPathCoverage {
    fn retained_paths(&self) -> usize {
        self.cycles.as_ref().map_or(0, RetainedState::retained_paths) + self.paths.retained_paths()
    }

    fn retained_cells(&self) -> usize {
        self.cycles.as_ref().map_or(0, RetainedState::retained_cells) + self.paths.retained_cells()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::covers;

    fn sese(n: usize, edges: &[(u32, u32)], entry: u32, exit: u32) -> SeseGraph {
        let g = Digraph::from_edges(n, edges.iter().copied()).unwrap();
        SeseGraph::try_new(g, VertexId(entry), VertexId(exit)).unwrap()
    }

    fn cases(g: &SeseGraph, k: usize) -> Vec<(Vec<u32>, usize)> {
        let config = CoverageConfig::new(k, false).unwrap();
        e_acyclic_path_coverage(g, config)
            .map(|c| (c.path.raw().collect(), c.items_covered))
            .collect()
    }

    #[test]
    fn chain_yields_its_single_path() {
        let g = sese(3, &[(0, 1), (1, 2)], 0, 2);
        assert_eq!(cases(&g, 1), vec![(vec![0, 1, 2], 1)]);
    }

    #[test]
    fn every_case_runs_entry_to_exit() {
        let g = sese(4, &[(0, 1), (1, 2), (2, 1), (2, 3)], 0, 3);
        for (raw, covered) in cases(&g, 2) {
            assert_eq!(*raw.first().unwrap(), 0);
            assert_eq!(*raw.last().unwrap(), 3);
            assert!(covered >= 1);
        }
    }

    #[test]
    fn detour_cycle_is_covered_even_alone_per_case() {
        // 0 -> 1 -> 2 -> 3 -> 4 with the detour 3 -> 1; the edge cycle
        // (2, 3, 1, 2) occurs inside no single non-extendable simple
        // path of the line graph, so the cycle phase must supply it
        let g = sese(5, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)], 0, 4);
        let all = cases(&g, 1);
        let target = Path::from_raw(vec![2, 3, 1, 2]);
        assert!(
            all.iter()
                .any(|(raw, _)| covers(&Path::from_raw(raw.clone()), &target)),
            "no case covers the detour cycle: {all:?}"
        );
    }

    #[test]
    fn single_edge_graph() {
        let g = sese(2, &[(0, 1)], 0, 1);
        assert_eq!(cases(&g, 3), vec![(vec![0, 1], 1)]);
    }
}
