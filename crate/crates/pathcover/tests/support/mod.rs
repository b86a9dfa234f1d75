//! Shared fixtures, brute-force oracles, and random graph generators for
//! the integration suites.
//!
//! The oracles here are deliberately independent of the library's
//! enumeration code: plain recursive searches straight from the
//! definitions, practical only for small graphs, used to cross-check the
//! streaming implementations.

#![allow(dead_code)]

use pathcover::{Digraph, Path};
use rand::Rng;
use std::collections::HashSet;

/// Lowers a library path to its raw vertex indices.
pub fn raw(p: &Path) -> Vec<u32> {
    p.vertices().iter().map(|v| v.index() as u32).collect()
}

/// Lowers a whole stream of paths.
pub fn raw_all(paths: impl IntoIterator<Item = Path>) -> Vec<Vec<u32>> {
    paths.into_iter().map(|p| raw(&p)).collect()
}

/// Successor lists as plain vectors, indexed by vertex.
fn adjacency(g: &Digraph) -> Vec<Vec<u32>> {
    g.vertices()
        .map(|v| g.successors(v).map(|w| w.index() as u32).collect())
        .collect()
}

/// Predecessor lists as plain vectors, indexed by vertex.
fn reverse_adjacency(g: &Digraph) -> Vec<Vec<u32>> {
    g.vertices()
        .map(|v| g.predecessors(v).map(|w| w.index() as u32).collect())
        .collect()
}

// Fixtures.

/// A loop between two branchless runs: s -> a -> b -> t with b -> a back.
pub fn g_loop() -> Digraph {
    Digraph::from_edges(4, [(0, 1), (1, 2), (2, 1), (2, 3)]).unwrap()
}

/// Two overlapping 2-cycles in a row: 0 <-> 1 <-> 2.
pub fn g_pp2() -> Digraph {
    Digraph::from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap()
}

/// A detour cycle on the way to the exit: 0 -> 1 -> 2 -> 3 -> 4 with 3 -> 1.
pub fn g_trap() -> Digraph {
    Digraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]).unwrap()
}

/// The 15-vertex worked example: several nested strongly connected
/// regions between an entry (0) and an exit (14).
pub fn g_ex() -> Digraph {
    Digraph::from_edges(
        15,
        [
            (0, 1),
            (0, 4),
            (2, 11),
            (11, 3),
            (3, 2),
            (3, 10),
            (10, 14),
            (1, 11),
            (11, 6),
            (13, 7),
            (7, 13),
            (7, 14),
            (9, 13),
            (8, 7),
            (4, 5),
            (9, 6),
            (5, 9),
            (6, 5),
            (6, 12),
            (12, 6),
            (8, 12),
            (12, 8),
        ],
    )
    .unwrap()
}

/// A chain of `n` diamonds. Each diamond forks and rejoins, so the graph
/// has 3n + 1 vertices and exactly 2^n maximal end-to-end paths.
pub fn diamond(n: usize) -> Digraph {
    let mut edges = Vec::with_capacity(4 * n);
    for i in 0..n as u32 {
        let base = 3 * i;
        edges.push((base, base + 1));
        edges.push((base, base + 2));
        edges.push((base + 1, base + 3));
        edges.push((base + 2, base + 3));
    }
    Digraph::from_edges(3 * n + 1, edges).unwrap()
}

/// The complete digraph on `n` vertices, no self loops.
pub fn complete(n: usize) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for w in 0..n as u32 {
            if u != w {
                edges.push((u, w));
            }
        }
    }
    Digraph::from_edges(n, edges).unwrap()
}

// Brute-force oracles.

fn extend_simple(succ: &[Vec<u32>], path: &mut Vec<u32>, on: &mut [bool], out: &mut Vec<Vec<u32>>) {
    out.push(path.clone());
    let last = *path.last().unwrap();
    for &w in &succ[last as usize] {
        if !on[w as usize] {
            on[w as usize] = true;
            path.push(w);
            extend_simple(succ, path, on, out);
            path.pop();
            on[w as usize] = false;
        }
    }
}

/// Every simple path of `g`, single vertices included.
pub fn brute_simple_paths(g: &Digraph) -> Vec<Vec<u32>> {
    let succ = adjacency(g);
    let n = g.vertex_count();
    let mut out = Vec::new();
    for s in 0..n as u32 {
        let mut on = vec![false; n];
        on[s as usize] = true;
        extend_simple(&succ, &mut vec![s], &mut on, &mut out);
    }
    out.sort();
    out
}

fn extend_cycles(
    succ: &[Vec<u32>],
    start: u32,
    path: &mut Vec<u32>,
    on: &mut [bool],
    out: &mut Vec<Vec<u32>>,
) {
    let last = *path.last().unwrap();
    for &w in &succ[last as usize] {
        if w == start {
            let mut cycle = path.clone();
            cycle.push(w);
            out.push(cycle);
        } else if !on[w as usize] {
            on[w as usize] = true;
            path.push(w);
            extend_cycles(succ, start, path, on, out);
            path.pop();
            on[w as usize] = false;
        }
    }
}

/// Every simple cycle of `g` in closed form, every rotation separately.
pub fn brute_simple_cycles(g: &Digraph) -> Vec<Vec<u32>> {
    let succ = adjacency(g);
    let n = g.vertex_count();
    let mut out = Vec::new();
    for s in 0..n as u32 {
        let mut on = vec![false; n];
        on[s as usize] = true;
        extend_cycles(&succ, s, &mut vec![s], &mut on, &mut out);
    }
    out.sort();
    out
}

/// One representative per cyclic class: the rotation starting (and ending)
/// at the smallest vertex of the cycle.
pub fn brute_canonical_cycles(g: &Digraph) -> Vec<Vec<u32>> {
    brute_simple_cycles(g)
        .into_iter()
        .filter(|c| c[0] == *c.iter().min().unwrap())
        .collect()
}

/// Non-extendability test straight from the definition: every way into the
/// head and out of the last vertex stays inside the path without closing
/// it into a cycle.
pub fn brute_is_non_extendable(g: &Digraph, p: &[u32]) -> bool {
    let pred = reverse_adjacency(g);
    let succ = adjacency(g);
    let members: HashSet<u32> = p.iter().copied().collect();
    let head = p[0];
    let last = *p.last().unwrap();
    pred[head as usize]
        .iter()
        .all(|&u| members.contains(&u) && u != last)
        && succ[last as usize]
            .iter()
            .all(|&w| members.contains(&w) && w != head)
}

/// Every non-extendable simple path of `g`.
pub fn brute_nesp(g: &Digraph) -> Vec<Vec<u32>> {
    brute_simple_paths(g)
        .into_iter()
        .filter(|p| brute_is_non_extendable(g, p))
        .collect()
}

/// Every prime path of `g`: all simple cycle rotations plus all
/// non-extendable simple paths.
pub fn brute_prime_paths(g: &Digraph) -> Vec<Vec<u32>> {
    let mut out = brute_simple_cycles(g);
    out.extend(brute_nesp(g));
    out.sort();
    out
}

fn extend_eacyclic(
    succ: &[Vec<u32>],
    path: &mut Vec<u32>,
    used: &mut HashSet<(u32, u32)>,
    cap: usize,
    out: &mut Vec<Vec<u32>>,
) -> bool {
    let last = *path.last().unwrap();
    for &w in &succ[last as usize] {
        if used.insert((last, w)) {
            path.push(w);
            out.push(path.clone());
            let within_cap = out.len() < cap && extend_eacyclic(succ, path, used, cap, out);
            path.pop();
            used.remove(&(last, w));
            if !within_cap {
                return false;
            }
        }
    }
    true
}

/// Every path of `g` with at least one edge and no repeated edge, up to
/// `cap` items. Returns `None` when the cap was hit, because a truncated
/// item set would make equality checks meaningless.
pub fn brute_eacyclic_paths(g: &Digraph, cap: usize) -> Option<Vec<Vec<u32>>> {
    let succ = adjacency(g);
    let mut out = Vec::new();
    for s in 0..g.vertex_count() as u32 {
        let mut used = HashSet::new();
        if !extend_eacyclic(&succ, &mut vec![s], &mut used, cap, &mut out) {
            return None;
        }
    }
    out.sort();
    Some(out)
}

/// The edge paths spelled by all simple paths of the line graph of `g`,
/// built from scratch here so it checks the library rather than reusing it.
pub fn brute_line_reduced_simple_paths(g: &Digraph) -> Vec<Vec<u32>> {
    let edges: Vec<(u32, u32)> = g
        .edges()
        .map(|(u, v)| (u.index() as u32, v.index() as u32))
        .collect();
    let mut line_succ = vec![Vec::new(); edges.len()];
    for (i, &(_, mid)) in edges.iter().enumerate() {
        for (j, &(from, _)) in edges.iter().enumerate() {
            if from == mid {
                line_succ[i].push(j as u32);
            }
        }
    }
    let n = edges.len();
    let mut line_paths = Vec::new();
    for s in 0..n as u32 {
        let mut on = vec![false; n];
        on[s as usize] = true;
        extend_simple(&line_succ, &mut vec![s], &mut on, &mut line_paths);
    }
    let mut out: Vec<Vec<u32>> = line_paths
        .into_iter()
        .map(|lp| {
            let mut walk = vec![edges[lp[0] as usize].0];
            for li in lp {
                walk.push(edges[li as usize].1);
            }
            walk
        })
        .collect();
    out.sort();
    out
}

/// Reports which of `items` are not covered by any path in `suite`,
/// using an index over first edge pairs so large suites stay affordable.
pub fn uncovered_items(items: &[Vec<u32>], suite: &[Vec<u32>]) -> Vec<usize> {
    let mut pair_occurrences: std::collections::HashMap<(u32, u32), Vec<(usize, usize)>> =
        std::collections::HashMap::new();
    for (qi, q) in suite.iter().enumerate() {
        for (pos, pair) in q.windows(2).enumerate() {
            pair_occurrences
                .entry((pair[0], pair[1]))
                .or_default()
                .push((qi, pos));
        }
    }
    let covered = |p: &Vec<u32>| -> bool {
        if p.len() == 1 {
            return suite.iter().any(|q| q.contains(&p[0]));
        }
        let Some(occurrences) = pair_occurrences.get(&(p[0], p[1])) else {
            return false;
        };
        occurrences.iter().any(|&(qi, pos)| {
            let q = &suite[qi];
            pos + p.len() <= q.len() && q[pos..pos + p.len()] == p[..]
        })
    };
    items
        .iter()
        .enumerate()
        .filter_map(|(i, p)| (!covered(p)).then_some(i))
        .collect()
}

// Random graph generators.

/// A digraph with up to `max_v` vertices where every ordered pair, self
/// loops included, is an edge with probability `edge_prob`.
pub fn random_digraph(rng: &mut impl Rng, max_v: usize, edge_prob: f64) -> Digraph {
    let n = rng.random_range(2..=max_v);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for w in 0..n as u32 {
            if rng.random_bool(edge_prob) {
                edges.push((u, w));
            }
        }
    }
    Digraph::from_edges(n, edges).unwrap()
}

/// A random single-entry single-exit graph with `n` vertices total.
///
/// Vertex 0 is the entry and n-1 the exit. A shuffled spine through all
/// inner vertices guarantees the single-entry single-exit shape, and extra
/// random edges (avoiding edges into the entry or out of the exit) add
/// branching and cycles.
pub fn random_sese(rng: &mut impl Rng, n: usize, extra_prob: f64) -> Digraph {
    assert!(n >= 3);
    let exit = n as u32 - 1;
    let mut inner: Vec<u32> = (1..exit).collect();
    // Fisher-Yates shuffle.
    for i in (1..inner.len()).rev() {
        inner.swap(i, rng.random_range(0..=i));
    }
    let mut edges: HashSet<(u32, u32)> = HashSet::new();
    let mut prev = 0u32;
    for &v in &inner {
        edges.insert((prev, v));
        prev = v;
    }
    edges.insert((prev, exit));
    for u in 0..exit {
        for w in 1..=exit {
            if rng.random_bool(extra_prob) {
                edges.insert((u, w));
            }
        }
    }
    let g = Digraph::from_edges(n, edges).unwrap();
    pathcover::validate_sese(
        &g,
        pathcover::VertexId::new(0),
        pathcover::VertexId::new(exit),
    )
    .expect("construction keeps the graph single-entry single-exit");
    g
}

/// A width-3 layered graph of `depth` layers with dense forward edges and
/// occasional back edges, shaped so that all-at-once enumeration has a
/// large frontier while the item count stays finite.
pub fn layered_bench_graph(rng: &mut impl Rng, depth: usize) -> Digraph {
    let width = 3u32;
    let mut edges = HashSet::new();
    for layer in 0..depth as u32 - 1 {
        let base = layer * width;
        for a in 0..width {
            let mut any = false;
            for b in 0..width {
                if rng.random_bool(0.8) {
                    edges.insert((base + a, base + width + b));
                    any = true;
                }
            }
            if !any {
                edges.insert((base + a, base + width + rng.random_range(0..width)));
            }
        }
        if rng.random_bool(0.15) {
            edges.insert((
                base + width + rng.random_range(0..width),
                base + rng.random_range(0..width),
            ));
        }
    }
    Digraph::from_edges(depth * width as usize, edges).unwrap()
}

/// A single-entry single-exit layered DAG: entry feeds the first layer,
/// each layer feeds the next through random forward edges (in- and
/// out-degrees patched to stay >= 1), and the last layer feeds the exit.
/// Prime paths of such a graph are exactly its entry-to-exit paths, so
/// the item count grows with branching but always stays finite.
pub fn random_layered_dag(rng: &mut impl Rng, depth: usize) -> Digraph {
    let widths: Vec<u32> = (0..depth).map(|_| rng.random_range(2..=3)).collect();
    let mut starts = Vec::with_capacity(depth);
    let mut next = 1u32; // 0 is the entry
    for &w in &widths {
        starts.push(next);
        next += w;
    }
    let exit = next;
    let n = (exit + 1) as usize;
    let mut edges: HashSet<(u32, u32)> = HashSet::new();

    for v in 0..widths[0] {
        edges.insert((0, starts[0] + v));
    }
    for layer in 0..depth - 1 {
        let (from, fw) = (starts[layer], widths[layer]);
        let (to, tw) = (starts[layer + 1], widths[layer + 1]);
        for a in 0..fw {
            let mut any = false;
            for b in 0..tw {
                if rng.random_bool(0.6) {
                    edges.insert((from + a, to + b));
                    any = true;
                }
            }
            if !any {
                edges.insert((from + a, to + rng.random_range(0..tw)));
            }
        }
        for b in 0..tw {
            if !(0..fw).any(|a| edges.contains(&(from + a, to + b))) {
                edges.insert((from + rng.random_range(0..fw), to + b));
            }
        }
    }
    for v in 0..widths[depth - 1] {
        edges.insert((starts[depth - 1] + v, exit));
    }

    let g = Digraph::from_edges(n, edges).unwrap();
    debug_assert!(pathcover::validate_sese(
        &g,
        pathcover::VertexId::new(0),
        pathcover::VertexId::new(exit)
    )
    .is_ok());
    g
}
