//! Integration tests for the enumeration layer against brute-force oracles
//! and hand-frozen fixture values.

mod support;

use pathcover::enumerate::{
    baseline_prime_paths, non_extendable_simple_paths, prime_paths, simple_cycles,
};
use pathcover::scc::scc_partition;
use pathcover::{Path, VertexId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use support::*;

fn sorted(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    v.sort();
    v
}

#[test]
fn worked_example_matches_frozen_counts() {
    let g = g_ex();
    let cycles = raw_all(simple_cycles(&g));
    let paths = raw_all(non_extendable_simple_paths(&g));
    let prime = raw_all(prime_paths(&g));
    assert_eq!(cycles.len(), 5);
    assert_eq!(paths.len(), 13);
    assert_eq!(prime.len(), 25);
    assert_eq!(sorted(prime), brute_prime_paths(&g));
    assert_eq!(sorted(cycles), brute_canonical_cycles(&g));
    assert_eq!(sorted(paths), brute_nesp(&g));
}

#[test]
fn worked_example_spot_facts() {
    let g = g_ex();
    let part = scc_partition(&g);

    let classes: Vec<Vec<u32>> = part
        .classes()
        .iter()
        .map(|c| c.iter().map(|v| v.index() as u32).collect())
        .collect();
    assert_eq!(
        classes,
        vec![
            vec![0],
            vec![1],
            vec![2, 3, 11],
            vec![4],
            vec![5, 6, 8, 9, 12],
            vec![7, 13],
            vec![10],
            vec![14],
        ]
    );

    let shortest = g
        .shortest_path(VertexId::new(0), VertexId::new(14))
        .unwrap();
    assert_eq!(raw(&shortest), [0, 1, 11, 3, 10, 14]);

    let prime: BTreeSet<Vec<u32>> = raw_all(prime_paths(&g)).into_iter().collect();
    assert!(prime.contains(&vec![2, 11, 3, 10, 14]));
    // A path that merely chains through a class without being maximal is
    // not prime: 9 -> 6 -> 5 closes back through the edge (5, 9).
    assert!(!prime.contains(&vec![9, 6, 5]));
    let p = Path::new(
        &g,
        vec![VertexId::new(9), VertexId::new(6), VertexId::new(5)],
    )
    .unwrap();
    assert!(!pathcover::verify::is_prime_path(&g, &part, &p));
}

#[test]
fn diamond_chains_double_per_diamond() {
    for n in 1..=8 {
        let g = diamond(n);
        assert_eq!(g.vertex_count(), 3 * n + 1);
        assert_eq!(prime_paths(&g).count(), 1 << n, "diamond({n})");
    }
}

#[test]
fn streams_are_deterministic() {
    let g = g_ex();
    assert_eq!(raw_all(prime_paths(&g)), raw_all(prime_paths(&g)));
    assert_eq!(raw_all(simple_cycles(&g)), raw_all(simple_cycles(&g)));
    assert_eq!(
        raw_all(non_extendable_simple_paths(&g)),
        raw_all(non_extendable_simple_paths(&g))
    );
}

#[test]
fn streams_never_repeat_an_item() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let g = random_digraph(&mut rng, 8, 0.3);
        let emitted = raw_all(prime_paths(&g));
        let distinct: BTreeSet<&Vec<u32>> = emitted.iter().collect();
        assert_eq!(distinct.len(), emitted.len());
    }
}

#[test]
fn cycle_stream_emits_one_canonical_rotation_per_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let g = random_digraph(&mut rng, 8, 0.3);
        let cycles = raw_all(simple_cycles(&g));
        for c in &cycles {
            assert_eq!(c.first(), c.last());
            assert_eq!(c[0], *c.iter().min().unwrap(), "canonical start {c:?}");
        }
        assert_eq!(sorted(cycles), brute_canonical_cycles(&g));
    }
}

#[test]
fn path_stream_matches_the_definitional_filter() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let g = random_digraph(&mut rng, 8, 0.3);
        let paths = raw_all(non_extendable_simple_paths(&g));
        for p in &paths {
            assert!(brute_is_non_extendable(&g, p), "{p:?}");
        }
        assert_eq!(sorted(paths), brute_nesp(&g));
    }
}

#[test]
fn baseline_agrees_with_brute_force_on_fixtures() {
    for g in [g_loop(), g_pp2(), g_trap(), g_ex(), diamond(3)] {
        assert_eq!(sorted(raw_all(baseline_prime_paths(&g))), brute_prime_paths(&g));
    }
}

#[test]
fn baseline_agrees_with_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBA5E_11_4E);
    for round in 0..60 {
        let g = random_digraph(&mut rng, 8, 0.1 + 0.05 * (round % 8) as f64);
        assert_eq!(
            sorted(raw_all(baseline_prime_paths(&g))),
            brute_prime_paths(&g),
            "graph with {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        );
    }
}

#[test]
fn edge_distinct_paths_equal_reduced_line_graph_paths_on_fixtures() {
    for g in [g_loop(), g_pp2(), g_trap(), g_ex()] {
        let direct = brute_eacyclic_paths(&g, 1_000_000).unwrap();
        assert_eq!(direct, brute_line_reduced_simple_paths(&g));
    }
}

#[test]
fn loop_fixture_frozen_values() {
    let g = g_loop();
    assert_eq!(
        raw_all(prime_paths(&g)),
        vec![vec![1, 2, 1], vec![2, 1, 2], vec![0, 1, 2, 3]]
    );
    assert_eq!(brute_eacyclic_paths(&g, 1_000).unwrap().len(), 11);
}

#[test]
fn overlapping_cycles_fixture_frozen_values() {
    let g = g_pp2();
    assert_eq!(
        raw_all(prime_paths(&g)),
        vec![
            vec![0, 1, 0],
            vec![1, 0, 1],
            vec![1, 2, 1],
            vec![2, 1, 2],
            vec![0, 1, 2],
            vec![2, 1, 0],
        ]
    );
}
