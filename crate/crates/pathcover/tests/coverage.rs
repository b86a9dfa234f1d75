//! Integration tests for the coverage strategies: completeness against
//! brute-force item oracles, structural validity of every emitted test
//! case, and the memory behaviour of the streaming accumulator.

mod support;

use std::time::Instant;

use pathcover::cover::{
    e_acyclic_path_coverage, prime_path_coverage, simple_cycle_coverage, simple_path_coverage,
    CoverageConfig, TestCase,
};
use pathcover::enumerate::RetainedState;
use pathcover::{Digraph, SeseGraph, VertexId};
use rand::rngs::StdRng;
use rand::SeedableRng;
use support::*;

fn sese(g: Digraph, entry: u32, exit: u32) -> SeseGraph {
    SeseGraph::try_new(g, VertexId::new(entry), VertexId::new(exit)).expect("fixture must have valid entry/exit roles")
}

/// Overlapping two-cycles a<->b and b<->c wrapped in entry/exit vertices.
fn g_pp2_sese() -> SeseGraph {
    let g = Digraph::from_edges(5, [(0, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 4)])
        .expect("valid fixture");
    sese(g, 0, 4)
}

fn config(k: usize, double_cycle: bool) -> CoverageConfig {
    CoverageConfig::new(k, double_cycle).expect("k >= 1")
}

/// Asserts a test case is structurally valid: an entry-to-exit path whose
/// consecutive vertices are edges, with an item budget in `1..=k`.
fn assert_case_shape(g: &SeseGraph, case: &TestCase, k: usize) {
    let verts = case.path.vertices();
    assert!(verts.len() >= 2, "a test case visits entry and exit");
    assert_eq!(verts[0], g.entry(), "case must start at the entry");
    assert_eq!(*verts.last().unwrap(), g.exit(), "case must end at the exit");
    for w in verts.windows(2) {
        assert!(
            g.graph().successors(w[0]).any(|s| s == w[1]),
            "case step {}->{} is not an edge",
            w[0],
            w[1]
        );
    }
    assert!(case.items_covered >= 1, "a case covers at least one item");
    assert!(
        case.items_covered <= k,
        "a case covers at most k={} items, got {}",
        k,
        case.items_covered
    );
}

fn suite_paths(cases: &[TestCase]) -> Vec<Vec<u32>> {
    cases.iter().map(|c| raw(&c.path)).collect()
}

/// Runs one strategy, checks every case's shape, and asserts the suite
/// covers every item in `items`.
fn assert_complete(
    g: &SeseGraph,
    k: usize,
    items: &[Vec<u32>],
    cases: Vec<TestCase>,
    label: &str,
) {
    for case in &cases {
        assert_case_shape(g, case, k);
    }
    let suite = suite_paths(&cases);
    let missing = uncovered_items(items, &suite);
    assert!(
        missing.is_empty(),
        "{label}: {} of {} items uncovered (first: {:?})",
        missing.len(),
        items.len(),
        missing.first().map(|&i| &items[i])
    );
}

fn check_all_strategies(g: &SeseGraph, k: usize, eacyclic_cap: usize) {
    let canonical = brute_canonical_cycles(g.graph());
    let all_rotations = brute_simple_cycles(g.graph());
    let nesp = brute_nesp(g.graph());
    let prime = brute_prime_paths(g.graph());

    assert_complete(
        g,
        k,
        &canonical,
        simple_cycle_coverage(g, config(k, false)).collect(),
        "simple-cycle",
    );
    assert_complete(
        g,
        k,
        &all_rotations,
        simple_cycle_coverage(g, config(k, true)).collect(),
        "simple-cycle doubled",
    );
    assert_complete(
        g,
        k,
        &nesp,
        simple_path_coverage(g, config(k, false)).collect(),
        "simple-path",
    );
    assert_complete(
        g,
        k,
        &prime,
        prime_path_coverage(g, config(k, false)).collect(),
        "prime-path",
    );
    if let Some(eap) = brute_eacyclic_paths(g.graph(), eacyclic_cap) {
        assert_complete(
            g,
            k,
            &eap,
            e_acyclic_path_coverage(g, config(k, false)).collect(),
            "e-acyclic-path",
        );
    } else {
        panic!("e-acyclic oracle cap too low for this fixture");
    }
}

#[test]
fn every_fixture_item_is_covered_under_each_strategy() {
    for k in [1, 2, 5] {
        check_all_strategies(&sese(g_loop(), 0, 3), k, 10_000);
        check_all_strategies(&sese(g_trap(), 0, 4), k, 10_000);
        check_all_strategies(&g_pp2_sese(), k, 10_000);
    }
}

#[test]
fn worked_example_prime_suite_is_complete() {
    let g = sese(g_ex(), 0, 14);
    for k in [1, 3] {
        let prime = brute_prime_paths(g.graph());
        assert_complete(
            &g,
            k,
            &prime,
            prime_path_coverage(&g, config(k, false)).collect(),
            "prime-path worked example",
        );
    }
}

#[test]
fn random_sese_suites_cover_every_item() {
    let mut rng = StdRng::seed_from_u64(0x5E5E_C0DE);
    let mut accepted = 0;
    while accepted < 25 {
        let n = 4 + (accepted % 5);
        let g = random_sese(&mut rng, n, 0.25);
        // Keep the brute-force e-acyclic oracle tractable.
        if brute_eacyclic_paths(&g, 20_000).is_none() {
            continue;
        }
        let g = sese(g, 0, (n - 1) as u32);
        for k in [1, 2, 5] {
            check_all_strategies(&g, k, 20_000);
        }
        accepted += 1;
    }
}

#[test]
fn doubled_cycle_cases_cover_every_rotation() {
    let mut rng = StdRng::seed_from_u64(0xD0_0B1E);
    for round in 0..30 {
        let n = 4 + (round % 5);
        let g = random_sese(&mut rng, n, 0.3);
        let g = sese(g, 0, (n - 1) as u32);
        let rotations = brute_simple_cycles(g.graph());
        let cases: Vec<TestCase> = simple_cycle_coverage(&g, config(2, true)).collect();
        let suite = suite_paths(&cases);
        let missing = uncovered_items(&rotations, &suite);
        assert!(
            missing.is_empty(),
            "doubling left rotation {:?} uncovered",
            missing.first().map(|&i| &rotations[i])
        );
    }
}

#[test]
fn first_cases_arrive_lazily_on_a_huge_graph() {
    // diamond(25) has 2^25 prime paths; materializing them is hopeless,
    // yet the first cases must arrive immediately with bounded retention.
    let n = 25;
    let g = sese(diamond(n), 0, (3 * n) as u32);
    let bound = g.graph().vertex_count() + 2;
    let start = Instant::now();
    let mut stream = prime_path_coverage(&g, config(5, false));
    for _ in 0..100 {
        let case = stream.next().expect("diamond(25) yields many cases");
        assert_case_shape(&g, &case, 5);
        assert!(
            stream.retained_paths() <= bound,
            "retained {} paths, bound {}",
            stream.retained_paths(),
            bound
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 2.0,
        "first 100 cases took {:?}",
        elapsed
    );
}

#[test]
fn retention_stays_bounded_while_draining_full_suites() {
    let g = sese(g_ex(), 0, 14);
    let bound = g.graph().vertex_count() + 2;
    let mut stream = prime_path_coverage(&g, config(2, false));
    let mut cases = 0;
    while let Some(case) = stream.next() {
        assert_case_shape(&g, &case, 2);
        assert!(stream.retained_paths() <= bound);
        cases += 1;
    }
    assert!(cases > 0, "the worked example yields at least one case");

    let mut stream = e_acyclic_path_coverage(&g, config(3, false));
    while let Some(case) = stream.next() {
        assert_case_shape(&g, &case, 3);
        assert!(stream.retained_paths() <= bound + 2);
    }
}

#[test]
fn larger_budgets_never_need_more_cases() {
    let mut rng = StdRng::seed_from_u64(0xBAD6E7);
    for round in 0..20 {
        let n = 4 + (round % 5);
        let g = random_sese(&mut rng, n, 0.3);
        let g = sese(g, 0, (n - 1) as u32);
        let count = |k: usize| prime_path_coverage(&g, config(k, false)).count();
        let (one, two, five) = (count(1), count(2), count(5));
        assert!(two <= one, "k=2 used {} cases, k=1 used {}", two, one);
        assert!(five <= two, "k=5 used {} cases, k=2 used {}", five, two);
    }
}

#[test]
fn items_covered_totals_match_the_item_streams() {
    // Across a full drain the per-case budgets must add up to exactly the
    // number of items each phase's stream yields.
    let g = sese(g_loop(), 0, 3);
    let canonical = brute_canonical_cycles(g.graph()).len();
    let nesp = brute_nesp(g.graph()).len();

    let total: usize = prime_path_coverage(&g, config(1, false))
        .map(|c| c.items_covered)
        .sum();
    assert_eq!(total, canonical + nesp);

    let total: usize = simple_path_coverage(&g, config(4, false))
        .map(|c| c.items_covered)
        .sum();
    assert_eq!(total, nesp);
}
