mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use star_edge::solver::{
    star_chromatic_index, star_decision, star_decision_parallel, SolveBudget, SolveStatus,
};
use star_edge::verify::verify_star;
use star_edge::{named, Graph};

fn index(g: &Graph) -> usize {
    star_chromatic_index(g, SolveBudget::unlimited())
        .unwrap()
        .value
}

#[test]
fn feasibility_is_monotone_in_k() {
    for seed in 0..40 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(3..=7);
        let g = common::random_graph(&mut rng, n, 0.5);
        let chi = index(&g);
        for k in chi.saturating_sub(2)..=chi + 2 {
            let out = star_decision(&g, k, SolveBudget::unlimited()).unwrap();
            assert_eq!(out.is_feasible(), k >= chi, "seed {seed} k {k}");
            if let Some(c) = out.coloring {
                assert!(verify_star(&g, &c).unwrap().is_pass());
                assert!(c.palette_size() <= k);
            }
        }
    }
}

#[test]
fn edge_subgraphs_need_no_more_colors() {
    for seed in 0..30 {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let g = common::random_graph(&mut rng, 7, 0.5);
        let keep: Vec<bool> = (0..g.m()).map(|_| rng.gen_bool(0.6)).collect();
        let (sub, _) = g.edge_subgraph(|e| keep[e]);
        assert!(index(&sub) <= index(&g), "seed {seed}");
    }
}

#[test]
fn parallel_matches_sequential() {
    for g in [
        named::petersen(),
        named::complete_bipartite(3, 3),
        named::complete(5),
        named::cube(),
    ] {
        for k in 3..=9 {
            let a = star_decision(&g, k, SolveBudget::unlimited()).unwrap();
            let b = star_decision_parallel(&g, k, SolveBudget::unlimited(), 3).unwrap();
            assert_eq!(a.status, b.status, "k={k}");
            if let Some(c) = b.coloring {
                assert!(verify_star(&g, &c).unwrap().is_pass());
            }
        }
    }
}

#[test]
fn complete_graph_values() {
    // K_5 at 8 and K_6 at 11 were also refuted by an independent brute force
    let expected = [(2, 1), (3, 3), (4, 5), (5, 9), (6, 12)];
    for (n, want) in expected {
        assert_eq!(index(&named::complete(n)), want, "K_{n}");
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let out = star_decision(&named::complete(6), 11, SolveBudget::nodes(10)).unwrap();
    assert_eq!(out.status, SolveStatus::ExhaustedBudget);
    assert!(out.coloring.is_none());
    let bracket = star_chromatic_index(&named::complete(6), SolveBudget::nodes(10)).unwrap_err();
    assert!(bracket.lower <= 12 && 12 <= bracket.upper);
    assert!(verify_star(&named::complete(6), &bracket.upper_witness)
        .unwrap()
        .is_pass());
}
