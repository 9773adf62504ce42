//! Solver-vs-oracle agreement and transpose invariance on random corpora.

use cfp_core::Instance;
use cfp_oracle::{brute_force_solve, random_instance};
use cfp_search::{solve, SearchConfig};

#[test]
fn solver_matches_brute_force_on_random_instances() {
    let densities = [0.3, 0.5, 0.7];
    for seed in 0..60u64 {
        let m = 2 + (seed % 4) as usize;
        let p = (3 + (seed % 5) as usize).max(m);
        let density = densities[(seed % 3) as usize];
        let inst = random_instance(m, p, density, seed).unwrap();
        let oracle = brute_force_solve(&inst).unwrap();
        let search = solve(&inst, &SearchConfig::default());
        assert_eq!(
            search.best_efficacy, oracle.best_efficacy,
            "seed {seed} ({m}x{p}, density {density})"
        );
        assert!(search.proven_optimal);
    }
}

#[test]
fn worked_5x8_example_agrees() {
    let inst = Instance::from_rows(vec![
        vec![1, 1, 1, 1, 1, 0, 0, 1],
        vec![1, 1, 0, 1, 0, 0, 0, 1],
        vec![0, 0, 1, 0, 1, 1, 1, 0],
        vec![1, 0, 1, 1, 1, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 0, 1, 1],
    ])
    .unwrap();
    let oracle = brute_force_solve(&inst).unwrap();
    let search = solve(&inst, &SearchConfig::default());
    assert_eq!(search.best_efficacy, oracle.best_efficacy);
}

#[test]
fn optimum_is_invariant_under_transposition() {
    for seed in 0..12u64 {
        // Square matrices keep both orientations in-bounds for the oracle.
        let inst = random_instance(4, 4, 0.45, 1000 + seed).unwrap();
        let transposed = Instance::from_rows(
            (0..4)
                .map(|j| (0..4).map(|i| inst.one(i, j) as u8).collect())
                .collect(),
        )
        .unwrap();
        let a = brute_force_solve(&inst).unwrap().best_efficacy;
        let b = brute_force_solve(&transposed).unwrap().best_efficacy;
        assert_eq!(a, b, "seed {seed}");
        let sa = solve(&inst, &SearchConfig::default()).best_efficacy;
        let sb = solve(&transposed, &SearchConfig::default()).best_efficacy;
        assert_eq!(sa, sb, "seed {seed}");
    }

    // A rectangular pair as well: solve both orientations directly.
    let inst = random_instance(3, 5, 0.5, 7).unwrap();
    let transposed = Instance::from_rows(
        (0..5)
            .map(|j| (0..3).map(|i| inst.one(i, j) as u8).collect())
            .collect(),
    )
    .unwrap();
    let a = solve(&inst, &SearchConfig::default()).best_efficacy;
    let b = solve(&transposed, &SearchConfig::default()).best_efficacy;
    assert_eq!(a, b);
}
