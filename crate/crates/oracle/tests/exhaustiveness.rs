//! The enumerated feasible leaves biject with the canonical feasible
//! partitions, and pruning never changes the optimum.

use std::collections::BTreeSet;

use cfp_oracle::{canonical_feasible_partitions, random_instance};
use cfp_search::{enumerate_feasible_partitions, solve, SearchConfig};

#[test]
fn leaves_biject_with_canonical_partitions() {
    for m in 1..=3usize {
        for p in 1..=4usize {
            // The leaf set depends only on the dimensions, but use a real
            // matrix to exercise the full counting path.
            let inst = if m <= p {
                random_instance(m, p, 0.5, (m * 10 + p) as u64).unwrap()
            } else {
                continue;
            };
            let mut leaves = Vec::new();
            enumerate_feasible_partitions(&inst, |asg| {
                assert!(asg.is_canonical());
                leaves.push((asg.machine_labels().to_vec(), asg.part_labels().to_vec()));
            });
            let leaf_set: BTreeSet<_> = leaves.iter().cloned().collect();
            assert_eq!(leaf_set.len(), leaves.len(), "{m}x{p}: duplicate leaves");
            let expected = canonical_feasible_partitions(m, p);
            assert_eq!(leaf_set, expected, "{m}x{p}: leaf set mismatch");
        }
    }
}

#[test]
fn tall_orientation_also_bijects() {
    // m > p exercises the machines-continue-after-parts path.
    let inst = cfp_core::Instance::from_rows(vec![
        vec![1, 0, 1],
        vec![0, 1, 1],
        vec![1, 1, 0],
        vec![0, 1, 0],
    ])
    .unwrap();
    let mut leaves = BTreeSet::new();
    let mut count = 0usize;
    enumerate_feasible_partitions(&inst, |asg| {
        count += 1;
        leaves.insert((asg.machine_labels().to_vec(), asg.part_labels().to_vec()));
    });
    assert_eq!(leaves.len(), count);
    assert_eq!(leaves, canonical_feasible_partitions(4, 3));
}

#[test]
fn pruning_preserves_the_optimum() {
    for seed in 0..20u64 {
        let m = 2 + (seed % 2) as usize;
        let p = 3 + (seed % 2) as usize;
        let inst = random_instance(m, p, 0.5, 9000 + seed).unwrap();
        let pruned = solve(&inst, &SearchConfig::default());
        let unpruned = solve(
            &inst,
            &SearchConfig {
                pruning: false,
                ..SearchConfig::default()
            },
        );
        assert_eq!(pruned.best_efficacy, unpruned.best_efficacy, "seed {seed}");
    }
}
