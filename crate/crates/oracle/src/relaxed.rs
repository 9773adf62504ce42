//! Exact optimum of the independent-assignment relaxation, by enumerating
//! the full Cartesian product of per-entity alternatives.

use cfp_bound::{machine_alternatives, part_alternatives, Alternative};
use cfp_core::{Assignment, Instance, NodeCounts, Rational};

use crate::brute::OracleError;

const PRODUCT_LIMIT: u128 = 1_000_000;

/// Maximum of `(n1_in + sum a) / (n1 + n0_in + sum b)` over every combination
/// of placement alternatives for the remaining entities. The upper bound
/// must dominate this value on every node.
pub fn brute_force_relaxed(
    instance: &Instance,
    assignment: &Assignment,
) -> Result<Rational, OracleError> {
    let mut lists: Vec<Vec<Alternative>> = Vec::new();
    for i in 0..instance.machines() {
        if assignment.machine_label(i) == 0 {
            lists.push(machine_alternatives(instance, assignment, i));
        }
    }
    for j in 0..instance.parts() {
        if assignment.part_label(j) == 0 {
            lists.push(part_alternatives(instance, assignment, j));
        }
    }
    let product: u128 = lists.iter().map(|l| l.len() as u128).product();
    if product > PRODUCT_LIMIT {
        return Err(OracleError::SearchSpaceTooLarge {
            estimate: product,
            limit: PRODUCT_LIMIT,
        });
    }
    let counts = NodeCounts::recount(instance, assignment);
    let base_num = counts.inside_ones;
    let base_den = instance.n1() + counts.inside_zeros;
    let mut best = Rational::new(base_num as u64, base_den as u64);
    enumerate(&lists, 0, base_num, base_den, &mut best);
    Ok(best)
}

fn enumerate(lists: &[Vec<Alternative>], idx: usize, num: usize, den: usize, best: &mut Rational) {
    if idx == lists.len() {
        let value = Rational::new(num as u64, den as u64);
        if value > *best {
            *best = value;
        }
        return;
    }
    for alt in &lists[idx] {
        enumerate(lists, idx + 1, num + alt.ones, den + alt.zeros, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cfp_bound::upper_bound;

    fn table3() -> Instance {
        Instance::from_rows(vec![
            vec![1, 1, 1, 1, 1, 0, 0, 0, 0],
            vec![1, 1, 1, 1, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 1, 1, 0, 0],
            vec![0, 1, 1, 0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1, 1, 0, 0, 1],
        ])
        .unwrap()
    }

    fn table3_partial() -> Assignment {
        Assignment::from_labels(vec![1, 1, 2, 0, 0], vec![1, 1, 1, 1, 1, 2, 2, 0, 0]).unwrap()
    }

    #[test]
    fn worked_relaxed_optimum() {
        let inst = table3();
        let asg = table3_partial();
        let relaxed = brute_force_relaxed(&inst, &asg).unwrap();
        assert_eq!(relaxed, Rational::new(16, 22));
        // Relaxation dominance on this node.
        assert!(upper_bound(&inst, &asg) >= relaxed);
    }

    #[test]
    fn complete_assignment_yields_node_efficacy() {
        let inst = Instance::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let asg = Assignment::from_labels(vec![1, 2], vec![1, 2]).unwrap();
        assert_eq!(brute_force_relaxed(&inst, &asg).unwrap(), Rational::ONE);
    }

    #[test]
    fn guard_rejects_huge_products() {
        // 20 machines x 30 parts at the root: far beyond the limit.
        let inst = Instance::from_rows(vec![vec![1; 30]; 20]).unwrap();
        let root = Assignment::root(20, 30);
        assert!(matches!(
            brute_force_relaxed(&inst, &root),
            Err(OracleError::SearchSpaceTooLarge { .. })
        ));
    }
}
