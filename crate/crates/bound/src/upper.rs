//! Bound aggregation over all unassigned entities.

use crate::alternatives::{machine_alternatives_into, part_alternatives_into, Alternative};
use crate::compare::{fold_best, ComparisonContext};
use cfp_core::{Assignment, Instance, NodeCounts, Rational};

/// Reusable scratch buffers for bound evaluation on the search hot path.
#[derive(Default)]
pub struct BoundEvaluator {
    per_cell: Vec<(usize, usize)>,
    alternatives: Vec<Alternative>,
    kept: Vec<Alternative>,
}

impl BoundEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Upper bound of the node given its already-known counters.
    pub fn upper_bound(
        &mut self,
        instance: &Instance,
        assignment: &Assignment,
        counts: &NodeCounts,
    ) -> Rational {
        debug_assert_eq!(*counts, NodeCounts::recount(instance, assignment));
        let mut num = counts.inside_ones;
        let mut den = instance.n1() + counts.inside_zeros;
        for i in 0..instance.machines() {
            if assignment.machine_label(i) != 0 {
                continue;
            }
            machine_alternatives_into(
                instance,
                assignment,
                i,
                &mut self.per_cell,
                &mut self.alternatives,
            );
            let ctx = ComparisonContext::for_machine(instance, assignment, counts, i);
            let best = fold_best(&self.alternatives, &ctx, &mut self.kept);
            num += best.ones;
            den += best.zeros;
        }
        for j in 0..instance.parts() {
            if assignment.part_label(j) != 0 {
                continue;
            }
            part_alternatives_into(
                instance,
                assignment,
                j,
                &mut self.per_cell,
                &mut self.alternatives,
            );
            // The per-cell tallies already cover every assigned row, so the
            // part's entity stats are their sums.
            let entity_ones: usize = self.per_cell.iter().map(|c| c.0).sum();
            let entity_zeros: usize = self.per_cell.iter().map(|c| c.1).sum();
            let ctx = ComparisonContext {
                total_ones: instance.n1(),
                total_zeros: instance.n0(),
                inside_ones: counts.inside_ones,
                inside_zeros: counts.inside_zeros,
                excluded_ones: counts.excluded_ones,
                excluded_zeros: counts.excluded_zeros,
                entity_ones,
                entity_zeros,
            };
            debug_assert_eq!(
                ctx,
                ComparisonContext::for_part(instance, assignment, counts, j)
            );
            let best = fold_best(&self.alternatives, &ctx, &mut self.kept);
            num += best.ones;
            den += best.zeros;
        }
        Rational::new(num as u64, den as u64)
    }
}

/// Upper bound on the efficacy of every feasible completion of the node:
/// `(n1_in + sum a*) / (n1 + n0_in + sum b*)` over the per-entity best
/// alternatives. On a complete assignment this is the node's efficacy.
pub fn upper_bound(instance: &Instance, assignment: &Assignment) -> Rational {
    upper_bound_with_counts(
        instance,
        assignment,
        &NodeCounts::recount(instance, assignment),
    )
}

/// Like [`upper_bound`] but reusing counters the caller already maintains.
pub fn upper_bound_with_counts(
    instance: &Instance,
    assignment: &Assignment,
    counts: &NodeCounts,
) -> Rational {
    BoundEvaluator::new().upper_bound(instance, assignment, counts)
}
