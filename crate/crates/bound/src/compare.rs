//! Exact pairwise comparison of placement alternatives and the per-entity
//! fold that picks (or merges into) the alternative used by the bound.

use crate::alternatives::Alternative;
use cfp_core::{Assignment, Instance, NodeCounts, SignedRatio};

/// The scalar bundle the comparison runs against.
///
/// Node-level values come from the current counters; `entity_ones` /
/// `entity_zeros` describe the entity being placed: a machine counts its
/// full row, a part counts its column restricted to assigned rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComparisonContext {
    pub total_ones: usize,
    pub total_zeros: usize,
    pub inside_ones: usize,
    pub inside_zeros: usize,
    pub excluded_ones: usize,
    pub excluded_zeros: usize,
    pub entity_ones: usize,
    pub entity_zeros: usize,
}

impl ComparisonContext {
    pub fn for_machine(
        instance: &Instance,
        _assignment: &Assignment,
        counts: &NodeCounts,
        i: usize,
    ) -> Self {
        let entity_ones = instance.row_ones(i);
        ComparisonContext {
            total_ones: instance.n1(),
            total_zeros: instance.n0(),
            inside_ones: counts.inside_ones,
            inside_zeros: counts.inside_zeros,
            excluded_ones: counts.excluded_ones,
            excluded_zeros: counts.excluded_zeros,
            entity_ones,
            entity_zeros: instance.parts() - entity_ones,
        }
    }

    pub fn for_part(
        instance: &Instance,
        assignment: &Assignment,
        counts: &NodeCounts,
        j: usize,
    ) -> Self {
        let mut entity_ones = 0;
        let mut entity_zeros = 0;
        for i in 0..instance.machines() {
            if assignment.machine_label(i) != 0 {
                if instance.one(i, j) {
                    entity_ones += 1;
                } else {
                    entity_zeros += 1;
                }
            }
        }
        ComparisonContext {
            total_ones: instance.n1(),
            total_zeros: instance.n0(),
            inside_ones: counts.inside_ones,
            inside_zeros: counts.inside_zeros,
            excluded_ones: counts.excluded_ones,
            excluded_zeros: counts.excluded_zeros,
            entity_ones,
            entity_zeros,
        }
    }

    /// Numerator of the node efficacy (`a_c`).
    fn current_ones(&self) -> i128 {
        self.inside_ones as i128
    }

    /// Denominator of the node efficacy (`b_c`), also the smallest total
    /// denominator any completion can have.
    fn denominator_floor(&self) -> i128 {
        (self.total_ones + self.inside_zeros) as i128
    }

    /// Largest total denominator reachable once the permanently excluded
    /// zeros and this entity's own zeros are written off (`b_u`).
    fn denominator_ceiling(&self) -> i128 {
        let b_u = (self.total_ones + self.total_zeros) as i128
            - self.excluded_zeros as i128
            - self.entity_zeros as i128;
        debug_assert!(b_u >= 0);
        b_u
    }

    /// Ones still reachable by entities other than this one.
    fn reachable_ones(&self) -> i128 {
        (self.total_ones - self.excluded_ones - self.entity_ones) as i128
    }
}

/// Outcome of comparing two alternatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// The first alternative is at least as good.
    First,
    /// The second alternative is at least as good.
    Second,
    /// The two alternatives are equivalent.
    Equivalent,
    /// Neither guard decides; the caller falls back to the merge.
    Incomparable,
}

impl Comparison {
    fn swapped(self) -> Comparison {
        match self {
            Comparison::First => Comparison::Second,
            Comparison::Second => Comparison::First,
            other => other,
        }
    }
}

/// Chooses between two alternatives for one entity.
///
/// Operands are normalized so the zero delta is non-negative (swapping and
/// mapping the outcome back when needed). With `da = a2 - a1` and
/// `db = b2 - b1 > 0` the two guards are evaluated in cleared-denominator
/// integer form:
///
/// * keep the first when `db * (a_c + a1) >= da * (b_c + b1)`,
/// * take the second when
///   `b_u * (db * reachable - b_c * da) <= b_c * (b1 * da - a1 * db)`,
///
/// and report [`Comparison::Incomparable`] when neither holds.
pub fn compare_alternatives(
    first: Alternative,
    second: Alternative,
    ctx: &ComparisonContext,
) -> Comparison {
    if second.zeros < first.zeros {
        return compare_alternatives(second, first, ctx).swapped();
    }
    let da = second.ones as i128 - first.ones as i128;
    let db = second.zeros as i128 - first.zeros as i128;
    if db == 0 {
        return match da.cmp(&0) {
            std::cmp::Ordering::Less => Comparison::First,
            std::cmp::Ordering::Greater => Comparison::Second,
            std::cmp::Ordering::Equal => Comparison::Equivalent,
        };
    }
    let a1 = first.ones as i128;
    let b1 = first.zeros as i128;
    let a_c = ctx.current_ones();
    let b_c = ctx.denominator_floor();

    if db * (a_c + a1) >= da * (b_c + b1) {
        return Comparison::First;
    }
    let b_u = ctx.denominator_ceiling();
    if b_u * (db * ctx.reachable_ones() - b_c * da) <= b_c * (b1 * da - a1 * db) {
        return Comparison::Second;
    }
    Comparison::Incomparable
}

/// The three exact fractions the guards compare, for inspection and tests:
/// the pivot `b1*da/db - a1`, the keep-first side `b_l*(l - da/db)` and the
/// take-second side `b_u*(u - da/db)`.
///
/// Operands are normalized like [`compare_alternatives`]; `None` when the
/// zero deltas are equal (the guards are never evaluated then).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GuardValues {
    pub pivot: SignedRatio,
    pub keep_first: SignedRatio,
    pub take_second: SignedRatio,
}

pub fn comparison_intermediates(
    first: Alternative,
    second: Alternative,
    ctx: &ComparisonContext,
) -> Option<GuardValues> {
    if second.zeros < first.zeros {
        return comparison_intermediates(second, first, ctx);
    }
    let da = second.ones as i64 - first.ones as i64;
    let db = second.zeros as i64 - first.zeros as i64;
    if db == 0 {
        return None;
    }
    let a1 = first.ones as i64;
    let b1 = first.zeros as i64;
    let a_c = ctx.current_ones() as i64;
    let b_c = ctx.denominator_floor() as i64;
    let b_u = ctx.denominator_ceiling() as i64;
    let reachable = ctx.reachable_ones() as i64;
    Some(GuardValues {
        pivot: SignedRatio::new(b1 * da - a1 * db, db),
        keep_first: SignedRatio::new(a_c * db - b_c * da, db),
        take_second: SignedRatio::new(b_u * (reachable * db - b_c * da), b_c * db),
    })
}

/// Reduces a list of alternatives for one entity to the single alternative
/// the bound charges for it.
///
/// Strictly dominated entries are discarded first, then the survivors are
/// folded in their given order (cell 1 ... cell k, then new-cell or
/// leave-unassigned): a decided comparison keeps the winner, an undecided
/// one replaces the champion with the merge of the pair. The result
/// dominates every real choice available to the entity.
pub fn best_alternative(alternatives: &[Alternative], ctx: &ComparisonContext) -> Alternative {
    fold_best(alternatives, ctx, &mut Vec::new())
}

pub(crate) fn fold_best(
    alternatives: &[Alternative],
    ctx: &ComparisonContext,
    kept: &mut Vec<Alternative>,
) -> Alternative {
    assert!(!alternatives.is_empty(), "no alternatives to fold");
    kept.clear();
    'outer: for (idx, alt) in alternatives.iter().enumerate() {
        for (other_idx, other) in alternatives.iter().enumerate() {
            if other_idx != idx && other.dominates(alt) {
                continue 'outer;
            }
        }
        kept.push(*alt);
    }
    let mut champion = kept[0];
    for &next in &kept[1..] {
        match compare_alternatives(champion, next, ctx) {
            Comparison::First | Comparison::Equivalent => {}
            Comparison::Second => champion = next,
            Comparison::Incomparable => champion = champion.merged(&next),
        }
    }
    champion
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Context of the 5x9 worked example node for a given entity.
    fn ctx(entity_ones: usize, entity_zeros: usize) -> ComparisonContext {
        ComparisonContext {
            total_ones: 19,
            total_zeros: 26,
            inside_ones: 11,
            inside_zeros: 1,
            excluded_ones: 0,
            excluded_zeros: 9,
            entity_ones,
            entity_zeros,
        }
    }

    fn sr(num: i64, den: i64) -> SignedRatio {
        SignedRatio::new(num, den)
    }

    #[test]
    fn worked_comparison_machine_4() {
        let c = ctx(4, 5);
        let first = Alternative::new(2, 0);
        let second = Alternative::new(4, 3);
        assert_eq!(
            compare_alternatives(first, second, &c),
            Comparison::Incomparable
        );
        let g = comparison_intermediates(first, second, &c).unwrap();
        assert_eq!(g.pivot, sr(-2, 1));
        assert_eq!(g.keep_first, sr(-7, 3));
        assert_eq!(g.take_second, sr(31, 12));
    }

    #[test]
    fn worked_comparison_machine_5() {
        let c = ctx(3, 6);
        let first = Alternative::new(1, 0);
        let second = Alternative::new(2, 1);
        assert_eq!(compare_alternatives(first, second, &c), Comparison::Second);
        let g = comparison_intermediates(first, second, &c).unwrap();
        assert_eq!(g.pivot, sr(-1, 1));
        assert_eq!(g.keep_first, sr(-9, 1));
        assert_eq!(g.take_second, sr(-6, 1));
    }

    #[test]
    fn worked_comparison_part_9() {
        let c = ctx(1, 2);
        let first = Alternative::new(0, 0);
        let second = Alternative::new(1, 1);
        assert_eq!(compare_alternatives(first, second, &c), Comparison::Second);
        let g = comparison_intermediates(first, second, &c).unwrap();
        assert_eq!(g.pivot, sr(0, 1));
        assert_eq!(g.keep_first, sr(-9, 1));
        assert_eq!(g.take_second, sr(-17, 5));
    }

    #[test]
    fn equal_zero_deltas_compare_by_ones() {
        let c = ctx(1, 2);
        let a = Alternative::new(3, 2);
        let b = Alternative::new(1, 2);
        assert_eq!(compare_alternatives(a, b, &c), Comparison::First);
        assert_eq!(compare_alternatives(b, a, &c), Comparison::Second);
        assert_eq!(compare_alternatives(a, a, &c), Comparison::Equivalent);
        assert!(comparison_intermediates(a, b, &c).is_none());
    }

    #[test]
    fn swap_normalization_is_symmetric() {
        let c = ctx(4, 5);
        let lo = Alternative::new(2, 0);
        let hi = Alternative::new(4, 3);
        // Both orientations agree after the internal swap.
        assert_eq!(compare_alternatives(hi, lo, &c), Comparison::Incomparable);
        assert_eq!(
            comparison_intermediates(hi, lo, &c),
            comparison_intermediates(lo, hi, &c)
        );
    }

    #[test]
    fn worked_folds() {
        let inst_alts = |list: &[(usize, usize)]| -> Vec<Alternative> {
            list.iter().map(|&(a, b)| Alternative::new(a, b)).collect()
        };
        // Machine 4: incomparable pair merges to (4, 0).
        assert_eq!(
            best_alternative(&inst_alts(&[(4, 3), (2, 2), (2, 0)]), &ctx(4, 5)),
            Alternative::new(4, 0)
        );
        // Machine 5: the comparison picks (2, 1) outright.
        assert_eq!(
            best_alternative(&inst_alts(&[(2, 4), (2, 1), (1, 0)]), &ctx(3, 6)),
            Alternative::new(2, 1)
        );
        // Part 9: (1, 1) wins against leaving the part unassigned.
        assert_eq!(
            best_alternative(&inst_alts(&[(1, 1), (0, 1), (0, 0)]), &ctx(1, 2)),
            Alternative::new(1, 1)
        );
        // Part 8: all-zero columns stay unassigned.
        assert_eq!(
            best_alternative(&inst_alts(&[(0, 2), (0, 1), (0, 0)]), &ctx(0, 3)),
            Alternative::new(0, 0)
        );
        // Pure domination never reaches the comparison.
        assert_eq!(
            best_alternative(&inst_alts(&[(3, 1), (2, 2)]), &ctx(0, 3)),
            Alternative::new(3, 1)
        );
    }
}
