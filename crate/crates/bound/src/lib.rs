//! Relaxation-based upper bound for the cell formation problem.
//!
//! The bound relaxes the problem at a search node by letting every remaining
//! machine and part pick a cell independently: a machine placed in a cell
//! captures the cell's assigned columns plus every still-unassigned column
//! with a one in its row; a part is scored only against rows that are
//! already assigned. Each placement option is an [`Alternative`] `(a, b)`:
//! the ones and zeros it would add inside cells.
//!
//! Per entity the best alternative is selected by an exact pairwise
//! comparison ([`compare_alternatives`]); when two alternatives cannot be
//! ordered the fold falls back to their merge `(max a, min b)`, which
//! dominates both. Summing the chosen alternatives over all remaining
//! entities yields
//!
//! ```text
//! UB = (n1_in + sum a*) / (n1 + n0_in + sum b*)
//! ```
//!
//! an upper bound on the efficacy of every feasible completion of the node.
//! The denominator keeps the node's inside zeros and every chosen
//! alternative's zeros; dropping any zero term would only loosen the bound.

mod alternatives;
mod compare;
mod upper;

pub use alternatives::{machine_alternatives, part_alternatives, Alternative};
pub use compare::{
    best_alternative, compare_alternatives, comparison_intermediates, Comparison,
    ComparisonContext, GuardValues,
};
pub use upper::{upper_bound, upper_bound_with_counts, BoundEvaluator};
