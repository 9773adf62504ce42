//! Exact branch-and-bound search for the cell formation problem.
//!
//! Branching interleaves machines and parts: the root pins machine 1 to
//! cell 1, then the lowest-index unassigned part, machine, part, ... is
//! assigned to one of the open cells or to a new one. New cells take the
//! next free label, so every partition (up to relabeling) appears exactly
//! once in the tree. Children that cannot lead to a feasible completion
//! (more machine-less cells than machines left, or the part analogue) are
//! never generated.
//!
//! At every node the children's upper bounds are computed, children whose
//! bound cannot beat the incumbent are pruned, and the survivors are visited
//! in bound-descending order (ties: lower cell label first). All comparisons
//! are exact rationals, so results are bit-for-bit deterministic.

mod branch;
mod solve;

pub use branch::{generate_children, next_branch_entity, BranchEntity};
pub use solve::{enumerate_feasible_partitions, solve, SearchConfig, SolveResult};
