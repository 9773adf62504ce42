//! Independent brute-force references for validating the solver and the
//! bound at small scale, plus a reproducible random instance generator.
//!
//! Nothing in here shares branching code with `cfp-search`; agreement
//! between the two is the main correctness evidence for the solver.

mod brute;
mod generate;
mod relaxed;

pub use brute::{best_completion, brute_force_solve, canonical_feasible_partitions, OracleError};
pub use generate::random_instance;
pub use relaxed::brute_force_relaxed;
