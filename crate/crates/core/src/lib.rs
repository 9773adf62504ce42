//! Domain model for the cell formation problem (CFP).
//!
//! The CFP takes a 0/1 machine-part incidence matrix and partitions machines
//! (rows) and parts (columns) into cells so that the grouping efficacy
//! `n1_in / (n1 + n0_in)` is maximized, where `n1` is the total number of
//! ones, `n1_in` the ones inside cells and `n0_in` the zeros inside cells.
//! Every cell must contain at least one machine and at least one part.
//!
//! This crate holds the pieces every other crate builds on: the immutable
//! [`Instance`], the mutable [`Assignment`] search state, exact [`Rational`]
//! arithmetic for all efficacy values, and the counting primitives that
//! classify matrix entries as inside cells, permanently excluded, or still
//! open.

pub mod assignment;
pub mod counts;
pub mod instance;
pub mod rational;

pub use assignment::{Assignment, AssignmentError};
pub use counts::{count_excluded, count_inside, efficacy, verify_feasible, NodeCounts};
pub use instance::{load_instance, Instance, ParseError};
pub use rational::{Rational, SignedRatio};
