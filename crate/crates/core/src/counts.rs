//! Entry classification and the grouping-efficacy objective.
//!
//! Relative to a (partial) assignment every matrix entry is in one of three
//! regions: inside a cell (machine and part share a label), permanently
//! excluded (machine and part assigned to different cells), or still open
//! (at least one side unassigned). The three regions partition the matrix.

use crate::assignment::Assignment;
use crate::instance::Instance;
use crate::rational::Rational;

/// Grouping efficacy `n1_in / (n1 + n0_in)` as an exact rational.
pub fn efficacy(inside_ones: usize, total_ones: usize, inside_zeros: usize) -> Rational {
    assert!(total_ones >= 1, "instance must contain at least one 1");
    Rational::new(inside_ones as u64, (total_ones + inside_zeros) as u64)
}

/// Counts entries inside cells, split into (ones, zeros).
pub fn count_inside(instance: &Instance, assignment: &Assignment) -> (usize, usize) {
    debug_assert_eq!(instance.machines(), assignment.machine_count());
    debug_assert_eq!(instance.parts(), assignment.part_count());
    let mut ones = 0;
    let mut zeros = 0;
    for i in 0..instance.machines() {
        let mc = assignment.machine_label(i);
        if mc == 0 {
            continue;
        }
        for j in 0..instance.parts() {
            if assignment.part_label(j) == mc {
                if instance.one(i, j) {
                    ones += 1;
                } else {
                    zeros += 1;
                }
            }
        }
    }
    (ones, zeros)
}

/// Counts entries that can never be inside a cell in any completion: both
/// sides assigned, to different cells. Split into (ones, zeros).
pub fn count_excluded(instance: &Instance, assignment: &Assignment) -> (usize, usize) {
    debug_assert_eq!(instance.machines(), assignment.machine_count());
    debug_assert_eq!(instance.parts(), assignment.part_count());
    let mut ones = 0;
    let mut zeros = 0;
    for i in 0..instance.machines() {
        let mc = assignment.machine_label(i);
        if mc == 0 {
            continue;
        }
        for j in 0..instance.parts() {
            let pc = assignment.part_label(j);
            if pc != 0 && pc != mc {
                if instance.one(i, j) {
                    ones += 1;
                } else {
                    zeros += 1;
                }
            }
        }
    }
    (ones, zeros)
}

/// Checks feasibility of a complete assignment: every cell has at least one
/// machine and at least one part.
///
/// Panics if the assignment is not complete.
pub fn verify_feasible(instance: &Instance, assignment: &Assignment) -> bool {
    assert_eq!(instance.machines(), assignment.machine_count());
    assert_eq!(instance.parts(), assignment.part_count());
    assert!(
        assignment.is_complete(),
        "verify_feasible requires a complete assignment"
    );
    let k = assignment.cells() as usize;
    let mut has_machine = vec![false; k];
    let mut has_part = vec![false; k];
    for &c in assignment.machine_labels() {
        has_machine[c as usize - 1] = true;
    }
    for &c in assignment.part_labels() {
        has_part[c as usize - 1] = true;
    }
    (0..k).all(|c| has_machine[c] && has_part[c])
}

/// The four region counters of a node, maintainable incrementally.
///
/// The `assign_*`/`unassign_*` deltas only read the labels of the *other*
/// entity kind, so they may be applied before or after the assignment itself
/// is recorded in the `Assignment`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NodeCounts {
    pub inside_ones: usize,
    pub inside_zeros: usize,
    pub excluded_ones: usize,
    pub excluded_zeros: usize,
}

impl NodeCounts {
    /// Full recount from scratch; the reference the deltas are checked
    /// against in debug builds.
    pub fn recount(instance: &Instance, assignment: &Assignment) -> Self {
        let (inside_ones, inside_zeros) = count_inside(instance, assignment);
        let (excluded_ones, excluded_zeros) = count_excluded(instance, assignment);
        NodeCounts {
            inside_ones,
            inside_zeros,
            excluded_ones,
            excluded_zeros,
        }
    }

    pub fn efficacy(&self, instance: &Instance) -> Rational {
        efficacy(self.inside_ones, instance.n1(), self.inside_zeros)
    }

    pub fn assign_machine(
        &mut self,
        instance: &Instance,
        assignment: &Assignment,
        i: usize,
        label: u32,
    ) {
        self.machine_delta(instance, assignment, i, label, 1);
    }

    pub fn unassign_machine(
        &mut self,
        instance: &Instance,
        assignment: &Assignment,
        i: usize,
        label: u32,
    ) {
        self.machine_delta(instance, assignment, i, label, -1);
    }

    pub fn assign_part(
        &mut self,
        instance: &Instance,
        assignment: &Assignment,
        j: usize,
        label: u32,
    ) {
        self.part_delta(instance, assignment, j, label, 1);
    }

    pub fn unassign_part(
        &mut self,
        instance: &Instance,
        assignment: &Assignment,
        j: usize,
        label: u32,
    ) {
        self.part_delta(instance, assignment, j, label, -1);
    }

    fn machine_delta(
        &mut self,
        instance: &Instance,
        assignment: &Assignment,
        i: usize,
        label: u32,
        sign: isize,
    ) {
        for j in 0..instance.parts() {
            let pc = assignment.part_label(j);
            if pc == 0 {
                continue;
            }
            let slot = if pc == label {
                if instance.one(i, j) {
                    &mut self.inside_ones
                } else {
                    &mut self.inside_zeros
                }
            } else if instance.one(i, j) {
                &mut self.excluded_ones
            } else {
                &mut self.excluded_zeros
            };
            *slot = slot.checked_add_signed(sign).unwrap();
        }
    }

    fn part_delta(
        &mut self,
        instance: &Instance,
        assignment: &Assignment,
        j: usize,
        label: u32,
        sign: isize,
    ) {
        for i in 0..instance.machines() {
            let mc = assignment.machine_label(i);
            if mc == 0 {
                continue;
            }
            let slot = if mc == label {
                if instance.one(i, j) {
                    &mut self.inside_ones
                } else {
                    &mut self.inside_zeros
                }
            } else if instance.one(i, j) {
                &mut self.excluded_ones
            } else {
                &mut self.excluded_zeros
            };
            *slot = slot.checked_add_signed(sign).unwrap();
        }
    }
}
