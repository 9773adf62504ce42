//! Placement alternatives for unassigned machines and parts.

use cfp_core::{Assignment, Instance};

/// Ones and zeros a candidate placement would add inside cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alternative {
    pub ones: usize,
    pub zeros: usize,
}

impl Alternative {
    pub fn new(ones: usize, zeros: usize) -> Self {
        Alternative { ones, zeros }
    }

    /// Strict domination: at least as many ones, at most as many zeros, and
    /// better in at least one.
    pub fn dominates(&self, other: &Alternative) -> bool {
        self.ones >= other.ones
            && self.zeros <= other.zeros
            && (self.ones > other.ones || self.zeros < other.zeros)
    }

    /// The merged alternative `(max a, min b)`, which dominates both inputs.
    pub fn merged(&self, other: &Alternative) -> Alternative {
        Alternative {
            ones: self.ones.max(other.ones),
            zeros: self.zeros.min(other.zeros),
        }
    }
}

/// Alternatives for an unassigned machine: one per open cell (in label
/// order), then the new-cell alternative.
///
/// Joining cell `c` captures the cell's assigned columns (ones and zeros)
/// plus every one the row has in still-unassigned columns; a new cell
/// captures only those unassigned-column ones.
pub fn machine_alternatives(
    instance: &Instance,
    assignment: &Assignment,
    i: usize,
) -> Vec<Alternative> {
    let mut out = Vec::new();
    machine_alternatives_into(instance, assignment, i, &mut Vec::new(), &mut out);
    out
}

/// Alternatives for an unassigned part: one per open cell (in label order),
/// then the leave-unassigned alternative `(0, 0)`.
///
/// Parts are scored only against rows already assigned in the node.
pub fn part_alternatives(
    instance: &Instance,
    assignment: &Assignment,
    j: usize,
) -> Vec<Alternative> {
    let mut out = Vec::new();
    part_alternatives_into(instance, assignment, j, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn machine_alternatives_into(
    instance: &Instance,
    assignment: &Assignment,
    i: usize,
    per_cell: &mut Vec<(usize, usize)>,
    out: &mut Vec<Alternative>,
) {
    assert_eq!(
        assignment.machine_label(i),
        0,
        "machine {i} already assigned"
    );
    let k = assignment.cells() as usize;
    per_cell.clear();
    per_cell.resize(k, (0, 0));
    let mut unassigned_ones = 0;
    for j in 0..instance.parts() {
        let c = assignment.part_label(j) as usize;
        if c == 0 {
            unassigned_ones += instance.one(i, j) as usize;
        } else if instance.one(i, j) {
            per_cell[c - 1].0 += 1;
        } else {
            per_cell[c - 1].1 += 1;
        }
    }
    out.clear();
    for &(ones, zeros) in per_cell.iter() {
        out.push(Alternative::new(ones + unassigned_ones, zeros));
    }
    out.push(Alternative::new(unassigned_ones, 0));
}

pub(crate) fn part_alternatives_into(
    instance: &Instance,
    assignment: &Assignment,
    j: usize,
    per_cell: &mut Vec<(usize, usize)>,
    out: &mut Vec<Alternative>,
) {
    assert_eq!(assignment.part_label(j), 0, "part {j} already assigned");
    let k = assignment.cells() as usize;
    per_cell.clear();
    per_cell.resize(k, (0, 0));
    for i in 0..instance.machines() {
        let c = assignment.machine_label(i) as usize;
        if c == 0 {
            continue;
        }
        if instance.one(i, j) {
            per_cell[c - 1].0 += 1;
        } else {
            per_cell[c - 1].1 += 1;
        }
    }
    out.clear();
    for &(ones, zeros) in per_cell.iter() {
        out.push(Alternative::new(ones, zeros));
    }
    out.push(Alternative::new(0, 0));
}
