//! Assignment state: which cell each machine and part belongs to.
//!
//! Cell labels are `1..=k`; label `0` means unassigned. The search keeps
//! labels canonical: a new cell always takes the next free label, and along
//! the interleaved order machine 1, part 1, machine 2, part 2, ... labels
//! first appear in increasing order. That gives every partition (up to cell
//! relabeling) exactly one representative.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssignmentError {
    #[error("assignment vectors must be non-empty")]
    Empty,
    #[error("label {label} used but not all of 1..={max} are")]
    LabelGap { label: u32, max: u32 },
}

/// Cell labels for every machine and part, plus bookkeeping for the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    machines: Vec<u32>,
    parts: Vec<u32>,
    cells: u32,
    assigned_machines: usize,
    assigned_parts: usize,
    // Per-cell entity counts, indexed by label - 1.
    cell_machines: Vec<usize>,
    cell_parts: Vec<usize>,
}

impl Assignment {
    /// The search root: machine 1 in cell 1, everything else unassigned.
    pub fn root(m: usize, p: usize) -> Self {
        assert!(m >= 1 && p >= 1);
        let mut machines = vec![0; m];
        machines[0] = 1;
        Assignment {
            machines,
            parts: vec![0; p],
            cells: 1,
            assigned_machines: 1,
            assigned_parts: 0,
            cell_machines: vec![1],
            cell_parts: vec![0],
        }
    }

    /// Builds an assignment from raw label vectors (0 = unassigned).
    ///
    /// Validates that the used labels are exactly `1..=k` with no gaps; it
    /// does not require canonical label order, so relabeled variants can be
    /// constructed for tests.
    pub fn from_labels(machines: Vec<u32>, parts: Vec<u32>) -> Result<Self, AssignmentError> {
        if machines.is_empty() || parts.is_empty() {
            return Err(AssignmentError::Empty);
        }
        let cells = machines.iter().chain(parts.iter()).copied().max().unwrap();
        let mut cell_machines = vec![0usize; cells as usize];
        let mut cell_parts = vec![0usize; cells as usize];
        for &c in &machines {
            if c > 0 {
                cell_machines[c as usize - 1] += 1;
            }
        }
        for &c in &parts {
            if c > 0 {
                cell_parts[c as usize - 1] += 1;
            }
        }
        for label in 1..=cells {
            let idx = label as usize - 1;
            if cell_machines[idx] + cell_parts[idx] == 0 {
                return Err(AssignmentError::LabelGap { label, max: cells });
            }
        }
        let assigned_machines = machines.iter().filter(|&&c| c > 0).count();
        let assigned_parts = parts.iter().filter(|&&c| c > 0).count();
        Ok(Assignment {
            machines,
            parts,
            cells,
            assigned_machines,
            assigned_parts,
            cell_machines,
            cell_parts,
        })
    }

    pub fn machine_count(&self) -> usize {
        self.machines.len()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Cell label of a machine, 0 if unassigned.
    #[inline]
    pub fn machine_label(&self, i: usize) -> u32 {
        self.machines[i]
    }

    /// Cell label of a part, 0 if unassigned.
    #[inline]
    pub fn part_label(&self, j: usize) -> u32 {
        self.parts[j]
    }

    pub fn machine_labels(&self) -> &[u32] {
        &self.machines
    }

    pub fn part_labels(&self) -> &[u32] {
        &self.parts
    }

    /// Number of open cells (k).
    pub fn cells(&self) -> u32 {
        self.cells
    }

    /// Number of assigned entities.
    pub fn depth(&self) -> usize {
        self.assigned_machines + self.assigned_parts
    }

    pub fn assigned_machines(&self) -> usize {
        self.assigned_machines
    }

    pub fn assigned_parts(&self) -> usize {
        self.assigned_parts
    }

    pub fn unassigned_machines(&self) -> usize {
        self.machines.len() - self.assigned_machines
    }

    pub fn unassigned_parts(&self) -> usize {
        self.parts.len() - self.assigned_parts
    }

    pub fn is_complete(&self) -> bool {
        self.depth() == self.machines.len() + self.parts.len()
    }

    pub fn machines_in_cell(&self, label: u32) -> usize {
        self.cell_machines[label as usize - 1]
    }

    pub fn parts_in_cell(&self, label: u32) -> usize {
        self.cell_parts[label as usize - 1]
    }

    /// Open cells currently without any machine.
    pub fn empty_machine_cells(&self) -> usize {
        self.cell_machines.iter().filter(|&&c| c == 0).count()
    }

    /// Open cells currently without any part.
    pub fn empty_part_cells(&self) -> usize {
        self.cell_parts.iter().filter(|&&c| c == 0).count()
    }

    /// Necessary condition for a feasible completion to exist: there are
    /// enough unassigned machines (parts) left to cover every cell still
    /// missing one.
    pub fn completion_possible(&self) -> bool {
        self.empty_machine_cells() <= self.unassigned_machines()
            && self.empty_part_cells() <= self.unassigned_parts()
    }

    /// Assigns machine `i` to cell `label`; `label == k + 1` opens a new
    /// cell. Panics if `i` is already assigned or the label skips ahead.
    pub fn assign_machine(&mut self, i: usize, label: u32) {
        assert_eq!(self.machines[i], 0, "machine {i} already assigned");
        self.open_if_new(label);
        self.machines[i] = label;
        self.assigned_machines += 1;
        self.cell_machines[label as usize - 1] += 1;
    }

    /// Assigns part `j` to cell `label`; `label == k + 1` opens a new cell.
    pub fn assign_part(&mut self, j: usize, label: u32) {
        assert_eq!(self.parts[j], 0, "part {j} already assigned");
        self.open_if_new(label);
        self.parts[j] = label;
        self.assigned_parts += 1;
        self.cell_parts[label as usize - 1] += 1;
    }

    /// Undoes `assign_machine`. Intended for strict undo-stack use: the last
    /// opened cell is closed again once it empties.
    pub fn unassign_machine(&mut self, i: usize) {
        let label = self.machines[i];
        assert!(label > 0, "machine {i} not assigned");
        self.machines[i] = 0;
        self.assigned_machines -= 1;
        self.cell_machines[label as usize - 1] -= 1;
        self.close_if_empty(label);
    }

    /// Undoes `assign_part`.
    pub fn unassign_part(&mut self, j: usize) {
        let label = self.parts[j];
        assert!(label > 0, "part {j} not assigned");
        self.parts[j] = 0;
        self.assigned_parts -= 1;
        self.cell_parts[label as usize - 1] -= 1;
        self.close_if_empty(label);
    }

    fn open_if_new(&mut self, label: u32) {
        assert!(
            label >= 1 && label <= self.cells + 1,
            "label {label} out of range (cells open: {})",
            self.cells
        );
        if label == self.cells + 1 {
            self.cells += 1;
            self.cell_machines.push(0);
            self.cell_parts.push(0);
        }
    }

    fn close_if_empty(&mut self, label: u32) {
        let idx = label as usize - 1;
        if label == self.cells && self.cell_machines[idx] == 0 && self.cell_parts[idx] == 0 {
            self.cells -= 1;
            self.cell_machines.pop();
            self.cell_parts.pop();
        }
        debug_assert!(self.no_label_gaps(), "unassign left a label gap");
    }

    fn no_label_gaps(&self) -> bool {
        (0..self.cells as usize).all(|c| self.cell_machines[c] + self.cell_parts[c] > 0)
    }

    /// True if cell labels first appear in increasing order along the
    /// interleaved sequence machine 1, part 1, machine 2, part 2, ...
    pub fn is_canonical(&self) -> bool {
        let mut seen = 0u32;
        let longest = self.machines.len().max(self.parts.len());
        for idx in 0..longest {
            for label in [
                self.machines.get(idx).copied().unwrap_or(0),
                self.parts.get(idx).copied().unwrap_or(0),
            ] {
                if label > seen + 1 {
                    return false;
                }
                seen = seen.max(label);
            }
        }
        true
    }
}
