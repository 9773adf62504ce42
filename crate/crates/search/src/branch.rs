//! Branch entity selection and child generation.

use cfp_core::{Assignment, Instance};

/// The entity the search branches on next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchEntity {
    Machine(usize),
    Part(usize),
}

/// Picks the next entity to branch on, alternating part, machine, part, ...
/// after the pre-assigned root machine, always taking the lowest-index
/// unassigned entity of the due kind. When one kind is exhausted the other
/// continues; `None` means the assignment is complete.
pub fn next_branch_entity(assignment: &Assignment, instance: &Instance) -> Option<BranchEntity> {
    debug_assert_eq!(assignment.machine_count(), instance.machines());
    debug_assert_eq!(assignment.part_count(), instance.parts());
    let machines_due = assignment.assigned_machines() <= assignment.assigned_parts();
    let next_machine = || {
        (0..instance.machines())
            .find(|&i| assignment.machine_label(i) == 0)
            .map(BranchEntity::Machine)
    };
    let next_part = || {
        (0..instance.parts())
            .find(|&j| assignment.part_label(j) == 0)
            .map(BranchEntity::Part)
    };
    if machines_due {
        next_machine().or_else(next_part)
    } else {
        next_part().or_else(next_machine)
    }
}

/// Cell labels the entity may take: every open cell plus a new one, filtered
/// by the completion-counting invariant (cells missing a machine must not
/// outnumber the unassigned machines, and likewise for parts).
pub(crate) fn child_labels(
    instance: &Instance,
    assignment: &Assignment,
    entity: BranchEntity,
) -> Vec<u32> {
    let k = assignment.cells();
    let max_label = (k + 1).min(instance.max_cells() as u32);
    let machineless = assignment.empty_machine_cells();
    let partless = assignment.empty_part_cells();
    let mut labels = Vec::with_capacity(max_label as usize);
    for label in 1..=max_label {
        let new_cell = label == k + 1;
        let (machineless, partless, free_machines, free_parts) = match entity {
            BranchEntity::Machine(_) => {
                let joins_empty = !new_cell && assignment.machines_in_cell(label) == 0;
                (
                    machineless - joins_empty as usize,
                    partless + new_cell as usize,
                    assignment.unassigned_machines() - 1,
                    assignment.unassigned_parts(),
                )
            }
            BranchEntity::Part(_) => {
                let joins_empty = !new_cell && assignment.parts_in_cell(label) == 0;
                (
                    machineless + new_cell as usize,
                    partless - joins_empty as usize,
                    assignment.unassigned_machines(),
                    assignment.unassigned_parts() - 1,
                )
            }
        };
        if machineless <= free_machines && partless <= free_parts {
            labels.push(label);
        }
    }
    labels
}

/// One child assignment per surviving label, in ascending label order. An
/// empty list marks a dead node.
pub fn generate_children(
    instance: &Instance,
    assignment: &Assignment,
    entity: BranchEntity,
) -> Vec<Assignment> {
    child_labels(instance, assignment, entity)
        .into_iter()
        .map(|label| {
            let mut child = assignment.clone();
            match entity {
                BranchEntity::Machine(i) => child.assign_machine(i, label),
                BranchEntity::Part(j) => child.assign_part(j, label),
            }
            child
        })
        .collect()
}
