//! Exhaustive enumeration references.
//!
//! Machine partitions are enumerated as restricted-growth strings (each new
//! label is the smallest unused one), parts are then mapped onto the
//! resulting cells, and infeasible combinations (a cell without parts) are
//! skipped. This covers every feasible solution exactly once up to cell
//! relabeling.

use std::collections::BTreeSet;
use std::time::Instant;

use cfp_core::{Assignment, Instance, Rational};
use cfp_search::SolveResult;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance {m}x{p} exceeds the brute-force guard ({max_m}x{max_p})")]
    TooLarge {
        m: usize,
        p: usize,
        max_m: usize,
        max_p: usize,
    },
    #[error("enumeration would visit about {estimate} combinations (limit {limit})")]
    SearchSpaceTooLarge { estimate: u128, limit: u128 },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

const MAX_MACHINES: usize = 5;
const MAX_PARTS: usize = 8;

/// Exact optimum by full enumeration. Guarded to m <= 5, p <= 8.
pub fn brute_force_solve(instance: &Instance) -> Result<SolveResult, OracleError> {
    let (m, p) = (instance.machines(), instance.parts());
    if m > MAX_MACHINES || p > MAX_PARTS {
        return Err(OracleError::TooLarge {
            m,
            p,
            max_m: MAX_MACHINES,
            max_p: MAX_PARTS,
        });
    }
    let start = Instant::now();
    let mut best: Option<(Rational, Vec<u32>, Vec<u32>)> = None;
    let mut machine_labels = vec![0u32; m];
    let mut leaves = 0u64;
    machine_partitions(instance, &mut machine_labels, 0, 0, &mut |labels, k| {
        assign_parts(instance, labels, k, &mut leaves, &mut best);
    });
    let (efficacy, machines, parts) = best.expect("every instance has a feasible solution");
    let (machines, parts) = canonicalize_labels(&machines, &parts);
    let assignment = Assignment::from_labels(machines, parts).unwrap();
    Ok(SolveResult {
        best_assignment: Some(assignment),
        best_efficacy: Some(efficacy),
        proven_optimal: true,
        nodes_explored: leaves,
        nodes_pruned: 0,
        max_depth: m + p,
        elapsed: start.elapsed(),
    })
}

/// Restricted-growth enumeration of machine partitions into at most
/// `max_cells` cells.
fn machine_partitions(
    instance: &Instance,
    labels: &mut Vec<u32>,
    idx: usize,
    used: u32,
    visit: &mut impl FnMut(&[u32], u32),
) {
    if idx == labels.len() {
        visit(labels, used);
        return;
    }
    let top = (used + 1).min(instance.max_cells() as u32);
    for label in 1..=top {
        labels[idx] = label;
        machine_partitions(instance, labels, idx + 1, used.max(label), visit);
    }
}

/// Enumerates all part-to-cell maps for a fixed machine partition and folds
/// the best feasible efficacy into `best`.
fn assign_parts(
    instance: &Instance,
    machine_labels: &[u32],
    k: u32,
    leaves: &mut u64,
    best: &mut Option<(Rational, Vec<u32>, Vec<u32>)>,
) {
    let p = instance.parts();
    let k = k as usize;
    // ones_in_cell[j][c]: ones of column j against the machines of cell c+1.
    let mut ones_in_cell = vec![vec![0usize; k]; p];
    let mut cell_sizes = vec![0usize; k];
    for (i, &c) in machine_labels.iter().enumerate() {
        cell_sizes[c as usize - 1] += 1;
        for (j, cells) in ones_in_cell.iter_mut().enumerate() {
            if instance.one(i, j) {
                cells[c as usize - 1] += 1;
            }
        }
    }
    let mut part_labels = vec![0u32; p];
    let mut parts_per_cell = vec![0usize; k];
    recurse_parts(
        instance,
        machine_labels,
        &ones_in_cell,
        &cell_sizes,
        &mut part_labels,
        &mut parts_per_cell,
        0,
        0,
        0,
        leaves,
        best,
    );
}

#[allow(clippy::too_many_arguments)]
fn recurse_parts(
    instance: &Instance,
    machine_labels: &[u32],
    ones_in_cell: &[Vec<usize>],
    cell_sizes: &[usize],
    part_labels: &mut Vec<u32>,
    parts_per_cell: &mut Vec<usize>,
    j: usize,
    inside_ones: usize,
    inside_zeros: usize,
    leaves: &mut u64,
    best: &mut Option<(Rational, Vec<u32>, Vec<u32>)>,
) {
    let k = cell_sizes.len();
    let p = part_labels.len();
    // Not enough parts left to cover every empty cell.
    let empty = parts_per_cell.iter().filter(|&&c| c == 0).count();
    if empty > p - j {
        return;
    }
    if j == p {
        *leaves += 1;
        let efficacy = cfp_core::efficacy(inside_ones, instance.n1(), inside_zeros);
        if best.as_ref().is_none_or(|(b, _, _)| efficacy > *b) {
            *best = Some((efficacy, machine_labels.to_vec(), part_labels.clone()));
        }
        return;
    }
    for c in 0..k {
        let ones = ones_in_cell[j][c];
        let zeros = cell_sizes[c] - ones;
        part_labels[j] = c as u32 + 1;
        parts_per_cell[c] += 1;
        recurse_parts(
            instance,
            machine_labels,
            ones_in_cell,
            cell_sizes,
            part_labels,
            parts_per_cell,
            j + 1,
            inside_ones + ones,
            inside_zeros + zeros,
            leaves,
            best,
        );
        parts_per_cell[c] -= 1;
    }
}

/// Relabels cells by first appearance along the interleaved order machine 1,
/// part 1, machine 2, part 2, ...
fn canonicalize_labels(machines: &[u32], parts: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let k = machines
        .iter()
        .chain(parts.iter())
        .copied()
        .max()
        .unwrap_or(0) as usize;
    let mut map = vec![0u32; k + 1];
    let mut next = 0u32;
    let longest = machines.len().max(parts.len());
    for idx in 0..longest {
        for label in [machines.get(idx).copied(), parts.get(idx).copied()]
            .into_iter()
            .flatten()
        {
            if label > 0 && map[label as usize] == 0 {
                next += 1;
                map[label as usize] = next;
            }
        }
    }
    (
        machines.iter().map(|&c| map[c as usize]).collect(),
        parts.iter().map(|&c| map[c as usize]).collect(),
    )
}

/// All feasible partitions of an `m x p` grid in canonical labeling,
/// independent of the search tree: label vectors are enumerated outright,
/// canonicalized, deduplicated, and filtered for feasibility.
pub fn canonical_feasible_partitions(m: usize, p: usize) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    assert!(
        m >= 1 && p >= 1 && m <= 5 && p <= 5,
        "guarded to tiny sizes"
    );
    let cmax = m.min(p) as u32;
    let mut out = BTreeSet::new();
    let mut machines = vec![1u32; m];
    let mut parts = vec![1u32; p];
    loop {
        let (cm, cp) = canonicalize_labels(&machines, &parts);
        if feasible(&cm, &cp) {
            out.insert((cm, cp));
        }
        if !odometer(&mut machines, &mut parts, cmax) {
            return out;
        }
    }
}

fn feasible(machines: &[u32], parts: &[u32]) -> bool {
    let k = machines
        .iter()
        .chain(parts.iter())
        .copied()
        .max()
        .unwrap_or(0) as usize;
    let mut has_machine = vec![false; k];
    let mut has_part = vec![false; k];
    for &c in machines {
        has_machine[c as usize - 1] = true;
    }
    for &c in parts {
        has_part[c as usize - 1] = true;
    }
    (0..k).all(|c| has_machine[c] && has_part[c])
}

fn odometer(machines: &mut [u32], parts: &mut [u32], cmax: u32) -> bool {
    for slot in machines.iter_mut().chain(parts.iter_mut()) {
        if *slot < cmax {
            *slot += 1;
            return true;
        }
        *slot = 1;
    }
    false
}

/// Maximum efficacy over all feasible completions of a partial assignment,
/// or `None` when no completion is feasible. Exponential; guarded by the
/// number of remaining entities.
pub fn best_completion(
    instance: &Instance,
    assignment: &Assignment,
) -> Result<Option<Rational>, OracleError> {
    let remaining = assignment.unassigned_machines() + assignment.unassigned_parts();
    let estimate = (instance.max_cells() as u128).saturating_pow(remaining as u32);
    const LIMIT: u128 = 2_000_000;
    if estimate > LIMIT {
        return Err(OracleError::SearchSpaceTooLarge {
            estimate,
            limit: LIMIT,
        });
    }
    let mut machines = assignment.machine_labels().to_vec();
    let mut parts = assignment.part_labels().to_vec();
    let mut best = None;
    complete(instance, &mut machines, &mut parts, &mut best);
    Ok(best)
}

/// Fills unassigned slots in index order (machines first), opening new cells
/// canonically; every completion is relabel-equivalent to one visited here.
fn complete(
    instance: &Instance,
    machines: &mut Vec<u32>,
    parts: &mut Vec<u32>,
    best: &mut Option<Rational>,
) {
    let next_machine = machines.iter().position(|&c| c == 0);
    let next_part = parts.iter().position(|&c| c == 0);
    let k = machines.iter().chain(parts.iter()).copied().max().unwrap();
    let top = (k + 1).min(instance.max_cells() as u32);
    match (next_machine, next_part) {
        (Some(i), _) => {
            for label in 1..=top {
                machines[i] = label;
                complete(instance, machines, parts, best);
            }
            machines[i] = 0;
        }
        (None, Some(j)) => {
            for label in 1..=top {
                parts[j] = label;
                complete(instance, machines, parts, best);
            }
            parts[j] = 0;
        }
        (None, None) => {
            if !feasible(machines, parts) {
                return;
            }
            let mut inside_ones = 0;
            let mut inside_zeros = 0;
            for (i, &mc) in machines.iter().enumerate() {
                for (j, &pc) in parts.iter().enumerate() {
                    if mc == pc {
                        if instance.one(i, j) {
                            inside_ones += 1;
                        } else {
                            inside_zeros += 1;
                        }
                    }
                }
            }
            let efficacy = cfp_core::efficacy(inside_ones, instance.n1(), inside_zeros);
            if best.is_none_or(|b| efficacy > b) {
                *best = Some(efficacy);
            }
        }
    }
}
