//! The depth-first branch-and-bound driver.

use std::time::{Duration, Instant};

use cfp_bound::BoundEvaluator;
use cfp_core::{verify_feasible, Assignment, Instance, NodeCounts, Rational};

use crate::branch::{child_labels, next_branch_entity, BranchEntity};

/// Solver limits and knobs. By default the search runs to exhaustion with no
/// initial incumbent.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Wall-clock limit; the search stops cooperatively once exceeded.
    pub time_limit: Option<Duration>,
    /// Maximum number of nodes to visit.
    pub node_limit: Option<u64>,
    /// Efficacy a solution must strictly beat before it is recorded. No
    /// assignment is attached to a seeded incumbent.
    pub initial_incumbent: Option<Rational>,
    /// When false, bounds are neither computed nor used: children are
    /// visited in label order and the whole tree is enumerated.
    pub pruning: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            time_limit: None,
            node_limit: None,
            initial_incumbent: None,
            pruning: true,
        }
    }
}

/// Outcome of a solve.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub best_assignment: Option<Assignment>,
    pub best_efficacy: Option<Rational>,
    /// True when the tree was exhausted and a best assignment was found.
    pub proven_optimal: bool,
    /// Nodes visited, including the root and leaves.
    pub nodes_explored: u64,
    /// Children discarded because their bound could not beat the incumbent.
    pub nodes_pruned: u64,
    pub max_depth: usize,
    pub elapsed: Duration,
}

/// Runs the branch-and-bound search.
pub fn solve(instance: &Instance, config: &SearchConfig) -> SolveResult {
    assert!(
        config.node_limit != Some(0),
        "node limit must be positive when present"
    );
    let mut searcher = Searcher::new(instance, config, None);
    searcher.run()
}

/// Enumerates every feasible partition exactly once (pruning disabled),
/// invoking the callback on each complete leaf.
pub fn enumerate_feasible_partitions(instance: &Instance, mut on_leaf: impl FnMut(&Assignment)) {
    let config = SearchConfig {
        pruning: false,
        ..SearchConfig::default()
    };
    let mut searcher = Searcher::new(instance, &config, Some(&mut on_leaf));
    searcher.run();
}

struct Searcher<'a> {
    instance: &'a Instance,
    config: &'a SearchConfig,
    assignment: Assignment,
    counts: NodeCounts,
    evaluator: BoundEvaluator,
    incumbent: Option<Rational>,
    best: Option<(Rational, Assignment)>,
    nodes_explored: u64,
    nodes_pruned: u64,
    max_depth: usize,
    deadline: Option<Instant>,
    stopped: bool,
    leaf_sink: Option<&'a mut dyn FnMut(&Assignment)>,
}

impl<'a> Searcher<'a> {
    fn new(
        instance: &'a Instance,
        config: &'a SearchConfig,
        leaf_sink: Option<&'a mut dyn FnMut(&Assignment)>,
    ) -> Self {
        let assignment = Assignment::root(instance.machines(), instance.parts());
        let counts = NodeCounts::recount(instance, &assignment);
        Searcher {
            instance,
            config,
            assignment,
            counts,
            evaluator: BoundEvaluator::new(),
            incumbent: config.initial_incumbent,
            best: None,
            nodes_explored: 0,
            nodes_pruned: 0,
            max_depth: 0,
            deadline: None,
            stopped: false,
            leaf_sink,
        }
    }

    fn run(&mut self) -> SolveResult {
        let start = Instant::now();
        self.deadline = self.config.time_limit.map(|limit| start + limit);
        self.visit();
        let (best_efficacy, best_assignment) = match self.best.take() {
            Some((eff, asg)) => (Some(eff), Some(asg)),
            None => (None, None),
        };
        SolveResult {
            proven_optimal: !self.stopped && best_assignment.is_some(),
            best_assignment,
            best_efficacy,
            nodes_explored: self.nodes_explored,
            nodes_pruned: self.nodes_pruned,
            max_depth: self.max_depth,
            elapsed: start.elapsed(),
        }
    }

    fn visit(&mut self) {
        if let Some(limit) = self.config.node_limit {
            if self.nodes_explored >= limit {
                self.stopped = true;
                return;
            }
        }
        self.nodes_explored += 1;
        if self.nodes_explored.is_multiple_of(256) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.stopped = true;
                    return;
                }
            }
        }
        self.max_depth = self.max_depth.max(self.assignment.depth());

        let Some(entity) = next_branch_entity(&self.assignment, self.instance) else {
            self.on_leaf();
            return;
        };

        let labels = child_labels(self.instance, &self.assignment, entity);
        if self.config.pruning {
            let mut children: Vec<(u32, Rational)> = labels
                .into_iter()
                .map(|label| {
                    self.apply(entity, label);
                    let bound =
                        self.evaluator
                            .upper_bound(self.instance, &self.assignment, &self.counts);
                    self.revert(entity, label);
                    (label, bound)
                })
                .collect();
            // Stable sort: bound descending, ties stay in label order.
            children.sort_by_key(|&(_, bound)| std::cmp::Reverse(bound));
            for (label, bound) in children {
                // Re-check against the incumbent, which may have improved
                // since the bound was computed.
                if self.incumbent.is_some_and(|inc| bound <= inc) {
                    self.nodes_pruned += 1;
                    continue;
                }
                self.apply(entity, label);
                self.visit();
                self.revert(entity, label);
                if self.stopped {
                    return;
                }
            }
        } else {
            for label in labels {
                self.apply(entity, label);
                self.visit();
                self.revert(entity, label);
                if self.stopped {
                    return;
                }
            }
        }
    }

    fn on_leaf(&mut self) {
        debug_assert!(self.assignment.is_canonical());
        if !verify_feasible(self.instance, &self.assignment) {
            return;
        }
        let efficacy = self.counts.efficacy(self.instance);
        if let Some(sink) = self.leaf_sink.as_mut() {
            sink(&self.assignment);
        }
        if self.incumbent.is_none_or(|inc| efficacy > inc) {
            self.incumbent = Some(efficacy);
            self.best = Some((efficacy, self.assignment.clone()));
        }
    }

    fn apply(&mut self, entity: BranchEntity, label: u32) {
        match entity {
            BranchEntity::Machine(i) => {
                self.counts
                    .assign_machine(self.instance, &self.assignment, i, label);
                self.assignment.assign_machine(i, label);
            }
            BranchEntity::Part(j) => {
                self.counts
                    .assign_part(self.instance, &self.assignment, j, label);
                self.assignment.assign_part(j, label);
            }
        }
        debug_assert_eq!(
            self.counts,
            NodeCounts::recount(self.instance, &self.assignment)
        );
    }

    fn revert(&mut self, entity: BranchEntity, label: u32) {
        match entity {
            BranchEntity::Machine(i) => {
                self.assignment.unassign_machine(i);
                self.counts
                    .unassign_machine(self.instance, &self.assignment, i, label);
            }
            BranchEntity::Part(j) => {
                self.assignment.unassign_part(j);
                self.counts
                    .unassign_part(self.instance, &self.assignment, j, label);
            }
        }
    }
}
