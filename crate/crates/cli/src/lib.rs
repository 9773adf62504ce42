//! Command-line front end and benchmark harness.
//!
//! Three operations: solve a single instance file, run a directory of
//! instances into a results table (CSV or JSON), and cross-check the solver
//! against the brute-force reference on small instances.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use cfp_core::{load_instance, Instance, Rational};
use cfp_oracle::{brute_force_solve, OracleError};
use cfp_search::{solve, SearchConfig, SolveResult};

/// Solver options shared by all commands.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub time_limit: Option<f64>,
    pub node_limit: Option<u64>,
    pub seed_incumbent: Option<Rational>,
}

impl RunOptions {
    fn search_config(&self) -> SearchConfig {
        SearchConfig {
            time_limit: self.time_limit.map(Duration::from_secs_f64),
            node_limit: self.node_limit,
            initial_incumbent: self.seed_incumbent,
            pruning: true,
        }
    }
}

/// One row of the results table. Efficacy is carried both as an exact
/// fraction (reduced) and as its 4-decimal rendering.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub m: usize,
    pub p: usize,
    pub efficacy_num: u64,
    pub efficacy_den: u64,
    pub efficacy_decimal: String,
    pub proven_optimal: bool,
    pub nodes_explored: u64,
    pub time_s: f64,
}

impl Record {
    fn from_result(name: &str, instance: &Instance, result: &SolveResult) -> Record {
        let (m, p) = instance.original_dims();
        let efficacy = result.best_efficacy;
        Record {
            name: name.to_string(),
            m,
            p,
            efficacy_num: efficacy.map_or(0, |e| e.num()),
            efficacy_den: efficacy.map_or(1, |e| e.den()),
            efficacy_decimal: efficacy.unwrap_or(Rational::ZERO).to_decimal(4),
            proven_optimal: result.proven_optimal,
            nodes_explored: result.nodes_explored,
            time_s: result.elapsed.as_secs_f64(),
        }
    }
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load_instance_file(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read instance file {}", path.display()))?;
    load_instance(&text).with_context(|| format!("cannot parse {}", path.display()))
}

/// Solves one instance file and returns its record together with the raw
/// solver result (for assignment reporting).
pub fn run_single(path: &Path, options: &RunOptions) -> Result<(Record, Instance, SolveResult)> {
    let instance = load_instance_file(path)?;
    let result = solve(&instance, &options.search_config());
    let record = Record::from_result(&instance_name(path), &instance, &result);
    Ok((record, instance, result))
}

/// Cell vectors of a solution in the orientation of the original input
/// (machine and part roles swap when loading transposed the matrix).
pub fn oriented_labels(instance: &Instance, result: &SolveResult) -> Option<(Vec<u32>, Vec<u32>)> {
    let best = result.best_assignment.as_ref()?;
    let machines = best.machine_labels().to_vec();
    let parts = best.part_labels().to_vec();
    Some(if instance.transposed() {
        (parts, machines)
    } else {
        (machines, parts)
    })
}

/// Outcome of a batch run over a directory of `*.txt` instance files.
#[derive(Debug)]
pub struct BatchOutcome {
    pub records: Vec<Record>,
    /// (file name, error message) for files that failed to load or parse.
    pub errors: Vec<(String, String)>,
}

/// Runs every `*.txt` file in the directory in lexicographic name order,
/// applying the per-instance limits independently. Unreadable files are
/// reported as errors while the batch continues.
pub fn run_batch(dir: &Path, options: &RunOptions) -> Result<BatchOutcome> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "txt"))
        .collect();
    files.sort_by_key(|p| p.file_name().map(|n| n.to_os_string()));
    if files.is_empty() {
        bail!("no instance files (*.txt) in {}", dir.display());
    }
    let mut records = Vec::new();
    let mut errors = Vec::new();
    for path in files {
        match run_single(&path, options) {
            Ok((record, _, _)) => records.push(record),
            Err(err) => errors.push((instance_name(&path), format!("{err:#}"))),
        }
    }
    Ok(BatchOutcome { records, errors })
}

/// Renders records as CSV with a header row. Fields contain no commas, so no
/// quoting is ever needed.
pub fn render_csv(records: &[Record]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.serialize(record)?;
    }
    let bytes = writer.into_inner()?;
    Ok(String::from_utf8(bytes)?)
}

/// Parses a CSV produced by [`render_csv`] back into records.
pub fn parse_csv(text: &str) -> Result<Vec<Record>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for row in reader.deserialize() {
        out.push(row?);
    }
    Ok(out)
}

/// Renders records as a JSON array of flat objects mirroring the CSV fields.
pub fn render_json(records: &[Record]) -> Result<String> {
    Ok(serde_json::to_string_pretty(records)?)
}

/// Result of cross-checking the solver against the brute-force reference.
#[derive(Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Agree {
        efficacy: Rational,
    },
    Disagree {
        solver: Option<Rational>,
        oracle: Option<Rational>,
    },
    /// Instance exceeds the brute-force size guard.
    OracleUnavailable {
        reason: String,
    },
}

/// Runs solver and oracle on small instances and compares their optima
/// exactly; larger instances report the oracle as unavailable.
pub fn check(path: &Path, options: &RunOptions) -> Result<CheckOutcome> {
    let instance = load_instance_file(path)?;
    match brute_force_solve(&instance) {
        Err(err @ OracleError::TooLarge { .. }) => Ok(CheckOutcome::OracleUnavailable {
            reason: err.to_string(),
        }),
        Err(err) => Err(err.into()),
        Ok(oracle) => {
            let result = solve(&instance, &options.search_config());
            Ok(compare_check(result.best_efficacy, oracle.best_efficacy))
        }
    }
}

/// Pure comparison step of the check command, unit-testable as the negative
/// control: any mismatch is a disagreement.
pub fn compare_check(solver: Option<Rational>, oracle: Option<Rational>) -> CheckOutcome {
    match (solver, oracle) {
        (Some(a), Some(b)) if a == b => CheckOutcome::Agree { efficacy: a },
        _ => CheckOutcome::Disagree { solver, oracle },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trips_through_csv() {
        let records = vec![
            Record {
                name: "a".into(),
                m: 5,
                p: 7,
                efficacy_num: 14,
                efficacy_den: 17,
                efficacy_decimal: "0.8235".into(),
                proven_optimal: true,
                nodes_explored: 123,
                time_s: 0.25,
            },
            Record {
                name: "b".into(),
                m: 10,
                p: 15,
                efficacy_num: 23,
                efficacy_den: 25,
                efficacy_decimal: "0.9200".into(),
                proven_optimal: false,
                nodes_explored: 99999,
                time_s: 1.5,
            },
        ];
        let csv = render_csv(&records).unwrap();
        assert!(csv.starts_with(
            "name,m,p,efficacy_num,efficacy_den,efficacy_decimal,proven_optimal,nodes_explored,time_s"
        ));
        assert_eq!(parse_csv(&csv).unwrap(), records);
    }

    #[test]
    fn check_comparison_is_exact() {
        let a = Rational::new(14, 17);
        assert_eq!(
            compare_check(Some(a), Some(Rational::new(28, 34))),
            CheckOutcome::Agree { efficacy: a }
        );
        assert!(matches!(
            compare_check(Some(a), Some(Rational::new(13, 17))),
            CheckOutcome::Disagree { .. }
        ));
        assert!(matches!(
            compare_check(None, Some(a)),
            CheckOutcome::Disagree { .. }
        ));
    }
}
