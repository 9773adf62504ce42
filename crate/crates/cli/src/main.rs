use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use cfp_cli::{
    check, oriented_labels, render_csv, render_json, run_batch, run_single, CheckOutcome, Record,
    RunOptions,
};
use cfp_core::Rational;

/// Exact branch-and-bound solver for the cell formation problem.
#[derive(Parser)]
#[command(name = "cfp", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
struct SolverFlags {
    /// Wall-clock limit per instance, in seconds.
    #[arg(long, value_name = "SECS")]
    time_limit: Option<f64>,
    /// Maximum number of search nodes per instance.
    #[arg(long, value_name = "N")]
    node_limit: Option<u64>,
    /// Start from a known efficacy (decimal, e.g. 0.75); only strictly
    /// better solutions are reported.
    #[arg(long, value_name = "DECIMAL")]
    seed_incumbent: Option<String>,
}

impl SolverFlags {
    fn options(&self) -> Result<RunOptions> {
        if let Some(t) = self.time_limit {
            anyhow::ensure!(t > 0.0, "--time-limit must be positive");
        }
        if self.node_limit == Some(0) {
            anyhow::bail!("--node-limit must be positive");
        }
        let seed_incumbent = self
            .seed_incumbent
            .as_deref()
            .map(Rational::from_decimal_str)
            .transpose()
            .map_err(|e| anyhow::anyhow!("--seed-incumbent: {e}"))?;
        Ok(RunOptions {
            time_limit: self.time_limit,
            node_limit: self.node_limit,
            seed_incumbent,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single instance file.
    Solve {
        path: PathBuf,
        #[command(flatten)]
        flags: SolverFlags,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Solve every *.txt instance in a directory and emit a results table.
    Batch {
        dir: PathBuf,
        #[command(flatten)]
        flags: SolverFlags,
        #[arg(long, value_enum, default_value_t = Output::Csv)]
        output: Output,
    },
    /// Cross-check the solver against the brute-force reference.
    Check {
        path: PathBuf,
        #[command(flatten)]
        flags: SolverFlags,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            path,
            flags,
            output,
        } => {
            let options = flags.options()?;
            let (record, instance, result) = run_single(&path, &options)?;
            match output {
                Output::Text => print_text(&record, oriented_labels(&instance, &result)),
                Output::Csv => print!("{}", render_csv(&[record])?),
                Output::Json => println!("{}", render_json(&[record])?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Batch { dir, flags, output } => {
            let options = flags.options()?;
            let outcome = run_batch(&dir, &options)?;
            match output {
                Output::Json => println!("{}", render_json(&outcome.records)?),
                _ => print!("{}", render_csv(&outcome.records)?),
            }
            for (name, message) in &outcome.errors {
                eprintln!("error: {name}: {message}");
            }
            if outcome.errors.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Check { path, flags } => {
            let options = flags.options()?;
            match check(&path, &options)? {
                CheckOutcome::Agree { efficacy } => {
                    println!("agree: f = {} ({})", efficacy, efficacy.to_decimal(4));
                    Ok(ExitCode::SUCCESS)
                }
                CheckOutcome::Disagree { solver, oracle } => {
                    let show = |v: Option<Rational>| {
                        v.map_or("none".to_string(), |r| {
                            format!("{} ({})", r, r.to_decimal(4))
                        })
                    };
                    println!(
                        "disagree: solver = {}, oracle = {}",
                        show(solver),
                        show(oracle)
                    );
                    Ok(ExitCode::from(2))
                }
                CheckOutcome::OracleUnavailable { reason } => {
                    println!("oracle unavailable (size guard): {reason}");
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
    }
}

fn print_text(record: &Record, labels: Option<(Vec<u32>, Vec<u32>)>) {
    println!("instance: {}", record.name);
    println!("size: {} x {}", record.m, record.p);
    println!(
        "efficacy: {}/{} ({})",
        record.efficacy_num, record.efficacy_den, record.efficacy_decimal
    );
    println!("proven_optimal: {}", record.proven_optimal);
    println!("nodes_explored: {}", record.nodes_explored);
    println!("time_s: {:.3}", record.time_s);
    if let Some((machines, parts)) = labels {
        println!("machine_cells: {machines:?}");
        println!("part_cells: {parts:?}");
    }
}
