//! Command-line front end for the exact majorization and catalysis toolkit.
//!
//! Subcommands read a problem file (JSON with decimal-string entries, or a
//! flat two-line CSV for `p`/`q`-only problems) and emit machine-readable
//! output: JSON reports on stdout, CSV curves to a file. Exit codes are a
//! stable contract:
//!
//! - `0` success
//! - `2` input or validation failure
//! - `3` operation inapplicable (the pair is comparable)
//! - `4` resource limit exceeded

mod problem;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use catalyxis_core::rational::parse_rational;
use catalyxis_core::{
    compare, corollary_excludes, curve, dimension_lower_bound, grid_search, prefilter,
    qubit_window, sanders_bounds, scan_qubit_regions, theorem1_bounds, violation_set,
    MajorizationOrder, Rational, DEFAULT_CANDIDATE_LIMIT,
};
use num_traits::Zero;

use problem::{parse_problem, Problem};

#[derive(Parser)]
#[command(
    name = "catalyxis",
    version,
    about = "Exact majorization and entanglement-catalysis toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare p and q: majorization order, violation set, distance, P_max.
    Check {
        /// Problem file (JSON or flat CSV)
        file: PathBuf,
    },
    /// Report every closed-form catalyst bound for an incomparable pair.
    Bounds {
        file: PathBuf,
    },
    /// Sample the qubit-catalyst quality curves P_max(t), delta(t) to CSV.
    Curve {
        file: PathBuf,
        /// Number of grid points on [0, 1/2], endpoints included
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Locate qubit-catalyst regions with exact boundary refinement.
    Scan {
        file: PathBuf,
        /// Number of grid points in the initial sweep
        #[arg(long, default_value_t = 200)]
        resolution: usize,
        /// Bisection stops once a boundary bracket is narrower than this
        #[arg(long, default_value = "0.000001")]
        precision: String,
    },
    /// Exhaustively search the rational simplex grid for catalysts.
    Search {
        file: PathBuf,
        /// Catalyst dimension
        #[arg(long)]
        k: usize,
        /// Grid denominator N: candidates have entries n_i / N
        #[arg(long, default_value_t = 20)]
        resolution: u64,
        /// Candidate-count ceiling (also settable via CATALYXIS_LIMIT)
        #[arg(long)]
        limit: Option<u128>,
    },
}

enum CliError {
    /// Exit 2: bad input, bad flags, or I/O failure.
    Input(String),
    /// Exit 3: the requested analysis does not apply to this pair.
    Inapplicable(String),
    /// Exit 4: the work would exceed a configured resource ceiling.
    ResourceLimit(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Inapplicable(_) => 3,
            CliError::ResourceLimit(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Inapplicable(m) | CliError::ResourceLimit(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn load(path: &PathBuf) -> Result<Problem, CliError> {
    let contents = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_problem(&contents).map_err(CliError::Input)
}

/// Comparable pairs have nothing to catalyze; bounds and scans refuse them.
fn require_incomparable(problem: &Problem) -> Result<(), CliError> {
    match compare(&problem.p, &problem.q) {
        MajorizationOrder::Incomparable => Ok(()),
        order => Err(CliError::Inapplicable(format!(
            "the pair is comparable ({}), catalyst analysis does not apply",
            match order {
                MajorizationOrder::Equal => "p = q",
                MajorizationOrder::FirstMajorizedBySecond => "p is majorized by q",
                MajorizationOrder::SecondMajorizedByFirst => "q is majorized by p",
                MajorizationOrder::Incomparable => unreachable!(),
            }
        ))),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Check { file } => {
            let problem = load(&file)?;
            let doc = report::check_document(&problem.p, &problem.q, problem.r.as_ref());
            print!("{}", report::render(&doc));
            Ok(())
        }
        Command::Bounds { file } => {
            let problem = load(&file)?;
            require_incomparable(&problem)?;
            let (p, q) = (&problem.p, &problem.q);
            let pre = prefilter(p, q);
            let t1 = theorem1_bounds(p, q).expect("incomparable pair has violations");
            let corollary = corollary_excludes(p, q).expect("incomparable pair has violations");
            let window = qubit_window(p, q).expect("incomparable pair has violations");
            let dim = dimension_lower_bound(p, q).expect("incomparable pair has violations");
            let dim_value = catalyxis_core::bounds::dimension_bound_value(&t1);
            let sanders = sanders_bounds(p, q, problem.r.as_ref())
                .expect("incomparable pair has violations");
            let doc = report::bounds_document(
                &pre,
                &t1,
                corollary,
                &window,
                &dim,
                dim_value,
                &sanders,
                &violation_set(p, q),
                &violation_set(q, p),
            );
            print!("{}", report::render(&doc));
            Ok(())
        }
        Command::Curve { file, samples, out } => {
            let problem = load(&file)?;
            if samples < 2 {
                return Err(CliError::Input("--samples must be at least 2".into()));
            }
            let csv = report::curve_csv(&curve(&problem.p, &problem.q, samples));
            fs::write(&out, csv)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
            Ok(())
        }
        Command::Scan {
            file,
            resolution,
            precision,
        } => {
            let problem = load(&file)?;
            require_incomparable(&problem)?;
            if resolution < 10 {
                return Err(CliError::Input("--resolution must be at least 10".into()));
            }
            let precision: Rational = parse_rational(&precision)
                .map_err(|e| CliError::Input(format!("--precision: {e}")))?;
            if precision <= Rational::zero() {
                return Err(CliError::Input("--precision must be positive".into()));
            }
            let regions = scan_qubit_regions(&problem.p, &problem.q, resolution, &precision);
            print!("{}", report::render(&report::scan_document(&regions)));
            Ok(())
        }
        Command::Search {
            file,
            k,
            resolution,
            limit,
        } => {
            let problem = load(&file)?;
            if k < 1 {
                return Err(CliError::Input("--k must be at least 1".into()));
            }
            if resolution < k as u64 {
                return Err(CliError::Input(
                    "--resolution must be at least --k".into(),
                ));
            }
            let limit = match limit {
                Some(v) => v,
                None => match std::env::var("CATALYXIS_LIMIT") {
                    Ok(raw) => raw.parse::<u128>().map_err(|_| {
                        CliError::Input(format!(
                            "CATALYXIS_LIMIT: cannot parse {raw:?} as an integer"
                        ))
                    })?,
                    Err(_) => DEFAULT_CANDIDATE_LIMIT,
                },
            };
            let result = grid_search(&problem.p, &problem.q, k, resolution, limit)
                .map_err(|e| CliError::ResourceLimit(e.to_string()))?;
            print!("{}", report::render(&report::search_document(&result)));
            Ok(())
        }
    }
}
