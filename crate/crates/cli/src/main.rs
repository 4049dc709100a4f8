use std::fs;
use std::process::ExitCode;

use chebfib::algebra::{format_rational, parse_rational};
use chebfib::chebyshev::{cheb_eval, cheb_poly, Kind};
use chebfib::combinatorial::verify_section5;
use chebfib::identities::{export_catalog, find, verify_all, verify_record, Form, GridProfile, OutcomeStatus, Status, Var};
use chebfib::sequences::{a138573, fib, lucas};
use chebfib::Elem;
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

mod report;

#[derive(Parser)]
#[command(name = "chebfib", version, about = "Exact checks of binomial Fibonacci and Lucas sums built from Chebyshev polynomials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct RunOpts {
    /// Write the report to this file as well as stdout.
    #[arg(long)]
    out: Option<String>,
    /// Worker threads for point evaluation.
    #[arg(long)]
    jobs: Option<usize>,
    /// Include elapsed microseconds in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the catalog index.
    List,
    /// Check one entry over a grid.
    Verify {
        #[arg(long)]
        id: String,
        /// Override a parameter range, e.g. `n=1..30` or `p=-2..2`.
        #[arg(long = "set", value_name = "NAME=LO..HI")]
        sets: Vec<String>,
        #[arg(long, default_value = "desk")]
        profile: String,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Check every catalog entry.
    VerifyAll {
        #[arg(long, default_value = "desk")]
        profile: String,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Print the first terms of a sequence, one per line.
    Sequence {
        #[arg(long, value_enum)]
        id: SeqId,
        #[arg(long)]
        count: usize,
    },
    /// Chebyshev coefficients, or the exact value at a rational point.
    Cheb {
        #[arg(long)]
        kind: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        at: Option<String>,
    },
    /// Sweep the combinatorial relations and the reciprocal-binomial sums.
    Section5 {
        #[arg(long)]
        max_total: i64,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqId {
    Fib,
    Lucas,
    A138573,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("bad --set {0:?}: expected NAME=LO..HI")]
    BadSet(String),
    #[error("entry {id} has no parameter {var}")]
    NoSuchParam { id: String, var: String },
    #[error("--jobs must be at least 1")]
    Jobs,
    #[error("--max-total must be non-negative")]
    MaxTotal,
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error(transparent)]
    Identity(#[from] chebfib::identities::IdentityError),
    #[error(transparent)]
    Cheb(#[from] chebfib::ChebError),
    #[error(transparent)]
    Algebra(#[from] chebfib::AlgebraError),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Report text and whether any verified-family check failed.
struct Output {
    text: String,
    failed: bool,
}

fn parse_set(s: &str) -> Result<(Var, i64, i64), CliError> {
    let bad = || CliError::BadSet(s.to_string());
    let (name, range) = s.split_once('=').ok_or_else(bad)?;
    let var = Var::from_name(name.trim()).ok_or_else(bad)?;
    let (lo, hi) = match range.split_once("..") {
        Some((lo, hi)) => (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?),
        None => {
            let v = range.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((var, lo, hi))
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(CliError::Jobs),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
    }
}

fn run(cmd: Cmd) -> Result<(Output, Option<String>), CliError> {
    let plain = |text: String| Ok((Output { text, failed: false }, None));
    match cmd {
        Cmd::List => plain(export_catalog()),
        Cmd::Sequence { id, count } => {
            let vals = match id {
                SeqId::Fib => (0..count as i64).map(fib).collect(),
                SeqId::Lucas => (0..count as i64).map(lucas).collect(),
                SeqId::A138573 => a138573(count),
            };
            plain(vals.iter().map(|v| format!("{v}\n")).collect())
        }
        Cmd::Cheb { kind, n, at } => {
            let kind: Kind = kind.parse()?;
            match at {
                Some(x) => {
                    let x = parse_rational(&x)?;
                    plain(format!("{}\n", cheb_eval(kind, n, &Elem::Rat(x))))
                }
                None => {
                    let p = cheb_poly(kind, n)?;
                    plain(p.coeffs().iter().enumerate().map(|(k, c)| format!("{k}\t{}\n", format_rational(c))).collect())
                }
            }
        }
        Cmd::Verify { id, sets, profile, run } => {
            let rec = find(&id)?;
            let mut grid = GridProfile::by_name(&profile)?;
            for s in &sets {
                let (var, lo, hi) = parse_set(s)?;
                if !rec.params.iter().any(|p| p.var == var) {
                    return Err(CliError::NoSuchParam { id: id.clone(), var: var.to_string() });
                }
                grid = grid.with_range(var, lo, hi);
            }
            let outcomes = with_pool(run.jobs, || verify_record(rec, &grid))?;
            let counts_against = |f: Form| rec.status == Status::VerifiedFamily || f == Form::Corrected;
            let failures = outcomes
                .iter()
                .filter(|o| o.status == OutcomeStatus::Fail && counts_against(o.form))
                .count();
            let text = report::verify_report(rec.id, &grid.name, &outcomes, failures, run.timings);
            Ok((Output { text, failed: failures > 0 }, run.out))
        }
        Cmd::VerifyAll { profile, run } => {
            let grid = GridProfile::by_name(&profile)?;
            let summary = with_pool(run.jobs, || verify_all(&grid))?;
            let text = report::verify_all_report(&summary, run.timings);
            Ok((Output { text, failed: summary.verified_failures() > 0 }, run.out))
        }
        Cmd::Section5 { max_total, run } => {
            if max_total < 0 {
                return Err(CliError::MaxTotal);
            }
            let summary = with_pool(run.jobs, || verify_section5(max_total))?;
            let failed = summary.failures().next().is_some();
            Ok((Output { text: report::section5_report(&summary), failed }, run.out))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (out, path) = match run(cli.cmd) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("chebfib: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", out.text);
    if let Some(path) = path {
        if let Err(source) = fs::write(&path, &out.text) {
            eprintln!("chebfib: {}", CliError::Write { path, source });
            return ExitCode::from(2);
        }
    }
    ExitCode::from(if out.failed { 1 } else { 0 })
}
