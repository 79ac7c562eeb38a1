//! Command-line front end for `relprime`.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 overlapping set parts,
//! 4 oracle budget exceeded, 5 a `seq` check failed, 6 formula and oracle
//! disagree.

pub mod config;
pub mod error;
pub mod query;
pub mod record;

use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use relprime::oracle::OracleBudget;
use relprime::Count;

use config::{Config, Format, BUDGET_ENV};
use error::CliError;
use query::{Function, Query};
use record::OutputRecord;

#[derive(Debug, Parser)]
#[command(name = "relprime", version, about = "Exact relatively prime subset and tuple counts")]
pub struct Cli {
    /// key = value settings file (budgets, default output format)
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one counting function.
    Count(CountArgs),
    /// Evaluate a function along n = lo..hi with X = [1, n].
    Seq(SeqArgs),
    /// Evaluate a function and compare it with brute-force enumeration.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    #[arg(value_enum)]
    pub function: Function,
    /// Ground set, e.g. "1..4 + ap(7,3,5)"
    #[arg(long)]
    pub set: Option<String>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// JSON lines output (default)
    #[arg(long, conflicts_with = "tsv")]
    pub json: bool,
    /// Tab-separated output: function, spec, n, k, m, result
    #[arg(long)]
    pub tsv: bool,
    /// Largest |X| the subset oracle may enumerate
    #[arg(long, value_name = "N")]
    pub budget_subsets: Option<u64>,
    /// Largest number of tuples the tuple oracle may enumerate
    #[arg(long, value_name = "N")]
    pub budget_tuples: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub query: QueryArgs,
    /// Also run the brute-force oracle and compare
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub query: QueryArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub function: Function,
    /// Range of n, written lo..hi
    pub range: String,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    /// Fail unless phi(n) is divisible by 3 for every n >= 3
    #[arg(long)]
    pub check_mod3: bool,
    /// Fail if f(n) is a perfect square for some n >= 2
    #[arg(long)]
    pub check_nonsquare: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

struct Settings {
    format: Format,
    budget: OracleBudget,
}

fn settings(config: &Config, out: &OutputArgs) -> Result<Settings, CliError> {
    let format = if out.tsv {
        Format::Tsv
    } else if out.json {
        Format::Json
    } else {
        config.format.unwrap_or_default()
    };
    let env_subsets = match std::env::var(BUDGET_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("{BUDGET_ENV} must be an integer, got '{v}'")))?,
        ),
        Err(_) => None,
    };
    let defaults = OracleBudget::default();
    let budget = OracleBudget {
        max_set_size: out
            .budget_subsets
            .or(env_subsets)
            .or(config.budget_subsets)
            .unwrap_or(defaults.max_set_size),
        max_tuple_space: out
            .budget_tuples
            .or(config.budget_tuples)
            .unwrap_or(defaults.max_tuple_space),
    };
    Ok(Settings { format, budget })
}

fn emit(out: &mut impl Write, format: Format, record: &OutputRecord) -> Result<(), CliError> {
    let line = match format {
        Format::Json => record.to_json(),
        Format::Tsv => record.to_tsv(),
    };
    writeln!(out, "{line}")?;
    out.flush()?;
    Ok(())
}

fn record_for(query: &Query, result: &Count, started: Instant) -> OutputRecord {
    OutputRecord {
        function: query.function.name().to_string(),
        set: query.set.as_ref().map(|(text, _)| text.clone()),
        n: query.n,
        k: query.k,
        m: query.m,
        result: result.to_string(),
        verified: None,
        oracle_result: None,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

fn run_single(
    q: &QueryArgs,
    verify: bool,
    settings: &Settings,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let started = Instant::now();
    let query = Query::new(q.function, q.set.clone(), q.n, q.k, q.m)?;
    let value = query.evaluate()?;
    if !verify {
        return emit(out, settings.format, &record_for(&query, &value, started));
    }
    let oracle = query.brute_force(&settings.budget)?;
    let mut record = record_for(&query, &value, started);
    record.verified = Some(oracle == value);
    if oracle != value {
        record.oracle_result = Some(oracle.to_string());
        emit(out, settings.format, &record)?;
        return Err(CliError::Mismatch {
            formula: value.to_string(),
            oracle: oracle.to_string(),
        });
    }
    emit(out, settings.format, &record)
}

fn parse_range(text: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("range must look like lo..hi with 1 <= lo <= hi, got '{text}'"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn is_perfect_square(v: &Count) -> bool {
    let r = v.sqrt();
    &(&r * &r) == v
}

fn run_seq(args: &SeqArgs, settings: &Settings, out: &mut impl Write) -> Result<(), CliError> {
    let (lo, hi) = parse_range(&args.range)?;
    if args.check_mod3 && args.function != Function::Phi {
        return Err(CliError::Usage("--check-mod3 applies to phi only".into()));
    }
    if args.check_nonsquare && args.function != Function::F {
        return Err(CliError::Usage("--check-nonsquare applies to f only".into()));
    }
    for n in lo..=hi {
        let started = Instant::now();
        let (set, modulus) = match args.function {
            Function::F | Function::Fk => (Some(format!("1..{n}")), None),
            Function::Phi | Function::Phik => (Some(format!("1..{n}")), Some(n)),
            _ => (None, Some(n)),
        };
        let query = Query::new(args.function, set, modulus, args.k, args.m)?;
        let value = query.evaluate()?;
        let mut record = record_for(&query, &value, started);
        // the record always carries the sequence index
        record.n = Some(n);
        emit(out, settings.format, &record)?;

        if args.check_mod3 && n >= 3 && (&value % 3u32) != Count::from(0u32) {
            return Err(CliError::CheckFailed {
                n,
                message: format!("phi({n}) = {value} is not divisible by 3"),
            });
        }
        if args.check_nonsquare && n >= 2 && is_perfect_square(&value) {
            return Err(CliError::CheckFailed {
                n,
                message: format!("f({n}) = {value} is a perfect square"),
            });
        }
    }
    Ok(())
}

/// Runs a parsed command line, writing records to `out`.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match &cli.command {
        Command::Count(args) => {
            let s = settings(&config, &args.output)?;
            run_single(&args.query, args.verify, &s, out)
        }
        Command::Verify(args) => {
            let s = settings(&config, &args.output)?;
            run_single(&args.query, true, &s, out)
        }
        Command::Seq(args) => {
            let s = settings(&config, &args.output)?;
            run_seq(args, &s, out)
        }
    }
}

/// Parses `std::env::args`, runs, and returns the process exit code.
pub fn main_exit_code() -> i32 {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("relprime: {e}");
            e.exit_code()
        }
    }
}
