//! Command-line surface. All results go to standard output (JSON or CSV,
//! byte-deterministic for fixed inputs); timing diagnostics go to standard
//! error. Exit codes: 0 all checks pass, 1 verification failure, 2 usage
//! or parse error.

use std::process;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use cayley_extremal::error::Error;
use cayley_extremal::extremal::{search_m_cyclic, search_m_star, SearchOptions};
use cayley_extremal::group::{parse_raw_element_list, GroupSpec};
use cayley_extremal::metrics::{bfs_profile, GeneratingSet};
use cayley_extremal::report::suites::{run_suite, Suite, SuiteConfig, SuiteJson};
use cayley_extremal::report::{
    build_avgdist_table, build_extremal_table, write_csv, ProfileJson, RecordJson,
};
use cayley_extremal::Result;

#[derive(Parser)]
#[command(
    name = "cayley",
    version,
    about = "Distance metrics and extremal searches for Cayley digraphs of finite Abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Cyclic,
    Abelian,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distance profile of Cay(group, gens) as JSON.
    Diam {
        /// Group literal in invariant factors, e.g. Z11 or Z2xZ6.
        group: String,
        /// Connection set, e.g. "1,3" or "(1,0),(-1,1)".
        #[arg(allow_hyphen_values = true)]
        gens: String,
    },
    /// Exhaustively search for the largest feasible order at (d, k).
    Search {
        /// Scan cyclic groups only, or all Abelian groups.
        #[arg(long, value_enum)]
        mode: Mode,
        /// Diameter bound.
        #[arg(long)]
        d: u64,
        /// Degree (size of the connection set).
        #[arg(long)]
        k: u64,
        /// Override the exhaustive scan ceiling (default: C(d+k, k)).
        #[arg(long)]
        cap: Option<u64>,
        /// Worker threads for the per-order partitions.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        /// One of: formulas, table1, table2, proposition, counterexample,
        /// farthest, avgdist.
        suite: String,
        /// Family parameter range, e.g. "2..6" or "3".
        #[arg(long)]
        x: Option<String>,
        /// Diameter range, e.g. "2..13" or "4".
        #[arg(long)]
        d: Option<String>,
        /// Order range, e.g. "3..30" (avgdist suite).
        #[arg(long)]
        m: Option<String>,
        /// Worker threads for search-backed suites.
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
    },
    /// Emit a comparison table.
    Table {
        /// "extremal" (per-diameter maxima) or "avgdist" (per-order best
        /// average distances).
        kind: String,
        /// Diameter range for extremal tables, e.g. "2..7".
        #[arg(long)]
        d: Option<String>,
        /// Order range for avgdist tables, e.g. "5..12".
        #[arg(long)]
        m: Option<String>,
        /// Degree (size of the connection set).
        #[arg(long, default_value_t = 2)]
        k: u64,
        /// Worker threads for the searches behind extremal tables.
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

/// "LO..HI" or a single value "N" (meaning N..N).
fn parse_range(text: &str) -> Result<(u64, u64)> {
    let parse_end = |s: &str| -> Result<u64> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("expected an integer, got '{s}'")))
    };
    match text.split_once("..") {
        Some((lo, hi)) => Ok((parse_end(lo)?, parse_end(hi)?)),
        None => parse_end(text).map(|v| (v, v)),
    }
}

fn parse_range_opt(text: &Option<String>) -> Result<Option<(u64, u64)>> {
    text.as_deref().map(parse_range).transpose()
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Internal(format!("JSON encoding: {e}")))
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Diam { group, gens } => {
            let g = GroupSpec::parse(&group)?.canonicalize();
            let raw = parse_raw_element_list(&gens)?;
            let set = GeneratingSet::from_raw_coords(&g, &raw)?;
            let profile = bfs_profile(&g, &set)?;
            println!("{}", to_json(&ProfileJson::build(&g, &set, &profile))?);
            Ok(0)
        }
        Command::Search {
            mode,
            d,
            k,
            cap,
            workers,
        } => {
            let opts = SearchOptions {
                cap,
                workers,
                ..SearchOptions::default()
            };
            let started = Instant::now();
            let record = match mode {
                Mode::Cyclic => search_m_cyclic(d, k, &opts)?,
                Mode::Abelian => search_m_star(d, k, &opts)?,
            };
            record.verify()?;
            eprintln!(
                "exhausted orders 1..={} in {:.3}s",
                record.exhaustive_up_to,
                started.elapsed().as_secs_f64()
            );
            println!("{}", to_json(&RecordJson::build(&record))?);
            Ok(0)
        }
        Command::Verify {
            suite,
            x,
            d,
            m,
            workers,
            format,
        } => {
            let suite = Suite::parse(&suite)?;
            let cfg = SuiteConfig {
                x_range: parse_range_opt(&x)?,
                d_range: parse_range_opt(&d)?,
                m_range: parse_range_opt(&m)?,
                workers,
            };
            let result = run_suite(suite, &cfg)?;
            eprintln!(
                "suite {} finished in {:.3}s",
                result.suite,
                result.elapsed.as_secs_f64()
            );
            match format {
                VerifyFormat::Text => {
                    for check in &result.checks {
                        println!(
                            "[{}] {}: expected {}; observed {}",
                            check.status.to_string().to_uppercase(),
                            check.id,
                            check.expected,
                            check.observed
                        );
                    }
                    println!(
                        "suite {}: {} checks, {} passed, {} failed, {} flagged",
                        result.suite,
                        result.checks.len(),
                        result.count(cayley_extremal::report::suites::CheckStatus::Pass),
                        result.count(cayley_extremal::report::suites::CheckStatus::Fail),
                        result.count(cayley_extremal::report::suites::CheckStatus::Flagged),
                    );
                }
                VerifyFormat::Json => println!("{}", to_json(&SuiteJson::build(&result))?),
            }
            Ok(if result.passed() { 0 } else { 1 })
        }
        Command::Table {
            kind,
            d,
            m,
            k,
            workers,
            format,
        } => {
            let started = Instant::now();
            let rendered = match kind.as_str() {
                "extremal" => {
                    let (lo, hi) = parse_range_opt(&d)?.ok_or_else(|| {
                        Error::InvalidInput("extremal tables need a diameter range via --d".into())
                    })?;
                    let opts = SearchOptions {
                        workers,
                        ..SearchOptions::default()
                    };
                    let rows = build_extremal_table(lo, hi, k, &opts)?;
                    match format {
                        TableFormat::Csv => render_csv(&rows)?,
                        TableFormat::Json => to_json(&rows)?,
                    }
                }
                "avgdist" => {
                    let (lo, hi) = parse_range_opt(&m)?.ok_or_else(|| {
                        Error::InvalidInput("avgdist tables need an order range via --m".into())
                    })?;
                    let rows = build_avgdist_table(lo, hi, k)?;
                    match format {
                        TableFormat::Csv => render_csv(&rows)?,
                        TableFormat::Json => to_json(&rows)?,
                    }
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown table kind '{other}'; expected extremal or avgdist"
                    )))
                }
            };
            eprintln!("table built in {:.3}s", started.elapsed().as_secs_f64());
            print!("{rendered}");
            Ok(0)
        }
    }
}

fn render_csv<T: serde::Serialize>(rows: &[T]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Internal(format!("CSV is not UTF-8: {e}")))
}

/// Usage and parse problems exit 2; failed verifications and broken
/// certificates exit 1.
fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_)
        | Error::InvalidSpec(_)
        | Error::InvalidElement(_)
        | Error::InvalidOrder(_)
        | Error::InvalidInput(_)
        | Error::OutOfDomain(_)
        | Error::NoValidSet(_)
        | Error::NoGapExpected(_) => 2,
        Error::NotStronglyConnected(_)
        | Error::NoCertificate(_)
        | Error::UndefinedAverage(_)
        | Error::CertificationFailure(_)
        | Error::Internal(_) => 1,
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            process::exit(exit_code(&err));
        }
    }
}
