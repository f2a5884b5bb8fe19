use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quatseq_cli::pipeline::{analyze_pair, AnalyzeOptions};
use quatseq_cli::report::{csv_header, csv_row, text_summary, BatchRecord};
use quatseq_cli::selftest;

/// Analyzer for quaternary sequences built from generalized cyclotomic
/// classes modulo pq: Galois-ring spectra, linear complexity by three
/// independent routes, and trace-form verification.
#[derive(Parser)]
#[command(name = "quatseq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, Default, ValueEnum)]
enum Format {
    /// One JSON object per report.
    #[default]
    Json,
    /// Flat columns; coefficient lists quoted. No spectrum embed.
    Csv,
    /// Human-readable summary lines.
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single parameter pair.
    Analyze {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// Also compute linear complexity from the recurrence definition.
        #[arg(long)]
        oracle: bool,
        /// Check the trace-sum form against the sequence at every index.
        #[arg(long)]
        verify_trace: bool,
        /// Embed the full spectrum in the report (JSON output only).
        #[arg(long)]
        emit_spectrum: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Analyze one "p q" pair per line of a file; '#' starts a comment.
    Batch {
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        verify_trace: bool,
        #[arg(long)]
        emit_spectrum: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the built-in verification suites.
    Selftest {
        /// Seed for the randomized equivalence checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(records: &[BatchRecord], format: Format) {
    match format {
        Format::Json => {
            for record in records {
                println!(
                    "{}",
                    serde_json::to_string(record).expect("reports serialize")
                );
            }
        }
        Format::Csv => {
            if !records.is_empty() {
                println!("{}", csv_header());
            }
            for record in records {
                println!("{}", csv_row(record));
            }
        }
        Format::Text => {
            for record in records {
                println!("{}", text_summary(record));
            }
        }
    }
}

fn run_analyze(p: u64, q: u64, opts: AnalyzeOptions, format: Format) -> ExitCode {
    match analyze_pair(p, q, opts) {
        Ok(report) => {
            let ok = report.consistent();
            emit(&[BatchRecord::Ok(report)], format);
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: cross-checks disagree");
                ExitCode::from(3)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run_batch(path: &PathBuf, opts: AnalyzeOptions, format: Format) -> ExitCode {
    let contents = match fs::read_to_string(path) {
        Ok(contents) => contents,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let mut records = Vec::new();
    let mut all_consistent = true;
    for (lineno, raw) in contents.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [a, b] => match (a.parse::<u64>(), b.parse::<u64>()) {
                (Ok(p), Ok(q)) => Ok((p, q)),
                _ => Err(format!("line {}: expected two integers", lineno + 1)),
            },
            _ => Err(format!(
                "line {}: expected \"p q\", got {:?}",
                lineno + 1,
                line
            )),
        };
        match parsed {
            Ok((p, q)) => match analyze_pair(p, q, opts) {
                Ok(report) => {
                    all_consistent &= report.consistent();
                    records.push(BatchRecord::Ok(report));
                }
                Err(error) => records.push(BatchRecord::Err { p, q, error }),
            },
            Err(error) => records.push(BatchRecord::Err { p: 0, q: 0, error }),
        }
    }
    emit(&records, format);
    if all_consistent {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: cross-checks disagree for at least one pair");
        ExitCode::from(3)
    }
}

fn run_selftest(seed: u64) -> ExitCode {
    let outcomes = selftest::run(seed);
    for outcome in &outcomes {
        if outcome.passed {
            println!("ok   {}", outcome.name);
        } else {
            println!("FAIL {}: {}", outcome.name, outcome.detail);
        }
    }
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.name.as_str())
        .collect();
    if failed.is_empty() {
        println!("selftest: all {} checks passed", outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!(
            "selftest: {} of {} checks failed: {}",
            failed.len(),
            outcomes.len(),
            failed.join(", ")
        );
        ExitCode::from(3)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            p,
            q,
            oracle,
            verify_trace,
            emit_spectrum,
            format,
        } => run_analyze(
            p,
            q,
            AnalyzeOptions {
                oracle,
                verify_trace,
                emit_spectrum,
            },
            format,
        ),
        Command::Batch {
            pairs,
            oracle,
            verify_trace,
            emit_spectrum,
            format,
        } => run_batch(
            &pairs,
            AnalyzeOptions {
                oracle,
                verify_trace,
                emit_spectrum,
            },
            format,
        ),
        Command::Selftest { seed } => run_selftest(seed),
    }
}
