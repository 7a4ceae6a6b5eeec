//! `coxinv`: root data, Coxeter elements, weight multiplicities, and the
//! polynomiality classification of torus-invariant rings, as deterministic
//! JSON/TSV reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use coxinv::report::{
    self, canonical_json, classify_report, enumerate_report, OutputFormat, THREADS_ENV,
};
use coxinv::verify::{paper_report, VerifyOptions};
use coxinv::{Family, RootSystem, Weight, DEFAULT_RANK_CAP, DEFAULT_WEYL_CAP};

#[derive(Parser)]
#[command(
    name = "coxinv",
    version,
    about = "Exact classification of torus-invariant rings of flag varieties by Coxeter semistability"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SystemArgs {
    /// Simple family: A, B, C, D, E, F, or G
    #[arg(long)]
    family: String,
    /// Rank within the family
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format: json (canonical, key-sorted) or tsv
    #[arg(long, default_value = "json")]
    format: String,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, positive roots, fundamental weights, ρ, highest long root
    Roots {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Distinct Coxeter elements with canonical words, lengths, descent sets
    Coxeter {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Weight multiplicity of μ in V(λ), optionally cross-checked
    Multiplicity {
        #[command(flatten)]
        system: SystemArgs,
        /// Highest weight λ, comma-separated fundamental-weight coordinates
        #[arg(long)]
        highest: String,
        /// Weight μ, comma-separated fundamental-weight coordinates
        #[arg(long)]
        weight: String,
        /// Also evaluate the alternating-sum oracle and compare
        #[arg(long)]
        oracle: bool,
        /// Cap on |W| for the oracle
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Indecomposable Coxeter-semistable characters up to a height bound
    Enumerate {
        #[command(flatten)]
        system: SystemArgs,
        /// Maximum total simple-root coefficient of a character
        #[arg(long)]
        height_bound: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate, then attach the full ring verdict to every character
    Classify {
        #[command(flatten)]
        system: SystemArgs,
        /// Maximum total simple-root coefficient of a character
        #[arg(long)]
        height_bound: i64,
        /// Hilbert prefix length D: h(0..=D)
        #[arg(long, default_value_t = 4)]
        degree_bound: u32,
        /// Cap on |W| for the internal oracle cross-check
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the complete verification suite; exit 0 iff every check passes
    VerifyPaper {
        /// Upper rank for the classical-family sweeps
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        /// Cap on |W| for oracle-backed checks
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: usize,
        /// Hilbert prefix length for the verdict sweeps
        #[arg(long, default_value_t = 4)]
        degree_bound: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Roots { system, output } => {
            let rs = build_system(&system)?;
            let format = parse_format(&output)?;
            let body = match format {
                OutputFormat::Json => canonical_json(&report::roots_value(&rs)),
                OutputFormat::Tsv => report::roots_tsv(&rs),
            };
            emit(&output, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Coxeter { system, output } => {
            let rs = build_system(&system)?;
            let format = parse_format(&output)?;
            let value =
                report::coxeter_value(&rs, DEFAULT_RANK_CAP).map_err(|e| e.to_string())?;
            let body = match format {
                OutputFormat::Json => canonical_json(&value),
                OutputFormat::Tsv => coxeter_tsv(&value),
            };
            emit(&output, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Multiplicity {
            system,
            highest,
            weight,
            oracle,
            weyl_cap,
            output,
        } => {
            let rs = build_system(&system)?;
            let lambda = parse_weight(&highest, rs.rank())?;
            let mu = parse_weight(&weight, rs.rank())?;
            let value = report::multiplicity_value(&rs, &lambda, &mu, oracle, weyl_cap)
                .map_err(|e| e.to_string())?;
            let format = parse_format(&output)?;
            let body = match format {
                OutputFormat::Json => canonical_json(&value),
                OutputFormat::Tsv => multiplicity_tsv(&value),
            };
            emit(&output, &body)?;
            if oracle && value["oracle_match"] == serde_json::json!(false) {
                eprintln!("multiplicity: oracle mismatch");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            system,
            height_bound,
            output,
        } => {
            let rs = build_system(&system)?;
            let report = enumerate_report(&rs, height_bound, DEFAULT_RANK_CAP)
                .map_err(|e| e.to_string())?;
            let body = report.render(parse_format(&output)?);
            emit(&output, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            system,
            height_bound,
            degree_bound,
            weyl_cap,
            output,
        } => {
            let rs = build_system(&system)?;
            let threads = coxinv::parallel::thread_count_from_env(THREADS_ENV, 64);
            let report = classify_report(
                &rs,
                height_bound,
                degree_bound,
                weyl_cap,
                DEFAULT_RANK_CAP,
                threads,
            )
            .map_err(|e| e.to_string())?;
            let body = report.render(parse_format(&output)?);
            emit(&output, &body)?;
            if !report.all_pass() {
                for check in report.failed_checks() {
                    eprintln!(
                        "classify: cross-check failed: {} expected {} got {}",
                        check.name, check.expected, check.actual
                    );
                }
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper {
            max_rank,
            weyl_cap,
            degree_bound,
            output,
        } => {
            let opts = VerifyOptions {
                max_rank,
                weyl_cap,
                degree_bound,
                threads: coxinv::parallel::thread_count_from_env(THREADS_ENV, 64),
                ..VerifyOptions::default()
            };
            let report = paper_report(opts).map_err(|e| e.to_string())?;
            let body = report.render(parse_format(&output)?);
            emit(&output, &body)?;
            let passed = report.checks.iter().filter(|c| c.pass).count();
            let summary = format!("verify-paper: {passed}/{} checks passed", report.checks.len());
            let mut lines = String::new();
            for check in &report.checks {
                lines.push_str(&format!(
                    "[{}] {} expected={} actual={}\n",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.name,
                    check.expected,
                    check.actual
                ));
            }
            // per-check lines go wherever the report body does not
            if output.out.is_some() {
                print!("{lines}");
                println!("{summary}");
            } else {
                eprint!("{lines}");
                eprintln!("{summary}");
            }
            if report.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn build_system(args: &SystemArgs) -> Result<RootSystem, String> {
    let family: Family = args.family.parse()?;
    RootSystem::new(family, args.rank).map_err(|e| e.to_string())
}

fn parse_format(output: &OutputArgs) -> Result<OutputFormat, String> {
    output.format.parse()
}

fn parse_weight(text: &str, rank: usize) -> Result<Weight, String> {
    let coords: Vec<i64> = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad weight coordinate {part:?}"))
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != rank {
        return Err(format!(
            "expected {rank} coordinates, got {}",
            coords.len()
        ));
    }
    Ok(Weight::new(coords))
}

fn emit(output: &OutputArgs, body: &str) -> Result<(), String> {
    match &output.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            file.write_all(body.as_bytes())
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(())
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn coxeter_tsv(value: &serde_json::Value) -> String {
    let mut out = String::new();
    out.push_str(&format!("count\t{}\n", value["count"]));
    out.push_str("element\tword\tlength\tdescents\n");
    for e in value["elements"].as_array().into_iter().flatten() {
        out.push_str(&format!(
            "element\t{}\t{}\t{}\n",
            join_json_ints(&e["word"]),
            e["length"],
            join_json_ints(&e["descents"]),
        ));
    }
    out
}

fn multiplicity_tsv(value: &serde_json::Value) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "multiplicity\t{}\t{}\t{}\n",
        join_json_ints(&value["highest_weight"]),
        join_json_ints(&value["weight"]),
        value["multiplicity"]
    ));
    if let Some(oracle) = value.get("oracle") {
        out.push_str(&format!(
            "oracle\t{oracle}\t{}\n",
            value["oracle_match"]
        ));
    }
    out
}

fn join_json_ints(value: &serde_json::Value) -> String {
    value
        .as_array()
        .map(|a| {
            a.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .unwrap_or_default()
}
