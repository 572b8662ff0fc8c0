//! `truss`: build, check and report on finite trusses, modules, extensions
//! and braces.

mod commands;
mod subset;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use truss_core::check::{CheckPolicy, DEFAULT_SAMPLES, DEFAULT_SEED};
use truss_core::report::Report;

#[derive(Parser, Debug)]
#[command(name = "truss", version, about = "Finite heaps, trusses, paragons, extensions and braces")]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Samples per law when a structure is too large for exhaustive checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every law of a structure file, law by law.
    Validate { file: PathBuf },
    /// Units-paragon scan over T(Z_n) for n = 2..N_MAX.
    ScanUnits {
        #[arg(default_value_t = 64)]
        n_max: usize,
    },
    /// Build T[M;e] and check all of its structural clauses.
    Extend {
        /// Truss file for the base.
        base: PathBuf,
        /// Module file over the base, or `regular` for the base acting on itself.
        module: String,
        /// Anchor element of the module (index or label).
        e: String,
        /// Write the extension truss here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Quotient of a heap, truss or module by a subset.
    Quotient {
        file: PathBuf,
        /// Comma-separated indices or labels, e.g. `1,3` or `(0,1),(1,1)`.
        subset: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Brace of a brace-type truss (or a brace file): socle, ideals, paragons.
    Brace {
        file: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Identify a group, the multiplicative group of a brace, or the units of a truss.
    Identify { file: PathBuf },
    /// Emit a catalog structure as JSON: zn N | za A N | group-ring N G | trunc-poly K N | end N | za-ext.
    Catalog {
        family: String,
        params: Vec<usize>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// The full acceptance campaign, including a determinism re-run.
    Suite,
}

fn command_line() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!("truss {}", args.join(" ")).trim_end().to_string()
}

fn run(cli: &Cli) -> Result<Report> {
    let policy = CheckPolicy::with_seed(cli.seed, cli.samples);
    let mut report = Report::new(command_line(), &policy);
    match &cli.command {
        Command::Validate { file } => commands::validate(&mut report, &policy, file)?,
        Command::ScanUnits { n_max } => commands::scan_units(&mut report, *n_max)?,
        Command::Extend { base, module, e, out } => commands::extend(&mut report, &policy, base, module, e, out.as_deref())?,
        Command::Quotient { file, subset, out } => commands::quotient(&mut report, &policy, file, subset, out.as_deref())?,
        Command::Brace { file, out } => commands::brace(&mut report, &policy, file, out.as_deref())?,
        Command::Identify { file } => commands::identify(&mut report, &policy, file)?,
        Command::Catalog { family, params, out } => commands::catalog(&mut report, family, params, out.as_deref())?,
        Command::Suite => commands::suite(&mut report, &policy),
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match cli.format {
        Format::Table => print!("{}", report.to_table()),
        Format::Json => print!("{}", report.to_json()),
    }
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        let failed: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
        eprintln!("{}", serde_json::json!({ "failed": failed }));
        ExitCode::from(1)
    }
}
