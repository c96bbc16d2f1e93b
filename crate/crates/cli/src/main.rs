//! Command-line front end: `analyze` runs the full invariant pipeline on
//! an arrangement file or a built-in family and emits a report; `family`
//! lists the built-in generators and writes their arrangement files.
//!
//! Exit codes: 0 success, 1 validation error, 2 I/O error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arrcomb::analysis::{analyze_arrangement, analyze_incidence, AnalysisOptions};
use arrcomb::arrangement::FamilyTag;
use arrcomb_cli::formats::{ArrangementFile, BuiltInput};
use arrcomb_cli::report::Report;
use arrcomb_cli::CliError;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "arrcomb",
    version,
    about = "Exact invariants and Milnor-fiber formality verdicts for central \
             complex hyperplane arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline (lattice, beta_p, multinets, resonance,
    /// Delta_1, verdict) and emit a report
    Analyze(AnalyzeArgs),
    /// List the built-in families or emit one as an arrangement file
    Family {
        #[command(subcommand)]
        command: FamilyCommand,
    },
    /// Print the version
    Version,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Arrangement file to analyze (omit when using --family)
    input: Option<PathBuf>,
    /// Built-in family: pencil, braid3, monomial, hessian
    #[arg(long)]
    family: Option<String>,
    /// Number of lines for the pencil family
    #[arg(long)]
    n: Option<u32>,
    /// Degree parameter for the monomial family
    #[arg(long)]
    m: Option<u32>,
    /// Primes for the Aomoto-Betti table
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    primes: Vec<u64>,
    /// Skip the multinet search
    #[arg(long)]
    no_enumerate: bool,
    /// Largest class count searched for nets: 3 or 4
    /// (default: 4 when 4 divides n, else 3)
    #[arg(long)]
    max_k: Option<u8>,
    /// Emit the report as JSON
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit the report as text (the default)
    #[arg(long)]
    text: bool,
    /// Write the report to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// List the available family tags
    List,
    /// Write the arrangement file of a family
    Emit {
        /// Family tag: pencil, braid3, monomial, hessian
        tag: String,
        /// Number of lines for the pencil family
        #[arg(long)]
        n: Option<u32>,
        /// Degree parameter for the monomial family
        #[arg(long)]
        m: Option<u32>,
        /// Write to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Family { command } => family(command),
        Command::Version => {
            println!("arrcomb {}", env!("CARGO_PKG_VERSION"));
            Ok(())
        }
    }
}

fn parse_family(tag: &str, n: Option<u32>, m: Option<u32>) -> Result<FamilyTag, CliError> {
    match tag {
        "pencil" => {
            let n = n.ok_or_else(|| CliError::Validation("the pencil family needs --n".into()))?;
            Ok(FamilyTag::Pencil(n))
        }
        "braid3" => Ok(FamilyTag::Braid3),
        "monomial" => {
            let m =
                m.ok_or_else(|| CliError::Validation("the monomial family needs --m".into()))?;
            Ok(FamilyTag::Monomial(m))
        }
        "hessian" => Ok(FamilyTag::Hessian),
        other => Err(CliError::Validation(format!(
            "unknown family `{other}`; available: pencil, braid3, monomial, hessian"
        ))),
    }
}

fn analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let opts = AnalysisOptions {
        primes: args.primes.clone(),
        enumerate: !args.no_enumerate,
        max_k: args.max_k,
    };
    let analysis = match (&args.input, &args.family) {
        (None, Some(tag)) => {
            let family = parse_family(tag, args.n, args.m)?;
            let arr = family
                .build()
                .map_err(|e| CliError::Validation(e.to_string()))?;
            analyze_arrangement(&arr, Some(family), &opts)
                .map_err(|e| CliError::Validation(e.to_string()))?
        }
        (Some(path), None) => {
            let json = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            let file = ArrangementFile::parse(&json)?;
            match file.build()? {
                BuiltInput::Geometric(arr) => analyze_arrangement(&arr, None, &opts)
                    .map_err(|e| CliError::Validation(e.to_string()))?,
                BuiltInput::Combinatorial(inc) => {
                    let rank = inc.combinatorial_rank();
                    analyze_incidence(&file.name, inc, rank, None, &opts)
                        .map_err(|e| CliError::Validation(e.to_string()))?
                }
            }
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Validation(
                "give either an input file or --family, not both".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Validation(
                "nothing to analyze: give an input file or --family".into(),
            ))
        }
    };
    let report = Report::build(&analysis);
    let rendered = if args.json {
        report.to_json()
    } else {
        report.render_text()
    };
    write_output(args.out.as_deref(), &rendered)
}

fn family(command: FamilyCommand) -> Result<(), CliError> {
    match command {
        FamilyCommand::List => {
            println!("pencil --n N      pencil of N >= 3 lines through a point (rank 2)");
            println!("braid3            the rank-3 braid arrangement, 6 hyperplanes");
            println!(
                "monomial --m M    reflection arrangement of G(M,M,3): \
                 (z1^M - z2^M)(z1^M - z3^M)(z2^M - z3^M), 3M hyperplanes"
            );
            println!(
                "hessian           reflection arrangement of the Hessian group: the 12 \
                 lines through the inflection points of a smooth cubic"
            );
            Ok(())
        }
        FamilyCommand::Emit { tag, n, m, out } => {
            let family = parse_family(&tag, n, m)?;
            let arr = family
                .build()
                .map_err(|e| CliError::Validation(e.to_string()))?;
            let file = ArrangementFile::from_arrangement(&arr)?;
            write_output(out.as_deref(), &file.to_json())
        }
    }
}

/// Writes to stdout, or atomically (write + rename) to a path.
fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        None => {
            println!("{content}");
            Ok(())
        }
        Some(path) => {
            let tmp = path.with_extension("tmp");
            let io_err =
                |e: std::io::Error| CliError::Io(format!("cannot write {}: {e}", path.display()));
            fs::write(&tmp, content).map_err(io_err)?;
            fs::rename(&tmp, path).map_err(io_err)?;
            Ok(())
        }
    }
}
