use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use power_spectra::commands::{self, CommandError, NRange, OutputFormat, SweepSpec, VerifyRanges};
use power_spectra::powergraph::PowerGraph;
use power_spectra::spectra::{spectral_radius_power_iteration, symmetric_eigenvalues};
use power_spectra::{bounds, Family, GroupSpec, MatrixKind, SquareMatrix};

#[derive(Parser)]
#[command(name = "power-spectra", version, about = "Power graphs of finite groups and their spectral radius bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the adjacency (or distance) matrix of a power graph in canonical order.
    Graph {
        #[command(flatten)]
        group: GroupArgs,
        /// Emit the distance matrix instead of the adjacency matrix.
        #[arg(long)]
        distance: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues and spectral radius of a power graph or of a matrix file.
    Spectra {
        #[command(flatten)]
        group: OptGroupArgs,
        /// Matrix file in the format written by `graph`.
        #[arg(long, conflicts_with = "family")]
        matrix: Option<PathBuf>,
        #[arg(long, default_value = "adjacency")]
        kind: MatrixKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounds, exact radius and prior bounds for one instance or a range of n.
    Bounds(RangeArgs),
    /// Like `bounds`, CSV by default.
    Sweep(RangeArgs),
    /// Recompute the worked example values.
    Reproduce {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the structural and spectral invariants over parameter ranges.
    Verify {
        /// Smaller ranges.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Args)]
struct OptGroupArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long)]
    family: Family,
    /// `N` or `A..B` (inclusive); orders `pq` for the semiprime family.
    #[arg(long)]
    n: Option<NRange>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, default_value = "adjacency")]
    kind: MatrixKind,
    #[arg(long)]
    format: Option<OutputFormat>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CommandError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run_range(args: RangeArgs, default_format: OutputFormat) -> Result<(), CommandError> {
    let format = args.format.unwrap_or(default_format);
    let reports = match (args.family, args.p, args.q, args.n) {
        (Family::SemiprimeCyclic, Some(p), Some(q), None) => {
            vec![bounds::bound_report(&GroupSpec::semiprime(p, q)?, args.kind)?]
        }
        (_, None, None, Some(range)) => {
            commands::sweep(&SweepSpec { family: args.family, range: range.0, kind: args.kind, format })?
        }
        _ => {
            return Err(CommandError::Usage(
                "give --n N|A..B, or --p and --q for the semiprime family".into(),
            ))
        }
    };
    let text = match format {
        OutputFormat::Csv => commands::to_csv(&reports),
        OutputFormat::Json => commands::to_json(&reports),
    };
    emit(&text, args.out.as_ref())?;
    let failures = commands::sandwich_failures(&reports);
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CommandError::Verification(failures.join("; ")))
    }
}

fn run(cli: Cli) -> Result<(), CommandError> {
    match cli.command {
        Command::Graph { group, distance, out } => {
            let g = GroupSpec::from_parts(group.family, group.n, group.p, group.q)?;
            let pg = PowerGraph::new(g)?;
            let kind = if distance { MatrixKind::Distance } else { MatrixKind::Adjacency };
            emit(&pg.matrix(kind).to_text(), out.as_ref())
        }
        Command::Spectra { group, matrix, kind, out } => {
            let m = match (matrix, group.family) {
                (Some(path), _) => SquareMatrix::from_text(&std::fs::read_to_string(path)?)?,
                (None, Some(family)) => {
                    let g = GroupSpec::from_parts(family, group.n, group.p, group.q)?;
                    PowerGraph::new(g)?.matrix(kind).clone()
                }
                (None, None) => return Err(CommandError::Usage("give --family or --matrix".into())),
            };
            let jacobi = symmetric_eigenvalues(&m)?;
            let power = spectral_radius_power_iteration(&m)?;
            let value = serde_json::json!({
                "dim": m.dim(),
                "eigenvalues": jacobi.eigenvalues,
                "radius": jacobi.radius,
                "multiplicity": jacobi.radius_multiplicity,
                "power_iteration_radius": power.radius,
            });
            emit(&commands::to_json(&value), out.as_ref())
        }
        Command::Bounds(args) => run_range(args, OutputFormat::Json),
        Command::Sweep(args) => run_range(args, OutputFormat::Csv),
        Command::Reproduce { out } => {
            let lines = commands::reproduce()?;
            emit(&commands::format_repro(&lines), out.as_ref())?;
            let bad: Vec<_> = lines.iter().filter(|l| !l.pass).map(|l| l.label.clone()).collect();
            if bad.is_empty() {
                Ok(())
            } else {
                Err(CommandError::Mismatch(bad.join(", ")))
            }
        }
        Command::Verify { quick, out } => {
            let ranges = if quick { VerifyRanges::quick() } else { VerifyRanges::full() };
            let outcomes = commands::verify(&ranges)?;
            emit(&commands::format_verify(&outcomes), out.as_ref())?;
            let bad: Vec<_> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.name).collect();
            if bad.is_empty() {
                Ok(())
            } else {
                Err(CommandError::Verification(bad.join(", ")))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
