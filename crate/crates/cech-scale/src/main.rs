//! Command-line front end: thin argument handling around the library.

use cech_scale::io::{self, FileError};
use cech_scale::{
    build_complex, cech_scale, cech_scale_naive_with, cech_scale_with, filtration_steps, miniball,
    svg, two_skeleton, SolverOptions,
};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process;

#[derive(Parser)]
#[command(name = "cech-scale", version, about = "Common-point scales of disk systems")]
struct Cli {
    /// Worker threads for the parallel solvers. Default: all cores.
    /// The CECH_SCALE_THREADS environment variable overrides this flag.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimal common-point scale of a disk file.
    Scale {
        input: PathBuf,
        /// Bisection tolerance on the scale.
        #[arg(long, default_value_t = cech_scale::DEFAULT_TOLERANCE, value_parser = positive_real)]
        tolerance: f64,
        /// Bisect the whole system instead of maximizing over triplets.
        #[arg(long)]
        naive: bool,
    },
    /// Write the filtered complex at a scale as a filtration file.
    Filtration {
        input: PathBuf,
        #[arg(long, value_parser = nonneg_real)]
        lambda: f64,
        /// Largest simplex dimension to build.
        #[arg(long = "max-dim", default_value_t = 2)]
        max_dim: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write vertices, edges, and triangles for a system in any dimension.
    Skeleton2 {
        input: PathBuf,
        #[arg(long, value_parser = nonneg_real)]
        lambda: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Smallest enclosing ball of a point file (one "x,y" per line).
    Miniball { input: PathBuf },
    /// Render the rescaled system as an SVG drawing.
    Render {
        input: PathBuf,
        /// Rescaling factor applied to every radius.
        #[arg(long, value_parser = nonneg_real)]
        scale: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the solvers on seeded random systems and emit CSV.
    Bench {
        /// Largest system size; sizes run 10, 20, … up to this value.
        #[arg(long = "max-disks", default_value_t = 100)]
        max_disks: usize,
        /// Systems timed per size.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Ambient dimensions for the triplet-projection timing.
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a filtration file: face-closed prefixes, sorted weights.
    Check { input: PathBuf },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] FileError),
    #[error(transparent)]
    Compute(#[from] cech_scale::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Compute(cech_scale::Error::UnsupportedDimension { .. }) => 3,
            _ => 1,
        }
    }
}

fn positive_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be a positive real number, got {s}"))
    }
}

fn nonneg_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("must be a nonnegative real number, got {s}"))
    }
}

fn configure_threads(flag: Option<usize>) {
    let from_env = std::env::var("CECH_SCALE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0);
    if let Some(n) = from_env.or(flag).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Scale {
            input,
            tolerance,
            naive,
        } => {
            let system = io::parse_disk_file(&std::fs::read_to_string(&input)?)?;
            let options = SolverOptions {
                tolerance,
                ..SolverOptions::default()
            };
            let result = if naive {
                cech_scale_naive_with(&system, &options)?
            } else {
                cech_scale_with(&system, &options)?
            };
            print!("{}", io::format_scale_report(&result));
        }
        Command::Filtration {
            input,
            lambda,
            max_dim,
            out,
        } => {
            let system = io::parse_disk_file(&std::fs::read_to_string(&input)?)?;
            let complex = build_complex(&system, lambda, max_dim)?;
            std::fs::write(&out, io::write_filtration_file(&filtration_steps(&complex)))?;
        }
        Command::Skeleton2 { input, lambda, out } => {
            let system = io::parse_disk_file(&std::fs::read_to_string(&input)?)?;
            let complex = two_skeleton(&system, lambda)?;
            std::fs::write(&out, io::write_filtration_file(&filtration_steps(&complex)))?;
        }
        Command::Miniball { input } => {
            let points = io::parse_point_file(&std::fs::read_to_string(&input)?)?;
            let ball = miniball(&points)?;
            print!(
                "center=({}, {})\nradius={}\n",
                ball.center[0], ball.center[1], ball.radius
            );
        }
        Command::Render { input, scale, out } => {
            let system = io::parse_disk_file(&std::fs::read_to_string(&input)?)?;
            let solved = cech_scale(&system)?;
            // Disks only grow with the scale, so the witness found at the
            // common-point scale stays inside every disk at any larger one.
            let witness = if solved.cech_scale <= scale * (1.0 + 1e-12) + 1e-12 {
                Some(solved.witness)
            } else {
                None
            };
            std::fs::write(&out, svg::render_system_svg(&system, scale, witness)?)?;
        }
        Command::Bench {
            max_disks,
            repeats,
            dims,
            seed,
            out,
        } => {
            let config = cech_scale::bench::BenchConfig {
                max_disks,
                repeats,
                dims,
                seed,
            };
            let csv = cech_scale::bench::write_csv(&cech_scale::bench::run_benchmark(&config));
            match out {
                Some(path) => std::fs::write(&path, csv)?,
                None => print!("{csv}"),
            }
        }
        Command::Check { input } => {
            let steps = io::parse_filtration_file(&std::fs::read_to_string(&input)?)?;
            io::validate_filtration(&steps)?;
            println!("ok: {} simplices", steps.len());
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        process::exit(err.exit_code());
    }
}
