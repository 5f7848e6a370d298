mod commands;
mod matrix_file;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "sectoria", version, about = "Numerical ranges, sectorial regions and Euler semigroup checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
#[group(required = true, multiple = false)]
pub struct AngleArg {
    /// Semi-angle in radians, in [0, π/2).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Semi-angle in degrees, in [0, 90).
    #[arg(long = "alpha-deg")]
    pub alpha_deg: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Sample region boundaries to CSV and optionally overlay them in an SVG.
    Regions {
        #[command(flatten)]
        angle: AngleArg,
        /// Comma-separated families: S, C, Omega, Q, L, D, B, Disk.
        #[arg(long, default_value = "L,Omega,Q,D,C")]
        families: String,
        /// Boundary samples per family.
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[arg(long = "out-csv")]
        out_csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Numerical range of a matrix file, optionally tested against a region.
    Numrange {
        #[arg(long)]
        matrix: PathBuf,
        /// Number of support directions.
        #[arg(long, default_value_t = 720)]
        angles: usize,
        #[arg(long)]
        region: Option<String>,
        #[arg(long)]
        alpha: Option<f64>,
        /// Containment tolerance added to the hull gap.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the full verification suite.
    Verify {
        /// JSON run configuration; individual flags override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        alphas: Option<Vec<f64>>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long)]
        angles: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Euler approximation error table for one generator.
    Euler {
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        #[arg(long, default_value_t = 1)]
        nmin: u64,
        #[arg(long, default_value_t = 4096)]
        nmax: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Use this generator instead of a random one; it must be α-sectorial.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Exit 1 for failed verification, 2 for bad input.
pub enum Failure {
    Usage(anyhow::Error),
    Verification(String),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Regions {
            angle,
            families,
            samples,
            out_csv,
            svg,
        } => commands::regions(angle, &families, samples, &out_csv, svg.as_deref()),
        Command::Numrange {
            matrix,
            angles,
            region,
            alpha,
            tol,
            out,
        } => commands::numrange(&matrix, angles, region.as_deref(), alpha, tol, &out),
        Command::Verify {
            config,
            seed,
            dims,
            alphas,
            trials,
            instances,
            angles,
            out,
        } => {
            let overrides = commands::VerifyOverrides {
                seed,
                dims,
                alphas,
                trials,
                instances,
                angles,
            };
            commands::verify(config.as_deref(), overrides, out.as_deref())
        }
        Command::Euler {
            dim,
            alpha,
            t,
            nmin,
            nmax,
            seed,
            matrix,
            out,
        } => commands::euler(dim, alpha, t, nmin, nmax, seed, matrix.as_deref(), &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
