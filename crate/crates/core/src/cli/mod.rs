//! The `gue` command line: tables as CSV or JSON and the verification suites.

mod commands;
mod record;
mod verify;

pub use commands::{
    cmd_density, cmd_harer_zagier, cmd_moments, cmd_rosettes, cmd_sample, cmd_wilson, default_sample_times,
    DEFAULT_SEED,
};
pub use record::{Cell, Format, OutputRecord};
pub use verify::{cmd_verify, Budget, Suite};

use crate::error::Error;
use crate::observables::MatrixSize;
use clap::{Parser, Subcommand};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gue",
    version,
    about = "Exact finite-N GUE observables and their cross-checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// I(t, N) on a uniform t grid, plus its exact coefficients.
    Wilson {
        #[arg(long = "N", default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t_min: f64,
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
    /// rho_N(lambda) with the semicircle for reference.
    Density {
        #[arg(long = "N", default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
        lambda_min: f64,
        #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
        lambda_max: f64,
        #[arg(long, default_value_t = 60)]
        steps: usize,
    },
    /// Exact even moments <Tr H^{2l} / N>.
    Moments {
        #[arg(long = "N", default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 8)]
        l_max: usize,
    },
    /// Rosette counts C_g(l) by genus.
    Rosettes {
        #[arg(long, default_value_t = 4)]
        l: usize,
        #[arg(long)]
        g: Option<usize>,
    },
    /// Harer-Zagier series coefficients, closed form against rosette counts.
    HarerZagier {
        #[arg(long = "N", default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 7)]
        p_max: usize,
    },
    /// Monte Carlo Wilson loop against the exact value.
    Sample {
        #[arg(long = "N", default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Comma-separated times; defaults to 0, 0.5, ..., 4.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        t: Vec<f64>,
    },
    /// Run an invariant suite; exit status 1 when any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Lower the half-order budget.
        #[arg(long)]
        l_max: Option<usize>,
        /// Lower the matrix-size budget.
        #[arg(long = "N")]
        n: Option<u32>,
    },
}

fn execute(command: &Command) -> crate::Result<(OutputRecord, bool)> {
    let size = MatrixSize::new;
    let table = match *command {
        Command::Wilson { n, t_min, t_max, steps } => cmd_wilson(size(n)?, t_min, t_max, steps)?,
        Command::Density {
            n,
            lambda_min,
            lambda_max,
            steps,
        } => cmd_density(size(n)?, lambda_min, lambda_max, steps)?,
        Command::Moments { n, l_max } => cmd_moments(size(n)?, l_max)?,
        Command::Rosettes { l, g } => cmd_rosettes(l, g)?,
        Command::HarerZagier { n, p_max } => cmd_harer_zagier(size(n)?, p_max)?,
        Command::Sample {
            n,
            samples,
            seed,
            ref t,
        } => cmd_sample(size(n)?, samples, seed, t)?,
        Command::Verify { suite, l_max, n } => return cmd_verify(suite, Budget { l_max, n_max: n }),
    };
    Ok((table, true))
}

/// Parses `args` (program name first), runs the command and writes its
/// output to `stdout` or `--out`. Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return e.exit_code();
        }
    };
    let (record, passed) = match execute(&cli.command) {
        Ok(done) => done,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return match e {
                Error::InvalidMatrixSize | Error::InvalidArgument(_) | Error::OverBudget { .. } => EXIT_USAGE,
                _ => EXIT_FAILURE,
            };
        }
    };
    let text = match record.render(cli.format) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAILURE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_FAILURE;
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}
