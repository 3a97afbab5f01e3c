//! Command-line driver: every library operation behind one binary with
//! uniform output formats and a one-shot verification pipeline.
//!
//! Exit codes: 0 on success or a passing certificate, 1 on a failing
//! certificate or verification stage, 2 on a usage error. Output on
//! standard output (or `--out`) is bit-identical across runs for an
//! identical invocation; stage timings go to standard error only.

use std::fs;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};

mod complex_io;
mod render;
mod verify;

use render::Format;

#[derive(Parser)]
#[command(
    name = "dmcoh",
    version,
    about = "Exact equivariant cohomology data of genus-zero moduli spaces with a prime-order rotation"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Ascii,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Ascii => Format::Ascii,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions of the moduli cohomology basis
    Betti {
        #[arg(long)]
        p: u64,
        /// Truncate the enumeration at this cohomological degree
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Orbit decomposition of the basis under the rotation
    Orbits {
        #[arg(long)]
        p: u64,
    },
    /// Cyclic group cohomology with a chosen coefficient module
    GroupCohomology {
        #[arg(long)]
        p: u64,
        /// trivial, regular, or perm:(1 2 3)(4 5 6)
        #[arg(long)]
        rep: String,
        #[arg(long)]
        max_i: Option<usize>,
    },
    /// The second page of the spectral sequence
    E2 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        max_i: Option<usize>,
    },
    /// Certificate for the collapse of the spectral sequence
    Collapse {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        window: usize,
    },
    /// Certificate for injectivity of restriction joined with localization
    Inject {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        window: usize,
    },
    /// The rotation-fixed marked configurations, in exact coordinates
    FixedPoints {
        #[arg(long)]
        p: u64,
    },
    /// Stable trees with labeled marked points
    Trees {
        #[arg(long)]
        p: u64,
    },
    /// Symbolic degree bound for candidate rotation maps
    MoebiusDegree {
        #[arg(long)]
        p: u64,
    },
    /// Equivariant cohomology of a finite complex from a JSON file
    Borel {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Run the full verification pipeline
    VerifyAll {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        window: usize,
    },
}

/// Errors split by their exit code.
pub enum CliError {
    /// Exit 2: the invocation itself is wrong.
    Usage(String),
    /// Exit 1: the computation ran and failed.
    Failed(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
}

fn require_prime(p: u64) -> Result<(), CliError> {
    if dm_cohomology::is_prime(p) {
        Ok(())
    } else {
        Err(CliError::usage(format!("p must be prime, got {p}")))
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            process::exit(2);
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let format: Format = cli.format.into();
    let (output, code) = match cli.command {
        Command::Betti { p, max_degree } => {
            require_prime(p)?;
            (render::betti(p, max_degree, format)?, 0)
        }
        Command::Orbits { p } => {
            require_prime(p)?;
            (render::orbits(p, format)?, 0)
        }
        Command::GroupCohomology { p, rep, max_i } => {
            require_prime(p)?;
            (render::group_cohomology(p, &rep, max_i, format)?, 0)
        }
        Command::E2 { p, max_i } => {
            require_prime(p)?;
            (render::e2(p, max_i, format)?, 0)
        }
        Command::Collapse { p, window } => {
            require_prime(p)?;
            render::collapse(p, window, format)?
        }
        Command::Inject { p, window } => {
            require_prime(p)?;
            render::inject(p, window, format)?
        }
        Command::FixedPoints { p } => {
            require_prime(p)?;
            (render::fixed_points(p, format)?, 0)
        }
        Command::Trees { p } => {
            require_prime(p)?;
            (render::trees(p, format)?, 0)
        }
        Command::MoebiusDegree { p } => {
            require_prime(p)?;
            render::moebius_degree(p, format)?
        }
        Command::Borel { input, max_degree } => (render::borel(&input, max_degree, format)?, 0),
        Command::VerifyAll { p, window } => {
            require_prime(p)?;
            let report = verify::verify_all(p, window).map_err(CliError::Failed)?;
            let code = i32::from(!report.pass);
            (render::verify_all_output(&report, format), code)
        }
    };
    match cli.out {
        Some(path) => fs::write(&path, output)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{output}"),
    }
    Ok(code)
}
