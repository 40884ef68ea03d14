//! `ekr`: generate complexes, check their properties and verify EKR claims, writing
//! reproducible JSON reports.

mod commands;
mod manifest;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ekr_core::EkrError;

#[derive(Parser, Debug)]
#[command(name = "ekr", version, about = "Exact EKR verification for pure simplicial complexes")]
pub struct Cli {
    /// Worker threads for the searches (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a generated complex as JSON.
    Generate {
        #[command(subcommand)]
        kind: Generator,
    },
    /// Report structural properties of a complex.
    Check(InputArg),
    /// Decide whether a complex is (strict, t-intersecting) pure-EKR.
    Verify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Also decide whether stars are the only maximum families.
        #[arg(long)]
        strict: bool,
        /// Largest number of maximum families enumerated for --strict.
        #[arg(long, default_value_t = ekr_core::ekr::DEFAULT_STRICT_CAP)]
        cap: usize,
    },
    /// Verify a whole family of generated complexes.
    Sweep {
        #[arg(long, value_enum)]
        family: SweepFamily,
        /// Dissections: largest n+m.
        #[arg(long, default_value_t = 7)]
        max_nm: usize,
        /// Allow n+m >= 8, which can take much longer.
        #[arg(long)]
        deep: bool,
        /// Cross-polytopes: the dimensions d of the boundaries of the (d+1)-cross-polytope.
        #[arg(long, default_value_t = 3)]
        min_dim: usize,
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        /// A number, or `d-1` for one less than the dimension of each complex.
        #[arg(long, default_value = "1")]
        t: String,
    },
    /// Enumerate dual pairs of a complex or compare them with a cross-polytope.
    Dualpairs {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        mode: DualPairMode,
        #[arg(long, default_value_t = 3)]
        max_generator_size: usize,
        #[arg(long, default_value_t = 4)]
        max_antichain: usize,
        #[arg(long, default_value_t = 512)]
        max_faces: usize,
    },
    /// Push an intersecting family with base edge {a, b} into the star of a or b.
    Reduce {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Facets of the family as a JSON list of vertex lists, e.g. `[[0,2,4],[0,2,5]]`.
        #[arg(long)]
        family: String,
    },
}

#[derive(Args, Debug)]
pub struct InputArg {
    /// Complex JSON file; standard input when absent or `-`.
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct DualPairMode {
    #[arg(long)]
    enumerate: bool,
    #[arg(long)]
    check_crosspolytope_conjecture: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    Dissection,
    Crosspolytope,
}

#[derive(Subcommand, Debug)]
pub enum Generator {
    /// All r-subsets of n vertices.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Boundary of the cross-polytope of the given dimension.
    Crosspolytope {
        #[arg(long)]
        dim: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Complex of (m+2)-angulations of the (mn+2)-gon.
    Dissection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Clique complex of the complete multipartite graph.
    Kpartite {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    /// A d-simplex with one extra facet glued to each of its ridges.
    SimplexNeighbors {
        #[arg(long)]
        dim: usize,
    },
    /// Two d-simplices on a common ridge with k extra facets around each of its ridges.
    Bipyramid {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        k: usize,
    },
    /// Join of the input with two points.
    Suspension(InputArg),
    /// Join of the input with the 4-cycle.
    DoubleSuspension(InputArg),
    Icosahedron,
    /// Join of two complexes read from files.
    Join {
        left: PathBuf,
        right: PathBuf,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<EkrError> for Failure {
    fn from(e: EkrError) -> Self {
        let code = match e {
            EkrError::CapExceeded { .. } => 3,
            EkrError::Internal(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Text to print and the exit code.
pub struct Output {
    pub text: String,
    pub code: u8,
}

pub fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::input(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn face_width() -> Result<u32, Failure> {
    match std::env::var("EKR_FACE_WIDTH") {
        Err(_) => Ok(128),
        Ok(s) => match s.trim() {
            "32" => Ok(32),
            "64" => Ok(64),
            "128" => Ok(128),
            other => Err(Failure::input(format!("EKR_FACE_WIDTH must be 32, 64 or 128, got {other:?}"))),
        },
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::input("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::input(format!("cannot start thread pool: {e}")))?;
    }
    match face_width()? {
        32 => commands::run::<u32>(&cli.command),
        64 => commands::run::<u64>(&cli.command),
        _ => commands::run::<u128>(&cli.command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.text),
                None => io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
