//! `cellres`: batch front end reading a monomial ideal as JSON and writing a
//! JSON report. Exit status 0 means success or a true verdict, 1 a false
//! verdict, 2 bad input or a violated precondition.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cellres", version, about = "Cellular resolutions and residue currents of Artinian monomial ideals")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Ideal as JSON ({"n": .., "generators": [[..], ..]}); stdin if omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Complex supporting the resolution: hull, scarf, taylor or file:<path>.
    #[arg(long, global = true, default_value = "hull")]
    pub complex: ComplexSource,
    /// Lift base for the hull construction, at least (n+1)!+1.
    #[arg(long, global = true)]
    pub t: Option<u64>,
    /// Flip lower-dimensional face orientations at random with this seed
    /// before computing.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexSource {
    Hull,
    Scarf,
    Taylor,
    File(PathBuf),
}

impl FromStr for ComplexSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hull" => Ok(Self::Hull),
            "scarf" => Ok(Self::Scarf),
            "taylor" => Ok(Self::Taylor),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(Self::File(PathBuf::from(path))),
                _ => Err(format!("expected hull, scarf, taylor or file:<path>, got {s:?}")),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Order {
    P,
    Q,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators in descending lex order.
    Generators,
    /// Hull complex with face labels and coordinates.
    Hull {
        /// Report coordinates after projection onto the simplex of pure powers.
        #[arg(long)]
        embedded: bool,
    },
    /// Scarf complex.
    Scarf,
    /// Matrices of the cellular free complex.
    Resolve,
    /// Acyclicity of every subcomplex below a degree of the lcm lattice.
    CheckExact,
    /// No facet pair with equal labels.
    CheckMinimal,
    /// Residue current, one product of principal values per top face.
    Residue,
    /// Comparison chain maps from the Koszul complex of the pure powers.
    Compare,
    /// Irreducible components read off from the residue current.
    Annihilator {
        /// Also test this exponent vector, e.g. 1,1,0.
        #[arg(long, value_delimiter = ',')]
        beta: Option<Vec<u32>>,
    },
    /// Compare the annihilator of the residue current with the ideal on a box.
    DualityCheck {
        /// Upper corner of the box, e.g. 3,3,3 (default: the pure powers).
        #[arg(long = "box", value_delimiter = ',')]
        upper: Option<Vec<u32>>,
    },
    /// Number of standard monomials.
    Multiplicity,
    /// `d phi o R` against `n! m`, or a single variable order with --perm.
    FundamentalCycle {
        /// One-based variable order such as 2,1, or "all".
        #[arg(long)]
        perm: Option<String>,
    },
    /// Rectangles partitioning the staircase of a two-variable ideal.
    Partition {
        #[arg(long, value_enum, ignore_case = true, default_value = "p")]
        order: Order,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli.common, &cli.command) {
        Ok((report, verdict)) => {
            let text = serde_json::to_string_pretty(&report).expect("JSON values serialize");
            // a closed pipe downstream is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
