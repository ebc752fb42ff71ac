use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Numerical semigroup invariants, classification, duals, modular
/// semigroups, three-generated matrices and gluings.
#[derive(Debug, Parser)]
#[command(name = "numsgps", version)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for `verify` and `enumerate`.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    /// Hard cap on the genus accepted by `enumerate` and `verify --genus`.
    #[arg(long, global = true, value_name = "N")]
    pub genus_cap: Option<u32>,

    /// TOML file with `genus_cap` and `jobs` defaults.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators, Frobenius number, genus, pseudo-Frobenius numbers.
    Info(Gens),
    /// Symmetric, pseudo-symmetric, almost symmetric or none.
    Classify(Gens),
    /// The dual M - M of the maximal ideal and the set L(H).
    Dual(Gens),
    /// A maximal embedding dimension semigroup whose dual is the input.
    Medcover {
        generators: String,
        /// Multiplicity of the cover; defaults to m(H).
        #[arg(long)]
        element: Option<i64>,
    },
    /// Solutions of `a·x mod b <= c·x`, given as `a:b:c`.
    Modular { inequality: String },
    /// The opened modular semigroup S(]b/a, b/(a-1)[).
    Opened { a: i64, b: i64 },
    /// The semigroup generated by a rational interval such as `[11/5..11/4]`.
    Interval { interval: String },
    /// Exponent matrix of a non-symmetric three-generated semigroup.
    Threegen(Gens),
    /// The gluing <x·H1, y·H2>.
    Glue {
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
        #[arg(long)]
        x: i64,
        #[arg(long)]
        y: i64,
    },
    /// Every splitting of the input as a gluing.
    Decompose(Gens),
    /// Whether the input is a complete intersection.
    Ci(Gens),
    /// Cross-check fast paths against the brute-force oracle (TAP output).
    Verify(VerifyArgs),
    /// Every semigroup of genus at most N, one per line.
    Enumerate {
        #[arg(long, value_name = "N")]
        genus: u32,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
    },
}

#[derive(Debug, Args)]
pub struct Gens {
    /// Comma-separated generators, e.g. `5,8,11,12`.
    pub generators: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct VerifyArgs {
    /// Comma-separated generators.
    pub generators: Option<String>,
    /// The opened modular semigroup for `a b`.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub opened: Option<Vec<i64>>,
    /// Every semigroup of genus at most N; prints failures and a summary.
    #[arg(long, value_name = "N")]
    pub genus: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    Symmetric,
    PseudoSymmetric,
    AlmostSymmetric,
    NotAlmostSymmetric,
    Med,
    Ci,
}
