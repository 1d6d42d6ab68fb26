use clap::{Parser, Subcommand, ValueEnum};

use phitilde::sieve::DEFAULT_SIEVE_LIMIT;

#[derive(Debug, Parser)]
#[command(
    name = "phitilde",
    version,
    about = "Values, preimages and certified thresholds of phi_tilde(n) = phi(n) - pi(n) + omega(n)"
)]
pub struct Cli {
    /// Output format for the payload.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Size of the in-memory sieve.
    #[arg(long, global = true, default_value_t = DEFAULT_SIEVE_LIMIT)]
    pub sieve_limit: u64,

    /// Suppress diagnostics on standard error.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Cap on worker threads for parallel scans.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub const PROPERTY_CHOICES: [&str; 5] = [
    "squarefree_part",
    "prime_power_growth",
    "prime_swap",
    "primorial_min",
    "all",
];

#[derive(Debug, Subcommand)]
pub enum Command {
    /// phi, pi, omega and phi_tilde of n.
    Value { n: u64 },
    /// List E_n, the non-primes in [1, n] coprime to n.
    Enumerate { n: u64 },
    /// Values for every n in [from, to].
    Table { from: u64, to: u64 },
    /// All n with phi_tilde(n) = k, with the bound certifying completeness.
    Preimage { k: u64 },
    /// Smallest preimage of each k <= K.
    Smallest {
        #[arg(long = "max-k")]
        max_k: u64,
    },
    /// Values k <= K that are never taken.
    Missing {
        #[arg(long = "max-k")]
        max_k: u64,
    },
    /// Values k <= K taken exactly once.
    Singletons {
        #[arg(long = "max-k")]
        max_k: u64,
    },
    /// Check every tabulated claim against the golden data.
    VerifyPaper,
    /// Exhaustively check a structural inequality.
    Props {
        #[arg(long, value_parser = PROPERTY_CHOICES)]
        id: String,
        #[arg(long)]
        limit: u64,
    },
    /// Check growth of |Q_i| and phi_tilde(N_i) up to the given index.
    PrimorialGrowth {
        #[arg(long = "max-i")]
        max_i: u64,
    },
    /// Density of missing values up to K.
    ConjectureScan {
        #[arg(long = "max-k")]
        max_k: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Value { .. } => "value",
            Command::Enumerate { .. } => "enumerate",
            Command::Table { .. } => "table",
            Command::Preimage { .. } => "preimage",
            Command::Smallest { .. } => "smallest",
            Command::Missing { .. } => "missing",
            Command::Singletons { .. } => "singletons",
            Command::VerifyPaper => "verify-paper",
            Command::Props { .. } => "props",
            Command::PrimorialGrowth { .. } => "primorial-growth",
            Command::ConjectureScan { .. } => "conjecture-scan",
        }
    }
}
