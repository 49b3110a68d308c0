use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "depthlab", version, about = "Combinatorial and ordinary depth of finite group inclusions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub json_out: Option<PathBuf>,

    /// Include elapsed time in the report (breaks byte-identical reruns).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Combinatorial depth d_c(H, G).
    Dc(Pair),
    /// Ordinary depth d(H, G) from exact character tables.
    Od(Pair),
    /// Depth bound from the number of conjugates needed to reach the core.
    CoreBound(Pair),
    /// Character table of a group, or validation of a table file.
    Chars(CharsArgs),
    /// Checks specific to Ree groups.
    Ree {
        #[command(subcommand)]
        command: ReeCommand,
    },
    /// Counting inequalities in exact integer arithmetic.
    Cert(CertArgs),
    /// The full acceptance battery.
    Suite(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct Pair {
    /// Group file; optional when the subgroup file names its parent.
    #[arg(long, value_name = "PATH")]
    pub group: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub subgroup: PathBuf,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CharsArgs {
    /// Compute the table of this group.
    #[arg(long, value_name = "PATH")]
    pub group: Option<PathBuf>,
    /// Import and validate a character-table file.
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ReeCommand {
    /// Sylow 3-subgroup laws, the centralizer check and the W-orbits.
    VerifySylow(SylowArgs),
    /// Character table of N_G(P) and the depth certificate.
    Ngp(NgpArgs),
    /// R(3) = PGammaL(2,8).
    R3(R3Args),
}

#[derive(Debug, Args)]
pub struct SylowArgs {
    /// q = 3^(2n+1).
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=1))]
    pub n: u32,
    /// Visit every pair (q = 3 only).
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, value_enum, default_value_t = Law::Nominal)]
    pub law: Law,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Law {
    Nominal,
    Associative,
}

#[derive(Debug, Args)]
pub struct NgpArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
    pub n: u32,
    #[arg(long, value_enum)]
    pub check: NgpCheck,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum NgpCheck {
    Orthogonality,
    Induction,
    Decomposition,
    Depth,
}

#[derive(Debug, Args)]
pub struct R3Args {
    #[arg(long, value_enum)]
    pub check: R3Check,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum R3Check {
    Props,
    Depths,
}

#[derive(Debug, Args)]
pub struct CertArgs {
    /// One of b1, ngm, cgi, g0_final, r3.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    pub name: Option<String>,
    #[arg(long, required_unless_present = "all")]
    pub q: Option<u128>,
    #[arg(long)]
    pub q0: Option<u128>,
    /// Sweep every family for n = 0..=n_max.
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 10)]
    pub n_max: u32,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Samples for the q = 27 Sylow checks.
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
}
