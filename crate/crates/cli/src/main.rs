//! `solgraph`: diameters, balls, certificates and acceptance suites for
//! soluble graphs of permutation groups.

mod cache;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use solgraph::certs::DEFAULT_BUDGET;
use solgraph::suite::Tier;
use solgraph::PredicateKind;

use crate::run::CliError;

#[derive(Parser, Debug)]
#[command(name = "solgraph", version, about = "Soluble graphs of finite permutation groups")]
pub struct Cli {
    /// Group family defining adjacency.
    #[arg(long, global = true, value_enum, default_value = "soluble")]
    kind: KindArg,

    /// Seed for randomized certificate searches.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Conjugators tried per class representative (or in total for base2).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Worker threads for eccentricity and search fan-out.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Write the JSON run result to PATH ("-" for standard output).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Largest group order to accept: fast 2520, medium 11232, slow 100000.
    #[arg(long, global = true, value_enum, default_value = "medium")]
    tier: TierArg,

    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Diameter, vertex count and component count of the graph.
    Diameter { spec: String },
    /// Ball of the given radius around an element given in cycle notation.
    Ball {
        spec: String,
        element: String,
        radius: u32,
        /// List the members in the output.
        #[arg(long)]
        members: bool,
    },
    /// Search for a certificate and verify it before writing it out.
    Certify {
        spec: String,
        #[arg(value_enum)]
        target: Target,
        /// Generators of the subgroup for base2 (default: normalizer of a
        /// cyclic subgroup of largest element order).
        #[arg(long = "subgroup", value_name = "CYCLES")]
        subgroup: Vec<String>,
    },
    /// Re-check a certificate file from its witness data.
    Verify { file: PathBuf },
    /// Run the acceptance checks of a tier.
    Suite {
        #[arg(value_enum)]
        name: TierArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Soluble,
    Abelian,
    Nilpotent,
    Metabelian,
    Metacyclic,
}

impl From<KindArg> for PredicateKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Soluble => PredicateKind::Soluble,
            KindArg::Abelian => PredicateKind::Abelian,
            KindArg::Nilpotent => PredicateKind::Nilpotent,
            KindArg::Metabelian => PredicateKind::Metabelian,
            KindArg::Metacyclic => PredicateKind::Metacyclic,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TierArg {
    Fast,
    Medium,
    Slow,
}

impl From<TierArg> for Tier {
    fn from(t: TierArg) -> Self {
        match t {
            TierArg::Fast => Tier::Fast,
            TierArg::Medium => Tier::Medium,
            TierArg::Slow => Tier::Slow,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Lb3,
    Lb4,
    Base2,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.workers {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| run::execute(&cli)),
            Err(e) => Err(CliError::Other(e.to_string())),
        },
        None => run::execute(&cli),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
