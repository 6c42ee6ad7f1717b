//! Command-line front end for the kron-thickness library.

mod commands;
mod family;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use family::GraphSpec;

#[derive(Parser)]
#[command(
    name = "kron-thickness",
    version,
    about = "Planar decompositions and thickness bounds for Kronecker products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Kronecker product of two graphs.
    Product {
        left: GraphSpec,
        right: Option<GraphSpec>,
        /// Right factor, as an alternative to the positional argument.
        #[arg(long = "right", conflicts_with = "right")]
        right_flag: Option<GraphSpec>,
        #[arg(long)]
        dot: bool,
    },
    /// Build and verify a planar decomposition.
    Decompose {
        family: Family,
        /// n for kn_x_k2 and knnn_x_k2, the side size 4p for knn.
        size: u32,
        /// Seed decomposition of K_{k,k}; overrides THICKNESS_SEED_DIR.
        #[arg(long)]
        seed: Option<PathBuf>,
        /// Search for a missing seed with the exact partition oracle.
        #[arg(long, conflicts_with = "seed")]
        search_seed: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Verify a decomposition document ("-" reads standard input).
    Verify {
        path: String,
        /// Print only PASS or FAIL.
        #[arg(long)]
        quiet: bool,
    },
    /// Thickness bounds for a family.
    Bounds {
        kind: BoundsKind,
        /// Sizes such as `8` or `3,7`, or two graph specs for `product`.
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Tabulate bounds against constructed part counts.
    Table {
        family: Family,
        /// Sizes such as `2..20` or `1,4,5,8`; p rather than n for knn.
        range: String,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    #[value(name = "kn_x_k2")]
    KnXK2,
    #[value(name = "knn")]
    Knn,
    #[value(name = "knnn_x_k2")]
    KnnnXK2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BoundsKind {
    #[value(name = "kn_x_k2")]
    KnXK2,
    #[value(name = "knn")]
    Knn,
    #[value(name = "kmn")]
    Kmn,
    #[value(name = "kmn_x_k2")]
    KmnXK2,
    #[value(name = "kmn_x_kpq")]
    KmnXKpq,
    #[value(name = "knnn_x_k2")]
    KnnnXK2,
    #[value(name = "tripartite_x_k2")]
    TripartiteXK2,
    #[value(name = "g_x_k2")]
    GXK2,
    #[value(name = "product")]
    Product,
}

/// Errors that end a command, each with its own exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
    SeedRequired(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
            Failure::SeedRequired(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::SeedRequired(m) => m,
        }
    }
}

/// Standard output and whether the command succeeded.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

pub fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    Ok(text)
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Product { left, right, right_flag, dot } => {
            let right = right.or(right_flag).ok_or_else(|| Failure::Usage("product needs a right factor".into()))?;
            commands::product(&left, &right, dot)
        }
        Command::Decompose { family, size, seed, search_seed, dot } => {
            commands::decompose(family, size, seed, search_seed, dot)
        }
        Command::Verify { path, quiet } => commands::verify(&path, quiet),
        Command::Bounds { kind, args } => commands::bounds(kind, &args),
        Command::Table { family, range, csv } => commands::table(family, &range, csv),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
