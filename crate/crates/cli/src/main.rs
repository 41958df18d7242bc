//! `motsym`: command-line front end for symbol chains, Milnor K-theory and
//! the certificate corpus.
//!
//! Exit codes: 0 success, 1 property violated or certificate rejected,
//! 2 input error, 3 resource limit.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use input::Failure;

#[derive(Parser)]
#[command(name = "motsym", version, about = "Commuting-matrix motivic symbols, Milnor K-theory and proof certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Parse a tuple or chain file and check commutativity and invertibility.
    Validate {
        file: PathBuf,
        /// Override the field of every tuple in the file.
        #[arg(long)]
        field: Option<String>,
    },
    /// Boundary of a d=1 or d=2 chain.
    Boundary {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Canonical K0 class of a d=0 chain (composition factors).
    K0class {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Whether a d=1 chain is a cycle (its boundary has empty class).
    Iscycle {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Irreducibility of a tuple (exact at d=0, sufficient criteria at d=1).
    Irreducible {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Norm-tagged Milnor symbols of a d=0 chain and their invariant.
    Phi {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// The d=0 chain of a Milnor element.
    Rho {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Norm of a Milnor element from its field down to a subfield.
    Norm {
        file: PathBuf,
        /// Target field descriptor, e.g. "Q" or "Fp(5)".
        #[arg(long)]
        to: String,
    },
    /// Tame symbol of an element over k(t) at a place.
    Tame {
        file: PathBuf,
        /// A monic irreducible polynomial in t, or "inf".
        #[arg(long)]
        place: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Weil reciprocity on random weight-two elements over k(t).
    ReciprocityFuzz {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
    },
    /// Complete invariant of a Milnor element over F_q (any weight) or Q (weight at most 2).
    Invariant {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Companion homotopy between two monic polynomials with equal A(0), A(1).
    Homotopy {
        #[arg(long, default_value = "Q")]
        field: String,
        /// Polynomial at t = 0, e.g. "x^3-4*x^2-3*x+12".
        #[arg(long)]
        a: String,
        /// Polynomial at t = 1.
        #[arg(long)]
        b: String,
    },
    /// Run a certificate script and print the step log.
    CheckCert {
        file: PathBuf,
        /// Print the full chain after every step.
        #[arg(long)]
        verbose: bool,
    },
    /// Run the certificate corpus and the property suites.
    RunCorpus {
        #[arg(long, default_value = "proofs")]
        dir: PathBuf,
        /// Only run scripts and suites whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
    },
    /// Write the bundled certificates and their manifest.
    ExportCorpus {
        #[arg(long, default_value = "proofs")]
        dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, summary) = match commands::run(cli.command) {
        Ok(r) => {
            for l in &r.lines {
                println!("{l}");
            }
            let word = if r.code == 0 { "ok" } else { "fail" };
            (r.code, format!("{word} {}", r.summary))
        }
        Err(Failure::Input(m)) => {
            println!("error: {m}");
            (2, format!("fail input error: {m}"))
        }
        Err(Failure::Limit(m)) => {
            println!("error: {m}");
            (3, format!("fail resource limit: {m}"))
        }
    };
    println!("RESULT: {summary}");
    ExitCode::from(code)
}
