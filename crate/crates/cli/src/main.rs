//! `gxmod`: validate, construct and enumerate generalized crossed modules from the shell.
//!
//! Exit codes: 0 success, 1 an axiom or precondition failed, 2 an input could not be
//! read or parsed, 3 the search pool was too small for a complete equivalence check.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "gxmod",
    version,
    about = "Finite generalized crossed modules, coverings and liftings"
)]
pub struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    /// Write the main output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest group order in the search pool (1 to 8).
    #[arg(long, default_value_t = 4, global = true)]
    pub bound: usize,

    /// Write the shipped fixture files into DIR (default `fixtures`) before running the
    /// command, if any.
    #[arg(long, value_name = "DIR", num_args = 0..=1, default_missing_value = "fixtures")]
    pub seed_fixtures: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every axiom of each input file.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Build a new object from an input file.
    Construct {
        #[command(subcommand)]
        what: Construction,
    },
    /// List every object of a kind.
    Enumerate {
        #[command(subcommand)]
        what: Enumeration,
    },
    /// Check the equivalence between coverings and liftings of a crossed module.
    Equivalence { base: PathBuf },
    /// Every generalized crossed module and cat1-group over the pool, as JSON lines.
    Catalog,
}

#[derive(Subcommand, Debug)]
pub enum Construction {
    /// `(ker α, A, incl)`.
    KernelGxmod { input: PathBuf },
    /// `(α(A), B, incl)`.
    ImageGxmod { input: PathBuf },
    /// Transport a crossed module along isomorphisms of its codomain and/or domain.
    Transport {
        input: PathBuf,
        /// Isomorphism `B -> B'`, as comma-separated images.
        #[arg(long, value_delimiter = ',')]
        codomain_map: Option<Vec<usize>>,
        /// File holding `B'` (defaults to `B`).
        #[arg(long)]
        codomain: Option<PathBuf>,
        /// Isomorphism `A' -> A`, as comma-separated images.
        #[arg(long, value_delimiter = ',')]
        domain_map: Option<Vec<usize>>,
        /// File holding `A'` (defaults to `A`).
        #[arg(long)]
        domain: Option<PathBuf>,
    },
    /// `(ker s, im s, t)` of a cat1-group.
    Cat1ToGxmod { input: PathBuf },
    /// `(A/ker α, p, ω)`.
    NaturalLifting { input: PathBuf },
    /// `(A/N, p, ω)` for an ideal `N` inside `ker α`.
    QuotientLifting {
        input: PathBuf,
        /// Members of `N`, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<usize>,
    },
    /// The covering `<1_A, ω>` of a lifting.
    LiftToCover { input: PathBuf },
    /// The lifting `(B̃, α̃ f⁻¹, g)` of a covering.
    CoverToLift { input: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum Enumeration {
    /// Self-actions of every pool group.
    SelfActions,
    /// Actions of one group on another by automorphisms.
    ExtActions { actor: PathBuf, space: PathBuf },
    /// Generalized crossed modules with the given groups with action.
    Gxmods { a: PathBuf, b: PathBuf },
    /// Liftings of a crossed module over the pool.
    Liftings { base: PathBuf },
    /// Coverings of a crossed module over the pool.
    Coverings { base: PathBuf },
    /// Generalized cat1-groups on a group with action.
    Cat1 { input: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(failure) if is_broken_pipe(&failure.error) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code as u8)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe)
}
