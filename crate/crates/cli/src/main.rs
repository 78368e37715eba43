//! `mnm`: command-line front end for finite monadic NM-algebras.
//!
//! Exit status is 0 for success or an affirmative verdict, 1 for a negative
//! verdict and 2 for usage or input errors.

mod algebra;
mod catalog;
mod logic;
mod report;
mod target;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};

use report::Report;

#[derive(Parser)]
#[command(
    name = "mnm",
    version,
    about = "Finite monadic NM-algebras: tables, quantifiers, filters and logic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Flags {
    /// Work with monadic filters and the quantifier instead of plain filters.
    #[arg(long, global = true)]
    pub monadic: bool,
    /// Restrict to strong quantifiers, or require the quantifier to be strong.
    #[arg(long, global = true)]
    pub strong: bool,
    /// Use the naive quantifier enumeration.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Comma separated element labels.
    #[arg(long, global = true, value_name = "LBL,...")]
    pub filter: Option<String>,
    #[arg(long, global = true, value_name = "FORMULA")]
    pub formula: Option<String>,
    /// Variable assignment such as `p1=c,p2=d`.
    #[arg(long, global = true, value_name = "VAR=LBL,...")]
    pub assign: Option<String>,
    /// File with one formula per line.
    #[arg(long, global = true, value_name = "FILE")]
    pub theory: Option<PathBuf>,
    /// Longest chain in the generated catalog.
    #[arg(long, global = true, value_name = "N", default_value_t = 6)]
    pub max_chain: usize,
    #[arg(long, global = true)]
    pub json: bool,
    /// Quantifier name from the catalog entry, or its image labels.
    #[arg(long, global = true, value_name = "NAME|LABELS")]
    pub quantifier: Option<String>,
    /// Element the prime extension must omit (`represent --filter F --omit a`).
    #[arg(long, global = true, value_name = "LBL")]
    pub omit: Option<String>,
    /// Check the derived laws of the quantifier (`quantifiers`).
    #[arg(long, global = true)]
    pub laws: bool,
    /// Compare the quantifiers with map pairs and modal operators (`quantifiers`).
    #[arg(long, global = true)]
    pub pairs: bool,
    /// Sweep the axiom schemas over the catalog (`proof`).
    #[arg(long, global = true)]
    pub soundness: bool,
    /// Reserved. Output never depends on randomness.
    #[arg(long = "seed-less", global = true, hide = true)]
    pub seed_less: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the NM-algebra axioms and the quantifier axioms.
    Validate { target: String },
    /// List the quantifiers of an algebra.
    Quantifiers { target: String },
    /// List filters, or test the set given by --filter.
    Filters { target: String },
    /// Simplicity, subdirect irreducibility and related properties.
    Classify { target: String },
    /// Quotient by the filter given by --filter.
    Quotient { target: String },
    /// Subdirect representation by chains.
    Represent { target: String },
    /// Evaluate --formula under --assign.
    Eval { target: String },
    /// Search the catalog for a model of --theory refuting --formula.
    Consequence,
    /// Check a proof file; without one, list the axiom schemas.
    Proof { file: Option<PathBuf> },
    /// List, show or export the catalog.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print one entry as an algebra file with its quantifier list.
    Show { id: String },
    /// Write every entry as `<id>.alg` into the directory.
    Export { dir: PathBuf },
}

fn run(cli: &Cli) -> Result<Report> {
    let f = &cli.flags;
    if f.seed_less {
        bail!("--seed-less is reserved: output is deterministic unconditionally");
    }
    match &cli.command {
        Command::Validate { target } => algebra::validate(target, f),
        Command::Quantifiers { target } => algebra::quantifiers(target, f),
        Command::Filters { target } => algebra::filters(target, f),
        Command::Classify { target } => algebra::classify(target, f),
        Command::Quotient { target } => algebra::quotient(target, f),
        Command::Represent { target } => algebra::represent(target, f),
        Command::Eval { target } => logic::eval(target, f),
        Command::Consequence => logic::consequence(f),
        Command::Proof { file } => logic::proof(file.as_deref(), f),
        Command::Catalog { action } => match action {
            None => catalog::list(f),
            Some(CatalogAction::Show { id }) => catalog::show(id, f),
            Some(CatalogAction::Export { dir }) => catalog::export(dir, f),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.flags.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("JSON values serialize")
                );
            } else {
                print!("{}", report.text);
            }
            if report.affirmative {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("mnm: {e:#}");
            ExitCode::from(2)
        }
    }
}
