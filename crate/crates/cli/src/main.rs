mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "qcrystal", version, about = "Queer crystals of words: components, graphs and axiom checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Words, type-A classes and highest weight of the component of a seed word.
    Component {
        #[command(flatten)]
        seed: SeedArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The component graph G, Gbar or Gtilde of a seed word, or a stored graph re-emitted.
    Graph {
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        seed: Option<String>,
        /// Graph file (JSON or DOT) to re-emit instead of building one.
        #[arg(long, conflicts_with = "seed")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Kind::G)]
        kind: Kind,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Checks axiom families on a component, on every component up to a length, or on a crystal file.
    Verify {
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        seed: Option<String>,
        /// Check every component of words of length 1..=LEN.
        #[arg(long, conflicts_with = "seed")]
        len: Option<usize>,
        /// Crystal JSON file to check.
        #[arg(long, conflicts_with_all = ["seed", "len"])]
        input: Option<PathBuf>,
        /// Comma-separated families; all when omitted.
        #[arg(long, value_delimiter = ',')]
        families: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compares the explicit odd rules with the conjugated operators on every word up to a length.
    Crosscheck {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        len: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The rank 2 crystal with rewired -1 arrows, or its component graph.
    Counterexample {
        /// Emit the component graph of this kind instead of the crystal.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct SeedArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    seed: String,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "G")]
    G,
    #[value(name = "Gbar")]
    Gbar,
    #[value(name = "Gtilde")]
    Gtilde,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Component { seed, output } => commands::component(&seed, &output),
        Command::Graph {
            rank,
            seed,
            input,
            kind,
            output,
        } => commands::graph(rank, seed.as_deref(), input.as_deref(), kind, &output),
        Command::Verify {
            rank,
            seed,
            len,
            input,
            families,
            output,
        } => commands::verify(rank, seed.as_deref(), len, input.as_deref(), &families, &output),
        Command::Crosscheck { rank, len, output } => commands::crosscheck(rank, len, &output),
        Command::Counterexample { kind, output } => commands::counterexample(kind, &output),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
