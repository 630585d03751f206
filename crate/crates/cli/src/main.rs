mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "grundy-lab", version, about = "Grundy numbers, domination and girth bounds for small graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Input file of graph6 lines or edge lists; `-` is stdin. Repeatable.
    /// Without any, stdin is read.
    #[arg(long, global = true)]
    pub input: Vec<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Time budget per graph for the Grundy solver, in milliseconds.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_ms: u64,
    /// Worker threads (default: one per core).
    #[arg(long, global = true, env = "GRUNDY_LAB_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest graph the oracle subcommand brute-forces.
    #[arg(long, global = true, default_value_t = 8)]
    pub nmax: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// n, m, degrees, girth, γ, s and Γ for every input graph.
    Invariants,
    /// Evaluates every upper bound on Γ for every input graph.
    CheckBounds,
    /// Writes graph6 lines for a named family.
    Generate {
        #[command(subcommand)]
        family: commands::Family,
        /// Also write the invariants known by construction as JSON here.
        #[arg(long, global = true)]
        sidecar: Option<String>,
    },
    /// Cross-checks the solvers against brute force for graphs with n <= --nmax.
    Oracle,
    /// Dumps the demand tree for Grundy parameter k and girth g with its
    /// star partition counts.
    Witness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
        /// Print Graphviz instead of JSON.
        #[arg(long)]
        dot: bool,
        /// Accept any k the tree can be built for, not only the range the
        /// girth bounds are proved over.
        #[arg(long)]
        any_k: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Invariants => commands::invariants(&cli.global),
        Command::CheckBounds => commands::check_bounds(&cli.global),
        Command::Generate { family, sidecar } => commands::generate(&cli.global, &family, sidecar.as_deref()),
        Command::Oracle => commands::oracle(&cli.global),
        Command::Witness { k, g, dot, any_k } => commands::witness(&cli.global, k, g, dot, any_k),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
