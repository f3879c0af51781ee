use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "hq", version, about = "Quotient path algebras of Hecke-algebra graphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads for the defect sweep.
    #[arg(long, env = "HQ_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hecke datum, the graph and, when weights are given, the D-graph axioms.
    Validate { file: PathBuf },
    /// Generators of the defining ideal of a graph.
    Generators(GeneratorsArgs),
    /// Closed-form generators for the universal graph of a pair.
    Universal(UniversalArgs),
    /// Dual graph and contragredience checks.
    Dual {
        file: PathBuf,
        /// Random cases in the contragredience sweep.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 5)]
        max_word: usize,
    },
    /// Quadratic and braid relations of the weighted graph's matrices.
    CheckDgraph { file: PathBuf },
    /// Print a bundled example graph, or list them.
    Examples { name: Option<String> },
}

#[derive(Args, Debug)]
pub struct GeneratorsArgs {
    file: PathBuf,
    /// Push the universal relations forward instead of decomposing defects directly.
    #[arg(long)]
    via_universal: bool,
    /// Skip interreduction and print every defect component.
    #[arg(long, conflicts_with = "via_universal")]
    raw: bool,
}

#[derive(Args, Debug)]
pub struct UniversalArgs {
    /// Order of the dihedral pair.
    #[arg(long, conflicts_with_all = ["coxeter", "pair"], required_unless_present = "coxeter")]
    m: Option<u32>,
    /// Coxeter datum file; requires --pair.
    #[arg(long, requires = "pair")]
    coxeter: Option<PathBuf>,
    /// Generator pair as "r,s".
    #[arg(long, requires = "coxeter")]
    pair: Option<String>,
    /// Compare with the brute-force defect decomposition.
    #[arg(long)]
    verify: bool,
}

fn run(cli: &Cli) -> hq_core::Result<commands::Outcome> {
    match &cli.command {
        Command::Validate { file } => commands::validate(file),
        Command::Generators(args) => commands::generators(&args.file, args.via_universal, args.raw),
        Command::Universal(args) => {
            commands::universal(args.m, args.coxeter.as_deref(), args.pair.as_deref(), args.verify)
        }
        Command::Dual { file, cases, max_word } => commands::dual(file, *cases, *max_word, cli.seed),
        Command::CheckDgraph { file } => commands::check_dgraph(file),
        Command::Examples { name } => commands::examples(name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(out) => {
            for note in &out.notes {
                eprintln!("note: {note}");
            }
            print!("{}", out.render(cli.format));
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
