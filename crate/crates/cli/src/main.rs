use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eulerla::{LinearOptions, MicroVariant, Tree};
use eulerla_cli::bench::{self, Structure};
use eulerla_cli::gen::{self, Shape};
use eulerla_cli::{query, read_file, selftest, CliError};

#[derive(Parser)]
#[command(
    name = "eulerla",
    version,
    about = "Level ancestor, descendant and successor queries on static trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct StructureArgs {
    /// In-block structure: bv (precomputed tables) or mask (bit stacks).
    #[arg(long, default_value = "bv")]
    variant: MicroVariant,
    /// Trim far tables to the entries a query can reach.
    #[arg(long)]
    clamp: bool,
}

impl StructureArgs {
    fn options(self) -> LinearOptions {
        LinearOptions {
            variant: self.variant,
            clamp: self.clamp,
            ..LinearOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Answer a batch of queries against a tree.
    Query {
        #[arg(long)]
        tree: PathBuf,
        /// Query file; standard input when omitted.
        #[arg(long)]
        queries: Option<PathBuf>,
        #[command(flatten)]
        structure: StructureArgs,
    },
    /// Print a generated tree in the text format.
    Gen {
        #[arg(long)]
        shape: Shape,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare all queries against brute force on many trees.
    Selftest {
        /// Largest random tree.
        #[arg(long, default_value_t = 200)]
        n_max: usize,
        /// Random trees per shape.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        /// Check every labelled tree up to this size.
        #[arg(long, default_value_t = 6)]
        exhaustive: usize,
        #[command(flatten)]
        structure: StructureArgs,
    },
    /// Time construction and queries on generated trees.
    Bench {
        #[arg(long, default_value = "random")]
        shape: Shape,
        /// Comma-separated vertex counts.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "16384,65536,262144,1048576"
        )]
        n: Vec<usize>,
        #[arg(long, default_value = "linear")]
        structure: Structure,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 100_000)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        structure_args: StructureArgs,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Query {
            tree,
            queries,
            structure,
        } => {
            let tree_text = read_file(&tree)?;
            let (queries_text, queries_name) = match queries {
                Some(path) => (read_file(&path)?, path.display().to_string()),
                None => {
                    let mut text = String::new();
                    std::io::stdin()
                        .read_to_string(&mut text)
                        .map_err(|source| CliError::Io {
                            path: "<stdin>".into(),
                            source,
                        })?;
                    (text, "<stdin>".to_owned())
                }
            };
            query::run(
                &tree_text,
                &tree.display().to_string(),
                &queries_text,
                &queries_name,
                structure.options(),
            )
        }
        Command::Gen { shape, n, seed } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let parents = gen::generate(shape, n, seed);
            Ok(Tree::from_parents(&parents)
                .expect("generated trees are valid")
                .to_text())
        }
        Command::Selftest {
            n_max,
            seeds,
            exhaustive,
            structure,
        } => {
            let cfg = selftest::Config {
                n_max,
                seeds,
                exhaustive,
                opts: structure.options(),
            };
            match selftest::run(&cfg) {
                Ok(report) => Ok(format!("{report}\n")),
                Err(failure) => Err(CliError::Check(failure.to_string())),
            }
        }
        Command::Bench {
            shape,
            n,
            structure,
            reps,
            queries,
            seed,
            structure_args,
        } => {
            if n.contains(&0) {
                return Err(CliError::Usage("--n values must be at least 1".into()));
            }
            let cfg = bench::Config {
                shape,
                sizes: n,
                opts: structure_args.options(),
                structure,
                reps,
                queries,
                seed,
            };
            Ok(bench::format(&bench::run(&cfg)))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
