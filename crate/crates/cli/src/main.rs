use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use disperse_cli::{
    cmd_check, cmd_components, cmd_cotree, cmd_homogeneous, cmd_split_extract, cmd_verify,
    corpus_instances, generate, read_hypergraph, write_corpus, CliError, CliResult, GenFamily,
    GenParams, HomogeneousFlags, Outcome, TreeFormat, DEFAULT_MAX_N,
};

/// Disperse hypergraphs: structure checks, homogeneous sets and corpus runs.
#[derive(Debug, Parser)]
#[command(name = "disperse", version)]
struct Cli {
    /// Refuse inputs with more vertices than this (exit 3).
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether every (ℓ+1)-set spans 0, 1, ℓ or ℓ+1 edges.
    Check { file: PathBuf },
    /// List the tight components of the (ℓ−1)-sets.
    Components { file: PathBuf },
    /// Extract a clique or independent set.
    Homogeneous {
        file: PathBuf,
        /// Append the partition trace.
        #[arg(long)]
        trace: bool,
        /// Return the exact optimum on small inputs when it is larger.
        #[arg(long)]
        oracle_fallback: bool,
    },
    /// Print the cotree of a cohypergraph.
    Cotree {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate an instance, or write a whole corpus with --corpus.
    Generate(GenerateArgs),
    /// Split-link structure of a 3-graph: the set U and the graph F.
    SplitExtract { file: PathBuf },
    /// Run every property check over a corpus or a list of files.
    Verify {
        files: Vec<PathBuf>,
        #[arg(long, conflicts_with = "files")]
        corpus: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum, required_unless_present = "corpus")]
    family: Option<Family>,
    #[arg(long, required_unless_present = "corpus")]
    n: Option<usize>,
    #[arg(long, default_value_t = 3)]
    ell: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Name of a corpus to write into the --output directory.
    #[arg(long, conflicts_with = "family", requires = "output")]
    corpus: Option<String>,
    /// Output file (or directory with --corpus); standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Random,
    Steiner,
    Cotree,
    Splitlink,
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let max_n = cli.max_n;
    match cli.command {
        Command::Check { file } => cmd_check(&read_hypergraph(&file, max_n)?),
        Command::Components { file } => cmd_components(&read_hypergraph(&file, max_n)?),
        Command::Homogeneous {
            file,
            trace,
            oracle_fallback,
        } => cmd_homogeneous(
            &read_hypergraph(&file, max_n)?,
            HomogeneousFlags {
                trace,
                oracle_fallback,
            },
        ),
        Command::Cotree { file, format } => {
            let format = match format {
                Format::Text => TreeFormat::Text,
                Format::Dot => TreeFormat::Dot,
            };
            cmd_cotree(&read_hypergraph(&file, max_n)?, format)
        }
        Command::Generate(args) => run_generate(args, max_n),
        Command::SplitExtract { file } => cmd_split_extract(&read_hypergraph(&file, max_n)?),
        Command::Verify {
            files,
            corpus,
            seed,
            jobs,
        } => {
            let instances = if files.is_empty() {
                corpus_instances(corpus.as_deref().unwrap_or("default"), seed)?
            } else {
                files
                    .iter()
                    .map(|f| Ok((f.display().to_string(), read_hypergraph(f, max_n)?)))
                    .collect::<CliResult<Vec<_>>>()?
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(|| cmd_verify(&instances)))
        }
    }
}

fn run_generate(args: GenerateArgs, max_n: usize) -> CliResult<Outcome> {
    if let Some(name) = args.corpus {
        if name != "default" {
            return Err(CliError::Usage(format!("unknown corpus {name:?} (known: default)")));
        }
        let dir = args.output.expect("clap requires --output with --corpus");
        let paths = write_corpus(args.seed, &dir)?;
        return Ok(Outcome {
            stdout: format!("wrote {} files to {}\n", paths.len(), dir.display()),
            code: 0,
        });
    }
    let family = match args.family.expect("clap requires --family") {
        Family::Random => GenFamily::Random,
        Family::Steiner => GenFamily::Steiner,
        Family::Cotree => GenFamily::Cotree,
        Family::Splitlink => GenFamily::SplitLink,
    };
    let params = GenParams {
        family,
        n: args.n.expect("clap requires --n"),
        ell: args.ell,
        p: args.p,
        seed: args.seed,
    };
    let text = generate(&params, max_n)?;
    match args.output {
        Some(path) => {
            fs::write(&path, text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Outcome {
                stdout: String::new(),
                code: 0,
            })
        }
        None => Ok(Outcome {
            stdout: text,
            code: 0,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
