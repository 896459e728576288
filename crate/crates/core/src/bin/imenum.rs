use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use imenum::analysis::{girth, is_c4_free};
use imenum::bench::{bench, write_csv};
use imenum::enumerate::{enumerate, Algorithm, Control, EnumConfig};
use imenum::error::{BenchError, EnumError, ParseError};
use imenum::generate::{generate, Family, GenSpec};
use imenum::io::{parse_edge_list, parse_spec_file, render_solution, write_edge_list};
use imenum::{EdgeId, Graph};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_C4_FREE: u8 = 3;
const EXIT_ORACLE_GUARD: u8 = 4;

#[derive(Parser)]
#[command(name = "imenum", version, about = "Enumerate induced matchings of a graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every induced matching of an edge-list graph, one per line.
    Enumerate {
        input: PathBuf,
        #[arg(long, default_value = "auto")]
        algo: Algorithm,
        /// Stop after this many solutions.
        #[arg(long)]
        cutoff: Option<u64>,
        /// Print only the number of solutions.
        #[arg(long)]
        count_only: bool,
        /// Run the per-iteration structural checks.
        #[arg(long = "assert")]
        assertions: bool,
    },
    /// Report C4-freeness, girth, size and maximum degree.
    Check { input: PathBuf },
    /// Write a generated graph as an edge list.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file; standard output when omitted.
        output: Option<PathBuf>,
    },
    /// Time enumerators over generated graphs and write CSV rows.
    Bench {
        /// One `family n [m] seed` per line.
        #[arg(long)]
        spec_file: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "general,c4free")]
        algos: Vec<Algorithm>,
        #[arg(long)]
        cutoff: Option<u64>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Output file; standard output when omitted.
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl ToString) -> Self {
        Failure { code, msg: msg.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_FAILURE, e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new(EXIT_PARSE, e)
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        let code = match e {
            EnumError::NotC4Free(_) => EXIT_NOT_C4_FREE,
            EnumError::TooLargeForOracle { .. } => EXIT_ORACLE_GUARD,
            _ => EXIT_FAILURE,
        };
        Failure::new(code, e)
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let file = File::open(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    Ok(parse_edge_list(BufReader::new(file))?)
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate { input, algo, cutoff, count_only, assertions } => {
            let graph = read_graph(&input)?;
            let config = EnumConfig::new(algo).with_assertions(assertions).with_cutoff(cutoff);
            let mut out = output(None)?;
            let count = if count_only {
                enumerate(&graph, &config, &mut |_: &[EdgeId]| Control::Continue)?.solutions
            } else {
                let mut write_error = None;
                let mut sink = |m: &[EdgeId]| match writeln!(out, "{}", render_solution(&graph, m)) {
                    Ok(()) => Control::Continue,
                    Err(e) => {
                        write_error = Some(e);
                        Control::Stop
                    }
                };
                let stats = enumerate(&graph, &config, &mut sink)?;
                if let Some(e) = write_error {
                    if e.kind() == io::ErrorKind::BrokenPipe {
                        return Ok(());
                    }
                    return Err(e.into());
                }
                stats.solutions
            };
            if count_only {
                writeln!(out, "{count}")?;
            }
            out.flush()?;
        }
        Command::Check { input } => {
            let graph = read_graph(&input)?;
            let girth = girth(&graph).map_or_else(|| "none".to_owned(), |k| k.to_string());
            println!(
                "c4free={} girth={} n={} m={} max_degree={}",
                is_c4_free(&graph),
                girth,
                graph.vertex_count(),
                graph.edge_count(),
                graph.max_degree()
            );
        }
        Command::Gen { family, n, m, seed, output: path } => {
            let graph = generate(&GenSpec { family, n, m, seed }).map_err(|e| Failure::new(EXIT_FAILURE, e))?;
            let mut out = output(path.as_deref())?;
            write_edge_list(&graph, &mut out)?;
            out.flush()?;
        }
        Command::Bench { spec_file, algos, cutoff, repeats, output: path } => {
            let file = File::open(&spec_file)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", spec_file.display())))?;
            let specs = parse_spec_file(BufReader::new(file))?;
            let rows = bench(&specs, &algos, cutoff, repeats).map_err(|e| match e {
                BenchError::Enum(e) => Failure::from(e),
                other => Failure::new(EXIT_FAILURE, other),
            })?;
            let mut out = output(path.as_deref())?;
            write_csv(&rows, &mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
