use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pl_persistence::bench::{run_bench, BenchConfig, Generator, DEFAULT_SEED};
use pl_persistence::circle::circle_diagram;
use pl_persistence::image::image_diagram;
use pl_persistence::io::{
    read_values, stream_input, write_diagram, InputFormat, InputSpec, ReadError,
};
use pl_persistence::oracle::{oracle_circle, oracle_image, oracle_line};
use pl_persistence::parallel::parallel_line_diagram;
use pl_persistence::types::{check_structure, Diagram, Topology};
use pl_persistence::{LineReducer, PersistenceError};

#[derive(Parser)]
#[command(
    name = "plpers",
    version,
    about = "Persistence diagrams of sampled 1D functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Raw,
}

impl From<Format> for InputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => InputFormat::Csv,
            Format::Raw => InputFormat::Raw,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratorArg {
    Random,
    Monotonic,
    Constant,
    Narrowing,
}

impl From<GeneratorArg> for Generator {
    fn from(g: GeneratorArg) -> Self {
        match g {
            GeneratorArg::Random => Generator::Random,
            GeneratorArg::Monotonic => Generator::Monotonic,
            GeneratorArg::Constant => Generator::Constant,
            GeneratorArg::Narrowing => Generator::Narrowing,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Persistence diagram of one function.
    Diagram {
        /// Input file, or `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Treat the samples as a function on a circle.
        #[arg(long)]
        circle: bool,
        /// Use the sort + union-find reference implementation.
        #[arg(long)]
        oracle: bool,
        /// Worker threads for the split-and-reduce heuristic (0 = all cores).
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Image persistence of g-sublevel sets inside f-sublevel sets, f <= g.
    Image {
        f_input: PathBuf,
        g_input: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the reducer against the sorting baseline.
    Bench {
        #[arg(long, default_value_t = 10_000_000)]
        n: usize,
        #[arg(long, value_enum, default_value = "random")]
        generator: GeneratorArg,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Skip the sort + union-find baseline.
        #[arg(long)]
        no_oracle: bool,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<ReadError> for Failure {
    fn from(e: ReadError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<PersistenceError> for Failure {
    fn from(e: PersistenceError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn checked(values: &[f64], topology: Topology, diagram: Diagram) -> Result<Diagram, Failure> {
    check_structure(values, topology, &diagram)
        .map_err(|e| Failure::Internal(format!("invariant violation: {e}")))?;
    Ok(diagram)
}

fn streamed_line(spec: &InputSpec) -> Result<Diagram, Failure> {
    let mut reducer = LineReducer::new();
    let mut pairs = Vec::new();
    stream_input(spec, |v| reducer.push(v, &mut pairs))?;
    let essential = reducer.finish(&mut pairs)?;
    pairs.push(essential);
    Ok(Diagram::from_pairs(pairs))
}

fn diagram(
    spec: InputSpec,
    oracle: bool,
    threads: usize,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let threads = match threads {
        0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
        n => n,
    };
    let result = match (spec.topology, oracle) {
        (Topology::Line, false) if threads <= 1 => streamed_line(&spec)?,
        (topology, _) => {
            let values = read_values(&spec)?;
            let d = match (topology, oracle) {
                (Topology::Line, true) => oracle_line(&values)?,
                (Topology::Circle, true) => oracle_circle(&values)?,
                (Topology::Circle, false) => circle_diagram(&values)?,
                (Topology::Line, false) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(threads)
                        .build()
                        .map_err(|e| Failure::Internal(e.to_string()))?;
                    pool.install(|| parallel_line_diagram(&values, threads))?
                }
            };
            checked(&values, topology, d)?
        }
    };
    if result.essential_pairs().count() != 1 {
        return Err(Failure::Internal(
            "invariant violation: essential pair count".into(),
        ));
    }
    write_diagram(&result, output)?;
    Ok(())
}

fn image(
    f_spec: InputSpec,
    g_spec: InputSpec,
    oracle: bool,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let f = read_values(&f_spec)?;
    let g = read_values(&g_spec)?;
    let d = if oracle {
        oracle_image(&f, &g)?
    } else {
        image_diagram(&f, &g)?
    };
    if d.essential_pairs().count() != 1 {
        return Err(Failure::Internal(
            "invariant violation: essential pair count".into(),
        ));
    }
    write_diagram(&d, output)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Diagram {
            input,
            format,
            circle,
            oracle,
            threads,
            output,
        } => {
            let topology = if circle {
                Topology::Circle
            } else {
                Topology::Line
            };
            let spec = InputSpec::new(input, format.into(), topology);
            diagram(spec, oracle, threads, output.as_deref())
        }
        Command::Image {
            f_input,
            g_input,
            format,
            oracle,
            output,
        } => image(
            InputSpec::new(f_input, format.into(), Topology::Line),
            InputSpec::new(g_input, format.into(), Topology::Line),
            oracle,
            output.as_deref(),
        ),
        Command::Bench {
            n,
            generator,
            repetitions,
            seed,
            no_oracle,
        } => {
            if n == 0 {
                return Err(Failure::Input("n must be at least 1".into()));
            }
            let report = run_bench(BenchConfig {
                n,
                generator: generator.into(),
                repetitions,
                seed,
                oracle: !no_oracle,
            });
            println!("{report}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::Input(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}
