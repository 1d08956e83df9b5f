use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};

use altcodes::report::{run_json, Emit, RunOptions, Task};

/// Decision procedures and maximal-code embeddings for variable-length
/// codes over finite alphabets.
#[derive(Parser)]
#[command(name = "altcodes", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmitArg {
    Summary,
    Trace,
}

#[derive(clap::Args, Debug)]
struct CommonArgs {
    /// Spec file to analyze ('-' or omitted reads standard input)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Search bound for bifix completion (words up to this length)
    #[arg(long, default_value_t = 6)]
    bound: usize,
    /// Report detail
    #[arg(long, value_enum, default_value_t = EmitArg::Summary)]
    emit: EmitArg,
}

#[derive(clap::Subcommand, Debug)]
enum Command {
    /// Evaluate every code-class predicate on one set
    Classify(CommonArgs),
    /// Run the Sardinas–Patterson code test
    IsCode(CommonArgs),
    /// Decide whether a regular code is strong alt-induced
    Rsic(CommonArgs),
    /// Embed a prefix/suffix/bifix code into a maximal one
    Complete(CommonArgs),
    /// Embed a strong alt-induced witness into a maximal-class one
    Embed(CommonArgs),
    /// Verify a witness pair or a maximal-container candidate
    Verify(CommonArgs),
    /// Validate derived criteria against brute-force oracles on a grid
    OracleGrid(CommonArgs),
}

impl Command {
    fn split(&self) -> (Task, &CommonArgs) {
        match self {
            Command::Classify(a) => (Task::Classify, a),
            Command::IsCode(a) => (Task::IsCode, a),
            Command::Rsic(a) => (Task::Rsic, a),
            Command::Complete(a) => (Task::Complete, a),
            Command::Embed(a) => (Task::Embed, a),
            Command::Verify(a) => (Task::Verify, a),
            Command::OracleGrid(a) => (Task::OracleGrid, a),
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (task, args) = cli.command.split();
    let input = match read_input(&args.input) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(2);
        }
    };
    let options = RunOptions {
        task,
        emit: match args.emit {
            EmitArg::Summary => Emit::Summary,
            EmitArg::Trace => Emit::Trace,
        },
        default_bound: args.bound,
    };
    let started = Instant::now();
    match run_json(&input, &options) {
        Ok(report) => {
            println!("{report}");
            eprintln!("completed in {:.1} ms", started.elapsed().as_secs_f64() * 1e3);
            ExitCode::SUCCESS
        }
        Err(altcodes::Error::Spec(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
