mod args;
mod input;
mod render;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use superalg::Error;

use args::{Cli, Command};

/// Failures carry the process exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib(Error::Io(_)) => 1,
            Failure::Lib(Error::Parse(_)) => 2,
            Failure::Lib(e) if e.is_resource() => 4,
            Failure::Lib(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(s) => write!(f, "{s}"),
            Failure::Lib(e) => write!(f, "{e}"),
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("--threads: {e}")))?;
    }
    match &cli.command {
        Command::Invariants { weight } => render::invariants(&input::weight(weight)?, cli.format),
        Command::Diagram { weight, window } => {
            render::diagram(&input::weight(weight)?, *window, cli.format)
        }
        Command::Kl { lambda, mu } => {
            render::kl(&input::weight(lambda)?, &input::weight(mu)?, cli.format)
        }
        Command::Mult { lambda, mu } => {
            render::mult(&input::weight(lambda)?, &input::weight(mu)?, cli.format)
        }
        Command::Factors { weight, slack, rho } => {
            render::factors(&input::weight(weight)?, *slack, *rho, cli.format)
        }
        Command::Decompose {
            module,
            cache,
            max_iterations,
        } => render::decompose(
            &input::module(module)?,
            cache.as_deref(),
            *max_iterations,
            cli.format,
        ),
        Command::CacheInfo { cache } => render::cache_info(cache.as_deref(), cli.format),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let out_path = cli.output.clone();
    let result = run(cli).and_then(|text| match &out_path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Lib(e.into())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Lib(e.into())),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("superalg: {f}");
            ExitCode::from(f.code())
        }
    }
}
