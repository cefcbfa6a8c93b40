use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Weights, Kazhdan–Lusztig polynomials, Kac modules and characters of gl(m|n).
///
/// Weights are given inline as `L|R` (for example `2,1,0|0,1`), as `@FILE`
/// holding the same text or a `{"L": [...], "R": [...]}` object, or as `-` to
/// read standard input.
#[derive(Debug, Parser)]
#[command(name = "superalg", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads for the parallel parts of the computation.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Write the result to this file instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
    Svg,
    Latex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Atypical roots, typical and atypical tuples and heights (default json).
    Invariants {
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Weight and cup diagrams (default pretty; svg available).
    Diagram {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        /// Positions to draw, as `A:B`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
        window: Option<(i64, i64)>,
    },
    /// The polynomial K_{λ,μ}(q) and its value at -1 (default pretty).
    Kl {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// [K(λ) : L(μ)] and the coefficient of ch K(μ) in ch L(λ) (default pretty).
    Mult {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Composition factors of the Kac module K(λ) (default pretty).
    Factors {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        /// Extra room below the top atypical tuple for the initial search box.
        #[arg(long)]
        slack: Option<i64>,
        /// Print ρ-translates of the factors.
        #[arg(long)]
        rho: bool,
    },
    /// Decompose a g₀-character, given as `[{"weight": ..., "mult": n}, ...]`,
    /// into irreducible characters (default json).
    Decompose {
        /// `@FILE`, `-` for standard input, or inline JSON.
        #[arg(allow_hyphen_values = true)]
        module: String,
        /// Character cache file, created if missing and updated afterwards.
        #[arg(long, env = "SUPERALG_CACHE")]
        cache: Option<PathBuf>,
        /// Greedy steps before giving up.
        #[arg(long, default_value_t = 10_000)]
        max_iterations: usize,
    },
    /// Summary of a character cache file (default pretty).
    CacheInfo {
        #[arg(long, env = "SUPERALG_CACHE")]
        cache: Option<PathBuf>,
    },
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty window {a}:{b}"));
    }
    Ok((a, b))
}
