use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

/// Burrows-Wheeler transform runs and binary morphisms.
#[derive(Parser, Debug)]
#[command(name = "bwtrun", version, about)]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV (tables only)
    #[arg(long, global = true)]
    pub csv: bool,
    /// Letter order, e.g. `$ab`; defaults to the ASCII order of the input letters
    #[arg(long, global = true)]
    pub alphabet: Option<String>,
    /// Write a run manifest (command line, digests) to this path
    #[arg(long, global = true, value_name = "PATH")]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Transform, primary index and run count of each word
    Bwt {
        words: Vec<String>,
        /// Read words from a file, one per line
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Invert a transform given its primary index
    InverseBwt {
        word: String,
        #[arg(long)]
        index: usize,
    },
    /// Apply a morphism to words
    Apply {
        morphism: String,
        words: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Compose morphisms, outermost first
    Compose {
        #[arg(num_args = 2.., required = true)]
        morphisms: Vec<String>,
    },
    /// Classification report for a binary morphism
    Classify { morphism: String },
    /// The primitive words mapped to proper powers
    MuPowers { morphism: String },
    /// Circular factorizations and synchronization pairs of an image
    Sync {
        morphism: String,
        #[arg(long)]
        word: String,
        /// full | runs:<a>:<b> | file:<path>
        #[arg(long, default_value = "full")]
        scope: String,
    },
    /// Whether the morphism synchronizes with finite delay on a language
    DecideDelay {
        morphism: String,
        /// full | runs:<a>:<b> | file:<path>
        #[arg(long, default_value = "full")]
        scope: String,
    },
    /// Exact AS and MS by necklace enumeration
    Sensitivity {
        morphism: String,
        #[arg(long)]
        n_from: Option<usize>,
        #[arg(long)]
        n_to: Option<usize>,
        /// List every non-constant necklace with its image
        #[arg(long)]
        table1: bool,
        /// Let single-letter powers take part in the maxima
        #[arg(long)]
        include_constant: bool,
        /// Raise the enumeration cutoff (default: σⁿ ≤ 2²⁰)
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Word-family experiments
    Experiment {
        #[command(subcommand)]
        kind: Experiment,
    },
    /// Regenerate a committed table and compare it with its fixture
    Reproduce { target: Target },
}

#[derive(Subcommand, Debug)]
pub enum Experiment {
    /// rho_p on the w_k family
    Rho {
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value = "6..12", value_parser = parse_range)]
        k: (usize, usize),
    },
    /// Any morphism on the w_k family
    Wk {
        morphism: String,
        #[arg(long, default_value = "6..12", value_parser = parse_range)]
        k: (usize, usize),
    },
    /// f_{2k}$ against f_{2k+1}$ under $ < a < b, for even k
    FibDollar {
        #[arg(long, default_value = "4..10", value_parser = parse_range)]
        k: (usize, usize),
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Table1,
    RhoSqrt,
    FibDollar,
    #[value(name = "figures-2-3")]
    Figures23,
}

/// `6..12` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

/// The manifest option removed from `argv`.
pub fn strip_manifest(argv: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in argv {
        if skip {
            skip = false;
        } else if a == "--manifest" {
            skip = true;
        } else if !a.starts_with("--manifest=") {
            out.push(a.clone());
        }
    }
    out
}

pub fn read_lines(path: &Path) -> Result<(Vec<String>, Vec<u8>), std::io::Error> {
    let bytes = std::fs::read(path)?;
    let words = String::from_utf8_lossy(&bytes)
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect();
    Ok((words, bytes))
}
