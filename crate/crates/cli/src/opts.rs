//! Command-line surface.

use allbut_core::model::FesSet;
use allbut_core::naive::DEFAULT_PILE_CAP;
use clap::{Args, Parser, Subcommand, ValueEnum};

fn parse_fes(s: &str) -> Result<FesSet, String> {
    FesSet::parse(s).map_err(|e| e.to_string())
}

#[derive(Parser)]
#[command(name = "allbut", version, about = "Nim sequences of all-but subtraction games")]
pub struct Cli {
    /// Hard cap on computed sequence length (overrides the ALLBUT_CAP
    /// environment variable; default 100000000)
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn resolved_cap(&self) -> u64 {
        self.cap
            .or_else(|| {
                std::env::var("ALLBUT_CAP")
                    .ok()
                    .and_then(|v| v.trim().parse().ok())
            })
            .unwrap_or(DEFAULT_PILE_CAP)
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Print G(0..=n) for the game excluding the amounts in X
    Grundy {
        /// Excluded amounts, e.g. "2,3,6,8"; "" is the empty set
        #[arg(long, value_parser = parse_fes)]
        x: FesSet,
        /// Largest pile to compute
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = EngineChoice::Fes)]
        engine: EngineChoice,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Detect, tighten, and cross-check the arithmetic period of X's sequence
    Period {
        #[arg(long, value_parser = parse_fes)]
        x: FesSet,
        /// Iteration budget for cycle detection (default: pigeonhole bound)
        #[arg(long)]
        k_limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dump the boundary-pattern trajectory until the first repeat
    Boundary {
        #[arg(long, value_parser = parse_fes)]
        x: FesSet,
        /// Stop after this many iterations even without a repeat
        #[arg(long)]
        k_limit: Option<u64>,
    },
    /// Run a verifier suite over a parameter grid; exits 1 on any failure
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        bounds: SuiteBounds,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute period data for a family of FES sets and write it to a file
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        bounds: SweepBounds,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Output file; progress is checkpointed to `<out>.ckpt`
        #[arg(long)]
        out: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Classify saltus data for {a, b, a+b} sets against the
    /// multiple-of-2a pattern
    Conjecture {
        #[arg(long, default_value_t = 8)]
        a_max: u64,
        #[arg(long, default_value_t = 103)]
        b_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Naive,
    Fes,
    /// Run both engines and fail loudly if they disagree
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Three occurrences of every value for {a, b, a+b}
    Lemma15,
    /// The three sequence-reduction identities
    Reductions,
    /// Pure arithmetic periodicity of every 3-subset
    Pure3,
    /// period = 3 x saltus for {a, b, a+b}
    Ratio,
    /// Scaling {a, b, a+b} by n scales the period by n
    Scaling,
    /// Everything above
    All,
}

#[derive(Args, Clone, Copy)]
pub struct SuiteBounds {
    /// Largest a (lemma15)
    #[arg(long, default_value_t = 6)]
    pub a_max: u64,
    /// Largest b (lemma15)
    #[arg(long, default_value_t = 20)]
    pub b_max: u64,
    /// Largest set element (reductions, pure3) or largest b (ratio, scaling)
    #[arg(long, default_value_t = 15)]
    pub max: u64,
    /// Values checked per lemma15 case
    #[arg(long, default_value_t = 200)]
    pub k_limit: u32,
    /// Override the sequence-equality window for reductions
    #[arg(long)]
    pub n_check: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Coprime {a, b, a+b} sets
    Triples,
    /// Every 3-element set with elements up to --max
    #[value(name = "all-size-3")]
    AllSize3,
    /// Every 4-element set with elements up to --max
    #[value(name = "size-4-search")]
    Size4Search,
}

#[derive(Args, Clone, Copy)]
pub struct SweepBounds {
    #[arg(long, default_value_t = 1)]
    pub a_min: u64,
    #[arg(long, default_value_t = 3)]
    pub a_max: u64,
    #[arg(long, default_value_t = 2)]
    pub b_min: u64,
    #[arg(long, default_value_t = 40)]
    pub b_max: u64,
    /// Largest set element (all-size-3 and size-4-search families)
    #[arg(long, default_value_t = 12)]
    pub max: u64,
}
