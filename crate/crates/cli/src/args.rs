//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cache::CACHE_DIR_ENV;
use crate::request::{Params, Quantity};

#[derive(Debug, Parser)]
#[command(name = "stieltjes", version, about = "Generalized Stieltjes constants and related special functions")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Significant decimal digits (10..=200).
    #[arg(long, global = true, default_value_t = 20)]
    pub digits: u32,
    /// Upper bound on the number of series terms any kernel may use.
    #[arg(long, global = true)]
    pub max_terms: Option<u64>,
    /// Evaluation method (quantity dependent; see `compute --help`).
    #[arg(long, global = true)]
    pub method: Option<String>,
    /// Print machine-readable JSON on standard output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory of the result cache; caching is off when unset.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// Ignore the cache even when a directory is configured.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Order m of γ_m(x).
    #[arg(short = 'm', long = "m", default_value_t = 0)]
    pub m: u32,
    /// The s argument of ζ(s, x), as a decimal or p/q.
    #[arg(short = 's', long = "s", allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Derivative order j of ζ^(j)(s, x) in s.
    #[arg(long, default_value_t = 0)]
    pub order: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one value and print it as a JSON document.
    ///
    /// Methods: gamma_m: hasse (default), bell, laurent_oracle, briggs;
    /// zeta: euler_maclaurin (default), hasse, fourier, srivastava_choi,
    /// poisson; zeta_prime0 and zeta_doubleprime0: hasse (default), fourier;
    /// digamma: euler_maclaurin (default), hasse; log_gamma: stirling
    /// (default), bourguet; sondow_gamma: series (default), integral, 2q.
    Compute {
        #[arg(value_enum)]
        quantity: Quantity,
        #[command(flatten)]
        params: ParamArgs,
        /// The x argument (or z for sondow_gamma), as a decimal or p/q.
        #[arg(short = 'x', long = "x", allow_hyphen_values = true)]
        x: Option<String>,
        /// For sondow_gamma: evaluate at ω = exp(iπ·p/q).
        #[arg(long)]
        angle: Option<String>,
    },
    /// Run identity suites and write a JSON report.
    Validate {
        /// Comma-separated suite names, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        /// Where to write the JSON report.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the available suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Tabulate a quantity over an x grid.
    Table {
        #[arg(value_enum)]
        quantity: Quantity,
        #[command(flatten)]
        params: ParamArgs,
        /// Grid `start:stop:count` with `0 < start`.
        #[arg(long)]
        grid: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file (standard output when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl ParamArgs {
    pub fn with_x(&self, x: Option<String>, angle: Option<String>) -> Params {
        Params { m: self.m, s: self.s.clone(), x, order: self.order, angle }
    }
}
