use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "supoly",
    version,
    about = "Decide whether a rational polynomial is a (strong) uniqueness polynomial"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default)]
pub struct GlobalArgs {
    /// Emit JSON reports (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Render reports as text.
    #[arg(long, global = true)]
    pub text: bool,
    /// Reject inputs whose degree exceeds this.
    #[arg(long, global = true, value_name = "K")]
    pub degree_cap: Option<usize>,
    /// Seed for the randomized checks.
    #[arg(long, global = true, value_name = "INT")]
    pub seed: Option<u64>,
    /// Include wall-clock timings; reports are then no longer reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
    /// TOML file with defaults for the flags above.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a polynomial for UP/SUP over rational and meromorphic functions.
    Classify {
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        poly: Option<String>,
        /// File with one polynomial per line; blank lines and `#` comments are skipped.
        #[arg(long, value_name = "FILE")]
        batch: Option<PathBuf>,
    },
    /// Build the curve F (or F_c with --c), verify its identities and report census and genus.
    Curve {
        poly: String,
        #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
        c: Option<String>,
    },
    /// Certify Wronskian forms for an abstract configuration.
    Forms {
        #[arg(long, value_enum)]
        kind: FormKind,
        /// Critical multiplicities, e.g. `3,1,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        /// One-based pairs `i:j` meaning `P(a_i) = c P(a_j)`.
        #[arg(long, value_delimiter = ',')]
        tau: Vec<String>,
    },
    /// Search for an affine pair `f = beta g + gamma` with `P(f) = c P(g)`.
    Witness {
        poly: String,
        #[arg(long, value_enum, default_value_t = SearchModeArg::Any)]
        mode: SearchModeArg,
        /// Largest root-of-unity order tried; defaults to the degree.
        #[arg(long, value_name = "R")]
        bound: Option<usize>,
    },
    /// Closed-form row for `(X - alpha)^n + a (X - alpha)^m + b`.
    Corollary {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Randomized cases per property suite.
        #[arg(long, value_name = "N")]
        cases: Option<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormKind {
    F,
    Fc,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchModeArg {
    /// Only `c = 1`.
    C1,
    /// Any `c`.
    Any,
}
