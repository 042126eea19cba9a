use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Largest supported degree. `D_k` grows superexponentially in `n`.
pub const MAX_N: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "redisc", version, about = "Discriminants and repeated discriminants of x^n + a1 x^(n-1) + ... + an")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print R = Res(P, P', x).
    Discriminant(Common),
    /// Print T_k, the discriminant of the derived family (n-k)P - xP'.
    Tk(WithK),
    /// Print the repeated discriminant D_k = Res(R, dR/da_k, a_k).
    Ddisc(WithK),
    /// Factor D_k and certify D_k = c * an^d * M_k^2 * T_k^3.
    VerifyTheorem(WithK),
    /// Check the restriction identities from n to n+1 and the specialized two-term forms.
    VerifyLemmas(Common),
    /// Check all quasi-homogeneous degree formulas at this n.
    VerifyQhd(Common),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Discriminant(_) => "discriminant",
            Command::Tk(_) => "tk",
            Command::Ddisc(_) => "ddisc",
            Command::VerifyTheorem(_) => "verify-theorem",
            Command::VerifyLemmas(_) => "verify-lemmas",
            Command::VerifyQhd(_) => "verify-qhd",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::Discriminant(c) | Command::VerifyLemmas(c) | Command::VerifyQhd(c) => c,
            Command::Tk(w) | Command::Ddisc(w) | Command::VerifyTheorem(w) => &w.common,
        }
    }

    pub fn k(&self) -> Option<KSelection> {
        match self {
            Command::Tk(w) | Command::Ddisc(w) | Command::VerifyTheorem(w) => Some(w.k),
            _ => None,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Degree of the family.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for cached polynomials; caching is off when absent.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Seed for strata sampling and evaluation points.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Name the coefficients a, b, c, ... instead of a1, a2, a3, ...
    #[arg(long)]
    pub letters: bool,
    /// Include wall-clock timings (makes the output nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct WithK {
    #[command(flatten)]
    pub common: Common,
    /// Coefficient index, or `all`.
    #[arg(long)]
    pub k: KSelection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KSelection {
    One(usize),
    All,
}

impl KSelection {
    pub fn resolve(self, n: usize) -> Vec<usize> {
        match self {
            KSelection::One(k) => vec![k],
            KSelection::All => (1..=n).collect(),
        }
    }
}

impl FromStr for KSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(KSelection::All);
        }
        s.parse()
            .map(KSelection::One)
            .map_err(|_| format!("expected a positive integer or `all`, got `{s}`"))
    }
}

impl fmt::Display for KSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KSelection::One(k) => write!(f, "{k}"),
            KSelection::All => f.write_str("all"),
        }
    }
}
