use clap::{Args, Parser, Subcommand, ValueEnum};
use hirota_core::rational::{int, parse_rational, parse_rational_list};
use hirota_core::{Nodes, Rational, WebSpec};

#[derive(Debug, Parser)]
#[command(
    name = "hirota",
    version,
    about = "Exact rational solutions of the dispersionless Hirota system"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build P_k, Q_l and f = P_k/Q_l
    Generate(Common),
    /// Check the Hirota residual of every triple
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        check: CheckArgs,
        /// Verify this function (inline JSON or a path) instead of the generated one
        #[arg(long)]
        function: Option<String>,
    },
    /// Certify flatness or nonflatness of the Veronese web
    Flatness(Common),
    /// Fix coordinates and re-verify the restricted function
    Restrict {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        check: CheckArgs,
        /// Coordinate to fix, as x<i>=<rational>; repeatable
        #[arg(long, required = true, value_parser = parse_fix)]
        fix: Vec<(usize, Rational)>,
    },
    /// Homogeneity, degree gap and coefficient sums of P_k and Q_l
    Properties(Common),
    /// Compare determinant solves against Gaussian elimination
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Random instances per check
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Nodes and values are drawn from [-range, range]
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..))]
        range: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Generate(c) | Command::Flatness(c) | Command::Properties(c) => c,
            Command::Verify { common, .. }
            | Command::Restrict { common, .. }
            | Command::Oracle { common, .. } => common,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Dimension
    #[arg(long)]
    pub n: usize,
    /// Numerator order; defaults to n - 1 - l
    #[arg(long)]
    pub k: Option<usize>,
    /// Denominator order; defaults to n - 1 - k
    #[arg(long)]
    pub l: Option<usize>,
    /// "symbolic" or comma-separated distinct rationals; defaults to 1,..,n
    #[arg(long, allow_hyphen_values = true)]
    pub lambdas: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

impl Common {
    pub fn spec(&self) -> Result<WebSpec, String> {
        let n = self.n;
        let (k, l) = match (self.k, self.l) {
            (Some(k), Some(l)) => (k, l),
            (Some(k), None) if k < n => (k, n - 1 - k),
            (None, Some(l)) if l < n => (n - 1 - l, l),
            (None, None) => return Err("give --k or --l".into()),
            _ => return Err(format!("order does not fit dimension {n}")),
        };
        let nodes = match self.lambdas.as_deref().map(str::trim) {
            Some("symbolic") => Nodes::Symbolic,
            Some(list) => Nodes::Numeric(parse_rational_list(list).map_err(|e| e.to_string())?),
            None => Nodes::Numeric((1..=n as i64).map(int).collect()),
        };
        WebSpec::new(n, k, l, nodes).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
    pub mode: Mode,
    /// Sample points per triple in sampled mode
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Sample coordinates lie in [-bound, bound]
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1000..))]
    pub bound: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl CheckArgs {
    pub fn strategy(&self) -> hirota_core::Strategy {
        match self.mode {
            Mode::Symbolic => hirota_core::Strategy::Symbolic,
            Mode::Sampled => hirota_core::Strategy::Sampled {
                trials: self.trials as usize,
                bound: self.bound,
                seed: self.seed,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Symbolic,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn parse_fix(text: &str) -> Result<(usize, Rational), String> {
    let (var, value) = text
        .split_once('=')
        .ok_or_else(|| format!("expected x<i>=<rational>, got {text:?}"))?;
    let index: usize = var
        .trim()
        .strip_prefix('x')
        .and_then(|i| i.parse().ok())
        .filter(|&i| i >= 1)
        .ok_or_else(|| format!("expected a coordinate x1, x2, .., got {var:?}"))?;
    let value = parse_rational(value.trim()).map_err(|e| e.to_string())?;
    Ok((index - 1, value))
}
