//! Command-line front end for `arfcodes-core`.
//!
//! Every subcommand builds a serializable report and renders it as aligned
//! text, pretty JSON, or LF-terminated CSV without quoting.

pub mod render;
pub mod reports;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use arfcodes_core::towers::{self, InductiveSpec};
use arfcodes_core::NumericalSemigroup;

pub use reports::*;

/// Largest tower level accepted on the command line.
pub const MAX_TOWER_LEVEL: usize = 12;
/// Largest conductor for which a semigroup is built explicitly.
pub const MAX_CONDUCTOR: u64 = 1 << 22;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<arfcodes_core::Error> for CliError {
    fn from(e: arfcodes_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "arfcodes",
    version,
    about = "Order bounds and improved Goppa code redundancy from Weierstrass semigroups"
)]
pub struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "ARFCODES_FORMAT",
        default_value = "text"
    )]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants and classification of a semigroup.
    Analyze {
        #[command(flatten)]
        source: Source,
    },
    /// Breakpoints and order bound over a range of l.
    OrderBound {
        #[command(flatten)]
        source: Source,
        /// Range `a..b` (inclusive) or a single value; defaults to `1..c+r`.
        #[arg(long)]
        l: Option<String>,
    },
    /// R_d, S_d, #R_d and the dimension gain of the improved code.
    Improved {
        #[command(flatten)]
        source: Source,
        /// Code length.
        #[arg(long)]
        n: Option<u64>,
        /// Index of the code C_l; d is then d_ORD(l).
        #[arg(long, conflicts_with = "d")]
        l: Option<u64>,
        /// Designed distance d for R_d and S_d.
        #[arg(long)]
        d: Option<u64>,
    },
    /// Closed-form parameters of a tower or inductive semigroup.
    Tower {
        #[command(flatten)]
        source: Source,
        /// Use the printed closed form for the tower breakpoints.
        #[arg(long = "paper-exact")]
        printed_form: bool,
    },
    /// Smallest Arf semigroup containing the input.
    Closure {
        #[command(flatten)]
        source: Source,
    },
    /// Per-l table of code parameters.
    Profile {
        #[command(flatten)]
        source: Source,
        /// Code length.
        #[arg(long)]
        n: u64,
        /// Last l in the table; defaults to c + r.
        #[arg(long)]
        l_max: Option<u64>,
    },
}

#[derive(Debug, Clone, Args)]
#[group(skip)]
#[command(group(
    ArgGroup::new("source")
        .required(true)
        .multiple(false)
        .args(["gens", "small", "gaps", "tower", "inductive"])
))]
pub struct Source {
    /// Generators, e.g. `3,5,7`.
    #[arg(long, value_delimiter = ',')]
    pub gens: Option<Vec<u64>>,
    /// Poles up to the conductor, e.g. `0,3,5`.
    #[arg(long, value_delimiter = ',')]
    pub small: Option<Vec<u64>>,
    /// Gaps, e.g. `1,2,4`.
    #[arg(long, value_delimiter = ',')]
    pub gaps: Option<Vec<u64>>,
    /// Garcia–Stichtenoth tower semigroup S_n over q.
    #[arg(long, num_args = 2, value_names = ["Q", "N"])]
    pub tower: Option<Vec<u64>>,
    /// Inductive sequence `a_2,..,a_N b_1,..,b_(N-1)`; level N unless `--level`.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub inductive: Option<Vec<String>>,
    /// Level of the inductive sequence to use.
    #[arg(long)]
    pub level: Option<usize>,
}

/// What a [`Source`] resolves to.
#[derive(Debug, Clone)]
pub enum Resolved {
    Plain(NumericalSemigroup),
    Tower { q: u64, n: usize },
    Inductive { spec: InductiveSpec, n: usize },
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Input(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

impl Source {
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        if self.level.is_some() && self.inductive.is_none() {
            return Err(CliError::Input(
                "--level applies only to --inductive".into(),
            ));
        }
        if let Some(g) = &self.gens {
            return Ok(Resolved::Plain(NumericalSemigroup::from_generators(g)?));
        }
        if let Some(s) = &self.small {
            return Ok(Resolved::Plain(NumericalSemigroup::from_small_elements(s)?));
        }
        if let Some(g) = &self.gaps {
            return Ok(Resolved::Plain(NumericalSemigroup::from_gaps(g)?));
        }
        if let Some(t) = &self.tower {
            let (q, n) = (t[0], t[1] as usize);
            if n == 0 || n > MAX_TOWER_LEVEL {
                return Err(CliError::Input(format!(
                    "tower level {n} outside 1..={MAX_TOWER_LEVEL}"
                )));
            }
            if q < 2 {
                return Err(arfcodes_core::Error::SmallQ(q).into());
            }
            return Ok(Resolved::Tower { q, n });
        }
        if let Some(parts) = &self.inductive {
            let spec = InductiveSpec::new(parse_u64_list(&parts[0])?, parse_u64_list(&parts[1])?)?;
            let n = self.level.unwrap_or(spec.levels());
            if n == 0 || n > spec.levels() {
                return Err(arfcodes_core::Error::LevelOutOfRange {
                    level: n,
                    max: spec.levels(),
                }
                .into());
            }
            return Ok(Resolved::Inductive { spec, n });
        }
        unreachable!("clap enforces exactly one source")
    }
}

impl Resolved {
    pub fn semigroup(&self) -> Result<NumericalSemigroup, CliError> {
        let conductor = match self {
            Resolved::Plain(s) => return Ok(s.clone()),
            Resolved::Tower { q, n } => towers::gs_conductor(*q, *n)?,
            Resolved::Inductive { spec, n } => {
                if *n == 1 {
                    0
                } else {
                    spec.a(*n).saturating_mul(spec.b(*n - 1))
                }
            }
        };
        if conductor > MAX_CONDUCTOR {
            return Err(CliError::Input(format!(
                "conductor {conductor} is too large to build explicitly (limit {MAX_CONDUCTOR})"
            )));
        }
        Ok(match self {
            Resolved::Plain(_) => unreachable!(),
            Resolved::Tower { q, n } => towers::gs_tower_semigroup(*q, *n)?,
            Resolved::Inductive { spec, n } => towers::inductive_semigroup(spec, *n)?,
        })
    }
}

/// Parses `a..b`, `a..=b`, or a single value.
pub fn parse_l_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Input(format!("bad range {s:?}; expected a..b or a single value"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo == 0 || hi < lo {
        return Err(CliError::Input(format!(
            "range {s:?} must satisfy 1 <= a <= b"
        )));
    }
    Ok((lo, hi))
}

/// Executes a parsed command line and returns the rendered report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Analyze { source } => {
            let s = source.resolve()?.semigroup()?;
            Ok(render::analyze(&AnalyzeReport::new(&s), format))
        }
        Command::OrderBound { source, l } => {
            let s = source.resolve()?.semigroup()?;
            let (lo, hi) = match l {
                Some(text) => parse_l_range(text)?,
                None => (1, s.conductor() + s.conductor_index() as u64),
            };
            Ok(render::order_bound(
                &OrderBoundReport::new(&s, lo, hi)?,
                format,
            ))
        }
        Command::Improved { source, n, l, d } => {
            let s = source.resolve()?.semigroup()?;
            let report = ImprovedReport::new(&s, *n, *l, *d)?;
            Ok(render::improved(&report, format))
        }
        Command::Tower {
            source,
            printed_form,
        } => {
            let report = TowerReport::new(&source.resolve()?, *printed_form)?;
            Ok(render::tower(&report, format))
        }
        Command::Closure { source } => {
            let s = source.resolve()?.semigroup()?;
            Ok(render::closure(&ClosureReport::new(&s), format))
        }
        Command::Profile { source, n, l_max } => {
            let s = source.resolve()?.semigroup()?;
            let l_max = l_max.unwrap_or(s.conductor() + s.conductor_index() as u64);
            if l_max == 0 {
                return Err(CliError::Input("--l-max must be at least 1".into()));
            }
            Ok(render::profile(&ProfileReport::new(&s, *n, l_max), format))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("arfcodes").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn l_ranges() {
        assert_eq!(parse_l_range("1..8").unwrap(), (1, 8));
        assert_eq!(parse_l_range("3..=5").unwrap(), (3, 5));
        assert_eq!(parse_l_range("7").unwrap(), (7, 7));
        for bad in ["0..3", "4..2", "a..b", "", "..4"] {
            assert!(parse_l_range(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn exactly_one_source() {
        let two = ["arfcodes", "analyze", "--gens", "3,5", "--gaps", "1,2"];
        assert!(Cli::try_parse_from(two).is_err());
        assert!(Cli::try_parse_from(["arfcodes", "analyze"]).is_err());
        let stray = parse(&["analyze", "--level", "2", "--gens", "3,5"]);
        assert_eq!(run(&stray).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn errors_map_to_exit_codes() {
        let err = run(&parse(&["analyze", "--gens", "2,4"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("gcd of generators is 2"));
        assert_eq!(CliError::Internal("x".into()).exit_code(), 1);
    }

    #[test]
    fn inductive_levels() {
        let spec = ["tower", "--inductive", "2,2,2", "1,2,6", "--level"];
        let mut args = spec.to_vec();
        args.push("2");
        assert!(run(&parse(&args)).unwrap().contains("level n = 2"));
        args[5] = "5";
        assert_eq!(run(&parse(&args)).unwrap_err().exit_code(), 2);
    }
}
