use serde::{Deserialize, Serialize};

use arfcodes_core::bounds::{order_bound_bruteforce_range, stable_formula};
use arfcodes_core::towers::{self, LevelParams};
use arfcodes_core::{
    arf_closure, breakpoints, code_profile, dimension_improvement, goppa_bound, is_arf, is_stable,
    order_bound_bruteforce, r_set, s_set, CodeProfileRow, DimensionImprovement, NumericalSemigroup,
};

use crate::{CliError, Resolved, MAX_CONDUCTOR};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub generators: Vec<u64>,
    pub small_elements: Vec<u64>,
    pub gaps: Vec<u64>,
    pub conductor: u64,
    pub conductor_index: usize,
    pub genus: u64,
    pub is_arf: bool,
    pub is_symmetric: bool,
    pub is_hyperelliptic: bool,
    pub is_stable: bool,
}

impl AnalyzeReport {
    pub fn new(s: &NumericalSemigroup) -> Self {
        AnalyzeReport {
            generators: s.minimal_generators(),
            small_elements: s.small_elements().to_vec(),
            gaps: s.gaps(),
            conductor: s.conductor(),
            conductor_index: s.conductor_index(),
            genus: s.genus(),
            is_arf: is_arf(s),
            is_symmetric: s.is_symmetric(),
            is_hyperelliptic: s.is_hyperelliptic(),
            is_stable: is_stable(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderBoundRow {
    pub l: u64,
    pub rho_l: u64,
    pub d_goppa: i64,
    pub d_ord: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderBoundReport {
    pub generators: Vec<u64>,
    pub genus: u64,
    pub is_arf: bool,
    /// `l_0, ..., l_{r-1}` when the semigroup is Arf and not ℕ.
    pub breakpoints: Option<Vec<u64>>,
    pub rows: Vec<OrderBoundRow>,
}

impl OrderBoundReport {
    /// Brute-force order bound for `l` in `lo..=hi`, checked against the
    /// closed form whenever it applies.
    pub fn new(s: &NumericalSemigroup, lo: u64, hi: u64) -> Result<Self, CliError> {
        let brute = order_bound_bruteforce_range(s, hi);
        let profile = breakpoints(s).ok();
        let mut rows = Vec::new();
        for l in lo..=hi {
            let d_ord = brute[l as usize - 1];
            if let Some(p) = &profile {
                let closed = p.evaluate(l);
                if closed != d_ord {
                    return Err(CliError::Internal(format!(
                        "order bound at l = {l}: closed form {closed}, scan {d_ord}"
                    )));
                }
            }
            rows.push(OrderBoundRow {
                l,
                rho_l: s.nth_pole(l as usize),
                d_goppa: goppa_bound(s, l),
                d_ord,
            });
        }
        Ok(OrderBoundReport {
            generators: s.minimal_generators(),
            genus: s.genus(),
            is_arf: is_arf(s),
            breakpoints: profile.map(|p| p.breakpoints),
            rows,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImprovedReport {
    pub generators: Vec<u64>,
    pub l: Option<u64>,
    pub n: Option<u64>,
    pub d: u64,
    pub r_set: Vec<u64>,
    pub s_set: Vec<u64>,
    pub r_card: u64,
    /// `rho_{ceil(d/2)} + floor(d/2)`, present for Arf semigroups.
    pub r_card_formula: Option<u64>,
    pub dimension: Option<DimensionImprovement>,
}

impl ImprovedReport {
    pub fn new(
        s: &NumericalSemigroup,
        n: Option<u64>,
        l: Option<u64>,
        d: Option<u64>,
    ) -> Result<Self, CliError> {
        let arf = breakpoints(s).ok();
        let d = match (l, d) {
            (Some(0), _) => return Err(CliError::Input("--l must be at least 1".into())),
            (Some(l), _) => match &arf {
                Some(p) => p.evaluate(l),
                None => order_bound_bruteforce(s, l),
            },
            (None, Some(0)) => return Err(CliError::Input("--d must be at least 1".into())),
            (None, Some(d)) => d,
            (None, None) => return Err(CliError::Input("give --l or --d".into())),
        };
        let rs = r_set(s, d);
        let r_card = rs.len() as u64;
        let r_card_formula = arf.as_ref().map(|_| stable_formula(s, d));
        if let Some(f) = r_card_formula {
            if f != r_card {
                return Err(CliError::Internal(format!(
                    "#R_{d}: closed form {f}, scan {r_card}"
                )));
            }
        }
        let dimension = match (l, arf.is_some()) {
            (Some(l), true) => {
                let n = n.ok_or_else(|| CliError::Input("--l needs the code length --n".into()))?;
                Some(dimension_improvement(s, l, n)?)
            }
            _ => None,
        };
        Ok(ImprovedReport {
            generators: s.minimal_generators(),
            l,
            n,
            d,
            r_set: rs,
            s_set: s_set(s, d),
            r_card,
            r_card_formula,
            dimension,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    /// Present for the Garcia–Stichtenoth tower, absent for general
    /// inductive sequences.
    pub q: Option<u64>,
    #[serde(flatten)]
    pub params: LevelParams,
    pub poles: Vec<u64>,
    pub breakpoints: Vec<u64>,
    pub printed_form: bool,
}

fn mismatch(what: &str) -> CliError {
    CliError::Internal(format!("{what} disagrees with the constructed semigroup"))
}

impl TowerReport {
    pub fn new(source: &Resolved, printed_form: bool) -> Result<Self, CliError> {
        let (q, params, spec) = match source {
            Resolved::Tower { q, n } => {
                let p = towers::tower_params(*q, *n)?;
                (Some(*q), p.level, towers::gs_spec(*q, *n + 1)?)
            }
            Resolved::Inductive { spec, n } => {
                if printed_form {
                    return Err(CliError::Input(
                        "--paper-exact applies only to --tower".into(),
                    ));
                }
                (None, towers::inductive_params(spec, *n)?, spec.clone())
            }
            Resolved::Plain(_) => {
                return Err(CliError::Input(
                    "tower needs --tower Q N or --inductive A B".into(),
                ))
            }
        };
        let poles = params.walk_poles();
        let direct = params.breakpoints();

        if params.conductor <= MAX_CONDUCTOR {
            let s = source.semigroup()?;
            if (s.conductor(), s.conductor_index() as u64, s.genus())
                != (params.conductor, params.conductor_index, params.genus)
            {
                return Err(mismatch("conductor, r or genus"));
            }
            if s.small_elements() != poles.as_slice() {
                return Err(mismatch("pole list"));
            }
            let bps = breakpoints(&s)?.breakpoints;
            if bps[1..] != direct[..] {
                return Err(mismatch("breakpoint list"));
            }
        }
        if towers::inductive_breakpoints_recursive(&spec, params.n)? != direct {
            return Err(CliError::Internal(
                "recursive breakpoints disagree with the block walk".into(),
            ));
        }

        let breakpoints = match q {
            Some(q) if printed_form => towers::tower_breakpoints_printed(q, params.n)?,
            _ => direct,
        };
        Ok(TowerReport {
            q,
            params,
            poles,
            breakpoints,
            printed_form,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub input: NumericalSemigroup,
    pub input_generators: Vec<u64>,
    pub closure: NumericalSemigroup,
    pub closure_generators: Vec<u64>,
    /// Poles of the closure that are gaps of the input.
    pub added: Vec<u64>,
}

impl ClosureReport {
    pub fn new(s: &NumericalSemigroup) -> Self {
        let t = arf_closure(s);
        ClosureReport {
            input_generators: s.minimal_generators(),
            closure_generators: t.minimal_generators(),
            added: s.gaps().into_iter().filter(|&x| t.contains(x)).collect(),
            input: s.clone(),
            closure: t,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub generators: Vec<u64>,
    pub n: u64,
    pub is_arf: bool,
    pub rows: Vec<CodeProfileRow>,
}

impl ProfileReport {
    pub fn new(s: &NumericalSemigroup, n: u64, l_max: u64) -> Self {
        ProfileReport {
            generators: s.minimal_generators(),
            n,
            is_arf: is_arf(s),
            rows: code_profile(s, n, l_max),
        }
    }
}
