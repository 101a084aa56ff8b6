//! Goppa and order (Feng–Rao) bounds for one-point codes `C_l`, and the
//! redundancy `#R_d` of the improved codes.
//!
//! Every quantity here depends only on the Weierstrass semigroup. Each closed
//! form for Arf semigroups has a brute-force counterpart built on
//! [`aset_cardinality`], and the two are expected to agree.
//!
//! Brute-force scans rely on `#A[rho_j] = j - g` for `j >= c + r`, which is
//! strictly increasing in `j`. Minima over the tail are therefore reached by
//! `rho_{c+r}`, and `#A[rho_j] < d` can only hold for `j < max(c + r, d + g)`.

use serde::{Deserialize, Serialize};

use crate::arf::{aset_cardinality, is_arf};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Breakpoints `l_0 = 0 < l_1 < ... < l_{r-1}` of the order bound of an Arf
/// semigroup, `l_i = r + rho_{i+1} - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderBoundProfile {
    pub breakpoints: Vec<u64>,
    pub semigroup: NumericalSemigroup,
}

impl OrderBoundProfile {
    /// `d_ORD(l)`: `2i` on `(l_{i-1}, l_i]`, then `l + 1 - g` from `l_{r-1}` on.
    pub fn evaluate(&self, l: u64) -> u64 {
        assert!(l >= 1, "code index l starts at 1");
        let last = *self.breakpoints.last().unwrap();
        if l >= last {
            return l + 1 - self.semigroup.genus();
        }
        let i = self.breakpoints.partition_point(|&b| b < l);
        2 * i as u64
    }

    /// The `i` with `l_{i-1} < l <= l_i`, if `l <= l_{r-1}`.
    pub fn interval(&self, l: u64) -> Option<usize> {
        let i = self.breakpoints.partition_point(|&b| b < l);
        (i >= 1 && i < self.breakpoints.len()).then_some(i)
    }
}

/// One line of a code parameter table for `C_l` with length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeProfileRow {
    pub l: u64,
    pub rho_l: u64,
    /// `l + 1 - g`; may be zero or negative.
    pub d_goppa: i64,
    pub d_ord: u64,
    /// `n - l`. Equal to `dim C_l` when `rho_l < n`, a lower bound otherwise.
    pub dim_cl: u64,
    /// False when `dim_cl` is a lower bound only.
    pub dim_exact: bool,
    /// `#R_d` with `d = d_ord`.
    pub r_card: u64,
    /// `l - #R_d`, reported when `2c <= n`.
    pub improvement: Option<u64>,
}

/// Dimension comparison between `C_l` and the improved code `C~(d)`,
/// `d = d_ORD(l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionImprovement {
    pub l: u64,
    pub n: u64,
    pub d: u64,
    /// Interval index `i` with `l_{i-1} < l <= l_i`, absent past `l_{r-1}`.
    pub interval: Option<usize>,
    pub dim_cl: u64,
    pub dim_improved: u64,
    pub delta: u64,
    pub codes_coincide: bool,
    /// False when the dimensions are only lower bounds (`rho_l >= n`).
    pub exact: bool,
}

/// `d_G(l) = l + 1 - g`.
pub fn goppa_bound(s: &NumericalSemigroup, l: u64) -> i64 {
    l as i64 + 1 - s.genus() as i64
}

fn tail_index(s: &NumericalSemigroup) -> usize {
    s.conductor() as usize + s.conductor_index()
}

/// `#A[rho_j]` for `j = 1..=upto`, index `j - 1`.
pub fn aset_cardinalities(s: &NumericalSemigroup, upto: usize) -> Vec<usize> {
    (1..=upto)
        .map(|j| aset_cardinality(s, s.nth_pole(j)))
        .collect()
}

/// `d_ORD(l) = min { #A[rho] : rho >= rho_{l+1} }` by direct scan. Valid for
/// every numerical semigroup.
pub fn order_bound_bruteforce(s: &NumericalSemigroup, l: u64) -> u64 {
    assert!(l >= 1, "code index l starts at 1");
    let first = l as usize + 1;
    let last = first.max(tail_index(s));
    (first..=last)
        .map(|j| aset_cardinality(s, s.nth_pole(j)))
        .min()
        .unwrap() as u64
}

/// `d_ORD(l)` for `l = 1..=l_max` by direct scan, sharing one table of
/// A-set sizes.
pub fn order_bound_bruteforce_range(s: &NumericalSemigroup, l_max: u64) -> Vec<u64> {
    let upto = (l_max as usize + 1).max(tail_index(s));
    let cards = aset_cardinalities(s, upto);
    let mut suffix = vec![0usize; upto + 1];
    suffix[upto] = usize::MAX;
    for j in (0..upto).rev() {
        suffix[j] = suffix[j + 1].min(cards[j]);
    }
    // rho_{l+1} sits at index l of `cards`
    (1..=l_max).map(|l| suffix[l as usize] as u64).collect()
}

fn require_arf(s: &NumericalSemigroup) -> Result<()> {
    if s.is_naturals() {
        return Err(Error::Naturals);
    }
    if !is_arf(s) {
        return Err(Error::NotArf);
    }
    Ok(())
}

/// Breakpoint profile of an Arf semigroup other than ℕ.
pub fn breakpoints(s: &NumericalSemigroup) -> Result<OrderBoundProfile> {
    require_arf(s)?;
    let r = s.conductor_index() as u64;
    let mut bps = vec![0];
    bps.extend((1..r as usize).map(|i| r + s.nth_pole(i + 1) - 2));
    Ok(OrderBoundProfile {
        breakpoints: bps,
        semigroup: s.clone(),
    })
}

/// Closed-form order bound for Arf semigroups.
pub fn order_bound_arf(s: &NumericalSemigroup, l: u64) -> Result<u64> {
    Ok(breakpoints(s)?.evaluate(l))
}

fn scan_limit(s: &NumericalSemigroup, d: u64) -> usize {
    tail_index(s).max((d + s.genus()) as usize)
}

/// `R_d`: poles whose A-set has fewer than `d` elements.
pub fn r_set(s: &NumericalSemigroup, d: u64) -> Vec<u64> {
    (1..=scan_limit(s, d))
        .map(|j| s.nth_pole(j))
        .filter(|&rho| (aset_cardinality(s, rho) as u64) < d)
        .collect()
}

/// `S_d`: poles whose A-set has exactly `d` elements.
pub fn s_set(s: &NumericalSemigroup, d: u64) -> Vec<u64> {
    (1..=scan_limit(s, d))
        .map(|j| s.nth_pole(j))
        .filter(|&rho| aset_cardinality(s, rho) as u64 == d)
        .collect()
}

/// `rho_{ceil(d/2)} + floor(d/2)`, without checking any hypothesis.
pub fn stable_formula(s: &NumericalSemigroup, d: u64) -> u64 {
    assert!(d >= 1, "d starts at 1");
    s.nth_pole(d.div_ceil(2) as usize) + d / 2
}

/// `#R_d` for an Arf semigroup.
pub fn r_card_arf(s: &NumericalSemigroup, d: u64) -> Result<u64> {
    require_arf(s)?;
    Ok(stable_formula(s, d))
}

/// First odd `d = 2t + 1 <= 2r - 3` where `#S_d != 1` or
/// `#R_d != rho_{t+1} + t`. `None` means the semigroup is stable.
pub fn stability_witness(s: &NumericalSemigroup) -> Option<u64> {
    let r = s.conductor_index() as u64;
    (0..)
        .map(|t| 2 * t + 1)
        .take_while(|&d| d + 3 <= 2 * r)
        .find(|&d| s_set(s, d).len() != 1 || r_set(s, d).len() as u64 != stable_formula(s, d))
}

/// A semigroup is stable when `#R_d = rho_{ceil(d/2)} + floor(d/2)` for all
/// `d >= 1`. Checked on the odd `d <= 2r - 3`, which is sufficient.
pub fn is_stable(s: &NumericalSemigroup) -> bool {
    stability_witness(s).is_none()
}

/// Dimension gained by the improved code `C~(d)` over `C_l` for an Arf
/// semigroup and length `n >= 2c`.
pub fn dimension_improvement(
    s: &NumericalSemigroup,
    l: u64,
    n: u64,
) -> Result<DimensionImprovement> {
    let profile = breakpoints(s)?;
    let c = s.conductor();
    if 2 * c > n {
        return Err(Error::ShortCode { n, twice_c: 2 * c });
    }
    let d = profile.evaluate(l);
    let r_card = stable_formula(s, d);
    match profile.interval(l) {
        Some(i) => {
            let delta = l - s.nth_pole(i) - i as u64;
            assert_eq!(delta, l - r_card, "delta disagrees with #R_d");
            Ok(DimensionImprovement {
                l,
                n,
                d,
                interval: Some(i),
                dim_cl: n - l,
                dim_improved: n - r_card,
                delta,
                codes_coincide: false,
                exact: true,
            })
        }
        None => {
            assert_eq!(r_card, l, "past l_(r-1) the improved code is C_l itself");
            Ok(DimensionImprovement {
                l,
                n,
                d,
                interval: None,
                dim_cl: n.saturating_sub(l),
                dim_improved: n.saturating_sub(r_card),
                delta: 0,
                codes_coincide: true,
                exact: s.nth_pole(l as usize) < n,
            })
        }
    }
}

/// Parameter table for `l = 1..=l_max`. Uses the Arf closed forms when they
/// apply and brute force otherwise.
pub fn code_profile(s: &NumericalSemigroup, n: u64, l_max: u64) -> Vec<CodeProfileRow> {
    let arf = breakpoints(s).ok();
    let d_ord: Vec<u64> = match &arf {
        Some(p) => (1..=l_max).map(|l| p.evaluate(l)).collect(),
        None => order_bound_bruteforce_range(s, l_max),
    };
    let short = 2 * s.conductor() > n;
    (1..=l_max)
        .zip(d_ord)
        .map(|(l, d)| {
            let rho_l = s.nth_pole(l as usize);
            let r_card = match arf {
                Some(_) => stable_formula(s, d),
                None => r_set(s, d).len() as u64,
            };
            CodeProfileRow {
                l,
                rho_l,
                d_goppa: goppa_bound(s, l),
                d_ord: d,
                dim_cl: n.saturating_sub(l),
                dim_exact: rho_l < n,
                r_card,
                improvement: (!short).then(|| l - r_card),
            }
        })
        .collect()
}
