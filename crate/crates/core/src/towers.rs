//! Inductive semigroup sequences `H_1 = N`, `H_n = a_n H_{n-1} ∪ [a_n b_{n-1}, inf)`
//! and the Weierstrass semigroups of the Garcia–Stichtenoth tower, which are
//! the special case `a_n = q`.
//!
//! Poles and breakpoints are available three ways: from the constructed
//! semigroup, from the block walk (`lambda^(k)` steps of size `A_k^(n)`), and
//! from the level-to-level recursion. Tests keep all three in agreement.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// `a_n H ∪ { m >= bound }`.
pub fn scaled_union(s: &NumericalSemigroup, a: u64, bound: u64) -> NumericalSemigroup {
    assert!(a >= 1, "scale factor must be positive");
    let mask = (0..bound)
        .map(|x| x % a == 0 && s.contains(x / a))
        .collect();
    NumericalSemigroup::from_mask(mask)
}

/// The sequences `(a_2, ..., a_N)` and `(b_1, ..., b_{N-1})`.
///
/// Validation requires `a_n >= 2` and `b_n >= c^(n)` (so every
/// `lambda^(n) = b_n - c^(n)` is nonnegative), which the closed forms for
/// `r^(n)` and `g^(n)` depend on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductiveSpec {
    a: Vec<u64>,
    b: Vec<u64>,
}

impl InductiveSpec {
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidInductive(format!(
                "{} values of a but {} values of b",
                a.len(),
                b.len()
            )));
        }
        if let Some(&x) = a.iter().find(|&&x| x < 2) {
            return Err(Error::InvalidInductive(format!(
                "a_n must be >= 2, got {x}"
            )));
        }
        if let Some(&x) = b.iter().find(|&&x| x == 0) {
            return Err(Error::InvalidInductive(format!(
                "b_n must be >= 1, got {x}"
            )));
        }
        let spec = InductiveSpec { a, b };
        for k in 2..spec.levels() {
            let c = spec.conductor_at(k)?;
            if spec.b(k) < c {
                return Err(Error::InvalidInductive(format!(
                    "b_{k} = {} is below the conductor {c} of H_{k}",
                    spec.b(k)
                )));
            }
        }
        Ok(spec)
    }

    /// Number of semigroups `N` in the sequence.
    pub fn levels(&self) -> usize {
        self.a.len() + 1
    }

    /// `a_k`, `k >= 2`.
    pub fn a(&self, k: usize) -> u64 {
        self.a[k - 2]
    }

    /// `b_k`, `k >= 1`.
    pub fn b(&self, k: usize) -> u64 {
        self.b[k - 1]
    }

    fn conductor_at(&self, k: usize) -> Result<u64> {
        if k == 1 {
            return Ok(0);
        }
        self.a(k)
            .checked_mul(self.b(k - 1))
            .ok_or(Error::Overflow("conductor a_n b_(n-1)"))
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.levels() {
            return Err(Error::LevelOutOfRange {
                level: n,
                max: self.levels(),
            });
        }
        Ok(())
    }
}

/// `H_n` built by iterated [`scaled_union`].
pub fn inductive_semigroup(spec: &InductiveSpec, n: usize) -> Result<NumericalSemigroup> {
    spec.check_level(n)?;
    let mut h = NumericalSemigroup::naturals();
    for k in 2..=n {
        h = scaled_union(&h, spec.a(k), spec.conductor_at(k)?);
    }
    Ok(h)
}

/// Closed-form invariants of `H_n`.
///
/// `lambda` and `big_l` are indexed from 0 and run up to `n` when `b_n` is
/// known, otherwise up to `n - 1`. `a_products[k - 1] = A_k^(n)` for
/// `k = 1..n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelParams {
    pub n: usize,
    pub conductor: u64,
    pub conductor_index: u64,
    pub genus: u64,
    pub lambda: Vec<u64>,
    pub big_l: Vec<u64>,
    pub a_products: Vec<u64>,
}

impl LevelParams {
    fn a_product(&self, k: usize) -> u64 {
        self.a_products[k - 1]
    }

    /// Poles `rho_1 .. rho_r` listed by the block walk: after `0`, take
    /// `lambda^(k)` steps of `A_k^(n)` for `k = 1, ..., n-1`. Empty blocks are
    /// skipped.
    pub fn walk_poles(&self) -> Vec<u64> {
        let mut poles = vec![0u64];
        for k in 1..self.n {
            for _ in 0..self.lambda[k] {
                let next = poles.last().unwrap() + self.a_product(k);
                poles.push(next);
            }
        }
        poles
    }

    /// `rho_i` for `1 <= i <= r`: with `L^(k) < i <= L^(k+1)`,
    /// `rho_i = rho_{L^(k)} + (i - L^(k)) A_{k+1}^(n)`.
    pub fn pole(&self, i: usize) -> Result<u64> {
        let r = self.conductor_index as usize;
        if i == 0 || i > r {
            return Err(Error::IndexOutOfRange { index: i, max: r });
        }
        let i = i as u64;
        let mut anchor = 0u64;
        for k in 0..self.n - 1 {
            let lo = self.big_l[k];
            let hi = self.big_l[k + 1];
            let step = self.a_product(k + 1);
            if i <= hi {
                return Ok(anchor + (i - lo) * step);
            }
            anchor += (hi - lo) * step;
        }
        // i = L^(0) = 1 when r = 1
        Ok(anchor)
    }

    /// `l_1, ..., l_{r-1}` from `l_{i-1} = L^(n-1) - 2 + rho_i`.
    pub fn breakpoints(&self) -> Vec<u64> {
        let r = self.conductor_index as usize;
        (2..=r)
            .map(|i| self.conductor_index - 2 + self.pole(i).unwrap())
            .collect()
    }
}

/// Closed-form parameters of `H_n`, `2 <= n <= N`.
pub fn inductive_params(spec: &InductiveSpec, n: usize) -> Result<LevelParams> {
    spec.check_level(n)?;
    if n < 2 {
        return Err(Error::TowerLevel(n));
    }
    let top = n.min(spec.levels() - 1);
    let mut lambda = vec![1u64];
    for k in 1..=top {
        lambda.push(spec.b(k) - spec.conductor_at(k)?);
    }
    let big_l: Vec<u64> = lambda
        .iter()
        .scan(0u64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut a_products = Vec::with_capacity(n - 1);
    for k in 1..n {
        let mut p = 1u64;
        for i in k + 1..=n {
            p = p.checked_mul(spec.a(i)).ok_or(Error::Overflow("A_k^(n)"))?;
        }
        a_products.push(p);
    }
    let conductor = spec.conductor_at(n)?;
    let r = big_l[n - 1];
    Ok(LevelParams {
        n,
        conductor,
        conductor_index: r,
        genus: conductor + 1 - r,
        lambda,
        big_l,
        a_products,
    })
}

/// Breakpoints of `H_n` by the level-to-level recursion: for `i < r^(n-1)`,
/// `l_i^(n) = l_i^(n-1) + lambda^(n-1) + (a_n - 1) rho_{i+1}^(n-1)`; for
/// `r^(n-1) <= i < r^(n)`, `l_i^(n) = r^(n) - 2 + a_n (c^(n-1) + i + 1 - r^(n-1))`.
pub fn inductive_breakpoints_recursive(spec: &InductiveSpec, n: usize) -> Result<Vec<u64>> {
    let top = inductive_params(spec, n)?;
    // level 1: N, r = 1, no breakpoints
    let mut poles: Vec<u64> = vec![0];
    let mut bps: Vec<u64> = Vec::new();
    let mut c_prev = 0u64;
    for level in 2..=n {
        let a = spec.a(level);
        let r_prev = poles.len();
        let r = top.big_l[level - 1] as usize;
        let lambda_prev = top.lambda[level - 1];
        let mut next_bps = Vec::with_capacity(r.saturating_sub(1));
        for i in 1..r_prev {
            next_bps.push(bps[i - 1] + lambda_prev + (a - 1) * poles[i]);
        }
        for i in r_prev..r {
            next_bps.push(r as u64 - 2 + a * (c_prev + (i + 1 - r_prev) as u64));
        }
        let mut next_poles: Vec<u64> = poles.iter().map(|&p| a * p).collect();
        for i in r_prev + 1..=r {
            next_poles.push(a * (c_prev + (i - r_prev) as u64));
        }
        poles = next_poles;
        bps = next_bps;
        c_prev = spec.conductor_at(level)?;
    }
    Ok(bps)
}

fn pow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e).ok_or(Error::Overflow("power of q"))
}

/// Conductor `c_n` of the tower semigroup `S_n`: `q^n - q^((n+1)/2)` for odd
/// `n`, `q^n - q^(n/2)` for even `n`.
pub fn gs_conductor(q: u64, n: usize) -> Result<u64> {
    let n32 = n as u32;
    let sub = n32.div_ceil(2);
    Ok(pow(q, n32)? - pow(q, sub)?)
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::SmallQ(q));
    }
    Ok(())
}

/// The tower as an inductive sequence with `levels` members: `a_n = q`,
/// `b_n = c_{n+1} / q`.
pub fn gs_spec(q: u64, levels: usize) -> Result<InductiveSpec> {
    check_q(q)?;
    let a = vec![q; levels.saturating_sub(1)];
    let b = (1..levels)
        .map(|k| gs_conductor(q, k + 1).map(|c| c / q))
        .collect::<Result<Vec<_>>>()?;
    InductiveSpec::new(a, b)
}

/// `S_1 = N`, `S_n = q S_{n-1} ∪ { m >= c_n }`.
pub fn gs_tower_semigroup(q: u64, n: usize) -> Result<NumericalSemigroup> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::LevelOutOfRange {
            level: 0,
            max: usize::MAX,
        });
    }
    let mut s = NumericalSemigroup::naturals();
    for k in 2..=n {
        s = scaled_union(&s, q, gs_conductor(q, k)?);
    }
    Ok(s)
}

/// Parameters of the tower semigroup `S_n`, `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerParams {
    pub q: u64,
    #[serde(flatten)]
    pub level: LevelParams,
}

pub fn tower_params(q: u64, n: usize) -> Result<TowerParams> {
    check_q(q)?;
    if n < 2 {
        return Err(Error::TowerLevel(n));
    }
    let spec = gs_spec(q, n + 1)?;
    Ok(TowerParams {
        q,
        level: inductive_params(&spec, n)?,
    })
}

/// `rho_i^(n)` of the tower, `1 <= i <= r^(n)`.
pub fn tower_pole(q: u64, n: usize, i: usize) -> Result<u64> {
    tower_params(q, n)?.level.pole(i)
}

/// `l_1^(n), ..., l_{r-1}^(n)` of the tower.
pub fn tower_breakpoints(q: u64, n: usize) -> Result<Vec<u64>> {
    Ok(tower_params(q, n)?.level.breakpoints())
}

/// `rho_{q^k}^(n) = q^(n-k) (q^k - 1)`, for `0 <= k <= floor(n/2)`.
pub fn gs_anchor_pole(q: u64, n: usize, k: usize) -> Result<u64> {
    Ok(pow(q, (n - k) as u32)? * (pow(q, k as u32)? - 1))
}

/// Breakpoints from the printed closed form
/// `l_i = q^floor(n/2) - 2 + q^(n-k-1) (q^(k+1) - q^k - q + i + 1)` with
/// `q^k < i + 1 <= q^(k+1)`.
///
/// This agrees with [`tower_breakpoints`] on the first block only; for
/// `q = 2, n = 4, i = 2` it gives 14 where the semigroup has `l_2 = 12`.
pub fn tower_breakpoints_printed(q: u64, n: usize) -> Result<Vec<u64>> {
    check_q(q)?;
    if n < 2 {
        return Err(Error::TowerLevel(n));
    }
    let half = (n / 2) as u32;
    let r = pow(q, half)?;
    let mut out = Vec::new();
    for i in 1..r {
        let mut k = 0u32;
        while pow(q, k + 1)? < i + 1 {
            k += 1;
        }
        let inner = pow(q, k + 1)? + i + 1 - pow(q, k)? - q;
        out.push(r - 2 + pow(q, n as u32 - k - 1)? * inner);
    }
    Ok(out)
}
