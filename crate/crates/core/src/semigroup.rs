//! Numerical semigroups in canonical finite form.
//!
//! A numerical semigroup `S` is stored as the increasing list of its poles up
//! to and including the conductor `c`; every integer `>= c` is implicitly a
//! pole. Poles are enumerated 1-based, `rho_1 = 0 < rho_2 < ...`, so the
//! conductor is `rho_r` where `r` is the length of the list.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SemigroupRepr", into = "SemigroupRepr")]
pub struct NumericalSemigroup {
    small: Vec<u64>,
    // member[x] for x < conductor
    member: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct SemigroupRepr {
    small_elements: Vec<u64>,
    conductor: u64,
    genus: u64,
}

impl From<NumericalSemigroup> for SemigroupRepr {
    fn from(s: NumericalSemigroup) -> Self {
        SemigroupRepr {
            conductor: s.conductor(),
            genus: s.genus(),
            small_elements: s.small,
        }
    }
}

impl TryFrom<SemigroupRepr> for NumericalSemigroup {
    type Error = Error;

    fn try_from(repr: SemigroupRepr) -> Result<Self> {
        let s = NumericalSemigroup::from_small_elements(&repr.small_elements)?;
        if s.conductor() != repr.conductor || s.genus() != repr.genus {
            return Err(Error::Parse(format!(
                "conductor/genus ({}, {}) inconsistent with small elements",
                repr.conductor, repr.genus
            )));
        }
        Ok(s)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The whole monoid of nonnegative integers.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            small: vec![0],
            member: Vec::new(),
        }
    }

    /// Smallest numerical semigroup containing `gens`.
    ///
    /// Sums are saturated on `[0, 2 * max * min]`; the conductor is the start
    /// of the first run of `min` consecutive poles, after which every integer
    /// is reachable by adding the smallest generator.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        if let Some(&z) = gens.iter().find(|&&g| g == 0) {
            return Err(Error::ZeroGenerator(z));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NotCofinite(d));
        }
        let min = *gens.iter().min().unwrap();
        let max = *gens.iter().max().unwrap();
        let bound = min
            .checked_mul(max)
            .and_then(|v| v.checked_mul(2))
            .ok_or(Error::Overflow("generator saturation bound"))? as usize;

        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for x in 1..=bound {
            reach[x] = gens
                .iter()
                .any(|&g| (g as usize) <= x && reach[x - g as usize]);
        }

        let run = min as usize;
        let mut start = 0;
        let mut len = 0;
        for (x, &hit) in reach.iter().enumerate() {
            if hit {
                if len == 0 {
                    start = x;
                }
                len += 1;
                if len == run {
                    break;
                }
            } else {
                len = 0;
            }
        }
        debug_assert_eq!(len, run);
        reach.truncate(start);
        Ok(Self::from_mask(reach))
    }

    /// Builds the semigroup from its poles `0 = rho_1 < ... < rho_r = c`.
    pub fn from_small_elements(list: &[u64]) -> Result<Self> {
        match list.first() {
            Some(0) => {}
            _ => return Err(Error::MissingZero),
        }
        for w in list.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::NotIncreasing(w[1], w[0]));
            }
        }
        let c = *list.last().unwrap();
        if list.len() >= 2 && list[list.len() - 2] == c - 1 {
            return Err(Error::ConductorNotMinimal(c, c - 1));
        }
        let mut member = vec![false; c as usize];
        for &p in &list[..list.len() - 1] {
            member[p as usize] = true;
        }
        let below = &list[..list.len() - 1];
        for (i, &a) in below.iter().enumerate().skip(1) {
            for &b in &below[1..=i] {
                let sum = a + b;
                if sum < c && !member[sum as usize] {
                    return Err(Error::NotClosed(b, a, sum));
                }
            }
        }
        Ok(NumericalSemigroup {
            small: list.to_vec(),
            member,
        })
    }

    /// Builds the semigroup whose complement in the nonnegative integers is `gaps`.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let mut sorted = gaps.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidGap(w[0]));
            }
        }
        if let Some(&0) = sorted.first() {
            return Err(Error::InvalidGap(0));
        }
        let c = sorted.last().map_or(0, |&f| f + 1);
        let mut small = Vec::with_capacity(c as usize + 1 - sorted.len());
        let mut gi = 0;
        for x in 0..=c {
            if gi < sorted.len() && sorted[gi] == x {
                gi += 1;
            } else {
                small.push(x);
            }
        }
        Self::from_small_elements(&small)
    }

    /// Normalizes a membership mask: `mask[x]` for `x < mask.len()`, every
    /// larger integer a pole. The mask must already be additively closed.
    pub(crate) fn from_mask(mut mask: Vec<bool>) -> Self {
        while mask.last() == Some(&true) {
            mask.pop();
        }
        let c = mask.len() as u64;
        let mut small: Vec<u64> = mask
            .iter()
            .enumerate()
            .filter_map(|(x, &m)| m.then_some(x as u64))
            .collect();
        small.push(c);
        NumericalSemigroup {
            small,
            member: mask,
        }
    }

    /// Adds `extra` and closes under addition, keeping the current conductor
    /// as an upper bound for the new one.
    pub(crate) fn adjoin(&self, extra: &[u64]) -> Self {
        let c = self.conductor() as usize;
        let mut mask = self.member.clone();
        for &e in extra {
            if (e as usize) < c {
                mask[e as usize] = true;
            }
        }
        for x in 1..c {
            if mask[x] {
                continue;
            }
            mask[x] = (1..=x / 2).any(|y| mask[y] && mask[x - y]);
        }
        Self::from_mask(mask)
    }

    pub fn small_elements(&self) -> &[u64] {
        &self.small
    }

    /// Conductor `c`: least integer with `[c, inf)` inside `S`.
    pub fn conductor(&self) -> u64 {
        *self.small.last().unwrap()
    }

    /// Index `r` with `rho_r = c`.
    pub fn conductor_index(&self) -> usize {
        self.small.len()
    }

    /// Number of gaps, `g = c - r + 1`.
    pub fn genus(&self) -> u64 {
        self.conductor() + 1 - self.small.len() as u64
    }

    /// Smallest nonzero pole; 1 for ℕ.
    pub fn multiplicity(&self) -> u64 {
        self.nth_pole(2)
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor() == 0
    }

    pub fn contains(&self, m: u64) -> bool {
        m >= self.conductor() || self.member[m as usize]
    }

    /// `rho_i` for 1-based `i`. Panics on `i == 0`.
    pub fn nth_pole(&self, i: usize) -> u64 {
        assert!(i >= 1, "pole indices are 1-based");
        let r = self.small.len();
        if i <= r {
            self.small[i - 1]
        } else {
            self.conductor() + (i - r) as u64
        }
    }

    /// Inverse of [`nth_pole`](Self::nth_pole).
    pub fn pole_index(&self, rho: u64) -> Result<usize> {
        let c = self.conductor();
        if rho >= c {
            return Ok(self.small.len() + (rho - c) as usize);
        }
        self.small
            .binary_search(&rho)
            .map(|i| i + 1)
            .map_err(|_| Error::Gap(rho))
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor())
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Poles that are not a sum of two nonzero poles.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let top = (self.conductor() + self.multiplicity()).max(2);
        (1..top)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..=x / 2).any(|y| self.contains(y) && self.contains(x - y)))
            .collect()
    }

    /// `c = 2g`; equivalently `x in S <=> c - 1 - x not in S` on `[0, c)`.
    pub fn is_symmetric(&self) -> bool {
        self.conductor() == 2 * self.genus()
    }

    /// `S = <2, t>` with `t` odd, `t >= 3`.
    pub fn is_hyperelliptic(&self) -> bool {
        !self.is_naturals() && self.contains(2)
    }

    /// Text form of the gap set, `gaps: {1, 2, 4}`.
    pub fn gaps_string(&self) -> String {
        format!("gaps: {{{}}}", join(&self.gaps()))
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for NumericalSemigroup {
    /// Generator form, `S = <3, 5, 7>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S = <{}>", join(&self.minimal_generators()))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{:?}", self.small)
    }
}

fn parse_list(body: &str) -> Result<Vec<u64>> {
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Accepts `S = <a, b, ...>`, `<a, b, ...>`, or `gaps: {x, y, ...}`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix("S").map(str::trim_start).unwrap_or(t);
        let t = t.strip_prefix('=').map(str::trim_start).unwrap_or(t);
        if let Some(body) = t.strip_prefix('<').and_then(|b| b.strip_suffix('>')) {
            let gens: Vec<u64> = parse_list(body)?.into_iter().filter(|&g| g != 0).collect();
            if gens.is_empty() {
                return Ok(Self::naturals());
            }
            return Self::from_generators(&gens);
        }
        if let Some(rest) = t.strip_prefix("gaps:") {
            let rest = rest.trim();
            if let Some(body) = rest.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
                return Self::from_gaps(&parse_list(body)?);
            }
        }
        Err(Error::Parse(format!("unrecognized form {s:?}")))
    }
}
