//! The Arf property and the sets `A[rho] = { p in S : rho - p in S }`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// The set `A[rho]` together with its prefix statistics.
///
/// `alpha` is the largest `j` with `rho_1, ..., rho_j` all in `A[rho]`;
/// `beta` is the largest `j <= alpha` with `2 rho_j <= rho`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ASetReport {
    pub rho: u64,
    pub elements: Vec<u64>,
    pub alpha: usize,
    pub beta: usize,
    pub cardinality: usize,
}

/// Computes `A[rho]` by scanning every `p <= rho`. No Arf shortcut is used,
/// so this serves as the reference for every closed form in the crate.
pub fn aset(s: &NumericalSemigroup, rho: u64) -> Result<ASetReport> {
    if !s.contains(rho) {
        return Err(Error::Gap(rho));
    }
    let elements: Vec<u64> = (0..=rho)
        .filter(|&p| s.contains(p) && s.contains(rho - p))
        .collect();

    let mut alpha = 0;
    let mut beta = 0;
    loop {
        let p = s.nth_pole(alpha + 1);
        if p > rho || !s.contains(rho - p) {
            break;
        }
        alpha += 1;
        if 2 * p <= rho {
            beta = alpha;
        }
    }

    Ok(ASetReport {
        rho,
        cardinality: elements.len(),
        elements,
        alpha,
        beta,
    })
}

/// `#A[rho]` without materializing the set. `rho` must be a pole.
///
/// Poles `p < c` are tested one by one; every `p` in `[c, rho]` is a pole,
/// so those contribute the number of poles in `[0, rho - c]`.
pub fn aset_cardinality(s: &NumericalSemigroup, rho: u64) -> usize {
    debug_assert!(s.contains(rho));
    let c = s.conductor();
    let below = s
        .small_elements()
        .iter()
        .take_while(|&&p| p < c && p <= rho)
        .filter(|&&p| s.contains(rho - p))
        .count();
    let above = if rho >= c { rank(s, rho - c) } else { 0 };
    below + above
}

/// Number of poles in `[0, y]`.
fn rank(s: &NumericalSemigroup, y: u64) -> usize {
    let c = s.conductor();
    if y >= c {
        s.small_elements().len() + (y - c) as usize
    } else {
        s.small_elements().partition_point(|&p| p <= y)
    }
}

/// Arf test through `2 rho_i - rho_k in S` for `k <= i < r`.
pub fn is_arf(s: &NumericalSemigroup) -> bool {
    let below = &s.small_elements()[..s.conductor_index() - 1];
    below
        .iter()
        .enumerate()
        .all(|(i, &a)| below[..=i].iter().all(|&b| s.contains(2 * a - b)))
}

/// Arf test straight from the definition, `rho_i + rho_j - rho_k in S` for
/// `k <= j <= i < r`.
pub fn is_arf_via_full_definition(s: &NumericalSemigroup) -> bool {
    let below = &s.small_elements()[..s.conductor_index() - 1];
    for (i, &a) in below.iter().enumerate() {
        for (j, &b) in below[..=i].iter().enumerate() {
            for &k in &below[..=j] {
                if !s.contains(a + b - k) {
                    return false;
                }
            }
        }
    }
    true
}

/// Smallest Arf semigroup containing `s`.
///
/// Each pass adjoins every missing `2 rho_i - rho_k` below the conductor and
/// re-closes under addition. The genus strictly drops on every pass that
/// changes anything, so the loop terminates.
pub fn arf_closure(s: &NumericalSemigroup) -> NumericalSemigroup {
    let mut cur = s.clone();
    loop {
        let below = &cur.small_elements()[..cur.conductor_index() - 1];
        let mut missing = Vec::new();
        for (i, &a) in below.iter().enumerate() {
            for &b in &below[..=i] {
                let m = 2 * a - b;
                if !cur.contains(m) {
                    missing.push(m);
                }
            }
        }
        if missing.is_empty() {
            return cur;
        }
        cur = cur.adjoin(&missing);
    }
}

/// `p_i = c + rho_{i+1} - 1`, for `i >= 1`.
pub fn p_index(s: &NumericalSemigroup, i: usize) -> Result<u64> {
    if s.is_naturals() {
        return Err(Error::Naturals);
    }
    assert!(i >= 1, "p_i is defined for i >= 1");
    Ok(s.conductor() + s.nth_pole(i + 1) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(&[0, 3, 5]).unwrap()
    }

    fn gens(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn klein_asets() {
        let k = klein();
        let a6 = aset(&k, 6).unwrap();
        assert_eq!(a6.elements, vec![0, 3, 6]);
        assert_eq!((a6.alpha, a6.beta, a6.cardinality), (2, 2, 3));

        let a7 = aset(&k, 7).unwrap();
        assert_eq!(a7.elements, vec![0, 7]);
        assert_eq!((a7.alpha, a7.beta, a7.cardinality), (1, 1, 2));

        let a10 = aset(&k, 10).unwrap();
        assert_eq!(a10.elements, vec![0, 3, 5, 7, 10]);
        assert_eq!(a10.cardinality, 5);

        let a0 = aset(&k, 0).unwrap();
        assert_eq!(a0.elements, vec![0]);
        assert_eq!((a0.alpha, a0.beta, a0.cardinality), (1, 1, 1));

        assert_eq!(aset(&k, 4), Err(Error::Gap(4)));
    }

    #[test]
    fn beta_never_exceeds_alpha() {
        // A[10] = {0, 5, 10} in <3, 5>: rho_2 = 3 is missing, so alpha = 1
        // even though 2 * 5 <= 10.
        let a = aset(&gens(&[3, 5]), 10).unwrap();
        assert_eq!(a.elements, vec![0, 5, 10]);
        assert_eq!((a.alpha, a.beta), (1, 1));
    }

    #[test]
    fn arf_examples() {
        assert!(is_arf(&klein()));
        assert!(is_arf(&gens(&[2, 7])));
        assert!(is_arf(&NumericalSemigroup::naturals()));
        assert!(!is_arf(&gens(&[3, 5])));

        assert!(is_arf_via_full_definition(&klein()));
        assert!(!is_arf_via_full_definition(&gens(&[3, 5])));
        assert!(is_arf_via_full_definition(&NumericalSemigroup::naturals()));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(arf_closure(&klein()), klein());
        assert_eq!(arf_closure(&gens(&[3, 5])), klein());
        let n = NumericalSemigroup::naturals();
        assert_eq!(arf_closure(&n), n);
    }

    #[test]
    fn p_values() {
        let k = klein();
        assert_eq!(p_index(&k, 1), Ok(7));
        assert_eq!(p_index(&k, 2), Ok(9));
        assert_eq!(p_index(&k, 3), Ok(10));
        // i = (r - 1) + t  =>  p_i = 2c + t - 1 = rho_{c + i}
        for t in 0..6 {
            let i = 2 + t;
            let p = p_index(&k, i).unwrap();
            assert_eq!(p, 2 * 5 + t as u64 - 1);
            assert_eq!(p, k.nth_pole(5 + i));
        }
        assert_eq!(p_index(&gens(&[2, 3]), 1), Ok(3));
        assert_eq!(
            p_index(&NumericalSemigroup::naturals(), 1),
            Err(Error::Naturals)
        );
    }

    #[test]
    fn cardinality_matches_report() {
        let s = gens(&[4, 7, 9]);
        for j in 1..60 {
            let rho = s.nth_pole(j);
            assert_eq!(
                aset_cardinality(&s, rho),
                aset(&s, rho).unwrap().cardinality
            );
        }
    }
}
