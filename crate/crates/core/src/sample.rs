//! Random and exhaustive semigroup generation for property tests and benches.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::arf::{arf_closure, is_arf};
use crate::semigroup::NumericalSemigroup;

/// Semigroup generated by `count` values drawn from `values`, redrawn until
/// the generators are coprime.
pub fn random_semigroup<R: Rng + ?Sized>(
    rng: &mut R,
    count: RangeInclusive<usize>,
    values: RangeInclusive<u64>,
) -> NumericalSemigroup {
    loop {
        let k = rng.random_range(count.clone());
        let gens: Vec<u64> = (0..k).map(|_| rng.random_range(values.clone())).collect();
        if let Ok(s) = NumericalSemigroup::from_generators(&gens) {
            return s;
        }
    }
}

/// Arf closure of a random 3 to 5 generator semigroup, with
/// `0 < c <= max_conductor`.
pub fn random_arf<R: Rng + ?Sized>(rng: &mut R, max_conductor: u64) -> NumericalSemigroup {
    let hi = max_conductor.clamp(4, 80);
    loop {
        let s = arf_closure(&random_semigroup(rng, 3..=5, 2..=hi));
        if !s.is_naturals() && s.conductor() <= max_conductor {
            return s;
        }
    }
}

/// Random semigroup with `c <= max_conductor` that is not Arf.
pub fn random_non_arf<R: Rng + ?Sized>(rng: &mut R, max_conductor: u64) -> NumericalSemigroup {
    let hi = max_conductor.clamp(4, 40);
    loop {
        let s = random_semigroup(rng, 2..=5, 3..=hi);
        if s.conductor() <= max_conductor && !is_arf(&s) {
            return s;
        }
    }
}

/// Every numerical semigroup of genus `<= max_genus`, by walking the tree
/// whose children remove a minimal generator larger than the Frobenius number.
pub fn semigroups_up_to_genus(max_genus: u64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    let mut stack = vec![NumericalSemigroup::naturals()];
    while let Some(s) = stack.pop() {
        if s.genus() < max_genus {
            let c = s.conductor();
            let gaps = s.gaps();
            for x in s.minimal_generators().into_iter().filter(|&x| x >= c) {
                let mut child = gaps.clone();
                child.push(x);
                stack.push(NumericalSemigroup::from_gaps(&child).expect("removing a generator"));
            }
        }
        out.push(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_counts() {
        // number of numerical semigroups of genus 0..=8
        let all = semigroups_up_to_genus(8);
        let mut counts = [0usize; 9];
        for s in &all {
            counts[s.genus() as usize] += 1;
        }
        assert_eq!(counts, [1, 1, 2, 4, 7, 12, 23, 39, 67]);
    }
}
