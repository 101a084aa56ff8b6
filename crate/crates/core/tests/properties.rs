use arfcodes_core::arf::{aset_cardinality, p_index};
use arfcodes_core::bounds::{order_bound_bruteforce_range, stability_witness, stable_formula};
use arfcodes_core::towers::{inductive_params, inductive_semigroup, InductiveSpec};
use arfcodes_core::*;
use proptest::prelude::*;

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2u64..30, 2..=5)
        .prop_filter_map("gcd > 1", |g| NumericalSemigroup::from_generators(&g).ok())
}

fn arf_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    semigroup()
        .prop_map(|s| arf_closure(&s))
        .prop_filter("N", |s| !s.is_naturals())
}

/// Nonnegative combinations of `gens` up to `limit`, by worklist.
fn saturate(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut hit = vec![false; limit as usize + 1];
    hit[0] = true;
    let mut todo = vec![0u64];
    while let Some(x) = todo.pop() {
        for &g in gens {
            if x + g <= limit && !hit[(x + g) as usize] {
                hit[(x + g) as usize] = true;
                todo.push(x + g);
            }
        }
    }
    hit
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generators_match_independent_saturation(gens in prop::collection::vec(2u64..25, 2..=4)) {
        if let Ok(s) = NumericalSemigroup::from_generators(&gens) {
            let limit = s.conductor() + 60;
            let hit = saturate(&gens, limit);
            for x in 0..=limit {
                prop_assert_eq!(hit[x as usize], s.contains(x), "x = {}", x);
            }
        }
    }

    #[test]
    fn representation_round_trips(s in semigroup()) {
        prop_assert_eq!(&NumericalSemigroup::from_gaps(&s.gaps()).unwrap(), &s);
        prop_assert_eq!(&NumericalSemigroup::from_small_elements(s.small_elements()).unwrap(), &s);
        prop_assert_eq!(&s.to_string().parse::<NumericalSemigroup>().unwrap(), &s);
        prop_assert_eq!(&s.gaps_string().parse::<NumericalSemigroup>().unwrap(), &s);
        prop_assert_eq!(&NumericalSemigroup::from_generators(&s.minimal_generators()).unwrap(), &s);
        prop_assert_eq!(s.genus(), s.gaps().len() as u64);
        let r = s.conductor_index();
        for i in 1..r + 20 {
            prop_assert_eq!(s.pole_index(s.nth_pole(i)).unwrap(), i);
            if i >= r {
                prop_assert_eq!(s.nth_pole(i), s.conductor() + (i - r) as u64);
            }
        }
        if s.conductor() > 0 {
            prop_assert!(!s.contains(s.conductor() - 1));
        }
    }

    #[test]
    fn symmetric_means_gap_pairing(s in semigroup()) {
        let c = s.conductor();
        let paired = (0..c).all(|x| s.contains(x) != s.contains(c - 1 - x));
        prop_assert_eq!(paired, s.is_symmetric());
    }

    #[test]
    fn arf_tests_agree(s in semigroup()) {
        prop_assert_eq!(is_arf(&s), is_arf_via_full_definition(&s));
    }

    #[test]
    fn closure_is_arf_extensive_idempotent(s in semigroup()) {
        let t = arf_closure(&s);
        prop_assert!(is_arf(&t));
        prop_assert!(is_arf_via_full_definition(&t));
        prop_assert!((0..=s.conductor()).all(|x| !s.contains(x) || t.contains(x)));
        prop_assert_eq!(&arf_closure(&t), &t);
        if is_arf(&s) {
            prop_assert_eq!(&t, &s);
        }
    }

    #[test]
    fn aset_invariants_all_semigroups(s in semigroup()) {
        let c = s.conductor();
        let r = s.conductor_index();
        for j in 1..=(c as usize + r + 10) {
            let rho = s.nth_pole(j);
            let a = aset(&s, rho).unwrap();
            prop_assert!(a.elements.iter().all(|&p| a.elements.binary_search(&(rho - p)).is_ok()));
            prop_assert!(1 <= a.beta && a.beta <= a.alpha);
            prop_assert_eq!(a.cardinality, aset_cardinality(&s, rho));
            // parity: odd exactly on 2S, and bounded by 2i - 1 at 2 rho_i
            let half = (rho % 2 == 0).then(|| s.pole_index(rho / 2).ok()).flatten();
            prop_assert_eq!(a.cardinality % 2 == 1, half.is_some());
            if let Some(i) = half {
                prop_assert!(a.cardinality < 2 * i);
            }
            if j >= c as usize + r {
                prop_assert_eq!(a.cardinality as u64 + s.genus(), j as u64);
            }
        }
    }

    #[test]
    fn prefix_lower_bound(s in semigroup()) {
        prop_assume!(!s.is_naturals());
        let r = s.conductor_index();
        for i in 2..r + 3 {
            let p = p_index(&s, i - 1).unwrap();
            for rho in p + 1..p + 12 {
                let a = aset(&s, rho).unwrap();
                prop_assert!(a.alpha >= i);
                if i < r {
                    prop_assert!(a.cardinality >= 2 * i);
                }
            }
        }
    }

    #[test]
    fn arf_aset_structure(s in arf_semigroup()) {
        let c = s.conductor();
        let r = s.conductor_index();
        for i in 1..r + 6 {
            let a = aset(&s, 2 * s.nth_pole(i)).unwrap();
            prop_assert_eq!((a.beta, a.cardinality), (i, 2 * i - 1));
            let p = aset(&s, p_index(&s, i).unwrap()).unwrap();
            prop_assert_eq!(p.alpha, i);
            if i < r {
                prop_assert_eq!((p.beta, p.cardinality), (i, 2 * i));
            }
        }
        for j in 1..c as usize + r {
            let rho = s.nth_pole(j);
            let a = aset(&s, rho).unwrap();
            prop_assert!(a.beta < r && a.cardinality <= 2 * r - 2);
            let mut expected: Vec<u64> = (1..=a.beta)
                .flat_map(|k| [s.nth_pole(k), rho - s.nth_pole(k)])
                .collect();
            expected.sort_unstable();
            expected.dedup();
            prop_assert_eq!(&a.elements, &expected);
            let odd = 2 * s.nth_pole(a.beta) == rho;
            prop_assert_eq!(a.cardinality, if odd { 2 * a.beta - 1 } else { 2 * a.beta });
            if j >= s.nth_pole(r - 1) as usize + r {
                prop_assert_eq!(a.beta, r - 1);
            }
        }
    }

    #[test]
    fn order_bound_closed_form_matches_scan(s in arf_semigroup()) {
        let top = s.conductor() + s.conductor_index() as u64 + 5;
        let brute = order_bound_bruteforce_range(&s, top);
        for l in 1..=top {
            let arf = order_bound_arf(&s, l).unwrap();
            prop_assert_eq!(arf, brute[l as usize - 1], "l = {}", l);
            if l >= s.conductor() + s.conductor_index() as u64 - 2 {
                prop_assert_eq!(arf as i64, goppa_bound(&s, l));
            }
        }
    }

    #[test]
    fn order_bound_general(s in semigroup()) {
        let top = s.conductor() + s.conductor_index() as u64 + 5;
        let brute = order_bound_bruteforce_range(&s, top);
        for l in 1..=top {
            prop_assert_eq!(brute[l as usize - 1], order_bound_bruteforce(&s, l));
            prop_assert!(goppa_bound(&s, l) <= brute[l as usize - 1] as i64);
        }
        prop_assert!(brute.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn redundancy_sequence(s in semigroup()) {
        let r = s.conductor_index() as u64;
        let g = s.genus();
        for d in 1..=2 * r + 5 {
            let rd = r_set(&s, d).len();
            prop_assert_eq!(r_set(&s, d + 1).len(), rd + s_set(&s, d).len());
            if d + 1 >= 2 * r {
                prop_assert_eq!(rd as u64, d + g - 1);
            }
        }
        if r >= 2 {
            prop_assert_eq!(r_set(&s, 2 * r - 2).len() as u64, s.nth_pole(r as usize - 1) + r - 1);
        }
        prop_assert_eq!(is_stable(&s), is_arf(&s));
        if is_arf(&s) && !s.is_naturals() {
            for d in 1..=2 * r + 5 {
                prop_assert_eq!(r_card_arf(&s, d).unwrap(), r_set(&s, d).len() as u64);
            }
        } else if let Some(d) = stability_witness(&s) {
            prop_assert!(d % 2 == 1 && d + 3 <= 2 * r);
            prop_assert!(s_set(&s, d).len() != 1 || r_set(&s, d).len() as u64 != stable_formula(&s, d));
        }
    }

    #[test]
    fn odd_level_sets_are_singletons(s in arf_semigroup()) {
        let r = s.conductor_index() as u64;
        for i in 1..r {
            prop_assert_eq!(s_set(&s, 2 * i - 1), vec![2 * s.nth_pole(i as usize)]);
        }
    }

    #[test]
    fn large_beta_poles_below_p_t(s in arf_semigroup()) {
        let r = s.conductor_index();
        for t in 0..r.saturating_sub(1) {
            let anchor = s.nth_pole(t + 1);
            let p_t = s.conductor() + anchor - 1;
            let found: Vec<u64> = (0..=p_t)
                .filter(|&x| s.contains(x))
                .filter(|&x| aset(&s, x).unwrap().beta > t)
                .collect();
            let expected: Vec<u64> = (t + 1..r).map(|i| anchor + s.nth_pole(i)).collect();
            prop_assert_eq!(found, expected, "t = {}", t);
        }
    }

    #[test]
    fn improvement_matches_redundancy(s in arf_semigroup(), extra in 0u64..10) {
        let n = 2 * s.conductor() + extra;
        for l in 1..s.conductor() + s.conductor_index() as u64 + 4 {
            let imp = dimension_improvement(&s, l, n).unwrap();
            prop_assert_eq!(imp.delta, l - r_card_arf(&s, imp.d).unwrap());
            prop_assert_eq!(imp.d, order_bound_bruteforce(&s, l));
        }
    }

    #[test]
    fn inductive_sequences_are_arf(
        a in prop::collection::vec(2u64..5, 1..4),
        slack in prop::collection::vec(0u64..4, 4),
        b1 in 1u64..4,
    ) {
        let mut b = vec![b1];
        for k in 1..a.len() {
            b.push(a[k - 1] * b[k - 1] + slack[k]);
        }
        let spec = InductiveSpec::new(a.clone(), b).unwrap();
        let mut prev = inductive_semigroup(&spec, 1).unwrap();
        for n in 2..=spec.levels() {
            let h = inductive_semigroup(&spec, n).unwrap();
            prop_assert!(is_arf(&h));
            let p = inductive_params(&spec, n).unwrap();
            prop_assert_eq!((p.conductor, p.conductor_index as usize, p.genus),
                (h.conductor(), h.conductor_index(), h.genus()));
            for i in 1..=h.conductor_index() {
                prop_assert_eq!(h.nth_pole(i), spec.a(n) * prev.nth_pole(i));
            }
            prev = h;
        }
    }
}
