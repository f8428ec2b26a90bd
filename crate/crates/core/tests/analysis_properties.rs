//! End-to-end properties of the analysis layer: certificate soundness
//! against exact difference scans, order surveys, the S_8 order break, and
//! distance inequalities.

use num::{BigRational, One, Zero};
use symwalk_core::arith::{factorial, ratio};
use symwalk_core::{
    builtin_walk, check_order, difference, distribution, linf_distance, separation,
    stabilization_survey, tv_distance, CertOutcome, OrderKind, Parity, WalkKind, WalkSpec,
};

fn sign_of(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x > &BigRational::zero() {
        1
    } else {
        -1
    }
}

/// Every certified pair's sign must match the exact difference at every
/// admissible time in `[t_star, t_star + window]`, and the uncertified
/// pairs must be exactly `expect_uncertified` (unordered class pairs).
fn scan_certificates(
    walk: &WalkSpec,
    t_parity: Parity,
    window: u64,
    expect_uncertified: &[(&str, &str)],
) {
    let survey = stabilization_survey(walk, t_parity).unwrap();
    let mut uncertified: Vec<(String, String)> = survey
        .uncertified()
        .iter()
        .map(|c| (c.alpha().to_string(), c.beta().to_string()))
        .collect();
    uncertified.sort();
    let mut expected: Vec<(String, String)> = expect_uncertified
        .iter()
        .map(|(a, b)| {
            let (a, b): (symwalk_core::CycleType, symwalk_core::CycleType) =
                (a.parse().unwrap(), b.parse().unwrap());
            if a <= b {
                (a.to_string(), b.to_string())
            } else {
                (b.to_string(), a.to_string())
            }
        })
        .collect();
    expected.sort();
    assert_eq!(uncertified, expected, "{} at {t_parity}", walk.label());
    for cert in survey.pairs() {
        let CertOutcome::Certified { t_star, sign } = cert.outcome() else {
            continue;
        };
        assert!(*t_star <= 200, "{} vs {}", cert.alpha(), cert.beta());
        for t in *t_star..=(*t_star + window) {
            if !cert.parity().admits_int(t) {
                continue;
            }
            let diff = difference(walk, t, cert.alpha(), cert.beta()).unwrap();
            assert_eq!(
                sign_of(&diff),
                *sign,
                "{} vs {} at t = {t} under {}",
                cert.alpha(),
                cert.beta(),
                walk.label()
            );
        }
    }
}

#[test]
fn certified_signs_hold_for_fifty_steps_transposition() {
    for n in 5..=8u32 {
        let w = builtin_walk(&WalkKind::Transposition, n).unwrap();
        scan_certificates(&w, Parity::Even, 50, &[]);
        scan_certificates(&w, Parity::Odd, 50, &[]);
    }
}

#[test]
fn certified_signs_hold_for_fifty_steps_three_cycle() {
    // The even-n exceptions are pairs whose lead eigenvalues are negative
    // of maximal magnitude: their difference alternates sign forever, so
    // they cannot certify over both parities at once. Each does certify at
    // either fixed parity, with opposite signs.
    for n in 5..=8u32 {
        let w = builtin_walk(&WalkKind::ThreeCycle, n).unwrap();
        let alternating: &[(&str, &str)] = match n {
            6 => &[("3^2", "2 4")],
            8 => &[("4^2", "3 5")],
            _ => &[],
        };
        scan_certificates(&w, Parity::Any, 50, alternating);
        for (a, b) in alternating {
            let (a, b): (symwalk_core::CycleType, symwalk_core::CycleType) =
                (a.parse().unwrap(), b.parse().unwrap());
            let even = symwalk_core::certified_stabilization_time(&w, &a, &b, Parity::Even)
                .unwrap();
            let odd = symwalk_core::certified_stabilization_time(&w, &a, &b, Parity::Odd)
                .unwrap();
            let (CertOutcome::Certified { sign: se, t_star: te },
                 CertOutcome::Certified { sign: so, t_star: to }) =
                (even.outcome(), odd.outcome())
            else {
                panic!("alternating pair must certify at each fixed parity");
            };
            assert_eq!(*se, -*so, "{a} vs {b}");
            for t in *te..=(*te + 20) {
                let expect = if t % 2 == 0 { *se } else { *so };
                if t >= *to || t % 2 == 0 {
                    let diff = difference(&w, t, &a, &b).unwrap();
                    assert_eq!(sign_of(&diff), expect, "{a} vs {b} at t = {t}");
                }
            }
        }
    }
}

#[test]
fn certified_signs_hold_for_fifty_steps_full_cycle() {
    for n in 5..=8u32 {
        let w = builtin_walk(&WalkKind::NCycle, n).unwrap();
        scan_certificates(&w, Parity::Even, 50, &[]);
        scan_certificates(&w, Parity::Odd, 50, &[]);
    }
}

#[test]
fn surveys_agree_with_the_governing_orders() {
    for n in 5..=9u32 {
        let tau = builtin_walk(&WalkKind::Transposition, n).unwrap();
        for parity in [Parity::Even, Parity::Odd] {
            let survey = stabilization_survey(&tau, parity).unwrap();
            assert!(survey.uncertified().is_empty());
            assert!(survey.mismatches(OrderKind::Cl).unwrap().is_empty());
        }
        let three = builtin_walk(&WalkKind::ThreeCycle, n).unwrap();
        let survey = stabilization_survey(&three, Parity::Any).unwrap();
        assert!(survey.mismatches(OrderKind::AltCl).unwrap().is_empty());
        assert_eq!(survey.uncertified().len(), usize::from(n == 6 || n == 8));
        let full = builtin_walk(&WalkKind::NCycle, n).unwrap();
        let even = stabilization_survey(&full, Parity::Even).unwrap();
        assert!(even.uncertified().is_empty());
        assert!(even.mismatches(OrderKind::AltCl).unwrap().is_empty());
        let odd = stabilization_survey(&full, Parity::Odd).unwrap();
        assert!(odd.uncertified().is_empty());
        assert!(odd.mismatches(OrderKind::NegCl).unwrap().is_empty());
    }
}

#[test]
fn the_s8_break_appears_at_four_and_heals_by_eight() {
    let w = builtin_walk(&WalkKind::Transposition, 8).unwrap();
    let seven: Vec<symwalk_core::CycleType> =
        vec!["1 7".parse().unwrap(), "2^4".parse().unwrap()];
    for (t, broken) in [(2u64, false), (4, true), (6, true), (8, false)] {
        let d = distribution(&w, t).unwrap();
        let classes = w.reachable_classes(t).unwrap();
        let inversions = check_order(&d, OrderKind::Cl, &classes).unwrap();
        if broken {
            // The only wrong pair is the unreachable-or-barely-reachable
            // (1,7) against the four double-transpositions.
            assert_eq!(inversions, vec![(seven[0].clone(), seven[1].clone())], "t = {t}");
        } else {
            assert!(inversions.is_empty(), "t = {t}");
        }
    }
    // At the break time the probabilities are as the inversion says.
    let d4 = distribution(&w, 4).unwrap();
    assert!(d4.prob(&seven[0]).unwrap().is_zero());
    assert!(d4.prob(&seven[1]).unwrap() > &BigRational::zero());
}

#[test]
fn order_checks_settle_at_large_times() {
    let w = builtin_walk(&WalkKind::Transposition, 7).unwrap();
    for t in [200u64, 201] {
        let d = distribution(&w, t).unwrap();
        let classes = w.reachable_classes(t).unwrap();
        assert!(check_order(&d, OrderKind::Cl, &classes).unwrap().is_empty());
    }
}

#[test]
fn initial_distance_to_the_coset_uniform() {
    for kind in [WalkKind::Transposition, WalkKind::ThreeCycle, WalkKind::NCycle] {
        for n in 4..=7u32 {
            let w = builtin_walk(&kind, n).unwrap();
            let d = distribution(&w, 0).unwrap();
            let expected = BigRational::one() - ratio(2, factorial(n as u64));
            assert_eq!(tv_distance(&w, &d).unwrap(), expected, "{kind} on S_{n}");
        }
    }
    // A lazy walk mixes toward all of S_n instead.
    let w = builtin_walk(&WalkKind::LazyTransposition(ratio(1, 2)), 5).unwrap();
    let d = distribution(&w, 0).unwrap();
    assert_eq!(
        tv_distance(&w, &d).unwrap(),
        BigRational::one() - ratio(1, 120)
    );
}

#[test]
fn lazy_total_variation_is_monotone() {
    for n in 4..=7u32 {
        let w = builtin_walk(&WalkKind::LazyTransposition(ratio(1, 2)), n).unwrap();
        let mut last: Option<BigRational> = None;
        for t in 0..=50u64 {
            let tv = tv_distance(&w, &distribution(&w, t).unwrap()).unwrap();
            if let Some(prev) = last {
                assert!(tv <= prev, "TV rose at t = {t}, n = {n}");
            }
            last = Some(tv);
        }
    }
}

#[test]
fn separation_dominates_total_variation() {
    for kind in [
        WalkKind::Transposition,
        WalkKind::LazyTransposition(ratio(1, 2)),
        WalkKind::ThreeCycle,
        WalkKind::NCycle,
    ] {
        for n in 3..=7u32 {
            let w = builtin_walk(&kind, n).unwrap();
            for t in 0..=50u64 {
                let d = distribution(&w, t).unwrap();
                let tv = tv_distance(&w, &d).unwrap();
                let sep = separation(&w, &d).unwrap();
                assert!(sep >= tv, "{kind} on S_{n} at t = {t}");
                // The relative sup-norm dominates separation in turn.
                assert!(linf_distance(&w, &d).unwrap() >= sep);
            }
        }
    }
}
