//! Acceptance suite: one test per headline guarantee of the library, each
//! printing a single PASS line with measured details and enforcing its own
//! wall-clock budget. Run with `cargo test --test acceptance -- --nocapture`
//! to see the full scoreboard.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, One, Signed, Zero};
use symwalk_core::arith::{binomial, factorial, ratio};
use symwalk_core::{
    builtin_walk, certified_stabilization_time, character, character_polynomial, char_ratio,
    check_order, compare, dimension, distribution, convolve_oracle, enumerate_partitions,
    extremes, ncycle_character, ncycle_distribution_by_hooks, parse_fraction, rank,
    stabilization_survey, stationary_split, three_cycle_ratio,
    transposition_ratio_two_row_with_tail, CertOutcome, CharacterTable, Comparison, CycleType,
    OrderKind, Parity, Partition, SurveyReport, WalkKind,
};

fn pt(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ct(s: &str) -> CycleType {
    s.parse().unwrap()
}

/// Prints the scoreboard line for one criterion and enforces its budget.
fn pass(criterion: &str, start: Instant, budget: Duration, details: &str) {
    let elapsed = start.elapsed();
    println!("{criterion}: PASS in {elapsed:.2?} — {details}");
    assert!(
        elapsed < budget,
        "{criterion} finished correct but blew its {budget:?} budget: {elapsed:.2?}"
    );
}

#[test]
fn criterion_01_character_fidelity() {
    let start = Instant::now();

    // Worked single value: χ_{[4,2]} at the class (1², 4).
    assert_eq!(character(&pt("4,2"), &ct("1^2 4")).unwrap(), BigInt::from(-1));

    // Full tables up to S_8: both orthogonality relations hold exactly,
    // and the dimensions satisfy Σ d² = n!.
    for n in 1..=8u32 {
        let table = CharacterTable::build(n).unwrap();
        table.verify_orthogonality().unwrap();
        let square_sum: BigInt = table.dims().iter().map(|d| d * d).sum();
        assert_eq!(square_sum, factorial(n as u64), "Σ d² ≠ {n}! in S_{n}");
    }

    pass(
        "criterion 01 (character fidelity)",
        start,
        Duration::from_secs(10),
        "χ_[4,2]((1²,4)) = -1; tables for n ≤ 8 pass both orthogonality relations and Σd² = n!",
    );
}

#[test]
fn criterion_02_oracle_equivalence() {
    let start = Instant::now();

    let kinds = [
        WalkKind::Transposition,
        WalkKind::LazyTransposition(parse_fraction("1/2").unwrap()),
        WalkKind::ThreeCycle,
        WalkKind::NCycle,
    ];
    let mut checked = 0u32;
    for kind in &kinds {
        for n in 3..=7u32 {
            let walk = builtin_walk(kind, n).unwrap();
            for t in 0..=30u64 {
                let fourier = distribution(&walk, t).unwrap();
                let oracle = convolve_oracle(&walk, t).unwrap();
                assert_eq!(
                    fourier.probs(),
                    oracle.probs(),
                    "Fourier inversion disagrees with the convolution oracle for {} on S_{n} at t={t}",
                    walk.label()
                );
                checked += 1;
            }
        }
    }

    pass(
        "criterion 02 (oracle equivalence)",
        start,
        Duration::from_secs(120),
        &format!("{checked} exact distributions (4 walks × n ∈ {{3..7}} × t ∈ {{0..30}}) match the class-algebra convolution oracle"),
    );
}

#[test]
fn criterion_03_closed_forms() {
    let start = Instant::now();

    // Transposition eigenvalues on the two-row-with-tail family
    // [n-i, i-k, 1^k]: exactly 1 - i(n-i+k+1)/C(n,2).
    let mut tau_checked = 0u32;
    for n in 2..=10u32 {
        let transposition = CycleType::transposition(n).unwrap();
        let pairs = ratio(BigInt::from(n) * (n - 1), 2);
        for i in 1..=n / 2 {
            for k in 0..i {
                let mut parts = vec![n - i, i - k];
                parts.extend(std::iter::repeat(1).take(k as usize));
                let lambda = Partition::new(parts).unwrap();
                let expect =
                    BigRational::one() - ratio(i * (n - i + k + 1), 1) / pairs.clone();
                assert_eq!(
                    char_ratio(&lambda, &transposition).unwrap(),
                    expect,
                    "transposition eigenvalue at λ = {lambda} (n={n}, i={i}, k={k})"
                );
                assert_eq!(
                    transposition_ratio_two_row_with_tail(n, i, k).unwrap(),
                    expect
                );
                tau_checked += 1;
            }
        }
    }

    // Three-cycle ratios from the diagonal-cube formula: with
    // M_3 = Σ_j (λ_j-j)(λ_j-j+1)(2λ_j-2j+1) + j(j-1)(2j-1), the eigenvalue
    // at every shape is M_3 / (2·n(n-1)(n-2)) - (3/2)/(n-2).
    let mut three_checked = 0u32;
    for n in 3..=10u32 {
        let three = CycleType::three_cycle(n);
        for lambda in enumerate_partitions(n).unwrap() {
            let mut m3 = BigInt::zero();
            for (row, &part) in lambda.parts().iter().enumerate() {
                let j = row as i64 + 1;
                let a = part as i64 - j;
                m3 += BigInt::from(a * (a + 1) * (2 * a + 1) + j * (j - 1) * (2 * j - 1));
            }
            let expect = ratio(m3, 2 * (n as i64) * (n as i64 - 1) * (n as i64 - 2))
                - ratio(3, 2 * (n as i64 - 2));
            assert_eq!(
                three_cycle_ratio(&lambda).unwrap(),
                expect,
                "three-cycle closed form at λ = {lambda}"
            );
            if let Ok(class) = &three {
                assert_eq!(char_ratio(&lambda, class).unwrap(), expect);
            }
            three_checked += 1;
        }
    }

    // n-cycle characters obey the hook rule: (-1)^k on the hook [n-k, 1^k]
    // (whose dimension is C(n-1, k)) and zero everywhere else.
    let mut hook_checked = 0u32;
    for n in 2..=10u32 {
        let full = CycleType::full_cycle(n).unwrap();
        for lambda in enumerate_partitions(n).unwrap() {
            let value = ncycle_character(&lambda);
            if lambda.part(2) <= 1 {
                let k = lambda.parts().len() as u32 - 1;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(value, BigInt::from(sign), "hook rule sign at {lambda}");
                assert_eq!(dimension(&lambda), binomial(n as u64 - 1, k as u64));
            } else {
                assert!(value.is_zero(), "non-hook {lambda} has nonzero n-cycle character");
            }
            assert_eq!(value, character(&lambda, &full).unwrap());
            hook_checked += 1;
        }
    }

    pass(
        "criterion 03 (closed-form agreement)",
        start,
        Duration::from_secs(30),
        &format!("n ≤ 10: {tau_checked} transposition eigenvalues, {three_checked} three-cycle ratios, {hook_checked} n-cycle characters match their closed forms"),
    );
}

#[test]
fn criterion_04_detector_theorem() {
    let start = Instant::now();

    // Non-detectors are blind: for every same-sign pair of classes first
    // differing at cycle length i*, every shape that is not an i*-cycle
    // detector takes equal values on the pair.
    let mut pairs_checked = 0u32;
    for n in 2..=9u32 {
        let table = CharacterTable::build(n).unwrap();
        let classes = table.classes();
        for a_idx in 0..classes.len() {
            for b_idx in a_idx + 1..classes.len() {
                let (alpha, beta) = (&classes[a_idx], &classes[b_idx]);
                if alpha.sign() != beta.sign() {
                    continue;
                }
                let i_star = (1..=n)
                    .find(|&i| alpha.multiplicity(i) != beta.multiplicity(i))
                    .expect("distinct classes differ at some cycle length");
                for (row, lambda) in table.partitions().iter().enumerate() {
                    if lambda.is_cycle_detector(i_star) {
                        continue;
                    }
                    assert_eq!(
                        table.entry(row, a_idx),
                        table.entry(row, b_idx),
                        "non-detector {lambda} separates {alpha} from {beta} (first difference at {i_star}-cycles)"
                    );
                }
                pairs_checked += 1;
            }
        }
    }

    // The character polynomial of μ = λ minus its first row uses exactly
    // the cycle lengths up to h_{2,1}(λ), for every λ of weight ≤ 6 below
    // the first row.
    let mut polys: BTreeMap<Partition, u32> = BTreeMap::new();
    let mut shapes_checked = 0u32;
    for n in 1..=9u32 {
        for lambda in enumerate_partitions(n).unwrap() {
            if n - lambda.part(1) > 6 {
                continue;
            }
            let mu = Partition::new(lambda.parts()[1..].to_vec()).unwrap();
            let max_var = *polys.entry(mu.clone()).or_insert_with(|| {
                character_polynomial(&mu)
                    .unwrap()
                    .max_variable_index()
                    .unwrap()
            });
            assert_eq!(
                max_var,
                lambda.subhook_lengths().0,
                "variable support of the character polynomial of μ = {mu} vs h_2,1 of λ = {lambda}"
            );
            shapes_checked += 1;
        }
    }

    pass(
        "criterion 04 (detector theorem)",
        start,
        Duration::from_secs(120),
        &format!("n ≤ 9: non-detectors equal on all {pairs_checked} same-sign pairs; polynomial variable support = h_2,1 on {shapes_checked} shapes"),
    );
}

/// Shared shape of the certification assertions in criterion 5: every pair
/// certified (no ties, nothing uncertified), zero mismatches against the
/// governing order, and a fully assembled strictly-ordered ranking.
fn assert_survey_is_total_order(survey: &SurveyReport, kind: OrderKind, label: &str) {
    assert!(
        survey.uncertified().is_empty(),
        "{label}: uncertified pairs {:?}",
        survey
            .uncertified()
            .iter()
            .map(|c| (c.alpha().to_string(), c.beta().to_string()))
            .collect::<Vec<_>>()
    );
    assert!(
        !survey
            .pairs()
            .iter()
            .any(|c| matches!(c.outcome(), CertOutcome::Tie)),
        "{label}: unexpected exact tie"
    );
    assert!(
        survey.mismatches(kind).unwrap().is_empty(),
        "{label}: certified signs contradict {kind}"
    );
    let groups = survey.groups().expect("fully certified survey assembles");
    assert!(
        groups.iter().all(|g| g.len() == 1),
        "{label}: assembled order has a tied level"
    );
    assert_eq!(groups.len(), survey.classes().len());
}

#[test]
fn criterion_05_order_certification() {
    let start = Instant::now();

    // Transposition walk: every same-parity pair certifies, the eventual
    // order is CL, and the certified horizon sits far below the mixing-type
    // bound max(4.14n² + 6n·ln n + 6·ln2·n, 2·ln2·n² + 24n·ln n + 36n).
    let mut tau_t_max = 0u64;
    for n in 5..=8u32 {
        let walk = builtin_walk(&WalkKind::Transposition, n).unwrap();
        let nf = n as f64;
        let bound = (4.14 * nf * nf + 6.0 * nf * nf.ln() + 6.0 * 2f64.ln() * nf)
            .max(2.0 * 2f64.ln() * nf * nf + 24.0 * nf * nf.ln() + 36.0 * nf);
        for parity in [Parity::Even, Parity::Odd] {
            let survey = stabilization_survey(&walk, parity).unwrap();
            assert_survey_is_total_order(&survey, OrderKind::Cl, &format!("τ n={n} {parity}"));
            assert!(
                (survey.t_max() as f64) <= bound,
                "τ n={n} {parity}: t_max {} exceeds the bound {bound:.1}",
                survey.t_max()
            );
            tau_t_max = tau_t_max.max(survey.t_max());
        }
    }

    // Three-cycle walk: the alternating-sign order on even classes. For
    // n ∈ {5, 7} it is certified outright over both time parities. For
    // n ∈ {6, 8} exactly one pair is led by negative eigenvalues of the
    // same magnitude as the positive lead, so its difference alternates
    // sign forever; the order is certified at every even time for n = 6
    // and every odd time for n = 8, and the alternating pair is pinned by
    // opposite fixed-parity certificates.
    for n in 5..=8u32 {
        let walk = builtin_walk(&WalkKind::ThreeCycle, n).unwrap();
        let survey = stabilization_survey(&walk, Parity::Any).unwrap();
        assert!(
            survey.mismatches(OrderKind::AltCl).unwrap().is_empty(),
            "three-cycle n={n}: certified signs contradict alternating order"
        );
        let alternating: &[(&str, &str)] = match n {
            6 => &[("3^2", "2 4")],
            8 => &[("4^2", "3 5")],
            _ => &[],
        };
        if alternating.is_empty() {
            assert_survey_is_total_order(&survey, OrderKind::AltCl, &format!("3-cycle n={n}"));
        } else {
            let mut got: Vec<(String, String)> = survey
                .uncertified()
                .iter()
                .map(|c| (c.alpha().to_string(), c.beta().to_string()))
                .collect();
            got.sort();
            let mut expect: Vec<(String, String)> = alternating
                .iter()
                .map(|(a, b)| {
                    let (a, b) = (ct(a), ct(b));
                    let (a, b) = if a <= b { (a, b) } else { (b, a) };
                    (a.to_string(), b.to_string())
                })
                .collect();
            expect.sort();
            assert_eq!(got, expect, "three-cycle n={n}: unexpected uncertified set");
            for (a, b) in alternating {
                let (alpha, beta) = (ct(a), ct(b));
                let even =
                    certified_stabilization_time(&walk, &alpha, &beta, Parity::Even).unwrap();
                let odd =
                    certified_stabilization_time(&walk, &alpha, &beta, Parity::Odd).unwrap();
                match (even.outcome(), odd.outcome()) {
                    (
                        CertOutcome::Certified { sign: se, .. },
                        CertOutcome::Certified { sign: so, .. },
                    ) => assert_eq!(*se, -*so, "pair {a}|{b} does not alternate"),
                    other => panic!("pair {a}|{b} lacks fixed-parity certificates: {other:?}"),
                }
            }
            // At the parity where the alternating pair agrees with the
            // order, the whole coset certifies to it.
            let good_parity = if n == 6 { Parity::Even } else { Parity::Odd };
            let fixed = stabilization_survey(&walk, good_parity).unwrap();
            assert_survey_is_total_order(
                &fixed,
                OrderKind::AltCl,
                &format!("3-cycle n={n} {good_parity}"),
            );
        }
    }

    // n-cycle walk: reversed order at odd times, alternating-sign order at
    // even times, certified for every pair.
    for n in 5..=9u32 {
        let walk = builtin_walk(&WalkKind::NCycle, n).unwrap();
        for (parity, kind) in [(Parity::Even, OrderKind::AltCl), (Parity::Odd, OrderKind::NegCl)] {
            let survey = stabilization_survey(&walk, parity).unwrap();
            assert_survey_is_total_order(&survey, kind, &format!("n-cycle n={n} {parity}"));
        }
    }

    pass(
        "criterion 05 (order certification)",
        start,
        Duration::from_secs(600),
        &format!("transposition ⇒ CL (n ≤ 8, max t_max {tau_t_max}); three-cycle ⇒ alternating order on even classes (n ∈ {{5,7}} at all times, n = 6 at even and n = 8 at odd times, one forever-alternating pair each pinned); n-cycle ⇒ reversed/alternating order at odd/even times (n ≤ 9)"),
    );
}

#[test]
fn criterion_06_break_reproduction() {
    let start = Instant::now();

    let walk = builtin_walk(&WalkKind::Transposition, 8).unwrap();
    let high = ct("1 7");
    let low = ct("2^4");

    // At t = 4 the class (1,7) is unreachable while (2⁴) is not, inverting
    // the eventual order on this pair.
    let dist = distribution(&walk, 4).unwrap();
    assert!(dist.prob(&high).unwrap().is_zero());
    assert!(dist.prob(&low).unwrap().is_positive());
    let classes = walk.reachable_classes(4).unwrap();
    let violations = check_order(&dist, OrderKind::Cl, &classes).unwrap();
    assert_eq!(violations, vec![(high.clone(), low.clone())]);

    // By t = 8 the inversion has healed...
    let healed = distribution(&walk, 8).unwrap();
    assert!(check_order(&healed, OrderKind::Cl, &classes).unwrap().is_empty());

    // ...and the certificate confirms the eventual sign favors (1,7).
    let cert = certified_stabilization_time(&walk, &high, &low, Parity::Even).unwrap();
    let CertOutcome::Certified { t_star, sign } = cert.outcome() else {
        panic!("the pair (1,7) | (2⁴) must certify at even times");
    };
    assert_eq!(*sign, 1);
    assert!(*t_star > 4);

    pass(
        "criterion 06 (break reproduction)",
        start,
        Duration::from_secs(60),
        &format!("S_8 at t=4: P((1,7)) = 0 < P((2⁴)), the only CL inversion; healed by t=8; certified sign +1 from t_star = {t_star}"),
    );
}

#[test]
fn criterion_07_stationary_split() {
    let start = Instant::now();

    let mut ts = Vec::new();
    for n in [7u32, 8] {
        let target = 6.0 * (n as f64) * (n as f64).ln();
        let mut t = target.ceil() as u64;
        if t % 2 == 1 {
            t += 1;
        }
        let walk = builtin_walk(&WalkKind::Transposition, n).unwrap();
        let dist = distribution(&walk, t).unwrap();
        let split = stationary_split(&walk, &dist).unwrap();
        assert!(
            split.all_agree(),
            "S_{n} at t={t}: {} classes sit on the wrong side of uniform",
            split.disagreements()
        );
        ts.push((n, t, split.rows().len()));
    }
    assert_eq!(ts[0].1, 82);
    assert_eq!(ts[1].1, 100);

    pass(
        "criterion 07 (stationary split)",
        start,
        Duration::from_secs(120),
        &format!("above/below-uniform rule holds on every class: n=7 at t=82 ({} classes), n=8 at t=100 ({} classes)", ts[0].2, ts[1].2),
    );
}

#[test]
fn criterion_08_extremes() {
    let start = Instant::now();

    let mut combos = 0u32;
    for n in 5..=9u32 {
        for kind in [WalkKind::Transposition, WalkKind::ThreeCycle, WalkKind::NCycle] {
            let walk = builtin_walk(&kind, n).unwrap();
            // (survey parity, parity of probed times, governing order); the
            // three-cycle walk certifies over both parities at once and its
            // order is evaluated at even times.
            let cases: &[(Parity, Parity, OrderKind)] = match kind {
                WalkKind::Transposition => &[
                    (Parity::Even, Parity::Even, OrderKind::Cl),
                    (Parity::Odd, Parity::Odd, OrderKind::Cl),
                ],
                WalkKind::ThreeCycle => &[(Parity::Any, Parity::Even, OrderKind::AltCl)],
                _ => &[
                    (Parity::Even, Parity::Even, OrderKind::AltCl),
                    (Parity::Odd, Parity::Odd, OrderKind::NegCl),
                ],
            };
            // Classes occupied at the probed times: the even coset for
            // even-step walks, otherwise the coset matching the time parity.
            for &(survey_parity, probe_parity, order) in cases {
                let survey = stabilization_survey(&walk, survey_parity).unwrap();
                let mut t = survey.t_max().max(1);
                if (t % 2 == 0) != (probe_parity == Parity::Even) {
                    t += 1;
                }
                // First probed time at which every coset class is reachable,
                // so that structurally-zero probabilities cannot fake a
                // bottom group.
                let dist = loop {
                    let d = distribution(&walk, t).unwrap();
                    if survey.classes().iter().all(|c| !d.prob(c).unwrap().is_zero()) {
                        break d;
                    }
                    t += 2;
                };
                let class_parity = if walk.step_sign() == Some(1) {
                    Parity::Even
                } else {
                    probe_parity
                };
                let (top, bottom) = extremes(order, n, class_parity).unwrap();
                let report = rank(&dist, survey.classes()).unwrap();
                let groups = report.groups();
                assert_eq!(
                    groups.first().unwrap().1,
                    vec![top.clone()],
                    "{} n={n} at t={t}: most likely class is not {top}",
                    walk.label()
                );
                assert_eq!(
                    groups.last().unwrap().1,
                    vec![bottom.clone()],
                    "{} n={n} at t={t}: least likely class is not {bottom}",
                    walk.label()
                );
                combos += 1;
            }
        }
    }

    pass(
        "criterion 08 (extremes)",
        start,
        Duration::from_secs(300),
        &format!("{combos} walk/parity combinations for n ∈ {{5..9}} put the tabulated extreme classes at the top and bottom of the exact ranking"),
    );
}

#[test]
fn criterion_09_ncycle_small_time() {
    let start = Instant::now();

    // S_18, four n-cycle steps, computed over hook shapes only: among even
    // classes, more fixed points always means strictly more likely.
    let dist = ncycle_distribution_by_hooks(18, 4).unwrap();
    let evens: Vec<&CycleType> = dist.probs().keys().filter(|c| c.sign() == 1).collect();
    assert_eq!(evens.len(), 195);
    for class in &evens {
        assert!(
            !dist.prob(class).unwrap().is_zero(),
            "even class {class} unreachable at t=4"
        );
    }
    let mut ordered_pairs = 0u32;
    for a in &evens {
        for b in &evens {
            if a.multiplicity(1) > b.multiplicity(1) {
                assert!(
                    dist.prob(a).unwrap() > dist.prob(b).unwrap(),
                    "a_1 ordering fails: {a} vs {b}"
                );
                ordered_pairs += 1;
            }
        }
    }
    assert_eq!(ordered_pairs, 16546);

    pass(
        "criterion 09 (n-cycle small-time ordering)",
        start,
        Duration::from_secs(60),
        &format!("S_18 at t=4: all {ordered_pairs} fixed-point-comparable pairs of the 195 even classes are strictly ordered by a_1"),
    );
}

#[test]
fn criterion_10_order_incompatibility_fixtures() {
    let start = Instant::now();

    // Two triples of classes of S_6 on which CL disagrees with majorization
    // and with Lulov's lexicographic order; each chain is listed from
    // greatest to least under its order.
    let chains: &[(OrderKind, [&str; 3])] = &[
        (OrderKind::Majorization, ["1 5", "2 4", "1^3 3"]),
        (OrderKind::Cl, ["1^3 3", "1 5", "2 4"]),
        (OrderKind::LulovLex, ["1 5", "2^3", "1^3 3"]),
        (OrderKind::Cl, ["1^3 3", "1 5", "2^3"]),
    ];
    for (kind, [a, b, c]) in chains {
        let (a, b, c) = (ct(a), ct(b), ct(c));
        for (hi, lo) in [(&a, &b), (&b, &c), (&a, &c)] {
            assert_eq!(compare(*kind, hi, lo).unwrap(), Comparison::Greater);
            assert_eq!(compare(*kind, lo, hi).unwrap(), Comparison::Less);
        }
    }

    pass(
        "criterion 10 (order incompatibility fixtures)",
        start,
        Duration::from_secs(1),
        "the two S_6 triples reproduce the stated majorization, Lulov-lexicographic, and CL chains exactly",
    );
}
