//! Analysis of walk distributions: rankings, order checks, certified
//! eventual-sign comparisons, and exact distances to stationarity.
//!
//! The centerpiece is [`certified_stabilization_time`]. For a pair of
//! classes it splits the inversion sum for `P^t(α) - P^t(β)` into levels of
//! equal eigenvalue magnitude, finds the first level whose exact
//! contribution does not cancel at the queried time parity, and then scans
//! for the first step at which that level strictly dominates everything
//! below it — in integer arithmetic, so the certificate is a proof, not an
//! estimate. Once dominance holds it holds forever (each tail term shrinks
//! by a strictly larger factor than the lead), which is what makes the
//! reported time a genuine stabilization point.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::arith::factorial;
use crate::characters::{character, dimension};
use crate::csvio;
use crate::error::{Error, Result};
use crate::jsonio::rat_to_json;
use crate::partitions::{
    compare, enumerate_partitions, Comparison, CycleType, OrderKind, Parity, Partition,
};
use crate::walks::{eigenvalue, ClassDistribution, WalkSpec};

/// Hard ceiling on the dominance scan; reaching it would mean the lead
/// level failed to overtake a strictly smaller geometric tail, i.e. a bug.
const DOMINANCE_SCAN_CAP: u64 = 10_000;

// ---------------------------------------------------------------------------
// Rankings and order checks
// ---------------------------------------------------------------------------

/// Classes ranked by exact probability, ties grouped together.
#[derive(Clone, PartialEq, Debug)]
pub struct RankReport {
    n: u32,
    t: u64,
    walk: String,
    groups: Vec<(BigRational, Vec<CycleType>)>,
}

impl RankReport {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn walk(&self) -> &str {
        &self.walk
    }

    /// Tie groups in strictly decreasing probability order.
    pub fn groups(&self) -> &[(BigRational, Vec<CycleType>)] {
        &self.groups
    }

    /// 1-based rank of a class (ties share a rank).
    pub fn position(&self, class: &CycleType) -> Option<usize> {
        self.groups
            .iter()
            .position(|(_, members)| members.contains(class))
            .map(|i| i + 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "t": self.t,
            "walk": self.walk,
            "groups": self.groups.iter().enumerate().map(|(i, (p, members))| json!({
                "rank": i + 1,
                "num": p.numer().to_string(),
                "den": p.denom().to_string(),
                "classes": members.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    /// CSV with columns `rank, class, per_element_num, per_element_den`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        csvio::push_row(
            &mut out,
            &["rank", "class", "per_element_num", "per_element_den"]
                .map(str::to_string),
        );
        for (i, (p, members)) in self.groups.iter().enumerate() {
            for class in members {
                csvio::push_row(
                    &mut out,
                    &[
                        (i + 1).to_string(),
                        class.to_string(),
                        p.numer().to_string(),
                        p.denom().to_string(),
                    ],
                );
            }
        }
        out
    }
}

/// Ranks the given classes by their exact probability under `dist`,
/// descending, grouping exact ties. Classes the walk has not reached
/// (probability exactly zero) are left out; within a group, classes keep
/// canonical order.
pub fn rank(dist: &ClassDistribution, classes: &[CycleType]) -> Result<RankReport> {
    let canon = dist.ordered_classes();
    let mut rows: Vec<(usize, CycleType, BigRational)> = Vec::with_capacity(classes.len());
    for class in classes {
        let prob = dist.prob(class).ok_or_else(|| {
            Error::Domain(format!("class {class:?} is not a class of S_{}", dist.n()))
        })?;
        if prob.is_zero() {
            continue;
        }
        let position = canon
            .iter()
            .position(|c| c == class)
            .expect("prob lookup succeeded, so the class has the right degree");
        rows.push((position, class.clone(), prob.clone()));
    }
    rows.sort_by(|(ia, _, pa), (ib, _, pb)| pb.cmp(pa).then(ia.cmp(ib)));
    let mut groups: Vec<(BigRational, Vec<CycleType>)> = Vec::new();
    for (_, class, prob) in rows {
        match groups.last_mut() {
            Some((p, members)) if *p == prob => members.push(class),
            _ => groups.push((prob, vec![class])),
        }
    }
    Ok(RankReport {
        n: dist.n(),
        t: dist.t(),
        walk: dist.walk().to_string(),
        groups,
    })
}

/// Checks the distribution against an order: for every strictly comparable
/// pair among `classes`, the higher class must not have strictly smaller
/// probability. Returns the violating pairs `(higher, lower)`; an empty
/// list means the distribution is monotone for the order on this class set.
pub fn check_order(
    dist: &ClassDistribution,
    kind: OrderKind,
    classes: &[CycleType],
) -> Result<Vec<(CycleType, CycleType)>> {
    let mut probs = Vec::with_capacity(classes.len());
    for class in classes {
        probs.push(dist.prob(class).ok_or_else(|| {
            Error::Domain(format!("class {class:?} is not a class of S_{}", dist.n()))
        })?);
    }
    let mut violations = Vec::new();
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            match compare(kind, &classes[i], &classes[j])? {
                Comparison::Greater => {
                    if probs[i] < probs[j] {
                        violations.push((classes[i].clone(), classes[j].clone()));
                    }
                }
                Comparison::Less => {
                    if probs[j] < probs[i] {
                        violations.push((classes[j].clone(), classes[i].clone()));
                    }
                }
                Comparison::Equal | Comparison::Incomparable => {}
            }
        }
    }
    Ok(violations)
}

// ---------------------------------------------------------------------------
// Distances to stationarity
// ---------------------------------------------------------------------------

fn check_dist(walk: &WalkSpec, dist: &ClassDistribution) -> Result<()> {
    if walk.n() != dist.n() {
        return Err(Error::Domain(format!(
            "distribution on S_{} analyzed against a walk on S_{}",
            dist.n(),
            walk.n()
        )));
    }
    if walk.label() != dist.walk() {
        return Err(Error::Domain(format!(
            "distribution was produced by walk {:?}, not {:?}",
            dist.walk(),
            walk.label()
        )));
    }
    Ok(())
}

/// Per-element stationary value and the coset it lives on: uniform on the
/// reachable parity coset for sign-confined walks, uniform on all of `S_n`
/// otherwise.
fn stationary_per_element(walk: &WalkSpec, t: u64) -> (BigRational, Option<i32>) {
    let order = BigRational::from(factorial(walk.n() as u64));
    match walk.reachable_sign_at(t) {
        None => (order.recip(), None),
        Some(s) => (BigRational::from(BigInt::from(2)) / order, Some(s)),
    }
}

/// Exact total variation distance to the stationary distribution implied by
/// the walk's parity behaviour at time `dist.t()`.
pub fn tv_distance(walk: &WalkSpec, dist: &ClassDistribution) -> Result<BigRational> {
    check_dist(walk, dist)?;
    let (pi, coset) = stationary_per_element(walk, dist.t());
    let mut acc = BigRational::zero();
    for (class, prob) in dist.probs() {
        let pi_here = if coset.map_or(true, |s| class.sign() == s) {
            pi.clone()
        } else {
            BigRational::zero()
        };
        acc += (prob - pi_here).abs() * BigRational::from(class.class_size());
    }
    Ok(acc / BigRational::from(BigInt::from(2)))
}

/// Exact separation distance `1 - min_g P(g)/π(g)` over the stationary
/// support.
pub fn separation(walk: &WalkSpec, dist: &ClassDistribution) -> Result<BigRational> {
    check_dist(walk, dist)?;
    let (pi, coset) = stationary_per_element(walk, dist.t());
    let mut min_ratio: Option<BigRational> = None;
    for (class, prob) in dist.probs() {
        if coset.map_or(false, |s| class.sign() != s) {
            continue;
        }
        let r = prob / &pi;
        if min_ratio.as_ref().map_or(true, |m| r < *m) {
            min_ratio = Some(r);
        }
    }
    let min_ratio = min_ratio.expect("the stationary support is never empty");
    Ok(BigRational::one() - min_ratio)
}

/// Exact relative sup-norm distance `max_g |P(g)/π(g) - 1|` over the
/// stationary support.
pub fn linf_distance(walk: &WalkSpec, dist: &ClassDistribution) -> Result<BigRational> {
    check_dist(walk, dist)?;
    let (pi, coset) = stationary_per_element(walk, dist.t());
    let mut max_dev = BigRational::zero();
    for (class, prob) in dist.probs() {
        if coset.map_or(false, |s| class.sign() != s) {
            continue;
        }
        let dev = (prob / &pi - BigRational::one()).abs();
        if dev > max_dev {
            max_dev = dev;
        }
    }
    Ok(max_dev)
}

// ---------------------------------------------------------------------------
// Stationary split by fixed points
// ---------------------------------------------------------------------------

/// Which side of its stationary value a class probability sits on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Above,
    Below,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Above => write!(f, "above"),
            Side::Below => write!(f, "below"),
        }
    }
}

/// The fixed-point rule for transposition walks: a class eventually sits at
/// or above its stationary value exactly when it has at least two fixed
/// points, or one fixed point and at least two 2-cycles.
pub fn predicted_side(class: &CycleType) -> Side {
    let a1 = class.multiplicity(1);
    let a2 = class.multiplicity(2);
    if a1 >= 2 || (a1 == 1 && a2 >= 2) {
        Side::Above
    } else {
        Side::Below
    }
}

/// One class's row in a [`SplitReport`].
#[derive(Clone, PartialEq, Debug)]
pub struct SplitRow {
    pub class: CycleType,
    pub prob: BigRational,
    pub predicted: Side,
    pub actual: Side,
    pub agrees: bool,
}

/// Comparison of every reachable class against its stationary value, next
/// to the fixed-point prediction.
#[derive(Clone, PartialEq, Debug)]
pub struct SplitReport {
    n: u32,
    t: u64,
    walk: String,
    stationary: BigRational,
    rows: Vec<SplitRow>,
}

impl SplitReport {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn walk(&self) -> &str {
        &self.walk
    }

    /// The per-element stationary value the rows are compared against.
    pub fn stationary(&self) -> &BigRational {
        &self.stationary
    }

    pub fn rows(&self) -> &[SplitRow] {
        &self.rows
    }

    pub fn agreements(&self) -> usize {
        self.rows.iter().filter(|r| r.agrees).count()
    }

    pub fn disagreements(&self) -> usize {
        self.rows.len() - self.agreements()
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agrees)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "t": self.t,
            "walk": self.walk,
            "stationary": rat_to_json(&self.stationary),
            "rows": self.rows.iter().map(|r| json!({
                "class": r.class.to_string(),
                "num": r.prob.numer().to_string(),
                "den": r.prob.denom().to_string(),
                "predicted": r.predicted.to_string(),
                "actual": r.actual.to_string(),
                "agrees": r.agrees,
            })).collect::<Vec<_>>(),
            "agreements": self.agreements(),
            "disagreements": self.disagreements(),
        })
    }

    /// CSV with columns `class, per_element_num, per_element_den,
    /// predicted, actual, agrees`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        csvio::push_row(
            &mut out,
            &[
                "class",
                "per_element_num",
                "per_element_den",
                "predicted",
                "actual",
                "agrees",
            ]
            .map(str::to_string),
        );
        for r in &self.rows {
            csvio::push_row(
                &mut out,
                &[
                    r.class.to_string(),
                    r.prob.numer().to_string(),
                    r.prob.denom().to_string(),
                    r.predicted.to_string(),
                    r.actual.to_string(),
                    r.agrees.to_string(),
                ],
            );
        }
        out
    }
}

/// Splits every reachable class by whether its probability is at least its
/// stationary value, and compares against [`predicted_side`]. Only
/// meaningful for (lazy) transposition walks, and rejected otherwise.
pub fn stationary_split(walk: &WalkSpec, dist: &ClassDistribution) -> Result<SplitReport> {
    check_dist(walk, dist)?;
    if !walk.is_transposition_family() {
        return Err(Error::Unsupported(
            "the fixed-point split rule applies to (lazy) transposition walks only".into(),
        ));
    }
    let (pi, coset) = stationary_per_element(walk, dist.t());
    let mut rows = Vec::new();
    for class in dist.ordered_classes() {
        if coset.map_or(false, |s| class.sign() != s) {
            continue;
        }
        let prob = dist
            .prob(&class)
            .expect("ordered_classes and probs share a key set")
            .clone();
        let actual = if prob >= pi { Side::Above } else { Side::Below };
        let predicted = predicted_side(&class);
        rows.push(SplitRow {
            agrees: actual == predicted,
            class,
            prob,
            predicted,
            actual,
        });
    }
    Ok(SplitReport {
        n: dist.n(),
        t: dist.t(),
        walk: dist.walk().to_string(),
        stationary: pi,
        rows,
    })
}

// ---------------------------------------------------------------------------
// Certified eventual-sign comparison
// ---------------------------------------------------------------------------

/// Outcome of a stabilization certificate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertOutcome {
    /// `P^t(α) - P^t(β)` has this sign at every admissible `t >= t_star`.
    Certified { t_star: u64, sign: i32 },
    /// The difference is exactly zero at every admissible `t >= 1`.
    Tie,
    /// No single eventual sign exists at the queried parity (or the lead
    /// analysis cannot produce one); the reason says why.
    Uncertified { reason: String },
}

/// The lead analysis for one time parity: the shapes whose eigenvalue
/// magnitude governs the difference once exactly-cancelling levels are
/// discarded, and the integer their contribution collapses to.
#[derive(Clone, PartialEq, Debug)]
pub struct ParityLead {
    /// `Even` or `Odd` — the times this analysis covers.
    pub t_parity: Parity,
    /// Shapes on the governing magnitude level with nonzero character
    /// difference.
    pub shapes: Vec<Partition>,
    /// Their shared eigenvalue magnitude `R`.
    pub magnitude: BigRational,
    /// `Σ Δ_λ d_λ sign(c_λ)^t` over the lead shapes at this parity — the
    /// eventual sign is the sign of this integer.
    pub combination: BigInt,
    /// First time of this parity at which the lead strictly dominates every
    /// lower level in absolute value.
    pub first_dominant_t: u64,
}

/// A certified comparison of two class probabilities under a walk.
#[derive(Clone, PartialEq, Debug)]
pub struct StabilizationCertificate {
    alpha: CycleType,
    beta: CycleType,
    parity: Parity,
    leads: Vec<ParityLead>,
    outcome: CertOutcome,
}

impl StabilizationCertificate {
    pub fn alpha(&self) -> &CycleType {
        &self.alpha
    }

    pub fn beta(&self) -> &CycleType {
        &self.beta
    }

    /// The first cycle length at which the two classes differ — the index
    /// whose detectors decide the pair.
    pub fn first_differing_index(&self) -> u32 {
        first_differing_index(&self.alpha, &self.beta)
            .expect("a certificate always compares distinct classes")
    }

    /// The effective time parity the certificate speaks about (the request
    /// intersected with the times the walk can reach these classes).
    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn outcome(&self) -> &CertOutcome {
        &self.outcome
    }

    pub fn leads(&self) -> &[ParityLead] {
        &self.leads
    }

    pub fn to_json(&self) -> serde_json::Value {
        let outcome = match &self.outcome {
            CertOutcome::Certified { t_star, sign } => json!({
                "status": "certified",
                "t_star": t_star,
                "sign": sign,
            }),
            CertOutcome::Tie => json!({ "status": "tie" }),
            CertOutcome::Uncertified { reason } => json!({
                "status": "uncertified",
                "reason": reason,
            }),
        };
        json!({
            "alpha": self.alpha.to_string(),
            "beta": self.beta.to_string(),
            "i": self.first_differing_index(),
            "parity": self.parity.to_string(),
            "outcome": outcome,
            "leads": self.leads.iter().map(|l| json!({
                "t_parity": l.t_parity.to_string(),
                "shapes": l.shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "magnitude": rat_to_json(&l.magnitude),
                "combination": l.combination.to_string(),
                "first_dominant_t": l.first_dominant_t,
            })).collect::<Vec<_>>(),
        })
    }
}

struct SpectrumTerm {
    shape: Partition,
    delta: BigInt,
    dim: BigInt,
    eig: BigRational,
}

/// Smallest cycle length with different multiplicities, or `None` for equal
/// classes.
fn first_differing_index(a: &CycleType, b: &CycleType) -> Option<u32> {
    a.multiplicities()
        .iter()
        .zip(b.multiplicities())
        .position(|(x, y)| x != y)
        .map(|idx| idx as u32 + 1)
}

/// Times at which both classes are reachable, from the walk's step signs.
fn admissible_parity(walk: &WalkSpec, alpha: &CycleType, beta: &CycleType) -> Result<Parity> {
    match walk.step_sign() {
        None => Ok(Parity::Any),
        Some(1) => {
            if alpha.sign() == 1 && beta.sign() == 1 {
                Ok(Parity::Any)
            } else if alpha.sign() == beta.sign() {
                Err(Error::Domain(
                    "every step is even but both classes are odd; the walk never \
                     reaches them and the difference is identically zero"
                        .into(),
                ))
            } else {
                Err(Error::Domain(
                    "classes of opposite sign cannot be compared under a \
                     parity-confined walk"
                        .into(),
                ))
            }
        }
        Some(_) => {
            if alpha.sign() != beta.sign() {
                Err(Error::Domain(
                    "classes of opposite sign cannot be compared under a \
                     parity-confined walk"
                        .into(),
                ))
            } else if alpha.sign() == 1 {
                Ok(Parity::Even)
            } else {
                Ok(Parity::Odd)
            }
        }
    }
}

fn intersect_parity(requested: Parity, admissible: Parity) -> Result<Parity> {
    match (requested, admissible) {
        (Parity::Any, a) => Ok(a),
        (r, Parity::Any) => Ok(r),
        (r, a) if r == a => Ok(r),
        (r, a) => Err(Error::Domain(format!(
            "no admissible times: {r} times requested, but the walk reaches \
             these classes only at {a} times"
        ))),
    }
}

fn int_sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Lead analysis at one parity. Walks the magnitude levels downward; a
/// level whose exact combination is zero contributes nothing at this parity
/// at any time, so it is discarded rather than bounded. Returns `None` when
/// every level cancels (the difference vanishes identically at this parity
/// for `t >= 1`).
fn parity_lead(
    levels: &[(BigRational, Vec<usize>)],
    terms: &[SpectrumTerm],
    t_parity: Parity,
    denom_lcm: &BigInt,
) -> Result<Option<ParityLead>> {
    for (idx, (magnitude, members)) in levels.iter().enumerate() {
        let mut combination = BigInt::zero();
        for &m in members {
            let term = &terms[m];
            let s = if t_parity == Parity::Odd {
                BigInt::from(int_sign(term.eig.numer()))
            } else {
                BigInt::one()
            };
            combination += &term.delta * &term.dim * s;
        }
        if combination.is_zero() {
            continue;
        }
        // Integerize: every eigenvalue denominator divides denom_lcm.
        let scale = |r: &BigRational| -> BigInt {
            let scaled = r * BigRational::from(denom_lcm.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        };
        let lead_base = scale(magnitude);
        let tail: Vec<(BigInt, BigInt)> = levels[idx + 1..]
            .iter()
            .flat_map(|(_, ms)| ms.iter())
            .map(|&m| {
                let term = &terms[m];
                ((&term.delta).abs() * &term.dim, scale(&term.eig.abs()))
            })
            .collect();
        // Scan for the first t with |A| R^t > Σ w |c|^t, in integers scaled
        // by denom_lcm^t. Each tail base is strictly below the lead base,
        // so once the inequality holds it holds for every later t.
        let mut lead_pow = combination.abs() * &lead_base;
        let mut tail_pows: Vec<BigInt> = tail.iter().map(|(w, c)| w * c).collect();
        let mut t = 1u64;
        loop {
            let tail_sum: BigInt = tail_pows.iter().sum();
            if lead_pow > tail_sum {
                break;
            }
            t += 1;
            if t > DOMINANCE_SCAN_CAP {
                return Err(Error::Internal(format!(
                    "dominance scan did not terminate within {DOMINANCE_SCAN_CAP} steps"
                )));
            }
            lead_pow *= &lead_base;
            for (pow, (_, c)) in tail_pows.iter_mut().zip(&tail) {
                *pow *= c;
            }
        }
        // Round up to the requested parity; monotonicity covers the gap.
        let first_dominant_t = match t_parity {
            Parity::Even if t % 2 == 1 => t + 1,
            Parity::Odd if t % 2 == 0 => t + 1,
            _ => t,
        };
        return Ok(Some(ParityLead {
            t_parity,
            shapes: members.iter().map(|&m| terms[m].shape.clone()).collect(),
            magnitude: magnitude.clone(),
            combination,
            first_dominant_t,
        }));
    }
    Ok(None)
}

/// Certifies the eventual sign of `P^t(α) - P^t(β)` at times of the given
/// parity, returning the exact step from which that sign provably holds.
///
/// `parity` restricts which times are asked about; it is intersected with
/// the times the walk can reach the classes at all (a parity-confined walk
/// admits same-sign pairs only, at times of the matching parity). `t = 0`
/// is never part of a certificate.
pub fn certified_stabilization_time(
    walk: &WalkSpec,
    alpha: &CycleType,
    beta: &CycleType,
    parity: Parity,
) -> Result<StabilizationCertificate> {
    if alpha.n() != walk.n() || beta.n() != walk.n() {
        return Err(Error::Domain(format!(
            "stabilization requires classes of degree {}",
            walk.n()
        )));
    }
    if alpha == beta {
        return Err(Error::Domain(
            "stabilization compares two distinct classes".into(),
        ));
    }
    let effective = intersect_parity(parity, admissible_parity(walk, alpha, beta)?)?;

    // Spectrum of the difference: shapes where the characters differ and
    // the eigenvalue survives t >= 1.
    let mut terms = Vec::new();
    for shape in enumerate_partitions(walk.n())? {
        let delta = character(&shape, alpha)? - character(&shape, beta)?;
        if delta.is_zero() {
            continue;
        }
        let eig = eigenvalue(walk, &shape)?;
        if eig.is_zero() {
            continue;
        }
        terms.push(SpectrumTerm {
            dim: dimension(&shape),
            shape,
            delta,
            eig,
        });
    }

    // Group into levels of equal |eigenvalue|, descending.
    let mut order: Vec<usize> = (0..terms.len()).collect();
    order.sort_by(|&a, &b| terms[b].eig.abs().cmp(&terms[a].eig.abs()));
    let mut levels: Vec<(BigRational, Vec<usize>)> = Vec::new();
    for m in order {
        let mag = terms[m].eig.abs();
        match levels.last_mut() {
            Some((r, ms)) if *r == mag => ms.push(m),
            _ => levels.push((mag, vec![m])),
        }
    }
    let denom_lcm = terms
        .iter()
        .fold(BigInt::one(), |acc, t| acc.lcm(t.eig.denom()));

    let scan: Vec<Parity> = match effective {
        Parity::Any => vec![Parity::Even, Parity::Odd],
        p => vec![p],
    };
    let mut leads = Vec::new();
    let mut results: Vec<Option<(i32, u64)>> = Vec::new();
    for &p in &scan {
        match parity_lead(&levels, &terms, p, &denom_lcm)? {
            Some(lead) => {
                results.push(Some((int_sign(&lead.combination), lead.first_dominant_t)));
                leads.push(lead);
            }
            None => results.push(None),
        }
    }

    let outcome = match results.as_slice() {
        [None] => CertOutcome::Tie,
        [Some((sign, t_star))] => CertOutcome::Certified {
            t_star: *t_star,
            sign: *sign,
        },
        [None, None] => CertOutcome::Tie,
        [Some((se, fe)), Some((so, fo))] => {
            if se == so {
                // All t >= max - 1 are covered: each parity is past its own
                // first dominant time from there on.
                CertOutcome::Certified {
                    t_star: (*fe).max(*fo) - 1,
                    sign: *se,
                }
            } else {
                CertOutcome::Uncertified {
                    reason: format!(
                        "the sign is {se:+} at even times but {so:+} at odd times; \
                         query a fixed time parity"
                    ),
                }
            }
        }
        _ => CertOutcome::Uncertified {
            reason: "the difference vanishes identically at one time parity; \
                     query a fixed time parity"
                .into(),
        },
    };

    Ok(StabilizationCertificate {
        alpha: alpha.clone(),
        beta: beta.clone(),
        parity: effective,
        leads,
        outcome,
    })
}

// ---------------------------------------------------------------------------
// Stabilization report: certificate plus order predictions
// ---------------------------------------------------------------------------

/// What a likelihood order predicts for a certified pair at one parity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderPrediction {
    pub t_parity: Parity,
    pub order: OrderKind,
    pub comparison: Comparison,
    /// `Some(true)` when the certified sign matches the strict prediction;
    /// `None` when the order makes no strict prediction for the pair.
    pub consistent: Option<bool>,
}

/// A certificate together with the order predictions that apply to the
/// walk, each checked against the certified sign.
#[derive(Clone, PartialEq, Debug)]
pub struct StabilizationReport {
    certificate: StabilizationCertificate,
    predictions: Vec<OrderPrediction>,
}

impl StabilizationReport {
    pub fn certificate(&self) -> &StabilizationCertificate {
        &self.certificate
    }

    pub fn predictions(&self) -> &[OrderPrediction] {
        &self.predictions
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "certificate": self.certificate.to_json(),
            "predictions": self.predictions.iter().map(|p| json!({
                "t_parity": p.t_parity.to_string(),
                "order": p.order.to_string(),
                "comparison": p.comparison.to_string(),
                "consistent": p.consistent,
            })).collect::<Vec<_>>(),
        })
    }
}

/// The order known to govern this walk's eventual comparisons at a given
/// time parity, if any.
fn expected_order(walk: &WalkSpec, t_parity: Parity) -> Option<OrderKind> {
    let n = walk.n();
    if walk.is_transposition_family() {
        // Plain transpositions always; lazy versions once the hold is large
        // enough that every eigenvalue is nonnegative (below that, mixed
        // signs genuinely alternate for some pairs).
        let p = walk.laziness();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        if p.is_zero() || *p >= half {
            return Some(OrderKind::Cl);
        }
        return None;
    }
    let is_single = |class: CycleType| {
        walk.laziness().is_zero() && walk.step().len() == 1 && walk.step().contains_key(&class)
    };
    if n >= 5 {
        if let Ok(three) = CycleType::three_cycle(n) {
            if is_single(three) {
                // No single order governs a fixed time parity: some pairs
                // are led by negative eigenvalues of maximal magnitude
                // (first at n = 6, (3^2) against (2,4)) and their
                // difference alternates sign with t forever. Those pairs
                // never certify over both parities at once, so the
                // both-parity query is exactly where the claim is sound:
                // every pair that does stabilize follows the order.
                if t_parity == Parity::Any {
                    return Some(OrderKind::AltCl);
                }
                return None;
            }
        }
    }
    if let Ok(full) = CycleType::full_cycle(n) {
        if is_single(full) {
            return match t_parity {
                Parity::Even => Some(OrderKind::AltCl),
                Parity::Odd => Some(OrderKind::NegCl),
                Parity::Any => None,
            };
        }
    }
    None
}

/// Certifies a pair and cross-checks the certified sign against the orders
/// known to govern the walk. A sign certified over both parities holds at
/// even and odd times alike, so it is checked against every governing
/// order; disagreement is reported in the predictions, not raised as an
/// error, since each prediction is a claim about the walk, not about the
/// arithmetic.
pub fn stabilization_report(
    walk: &WalkSpec,
    alpha: &CycleType,
    beta: &CycleType,
    parity: Parity,
) -> Result<StabilizationReport> {
    let certificate = certified_stabilization_time(walk, alpha, beta, parity)?;
    let mut predictions = Vec::new();
    if let CertOutcome::Certified { sign, .. } = certificate.outcome() {
        let parities: Vec<Parity> = match certificate.parity() {
            Parity::Any => vec![Parity::Any, Parity::Even, Parity::Odd],
            p => vec![p],
        };
        for t_parity in parities {
            let Some(order) = expected_order(walk, t_parity) else {
                continue;
            };
            if predictions.iter().any(|p: &OrderPrediction| p.order == order) {
                continue;
            }
            let comparison = compare(order, alpha, beta)?;
            let consistent = comparison.predicted_sign().map(|ps| ps == *sign);
            predictions.push(OrderPrediction {
                t_parity,
                order,
                comparison,
                consistent,
            });
        }
    }
    Ok(StabilizationReport {
        certificate,
        predictions,
    })
}

// ---------------------------------------------------------------------------
// Walk-wide certification survey
// ---------------------------------------------------------------------------

/// Pairwise certificates for every pair of classes the walk can occupy at
/// times of one parity, assembled into the eventual likelihood order.
#[derive(Clone, Debug)]
pub struct SurveyReport {
    n: u32,
    walk: String,
    t_parity: Parity,
    classes: Vec<CycleType>,
    pairs: Vec<StabilizationCertificate>,
    t_max: u64,
    groups: Option<Vec<Vec<CycleType>>>,
}

impl SurveyReport {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn walk(&self) -> &str {
        &self.walk
    }

    pub fn t_parity(&self) -> Parity {
        self.t_parity
    }

    /// The surveyed classes, in canonical order.
    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    /// One certificate per unordered pair of surveyed classes.
    pub fn pairs(&self) -> &[StabilizationCertificate] {
        &self.pairs
    }

    pub fn uncertified(&self) -> Vec<&StabilizationCertificate> {
        self.pairs
            .iter()
            .filter(|c| matches!(c.outcome(), CertOutcome::Uncertified { .. }))
            .collect()
    }

    /// Largest certified stabilization step; from this time on (at the
    /// surveyed parity) every certified pairwise sign holds simultaneously.
    pub fn t_max(&self) -> u64 {
        self.t_max
    }

    /// The certified eventual order as tie groups, most likely first.
    /// `None` when any pair is uncertified.
    pub fn groups(&self) -> Option<&[Vec<CycleType>]> {
        self.groups.as_deref()
    }

    /// Certified pairs whose eventual sign contradicts the order's strict
    /// prediction, as `(certified higher, certified lower)`. Exact ties are
    /// compatible with every order and never count.
    pub fn mismatches(&self, kind: OrderKind) -> Result<Vec<(CycleType, CycleType)>> {
        let mut out = Vec::new();
        for cert in &self.pairs {
            let CertOutcome::Certified { sign, .. } = cert.outcome() else {
                continue;
            };
            let predicted = compare(kind, cert.alpha(), cert.beta())?.predicted_sign();
            if predicted.is_some_and(|p| p != *sign) {
                let (hi, lo) = if *sign > 0 {
                    (cert.alpha().clone(), cert.beta().clone())
                } else {
                    (cert.beta().clone(), cert.alpha().clone())
                };
                out.push((hi, lo));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "walk": self.walk,
            "time_parity": self.t_parity.to_string(),
            "t_max": self.t_max,
            "order": self.groups.as_ref().map(|gs| {
                gs.iter()
                    .map(|g| g.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            }),
            "pairs": self.pairs.iter().map(|cert| {
                let mut row = json!({
                    "alpha": cert.alpha().to_string(),
                    "beta": cert.beta().to_string(),
                    "i": cert.first_differing_index(),
                });
                let obj = row.as_object_mut().expect("literal object");
                match cert.outcome() {
                    CertOutcome::Certified { t_star, sign } => {
                        obj.insert("status".into(), json!("certified"));
                        obj.insert("t_star".into(), json!(t_star));
                        obj.insert("sign".into(), json!(sign));
                    }
                    CertOutcome::Tie => {
                        obj.insert("status".into(), json!("tie"));
                    }
                    CertOutcome::Uncertified { reason } => {
                        obj.insert("status".into(), json!("uncertified"));
                        obj.insert("reason".into(), json!(reason));
                    }
                }
                row
            }).collect::<Vec<_>>(),
        })
    }

    /// CSV with columns `alpha, beta, i, status, t_star, sign`; the time and
    /// sign columns are empty unless the pair is certified.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        csvio::push_row(
            &mut out,
            &["alpha", "beta", "i", "status", "t_star", "sign"].map(str::to_string),
        );
        for cert in &self.pairs {
            let (status, t_star, sign) = match cert.outcome() {
                CertOutcome::Certified { t_star, sign } => {
                    ("certified", t_star.to_string(), format!("{sign}"))
                }
                CertOutcome::Tie => ("tie", String::new(), String::new()),
                CertOutcome::Uncertified { .. } => ("uncertified", String::new(), String::new()),
            };
            csvio::push_row(
                &mut out,
                &[
                    cert.alpha().to_string(),
                    cert.beta().to_string(),
                    cert.first_differing_index().to_string(),
                    status.to_string(),
                    t_star,
                    sign,
                ],
            );
        }
        out
    }
}

/// Certifies every pair of classes the walk can occupy at times of parity
/// `t_parity` and assembles the certified eventual likelihood order.
///
/// For a walk whose step alternates parity the surveyed classes are those
/// of the matching coset, so `t_parity` must be `Even` or `Odd`; walks with
/// even or mixed steps accept `Any` as well. The pairwise outcomes are
/// cross-checked for mutual consistency — certified signs that fail to
/// assemble into a total preorder are an internal error, since each one is
/// supposedly the sign of the same distribution's differences at large
/// times.
pub fn stabilization_survey(walk: &WalkSpec, t_parity: Parity) -> Result<SurveyReport> {
    if walk.step_sign() == Some(-1) && t_parity == Parity::Any {
        return Err(Error::Domain(
            "the walk changes coset every step; survey a fixed time parity".into(),
        ));
    }
    let classes = match t_parity {
        Parity::Odd => walk.reachable_classes(1)?,
        // For walks admitting `Any`, the reachable set at even times is the
        // reachable set at all times.
        Parity::Even | Parity::Any => walk.reachable_classes(2)?,
    };

    let index_pairs: Vec<(usize, usize)> = (0..classes.len())
        .flat_map(|i| ((i + 1)..classes.len()).map(move |j| (i, j)))
        .collect();
    let pairs: Vec<StabilizationCertificate> = index_pairs
        .par_iter()
        .map(|&(i, j)| certified_stabilization_time(walk, &classes[i], &classes[j], t_parity))
        .collect::<Result<Vec<_>>>()?;

    let t_max = pairs
        .iter()
        .filter_map(|c| match c.outcome() {
            CertOutcome::Certified { t_star, .. } => Some(*t_star),
            _ => None,
        })
        .max()
        .unwrap_or(0);

    let groups = assemble_order(&classes, &pairs)?;

    Ok(SurveyReport {
        n: walk.n(),
        walk: walk.label().to_string(),
        t_parity,
        classes,
        pairs,
        t_max,
        groups,
    })
}

/// Builds the total preorder implied by the pairwise outcomes, or `None`
/// when some pair is uncertified. The construction sorts by score (wins
/// weighted above ties) and then verifies every pair against the resulting
/// group order, so an inconsistent tournament cannot slip through.
fn assemble_order(
    classes: &[CycleType],
    pairs: &[StabilizationCertificate],
) -> Result<Option<Vec<Vec<CycleType>>>> {
    let k = classes.len();
    // rel[i][j]: certified sign of P(classes[i]) - P(classes[j]), 0 for an
    // exact tie.
    let mut rel = vec![vec![0i32; k]; k];
    let mut cursor = 0usize;
    for i in 0..k {
        for j in (i + 1)..k {
            let cert = &pairs[cursor];
            cursor += 1;
            debug_assert_eq!((cert.alpha(), cert.beta()), (&classes[i], &classes[j]));
            match cert.outcome() {
                CertOutcome::Certified { sign, .. } => {
                    rel[i][j] = *sign;
                    rel[j][i] = -sign;
                }
                CertOutcome::Tie => {}
                CertOutcome::Uncertified { .. } => return Ok(None),
            }
        }
    }

    let score = |i: usize| -> usize {
        (0..k)
            .filter(|&j| j != i)
            .map(|j| match rel[i][j] {
                1 => 2,
                0 => 1,
                _ => 0,
            })
            .sum()
    };
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(score(i)));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of = vec![0usize; k];
    for &i in &order {
        match groups.last_mut() {
            Some(g) if score(g[0]) == score(i) => g.push(i),
            _ => groups.push(vec![i]),
        }
        group_of[i] = groups.len() - 1;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let expected = match group_of[i].cmp(&group_of[j]) {
                std::cmp::Ordering::Less => 1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => -1,
            };
            if rel[i][j] != expected {
                return Err(Error::Internal(format!(
                    "pairwise certificates are mutually inconsistent at {} vs {}",
                    classes[i], classes[j]
                )));
            }
        }
    }
    Ok(Some(
        groups
            .into_iter()
            .map(|mut g| {
                g.sort_unstable();
                g.into_iter().map(|i| classes[i].clone()).collect()
            })
            .collect(),
    ))
}
