//! Conjugacy-class random walks on `S_n` and their exact distributions.
//!
//! A [`WalkSpec`] is a step distribution that is constant on conjugacy
//! classes, plus an optional lazy hold probability. The `t`-step
//! distribution (also a class function) is computed two independent ways:
//!
//! * [`distribution`] — Fourier inversion: for each irreducible `λ` the
//!   step acts as the scalar `c_λ = p + Σ_κ |κ| P(κ) χ_λ(κ)/d_λ`, so
//!   `P^{*t}(α) = (1/n!) Σ_λ χ_λ(α) d_λ c_λ^t`, all in exact rationals;
//! * [`convolve_oracle`] — literal convolution in the class algebra using
//!   structure constants counted from brute-force products in `S_n`,
//!   with no character theory anywhere near it.
//!
//! The two must agree bit-for-bit; tests and the acceptance suite hold them
//! to that.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use dashmap::DashMap;
use num::{BigInt, BigRational, One, Signed, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde_json::json;

use crate::arith::{factorial, rational_pow, to_f64_lossy};
use crate::characters::{character, dimension};
use crate::csvio;
use crate::error::{Error, Result};
use crate::jsonio::{rat_from_json, rat_to_json};
use crate::partitions::{canonical_classes, enumerate_partitions, CycleType, Partition};

/// Degree cap for the brute-force convolution oracle (enumerates all of
/// `S_n` once per degree).
pub const MAX_ORACLE_N: u32 = 7;

/// Step cap for the convolution oracle.
pub const MAX_ORACLE_T: u64 = 64;

/// The built-in walk kinds. Custom class walks go through
/// [`WalkSpec::custom`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WalkKind {
    /// Uniform random transposition.
    Transposition,
    /// Hold with probability `p`, otherwise a uniform transposition.
    LazyTransposition(BigRational),
    /// Uniform random three-cycle.
    ThreeCycle,
    /// Uniform random full `n`-cycle.
    NCycle,
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkKind::Transposition => write!(f, "transposition"),
            WalkKind::LazyTransposition(p) => write!(f, "lazy:{p}"),
            WalkKind::ThreeCycle => write!(f, "three-cycle"),
            WalkKind::NCycle => write!(f, "n-cycle"),
        }
    }
}

impl FromStr for WalkKind {
    type Err = Error;

    /// Parses `transposition | lazy:<p> | three-cycle | n-cycle`, with `<p>`
    /// a fraction like `1/4` (or an integer `0`).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "transposition" => Ok(WalkKind::Transposition),
            "three-cycle" => Ok(WalkKind::ThreeCycle),
            "n-cycle" => Ok(WalkKind::NCycle),
            other => {
                if let Some(frac) = other.strip_prefix("lazy:") {
                    let p = parse_fraction(frac)?;
                    Ok(WalkKind::LazyTransposition(p))
                } else {
                    Err(Error::Parse(format!(
                        "unknown walk {other:?}; expected transposition, lazy:<p>, \
                         three-cycle, n-cycle, or custom:<path>"
                    )))
                }
            }
        }
    }
}

/// Parses `num/den` or a bare integer as an exact rational.
pub fn parse_fraction(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num)
        .map_err(|_| Error::Parse(format!("invalid fraction numerator {num:?}")))?;
    let den = BigInt::from_str(den)
        .map_err(|_| Error::Parse(format!("invalid fraction denominator {den:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse("fraction denominator is zero".into()));
    }
    Ok(BigRational::new(num, den))
}

/// A conjugacy-class random walk: per-element step probabilities for each
/// support class, plus a lazy hold probability `p ∈ [0, 1)`.
///
/// The normalization `p + Σ_κ |κ| P(κ) = 1` is validated exactly on
/// construction and therefore holds for every value ever wrapped here.
#[derive(Clone, PartialEq, Debug)]
pub struct WalkSpec {
    n: u32,
    laziness: BigRational,
    step: BTreeMap<CycleType, BigRational>,
    label: String,
}

impl WalkSpec {
    /// Builds a custom walk from per-element class probabilities.
    pub fn custom(
        n: u32,
        step: BTreeMap<CycleType, BigRational>,
        laziness: BigRational,
    ) -> Result<Self> {
        WalkSpec::assemble(n, step, laziness, "custom".to_string())
    }

    fn assemble(
        n: u32,
        step: BTreeMap<CycleType, BigRational>,
        laziness: BigRational,
        label: String,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("walks require n >= 2, got {n}")));
        }
        if laziness.is_negative() || laziness >= BigRational::one() {
            return Err(Error::Domain(format!(
                "laziness must lie in [0, 1), got {laziness}"
            )));
        }
        let mut total = laziness.clone();
        for (class, prob) in &step {
            if class.n() != n {
                return Err(Error::Domain(format!(
                    "step class {class:?} has degree {}, walk has degree {n}",
                    class.n()
                )));
            }
            if prob.is_negative() {
                return Err(Error::Domain(format!(
                    "step probability of {class:?} is negative"
                )));
            }
            if class == &CycleType::identity(n)? {
                return Err(Error::Domain(
                    "identity mass belongs in the laziness parameter, not the step map".into(),
                ));
            }
            total += prob * BigRational::from(class.class_size());
        }
        if !total.is_one() {
            return Err(Error::Domain(format!(
                "step probabilities plus laziness must sum to 1 exactly, got {total}"
            )));
        }
        Ok(WalkSpec {
            n,
            laziness,
            step,
            label,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn laziness(&self) -> &BigRational {
        &self.laziness
    }

    /// Per-element step probabilities for the (non-identity) support classes.
    pub fn step(&self) -> &BTreeMap<CycleType, BigRational> {
        &self.step
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Whether this is a (possibly lazy) uniform-transposition walk — the
    /// family the stationary split rule speaks about.
    pub fn is_transposition_family(&self) -> bool {
        self.step.len() == 1
            && self
                .step
                .keys()
                .next()
                .map(|c| c.multiplicity(2) == 1 && c.multiplicity(1) == self.n - 2)
                .unwrap_or(false)
    }

    /// Sign pattern of one step: `Some(s)` when every supported move
    /// (including the lazy hold, which is even) has sign `s`, `None` when
    /// signs are mixed.
    pub fn step_sign(&self) -> Option<i32> {
        let mut signs: Vec<i32> = self
            .step
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(c, _)| c.sign())
            .collect();
        if !self.laziness.is_zero() {
            signs.push(1);
        }
        signs.sort_unstable();
        signs.dedup();
        match signs.as_slice() {
            [s] => Some(*s),
            _ => None,
        }
    }

    /// The coset the walk inhabits at time `t`: `Some(+1)` / `Some(-1)` for
    /// the even or odd coset of `A_n`, `None` when both are reachable.
    pub fn reachable_sign_at(&self, t: u64) -> Option<i32> {
        match self.step_sign() {
            Some(1) => Some(1),
            Some(_) => Some(if t % 2 == 0 { 1 } else { -1 }),
            None => None,
        }
    }

    /// The classes the walk can occupy at time `t`, in canonical order.
    pub fn reachable_classes(&self, t: u64) -> Result<Vec<CycleType>> {
        let sign = self.reachable_sign_at(t);
        Ok(canonical_classes(self.n)?
            .into_iter()
            .filter(|c| sign.map_or(true, |s| c.sign() == s))
            .collect())
    }

    /// JSON schema: `{"n", "p": {"num","den"},
    /// "step": [{"class", "prob": {"num","den"}}, ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "p": rat_to_json(&self.laziness),
            "step": self.step.iter().map(|(class, prob)| json!({
                "class": class.to_string(),
                "prob": rat_to_json(prob),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| Error::Parse("walk file: missing or invalid \"n\"".into()))?
            as u32;
        let laziness = if v["p"].is_null() {
            BigRational::zero()
        } else {
            rat_from_json(&v["p"])?
        };
        let entries = v["step"]
            .as_array()
            .ok_or_else(|| Error::Parse("walk file: \"step\" must be an array".into()))?;
        let mut step = BTreeMap::new();
        for e in entries {
            let class: CycleType = e["class"]
                .as_str()
                .ok_or_else(|| Error::Parse("walk file: step entry missing \"class\"".into()))?
                .parse()?;
            let prob = rat_from_json(&e["prob"])?;
            if step.insert(class, prob).is_some() {
                return Err(Error::Parse("walk file: duplicate step class".into()));
            }
        }
        WalkSpec::assemble(n, step, laziness, "custom".to_string())
    }
}

/// Builds one of the built-in walks on `S_n` (`n >= 3`).
pub fn builtin_walk(kind: &WalkKind, n: u32) -> Result<WalkSpec> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "built-in walks require n >= 3, got {n}"
        )));
    }
    let mut step = BTreeMap::new();
    let (laziness, label) = match kind {
        WalkKind::Transposition => {
            let class = CycleType::transposition(n)?;
            step.insert(class.clone(), BigRational::new(BigInt::one(), class.class_size()));
            (BigRational::zero(), kind.to_string())
        }
        WalkKind::LazyTransposition(p) => {
            let class = CycleType::transposition(n)?;
            let active = BigRational::one() - p;
            step.insert(class.clone(), active / BigRational::from(class.class_size()));
            (p.clone(), kind.to_string())
        }
        WalkKind::ThreeCycle => {
            let class = CycleType::three_cycle(n)?;
            step.insert(class.clone(), BigRational::new(BigInt::one(), class.class_size()));
            (BigRational::zero(), kind.to_string())
        }
        WalkKind::NCycle => {
            let class = CycleType::full_cycle(n)?;
            step.insert(class.clone(), BigRational::new(BigInt::one(), class.class_size()));
            (BigRational::zero(), kind.to_string())
        }
    };
    WalkSpec::assemble(n, step, laziness, label)
}

/// One Fourier eigenvalue: the scalar by which a step multiplies the `λ`
/// component.
#[derive(Clone, PartialEq, Debug)]
pub struct Eigenvalue {
    pub lambda: Partition,
    pub value: BigRational,
}

/// The step eigenvalue `p + Σ_κ |κ| P(κ) χ_λ(κ) / d_λ`.
pub fn eigenvalue(walk: &WalkSpec, lambda: &Partition) -> Result<BigRational> {
    if lambda.n() != walk.n() {
        return Err(Error::Domain(format!(
            "eigenvalue of a partition of {} for a walk on S_{}",
            lambda.n(),
            walk.n()
        )));
    }
    let dim = dimension(lambda);
    let mut acc = walk.laziness().clone();
    for (class, prob) in walk.step() {
        let chi = character(lambda, class)?;
        acc += prob * BigRational::new(chi * class.class_size(), dim.clone());
    }
    Ok(acc)
}

/// All eigenvalues, in the partition enumeration order (`[n]` first).
pub fn eigenvalues(walk: &WalkSpec) -> Result<Vec<Eigenvalue>> {
    enumerate_partitions(walk.n())?
        .into_iter()
        .map(|lambda| {
            let value = eigenvalue(walk, &lambda)?;
            Ok(Eigenvalue { lambda, value })
        })
        .collect()
}

/// The exact distribution of the walk after `t` steps, stored per element:
/// `probs[κ]` is the probability of each single permutation of class `κ`.
#[derive(Clone, PartialEq, Debug)]
pub struct ClassDistribution {
    n: u32,
    t: u64,
    walk: String,
    probs: BTreeMap<CycleType, BigRational>,
}

impl ClassDistribution {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Label of the walk that produced this distribution.
    pub fn walk(&self) -> &str {
        &self.walk
    }

    /// Per-element probability of one class.
    pub fn prob(&self, class: &CycleType) -> Option<&BigRational> {
        self.probs.get(class)
    }

    pub fn probs(&self) -> &BTreeMap<CycleType, BigRational> {
        &self.probs
    }

    /// Total probability carried by a class (`|κ| · P(κ)`).
    pub fn class_total(&self, class: &CycleType) -> Option<BigRational> {
        self.probs
            .get(class)
            .map(|p| p * BigRational::from(class.class_size()))
    }

    fn checked(self) -> Result<Self> {
        let mut total = BigRational::zero();
        for (class, prob) in &self.probs {
            if prob.is_negative() {
                return Err(Error::Internal(format!(
                    "negative probability {prob} at {class:?} (t = {})",
                    self.t
                )));
            }
            total += prob * BigRational::from(class.class_size());
        }
        if !total.is_one() {
            return Err(Error::Internal(format!(
                "distribution at t = {} sums to {total}, not 1",
                self.t
            )));
        }
        Ok(self)
    }

    /// Classes in canonical output order (identity first).
    pub fn ordered_classes(&self) -> Vec<CycleType> {
        canonical_classes(self.n).expect("degree was validated on construction")
    }

    /// JSON schema: `{"n", "t", "walk", "classes": [{"class", "num", "den",
    /// "class_size", "sign" [, "approx"]}, ..]}` in canonical class order.
    pub fn to_json(&self, approx: bool) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .ordered_classes()
            .iter()
            .map(|class| {
                let p = &self.probs[class];
                let mut row = json!({
                    "class": class.to_string(),
                    "num": p.numer().to_string(),
                    "den": p.denom().to_string(),
                    "class_size": class.class_size().to_string(),
                    "sign": class.sign(),
                });
                if approx {
                    row["approx"] = json!(format!("{:.12e}", to_f64_lossy(p)));
                }
                row
            })
            .collect();
        json!({
            "n": self.n,
            "t": self.t,
            "walk": self.walk,
            "classes": rows,
        })
    }

    /// CSV with columns `class, per_element_num, per_element_den,
    /// class_size, sign[, approx]`, identity row first.
    pub fn to_csv(&self, approx: bool) -> String {
        let mut out = String::new();
        let mut header = vec![
            "class".to_string(),
            "per_element_num".to_string(),
            "per_element_den".to_string(),
            "class_size".to_string(),
            "sign".to_string(),
        ];
        if approx {
            header.push("approx".to_string());
        }
        csvio::push_row(&mut out, &header);
        for class in self.ordered_classes() {
            let p = &self.probs[&class];
            let mut row = vec![
                class.to_string(),
                p.numer().to_string(),
                p.denom().to_string(),
                class.class_size().to_string(),
                class.sign().to_string(),
            ];
            if approx {
                row.push(format!("{:.12e}", to_f64_lossy(p)));
            }
            csvio::push_row(&mut out, &row);
        }
        out
    }
}

/// Exact `t`-step distribution by Fourier inversion, parallelized over the
/// irreducibles (the reduction is a sum, so ordering is immaterial).
pub fn distribution(walk: &WalkSpec, t: u64) -> Result<ClassDistribution> {
    let n = walk.n();
    let partitions = enumerate_partitions(n)?;
    let classes = canonical_classes(n)?;
    let zeros = || vec![BigRational::zero(); classes.len()];
    let sums = partitions
        .par_iter()
        .map(|lambda| -> Result<Vec<BigRational>> {
            let scale = rational_pow(&eigenvalue(walk, lambda)?, t)
                * BigRational::from(dimension(lambda));
            let mut row = zeros();
            if scale.is_zero() {
                return Ok(row);
            }
            for (slot, class) in row.iter_mut().zip(&classes) {
                let chi = character(lambda, class)?;
                if !chi.is_zero() {
                    *slot = BigRational::from(chi) * &scale;
                }
            }
            Ok(row)
        })
        .try_reduce(zeros, |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            Ok(a)
        })?;
    let order = BigRational::from(factorial(n as u64));
    let probs = classes
        .into_iter()
        .zip(sums)
        .map(|(class, sum)| (class, sum / &order))
        .collect();
    ClassDistribution {
        n,
        t,
        walk: walk.label().to_string(),
        probs,
    }
    .checked()
}

/// Exact difference `P^{*t}(α) - P^{*t}(β)`, by the difference form of the
/// inversion sum (a separate code path from [`distribution`], used to
/// cross-check it).
pub fn difference(
    walk: &WalkSpec,
    t: u64,
    alpha: &CycleType,
    beta: &CycleType,
) -> Result<BigRational> {
    if alpha.n() != walk.n() || beta.n() != walk.n() {
        return Err(Error::Domain(format!(
            "difference requires classes of degree {}",
            walk.n()
        )));
    }
    let mut acc = BigRational::zero();
    for lambda in enumerate_partitions(walk.n())? {
        let delta = character(&lambda, alpha)? - character(&lambda, beta)?;
        if delta.is_zero() {
            continue;
        }
        let c = eigenvalue(walk, &lambda)?;
        if c.is_zero() && t > 0 {
            continue;
        }
        acc += BigRational::from(delta * dimension(&lambda)) * rational_pow(&c, t);
    }
    Ok(acc / BigRational::from(factorial(walk.n() as u64)))
}

// ---------------------------------------------------------------------------
// Convolution oracle: class-algebra arithmetic with no characters involved.
// ---------------------------------------------------------------------------

struct ClassAlgebra {
    classes: Vec<CycleType>,
    /// `table[a][c][b]` counts pairs `x ∈ K_a, y ∈ K_b` with `x∘y = g_c`
    /// for one fixed representative `g_c`.
    table: Vec<Vec<Vec<u64>>>,
}

static CLASS_ALGEBRAS: Lazy<DashMap<u32, Arc<ClassAlgebra>>> = Lazy::new(DashMap::new);

fn class_algebra(n: u32) -> Result<Arc<ClassAlgebra>> {
    if let Some(hit) = CLASS_ALGEBRAS.get(&n) {
        return Ok(hit.clone());
    }
    let classes = canonical_classes(n)?;
    let index: BTreeMap<CycleType, usize> = classes
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let k = classes.len();
    // One canonical representative per class: cycles laid out consecutively.
    let reps: Vec<Vec<u32>> = classes.iter().map(representative).collect();
    let mut table = vec![vec![vec![0u64; k]; k]; k];
    let mut perm: Vec<u32> = (0..n).collect();
    // Iterate all of S_n; for each x and each class c, the cofactor
    // y = x⁻¹ ∘ g_c is determined, so bucket it.
    permute_all(&mut perm, 0, &mut |x| {
        let a = index[&cycle_type_of(x)];
        let inv = invert(x);
        for (c, rep) in reps.iter().enumerate() {
            let y = compose(&inv, rep);
            let b = index[&cycle_type_of(&y)];
            table[a][c][b] += 1;
        }
    });
    let algebra = Arc::new(ClassAlgebra { classes, table });
    CLASS_ALGEBRAS.insert(n, algebra.clone());
    Ok(algebra)
}

fn representative(class: &CycleType) -> Vec<u32> {
    let n = class.n() as usize;
    let mut perm: Vec<u32> = vec![0; n];
    let mut base = 0u32;
    for (idx, &count) in class.multiplicities().iter().enumerate() {
        let len = idx as u32 + 1;
        for _ in 0..count {
            for off in 0..len {
                perm[(base + off) as usize] = base + (off + 1) % len;
            }
            base += len;
        }
    }
    perm
}

fn cycle_type_of(perm: &[u32]) -> CycleType {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut mults = vec![0u32; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur] as usize;
            len += 1;
        }
        mults[len as usize - 1] += 1;
    }
    CycleType::new(mults).expect("cycle counts of a permutation always sum to n")
}

fn invert(perm: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v as usize] = i as u32;
    }
    inv
}

/// `(f ∘ g)(i) = f(g(i))`.
fn compose(f: &[u32], g: &[u32]) -> Vec<u32> {
    g.iter().map(|&i| f[i as usize]).collect()
}

fn permute_all(perm: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// The `t`-step distribution by repeated class-algebra convolution.
///
/// Independent of every character-theoretic code path; capped at
/// `n <= 7`, `t <= 64` because it enumerates `S_n` and convolves densely.
pub fn convolve_oracle(walk: &WalkSpec, t: u64) -> Result<ClassDistribution> {
    let n = walk.n();
    if n > MAX_ORACLE_N {
        return Err(Error::Resource(format!(
            "convolution oracle capped at n = {MAX_ORACLE_N}, got n = {n}"
        )));
    }
    if t > MAX_ORACLE_T {
        return Err(Error::Resource(format!(
            "convolution oracle capped at t = {MAX_ORACLE_T}, got t = {t}"
        )));
    }
    let algebra = class_algebra(n)?;
    let k = algebra.classes.len();
    let class_index = |class: &CycleType| -> usize {
        algebra
            .classes
            .iter()
            .position(|c| c == class)
            .expect("walk classes were validated against the same degree")
    };
    // Per-element step vector; the lazy hold sits on the identity class.
    let mut step = vec![BigRational::zero(); k];
    step[class_index(&CycleType::identity(n)?)] = walk.laziness().clone();
    for (class, prob) in walk.step() {
        step[class_index(class)] = prob.clone();
    }
    let support: Vec<usize> = (0..k).filter(|&b| !step[b].is_zero()).collect();
    // Start from the point mass at the identity and convolve t times.
    let mut current = vec![BigRational::zero(); k];
    current[class_index(&CycleType::identity(n)?)] = BigRational::one();
    for _ in 0..t {
        let mut next = vec![BigRational::zero(); k];
        for a in 0..k {
            if current[a].is_zero() {
                continue;
            }
            for (c, slot) in next.iter_mut().enumerate() {
                let mut pairs = BigRational::zero();
                for &b in &support {
                    let count = algebra.table[a][c][b];
                    if count != 0 {
                        pairs += &step[b] * BigRational::from(BigInt::from(count));
                    }
                }
                if !pairs.is_zero() {
                    *slot += &current[a] * pairs;
                }
            }
        }
        current = next;
    }
    let probs = algebra
        .classes
        .iter()
        .cloned()
        .zip(current)
        .collect();
    ClassDistribution {
        n,
        t,
        walk: walk.label().to_string(),
        probs,
    }
    .checked()
}

/// `t`-step distribution of the full-cycle walk using only the `n` hook
/// shapes (every other eigenvalue is zero once `t >= 1`, so the inversion
/// sum collapses). Exact, and fast enough for degrees well past the reach
/// of [`distribution`].
pub fn ncycle_distribution_by_hooks(n: u32, t: u64) -> Result<ClassDistribution> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "full-cycle walk requires n >= 3, got {n}"
        )));
    }
    if t == 0 {
        return distribution(&builtin_walk(&WalkKind::NCycle, n)?, 0);
    }
    let classes = canonical_classes(n)?;
    // Hook eigenvalue: (-1)^k / C(n-1, k); dimension C(n-1, k).
    let hooks: Vec<(Partition, BigRational, BigInt)> = (0..n)
        .map(|k| {
            let shape = Partition::hook(n, k)?;
            let dim = dimension(&shape);
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            Ok((shape, BigRational::new(sign, dim.clone()), dim))
        })
        .collect::<Result<Vec<_>>>()?;
    let order = BigRational::from(factorial(n as u64));
    let probs = classes
        .par_iter()
        .map(|class| -> Result<(CycleType, BigRational)> {
            let mut acc = BigRational::zero();
            for (shape, eig, dim) in &hooks {
                let chi = character(shape, class)?;
                if chi.is_zero() {
                    continue;
                }
                acc += BigRational::from(chi * dim) * rational_pow(eig, t);
            }
            Ok((class.clone(), acc / &order))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    ClassDistribution {
        n,
        t,
        walk: WalkKind::NCycle.to_string(),
        probs,
    }
    .checked()
}
