//! Partitions of `n`, conjugacy classes of `S_n`, and the likelihood orders
//! on them.
//!
//! A [`Partition`] indexes an irreducible representation; a [`CycleType`]
//! indexes a conjugacy class. The two are interconvertible (a cycle type is
//! a partition read as multiplicities), but they play different roles and
//! carry different invariants, so they are distinct types.
//!
//! [`OrderKind`] names the six orders we compare walk distributions against.
//! Three of them act on cycle-count sequences (`Cl` and its sign-twisted
//! variants) and three on sorted part sequences (majorization and the two
//! lexicographic orders).

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One};

use crate::arith::factorial;
use crate::error::{Error, Result};

/// Largest `n` for which [`enumerate_partitions`] will run. `p(40) = 37338`
/// keeps full enumerations comfortably in memory; beyond that the exact
/// pipeline downstream is impractical anyway.
pub const MAX_ENUMERATION_N: u32 = 40;

/// An integer partition: weakly decreasing positive parts.
///
/// The empty partition (of `0`) is allowed; it shows up as the index of the
/// constant character polynomial. Structural `Ord` is lexicographic on the
/// part vector, which matches the reverse-lexicographic enumeration order
/// used throughout (largest partition `[n]` first).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, validating that parts are positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::Domain(format!(
                    "partition parts must be weakly decreasing, got {:?}",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        Ok(Partition { parts })
    }

    /// The two-row partition `[n-i, i]` (`i = 0` gives the single row `[n]`).
    pub fn two_row(n: u32, i: u32) -> Result<Self> {
        if 2 * i > n || n == 0 {
            return Err(Error::Domain(format!(
                "two_row requires 0 <= i <= n/2, got n={n}, i={i}"
            )));
        }
        let mut parts = vec![n - i];
        if i > 0 {
            parts.push(i);
        }
        Partition::new(parts)
    }

    /// The hook `[n-k, 1^k]` with arm `n-k-1` and leg `k` (`0 <= k <= n-1`).
    pub fn hook(n: u32, k: u32) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::Domain(format!(
                "hook requires 0 <= k < n, got n={n}, k={k}"
            )));
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat(1).take(k as usize));
        Partition::new(parts)
    }

    /// The partition `[n-i, i-k, 1^k]` interpolating between the two-row
    /// shape (`k = 0`) and the hook `[n-i, 1^i]` (`k = i-1`).
    ///
    /// Requires `0 <= k < i <= n/2`.
    pub fn two_row_with_tail(n: u32, i: u32, k: u32) -> Result<Self> {
        if i == 0 || 2 * i > n || k >= i {
            return Err(Error::Domain(format!(
                "two_row_with_tail requires 0 <= k < i <= n/2, got n={n}, i={i}, k={k}"
            )));
        }
        let mut parts = vec![n - i, i - k];
        parts.extend(std::iter::repeat(1).take(k as usize));
        Partition::new(parts)
    }

    /// Sum of the parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts (rows).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part at 1-based row `r`, or `0` past the last row.
    pub fn part(&self, r: usize) -> u32 {
        if r >= 1 && r <= self.parts.len() {
            self.parts[r - 1]
        } else {
            0
        }
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize >= c).count() as u32);
        }
        Partition { parts }
    }

    /// Hook lengths of the cells `(2,1)` and `(1,2)`, in that order; `0`
    /// where the cell is absent.
    ///
    /// These two numbers control which cycle lengths a character can see:
    /// `[4,2]` gives `(2, 4)` and the hook `[n-k, 1^k]` gives `(k, n-k-1)`.
    pub fn subhook_lengths(&self) -> (u32, u32) {
        let h21 = if self.parts.len() >= 2 {
            // arm (λ₂ - 1) + leg (rows below row 2) + 1
            self.parts[1] + self.parts.len() as u32 - 2
        } else {
            0
        };
        let h12 = if self.part(1) >= 2 {
            // arm (λ₁ - 2) + leg (#rows with ≥ 2 cells, minus row 1) + 1
            let col2 = self.parts.iter().filter(|&&p| p >= 2).count() as u32;
            self.parts[0] + col2 - 2
        } else {
            0
        };
        (h21, h12)
    }

    /// Whether every cycle length `>= i` is visible to this shape: the
    /// defining criterion is `min(h_{2,1}, h_{1,2}) >= i`.
    ///
    /// Characters of shapes failing this are blind to the number of
    /// `i`-cycles of a class (two classes agreeing below `i` get equal
    /// character values). Detectors only exist for `i <= n/2`.
    pub fn is_cycle_detector(&self, i: u32) -> bool {
        let (h21, h12) = self.subhook_lengths();
        h21.min(h12) >= i
    }

    /// Frobenius coordinates: for each diagonal cell `j`, the arm length
    /// `λ_j - j` and leg length `λ'_j - j`.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for j in 1..=self.parts.len() {
            if self.part(j) < j as u32 {
                break;
            }
            arms.push(self.part(j) - j as u32);
            legs.push(conj.part(j) - j as u32);
        }
        (arms, legs)
    }

    /// The conjugacy class with this cycle structure.
    pub fn to_cycle_type(&self) -> Result<CycleType> {
        if self.parts.is_empty() {
            return Err(Error::Domain(
                "the empty partition has no conjugacy class".into(),
            ));
        }
        let n = self.n();
        let mut mults = vec![0u32; n as usize];
        for &p in &self.parts {
            mults[p as usize - 1] += 1;
        }
        CycleType::new(mults)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated encoding, e.g. `"4,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty partition string".into()));
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid partition part {tok:?}")))?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All partitions of `n` in reverse-lexicographic order: `[n]` first,
/// `[1^n]` last.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::Domain("cannot enumerate partitions of 0".into()));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::Resource(format!(
            "partition enumeration capped at n = {MAX_ENUMERATION_N}, got n = {n}"
        )));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// Conjugacy classes of `S_n` in the canonical output order: identity
/// `(1^n)` first, the full cycle `(n)` last.
pub fn canonical_classes(n: u32) -> Result<Vec<CycleType>> {
    let mut classes = enumerate_partitions(n)?
        .iter()
        .map(|p| p.to_cycle_type())
        .collect::<Result<Vec<_>>>()?;
    classes.reverse();
    Ok(classes)
}

/// Class parity (or no restriction) — used both for conjugacy classes and
/// for the parity of walk times.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parity {
    Any,
    Even,
    Odd,
}

impl Parity {
    /// Whether a sign (`+1` / `-1`) satisfies this parity restriction.
    pub fn admits_sign(self, sign: i32) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => sign == 1,
            Parity::Odd => sign == -1,
        }
    }

    /// Whether an integer (e.g. a walk time) has this parity.
    pub fn admits_int(self, t: u64) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => t % 2 == 0,
            Parity::Odd => t % 2 == 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Any => write!(f, "any"),
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(Parity::Any),
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(Error::Parse(format!(
                "unknown parity {other:?}; expected any, even, or odd"
            ))),
        }
    }
}

/// A conjugacy class of `S_n`, stored as cycle-count multiplicities
/// `a_1 .. a_n` (always padded to length `n`, so `Σ i·a_i = n` pins the
/// degree).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    mults: Vec<u32>,
}

impl CycleType {
    /// Builds a class from multiplicities `a_1 .. a_n`; the vector length is
    /// the degree and must equal `Σ i·a_i`.
    pub fn new(mults: Vec<u32>) -> Result<Self> {
        let n = mults.len() as u64;
        let weighted: u64 = mults
            .iter()
            .enumerate()
            .map(|(idx, &a)| (idx as u64 + 1) * a as u64)
            .sum();
        if n == 0 {
            return Err(Error::Domain("cycle type must have degree >= 1".into()));
        }
        if weighted != n {
            return Err(Error::Domain(format!(
                "cycle counts sum to {weighted}, expected degree {n}"
            )));
        }
        Ok(CycleType { mults })
    }

    /// Builds a class from its cycle lengths (any order), e.g. `[4,1,1]`.
    pub fn from_cycles(n: u32, cycles: &[u32]) -> Result<Self> {
        let mut mults = vec![0u32; n as usize];
        for &c in cycles {
            if c == 0 || c > n {
                return Err(Error::Domain(format!(
                    "cycle length {c} out of range for degree {n}"
                )));
            }
            mults[c as usize - 1] += 1;
        }
        CycleType::new(mults)
    }

    /// The identity class `(1^n)`.
    pub fn identity(n: u32) -> Result<Self> {
        CycleType::from_cycles(n, &vec![1; n as usize])
    }

    /// The transposition class `(1^{n-2}, 2)`.
    pub fn transposition(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "transposition class requires n >= 2, got {n}"
            )));
        }
        let mut cycles = vec![1; n as usize - 2];
        cycles.push(2);
        CycleType::from_cycles(n, &cycles)
    }

    /// The three-cycle class `(1^{n-3}, 3)`.
    pub fn three_cycle(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "three-cycle class requires n >= 3, got {n}"
            )));
        }
        let mut cycles = vec![1; n as usize - 3];
        cycles.push(3);
        CycleType::from_cycles(n, &cycles)
    }

    /// The single full cycle `(n)`.
    pub fn full_cycle(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("full cycle requires n >= 1".into()));
        }
        CycleType::from_cycles(n, &[n])
    }

    /// Degree `n` of the ambient symmetric group.
    pub fn n(&self) -> u32 {
        self.mults.len() as u32
    }

    /// Count of cycles of length `i` (1-based; `0` outside `1..=n`).
    pub fn multiplicity(&self, i: u32) -> u32 {
        if i >= 1 && i as usize <= self.mults.len() {
            self.mults[i as usize - 1]
        } else {
            0
        }
    }

    /// The full multiplicity vector `a_1 .. a_n`.
    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    /// Total number of cycles, fixed points included.
    pub fn cycle_count(&self) -> u32 {
        self.mults.iter().sum()
    }

    /// The partition of cycle lengths, largest first.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (idx, &a) in self.mults.iter().enumerate().rev() {
            for _ in 0..a {
                parts.push(idx as u32 + 1);
            }
        }
        Partition { parts }
    }

    /// Sign of the permutations in this class: `(-1)^{n - #cycles}`.
    pub fn sign(&self) -> i32 {
        if (self.n() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Order of the centralizer: `z = Π_i a_i! · i^{a_i}`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (idx, &a) in self.mults.iter().enumerate() {
            let i = idx as u64 + 1;
            z *= factorial(a as u64);
            z *= BigInt::from(i).pow(a);
        }
        z
    }

    /// Number of elements in the class: `n! / z`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.n() as u64) / self.centralizer_order()
    }
}

impl fmt::Display for CycleType {
    /// Space-separated `i^{a_i}` atoms in increasing `i`, exponent 1
    /// omitted: `(1²,4)` prints as `1^2 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &a) in self.mults.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            if a == 1 {
                write!(f, "{}", idx + 1)?;
            } else {
                write!(f, "{}^{}", idx + 1, a)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty cycle type string".into()));
        }
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for atom in s.split_whitespace() {
            let (i, a) = match atom.split_once('^') {
                Some((i, a)) => {
                    let i = i
                        .parse()
                        .map_err(|_| Error::Parse(format!("invalid cycle length in {atom:?}")))?;
                    let a = a
                        .parse()
                        .map_err(|_| Error::Parse(format!("invalid multiplicity in {atom:?}")))?;
                    (i, a)
                }
                None => (
                    atom.parse()
                        .map_err(|_| Error::Parse(format!("invalid cycle length {atom:?}")))?,
                    1,
                ),
            };
            if i == 0 || a == 0 {
                return Err(Error::Parse(format!(
                    "cycle length and multiplicity must be positive in {atom:?}"
                )));
            }
            if let Some(&(prev, _)) = pairs.last() {
                if prev >= i {
                    return Err(Error::Parse(format!(
                        "cycle lengths must be strictly increasing, got {prev} then {i}"
                    )));
                }
            }
            pairs.push((i, a));
        }
        let n: u64 = pairs.iter().map(|&(i, a)| i as u64 * a as u64).sum();
        if n > u32::MAX as u64 {
            return Err(Error::Parse("cycle type degree overflows".into()));
        }
        let mut mults = vec![0u32; n as usize];
        for (i, a) in pairs {
            mults[i as usize - 1] = a;
        }
        CycleType::new(mults).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Result of comparing two classes under one of the orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    /// Only possible under majorization, the one partial order here.
    Incomparable,
}

impl Comparison {
    pub fn reverse(self) -> Comparison {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Greater => Comparison::Less,
            other => other,
        }
    }

    /// The sign a strict comparison predicts for a probability difference:
    /// `+1` for `Greater`, `-1` for `Less`, `None` otherwise.
    pub fn predicted_sign(self) -> Option<i32> {
        match self {
            Comparison::Greater => Some(1),
            Comparison::Less => Some(-1),
            _ => None,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Comparison::Less => "less",
            Comparison::Equal => "equal",
            Comparison::Greater => "greater",
            Comparison::Incomparable => "incomparable",
        };
        write!(f, "{name}")
    }
}

/// The six orders walk distributions are compared against.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    /// Cycle lexicographic: at the first cycle length where the counts
    /// differ, more cycles wins.
    Cl,
    /// `Cl` reversed.
    NegCl,
    /// `Cl` with the outcome flipped at even first-difference index.
    AltCl,
    /// Dominance on sorted parts (partial).
    Majorization,
    /// Lexicographic on sorted parts from the largest part.
    ReverseLex,
    /// Lexicographic from the *last* difference in sorted parts, smaller
    /// part winning — orders classes essentially by number of parts.
    LulovLex,
}

impl OrderKind {
    /// Every kind except majorization is a total order.
    pub fn is_total(self) -> bool {
        !matches!(self, OrderKind::Majorization)
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OrderKind::Cl => "cl",
            OrderKind::NegCl => "neg-cl",
            OrderKind::AltCl => "alt-cl",
            OrderKind::Majorization => "majorization",
            OrderKind::ReverseLex => "reverse-lex",
            OrderKind::LulovLex => "lulov-lex",
        };
        write!(f, "{name}")
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cl" => Ok(OrderKind::Cl),
            "neg-cl" => Ok(OrderKind::NegCl),
            "alt-cl" => Ok(OrderKind::AltCl),
            "majorization" => Ok(OrderKind::Majorization),
            "reverse-lex" => Ok(OrderKind::ReverseLex),
            "lulov-lex" => Ok(OrderKind::LulovLex),
            other => Err(Error::Parse(format!("unknown order kind {other:?}"))),
        }
    }
}

/// Compares two classes of the same degree under `kind`.
pub fn compare(kind: OrderKind, a: &CycleType, b: &CycleType) -> Result<Comparison> {
    if a.n() != b.n() {
        return Err(Error::Domain(format!(
            "cannot compare classes of different degrees {} and {}",
            a.n(),
            b.n()
        )));
    }
    if a == b {
        return Ok(Comparison::Equal);
    }
    Ok(match kind {
        OrderKind::Cl | OrderKind::NegCl | OrderKind::AltCl => {
            // First cycle length where the counts differ decides.
            let (i, ai, bi) = a
                .multiplicities()
                .iter()
                .zip(b.multiplicities())
                .enumerate()
                .find(|(_, (x, y))| x != y)
                .map(|(idx, (&x, &y))| (idx as u32 + 1, x, y))
                .expect("unequal classes must differ somewhere");
            let more_wins = match kind {
                OrderKind::Cl => true,
                OrderKind::NegCl => false,
                OrderKind::AltCl => i % 2 == 1,
                _ => unreachable!(),
            };
            if (ai > bi) == more_wins {
                Comparison::Greater
            } else {
                Comparison::Less
            }
        }
        OrderKind::Majorization => {
            let (pa, pb) = (a.to_partition(), b.to_partition());
            let rows = pa.len().max(pb.len());
            let (mut sa, mut sb) = (0u64, 0u64);
            let (mut ge, mut le) = (true, true);
            for r in 1..=rows {
                sa += pa.part(r) as u64;
                sb += pb.part(r) as u64;
                ge &= sa >= sb;
                le &= sa <= sb;
            }
            match (ge, le) {
                (true, false) => Comparison::Greater,
                (false, true) => Comparison::Less,
                (false, false) => Comparison::Incomparable,
                (true, true) => Comparison::Equal,
            }
        }
        OrderKind::ReverseLex => {
            let (pa, pb) = (a.to_partition(), b.to_partition());
            let rows = pa.len().max(pb.len());
            let decisive = (1..=rows)
                .map(|r| (pa.part(r), pb.part(r)))
                .find(|(x, y)| x != y)
                .expect("unequal classes must differ somewhere");
            if decisive.0 > decisive.1 {
                Comparison::Greater
            } else {
                Comparison::Less
            }
        }
        OrderKind::LulovLex => {
            let (pa, pb) = (a.to_partition(), b.to_partition());
            let rows = pa.len().max(pb.len());
            let decisive = (1..=rows)
                .rev()
                .map(|r| (pa.part(r), pb.part(r)))
                .find(|(x, y)| x != y)
                .expect("unequal classes must differ somewhere");
            if decisive.0 < decisive.1 {
                Comparison::Greater
            } else {
                Comparison::Less
            }
        }
    })
}

/// The most and least likely classes `(max, min)` predicted for a walk whose
/// eventual order is `kind`, within the given parity of classes.
///
/// Only the three total cycle-count orders have tabulated extremes; `n >= 4`
/// keeps every table entry distinct and well formed.
pub fn extremes(kind: OrderKind, n: u32, parity: Parity) -> Result<(CycleType, CycleType)> {
    if !matches!(kind, OrderKind::Cl | OrderKind::NegCl | OrderKind::AltCl) {
        return Err(Error::Unsupported(format!(
            "extremes are tabulated only for the cycle-count orders, not {kind}"
        )));
    }
    if n < 4 {
        return Err(Error::Domain(format!("extremes require n >= 4, got {n}")));
    }
    if kind == OrderKind::NegCl {
        let (max, min) = extremes(OrderKind::Cl, n, parity)?;
        return Ok((min, max));
    }

    let identity = CycleType::identity(n)?;
    let near_identity = CycleType::transposition(n)?;
    let max = match parity {
        Parity::Any | Parity::Even => identity,
        Parity::Odd => near_identity,
    };

    let from_parts = |parts: Vec<u32>| -> Result<CycleType> {
        CycleType::from_cycles(n, &parts)
    };
    let min = match kind {
        OrderKind::Cl => {
            if n % 2 == 1 {
                match parity {
                    Parity::Any | Parity::Even => CycleType::full_cycle(n)?,
                    Parity::Odd => from_parts(vec![(n + 1) / 2, (n - 1) / 2])?,
                }
            } else {
                match parity {
                    Parity::Any | Parity::Odd => CycleType::full_cycle(n)?,
                    Parity::Even => from_parts(vec![n / 2, n / 2])?,
                }
            }
        }
        OrderKind::AltCl => {
            // All-twos (n even) or twos-and-a-three (n odd), adjusted by one
            // parity step when 4 ∤ n (resp. 4 ∤ n+1) forces it.
            let twos = |count: u32, extra: Option<u32>| -> Result<CycleType> {
                let mut parts = vec![2u32; count as usize];
                if let Some(e) = extra {
                    parts.insert(0, e);
                }
                from_parts(parts)
            };
            if n % 2 == 1 {
                let dense = twos((n - 3) / 2, Some(3))?;
                match parity {
                    Parity::Any => dense,
                    Parity::Even => {
                        if (n + 1) % 4 == 0 {
                            dense
                        } else {
                            twos((n - 5) / 2, Some(5))?
                        }
                    }
                    Parity::Odd => {
                        if (n + 1) % 4 == 0 {
                            twos((n - 5) / 2, Some(5))?
                        } else {
                            dense
                        }
                    }
                }
            } else {
                let dense = twos(n / 2, None)?;
                match parity {
                    Parity::Any => dense,
                    Parity::Even => {
                        if n % 4 == 0 {
                            dense
                        } else {
                            twos((n - 4) / 2, Some(4))?
                        }
                    }
                    Parity::Odd => {
                        if n % 4 == 0 {
                            twos((n - 4) / 2, Some(4))?
                        } else {
                            dense
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    };
    Ok((max, min))
}
