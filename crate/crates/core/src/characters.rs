//! Irreducible characters of `S_n`, exactly.
//!
//! The workhorse is the Murnaghan–Nakayama recursion ([`character`]),
//! memoized globally on `(shape, remaining cycle lengths)` so that table
//! builds and sweeps over many classes share work. On top of it sit the
//! closed forms that drive walk analysis: character ratios at a
//! transposition for the `[n-i, i-k, 1^k]` family, ratios at a three-cycle
//! from diagonal (Frobenius) coordinates, and the hook rule at a full
//! `n`-cycle.
//!
//! All values are exact big integers / rationals; nothing here rounds.

use std::collections::BTreeMap;

use dashmap::DashMap;
use num::{BigInt, BigRational, One, Signed, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde_json::json;

use crate::arith::{binomial, factorial, ratio};
use crate::csvio;
use crate::error::{Error, Result};
use crate::partitions::{canonical_classes, enumerate_partitions, CycleType, Partition};

/// Full character tables are capped here; single entries have no cap beyond
/// practicality (the recursion itself is exact at any size).
pub const MAX_TABLE_N: u32 = 14;

type MnKey = (Vec<u32>, Vec<u32>);

/// Global write-once memo for the recursion, keyed by the canonical shape
/// and the multiset of remaining cycle lengths (kept sorted). Concurrent
/// inserts of the same key write identical values, so racing is harmless.
static MN_CACHE: Lazy<DashMap<MnKey, BigInt>> = Lazy::new(DashMap::new);

/// The irreducible character `χ_λ(α)`, by border-strip (Murnaghan–Nakayama)
/// recursion with cycles consumed in decreasing length order.
pub fn character(lambda: &Partition, class: &CycleType) -> Result<BigInt> {
    if lambda.n() != class.n() {
        return Err(Error::Domain(format!(
            "character of a partition of {} at a class of S_{}",
            lambda.n(),
            class.n()
        )));
    }
    let mut cycles: Vec<u32> = lambda_cycles(class);
    cycles.sort_unstable();
    Ok(mn(lambda.parts().to_vec(), cycles))
}

fn lambda_cycles(class: &CycleType) -> Vec<u32> {
    let mut cycles = Vec::with_capacity(class.cycle_count() as usize);
    for (idx, &a) in class.multiplicities().iter().enumerate() {
        for _ in 0..a {
            cycles.push(idx as u32 + 1);
        }
    }
    cycles
}

fn mn(shape: Vec<u32>, cycles: Vec<u32>) -> BigInt {
    if cycles.is_empty() {
        // Sums always match, so an exhausted cycle list means an empty shape.
        return BigInt::one();
    }
    let key = (shape, cycles);
    if let Some(hit) = MN_CACHE.get(&key) {
        return hit.clone();
    }
    let (shape, mut cycles) = key.clone();
    let largest = cycles.pop().expect("nonempty");
    let mut acc = BigInt::zero();
    for (sub, height) in strip_removals(&shape, largest) {
        let term = mn(sub, cycles.clone());
        if height % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    MN_CACHE.insert(key, acc.clone());
    acc
}

/// All ways to remove a border strip of length `l` from `shape`, returning
/// the remaining shape and the strip height (rows spanned minus one).
///
/// Runs on first-column hook lengths (beta numbers): removing a strip of
/// length `l` moves one bead down by `l` into an empty slot, and the height
/// is the number of beads jumped over.
fn strip_removals(shape: &[u32], l: u32) -> Vec<(Vec<u32>, u32)> {
    let r = shape.len();
    let beta: Vec<i64> = shape
        .iter()
        .enumerate()
        .map(|(j, &p)| p as i64 + (r - 1 - j) as i64)
        .collect();
    let mut out = Vec::new();
    for (j, &b) in beta.iter().enumerate() {
        let target = b - l as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count() as u32;
        let mut nb = beta.clone();
        nb[j] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(k, &x)| (x - (r - 1 - k) as i64) as u32)
            .take_while(|&p| p > 0)
            .collect();
        out.push((parts, height));
    }
    out
}

/// Dimension of the irreducible indexed by `lambda`, via the hook-length
/// formula. Always a positive integer; the agreement with the recursion at
/// the identity class is checked in tests, not assumed.
pub fn dimension(lambda: &Partition) -> BigInt {
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 1..=p as usize {
            let h = p as i64 - j as i64 + conj.part(j) as i64 - i as i64;
            hooks *= BigInt::from(h); // arm + leg + 1
        }
    }
    if lambda.is_empty() {
        return BigInt::one();
    }
    factorial(lambda.n() as u64) / hooks
}

/// Normalized character `χ_λ(α) / d_λ` — the eigenvalue contribution of
/// class `α` to the representation `λ`.
pub fn char_ratio(lambda: &Partition, class: &CycleType) -> Result<BigRational> {
    let chi = character(lambda, class)?;
    Ok(BigRational::new(chi, dimension(lambda)))
}

/// Closed form for the transposition character ratio of
/// `[n-i, i-k, 1^k]`: `1 - i(n-i+k+1) / C(n,2)`, for `0 <= k < i <= n/2`.
///
/// `k = 0` covers the two-row shapes `[n-i, i]`, `k = i-1` the hooks
/// `[n-i, 1^i]`.
pub fn transposition_ratio_two_row_with_tail(n: u32, i: u32, k: u32) -> Result<BigRational> {
    // Validates the same preconditions as the shape constructor.
    Partition::two_row_with_tail(n, i, k)?;
    let num = BigInt::from(i as u64) * BigInt::from((n - i + k + 1) as u64);
    Ok(BigRational::one() - BigRational::new(num, binomial(n as u64, 2)))
}

/// Exact three-cycle character ratio `χ_λ((1^{n-3},3)) / d_λ` from diagonal
/// coordinates: with arms `α_j` and legs `β_j`,
/// `M/( 2 n(n-1)(n-2) ) - 3/( 2(n-2) )` where
/// `M = Σ_j α_j(α_j+1)(2α_j+1) + β_j(β_j+1)(2β_j+1)`.
pub fn three_cycle_ratio(lambda: &Partition) -> Result<BigRational> {
    let n = lambda.n() as u64;
    if n < 3 {
        return Err(Error::Domain(format!(
            "three-cycle ratio requires n >= 3, got {n}"
        )));
    }
    let (arms, legs) = lambda.frobenius();
    let mut m = BigInt::zero();
    for &c in arms.iter().chain(legs.iter()) {
        let c = BigInt::from(c);
        m += &c * (&c + 1) * (BigInt::from(2) * &c + 1);
    }
    let falling3 = BigInt::from(n) * BigInt::from(n - 1) * BigInt::from(n - 2);
    Ok(BigRational::new(m, BigInt::from(2) * falling3) - ratio(3, 2 * (n - 2) as i64))
}

/// Character at the full `n`-cycle: `(-1)^k` on the hook `[n-k, 1^k]`,
/// zero off hooks.
pub fn ncycle_character(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    if parts.is_empty() || parts.iter().skip(1).any(|&p| p != 1) {
        return if parts.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let k = parts.len() as u32 - 1;
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// A full character table of `S_n`: rows indexed by partitions in
/// reverse-lexicographic order (`[n]` first), columns by classes from the
/// identity to the full cycle.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: u32,
    partitions: Vec<Partition>,
    classes: Vec<CycleType>,
    chi: Vec<Vec<BigInt>>,
    dims: Vec<BigInt>,
}

impl CharacterTable {
    /// Builds the complete table for `S_n` (`n <= 14`); rows are computed
    /// in parallel. Larger `n` is served entry-by-entry by [`character`].
    pub fn build(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("character table requires n >= 1".into()));
        }
        if n > MAX_TABLE_N {
            return Err(Error::Resource(format!(
                "full character tables are capped at n = {MAX_TABLE_N}, got n = {n}; \
                 use per-entry evaluation instead"
            )));
        }
        let partitions = enumerate_partitions(n)?;
        let classes = canonical_classes(n)?;
        let chi = partitions
            .par_iter()
            .map(|lambda| {
                classes
                    .iter()
                    .map(|class| character(lambda, class))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let dims = partitions.iter().map(dimension).collect();
        Ok(CharacterTable {
            n,
            partitions,
            classes,
            chi,
            dims,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn dims(&self) -> &[BigInt] {
        &self.dims
    }

    /// Row-major entries: `entry(r, c) = χ_{partitions[r]}(classes[c])`.
    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.chi[row][col]
    }

    /// Looks an entry up by content rather than position.
    pub fn value(&self, lambda: &Partition, class: &CycleType) -> Option<&BigInt> {
        let r = self.partitions.iter().position(|p| p == lambda)?;
        let c = self.classes.iter().position(|k| k == class)?;
        Some(&self.chi[r][c])
    }

    /// Checks both orthogonality relations exactly:
    /// rows `Σ_κ |κ| χ_λ(κ) χ_μ(κ) = n! δ_{λμ}` and
    /// columns `Σ_λ χ_λ(α) χ_λ(β) = z_α δ_{αβ}` (which at the identity
    /// column is `Σ d² = n!`).
    pub fn verify_orthogonality(&self) -> Result<()> {
        let nfact = factorial(self.n as u64);
        let sizes: Vec<BigInt> = self.classes.iter().map(|c| c.class_size()).collect();
        for (r1, row1) in self.chi.iter().enumerate() {
            for (r2, row2) in self.chi.iter().enumerate().skip(r1) {
                let sum: BigInt = row1
                    .iter()
                    .zip(row2)
                    .zip(&sizes)
                    .map(|((a, b), size)| a * b * size)
                    .sum();
                let expect = if r1 == r2 { nfact.clone() } else { BigInt::zero() };
                if sum != expect {
                    return Err(Error::Internal(format!(
                        "row orthogonality failed for {:?} and {:?}",
                        self.partitions[r1], self.partitions[r2]
                    )));
                }
            }
        }
        for c1 in 0..self.classes.len() {
            for c2 in c1..self.classes.len() {
                let sum: BigInt = self.chi.iter().map(|row| &row[c1] * &row[c2]).sum();
                let expect = if c1 == c2 {
                    self.classes[c1].centralizer_order()
                } else {
                    BigInt::zero()
                };
                if sum != expect {
                    return Err(Error::Internal(format!(
                        "column orthogonality failed for {:?} and {:?}",
                        self.classes[c1], self.classes[c2]
                    )));
                }
            }
        }
        Ok(())
    }

    /// JSON form: `{"n", "partitions", "classes", "chi", "dims"}` with the
    /// character matrix row-major. Entries fit in 64 bits for every `n`
    /// this builder accepts.
    pub fn to_json(&self) -> serde_json::Value {
        let as_i64 = |v: &BigInt| -> i64 {
            i64::try_from(v).expect("table entries fit in i64 for n <= 14")
        };
        json!({
            "n": self.n,
            "partitions": self.partitions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "classes": self.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "chi": self.chi.iter()
                .map(|row| row.iter().map(as_i64).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "dims": self.dims.iter().map(as_i64).collect::<Vec<_>>(),
        })
    }

    /// CSV form: one row per partition, one column per class, with a
    /// leading `partition` label column.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let mut header = vec!["partition".to_string()];
        header.extend(self.classes.iter().map(|c| c.to_string()));
        csvio::push_row(&mut out, &header);
        for (r, lambda) in self.partitions.iter().enumerate() {
            let mut row = vec![lambda.to_string()];
            row.extend(self.chi[r].iter().map(|v| v.to_string()));
            csvio::push_row(&mut out, &row);
        }
        out
    }
}

/// Scratch map from each partition of `n` to its character on one class —
/// the shape sweeps used all over walk analysis.
pub fn character_column(n: u32, class: &CycleType) -> Result<BTreeMap<Partition, BigInt>> {
    let mut col = BTreeMap::new();
    for lambda in enumerate_partitions(n)? {
        let chi = character(&lambda, class)?;
        col.insert(lambda, chi);
    }
    Ok(col)
}

/// `|χ_λ(α)| <= d_λ` for every class; exposed for sanity checks.
pub fn character_bounded_by_dimension(lambda: &Partition, class: &CycleType) -> Result<bool> {
    Ok(character(lambda, class)?.abs() <= dimension(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn border_strip_recursion_worked_example() {
        // Two removal paths with opposite signs leave χ = -1.
        assert_eq!(
            character(&pt("4,2"), &ct("1^2 4")).unwrap(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn trivial_and_sign_rows() {
        for class in crate::partitions::canonical_classes(5).unwrap() {
            assert_eq!(character(&pt("5"), &class).unwrap(), BigInt::one());
            assert_eq!(
                character(&pt("1,1,1,1,1"), &class).unwrap(),
                BigInt::from(class.sign())
            );
        }
    }

    #[test]
    fn standard_representation_counts_fixed_points() {
        // χ_{[n-1,1]}(α) = (fixed points) - 1.
        for class in crate::partitions::canonical_classes(7).unwrap() {
            assert_eq!(
                character(&pt("6,1"), &class).unwrap(),
                BigInt::from(class.multiplicity(1) as i64 - 1)
            );
        }
    }

    #[test]
    fn hook_length_dimensions() {
        assert_eq!(dimension(&pt("4,2")), BigInt::from(9));
        assert_eq!(dimension(&pt("5,1")), BigInt::from(5));
        assert_eq!(dimension(&pt("2,1")), BigInt::from(2));
        assert_eq!(dimension(&pt("1,1,1")), BigInt::one());
        assert_eq!(dimension(&pt("7")), BigInt::one());
        // Two-row closed form C(n,i)(n-2i+1)/(n-i+1) at n=6, i=2.
        assert_eq!(dimension(&Partition::two_row(6, 2).unwrap()), BigInt::from(9));
    }

    #[test]
    fn dimension_matches_recursion_at_identity() {
        for n in 1..=8 {
            let id = CycleType::identity(n).unwrap();
            for lambda in enumerate_partitions(n).unwrap() {
                assert_eq!(
                    character(&lambda, &id).unwrap(),
                    dimension(&lambda),
                    "{lambda:?}"
                );
            }
        }
    }

    #[test]
    fn character_rejects_mismatched_degree() {
        assert!(matches!(
            character(&pt("4,2"), &ct("1^3")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn transposition_ratio_closed_form_examples() {
        assert_eq!(
            transposition_ratio_two_row_with_tail(6, 2, 0).unwrap(),
            ratio(1, 3)
        );
        assert_eq!(
            transposition_ratio_two_row_with_tail(6, 2, 1).unwrap(),
            ratio(1, 5)
        );
        assert!(transposition_ratio_two_row_with_tail(6, 4, 0).is_err());
        assert!(transposition_ratio_two_row_with_tail(6, 2, 2).is_err());
    }

    #[test]
    fn three_cycle_ratio_examples() {
        assert_eq!(three_cycle_ratio(&pt("5")).unwrap(), BigRational::one());
        assert_eq!(three_cycle_ratio(&pt("2,1")).unwrap(), ratio(-1, 2));
        // Hook [4,1] in S_5: 1 - 3·1·3/(4·3) = 1/4.
        assert_eq!(three_cycle_ratio(&pt("4,1")).unwrap(), ratio(1, 4));
        assert!(three_cycle_ratio(&pt("2")).is_err());
    }

    #[test]
    fn ncycle_character_hook_rule() {
        assert_eq!(ncycle_character(&pt("6")), BigInt::one());
        assert_eq!(ncycle_character(&pt("4,1,1")), BigInt::one());
        assert_eq!(ncycle_character(&pt("5,1")), BigInt::from(-1));
        assert_eq!(ncycle_character(&pt("4,2")), BigInt::zero());
        // Cross-check against the recursion at the full cycle.
        for lambda in enumerate_partitions(6).unwrap() {
            assert_eq!(
                ncycle_character(&lambda),
                character(&lambda, &ct("6")).unwrap(),
                "{lambda:?}"
            );
        }
    }

    #[test]
    fn small_table_contents() {
        let t = CharacterTable::build(3).unwrap();
        let rows: Vec<Vec<i64>> = (0..3)
            .map(|r| (0..3).map(|c| i64::try_from(t.entry(r, c)).unwrap()).collect())
            .collect();
        assert_eq!(rows, vec![vec![1, 1, 1], vec![2, 0, -1], vec![1, -1, 1]]);
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn table_caps_and_bad_input() {
        assert!(matches!(CharacterTable::build(0), Err(Error::Domain(_))));
        assert!(matches!(
            CharacterTable::build(MAX_TABLE_N + 1),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn table_csv_quotes_partition_labels() {
        let t = CharacterTable::build(3).unwrap();
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "partition,1^3,1 2,3");
        assert_eq!(lines.next().unwrap(), "3,1,1,1");
        assert_eq!(lines.next().unwrap(), "\"2,1\",2,0,-1");
        assert_eq!(lines.next().unwrap(), "\"1,1,1\",1,-1,1");
    }
}
