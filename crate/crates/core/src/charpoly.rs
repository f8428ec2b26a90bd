//! Character polynomials: closed-form characters as polynomials in cycle
//! counts.
//!
//! For a partition `μ` of `m`, the polynomial `q_μ(x_1, .., x_m)` evaluates
//! any character whose shape is `μ` below a long first row: if
//! `λ = [n - m, μ]` is a partition and `α` a class of `S_n` with cycle
//! counts `a_i`, then `χ_λ(α) = q_μ(a_1, .., a_m)`.
//!
//! Construction follows the classical recipe: expand
//! `Σ_{ρ ⊢ m} (χ_μ(ρ)/z_ρ) Π_i (i·x_i - 1)^{a_i(ρ)}` in ordinary monomials,
//! then reinterpret each monomial `Π x_i^{e_i}` as the falling-factorial
//! product `Π (x_i)_{e_i}`, coefficient unchanged. The result is stored in
//! that falling-factorial basis with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::json;

use crate::arith::{factorial, falling};
use crate::characters::character;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, CycleType, Partition};

/// Cap on `|μ|`; the number of terms grows quickly past this and nothing
/// downstream needs more.
pub const MAX_CHARPOLY_WEIGHT: u32 = 8;

/// A polynomial in falling factorials `(x_1)_{e_1} ... (x_m)_{e_m}` with
/// exact rational coefficients and no explicitly stored zero terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl CharPolynomial {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Terms as `(exponents, coefficient)` in ascending exponent-vector
    /// order. Exponent vectors always have length [`Self::num_vars`].
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Evaluates at the cycle counts of `class`; counts for variables past
    /// `class.n()` are zero. The value of a character polynomial at any
    /// class is an integer — enforced, not assumed.
    pub fn evaluate(&self, class: &CycleType) -> BigInt {
        let mut total = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut prod = BigInt::one();
            for (idx, &e) in exps.iter().enumerate() {
                if e > 0 {
                    let a = class.multiplicity(idx as u32 + 1);
                    prod *= falling(&BigInt::from(a), e as u64);
                    if prod.is_zero() {
                        break;
                    }
                }
            }
            if !prod.is_zero() {
                total += coeff * BigRational::from(prod);
            }
        }
        if !total.is_integer() {
            // Falling-factorial evaluation of a character polynomial can
            // only be an integer; anything else is a construction bug.
            panic!("character polynomial evaluated to non-integer {total}");
        }
        total.to_integer()
    }

    /// Largest variable index appearing in a nonzero term (`0` for nonzero
    /// constants). The zero polynomial has no support to report — that is a
    /// domain error, though no character polynomial is ever zero.
    pub fn max_variable_index(&self) -> Result<u32> {
        if self.terms.is_empty() {
            return Err(Error::Domain(
                "the zero polynomial has no variable support".into(),
            ));
        }
        Ok(self
            .terms
            .keys()
            .map(|exps| {
                exps.iter()
                    .enumerate()
                    .rev()
                    .find(|(_, &e)| e > 0)
                    .map(|(idx, _)| idx as u32 + 1)
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0))
    }

    /// JSON form: `{"vars", "terms": [{"exps", "num", "den"}, ..]}` in
    /// ascending exponent order, coefficients as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "vars": self.num_vars,
            "terms": self.terms.iter().map(|(exps, c)| json!({
                "exps": exps,
                "num": c.numer().to_string(),
                "den": c.denom().to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CharPolynomial {
    /// Human form in the binomial basis, highest variable first:
    /// `(1/2)(x_1)_2` prints as `C(x1,2)`, so `q_[2]` is
    /// `x2 + C(x1,2) - x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let ra: Vec<u32> = a.iter().rev().copied().collect();
            let rb: Vec<u32> = b.iter().rev().copied().collect();
            rb.cmp(&ra)
        });
        for (pos, exps) in keys.iter().enumerate() {
            // Fold Π e_i! into the coefficient so factors print as C(x,e);
            // for integer-valued polynomials this is always an integer.
            let mut coeff = self.terms[*exps].clone();
            for &e in exps.iter() {
                coeff *= BigRational::from(factorial(e as u64));
            }
            let neg = coeff.is_negative();
            if pos == 0 {
                if neg {
                    write!(f, "- ")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            for (idx, &e) in exps.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", idx + 1));
                } else if e > 1 {
                    factors.push(format!("C(x{},{})", idx + 1, e));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag} ")?;
                }
                write!(f, "{}", factors.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Builds the character polynomial `q_μ` (requires `|μ| <= 8`).
pub fn character_polynomial(mu: &Partition) -> Result<CharPolynomial> {
    let m = mu.n();
    if m > MAX_CHARPOLY_WEIGHT {
        return Err(Error::Resource(format!(
            "character polynomials are capped at |μ| = {MAX_CHARPOLY_WEIGHT}, got {m}"
        )));
    }
    let vars = m as usize;
    let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    if m == 0 {
        acc.insert(vec![], BigRational::one());
        return Ok(CharPolynomial {
            num_vars: 0,
            terms: acc,
        });
    }
    for rho in enumerate_partitions(m)? {
        let class = rho.to_cycle_type()?;
        let chi = character(mu, &class)?;
        if chi.is_zero() {
            continue;
        }
        let weight = BigRational::new(chi, class.centralizer_order());
        // Expand  weight · Π_i (i·x_i - 1)^{a_i}  in ordinary monomials.
        let mut poly: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        poly.insert(vec![0; vars], weight);
        for (idx, &a) in class.multiplicities().iter().enumerate() {
            for _ in 0..a {
                poly = multiply_by_linear(&poly, idx);
            }
        }
        for (exps, c) in poly {
            let entry = acc.entry(exps).or_insert_with(BigRational::zero);
            *entry += c;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(CharPolynomial {
        num_vars: vars,
        terms: acc,
    })
}

/// Multiplies an ordinary-basis polynomial by `(i·x_i - 1)` where
/// `i = var_idx + 1`.
fn multiply_by_linear(
    poly: &BTreeMap<Vec<u32>, BigRational>,
    var_idx: usize,
) -> BTreeMap<Vec<u32>, BigRational> {
    let scale = BigRational::from(BigInt::from(var_idx as u64 + 1));
    let mut out: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    for (exps, c) in poly {
        let mut up = exps.clone();
        up[var_idx] += 1;
        let entry = out.entry(up).or_insert_with(BigRational::zero);
        *entry += c * &scale;
        let entry = out.entry(exps.clone()).or_insert_with(BigRational::zero);
        *entry -= c;
    }
    out
}
