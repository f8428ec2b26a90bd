//! Small exact-arithmetic helpers shared across modules.

use num::{BigInt, BigRational, One, Zero};

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer (`0` when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Falling factorial `(x)_k = x (x-1) ... (x-k+1)` for an integer base.
pub fn falling(x: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= x - BigInt::from(j);
    }
    acc
}

/// Exact rational `a / b` from integer parts, with `b > 0` enforced upstream.
pub fn ratio<A: Into<BigInt>, B: Into<BigInt>>(a: A, b: B) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// `r^t` for a reduced rational. Powers of coprime parts stay coprime, so
/// the result is built without a gcd pass.
pub fn rational_pow(r: &BigRational, t: u64) -> BigRational {
    if t == 0 {
        return BigRational::one();
    }
    let t = u32::try_from(t).expect("exponent fits in u32");
    BigRational::new_raw(r.numer().pow(t), r.denom().pow(t))
}

/// Nearest `f64` to a rational whose parts may far exceed `f64` range.
/// Shifts numerator and denominator down together before converting, so
/// huge-but-ordinary ratios don't collapse to `inf / inf`.
pub fn to_f64_lossy(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    let bits = r.numer().bits().max(r.denom().bits());
    let shift = bits.saturating_sub(512);
    let numer = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let denom = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    numer / denom
}
