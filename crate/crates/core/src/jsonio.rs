//! JSON encoding for exact rationals: `{"num": "...", "den": "..."}` with
//! decimal-string parts, so values never squeeze through floating point.

use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};

pub(crate) fn rat_to_json(r: &BigRational) -> serde_json::Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

/// Accepts `{"num", "den"}` with string or integer parts, or a bare JSON
/// integer.
pub(crate) fn rat_from_json(v: &serde_json::Value) -> Result<BigRational> {
    if let Some(i) = v.as_i64() {
        return Ok(BigRational::from(BigInt::from(i)));
    }
    let part = |key: &str| -> Result<BigInt> {
        let field = &v[key];
        if let Some(s) = field.as_str() {
            BigInt::from_str(s)
                .map_err(|_| Error::Parse(format!("invalid integer {s:?} in \"{key}\"")))
        } else if let Some(i) = field.as_i64() {
            Ok(BigInt::from(i))
        } else {
            Err(Error::Parse(format!(
                "expected a fraction object with \"{key}\", got {v}"
            )))
        }
    };
    let num = part("num")?;
    let den = part("den")?;
    if den.is_zero() {
        return Err(Error::Parse("fraction denominator is zero".into()));
    }
    if den.is_negative() {
        return Err(Error::Parse("fraction denominator must be positive".into()));
    }
    Ok(BigRational::new(num, den))
}
