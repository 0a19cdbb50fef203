//! Exact rational scalars.
//!
//! All rank values and coefficients in this crate are arbitrary-precision
//! rationals; nothing is ever rounded.

use crate::error::Error;
use num::BigInt;
use std::str::FromStr;

pub type Rational = num::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p` or `p/q` with integer parts; the denominator must be nonzero.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::BadRational {
        text: text.to_string(),
    };
    let t = text.trim();
    let (num_str, den_str) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let numer = BigInt::from_str(num_str).map_err(|_| bad())?;
    let denom = BigInt::from_str(den_str).map_err(|_| bad())?;
    if denom == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}
