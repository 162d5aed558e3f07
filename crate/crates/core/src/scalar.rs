//! Exact rational coefficients.
//!
//! Every scalar in the library is a `BigRational` kept in lowest terms with a
//! positive denominator, which the underlying crate guarantees on
//! construction.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type Scalar = BigRational;

// ---- Constructors ----

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-3"`, or `"3/2"`; the denominator must be a positive integer.
pub fn parse(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str.parse().ok()?;
    let den: BigInt = den_str.parse().ok()?;
    if den <= BigInt::zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Renders a scalar as `"3"`, `"-3"`, or `"3/2"`.
pub fn format(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Absolute value, used when pretty-printing signed terms.
pub fn abs(c: &Scalar) -> Scalar {
    c.abs()
}
