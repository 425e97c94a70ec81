//! Rational helpers on top of [`num_rational::BigRational`], which keeps the
//! denominator positive and the fraction reduced after every operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Decimal notation is rejected so that every scalar
/// entering the system is exact by construction.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidInput(format!("not an exact rational: {text:?}"));
    if text.is_empty() || text.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Bits needed for the larger of numerator and denominator.
pub fn bit_size(r: &Rational) -> u64 {
    r.numer().bits().max(r.denom().bits())
}

pub fn is_normalized(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().abs().gcd(r.denom()).is_one()
}

pub fn lcm_u64(a: u64, b: u64) -> Option<u64> {
    let g = a.gcd(&b);
    (a / g).checked_mul(b)
}
