use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// `modulus · exp(2πi·p/q)` with `0 <= p < q` and `gcd(p, q) = 1`.
///
/// A zero modulus normalizes the angle to `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolarExact {
    modulus: Rational,
    p: u64,
    q: u64,
}

impl PolarExact {
    pub fn new(modulus: Rational, p: i64, q: u64) -> Result<Self> {
        if modulus.is_negative() {
            return Err(Error::InvalidInput(format!(
                "polar modulus must be non-negative, got {}",
                format_rational(&modulus)
            )));
        }
        if q == 0 {
            return Err(Error::InvalidInput("polar angle denominator must be positive".into()));
        }
        Ok(Self::normalized(modulus, i128::from(p), i128::from(q)))
    }

    /// Unit-modulus root of unity `exp(2πi·p/q)`.
    pub fn unit(p: i64, q: u64) -> Result<Self> {
        Self::new(Rational::one(), p, q)
    }

    fn normalized(modulus: Rational, p: i128, q: i128) -> Self {
        if modulus.is_zero() {
            return Self { modulus, p: 0, q: 1 };
        }
        let p = p.rem_euclid(q);
        let g = p.gcd(&q);
        Self {
            modulus,
            p: (p / g) as u64,
            q: (q / g) as u64,
        }
    }

    pub fn modulus(&self) -> &Rational {
        &self.modulus
    }

    pub fn angle_num(&self) -> u64 {
        self.p
    }

    pub fn angle_den(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.modulus.is_zero()
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if self.is_zero() {
            return match k {
                k if k < 0 => Err(Error::ZeroToNegativePower),
                0 => Ok(Self::normalized(Rational::one(), 0, 1)),
                _ => Ok(self.clone()),
            };
        }
        let modulus = pow_big(&self.modulus, k);
        let p = (i128::from(k) * i128::from(self.p)).rem_euclid(i128::from(self.q));
        Ok(Self::normalized(modulus, p, i128::from(self.q)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let q = i128::from(self.q) * i128::from(other.q);
        let p = i128::from(self.p) * i128::from(other.q) + i128::from(other.p) * i128::from(self.q);
        Self::normalized(&self.modulus * &other.modulus, p, q)
    }

    pub fn conj(&self) -> Self {
        Self::normalized(self.modulus.clone(), -i128::from(self.p), i128::from(self.q))
    }

    /// Multiplies the modulus by a rational, folding a negative factor into a
    /// half turn.
    pub fn scale(&self, s: &Rational) -> Self {
        let turn = if s.is_negative() {
            Self::normalized(Rational::one(), 1, 2)
        } else {
            Self::normalized(Rational::one(), 0, 1)
        };
        let scaled = Self::normalized(&self.modulus * s.abs(), i128::from(self.p), i128::from(self.q));
        scaled.mul(&turn)
    }
}

pub(crate) fn pow_big(base: &Rational, k: i64) -> Rational {
    let inv;
    let b = if k < 0 {
        inv = base.recip();
        &inv
    } else {
        base
    };
    let mut exp = k.unsigned_abs();
    let mut acc = Rational::one();
    let mut sq = b.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = &acc * &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

impl fmt::Display for PolarExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·e^(2πi·{}/{})", format_rational(&self.modulus), self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rational};

    #[test]
    fn normalizes_angle() {
        let z = PolarExact::unit(2, 6).unwrap();
        assert_eq!((z.angle_num(), z.angle_den()), (1, 3));
        let z = PolarExact::unit(-1, 4).unwrap();
        assert_eq!((z.angle_num(), z.angle_den()), (3, 4));
        let z = PolarExact::new(int(0), 3, 7).unwrap();
        assert_eq!((z.angle_num(), z.angle_den()), (0, 1));
    }

    #[test]
    fn powers_stay_polar() {
        let z = PolarExact::unit(1, 6).unwrap();
        assert_eq!(z.pow(3).unwrap(), PolarExact::unit(1, 2).unwrap());
        let w = PolarExact::new(rational(1, 2), 1, 8).unwrap();
        assert_eq!(w.pow(-2).unwrap(), PolarExact::new(int(4), -1, 4).unwrap());
        assert_eq!(w.pow(40).unwrap().modulus(), &rational(1, 1 << 40));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(PolarExact::new(int(-1), 0, 1).is_err());
        assert!(PolarExact::unit(1, 0).is_err());
    }
}
