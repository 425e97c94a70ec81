use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::real(Rational::from_integer(n.clone()))
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Rational {
        // squares of reduced fractions are reduced
        let sq = |r: &Rational| Rational::new_raw(r.numer() * r.numer(), r.denom() * r.denom());
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => sq(&self.re),
            (true, false) => sq(&self.im),
            _ => sq(&self.re) + sq(&self.im),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.re * s, &self.im * s)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if let Some(order) = self.root_of_unity_order() {
            let r = k.rem_euclid(order as i64);
            return Ok((0..r).fold(Self::one(), |acc, _| &acc * self));
        }
        let base = if k < 0 {
            self.inv().ok_or(Error::ZeroToNegativePower)?
        } else {
            self.clone()
        };
        let mut exp = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Order of `self` as a root of unity. The torsion subgroup of the
    /// Gaussian rationals is {1, i, -1, -i}, so anything else has infinite
    /// order.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        let (re, im) = (&self.re, &self.im);
        if im.is_zero() {
            if re.is_one() {
                return Some(1);
            }
            if (-re).is_one() {
                return Some(2);
            }
        } else if re.is_zero() && im.abs().is_one() {
            return Some(4);
        }
        None
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (&self.re, &self.im);
        match (re.is_zero(), im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(re)),
            (true, false) => write!(f, "{}i", format_rational(im)),
            (false, false) if im.is_negative() => {
                write!(f, "{}-{}i", format_rational(re), format_rational(&-im))
            }
            (false, false) => write!(f, "{}+{}i", format_rational(re), format_rational(im)),
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() {
            return o.scale(&self.re);
        }
        if o.im.is_zero() {
            return self.scale(&o.re);
        }
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}
