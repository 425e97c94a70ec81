use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::polar::PolarExact;
use super::rational::{bit_size, Rational};
use crate::error::{Error, Result};
use crate::hp::{float_from_rational, float_to_f64, HpComplex};

/// Where a scalar sits relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulusClass {
    LessThanOne,
    EqualOne,
    GreaterThanOne,
}

/// Exactly represented complex scalar.
#[derive(Clone, Debug)]
pub enum ExactComplex {
    Cartesian(GaussianRational),
    Polar(PolarExact),
}

/// A float approximation together with an a priori bound on its distance to
/// the exact value.
#[derive(Clone, Debug)]
pub struct FloatApprox {
    pub value: HpComplex,
    pub error_bound: f64,
}

impl ExactComplex {
    pub fn gaussian(re: Rational, im: Rational) -> Self {
        Self::Cartesian(GaussianRational::new(re, im))
    }

    pub fn real(re: Rational) -> Self {
        Self::Cartesian(GaussianRational::real(re))
    }

    pub fn from_int(n: i64) -> Self {
        Self::Cartesian(GaussianRational::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn root_of_unity(p: i64, q: u64) -> Result<Self> {
        PolarExact::unit(p, q).map(Self::Polar)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Cartesian(g) => g.is_zero(),
            Self::Polar(p) => p.is_zero(),
        }
    }

    /// Squared modulus; exact for both representations.
    pub fn modulus_sqr(&self) -> Rational {
        match self {
            Self::Cartesian(g) => g.norm_sqr(),
            Self::Polar(p) => p.modulus() * p.modulus(),
        }
    }

    pub fn modulus_class(&self) -> ModulusClass {
        let m = self.modulus_sqr();
        let one = Rational::one();
        match m.cmp(&one) {
            std::cmp::Ordering::Less => ModulusClass::LessThanOne,
            std::cmp::Ordering::Equal => ModulusClass::EqualOne,
            std::cmp::Ordering::Greater => ModulusClass::GreaterThanOne,
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        match self {
            Self::Cartesian(g) => g.pow(k).map(Self::Cartesian),
            Self::Polar(p) => p.pow(k).map(Self::Polar),
        }
    }

    /// Multiplicative order for unit-modulus values, `None` for infinite order.
    pub fn root_of_unity_order(&self) -> Result<Option<u64>> {
        if self.modulus_class() != ModulusClass::EqualOne {
            return Err(Error::NotUnitModulus(self.to_string()));
        }
        Ok(match self {
            Self::Cartesian(g) => g.root_of_unity_order(),
            Self::Polar(p) => Some(p.angle_den()),
        })
    }

    /// The same value as a Gaussian rational, when it is one.
    ///
    /// A polar value `ρ·e^{iθ}` with `ρ ≠ 0` is a Gaussian rational only when
    /// `e^{iθ}` is one of the fourth roots of unity.
    pub fn to_gaussian(&self) -> Option<GaussianRational> {
        match self {
            Self::Cartesian(g) => Some(g.clone()),
            Self::Polar(p) if p.is_zero() => Some(GaussianRational::zero()),
            Self::Polar(p) => {
                let m = p.modulus().clone();
                let z = Rational::zero();
                match (p.angle_num(), p.angle_den()) {
                    (0, 1) => Some(GaussianRational::new(m, z)),
                    (1, 2) => Some(GaussianRational::new(-m, z)),
                    (1, 4) => Some(GaussianRational::new(z, m)),
                    (3, 4) => Some(GaussianRational::new(z, -m)),
                    _ => None,
                }
            }
        }
    }

    /// Exact equality across representations.
    pub fn exact_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Self::Cartesian(a), Self::Cartesian(b)) => a == b,
            (Self::Polar(a), Self::Polar(b)) => a == b,
            (a, b) => match (a.to_gaussian(), b.to_gaussian()) {
                (Some(x), Some(y)) => x == y,
                _ => false,
            },
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Self::Cartesian(g) => Self::Cartesian(g.conj()),
            Self::Polar(p) => Self::Polar(p.conj()),
        }
    }

    /// Product, when it stays representable in one of the two forms.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Self::Cartesian(a), Self::Cartesian(b)) => Ok(Self::Cartesian(a * b)),
            (Self::Polar(a), Self::Polar(b)) => Ok(Self::Polar(a.mul(b))),
            (a, b) => match (a.to_gaussian(), b.to_gaussian()) {
                (Some(x), Some(y)) => Ok(Self::Cartesian(&x * &y)),
                _ => {
                    if a.is_zero() || b.is_zero() {
                        return Ok(Self::zero());
                    }
                    let real_scale = |g: &GaussianRational, p: &PolarExact| {
                        g.im.is_zero().then(|| Self::Polar(p.scale(&g.re)))
                    };
                    let found = match (a, b) {
                        (Self::Cartesian(g), Self::Polar(p)) | (Self::Polar(p), Self::Cartesian(g)) => {
                            real_scale(g, p)
                        }
                        _ => None,
                    };
                    found.ok_or_else(|| {
                        Error::Unrepresentable(format!("product of {a} and {b} mixes polar and cartesian forms"))
                    })
                }
            },
        }
    }

    /// Multiplies by an integer (used for binomial coefficients).
    pub fn scale_int(&self, n: &BigInt) -> Self {
        let r = Rational::from_integer(n.clone());
        match self {
            Self::Cartesian(g) => Self::Cartesian(g.scale(&r)),
            Self::Polar(p) => Self::Polar(p.scale(&r)),
        }
    }

    /// Number of bits a `k`-th power would need when computed exactly in
    /// Cartesian form. Roots of unity and zero are treated as free.
    pub fn exact_power_cost(&self, k: u64) -> u64 {
        match self {
            Self::Cartesian(g) => {
                if g.is_zero() || g.root_of_unity_order().is_some() {
                    0
                } else {
                    k.saturating_mul(bit_size(&g.re).max(bit_size(&g.im)).max(1))
                }
            }
            Self::Polar(p) => k.saturating_mul(bit_size(p.modulus()).max(1)),
        }
    }

    /// High-precision approximation within `2^(1-bits)·|λ|` of the exact value.
    pub fn to_float(&self, precision_bits: usize) -> Result<FloatApprox> {
        if precision_bits < 53 {
            return Err(Error::InvalidInput(format!(
                "precision must be at least 53 bits, got {precision_bits}"
            )));
        }
        if self.is_zero() {
            return Ok(FloatApprox { value: HpComplex::zero(precision_bits), error_bound: 0.0 });
        }
        let value = self.to_hp(precision_bits);
        let modulus = float_to_f64(&value.abs());
        let error_bound = modulus * 2f64.powi(1 - precision_bits.min(1000) as i32);
        Ok(FloatApprox { value, error_bound })
    }

    /// Conversion without the error report.
    pub fn to_hp(&self, prec: usize) -> HpComplex {
        match self {
            Self::Cartesian(g) => HpComplex::from_gaussian(g, prec),
            Self::Polar(p) => {
                let turns = float_from_rational(
                    &Rational::new(BigInt::from(p.angle_num()), BigInt::from(p.angle_den())),
                    prec + 32,
                );
                HpComplex::cis_turns(&turns, prec + 16)
                    .scale(&float_from_rational(p.modulus(), prec + 16))
                    .with_precision(prec)
            }
        }
    }

    /// `λ^k` in high precision. Polar angles are reduced exactly before the
    /// trigonometric evaluation; Cartesian values use exact powers while they
    /// stay small and guarded binary powering beyond that.
    pub fn hp_pow(&self, k: i64, prec: usize) -> Result<HpComplex> {
        if self.is_zero() {
            return match k {
                k if k < 0 => Err(Error::ZeroToNegativePower),
                0 => Ok(HpComplex::one(prec)),
                _ => Ok(HpComplex::zero(prec)),
            };
        }
        match self {
            Self::Polar(p) if p.modulus().is_one() || self.exact_power_cost(k.unsigned_abs()) <= 256 => {
                Ok(self.pow(k)?.to_hp(prec))
            }
            Self::Polar(p) => {
                let direction = PolarExact::unit(p.angle_num() as i64, p.angle_den())
                    .expect("positive denominator")
                    .pow(k)?;
                let guard = 2 * (64 - k.unsigned_abs().leading_zeros() as usize) + 32;
                let modulus = HpComplex::from_real(float_from_rational(p.modulus(), prec + guard), prec + guard);
                let modulus = if k < 0 {
                    HpComplex::one(prec + guard).div(&modulus)
                } else {
                    modulus
                };
                Ok(ExactComplex::Polar(direction)
                    .to_hp(prec + guard)
                    .mul(&modulus.powi(k.unsigned_abs()))
                    .with_precision(prec))
            }
            Self::Cartesian(g) => {
                if self.exact_power_cost(k.unsigned_abs()) <= 256 {
                    return Ok(HpComplex::from_gaussian(&g.pow(k)?, prec));
                }
                let guard = 2 * (64 - k.unsigned_abs().leading_zeros() as usize) + 32;
                let base = if k < 0 {
                    HpComplex::from_gaussian(&g.inv().expect("nonzero"), prec + guard)
                } else {
                    HpComplex::from_gaussian(g, prec + guard)
                };
                Ok(base.powi(k.unsigned_abs()).with_precision(prec))
            }
        }
    }
}

impl PartialEq for ExactComplex {
    fn eq(&self, other: &Self) -> bool {
        self.exact_eq(other)
    }
}

impl Eq for ExactComplex {}

impl From<GaussianRational> for ExactComplex {
    fn from(g: GaussianRational) -> Self {
        Self::Cartesian(g)
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cartesian(g) => write!(f, "{g}"),
            Self::Polar(p) => write!(f, "{p}"),
        }
    }
}

/// `C(k, j)` for non-negative `k`; zero when `j > k`.
pub fn binomial(k: u64, j: u64) -> BigInt {
    if j > k {
        return BigInt::zero();
    }
    let j = j.min(k - j);
    let mut acc = BigInt::one();
    for t in 0..j {
        acc = acc * BigInt::from(k - t) / BigInt::from(t + 1);
    }
    acc
}

/// Generalized `C(k, j) = k(k-1)…(k-j+1)/j!` for any integer `k`, which gives
/// the entries of negative powers of a Jordan block.
pub fn binomial_signed(k: i64, j: u64) -> BigInt {
    if k >= 0 {
        return binomial(k as u64, j);
    }
    // C(-m, j) = (-1)^j C(m + j - 1, j)
    let m = k.unsigned_abs();
    let c = binomial(m + j - 1, j);
    if j % 2 == 1 {
        -c
    } else {
        c
    }
}
