//! High-precision complex floats used by the oracle and by witness terms whose
//! exact form is too large to carry around.

use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::BigInt;

use crate::exact::{GaussianRational, Rational};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Exact conversion of an integer (the mantissa takes as many words as needed).
pub fn float_from_bigint(n: &BigInt) -> BigFloat {
    let (sign, words) = n.to_u64_digits();
    if words.is_empty() {
        return BigFloat::from_word(0, 64);
    }
    let s = if sign == num_bigint::Sign::Minus { Sign::Neg } else { Sign::Pos };
    BigFloat::from_words(&words, s, (64 * words.len()) as i32)
}

/// Correctly rounded quotient `num/den` at `prec` bits.
pub fn float_from_rational(r: &Rational, prec: usize) -> BigFloat {
    let num = float_from_bigint(r.numer());
    let den = float_from_bigint(r.denom());
    num.div(&den, prec, RM)
}

pub fn float_to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let Some(&top) = words.last() else { return 0.0 };
    if top == 0 {
        return 0.0;
    }
    let next = if words.len() > 1 { words[words.len() - 2] } else { 0 };
    let e = i64::from(exp);
    let mag = top as f64 * pow2(e - 64) + next as f64 * pow2(e - 128);
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

fn pow2(e: i64) -> f64 {
    if e > 1100 {
        f64::INFINITY
    } else if e < -1100 {
        0.0
    } else {
        // split to stay inside the normal range for intermediate factors
        let half = e / 2;
        2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
    }
}

pub fn pi(prec: usize) -> BigFloat {
    with_consts(|cc| cc.pi(prec, RM))
}

/// Complex number with a fixed working precision in bits.
#[derive(Clone, Debug)]
pub struct HpComplex {
    re: BigFloat,
    im: BigFloat,
    prec: usize,
}

impl HpComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        Self { re, im, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::from_f64(0.0, 0.0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_f64(1.0, 0.0, prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Self::new(BigFloat::from_f64(re, prec), BigFloat::from_f64(im, prec), prec)
    }

    pub fn from_gaussian(g: &GaussianRational, prec: usize) -> Self {
        Self::new(float_from_rational(&g.re, prec), float_from_rational(&g.im, prec), prec)
    }

    pub fn from_bigint(n: &BigInt, prec: usize) -> Self {
        let mut re = float_from_bigint(n);
        re.set_precision(prec.max(64), RM).ok();
        Self::new(re, BigFloat::from_f64(0.0, prec), prec)
    }

    pub fn from_real(re: BigFloat, prec: usize) -> Self {
        Self::new(re, BigFloat::from_f64(0.0, prec), prec)
    }

    /// `exp(2πi·turns)`.
    pub fn cis_turns(turns: &BigFloat, prec: usize) -> Self {
        let work = prec + 32;
        with_consts(|cc| {
            let two_pi = cc.pi(work, RM).mul(&BigFloat::from_f64(2.0, work), work, RM);
            let angle = turns.mul(&two_pi, work, RM);
            let c = angle.cos(work, RM, cc);
            let s = angle.sin(work, RM, cc);
            Self::new(round(&c, prec), round(&s, prec), prec)
        })
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        Self::new(round(&self.re, prec), round(&self.im, prec), prec)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        Self::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM), p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        Self::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM), p)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        let w = p + 8;
        let re = self.re.mul(&o.re, w, RM).sub(&self.im.mul(&o.im, w, RM), p, RM);
        let im = self.re.mul(&o.im, w, RM).add(&self.im.mul(&o.re, w, RM), p, RM);
        Self::new(re, im, p)
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        Self::new(self.re.mul(s, self.prec, RM), self.im.mul(s, self.prec, RM), self.prec)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg(), self.prec)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg(), self.prec)
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let w = self.prec + 8;
        self.re.mul(&self.re, w, RM).add(&self.im.mul(&self.im, w, RM), self.prec, RM)
    }

    pub fn div(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        let w = p + 16;
        let n = o.norm_sqr();
        let num = self.with_precision(w).mul(&o.conj().with_precision(w));
        Self::new(num.re.div(&n, p, RM), num.im.div(&n, p, RM), p)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.prec, RM)
    }

    pub fn abs_f64(&self) -> f64 {
        let (re, im) = self.to_c64();
        re.hypot(im)
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (float_to_f64(&self.re), float_to_f64(&self.im))
    }

    /// Argument as a fraction of a full turn, in `[0, 1)`.
    pub fn arg_turns(&self) -> BigFloat {
        let w = self.prec + 32;
        with_consts(|cc| {
            let pi = cc.pi(w, RM);
            let half_pi = pi.div(&BigFloat::from_f64(2.0, w), w, RM);
            let angle = if self.re.is_zero() {
                if self.im.is_negative() {
                    half_pi.neg()
                } else {
                    half_pi
                }
            } else {
                let base = self.im.div(&self.re, w, RM).atan(w, RM, cc);
                if self.re.is_negative() {
                    if self.im.is_negative() {
                        base.sub(&pi, w, RM)
                    } else {
                        base.add(&pi, w, RM)
                    }
                } else {
                    base
                }
            };
            let two_pi = pi.mul(&BigFloat::from_f64(2.0, w), w, RM);
            let mut t = angle.div(&two_pi, w, RM);
            if t.is_negative() {
                t = t.add(&BigFloat::from_f64(1.0, w), w, RM);
            }
            round(&t, self.prec)
        })
    }

    pub fn powi(&self, k: u64) -> Self {
        let mut acc = Self::one(self.prec);
        let mut sq = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }
}

/// `floor(t·2^64)` for `t` in `[0, 1)`: a turn fraction as a 64-bit phase.
pub fn turns_to_fixed(t: &BigFloat) -> u64 {
    let Some((words, _, sign, exp, _)) = t.as_raw_parts() else { return 0 };
    let Some(&top) = words.last() else { return 0 };
    if top == 0 || sign == Sign::Neg || exp > 0 {
        return 0;
    }
    let shift = exp.unsigned_abs();
    if shift >= 64 {
        0
    } else {
        top >> shift
    }
}

pub fn round(x: &BigFloat, prec: usize) -> BigFloat {
    let mut y = x.clone();
    y.set_precision(prec.max(64), RM).ok();
    y
}

/// Euclidean norm of a vector of complex values.
pub fn norm(v: &[HpComplex], prec: usize) -> BigFloat {
    let mut acc = BigFloat::from_f64(0.0, prec);
    for z in v {
        acc = acc.add(&z.norm_sqr(), prec, RM);
    }
    acc.sqrt(prec, RM)
}

pub fn distance(a: &[HpComplex], b: &[HpComplex], prec: usize) -> BigFloat {
    let diff: Vec<HpComplex> = a.iter().zip(b).map(|(x, y)| x.sub(y)).collect();
    norm(&diff, prec)
}

impl fmt::Display for HpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_c64();
        write!(f, "{re:e}{im:+e}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rational;

    #[test]
    fn integer_and_rational_conversion() {
        let big: BigInt = BigInt::from(1u64 << 63) * BigInt::from(6) + BigInt::from(5);
        let f = float_from_bigint(&big);
        assert_eq!(float_to_f64(&f), 6.0 * (1u64 << 63) as f64);
        let third = float_from_rational(&rational(1, 3), 128);
        assert!((float_to_f64(&third) - 1.0 / 3.0).abs() < 1e-17);
        assert_eq!(float_to_f64(&float_from_bigint(&BigInt::from(-7))), -7.0);
        assert_eq!(float_to_f64(&float_from_bigint(&BigInt::from(0))), 0.0);
    }

    #[test]
    fn fixed_phase() {
        let t = BigFloat::from_f64(0.25, 128);
        assert_eq!(turns_to_fixed(&t), 1u64 << 62);
        let t = BigFloat::from_f64(0.75, 128);
        assert_eq!(turns_to_fixed(&t), 3u64 << 62);
        assert_eq!(turns_to_fixed(&BigFloat::from_f64(0.0, 128)), 0);
        let z = HpComplex::from_f64(0.0, -1.0, 128);
        assert_eq!(turns_to_fixed(&z.arg_turns()), 3u64 << 62);
    }

    #[test]
    fn cis_and_arg_roundtrip() {
        let eighth = float_from_rational(&rational(1, 8), 128);
        let z = HpComplex::cis_turns(&eighth, 128);
        let (re, im) = z.to_c64();
        assert!((re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((im - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        let back = float_to_f64(&z.arg_turns());
        assert!((back - 0.125).abs() < 1e-15);
        let w = HpComplex::from_f64(-1.0, -1e-30, 128);
        assert!((float_to_f64(&w.arg_turns()) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = HpComplex::from_f64(0.6, 0.8, 192);
        let b = HpComplex::from_f64(-2.0, 3.5, 192);
        let q = a.mul(&b).div(&b);
        assert!(q.sub(&a).abs_f64() < 1e-50);
        assert!((a.powi(10).abs_f64() - 1.0).abs() < 1e-15);
    }
}
