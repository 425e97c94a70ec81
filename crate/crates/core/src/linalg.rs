//! Small dense linear algebra shared by the exact and high-precision paths.

use std::fmt::Debug;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{binomial_signed, ExactComplex, GaussianRational};
use crate::hp::HpComplex;

/// Field operations needed by Jordan-block powers and the pinned solves.
pub trait Scalar: Clone + Debug {
    type Ctx: Clone;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn from_gaussian(g: &GaussianRational, ctx: &Self::Ctx) -> Self;
    fn from_bigint(n: &BigInt, ctx: &Self::Ctx) -> Self;
    /// `λ^k` for any integer `k`.
    fn lambda_pow(lambda: &ExactComplex, k: i64, ctx: &Self::Ctx) -> Result<Self>;

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// Rough size, used for pivoting.
    fn magnitude(&self) -> f64;
}

impl Scalar for GaussianRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        GaussianRational::zero()
    }

    fn from_gaussian(g: &GaussianRational, _: &()) -> Self {
        g.clone()
    }

    fn from_bigint(n: &BigInt, _: &()) -> Self {
        GaussianRational::from_bigint(n)
    }

    fn lambda_pow(lambda: &ExactComplex, k: i64, _: &()) -> Result<Self> {
        let g = lambda.to_gaussian().ok_or_else(|| {
            Error::Unrepresentable(format!("powers of {lambda} are not Gaussian rationals"))
        })?;
        g.pow(k)
    }

    fn add(&self, o: &Self) -> Self {
        self + o
    }

    fn sub(&self, o: &Self) -> Self {
        self - o
    }

    fn mul(&self, o: &Self) -> Self {
        self * o
    }

    fn div(&self, o: &Self) -> Self {
        self.checked_div(o).expect("division by exact zero")
    }

    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }

    fn magnitude(&self) -> f64 {
        if GaussianRational::is_zero(self) {
            0.0
        } else {
            let (re, im) = self.to_f64();
            re.hypot(im).max(f64::MIN_POSITIVE)
        }
    }
}

impl Scalar for HpComplex {
    type Ctx = usize;

    fn zero(prec: &usize) -> Self {
        HpComplex::zero(*prec)
    }

    fn from_gaussian(g: &GaussianRational, prec: &usize) -> Self {
        HpComplex::from_gaussian(g, *prec)
    }

    fn from_bigint(n: &BigInt, prec: &usize) -> Self {
        HpComplex::from_bigint(n, *prec)
    }

    fn lambda_pow(lambda: &ExactComplex, k: i64, prec: &usize) -> Result<Self> {
        lambda.hp_pow(k, *prec)
    }

    fn add(&self, o: &Self) -> Self {
        HpComplex::add(self, o)
    }

    fn sub(&self, o: &Self) -> Self {
        HpComplex::sub(self, o)
    }

    fn mul(&self, o: &Self) -> Self {
        HpComplex::mul(self, o)
    }

    fn div(&self, o: &Self) -> Self {
        HpComplex::div(self, o)
    }

    fn is_zero(&self) -> bool {
        HpComplex::is_zero(self)
    }

    fn magnitude(&self) -> f64 {
        self.abs_f64()
    }
}

/// Entry `(i, i + offset)` of the `k`-th power of a Jordan block with
/// eigenvalue `λ`: `C(k, offset)·λ^(k - offset)`. Valid for negative `k` as
/// well, where the generalized binomial gives the inverse powers.
pub fn power_entry<S: Scalar>(lambda: &ExactComplex, k: i64, offset: usize, ctx: &S::Ctx) -> Result<S> {
    let c = binomial_signed(k, offset as u64);
    if c == BigInt::from(0) {
        return Ok(S::zero(ctx));
    }
    let p = S::lambda_pow(lambda, k - offset as i64, ctx)?;
    Ok(S::from_bigint(&c, ctx).mul(&p))
}

/// The `size × size` upper-triangular Toeplitz matrix of `A^k`, stored by
/// offset: `row[j]` is the entry on the `j`-th superdiagonal.
pub fn power_offsets<S: Scalar>(lambda: &ExactComplex, size: usize, k: i64, ctx: &S::Ctx) -> Result<Vec<S>> {
    if lambda.is_zero() {
        if k < 0 {
            return Err(Error::NilpotentEigenvalue);
        }
        // N^k: a single superdiagonal of ones.
        return Ok((0..size)
            .map(|j| {
                if j as i64 == k {
                    S::from_bigint(&BigInt::from(1), ctx)
                } else {
                    S::zero(ctx)
                }
            })
            .collect());
    }
    (0..size).map(|j| power_entry(lambda, k, j, ctx)).collect()
}

/// Applies the block power stored by offsets to `v`.
pub fn apply_offsets<S: Scalar>(offsets: &[S], v: &[S], ctx: &S::Ctx) -> Vec<S> {
    let n = v.len();
    (0..n)
        .map(|i| {
            let mut acc = S::zero(ctx);
            for (j, c) in offsets.iter().enumerate().take(n - i) {
                if !c.is_zero() && !v[i + j].is_zero() {
                    acc = acc.add(&c.mul(&v[i + j]));
                }
            }
            acc
        })
        .collect()
}

/// Solves the square system `m·u = rhs` by elimination with partial pivoting.
pub fn solve<S: Scalar>(mut m: Vec<Vec<S>>, mut rhs: Vec<S>) -> Option<Vec<S>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| m[a][col].magnitude().total_cmp(&m[b][col].magnitude()))?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].div(&m[col][col]);
            for c in col..n {
                let t = f.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&t);
            }
            let t = f.mul(&rhs[col]);
            rhs[r] = rhs[r].sub(&t);
        }
    }
    let mut u: Vec<Option<S>> = vec![None; n];
    for r in (0..n).rev() {
        let mut acc = rhs[r].clone();
        for c in r + 1..n {
            let t = m[r][c].mul(u[c].as_ref().expect("solved"));
            acc = acc.sub(&t);
        }
        u[r] = Some(acc.div(&m[r][r]));
    }
    Some(u.into_iter().map(|x| x.expect("solved")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rational};

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn solves_small_exact_system() {
        let m = vec![vec![g(0), g(2)], vec![g(3), g(1)]];
        let u = solve(m, vec![g(4), g(5)]).unwrap();
        assert_eq!(u, vec![GaussianRational::real(int(1)), GaussianRational::real(int(2))]);
        let singular = vec![vec![g(1), g(2)], vec![g(2), g(4)]];
        assert!(solve(singular, vec![g(1), g(1)]).is_none());
    }

    #[test]
    fn negative_powers_invert() {
        let lambda = ExactComplex::real(rational(3, 2));
        let fwd: Vec<GaussianRational> = power_offsets(&lambda, 4, 5, &()).unwrap();
        let back: Vec<GaussianRational> = power_offsets(&lambda, 4, -5, &()).unwrap();
        let v = vec![g(1), g(-2), g(3), g(7)];
        assert_eq!(apply_offsets(&back, &apply_offsets(&fwd, &v, &()), &()), v);
    }

    #[test]
    fn nilpotent_block_shifts() {
        let z = ExactComplex::zero();
        let n2: Vec<GaussianRational> = power_offsets(&z, 3, 2, &()).unwrap();
        let v = vec![g(1), g(2), g(3)];
        assert_eq!(apply_offsets(&n2, &v, &()), vec![g(3), g(0), g(0)]);
        assert!(power_offsets::<GaussianRational>(&z, 3, -1, &()).is_err());
    }
}
