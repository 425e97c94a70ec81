//! Jordan-form data model: blocks, exact vectors, closed-form block powers and
//! similarity conjugation.
//!
//! Blocks carry their eigenvalue on the diagonal and ones on the
//! superdiagonal, with coordinate 1 at the top, so forced-zero patterns sit in
//! trailing coordinates.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, ExactComplex, GaussianRational, ModulusClass};
use crate::hp::HpComplex;
use crate::linalg::{apply_offsets, power_offsets, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanBlockSpec {
    pub lambda: ExactComplex,
    pub size: usize,
}

impl JordanBlockSpec {
    pub fn new(lambda: ExactComplex, size: usize) -> Self {
        Self { lambda, size }
    }

    pub fn modulus_class(&self) -> ModulusClass {
        self.lambda.modulus_class()
    }
}

/// Column vector of Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExactVector(pub Vec<GaussianRational>);

impl ExactVector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![GaussianRational::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| GaussianRational::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GaussianRational::is_zero)
    }

    pub fn slice(&self, r: Range<usize>) -> &[GaussianRational] {
        &self.0[r]
    }

    pub fn to_hp(&self, prec: usize) -> Vec<HpComplex> {
        self.0.iter().map(|g| HpComplex::from_gaussian(g, prec)).collect()
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Square matrix of Gaussian rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "Vec<Vec<GaussianRational>>")]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl From<ExactMatrix> for Vec<Vec<GaussianRational>> {
    fn from(m: ExactMatrix) -> Self {
        m.rows()
    }
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("matrix must be non-empty".into()));
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
        }
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![GaussianRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = GaussianRational::one();
        }
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<GaussianRational>> {
        self.entries.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut entries = vec![GaussianRational::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let t = a * o.get(k, c);
                    entries[r * n + c] = &entries[r * n + c] + &t;
                }
            }
        }
        Self { n, entries }
    }

    pub fn mul_vec(&self, v: &ExactVector) -> Result<ExactVector> {
        check_dim(self.n, v.len())?;
        Ok(ExactVector(
            (0..self.n)
                .map(|r| {
                    (0..self.n).fold(GaussianRational::zero(), |acc, c| &acc + &(self.get(r, c) * &v.0[c]))
                })
                .collect(),
        ))
    }

    pub fn mul_hp(&self, v: &[HpComplex], prec: usize) -> Vec<HpComplex> {
        (0..self.n)
            .map(|r| {
                (0..self.n).fold(HpComplex::zero(prec), |acc, c| {
                    let e = self.get(r, c);
                    if e.is_zero() {
                        acc
                    } else {
                        acc.add(&HpComplex::from_gaussian(e, prec).mul(&v[c]))
                    }
                })
            })
            .collect()
    }

    /// Exact Gauss-Jordan inverse with full pivoting on exact nonzero tests.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = Self::identity(n).rows();
        let mut col_perm: Vec<usize> = (0..n).collect();
        for step in 0..n {
            let (pr, pc) = (step..n)
                .flat_map(|r| (step..n).map(move |c| (r, c)))
                .find(|&(r, c)| !a[r][c].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(step, pr);
            inv.swap(step, pr);
            if pc != step {
                for row in a.iter_mut() {
                    row.swap(step, pc);
                }
                col_perm.swap(step, pc);
            }
            let p = a[step][step].inv().expect("nonzero pivot");
            for c in 0..n {
                a[step][c] = &a[step][c] * &p;
                inv[step][c] = &inv[step][c] * &p;
            }
            for r in 0..n {
                if r == step || a[r][step].is_zero() {
                    continue;
                }
                let f = a[r][step].clone();
                for c in 0..n {
                    let t = &f * &a[step][c];
                    a[r][c] = &a[r][c] - &t;
                    let t = &f * &inv[step][c];
                    inv[r][c] = &inv[r][c] - &t;
                }
            }
        }
        // Column swaps on the left factor permute the rows of the inverse.
        let mut out = vec![Vec::new(); n];
        for (step, &orig) in col_perm.iter().enumerate() {
            out[orig] = inv[step].clone();
        }
        Self::from_rows(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `v ↦ P·v`
    Forward,
    /// `v ↦ P⁻¹·v`
    Backward,
}

/// Similarity `B = P·J·P⁻¹` with both factors held exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "Vec<Vec<GaussianRational>>")]
pub struct SimilaritySpec {
    p: ExactMatrix,
    p_inverse: ExactMatrix,
}

impl From<SimilaritySpec> for Vec<Vec<GaussianRational>> {
    fn from(s: SimilaritySpec) -> Self {
        s.p.rows()
    }
}

impl SimilaritySpec {
    pub fn new(p: ExactMatrix) -> Result<Self> {
        let p_inverse = p.inverse()?;
        Ok(Self { p, p_inverse })
    }

    pub fn p(&self) -> &ExactMatrix {
        &self.p
    }

    pub fn p_inverse(&self) -> &ExactMatrix {
        &self.p_inverse
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }
}

pub fn conjugate_vector(sim: &SimilaritySpec, v: &ExactVector, direction: Direction) -> Result<ExactVector> {
    match direction {
        Direction::Forward => sim.p.mul_vec(v),
        Direction::Backward => sim.p_inverse.mul_vec(v),
    }
}

/// Ordered Jordan blocks, optionally conjugated by a similarity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanFormSpec {
    blocks: Vec<JordanBlockSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    similarity: Option<SimilaritySpec>,
}

#[derive(Deserialize)]
struct RawSpec {
    blocks: Vec<JordanBlockSpec>,
    #[serde(default)]
    similarity: Option<Vec<Vec<GaussianRational>>>,
}

impl<'de> Deserialize<'de> for JordanFormSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSpec::deserialize(d)?;
        let sim = raw
            .similarity
            .map(|rows| ExactMatrix::from_rows(rows).and_then(SimilaritySpec::new))
            .transpose()
            .map_err(serde::de::Error::custom)?;
        JordanFormSpec::new(raw.blocks, sim).map_err(serde::de::Error::custom)
    }
}

impl JordanFormSpec {
    pub fn new(blocks: Vec<JordanBlockSpec>, similarity: Option<SimilaritySpec>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidInput("a Jordan form needs at least one block".into()));
        }
        if let Some(b) = blocks.iter().find(|b| b.size == 0) {
            return Err(Error::InvalidInput(format!("block with eigenvalue {} has size 0", b.lambda)));
        }
        let spec = Self { blocks, similarity };
        if let Some(sim) = &spec.similarity {
            check_dim(spec.dimension(), sim.dim())?;
        }
        Ok(spec)
    }

    /// Single block without a similarity.
    pub fn single(lambda: ExactComplex, size: usize) -> Result<Self> {
        Self::new(vec![JordanBlockSpec::new(lambda, size)], None)
    }

    pub fn blocks(&self) -> &[JordanBlockSpec] {
        &self.blocks
    }

    pub fn similarity(&self) -> Option<&SimilaritySpec> {
        self.similarity.as_ref()
    }

    pub fn with_similarity(&self, sim: Option<SimilaritySpec>) -> Result<Self> {
        Self::new(self.blocks.clone(), sim)
    }

    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.size).sum()
    }

    /// Coordinate ranges of the blocks, partitioning `0..dimension` in order.
    pub fn block_ranges(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.blocks
            .iter()
            .map(|b| {
                let r = start..start + b.size;
                start = r.end;
                r
            })
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| !b.lambda.is_zero())
    }

    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(|b| b.size).max().unwrap_or(1)
    }

    /// Every eigenvalue multiplied by `mu`.
    pub fn scaled(&self, mu: &ExactComplex) -> Result<Self> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Ok(JordanBlockSpec::new(b.lambda.checked_mul(mu)?, b.size)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks, self.similarity.clone())
    }

    pub fn check_vector(&self, v: &ExactVector) -> Result<()> {
        check_dim(self.dimension(), v.len())
    }

    /// Brings an operator-coordinate vector into Jordan coordinates.
    pub fn to_jordan_coords(&self, v: &ExactVector) -> Result<ExactVector> {
        self.check_vector(v)?;
        match &self.similarity {
            Some(sim) => conjugate_vector(sim, v, Direction::Backward),
            None => Ok(v.clone()),
        }
    }

    pub fn from_jordan_coords(&self, v: &ExactVector) -> Result<ExactVector> {
        self.check_vector(v)?;
        match &self.similarity {
            Some(sim) => conjugate_vector(sim, v, Direction::Forward),
            None => Ok(v.clone()),
        }
    }

    pub fn from_jordan_coords_hp(&self, v: &[HpComplex], prec: usize) -> Vec<HpComplex> {
        match &self.similarity {
            Some(sim) => sim.p.mul_hp(v, prec),
            None => v.to_vec(),
        }
    }

    /// `J^k v` in Jordan coordinates for any integer `k`, generic over the
    /// scalar field.
    pub fn apply_power_generic<S: Scalar>(&self, k: i64, v: &[S], ctx: &S::Ctx) -> Result<Vec<S>> {
        check_dim(self.dimension(), v.len())?;
        let mut out = Vec::with_capacity(v.len());
        for (block, range) in self.blocks.iter().zip(self.block_ranges()) {
            let offsets = power_offsets::<S>(&block.lambda, block.size, k, ctx)?;
            out.extend(apply_offsets(&offsets, &v[range], ctx));
        }
        Ok(out)
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `C(k, j)·λ^(k-j)`: the `(i, i+j)` entry of the `k`-th power of a block.
pub fn block_power_entry(lambda: &ExactComplex, k: u64, offset: u64) -> Result<ExactComplex> {
    if offset > k {
        return Ok(ExactComplex::zero());
    }
    let p = lambda.pow((k - offset) as i64)?;
    Ok(p.scale_int(&binomial(k, offset)))
}

/// `J^k v`, exact. Eigenvalues whose powers leave the Gaussian rationals are
/// reported as [`Error::Unrepresentable`].
pub fn apply_power(spec: &JordanFormSpec, k: u64, v: &ExactVector) -> Result<ExactVector> {
    spec.check_vector(v)?;
    let k = i64::try_from(k).map_err(|_| Error::InvalidInput("exponent too large".into()))?;
    spec.apply_power_generic(k, &v.0, &()).map(ExactVector)
}

/// The unique `w` with `J^k w = v`.
pub fn apply_inverse_power(spec: &JordanFormSpec, k: u64, v: &ExactVector) -> Result<ExactVector> {
    spec.check_vector(v)?;
    if !spec.is_invertible() {
        return Err(Error::NilpotentEigenvalue);
    }
    let k = i64::try_from(k).map_err(|_| Error::InvalidInput("exponent too large".into()))?;
    spec.apply_power_generic(-k, &v.0, &()).map(ExactVector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rational};

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn entries_match_examples() {
        let one = ExactComplex::one();
        assert_eq!(block_power_entry(&one, 2, 1).unwrap(), ExactComplex::from_int(2));
        let any = ExactComplex::gaussian(rational(3, 5), rational(4, 5));
        assert_eq!(block_power_entry(&any, 0, 0).unwrap(), ExactComplex::one());
        assert!(block_power_entry(&any, 0, 1).unwrap().is_zero());
        let two = ExactComplex::from_int(2);
        assert_eq!(block_power_entry(&two, 3, 2).unwrap(), ExactComplex::from_int(6));
        let zero = ExactComplex::zero();
        assert_eq!(block_power_entry(&zero, 2, 2).unwrap(), ExactComplex::one());
        assert!(block_power_entry(&zero, 3, 2).unwrap().is_zero());
    }

    #[test]
    fn apply_power_examples() {
        let spec = JordanFormSpec::single(ExactComplex::one(), 3).unwrap();
        let v = ExactVector::from_ints(&[0, 0, 1]);
        assert_eq!(apply_power(&spec, 0, &v).unwrap(), v);
        assert_eq!(apply_power(&spec, 4, &v).unwrap(), ExactVector::from_ints(&[6, 4, 1]));
        let half = JordanFormSpec::single(ExactComplex::real(rational(1, 2)), 1).unwrap();
        assert_eq!(apply_power(&half, 3, &ExactVector::from_ints(&[8])).unwrap(), ExactVector::from_ints(&[1]));
        assert!(matches!(
            apply_power(&spec, 1, &ExactVector::from_ints(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_power_closed_form() {
        // x_{n2} = (λ y2 - n y3) / λ^{n+1}
        let lambda = ExactComplex::from_int(2);
        let spec = JordanFormSpec::single(lambda, 3).unwrap();
        let y = ExactVector(vec![g(5), g(-3), g(7)]);
        for n in [1u64, 2, 7, 20] {
            let w = apply_inverse_power(&spec, n, &y).unwrap();
            let expected = GaussianRational::real(
                (int(2) * int(-3) - int(n as i64) * int(7)) / crate::exact::rational::int(2).pow((n + 1) as i32),
            );
            assert_eq!(w.0[1], expected);
            assert_eq!(apply_power(&spec, n, &w).unwrap(), y);
        }
        let nil = JordanFormSpec::single(ExactComplex::zero(), 2).unwrap();
        assert_eq!(apply_inverse_power(&nil, 1, &ExactVector::zeros(2)), Err(Error::NilpotentEigenvalue));
        assert_eq!(apply_inverse_power(&spec, 0, &y).unwrap(), y);
    }

    #[test]
    fn similarity_examples() {
        let p = ExactMatrix::from_rows(vec![vec![g(1), g(1)], vec![g(0), g(1)]]).unwrap();
        let sim = SimilaritySpec::new(p).unwrap();
        let v = ExactVector::from_ints(&[1, 1]);
        let fwd = conjugate_vector(&sim, &v, Direction::Forward).unwrap();
        assert_eq!(fwd, ExactVector::from_ints(&[2, 1]));
        assert_eq!(conjugate_vector(&sim, &fwd, Direction::Backward).unwrap(), v);
        let id = SimilaritySpec::new(ExactMatrix::identity(2)).unwrap();
        assert_eq!(conjugate_vector(&id, &v, Direction::Forward).unwrap(), v);
        let singular = ExactMatrix::from_rows(vec![vec![g(1), g(2)], vec![g(2), g(4)]]).unwrap();
        assert_eq!(SimilaritySpec::new(singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_needs_column_pivoting() {
        let m = ExactMatrix::from_rows(vec![
            vec![g(0), g(0), g(3)],
            vec![g(0), g(2), g(1)],
            vec![g(1), g(5), g(0)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ExactMatrix::identity(3));
        assert_eq!(inv.mul(&m), ExactMatrix::identity(3));
    }

    #[test]
    fn spec_json_roundtrip() {
        let text = r#"{"blocks":[{"lambda":{"re":"0","im":"1"},"size":2},{"lambda":"1/2","size":1}],
                       "similarity":[["1","1","0"],["0","1","0"],["0","0","2"]]}"#;
        let spec: JordanFormSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.dimension(), 3);
        assert_eq!(spec.block_ranges(), vec![0..2, 2..3]);
        let out = serde_json::to_value(&spec).unwrap();
        assert_eq!(out["similarity"][0][1]["re"], "1");
        let bad = r#"{"blocks":[{"lambda":"1","size":2}],"similarity":[["1"]]}"#;
        assert!(serde_json::from_str::<JordanFormSpec>(bad).is_err());
        assert!(serde_json::from_str::<JordanFormSpec>(r#"{"blocks":[]}"#).is_err());
    }
}
