//! Witness sequences: indices `k_n` and points `x_n` with `x_n → x` and
//! `B^{k_n} x_n → y`.
//!
//! In Jordan coordinates each block is handled on its own along one common
//! index schedule:
//!
//! * contracting blocks keep `x_n = x`;
//! * expanding blocks take `x_n = A^{-k_n} y`, an exact hit;
//! * unit blocks pin the leading `⌈l/2⌉` coordinates of `x_n` to those of `x`
//!   and solve a `⌊l/2⌋ × ⌊l/2⌋` binomial system so that the leading `⌊l/2⌋`
//!   coordinates of `A^{k_n} x_n` equal those of `y`.
//!
//! Rotation coordinates are matched by the schedule itself: an arithmetic
//! progression for roots of unity, a phase search for rotations of infinite
//! order. Residuals are measured in the max norm.

use std::io::{self, Write};
use std::sync::{Arc, Mutex};

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::cyclic::Residue;
use crate::classify::{classify, member_symbolic, solve_rotations, Exactness, LimitSetKind, MemberRole, Membership};
use crate::error::{Error, Result};
use crate::exact::{ExactComplex, GaussianRational, ModulusClass, Rational};
use crate::hp::{turns_to_fixed, HpComplex};
use crate::jordan::{ExactVector, JordanBlockSpec, JordanFormSpec};
use crate::linalg::{apply_offsets, power_offsets, solve, Scalar};

/// Terms whose exact form would need more bits than this are evaluated in
/// high precision instead.
const EXACT_BITS: u64 = 1 << 10;
/// Indices tried per term by the circle search.
pub const SEARCH_BUDGET: u64 = 1_000_000;
/// Precision ceiling for verification.
pub const DEFAULT_PRECISION_CEILING: usize = 1 << 15;

/// Searches for indices `k` in a residue class with `|ν^k - μ|·scale < 1/n`.
#[derive(Debug)]
pub struct CircleSearch {
    pub stride: u64,
    pub residue: u64,
    pub min_k: u64,
    pub generator: ExactComplex,
    pub mu: GaussianRational,
    pub scale: f64,
    pub budget: u64,
    theta: u64,
    target: u64,
    cache: Mutex<Vec<u64>>,
}

impl CircleSearch {
    pub fn new(generator: ExactComplex, mu: GaussianRational, scale: f64, class: Residue, min_k: u64) -> Self {
        let prec = 192;
        let theta = turns_to_fixed(&generator.to_hp(prec).arg_turns());
        let target = turns_to_fixed(&HpComplex::from_gaussian(&mu, prec).arg_turns());
        Self {
            stride: class.modulus,
            residue: class.residue,
            min_k,
            generator,
            mu,
            scale,
            budget: SEARCH_BUDGET,
            theta,
            target,
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn index(&self, n: u64) -> Result<u64> {
        let mut cache = self.cache.lock().expect("search cache");
        while (cache.len() as u64) < n {
            let term = cache.len() as u64 + 1;
            let floor = cache.last().map_or(self.min_k, |&k| k + 1);
            let start = Residue::new(self.residue, self.stride).first_at_least(floor);
            let k = self.scan(start, term)?;
            cache.push(k);
        }
        Ok(cache[n as usize - 1])
    }

    fn scan(&self, start: u64, term: u64) -> Result<u64> {
        // |e^{2πiδ} - 1| ≤ 2π|δ|, with a little slack for the rounded phase
        let turns = 0.9 / (2.0 * std::f64::consts::PI * self.scale * term as f64);
        let limit = if turns >= 0.5 { u64::MAX } else { (turns * 2f64.powi(64)) as u64 };
        let step = self.theta.wrapping_mul(self.stride);
        let mut phase = self.theta.wrapping_mul(start).wrapping_sub(self.target);
        let mut k = start;
        for _ in 0..self.budget {
            if (phase as i64).unsigned_abs() < limit {
                return Ok(k);
            }
            phase = phase.wrapping_add(step);
            k += self.stride;
        }
        Err(Error::SearchExhausted { term })
    }
}

#[derive(Clone, Debug)]
pub enum Schedule {
    /// `k_n = n` for `n ≥ first`.
    FullSequence { first: u64 },
    /// `k_n = stride·n + offset` for `n ≥ 1`.
    ArithmeticProgression { stride: u64, offset: u64 },
    SearchedSubsequence(Arc<CircleSearch>),
}

impl Schedule {
    fn progression(class: Residue, min_k: u64) -> Self {
        let mut offset = class.residue;
        while class.modulus + offset < min_k {
            offset += class.modulus;
        }
        Self::ArithmeticProgression { stride: class.modulus, offset }
    }

    pub fn first_term(&self) -> u64 {
        match self {
            Self::FullSequence { first } => *first,
            _ => 1,
        }
    }

    pub fn index(&self, n: u64) -> Result<u64> {
        if n < self.first_term() {
            return Err(Error::InvalidInput(format!("schedule starts at term {}", self.first_term())));
        }
        match self {
            Self::FullSequence { .. } => Ok(n),
            Self::ArithmeticProgression { stride, offset } => Ok(stride * n + offset),
            Self::SearchedSubsequence(s) => s.index(n),
        }
    }

    pub fn is_full_sequence(&self) -> bool {
        matches!(self, Self::FullSequence { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::FullSequence { first } => json!({"type": "full_sequence", "first_term": first}),
            Self::ArithmeticProgression { stride, offset } => {
                json!({"type": "arithmetic_progression", "stride": stride, "offset": offset})
            }
            Self::SearchedSubsequence(s) => json!({
                "type": "searched_subsequence",
                "stride": s.stride,
                "residue": s.residue,
                "generator": s.generator,
                "target": s.mu,
                "tolerance": "1/n",
                "budget_per_term": s.budget,
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TermExactness {
    ExactHit,
    Approximate { residual_bound: f64 },
}

/// One exactly computed term.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactTerm {
    pub n: u64,
    pub k: u64,
    pub x_n: ExactVector,
    /// `B^{k_n} x_n`.
    pub image: ExactVector,
    /// Squared max-norm of `x_n - x`.
    pub input_residual_sq: Rational,
    /// Squared max-norm of `B^{k_n} x_n - y`.
    pub output_residual_sq: Rational,
}

#[derive(Clone, Debug)]
pub struct HpTerm {
    pub n: u64,
    pub k: u64,
    pub x_n: Vec<HpComplex>,
    pub image: Vec<HpComplex>,
    pub input_residual: f64,
    pub output_residual: f64,
    pub precision: usize,
}

/// Residuals of one term with an error bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TermReport {
    pub n: u64,
    pub k: u64,
    pub input_residual: f64,
    pub output_residual: f64,
    pub error_bound: f64,
    pub exactness: TermExactness,
    /// Bits used, 0 for exact evaluation.
    pub precision: usize,
}

#[derive(Clone, Debug)]
pub struct Witness {
    spec: JordanFormSpec,
    x: ExactVector,
    y: ExactVector,
    xj: ExactVector,
    yj: ExactVector,
    schedule: Schedule,
    n_terms: u64,
    shift: Option<GaussianRational>,
}

fn max_norm_sq(a: &ExactVector, b: &ExactVector) -> Rational {
    a.0.iter().zip(&b.0).map(|(u, v)| (u - v).norm_sqr()).max().unwrap_or_else(Rational::zero)
}

fn max_norm_hp(a: &[HpComplex], b: &[HpComplex]) -> f64 {
    a.iter().zip(b).map(|(u, v)| u.sub(v).abs_f64()).fold(0.0, f64::max)
}

fn sqrt_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY).sqrt()
}

/// Keeps the first `l - m` coordinates of `x` and solves for the last `m` so
/// that the first `m` coordinates of `A^k x_n` equal those of `y`.
pub fn pinned_solve<S: Scalar>(
    lambda: &ExactComplex,
    l: usize,
    k: u64,
    m: usize,
    xb: &[S],
    yb: &[S],
    ctx: &S::Ctx,
) -> Result<Vec<S>> {
    let off = power_offsets::<S>(lambda, l, k as i64, ctx)?;
    pinned_solve_with(&off, l, m, xb, yb, k, ctx)
}

fn pinned_solve_with<S: Scalar>(off: &[S], l: usize, m: usize, xb: &[S], yb: &[S], k: u64, ctx: &S::Ctx) -> Result<Vec<S>> {
    if m > l {
        return Err(Error::InvalidInput(format!("cannot pin {m} coordinates of a block of size {l}")));
    }
    let h = l - m;
    let mut v = xb[..h].to_vec();
    if m == 0 {
        return Ok(v);
    }
    let entry = |d: isize| if d < 0 { S::zero(ctx) } else { off[d as usize].clone() };
    let mat: Vec<Vec<S>> = (0..m).map(|i| (0..m).map(|c| entry((h + c) as isize - i as isize)).collect()).collect();
    let rhs: Vec<S> = (0..m)
        .map(|i| (i..h).fold(yb[i].clone(), |acc, j| acc.sub(&off[j - i].mul(&xb[j]))))
        .collect();
    v.extend(solve(mat, rhs).ok_or(Error::SingularSystem(k))?);
    Ok(v)
}

impl Witness {
    pub fn spec(&self) -> &JordanFormSpec {
        &self.spec
    }

    pub fn x(&self) -> &ExactVector {
        &self.x
    }

    pub fn y(&self) -> &ExactVector {
        &self.y
    }

    pub fn schedule(&self) -> &Schedule {
        &self.schedule
    }

    pub fn n_terms(&self) -> u64 {
        self.n_terms
    }

    pub fn with_terms(mut self, n: u64) -> Self {
        self.n_terms = n;
        self
    }

    /// Adds `delta` to the first coordinate of every `x_n`. A shifted witness
    /// no longer converges to `x`, so verification must reject it.
    pub fn shifted(mut self, delta: GaussianRational) -> Self {
        self.shift = Some(delta);
        self
    }

    pub fn index(&self, n: u64) -> Result<u64> {
        self.schedule.index(n)
    }

    /// `x_n` and `A^k x_n` in Jordan coordinates.
    fn jordan_term<S: Scalar>(&self, k: u64, xj: &[S], yj: &[S], ctx: &S::Ctx) -> Result<(Vec<S>, Vec<S>)> {
        let mut out = Vec::with_capacity(xj.len());
        let mut forward = Vec::new();
        for (b, r) in self.spec.blocks().iter().zip(self.spec.block_ranges()) {
            let (xb, yb) = (&xj[r.clone()], &yj[r]);
            let off = power_offsets::<S>(&b.lambda, b.size, k as i64, ctx)?;
            match b.modulus_class() {
                ModulusClass::LessThanOne => out.extend_from_slice(xb),
                ModulusClass::GreaterThanOne => {
                    let back = power_offsets::<S>(&b.lambda, b.size, -(k as i64), ctx)?;
                    out.extend(apply_offsets(&back, yb, ctx));
                }
                ModulusClass::EqualOne => out.extend(pinned_solve_with(&off, b.size, b.size / 2, xb, yb, k, ctx)?),
            }
            forward.push(off);
        }
        if let Some(d) = &self.shift {
            out[0] = out[0].add(&S::from_gaussian(d, ctx));
        }
        let mut image = Vec::with_capacity(out.len());
        for (off, r) in forward.iter().zip(self.spec.block_ranges()) {
            image.extend(apply_offsets(off, &out[r], ctx));
        }
        Ok((out, image))
    }

    /// Whether term `k` can be carried exactly at reasonable size.
    pub fn exact_feasible(&self, k: u64) -> bool {
        let blocks = self.spec.blocks();
        blocks.iter().all(|b| b.lambda.to_gaussian().is_some())
            && blocks.iter().map(|b| b.lambda.exact_power_cost(k)).fold(0u64, u64::saturating_add) <= EXACT_BITS
    }

    /// Starting precision for term index `k`: the unit-block solves lose about
    /// `l·log2(k)` bits to cancellation.
    pub fn working_precision(&self, k: u64) -> usize {
        let bits = (64 - k.max(1).leading_zeros()) as usize;
        128 + 2 * self.spec.max_block_size() * bits
    }

    pub fn exact_term(&self, n: u64) -> Result<ExactTerm> {
        self.exact_term_at(n, self.index(n)?)
    }

    fn exact_term_at(&self, n: u64, k: u64) -> Result<ExactTerm> {
        let (xn, image) = self.jordan_term::<GaussianRational>(k, &self.xj.0, &self.yj.0, &())?;
        let x_n = self.spec.from_jordan_coords(&ExactVector(xn))?;
        let image = self.spec.from_jordan_coords(&ExactVector(image))?;
        Ok(ExactTerm {
            n,
            k,
            input_residual_sq: max_norm_sq(&x_n, &self.x),
            output_residual_sq: max_norm_sq(&image, &self.y),
            x_n,
            image,
        })
    }

    pub fn hp_term(&self, n: u64, prec: usize) -> Result<HpTerm> {
        self.hp_term_at(n, self.index(n)?, prec)
    }

    fn hp_term_at(&self, n: u64, k: u64, prec: usize) -> Result<HpTerm> {
        let (xn, image) = self.jordan_term::<HpComplex>(k, &self.xj.to_hp(prec), &self.yj.to_hp(prec), &prec)?;
        let x_n = self.spec.from_jordan_coords_hp(&xn, prec);
        let image = self.spec.from_jordan_coords_hp(&image, prec);
        Ok(HpTerm {
            n,
            k,
            input_residual: max_norm_hp(&x_n, &self.x.to_hp(prec)),
            output_residual: max_norm_hp(&image, &self.y.to_hp(prec)),
            x_n,
            image,
            precision: prec,
        })
    }

    /// Residuals of term `n`, exact when feasible, otherwise in high precision
    /// with an error bound from re-evaluation 64 bits higher. Precision
    /// doubles until the bound is below `tol/10` or passes `ceiling`.
    pub fn evaluate(&self, n: u64, tol: f64, ceiling: usize) -> Result<TermReport> {
        self.evaluate_at(n, self.index(n)?, tol, ceiling)
    }

    /// The construction evaluated at an arbitrary power `k`, off the schedule.
    /// Reported with `n = 0`.
    pub fn evaluate_index(&self, k: u64, tol: f64, ceiling: usize) -> Result<TermReport> {
        self.evaluate_at(0, k, tol, ceiling)
    }

    /// High-precision only, at the working precision and 32 bits above it.
    /// Cheaper than [`Witness::evaluate_index`] when many indices are scanned.
    pub fn quick_evaluate_index(&self, k: u64) -> Result<TermReport> {
        let prec = self.working_precision(k);
        let lo = self.hp_term_at(0, k, prec)?;
        let hi = self.hp_term_at(0, k, prec + 32)?;
        let err = (lo.input_residual - hi.input_residual)
            .abs()
            .max((lo.output_residual - hi.output_residual).abs())
            + 4.0 * f64::EPSILON * hi.input_residual.max(hi.output_residual);
        Ok(TermReport {
            n: 0,
            k,
            input_residual: hi.input_residual,
            output_residual: hi.output_residual,
            error_bound: err,
            exactness: TermExactness::Approximate { residual_bound: hi.output_residual + err },
            precision: prec + 32,
        })
    }

    fn evaluate_at(&self, n: u64, k: u64, tol: f64, ceiling: usize) -> Result<TermReport> {
        if self.exact_feasible(k) {
            let t = self.exact_term_at(n, k)?;
            let out = sqrt_f64(&t.output_residual_sq);
            let input = sqrt_f64(&t.input_residual_sq);
            return Ok(TermReport {
                n,
                k,
                input_residual: input,
                output_residual: out,
                error_bound: 4.0 * f64::EPSILON * input.max(out),
                exactness: if t.output_residual_sq.is_zero() {
                    TermExactness::ExactHit
                } else {
                    TermExactness::Approximate { residual_bound: out }
                },
                precision: 0,
            });
        }
        let mut prec = self.working_precision(k);
        loop {
            if prec > ceiling {
                return Err(Error::PrecisionExhausted(prec));
            }
            let lo = self.hp_term_at(n, k, prec)?;
            let hi = self.hp_term_at(n, k, prec + 64)?;
            let err = (lo.input_residual - hi.input_residual)
                .abs()
                .max((lo.output_residual - hi.output_residual).abs())
                + 4.0 * f64::EPSILON * hi.input_residual.max(hi.output_residual);
            if err < tol / 10.0 {
                return Ok(TermReport {
                    n,
                    k,
                    input_residual: hi.input_residual,
                    output_residual: hi.output_residual,
                    error_bound: err,
                    exactness: TermExactness::Approximate { residual_bound: hi.output_residual + err },
                    precision: prec + 64,
                });
            }
            prec *= 2;
        }
    }

    pub fn header_json(&self) -> Value {
        json!({
            "schedule": self.schedule.to_json(),
            "terms": self.n_terms,
            "norm": "max",
            "x": self.x,
            "y": self.y,
        })
    }

    /// CSV rows `n,k_n,input_residual,output_residual` for terms in `from..=to`.
    pub fn write_csv<W: Write>(&self, from: u64, to: u64, tol: f64, out: &mut W) -> Result<()> {
        let io = |e: io::Error| Error::InvalidInput(format!("write failed: {e}"));
        writeln!(out, "n,k_n,input_residual,output_residual,error_bound").map_err(io)?;
        let from = from.max(self.schedule.first_term());
        if to >= from {
            self.index(to)?;
        }
        let rows = (from..=to)
            .into_par_iter()
            .map(|n| self.evaluate(n, tol, DEFAULT_PRECISION_CEILING))
            .collect::<Result<Vec<_>>>()?;
        for r in rows {
            writeln!(out, "{},{},{:.6e},{:.6e},{:.2e}", r.n, r.k, r.input_residual, r.output_residual, r.error_bound)
                .map_err(io)?;
        }
        Ok(())
    }
}

/// Builds one witness for `y ∈ J(x)` under the whole spec.
pub fn assemble_witness(spec: &JordanFormSpec, x: &ExactVector, y: &ExactVector, n_terms: u64) -> Result<Witness> {
    let xj = spec.to_jordan_coords(x)?;
    let yj = spec.to_jordan_coords(y)?;
    for (b, r) in spec.blocks().iter().zip(spec.block_ranges()) {
        if b.modulus_class() == ModulusClass::LessThanOne && !yj.slice(r).iter().all(GaussianRational::is_zero) {
            return Err(Error::NonzeroTarget);
        }
    }
    let set = classify(spec, x, LimitSetKind::J)?;
    match member_symbolic(&set, y)? {
        Membership::Yes => {}
        Membership::No => return Err(Error::NotInSet(format!("{y} is not in J({x})"))),
        Membership::Unknown => {
            return Err(Error::NotInSet("the joint rotation closure is only known approximately".into()));
        }
    }
    let p = set.as_product().expect("nonempty");
    debug_assert_eq!(p.exactness, Exactness::Exact);
    let min_k = spec.max_block_size() as u64;
    let mut schedule = Schedule::FullSequence { first: min_k };
    if let Some(g) = p.groups.first() {
        let sol = solve_rotations(&p.factors, g, &yj)?.ok_or(Error::ScheduleConflict)?;
        if let Some(mu) = sol.circle.first() {
            let generator = g
                .members
                .iter()
                .find(|m| m.role == MemberRole::Circle { class: 0, conjugate: false })
                .expect("class representative")
                .eigenvalue
                .clone();
            let scale = p
                .factors
                .iter()
                .filter_map(|f| match f {
                    crate::classify::CoordinateFactor::Rotation { member, coeff, .. }
                        if matches!(g.members[*member].role, MemberRole::Circle { .. }) =>
                    {
                        let (re, im) = coeff.to_f64();
                        Some(re.hypot(im))
                    }
                    _ => None,
                })
                .fold(0.0, f64::max);
            let search = CircleSearch::new(generator, mu.clone(), scale, sol.residue, min_k);
            schedule = Schedule::SearchedSubsequence(Arc::new(search));
        } else if sol.residue.modulus > 1 {
            schedule = Schedule::progression(sol.residue, min_k);
        }
    }
    Ok(Witness { spec: spec.clone(), x: x.clone(), y: y.clone(), xj, yj, schedule, n_terms, shift: None })
}

fn single(lambda: &ExactComplex, l: usize) -> Result<JordanFormSpec> {
    JordanFormSpec::new(vec![JordanBlockSpec::new(lambda.clone(), l)], None)
}

pub fn witness_unit_block(lambda: &ExactComplex, l: usize, x: &ExactVector, y: &ExactVector, n_terms: u64) -> Result<Witness> {
    if lambda.modulus_class() != ModulusClass::EqualOne {
        return Err(Error::NotUnitModulus(lambda.to_string()));
    }
    assemble_witness(&single(lambda, l)?, x, y, n_terms)
}

pub fn witness_expanding_block(lambda: &ExactComplex, l: usize, y: &ExactVector, n_terms: u64) -> Result<Witness> {
    if lambda.modulus_class() != ModulusClass::GreaterThanOne {
        return Err(Error::InvalidInput(format!("{lambda} is not expanding")));
    }
    assemble_witness(&single(lambda, l)?, &ExactVector::zeros(l), y, n_terms)
}

pub fn witness_contracting_block(lambda: &ExactComplex, l: usize, x: &ExactVector, n_terms: u64) -> Result<Witness> {
    if lambda.modulus_class() != ModulusClass::LessThanOne {
        return Err(Error::InvalidInput(format!("{lambda} is not contracting")));
    }
    assemble_witness(&single(lambda, l)?, x, &ExactVector::zeros(l), n_terms)
}

/// `C` with `‖A^n x‖∞ ≤ C·n^(l-1)·|λ|^n` for all `n ≥ 1`, for `0 < |λ| < 1`.
pub fn contracting_bound(lambda: &ExactComplex, l: usize, x: &ExactVector) -> Option<f64> {
    if lambda.is_zero() {
        return None;
    }
    let modulus = lambda.modulus_sqr().to_f64()?.sqrt();
    let xmax = x.0.iter().map(|g| g.norm_sqr().to_f64().unwrap_or(f64::INFINITY).sqrt()).fold(0.0, f64::max);
    let mut fact = 1.0;
    let mut sum = 0.0;
    for j in 0..l {
        if j > 0 {
            fact *= j as f64;
        }
        sum += modulus.powi(-(j as i32)) / fact;
    }
    Some(xmax * sum)
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub first_checked: u64,
    pub last_checked: u64,
    pub max_input_residual: f64,
    pub max_output_residual: f64,
    pub error_bound: f64,
    pub tolerance: f64,
    pub all_exact_hits: bool,
    pub passed: bool,
}

/// Checks the last quarter of terms `1..=n_terms`: both residuals must stay
/// below `tol`, error bound included.
pub fn verify_witness(w: &Witness, n_terms: u64, tol: f64) -> Result<WitnessReport> {
    verify_witness_with_ceiling(w, n_terms, tol, DEFAULT_PRECISION_CEILING)
}

pub fn verify_witness_with_ceiling(w: &Witness, n_terms: u64, tol: f64, ceiling: usize) -> Result<WitnessReport> {
    let first = w.schedule.first_term();
    if n_terms < first {
        return Err(Error::InvalidInput(format!("need at least {first} terms")));
    }
    let count = n_terms - first + 1;
    let from = n_terms - count / 4;
    w.index(n_terms)?;
    let reports = (from..=n_terms)
        .into_par_iter()
        .map(|n| w.evaluate(n, tol, ceiling))
        .collect::<Result<Vec<_>>>()?;
    let max_in = reports.iter().map(|r| r.input_residual).fold(0.0, f64::max);
    let max_out = reports.iter().map(|r| r.output_residual).fold(0.0, f64::max);
    let err = reports.iter().map(|r| r.error_bound).fold(0.0, f64::max);
    Ok(WitnessReport {
        first_checked: from,
        last_checked: n_terms,
        max_input_residual: max_in,
        max_output_residual: max_out,
        error_bound: err,
        tolerance: tol,
        all_exact_hits: reports.iter().all(|r| r.exactness == TermExactness::ExactHit),
        passed: max_in + err < tol && max_out + err < tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rational;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn unit_l3_closed_form() {
        let w = witness_unit_block(&ExactComplex::one(), 3, &ExactVector::zeros(3), &ExactVector::from_ints(&[1, 0, 0]), 10)
            .unwrap();
        assert!(w.schedule().is_full_sequence());
        let t = w.exact_term(10).unwrap();
        assert_eq!(t.k, 10);
        let third = |a, b| GaussianRational::real(rational(a, b));
        assert_eq!(t.x_n, ExactVector(vec![g(0), g(0), third(1, 45)]));
        assert_eq!(t.image, ExactVector(vec![g(1), third(2, 9), third(1, 45)]));
        assert_eq!(t.output_residual_sq, rational(4, 81));
    }

    #[test]
    fn expanding_exact_hits() {
        let lambda = ExactComplex::from_int(2);
        let w = witness_expanding_block(&lambda, 1, &ExactVector::from_ints(&[3]), 20).unwrap();
        let t = w.exact_term(5).unwrap();
        assert_eq!(t.x_n.0[0], GaussianRational::real(rational(3, 32)));
        assert!(t.output_residual_sq.is_zero());
        let r = verify_witness(&w, 200, 1e-3).unwrap();
        assert!(r.passed && r.all_exact_hits);
    }

    #[test]
    fn cyclic_schedule() {
        let i = ExactComplex::Cartesian(GaussianRational::i());
        let w = witness_unit_block(&i, 1, &ExactVector::from_ints(&[1]), &ExactVector::from_ints(&[-1]), 10).unwrap();
        assert!(matches!(w.schedule(), Schedule::ArithmeticProgression { stride: 4, offset: 2 }));
        for n in 1..20 {
            let t = w.exact_term(n).unwrap();
            assert_eq!(t.k, 4 * n + 2);
            assert!(t.output_residual_sq.is_zero());
            assert!(t.input_residual_sq.is_zero());
        }
    }

    #[test]
    fn contracting_needs_zero_target() {
        let half = ExactComplex::real(rational(1, 2));
        let w = witness_contracting_block(&half, 1, &ExactVector::from_ints(&[8]), 10).unwrap();
        assert_eq!(w.exact_term(3).unwrap().image.0[0], g(1));
        let spec = single(&half, 1).unwrap();
        assert_eq!(
            assemble_witness(&spec, &ExactVector::from_ints(&[8]), &ExactVector::from_ints(&[1]), 10).unwrap_err(),
            Error::NonzeroTarget
        );
        let c = contracting_bound(&half, 2, &ExactVector::from_ints(&[3, -5])).unwrap();
        let w = witness_contracting_block(&half, 2, &ExactVector::from_ints(&[3, -5]), 10).unwrap();
        for n in 2..60u64 {
            let t = w.exact_term(n).unwrap();
            let bound = c * n as f64 * 0.5f64.powi(n as i32);
            assert!(sqrt_f64(&t.output_residual_sq) <= bound * (1.0 + 1e-12));
        }
        let nil = witness_contracting_block(&ExactComplex::zero(), 2, &ExactVector::from_ints(&[4, 7]), 5).unwrap();
        assert!(nil.exact_term(2).unwrap().image.is_zero());
    }

    #[test]
    fn circle_search_hits_targets() {
        let lambda = ExactComplex::gaussian(rational(3, 5), rational(4, 5));
        let w = witness_unit_block(&lambda, 1, &ExactVector::from_ints(&[1]), &ExactVector::from_ints(&[-1]), 200).unwrap();
        assert!(matches!(w.schedule(), Schedule::SearchedSubsequence(_)));
        let mut prev = 0;
        for n in 1..=200 {
            let r = w.evaluate(n, 1e-3, DEFAULT_PRECISION_CEILING).unwrap();
            assert!(r.k > prev);
            prev = r.k;
            assert!(r.output_residual < 1.0 / n as f64, "term {n}: {}", r.output_residual);
        }
        let tight = CircleSearch::new(lambda, GaussianRational::from_int(-1), 1.0, Residue::ANY, 1).with_budget(3);
        assert!(matches!(tight.index(50), Err(Error::SearchExhausted { .. })));
    }

    #[test]
    fn odd_blocks_follow_signed_middle_coordinate() {
        let one = ExactComplex::one();
        let w = witness_unit_block(&one, 3, &ExactVector::from_ints(&[0, 1, 0]), &ExactVector::from_ints(&[2, -1, 0]), 0)
            .unwrap();
        assert!(verify_witness(&w, 4000, 1e-2).unwrap().passed);
        let w = witness_unit_block(&one, 5, &ExactVector::from_ints(&[0, 0, 1, 0, 0]), &ExactVector::from_ints(&[1, 1, 1, 0, 0]), 0)
            .unwrap();
        assert!(verify_witness(&w, 4000, 1e-2).unwrap().passed);
        let i = ExactComplex::Cartesian(GaussianRational::i());
        let y = ExactVector(vec![g(17), GaussianRational::new(rational(0, 1), rational(1, 2)), g(0)]);
        let x = ExactVector(vec![g(5), GaussianRational::real(rational(1, 2)), g(0)]);
        let w = witness_unit_block(&i, 3, &x, &y, 0).unwrap();
        assert!(verify_witness(&w, 4000, 1e-1).unwrap().passed);
    }

    #[test]
    fn rejects_points_outside() {
        let one = ExactComplex::one();
        let err = witness_unit_block(&one, 3, &ExactVector::zeros(3), &ExactVector::from_ints(&[0, 1, 0]), 10).unwrap_err();
        assert!(matches!(err, Error::NotInSet(_)));
    }

    #[test]
    fn shifted_witness_fails() {
        let one = ExactComplex::one();
        let w = witness_unit_block(&one, 3, &ExactVector::zeros(3), &ExactVector::from_ints(&[1, 0, 0]), 400).unwrap();
        assert!(verify_witness(&w, 400, 0.05).unwrap().passed);
        let bad = w.shifted(GaussianRational::real(rational(1, 10)));
        assert!(!verify_witness(&bad, 400, 0.05).unwrap().passed);
    }

    #[test]
    fn pascal_minors_nonsingular() {
        for l in 2..=8usize {
            let h = l.div_ceil(2);
            let m = l / 2;
            for k in l as i64..=100 {
                let off: Vec<GaussianRational> = power_offsets(&ExactComplex::one(), l, k, &()).unwrap();
                let mat: Vec<Vec<GaussianRational>> =
                    (0..m).map(|i| (0..m).map(|c| off[h + c - i].clone()).collect()).collect();
                assert!(solve(mat, vec![g(1); m]).is_some(), "l={l} k={k}");
            }
        }
    }
}
