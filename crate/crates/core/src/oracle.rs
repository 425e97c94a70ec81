//! Floating-point evidence that does not go through the symbolic classifier:
//! pull-back distance scans, forward orbits, circle coverage of `{λ^k}` and a
//! ball-transitivity check.
//!
//! Distances are max norms in Jordan coordinates. Every scan runs at two
//! precisions; the difference bounds the rounding error.

use std::io::{self, Write};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::cyclic::unit_angle;
use crate::classify::{CoordinateFactor, MemberRole, SymbolicLimitSet};
use crate::error::{Error, Result};
use crate::exact::{ExactComplex, GaussianRational, ModulusClass};
use crate::hp::{turns_to_fixed, HpComplex};
use crate::jordan::{ExactVector, JordanFormSpec};
use crate::linalg::{apply_offsets, power_offsets};
use crate::witness::assemble_witness;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleConfig {
    pub max_iterations: u64,
    /// Fractional bits kept on top of the polynomial growth of unit blocks.
    pub precision_bits: usize,
    pub precision_ceiling: usize,
    pub divergence_threshold: f64,
    pub tolerance: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_iterations: 10_000,
            precision_bits: 64,
            precision_ceiling: 4096,
            divergence_threshold: 1e6,
            tolerance: 1e-3,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < 53 {
            return Err(Error::InvalidInput("precision must be at least 53 bits".into()));
        }
        if !(self.tolerance > 0.0) || !(self.divergence_threshold > 0.0) || self.max_iterations == 0 {
            return Err(Error::InvalidInput("tolerance, threshold and iteration count must be positive".into()));
        }
        Ok(())
    }

    /// First index of the tail used for verdicts.
    pub fn tail_start(&self) -> u64 {
        self.max_iterations.div_ceil(10).max(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    EvidenceYes,
    EvidenceNo,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurvePoint {
    pub k: u64,
    pub d: f64,
    pub error_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitStats {
    pub diverged_at: Option<u64>,
    pub clusters: Vec<Vec<[f64; 2]>>,
    /// More accumulation points than were tracked.
    pub dense: bool,
    /// Clusters within tolerance of the supplied symbolic set.
    pub matching_clusters: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverageStats {
    pub bins: usize,
    pub occupied_bins: usize,
    pub distinct_positions: u64,
    pub max_empty_arc: f64,
    pub star_discrepancy: f64,
    pub fills_circle: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransitivityStats {
    pub delta: f64,
    pub epsilon: f64,
    pub qualifying_count: u64,
    /// Maximal runs of consecutive qualifying indices, inclusive.
    pub runs: Vec<[u64; 2]>,
    pub longest_run: u64,
    /// Every index from here to the end of the scan qualifies.
    pub mixing_from: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub operation: &'static str,
    pub verdict: Verdict,
    pub iterations: u64,
    pub precision_bits: usize,
    #[serde(skip)]
    pub curve: Vec<CurvePoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimum: Option<CurvePoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_minimum: Option<CurvePoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub floor: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<CoverageStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transitivity: Option<TransitivityStats>,
}

impl OracleReport {
    fn new(operation: &'static str, iterations: u64, precision_bits: usize) -> Self {
        Self {
            operation,
            verdict: Verdict::Inconclusive,
            iterations,
            precision_bits,
            curve: Vec::new(),
            minimum: None,
            tail_minimum: None,
            floor: None,
            orbit: None,
            coverage: None,
            transitivity: None,
        }
    }

    /// CSV rows `k,d_k,error_bound`.
    pub fn write_curve_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "k,d_k,error_bound")?;
        for p in &self.curve {
            writeln!(out, "{},{:.9e},{:.2e}", p.k, p.d, p.error_bound)?;
        }
        Ok(())
    }
}

/// Pull-back for expanding and unit blocks, forward iteration for contracting
/// ones.
struct Curves {
    /// `‖A^{-k} y - x‖` over the non-contracting blocks.
    input: Vec<f64>,
    /// `‖A^k x - y‖` over the contracting blocks.
    output: Vec<f64>,
}

fn is_contracting(b: &crate::jordan::JordanBlockSpec) -> bool {
    b.modulus_class() == ModulusClass::LessThanOne
}

fn scan_curves(spec: &JordanFormSpec, xj: &ExactVector, yj: &ExactVector, iters: u64, prec: usize) -> Result<Curves> {
    struct State {
        step: Vec<HpComplex>,
        v: Vec<HpComplex>,
        reference: Vec<HpComplex>,
        contracting: bool,
    }
    let mut states = Vec::new();
    for (b, r) in spec.blocks().iter().zip(spec.block_ranges()) {
        let contracting = is_contracting(b);
        let (start, reference) = if contracting { (xj.slice(r.clone()), yj.slice(r)) } else { (yj.slice(r.clone()), xj.slice(r)) };
        let k = if contracting { 1 } else { -1 };
        states.push(State {
            step: power_offsets::<HpComplex>(&b.lambda, b.size, k, &prec)?,
            v: start.iter().map(|g| HpComplex::from_gaussian(g, prec)).collect(),
            reference: reference.iter().map(|g| HpComplex::from_gaussian(g, prec)).collect(),
            contracting,
        });
    }
    let mut input = Vec::with_capacity(iters as usize);
    let mut output = Vec::with_capacity(iters as usize);
    for _ in 0..iters {
        let (mut din, mut dout) = (0.0f64, 0.0f64);
        for s in &mut states {
            s.v = apply_offsets(&s.step, &s.v, &prec);
            let d = s.v.iter().zip(&s.reference).map(|(a, b)| a.sub(b).abs_f64()).fold(0.0, f64::max);
            if s.contracting {
                dout = dout.max(d);
            } else {
                din = din.max(d);
            }
        }
        input.push(din);
        output.push(dout);
    }
    Ok(Curves { input, output })
}

fn start_precision(spec: &JordanFormSpec, cfg: &OracleConfig) -> usize {
    let bits = (64 - cfg.max_iterations.leading_zeros()) as usize;
    cfg.precision_bits + spec.max_block_size() * bits
}

/// Curves at two precisions; returns the higher one and per-index error bounds.
fn scan_with_errors(
    spec: &JordanFormSpec,
    xj: &ExactVector,
    yj: &ExactVector,
    iters: u64,
    prec: usize,
) -> Result<(Curves, Vec<f64>)> {
    let (lo, hi) = rayon::join(
        || scan_curves(spec, xj, yj, iters, prec),
        || scan_curves(spec, xj, yj, iters, prec + 64),
    );
    let (lo, hi) = (lo?, hi?);
    let err = (0..iters as usize)
        .map(|i| {
            let e = (lo.input[i] - hi.input[i]).abs().max((lo.output[i] - hi.output[i]).abs());
            e + 4.0 * f64::EPSILON * hi.input[i].max(hi.output[i])
        })
        .collect();
    Ok((hi, err))
}

fn gaussian_abs(g: &GaussianRational) -> f64 {
    g.norm_sqr().to_f64().unwrap_or(f64::INFINITY).sqrt()
}

fn last_nonzero(v: &[GaussianRational]) -> Option<usize> {
    v.iter().rposition(|g| !g.is_zero())
}

/// Lower bound on the scan distance for `k ≥ k0` that also certifies
/// non-membership: it is only built from coordinates the triangular structure
/// forces (trailing halves of unit blocks, any nonzero start on an expanding
/// block, any nonzero target on a contracting block).
pub fn structural_floor(spec: &JordanFormSpec, xj: &ExactVector, yj: &ExactVector, k0: u64) -> f64 {
    let mut floor = 0.0f64;
    for (b, r) in spec.blocks().iter().zip(spec.block_ranges()) {
        let (x, y) = (xj.slice(r.clone()), yj.slice(r));
        let modulus = b.lambda.modulus_sqr().to_f64().unwrap_or(0.0).sqrt();
        match b.modulus_class() {
            ModulusClass::EqualOne => {
                let t = last_nonzero(y);
                let free = b.size / 2;
                let pinned = b.size.div_ceil(2);
                for j in t.map_or(0, |t| t + 1)..b.size {
                    if j >= pinned {
                        floor = floor.max(gaussian_abs(&x[j]));
                    }
                }
                if let Some(t) = t {
                    if t >= free {
                        floor = floor.max((gaussian_abs(&y[t]) - gaussian_abs(&x[t])).abs());
                    }
                }
            }
            ModulusClass::GreaterThanOne => {
                let t = last_nonzero(y);
                for j in t.map_or(0, |t| t + 1)..b.size {
                    floor = floor.max(gaussian_abs(&x[j]));
                }
                if let Some(t) = t {
                    let shrink = modulus.powf(-(k0 as f64));
                    floor = floor.max(gaussian_abs(&x[t]) - shrink * gaussian_abs(&y[t]));
                }
            }
            ModulusClass::LessThanOne => {
                let s = last_nonzero(x);
                for j in s.map_or(0, |s| s + 1)..b.size {
                    floor = floor.max(gaussian_abs(&y[j]));
                }
                if let Some(s) = s {
                    let decay = if b.lambda.is_zero() { 0.0 } else { modulus.powf(k0 as f64) };
                    floor = floor.max(gaussian_abs(&y[s]) - decay * gaussian_abs(&x[s]));
                }
            }
        }
    }
    floor
}

/// `d_k = ‖A^{-k} y - x‖` for `k = 1..=K`, with contracting blocks measured
/// forward as `‖A^k x - y‖`.
///
/// `EvidenceYes` needs some `k` in the tail `k ≥ ⌈K/10⌉` with `d_k` below the
/// tolerance and an error bound below a tenth of it. `EvidenceNo` needs a
/// structural floor at or above the tolerance.
pub fn pullback_scan(spec: &JordanFormSpec, x: &ExactVector, y: &ExactVector, cfg: &OracleConfig) -> Result<OracleReport> {
    cfg.validate()?;
    let xj = spec.to_jordan_coords(x)?;
    let yj = spec.to_jordan_coords(y)?;
    let k_max = cfg.max_iterations;
    let tail = cfg.tail_start();
    let mut prec = start_precision(spec, cfg);
    loop {
        let (curves, err) = scan_with_errors(spec, &xj, &yj, k_max, prec)?;
        let curve: Vec<CurvePoint> = (0..k_max as usize)
            .map(|i| CurvePoint { k: i as u64 + 1, d: curves.input[i].max(curves.output[i]), error_bound: err[i] })
            .collect();
        let min_of = |pts: &[CurvePoint]| pts.iter().copied().min_by(|a, b| a.d.total_cmp(&b.d));
        let minimum = min_of(&curve);
        let tail_min = min_of(&curve[(tail - 1) as usize..]).expect("nonempty tail");
        let near = tail_min.d < cfg.tolerance + tail_min.error_bound;
        if near && tail_min.error_bound >= cfg.tolerance / 10.0 {
            prec *= 2;
            if prec > cfg.precision_ceiling {
                return Err(Error::PrecisionExhausted(prec));
            }
            continue;
        }
        let mut report = OracleReport::new("pullback_scan", k_max, prec + 64);
        let floor = structural_floor(spec, &xj, &yj, tail);
        report.floor = Some(floor);
        report.verdict = if tail_min.d < cfg.tolerance && tail_min.error_bound < cfg.tolerance / 10.0 {
            Verdict::EvidenceYes
        } else if floor >= cfg.tolerance {
            Verdict::EvidenceNo
        } else {
            Verdict::Inconclusive
        };
        report.minimum = minimum;
        report.tail_minimum = Some(tail_min);
        report.curve = curve;
        return Ok(report);
    }
}

/// The point certified by a scan at index `k`: `A^{-k} y` on expanding and
/// unit blocks, `x` on contracting blocks, in the original coordinates.
pub fn scan_point(spec: &JordanFormSpec, x: &ExactVector, y: &ExactVector, k: u64) -> Result<ExactVector> {
    let xj = spec.to_jordan_coords(x)?;
    let yj = spec.to_jordan_coords(y)?;
    let mut out = Vec::with_capacity(xj.len());
    for (b, r) in spec.blocks().iter().zip(spec.block_ranges()) {
        if is_contracting(b) {
            out.extend_from_slice(xj.slice(r));
        } else {
            let off = power_offsets::<GaussianRational>(&b.lambda, b.size, -(k as i64), &())?;
            out.extend(apply_offsets(&off, yj.slice(r), &()));
        }
    }
    spec.from_jordan_coords(&ExactVector(out))
}

fn c64(z: &HpComplex) -> [f64; 2] {
    let (re, im) = z.to_c64();
    [re, im]
}

fn dist(a: &[[f64; 2]], b: &[[f64; 2]]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p[0] - q[0]).hypot(p[1] - q[1])).fold(0.0, f64::max)
}

const MAX_CLUSTERS: usize = 64;
const LISTED_CYCLE: u64 = 4096;

/// Distance from a point in Jordan coordinates to a symbolic set. Exact for
/// cyclic groups; for circle classes `μ` is taken from the first coordinate
/// of the class, so the value is an upper bound there.
pub fn distance_to_set(set: &SymbolicLimitSet, v: &[[f64; 2]]) -> Option<f64> {
    let p = set.as_product()?;
    let mut d = 0.0f64;
    for (f, z) in p.factors.iter().zip(v) {
        if matches!(f, CoordinateFactor::Zero) {
            d = d.max(z[0].hypot(z[1]));
        }
    }
    let cmul = |a: [f64; 2], b: [f64; 2]| [a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]];
    for g in &p.groups {
        let rot: Vec<(usize, usize, [f64; 2])> = p
            .factors
            .iter()
            .enumerate()
            .filter_map(|(j, f)| match f {
                CoordinateFactor::Rotation { param, member, coeff } if *param == g.id => {
                    let (re, im) = coeff.to_f64();
                    Some((j, *member, [re, im]))
                }
                _ => None,
            })
            .collect();
        let mut mus: Vec<Option<[f64; 2]>> = vec![None; g.circle_classes()];
        let mut circle_d = 0.0f64;
        for &(j, m, c) in &rot {
            if let MemberRole::Circle { class, conjugate } = g.members[m].role {
                let mu = *mus[class].get_or_insert_with(|| {
                    let r = v[j][0].hypot(v[j][1]).max(f64::MIN_POSITIVE);
                    let cr = c[0].hypot(c[1]);
                    let u = cmul([v[j][0] / r, v[j][1] / r], [c[0] / cr, -c[1] / cr]);
                    if conjugate {
                        [u[0], -u[1]]
                    } else {
                        u
                    }
                });
                let mu = if conjugate { [mu[0], -mu[1]] } else { mu };
                let t = cmul(c, mu);
                circle_d = circle_d.max((v[j][0] - t[0]).hypot(v[j][1] - t[1]));
            }
        }
        let cyclic: Vec<_> = rot.iter().filter(|(_, m, _)| matches!(g.members[*m].role, MemberRole::Cyclic { .. })).collect();
        let mut best = if cyclic.is_empty() { 0.0 } else { f64::INFINITY };
        for n in 1..=g.period().min(LISTED_CYCLE) {
            let mut worst = 0.0f64;
            for &&(j, m, c) in &cyclic {
                let pw = g.members[m].eigenvalue.pow(n as i64).ok()?.to_hp(64);
                let t = cmul(c, c64(&pw));
                worst = worst.max((v[j][0] - t[0]).hypot(v[j][1] - t[1]));
            }
            best = best.min(worst);
        }
        d = d.max(circle_d).max(best);
    }
    Some(d)
}

/// Iterates `x, Ax, A²x, …` in Jordan coordinates. Stops early on divergence;
/// otherwise clusters the second half of the orbit.
pub fn forward_orbit(spec: &JordanFormSpec, x: &ExactVector, cfg: &OracleConfig, symbolic: Option<&SymbolicLimitSet>) -> Result<OracleReport> {
    cfg.validate()?;
    let xj = spec.to_jordan_coords(x)?;
    let prec = start_precision(spec, cfg);
    let steps = spec
        .blocks()
        .iter()
        .map(|b| power_offsets::<HpComplex>(&b.lambda, b.size, 1, &prec))
        .collect::<Result<Vec<_>>>()?;
    let ranges = spec.block_ranges();
    let mut v: Vec<HpComplex> = xj.to_hp(prec);
    let k_max = cfg.max_iterations;
    let radius = (cfg.tolerance * 10.0).max(1e-9);
    let mut clusters: Vec<Vec<[f64; 2]>> = Vec::new();
    let mut dense = false;
    let mut diverged_at = None;
    let mut curve = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let mut next = Vec::with_capacity(v.len());
        for (off, r) in steps.iter().zip(&ranges) {
            next.extend(apply_offsets(off, &v[r.clone()], &prec));
        }
        v = next;
        let point: Vec<[f64; 2]> = v.iter().map(c64).collect();
        let size = point.iter().map(|z| z[0].hypot(z[1])).fold(0.0, f64::max);
        curve.push(CurvePoint { k, d: size, error_bound: size * 2f64.powi(-(cfg.precision_bits as i32)) });
        if size > cfg.divergence_threshold {
            diverged_at = Some(k);
            break;
        }
        if k > k_max / 2 && !dense {
            if !clusters.iter().any(|c| dist(c, &point) < radius) {
                if clusters.len() == MAX_CLUSTERS {
                    dense = true;
                } else {
                    clusters.push(point);
                }
            }
        }
    }
    let mut report = OracleReport::new("forward_orbit", k_max, prec);
    report.verdict = if diverged_at.is_some() { Verdict::EvidenceNo } else { Verdict::EvidenceYes };
    let matching = symbolic.map(|s| {
        clusters.iter().filter(|c| distance_to_set(s, c).is_some_and(|d| d < radius)).count()
    });
    report.curve = curve;
    report.orbit = Some(OrbitStats { diverged_at, clusters, dense, matching_clusters: matching });
    Ok(report)
}

const COVERAGE_BINS: usize = 3600;

/// Arguments of `λ^k` for `k = 1..=K`: occupied bins out of 3600, the largest
/// empty arc and the star discrepancy of the phases.
pub fn dset_coverage(lambda: &ExactComplex, cfg: &OracleConfig) -> Result<OracleReport> {
    cfg.validate()?;
    if lambda.modulus_class() != ModulusClass::EqualOne {
        return Err(Error::NotUnitModulus(lambda.to_string()));
    }
    let k_max = cfg.max_iterations;
    let scale = 2f64.powi(64);
    let mut phases: Vec<u64> = match unit_angle(lambda) {
        Some((p, q)) => (1..=k_max)
            .map(|k| {
                let r = (k as u128 * p as u128 % q as u128) as f64 / q as f64;
                (r * scale) as u64
            })
            .collect(),
        None => {
            let theta = turns_to_fixed(&lambda.to_hp(192).arg_turns());
            let mut acc = 0u64;
            (1..=k_max)
                .map(|_| {
                    acc = acc.wrapping_add(theta);
                    acc
                })
                .collect()
        }
    };
    let mut bins = vec![false; COVERAGE_BINS];
    for &ph in &phases {
        bins[((ph as f64 / scale) * COVERAGE_BINS as f64) as usize % COVERAGE_BINS] = true;
    }
    phases.par_sort_unstable();
    let n = phases.len() as f64;
    let mut star = 0.0f64;
    for (i, &ph) in phases.iter().enumerate() {
        let t = ph as f64 / scale;
        star = star.max((i as f64 + 1.0) / n - t).max(t - i as f64 / n);
    }
    phases.dedup();
    let mut gap = phases.first().copied().unwrap_or(0).wrapping_sub(*phases.last().unwrap_or(&0));
    if phases.len() == 1 {
        gap = u64::MAX;
    }
    for w in phases.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    let max_empty_arc = gap as f64 / scale * std::f64::consts::TAU;
    let fills = max_empty_arc < std::f64::consts::TAU / 100.0;
    let mut report = OracleReport::new("dset_coverage", k_max, 192);
    report.verdict = if fills { Verdict::EvidenceYes } else { Verdict::Inconclusive };
    report.coverage = Some(CoverageStats {
        bins: COVERAGE_BINS,
        occupied_bins: bins.iter().filter(|b| **b).count(),
        distinct_positions: phases.len() as u64,
        max_empty_arc,
        star_discrepancy: star,
        fills_circle: fills,
    });
    Ok(report)
}

fn runs_of(qualifying: &[bool]) -> Vec<[u64; 2]> {
    let mut runs = Vec::new();
    let mut start = None;
    for (i, &q) in qualifying.iter().enumerate() {
        let k = i as u64 + 1;
        match (q, start) {
            (true, None) => start = Some(k),
            (false, Some(s)) => {
                runs.push([s, k - 1]);
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        runs.push([s, qualifying.len() as u64]);
    }
    runs
}

/// Lists the `k ≤ K` for which some point within `δ` of `x` lands within `ε`
/// of `y` after `k` steps. Candidates are the scan point (pull-back on
/// non-contracting blocks, `x` on contracting ones) and the witness
/// construction evaluated at index `k`.
pub fn ball_transitivity_check(
    spec: &JordanFormSpec,
    x: &ExactVector,
    y: &ExactVector,
    delta: f64,
    epsilon: f64,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    cfg.validate()?;
    if !spec.is_invertible() {
        return Err(Error::NilpotentEigenvalue);
    }
    let xj = spec.to_jordan_coords(x)?;
    let yj = spec.to_jordan_coords(y)?;
    let k_max = cfg.max_iterations;
    let prec = start_precision(spec, cfg);
    let (curves, err) = scan_with_errors(spec, &xj, &yj, k_max, prec)?;
    let mut qualifying: Vec<bool> = (0..k_max as usize)
        .map(|i| curves.input[i] + err[i] < delta && curves.output[i] + err[i] < epsilon)
        .collect();
    if let Ok(w) = assemble_witness(spec, x, y, k_max) {
        let min_k = spec.max_block_size() as u64;
        let extra: Vec<(usize, bool)> = (min_k..=k_max)
            .into_par_iter()
            .filter(|&k| !qualifying[k as usize - 1])
            .map(|k| {
                let ok = w
                    .quick_evaluate_index(k)
                    .map(|r| r.input_residual + r.error_bound < delta && r.output_residual + r.error_bound < epsilon)
                    .unwrap_or(false);
                (k as usize - 1, ok)
            })
            .collect();
        for (i, ok) in extra {
            qualifying[i] |= ok;
        }
    }
    let runs = runs_of(&qualifying);
    let mixing_from = runs.last().filter(|r| r[1] == k_max).map(|r| r[0]);
    let tail = cfg.tail_start();
    let mut report = OracleReport::new("ball_transitivity_check", k_max, prec + 64);
    report.verdict = if qualifying[(tail - 1) as usize..].iter().any(|q| *q) {
        Verdict::EvidenceYes
    } else if structural_floor(spec, &xj, &yj, tail) >= delta.max(epsilon) {
        Verdict::EvidenceNo
    } else {
        Verdict::Inconclusive
    };
    report.transitivity = Some(TransitivityStats {
        delta,
        epsilon,
        qualifying_count: qualifying.iter().filter(|q| **q).count() as u64,
        longest_run: runs.iter().map(|r| r[1] - r[0] + 1).max().unwrap_or(0),
        runs,
        mixing_from,
    });
    Ok(report)
}
