//! Bundled invariant checks, each reported as a named pass/fail property.

use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::sample::{admissible_x, palette, random_spec, random_vector, sample_member, sample_non_member};
use crate::classify::{classify, member_symbolic, Exactness, LimitSetKind, Membership, SymbolicLimitSet};
use crate::error::{Error, Result};
use crate::exact::rational::rational;
use crate::exact::{ExactComplex, GaussianRational, ModulusClass};
use crate::jordan::{ExactVector, JordanFormSpec};
use crate::oracle::{pullback_scan, OracleConfig, OracleReport, Verdict};
use crate::witness::{assemble_witness, pinned_solve, verify_witness};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl PropertyResult {
    fn from_outcome(name: &'static str, outcome: Result<usize, String>) -> Self {
        match outcome {
            Ok(checked) => Self { name, passed: true, checked, failure: None },
            Err(e) => Self { name, passed: false, checked: 0, failure: Some(e) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SelftestReport {
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
}

/// Sizes of the selftest workload.
#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    pub samples_per_spec: usize,
    pub agreement_cases: usize,
    pub iterations: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self { seed: 2024, samples_per_spec: 20, agreement_cases: 24, iterations: 10_000 }
    }
}

pub fn run_selftest(cfg: &SelftestConfig) -> SelftestReport {
    let properties = vec![
        PropertyResult::from_outcome("scalar_invariance", scalar_invariance(cfg.samples_per_spec, cfg.seed)),
        PropertyResult::from_outcome("j_equals_jmix_at_zero", j_equals_jmix_at_zero(cfg.seed)),
        PropertyResult::from_outcome("serialization_round_trips", round_trips(cfg.seed)),
        PropertyResult::from_outcome("classifier_oracle_agreement", agreement_suite(cfg.agreement_cases, cfg.iterations, cfg.seed)),
        PropertyResult::from_outcome("forced_dimension_l5", forced_dimension_l5(10_000)),
    ];
    SelftestReport { passed: properties.iter().all(|p| p.passed), properties }
}

/// One block per palette eigenvalue and size `1..=max_size`.
pub fn palette_specs(max_size: usize) -> Vec<JordanFormSpec> {
    palette()
        .into_iter()
        .flat_map(|lambda| (1..=max_size).map(move |l| JordanFormSpec::single(lambda.clone(), l).expect("valid block")))
        .collect()
}

pub fn unit_scalars() -> Vec<ExactComplex> {
    vec![
        ExactComplex::Cartesian(GaussianRational::i()),
        ExactComplex::from_int(-1),
        ExactComplex::gaussian(rational(3, 5), rational(4, 5)),
    ]
}

fn check_inclusion(a: &SymbolicLimitSet, b: &SymbolicLimitSet, dim: usize, samples: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..samples {
        if let Some(y) = sample_member(a, rng) {
            if member_symbolic(b, &y).map_err(|e| e.to_string())? != Membership::Yes {
                return Err(format!("{y} lies in one set but not the other"));
            }
        }
        if let Some(y) = sample_non_member(a, dim, rng) {
            if member_symbolic(b, &y).map_err(|e| e.to_string())? != Membership::No {
                return Err(format!("{y} lies outside one set but not the other"));
            }
        }
    }
    Ok(())
}

/// `J(0)` of `μ·spec` against `J(0)` of `spec`, sampled both ways.
pub fn scalar_invariance(samples: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = palette_specs(4);
    specs.extend((0..8).map(|_| random_spec(&mut rng, 3, 3)));
    let mut checked = 0;
    for spec in &specs {
        let zero = ExactVector::zeros(spec.dimension());
        let base = classify(spec, &zero, LimitSetKind::J).map_err(|e| e.to_string())?;
        for mu in unit_scalars() {
            let scaled = spec.scaled(&mu).map_err(|e| e.to_string())?;
            let other = classify(&scaled, &zero, LimitSetKind::J).map_err(|e| e.to_string())?;
            check_inclusion(&base, &other, spec.dimension(), samples, &mut rng)?;
            check_inclusion(&other, &base, spec.dimension(), samples, &mut rng)?;
            checked += 1;
        }
    }
    Ok(checked)
}

pub fn j_equals_jmix_at_zero(seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = palette_specs(6);
    specs.extend((0..20).map(|_| random_spec(&mut rng, 3, 4)));
    for spec in &specs {
        let zero = ExactVector::zeros(spec.dimension());
        let j = classify(spec, &zero, LimitSetKind::J).map_err(|e| e.to_string())?;
        let jmix = classify(spec, &zero, LimitSetKind::Jmix).map_err(|e| e.to_string())?;
        if j != jmix {
            return Err(format!("J(0) and Jmix(0) differ for {}", serde_json::to_string(spec).unwrap_or_default()));
        }
    }
    Ok(specs.len())
}

fn round_trip<T>(value: &T) -> Result<(), String>
where
    T: Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let text = serde_json::to_string(value).map_err(|e| e.to_string())?;
    let back: T = serde_json::from_str(&text).map_err(|e| format!("{e} in {text}"))?;
    if &back != value {
        return Err(format!("round trip changed {text}"));
    }
    Ok(())
}

pub fn round_trips(seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..100 {
        let spec = random_spec(&mut rng, 3, 4);
        let x = random_vector(spec.dimension(), &mut rng);
        round_trip(&spec)?;
        round_trip(&x)?;
        for which in [LimitSetKind::L, LimitSetKind::J] {
            round_trip(&classify(&spec, &x, which).map_err(|e| e.to_string())?)?;
        }
        checked += 1;
    }
    let polar = ExactComplex::root_of_unity(7, 360).map_err(|e| e.to_string())?;
    round_trip(&polar)?;
    Ok(checked + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    /// Member of a set with a circle factor whose witness search ran out of
    /// budget while the oracle stayed inconclusive.
    SlowCircle,
    Contradiction(String),
}

/// Compares the symbolic answer for `y ∈ J(x)` with the oracle and, for
/// members the scan cannot confirm, a verified witness.
pub fn agreement_case(spec: &JordanFormSpec, x: &ExactVector, y: &ExactVector, iterations: u64) -> Result<(Agreement, OracleReport)> {
    let set = classify(spec, x, LimitSetKind::J)?;
    let symbolic = member_symbolic(&set, y)?;
    let cfg = OracleConfig { max_iterations: iterations, ..OracleConfig::default() };
    let report = pullback_scan(spec, x, y, &cfg)?;
    let exact = set.exactness() == Exactness::Exact;
    let outcome = match (symbolic, report.verdict) {
        (Membership::No, Verdict::EvidenceYes) if exact => Agreement::Contradiction("scan confirms a non-member".into()),
        (Membership::Yes, Verdict::EvidenceNo) => Agreement::Contradiction("structural floor rules out a member".into()),
        (Membership::Yes, Verdict::EvidenceYes) => Agreement::Agree,
        (Membership::Yes, _) => match assemble_witness(spec, x, y, iterations).and_then(|w| verify_witness(&w, iterations, cfg.tolerance)) {
            Ok(r) if r.passed => Agreement::Agree,
            Ok(_) => Agreement::Contradiction("witness failed verification".into()),
            Err(Error::SearchExhausted { .. }) => Agreement::SlowCircle,
            Err(e) => Agreement::Contradiction(format!("witness construction failed: {e}")),
        },
        _ => Agreement::Agree,
    };
    Ok((outcome, report))
}

/// A random case: admissible `x`, and `y` a member, a non-member or noise.
pub fn random_case(rng: &mut ChaCha8Rng, max_blocks: usize, max_size: usize) -> Result<(JordanFormSpec, ExactVector, ExactVector)> {
    let spec = random_spec(rng, max_blocks, max_size);
    let x = admissible_x(&spec, rng);
    let set = classify(&spec, &x, LimitSetKind::J)?;
    let n = spec.dimension();
    let y = match rng.gen_range(0..3) {
        0 => sample_member(&set, rng),
        1 => sample_non_member(&set, n, rng),
        _ => None,
    }
    .unwrap_or_else(|| random_vector(n, rng));
    Ok((spec, x, y))
}

pub fn agreement_suite(cases: usize, iterations: u64, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let (spec, x, y) = random_case(&mut rng, 2, 3).map_err(|e| e.to_string())?;
        match agreement_case(&spec, &x, &y, iterations).map_err(|e| e.to_string())?.0 {
            Agreement::Contradiction(why) => {
                return Err(format!("{why}: spec {}, x {x}, y {y}", serde_json::to_string(&spec).unwrap_or_default()))
            }
            Agreement::Agree | Agreement::SlowCircle => {}
        }
    }
    Ok(cases)
}

/// `max |x_n|` after solving a unit block of size `l` with `m` pinned target
/// coordinates at power `k`, starting from `x = 0`.
pub fn pinned_residual(l: usize, m: usize, y: &ExactVector, k: u64) -> Result<f64> {
    let zero = vec![GaussianRational::zero(); l];
    let xn = pinned_solve(&ExactComplex::one(), l, k, m, &zero, &y.0, &())?;
    Ok(xn.iter().map(|g| g.norm_sqr().to_f64().unwrap_or(f64::INFINITY)).fold(0.0, f64::max).sqrt())
}

/// Size 5 has two free coordinates: the classification says so, two pinned
/// coordinates converge and three do not.
pub fn forced_dimension_l5(k_max: u64) -> Result<usize, String> {
    let spec = JordanFormSpec::single(ExactComplex::one(), 5).map_err(|e| e.to_string())?;
    let set = classify(&spec, &ExactVector::zeros(5), LimitSetKind::J).map_err(|e| e.to_string())?;
    let free = set.as_product().map_or(0, |p| p.free_dimension());
    if free != 2 {
        return Err(format!("J(0) has {free} free coordinates"));
    }
    let two = pinned_residual(5, 2, &ExactVector::from_ints(&[1, 1, 0, 0, 0]), k_max).map_err(|e| e.to_string())?;
    if two >= 1e-3 {
        return Err(format!("two pinned coordinates leave residual {two}"));
    }
    let y3 = ExactVector::from_ints(&[1, 1, 1, 0, 0]);
    let mut k = 10;
    while k <= k_max {
        let three = pinned_residual(5, 3, &y3, k).map_err(|e| e.to_string())?;
        if three < 0.1 {
            return Err(format!("three pinned coordinates converge at k = {k}"));
        }
        k *= 10;
    }
    Ok(1)
}

/// Whether any block has an odd size and unit modulus.
pub fn has_odd_unit_block(spec: &JordanFormSpec) -> bool {
    spec.blocks().iter().any(|b| b.size % 2 == 1 && b.size > 1 && b.modulus_class() == ModulusClass::EqualOne)
}
