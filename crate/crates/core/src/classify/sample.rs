//! Random specs, vectors and points on either side of a symbolic set.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{CoordinateFactor, MemberRole, SymbolicLimitSet};
use crate::exact::rational::rational;
use crate::exact::{ExactComplex, GaussianRational, ModulusClass};
use crate::jordan::{conjugate_vector, Direction, ExactVector, JordanBlockSpec, JordanFormSpec};

/// Eigenvalues covering every modulus class, finite rotations and one
/// rotation of infinite order.
pub fn palette() -> Vec<ExactComplex> {
    vec![
        ExactComplex::real(rational(1, 2)),
        ExactComplex::from_int(2),
        ExactComplex::one(),
        ExactComplex::from_int(-1),
        ExactComplex::Cartesian(GaussianRational::i()),
        ExactComplex::gaussian(rational(3, 5), rational(4, 5)),
    ]
}

/// Entry with real and imaginary parts `a/q`, `|a/q| ≤ 1/2`.
pub fn small_gaussian<R: Rng>(rng: &mut R) -> GaussianRational {
    let mut part = || {
        let q = rng.gen_range(1..=8i64);
        rational(rng.gen_range(-q / 2..=q / 2), q)
    };
    GaussianRational::new(part(), part())
}

pub fn nonzero_small_gaussian<R: Rng>(rng: &mut R) -> GaussianRational {
    loop {
        let g = small_gaussian(rng);
        if !g.is_zero() {
            return g;
        }
    }
}

pub fn random_vector<R: Rng>(n: usize, rng: &mut R) -> ExactVector {
    ExactVector((0..n).map(|_| small_gaussian(rng)).collect())
}

/// A unit Gaussian rational `(m²-n² + 2mni)/(m²+n²)`, rotated by a random
/// fourth root of unity.
pub fn pythagorean_unit<R: Rng>(rng: &mut R) -> GaussianRational {
    let m = rng.gen_range(2..=7i64);
    let n = rng.gen_range(1..m);
    let d = m * m + n * n;
    let mut u = GaussianRational::new(rational(m * m - n * n, d), rational(2 * m * n, d));
    for _ in 0..rng.gen_range(0..4) {
        u = &u * &GaussianRational::i();
    }
    if rng.gen_bool(0.5) {
        u.conj()
    } else {
        u
    }
}

pub fn random_spec<R: Rng>(rng: &mut R, max_blocks: usize, max_size: usize) -> JordanFormSpec {
    let pal = palette();
    let blocks = (0..rng.gen_range(1..=max_blocks))
        .map(|_| JordanBlockSpec::new(pal.choose(rng).expect("palette").clone(), rng.gen_range(1..=max_size)))
        .collect();
    JordanFormSpec::new(blocks, None).expect("nonempty blocks")
}

/// A vector in Jordan coordinates whose `J` set is nonempty: leading halves of
/// unit blocks, zero on expanding blocks, anything on contracting blocks.
pub fn admissible_x<R: Rng>(spec: &JordanFormSpec, rng: &mut R) -> ExactVector {
    let mut out = Vec::with_capacity(spec.dimension());
    for b in spec.blocks() {
        for j in 0..b.size {
            out.push(match b.modulus_class() {
                ModulusClass::LessThanOne => small_gaussian(rng),
                ModulusClass::GreaterThanOne => GaussianRational::zero(),
                ModulusClass::EqualOne if j < b.size.div_ceil(2) => small_gaussian(rng),
                ModulusClass::EqualOne => GaussianRational::zero(),
            });
        }
    }
    ExactVector(out)
}

/// A point of the set (for outer approximations, a point of the superset).
pub fn sample_member<R: Rng>(set: &SymbolicLimitSet, rng: &mut R) -> Option<ExactVector> {
    let p = set.as_product()?;
    let mut values: Vec<Option<GaussianRational>> = vec![None; p.factors.len()];
    for g in &p.groups {
        let mut n = g.period();
        for _ in 0..32 {
            let t = rng.gen_range(1..=g.period());
            if g.cyclic_tuple(t).iter().all(|v| v.to_gaussian().is_some()) {
                n = t;
                break;
            }
        }
        let mus: Vec<GaussianRational> = (0..g.circle_classes()).map(|_| pythagorean_unit(rng)).collect();
        for (j, f) in p.factors.iter().enumerate() {
            let CoordinateFactor::Rotation { param, member, coeff } = f else { continue };
            if *param != g.id {
                continue;
            }
            let m = &g.members[*member];
            let rot = match m.role {
                MemberRole::Cyclic { .. } => m.eigenvalue.pow(n as i64).ok()?.to_gaussian()?,
                MemberRole::Circle { class, conjugate } => {
                    if conjugate {
                        mus[class].conj()
                    } else {
                        mus[class].clone()
                    }
                }
            };
            values[j] = Some(coeff * &rot);
        }
    }
    let y = ExactVector(
        p.factors
            .iter()
            .zip(values)
            .map(|(f, v)| match f {
                CoordinateFactor::Full => small_gaussian(rng),
                CoordinateFactor::Zero => GaussianRational::zero(),
                CoordinateFactor::Rotation { .. } => v.expect("every rotation factor has a group"),
            })
            .collect(),
    );
    match &p.basis {
        Some(sim) => conjugate_vector(sim, &y, Direction::Forward).ok(),
        None => Some(y),
    }
}

/// A point outside the set, made by breaking one constrained coordinate of a
/// member. `None` when every coordinate is free.
pub fn sample_non_member<R: Rng>(set: &SymbolicLimitSet, dim: usize, rng: &mut R) -> Option<ExactVector> {
    let Some(p) = set.as_product() else {
        return Some(random_vector(dim, rng));
    };
    let constrained: Vec<usize> =
        (0..p.factors.len()).filter(|&j| !matches!(p.factors[j], CoordinateFactor::Full)).collect();
    let &j = constrained.choose(rng)?;
    let member = sample_member(set, rng)?;
    let mut y = match &p.basis {
        Some(sim) => conjugate_vector(sim, &member, Direction::Backward).ok()?,
        None => member,
    };
    y.0[j] = match &p.factors[j] {
        CoordinateFactor::Zero => nonzero_small_gaussian(rng),
        _ => y.0[j].scale(&rational(2, 1)),
    };
    match &p.basis {
        Some(sim) => conjugate_vector(sim, &y, Direction::Forward).ok(),
        None => Some(y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, member_symbolic, LimitSetKind, Membership};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_land_on_the_right_side() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let spec = random_spec(&mut rng, 3, 4);
            let x = admissible_x(&spec, &mut rng);
            for which in [LimitSetKind::L, LimitSetKind::J] {
                let set = classify(&spec, &x, which).unwrap();
                if let Some(y) = sample_member(&set, &mut rng) {
                    assert_ne!(member_symbolic(&set, &y).unwrap(), Membership::No);
                }
                if let Some(y) = sample_non_member(&set, spec.dimension(), &mut rng) {
                    assert_eq!(member_symbolic(&set, &y).unwrap(), Membership::No);
                }
            }
            assert!(!classify(&spec, &x, LimitSetKind::J).unwrap().is_empty());
        }
    }
}
