//! Symbolic limit sets.
//!
//! A nonempty set is a coordinatewise product in Jordan coordinates. Each
//! coordinate is the full line, the origin, or a rotation coordinate `c·λ^n`
//! where the exponent `n` is shared by every rotation coordinate of the set.
//! That coupling lives in a [`RotationGroup`].

pub mod cyclic;
mod describe;
pub mod sample;
mod serial;

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ExactComplex, GaussianRational, ModulusClass};
use crate::jordan::{ExactVector, JordanFormSpec, SimilaritySpec};
use cyclic::{discrete_log, Residue};

pub use describe::describe;

/// Which set to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimitSetKind {
    L,
    J,
    Jmix,
}

impl FromStr for LimitSetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(Self::L),
            "J" | "j" => Ok(Self::J),
            "Jmix" | "jmix" | "JMIX" => Ok(Self::Jmix),
            other => Err(Error::InvalidInput(format!("unknown set {other:?}, expected L, J or Jmix"))),
        }
    }
}

impl fmt::Display for LimitSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::L => "L",
            Self::J => "J",
            Self::Jmix => "Jmix",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    OuterApprox,
}

impl Exactness {
    pub fn weakest(self, o: Self) -> Self {
        if self == Self::OuterApprox || o == Self::OuterApprox {
            Self::OuterApprox
        } else {
            Self::Exact
        }
    }
}

/// Closure of `{λ^n : n ≥ 1}` for a unit-modulus `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitClosure {
    FiniteCyclic { order: u64, generator: ExactComplex },
    FullCircle { generator: ExactComplex },
}

impl OrbitClosure {
    /// `λ^1, …, λ^d` for finite closures.
    pub fn elements(&self) -> Option<Vec<ExactComplex>> {
        match self {
            Self::FiniteCyclic { order, generator } => {
                Some((1..=*order).map(|n| generator.pow(n as i64).expect("unit modulus")).collect())
            }
            Self::FullCircle { .. } => None,
        }
    }
}

pub fn closure_d(lambda: &ExactComplex) -> Result<OrbitClosure> {
    Ok(match lambda.root_of_unity_order()? {
        Some(order) => OrbitClosure::FiniteCyclic { order, generator: lambda.clone() },
        None => OrbitClosure::FullCircle { generator: lambda.clone() },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberRole {
    /// Root of unity of the given order.
    Cyclic { order: u64 },
    /// Infinite order. Members of one class move together as `μ`, or as `μ̄`
    /// when `conjugate` is set.
    Circle { class: usize, conjugate: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMember {
    pub block: usize,
    pub eigenvalue: ExactComplex,
    pub role: MemberRole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupClosure {
    /// Exactly `{(λ_1^n, …, λ_m^n) : 1 ≤ n ≤ period}`.
    FiniteCyclicTuples { period: u64 },
    /// One free circle parameter times the finite tuples of the cyclic members.
    SharedCircleWithFinite { period: u64 },
    /// Independent circles per class; a superset of the true closure. Pairs
    /// are indices into `members` of class representatives.
    FullTorusOuterApprox { period: u64, undecided: Vec<(usize, usize)> },
}

/// Joint closure of `{(λ_1^n, …, λ_m^n)}` over a shared exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationGroup {
    pub id: String,
    pub members: Vec<GroupMember>,
    pub closure: GroupClosure,
}

impl RotationGroup {
    pub fn exactness(&self) -> Exactness {
        match self.closure {
            GroupClosure::FullTorusOuterApprox { .. } => Exactness::OuterApprox,
            _ => Exactness::Exact,
        }
    }

    /// Period of the cyclic part (1 when there is none).
    pub fn period(&self) -> u64 {
        match &self.closure {
            GroupClosure::FiniteCyclicTuples { period }
            | GroupClosure::SharedCircleWithFinite { period }
            | GroupClosure::FullTorusOuterApprox { period, .. } => *period,
        }
    }

    pub fn circle_classes(&self) -> usize {
        self.members
            .iter()
            .filter_map(|m| match m.role {
                MemberRole::Circle { class, .. } => Some(class + 1),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Values of the cyclic members at exponent `n`.
    pub fn cyclic_tuple(&self, n: u64) -> Vec<ExactComplex> {
        self.members
            .iter()
            .filter(|m| matches!(m.role, MemberRole::Cyclic { .. }))
            .map(|m| m.eigenvalue.pow(n as i64).expect("unit modulus"))
            .collect()
    }

    pub fn undecided_pairs(&self) -> Vec<(&ExactComplex, &ExactComplex)> {
        match &self.closure {
            GroupClosure::FullTorusOuterApprox { undecided, .. } => undecided
                .iter()
                .map(|&(a, b)| (&self.members[a].eigenvalue, &self.members[b].eigenvalue))
                .collect(),
            _ => Vec::new(),
        }
    }
}

/// Builds the rotation group for `(block, λ)` pairs of unit modulus.
pub fn joint_closure(unit_eigs: &[(usize, ExactComplex)]) -> Result<RotationGroup> {
    let mut members = Vec::with_capacity(unit_eigs.len());
    let mut reps: Vec<(usize, ExactComplex)> = Vec::new();
    let mut period = Residue::ANY;
    for (block, lambda) in unit_eigs {
        let role = match lambda.root_of_unity_order()? {
            Some(order) => {
                period = period
                    .intersect(&Residue::new(0, order))?
                    .expect("zero residues always meet");
                MemberRole::Cyclic { order }
            }
            None => {
                let found = reps.iter().position(|(_, r)| r.exact_eq(lambda)).map(|c| (c, false)).or_else(|| {
                    reps.iter()
                        .position(|(_, r)| r.checked_mul(lambda).map(|p| p.exact_eq(&ExactComplex::one())).unwrap_or(false))
                        .map(|c| (c, true))
                });
                let (class, conjugate) = found.unwrap_or_else(|| {
                    reps.push((members.len(), lambda.clone()));
                    (reps.len() - 1, false)
                });
                MemberRole::Circle { class, conjugate }
            }
        };
        members.push(GroupMember { block: *block, eigenvalue: lambda.clone(), role });
    }
    let period = period.modulus;
    let closure = match reps.len() {
        0 => GroupClosure::FiniteCyclicTuples { period },
        1 => GroupClosure::SharedCircleWithFinite { period },
        _ => {
            let mut undecided = Vec::new();
            for a in 0..reps.len() {
                for b in a + 1..reps.len() {
                    undecided.push((reps[a].0, reps[b].0));
                }
            }
            GroupClosure::FullTorusOuterApprox { period, undecided }
        }
    };
    Ok(RotationGroup { id: "g0".into(), members, closure })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordinateFactor {
    Full,
    Zero,
    /// `coeff·λ_member^n` with `n` shared across the group `param`.
    Rotation { param: String, member: usize, coeff: GaussianRational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSet {
    pub factors: Vec<CoordinateFactor>,
    pub groups: Vec<RotationGroup>,
    pub exactness: Exactness,
    /// Present when the set lives in Jordan coordinates of `B = P·J·P⁻¹`;
    /// the denoted set is then `P·(product)`.
    pub basis: Option<SimilaritySpec>,
}

impl ProductSet {
    pub fn free_dimension(&self) -> usize {
        self.factors.iter().filter(|f| matches!(f, CoordinateFactor::Full)).count()
    }

    pub fn group(&self, id: &str) -> Option<&RotationGroup> {
        self.groups.iter().find(|g| g.id == id)
    }

    /// Maps a point of the ambient space into the coordinates of the factors.
    pub fn to_factor_coords(&self, y: &ExactVector) -> Result<ExactVector> {
        if y.len() != self.factors.len() {
            return Err(Error::DimensionMismatch { expected: self.factors.len(), found: y.len() });
        }
        match &self.basis {
            Some(sim) => crate::jordan::conjugate_vector(sim, y, crate::jordan::Direction::Backward),
            None => Ok(y.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicLimitSet {
    Empty,
    Product(ProductSet),
}

impl SymbolicLimitSet {
    pub fn zero(n: usize) -> Self {
        Self::from_factors(vec![CoordinateFactor::Zero; n], Vec::new())
    }

    fn from_factors(factors: Vec<CoordinateFactor>, groups: Vec<RotationGroup>) -> Self {
        let exactness = groups.iter().fold(Exactness::Exact, |e, g| e.weakest(g.exactness()));
        Self::Product(ProductSet { factors, groups, exactness, basis: None })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Self::Empty)
    }

    pub fn exactness(&self) -> Exactness {
        match self {
            Self::Empty => Exactness::Exact,
            Self::Product(p) => p.exactness,
        }
    }

    pub fn as_product(&self) -> Option<&ProductSet> {
        match self {
            Self::Empty => None,
            Self::Product(p) => Some(p),
        }
    }

    pub fn with_basis(self, basis: Option<SimilaritySpec>) -> Self {
        match self {
            Self::Empty => Self::Empty,
            Self::Product(mut p) => {
                p.basis = basis;
                Self::Product(p)
            }
        }
    }
}

enum Local {
    Full,
    Zero,
    Rotation(GaussianRational),
}

fn block_set(lambda: &ExactComplex, local: Vec<Local>) -> Result<SymbolicLimitSet> {
    let mut groups = Vec::new();
    let factors = local
        .into_iter()
        .map(|f| match f {
            Local::Full => Ok(CoordinateFactor::Full),
            Local::Zero => Ok(CoordinateFactor::Zero),
            Local::Rotation(c) if c.is_zero() => Ok(CoordinateFactor::Zero),
            Local::Rotation(coeff) => {
                groups.push(joint_closure(&[(0, lambda.clone())])?);
                Ok(CoordinateFactor::Rotation { param: "g0".into(), member: 0, coeff })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolicLimitSet::from_factors(factors, groups))
}

fn check_block(l: usize, x: &[GaussianRational]) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidInput("block size must be positive".into()));
    }
    if x.len() != l {
        return Err(Error::DimensionMismatch { expected: l, found: x.len() });
    }
    Ok(())
}

fn all_zero(x: &[GaussianRational]) -> bool {
    x.iter().all(GaussianRational::is_zero)
}

pub fn classify_l_block(lambda: &ExactComplex, l: usize, x: &[GaussianRational]) -> Result<SymbolicLimitSet> {
    check_block(l, x)?;
    match lambda.modulus_class() {
        ModulusClass::LessThanOne => Ok(SymbolicLimitSet::zero(l)),
        ModulusClass::GreaterThanOne => Ok(if all_zero(x) { SymbolicLimitSet::zero(l) } else { SymbolicLimitSet::Empty }),
        ModulusClass::EqualOne => {
            if !all_zero(&x[1..]) {
                return Ok(SymbolicLimitSet::Empty);
            }
            let mut local = vec![Local::Rotation(x[0].clone())];
            local.extend((1..l).map(|_| Local::Zero));
            block_set(lambda, local)
        }
    }
}

pub fn classify_j_block(lambda: &ExactComplex, l: usize, x: &[GaussianRational]) -> Result<SymbolicLimitSet> {
    check_block(l, x)?;
    match lambda.modulus_class() {
        ModulusClass::LessThanOne => Ok(SymbolicLimitSet::zero(l)),
        ModulusClass::GreaterThanOne => Ok(if all_zero(x) {
            SymbolicLimitSet::from_factors(vec![CoordinateFactor::Full; l], Vec::new())
        } else {
            SymbolicLimitSet::Empty
        }),
        ModulusClass::EqualOne => {
            let pinned = l.div_ceil(2);
            if !all_zero(&x[pinned..]) {
                return Ok(SymbolicLimitSet::Empty);
            }
            let free = l / 2;
            let mut local: Vec<Local> = (0..free).map(|_| Local::Full).collect();
            if l % 2 == 1 {
                // The middle coordinate survives as (-1)^(r-1)·λ^k·x_r.
                let xr = &x[pinned - 1];
                local.push(Local::Rotation(if free % 2 == 0 { xr.clone() } else { -xr }));
            }
            local.extend((0..free).map(|_| Local::Zero));
            block_set(lambda, local)
        }
    }
}

/// `J^mix(0)`, which coincides with `J(0)` block by block.
pub fn classify_jmix_zero(spec: &JordanFormSpec) -> Result<SymbolicLimitSet> {
    classify(spec, &ExactVector::zeros(spec.dimension()), LimitSetKind::J)
}

/// Concatenates per-block sets, coupling every rotation coordinate through one
/// joint group.
pub fn assemble(per_block: &[SymbolicLimitSet]) -> Result<SymbolicLimitSet> {
    let mut factors = Vec::new();
    let mut eigs = Vec::new();
    let mut exactness = Exactness::Exact;
    for (b, set) in per_block.iter().enumerate() {
        let p = match set {
            SymbolicLimitSet::Empty => return Ok(SymbolicLimitSet::Empty),
            SymbolicLimitSet::Product(p) => p,
        };
        exactness = exactness.weakest(p.exactness);
        for f in &p.factors {
            factors.push(match f {
                CoordinateFactor::Rotation { param, member, coeff } => {
                    let g = p.group(param).ok_or_else(|| Error::InvalidInput(format!("unknown group {param}")))?;
                    eigs.push((b, g.members[*member].eigenvalue.clone()));
                    CoordinateFactor::Rotation { param: "g0".into(), member: eigs.len() - 1, coeff: coeff.clone() }
                }
                other => other.clone(),
            });
        }
    }
    let mut groups = Vec::new();
    if !eigs.is_empty() {
        let g = joint_closure(&eigs)?;
        exactness = exactness.weakest(g.exactness());
        groups.push(g);
    }
    Ok(SymbolicLimitSet::Product(ProductSet { factors, groups, exactness, basis: None }))
}

pub fn classify(spec: &JordanFormSpec, x: &ExactVector, which: LimitSetKind) -> Result<SymbolicLimitSet> {
    let xj = spec.to_jordan_coords(x)?;
    if which == LimitSetKind::Jmix && !xj.is_zero() {
        return Err(Error::UnsupportedJmixNonzero);
    }
    let per_block = spec
        .blocks()
        .iter()
        .zip(spec.block_ranges())
        .map(|(b, r)| match which {
            LimitSetKind::L => classify_l_block(&b.lambda, b.size, xj.slice(r)),
            LimitSetKind::J | LimitSetKind::Jmix => classify_j_block(&b.lambda, b.size, xj.slice(r)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(&per_block)?.with_basis(spec.similarity().cloned()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

/// How a point meets the rotation coordinates of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSolution {
    /// Exponents that realize the cyclic members.
    pub residue: Residue,
    /// Required `μ` per circle class.
    pub circle: Vec<GaussianRational>,
}

/// Solves the rotation coordinates of `group` against factor coordinates `y`.
/// `None` when no exponent and circle parameters fit.
pub fn solve_rotations(factors: &[CoordinateFactor], group: &RotationGroup, y: &ExactVector) -> Result<Option<GroupSolution>> {
    let mut residue = Residue::ANY;
    let mut circle: Vec<Option<GaussianRational>> = vec![None; group.circle_classes()];
    for (j, f) in factors.iter().enumerate() {
        let (member, coeff) = match f {
            CoordinateFactor::Rotation { param, member, coeff } if *param == group.id => (*member, coeff),
            _ => continue,
        };
        let ratio = y.0[j].checked_div(coeff).expect("rotation coefficients are nonzero");
        let m = &group.members[member];
        match m.role {
            MemberRole::Cyclic { .. } => {
                let Some(r) = discrete_log(&m.eigenvalue, &ExactComplex::Cartesian(ratio)) else {
                    return Ok(None);
                };
                match residue.intersect(&r)? {
                    Some(r) => residue = r,
                    None => return Ok(None),
                }
            }
            MemberRole::Circle { class, conjugate } => {
                if !ratio.norm_sqr().is_one() {
                    return Ok(None);
                }
                let mu = if conjugate { ratio.conj() } else { ratio };
                match &circle[class] {
                    Some(prev) if *prev != mu => return Ok(None),
                    Some(_) => {}
                    None => circle[class] = Some(mu),
                }
            }
        }
    }
    Ok(Some(GroupSolution { residue, circle: circle.into_iter().map(|c| c.expect("every class has a factor")).collect() }))
}

pub fn member_symbolic(set: &SymbolicLimitSet, y: &ExactVector) -> Result<Membership> {
    let p = match set {
        SymbolicLimitSet::Empty => return Ok(Membership::No),
        SymbolicLimitSet::Product(p) => p,
    };
    let y = p.to_factor_coords(y)?;
    for (f, v) in p.factors.iter().zip(&y.0) {
        if matches!(f, CoordinateFactor::Zero) && !v.is_zero() {
            return Ok(Membership::No);
        }
    }
    let mut answer = Membership::Yes;
    for g in &p.groups {
        if solve_rotations(&p.factors, g, &y)?.is_none() {
            return Ok(Membership::No);
        }
        if g.exactness() == Exactness::OuterApprox {
            answer = Membership::Unknown;
        }
    }
    Ok(answer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rational;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn i() -> ExactComplex {
        ExactComplex::Cartesian(GaussianRational::i())
    }

    fn pyth() -> ExactComplex {
        ExactComplex::gaussian(rational(3, 5), rational(4, 5))
    }

    fn kinds(set: &SymbolicLimitSet) -> String {
        set.as_product()
            .map(|p| {
                p.factors
                    .iter()
                    .map(|f| match f {
                        CoordinateFactor::Full => 'C',
                        CoordinateFactor::Zero => '0',
                        CoordinateFactor::Rotation { .. } => 'R',
                    })
                    .collect()
            })
            .unwrap_or_else(|| "empty".into())
    }

    #[test]
    fn closures() {
        assert_eq!(closure_d(&i()).unwrap().elements().unwrap().len(), 4);
        let w = ExactComplex::root_of_unity(1, 3).unwrap();
        assert!(matches!(closure_d(&w).unwrap(), OrbitClosure::FiniteCyclic { order: 3, .. }));
        assert!(matches!(closure_d(&pyth()).unwrap(), OrbitClosure::FullCircle { .. }));
        assert!(closure_d(&ExactComplex::from_int(2)).is_err());
    }

    #[test]
    fn l_blocks() {
        let s = classify_l_block(&i(), 2, &[g(3), g(0)]).unwrap();
        assert_eq!(kinds(&s), "R0");
        for (y, want) in [((0, 3), Membership::Yes), ((-3, 0), Membership::Yes), ((3, 3), Membership::No)] {
            let v = ExactVector(vec![GaussianRational::new(rational(y.0, 1), rational(y.1, 1)), g(0)]);
            assert_eq!(member_symbolic(&s, &v).unwrap(), want);
        }
        assert!(classify_l_block(&ExactComplex::from_int(2), 1, &[g(1)]).unwrap().is_empty());
        assert_eq!(kinds(&classify_l_block(&ExactComplex::real(rational(1, 2)), 3, &[g(1), g(2), g(3)]).unwrap()), "000");
        assert!(classify_l_block(&i(), 2, &[g(3), g(1)]).unwrap().is_empty());
    }

    #[test]
    fn j_blocks() {
        let one = ExactComplex::one();
        assert_eq!(kinds(&classify_j_block(&one, 4, &vec![g(0); 4]).unwrap()), "CC00");
        assert_eq!(kinds(&classify_j_block(&one, 3, &vec![g(0); 3]).unwrap()), "C00");
        assert!(classify_j_block(&ExactComplex::from_int(2), 3, &[g(1), g(0), g(0)]).unwrap().is_empty());
        let s = classify_j_block(&i(), 3, &[g(5), g(2), g(0)]).unwrap();
        assert_eq!(kinds(&s), "CR0");
        for (re, im, want) in [(0, 2, Membership::Yes), (-2, 0, Membership::Yes), (2, 0, Membership::Yes), (1, 0, Membership::No)] {
            let v = ExactVector(vec![g(17), GaussianRational::new(rational(re, 1), rational(im, 1)), g(0)]);
            assert_eq!(member_symbolic(&s, &v).unwrap(), want);
        }
        for l in 1..=6 {
            let s = classify_j_block(&one, l, &vec![g(0); l]).unwrap();
            assert_eq!(s.as_product().unwrap().free_dimension(), l / 2);
        }
    }

    #[test]
    fn odd_block_coefficient_sign() {
        let one = ExactComplex::one();
        let s = classify_j_block(&one, 3, &[g(0), g(1), g(0)]).unwrap();
        let p = s.as_product().unwrap();
        assert_eq!(p.factors[1], CoordinateFactor::Rotation { param: "g0".into(), member: 0, coeff: g(-1) });
        let s = classify_j_block(&one, 5, &[g(0), g(0), g(1), g(0), g(0)]).unwrap();
        assert!(matches!(&s.as_product().unwrap().factors[2], CoordinateFactor::Rotation { coeff, .. } if *coeff == g(1)));
    }

    #[test]
    fn joint_groups() {
        let minus_one = ExactComplex::from_int(-1);
        let grp = joint_closure(&[(0, i()), (1, minus_one)]).unwrap();
        assert_eq!(grp.closure, GroupClosure::FiniteCyclicTuples { period: 4 });
        assert_eq!(grp.cyclic_tuple(1), vec![i(), ExactComplex::from_int(-1)]);
        assert_eq!(grp.cyclic_tuple(4), vec![ExactComplex::one(), ExactComplex::one()]);
        let same = joint_closure(&[(0, pyth()), (1, pyth())]).unwrap();
        assert_eq!(same.closure, GroupClosure::SharedCircleWithFinite { period: 1 });
        let conj = joint_closure(&[(0, pyth()), (1, pyth().conj())]).unwrap();
        assert_eq!(conj.members[1].role, MemberRole::Circle { class: 0, conjugate: true });
        let other = ExactComplex::gaussian(rational(5, 13), rational(12, 13));
        let torus = joint_closure(&[(0, pyth()), (1, other)]).unwrap();
        assert_eq!(torus.exactness(), Exactness::OuterApprox);
        assert_eq!(torus.undecided_pairs().len(), 1);
    }

    #[test]
    fn assembly() {
        let half = ExactComplex::real(rational(1, 2));
        let spec = JordanFormSpec::new(
            vec![
                crate::jordan::JordanBlockSpec::new(i(), 1),
                crate::jordan::JordanBlockSpec::new(half, 1),
            ],
            None,
        )
        .unwrap();
        let s = classify(&spec, &ExactVector::from_ints(&[1, 9]), LimitSetKind::J).unwrap();
        assert_eq!(kinds(&s), "R0");
        assert_eq!(member_symbolic(&s, &ExactVector::from_ints(&[-1, 0])).unwrap(), Membership::Yes);
        assert_eq!(member_symbolic(&s, &ExactVector::from_ints(&[-1, 1])).unwrap(), Membership::No);
        let two = JordanFormSpec::new(
            vec![
                crate::jordan::JordanBlockSpec::new(ExactComplex::from_int(2), 1),
                crate::jordan::JordanBlockSpec::new(i(), 1),
            ],
            None,
        )
        .unwrap();
        assert!(classify(&two, &ExactVector::from_ints(&[1, 0]), LimitSetKind::J).unwrap().is_empty());
        assert_eq!(
            classify(&two, &ExactVector::from_ints(&[1, 0]), LimitSetKind::Jmix),
            Err(Error::UnsupportedJmixNonzero)
        );
    }

    #[test]
    fn coupled_cyclic_membership() {
        let spec = JordanFormSpec::new(
            vec![
                crate::jordan::JordanBlockSpec::new(i(), 1),
                crate::jordan::JordanBlockSpec::new(ExactComplex::from_int(-1), 1),
            ],
            None,
        )
        .unwrap();
        let s = classify(&spec, &ExactVector::from_ints(&[1, 1]), LimitSetKind::L).unwrap();
        let yes = ExactVector(vec![GaussianRational::i(), g(-1)]);
        let no = ExactVector(vec![GaussianRational::i(), g(1)]);
        assert_eq!(member_symbolic(&s, &yes).unwrap(), Membership::Yes);
        assert_eq!(member_symbolic(&s, &no).unwrap(), Membership::No);
    }

    #[test]
    fn circle_membership() {
        let spec = JordanFormSpec::new(
            vec![
                crate::jordan::JordanBlockSpec::new(pyth(), 1),
                crate::jordan::JordanBlockSpec::new(pyth().conj(), 1),
            ],
            None,
        )
        .unwrap();
        let s = classify(&spec, &ExactVector::from_ints(&[2, 1]), LimitSetKind::L).unwrap();
        assert_eq!(s.exactness(), Exactness::Exact);
        let mu = GaussianRational::new(rational(5, 13), rational(12, 13));
        let yes = ExactVector(vec![&mu * &g(2), mu.conj()]);
        let no = ExactVector(vec![&mu * &g(2), mu.clone()]);
        assert_eq!(member_symbolic(&s, &yes).unwrap(), Membership::Yes);
        assert_eq!(member_symbolic(&s, &no).unwrap(), Membership::No);
        assert_eq!(member_symbolic(&s, &ExactVector::from_ints(&[1, 1])).unwrap(), Membership::No);
        let other = ExactComplex::gaussian(rational(5, 13), rational(12, 13));
        let torus = JordanFormSpec::new(
            vec![
                crate::jordan::JordanBlockSpec::new(pyth(), 1),
                crate::jordan::JordanBlockSpec::new(other, 1),
            ],
            None,
        )
        .unwrap();
        let s = classify(&torus, &ExactVector::from_ints(&[1, 1]), LimitSetKind::L).unwrap();
        assert_eq!(member_symbolic(&s, &ExactVector::from_ints(&[-1, 1])).unwrap(), Membership::Unknown);
        assert_eq!(member_symbolic(&s, &ExactVector::from_ints(&[2, 1])).unwrap(), Membership::No);
    }
}
