//! Residue arithmetic for roots of unity: angles, discrete logarithms and
//! intersection of residue classes.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{ExactComplex, GaussianRational, ModulusClass};

/// Residue class `n ≡ residue (mod modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residue {
    pub residue: u64,
    pub modulus: u64,
}

impl Residue {
    pub const ANY: Residue = Residue { residue: 0, modulus: 1 };

    pub fn new(residue: u64, modulus: u64) -> Self {
        Self { residue: residue % modulus, modulus }
    }

    pub fn contains(&self, n: u64) -> bool {
        n % self.modulus == self.residue
    }

    /// Intersection of two classes; `Ok(None)` when they are disjoint.
    pub fn intersect(&self, o: &Residue) -> Result<Option<Residue>> {
        let (m1, m2) = (self.modulus as i128, o.modulus as i128);
        let (r1, r2) = (self.residue as i128, o.residue as i128);
        let g = m1.gcd(&m2);
        if (r2 - r1) % g != 0 {
            return Ok(None);
        }
        let l = m1 / g * m2;
        if l > u64::MAX as i128 / 4 {
            return Err(Error::InvalidInput("combined rotation period is too large".into()));
        }
        let m2g = m2 / g;
        let inv = mod_inverse((m1 / g).rem_euclid(m2g), m2g);
        let t = ((r2 - r1) / g).rem_euclid(m2g) * inv % m2g.max(1);
        let r = (r1 + m1 * t).rem_euclid(l);
        Ok(Some(Residue::new(r as u64, l as u64)))
    }

    /// Smallest member `≥ floor`.
    pub fn first_at_least(&self, floor: u64) -> u64 {
        let base = floor - floor % self.modulus + self.residue;
        if base >= floor {
            base
        } else {
            base + self.modulus
        }
    }
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    if m == 1 {
        return 0;
    }
    let e = a.extended_gcd(&m);
    e.x.rem_euclid(m)
}

/// Angle `s/t` of turns for a root of unity, in lowest terms with `0 ≤ s < t`.
pub fn unit_angle(z: &ExactComplex) -> Option<(u64, u64)> {
    if z.modulus_class() != ModulusClass::EqualOne {
        return None;
    }
    match z {
        ExactComplex::Polar(p) => Some((p.angle_num(), p.angle_den())),
        ExactComplex::Cartesian(g) => gaussian_unit_angle(g),
    }
}

fn gaussian_unit_angle(g: &GaussianRational) -> Option<(u64, u64)> {
    let one = GaussianRational::one();
    let i = GaussianRational::i();
    if *g == one {
        Some((0, 1))
    } else if *g == i {
        Some((1, 4))
    } else if *g == -one {
        Some((1, 2))
    } else if *g == -i {
        Some((3, 4))
    } else {
        None
    }
}

/// The residue class of exponents `n` with `λ^n = ρ`, for a root of unity `λ`.
/// `None` when `ρ` is not a power of `λ`.
pub fn discrete_log(lambda: &ExactComplex, rho: &ExactComplex) -> Option<Residue> {
    let (p, q) = unit_angle(lambda)?;
    let (s, t) = unit_angle(rho)?;
    // n·p/q ≡ s/t (mod 1)  ⇔  n·p ≡ s·q/t (mod q)
    let sq = s as u128 * q as u128;
    if sq % t as u128 != 0 {
        return None;
    }
    let v = (sq / t as u128) as i128;
    let inv = mod_inverse(p as i128, q as i128);
    Some(Residue::new((v * inv).rem_euclid(q as i128) as u64, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rational;

    #[test]
    fn residues_intersect() {
        let a = Residue::new(2, 4);
        let b = Residue::new(1, 3);
        let c = a.intersect(&b).unwrap().unwrap();
        assert_eq!(c, Residue::new(10, 12));
        assert!(Residue::new(1, 2).intersect(&Residue::new(0, 4)).unwrap().is_none());
        assert_eq!(Residue::new(1, 2).intersect(&Residue::new(3, 4)).unwrap(), Some(Residue::new(3, 4)));
        assert_eq!(Residue::ANY.intersect(&a).unwrap(), Some(a));
        assert_eq!(a.first_at_least(7), 10);
        assert_eq!(a.first_at_least(6), 6);
    }

    #[test]
    fn logs_of_roots() {
        let i = ExactComplex::gaussian(rational(0, 1), rational(1, 1));
        let minus_one = ExactComplex::from_int(-1);
        assert_eq!(discrete_log(&i, &minus_one), Some(Residue::new(2, 4)));
        assert_eq!(discrete_log(&minus_one, &i), None);
        let w = ExactComplex::root_of_unity(1, 6).unwrap();
        assert_eq!(discrete_log(&w, &minus_one), Some(Residue::new(3, 6)));
        let w5 = ExactComplex::root_of_unity(5, 12).unwrap();
        for n in 0..12u64 {
            let rho = w5.pow(n as i64).unwrap();
            let r = discrete_log(&w5, &rho).unwrap();
            assert!(r.contains(n), "n = {n}");
        }
        let irr = ExactComplex::gaussian(rational(3, 5), rational(4, 5));
        assert_eq!(unit_angle(&irr), None);
    }
}
