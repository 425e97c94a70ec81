use super::{CoordinateFactor, GroupClosure, MemberRole, ProductSet, RotationGroup, SymbolicLimitSet};
use crate::exact::ExactComplex;

const LISTED_ORBIT: u64 = 12;

/// Human-readable form, e.g. `ℂ × {2i, -2, -2i, 2} × {0}`.
pub fn describe(set: &SymbolicLimitSet) -> String {
    match set {
        SymbolicLimitSet::Empty => "∅".into(),
        SymbolicLimitSet::Product(p) => describe_product(p),
    }
}

fn describe_product(p: &ProductSet) -> String {
    let mut parts: Vec<(String, usize)> = Vec::new();
    for f in &p.factors {
        let s = match f {
            CoordinateFactor::Full => "ℂ".to_string(),
            CoordinateFactor::Zero => "{0}".to_string(),
            CoordinateFactor::Rotation { param, member, coeff } => match p.group(param) {
                Some(g) => rotation(g, *member, &ExactComplex::Cartesian(coeff.clone())),
                None => format!("{{{coeff}·?}}"),
            },
        };
        match parts.last_mut() {
            Some((last, run)) if *last == s && !s.contains('λ') && !s.contains('μ') && s.len() <= 3 => *run += 1,
            _ => parts.push((s, 1)),
        }
    }
    let body = parts
        .into_iter()
        .map(|(s, run)| if run > 1 { format!("{s}^{run}") } else { s })
        .collect::<Vec<_>>()
        .join(" × ");
    let mut out = if p.basis.is_some() { format!("P·({body})") } else { body };
    for g in &p.groups {
        for (a, b) in g.undecided_pairs() {
            out.push_str(&format!(" [outer approximation: joint closure of {a} and {b} undecided]"));
        }
    }
    out
}

fn rotation(g: &RotationGroup, member: usize, coeff: &ExactComplex) -> String {
    let m = &g.members[member];
    let single = g.members.len() == 1;
    match (&m.role, &g.closure) {
        (MemberRole::Cyclic { order }, GroupClosure::FiniteCyclicTuples { .. }) if single && *order <= LISTED_ORBIT => {
            let items: Vec<String> = (1..=*order)
                .map(|n| {
                    let p = m.eigenvalue.pow(n as i64).expect("unit modulus");
                    coeff.checked_mul(&p).map(|v| v.to_string()).unwrap_or_else(|_| format!("{coeff}·{p}"))
                })
                .collect();
            format!("{{{}}}", items.join(", "))
        }
        (MemberRole::Cyclic { .. }, _) => format!("{{{coeff}·λ^n : λ = {}}}_{}", m.eigenvalue, g.id),
        (MemberRole::Circle { class, conjugate }, _) => {
            let mu = if *conjugate { "conj(μ" } else { "(μ" };
            format!("{{{coeff}·{mu}{class}) : |μ{class}| = 1}}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_j_block;
    use crate::exact::GaussianRational;

    #[test]
    fn describes_rotation_factor() {
        let i = ExactComplex::Cartesian(GaussianRational::i());
        let g = |n| GaussianRational::from_int(n);
        let s = classify_j_block(&i, 3, &[g(5), g(-2), g(0)]).unwrap();
        assert_eq!(describe(&s), "ℂ × {2i, -2, -2i, 2} × {0}");
        let s = classify_j_block(&ExactComplex::one(), 4, &vec![g(0); 4]).unwrap();
        assert_eq!(describe(&s), "ℂ^2 × {0}^2");
        assert_eq!(describe(&SymbolicLimitSet::Empty), "∅");
    }
}
