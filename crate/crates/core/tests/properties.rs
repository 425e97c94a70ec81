use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jordan_limits::classify::sample::{random_spec, random_vector};
use jordan_limits::exact::rational::{is_normalized, rational, Rational};
use jordan_limits::exact::{ExactComplex, GaussianRational, ModulusClass};
use jordan_limits::jordan::{
    apply_inverse_power, apply_power, conjugate_vector, Direction, ExactMatrix, JordanFormSpec, SimilaritySpec,
};

fn nonzero_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9)
        .prop_filter("nonzero", |(a, _, c, _)| *a != 0 || *c != 0)
        .prop_map(|(a, b, c, d)| GaussianRational::new(rational(a, b), rational(c, d)))
}

fn exact_complex() -> impl Strategy<Value = ExactComplex> {
    prop_oneof![
        nonzero_gaussian().prop_map(|g| ExactComplex::gaussian(g.re, g.im)),
        (-12i64..=12, 1u64..=12).prop_map(|(p, q)| ExactComplex::root_of_unity(p, q).unwrap()),
        prop::sample::select(vec![(3, 4, 5), (-1, 0, 1), (0, 1, 1), (5, -12, 13), (0, -1, 1)])
            .prop_map(|(a, b, c)| ExactComplex::gaussian(rational(a, c), rational(b, c))),
    ]
}

fn spec_and_vector(seed: u64) -> (JordanFormSpec, jordan_limits::jordan::ExactVector) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = random_spec(&mut rng, 3, 3);
    let v = random_vector(spec.dimension(), &mut rng);
    (spec, v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn powers_add(lambda in exact_complex(), a in -6i64..=6, b in -6i64..=6) {
        let lhs = lambda.pow(a).unwrap().checked_mul(&lambda.pow(b).unwrap()).unwrap();
        prop_assert!(lhs.exact_eq(&lambda.pow(a + b).unwrap()));
    }

    #[test]
    fn powers_keep_modulus_class(lambda in exact_complex(), k in 1i64..=8) {
        prop_assert_eq!(lambda.pow(k).unwrap().modulus_class(), lambda.modulus_class());
    }

    #[test]
    fn root_of_unity_order_is_minimal(lambda in exact_complex()) {
        if lambda.modulus_class() != ModulusClass::EqualOne {
            prop_assert!(lambda.root_of_unity_order().is_err());
        } else if let Some(d) = lambda.root_of_unity_order().unwrap() {
            let one = ExactComplex::one();
            prop_assert!(lambda.pow(d as i64).unwrap().exact_eq(&one));
            for j in 1..d.min(64) {
                prop_assert!(!lambda.pow(j as i64).unwrap().exact_eq(&one));
            }
        }
    }

    #[test]
    fn rationals_stay_normalized(ops in prop::collection::vec((0u8..3, -50i64..=50, 1i64..=50), 1..40)) {
        let mut acc = Rational::from_integer(1.into());
        for (op, n, d) in ops {
            let r = rational(n, d);
            acc = match op {
                0 => &acc + &r,
                1 => &acc * &r,
                _ => &acc - &r,
            };
            prop_assert!(is_normalized(&acc));
        }
    }

    #[test]
    fn power_law(seed in any::<u64>(), a in 0u64..=25, b in 0u64..=25) {
        let (spec, v) = spec_and_vector(seed);
        let split = apply_power(&spec, a, &apply_power(&spec, b, &v).unwrap()).unwrap();
        prop_assert_eq!(split, apply_power(&spec, a + b, &v).unwrap());
    }

    #[test]
    fn inverse_powers_invert(seed in any::<u64>(), k in 0u64..=50) {
        let (spec, v) = spec_and_vector(seed);
        let forward = apply_power(&spec, k, &v).unwrap();
        prop_assert_eq!(&apply_inverse_power(&spec, k, &forward).unwrap(), &v);
        prop_assert_eq!(apply_power(&spec, k, &apply_inverse_power(&spec, k, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn conjugation_round_trips(seed in any::<u64>(), entries in prop::collection::vec(-3i64..=3, 9)) {
        let rows = entries.chunks(3).map(|r| r.iter().map(|&e| GaussianRational::from_int(e)).collect()).collect();
        let Ok(sim) = ExactMatrix::from_rows(rows).and_then(SimilaritySpec::new) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(3, &mut rng);
        let there = conjugate_vector(&sim, &v, Direction::Forward).unwrap();
        prop_assert_eq!(conjugate_vector(&sim, &there, Direction::Backward).unwrap(), v);
    }

    #[test]
    fn spec_serialization_round_trips(seed in any::<u64>()) {
        let (spec, _) = spec_and_vector(seed);
        let text = serde_json::to_string(&spec).unwrap();
        prop_assert_eq!(serde_json::from_str::<JordanFormSpec>(&text).unwrap(), spec);
    }
}
