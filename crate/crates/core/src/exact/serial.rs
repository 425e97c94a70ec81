//! JSON forms: rationals as `"p/q"` strings, Cartesian values as
//! `{"re": .., "im": ..}`, polar values as `{"modulus": .., "p": int, "q": int}`.
//!
//! Input is accepted a little more loosely than it is written: a bare string or
//! JSON integer stands for a real value and a missing `im` means zero. JSON
//! numbers with a fractional part are rejected.

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::rational::{format_rational, parse_rational, Rational};
use super::{ExactComplex, GaussianRational, PolarExact};
use crate::error::{Error, Result};

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => Ok(Rational::from_integer(i.into())),
            (None, Some(u)) => Ok(Rational::from_integer(u.into())),
            _ => Err(Error::InvalidInput(format!(
                "floating-point value {n} rejected; give exact rationals as \"p/q\""
            ))),
        },
        other => Err(Error::InvalidInput(format!("expected a rational, found {other}"))),
    }
}

fn int_field(obj: &serde_json::Map<String, Value>, key: &str) -> Result<Value> {
    obj.get(key)
        .cloned()
        .ok_or_else(|| Error::InvalidInput(format!("polar value is missing {key:?}")))
}

pub fn complex_from_json(v: &Value) -> Result<ExactComplex> {
    match v {
        Value::Object(obj) if obj.contains_key("modulus") => {
            let modulus = rational_from_json(&obj["modulus"])?;
            let p = int_field(obj, "p")?
                .as_i64()
                .ok_or_else(|| Error::InvalidInput("polar \"p\" must be an integer".into()))?;
            let q = int_field(obj, "q")?
                .as_u64()
                .ok_or_else(|| Error::InvalidInput("polar \"q\" must be a positive integer".into()))?;
            Ok(ExactComplex::Polar(PolarExact::new(modulus, p, q)?))
        }
        Value::Object(obj) => {
            for key in obj.keys() {
                if key != "re" && key != "im" {
                    return Err(Error::InvalidInput(format!("unexpected key {key:?} in complex value")));
                }
            }
            let part = |k: &str| obj.get(k).map(rational_from_json).transpose();
            let re = part("re")?.unwrap_or_default();
            let im = part("im")?.unwrap_or_default();
            Ok(ExactComplex::gaussian(re, im))
        }
        other => Ok(ExactComplex::real(rational_from_json(other)?)),
    }
}

pub fn gaussian_from_json(v: &Value) -> Result<GaussianRational> {
    let c = complex_from_json(v)?;
    c.to_gaussian().ok_or_else(|| {
        Error::InvalidInput(format!("vector entries must be Gaussian rationals, got {c}"))
    })
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("re", &format_rational(&self.re))?;
        m.serialize_entry("im", &format_rational(&self.im))?;
        m.end()
    }
}

impl Serialize for ExactComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExactComplex::Cartesian(g) => g.serialize(s),
            ExactComplex::Polar(p) => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("modulus", &format_rational(p.modulus()))?;
                m.serialize_entry("p", &p.angle_num())?;
                m.serialize_entry("q", &p.angle_den())?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for ExactComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        complex_from_json(&v).map_err(D::Error::custom)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        gaussian_from_json(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rational;
    use serde_json::json;

    #[test]
    fn cartesian_roundtrip() {
        let z = ExactComplex::gaussian(rational(3, 5), rational(-4, 5));
        let text = serde_json::to_string(&z).unwrap();
        assert_eq!(text, r#"{"re":"3/5","im":"-4/5"}"#);
        let back: ExactComplex = serde_json::from_str(&text).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn polar_roundtrip() {
        let z = ExactComplex::root_of_unity(2, 6).unwrap();
        let text = serde_json::to_string(&z).unwrap();
        assert_eq!(text, r#"{"modulus":"1","p":1,"q":3}"#);
        let back: ExactComplex = serde_json::from_str(&text).unwrap();
        assert!(matches!(back, ExactComplex::Polar(_)));
        assert_eq!(back, z);
    }

    #[test]
    fn loose_inputs() {
        assert_eq!(complex_from_json(&json!("1/2")).unwrap(), ExactComplex::real(rational(1, 2)));
        assert_eq!(complex_from_json(&json!(3)).unwrap(), ExactComplex::from_int(3));
        assert_eq!(complex_from_json(&json!({"im": "1"})).unwrap(), ExactComplex::gaussian(rational(0, 1), rational(1, 1)));
        assert!(complex_from_json(&json!(0.5)).is_err());
        assert!(complex_from_json(&json!({"re": "0.5"})).is_err());
        assert!(complex_from_json(&json!({"real": "1"})).is_err());
        assert!(gaussian_from_json(&json!({"modulus": "1", "p": 1, "q": 3})).is_err());
        assert_eq!(
            gaussian_from_json(&json!({"modulus": "2", "p": 1, "q": 4})).unwrap(),
            GaussianRational::new(rational(0, 1), rational(2, 1))
        );
    }
}
