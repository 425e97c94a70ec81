//! JSON schema for symbolic sets:
//! `{"kind": "empty"}` or
//! `{"kind": "product", "factors": [...], "groups": [...], "exact": bool, "basis"?: rows}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use super::{joint_closure, CoordinateFactor, Exactness, GroupClosure, MemberRole, ProductSet, RotationGroup, SymbolicLimitSet};
use crate::exact::{ExactComplex, GaussianRational};
use crate::jordan::{ExactMatrix, SimilaritySpec};

/// Groups with a longer cyclic period list only the period.
const LISTED_TUPLES: u64 = 1024;

fn group_json(g: &RotationGroup) -> Value {
    let members: Vec<Value> = g
        .members
        .iter()
        .map(|m| {
            let mut o = json!({"block": m.block, "eigenvalue": m.eigenvalue});
            match m.role {
                MemberRole::Cyclic { order } => {
                    o["role"] = json!("cyclic");
                    o["order"] = json!(order);
                }
                MemberRole::Circle { class, conjugate } => {
                    o["role"] = json!("circle");
                    o["class"] = json!(class);
                    o["conjugate"] = json!(conjugate);
                }
            }
            o
        })
        .collect();
    let mut o = json!({
        "param": g.id,
        "members": members,
        "exact": g.exactness() == Exactness::Exact,
        "period": g.period(),
    });
    match &g.closure {
        GroupClosure::FiniteCyclicTuples { period } => {
            o["closure"] = json!("finite_cyclic_tuples");
            if *period <= LISTED_TUPLES {
                o["tuples"] = Value::Array((1..=*period).map(|n| json!(g.cyclic_tuple(n))).collect());
            }
        }
        GroupClosure::SharedCircleWithFinite { .. } => {
            o["closure"] = json!("shared_circle_with_finite");
        }
        GroupClosure::FullTorusOuterApprox { undecided, .. } => {
            o["closure"] = json!("full_torus_outer_approx");
            o["undecided"] = Value::Array(
                undecided
                    .iter()
                    .map(|&(a, b)| json!([g.members[a].eigenvalue, g.members[b].eigenvalue]))
                    .collect(),
            );
        }
    }
    o
}

impl Serialize for SymbolicLimitSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = match self {
            SymbolicLimitSet::Empty => json!({"kind": "empty"}),
            SymbolicLimitSet::Product(p) => {
                let factors: Vec<Value> = p
                    .factors
                    .iter()
                    .map(|f| match f {
                        CoordinateFactor::Full => json!({"type": "full"}),
                        CoordinateFactor::Zero => json!({"type": "zero"}),
                        CoordinateFactor::Rotation { param, member, coeff } => {
                            json!({"type": "rotation", "param": param, "member": member, "coeff": coeff})
                        }
                    })
                    .collect();
                let mut o = Map::new();
                o.insert("kind".into(), json!("product"));
                o.insert("factors".into(), Value::Array(factors));
                o.insert("groups".into(), Value::Array(p.groups.iter().map(group_json).collect()));
                o.insert("exact".into(), json!(p.exactness == Exactness::Exact));
                if let Some(b) = &p.basis {
                    o.insert("basis".into(), json!(b));
                }
                Value::Object(o)
            }
        };
        v.serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    #[serde(rename = "type")]
    kind: String,
    param: Option<String>,
    member: Option<usize>,
    coeff: Option<GaussianRational>,
}

#[derive(Deserialize)]
struct RawMember {
    block: usize,
    eigenvalue: ExactComplex,
}

#[derive(Deserialize)]
struct RawGroup {
    param: String,
    members: Vec<RawMember>,
}

#[derive(Deserialize)]
struct RawSet {
    kind: String,
    #[serde(default)]
    factors: Vec<RawFactor>,
    #[serde(default)]
    groups: Vec<RawGroup>,
    exact: Option<bool>,
    basis: Option<Vec<Vec<GaussianRational>>>,
}

impl<'de> Deserialize<'de> for SymbolicLimitSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawSet::deserialize(d)?;
        match raw.kind.as_str() {
            "empty" => return Ok(SymbolicLimitSet::Empty),
            "product" => {}
            other => return Err(D::Error::custom(format!("unknown set kind {other:?}"))),
        }
        let groups = raw
            .groups
            .into_iter()
            .map(|g| {
                let eigs: Vec<_> = g.members.into_iter().map(|m| (m.block, m.eigenvalue)).collect();
                let mut built = joint_closure(&eigs).map_err(D::Error::custom)?;
                built.id = g.param;
                Ok(built)
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        let factors = raw
            .factors
            .into_iter()
            .map(|f| match f.kind.as_str() {
                "full" => Ok(CoordinateFactor::Full),
                "zero" => Ok(CoordinateFactor::Zero),
                "rotation" => {
                    let (Some(param), Some(member), Some(coeff)) = (f.param, f.member, f.coeff) else {
                        return Err(D::Error::custom("rotation factor needs param, member and coeff"));
                    };
                    let ok = groups.iter().any(|g| g.id == param && member < g.members.len());
                    if !ok || coeff.is_zero() {
                        return Err(D::Error::custom(format!("rotation factor refers to missing member {param}[{member}]")));
                    }
                    Ok(CoordinateFactor::Rotation { param, member, coeff })
                }
                other => Err(D::Error::custom(format!("unknown factor type {other:?}"))),
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        let exactness = groups.iter().fold(Exactness::Exact, |e, g| e.weakest(g.exactness()));
        if raw.exact.is_some_and(|e| e != (exactness == Exactness::Exact)) {
            return Err(D::Error::custom("\"exact\" flag disagrees with the groups"));
        }
        let basis = raw
            .basis
            .map(|rows| ExactMatrix::from_rows(rows).and_then(SimilaritySpec::new))
            .transpose()
            .map_err(D::Error::custom)?;
        Ok(SymbolicLimitSet::Product(ProductSet { factors, groups, exactness, basis }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, LimitSetKind};
    use crate::exact::rational::rational;
    use crate::jordan::{ExactVector, JordanBlockSpec, JordanFormSpec};

    #[test]
    fn schema_and_roundtrip() {
        let i = ExactComplex::Cartesian(GaussianRational::i());
        let spec = JordanFormSpec::new(
            vec![JordanBlockSpec::new(i.clone(), 1), JordanBlockSpec::new(ExactComplex::from_int(-1), 1)],
            None,
        )
        .unwrap();
        let set = classify(&spec, &ExactVector::from_ints(&[1, 1]), LimitSetKind::L).unwrap();
        let v = serde_json::to_value(&set).unwrap();
        assert_eq!(v["kind"], "product");
        assert_eq!(v["factors"][0]["type"], "rotation");
        assert_eq!(v["groups"][0]["tuples"].as_array().unwrap().len(), 4);
        assert_eq!(v["groups"][0]["tuples"][0][1]["re"], "-1");
        let back: SymbolicLimitSet = serde_json::from_value(v).unwrap();
        assert_eq!(back, set);
        let empty = serde_json::to_string(&SymbolicLimitSet::Empty).unwrap();
        assert_eq!(empty, r#"{"kind":"empty"}"#);
    }

    #[test]
    fn outer_approx_roundtrip() {
        let a = ExactComplex::gaussian(rational(3, 5), rational(4, 5));
        let b = ExactComplex::gaussian(rational(5, 13), rational(12, 13));
        let spec = JordanFormSpec::new(vec![JordanBlockSpec::new(a, 1), JordanBlockSpec::new(b, 1)], None).unwrap();
        let set = classify(&spec, &ExactVector::from_ints(&[1, 1]), LimitSetKind::L).unwrap();
        let v = serde_json::to_value(&set).unwrap();
        assert_eq!(v["exact"], false);
        assert_eq!(v["groups"][0]["undecided"][0][1]["im"], "12/13");
        let back: SymbolicLimitSet = serde_json::from_value(v).unwrap();
        assert_eq!(back, set);
    }
}
