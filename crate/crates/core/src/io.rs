//! The JSON input document: a Jordan form plus optional start and target
//! vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::jordan::{ExactVector, JordanBlockSpec, JordanFormSpec, SimilaritySpec};

#[derive(Clone, Debug, PartialEq)]
pub struct InputDocument {
    pub spec: JordanFormSpec,
    pub vector: Option<ExactVector>,
    pub target: Option<ExactVector>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    blocks: Vec<JordanBlockSpec>,
    #[serde(default)]
    similarity: Option<Vec<Vec<GaussianRational>>>,
    #[serde(default)]
    vector: Option<ExactVector>,
    #[serde(default)]
    target: Option<ExactVector>,
}

#[derive(Serialize)]
struct Echo<'a> {
    blocks: &'a [JordanBlockSpec],
    #[serde(skip_serializing_if = "Option::is_none")]
    similarity: Option<&'a SimilaritySpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vector: Option<&'a ExactVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    target: Option<&'a ExactVector>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let mut spec_json = serde_json::json!({ "blocks": raw.blocks });
        if let Some(rows) = raw.similarity {
            spec_json["similarity"] = serde_json::json!(rows);
        }
        let spec: JordanFormSpec = serde_json::from_value(spec_json).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let doc = Self { spec, vector: raw.vector, target: raw.target };
        for v in doc.vector.iter().chain(&doc.target) {
            doc.spec.check_vector(v)?;
        }
        Ok(doc)
    }

    /// The start vector, or zero when the document has none.
    pub fn vector_or_zero(&self) -> ExactVector {
        self.vector.clone().unwrap_or_else(|| ExactVector::zeros(self.spec.dimension()))
    }

    pub fn echo(&self) -> serde_json::Value {
        serde_json::to_value(Echo {
            blocks: self.spec.blocks(),
            similarity: self.spec.similarity(),
            vector: self.vector.as_ref(),
            target: self.target.as_ref(),
        })
        .expect("input echo serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_checks_dimensions() {
        let doc = InputDocument::from_json(r#"{"blocks":[{"lambda":{"im":1},"size":3}],"vector":[5,2,0]}"#).unwrap();
        assert_eq!(doc.spec.dimension(), 3);
        assert_eq!(doc.vector_or_zero(), ExactVector::from_ints(&[5, 2, 0]));
        let again = InputDocument::from_json(&doc.echo().to_string()).unwrap();
        assert_eq!(again, doc);
        assert!(InputDocument::from_json(r#"{"blocks":[{"lambda":"1","size":2}],"vector":[1]}"#).is_err());
        assert!(InputDocument::from_json(r#"{"blocks":[],"vector":[]}"#).is_err());
        assert!(InputDocument::from_json(r#"{"blocks":[{"lambda":"1","size":1}],"extra":1}"#).is_err());
    }
}
