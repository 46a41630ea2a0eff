//! JSON encodings of systems, bases and decomposition trees.
//!
//! Rationals are `[numerator, denominator]` pairs of JSON integers of
//! arbitrary size. Vertex indices are 0-based.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::{Error, Result};
use crate::linalg::{Basis, Equation, LinearSystem, Rational, WeightVector};
use crate::modular::MdNode;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational(pub Number, pub Number);

impl From<&Rational> for JsonRational {
    fn from(r: &Rational) -> Self {
        let num = Number::from_str(&r.numer().to_string()).expect("integer literal");
        let den = Number::from_str(&r.denom().to_string()).expect("integer literal");
        JsonRational(num, den)
    }
}

impl TryFrom<&JsonRational> for Rational {
    type Error = Error;

    fn try_from(j: &JsonRational) -> Result<Rational> {
        let parse = |n: &Number| {
            BigInt::from_str(&n.to_string()).map_err(|_| Error::Parse {
                line: 0,
                message: format!("`{n}` is not an integer"),
            })
        };
        let (num, den) = (parse(&j.0)?, parse(&j.1)?);
        if den == BigInt::from(0) {
            return Err(Error::Parse {
                line: 0,
                message: "zero denominator".into(),
            });
        }
        Ok(Rational::new(num, den))
    }
}

fn dense(values: &[Rational]) -> Vec<JsonRational> {
    values.iter().map(JsonRational::from).collect()
}

fn undense(values: &[JsonRational]) -> Result<Vec<Rational>> {
    values.iter().map(Rational::try_from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub num_vars: usize,
    pub rows: Vec<Vec<JsonRational>>,
    pub tags: Vec<String>,
}

impl From<&LinearSystem> for SystemJson {
    fn from(s: &LinearSystem) -> Self {
        SystemJson {
            num_vars: s.num_vars(),
            rows: s.to_dense().iter().map(|r| dense(r)).collect(),
            tags: s.rows().iter().map(|r| r.tag.clone()).collect(),
        }
    }
}

impl TryFrom<&SystemJson> for LinearSystem {
    type Error = Error;

    fn try_from(j: &SystemJson) -> Result<LinearSystem> {
        if j.tags.len() != j.rows.len() {
            return Err(Error::DimensionMismatch {
                expected: j.rows.len(),
                found: j.tags.len(),
            });
        }
        let mut s = LinearSystem::new(j.num_vars);
        for (row, tag) in j.rows.iter().zip(&j.tags) {
            if row.len() != j.num_vars {
                return Err(Error::DimensionMismatch {
                    expected: j.num_vars,
                    found: row.len(),
                });
            }
            s.push(Equation::from_dense(&undense(row)?, tag.clone()))?;
        }
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub num_vars: usize,
    pub vectors: Vec<Vec<JsonRational>>,
}

impl BasisJson {
    pub fn new(num_vars: usize, basis: &Basis) -> Self {
        BasisJson {
            num_vars,
            vectors: basis.vectors.iter().map(|v| dense(&v.0)).collect(),
        }
    }
}

impl TryFrom<&BasisJson> for Basis {
    type Error = Error;

    fn try_from(j: &BasisJson) -> Result<Basis> {
        let vectors = j
            .vectors
            .iter()
            .map(|v| {
                if v.len() != j.num_vars {
                    return Err(Error::DimensionMismatch {
                        expected: j.num_vars,
                        found: v.len(),
                    });
                }
                Ok(WeightVector(undense(v)?))
            })
            .collect::<Result<_>>()?;
        Ok(Basis { vectors })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdNodeJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub vertex_set: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub child_reps: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub quotient_edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub children: Vec<MdNodeJson>,
}

impl From<&MdNode> for MdNodeJson {
    fn from(node: &MdNode) -> Self {
        MdNodeJson {
            kind: node.kind.as_str().to_string(),
            vertex: node.vertex,
            vertex_set: node.vertex_set.as_slice().to_vec(),
            child_reps: node.child_reps.clone(),
            quotient_edges: node
                .quotient
                .as_ref()
                .map(|q| q.edges())
                .unwrap_or_default(),
            children: node.children.iter().map(MdNodeJson::from).collect(),
        }
    }
}
