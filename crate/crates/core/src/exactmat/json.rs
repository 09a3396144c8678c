//! Matrix JSON documents.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::poly::{FpPoly, MultiPoly, ZPoly};
use super::ring::Fp;
use super::{FpMatrix, FpPolyMatrix, IntMatrix, Matrix, MultiPolyMatrix, ZPolyMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub entries: Vec<Value>,
}

/// A matrix over any of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatrix {
    Int(IntMatrix),
    Fp { p: u64, m: FpMatrix },
    ZX(ZPolyMatrix),
    FpX { p: u64, m: FpPolyMatrix },
    Multi { nvars: usize, m: MultiPolyMatrix },
}

pub(crate) fn bigint_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => json!(small),
        None => json!(v.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| Error::Parse(format!("{n} is not an integer"))),
        Value::String(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{s:?} is not an integer"))),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}

fn array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("expected an array, found {v}")))
}

fn need_p(doc: &MatrixDoc) -> Result<Fp> {
    let p = doc.p.ok_or_else(|| Error::Parse(format!("ring {} needs \"p\"", doc.ring)))?;
    Fp::new(p)
}

fn build<T: Clone>(doc: &MatrixDoc, f: &dyn Fn(&Value) -> Result<T>) -> Result<Matrix<T>> {
    Matrix::from_vec(doc.rows, doc.cols, doc.entries.iter().map(f).collect::<Result<Vec<_>>>()?)
}

impl AnyMatrix {
    pub fn shape(&self) -> (usize, usize) {
        match self {
            AnyMatrix::Int(m) => (m.nrows(), m.ncols()),
            AnyMatrix::Fp { m, .. } => (m.nrows(), m.ncols()),
            AnyMatrix::ZX(m) => (m.nrows(), m.ncols()),
            AnyMatrix::FpX { m, .. } => (m.nrows(), m.ncols()),
            AnyMatrix::Multi { m, .. } => (m.nrows(), m.ncols()),
        }
    }

    pub fn to_doc(&self) -> MatrixDoc {
        let (rows, cols) = self.shape();
        let (ring, p, entries): (String, Option<u64>, Vec<Value>) = match self {
            AnyMatrix::Int(m) => ("Z".into(), None, m.data().iter().map(bigint_to_json).collect()),
            AnyMatrix::Fp { p, m } => ("Fp".into(), Some(*p), m.data().iter().map(|&v| json!(v)).collect()),
            AnyMatrix::ZX(m) => (
                "Z[x]".into(),
                None,
                m.data().iter().map(|f| Value::Array(f.coeffs().iter().map(bigint_to_json).collect())).collect(),
            ),
            AnyMatrix::FpX { p, m } => ("Fp[x]".into(), Some(*p), m.data().iter().map(|f| json!(f.coeffs())).collect()),
            AnyMatrix::Multi { nvars, m } => (
                format!("Z[x1..x{nvars}]"),
                None,
                m.data()
                    .iter()
                    .map(|f| Value::Array(f.terms().map(|(e, c)| json!([bigint_to_json(c), e])).collect()))
                    .collect(),
            ),
        };
        MatrixDoc { rows, cols, ring, p, entries }
    }

    pub fn from_doc(doc: &MatrixDoc) -> Result<AnyMatrix> {
        if doc.entries.len() != doc.rows * doc.cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {}x{} matrix",
                doc.entries.len(),
                doc.rows,
                doc.cols
            )));
        }
        let ring = doc.ring.replace(' ', "");
        match ring.as_str() {
            "Z" => Ok(AnyMatrix::Int(build(doc, &bigint_from_json)?)),
            "Fp" => {
                let f = need_p(doc)?;
                let m: IntMatrix = build(doc, &bigint_from_json)?;
                Ok(AnyMatrix::Fp { p: f.p(), m: m.map(|v| f.reduce(v)) })
            }
            "Z[x]" => {
                let m = build(doc, &|v| Ok(ZPoly::from_coeffs(array(v)?.iter().map(bigint_from_json).collect::<Result<_>>()?)))?;
                Ok(AnyMatrix::ZX(m))
            }
            "Fp[x]" => {
                let f = need_p(doc)?;
                let m = build(doc, &|v| {
                    let c = array(v)?.iter().map(|c| bigint_from_json(c).map(|b| f.reduce(&b))).collect::<Result<_>>()?;
                    Ok(FpPoly::from_coeffs(c))
                })?;
                Ok(AnyMatrix::FpX { p: f.p(), m })
            }
            other => {
                let nvars = other
                    .strip_prefix("Z[x1..x")
                    .and_then(|s| s.strip_suffix(']'))
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown ring {:?}", doc.ring)))?;
                let m = build(doc, &|v| {
                    let mut terms = Vec::new();
                    for t in array(v)? {
                        let pair = array(t)?;
                        if pair.len() != 2 {
                            return Err(Error::Parse("monomials are [coefficient, exponents]".into()));
                        }
                        let exps: Vec<u32> = serde_json::from_value(pair[1].clone())?;
                        if exps.len() != nvars {
                            return Err(Error::Parse(format!("exponent vector {exps:?} has the wrong length")));
                        }
                        terms.push((exps, bigint_from_json(&pair[0])?));
                    }
                    Ok(MultiPoly::from_terms(terms))
                })?;
                Ok(AnyMatrix::Multi { nvars, m })
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<AnyMatrix> {
        Self::from_doc(&serde_json::from_str(text)?)
    }
}
