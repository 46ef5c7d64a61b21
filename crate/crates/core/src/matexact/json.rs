//! Matrix JSON: `{"d": 2, "entries": [["1", "-1/2"], ["0", "3"]]}`.
//!
//! Scalars are written as strings `"a"` or `"a/b"`; on input plain JSON
//! integers are accepted as well. A tuple is a JSON array of matrices; an
//! object `{"matrices": [...]}` (the witness shape) or a single matrix
//! object are also read as tuples.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matexact::matrix::{MatTuple, MatrixExact};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub d: usize,
    pub entries: Vec<Vec<ScalarJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Text(String),
    Int(i64),
}

impl ScalarJson {
    fn to_scalar(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarJson::Text(s) => field.parse_scalar(s),
            ScalarJson::Int(v) => Ok(field.from_i64(*v)),
        }
    }
}

pub fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn parse_scalars(field: Field, v: &[ScalarJson]) -> Result<Vec<Scalar>> {
    v.iter().map(|s| s.to_scalar(field)).collect()
}

impl From<&MatrixExact> for MatrixJson {
    fn from(m: &MatrixExact) -> Self {
        MatrixJson {
            d: m.dim(),
            entries: m
                .rows()
                .iter()
                .map(|r| r.iter().map(|s| ScalarJson::Text(s.to_string())).collect())
                .collect(),
        }
    }
}

impl MatrixJson {
    pub fn to_matrix(&self, field: Field) -> Result<MatrixExact> {
        if self.entries.len() != self.d || self.entries.iter().any(|r| r.len() != self.d) {
            return Err(Error::MatrixJson(format!(
                "\"entries\" must be a {0}x{0} array",
                self.d
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| parse_scalars(field, r))
            .collect::<Result<Vec<_>>>()?;
        MatrixExact::from_rows(field, rows)
    }
}

pub fn matrix_to_json(m: &MatrixExact) -> Value {
    serde_json::to_value(MatrixJson::from(m)).expect("serializable")
}

pub fn tuple_to_json(t: &MatTuple) -> Value {
    Value::Array(t.matrices().iter().map(matrix_to_json).collect())
}

/// Reads a tuple from any of the accepted shapes.
pub fn tuple_from_json(field: Field, value: &Value) -> Result<MatTuple> {
    let bad = |e: serde_json::Error| Error::MatrixJson(e.to_string());
    let list: Vec<MatrixJson> = match value {
        Value::Array(_) => serde_json::from_value(value.clone()).map_err(bad)?,
        Value::Object(obj) if obj.contains_key("matrices") => {
            serde_json::from_value(obj["matrices"].clone()).map_err(bad)?
        }
        Value::Object(_) => vec![serde_json::from_value(value.clone()).map_err(bad)?],
        _ => return Err(Error::MatrixJson("expected an array or object".into())),
    };
    let matrices = list
        .iter()
        .map(|m| m.to_matrix(field))
        .collect::<Result<Vec<_>>>()?;
    if matrices.is_empty() {
        return Err(Error::MatrixJson("tuple contains no matrices".into()));
    }
    MatTuple::from_matrices(matrices)
}

pub fn tuple_from_str(field: Field, text: &str) -> Result<MatTuple> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::MatrixJson(e.to_string()))?;
    tuple_from_json(field, &value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_every_tuple_shape() {
        let q = Field::Rational;
        let one = r#"{"d": 2, "entries": [["1", "-1/2"], [0, 3]]}"#;
        let t = tuple_from_str(q, one).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.matrices()[0].get(0, 1), &q.parse_scalar("-1/2").unwrap());

        let arr = format!("[{one}, {one}]");
        assert_eq!(tuple_from_str(q, &arr).unwrap().len(), 2);
        let obj = format!(r#"{{"matrices": [{one}], "direction": ["1", "0"]}}"#);
        assert_eq!(tuple_from_str(q, &obj).unwrap().len(), 1);
    }

    #[test]
    fn rejects_malformed() {
        let q = Field::Rational;
        assert!(tuple_from_str(q, r#"{"d": 2, "entries": [["1"]]}"#).is_err());
        assert!(tuple_from_str(q, r#"{"d": 1, "entries": [["1/0"]]}"#).is_err());
        assert!(tuple_from_str(q, r#"{"d": 1, "entries": [["0.5"]]}"#).is_err());
        assert!(tuple_from_str(q, "[]").is_err());
        assert!(tuple_from_str(q, "3").is_err());
        let mixed = r#"[{"d": 1, "entries": [["1"]]}, {"d": 2, "entries": [["1","0"],["0","1"]]}]"#;
        assert!(tuple_from_str(q, mixed).is_err());
    }

    #[test]
    fn writes_strings() {
        let m = MatrixExact::from_i64_rows(Field::Rational, &[&[1, -2], &[0, 7]]).unwrap();
        let v = matrix_to_json(&m);
        assert_eq!(v.to_string(), r#"{"d":2,"entries":[["1","-2"],["0","7"]]}"#);
        let back = tuple_from_json(Field::Rational, &v).unwrap();
        assert_eq!(back.matrices()[0], m);
    }
}
