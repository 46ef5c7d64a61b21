//! Verdict JSON:
//!
//! ```json
//! {"status": "independent",
//!  "witness": {"matrices": [{"d": 2, "entries": [["1","0"],["0","0"]]}], "direction": ["1","0"]},
//!  "trials_used": 3,
//!  "bounds": {"beta": 3, "s_local_min": 2, "d_rank": 2, "gamma": 20, "s_dir_min": 11, "sigma": 3}}
//! ```
//!
//! `coefficients`, `witness`, `direction`, `bounds` and `note` are omitted
//! when absent.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::locdep::bounds::BoundReport;
use crate::locdep::decide::{CrossCheck, Decision};
use crate::matexact::json::{parse_scalars, scalar_strings, tuple_from_json, tuple_to_json, ScalarJson};
use crate::scalar::Field;
use crate::verdict::{DependenceVerdict, Status, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub beta: u128,
    pub s_local_min: u128,
    pub d_rank: u128,
    pub gamma: u128,
    pub s_dir_min: u128,
    pub sigma: u128,
}

impl From<&BoundReport> for BoundsJson {
    fn from(b: &BoundReport) -> Self {
        BoundsJson {
            beta: b.beta,
            s_local_min: b.s_local_min,
            d_rank: b.d_rank,
            gamma: b.gamma,
            s_dir_min: b.s_dir_min,
            sigma: b.sigma,
        }
    }
}

pub fn verdict_to_json(v: &DependenceVerdict, bounds: Option<&BoundReport>) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("status".into(), Value::from(v.status.as_str()));
    if let Some(c) = &v.coefficients {
        obj.insert("coefficients".into(), Value::from(scalar_strings(c)));
    }
    if let Some(w) = &v.witness {
        let mut wobj = serde_json::Map::new();
        wobj.insert("matrices".into(), tuple_to_json(&w.tuple));
        if let Some(dir) = &w.direction {
            wobj.insert("direction".into(), Value::from(scalar_strings(dir)));
        }
        obj.insert("witness".into(), Value::Object(wobj));
    }
    obj.insert("trials_used".into(), Value::from(v.trials_used));
    if let Some(b) = bounds {
        obj.insert(
            "bounds".into(),
            serde_json::to_value(BoundsJson::from(b)).expect("serializable"),
        );
    }
    if let Some(note) = &v.note {
        obj.insert("note".into(), Value::from(note.as_str()));
    }
    Value::Object(obj)
}

fn bad(msg: impl Into<String>) -> Error {
    Error::MatrixJson(msg.into())
}

/// Verdict JSON extended with `cross_checks` and, when sampling ran, `local`.
pub fn decision_to_json(d: &Decision) -> Value {
    let mut v = verdict_to_json(&d.verdict, d.bounds.as_ref());
    let checks: Vec<Value> = d
        .cross_checks
        .iter()
        .map(|c| match c {
            CrossCheck::Agreed { decider } => json!({"decider": decider, "agreed": true}),
            CrossCheck::Skipped { decider, reason } => {
                json!({"decider": decider, "skipped": reason})
            }
        })
        .collect();
    v["cross_checks"] = Value::from(checks);
    if let Some(local) = &d.local {
        v["local"] = json!({
            "d": local.dim,
            "verdict": verdict_to_json(&local.verdict, None),
        });
    }
    v
}

/// Reads a verdict back; returns the bounds block if present.
pub fn verdict_from_json(field: Field, value: &Value) -> Result<(DependenceVerdict, Option<BoundsJson>)> {
    let obj = value.as_object().ok_or_else(|| bad("verdict must be an object"))?;
    let status = match obj.get("status").and_then(Value::as_str) {
        Some("dependent") => Status::Dependent,
        Some("independent") => Status::Independent,
        Some("no_witness_found") => Status::NoWitnessFound,
        other => return Err(bad(format!("unknown status {other:?}"))),
    };
    let scalars = |v: &Value| -> Result<_> {
        let list: Vec<ScalarJson> =
            serde_json::from_value(v.clone()).map_err(|e| bad(e.to_string()))?;
        parse_scalars(field, &list)
    };
    let coefficients = obj.get("coefficients").map(scalars).transpose()?;
    let witness = obj
        .get("witness")
        .map(|w| -> Result<Witness> {
            Ok(Witness {
                tuple: tuple_from_json(field, w)?,
                direction: w.get("direction").map(scalars).transpose()?,
            })
        })
        .transpose()?;
    let trials_used = obj
        .get("trials_used")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing trials_used"))?;
    let bounds = obj
        .get("bounds")
        .map(|b| serde_json::from_value(b.clone()).map_err(|e| bad(e.to_string())))
        .transpose()?;
    let note = obj.get("note").and_then(Value::as_str).map(str::to_string);
    Ok((
        DependenceVerdict {
            status,
            coefficients,
            witness,
            trials_used,
            note,
        },
        bounds,
    ))
}
