//! CM curve datasets: a JSON array of records.
//!
//! ```json
//! [{"label": "y^2=x^3-x", "cm_d": 1, "form": "sqrt", "rank": 0,
//!   "rank_source": "...", "lambda": "-1", "notes": "..."}]
//! ```
//!
//! `label`, `cm_d`, `form`, `rank` and `rank_source` are required; `lambda`
//! (a rational literal `p/q`) and `notes` are optional. Ranks are external,
//! published data and are never computed here.

use std::collections::HashSet;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::functor::{CmOrder, OrderForm};
use crate::literal::parse_rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: String,
    pub order: CmOrder<BigInt>,
    pub rank: u64,
    pub rank_source: String,
    pub lambda: Option<BigRational>,
    pub notes: Option<String>,
}

const KEYS: [&str; 7] = ["label", "cm_d", "form", "rank", "rank_source", "lambda", "notes"];

/// On-disk shape of a record, used for writing.
#[derive(Serialize)]
struct RawRecord<'a> {
    label: &'a str,
    cm_d: i64,
    form: String,
    rank: u64,
    rank_source: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    notes: Option<&'a str>,
}

pub fn load_dataset(path: impl AsRef<Path>) -> Result<Vec<CurveRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_dataset(&text)
}

pub fn parse_dataset(text: &str) -> Result<Vec<CurveRecord>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let Value::Array(items) = value else {
        return Err(Error::Schema {
            index: 0,
            field: "<root>".into(),
            reason: "expected an array of records".into(),
        });
    };
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(items.len());
    for (index, item) in items.iter().enumerate() {
        let rec = parse_record(index, item)?;
        if !seen.insert(rec.label.clone()) {
            return Err(Error::DuplicateLabel(rec.label));
        }
        out.push(rec);
    }
    Ok(out)
}

fn schema(index: usize, field: &str, reason: impl Into<String>) -> Error {
    Error::Schema {
        index,
        field: field.into(),
        reason: reason.into(),
    }
}

fn parse_record(index: usize, item: &Value) -> Result<CurveRecord> {
    let Value::Object(obj) = item else {
        return Err(schema(index, "<record>", "expected an object"));
    };
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(schema(index, k, "unknown field"));
    }
    let label = required_string(index, obj, "label")?;
    if label.is_empty() {
        return Err(schema(index, "label", "empty"));
    }
    let cm_d = match obj.get("cm_d") {
        None => return Err(schema(index, "cm_d", "missing")),
        Some(v) => integer(v).ok_or_else(|| schema(index, "cm_d", "not an integer"))?,
    };
    if cm_d <= BigInt::from(0) {
        return Err(schema(index, "cm_d", "must be positive"));
    }
    let form = match required_string(index, obj, "form")?.as_str() {
        "sqrt" => OrderForm::Sqrt,
        "half" => OrderForm::Half,
        other => {
            return Err(schema(
                index,
                "form",
                format!("expected \"sqrt\" or \"half\", got {other:?}"),
            ))
        }
    };
    let order = CmOrder::new(cm_d, form).map_err(|e| schema(index, "cm_d", e.to_string()))?;
    let rank = match obj.get("rank") {
        None => return Err(schema(index, "rank", "missing")),
        Some(v) => {
            let r = integer(v).ok_or_else(|| schema(index, "rank", "not an integer"))?;
            if r < BigInt::from(0) {
                return Err(schema(index, "rank", "negative"));
            }
            u64::try_from(r).map_err(|_| schema(index, "rank", "too large"))?
        }
    };
    let rank_source = required_string(index, obj, "rank_source")?;
    if rank_source.trim().is_empty() {
        return Err(schema(index, "rank_source", "empty; rank provenance is mandatory"));
    }
    let lambda = match obj.get("lambda") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(parse_rational(s).map_err(|e| schema(index, "lambda", e.to_string()))?),
        Some(_) => return Err(schema(index, "lambda", "expected a string rational \"p/q\"")),
    };
    let notes = match obj.get("notes") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(schema(index, "notes", "expected a string")),
    };
    Ok(CurveRecord {
        label,
        order,
        rank,
        rank_source,
        lambda,
        notes,
    })
}

fn required_string(index: usize, obj: &Map<String, Value>, key: &str) -> Result<String> {
    match obj.get(key) {
        None => Err(schema(index, key, "missing")),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(schema(index, key, "expected a string")),
    }
}

fn integer(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).or_else(|| n.as_u64().map(BigInt::from)),
        _ => None,
    }
}

/// Writes records back in the dataset schema.
pub fn dataset_to_json(records: &[CurveRecord]) -> String {
    let raw: Vec<Value> = records
        .iter()
        .map(|r| {
            serde_json::to_value(RawRecord {
                label: &r.label,
                cm_d: r.order.d().to_i64().expect("cm_d fits in i64"),
                form: r.order.form().to_string(),
                rank: r.rank,
                rank_source: &r.rank_source,
                lambda: r.lambda.as_ref().map(ToString::to_string),
                notes: r.notes.as_deref(),
            })
            .expect("record serializes")
        })
        .collect();
    serde_json::to_string_pretty(&raw).expect("records serialize")
}
