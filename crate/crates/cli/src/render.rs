//! JSON rendering with the tool's exactness conventions: key order is
//! insertion order, oversized integers become `{"format":"bigint",...}`
//! objects, rationals become `{"num","den"}` string pairs.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

use chern_bounds::bounds::{BoundReport, BoundValue};
use chern_bounds::catalog::VerificationReport;
use chern_bounds::poly::Polynomial;
use chern_bounds::rational::Rational;

/// Largest magnitude emitted as a bare JSON number.
const MAX_PLAIN: i64 = (1 << 53) - 1;

pub fn big_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) if (-MAX_PLAIN..=MAX_PLAIN).contains(&small) => Value::from(small),
        _ => {
            let mut map = Map::new();
            map.insert("format".into(), Value::String("bigint".into()));
            map.insert("value".into(), Value::String(v.to_string()));
            Value::Object(map)
        }
    }
}

pub fn rat_json(r: &Rational) -> Value {
    let mut map = Map::new();
    map.insert("num".into(), Value::String(r.numer().to_string()));
    map.insert("den".into(), Value::String(r.denom().to_string()));
    Value::Object(map)
}

pub fn poly_json(p: &Polynomial) -> Value {
    let mut map = Map::new();
    map.insert(
        "degree".into(),
        p.degree().map_or(Value::Null, |d| Value::from(d as u64)),
    );
    map.insert(
        "coefficients".into(),
        Value::Array(p.coeffs().iter().map(rat_json).collect()),
    );
    Value::Object(map)
}

fn bound_value_json(v: &BoundValue) -> Value {
    match v {
        BoundValue::Int(i) => big_json(i),
        BoundValue::Poly(p) => poly_json(p),
        BoundValue::Size(s) => Value::from(*s as u64),
    }
}

pub fn report_json(r: &BoundReport) -> Value {
    let mut map = Map::new();
    map.insert("name".into(), Value::String(r.name.clone()));
    map.insert("bound".into(), bound_value_json(&r.bound));
    map.insert(
        "oracle".into(),
        r.oracle.as_ref().map_or(Value::Null, bound_value_json),
    );
    map.insert("verdict".into(), Value::String(r.verdict.as_str().into()));
    map.insert("detail".into(), Value::String(r.detail.clone()));
    Value::Object(map)
}

pub fn verification_json(v: &VerificationReport) -> Value {
    let mut map = Map::new();
    map.insert("descriptor".into(), Value::String(v.descriptor.clone()));
    map.insert("pass".into(), Value::Bool(v.pass));
    map.insert(
        "reports".into(),
        Value::Array(v.reports.iter().map(report_json).collect()),
    );
    Value::Object(map)
}

/// Canonical payload text: pretty-printed with a trailing newline, so runs
/// are byte-for-byte diffable.
pub fn json_payload(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable payload");
    text.push('\n');
    text
}

/// Compact single-line rendering for the plain-text output mode.
pub fn plain_value(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => serde_json::to_string(other).expect("serializable"),
    }
}
