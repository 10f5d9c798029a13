//! The descriptor document format: a JSON document with deterministic field
//! order, integers as JSON numbers (decimal strings once they leave the
//! exactly-representable range), and rational coefficients as `"p/q"`
//! strings. Loading validates every descriptor; serializing a loaded
//! document reproduces it byte for byte.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::chern::ChernData;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::splitting::{GstMatrix, SplittingType};

use super::{CatalogError, Flags, H0Piece, PiecewiseH0, SheafDescriptor};

/// Largest integer emitted as a bare JSON number; everything bigger becomes
/// a decimal string so exactness survives every JSON consumer.
const MAX_PLAIN: i64 = (1 << 53) - 1;

fn err(msg: impl Into<String>) -> CatalogError {
    CatalogError::Format(msg.into())
}

pub(crate) fn big_to_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) if (-MAX_PLAIN..=MAX_PLAIN).contains(&small) => Value::from(small),
        _ => Value::String(v.to_string()),
    }
}

pub(crate) fn value_to_big(v: &Value) -> Result<BigInt, CatalogError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| err(format!("non-integer number {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| err(format!("malformed integer string '{s}'"))),
        _ => Err(err("expected an integer or decimal string")),
    }
}

fn rational_to_value(r: &Rational) -> Value {
    if r.denom() == &BigInt::from(1) {
        Value::String(r.numer().to_string())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn value_to_rational(v: &Value) -> Result<Rational, CatalogError> {
    let s = v
        .as_str()
        .ok_or_else(|| err("expected a rational string"))?;
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| err(format!("malformed rational '{s}'")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| err(format!("malformed rational '{s}'")))?;
    if den <= BigInt::from(0) {
        return Err(err(format!("non-positive denominator in '{s}'")));
    }
    Ok(Rational::new(num, den))
}

fn poly_to_value(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_value).collect())
}

fn value_to_poly(v: &Value) -> Result<Polynomial, CatalogError> {
    let arr = v.as_array().ok_or_else(|| err("expected coefficients"))?;
    let coeffs = arr
        .iter()
        .map(value_to_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::from_coeffs(coeffs))
}

fn sequence_to_value(s: &SplittingType) -> Value {
    Value::Array(s.entries().iter().map(|&e| Value::from(e)).collect())
}

fn value_to_sequence(v: &Value) -> Result<SplittingType, CatalogError> {
    let arr = v.as_array().ok_or_else(|| err("expected a sequence"))?;
    let entries = arr
        .iter()
        .map(|e| e.as_i64().ok_or_else(|| err("sequence entries must be integers")))
        .collect::<Result<Vec<_>, _>>()?;
    SplittingType::new(entries).map_err(|e| err(e.to_string()))
}

fn descriptor_to_value(d: &SheafDescriptor) -> Value {
    let mut map = Map::new();
    map.insert("name".into(), Value::String(d.name.clone()));
    map.insert("ambient_dim".into(), Value::from(d.ambient_dim as u64));
    map.insert("rank".into(), Value::from(d.rank));
    map.insert(
        "chern".into(),
        Value::Array(d.chern.classes().iter().map(big_to_value).collect()),
    );
    map.insert("splitting".into(), sequence_to_value(&d.splitting));
    map.insert(
        "gst".into(),
        match &d.gst {
            None => Value::Null,
            Some(m) => Value::Array(
                m.rows()
                    .iter()
                    .map(|row| row.as_ref().map_or(Value::Null, sequence_to_value))
                    .collect(),
            ),
        },
    );
    map.insert(
        "h0_series".into(),
        match &d.h0_series {
            None => Value::Null,
            Some(h0) => Value::Array(
                h0.pieces()
                    .iter()
                    .map(|piece| {
                        let mut p = Map::new();
                        p.insert(
                            "min_t".into(),
                            piece.min_t.map_or(Value::Null, Value::from),
                        );
                        p.insert("coefficients".into(), poly_to_value(&piece.poly));
                        Value::Object(p)
                    })
                    .collect(),
            ),
        },
    );
    map.insert(
        "flags".into(),
        json!({
            "reflexive": d.flags.reflexive,
            "torsion_free": d.flags.torsion_free,
            "split": d.flags.split,
            "semistable": d.flags.semistable,
            "stable": d.flags.stable,
        }),
    );
    map.insert("provenance".into(), Value::String(d.provenance.clone()));
    Value::Object(map)
}

fn get<'v>(map: &'v Map<String, Value>, key: &str) -> Result<&'v Value, CatalogError> {
    map.get(key).ok_or_else(|| err(format!("missing field '{key}'")))
}

fn flag(map: &Map<String, Value>, key: &str) -> Result<bool, CatalogError> {
    get(map, key)?
        .as_bool()
        .ok_or_else(|| err(format!("flag '{key}' must be a boolean")))
}

fn value_to_descriptor(v: &Value) -> Result<SheafDescriptor, CatalogError> {
    let map = v.as_object().ok_or_else(|| err("descriptor must be an object"))?;
    let name = get(map, "name")?
        .as_str()
        .ok_or_else(|| err("name must be a string"))?
        .to_string();
    let ambient_dim = get(map, "ambient_dim")?
        .as_u64()
        .ok_or_else(|| err("ambient_dim must be a positive integer"))? as usize;
    let rank = get(map, "rank")?
        .as_i64()
        .ok_or_else(|| err("rank must be an integer"))?;
    if ambient_dim == 0 || rank <= 0 {
        return Err(err("ambient_dim and rank must be positive"));
    }

    let chern_values = get(map, "chern")?
        .as_array()
        .ok_or_else(|| err("chern must be an array"))?;
    if chern_values.len() != ambient_dim {
        return Err(err(format!(
            "descriptor '{name}': expected {ambient_dim} Chern classes, got {}",
            chern_values.len()
        )));
    }
    let classes = chern_values
        .iter()
        .map(value_to_big)
        .collect::<Result<Vec<_>, _>>()?;
    let chern = ChernData::new(ambient_dim, rank, classes);

    let splitting = value_to_sequence(get(map, "splitting")?)?;

    let gst = match get(map, "gst")? {
        Value::Null => None,
        Value::Array(rows) => {
            let rows = rows
                .iter()
                .map(|row| match row {
                    Value::Null => Ok(None),
                    other => value_to_sequence(other).map(Some),
                })
                .collect::<Result<Vec<_>, CatalogError>>()?;
            Some(GstMatrix::new(ambient_dim, rows).map_err(|e| err(e.to_string()))?)
        }
        _ => return Err(err("gst must be null or an array of rows")),
    };

    let h0_series = match get(map, "h0_series")? {
        Value::Null => None,
        Value::Array(parts) => {
            let pieces = parts
                .iter()
                .map(|piece| {
                    let p = piece
                        .as_object()
                        .ok_or_else(|| err("h0 piece must be an object"))?;
                    let min_t = match get(p, "min_t")? {
                        Value::Null => None,
                        v => Some(
                            v.as_i64()
                                .ok_or_else(|| err("min_t must be an integer or null"))?,
                        ),
                    };
                    Ok(H0Piece {
                        min_t,
                        poly: value_to_poly(get(p, "coefficients")?)?,
                    })
                })
                .collect::<Result<Vec<_>, CatalogError>>()?;
            Some(PiecewiseH0::new(pieces)?)
        }
        _ => return Err(err("h0_series must be null or an array of pieces")),
    };

    let flags_map = get(map, "flags")?
        .as_object()
        .ok_or_else(|| err("flags must be an object"))?;
    let flags = Flags {
        reflexive: flag(flags_map, "reflexive")?,
        torsion_free: flag(flags_map, "torsion_free")?,
        split: flag(flags_map, "split")?,
        semistable: flag(flags_map, "semistable")?,
        stable: flag(flags_map, "stable")?,
    };

    let provenance = get(map, "provenance")?
        .as_str()
        .ok_or_else(|| err("provenance must be a string"))?
        .to_string();

    let descriptor = SheafDescriptor {
        name,
        ambient_dim,
        rank,
        chern,
        splitting,
        gst,
        h0_series,
        flags,
        provenance,
    };
    descriptor.validate()?;
    Ok(descriptor)
}

/// Serialize descriptors as the canonical document (pretty-printed, stable
/// key order, trailing newline).
pub fn document_to_json(descriptors: &[SheafDescriptor]) -> String {
    let mut root = Map::new();
    root.insert(
        "descriptors".into(),
        Value::Array(descriptors.iter().map(descriptor_to_value).collect()),
    );
    let mut text = serde_json::to_string_pretty(&Value::Object(root))
        .expect("serializable document");
    text.push('\n');
    text
}

/// Parse and validate a descriptor document.
pub fn document_from_json(text: &str) -> Result<Vec<SheafDescriptor>, CatalogError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| err(format!("invalid JSON: {e}")))?;
    let map = value
        .as_object()
        .ok_or_else(|| err("document must be an object"))?;
    let list = get(map, "descriptors")?
        .as_array()
        .ok_or_else(|| err("'descriptors' must be an array"))?;
    list.iter().map(value_to_descriptor).collect()
}
