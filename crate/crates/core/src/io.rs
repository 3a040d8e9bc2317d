//! JSON encoding of algebras and derivations.
//!
//! Pairs are 1-based with `i < j`, written in the order
//! `(1,2), (1,3), (2,3), (1,4), …`; zero entries are omitted.

use std::path::Path;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::algebra::AnticommAlgebra;
use crate::derivations::AlphaLambdaDerivation;
use crate::exactfield::Field;
use crate::exactla::{Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("parse error at line {0}: {1}")]
    ParseError(usize, String),
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("{0}")]
    Io(String),
}

type Result<T> = std::result::Result<T, IoError>;

fn schema<T>(msg: impl Into<String>) -> Result<T> {
    Err(IoError::SchemaError(msg.into()))
}

fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rationals => Value::String("Q".into()),
        Field::Gf(p) => serde_json::json!({ "GF": p }),
    }
}

fn field_from_json(v: &Value) -> Result<Field> {
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Q),
        Value::Object(m) if m.len() == 1 => match m.get("GF").and_then(Value::as_u64) {
            Some(p) => Field::prime(p).map_err(|e| IoError::SchemaError(e.to_string())),
            None => schema("field must be \"Q\" or {\"GF\": p}"),
        },
        _ => schema("field must be \"Q\" or {\"GF\": p}"),
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn parse_pair(key: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || IoError::SchemaError(format!("bad pair key {key:?}"));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let (i, j) = (
        a.parse::<usize>().map_err(|_| bad())?,
        b.parse::<usize>().map_err(|_| bad())?,
    );
    if i == 0 || j > n || i >= j {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}

fn scalar(f: Field, v: &Value, what: &str) -> Result<crate::exactfield::Scalar> {
    match v {
        Value::String(s) => f
            .parse(s)
            .map_err(|e| IoError::SchemaError(format!("{what}: {e}"))),
        _ => schema(format!("{what}: scalars are strings")),
    }
}

pub fn algebra_from_value(v: &Value) -> Result<AnticommAlgebra> {
    let Value::Object(m) = v else {
        return schema("top level must be an object");
    };
    if let Some(k) = m
        .keys()
        .find(|k| !["field", "dim", "bracket", "omega"].contains(&k.as_str()))
    {
        return schema(format!("unknown key {k:?}"));
    }
    let field = field_from_json(
        m.get("field")
            .ok_or_else(|| IoError::SchemaError("missing field".into()))?,
    )?;
    let n = m
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError::SchemaError("dim must be a nonnegative integer".into()))?
        as usize;
    let mut a = AnticommAlgebra::new(field, n);
    let empty = Value::Object(Map::new());
    let Value::Object(br) = m.get("bracket").unwrap_or(&empty) else {
        return schema("bracket must be an object");
    };
    for (key, val) in br {
        let (i, j) = parse_pair(key, n)?;
        let Value::Object(coeffs) = val else {
            return schema(format!("bracket {key:?} must be an object"));
        };
        let mut v = Vector::zeros(field, n);
        for (k, c) in coeffs {
            let idx = k.parse::<usize>().ok().filter(|&x| x >= 1 && x <= n);
            let Some(idx) = idx else {
                return schema(format!("bad basis index {k:?} in bracket {key:?}"));
            };
            v[idx - 1] = scalar(field, c, key)?;
        }
        a.set_bracket(i, j, v);
    }
    let Value::Object(om) = m.get("omega").unwrap_or(&empty) else {
        return schema("omega must be an object");
    };
    for (key, val) in om {
        let (i, j) = parse_pair(key, n)?;
        a.set_omega(i, j, scalar(field, val, key)?);
    }
    Ok(a)
}

pub fn algebra_from_str(text: &str) -> Result<AnticommAlgebra> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| IoError::ParseError(e.line(), e.to_string()))?;
    algebra_from_value(&v)
}

pub fn algebra_to_value(a: &AnticommAlgebra) -> Value {
    let n = a.dim();
    let mut br = Map::new();
    let mut om = Map::new();
    for (i, j) in pairs(n) {
        let key = format!("{},{}", i + 1, j + 1);
        let v = a.bracket_basis(i, j);
        if !v.is_zero() {
            let mut c = Map::new();
            for k in 0..n {
                if !v[k].is_zero() {
                    c.insert((k + 1).to_string(), Value::String(v[k].encode()));
                }
            }
            br.insert(key.clone(), Value::Object(c));
        }
        let w = a.omega_basis(i, j);
        if !w.is_zero() {
            om.insert(key, Value::String(w.encode()));
        }
    }
    let mut m = Map::new();
    m.insert("field".into(), field_to_json(a.field()));
    m.insert("dim".into(), Value::from(n));
    m.insert("bracket".into(), Value::Object(br));
    m.insert("omega".into(), Value::Object(om));
    Value::Object(m)
}

fn inline(v: &Value) -> String {
    serde_json::to_string(v)
        .expect("serializable")
        .replace("\":", "\": ")
        .replace(",\"", ", \"")
}

fn inline_map(m: &Value) -> String {
    let Value::Object(m) = m else { unreachable!() };
    if m.is_empty() {
        return "{}".into();
    }
    let items: Vec<String> = m
        .iter()
        .map(|(k, v)| format!("\"{k}\": {}", inline(v)))
        .collect();
    format!("{{ {} }}", items.join(", "))
}

/// Canonical text: one top-level key per line, maps inline.
pub fn algebra_to_string(a: &AnticommAlgebra) -> String {
    let v = algebra_to_value(a);
    format!(
        "{{\n  \"field\": {},\n  \"dim\": {},\n  \"bracket\": {},\n  \"omega\": {}\n}}\n",
        inline(&v["field"]),
        a.dim(),
        inline_map(&v["bracket"]),
        inline_map(&v["omega"]),
    )
}

pub fn load(path: impl AsRef<Path>) -> Result<AnticommAlgebra> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| IoError::Io(format!("{}: {e}", path.as_ref().display())))?;
    algebra_from_str(&text)
}

pub fn save(a: &AnticommAlgebra, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), algebra_to_string(a))
        .map_err(|e| IoError::Io(format!("{}: {e}", path.as_ref().display())))
}

fn strings(v: &Vector) -> Value {
    Value::Array(
        v.entries()
            .iter()
            .map(|s| Value::String(s.encode()))
            .collect(),
    )
}

pub fn derivation_to_value(d: &AlphaLambdaDerivation) -> Value {
    serde_json::json!({
        "D": d.d.row_vectors().iter().map(strings).collect::<Vec<_>>(),
        "alpha": strings(&d.alpha),
        "lambda": strings(&d.lambda),
    })
}

fn vector_from(f: Field, n: usize, v: &Value, what: &str) -> Result<Vector> {
    let Value::Array(xs) = v else {
        return schema(format!("{what} must be an array"));
    };
    if xs.len() != n {
        return schema(format!("{what} must have length {n}"));
    }
    Ok(Vector::from_scalars(
        f,
        xs.iter()
            .map(|x| scalar(f, x, what))
            .collect::<Result<_>>()?,
    ))
}

/// Parses a derivation for an algebra of dimension `n`. A missing
/// `"lambda"` is returned as `None`.
pub fn derivation_from_str(
    text: &str,
    f: Field,
    n: usize,
) -> Result<(Matrix, Vector, Option<Vector>)> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| IoError::ParseError(e.line(), e.to_string()))?;
    let Value::Object(m) = &v else {
        return schema("derivation must be an object");
    };
    if let Some(k) = m
        .keys()
        .find(|k| !["D", "alpha", "lambda"].contains(&k.as_str()))
    {
        return schema(format!("unknown key {k:?}"));
    }
    let Some(Value::Array(rows)) = m.get("D") else {
        return schema("D must be an array of rows");
    };
    if rows.len() != n {
        return schema(format!("D must have {n} rows"));
    }
    let rows: Vec<Vector> = rows
        .iter()
        .map(|r| vector_from(f, n, r, "D row"))
        .collect::<Result<_>>()?;
    let alpha = match m.get("alpha") {
        Some(a) => vector_from(f, n, a, "alpha")?,
        None => return schema("missing alpha"),
    };
    let lambda = m
        .get("lambda")
        .map(|l| vector_from(f, n, l, "lambda"))
        .transpose()?;
    Ok((Matrix::from_rows(f, n, &rows), alpha, lambda))
}
