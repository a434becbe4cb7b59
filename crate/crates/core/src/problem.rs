//! Problem files: a JSON description of `(g, h)` with exact rational
//! entries, plus optional Cartan data overrides.
//!
//! Rationals are written as strings `"p/q"` / `"p"` or as JSON integers.
//! Floating-point literals are rejected.

use std::path::Path;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::liealg::{maximal_abelian, positivity_from_signs, CartanData, CartanDecomposition, LieAlgebra};
use crate::linalg::{format_rational, Matrix, Rational, Subspace};
use crate::spherical::SphericalPair;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub name: String,
    pub matrix_size: usize,
    pub basis: Vec<Matrix>,
    pub subalgebra_basis: Vec<Matrix>,
    /// Involution as a `d × d` matrix acting on basis coordinates.
    pub theta: Option<Matrix>,
    pub a_seed: Option<Vec<Matrix>>,
    pub positivity_basis: Option<Vec<Matrix>>,
    /// Sign per echelon basis vector of `a`; an alternative to `positivity_basis`.
    pub minimal_parabolic_hint: Option<Vec<i8>>,
}

fn parse_err(path: &str, message: impl Into<String>) -> Error {
    Error::Parse { path: path.to_string(), message: message.into() }
}

pub fn parse_rational(value: &Value, path: &str) -> Result<Rational> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if n.is_u64() {
                Ok(Rational::from_integer(n.as_u64().expect("checked").into()))
            } else {
                Err(parse_err(path, format!("floating-point literal {n} is not allowed; write an exact \"p/q\" string")))
            }
        }
        Value::String(s) => parse_rational_str(s.trim()).map_err(|m| parse_err(path, m)),
        other => Err(parse_err(path, format!("expected a rational, found {}", kind(other)))),
    }
}

fn parse_rational_str(s: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let parse = |t: &str| t.parse::<num_bigint::BigInt>().map_err(|_| format!("malformed rational \"{s}\""));
    let (n, d) = (parse(num)?, parse(den)?);
    if d.is_zero() {
        return Err(format!("zero denominator in \"{s}\""));
    }
    Ok(Rational::new(n, d))
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(path, format!("expected an array, found {}", kind(v))))
}

fn parse_matrix(v: &Value, rows: usize, cols: usize, path: &str) -> Result<Matrix> {
    let arr = as_array(v, path)?;
    if arr.len() != rows {
        return Err(parse_err(path, format!("expected {rows} rows, found {}", arr.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in arr.iter().enumerate() {
        let rp = format!("{path}[{i}]");
        let r = as_array(row, &rp)?;
        if r.len() != cols {
            return Err(parse_err(&rp, format!("expected {cols} entries, found {}", r.len())));
        }
        for (j, x) in r.iter().enumerate() {
            data.push(parse_rational(x, &format!("{rp}[{j}]"))?);
        }
    }
    Ok(Matrix::from_flat(rows, cols, data))
}

fn parse_matrix_list(v: &Value, n: usize, path: &str) -> Result<Vec<Matrix>> {
    as_array(v, path)?.iter().enumerate().map(|(k, m)| parse_matrix(m, n, n, &format!("{path}[{k}]"))).collect()
}

impl Problem {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| parse_err("$", e.to_string()))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| parse_err("$", "expected an object"))?;
        if let Some(v) = obj.get("schema_version") {
            if v.as_u64() != Some(SCHEMA_VERSION) {
                return Err(parse_err("schema_version", format!("unsupported schema version {v}")));
            }
        }
        let name = match obj.get("name") {
            Some(Value::String(s)) => s.clone(),
            Some(other) => return Err(parse_err("name", format!("expected a string, found {}", kind(other)))),
            None => "problem".to_string(),
        };
        let matrix_size = obj
            .get("matrix_size")
            .ok_or_else(|| parse_err("matrix_size", "missing field"))?
            .as_u64()
            .filter(|&n| n > 0)
            .ok_or_else(|| parse_err("matrix_size", "expected a positive integer"))? as usize;
        let basis = parse_matrix_list(obj.get("basis").ok_or_else(|| parse_err("basis", "missing field"))?, matrix_size, "basis")?;
        let subalgebra_basis = match obj.get("subalgebra_basis") {
            Some(v) => parse_matrix_list(v, matrix_size, "subalgebra_basis")?,
            None => return Err(parse_err("subalgebra_basis", "missing field")),
        };
        let optional = |key: &str| obj.get(key).filter(|v| !v.is_null());
        let theta = optional("theta").map(|v| parse_matrix(v, basis.len(), basis.len(), "theta")).transpose()?;
        let a_seed = optional("a_seed").map(|v| parse_matrix_list(v, matrix_size, "a_seed")).transpose()?;
        let positivity_basis =
            optional("positivity_basis").map(|v| parse_matrix_list(v, matrix_size, "positivity_basis")).transpose()?;
        let minimal_parabolic_hint = optional("minimal_parabolic_hint")
            .map(|v| {
                as_array(v, "minimal_parabolic_hint")?
                    .iter()
                    .enumerate()
                    .map(|(i, s)| match s.as_i64() {
                        Some(1) => Ok(1),
                        Some(-1) => Ok(-1),
                        _ => Err(parse_err(&format!("minimal_parabolic_hint[{i}]"), "expected 1 or -1")),
                    })
                    .collect::<Result<Vec<i8>>>()
            })
            .transpose()?;
        if positivity_basis.is_some() && minimal_parabolic_hint.is_some() {
            return Err(parse_err("minimal_parabolic_hint", "conflicts with positivity_basis; give only one"));
        }
        Ok(Problem { name, matrix_size, basis, subalgebra_basis, theta, a_seed, positivity_basis, minimal_parabolic_hint })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    pub fn to_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
        obj.insert("name".into(), json!(self.name));
        obj.insert("matrix_size".into(), json!(self.matrix_size));
        obj.insert("basis".into(), matrices_to_value(&self.basis));
        obj.insert("subalgebra_basis".into(), matrices_to_value(&self.subalgebra_basis));
        if let Some(t) = &self.theta {
            obj.insert("theta".into(), matrix_to_value(t));
        }
        if let Some(a) = &self.a_seed {
            obj.insert("a_seed".into(), matrices_to_value(a));
        }
        if let Some(p) = &self.positivity_basis {
            obj.insert("positivity_basis".into(), matrices_to_value(p));
        }
        if let Some(h) = &self.minimal_parabolic_hint {
            obj.insert("minimal_parabolic_hint".into(), json!(h));
        }
        Value::Object(obj)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable") + "\n"
    }

    /// Validates everything and assembles the pair.
    pub fn build(&self) -> Result<SphericalPair> {
        let g = LieAlgebra::new(self.matrix_size, self.basis.clone(), Some(self.name.clone()))?;
        let coords = |ms: &[Matrix], field: &str| -> Result<Vec<Vec<Rational>>> {
            ms.iter()
                .enumerate()
                .map(|(i, m)| g.coordinates(m).ok_or_else(|| parse_err(&format!("{field}[{i}]"), "matrix is not in the span of basis")))
                .collect()
        };
        let h = Subspace::span(g.dim(), &coords(&self.subalgebra_basis, "subalgebra_basis")?)?;
        let cdec = CartanDecomposition::new(&g, self.theta.clone())?;
        let seed = match &self.a_seed {
            Some(ms) => Some(Subspace::span(g.dim(), &coords(ms, "a_seed")?)?),
            None => None,
        };
        let a = maximal_abelian(&g, &cdec.s, seed.as_ref())?;
        let positivity = match (&self.positivity_basis, &self.minimal_parabolic_hint) {
            (Some(ms), _) => Some(coords(ms, "positivity_basis")?),
            (None, Some(signs)) => Some(positivity_from_signs(&a, signs)?),
            (None, None) => None,
        };
        let cd = CartanData::from_parts(&g, cdec, a, positivity)?;
        SphericalPair::new(g, cd, h, Some(self.name.clone()))
    }
}

pub fn rational_to_value(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(rational_to_value).collect())).collect())
}

fn matrices_to_value(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(matrix_to_value).collect())
}
