//! Canonical JSON for polynomials, matrices, representations and reports.
//!
//! Objects are `serde_json::Value`s, whose maps keep keys sorted, and polynomial terms
//! come out in exponent order, so the same input always yields the same bytes.
//!
//! ```text
//! poly    {"terms":[{"c":"-1","e":[1]},…],"vars":["t"]}      zero is "terms":[]
//! matrix  {"cols":2,"entries":[[{"terms":…},…],…],"rows":2,"vars":["t"]}
//! rep     {"dim":…,"n":…,"name":…,"sigma":[matrix…],"tau":[matrix…],"vars":[…]}
//! ```
//!
//! Matrix entries omit `vars`; they inherit the matrix context.

use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use wrep_core::reps::{Certificate, MatrixRep, RepReport};
use wrep_core::ring::{LaurentPoly, MatrixLP, Vars};

use crate::error::{Result, WrepError};

fn schema(msg: impl Into<String>) -> WrepError {
    WrepError::Schema(msg.into())
}

fn terms_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!({ "c": c.to_string(), "e": e }))
            .collect(),
    )
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    json!({ "terms": terms_json(p), "vars": p.vars().names() })
}

fn vars_from(v: &Value) -> Result<Vars> {
    let arr = v.as_array().ok_or_else(|| schema("`vars` must be an array of strings"))?;
    let names = arr
        .iter()
        .map(|x| x.as_str().map(str::to_owned).ok_or_else(|| schema("variable names must be strings")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Vars::new(&names))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("{what} is missing `{key}`")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(format!("{what} must be an object")))
}

fn usize_field(obj: &Map<String, Value>, key: &str, what: &str) -> Result<usize> {
    field(obj, key, what)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(format!("`{key}` of {what} must be a non-negative integer")))
}

/// Reads a polynomial; `ctx` supplies the context when the object has no `vars`.
pub fn poly_from_json(v: &Value, ctx: Option<&Vars>) -> Result<LaurentPoly> {
    let obj = object(v, "polynomial")?;
    let vars = match (obj.get("vars"), ctx) {
        (Some(vs), Some(c)) => {
            let own = vars_from(vs)?;
            if &own != c {
                return Err(schema(format!("entry vars {:?} differ from {:?}", own.names(), c.names())));
            }
            own
        }
        (Some(vs), None) => vars_from(vs)?,
        (None, Some(c)) => c.clone(),
        (None, None) => return Err(schema("polynomial is missing `vars`")),
    };
    let terms = field(obj, "terms", "polynomial")?
        .as_array()
        .ok_or_else(|| schema("`terms` must be an array"))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for term in terms {
        let t = object(term, "term")?;
        let c: BigInt = field(t, "c", "term")?
            .as_str()
            .ok_or_else(|| schema("coefficient `c` must be a decimal string"))?
            .parse()
            .map_err(|_| schema("coefficient `c` is not an integer"))?;
        let e = field(t, "e", "term")?
            .as_array()
            .ok_or_else(|| schema("exponents `e` must be an array"))?
            .iter()
            .map(|x| {
                x.as_i64()
                    .and_then(|k| i32::try_from(k).ok())
                    .ok_or_else(|| schema("exponents must be 32-bit integers"))
            })
            .collect::<Result<Vec<i32>>>()?;
        if e.len() != vars.len() {
            return Err(schema(format!("exponent vector of length {} for {} variables", e.len(), vars.len())));
        }
        parsed.push((e, c));
    }
    Ok(LaurentPoly::from_terms(&vars, parsed)?)
}

pub fn matrix_to_json(m: &MatrixLP) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array(m.row(r).iter().map(|p| json!({ "terms": terms_json(p) })).collect()))
        .collect();
    json!({ "cols": m.cols(), "entries": entries, "rows": m.rows(), "vars": m.vars().names() })
}

pub fn matrix_from_json(v: &Value) -> Result<MatrixLP> {
    let obj = object(v, "matrix")?;
    let rows = usize_field(obj, "rows", "matrix")?;
    let cols = usize_field(obj, "cols", "matrix")?;
    let vars = vars_from(field(obj, "vars", "matrix")?)?;
    let entries = field(obj, "entries", "matrix")?
        .as_array()
        .ok_or_else(|| schema("`entries` must be an array of rows"))?;
    if entries.len() != rows {
        return Err(schema(format!("{} rows listed, `rows` says {rows}", entries.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in entries.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| schema("each row must be an array"))?;
        if row.len() != cols {
            return Err(schema(format!("row {} has {} entries, `cols` says {cols}", i + 1, row.len())));
        }
        for e in row {
            data.push(poly_from_json(e, Some(&vars))?);
        }
    }
    Ok(MatrixLP::new(rows, cols, &vars, data)?)
}

pub fn rep_to_json(rep: &MatrixRep) -> Value {
    json!({
        "dim": rep.dim(),
        "n": rep.n(),
        "name": rep.name,
        "sigma": rep.sigma().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "tau": rep.tau().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "vars": rep.vars().names(),
    })
}

pub fn rep_from_json(v: &Value) -> Result<MatrixRep> {
    let obj = object(v, "representation")?;
    let n = usize_field(obj, "n", "representation")?;
    let dim = usize_field(obj, "dim", "representation")?;
    let name = field(obj, "name", "representation")?
        .as_str()
        .ok_or_else(|| schema("`name` must be a string"))?;
    let vars = vars_from(field(obj, "vars", "representation")?)?;
    let list = |key: &str| -> Result<Vec<MatrixLP>> {
        field(obj, key, "representation")?
            .as_array()
            .ok_or_else(|| schema(format!("`{key}` must be an array of matrices")))?
            .iter()
            .map(|m| {
                let m = matrix_from_json(m)?;
                if m.vars() != &vars {
                    return Err(schema(format!("a `{key}` matrix uses vars {:?}", m.vars().names())));
                }
                if m.dims() != (dim, dim) {
                    return Err(schema(format!("a `{key}` matrix is {:?}, `dim` says {dim}", m.dims())));
                }
                Ok(m)
            })
            .collect()
    };
    Ok(MatrixRep::new(name, n, list("sigma")?, list("tau")?)?)
}

fn certificate_json(c: &Certificate) -> Value {
    json!({
        "generator": c.generator,
        "invariant": c.invariant.as_str(),
        "left": poly_to_json(&c.left),
        "right": poly_to_json(&c.right),
    })
}

pub fn report_to_json(r: &RepReport) -> Value {
    let mut obj = Map::new();
    obj.insert("check".into(), json!(r.check));
    obj.insert("status".into(), json!(r.status.as_str()));
    if let Some(c) = &r.counterexample {
        obj.insert("counterexample".into(), json!(c));
    }
    if let Some(m) = &r.matched_candidate {
        obj.insert("matched_candidate".into(), json!(m));
    }
    obj.insert("fixtures_compared".into(), json!(r.fixtures_compared));
    obj.insert("details".into(), json!(r.details));
    obj.insert("certificates".into(), Value::Array(r.certificates.iter().map(certificate_json).collect()));
    Value::Object(obj)
}

/// Pretty-printed, newline-terminated.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

/// Parses fixture text: one matrix object or an array of them.
pub fn parse_fixture(text: &str) -> Result<Vec<MatrixLP>> {
    if text.trim().is_empty() {
        return Err(schema("empty fixture"));
    }
    let v: Value = serde_json::from_str(text)?;
    match &v {
        Value::Array(items) => items.iter().map(matrix_from_json).collect(),
        Value::Object(_) => Ok(vec![matrix_from_json(&v)?]),
        _ => Err(schema("fixture must be a matrix object or an array of matrices")),
    }
}

pub fn load_fixture(path: &Path) -> Result<Vec<MatrixLP>> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| WrepError::Io { path: path.to_owned(), source })?;
    parse_fixture(&text)
}
