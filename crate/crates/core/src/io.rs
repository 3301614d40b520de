//! JSON import and export for exact matrices.
//!
//! Schema: an object with `dim`, `den_pow`, and `dim x dim` integer tables
//! `re` and `im`; the true matrix is `(re + i*im) / 2^den_pow`. Matrices
//! with 1/sqrt2 content carry two additional tables `re_sqrt2` and
//! `im_sqrt2` holding the coefficients of sqrt2 at the same denominator.
//! Integers are written as plain JSON numbers with arbitrary precision, so
//! the round trip is lossless at any magnitude.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Number, Value};
use thiserror::Error;

use crate::dyadic::DyadicComplex;
use crate::matrix::ExactMatrix;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("failed to read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("failed to write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid matrix document: {0}")]
    Schema(String),
}

fn bigint_to_number(v: &BigInt) -> Number {
    // With the arbitrary_precision feature every decimal integer literal is
    // representable; from_str only fails on non-numeric input.
    Number::from_str(&v.to_string()).expect("decimal integer literal")
}

fn number_to_bigint(v: &Value, what: &str) -> Result<BigInt, IoError> {
    let n = v
        .as_number()
        .ok_or_else(|| IoError::Schema(format!("{what} must be an integer")))?;
    BigInt::from_str(&n.to_string())
        .map_err(|_| IoError::Schema(format!("{what} must be an integer, got {n}")))
}

fn component_table(
    m: &ExactMatrix,
    den_pow: u32,
    pick: fn(&DyadicComplex, u32) -> BigInt,
) -> (Value, bool) {
    let dim = m.dim();
    let mut any_nonzero = false;
    let mut rows = Vec::with_capacity(dim);
    for r in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for c in 0..dim {
            let v = pick(m.entry(r, c), den_pow);
            any_nonzero |= !v.is_zero();
            row.push(Value::Number(bigint_to_number(&v)));
        }
        rows.push(Value::Array(row));
    }
    (Value::Array(rows), any_nonzero)
}

/// Serialize a matrix to the document form.
pub fn matrix_to_json(m: &ExactMatrix) -> Value {
    let den_pow = (0..m.dim() * m.dim())
        .map(|k| m.entries()[k].den_pow())
        .max()
        .unwrap_or(0);
    let (re, _) = component_table(m, den_pow, |e, k| e.numerators_at(k).0);
    let (im, _) = component_table(m, den_pow, |e, k| e.numerators_at(k).2);
    let (re_rt2, has_re_rt2) = component_table(m, den_pow, |e, k| e.numerators_at(k).1);
    let (im_rt2, has_im_rt2) = component_table(m, den_pow, |e, k| e.numerators_at(k).3);

    let mut doc = Map::new();
    doc.insert("dim".into(), json!(m.dim()));
    doc.insert("den_pow".into(), json!(den_pow));
    doc.insert("re".into(), re);
    doc.insert("im".into(), im);
    if has_re_rt2 || has_im_rt2 {
        doc.insert("re_sqrt2".into(), re_rt2);
        doc.insert("im_sqrt2".into(), im_rt2);
    }
    Value::Object(doc)
}

/// Serialize a list of amplitudes in the matrix document style: one
/// `den_pow` plus flat integer arrays for each component, the sqrt2 pair
/// present only when some entry needs it.
pub fn amplitudes_to_json(amps: &[DyadicComplex]) -> Value {
    let den_pow = amps.iter().map(DyadicComplex::den_pow).max().unwrap_or(0);
    let component = |pick: fn(&DyadicComplex, u32) -> BigInt| -> (Value, bool) {
        let mut any = false;
        let vals: Vec<Value> = amps
            .iter()
            .map(|a| {
                let v = pick(a, den_pow);
                any |= !v.is_zero();
                Value::Number(bigint_to_number(&v))
            })
            .collect();
        (Value::Array(vals), any)
    };
    let (re, _) = component(|e, k| e.numerators_at(k).0);
    let (im, _) = component(|e, k| e.numerators_at(k).2);
    let (re_rt2, has_re_rt2) = component(|e, k| e.numerators_at(k).1);
    let (im_rt2, has_im_rt2) = component(|e, k| e.numerators_at(k).3);

    let mut doc = Map::new();
    doc.insert("den_pow".into(), json!(den_pow));
    doc.insert("re".into(), re);
    doc.insert("im".into(), im);
    if has_re_rt2 || has_im_rt2 {
        doc.insert("re_sqrt2".into(), re_rt2);
        doc.insert("im_sqrt2".into(), im_rt2);
    }
    Value::Object(doc)
}

fn read_table(doc: &Value, key: &str, dim: usize, required: bool) -> Result<Vec<BigInt>, IoError> {
    let Some(table) = doc.get(key) else {
        if required {
            return Err(IoError::Schema(format!("missing key {key:?}")));
        }
        return Ok(vec![BigInt::zero(); dim * dim]);
    };
    let rows = table
        .as_array()
        .ok_or_else(|| IoError::Schema(format!("{key} must be an array of rows")))?;
    if rows.len() != dim {
        return Err(IoError::Schema(format!(
            "{key} has {} rows, expected {dim}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(dim * dim);
    for (r, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| IoError::Schema(format!("{key}[{r}] must be an array")))?;
        if cells.len() != dim {
            return Err(IoError::Schema(format!(
                "{key}[{r}] has {} entries, expected {dim}",
                cells.len()
            )));
        }
        for (c, cell) in cells.iter().enumerate() {
            out.push(number_to_bigint(cell, &format!("{key}[{r}][{c}]"))?);
        }
    }
    Ok(out)
}

/// Parse a matrix from the document form.
pub fn matrix_from_json(doc: &Value) -> Result<ExactMatrix, IoError> {
    let dim = doc
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError::Schema("missing key \"dim\"".into()))? as usize;
    if dim == 0 {
        return Err(IoError::Schema("dim must be positive".into()));
    }
    let den_pow = doc
        .get("den_pow")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError::Schema("missing key \"den_pow\"".into()))? as u32;
    let re = read_table(doc, "re", dim, true)?;
    let im = read_table(doc, "im", dim, true)?;
    let re_rt2 = read_table(doc, "re_sqrt2", dim, false)?;
    let im_rt2 = read_table(doc, "im_sqrt2", dim, false)?;

    let entries = (0..dim * dim)
        .map(|k| {
            DyadicComplex::new(
                re[k].clone(),
                re_rt2[k].clone(),
                im[k].clone(),
                im_rt2[k].clone(),
                den_pow,
            )
        })
        .collect();
    Ok(ExactMatrix::from_entries(dim, entries))
}

/// Read a matrix document from a file.
pub fn read_matrix(path: &Path) -> Result<ExactMatrix, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let doc: Value = serde_json::from_str(&text)?;
    matrix_from_json(&doc)
}

/// Write a matrix document to a file.
pub fn write_matrix(path: &Path, m: &ExactMatrix) -> Result<(), IoError> {
    let text = serde_json::to_string_pretty(&matrix_to_json(m)).expect("serializable document");
    std::fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}
