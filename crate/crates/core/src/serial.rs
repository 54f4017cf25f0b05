//! JSON forms of matrices and group elements: a complex number is
//! `[re, im]`, a matrix is a list of rows.

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, Scalar};
use crate::error::{Error, Result};
use crate::group::{DElement, TElement};
use crate::matrix::SquareMatrix;
use crate::spacetime::{LorentzMatrix, SpinPoincareElement, Vec4};

pub fn scalar_json(z: Scalar) -> Value {
    json!([z.re, z.im])
}

pub fn matrix_json(m: &SquareMatrix) -> Value {
    Value::Array(
        m.rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(scalar_json).collect()))
            .collect(),
    )
}

pub fn lorentz_json(l: &LorentzMatrix) -> Value {
    json!(l.0)
}

pub fn vec4_json(v: &Vec4) -> Value {
    if v.is_real() {
        json!(v.real_parts())
    } else {
        Value::Array(v.components().iter().map(|z| scalar_json(*z)).collect())
    }
}

/// Matrix form when available, coordinates otherwise.
pub fn element_json(e: &AlgebraElement) -> Value {
    match e.to_matrix() {
        Ok(m) => matrix_json(&m),
        Err(_) => Value::Array(e.coords().iter().map(|z| scalar_json(*z)).collect()),
    }
}

pub fn d_json(x: &DElement) -> Value {
    json!({
        "kind": "D",
        "B": element_json(x.translation()),
        "L": element_json(x.left()),
    })
}

pub fn t_json(x: &TElement) -> Value {
    json!({
        "kind": "T",
        "B": element_json(x.translation()),
        "L": element_json(x.left()),
        "R": element_json(x.right()),
    })
}

pub fn spin_json(x: &SpinPoincareElement) -> Value {
    json!({
        "kind": "spin",
        "H": matrix_json(x.translation()),
        "Lambda": matrix_json(x.spinor()),
    })
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    let bad = || Error::Unsupported(format!("expected a number or [re, im], found {v}"));
    match v {
        Value::Number(n) => Ok(Complex64::new(n.as_f64().ok_or_else(bad)?, 0.0)),
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64().ok_or_else(bad)?;
            let im = pair[1].as_f64().ok_or_else(bad)?;
            Ok(Complex64::new(re, im))
        }
        _ => Err(bad()),
    }
}

pub fn matrix_from_json(v: &Value) -> Result<SquareMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Unsupported(format!("expected a list of rows, found {v}")))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Unsupported(format!("expected a row, found {row}")))?
                .iter()
                .map(scalar_from_json)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_rows(rows)
}
