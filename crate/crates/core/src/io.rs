//! JSON documents. Rationals are strings `"p/q"` (integers are also
//! accepted on input), tensors are nested arrays indexed by basis positions
//! with the value vector innermost.

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::HomLYAlgebra;
use crate::cohomology::{Cochain, CocyclePair, Cohomology23, CohomologyHigher};
use crate::extension::AbelianExtension;
use crate::linalg::{Coeff, Matrix, MultiLinear, Rational};
use crate::representation::Representation;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{path}: {msg}")]
    Field { path: String, msg: String },
}

fn field_err(path: &str, msg: impl Into<String>) -> DocError {
    DocError::Field {
        path: path.to_string(),
        msg: msg.into(),
    }
}

pub type DocResult<T> = std::result::Result<T, DocError>;

pub fn parse(text: &str) -> DocResult<Value> {
    Ok(serde_json::from_str(text)?)
}

/// Deterministic pretty printing with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn get<'a>(v: &'a Value, key: &str, path: &str) -> DocResult<&'a Value> {
    v.get(key)
        .ok_or_else(|| field_err(path, format!("missing field \"{key}\"")))
}

fn get_usize(v: &Value, key: &str, path: &str) -> DocResult<usize> {
    get(v, key, path)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| field_err(&format!("{path}.{key}"), "expected a natural number"))
}

fn scalar<S: DeserializeOwned>(v: &Value, path: &str) -> DocResult<S> {
    S::deserialize(v).map_err(|e| field_err(path, e.to_string()))
}

pub fn matrix_from_value(v: &Value, rows: usize, cols: usize, path: &str) -> DocResult<Matrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| field_err(path, "expected an array of rows"))?;
    if arr.len() != rows {
        return Err(field_err(path, format!("expected {rows} rows, found {}", arr.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in arr.iter().enumerate() {
        let rp = format!("{path}[{i}]");
        let r = row.as_array().ok_or_else(|| field_err(&rp, "expected a row"))?;
        if r.len() != cols {
            return Err(field_err(&rp, format!("expected {cols} entries, found {}", r.len())));
        }
        for (j, x) in r.iter().enumerate() {
            data.push(scalar::<Rational>(x, &format!("{rp}[{j}]"))?);
        }
    }
    Ok(Matrix::from_vec(rows, cols, data))
}

/// A matrix of any shape, rows inferred from the document.
pub fn matrix_from_doc(v: &Value, path: &str) -> DocResult<Matrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| field_err(path, "expected an array of rows"))?;
    let cols = arr.first().and_then(Value::as_array).map_or(0, Vec::len);
    matrix_from_value(v, arr.len(), cols, path)
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    serde_json::to_value(m).expect("matrices serialize")
}

fn tensor<S: Coeff + DeserializeOwned>(
    v: &Value,
    arity: usize,
    n: usize,
    m: usize,
    path: &str,
) -> DocResult<MultiLinear<S>> {
    MultiLinear::from_nested(v, arity, n, m).map_err(|e| field_err(path, e))
}

pub fn algebra_to_value<S: Coeff + Serialize>(a: &HomLYAlgebra<S>) -> Value {
    json!({
        "dim": a.dim,
        "alpha": matrix_to_value(&a.alpha),
        "binary": a.binary.to_nested(),
        "ternary": a.ternary.to_nested(),
    })
}

pub fn algebra_from_value<S: Coeff + DeserializeOwned>(v: &Value, path: &str) -> DocResult<HomLYAlgebra<S>> {
    let n = get_usize(v, "dim", path)?;
    let alpha = matrix_from_value(get(v, "alpha", path)?, n, n, &format!("{path}.alpha"))?;
    let binary = tensor(get(v, "binary", path)?, 2, n, n, &format!("{path}.binary"))?;
    let ternary = tensor(get(v, "ternary", path)?, 3, n, n, &format!("{path}.ternary"))?;
    HomLYAlgebra::new(alpha, binary, ternary).map_err(|e| field_err(path, e.to_string()))
}

pub fn rep_to_value(r: &Representation) -> Value {
    rep_to_value_with(r, algebra_to_value(&r.algebra))
}

/// A representation document whose `algebra` field is `algebra` verbatim,
/// e.g. a file reference.
pub fn rep_to_value_with(r: &Representation, algebra: Value) -> Value {
    let grid = |g: &Vec<Vec<Matrix>>| -> Value {
        Value::Array(
            g.iter()
                .map(|row| Value::Array(row.iter().map(matrix_to_value).collect()))
                .collect(),
        )
    };
    json!({
        "algebra": algebra,
        "vdim": r.vdim,
        "beta": matrix_to_value(&r.beta),
        "rho": Value::Array(r.rho.iter().map(matrix_to_value).collect()),
        "D": grid(&r.d),
        "theta": grid(&r.theta),
    })
}

/// `resolve` turns a string-valued `algebra` field into an algebra document.
pub fn rep_from_value(
    v: &Value,
    path: &str,
    resolve: &dyn Fn(&str) -> DocResult<Value>,
) -> DocResult<Representation> {
    let av = get(v, "algebra", path)?;
    let algebra: HomLYAlgebra = match av {
        Value::String(s) => algebra_from_value(&resolve(s)?, s)?,
        other => algebra_from_value(other, &format!("{path}.algebra"))?,
    };
    let n = algebra.dim;
    let m = get_usize(v, "vdim", path)?;
    let beta = matrix_from_value(get(v, "beta", path)?, m, m, &format!("{path}.beta"))?;
    let list = |key: &str, p: &str, len: usize| -> DocResult<Vec<Value>> {
        let arr = get(v, key, path)?
            .as_array()
            .ok_or_else(|| field_err(p, "expected an array"))?;
        if arr.len() != len {
            return Err(field_err(p, format!("expected {len} entries, found {}", arr.len())));
        }
        Ok(arr.clone())
    };
    let rp = format!("{path}.rho");
    let rho = list("rho", &rp, n)?
        .iter()
        .enumerate()
        .map(|(i, x)| matrix_from_value(x, m, m, &format!("{rp}[{i}]")))
        .collect::<DocResult<Vec<_>>>()?;
    let grid = |key: &str| -> DocResult<Vec<Vec<Matrix>>> {
        let gp = format!("{path}.{key}");
        list(key, &gp, n)?
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let row = row
                    .as_array()
                    .filter(|r| r.len() == n)
                    .ok_or_else(|| field_err(&format!("{gp}[{i}]"), format!("expected {n} matrices")))?;
                row.iter()
                    .enumerate()
                    .map(|(j, x)| matrix_from_value(x, m, m, &format!("{gp}[{i}][{j}]")))
                    .collect()
            })
            .collect()
    };
    let d = grid("D")?;
    let theta = grid("theta")?;
    Representation::new(algebra, beta, rho, d, theta).map_err(|e| field_err(path, e.to_string()))
}

pub fn cochain_to_value(f: &Cochain) -> Value {
    json!({ "arity": f.arity(), "coeffs": f.to_nested() })
}

pub fn cochain_from_value(v: &Value, n: usize, m: usize, path: &str) -> DocResult<Cochain> {
    let arity = get_usize(v, "arity", path)?;
    tensor(get(v, "coeffs", path)?, arity, n, m, &format!("{path}.coeffs"))
}

pub fn pair_to_value(p: &CocyclePair) -> Value {
    json!({ "nu": cochain_to_value(&p.nu), "omega": cochain_to_value(&p.omega) })
}

pub fn pair_from_value(v: &Value, n: usize, m: usize, path: &str) -> DocResult<CocyclePair> {
    let nu = cochain_from_value(get(v, "nu", path)?, n, m, &format!("{path}.nu"))?;
    let omega = cochain_from_value(get(v, "omega", path)?, n, m, &format!("{path}.omega"))?;
    for (f, want, key) in [(&nu, 2, "nu"), (&omega, 3, "omega")] {
        if f.arity() != want {
            return Err(field_err(
                &format!("{path}.{key}.arity"),
                format!("expected {want}, found {}", f.arity()),
            ));
        }
    }
    Ok(CocyclePair { nu, omega })
}

pub fn extension_to_value(e: &AbelianExtension) -> Value {
    json!({
        "total": algebra_to_value(&e.total),
        "inj": matrix_to_value(&e.inj),
        "proj": matrix_to_value(&e.proj),
        "base": algebra_to_value(&e.base),
        "module_twist": matrix_to_value(&e.module_twist),
    })
}

pub fn extension_from_value(v: &Value, path: &str) -> DocResult<AbelianExtension> {
    let total: HomLYAlgebra = algebra_from_value(get(v, "total", path)?, &format!("{path}.total"))?;
    let base: HomLYAlgebra = algebra_from_value(get(v, "base", path)?, &format!("{path}.base"))?;
    let module_twist = matrix_from_doc(get(v, "module_twist", path)?, &format!("{path}.module_twist"))?;
    let (big, n, m) = (total.dim, base.dim, module_twist.rows());
    let inj = matrix_from_value(get(v, "inj", path)?, big, m, &format!("{path}.inj"))?;
    let proj = matrix_from_value(get(v, "proj", path)?, n, big, &format!("{path}.proj"))?;
    Ok(AbelianExtension {
        total,
        inj,
        proj,
        base,
        module_twist,
    })
}

pub fn cohomology23_to_value(h: &Cohomology23) -> Value {
    json!({
        "c2dim": h.c2dim,
        "c3dim": h.c3dim,
        "zdim": h.zdim,
        "bdim": h.bdim,
        "hdim2": h.hdim2,
        "hdim3": h.hdim3,
        "hdim": h.hdim,
        "representatives": h.representatives.iter().map(pair_to_value).collect::<Vec<_>>(),
    })
}

pub fn cohomology_higher_to_value(h: &CohomologyHigher) -> Value {
    json!({
        "level": h.level,
        "cdims": h.cdims,
        "zdim": h.zdim,
        "bdim": h.bdim,
        "hdim": h.hdim,
    })
}

pub fn rationals_to_value(v: &[Rational]) -> Value {
    serde_json::to_value(v).expect("rationals serialize")
}
