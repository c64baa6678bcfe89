//! Exact JSON encoding of scalars, vectors and matrices.
//!
//! Scalars are strings `"p"` or `"p/q"` with `q > 1` and `gcd(p, q) = 1`.
//! Anything else is rejected rather than normalized.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};
use symplin::linalg::{Mat, Scalar, Subspace, Vector};

use crate::error::{invalid, CliResult};

pub fn scalar(x: &Scalar) -> Value {
    if x.denom().is_one() {
        Value::String(x.numer().to_string())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

fn integer(s: &str, signed: bool) -> Option<BigInt> {
    let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
        && !(s.starts_with('-') && digits == "0");
    if canonical {
        BigInt::from_str(s).ok()
    } else {
        None
    }
}

pub fn parse_scalar(v: &Value) -> CliResult<Scalar> {
    let Value::String(s) = v else {
        return Err(invalid(format!("scalar must be a string, found {v}")));
    };
    let bad = || invalid(format!("malformed scalar {s:?}"));
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(integer(s, true).ok_or_else(bad)?)),
        Some((p, q)) => {
            let p = integer(p, true).ok_or_else(bad)?;
            let q = integer(q, false).ok_or_else(bad)?;
            if q.is_zero() || q.is_one() {
                return Err(bad());
            }
            let x = Scalar::new(p.clone(), q.clone());
            if *x.numer() != p || *x.denom() != q {
                return Err(invalid(format!("scalar {s:?} is not in lowest terms")));
            }
            Ok(x)
        }
    }
}

pub fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn rows(rs: &[Vector]) -> Value {
    Value::Array(rs.iter().map(|r| vector(r)).collect())
}

pub fn matrix(m: &Mat) -> Value {
    rows(&m.row_vectors())
}

pub fn parse_vector(v: &Value, len: usize) -> CliResult<Vector> {
    let Value::Array(xs) = v else {
        return Err(invalid(format!("expected an array of scalars, found {v}")));
    };
    if xs.len() != len {
        return Err(invalid(format!("expected {len} entries, found {}", xs.len())));
    }
    xs.iter().map(parse_scalar).collect()
}

pub fn parse_rows(v: &Value, cols: usize) -> CliResult<Vec<Vector>> {
    let Value::Array(rs) = v else {
        return Err(invalid(format!("expected an array of rows, found {v}")));
    };
    rs.iter().map(|r| parse_vector(r, cols)).collect()
}

pub fn parse_matrix(v: &Value, rows: usize, cols: usize) -> CliResult<Mat> {
    let rs = parse_rows(v, cols)?;
    if rs.len() != rows {
        return Err(invalid(format!("expected {rows} rows, found {}", rs.len())));
    }
    Ok(Mat::from_rows(rs, cols))
}

pub fn span_rows(v: &Value, ambient: usize) -> CliResult<Subspace> {
    Ok(Subspace::span(&parse_rows(v, ambient)?, ambient))
}

pub fn usizes(xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::from(x)).collect())
}

/// A JSON object whose keys are checked against an allow-list.
pub struct Fields<'a> {
    map: &'a Map<String, Value>,
    what: &'a str,
}

impl<'a> Fields<'a> {
    pub fn new(v: &'a Value, what: &'a str, allowed: &[&str]) -> CliResult<Self> {
        let Value::Object(map) = v else {
            return Err(invalid(format!("{what} must be a JSON object")));
        };
        if let Some(k) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(invalid(format!("unexpected field {k:?} in {what}")));
        }
        Ok(Fields { map, what })
    }

    pub fn get(&self, key: &str) -> CliResult<&'a Value> {
        self.map
            .get(key)
            .ok_or_else(|| invalid(format!("{} is missing field {key:?}", self.what)))
    }

    pub fn usize(&self, key: &str) -> CliResult<usize> {
        let v = self.get(key)?;
        v.as_u64()
            .and_then(|x| usize::try_from(x).ok())
            .ok_or_else(|| invalid(format!("field {key:?} must be a non-negative integer, found {v}")))
    }

    pub fn str(&self, key: &str) -> CliResult<&'a str> {
        let v = self.get(key)?;
        v.as_str()
            .ok_or_else(|| invalid(format!("field {key:?} must be a string, found {v}")))
    }

    pub fn usize_array<const N: usize>(&self, key: &str) -> CliResult<[usize; N]> {
        let v = self.get(key)?;
        let bad = || invalid(format!("field {key:?} must be {N} non-negative integers, found {v}"));
        let xs = v.as_array().ok_or_else(bad)?;
        if xs.len() != N {
            return Err(bad());
        }
        let mut out = [0; N];
        for (o, x) in out.iter_mut().zip(xs) {
            *o = x.as_u64().and_then(|x| usize::try_from(x).ok()).ok_or_else(bad)?;
        }
        Ok(out)
    }
}

pub fn object<const N: usize>(entries: [(&str, Value); N]) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}
