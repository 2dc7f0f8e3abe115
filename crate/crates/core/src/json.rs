//! JSON encoding of exact values.
//!
//! Rationals serialize as plain JSON integers when integral and within i64
//! range, and as `"p/q"` strings otherwise. The parser accepts both forms
//! (floats are rejected unless integral — exactness is the point). Complex
//! entries use `{"re": .., "im": ..}` objects; a bare rational is accepted
//! where the imaginary part is zero. Vectors are fixed-length arrays,
//! matrices are arrays of row arrays.

use crate::error::GeomError;
use crate::linalg::Mat;
use crate::octonion::{Imaginary, SplitOctonion};
use crate::scalar::{CRat, Rat};
use crate::triples::{G2Element, NullTriple};
use num_traits::Zero;
use serde_json::{json, Value};
use std::str::FromStr;

fn invalid(msg: impl Into<String>) -> GeomError {
    GeomError::InvalidInput(msg.into())
}

pub fn rat_to_value(r: &Rat) -> Value {
    if r.is_integer() {
        if let Ok(n) = i64::try_from(r.numer().clone()) {
            return json!(n);
        }
    }
    json!(r.to_string())
}

pub fn rat_from_value(v: &Value) -> Result<Rat, GeomError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rat::from_integer(u.into()))
            } else {
                Err(invalid(format!(
                    "expected an exact rational, got non-integral number {n}; write it as \"p/q\""
                )))
            }
        }
        Value::String(s) => {
            Rat::from_str(s).map_err(|e| invalid(format!("cannot parse rational '{s}': {e}")))
        }
        other => Err(invalid(format!(
            "expected a rational (integer or \"p/q\" string), got {other}"
        ))),
    }
}

pub fn crat_to_value(c: &CRat) -> Value {
    if c.im.is_zero() {
        rat_to_value(&c.re)
    } else {
        json!({ "re": rat_to_value(&c.re), "im": rat_to_value(&c.im) })
    }
}

pub fn crat_from_value(v: &Value) -> Result<CRat, GeomError> {
    if let Value::Object(map) = v {
        for key in map.keys() {
            if key != "re" && key != "im" {
                return Err(invalid(format!("unexpected key '{key}' in complex value")));
            }
        }
        let part = |key: &str| -> Result<Rat, GeomError> {
            map.get(key).map_or_else(|| Ok(Rat::zero()), rat_from_value)
        };
        Ok(CRat::new(part("re")?, part("im")?))
    } else {
        Ok(CRat::new(rat_from_value(v)?, Rat::zero()))
    }
}

fn fixed_array<'a>(v: &'a Value, len: usize, what: &str) -> Result<&'a [Value], GeomError> {
    let arr = v
        .as_array()
        .ok_or_else(|| invalid(format!("expected {what} as an array of {len} entries")))?;
    if arr.len() != len {
        return Err(invalid(format!(
            "expected {what} with {len} entries, got {}",
            arr.len()
        )));
    }
    Ok(arr)
}

/// Imaginary 7-vector with rational coordinates.
pub fn imaginary_to_value(x: &Imaginary<Rat>) -> Value {
    Value::Array(x.0.iter().map(rat_to_value).collect())
}

pub fn imaginary_from_value(v: &Value) -> Result<Imaginary<Rat>, GeomError> {
    let arr = fixed_array(v, 7, "an imaginary vector")?;
    let mut out = Imaginary::<Rat>::zero();
    for (i, entry) in arr.iter().enumerate() {
        out.0[i] = rat_from_value(entry)?;
    }
    Ok(out)
}

/// Imaginary 7-vector with complex rational coordinates.
pub fn imaginary_complex_to_value(x: &Imaginary<CRat>) -> Value {
    Value::Array(x.0.iter().map(crat_to_value).collect())
}

pub fn imaginary_complex_from_value(v: &Value) -> Result<Imaginary<CRat>, GeomError> {
    let arr = fixed_array(v, 7, "an imaginary vector")?;
    let mut out = Imaginary::<CRat>::zero();
    for (i, entry) in arr.iter().enumerate() {
        out.0[i] = crat_from_value(entry)?;
    }
    Ok(out)
}

/// Full 8-coordinate element (real part first, then the seven imaginaries).
pub fn octonion_to_value(x: &SplitOctonion<Rat>) -> Value {
    Value::Array(x.coords().iter().map(rat_to_value).collect())
}

pub fn octonion_from_value(v: &Value) -> Result<SplitOctonion<Rat>, GeomError> {
    let arr = fixed_array(v, 8, "an algebra element")?;
    let mut coords = std::array::from_fn(|_| Rat::zero());
    for (i, entry) in arr.iter().enumerate() {
        coords[i] = rat_from_value(entry)?;
    }
    Ok(SplitOctonion::from_coords(coords))
}

pub fn matrix_to_value(m: &Mat<Rat>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| rat_to_value(m.at(r, c))).collect()))
            .collect(),
    )
}

pub fn matrix_from_value(v: &Value, rows: usize, cols: usize) -> Result<Mat<Rat>, GeomError> {
    let arr = fixed_array(v, rows, "a matrix")?;
    let mut m = Mat::zeros(rows, cols);
    for (r, row) in arr.iter().enumerate() {
        let row = fixed_array(row, cols, "a matrix row")?;
        for (c, entry) in row.iter().enumerate() {
            *m.at_mut(r, c) = rat_from_value(entry)?;
        }
    }
    Ok(m)
}

/// Triple as an array of three 7-vectors `[x, y, z]`.
pub fn triple_to_value(t: &NullTriple<Rat>) -> Value {
    json!([
        imaginary_to_value(t.x()),
        imaginary_to_value(t.y()),
        imaginary_to_value(t.z()),
    ])
}

/// Three vectors in triple position, *not* yet validated.
pub fn triple_vectors_from_value(v: &Value) -> Result<[Imaginary<Rat>; 3], GeomError> {
    let arr = fixed_array(v, 3, "a triple")?;
    Ok([
        imaginary_from_value(&arr[0])?,
        imaginary_from_value(&arr[1])?,
        imaginary_from_value(&arr[2])?,
    ])
}

/// Group element as its 7×7 matrix (validated on parse).
pub fn g2_to_value(g: &G2Element) -> Value {
    matrix_to_value(g.matrix())
}

pub fn g2_from_value(v: &Value) -> Result<G2Element, GeomError> {
    G2Element::try_new(matrix_from_value(v, 7, 7)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::imag_from_i64;
    use crate::scalar::rat;
    use num_bigint::BigInt;

    #[test]
    fn rationals_round_trip_in_both_forms() {
        assert_eq!(rat_to_value(&rat(5, 1)), json!(5));
        assert_eq!(rat_to_value(&rat(-3, 1)), json!(-3));
        assert_eq!(rat_to_value(&rat(1, 8)), json!("1/8"));
        assert_eq!(rat_to_value(&rat(-7, 3)), json!("-7/3"));
        for v in [json!(5), json!("5"), json!("10/2")] {
            assert_eq!(rat_from_value(&v).unwrap(), rat(5, 1));
        }
        assert_eq!(rat_from_value(&json!("1/8")).unwrap(), rat(1, 8));
        // Huge numerators fall back to strings and survive the trip.
        let big = Rat::from_integer(BigInt::from(i64::MAX)) * rat(1000, 1) + rat(1, 3);
        let enc = rat_to_value(&big);
        assert!(enc.is_string());
        assert_eq!(rat_from_value(&enc).unwrap(), big);
    }

    #[test]
    fn inexact_or_malformed_rationals_are_rejected() {
        for v in [
            json!(0.5),
            json!("abc"),
            json!("1/0"),
            json!([1]),
            json!(null),
        ] {
            assert!(rat_from_value(&v).is_err(), "{v}");
        }
    }

    #[test]
    fn complex_values_round_trip() {
        let real = CRat::new(rat(3, 1), rat(0, 1));
        assert_eq!(crat_to_value(&real), json!(3));
        let mixed = CRat::new(rat(1, 2), rat(-2, 1));
        let enc = crat_to_value(&mixed);
        assert_eq!(enc, json!({"re": "1/2", "im": -2}));
        assert_eq!(crat_from_value(&enc).unwrap(), mixed);
        assert_eq!(crat_from_value(&json!({"im": 1})).unwrap().re, rat(0, 1));
        assert!(crat_from_value(&json!({"re": 1, "imag": 2})).is_err());
    }

    #[test]
    fn vectors_and_matrices_round_trip() {
        let x = imag_from_i64::<Rat>([1, 0, 0, 0, 1, 0, 0]);
        let v = imaginary_to_value(&x);
        assert_eq!(v, json!([1, 0, 0, 0, 1, 0, 0]));
        assert_eq!(imaginary_from_value(&v).unwrap(), x);
        assert!(imaginary_from_value(&json!([1, 2, 3])).is_err());

        let m = Mat::<Rat>::identity(7);
        let enc = matrix_to_value(&m);
        assert_eq!(matrix_from_value(&enc, 7, 7).unwrap(), m);
        assert!(matrix_from_value(&enc, 6, 7).is_err());
    }

    #[test]
    fn group_elements_validate_on_parse() {
        let id = G2Element::identity();
        let enc = g2_to_value(&id);
        assert!(g2_from_value(&enc).unwrap().is_identity());
        // A form-preserving but cross-breaking matrix is rejected: negating
        // one spacelike axis preserves the dot form, not the product.
        let mut m = Mat::<Rat>::identity(7);
        *m.at_mut(0, 0) = rat(-1, 1);
        assert!(g2_from_value(&matrix_to_value(&m)).is_err());
    }
}
