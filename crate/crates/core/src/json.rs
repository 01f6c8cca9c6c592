// SPDX-License-Identifier: Apache-2.0

//! JSON shapes for the library types. Integers that fit in i64 are written as
//! numbers, larger ones as decimal strings.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::cf::{Surd, CF};
use crate::error::{Error, Result};
use crate::field::{ExtElem, FieldElem, HeckeField, RingElem};
use crate::group::GenWord;
use crate::isp::Isp;
use crate::quadforms::QForm;

pub fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(n.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("{n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("{s:?} is not an integer"))),
        other => Err(Error::Parse(format!("expected an integer, got {other}"))),
    }
}

pub fn ring_to_json(r: &RingElem) -> Value {
    Value::Array(r.coeffs().iter().map(int_to_json).collect())
}

pub fn ring_from_json(field: &Arc<HeckeField>, v: &Value) -> Result<RingElem> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected a coefficient array, got {v}")))?;
    if arr.len() > field.degree() {
        return Err(Error::Parse(format!("{} coefficients for a degree-{} field", arr.len(), field.degree())));
    }
    let coeffs = arr.iter().map(int_from_json).collect::<Result<Vec<_>>>()?;
    Ok(RingElem::new(field, coeffs))
}

pub fn field_to_json(x: &FieldElem) -> Value {
    json!({ "num": ring_to_json(x.num()), "den": int_to_json(x.den()) })
}

pub fn field_from_json(field: &Arc<HeckeField>, v: &Value) -> Result<FieldElem> {
    let num = ring_from_json(field, get(v, "num")?)?;
    let den = int_from_json(get(v, "den")?)?;
    FieldElem::new(num, den).map_err(|e| Error::Parse(e.to_string()))
}

/// {"u": field, "v": field}; the discriminant lives with the enclosing object.
pub fn ext_to_json(x: &ExtElem) -> Value {
    json!({ "u": field_to_json(x.u()), "v": field_to_json(x.v()) })
}

pub fn ext_from_json(d: &RingElem, v: &Value) -> Result<ExtElem> {
    let u = field_from_json(d.field(), get(v, "u")?)?;
    let w = field_from_json(d.field(), get(v, "v")?)?;
    ExtElem::new(u, w, d.clone()).map_err(|e| Error::Parse(e.to_string()))
}

pub fn surd_to_json(s: &Surd) -> Value {
    json!({ "P": ring_to_json(s.numer()), "Q": ring_to_json(s.denom()), "D": ring_to_json(s.disc()) })
}

pub fn surd_from_json(field: &Arc<HeckeField>, v: &Value) -> Result<Surd> {
    let p = ring_from_json(field, get(v, "P")?)?;
    let q = ring_from_json(field, get(v, "Q")?)?;
    let d = ring_from_json(field, get(v, "D")?)?;
    Surd::new(p, q, d).map_err(|e| Error::Parse(e.to_string()))
}

pub fn word_to_json(w: &GenWord) -> Value {
    json!({ "p": w.p(), "letters": w.letters() })
}

pub fn cf_to_json(cf: &CF) -> Value {
    json!({ "preperiod": cf.preperiod, "period": cf.period })
}

pub fn form_to_json(q: &QForm) -> Value {
    json!({ "A": ring_to_json(&q.a), "B": ring_to_json(&q.b), "C": ring_to_json(&q.c) })
}

/// ISP with its poles also rendered as decimals.
pub fn isp_to_json(isp: &Isp, digits: usize) -> Value {
    json!({
        "p": isp.p(),
        "word": word_to_json(&isp.word),
        "D": ring_to_json(&isp.d),
        "positives": isp.positives.iter().map(surd_to_json).collect::<Vec<_>>(),
        "positives_decimal": isp.positives.iter().map(|a| a.to_decimal(digits)).collect::<Vec<_>>(),
        "symmetric": isp.symmetric,
        "conjugate_word": word_to_json(&isp.conjugate_word),
    })
}

pub(crate) fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

pub(crate) fn get_u32(v: &Value, key: &str) -> Result<u32> {
    get(v, key)?
        .as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| Error::Parse(format!("field {key:?} is not a small nonnegative integer")))
}
