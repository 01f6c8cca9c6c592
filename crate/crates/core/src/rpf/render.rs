// SPDX-License-Identifier: Apache-2.0

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{ExtElem, FieldElem, HeckeField, RingElem};
use crate::json::{ext_from_json, ext_to_json, get, get_u32, ring_from_json, ring_to_json, surd_from_json, surd_to_json};

use super::{PoleTerm, Rpf};

pub fn to_json(q: &Rpf) -> Value {
    json!({
        "p": q.p,
        "k": q.k,
        "D": ring_to_json(&q.d),
        "pole_terms": q.pole_terms.iter().map(|t| json!({
            "alpha": surd_to_json(&t.alpha),
            "order": t.order,
            "coeff": ext_to_json(&t.coeff),
        })).collect::<Vec<_>>(),
        "zero_part": { "a0": ext_to_json(&q.a0), "b1": ext_to_json(&q.b1) },
        "tail": q.tail.iter().map(ext_to_json).collect::<Vec<_>>(),
    })
}

pub fn from_json(v: &Value) -> Result<Rpf> {
    let p = get_u32(v, "p")?;
    let k = get_u32(v, "k")?;
    let field = HeckeField::get(p).map_err(|e| Error::Parse(e.to_string()))?;
    let d = ring_from_json(&field, get(v, "D")?)?;
    let terms = get(v, "pole_terms")?
        .as_array()
        .ok_or_else(|| Error::Parse("pole_terms is not an array".into()))?
        .iter()
        .map(|t| {
            Ok(PoleTerm {
                alpha: surd_from_json(&field, get(t, "alpha")?)?,
                order: get_u32(t, "order")?,
                coeff: ext_from_json(&d, get(t, "coeff")?)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let zp = get(v, "zero_part")?;
    let a0 = ext_from_json(&d, get(zp, "a0")?)?;
    let b1 = ext_from_json(&d, get(zp, "b1")?)?;
    let tail = get(v, "tail")?
        .as_array()
        .ok_or_else(|| Error::Parse("tail is not an array".into()))?
        .iter()
        .map(|c| ext_from_json(&d, c))
        .collect::<Result<Vec<_>>>()?;
    Rpf::new(k, d, terms, a0, b1, tail).map_err(|e| Error::Parse(e.to_string()))
}

fn latex_ring(r: &RingElem) -> String {
    crate::field::poly_to_string(r.coeffs(), "\\lambda")
}

fn latex_field(x: &FieldElem) -> String {
    if x.sign() < 0 {
        let pos = latex_field(&-x);
        if !pos.starts_with('-') {
            return format!("-{pos}");
        }
    }
    if x.den() == &num_bigint::BigInt::from(1) {
        latex_ring(x.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_ring(x.num()), x.den())
    }
}

fn latex_ext(x: &ExtElem) -> String {
    let root = format!("\\sqrt{{{}}}", latex_ring(x.d()));
    match (x.u().is_zero(), x.v().is_zero()) {
        (_, true) => latex_field(x.u()),
        (true, false) => format!("{}{}", coeff_prefix(x.v()), root),
        (false, false) if x.v().sign() < 0 => {
            format!("\\left({} - {}{}\\right)", latex_field(x.u()), coeff_prefix(&-x.v()), root)
        }
        (false, false) => format!("\\left({} + {}{}\\right)", latex_field(x.u()), coeff_prefix(x.v()), root),
    }
}

fn coeff_prefix(x: &FieldElem) -> String {
    if x.is_one() {
        String::new()
    } else if (-x).is_one() {
        "-".into()
    } else {
        format!("{} \\cdot ", latex_field(x))
    }
}

fn paren(s: String) -> String {
    if s.contains(' ') && !s.starts_with("\\left") {
        format!("\\left({s}\\right)")
    } else {
        s
    }
}

/// A z² + B z + C with field coefficients.
fn latex_quadratic(a: &FieldElem, b: &FieldElem, c: &FieldElem) -> String {
    let mut out = String::new();
    for (coef, mono) in [(a, "z^{2}"), (b, "z"), (c, "")] {
        if coef.is_zero() {
            continue;
        }
        let neg = coef.sign() < 0;
        let mag = coef.abs();
        let body = if mono.is_empty() {
            latex_field(&mag)
        } else if mag.is_one() {
            mono.to_string()
        } else {
            let c = paren(latex_field(&mag));
            let sep = if c.ends_with(|ch: char| ch.is_ascii_alphabetic()) { " " } else { "" };
            format!("{c}{sep}{mono}")
        };
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn power(base: String, e: u32) -> String {
    if e == 1 {
        format!("({base})")
    } else {
        format!("({base})^{{{e}}}")
    }
}

/// Finds c with the 2k terms at α, α′ equal to c·Q_α^{−k}.
fn match_form(q: &Rpf, used: &[bool], i: usize) -> Option<(ExtElem, Vec<usize>)> {
    let k = q.k;
    let alpha = &q.pole_terms[i].alpha;
    if q.pole_terms[i].order != k {
        return None;
    }
    let root_k = ExtElem::sqrt_d(&q.d).pow(k);
    let mut c = q.pole_terms[i].coeff.mul(&root_k).ok()?;
    if let Some(w) = &q.root {
        c = c.fold(w);
    }
    let want = super::form_power_terms(k, alpha, &c).ok()?;
    let mut idx = Vec::new();
    for w in &want {
        let j = (0..q.pole_terms.len()).find(|&j| {
            !used[j]
                && !idx.contains(&j)
                && q.pole_terms[j].order == w.order
                && q.pole_terms[j].alpha.semantic_eq(&w.alpha).unwrap_or(false)
        });
        match j {
            Some(j) if same_value(q, &q.pole_terms[j].coeff, &w.coeff)? => idx.push(j),
            _ => return None,
        }
    }
    Some((c, idx))
}

fn same_value(q: &Rpf, a: &ExtElem, b: &ExtElem) -> Option<bool> {
    let diff = a.sub(b).ok()?;
    Some(match &q.root {
        Some(w) => diff.fold(w).is_zero_value(),
        None => diff.is_zero_value(),
    })
}

/// "z - α", or "z + (−α)" when both parts of α are nonpositive.
fn shifted_z(a: &ExtElem) -> String {
    if a.is_zero_value() {
        "z".into()
    } else if a.u().sign() <= 0 && a.v().sign() <= 0 {
        format!("z + {}", latex_ext(&a.neg()))
    } else {
        format!("z - {}", latex_ext(a))
    }
}

fn signed_join(parts: Vec<String>) -> String {
    let mut out = String::new();
    for p in parts {
        if out.is_empty() {
            out.push_str(&p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&p);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn frac(c: &ExtElem, den: String) -> String {
    let neg = c.u().sign() <= 0 && c.v().sign() <= 0 && !c.is_zero_value();
    let mag = if neg { c.neg() } else { c.clone() };
    format!("{}\\frac{{{}}}{{{}}}", if neg { "-" } else { "" }, latex_ext(&mag), den)
}

/// LaTeX, grouping pole pairs into powers of quadratic forms where possible.
pub(crate) fn latex(q: &Rpf) -> String {
    let n = q.pole_terms.len();
    let mut used = vec![false; n];
    let mut parts = Vec::new();
    let two = FieldElem::from_int(q.d.field(), 2);
    for i in 0..n {
        if used[i] {
            continue;
        }
        if let Some((c, idx)) = match_form(q, &used, i) {
            for j in idx {
                used[j] = true;
            }
            let a = &q.pole_terms[i].alpha;
            let qa = FieldElem::from(a.denom().clone());
            let pa = FieldElem::from(a.numer().clone());
            let ca = (&(&pa * &pa) - &FieldElem::from(a.disc().clone()))
                .try_div(&(&two * &qa))
                .expect("nonzero denominator");
            let (mut fa, mut fb, mut fc) = (qa.try_div(&two).expect("two"), -&pa, ca);
            let mut c = c;
            // (−Q)^{−k} = (−1)^k Q^{−k}; print the form with positive leading coefficient
            if fa.sign() < 0 {
                (fa, fb, fc) = (-&fa, -&fb, -&fc);
                if q.k % 2 == 1 {
                    c = c.neg();
                }
            }
            parts.push(frac(&c, power(latex_quadratic(&fa, &fb, &fc), q.k)));
        }
    }
    for (i, t) in q.pole_terms.iter().enumerate() {
        if !used[i] {
            let a = match &q.root {
                Some(w) => t.alpha.to_ext().fold(w),
                None => t.alpha.to_ext(),
            };
            parts.push(frac(&t.coeff, power(shifted_z(&a), t.order)));
        }
    }
    if !q.a0.is_zero_value() {
        parts.push(format!("{}\\left(1 - z^{{-{}}}\\right)", latex_ext(&q.a0), 2 * q.k));
    }
    if !q.b1.is_zero_value() {
        parts.push(frac(&q.b1, "z".into()));
    }
    for (i, c) in q.tail.iter().enumerate() {
        if !c.is_zero_value() {
            let e = i + 1;
            parts.push(frac(c, if e == 1 { "z".into() } else { format!("z^{{{e}}}") }));
        }
    }
    signed_join(parts)
}

impl Rpf {
    pub fn to_latex(&self) -> String {
        latex(self)
    }

    pub fn to_json(&self) -> Value {
        to_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GenWord;
    use crate::isp::isp_of_word;
    use crate::rpf::{build_symmetric_odd, build_union};

    #[test]
    fn latex_groups_forms() {
        let g4 = build_symmetric_odd(1, &isp_of_word(&GenWord::new(4, &[2]).unwrap()).unwrap()).unwrap();
        assert_eq!(g4.to_latex(), "\\frac{1}{(z^{2} - 1)}");
        let knopp = build_symmetric_odd(1, &isp_of_word(&GenWord::new(3, &[1, 2]).unwrap()).unwrap()).unwrap();
        let s = knopp.to_latex();
        assert!(s.contains("(z^{2} - z - 1)") && s.contains("(z^{2} + z - 1)"), "{s}");
        let g5 = build_union(2, &isp_of_word(&GenWord::new(5, &[2]).unwrap()).unwrap()).unwrap();
        let s = g5.to_latex();
        assert!(s.contains("(z^{2} - \\lambda)^{2}") && s.contains("(\\lambda z^{2} - 1)^{2}"), "{s}");
    }

    #[test]
    fn json_roundtrip() {
        let g5 = build_union(3, &isp_of_word(&GenWord::new(5, &[2]).unwrap()).unwrap()).unwrap();
        let back = from_json(&to_json(&g5)).unwrap();
        assert_eq!(back, g5);
        assert!(from_json(&json!({"p": 5})).is_err());
    }
}
