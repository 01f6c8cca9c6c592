// SPDX-License-Identifier: Apache-2.0

//! Rational period functions: construction from ISPs, exact evaluation,
//! verification of the two defining relations and the linear ansatz.

mod eval;
mod render;
mod solve;

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::cf::Surd;
use crate::error::{Error, Result};
use crate::field::{ExtElem, FieldElem, RingElem};
use crate::isp::{isp_of_word, Isp};
use crate::quadforms::QForm;

pub use eval::{verify, verify_with, Relation, Verdict, VERIFY_POINT_MARGIN};
pub use render::{from_json, to_json};
pub use solve::{build_ansatz, AnsatzOutcome, Template};

/// coeff / (z − α)^order
#[derive(Debug, Clone, PartialEq)]
pub struct PoleTerm {
    pub alpha: Surd,
    pub order: u32,
    pub coeff: ExtElem,
}

/// Finite sum of pole terms, the zero part a0(1 − z^{−2k}) + b1/z and the
/// tail c_1/z + … + c_{2k−1}/z^{2k−1}. Every coefficient lives in Q(λ)(√D).
#[derive(Debug, Clone, PartialEq)]
pub struct Rpf {
    p: u32,
    k: u32,
    d: RingElem,
    pole_terms: Vec<PoleTerm>,
    a0: ExtElem,
    b1: ExtElem,
    tail: Vec<ExtElem>,
    /// √D when D is a square in Z[λ]; coefficients are then kept folded.
    root: Option<FieldElem>,
}

impl Rpf {
    pub fn new(
        k: u32,
        d: RingElem,
        pole_terms: Vec<PoleTerm>,
        a0: ExtElem,
        b1: ExtElem,
        tail: Vec<ExtElem>,
    ) -> Result<Self> {
        let p = d.p();
        if k < 1 {
            return Err(Error::domain("weight parameter k must be at least 1"));
        }
        if tail.len() != 2 * k as usize - 1 {
            return Err(Error::domain(format!("tail needs {} coefficients, got {}", 2 * k - 1, tail.len())));
        }
        if k != 1 && !b1.is_zero_value() {
            return Err(Error::domain("the 1/z part of the zero term needs weight 2"));
        }
        for t in &pole_terms {
            if t.alpha.disc() != &d || t.coeff.d() != &d {
                return Err(Error::domain(format!("pole {} is not over the discriminant {d}", t.alpha)));
            }
            if t.order < 1 || t.order > k {
                return Err(Error::domain(format!("pole order {} outside 1..={k}", t.order)));
            }
        }
        if a0.d() != &d || b1.d() != &d || tail.iter().any(|c| c.d() != &d) {
            return Err(Error::domain(format!("coefficients are not over the discriminant {d}")));
        }
        let root = d.sqrt_exact().map(FieldElem::from);
        let mut q = Rpf { p, k, d, pole_terms, a0, b1, tail, root };
        if let Some(w) = &q.root {
            for t in &mut q.pole_terms {
                t.coeff = t.coeff.fold(w);
            }
            q.a0 = q.a0.fold(w);
            q.b1 = q.b1.fold(w);
            for c in &mut q.tail {
                *c = c.fold(w);
            }
        }
        q.canonicalize();
        Ok(q)
    }

    /// The zero function of weight 2k over D.
    pub fn zero(k: u32, d: &RingElem) -> Self {
        let z = ExtElem::zero(d);
        Rpf {
            p: d.p(),
            k,
            d: d.clone(),
            pole_terms: Vec::new(),
            a0: z.clone(),
            b1: z.clone(),
            tail: vec![z; 2 * k as usize - 1],
            root: d.sqrt_exact().map(FieldElem::from),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Weight 2k.
    pub fn weight(&self) -> u32 {
        2 * self.k
    }

    pub fn disc(&self) -> &RingElem {
        &self.d
    }

    pub fn pole_terms(&self) -> &[PoleTerm] {
        &self.pole_terms
    }

    pub fn zero_part(&self) -> (&ExtElem, &ExtElem) {
        (&self.a0, &self.b1)
    }

    pub fn tail(&self) -> &[ExtElem] {
        &self.tail
    }

    /// √D when the discriminant is a perfect square.
    pub fn square_root_of_disc(&self) -> Option<&FieldElem> {
        self.root.as_ref()
    }

    pub(crate) fn has_origin_part(&self) -> bool {
        !self.a0.is_zero_value() || !self.b1.is_zero_value() || self.tail.iter().any(|c| !c.is_zero_value())
    }

    /// Σ orders, counting a zero part or tail as order 2k.
    pub fn order_mass(&self) -> u32 {
        let poles: u32 = self.pole_terms.iter().map(|t| t.order).sum();
        poles + if self.has_origin_part() { 2 * self.k } else { 0 }
    }

    /// Distinct pole values.
    pub fn poles(&self) -> Vec<Surd> {
        let mut out: Vec<Surd> = Vec::new();
        for t in &self.pole_terms {
            if !out.iter().any(|a| a.semantic_eq(&t.alpha).unwrap_or(false)) {
                out.push(t.alpha.clone());
            }
        }
        out
    }

    /// Sorts terms by pole value then descending order, merges equal
    /// (pole, order) pairs and drops zero coefficients.
    fn canonicalize(&mut self) {
        let mut terms = std::mem::take(&mut self.pole_terms);
        terms.sort_by(|x, y| match x.alpha.cmp_surd(&y.alpha).unwrap_or(0) {
            0 => y.order.cmp(&x.order),
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        });
        let mut out: Vec<PoleTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.order == t.order && last.alpha.semantic_eq(&t.alpha).unwrap_or(false) {
                    last.coeff = last.coeff.add(&t.coeff).expect("same discriminant");
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coeff.is_zero_value());
        self.pole_terms = out;
    }

    pub fn add(&self, other: &Rpf) -> Result<Rpf> {
        if self.k != other.k || self.d != other.d {
            return Err(Error::domain("sums need equal weight and discriminant"));
        }
        let mut terms = self.pole_terms.clone();
        terms.extend(other.pole_terms.iter().cloned());
        let tail = self.tail.iter().zip(&other.tail).map(|(a, b)| a.add(b)).collect::<Result<Vec<_>>>()?;
        Rpf::new(self.k, self.d.clone(), terms, self.a0.add(&other.a0)?, self.b1.add(&other.b1)?, tail)
    }

    pub fn scale(&self, c: &ExtElem) -> Result<Rpf> {
        let terms = self
            .pole_terms
            .iter()
            .map(|t| Ok(PoleTerm { alpha: t.alpha.clone(), order: t.order, coeff: t.coeff.mul(c)? }))
            .collect::<Result<Vec<_>>>()?;
        let tail = self.tail.iter().map(|x| x.mul(c)).collect::<Result<Vec<_>>>()?;
        Rpf::new(self.k, self.d.clone(), terms, self.a0.mul(c)?, self.b1.mul(c)?, tail)
    }

    pub fn with_tail(&self, tail: Vec<ExtElem>) -> Result<Rpf> {
        Rpf::new(self.k, self.d.clone(), self.pole_terms.clone(), self.a0.clone(), self.b1.clone(), tail)
    }

    /// Equality of the represented functions, term by term.
    pub fn semantic_eq(&self, other: &Rpf) -> bool {
        let same = |a: &ExtElem, b: &ExtElem| a.sub(b).map(|x| x.is_zero_value()).unwrap_or(false);
        self.k == other.k
            && self.d == other.d
            && self.pole_terms.len() == other.pole_terms.len()
            && self.pole_terms.iter().zip(&other.pole_terms).all(|(x, y)| {
                x.order == y.order && x.alpha.semantic_eq(&y.alpha).unwrap_or(false) && same(&x.coeff, &y.coeff)
            })
            && same(&self.a0, &other.a0)
            && same(&self.b1, &other.b1)
            && self.tail.iter().zip(&other.tail).all(|(a, b)| same(a, b))
    }
}

fn binomial(n: u32, r: u32) -> BigInt {
    (0..r).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// The zero part a0(1 − z^{−2k}) + b1/z.
pub fn q_zero(k: u32, a0: &ExtElem, b1: &ExtElem) -> Result<Rpf> {
    if a0.d() != b1.d() {
        return Err(Error::domain("a0 and b1 over different discriminants"));
    }
    let d = a0.d().clone();
    let z = ExtElem::zero(&d);
    Rpf::new(k, d, Vec::new(), a0.clone(), b1.clone(), vec![z; 2 * k as usize - 1])
}

/// Principal part at α of (α − α′)^k / ((z − α)(z − α′))^k.
pub fn principal_part(k: u32, alpha: &Surd) -> Result<Vec<PoleTerm>> {
    let d = alpha.disc();
    let f = alpha.field();
    // α − α′ = 2√D/Q
    let two_over_q = FieldElem::from_int(f, 2).try_div(&FieldElem::from(alpha.denom().clone()))?;
    let diff = ExtElem::new(FieldElem::zero(f), two_over_q, d.clone())?;
    if diff.is_zero_value() {
        return Err(Error::domain(format!("{alpha} equals its conjugate")));
    }
    let inv = diff.inv()?;
    let mut out = Vec::with_capacity(k as usize);
    let mut pow = ExtElem::one(d);
    for j in 0..k {
        let mut c = binomial(k - 1 + j, j);
        if j % 2 == 1 {
            c = -c;
        }
        let coeff = pow.mul_field(&FieldElem::from(RingElem::from_bigint(f, c)));
        out.push(PoleTerm { alpha: alpha.clone(), order: k - j, coeff });
        pow = pow.mul(&inv)?;
    }
    Ok(out)
}

fn scaled_terms(terms: Vec<PoleTerm>, c: &ExtElem) -> Result<Vec<PoleTerm>> {
    terms.into_iter().map(|t| Ok(PoleTerm { coeff: t.coeff.mul(c)?, ..t })).collect()
}

/// c · Q_α(z,1)^{−k} where Q_α = (Q/2)(z − α)(z − α′), as pole terms.
pub(crate) fn form_power_terms(k: u32, alpha: &Surd, c: &ExtElem) -> Result<Vec<PoleTerm>> {
    let d = alpha.disc();
    let root_pow = ExtElem::sqrt_d(d).pow(k).inv()?;
    let lead = c.mul(&root_pow)?;
    let mut out = scaled_terms(principal_part(k, alpha)?, &lead)?;
    let sign = if k.is_multiple_of(2) { lead.clone() } else { lead.neg() };
    out.extend(scaled_terms(principal_part(k, &alpha.conjugate())?, &sign)?);
    Ok(out)
}

fn sum_of_forms(k: u32, d: &RingElem, parts: &[(ExtElem, &Surd)]) -> Result<Rpf> {
    let mut terms = Vec::new();
    for (c, alpha) in parts {
        terms.extend(form_power_terms(k, alpha, c)?);
    }
    let z = ExtElem::zero(d);
    Rpf::new(k, d.clone(), terms, z.clone(), z.clone(), vec![z; 2 * k as usize - 1])
}

/// Σ_{α ∈ Z_A} Q_α(z,1)^{−k} for a Hecke-symmetric ISP and odd k.
pub fn build_symmetric_odd(k: u32, isp: &Isp) -> Result<Rpf> {
    if !isp.symmetric {
        return Err(Error::domain(format!("{} is not Hecke-symmetric", isp.word)));
    }
    if k.is_multiple_of(2) {
        return Err(Error::domain(format!("k = {k} is even")));
    }
    let one = ExtElem::one(&isp.d);
    let parts: Vec<(ExtElem, &Surd)> = isp.positives.iter().map(|a| (one.clone(), a)).collect();
    sum_of_forms(k, &isp.d, &parts)
}

/// Σ_{Z_A} Q_α^{−k} − (−1)^k Σ_{Z_{−A}} Q_α^{−k} for a nonsymmetric ISP.
pub fn build_union(k: u32, isp: &Isp) -> Result<Rpf> {
    if isp.symmetric {
        return Err(Error::domain(format!("{} is Hecke-symmetric", isp.word)));
    }
    let other = isp_of_word(&isp.conjugate_word)?;
    if other.d != isp.d {
        return Err(Error::Internal("conjugate ISP has a different discriminant".into()));
    }
    let one = ExtElem::one(&isp.d);
    let second = if k.is_multiple_of(2) { one.neg() } else { one.clone() };
    let mut parts: Vec<(ExtElem, &Surd)> = isp.positives.iter().map(|a| (one.clone(), a)).collect();
    parts.extend(other.positives.iter().map(|a| (second.clone(), a)));
    sum_of_forms(k, &isp.d, &parts)
}

/// Σ c_i · Q_i(z,1)^{−k} for forms sharing one discriminant.
pub fn from_forms(k: u32, forms: &[(ExtElem, QForm)]) -> Result<Rpf> {
    let first = forms.first().ok_or_else(|| Error::domain("no forms given"))?;
    let d = first.1.disc();
    let roots = forms
        .iter()
        .map(|(_, q)| {
            if q.disc() != d {
                return Err(Error::domain(format!("form {q} has a different discriminant")));
            }
            q.root()
        })
        .collect::<Result<Vec<_>>>()?;
    let parts: Vec<(ExtElem, &Surd)> = forms
        .iter()
        .zip(&roots)
        .map(|((c, _), a)| {
            let c = if c.d() == &d { c.clone() } else { c.with_d(&d).ok_or_else(|| Error::domain("coefficient over another discriminant"))? };
            Ok((c, a))
        })
        .collect::<Result<Vec<_>>>()?;
    sum_of_forms(k, &d, &parts)
}
