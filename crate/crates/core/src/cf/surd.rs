// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{sign_plus_root, ExtElem, FieldElem, HeckeField, RealInterval, RingElem};
use crate::group::Mat;

/// Real quadratic irrationality (P + √D)/Q with P, Q, D in Z[λ].
///
/// Values built by this crate keep Q | D − P², which keeps every continued
/// fraction step and every Möbius image inside Z[λ] with the same D.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    p: RingElem,
    q: RingElem,
    d: RingElem,
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd[p={}]({})", self.p.p(), self)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + √({}))/({})", self.p, self.d, self.q)
    }
}

impl Surd {
    /// Builds (P + √D)/Q. When Q does not divide D − P² the representation is
    /// rescaled to (PQ + √(Q²D))/Q², which changes D.
    pub fn new(p: RingElem, q: RingElem, d: RingElem) -> Result<Self> {
        if p.p() != q.p() || p.p() != d.p() {
            return Err(Error::domain("mixed Hecke fields in surd"));
        }
        if q.is_zero() {
            return Err(Error::domain("surd with zero denominator"));
        }
        if d.sign() < 0 {
            return Err(Error::domain(format!("negative discriminant {d}")));
        }
        let rem = &d - &(&p * &p);
        if rem.div_exact(&q).is_some() {
            return Ok(Surd { p, q, d });
        }
        let d2 = &(&q * &q) * &d;
        Ok(Surd { p: &p * &q, q: &q * &q, d: d2 })
    }

    pub(crate) fn raw(p: RingElem, q: RingElem, d: RingElem) -> Self {
        debug_assert!((&d - &(&p * &p)).div_exact(&q).is_some(), "surd invariant broken");
        Surd { p, q, d }
    }

    pub fn from_i64s(field: &Arc<HeckeField>, p: &[i64], q: &[i64], d: &[i64]) -> Result<Self> {
        Surd::new(RingElem::from_i64s(field, p), RingElem::from_i64s(field, q), RingElem::from_i64s(field, d))
    }

    /// P
    pub fn numer(&self) -> &RingElem {
        &self.p
    }

    /// Q
    pub fn denom(&self) -> &RingElem {
        &self.q
    }

    /// D
    pub fn disc(&self) -> &RingElem {
        &self.d
    }

    pub fn field(&self) -> &Arc<HeckeField> {
        self.p.field()
    }

    pub fn p(&self) -> u32 {
        self.p.p()
    }

    /// The value as u + v√D.
    pub fn to_ext(&self) -> ExtElem {
        let qf = FieldElem::from(self.q.clone());
        let qi = qf.inv().expect("nonzero denominator");
        ExtElem::new(&FieldElem::from(self.p.clone()) * &qi, qi, self.d.clone()).expect("same field")
    }

    /// The other root (P − √D)/Q, written as (−P + √D)/(−Q).
    pub fn conjugate(&self) -> Surd {
        Surd { p: -&self.p, q: -&self.q, d: self.d.clone() }
    }

    pub fn sign(&self) -> i8 {
        sign_plus_root(&self.p, &RingElem::one(self.field()), &self.d) * self.q.sign()
    }

    /// sign(self − x) for x in Q(λ).
    pub fn cmp_field(&self, x: &FieldElem) -> i8 {
        let den = RingElem::from_bigint(self.field(), x.den().clone());
        let lhs = &(&self.p * &den) - &(&self.q * x.num());
        sign_plus_root(&lhs, &den, &self.d) * self.q.sign()
    }

    /// sign(self − other); both must share D.
    pub fn cmp_surd(&self, other: &Surd) -> Result<i8> {
        if self.d != other.d {
            return Err(Error::NotComparable);
        }
        // (P1 + √D)/Q1 − (P2 + √D)/Q2 = (P1Q2 − P2Q1 + (Q2 − Q1)√D)/(Q1Q2)
        let x = &(&self.p * &other.q) - &(&other.p * &self.q);
        let y = &other.q - &self.q;
        Ok(sign_plus_root(&x, &y, &self.d) * self.q.sign() * other.q.sign())
    }

    /// Equality of values; different discriminants are not comparable.
    pub fn semantic_eq(&self, other: &Surd) -> Result<bool> {
        Ok(self.cmp_surd(other)? == 0)
    }

    /// self − i·λ, i.e. S^{−i} applied to self.
    pub fn sub_lambda(&self, i: i64) -> Surd {
        let shift = &RingElem::lambda(self.field()).scale(&BigInt::from(i)) * &self.q;
        Surd { p: &self.p - &shift, q: self.q.clone(), d: self.d.clone() }
    }

    /// The image M·self under z ↦ (az + b)/(cz + d), keeping D.
    pub fn mobius(&self, m: &Mat) -> Result<Surd> {
        let (a, b, c, dd) = (m.a(), m.b(), m.c(), m.d());
        let x = &(a * &self.p) + &(b * &self.q);
        let y = &(c * &self.p) + &(dd * &self.q);
        let num = &(&x * &y) - &(&(a * c) * &self.d);
        let den = &(&y * &y) - &(&(c * c) * &self.d);
        if den.is_zero() {
            return Err(Error::domain(format!("{self} is mapped to infinity")));
        }
        let p = num.div_exact(&self.q).ok_or_else(|| Error::Internal("inexact Möbius image".into()))?;
        let q = den.div_exact(&self.q).ok_or_else(|| Error::Internal("inexact Möbius image".into()))?;
        Ok(Surd::raw(p, q, self.d.clone()))
    }

    pub fn enclose(&self, prec: u64) -> RealInterval {
        self.to_ext().enclose(prec)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_ext().to_f64()
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        self.to_ext().to_decimal(digits)
    }

    /// Coefficients of the quadratic form [Q/2, −P, (P² − D)/(2Q)] whose
    /// positive-branch root is this surd, or `None` if they are not in Z[λ].
    pub(crate) fn form_coeffs(&self) -> Option<(RingElem, RingElem, RingElem)> {
        let two = BigInt::from(2);
        let a = self.q.div_int_exact(&two)?;
        let c = (&(&self.p * &self.p) - &self.d).div_exact(&self.q.scale(&two))?;
        Some((a, -&self.p, c))
    }
}
