// SPDX-License-Identifier: Apache-2.0

//! The formal quadratic extension Q(λ)[t]/(t² − D), with t read as the
//! positive square root of D.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::interval::RealInterval;
use super::rational::FieldElem;
use super::ring::{HeckeField, RingElem};
use crate::error::{Error, Result};

/// Exact sign of `x + y·√d` for x, y ∈ Z[λ] and d ≥ 0.
pub fn sign_plus_root(x: &RingElem, y: &RingElem, d: &RingElem) -> i8 {
    let sy = if d.is_zero() { 0 } else { y.sign() };
    let sx = x.sign();
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    // opposite signs: compare x² with y²d
    let diff = &(x * x) - &(&(y * y) * d);
    sx * diff.sign()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElem {
    u: FieldElem,
    v: FieldElem,
    d: RingElem,
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElem[p={}]({})", self.u.p(), self)
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else if self.u.is_zero() {
            write!(f, "{}·√({})", self.v, self.d)
        } else {
            write!(f, "{} + {}·√({})", self.u, self.v, self.d)
        }
    }
}

impl ExtElem {
    pub fn new(u: FieldElem, v: FieldElem, d: RingElem) -> Result<Self> {
        if u.p() != v.p() || u.p() != d.p() {
            return Err(Error::domain("mixed Hecke fields in extension element"));
        }
        if d.sign() < 0 {
            return Err(Error::domain(format!("negative discriminant {d}")));
        }
        Ok(ExtElem { u, v, d })
    }

    pub fn from_field(u: FieldElem, d: &RingElem) -> Self {
        let v = FieldElem::zero(u.field());
        ExtElem { u, v, d: d.clone() }
    }

    pub fn zero(d: &RingElem) -> Self {
        Self::from_field(FieldElem::zero(d.field()), d)
    }

    pub fn one(d: &RingElem) -> Self {
        Self::from_field(FieldElem::one(d.field()), d)
    }

    pub fn from_int(n: i64, d: &RingElem) -> Self {
        Self::from_field(FieldElem::from_int(d.field(), n), d)
    }

    /// √D itself.
    pub fn sqrt_d(d: &RingElem) -> Self {
        ExtElem { u: FieldElem::zero(d.field()), v: FieldElem::one(d.field()), d: d.clone() }
    }

    pub fn u(&self) -> &FieldElem {
        &self.u
    }

    pub fn v(&self) -> &FieldElem {
        &self.v
    }

    pub fn d(&self) -> &RingElem {
        &self.d
    }

    pub fn field(&self) -> &Arc<HeckeField> {
        self.u.field()
    }

    pub fn p(&self) -> u32 {
        self.u.p()
    }

    /// Representation-level zero (u = v = 0).
    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// Value-level zero; differs from [`ExtElem::is_zero`] only for square D.
    pub fn is_zero_value(&self) -> bool {
        self.sign() == 0
    }

    pub fn is_rational_part_only(&self) -> bool {
        self.v.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::domain(format!(
                "extension elements over different discriminants {} and {}",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ExtElem { u: &self.u + &other.u, v: &self.v + &other.v, d: self.d.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ExtElem { u: &self.u - &other.u, v: &self.v - &other.v, d: self.d.clone() })
    }

    pub fn neg(&self) -> Self {
        ExtElem { u: -&self.u, v: -&self.v, d: self.d.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let dd = FieldElem::from(self.d.clone());
        let u = &(&self.u * &other.u) + &(&(&self.v * &other.v) * &dd);
        let v = &(&self.u * &other.v) + &(&self.v * &other.u);
        Ok(ExtElem { u, v, d: self.d.clone() })
    }

    pub fn mul_field(&self, k: &FieldElem) -> Self {
        ExtElem { u: &self.u * k, v: &self.v * k, d: self.d.clone() }
    }

    pub fn add_field(&self, k: &FieldElem) -> Self {
        ExtElem { u: &self.u + k, v: self.v.clone(), d: self.d.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ExtElem::one(&self.d);
        for _ in 0..e {
            acc = acc.mul(self).expect("same discriminant");
        }
        acc
    }

    /// u − v√D.
    pub fn conj(&self) -> Self {
        ExtElem { u: self.u.clone(), v: -&self.v, d: self.d.clone() }
    }

    /// u² − v²D.
    pub fn norm(&self) -> FieldElem {
        &(&self.u * &self.u) - &(&(&self.v * &self.v) * &FieldElem::from(self.d.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("division by zero in the quadratic extension"));
        }
        let n = self.norm();
        if n.is_zero() {
            // u² = v²D, so (u/v)² = D.
            let w = self.u.try_div(&self.v)?.abs();
            return Err(Error::ZeroDivisor { witness: w });
        }
        let ninv = n.inv()?;
        Ok(self.conj().mul_field(&ninv))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.mul(&other.inv()?)
    }

    /// Replace √D by `w` (with w² = D, w ≥ 0), giving an element with v = 0.
    pub fn fold(&self, w: &FieldElem) -> Self {
        ExtElem { u: &self.u + &(&self.v * w), v: FieldElem::zero(self.field()), d: self.d.clone() }
    }

    /// Same value with the discriminant relabelled; only valid when v = 0.
    pub fn with_d(&self, d: &RingElem) -> Option<Self> {
        self.v.is_zero().then(|| ExtElem { u: self.u.clone(), v: self.v.clone(), d: d.clone() })
    }

    pub fn sign(&self) -> i8 {
        // clear the integer denominators: sign(nu/du + nv/dv √D) = sign(nu·dv + nv·du·√D)
        let x = self.u.num().scale(self.v.den());
        let y = self.v.num().scale(self.u.den());
        sign_plus_root(&x, &y, &self.d)
    }

    pub fn enclose(&self, prec: u64) -> RealInterval {
        let u = self.u.enclose(prec);
        if self.v.is_zero() {
            return u;
        }
        let root = self.d.enclose(prec).sqrt();
        u.add(&self.v.enclose(prec).mul(&root))
    }

    pub fn to_f64(&self) -> f64 {
        self.enclose(64).midpoint_f64()
    }

    /// Decimal string with `digits` places, refined until the digits are pinned.
    pub fn to_decimal(&self, digits: usize) -> String {
        let mut prec = (digits as f64 * 3.33) as u64 + 64;
        loop {
            if let Some(s) = self.enclose(prec).to_decimal(digits) {
                return s;
            }
            prec *= 2;
        }
    }

    /// Integer coefficients view: (nu, du, nv, dv).
    pub fn parts(&self) -> (&RingElem, &BigInt, &RingElem, &BigInt) {
        (self.u.num(), self.u.den(), self.v.num(), self.v.den())
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }
}
