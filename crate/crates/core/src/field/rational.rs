// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::RealInterval;
use super::ring::{HeckeField, RingElem};
use crate::error::{Error, Result};

/// Element of Q(λ_p) as `num / den` with `den` a positive integer coprime to
/// the content of `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: RingElem,
    den: BigInt,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem[p={}]({})", self.num.p(), self)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl From<RingElem> for FieldElem {
    fn from(num: RingElem) -> Self {
        FieldElem { num, den: BigInt::one() }
    }
}

impl FieldElem {
    pub fn new(num: RingElem, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        let mut e = FieldElem { num, den };
        e.normalize();
        Ok(e)
    }

    pub fn from_ratio(field: &Arc<HeckeField>, n: i64, d: i64) -> Self {
        FieldElem::new(RingElem::from_int(field, n), BigInt::from(d)).expect("nonzero denominator")
    }

    pub fn from_int(field: &Arc<HeckeField>, n: i64) -> Self {
        RingElem::from_int(field, n).into()
    }

    pub fn zero(field: &Arc<HeckeField>) -> Self {
        RingElem::zero(field).into()
    }

    pub fn one(field: &Arc<HeckeField>) -> Self {
        RingElem::one(field).into()
    }

    pub fn lambda(field: &Arc<HeckeField>) -> Self {
        RingElem::lambda(field).into()
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            self.num = -&self.num;
        }
        let g = self.num.content().gcd(&self.den);
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_int_exact(&g).unwrap();
            self.den = &self.den / &g;
        }
        if self.num.is_zero() {
            self.den = BigInt::one();
        }
    }

    pub fn num(&self) -> &RingElem {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn field(&self) -> &Arc<HeckeField> {
        self.num.field()
    }

    pub fn p(&self) -> u32 {
        self.num.p()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The element as a member of Z[λ], if its denominator is 1.
    pub fn as_ring(&self) -> Option<&RingElem> {
        self.den.is_one().then_some(&self.num)
    }

    /// Rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num.as_integer().map(|n| BigRational::new(n.clone(), self.den.clone()))
    }

    pub fn sign(&self) -> i8 {
        self.num.sign()
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn enclose(&self, prec: u64) -> RealInterval {
        self.num.enclose(prec).div_int(&self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.enclose(64).midpoint_f64()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = FieldElem::one(self.field());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let mut out = FieldElem { num: self.num.scale(k), den: self.den.clone() };
        out.normalize();
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm with the
    /// minimal polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("division by zero in Q(λ)"));
        }
        let field = self.field().clone();
        let a: Vec<BigRational> = self.num.trimmed_coeffs().into_iter().map(BigRational::from_integer).collect();
        let m: Vec<BigRational> =
            field.minpoly().coeffs.iter().cloned().map(BigRational::from_integer).collect();
        let s = poly_inverse_mod(&a, &m)
            .ok_or_else(|| Error::Internal("element not invertible modulo the minimal polynomial".into()))?;
        // self^{-1} = den · s(λ)
        let common = s.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs: Vec<BigInt> = s.iter().map(|c| (c * BigRational::from_integer(common.clone())).to_integer()).collect();
        let num = RingElem::new(&field, coeffs).scale(&self.den);
        FieldElem::new(num, common)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }
}

impl RingElem {
    /// Exact quotient in Z[λ]; `None` if `other` is zero or does not divide `self`.
    pub fn div_exact(&self, other: &RingElem) -> Option<RingElem> {
        if other.is_zero() {
            return None;
        }
        if let Some(k) = other.as_integer() {
            return self.div_int_exact(k);
        }
        let q = FieldElem::from(self.clone()).try_div(&FieldElem::from(other.clone())).ok()?;
        q.as_ring().cloned()
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = &r[i + j] - &c * bj;
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

fn poly_mul_sub(s0: &[BigRational], q: &[BigRational], s1: &[BigRational]) -> Vec<BigRational> {
    // s0 − q·s1
    let mut out = vec![BigRational::zero(); (q.len() + s1.len() - 1).max(s0.len())];
    for (i, c) in s0.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, a) in q.iter().enumerate() {
        for (j, b) in s1.iter().enumerate() {
            out[i + j] = &out[i + j] - a * b;
        }
    }
    trim(&mut out);
    out
}

/// s with s·a ≡ 1 (mod m), for coprime a and m over Q.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0 = vec![BigRational::zero()];
    let mut s1 = vec![BigRational::one()];
    loop {
        if r1.iter().all(Zero::is_zero) {
            return None;
        }
        if r1.len() == 1 {
            let c = r1[0].clone();
            let mut out: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
            // reduce modulo m to keep degree below deg m
            if out.len() >= m.len() {
                out = poly_divrem(&out, m).1;
            }
            return Some(out);
        }
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_mul_sub(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
}

impl Add<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        if self.den == rhs.den {
            let mut out = FieldElem { num: &self.num + &rhs.num, den: self.den.clone() };
            out.normalize();
            return out;
        }
        let num = &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den);
        let mut out = FieldElem { num, den: &self.den * &rhs.den };
        out.normalize();
        out
    }
}

impl Sub<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Mul<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        let mut out = FieldElem { num: &self.num * &rhs.num, den: &self.den * &rhs.den };
        out.normalize();
        out
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
        impl $tr<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_lambda() {
        for p in 3..=12u32 {
            let field = HeckeField::get(p).unwrap();
            let l = FieldElem::lambda(&field);
            let inv = l.inv().unwrap();
            assert!((&l * &inv).is_one(), "p = {p}");
        }
    }

    #[test]
    fn canonical_form() {
        let field = HeckeField::get(6).unwrap();
        let a = FieldElem::new(RingElem::from_i64s(&field, &[4, 6]), BigInt::from(-8)).unwrap();
        assert_eq!(a.den(), &BigInt::from(4));
        assert_eq!(a.num().coeffs(), &[BigInt::from(-2), BigInt::from(-3)]);
        let z = FieldElem::new(RingElem::zero(&field), BigInt::from(7)).unwrap();
        assert!(z.den().is_one());
    }

    #[test]
    fn inverse_of_unit_in_g7() {
        let field = HeckeField::get(7).unwrap();
        let x = FieldElem::from(RingElem::from_i64s(&field, &[2, -1, 3]));
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(FieldElem::zero(&field).inv().is_err());
    }
}
