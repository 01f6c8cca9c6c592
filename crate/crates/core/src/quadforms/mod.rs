// SPDX-License-Identifier: Apache-2.0

//! λ-binary quadratic forms and the matrix ↔ form ↔ fixed point correspondence.

use std::fmt;

use num_bigint::BigInt;

use crate::cf::{attracting_point, cf_expand, cf_matrix, is_parabolic_period, Surd};
use crate::error::{Error, Result};
use crate::field::{FieldElem, RingElem};
use crate::group::{generator, Classification, Generator, Mat};

/// The form Ax² + Bxy + Cy².
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QForm {
    pub a: RingElem,
    pub b: RingElem,
    pub c: RingElem,
}

impl fmt::Display for QForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

impl QForm {
    pub fn new(a: RingElem, b: RingElem, c: RingElem) -> Result<Self> {
        if a.p() != b.p() || a.p() != c.p() {
            return Err(Error::domain("mixed Hecke fields in form"));
        }
        Ok(QForm { a, b, c })
    }

    pub fn p(&self) -> u32 {
        self.a.p()
    }

    /// B² − 4AC
    pub fn disc(&self) -> RingElem {
        &(&self.b * &self.b) - &(&self.a * &self.c).scale(&BigInt::from(4))
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.disc().sign() > 0
    }

    /// Q(z, 1).
    pub fn eval(&self, z: &FieldElem) -> FieldElem {
        let a = FieldElem::from(self.a.clone());
        let b = FieldElem::from(self.b.clone());
        let c = FieldElem::from(self.c.clone());
        &(&(&a * z) + &b) * z + c
    }

    /// The root (−B + √D)/(2A).
    pub fn root(&self) -> Result<Surd> {
        if self.a.is_zero() {
            return Err(Error::domain(format!("{self} has a root at infinity")));
        }
        Surd::new(-&self.b, self.a.scale(&BigInt::from(2)), self.disc())
    }
}

/// [c, d − a, −b]
pub fn form_of_matrix(m: &Mat) -> Result<QForm> {
    if m.classify() != Classification::Hyperbolic {
        return Err(Error::domain(format!("{m} is not hyperbolic")));
    }
    let q = QForm { a: m.c().clone(), b: m.d() - m.a(), c: -m.b() };
    debug_assert_eq!(q.disc(), &(&m.trace() * &m.trace()) - &RingElem::from_int(m.field(), 4));
    Ok(q)
}

/// The form [Q/2, −P, (P² − D)/(2Q)] of a surd (P + √D)/Q, or `None` when
/// its coefficients leave Z[λ]. For a surd obtained from a matrix this is the
/// form of that matrix carried along the same Möbius maps.
pub fn form_of_surd(alpha: &Surd) -> Option<QForm> {
    let (a, b, c) = alpha.form_coeffs()?;
    Some(QForm { a, b, c })
}

/// Attracting and repelling fixed points.
pub fn fixed_points(m: &Mat) -> Result<(Surd, Surd)> {
    if m.classify() != Classification::Hyperbolic {
        return Err(Error::domain(format!("{m} is not hyperbolic")));
    }
    if m.c().is_zero() {
        return Err(Error::domain(format!("{m} fixes infinity (c = 0)")));
    }
    let alpha = attracting_point(m)?;
    let conj = alpha.conjugate();
    Ok((alpha, conj))
}

/// (Q ∘ M)(x, y) = Q(ax + by, cx + dy).
pub fn act(q: &QForm, m: &Mat) -> QForm {
    let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
    let two = BigInt::from(2);
    let na = &(&(&q.a * &(a * a)) + &(&q.b * &(a * c))) + &(&q.c * &(c * c));
    let nb = &(&(&q.a * &(a * b)).scale(&two) + &(&q.b * &(&(a * d) + &(b * c)))) + &(&q.c * &(c * d)).scale(&two);
    let nc = &(&(&q.a * &(b * b)) + &(&q.b * &(b * d))) + &(&q.c * &(d * d));
    QForm { a: na, b: nb, c: nc }
}

pub fn negate(q: &QForm) -> QForm {
    QForm { a: -&q.a, b: -&q.b, c: -&q.c }
}

pub fn conjugate(alpha: &Surd) -> Surd {
    alpha.conjugate()
}

/// A > 0 > C.
pub fn is_simple(q: &QForm) -> bool {
    q.a.sign() > 0 && q.c.sign() < 0
}

/// α′ < 0 < α.
pub fn is_simple_surd(alpha: &Surd) -> bool {
    alpha.sign() > 0 && alpha.conjugate().sign() < 0
}

/// V W V^{−1} from the expansion of α, with V the preperiod and W the period.
pub fn matrix_of_surd(alpha: &Surd) -> Result<Mat> {
    let cf = cf_expand(alpha)?;
    if is_parabolic_period(&cf) {
        return Err(Error::Parabolic(format!("{alpha} is a cusp")));
    }
    let v = cf_matrix(cf.p, &cf.preperiod)?;
    let w = cf_matrix(cf.p, &cf.period)?;
    Ok(v.mul(&w).mul(&v.inverse()))
}

/// Q_{M^⊤} = −Q_M ∘ T and α_{M^⊤} = T α′_M, both exactly.
pub fn transpose_form_identity_check(m: &Mat) -> Result<bool> {
    let t = generator(m.p(), Generator::T)?;
    let mt = m.transpose();
    let forms_ok = form_of_matrix(&mt)? == negate(&act(&form_of_matrix(m)?, &t));
    let (alpha_t, _) = fixed_points(&mt)?;
    let (_, conj) = fixed_points(m)?;
    let image = conj.mobius(&t)?;
    Ok(forms_ok && alpha_t.semantic_eq(&image)?)
}
