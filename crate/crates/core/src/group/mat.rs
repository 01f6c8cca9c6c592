// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{HeckeField, RingElem};

/// Projective 2×2 matrix of determinant 1 over Z[λ_p].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    a: RingElem,
    b: RingElem,
    c: RingElem,
    d: RingElem,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[p={}]{}", self.p(), self)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Hyperbolic,
    Parabolic,
    Elliptic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    S,
    T,
    U,
    V(u32),
}

impl Mat {
    /// Checks the determinant and sign-normalizes.
    pub fn new(a: RingElem, b: RingElem, c: RingElem, d: RingElem) -> Result<Self> {
        let p = a.p();
        if b.p() != p || c.p() != p || d.p() != p {
            return Err(Error::domain("mixed Hecke fields in matrix"));
        }
        let det = &(&a * &d) - &(&b * &c);
        if !det.is_one() {
            return Err(Error::domain(format!("determinant {det} is not 1")));
        }
        Ok(Mat { a, b, c, d }.normalized())
    }

    pub(crate) fn raw(a: RingElem, b: RingElem, c: RingElem, d: RingElem) -> Self {
        Mat { a, b, c, d }.normalized()
    }

    pub fn from_i64s(field: &Arc<HeckeField>, e: [&[i64]; 4]) -> Result<Self> {
        Mat::new(
            RingElem::from_i64s(field, e[0]),
            RingElem::from_i64s(field, e[1]),
            RingElem::from_i64s(field, e[2]),
            RingElem::from_i64s(field, e[3]),
        )
    }

    fn normalized(self) -> Self {
        let ts = self.trace().sign();
        let flip = match ts {
            1 => false,
            -1 => true,
            _ => {
                let first = if self.c.is_zero() { &self.a } else { &self.c };
                first.sign() < 0
            }
        };
        if flip {
            Mat { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
        } else {
            self
        }
    }

    pub fn identity(field: &Arc<HeckeField>) -> Self {
        Mat { a: RingElem::one(field), b: RingElem::zero(field), c: RingElem::zero(field), d: RingElem::one(field) }
    }

    pub fn a(&self) -> &RingElem {
        &self.a
    }
    pub fn b(&self) -> &RingElem {
        &self.b
    }
    pub fn c(&self) -> &RingElem {
        &self.c
    }
    pub fn d(&self) -> &RingElem {
        &self.d
    }

    pub fn field(&self) -> &Arc<HeckeField> {
        self.a.field()
    }

    pub fn p(&self) -> u32 {
        self.a.p()
    }

    pub fn trace(&self) -> RingElem {
        &self.a + &self.d
    }

    pub fn det(&self) -> RingElem {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        Mat::raw(
            &(&self.a * &o.a) + &(&self.b * &o.c),
            &(&self.a * &o.b) + &(&self.b * &o.d),
            &(&self.c * &o.a) + &(&self.d * &o.c),
            &(&self.c * &o.b) + &(&self.d * &o.d),
        )
    }

    pub fn inverse(&self) -> Mat {
        Mat::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn transpose(&self) -> Mat {
        Mat::raw(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn pow(&self, e: u32) -> Mat {
        let mut acc = Mat::identity(self.field());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Hyperbolic, parabolic or elliptic according to |trace| against 2.
    pub fn classify(&self) -> Classification {
        // the trace is nonnegative after normalization
        let excess = &self.trace() - &RingElem::from_int(self.field(), 2);
        match excess.sign() {
            1 => Classification::Hyperbolic,
            0 => Classification::Parabolic,
            _ => Classification::Elliptic,
        }
    }
}

pub fn generator(p: u32, which: Generator) -> Result<Mat> {
    let f = HeckeField::get(p)?;
    let l = RingElem::lambda(&f);
    let one = RingElem::one(&f);
    let zero = RingElem::zero(&f);
    Ok(match which {
        Generator::S => Mat::raw(one.clone(), l, zero, one),
        Generator::T => Mat::raw(zero, -&one, one, RingElem::zero(&f)),
        Generator::U => Mat::raw(l, -&one, one, zero),
        Generator::V(j) => {
            if j < 1 || j >= p {
                return Err(Error::domain(format!("generator V_{j} needs 1 <= j <= {}", p - 1)));
            }
            let a = sine_ratios(&f, j as usize + 1);
            let j = j as usize;
            Mat::raw(a[j].clone(), a[j + 1].clone(), a[j - 1].clone(), a[j].clone())
        }
    })
}

/// a_0, …, a_n with a_0 = 0, a_1 = 1, a_{j+1} = λ a_j − a_{j−1}.
pub(crate) fn sine_ratios(f: &Arc<HeckeField>, n: usize) -> Vec<RingElem> {
    let l = RingElem::lambda(f);
    let mut a = vec![RingElem::zero(f), RingElem::one(f)];
    while a.len() <= n {
        let k = a.len();
        let next = &(&l * &a[k - 1]) - &a[k - 2];
        a.push(next);
    }
    a
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Result<Mat> {
    if a.p() != b.p() {
        return Err(Error::domain("matrices from different Hecke groups"));
    }
    Ok(a.mul(b))
}

pub fn classify(m: &Mat) -> Classification {
    m.classify()
}
