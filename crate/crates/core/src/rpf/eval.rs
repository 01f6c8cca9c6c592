// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{ExtElem, FieldElem};
use crate::group::{generator, Generator, Mat};

use super::Rpf;

/// Extra sample points beyond the degree bound.
pub const VERIFY_POINT_MARGIN: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// q + q|T = 0
    T,
    /// q + q|U + ⋯ + q|U^{p−1} = 0
    U,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Valid { points: usize },
    Invalid { point: FieldElem, relation: Relation, value: ExtElem },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }
}

fn pole_hit(e: Error, what: &str) -> Error {
    match e {
        Error::Domain(_) => Error::PoleHit(what.to_string()),
        other => other,
    }
}

impl Rpf {
    fn eval_with(&self, z: &FieldElem, fold: Option<&FieldElem>) -> Result<ExtElem> {
        let d = &self.d;
        let lift = |e: ExtElem| match fold {
            Some(w) => e.fold(w),
            None => e,
        };
        let zz = ExtElem::from_field(z.clone(), d);
        let mut sum = ExtElem::zero(d);
        let mut cache: Vec<(usize, ExtElem)> = Vec::new();
        for (i, t) in self.pole_terms.iter().enumerate() {
            let idx = cache.iter().position(|(j, _)| self.pole_terms[*j].alpha == t.alpha);
            let inv = match idx {
                Some(n) => cache[n].1.clone(),
                None => {
                    let diff = zz.sub(&lift(t.alpha.to_ext()))?;
                    let inv = diff.inv().map_err(|e| pole_hit(e, &t.alpha.to_string()))?;
                    cache.push((i, inv.clone()));
                    inv
                }
            };
            sum = sum.add(&inv.pow(t.order).mul(&lift(t.coeff.clone()))?)?;
        }
        if self.has_origin_part() {
            let zi = z.inv().map_err(|e| pole_hit(e, "0"))?;
            let zi2k = zi.pow(2 * self.k);
            let one = FieldElem::one(z.field());
            sum = sum.add(&lift(self.a0.clone()).mul_field(&(&one - &zi2k)))?;
            sum = sum.add(&lift(self.b1.clone()).mul_field(&zi))?;
            let mut zp = zi.clone();
            for c in &self.tail {
                sum = sum.add(&lift(c.clone()).mul_field(&zp))?;
                zp = &zp * &zi;
            }
        }
        Ok(sum)
    }

    /// Exact value q(z). Square discriminants are folded to Q(λ) on demand.
    pub fn evaluate(&self, z: &FieldElem) -> Result<ExtElem> {
        match self.eval_with(z, self.root.as_ref()) {
            Err(Error::ZeroDivisor { witness }) => self.eval_with(z, Some(&witness)),
            r => r,
        }
    }

    /// (q|M)(z) = (cz + d)^{−2k} q(Mz).
    pub fn slash_eval(&self, m: &Mat, z: &FieldElem) -> Result<ExtElem> {
        let c = FieldElem::from(m.c().clone());
        let dd = FieldElem::from(m.d().clone());
        let den = &(&c * z) + &dd;
        if den.is_zero() {
            return Err(Error::PoleHit("infinity".into()));
        }
        let num = &(&FieldElem::from(m.a().clone()) * z) + &FieldElem::from(m.b().clone());
        let w = num.try_div(&den)?;
        let factor = den.pow(2 * self.k).inv()?;
        Ok(self.evaluate(&w)?.mul_field(&factor))
    }

    /// (R_T(z), R_U(z)).
    pub fn residuals(&self, z: &FieldElem, us: &[Mat]) -> Result<(ExtElem, ExtElem)> {
        let t = generator(self.p, Generator::T)?;
        let rt = self.evaluate(z)?.add(&self.slash_eval(&t, z)?)?;
        let mut ru = ExtElem::zero(&self.d);
        for m in us {
            ru = ru.add(&self.slash_eval(m, z)?)?;
        }
        Ok((rt, ru))
    }
}

/// U^0, …, U^{p−1}.
pub(crate) fn u_powers(p: u32) -> Result<Vec<Mat>> {
    let u = generator(p, Generator::U)?;
    let mut out = vec![u.pow(0)];
    for _ in 1..p {
        let next = out.last().expect("nonempty").mul(&u);
        out.push(next);
    }
    Ok(out)
}

/// Number of sample points that makes the evaluation test an identity test.
pub(crate) fn point_budget(q: &Rpf) -> usize {
    let p = q.p as usize;
    let k2 = 2 * q.k as usize;
    k2 * (p + 1) + q.order_mass() as usize * (p + 1) + VERIFY_POINT_MARGIN
}

/// Exact check of both relations at even integer points 2, 4, 6, …
pub fn verify(q: &Rpf) -> Result<Verdict> {
    verify_with(q, |i| 2 * (i as i64 + 1))
}

/// Verification on the points `point(0), point(1), …`, skipping points where
/// a slashed copy has a pole.
pub fn verify_with(q: &Rpf, point: impl Fn(usize) -> i64 + Sync) -> Result<Verdict> {
    let need = point_budget(q);
    let us = u_powers(q.p)?;
    let f = q.d.field().clone();
    let mut used = 0usize;
    let mut next = 0usize;
    while used < need {
        let batch: Vec<usize> = (next..next + need - used).collect();
        next += batch.len();
        let results: Vec<Result<Option<(FieldElem, ExtElem, ExtElem)>>> = batch
            .par_iter()
            .map(|&i| {
                let z = FieldElem::from_int(&f, point(i));
                match q.residuals(&z, &us) {
                    Ok((rt, ru)) => Ok(Some((z, rt, ru))),
                    Err(Error::PoleHit(_)) => Ok(None),
                    Err(e) => Err(e),
                }
            })
            .collect();
        for r in results {
            if let Some((z, rt, ru)) = r? {
                if !rt.is_zero_value() {
                    return Ok(Verdict::Invalid { point: z, relation: Relation::T, value: rt });
                }
                if !ru.is_zero_value() {
                    return Ok(Verdict::Invalid { point: z, relation: Relation::U, value: ru });
                }
                used += 1;
            }
        }
        if next > 64 * need + 1024 {
            return Err(Error::Internal("too many sample points hit poles".into()));
        }
    }
    Ok(Verdict::Valid { points: used })
}
