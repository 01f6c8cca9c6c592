// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, HeckeField, RingElem};
use crate::group::{generator, sine_ratios, Generator, Mat};

use super::surd::Surd;

/// Default step bound for [`cf_expand`].
pub const CF_STEP_LIMIT: usize = 10_000;

/// λ-continued fraction [r_0; r_1, …, r_n, (r_{n+1}, …, r_{n+m}) repeating].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CF {
    pub p: u32,
    pub preperiod: Vec<i64>,
    pub period: Vec<i64>,
}

impl fmt::Display for CF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if self.preperiod.is_empty() {
            write!(f, "[({})]", join(&self.period))
        } else {
            write!(f, "[{}; ({})]", join(&self.preperiod), join(&self.period))
        }
    }
}

impl CF {
    pub fn new(p: u32, preperiod: Vec<i64>, period: Vec<i64>) -> Self {
        CF { p, preperiod, period }
    }

    pub fn purely_periodic(p: u32, period: Vec<i64>) -> Self {
        CF { p, preperiod: Vec::new(), period }
    }
}

/// ⌊α/λ⌋, decided with exact signs of α − mλ.
pub fn floor_over_lambda(alpha: &Surd) -> i64 {
    let f = alpha.field().clone();
    let lam = FieldElem::lambda(&f);
    let approx = (alpha.to_f64() / f.lambda_f64()).floor();
    let mut m = if approx.is_finite() { approx as i64 } else { 0 };
    let at = |m: i64| alpha.cmp_field(&lam.scale_int(&BigInt::from(m)));
    while at(m) < 0 {
        m -= 1;
    }
    while at(m + 1) >= 0 {
        m += 1;
    }
    m
}

/// One step α ↦ 1/(rλ − α); returns r and the next state.
pub(crate) fn cf_step(alpha: &Surd) -> Result<(i64, Surd)> {
    let r = floor_over_lambda(alpha) + 1;
    let f = alpha.field();
    let x = &(&RingElem::lambda(f).scale(&BigInt::from(r)) * alpha.denom()) - alpha.numer();
    let q2 = (&(&x * &x) - alpha.disc())
        .div_exact(alpha.denom())
        .ok_or_else(|| Error::Internal(format!("surd invariant fails for {alpha}")))?;
    if q2.is_zero() {
        return Err(Error::domain(format!("{alpha} has a terminating expansion")));
    }
    Ok((r, Surd::raw(x, q2, alpha.disc().clone())))
}

fn primitive_period(v: &[i64]) -> Vec<i64> {
    let n = v.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (0..n).all(|i| v[i] == v[i % d]) {
            return v[..d].to_vec();
        }
    }
    v.to_vec()
}

pub fn cf_expand(alpha: &Surd) -> Result<CF> {
    cf_expand_bounded(alpha, CF_STEP_LIMIT)
}

/// Expansion with an explicit step bound. The state (P, Q) for a fixed D
/// pins down the pair (α, α′), so a repeated state closes the period.
pub fn cf_expand_bounded(alpha: &Surd, limit: usize) -> Result<CF> {
    let mut seen: HashMap<(RingElem, RingElem), usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut cur = alpha.clone();
    for step in 0..=limit {
        let key = (cur.numer().clone(), cur.denom().clone());
        if let Some(&start) = seen.get(&key) {
            let period = primitive_period(&digits[start..]);
            return Ok(CF { p: alpha.p(), preperiod: digits[..start].to_vec(), period });
        }
        seen.insert(key, step);
        let (r, next) = cf_step(&cur)?;
        digits.push(r);
        cur = next;
    }
    Err(Error::NotPeriodic(limit))
}

fn runs_of_ones(seq: &[i64]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < seq.len() {
        if seq[i] == 1 {
            let start = i;
            while i < seq.len() && seq[i] == 1 {
                i += 1;
            }
            out.push((start, i - start));
        } else {
            i += 1;
        }
    }
    out
}

/// Run-length test on ones, with the period read cyclically.
pub fn is_admissible(cf: &CF) -> bool {
    if cf.period.is_empty() || cf.period.iter().all(|&r| r == 1) {
        return false;
    }
    let p = cf.p as usize;
    let mut seq = cf.preperiod.clone();
    for _ in 0..3 {
        seq.extend_from_slice(&cf.period);
    }
    if seq[1..].iter().any(|&r| r < 1) {
        return false;
    }
    runs_of_ones(&seq).into_iter().all(|(start, len)| if start == 0 { len + 2 <= p } else { len + 3 <= p })
}

/// True when the period is a rotation of [2, 1, …, 1] with p − 3 ones.
pub fn is_parabolic_period(cf: &CF) -> bool {
    let p = cf.p as usize;
    let n = cf.period.len();
    if n != p - 2 {
        return false;
    }
    let twos: Vec<usize> = (0..n).filter(|&i| cf.period[i] != 1).collect();
    twos.len() == 1 && cf.period[twos[0]] == 2
}

/// S^{r_1}T ⋯ S^{r_n}T.
pub(crate) fn cf_matrix(p: u32, digits: &[i64]) -> Result<Mat> {
    let f = HeckeField::get(p)?;
    let s = generator(p, Generator::S)?;
    let t = generator(p, Generator::T)?;
    let s_inv = s.inverse();
    let mut m = Mat::identity(&f);
    for &r in digits {
        let step = if r >= 0 { &s } else { &s_inv };
        m = m.mul(&step.pow(r.unsigned_abs() as u32)).mul(&t);
    }
    Ok(m)
}

/// The attracting fixed point (a − d + √D)/(2c) of a hyperbolic matrix.
pub(crate) fn attracting_point(m: &Mat) -> Result<Surd> {
    if m.c().is_zero() {
        return Err(Error::domain("matrix fixes infinity (c = 0)"));
    }
    let tr = m.trace();
    let d = &(&tr * &tr) - &RingElem::from_int(m.field(), 4);
    Ok(Surd::raw(m.a() - m.d(), m.c().scale(&BigInt::from(2)), d))
}

pub fn surd_of_cf(cf: &CF) -> Result<Surd> {
    if !is_admissible(cf) {
        return Err(Error::domain(format!("{cf} is not admissible")));
    }
    if is_parabolic_period(cf) {
        return Err(Error::Parabolic(format!("{cf} has the parabolic period")));
    }
    let w = cf_matrix(cf.p, &cf.period)?;
    let beta = attracting_point(&w)?;
    let v = cf_matrix(cf.p, &cf.preperiod)?;
    beta.mobius(&v)
}

/// Purely periodic with a non-parabolic period.
pub fn is_reduced(alpha: &Surd) -> Result<bool> {
    let cf = cf_expand(alpha)?;
    Ok(cf.preperiod.is_empty() && !is_parabolic_period(&cf))
}

/// Size test: 0 < β′ < U^{j+2}(0) < β < U^{j+1}(0) for some 0 ≤ j ≤ p − 3,
/// with U^k(0) = a_k / a_{k−1}.
pub fn reduced_by_inequalities(beta: &Surd) -> bool {
    let p = beta.p() as usize;
    let f = beta.field().clone();
    let a = sine_ratios(&f, p);
    let conj = beta.conjugate();
    if conj.sign() <= 0 {
        return false;
    }
    let u = |k: usize| -> FieldElem {
        FieldElem::from(a[k].clone()).try_div(&FieldElem::from(a[k - 1].clone())).expect("a_k nonzero for k < p")
    };
    for j in 0..=p.saturating_sub(3) {
        let upper_ok = j == 0 || beta.cmp_field(&u(j + 1)) < 0;
        let mid = u(j + 2);
        if upper_ok && beta.cmp_field(&mid) > 0 && conj.cmp_field(&mid) < 0 {
            return true;
        }
    }
    false
}
