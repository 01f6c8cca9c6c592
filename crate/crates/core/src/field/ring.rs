// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::interval::RealInterval;
use super::minpoly::{minimal_polynomial, poly_to_string, MinPoly};
use crate::error::{Error, Result};

/// Starting precision for the sign oracle.
pub const SIGN_START_BITS: u64 = 128;
/// Refinement beyond this raises an internal error instead of guessing a sign.
pub const SIGN_HARD_CAP_BITS: u64 = 1 << 17;

/// Z[λ_p] and Q(λ_p) context: the minimal polynomial plus a cached,
/// progressively refined enclosure of λ_p.
pub struct HeckeField {
    p: u32,
    minpoly: MinPoly,
    /// λ ∈ [lo / 2^bits, hi / 2^bits]
    lambda: Mutex<RealInterval>,
}

impl fmt::Debug for HeckeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeField(p = {})", self.p)
    }
}

fn registry() -> &'static Mutex<HashMap<u32, Arc<HeckeField>>> {
    static REG: OnceLock<Mutex<HashMap<u32, Arc<HeckeField>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

impl HeckeField {
    /// Shared context for G_p, created on first use.
    pub fn get(p: u32) -> Result<Arc<HeckeField>> {
        let mut reg = registry().lock().unwrap();
        if let Some(f) = reg.get(&p) {
            return Ok(f.clone());
        }
        let minpoly = minimal_polynomial(p)?;
        let lambda = initial_bracket(&minpoly)?;
        let field = Arc::new(HeckeField { p, minpoly, lambda: Mutex::new(lambda) });
        reg.insert(p, field.clone());
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    pub fn minpoly(&self) -> &MinPoly {
        &self.minpoly
    }

    pub fn lambda_f64(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.p as f64).cos()
    }

    /// Certified enclosure of λ_p with endpoints at `prec` bits.
    pub fn lambda_enclosure(&self, prec: u64) -> RealInterval {
        let mut cached = self.lambda.lock().unwrap();
        if cached.precision_bits < prec + 2 && cached.lo != cached.hi {
            *cached = refine_bracket(&self.minpoly, &cached, prec + 2);
        }
        cached.coarsen(prec)
    }
}

/// Bracket [lo, hi] around the largest real root of the minimal polynomial,
/// certified by an exact sign change.
fn initial_bracket(mp: &MinPoly) -> Result<RealInterval> {
    if mp.degree() == 1 {
        let root = -&mp.coeffs[0];
        return Ok(RealInterval::point(&root, 0));
    }
    let bits = 48u64;
    let approx = 2.0 * (std::f64::consts::PI / mp.p as f64).cos();
    let scaled = (approx * (1u64 << bits) as f64).floor() as i128;
    let lo = BigInt::from(scaled - 4096);
    let hi = BigInt::from(scaled + 4096);
    let slo = mp.eval_dyadic_scaled(&lo, bits).signum();
    let shi = mp.eval_dyadic_scaled(&hi, bits).signum();
    if slo.is_zero() || shi.is_zero() || slo == shi {
        return Err(Error::Internal(format!("could not bracket 2cos(pi/{})", mp.p)));
    }
    Ok(RealInterval::from_bounds(lo, hi, bits))
}

/// Bisect until the bracket is resolved to at least `target` bits.
fn refine_bracket(mp: &MinPoly, iv: &RealInterval, target: u64) -> RealInterval {
    let mut bits = iv.precision_bits;
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let lo_sign = mp.eval_dyadic_scaled(&lo, bits).signum();
    // First shrink the bracket to width one unit at the current scale.
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let s = mp.eval_dyadic_scaled(&mid, bits).signum();
        if s.is_zero() {
            return RealInterval::from_bounds(mid.clone(), mid, bits);
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    while bits < target {
        bits += 1;
        lo <<= 1usize;
        hi <<= 1usize;
        let mid = &lo + 1;
        let s = mp.eval_dyadic_scaled(&mid, bits).signum();
        if s.is_zero() {
            return RealInterval::from_bounds(mid.clone(), mid, bits);
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RealInterval::from_bounds(lo, hi, bits)
}

/// Element of Z[λ_p], stored as coefficients of 1, λ, …, λ^{deg−1}.
#[derive(Clone)]
pub struct RingElem {
    field: Arc<HeckeField>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.p == other.field.p && self.coeffs == other.coeffs
    }
}

impl Eq for RingElem {}

impl Hash for RingElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.p.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem[p={}]({})", self.field.p, self)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_to_string(&self.coeffs, "λ"))
    }
}

impl RingElem {
    /// Build from any coefficient list (reduced modulo the minimal polynomial).
    pub fn new(field: &Arc<HeckeField>, coeffs: Vec<BigInt>) -> Self {
        let mut e = RingElem { field: field.clone(), coeffs };
        e.reduce();
        e
    }

    pub fn from_i64s(field: &Arc<HeckeField>, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(field: &Arc<HeckeField>) -> Self {
        RingElem { field: field.clone(), coeffs: vec![BigInt::zero(); field.degree()] }
    }

    pub fn one(field: &Arc<HeckeField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<HeckeField>, n: i64) -> Self {
        Self::from_bigint(field, BigInt::from(n))
    }

    pub fn from_bigint(field: &Arc<HeckeField>, n: BigInt) -> Self {
        let mut e = Self::zero(field);
        e.coeffs[0] = n;
        e
    }

    /// λ_p itself.
    pub fn lambda(field: &Arc<HeckeField>) -> Self {
        Self::new(field, vec![BigInt::zero(), BigInt::one()])
    }

    pub fn field(&self) -> &Arc<HeckeField> {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn reduce(&mut self) {
        let d = self.field.degree();
        let m = &self.field.minpoly.coeffs;
        while self.coeffs.len() > d {
            let top = self.coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = self.coeffs.len() - d;
            for j in 0..d {
                self.coeffs[shift + j] -= &top * &m[j];
            }
        }
        self.coeffs.resize(d, BigInt::zero());
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The integer value, if this element lies in Z.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// gcd of the coefficients (0 for the zero element).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field.p != other.field.p {
            return Err(Error::domain(format!(
                "mixed Hecke fields: p = {} and p = {}",
                self.field.p, other.field.p
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        RingElem { field: self.field.clone(), coeffs }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        RingElem { field: self.field.clone(), coeffs }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.coeffs.len();
        let mut out = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RingElem::new(&self.field, out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        RingElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Exact division of every coefficient by an integer; `None` if inexact.
    pub fn div_int_exact(&self, k: &BigInt) -> Option<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(RingElem { field: self.field.clone(), coeffs })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RingElem::one(&self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Interval enclosure of the real value under λ ↦ 2cos(π/p).
    pub fn enclose(&self, prec: u64) -> RealInterval {
        let lam = self.field.lambda_enclosure(prec);
        let mut acc = RealInterval::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lam).add(&RealInterval::point(c, prec));
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.enclose(64).midpoint_f64()
    }

    /// Certified sign: exact zero test first, then interval refinement.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(n) = self.as_integer() {
            return if n.is_positive() { 1 } else { -1 };
        }
        let mut prec = SIGN_START_BITS;
        loop {
            if let Some(s) = self.enclose(prec).sign() {
                return s;
            }
            prec *= 2;
            if prec > SIGN_HARD_CAP_BITS {
                panic!("internal error: sign of nonzero {self:?} undecided at {SIGN_HARD_CAP_BITS} bits");
            }
        }
    }

    /// The nonnegative square root in Z[λ], if there is one.
    ///
    /// Z[λ_p] is integrally closed, so a root in Q(λ) has integer
    /// coefficients. They are recovered from the real embeddings
    /// λ ↦ 2cos(πj/p) by solving the Vandermonde system for each sign
    /// pattern, rounding, and checking the square exactly.
    pub fn sqrt_exact(&self) -> Option<RingElem> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.sign() < 0 {
            return None;
        }
        let p = self.p();
        let n = self.field.degree();
        let embeddings: Vec<f64> = (1..p)
            .filter(|j| j.gcd(&(2 * p)) == 1)
            .map(|j| 2.0 * (std::f64::consts::PI * j as f64 / p as f64).cos())
            .collect();
        debug_assert_eq!(embeddings.len(), n);
        let coeffs_f: Vec<f64> = self.coeffs.iter().map(|c| c.to_string().parse::<f64>().unwrap_or(f64::NAN)).collect();
        let mut roots = Vec::with_capacity(n);
        for &x in &embeddings {
            let v = coeffs_f.iter().rev().fold(0.0, |acc, c| acc * x + c);
            if v < -1e-9 * (1.0 + v.abs()) {
                return None;
            }
            roots.push(v.max(0.0).sqrt());
        }
        // the first embedding is the real one used for signs; its root is ≥ 0
        for mask in 0u32..(1 << (n - 1)) {
            let rhs: Vec<f64> =
                (0..n).map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { -roots[i] } else { roots[i] }).collect();
            let Some(sol) = solve_vandermonde(&embeddings, &rhs) else { continue };
            if sol.iter().any(|c| !c.is_finite() || (c - c.round()).abs() > 1e-6) {
                continue;
            }
            let cand = RingElem::new(&self.field, sol.iter().map(|c| BigInt::from(c.round() as i64)).collect());
            if &(&cand * &cand) == self && cand.sign() >= 0 {
                return Some(cand);
            }
        }
        None
    }

    /// Coefficients with trailing zeros trimmed.
    pub(crate) fn trimmed_coeffs(&self) -> Vec<BigInt> {
        let mut v = self.coeffs.clone();
        while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }
}

/// Solves Σ_i c_i x_j^i = y_j by Gaussian elimination with partial pivoting.
fn solve_vandermonde(xs: &[f64], ys: &[f64]) -> Option<Vec<f64>> {
    let n = xs.len();
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let mut row: Vec<f64> = (0..n).map(|i| xs[j].powi(i as i32)).collect();
            row.push(ys[j]);
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs()))?;
        if m[piv][c].abs() < 1e-12 {
            return None;
        }
        m.swap(c, piv);
        for r in 0..n {
            if r != c {
                let f = m[r][c] / m[c][c];
                for k in c..=n {
                    m[r][k] -= f * m[c][k];
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n] / m[i][i]).collect())
}

macro_rules! ring_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&RingElem> for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                assert_eq!(self.field.p, rhs.field.p, "mixed Hecke fields");
                self.$inner(rhs)
            }
        }
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                (&self).$method(rhs)
            }
        }
        impl $tr<RingElem> for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                self.$method(&rhs)
            }
        }
    };
}

ring_binop!(Add, add, add_unchecked);
ring_binop!(Sub, sub, sub_unchecked);
ring_binop!(Mul, mul, mul_unchecked);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}
