// SPDX-License-Identifier: Apache-2.0

//! Minimal polynomial of λ_p = 2cos(π/p), obtained from the cyclotomic
//! polynomial Φ_{2p} by the substitution y = x + 1/x.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Monic integer polynomial, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPoly {
    pub p: u32,
    pub coeffs: Vec<BigInt>,
}

impl MinPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact value of `2^(shift·deg) · f(m / 2^shift)`.
    pub(crate) fn eval_dyadic_scaled(&self, m: &BigInt, shift: u64) -> BigInt {
        let n = self.degree();
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let term = (c * m.pow(i as u32)) << (shift * (n - i) as u64);
            acc += term;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_string().parse::<f64>().unwrap_or(f64::NAN))
    }

    /// Human-readable form, highest degree first: `x^2 - x - 1`.
    pub fn to_poly_string(&self) -> String {
        poly_to_string(&self.coeffs, "x")
    }
}

pub(crate) fn poly_to_string(coeffs: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let qlen = rem.len() - dn;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        q[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    q
}

/// Φ_n via Φ_n = (x^n − 1) / ∏_{d | n, d < n} Φ_d.
pub fn cyclotomic(n: u64) -> Vec<BigInt> {
    let mut table: Vec<(u64, Vec<BigInt>)> = Vec::new();
    for d in divisors(n) {
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = BigInt::from(-1);
        num[d as usize] = BigInt::one();
        let mut den = vec![BigInt::one()];
        for (e, phi) in &table {
            if d % e == 0 {
                den = poly_mul(&den, phi);
            }
        }
        table.push((d, poly_div_exact(&num, &den)));
    }
    table.pop().map(|(_, p)| p).unwrap()
}

/// Minimal polynomial of 2cos(π/p) over Q.
pub fn minimal_polynomial(p: u32) -> Result<MinPoly> {
    if p < 3 {
        return Err(Error::domain(format!("Hecke groups need p >= 3, got {p}")));
    }
    let phi = cyclotomic(2 * p as u64);
    let two_m = phi.len() - 1;
    debug_assert!(two_m.is_even());
    let m = two_m / 2;
    debug_assert!((0..=two_m).all(|i| phi[i] == phi[two_m - i]));

    // x^{-m} Φ(x) = c_m + Σ_{j≥1} c_{m+j} (x^j + x^{-j}), and x^j + x^{-j} = t_j(y)
    // with t_0 = 2, t_1 = y, t_{j+1} = y t_j − t_{j−1}.
    let mut t_prev = vec![BigInt::from(2)];
    let mut t_cur = vec![BigInt::zero(), BigInt::one()];
    let mut psi = vec![BigInt::zero(); m + 1];
    psi[0] += &phi[m];
    for j in 1..=m {
        let c = &phi[m + j];
        for (i, t) in t_cur.iter().enumerate() {
            psi[i] += c * t;
        }
        let mut next = vec![BigInt::zero(); t_cur.len() + 1];
        for (i, t) in t_cur.iter().enumerate() {
            next[i + 1] += t;
        }
        for (i, t) in t_prev.iter().enumerate() {
            next[i] -= t;
        }
        t_prev = std::mem::replace(&mut t_cur, next);
    }
    Ok(MinPoly { p, coeffs: psi })
}

/// Euler's totient, used for degree checks.
pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}
