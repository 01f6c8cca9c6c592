// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{ExtElem, FieldElem};
use crate::isp::{isp_of_word, Isp};

use super::eval::{point_budget, u_powers};
use super::{principal_part, PoleTerm, Rpf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Template {
    /// Σ (q_{k,α} − q_{k,α′}) over Z_A, plus the tail.
    Symmetric,
    /// Σ_{Z_A} q_{k,α} − Σ_{Z_{−A}} q_{k,α′}, plus the tail.
    Nonsymmetric,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnsatzOutcome {
    Unique(Rpf),
    /// `particular` has every free tail coefficient set to 0; each direction
    /// is a vector over c_1, …, c_{2k−1}.
    SolutionFamily { particular: Rpf, directions: Vec<Vec<ExtElem>> },
    NoSolution,
}

/// Odd primes 3, 5, 7, 11, …
fn odd_primes() -> impl Iterator<Item = i64> {
    (3i64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn fixed_part(k: u32, isp: &Isp, template: Template) -> Result<Rpf> {
    let mut terms: Vec<PoleTerm> = Vec::new();
    let minus = |ts: Vec<PoleTerm>| -> Vec<PoleTerm> {
        ts.into_iter().map(|t| PoleTerm { coeff: t.coeff.neg(), ..t }).collect()
    };
    match template {
        Template::Symmetric => {
            for a in &isp.positives {
                terms.extend(principal_part(k, a)?);
                terms.extend(minus(principal_part(k, &a.conjugate())?));
            }
        }
        Template::Nonsymmetric => {
            let other = isp_of_word(&isp.conjugate_word)?;
            for a in &isp.positives {
                terms.extend(principal_part(k, a)?);
            }
            for a in &other.positives {
                terms.extend(minus(principal_part(k, &a.conjugate())?));
            }
        }
    }
    let z = ExtElem::zero(&isp.d);
    Rpf::new(k, isp.d.clone(), terms, z.clone(), z.clone(), vec![z; 2 * k as usize - 1])
}

fn unit_tail(k: u32, d: &crate::field::RingElem, n: usize) -> Result<Rpf> {
    let mut tail = vec![ExtElem::zero(d); 2 * k as usize - 1];
    tail[n] = ExtElem::one(d);
    let z = ExtElem::zero(d);
    Rpf::new(k, d.clone(), Vec::new(), z.clone(), z, tail)
}

/// Reduced row echelon form in place; returns the pivot columns.
/// A zero divisor means the discriminant is a square: every entry is folded
/// to Q(λ) and elimination restarts.
fn rref(rows: &mut [Vec<ExtElem>], ncols: usize) -> Result<Vec<usize>> {
    loop {
        match rref_once(rows, ncols) {
            Err(Error::ZeroDivisor { witness }) => {
                for r in rows.iter_mut() {
                    for x in r.iter_mut() {
                        *x = x.fold(&witness);
                    }
                }
            }
            r => return r,
        }
    }
}

fn rref_once(rows: &mut [Vec<ExtElem>], ncols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero_value()) else { continue };
        rows.swap(r, pr);
        let inv = rows[r][c].inv()?;
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect::<Result<Vec<_>>>()?;
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero_value() {
                let f = rows[i][c].clone();
                let new: Vec<ExtElem> =
                    rows[i].iter().zip(&rows[r]).map(|(a, b)| a.sub(&b.mul(&f)?)).collect::<Result<Vec<_>>>()?;
                rows[i] = new;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(pivots)
}

/// Solves for c_1, …, c_{2k−1} so that the template satisfies both relations.
pub fn build_ansatz(k: u32, isp: &Isp, template: Template) -> Result<AnsatzOutcome> {
    let want = if isp.symmetric { Template::Symmetric } else { Template::Nonsymmetric };
    if template != want {
        return Err(Error::domain(format!("{template:?} template does not fit {}", isp.word)));
    }
    let fixed = fixed_part(k, isp, template)?;
    let d = isp.d.clone();
    let n = 2 * k as usize - 1;
    let basis = (0..n).map(|i| unit_tail(k, &d, i)).collect::<Result<Vec<_>>>()?;
    // budget for the full template, tail included
    let need = point_budget(&fixed.with_tail(vec![ExtElem::one(&d); n])?);
    let us = u_powers(isp.p())?;
    let f = d.field().clone();

    let mut rows: Vec<Vec<ExtElem>> = Vec::new();
    let mut primes = odd_primes();
    let mut used = 0;
    while used < need {
        let batch: Vec<i64> = primes.by_ref().take(need - used).collect();
        let evals: Vec<Result<Option<Vec<Vec<ExtElem>>>>> = batch
            .par_iter()
            .map(|&x| {
                let z = FieldElem::from_int(&f, x);
                let mut t_row = Vec::with_capacity(n + 1);
                let mut u_row = Vec::with_capacity(n + 1);
                for b in &basis {
                    match b.residuals(&z, &us) {
                        Ok((rt, ru)) => {
                            t_row.push(rt);
                            u_row.push(ru);
                        }
                        Err(Error::PoleHit(_)) => return Ok(None),
                        Err(e) => return Err(e),
                    }
                }
                match fixed.residuals(&z, &us) {
                    Ok((rt, ru)) => {
                        t_row.push(rt.neg());
                        u_row.push(ru.neg());
                    }
                    Err(Error::PoleHit(_)) => return Ok(None),
                    Err(e) => return Err(e),
                }
                Ok(Some(vec![t_row, u_row]))
            })
            .collect();
        for e in evals {
            if let Some(rs) = e? {
                rows.extend(rs);
                used += 1;
            }
        }
    }

    let pivots = rref(&mut rows, n)?;
    let inconsistent = rows.iter().any(|r| r[..n].iter().all(|x| x.is_zero_value()) && !r[n].is_zero_value());
    if inconsistent {
        return Ok(AnsatzOutcome::NoSolution);
    }
    let mut sol = vec![ExtElem::zero(&d); n];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][n].clone();
    }
    let particular = fixed.with_tail(sol)?;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Ok(AnsatzOutcome::Unique(particular));
    }
    let directions = free
        .iter()
        .map(|&fc| {
            let mut v = vec![ExtElem::zero(&d); n];
            v[fc] = ExtElem::one(&d);
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = rows[i][fc].neg();
            }
            v
        })
        .collect();
    Ok(AnsatzOutcome::SolutionFamily { particular, directions })
}
