// SPDX-License-Identifier: Apache-2.0

//! Irreducible systems of poles: construction from generator words,
//! counting, enumeration and Hecke-symmetry.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::cf::{blocks_to_period, cf_expand, surd_of_cf, word_blocks, Block, Surd, CF};
use crate::error::{Error, Result};
use crate::field::RingElem;
use crate::group::{enumerate_words, transpose_word, word_to_matrix, GenWord};
use crate::quadforms::is_simple_surd;

/// The positive poles of the ISP attached to a primitive hyperbolic class.
#[derive(Debug, Clone, PartialEq)]
pub struct Isp {
    pub word: GenWord,
    pub d: RingElem,
    /// Reduced point of the first block.
    pub beta1: Surd,
    /// Ordered by block, then by shift.
    pub positives: Vec<Surd>,
    pub symmetric: bool,
    pub conjugate_word: GenWord,
}

impl Isp {
    pub fn p(&self) -> u32 {
        self.word.p()
    }

    /// Positives together with their images under T.
    pub fn all_poles(&self) -> Vec<Surd> {
        let t = crate::group::generator(self.p(), crate::group::Generator::T).expect("valid p");
        let mut out = self.positives.clone();
        out.extend(self.positives.iter().map(|a| a.mobius(&t).expect("nonzero pole")));
        out
    }
}

/// The primitive root of a cyclic word and its exponent.
fn primitive_root(w: &GenWord) -> (Vec<u32>, u32) {
    let l = w.letters();
    let n = l.len();
    let d = (1..=n).find(|&d| n.is_multiple_of(d) && (0..n).all(|i| l[i] == l[i % d])).unwrap_or(n);
    (l[..d].to_vec(), (n / d) as u32)
}

/// Reduced point β_t for the rotation of the blocks starting at block t.
fn reduced_point(p: u32, blocks: &[Block], t: usize) -> Result<Surd> {
    let rotated: Vec<Block> = blocks[t..].iter().chain(&blocks[..t]).copied().collect();
    surd_of_cf(&CF::purely_periodic(p, blocks_to_period(&rotated)))
}

pub fn isp_of_word(w: &GenWord) -> Result<Isp> {
    let (root, e) = primitive_root(w);
    if e > 1 {
        return Err(Error::NonPrimitive { word: GenWord::new(w.p(), &root)?, exponent: e });
    }
    let p = w.p();
    let blocks = word_blocks(w)?;
    let tr = word_to_matrix(w).trace();
    let d = &(&tr * &tr) - &RingElem::from_int(tr.field(), 4);
    let mut positives = Vec::with_capacity(w.len());
    let mut beta1 = None;
    for (t, b) in blocks.iter().enumerate() {
        let beta = reduced_point(p, &blocks, t)?;
        if beta.disc() != &d {
            return Err(Error::Internal(format!("discriminant of block {t} of {w} differs")));
        }
        for i in 1..=(b.ones as i64 + 1) {
            let alpha = beta.sub_lambda(i);
            if !is_simple_surd(&alpha) {
                return Err(Error::Internal(format!("pole {alpha} of {w} is not simple")));
            }
            positives.push(alpha);
        }
        beta1.get_or_insert(beta);
    }
    let conjugate_word = conjugate_isp(w);
    Ok(Isp {
        word: w.clone(),
        d,
        beta1: beta1.expect("at least one block"),
        positives,
        symmetric: conjugate_word == *w,
        conjugate_word,
    })
}

fn mobius_fn(n: u64) -> i32 {
    let mut n = n;
    let mut k = 0;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            n /= f;
            if n.is_multiple_of(f) {
                return 0;
            }
            k += 1;
        }
        f += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of primitive necklaces of length n over q letters.
pub fn necklace_count(q: u64, n: u64) -> BigInt {
    let mut sum = BigInt::zero();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let term = num_traits::pow(BigInt::from(q), (n / d) as usize);
        sum += term * mobius_fn(d);
    }
    sum / BigInt::from(n)
}

/// Number of ISPs of G_p with n positive poles.
pub fn count_isps(p: u32, n: u32) -> Result<BigInt> {
    if p < 3 || n < 1 {
        return Err(Error::domain(format!("count needs p >= 3 and n >= 1, got p={p}, n={n}")));
    }
    if n == 1 {
        return Ok(BigInt::from(p - 3));
    }
    Ok(necklace_count(u64::from(p - 1), u64::from(n)))
}

pub fn enumerate_isps(p: u32, n: u32) -> Result<Vec<Isp>> {
    if p < 3 || n < 1 {
        return Err(Error::domain(format!("enumeration needs p >= 3 and n >= 1, got p={p}, n={n}")));
    }
    enumerate_words(p, n as usize).par_iter().map(isp_of_word).collect()
}

/// W^⊤ is a rotation of W.
pub fn is_hecke_symmetric(w: &GenWord) -> bool {
    transpose_word(w) == *w
}

/// Word of the Hecke-conjugate ISP.
pub fn conjugate_isp(w: &GenWord) -> GenWord {
    transpose_word(w)
}

/// Whether two periods agree up to rotation.
pub fn periods_equivalent(a: &[i64], b: &[i64]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|r| a[r..].iter().chain(&a[..r]).eq(b.iter()))
}

/// Symmetry read off the poles: every α′ lies in the class of α.
pub fn symmetry_via_numbers(isp: &Isp) -> Result<bool> {
    for alpha in &isp.positives {
        let a = cf_expand(alpha)?;
        let b = cf_expand(&alpha.conjugate())?;
        if !periods_equivalent(&a.period, &b.period) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Count table rows B_p(1), …, B_p(max_n).
pub fn count_table(p: u32, max_n: u32) -> Result<Vec<BigInt>> {
    (1..=max_n).map(|n| count_isps(p, n)).collect()
}
