// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::cf::{cf_expand, period_to_word};
use crate::error::{Error, Result};
use crate::field::{HeckeField, RingElem};
use crate::quadforms::fixed_points;

use super::mat::{generator, Classification, Generator, Mat};

/// Cyclic word V_{j_1}⋯V_{j_t} stored in its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenWord {
    p: u32,
    letters: Vec<u32>,
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl GenWord {
    /// Validates letters in 1..p−1 and rotates to canonical form.
    pub fn new(p: u32, letters: &[u32]) -> Result<Self> {
        if p < 3 {
            return Err(Error::domain(format!("Hecke groups need p >= 3, got {p}")));
        }
        if letters.is_empty() {
            return Err(Error::domain("empty generator word"));
        }
        if let Some(bad) = letters.iter().find(|&&l| l < 1 || l >= p) {
            return Err(Error::domain(format!("letter {bad} outside 1..={}", p - 1)));
        }
        Ok(GenWord { p, letters: canonical_rotation(letters) })
    }

    /// Parses "1,3,5".
    pub fn parse(p: u32, s: &str) -> Result<Self> {
        let letters = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad letter {t:?} in word {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        GenWord::new(p, &letters)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_primitive(&self) -> bool {
        is_primitive_word(&self.letters)
    }

    /// Pure powers of V_1 or of V_{p−1}.
    pub fn is_parabolic(&self) -> bool {
        let first = self.letters[0];
        (first == 1 || first == self.p - 1) && self.letters.iter().all(|&l| l == first)
    }

    pub fn to_matrix(&self) -> Mat {
        word_to_matrix(self)
    }
}

/// Least rotation under lexicographic order.
pub fn canonical_rotation(letters: &[u32]) -> Vec<u32> {
    let n = letters.len();
    (0..n)
        .map(|r| letters[r..].iter().chain(&letters[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn is_primitive_word(letters: &[u32]) -> bool {
    let n = letters.len();
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| (0..n).any(|i| letters[i] != letters[(i + d) % n]))
}

/// Reverse the word and send each letter j to p − j.
pub fn transpose_word(w: &GenWord) -> GenWord {
    let letters: Vec<u32> = w.letters.iter().rev().map(|&j| w.p - j).collect();
    GenWord { p: w.p, letters: canonical_rotation(&letters) }
}

pub fn word_to_matrix(w: &GenWord) -> Mat {
    let f = HeckeField::get(w.p).expect("valid p");
    w.letters.iter().fold(Mat::identity(&f), |acc, &j| acc.mul(&generator(w.p, Generator::V(j)).expect("valid letter")))
}

/// Primitive necklaces of length n over {1, …, p−1}, in lexicographic order.
/// For n = 1 the parabolic letters 1 and p−1 are left out.
pub fn enumerate_words(p: u32, n: usize) -> Vec<GenWord> {
    if p < 3 || n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return (2..p - 1).map(|j| GenWord { p, letters: vec![j] }).collect();
    }
    let k = p - 1;
    let mut out = Vec::new();
    // Duval's generation of Lyndon words of length ≤ n, keeping those of length n.
    let mut w: Vec<u32> = vec![1];
    loop {
        if w.len() == n {
            out.push(GenWord { p, letters: w.clone() });
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&k) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Canonical word of the primitive class conjugate to a hyperbolic matrix.
pub fn word_of_matrix(m: &Mat) -> Result<GenWord> {
    match m.classify() {
        Classification::Hyperbolic => {}
        other => return Err(Error::domain(format!("{other:?} matrix has no hyperbolic word"))),
    }
    let (alpha, _) = fixed_points(m)?;
    let cf = cf_expand(&alpha)?;
    let word = period_to_word(m.p(), &cf.period)?;
    let t = word_to_matrix(&word).trace();
    let target = m.trace();
    let f = m.field().clone();
    let mut prev = RingElem::from_int(&f, 2);
    let mut cur = t.clone();
    let mut e = 1u32;
    loop {
        if cur == target {
            break;
        }
        if (&cur - &target).sign() > 0 {
            return Err(Error::Internal(format!("trace {target} not reached by powers of {word}")));
        }
        let next = &(&t * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
        e += 1;
    }
    if e > 1 {
        return Err(Error::NonPrimitive { word, exponent: e });
    }
    Ok(word)
}
