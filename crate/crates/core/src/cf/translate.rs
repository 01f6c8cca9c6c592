// SPDX-License-Identifier: Apache-2.0

//! Generator words and continued fraction periods.
//!
//! A word written as V_1^{m_1}V_{j_1} ⋯ V_1^{m_ℓ}V_{j_ℓ} with every j_t ≥ 2
//! corresponds to the period m_1+2, 1×(j_1−2), …, m_ℓ+2, 1×(j_ℓ−2).

use crate::error::{Error, Result};
use crate::group::GenWord;

/// One factor V_1^m V_j of a word, j ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub ones: u32,
    pub letter: u32,
}

/// Splits the word into blocks V_1^m V_j, using the least rotation that ends
/// in a letter other than 1.
pub fn word_blocks(w: &GenWord) -> Result<Vec<Block>> {
    if w.is_parabolic() {
        return Err(Error::Parabolic(format!("{w} is a power of a parabolic generator")));
    }
    let l = w.letters();
    let n = l.len();
    let rot = (0..n)
        .map(|r| l[r..].iter().chain(&l[..r]).copied().collect::<Vec<u32>>())
        .filter(|v| v[n - 1] != 1)
        .min()
        .ok_or_else(|| Error::Parabolic(format!("{w} has no letter above 1")))?;
    let mut blocks = Vec::new();
    let mut ones = 0;
    for x in rot {
        if x == 1 {
            ones += 1;
        } else {
            blocks.push(Block { ones, letter: x });
            ones = 0;
        }
    }
    Ok(blocks)
}

pub(crate) fn blocks_to_period(blocks: &[Block]) -> Vec<i64> {
    let mut out = Vec::new();
    for b in blocks {
        out.push(b.ones as i64 + 2);
        out.extend(std::iter::repeat_n(1, b.letter as usize - 2));
    }
    out
}

pub fn word_to_period(w: &GenWord) -> Result<Vec<i64>> {
    Ok(blocks_to_period(&word_blocks(w)?))
}

/// Inverse of [`word_to_period`]: each entry e ≥ 2 followed by c ones
/// becomes V_1^{e−2} V_{c+2}.
pub fn period_to_word(p: u32, period: &[i64]) -> Result<GenWord> {
    let n = period.len();
    let start = (0..n)
        .find(|&i| period[i] >= 2)
        .ok_or_else(|| Error::domain(format!("period {period:?} has no entry above 1")))?;
    let rot: Vec<i64> = period[start..].iter().chain(&period[..start]).copied().collect();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < n {
        let e = rot[i];
        if e < 2 {
            return Err(Error::domain(format!("period {period:?} has entry {e}")));
        }
        let mut c = 0u32;
        i += 1;
        while i < n && rot[i] == 1 {
            c += 1;
            i += 1;
        }
        if c + 3 > p {
            return Err(Error::domain(format!("period {period:?} has a run of {c} ones")));
        }
        letters.extend(std::iter::repeat_n(1, e as usize - 2));
        letters.push(c + 2);
    }
    GenWord::new(p, &letters)
}
