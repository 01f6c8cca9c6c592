// SPDX-License-Identifier: Apache-2.0

//! Matrices of G_p, conjugacy-class generator words and necklace enumeration.

mod mat;
mod word;

pub use mat::{classify, generator, mat_mul, Classification, Generator, Mat};
pub use word::{
    canonical_rotation, enumerate_words, is_primitive_word, transpose_word, word_of_matrix, word_to_matrix, GenWord,
};

pub(crate) use mat::sine_ratios;
