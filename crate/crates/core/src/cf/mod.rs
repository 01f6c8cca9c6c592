// SPDX-License-Identifier: Apache-2.0

//! λ-continued fractions of quadratic surds.

mod expand;
mod surd;
mod translate;

pub use expand::{
    cf_expand, cf_expand_bounded, floor_over_lambda, is_admissible, is_parabolic_period, is_reduced,
    reduced_by_inequalities, surd_of_cf, CF, CF_STEP_LIMIT,
};
pub(crate) use expand::{attracting_point, cf_matrix};
pub use surd::Surd;
pub use translate::{period_to_word, word_blocks, word_to_period, Block};
pub(crate) use translate::blocks_to_period;
