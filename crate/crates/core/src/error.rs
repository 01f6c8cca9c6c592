// SPDX-License-Identifier: Apache-2.0

use crate::field::FieldElem;
use crate::group::GenWord;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// Division by a nonzero element whose norm vanishes. This happens only when
    /// the discriminant is a perfect square in Q(λ); `witness` is its positive
    /// square root, so callers can fold √D down to an ordinary field element.
    #[error("zero divisor: discriminant is the square of {witness}")]
    ZeroDivisor { witness: FieldElem },

    #[error("surds with different discriminants cannot be compared")]
    NotComparable,

    #[error("matrix is the {exponent}-th power of the primitive class {word}")]
    NonPrimitive { word: GenWord, exponent: u32 },

    #[error("parabolic class: {0}")]
    Parabolic(String),

    #[error("continued fraction did not become periodic within {0} steps")]
    NotPeriodic(usize),

    #[error("evaluation point hits the pole {0}")]
    PoleHit(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
