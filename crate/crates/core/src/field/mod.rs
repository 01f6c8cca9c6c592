// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic in Z[λ_p], Q(λ_p) and Q(λ_p)(√D), with certified signs.

mod ext;
mod interval;
mod minpoly;
mod rational;
mod ring;

pub use ext::{sign_plus_root, ExtElem};
pub use interval::RealInterval;
pub use minpoly::{cyclotomic, euler_phi, minimal_polynomial, MinPoly};
pub use rational::FieldElem;
pub use ring::{HeckeField, RingElem, SIGN_HARD_CAP_BITS, SIGN_START_BITS};

pub(crate) use minpoly::poly_to_string;
