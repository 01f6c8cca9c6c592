// SPDX-License-Identifier: Apache-2.0

//! Exact computations for Hecke groups G_p: conjugacy classes, λ-continued
//! fractions, quadratic forms, irreducible systems of poles and rational
//! period functions.

pub mod cf;
pub mod cli;
pub mod error;
pub mod field;
pub mod group;
pub mod isp;
pub mod json;
pub mod quadforms;
pub mod rpf;

pub use error::{Error, Result};
