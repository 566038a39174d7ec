//! Exact computations around quantum enveloping algebras of small rank:
//! diagonal braidings, Nichols-algebra relations, PBW rewriting systems and
//! the B₂ spectrum combinatorics.

#![allow(clippy::needless_range_loop)]

pub mod braided;
pub mod cli;
mod display;
pub mod error;
pub mod expr;
pub mod nichols;
pub mod pbw;
pub mod perm;
pub mod scalar;
pub mod weylspec;

pub use error::{Error, Result};
