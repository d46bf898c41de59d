//! Exact enumeration toolkit for fully packed loops in a triangle (TFPLs),
//! Knutson–Tao puzzles and Littlewood–Richardson coefficients.
//!
//! The central object is the map [`bijection::phi`], built from ten local
//! rules, which sends a puzzle with boundary `(σ, τ, π)` to a TFPL with the
//! same boundary. When `d(σ) + d(τ) = d(π)` it is a bijection, so TFPL counts
//! equal Littlewood–Richardson coefficients. Everything here is checked by
//! exhaustive enumeration with exact integer and rational arithmetic.

pub mod bijection;
pub mod dyck;
pub mod error;
pub mod fpl;
pub mod identities;
pub mod lr;
pub mod partition;
pub mod poly;
pub mod puzzle;
pub mod suite;
pub mod tfpl;

pub use error::{Error, Result};

/// Arbitrary-precision count.
pub type BigCount = num_bigint::BigUint;

/// Exact rational with normalized sign and denominator.
pub type ExactRational = num_rational::BigRational;

/// Enumeration bounds. Exceeding one yields [`Error::BoundExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub fpl_max_n: usize,
    pub tfpl_max_n: usize,
    pub puzzle_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { fpl_max_n: 7, tfpl_max_n: 4, puzzle_max_n: 5 }
    }
}
