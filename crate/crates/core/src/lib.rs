//! Exact homology computations for crossed products of coordinate rings by
//! finite groups.
//!
//! The library computes twisted Hochschild, cyclic and periodic cyclic
//! homology of `O[X] ⋊ Γ` where `X` is an affine space or an algebraic torus
//! and `Γ` is a finite group acting linearly (affine case) or by monomial
//! maps (torus case).  Two independent routes are implemented:
//!
//! * a Koszul-complex route that resolves the twisted module and reads off
//!   graded homology dimensions in closed form, and
//! * a brute-force route through the (reduced, graded) bar complex, which
//!   serves as an oracle for the structural results.
//!
//! All linear algebra is exact over the rationals; no floating point is used
//! anywhere.  Modular arithmetic appears only as an internal certificate for
//! vanishing ranks of large integer matrices, never in reported values.

pub mod cli;
pub mod crossprod;
pub mod exactla;
pub mod groups;
pub mod hochschild;
pub mod koszul;
pub mod polyforms;
pub mod report;
pub mod selftest;
pub mod sparse;
pub mod weyl;

use thiserror::Error;

/// Crate-wide error type.  Variants map onto the CLI exit codes: bad input
/// is a config error (exit 2), guarded blow-ups are size errors (exit 3) and
/// everything else signals a broken internal invariant (exit 4).
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid user input: malformed matrices, non-invertible generators,
    /// unknown presets, out-of-range parameters.
    #[error("config error: {0}")]
    Config(String),

    /// A computation was aborted because it would exceed a size guard.
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),

    /// A pair of maps that must compose to zero does not.
    #[error("composition is not zero: {0}")]
    CompositionNotZero(String),

    /// The averaged trace of a purported group representation is not a
    /// non-negative integer.
    #[error("non-integral trace: {0}")]
    NonIntegralTrace(String),

    /// A hypothesis required for a closed-form computation fails, e.g. the
    /// twist is not injective transverse to its fixed space.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// A matrix fails to define an automorphism of the given algebra.
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    /// Cross-checked quantities disagree.  Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::SizeLimitExceeded(_) => 3,
            _ => 4,
        }
    }
}
