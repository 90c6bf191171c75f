//! Error type shared by every module of the crate.

use alloc::string::String;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("bad index set: {0}")]
    BadIndices(String),

    #[error("matrix is not skew-symmetric, max |A + A^t| entry = {max_asymmetry:e}")]
    NotSkew { max_asymmetry: f64 },

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("point lies outside the domain")]
    OutsideDomain,

    #[error("point too close to the boundary for step size {step:e}")]
    NearBoundary { step: f64 },

    #[error("automorphism action is singular at this point")]
    SingularAction,

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("denominator modulus {value:e} below the evaluation guard")]
    SmallDenominator { value: f64 },

    #[error("radical branch guard violated: Re S(z) = {re:e} <= 0")]
    BranchGuard { re: f64 },

    #[error("map does not fix the origin (|F(0)| = {norm:e}); compose with automorphisms first")]
    BasePoint { norm: f64 },

    #[error("map is not isometric (max residual {residual:e} > {tolerance:e})")]
    NotIsometric { residual: f64, tolerance: f64 },

    #[error("map has radical components; operation requires a rational map")]
    NotRational,

    #[error("incompatible radicands; components do not share a normal form")]
    RadicandMismatch,

    #[error("ill-conditioned fit: {0}")]
    IllConditioned(String),

    #[error("evaluation failed along boundary direction {direction}: {source}")]
    ProbeFailure {
        direction: usize,
        #[source]
        source: alloc::boxed::Box<Error>,
    },
}
