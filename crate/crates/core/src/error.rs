//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Evaluation requested at a pole of a gamma quotient.
    #[error("pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    /// Argument outside the supported domain of an operation.
    #[error("domain error in {what}: {value} (allowed: {allowed})")]
    Domain {
        what: &'static str,
        value: f64,
        allowed: &'static str,
    },

    /// Bump support bounds are not 0 < lo < hi.
    #[error("invalid support [{lo}, {hi}]: need 0 < lo < hi")]
    InvalidSupport { lo: f64, hi: f64 },

    /// Requested size exceeds a hard ceiling.
    #[error("capacity error in {what}: requested {requested}, ceiling {ceiling}")]
    Capacity {
        what: &'static str,
        requested: f64,
        ceiling: f64,
    },

    /// A table does not extend far enough for the requested computation.
    #[error("coverage error: {what} requires height {required}, table covers {available}")]
    Coverage {
        what: &'static str,
        required: f64,
        available: f64,
    },

    /// Zero count disagrees with the counting main term even after refinement.
    #[error("missed zeros in [{lo}, {hi}]: found {found}, main term predicts {predicted:.3} (slack {slack})")]
    MissedZeros {
        lo: f64,
        hi: f64,
        found: usize,
        predicted: f64,
        slack: f64,
    },

    /// Malformed zero-table file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Ordinates out of ascending order in a zero-table file.
    #[error("monotonicity violation at line {line}: {value} does not exceed {previous}")]
    Monotonicity {
        line: usize,
        value: f64,
        previous: f64,
    },

    /// Zero-table file contained no ordinates.
    #[error("empty zero table")]
    EmptyTable,

    /// Quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge in {what}: estimated error {estimate:.3e} > tol {tol:.3e}")]
    NonConvergence {
        what: &'static str,
        estimate: f64,
        tol: f64,
    },

    /// Operation requires a primitive character.
    #[error("character {index} mod {q} is not primitive")]
    Primitivity { q: u64, index: usize },

    /// Rational phase m/q violates 0 < m < q, gcd(m, q) = 1.
    #[error("invalid rational phase {m}/{q}: need 0 < m < q and gcd(m, q) = 1")]
    InvalidPhase { m: u64, q: u64 },

    /// Exponent fit has no usable residuals.
    #[error("degenerate fit: {msg}")]
    DegenerateFit { msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
