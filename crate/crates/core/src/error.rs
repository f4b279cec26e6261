//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by series construction, number-theoretic preconditions and
/// claim evaluation. Pure ring operations never fail; anything that can
/// reject its input reports one of these.
#[derive(Debug, Error)]
pub enum Error {
    #[error("series order must be at least 1")]
    InvalidOrder,

    #[error("coefficient count {len} does not match the requested order {order}")]
    LengthMismatch { len: usize, order: usize },

    #[error("constant term must be a unit (+1 or -1), found {found}")]
    NonUnitConstant { found: String },

    #[error("theta exponents must satisfy exp_a + exp_b >= 1")]
    ZeroThetaExponents,

    #[error("modulus must be at least 2, got {modulus}")]
    ModulusTooSmall { modulus: u64 },

    #[error("{value} is not prime")]
    NotPrime { value: u64 },

    #[error("{value} is not an odd prime")]
    NotAnOddPrime { value: u64 },

    #[error("exhaustive enumeration is limited to n <= {max}, got n = {n}")]
    EnumerationLimit { n: usize, max: usize },

    #[error("table holds {available} entries but the check needs {required}")]
    TableTooSmall { required: usize, available: usize },

    #[error("progression offset {numerator}/8 is not an integer")]
    NonIntegralOffset { numerator: String },

    #[error("invalid family parameter: {reason}")]
    InvalidFamilyParameter { reason: String },

    #[error("claim '{name}' is malformed: {reason}")]
    InvalidClaim { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
