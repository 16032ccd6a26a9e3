use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar: {input:?}")]
pub struct ParseScalarError {
    input: String,
}

impl ParseScalarError {
    pub(crate) fn new(input: &str) -> Self {
        ParseScalarError {
            input: input.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),

    #[error("line {line}: {message}")]
    Table { line: usize, message: String },

    #[error("vectors of the Fock spaces with charge {left} and {right} cannot be combined")]
    ChargeMismatch { left: Box<Scalar>, right: Box<Scalar> },

    #[error(
        "vectors of the Verma modules with (c, h) = ({}, {}) and ({}, {}) cannot be combined",
        left.0, left.1, right.0, right.1
    )]
    VermaParameterMismatch {
        left: Box<(Scalar, Scalar)>,
        right: Box<(Scalar, Scalar)>,
    },

    #[error("not a 2-cocycle on window {window}: identity fails at (n, m, k) = ({}, {}, {})", triple.0, triple.1, triple.2)]
    NotACocycle {
        window: u64,
        triple: (i64, i64, i64),
    },

    #[error("window {window} too small: at least {minimum} required")]
    WindowTooSmall { window: u64, minimum: u64 },

    #[error("index {index} lies outside the declared window {window}")]
    OutsideWindow { index: i64, window: u64 },

    #[error(
        "the map into the Fock space of charge {alpha} exists only from the Verma module \
         with c = 1 and h = alpha^2/2 = {expected_h}; got c = {c}, h = {h}"
    )]
    UniversalMapPrecondition {
        alpha: Box<Scalar>,
        expected_h: Box<Scalar>,
        c: Box<Scalar>,
        h: Box<Scalar>,
    },

    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
