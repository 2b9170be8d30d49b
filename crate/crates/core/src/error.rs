//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, arithmetic, and verification routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {context} (expected {expected}, found {found})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("{m} is not a unit modulo {n}")]
    NonUnit { m: u64, n: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("Jacobi symbol denominator must be odd and positive, got {0}")]
    BadJacobiDenominator(i64),

    #[error("{m} and {n} are not coprime; the closed form requires gcd = 1")]
    NotCoprime { m: u64, n: u64 },

    #[error("reciprocity check requires distinct odd primes, got ({p}, {q})")]
    BadPrimePair { p: u64, q: u64 },

    #[error("not a valid permutation map: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse permutation cycles {input:?}: {reason}")]
    CycleParse { input: String, reason: String },

    #[error("eigensolver failed to converge for a {n}x{n} matrix after {sweeps} QR sweeps")]
    NonConvergence { n: usize, sweeps: usize },

    #[error("trace data is inconsistent with fourth roots of unity: {0}")]
    InconsistentMultiplicities(String),

    #[error("matrix is not Hadamard within tolerance")]
    NotHadamard,

    #[error("matrix is not in dephased form within tolerance")]
    NotDephased,

    #[error("expected a {expected}x{expected} matrix, found {found}x{found}")]
    WrongSize { expected: usize, found: usize },

    #[error("expected root order {expected}, found {found}")]
    WrongRootOrder { expected: usize, found: usize },

    #[error("trace matches no known class: {0}")]
    NoMatchingClass(String),

    #[error("rows {j} and {j2} do not pair up")]
    RowsDoNotPairUp { j: usize, j2: usize },

    #[error("row indices must be distinct core rows in 1..={max}, got ({j}, {j2})")]
    BadRowPair { j: usize, j2: usize, max: usize },

    #[error("matrix is not a symmetric dephased permutation of the Fourier matrix")]
    NoDecomposition,

    #[error("spectrum does not consist of fourth roots of unity within tolerance")]
    NotFourthRoots,

    #[error("eigenvalue of modulus {0} cannot be projected to the unit circle")]
    OffCircle(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
