//! Construction, classification, and spectral analysis of small complex
//! Hadamard matrices.
//!
//! A complex Hadamard matrix is a unitary matrix whose entries all have
//! modulus 1/√n. This crate provides:
//!
//! * exact arithmetic over roots of unity ([`exact`]): exponent matrices,
//!   cyclotomic sums with canonical reduction, and permutations, so that
//!   traces and algebraic identities can be checked without floating error;
//! * quadratic Gauss sums, Legendre/Jacobi symbols, and the reciprocity
//!   trace identity ([`numtheory`]);
//! * a self-contained dense complex eigensolver with unit-circle spectrum
//!   clustering and fourth-root multiplicity extraction ([`spectra`]);
//! * the complete 4×4 dephased classification ([`had4`]) and the 5×5
//!   enumeration with latin-square and pair-up structure ([`had5`]);
//! * n×n symmetric permutations of the Fourier matrix and their eigenvalue
//!   multiplicity tables ([`symperm`]).
//!
//! Everything is pure and immutable after construction; all public
//! operations are safe to call concurrently.

pub mod error;
pub mod exact;
pub mod had4;
pub mod had5;
pub mod numtheory;
pub mod report;
pub mod spectra;
pub mod symperm;

pub use error::{Error, Result};
pub use exact::{CyclotomicSum, ExponentMatrix, Permutation};
pub use had4::{Had4Class, Had4Kind, RealCore, Sign, UnitComplex};
pub use had5::{DiagonalClass, TraceClass};
pub use numtheory::{ClosedGaussSum, GaussSum, ReciprocityReport};
pub use report::{CheckLine, Report};
pub use spectra::{DenseMatrix, FourthRootMultiplicities, Spectrum};
pub use symperm::SymPermDecomposition;
