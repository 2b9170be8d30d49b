//! Exact representations: exponent matrices over roots of unity, cyclotomic
//! sums with canonical reduction, and permutations.

mod cyclotomic;
mod expmat;
mod perm;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicSum};
pub use expmat::ExponentMatrix;
pub use perm::Permutation;

pub(crate) use perm::gcd;
