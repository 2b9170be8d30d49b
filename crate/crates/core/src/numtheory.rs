//! Jacobi symbols, quadratic Gauss sums, and the reciprocity trace identity.

use num_complex::Complex64;

use crate::exact::{gcd, CyclotomicSum, ExponentMatrix};
use crate::error::{Error, Result};

/// Trial-division primality test; ample for the ranges used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % modulus as u128) as u64;
        }
        base = (base as u128 * base as u128 % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion:
/// 0 when `p | a`, 1 when `a` is a nonzero square mod `p`, −1 otherwise.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let ar = a.rem_euclid(p as i64) as u64;
    if ar == 0 {
        return Ok(0);
    }
    let e = mod_pow(ar, (p - 1) / 2, p);
    Ok(if e == 1 { 1 } else { -1 })
}

/// Jacobi symbol `(a/b)` for odd positive `b`, by the standard
/// reciprocity iteration. `(a/1) = 1` as the empty product.
pub fn jacobi(a: i64, b: i64) -> Result<i8> {
    if b <= 0 || b % 2 == 0 {
        return Err(Error::BadJacobiDenominator(b));
    }
    let mut num = a.rem_euclid(b) as u64;
    let mut den = b as u64;
    let mut acc: i8 = 1;
    while num != 0 {
        while num % 2 == 0 {
            num /= 2;
            if den % 8 == 3 || den % 8 == 5 {
                acc = -acc;
            }
        }
        std::mem::swap(&mut num, &mut den);
        if num % 4 == 3 && den % 4 == 3 {
            acc = -acc;
        }
        num %= den;
    }
    Ok(if den == 1 { acc } else { 0 })
}

/// A quadratic Gauss sum held exactly and numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussSum {
    /// `coeffs[k]` counts the residues `j` with `m·j² ≡ k (mod n)`.
    pub exact: CyclotomicSum,
    pub numeric: Complex64,
}

/// Direct summation of `g(m;n) = Σ_{j<n} e^{2πi·mj²/n}`. Coprimality is not
/// required; `m` is reduced mod `n` first since `g` depends only on `m mod n`.
pub fn gauss_sum_direct(m: i64, n: u64) -> GaussSum {
    assert!(n >= 1, "modulus must be positive");
    let mr = m.rem_euclid(n as i64) as u64;
    let mut exact = CyclotomicSum::zero(n as usize);
    for j in 0..n {
        let k = (mr as u128 * (j as u128 * j as u128 % n as u128) % n as u128) as i64;
        exact.add_root(k, 1);
    }
    let numeric = exact.eval();
    GaussSum { exact, numeric }
}

/// The closed form of a quadratic Gauss sum: a Gaussian-integer unit
/// combination times `√n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedGaussSum {
    /// Real part of the coefficient of `√n`, in `{−1, 0, 1}`.
    pub coeff_re: i8,
    /// Imaginary part of the coefficient of `√n`, in `{−1, 0, 1}`.
    pub coeff_im: i8,
    pub n: u64,
    pub numeric: Complex64,
}

impl ClosedGaussSum {
    fn new(coeff_re: i8, coeff_im: i8, n: u64) -> Self {
        let root = (n as f64).sqrt();
        Self {
            coeff_re,
            coeff_im,
            n,
            numeric: Complex64::new(coeff_re as f64 * root, coeff_im as f64 * root),
        }
    }
}

/// Evaluates `g(m;n)` by the four congruence cases of `n mod 4`:
///
/// * `n ≡ 0`: `(n/m)·(1 + iᵐ)·√n`
/// * `n ≡ 1`: `(m/n)·√n`
/// * `n ≡ 2`: `0`
/// * `n ≡ 3`: `(m/n)·i√n`
///
/// Requires `gcd(m, n) = 1`; callers with shared factors must use
/// [`gauss_sum_direct`].
pub fn gauss_sum_closed(m: i64, n: u64) -> Result<ClosedGaussSum> {
    assert!(n >= 1, "modulus must be positive");
    let mr = m.rem_euclid(n as i64) as u64;
    if gcd(mr, n) != 1 {
        return Err(Error::NotCoprime { m: mr, n });
    }
    let sum = match n % 4 {
        2 => ClosedGaussSum::new(0, 0, n),
        0 => {
            // m is odd here, so (n/m) is a valid Jacobi symbol and
            // iᵐ = ±i according to m mod 4.
            let j = jacobi(n as i64, mr as i64)?;
            let im = if mr % 4 == 1 { 1 } else { -1 };
            ClosedGaussSum::new(j, j * im, n)
        }
        1 => ClosedGaussSum::new(jacobi(mr as i64, n as i64)?, 0, n),
        _ => ClosedGaussSum::new(0, jacobi(mr as i64, n as i64)?, n),
    };
    Ok(sum)
}

/// Outcome of the quadratic-reciprocity trace identity
/// `(p/q)(q/p) = tr(F_pq) / (tr(F_p)·tr(F_q))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReciprocityReport {
    pub p: u64,
    pub q: u64,
    pub lhs: i8,
    pub rhs: Complex64,
    pub agree: bool,
}

/// Checks the trace identity for distinct odd primes, computing the right
/// side numerically from Fourier-matrix traces.
pub fn reciprocity_check(p: u64, q: u64) -> Result<ReciprocityReport> {
    if p == q || p < 3 || q < 3 || !is_prime(p) || !is_prime(q) {
        return Err(Error::BadPrimePair { p, q });
    }
    let lhs = legendre(p as i64, q)? * legendre(q as i64, p)?;
    let trace = |n: u64| -> Complex64 {
        ExponentMatrix::fourier(n as usize)
            .trace_numeric()
            .expect("Fourier matrices are square")
    };
    let rhs = trace(p * q) / (trace(p) * trace(q));
    let agree = (rhs - Complex64::new(lhs as f64, 0.0)).norm() <= 1e-9;
    Ok(ReciprocityReport {
        p,
        q,
        lhs,
        rhs,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Factorization-based Jacobi oracle straight from the definition:
    /// the product of Legendre symbols over the prime factorization.
    fn jacobi_by_factorization(a: i64, b: i64) -> i8 {
        assert!(b > 0 && b % 2 == 1);
        let mut acc: i8 = 1;
        let mut rest = b as u64;
        let mut d = 3u64;
        while rest > 1 {
            if d * d > rest {
                d = rest;
            }
            if rest % d == 0 {
                while rest % d == 0 {
                    acc *= legendre(a, d).unwrap();
                    rest /= d;
                }
            }
            d += 2;
        }
        acc
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(1, 3).unwrap(), 1);
        assert_eq!(legendre(2, 5).unwrap(), -1);
        assert_eq!(legendre(5, 5).unwrap(), 0);
        assert!(legendre(2, 9).is_err());
        assert!(legendre(2, 2).is_err());
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(7, 15).unwrap(), -1);
        assert_eq!(jacobi(12, 5).unwrap(), -1);
        for a in [-5i64, 0, 1, 7, 100] {
            assert_eq!(jacobi(a, 1).unwrap(), 1);
        }
        assert!(jacobi(3, 4).is_err());
        assert!(jacobi(3, -5).is_err());
    }

    #[test]
    fn jacobi_matches_factorization_oracle() {
        for b in (1..200i64).step_by(2) {
            for a in -20..40 {
                assert_eq!(
                    jacobi(a, b).unwrap(),
                    jacobi_by_factorization(a, b),
                    "mismatch at ({a}/{b})"
                );
            }
        }
    }

    #[test]
    fn gauss_direct_examples() {
        assert!((gauss_sum_direct(1, 1).numeric - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((gauss_sum_direct(1, 4).numeric - Complex64::new(2.0, 2.0)).norm() < 1e-12);
        assert!(gauss_sum_direct(1, 2).numeric.norm() < 1e-12);
        // Shared factors are allowed in the direct sum.
        assert!(gauss_sum_direct(3, 6).numeric.norm() < 1e-12);
    }

    #[test]
    fn gauss_closed_examples() {
        let g = gauss_sum_closed(1, 5).unwrap();
        assert_eq!((g.coeff_re, g.coeff_im), (1, 0));
        assert!((g.numeric - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);

        let g = gauss_sum_closed(1, 3).unwrap();
        assert_eq!((g.coeff_re, g.coeff_im), (0, 1));
        assert!((g.numeric - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-12);

        // g(5;12) = (12/5)(1+i⁵)√12 = −2√3(1+i).
        let g = gauss_sum_closed(5, 12).unwrap();
        assert_eq!((g.coeff_re, g.coeff_im), (-1, -1));
        let expected = Complex64::new(-2.0 * 3f64.sqrt(), -2.0 * 3f64.sqrt());
        assert!((g.numeric - expected).norm() < 1e-12);
        assert!((gauss_sum_direct(5, 12).numeric - expected).norm() < 1e-12);

        assert_eq!(
            gauss_sum_closed(3, 6).unwrap_err(),
            Error::NotCoprime { m: 3, n: 6 }
        );
    }

    #[test]
    fn direct_and_closed_agree_on_a_sample() {
        for n in 1..=60u64 {
            for m in 1..=n {
                if gcd(m, n) != 1 {
                    continue;
                }
                let d = gauss_sum_direct(m as i64, n);
                let c = gauss_sum_closed(m as i64, n).unwrap();
                assert!(
                    (d.numeric - c.numeric).norm() <= 1e-9 * n as f64,
                    "g({m};{n}) direct {} vs closed {}",
                    d.numeric,
                    c.numeric
                );
            }
        }
    }

    #[test]
    fn reciprocity_examples() {
        let r = reciprocity_check(3, 5).unwrap();
        assert_eq!(r.lhs, 1);
        assert!(r.agree);

        let r = reciprocity_check(3, 7).unwrap();
        assert_eq!(r.lhs, -1);
        assert!(r.agree);

        let r = reciprocity_check(5, 13).unwrap();
        assert!(r.agree);

        assert!(reciprocity_check(5, 5).is_err());
        assert!(reciprocity_check(9, 5).is_err());
        assert!(reciprocity_check(2, 5).is_err());
    }
}
