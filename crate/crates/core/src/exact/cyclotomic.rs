//! Integer combinations of roots of unity with exact canonical reduction.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

/// A formal sum `Σ c_j ω^j` with `ω = e^{2πi/r}` and integer coefficients.
///
/// Two sums of the same order are equal as complex numbers iff their
/// canonical forms (reduction modulo the r-th cyclotomic polynomial) are
/// identical, which makes trace comparisons exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicSum {
    order: usize,
    coeffs: Vec<i64>,
}

impl CyclotomicSum {
    /// Builds a sum of the given order; `coeffs[j]` multiplies `ω^j`.
    /// Coefficient vectors shorter than `order` are zero-padded.
    pub fn new(order: usize, mut coeffs: Vec<i64>) -> Self {
        assert!(order >= 1, "order must be positive");
        assert!(coeffs.len() <= order, "coefficient vector longer than order");
        coeffs.resize(order, 0);
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, vec![])
    }

    /// The integer `c` as `c·ω⁰`.
    pub fn from_int(order: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// A single root `ω^k` (k reduced mod order).
    pub fn root(order: usize, k: i64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[k.rem_euclid(order as i64) as usize] = 1;
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add_root(&mut self, k: i64, c: i64) {
        self.coeffs[k.rem_euclid(self.order as i64) as usize] += c;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product, convolving exponents modulo the order.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        let r = self.order;
        let mut coeffs = vec![0i64; r];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    coeffs[(i + j) % r] += a * b;
                }
            }
        }
        Self { order: r, coeffs }
    }

    /// Complex conjugate: `ω^j ↦ ω^{r−j}`.
    pub fn conj(&self) -> Self {
        let r = self.order;
        let mut coeffs = vec![0i64; r];
        for (j, &c) in self.coeffs.iter().enumerate() {
            coeffs[(r - j) % r] += c;
        }
        Self { order: r, coeffs }
    }

    /// Numeric evaluation with `ω = e^{2πi/r}`.
    pub fn eval(&self) -> Complex64 {
        let r = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let t = TAU * j as f64 / r;
                acc += Complex64::new(t.cos(), t.sin()) * c as f64;
            }
        }
        acc
    }

    /// Canonical form: the coefficient polynomial reduced modulo the r-th
    /// cyclotomic polynomial Φ_r, leaving degree < deg Φ_r. Canonical forms
    /// are identical iff the sums are equal as complex numbers.
    pub fn canonical(&self) -> Self {
        let phi = cyclotomic_polynomial(self.order);
        let rem = poly_rem_monic(&self.coeffs, &phi);
        let mut coeffs = rem;
        coeffs.resize(self.order, 0);
        Self {
            order: self.order,
            coeffs,
        }
    }

    pub fn is_zero_exact(&self) -> bool {
        self.canonical().coeffs.iter().all(|&c| c == 0)
    }

    /// Exact equality as complex numbers (same order required).
    pub fn eq_exact(&self, other: &Self) -> bool {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        self.sub(other).is_zero_exact()
    }
}

impl std::fmt::Display for CyclotomicSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            match (a, j) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "w")?,
                (1, _) => write!(f, "w^{j}")?,
                (_, 1) => write!(f, "{a}w")?,
                (_, _) => write!(f, "{a}w^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Coefficients of the r-th cyclotomic polynomial, ascending degree.
///
/// Computed by exact integer division of `x^r − 1` by the product of Φ_d over
/// proper divisors d of r, and cached per order.
pub fn cyclotomic_polynomial(r: usize) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&r) {
        return hit.clone();
    }
    assert!(r >= 1, "order must be positive");
    let result = if r == 1 {
        vec![-1, 1]
    } else {
        let mut den = vec![1i64];
        for d in 1..r {
            if r % d == 0 {
                den = poly_mul(&den, &cyclotomic_polynomial(d));
            }
        }
        let mut num = vec![0i64; r + 1];
        num[0] = -1;
        num[r] = 1;
        poly_div_exact(&num, &den)
    };
    let arc = Arc::new(result);
    cache.lock().unwrap().insert(r, arc.clone());
    arc
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_degree(p: &[i64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo the monic polynomial `m`; stays in integers.
fn poly_rem_monic(a: &[i64], m: &[i64]) -> Vec<i64> {
    let md = poly_degree(m).expect("zero modulus");
    debug_assert_eq!(m[md], 1, "modulus must be monic");
    let mut rem: Vec<i64> = a.to_vec();
    while let Some(d) = poly_degree(&rem) {
        if d < md {
            break;
        }
        let lead = rem[d];
        for k in 0..=md {
            rem[d - md + k] -= lead * m[k];
        }
    }
    rem.truncate(md.max(1));
    rem
}

/// Exact quotient `a / b` for polynomials that divide evenly (b monic).
fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let bd = poly_degree(b).expect("zero divisor");
    debug_assert_eq!(b[bd], 1, "divisor must be monic");
    let mut rem: Vec<i64> = a.to_vec();
    let ad = poly_degree(&rem).expect("zero dividend");
    assert!(ad >= bd);
    let mut quot = vec![0i64; ad - bd + 1];
    for d in (bd..=ad).rev() {
        let lead = rem[d];
        if lead == 0 {
            continue;
        }
        quot[d - bd] = lead;
        for k in 0..=bd {
            rem[d - bd + k] -= lead * b[k];
        }
    }
    assert!(
        rem.iter().all(|&c| c == 0),
        "polynomial division left a remainder"
    );
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(r: usize) -> Vec<i64> {
        cyclotomic_polynomial(r).as_ref().clone()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(phi(1), vec![-1, 1]);
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(3), vec![1, 1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn vanishing_sum_of_fifth_roots() {
        // 1 + ω + ω² + ω³ + ω⁴ = 0, so ω + ω² + ω³ + ω⁴ = −1.
        let s = CyclotomicSum::new(5, vec![0, 1, 1, 1, 1]);
        let c = s.canonical();
        assert_eq!(c.coeffs(), &[-1, 0, 0, 0, 0]);
    }

    #[test]
    fn order_four_square_is_minus_one() {
        let s = CyclotomicSum::new(4, vec![0, 0, 2, 0]);
        assert_eq!(s.canonical().coeffs(), &[-2, 0, 0, 0]);
    }

    #[test]
    fn order_twelve_identity() {
        // ω² − ω⁴ − 1 vanishes for ω of order 12.
        let mut s = CyclotomicSum::zero(12);
        s.add_root(2, 1);
        s.add_root(4, -1);
        s.add_root(0, -1);
        assert!(s.is_zero_exact());
        assert!(s.eval().norm() < 1e-12);
    }

    #[test]
    fn canonical_is_idempotent_and_numeric_consistent() {
        let s = CyclotomicSum::new(20, vec![3, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5, 8, -9, 7, 9, 3, 2, -3, 8, 4]);
        let c = s.canonical();
        assert_eq!(c, c.canonical());
        assert!((s.eval() - c.eval()).norm() < 1e-12);
    }

    #[test]
    fn conj_matches_numeric_conjugate() {
        let s = CyclotomicSum::new(7, vec![1, 2, 0, -3, 0, 1, 4]);
        assert!((s.conj().eval() - s.eval().conj()).norm() < 1e-12);
    }

    #[test]
    fn mul_matches_numeric_product() {
        let a = CyclotomicSum::new(9, vec![1, 0, 2, 0, 0, -1, 0, 0, 3]);
        let b = CyclotomicSum::new(9, vec![0, 1, 1, 0, -2, 0, 0, 1, 0]);
        assert!((a.mul(&b).eval() - a.eval() * b.eval()).norm() < 1e-10);
    }

    #[test]
    fn display_renders_signs() {
        let s = CyclotomicSum::new(5, vec![1, -2, 0, 0, 1]);
        assert_eq!(s.to_string(), "1 - 2w + w^4");
        assert_eq!(CyclotomicSum::zero(3).to_string(), "0");
    }
}
