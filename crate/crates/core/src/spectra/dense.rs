//! Dense complex matrices for eigensolving and the continuous 4×4 family.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default numeric tolerance for the dense Hadamard test. Double precision
/// at n ≤ 64 leaves several digits of headroom over this.
pub const DEFAULT_HADAMARD_TOL: f64 = 1e-9;

/// A dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn from_vec(n_rows: usize, n_cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), n_rows * n_cols, "data length mismatch");
        Self {
            n_rows,
            n_cols,
            data,
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                data.push(f(j, k));
            }
        }
        Self {
            n_rows: n,
            n_cols: n,
            data,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |j, k| {
            if j == k {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// Dense permutation matrix with `P[j,k] = 1` iff `j = σ(k)`.
    pub fn permutation(sigma: &crate::exact::Permutation) -> Self {
        let n = sigma.size();
        Self::from_fn(n, |j, k| {
            if j == sigma.apply(k) {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.n_rows)
        } else {
            Err(Error::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            })
        }
    }

    #[inline]
    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.data[j * self.n_cols + k]
    }

    #[inline]
    pub fn set(&mut self, j: usize, k: usize, v: Complex64) {
        self.data[j * self.n_cols + k] = v;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_cols, other.n_rows, "inner dimensions differ");
        let mut out = vec![Complex64::new(0.0, 0.0); self.n_rows * other.n_cols];
        for j in 0..self.n_rows {
            for l in 0..self.n_cols {
                let a = self.get(j, l);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for k in 0..other.n_cols {
                    out[j * other.n_cols + k] += a * other.get(l, k);
                }
            }
        }
        Self::from_vec(self.n_rows, other.n_cols, out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for k in 0..self.n_cols {
            for j in 0..self.n_rows {
                data.push(self.get(j, k).conj());
            }
        }
        Self::from_vec(self.n_cols, self.n_rows, data)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for k in 0..self.n_cols {
            for j in 0..self.n_rows {
                data.push(self.get(j, k));
            }
        }
        Self::from_vec(self.n_cols, self.n_rows, data)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n_rows.min(self.n_cols)).map(|j| self.get(j, j)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `‖M M* − I‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.n_rows;
        let mut worst: f64 = 0.0;
        for j in 0..n {
            for k in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for l in 0..n {
                    s += self.get(j, l) * self.get(k, l).conj();
                }
                if j == k {
                    s -= 1.0;
                }
                worst = worst.max(s.norm());
            }
        }
        worst
    }

    /// Numeric Hadamard test: unitary within `tol` and every entry of
    /// modulus `1/√n` within `tol`.
    pub fn is_hadamard(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let target = 1.0 / (self.n_rows as f64).sqrt();
        self.data.iter().all(|z| (z.norm() - target).abs() <= tol)
            && self.unitarity_defect() <= tol
    }

    /// True iff the first row and column all equal `1/√n` within `tol`.
    pub fn is_dephased(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let target = Complex64::new(1.0 / (self.n_rows as f64).sqrt(), 0.0);
        (0..self.n_cols).all(|k| (self.get(0, k) - target).norm() <= tol)
            && (0..self.n_rows).all(|j| (self.get(j, 0) - target).norm() <= tol)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.is_square()
            && (0..self.n_rows)
                .all(|j| (0..j).all(|k| (self.get(j, k) - self.get(k, j)).norm() <= tol))
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> Result<Complex64> {
        let n = self.ensure_square()?;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let (pivot_row, pivot_mag) = (col..n)
                .map(|r| (r, a[r * n + col].norm()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if pivot_mag == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            if pivot_row != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot_row * n + k);
                }
                det = -det;
            }
            let pivot = a[col * n + col];
            det *= pivot;
            for r in col + 1..n {
                let factor = a[r * n + col] / pivot;
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] -= factor * v;
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Permutation;

    #[test]
    fn identity_is_not_hadamard_for_n2() {
        // Entry modulus 1 differs from 1/√2.
        let id = DenseMatrix::identity(2);
        assert!(!id.is_hadamard(1e-9));
        assert!(id.unitarity_defect() < 1e-15);
    }

    #[test]
    fn det_of_permutation_is_sign() {
        let p = DenseMatrix::permutation(&Permutation::from_cycles(4, "(0 1)").unwrap());
        assert!((p.det().unwrap() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let q = DenseMatrix::permutation(&Permutation::from_cycles(5, "(0 1 2)").unwrap());
        assert!((q.det().unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn dagger_mul_roundtrip() {
        let m = DenseMatrix::from_fn(3, |j, k| Complex64::new(j as f64, k as f64 - 1.0));
        let picked = m.dagger().get(1, 2);
        assert_eq!(picked, Complex64::new(2.0, -0.0));
        let prod = m.mul(&DenseMatrix::identity(3));
        assert_eq!(prod, m);
    }
}
