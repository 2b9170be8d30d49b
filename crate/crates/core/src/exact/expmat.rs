//! Matrices whose entries are powers of a fixed root of unity.

use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;

use super::cyclotomic::CyclotomicSum;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::spectra::DenseMatrix;

/// An `n_rows × n_cols` matrix with entry `(j,k) = scale · ω^{exps[j,k]}`,
/// where `ω = e^{2πi/root_order}` and the scale is the symbolic factor
/// `1/√(n_rows)`, applied only at numeric evaluation. Keeping the grid as
/// integers makes permutation actions, traces, and orthogonality checks
/// exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentMatrix {
    n_rows: usize,
    n_cols: usize,
    root_order: usize,
    exps: Vec<u32>,
}

impl ExponentMatrix {
    /// Builds a matrix from row-major exponents, reducing them mod the order.
    pub fn from_exps(n_rows: usize, n_cols: usize, root_order: usize, exps: Vec<i64>) -> Self {
        assert!(n_rows >= 1 && n_cols >= 1 && root_order >= 1);
        assert_eq!(exps.len(), n_rows * n_cols, "exponent grid size mismatch");
        let exps = exps
            .into_iter()
            .map(|e| e.rem_euclid(root_order as i64) as u32)
            .collect();
        Self {
            n_rows,
            n_cols,
            root_order,
            exps,
        }
    }

    /// The Fourier matrix on `Z_n`: exponents `jk mod n`, scale `1/√n`.
    pub fn fourier(n: usize) -> Self {
        assert!(n >= 1);
        let mut exps = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                exps.push((j * k % n) as u32);
            }
        }
        Self {
            n_rows: n,
            n_cols: n,
            root_order: n,
            exps,
        }
    }

    /// The all-ones grid (every exponent zero).
    pub fn flat(n: usize, root_order: usize) -> Self {
        Self {
            n_rows: n,
            n_cols: n,
            root_order,
            exps: vec![0; n * n],
        }
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

    pub fn root_order(&self) -> usize {
        self.root_order
    }

    /// The symbolic scale factor `1/√(n_rows)` as a float.
    pub fn scale(&self) -> f64 {
        1.0 / (self.n_rows as f64).sqrt()
    }

    #[inline]
    pub fn exp(&self, j: usize, k: usize) -> u32 {
        self.exps[j * self.n_cols + k]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n_rows)
            .map(|j| self.exps[j * self.n_cols..(j + 1) * self.n_cols].to_vec())
            .collect()
    }

    fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.n_rows)
        } else {
            Err(Error::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            })
        }
    }

    /// `P_{row_perm}ᵀ · M · P_{col_perm}`: `result[j,k] = M[row_perm(j), col_perm(k)]`.
    /// The scale is unchanged.
    pub fn permuted(&self, row_perm: &Permutation, col_perm: &Permutation) -> Result<Self> {
        if row_perm.size() != self.n_rows {
            return Err(Error::DimensionMismatch {
                context: "row permutation",
                expected: self.n_rows,
                found: row_perm.size(),
            });
        }
        if col_perm.size() != self.n_cols {
            return Err(Error::DimensionMismatch {
                context: "column permutation",
                expected: self.n_cols,
                found: col_perm.size(),
            });
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for j in 0..self.n_rows {
            let src = row_perm.apply(j);
            for k in 0..self.n_cols {
                exps.push(self.exp(src, col_perm.apply(k)));
            }
        }
        Ok(Self {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            root_order: self.root_order,
            exps,
        })
    }

    /// Right multiplication `M · P_σ`.
    pub fn right_mul_perm(&self, sigma: &Permutation) -> Result<Self> {
        self.permuted(&Permutation::identity(self.n_rows), sigma)
    }

    /// Left multiplication `P_σ · M` (note `P_σ = P_{σ⁻¹}ᵀ`).
    pub fn left_mul_perm(&self, sigma: &Permutation) -> Result<Self> {
        self.permuted(&sigma.inverse(), &Permutation::identity(self.n_cols))
    }

    pub fn transpose(&self) -> Self {
        let mut exps = Vec::with_capacity(self.exps.len());
        for k in 0..self.n_cols {
            for j in 0..self.n_rows {
                exps.push(self.exp(j, k));
            }
        }
        Self {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            root_order: self.root_order,
            exps,
        }
    }

    /// Exact symmetry of the exponent grid.
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.n_rows).all(|j| (0..j).all(|k| self.exp(j, k) == self.exp(k, j)))
    }

    pub fn diag_exponents(&self) -> Result<Vec<u32>> {
        let n = self.ensure_square()?;
        Ok((0..n).map(|j| self.exp(j, j)).collect())
    }

    /// Exact trace as a cyclotomic sum: `coeffs[e]` counts diagonal entries
    /// with exponent `e`. The `1/√n` scale is not folded in; apply
    /// [`scale`](Self::scale) at numeric evaluation.
    pub fn trace_exact(&self) -> Result<CyclotomicSum> {
        let n = self.ensure_square()?;
        let mut s = CyclotomicSum::zero(self.root_order);
        for j in 0..n {
            s.add_root(self.exp(j, j) as i64, 1);
        }
        Ok(s)
    }

    /// Numeric trace with the scale applied.
    pub fn trace_numeric(&self) -> Result<Complex64> {
        Ok(self.trace_exact()?.eval() * self.scale())
    }

    /// Exact inner product of row `j` with the conjugate of row `j2`,
    /// as an (unscaled) cyclotomic sum.
    pub fn row_inner_product_exact(&self, j: usize, j2: usize) -> CyclotomicSum {
        let r = self.root_order as i64;
        let mut s = CyclotomicSum::zero(self.root_order);
        for k in 0..self.n_cols {
            s.add_root(self.exp(j, k) as i64 - self.exp(j2, k) as i64 + r, 1);
        }
        s
    }

    /// Exact Hadamard test: the matrix is square and distinct rows are
    /// orthogonal (their inner-product sums reduce to zero). Unit modulus of
    /// entries and row normalization are automatic for an exponent grid with
    /// scale `1/√n`.
    pub fn is_hadamard_exact(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for j in 0..self.n_rows {
            for j2 in 0..j {
                if !self.row_inner_product_exact(j, j2).is_zero_exact() {
                    return false;
                }
            }
        }
        true
    }

    /// True iff row 0 and column 0 exponents are all zero.
    pub fn is_dephased(&self) -> bool {
        (0..self.n_cols).all(|k| self.exp(0, k) == 0)
            && (0..self.n_rows).all(|j| self.exp(j, 0) == 0)
    }

    /// The exact matrix square `M²` as a grid of unscaled cyclotomic sums;
    /// the numeric matrix square carries the combined scale `1/n`.
    pub fn square_exact(&self) -> Result<Vec<CyclotomicSum>> {
        let n = self.ensure_square()?;
        let mut out = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                let mut s = CyclotomicSum::zero(self.root_order);
                for l in 0..n {
                    s.add_root(self.exp(j, l) as i64 + self.exp(l, k) as i64, 1);
                }
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Exact check that `M²` equals `n · P_σ` entrywise (so that with the
    /// `1/n` scale, `M² = P_σ`). Zero-checks are memoized across the grid
    /// since product entries repeat heavily.
    pub fn square_equals_perm(&self, sigma: &Permutation) -> Result<bool> {
        let n = self.ensure_square()?;
        if sigma.size() != n {
            return Err(Error::DimensionMismatch {
                context: "permutation for matrix square",
                expected: n,
                found: sigma.size(),
            });
        }
        let full = CyclotomicSum::from_int(self.root_order, n as i64);
        let mut zero_cache: HashMap<Vec<i64>, bool> = HashMap::new();
        for j in 0..n {
            for k in 0..n {
                let mut s = CyclotomicSum::zero(self.root_order);
                for l in 0..n {
                    s.add_root(self.exp(j, l) as i64 + self.exp(l, k) as i64, 1);
                }
                let expected_one = j == sigma.apply(k);
                let diff = if expected_one { s.sub(&full) } else { s };
                let is_zero = match zero_cache.get(diff.coeffs()) {
                    Some(&hit) => hit,
                    None => {
                        let v = diff.is_zero_exact();
                        zero_cache.insert(diff.coeffs().to_vec(), v);
                        v
                    }
                };
                if !is_zero {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Dense complex evaluation with the `1/√n` scale applied.
    pub fn to_dense(&self) -> DenseMatrix {
        let r = self.root_order as f64;
        let scale = self.scale();
        let roots: Vec<Complex64> = (0..self.root_order)
            .map(|t| {
                let a = TAU * t as f64 / r;
                Complex64::new(a.cos(), a.sin()) * scale
            })
            .collect();
        let data = self.exps.iter().map(|&e| roots[e as usize]).collect();
        DenseMatrix::from_vec(self.n_rows, self.n_cols, data)
    }
}
