//! Dense complex eigensolver: Householder reduction to Hessenberg form
//! followed by shifted QR iteration with Givens rotations.
//!
//! Written in-repo on purpose: the matrices here are at most 64×64 and the
//! solver doubles as the independent oracle for every spectral claim, so it
//! must not share code with the exact algebra it checks.

use num_complex::Complex64;

use super::dense::DenseMatrix;
use crate::error::{Error, Result};

const EPS: f64 = f64::EPSILON;

/// All eigenvalues of a square complex matrix.
///
/// The QR sweep budget is `100·n`; exhausting it reports
/// [`Error::NonConvergence`] rather than returning garbage.
pub fn eigenvalues(m: &DenseMatrix) -> Result<Vec<Complex64>> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(vec![]);
    }
    if n == 1 {
        return Ok(vec![m.get(0, 0)]);
    }
    let mut h = m.data().to_vec();
    hessenberg(&mut h, n);
    qr_eigenvalues(&mut h, n)
}

/// In-place Householder reduction to upper Hessenberg form.
fn hessenberg(a: &mut [Complex64], n: usize) {
    for col in 0..n.saturating_sub(2) {
        // Reflect column `col` below the subdiagonal to zero.
        let m = n - col - 1;
        let mut v: Vec<Complex64> = (0..m).map(|i| a[(col + 1 + i) * n + col]).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let phase = if v[0].norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            v[0] / v[0].norm()
        };
        // v = x + e^{iθ}·‖x‖·e₁ avoids cancellation.
        v[0] += phase * norm;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        // A ← P A with P = I − β v v*, acting on rows col+1..n.
        for c in col..n {
            let mut s = Complex64::new(0.0, 0.0);
            for i in 0..m {
                s += v[i].conj() * a[(col + 1 + i) * n + c];
            }
            s *= beta;
            for i in 0..m {
                a[(col + 1 + i) * n + c] -= s * v[i];
            }
        }
        // A ← A P, acting on columns col+1..n.
        for r in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for i in 0..m {
                s += a[r * n + (col + 1 + i)] * v[i];
            }
            s *= beta;
            for i in 0..m {
                a[r * n + (col + 1 + i)] -= s * v[i].conj();
            }
        }
        // Exact zeros below the subdiagonal of this column.
        for i in 1..m {
            a[(col + 1 + i) * n + col] = Complex64::new(0.0, 0.0);
        }
    }
}

/// Complex Givens rotation: returns `(c, s)` with `c` real so that
/// `[c s; -s̄ c]·[f; g] = [r; 0]`.
fn givens(f: Complex64, g: Complex64) -> (f64, Complex64) {
    let gn = g.norm();
    if gn == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    let fn_ = f.norm();
    if fn_ == 0.0 {
        return (0.0, g.conj() / gn);
    }
    let d = fn_.hypot(gn);
    let c = fn_ / d;
    let s = (f / fn_) * (g.conj() / d);
    (c, s)
}

/// Wilkinson-style shift: the eigenvalue of the trailing 2×2 block closest
/// to its bottom-right entry.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let mid = (a + d) * 0.5;
    let disc = (mid * mid - (a * d - b * c)).sqrt();
    let (l1, l2) = (mid + disc, mid - disc);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Both eigenvalues of a 2×2 block, using the numerically stable pairing of
/// root and determinant quotient.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let mid = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (mid * mid - det).sqrt();
    // Pick the larger root first to keep the quotient stable.
    let l1 = if (mid + disc).norm() >= (mid - disc).norm() {
        mid + disc
    } else {
        mid - disc
    };
    if l1.norm() == 0.0 {
        (l1, mid - (l1 - mid))
    } else {
        (l1, det / l1)
    }
}

fn qr_eigenvalues(h: &mut [Complex64], n: usize) -> Result<Vec<Complex64>> {
    let budget = 100 * n.max(2);
    let mut sweeps = 0usize;
    let mut evals: Vec<Complex64> = Vec::with_capacity(n);
    let mut hi = n; // active block is rows/cols 0..hi
    let mut stuck = 0usize;

    let frob: f64 = h.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let floor = EPS * frob.max(EPS);

    while hi > 0 {
        // Zero out negligible subdiagonals, then find the active block start.
        for i in 1..hi {
            let tol = EPS * (h[(i - 1) * n + i - 1].norm() + h[i * n + i].norm());
            let tol = if tol == 0.0 { floor } else { tol };
            if h[i * n + i - 1].norm() <= tol {
                h[i * n + i - 1] = Complex64::new(0.0, 0.0);
            }
        }
        let mut lo = hi - 1;
        while lo > 0 && h[lo * n + lo - 1].norm() != 0.0 {
            lo -= 1;
        }

        if lo == hi - 1 {
            evals.push(h[lo * n + lo]);
            hi -= 1;
            stuck = 0;
            continue;
        }
        if lo == hi - 2 {
            let (l1, l2) = eig2(
                h[lo * n + lo],
                h[lo * n + lo + 1],
                h[(lo + 1) * n + lo],
                h[(lo + 1) * n + lo + 1],
            );
            evals.push(l1);
            evals.push(l2);
            hi -= 2;
            stuck = 0;
            continue;
        }

        sweeps += 1;
        stuck += 1;
        if sweeps > budget {
            return Err(Error::NonConvergence { n, sweeps: budget });
        }

        // Shift: Wilkinson from the trailing 2×2, with an occasional
        // exceptional shift to break symmetry-induced stalls.
        let mut mu = wilkinson_shift(
            h[(hi - 2) * n + hi - 2],
            h[(hi - 2) * n + hi - 1],
            h[(hi - 1) * n + hi - 2],
            h[(hi - 1) * n + hi - 1],
        );
        if stuck % 12 == 0 {
            mu = h[(hi - 1) * n + hi - 1]
                + Complex64::new(0.75 * h[(hi - 1) * n + hi - 2].norm(), 0.0);
        }

        // Explicit shifted QR step on the block lo..hi.
        for i in lo..hi {
            h[i * n + i] -= mu;
        }
        let mut rots: Vec<(f64, Complex64)> = Vec::with_capacity(hi - lo - 1);
        for k in lo..hi - 1 {
            let (c, s) = givens(h[k * n + k], h[(k + 1) * n + k]);
            for j in k..hi {
                let a = h[k * n + j];
                let b = h[(k + 1) * n + j];
                h[k * n + j] = c * a + s * b;
                h[(k + 1) * n + j] = -s.conj() * a + c * b;
            }
            h[(k + 1) * n + k] = Complex64::new(0.0, 0.0);
            rots.push((c, s));
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let k = lo + idx;
            let top = (k + 2).min(hi);
            for row in lo..top {
                let a = h[row * n + k];
                let b = h[row * n + k + 1];
                h[row * n + k] = c * a + s.conj() * b;
                h[row * n + k + 1] = -s * a + c * b;
            }
        }
        for i in lo..hi {
            h[i * n + i] += mu;
        }
    }

    Ok(evals)
}

/// Residual `‖Mv − λv‖₂` for the best eigenvector estimate produced by a few
/// steps of inverse iteration at `lambda`. Independent of the QR path, so it
/// certifies reported eigenvalues.
pub fn eigen_residual(m: &DenseMatrix, lambda: Complex64) -> f64 {
    let n = match m.ensure_square() {
        Ok(n) => n,
        Err(_) => return f64::INFINITY,
    };
    if n == 0 {
        return 0.0;
    }
    let scale = m.max_abs().max(1.0);

    // LU of (M − λI) with partial pivoting; tiny pivots are floored so the
    // solve acts like a projector onto the near-null space.
    let mut a: Vec<Complex64> = m.data().to_vec();
    for j in 0..n {
        a[j * n + j] -= lambda;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, a[r * n + col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
            }
            perm.swap(col, pivot_row);
        }
        if pivot_mag < EPS * scale {
            a[col * n + col] = Complex64::new(EPS * scale, 0.0);
        }
        let pivot = a[col * n + col];
        for r in col + 1..n {
            let factor = a[r * n + col] / pivot;
            a[r * n + col] = factor;
            for k in col + 1..n {
                let v = a[col * n + k];
                a[r * n + k] -= factor * v;
            }
        }
    }

    let solve = |b: &[Complex64]| -> Vec<Complex64> {
        let mut x: Vec<Complex64> = (0..n).map(|i| b[perm[i]]).collect();
        for r in 1..n {
            for c in 0..r {
                let f = a[r * n + c];
                let xc = x[c];
                x[r] -= f * xc;
            }
        }
        for r in (0..n).rev() {
            for c in r + 1..n {
                let xc = x[c];
                x[r] -= a[r * n + c] * xc;
            }
            x[r] /= a[r * n + r];
        }
        x
    };

    let mut best = f64::INFINITY;
    for start in 0..2u64 {
        // Deterministic pseudo-random start vectors.
        let mut state = 0x9e3779b97f4a7c15u64 ^ (start.wrapping_mul(0xbf58476d1ce4e5b9) + 1);
        let mut rnd = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut v: Vec<Complex64> = (0..n).map(|_| Complex64::new(rnd(), rnd())).collect();
        for _ in 0..3 {
            let w = solve(&v);
            let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if !norm.is_finite() || norm == 0.0 {
                break;
            }
            v = w.iter().map(|z| z / norm).collect();
        }
        let mut res = 0.0f64;
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..n {
                s += m.get(j, k) * v[k];
            }
            s -= lambda * v[j];
            res += s.norm_sqr();
        }
        best = best.min(res.sqrt());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_by_arg(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.arg().total_cmp(&b.arg()));
        v
    }

    fn assert_multiset_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        assert_eq!(a.len(), b.len());
        let mut rest = b.to_vec();
        for x in a {
            let (idx, dist) = rest
                .iter()
                .enumerate()
                .map(|(i, y)| (i, (x - y).norm()))
                .min_by(|p, q| p.1.total_cmp(&q.1))
                .unwrap();
            assert!(dist <= tol, "no partner for {x} within {tol} (closest {dist})");
            rest.swap_remove(idx);
        }
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let evs = eigenvalues(&DenseMatrix::identity(3)).unwrap();
        for e in evs {
            assert!((e - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn two_by_two_fourier() {
        // F2 has characteristic polynomial λ² − 1.
        let s = 1.0 / 2.0f64.sqrt();
        let m = DenseMatrix::from_vec(
            2,
            2,
            vec![
                Complex64::new(s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(-s, 0.0),
            ],
        );
        let evs = sorted_by_arg(eigenvalues(&m).unwrap());
        assert_multiset_close(
            &evs,
            &[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
            1e-12,
        );
    }

    #[test]
    fn permutation_matrix_spectrum() {
        // j ↦ -j mod 5 has one fixed point and two 2-cycles: {1,1,1,-1,-1}.
        let p = crate::exact::Permutation::multiplicative(5, 4).unwrap();
        let m = DenseMatrix::permutation(&p);
        let evs = eigenvalues(&m).unwrap();
        let expected = vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ];
        assert_multiset_close(&evs, &expected, 1e-9);
    }

    #[test]
    fn fourier_traces_match_eigen_sums() {
        for n in 2..=24 {
            let f = crate::exact::ExponentMatrix::fourier(n);
            let d = f.to_dense();
            let evs = eigenvalues(&d).unwrap();
            let sum: Complex64 = evs.iter().sum();
            assert!(
                (sum - d.trace()).norm() < n as f64 * 1e-10,
                "trace defect at n={n}"
            );
            for e in &evs {
                assert!((e.norm() - 1.0).abs() < 1e-9, "off-circle eigenvalue at n={n}");
            }
        }
    }

    #[test]
    fn residuals_certify_eigenvalues() {
        let f = crate::exact::ExponentMatrix::fourier(12);
        let p = crate::exact::Permutation::multiplicative(12, 5).unwrap();
        let d = f.right_mul_perm(&p).unwrap().to_dense();
        for e in eigenvalues(&d).unwrap() {
            assert!(eigen_residual(&d, e) < 1e-8 * 12.0);
        }
    }
}
