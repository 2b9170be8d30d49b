//! Unit-circle spectrum clustering, spectral equivalence, and fourth-root
//! multiplicities.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::dense::DenseMatrix;
use super::eigen::eigenvalues;
use crate::error::{Error, Result};

/// Default arc tolerance for clustering eigenvalues; the matrix families
/// analyzed here have eigenvalue gaps far above this at n ≤ 64.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

/// Arc distance between two (near-)unit complex numbers, in `[0, π]`.
pub fn arc_distance(a: Complex64, b: Complex64) -> f64 {
    (a * b.conj()).arg().abs()
}

/// One cluster of eigenvalues on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCluster {
    /// Circular mean of the cluster members.
    pub value: Complex64,
    pub multiplicity: usize,
}

/// The spectrum of a (near-)unitary matrix as a clustered multiset on the
/// unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    clusters: Vec<SpectralCluster>,
    n: usize,
    cluster_tol: f64,
    /// Set when two eigenvalues sit at arc distance in `(tol, 3·tol)`,
    /// making the clustering sensitive to the tolerance choice.
    ambiguous: bool,
}

impl Spectrum {
    /// Clusters raw eigenvalues by arc distance after projecting each to the
    /// unit circle.
    pub fn from_eigenvalues(eigs: &[Complex64], cluster_tol: f64) -> Result<Self> {
        let n = eigs.len();
        let mut units: Vec<Complex64> = Vec::with_capacity(n);
        for &e in eigs {
            let norm = e.norm();
            if norm == 0.0 {
                return Err(Error::OffCircle(0.0));
            }
            units.push(e / norm);
        }
        units.sort_by(|a, b| a.arg().total_cmp(&b.arg()));

        // Greedy sweep over sorted arguments, then a wraparound merge of the
        // first and last clusters.
        let mut groups: Vec<Vec<Complex64>> = Vec::new();
        for u in units {
            match groups.last_mut() {
                Some(g) if arc_distance(*g.last().unwrap(), u) <= cluster_tol => g.push(u),
                _ => groups.push(vec![u]),
            }
        }
        if groups.len() > 1 {
            let first = groups.first().unwrap();
            let last = groups.last().unwrap();
            if arc_distance(*last.last().unwrap(), first[0]) <= cluster_tol {
                let tail = groups.pop().unwrap();
                groups[0].extend(tail);
            }
        }

        let clusters: Vec<SpectralCluster> = groups
            .iter()
            .map(|g| {
                let mean: Complex64 = g.iter().sum();
                let value = if mean.norm() == 0.0 {
                    g[0]
                } else {
                    mean / mean.norm()
                };
                SpectralCluster {
                    value,
                    multiplicity: g.len(),
                }
            })
            .collect();

        // Ambiguity: any inter-cluster gap inside (tol, 3·tol).
        let mut ambiguous = false;
        for (i, a) in clusters.iter().enumerate() {
            for b in clusters.iter().skip(i + 1) {
                let d = arc_distance(a.value, b.value);
                if d > cluster_tol && d < 3.0 * cluster_tol {
                    ambiguous = true;
                }
            }
        }

        Ok(Self {
            clusters,
            n,
            cluster_tol,
            ambiguous,
        })
    }

    pub fn of_matrix(m: &DenseMatrix, cluster_tol: f64) -> Result<Self> {
        Self::from_eigenvalues(&eigenvalues(m)?, cluster_tol)
    }

    pub fn clusters(&self) -> &[SpectralCluster] {
        &self.clusters
    }

    /// Clusters sorted by argument in `[0, 2π)`, for stable display.
    pub fn sorted_clusters(&self) -> Vec<SpectralCluster> {
        let mut c = self.clusters.clone();
        c.sort_by(|a, b| arg_unsigned(a.value).total_cmp(&arg_unsigned(b.value)));
        c
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn cluster_tol(&self) -> f64 {
        self.cluster_tol
    }

    pub fn is_ambiguous(&self) -> bool {
        self.ambiguous
    }

    /// Weighted eigenvalue sum; approximates the matrix trace.
    pub fn weighted_sum(&self) -> Complex64 {
        self.clusters
            .iter()
            .map(|c| c.value * c.multiplicity as f64)
            .sum()
    }
}

fn arg_unsigned(z: Complex64) -> f64 {
    let a = z.arg();
    if a < -1e-12 {
        a + TAU
    } else {
        a
    }
}

/// True iff there is a multiplicity-preserving matching of clusters with
/// pairwise arc distance at most `tol`.
pub fn spectrally_equivalent(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    if a.size() != b.size() || a.clusters().len() != b.clusters().len() {
        return false;
    }
    let mut unmatched: Vec<&SpectralCluster> = b.clusters().iter().collect();
    for ca in a.clusters() {
        let found = unmatched.iter().enumerate().find(|(_, cb)| {
            cb.multiplicity == ca.multiplicity && arc_distance(ca.value, cb.value) <= tol
        });
        match found {
            Some((idx, _)) => {
                unmatched.swap_remove(idx);
            }
            None => return false,
        }
    }
    true
}

/// Eigenvalue multiplicities `(t₁, t₋₁, tᵢ, t₋ᵢ)` of a matrix whose fourth
/// power is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourthRootMultiplicities {
    pub t_1: usize,
    pub t_neg1: usize,
    pub t_i: usize,
    pub t_negi: usize,
}

impl FourthRootMultiplicities {
    pub fn as_array(&self) -> [usize; 4] {
        [self.t_1, self.t_neg1, self.t_i, self.t_negi]
    }

    pub fn total(&self) -> usize {
        self.t_1 + self.t_neg1 + self.t_i + self.t_negi
    }

    /// The trace these multiplicities induce: `t₁ − t₋₁ + i(tᵢ − t₋ᵢ)`.
    pub fn trace(&self) -> Complex64 {
        Complex64::new(
            self.t_1 as f64 - self.t_neg1 as f64,
            self.t_i as f64 - self.t_negi as f64,
        )
    }

    /// Solves the 4×4 linear system tying multiplicities to trace data:
    /// `t_λ = (1/4) Σ_k λ^{−k} tr(M^k)` with `tr(M⁰) = n`, `tr(M³) = conj(tr M)`.
    ///
    /// Inputs that do not round to non-negative integers within `1e−6`
    /// signal `M⁴ ≠ I` or bad trace data and are rejected.
    pub fn from_traces(n: usize, tr_m: Complex64, tr_m2: i64) -> Result<Self> {
        let nf = n as f64;
        let s = tr_m2 as f64;
        let a = tr_m.re;
        let b = tr_m.im;
        let raw = [
            (nf + s + 2.0 * a) / 4.0,
            (nf + s - 2.0 * a) / 4.0,
            (nf - s + 2.0 * b) / 4.0,
            (nf - s - 2.0 * b) / 4.0,
        ];
        let mut vals = [0usize; 4];
        for (slot, &x) in vals.iter_mut().zip(&raw) {
            let rounded = x.round();
            if (x - rounded).abs() > 1e-6 || rounded < -0.5 {
                return Err(Error::InconsistentMultiplicities(format!(
                    "n={n}, tr(M)={tr_m}, tr(M²)={tr_m2} gives non-integral or negative {x}"
                )));
            }
            *slot = rounded as usize;
        }
        let result = Self {
            t_1: vals[0],
            t_neg1: vals[1],
            t_i: vals[2],
            t_negi: vals[3],
        };
        debug_assert_eq!(result.total(), n);
        Ok(result)
    }

    /// Reads multiplicities off a clustered spectrum whose values must all
    /// be fourth roots of unity within `tol`.
    pub fn from_spectrum(spectrum: &Spectrum, tol: f64) -> Result<Self> {
        let roots = [
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
        ];
        let mut counts = [0usize; 4];
        for c in spectrum.clusters() {
            let (idx, dist) = roots
                .iter()
                .enumerate()
                .map(|(i, r)| (i, arc_distance(c.value, *r)))
                .min_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if dist > tol {
                return Err(Error::NotFourthRoots);
            }
            counts[idx] += c.multiplicity;
        }
        Ok(Self {
            t_1: counts[0],
            t_neg1: counts[1],
            t_i: counts[2],
            t_negi: counts[3],
        })
    }
}

impl std::fmt::Display for FourthRootMultiplicities {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(t1={}, t-1={}, ti={}, t-i={})",
            self.t_1, self.t_neg1, self.t_i, self.t_negi
        )
    }
}

/// Convenience check used across the test suites: eigenvalue sum vs trace
/// and eigenvalue product vs determinant.
pub fn spectral_defects(m: &DenseMatrix) -> Result<(f64, f64)> {
    let evs = eigenvalues(m)?;
    let sum: Complex64 = evs.iter().sum();
    let prod: Complex64 = evs.iter().product();
    let trace_defect = (sum - m.trace()).norm();
    let det_defect = (prod - m.det()?).norm();
    Ok((trace_defect, det_defect))
}

/// Multiset comparison of raw eigenvalue lists within an absolute tolerance.
pub fn multisets_match(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut rest = b.to_vec();
    for x in a {
        let found = rest
            .iter()
            .enumerate()
            .map(|(i, y)| (i, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1));
        match found {
            Some((idx, dist)) if dist <= tol => {
                rest.swap_remove(idx);
            }
            _ => return false,
        }
    }
    true
}

/// Sorts eigenvalues by argument in `[0, 2π)` for stable output, with a
/// snap so that values within `1e−12` of the positive real axis lead.
pub fn sort_by_argument(mut v: Vec<Complex64>) -> Vec<Complex64> {
    v.sort_by(|a, b| arg_unsigned(*a).total_cmp(&arg_unsigned(*b)));
    v
}

/// Equally spaced points on the unit circle, `e^{2πik/count}`.
pub fn unit_circle_grid(count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|k| {
            let t = TAU * k as f64 / count as f64;
            Complex64::new(t.cos(), t.sin())
        })
        .collect()
}

/// `e^{iθ}` for a list of angles given in units of π.
pub fn phases_of_pi_multiples(multiples: &[f64]) -> Vec<Complex64> {
    multiples
        .iter()
        .map(|m| {
            let t = PI * m;
            Complex64::new(t.cos(), t.sin())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ExponentMatrix, Permutation};

    #[test]
    fn identity_spectrum_is_single_cluster() {
        let s = Spectrum::of_matrix(&DenseMatrix::identity(6), 1e-6).unwrap();
        assert_eq!(s.clusters().len(), 1);
        assert_eq!(s.clusters()[0].multiplicity, 6);
        assert!(!s.is_ambiguous());
    }

    #[test]
    fn fourier4_fourth_root_clusters() {
        let f4 = ExponentMatrix::fourier(4).to_dense();
        let s = Spectrum::of_matrix(&f4, 1e-6).unwrap();
        let m = FourthRootMultiplicities::from_spectrum(&s, 1e-6).unwrap();
        assert_eq!(m.as_array(), [2, 1, 1, 0]);
    }

    #[test]
    fn negation_permutation_spectrum() {
        let p = Permutation::multiplicative(5, 4).unwrap();
        let s = Spectrum::of_matrix(&DenseMatrix::permutation(&p), 1e-6).unwrap();
        let mut pairs: Vec<(i64, usize)> = s
            .clusters()
            .iter()
            .map(|c| (c.value.re.round() as i64, c.multiplicity))
            .collect();
        pairs.sort();
        assert_eq!(pairs, vec![(-1, 2), (1, 3)]);
    }

    #[test]
    fn equivalence_is_reflexive_and_counts_multiplicity() {
        let f4 = ExponentMatrix::fourier(4);
        let s1 = Spectrum::of_matrix(&f4.to_dense(), 1e-6).unwrap();
        assert!(spectrally_equivalent(&s1, &s1, 1e-8));

        // F4·P(·3) has (t_i, t_-i) = (0, 1) instead of (1, 0).
        let p3 = Permutation::multiplicative(4, 3).unwrap();
        let s2 = Spectrum::of_matrix(&f4.right_mul_perm(&p3).unwrap().to_dense(), 1e-6).unwrap();
        assert!(!spectrally_equivalent(&s1, &s2, 1e-8));
    }

    #[test]
    fn trace_solve_examples() {
        let m = FourthRootMultiplicities::from_traces(12, Complex64::new(1.0, 1.0), 2).unwrap();
        assert_eq!(m.as_array(), [4, 3, 3, 2]);
        let m = FourthRootMultiplicities::from_traces(12, Complex64::new(-1.0, -1.0), 2).unwrap();
        assert_eq!(m.as_array(), [3, 4, 2, 3]);
        let m = FourthRootMultiplicities::from_traces(5, Complex64::new(1.0, 0.0), 1).unwrap();
        assert_eq!(m.as_array(), [2, 1, 1, 1]);
        // A trace inconsistent with M⁴ = I is rejected.
        assert!(FourthRootMultiplicities::from_traces(5, Complex64::new(0.5, 0.0), 1).is_err());
    }

    #[test]
    fn ambiguity_flag_trips_on_borderline_gaps() {
        let evs = vec![
            Complex64::new(1.0, 0.0),
            Complex64::from_polar(1.0, 2e-6),
            Complex64::new(0.0, 1.0),
        ];
        let s = Spectrum::from_eigenvalues(&evs, 1e-6).unwrap();
        assert!(s.is_ambiguous());
    }
}
