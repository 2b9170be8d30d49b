//! Dense eigensolving and spectrum analysis for (near-)unitary matrices.

mod dense;
mod eigen;
mod spectrum;

pub use dense::{DenseMatrix, DEFAULT_HADAMARD_TOL};
pub use eigen::{eigen_residual, eigenvalues};
pub use spectrum::{
    arc_distance, multisets_match, phases_of_pi_multiples, sort_by_argument, spectral_defects,
    spectrally_equivalent, unit_circle_grid, FourthRootMultiplicities, SpectralCluster, Spectrum,
    DEFAULT_CLUSTER_TOL,
};
