//! Dense linear algebra around the four fundamental subspaces: echelon
//! forms, symmetric eigendecomposition, SVD and CR factorizations,
//! generalized and pseudo-inverses, and least squares.
//!
//! Matrices are small, dense and row-major. Every numerical decision takes
//! a [`Tolerance`]; the default relative tolerance is `1e-10`.

pub mod error;
pub mod factorizations;
pub mod inverses;
pub mod matrix;
pub mod solve;
pub mod spectral;
pub mod subspaces;

pub use error::{Error, Result};
pub use factorizations::{cr_decompose, orthonormalize, svd_full, svd_reduced, CrFactors, SvdForm, SvdResult};
pub use inverses::{
    canonical_factors, classify_inverse, ginverse_extend, left_inverse, left_inverse_elementary,
    left_inverse_family, penrose_residuals, pinv_cr, pinv_svd, rg_canonical, rg_from_factors,
    rg_sandwich, rg_via_gram, right_inverse, right_inverse_elementary, right_inverse_family,
    CanonicalFactors, InverseClass, InverseReport, PenroseFlags,
};
pub use matrix::{frobenius_norm, invert, matmul, pivot_rank, rref_cols, rref_rows, Matrix, RrefResult, Tolerance};
pub use solve::{
    consistent_unique_solve, ls_normal, ls_svd_minnorm, observation_split, projector_column,
    projector_diagnostics, projector_row, right_solve, LsMethod, LsSolution, ProjectorReport,
};
pub use spectral::{eig_symmetric, similarity_check, EigResult, SimilarityReport};
pub use subspaces::{
    column_basis_from_row_basis, fundamental_bases, projector, rank_nullity_report, subspaces_equal,
    RankNullity, SubspaceBases,
};
