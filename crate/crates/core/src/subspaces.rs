//! Orthonormal bases of the four fundamental subspaces.

use crate::error::{Error, Result};
use crate::factorizations::svd_full;
use crate::matrix::{dot, norm, pivot_rank, Matrix, Tolerance};

pub use crate::factorizations::orthonormalize;

/// Orthonormal bases for C(Xᵀ), N(X) ⊂ ℝᵖ and C(X), N(Xᵀ) ⊂ ℝⁿ.
#[derive(Debug, Clone)]
pub struct SubspaceBases {
    pub row_space: Vec<Vec<f64>>,
    pub null_space: Vec<Vec<f64>>,
    pub column_space: Vec<Vec<f64>>,
    pub left_null_space: Vec<Vec<f64>>,
}

impl SubspaceBases {
    pub fn rank(&self) -> usize {
        self.row_space.len()
    }
}

/// Slices the full SVD: the first `r` columns of `v` and `u` span the row
/// and column spaces, the remaining columns span the two null spaces.
pub fn fundamental_bases(x: &Matrix, tol: Tolerance) -> Result<SubspaceBases> {
    let svd = svd_full(x, tol)?;
    let mut v = svd.v.columns();
    let mut u = svd.u.columns();
    let null_space = v.split_off(svd.rank);
    let left_null_space = u.split_off(svd.rank);
    Ok(SubspaceBases {
        row_space: v,
        null_space,
        column_space: u,
        left_null_space,
    })
}

/// Maps a basis of the row space through `X`; the images form a basis of
/// the column space. Images are returned unnormalized.
pub fn column_basis_from_row_basis(
    x: &Matrix,
    row_basis: &[Vec<f64>],
    tol: Tolerance,
) -> Result<Vec<Vec<f64>>> {
    let p = x.n_cols();
    if let Some(bad) = row_basis.iter().find(|r| r.len() != p) {
        return Err(Error::DimensionMismatch {
            op: "column_basis_from_row_basis",
            left: x.shape(),
            right: (bad.len(), 1),
        });
    }

    let row_space = fundamental_bases(x, tol)?.row_space;
    for (index, r) in row_basis.iter().enumerate() {
        let mut residual = r.clone();
        for q in &row_space {
            let c = dot(q, r);
            for (ri, qi) in residual.iter_mut().zip(q) {
                *ri -= c * qi;
            }
        }
        let distance = norm(&residual);
        if distance > tol.band(norm(r)) || norm(r) == 0.0 {
            return Err(Error::NotInRowSpace { index, distance });
        }
    }

    if !row_basis.is_empty() {
        let rank = pivot_rank(&Matrix::from_columns(p, row_basis)?, tol);
        if rank < row_basis.len() {
            return Err(Error::DependentBasis {
                rank,
                len: row_basis.len(),
            });
        }
    }

    row_basis.iter().map(|r| x.matvec(r)).collect()
}

/// Dimension count of the four subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankNullity {
    pub r: usize,
    pub dim_null: usize,
    pub dim_left_null: usize,
    pub p: usize,
    pub n: usize,
}

pub fn rank_nullity_report(x: &Matrix, tol: Tolerance) -> Result<RankNullity> {
    let (n, p) = x.shape();
    let r = svd_full(x, tol)?.rank;
    Ok(RankNullity {
        r,
        dim_null: p - r,
        dim_left_null: n - r,
        p,
        n,
    })
}

/// Orthogonal projector `Σ qᵢ qᵢᵀ` onto the span of an orthonormal list.
pub fn projector(basis: &[Vec<f64>], dim: usize) -> Matrix {
    let mut out = Matrix::zeros(dim, dim);
    for q in basis {
        for i in 0..dim {
            for j in 0..dim {
                let cur = out.get(i, j);
                out.set(i, j, cur + q[i] * q[j]);
            }
        }
    }
    out
}

/// Decides whether two orthonormal lists span the same subspace by comparing
/// their orthogonal projectors: `‖P_a − P_b‖_F ≤ 100 · tol · max(1, len)`.
pub fn subspaces_equal(basis_a: &[Vec<f64>], basis_b: &[Vec<f64>], tol: Tolerance) -> Result<bool> {
    let dim = match basis_a.iter().chain(basis_b).next() {
        Some(v) => v.len(),
        None => return Ok(true),
    };
    if let Some(bad) = basis_a.iter().chain(basis_b).find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch {
            op: "subspaces_equal",
            left: (dim, 1),
            right: (bad.len(), 1),
        });
    }
    let diff = projector(basis_a, dim).sub(&projector(basis_b, dim))?;
    let len = basis_a.len().max(basis_b.len()).max(1) as f64;
    Ok(diff.frobenius_norm() <= tol.band(len))
}
