//! Least squares, the split `y = ŷ + e`, and orthogonal projectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::factorizations::svd_reduced;
use crate::inverses::{left_inverse, pinv_svd, right_inverse};
use crate::matrix::{dot, norm, pivot_rank, Matrix, Tolerance};
use crate::spectral::eig_symmetric;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsMethod {
    Normal,
    SvdMinNorm,
    RightInverse,
    UniqueConsistent,
}

impl LsMethod {
    pub fn label(&self) -> &'static str {
        match self {
            LsMethod::Normal => "normal",
            LsMethod::SvdMinNorm => "svd-minnorm",
            LsMethod::RightInverse => "right-inverse",
            LsMethod::UniqueConsistent => "unique-consistent",
        }
    }
}

impl fmt::Display for LsMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone)]
pub struct LsSolution {
    pub beta_hat: Vec<f64>,
    pub y_hat: Vec<f64>,
    pub residual: Vec<f64>,
    pub residual_norm: f64,
    pub rank_used: usize,
    pub method: LsMethod,
}

fn check_rhs(x: &Matrix, y: &[f64], op: &'static str) -> Result<()> {
    if y.len() != x.n_rows() {
        return Err(Error::DimensionMismatch {
            op,
            left: x.shape(),
            right: (y.len(), 1),
        });
    }
    Ok(())
}

fn finish(x: &Matrix, y: &[f64], beta_hat: Vec<f64>, rank_used: usize, method: LsMethod) -> Result<LsSolution> {
    let y_hat = x.matvec(&beta_hat)?;
    let residual: Vec<f64> = y.iter().zip(&y_hat).map(|(a, b)| a - b).collect();
    Ok(LsSolution {
        residual_norm: norm(&residual),
        beta_hat,
        y_hat,
        residual,
        rank_used,
        method,
    })
}

/// `β̂ = (XᵀX)⁻¹ Xᵀ y`. Rank-deficient inputs are rejected; use
/// [`ls_svd_minnorm`] for those.
pub fn ls_normal(x: &Matrix, y: &[f64], tol: Tolerance) -> Result<LsSolution> {
    check_rhs(x, y, "ls_normal")?;
    let beta = left_inverse(x, tol)?.matvec(y)?;
    finish(x, y, beta, x.n_cols(), LsMethod::Normal)
}

/// Minimum-norm least-squares solution `Σ (uᵢᵀy / σᵢ) vᵢ = X⁺ y`.
pub fn ls_svd_minnorm(x: &Matrix, y: &[f64], tol: Tolerance) -> Result<LsSolution> {
    check_rhs(x, y, "ls_svd_minnorm")?;
    let svd = svd_reduced(x, tol)?;
    let mut beta = vec![0.0; x.n_cols()];
    for i in 0..svd.rank {
        let c = dot(&svd.u.column(i), y) / svd.sigma[i];
        for (b, vi) in beta.iter_mut().zip(svd.v.column(i)) {
            *b += c * vi;
        }
    }
    finish(x, y, beta, svd.rank, LsMethod::SvdMinNorm)
}

/// `(ŷ, e)` with `ŷ = X X⁺ y` and `e = y − ŷ`.
pub fn observation_split(x: &Matrix, y: &[f64], tol: Tolerance) -> Result<(Vec<f64>, Vec<f64>)> {
    check_rhs(x, y, "observation_split")?;
    let y_hat = projector_column(x, tol)?.matvec(y)?;
    let e = y.iter().zip(&y_hat).map(|(a, b)| a - b).collect();
    Ok((y_hat, e))
}

/// `H = X X⁺`, the n×n orthogonal projector onto the column space.
pub fn projector_column(x: &Matrix, tol: Tolerance) -> Result<Matrix> {
    x.matmul(&pinv_svd(x, tol)?)
}

/// `P = X⁺ X`, the p×p orthogonal projector onto the row space.
pub fn projector_row(x: &Matrix, tol: Tolerance) -> Result<Matrix> {
    pinv_svd(x, tol)?.matmul(x)
}

#[derive(Debug, Clone)]
pub struct ProjectorReport {
    pub idempotent: bool,
    pub symmetric: bool,
    pub trace: f64,
    pub rank: usize,
    /// `‖P² − P‖_F`.
    pub idempotent_residual: f64,
    /// `‖Pᵀ − P‖_F`.
    pub symmetry_residual: f64,
    /// `None` when `P` is not symmetric.
    pub spectrum_binary: Option<bool>,
    pub eigenvalues: Option<Vec<f64>>,
}

/// Checks the projector laws. All comparisons use the band
/// `100 · tol · max(1, ‖P‖_F)`.
pub fn projector_diagnostics(p: &Matrix, tol: Tolerance) -> Result<ProjectorReport> {
    if !p.is_square() {
        return Err(Error::Shape(format!("projector must be square, got {:?}", p.shape())));
    }
    let band = tol.band(p.frobenius_norm().max(1.0));
    let idempotent_residual = p.matmul(p)?.sub(p)?.frobenius_norm();
    let symmetry_residual = p.asymmetry()?;
    let symmetric = symmetry_residual <= band;

    let (spectrum_binary, eigenvalues) = if symmetric {
        let eig = eig_symmetric(p, tol)?;
        let binary = eig
            .lambda
            .iter()
            .all(|l| l.abs() <= band || (l - 1.0).abs() <= band);
        (Some(binary), Some(eig.lambda))
    } else {
        (None, None)
    };

    Ok(ProjectorReport {
        idempotent: idempotent_residual <= band,
        symmetric,
        trace: p.trace()?,
        rank: pivot_rank(p, tol),
        idempotent_residual,
        symmetry_residual,
        spectrum_binary,
        eigenvalues,
    })
}

/// Unique solution of a consistent full-column-rank system. The system is
/// consistent when `‖(I − X X_L⁻¹) y‖ ≤ 100 · tol · max(1, ‖y‖)`.
pub fn consistent_unique_solve(x: &Matrix, y: &[f64], tol: Tolerance) -> Result<LsSolution> {
    check_rhs(x, y, "consistent_unique_solve")?;
    let xl = left_inverse(x, tol)?;
    let beta = xl.matvec(y)?;
    let sol = finish(x, y, beta, x.n_cols(), LsMethod::UniqueConsistent)?;
    if sol.residual_norm > tol.band(norm(y).max(1.0)) {
        return Err(Error::InconsistentSystem {
            residual_norm: sol.residual_norm,
        });
    }
    Ok(sol)
}

/// `β̂ = Xᵀ (XXᵀ)⁻¹ y` for full row rank `X`; always solves `X β̂ = y`.
pub fn right_solve(x: &Matrix, y: &[f64], tol: Tolerance) -> Result<LsSolution> {
    check_rhs(x, y, "right_solve")?;
    let beta = right_inverse(x, tol)?.matvec(y)?;
    finish(x, y, beta, x.n_rows(), LsMethod::RightInverse)
}
