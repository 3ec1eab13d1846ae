//! Singular value decomposition built from the eigendecomposition of the
//! Gram matrix, and the CR (column–row) decomposition.

use crate::error::Result;
use crate::matrix::{dot, norm, rref_rows, Matrix, Tolerance};
use crate::spectral::{eig_symmetric, fix_sign};

const POLISH_SWEEPS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvdForm {
    /// `u` is n×n and `v` is p×p.
    Full,
    /// `u` is n×r and `v` is p×r.
    Reduced,
}

#[derive(Debug, Clone)]
pub struct SvdResult {
    pub u: Matrix,
    pub v: Matrix,
    /// Nonzero singular values, descending.
    pub sigma: Vec<f64>,
    pub rank: usize,
    pub form: SvdForm,
    pub tol_used: Tolerance,
}

impl SvdResult {
    /// Σ with `sigma` on the upper-left diagonal, shaped to sit between `u`
    /// and `vᵀ`.
    pub fn sigma_matrix(&self) -> Matrix {
        let mut s = Matrix::zeros(self.u.n_cols(), self.v.n_cols());
        for (i, &x) in self.sigma.iter().enumerate() {
            s.set(i, i, x);
        }
        s
    }

    /// Σ⁺: the transpose shape of Σ with `1/σᵢ` on the upper-left diagonal.
    pub fn sigma_pinv(&self) -> Matrix {
        let mut s = Matrix::zeros(self.v.n_cols(), self.u.n_cols());
        for (i, &x) in self.sigma.iter().enumerate() {
            s.set(i, i, 1.0 / x);
        }
        s
    }

    /// `u · Σ · vᵀ`.
    pub fn reconstruct(&self) -> Matrix {
        let (n, p) = (self.u.n_rows(), self.v.n_rows());
        let mut out = Matrix::zeros(n, p);
        for (k, &s) in self.sigma.iter().enumerate() {
            for i in 0..n {
                let a = s * self.u.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..p {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + a * self.v.get(j, k));
                }
            }
        }
        out
    }
}

/// Full SVD `X = U Σ Vᵀ`.
///
/// The right singular vectors come from the eigenvectors of `XᵀX` (or of
/// `XXᵀ` when `X` is wide, with the roles of `u` and `v` swapped), polished
/// by one-sided Jacobi rotations on `X V`. For each
/// accepted eigenvector `σᵢ = ‖X vᵢ‖` and `uᵢ = X vᵢ / σᵢ`; `σᵢ` is kept
/// iff `σᵢ > tol · max(n, p) · σ_max`. The silent columns are completed to
/// orthonormal bases of the null spaces by Gram–Schmidt on e₁, e₂, ….
pub fn svd_full(x: &Matrix, tol: Tolerance) -> Result<SvdResult> {
    let (n, p) = x.shape();
    let (u_cols, v_cols, sigma) = if n >= p {
        svd_tall(x, tol)?
    } else {
        let (v, u, s) = svd_tall(&x.transpose(), tol)?;
        (u, v, s)
    };
    let rank = sigma.len();
    let u = complete_orthonormal(u_cols, n);
    let v = complete_orthonormal(v_cols, p);
    Ok(SvdResult {
        u: Matrix::from_columns(n, &u)?,
        v: Matrix::from_columns(p, &v)?,
        sigma,
        rank,
        form: SvdForm::Full,
        tol_used: tol,
    })
}

/// Reduced SVD: the first `r` columns of [`svd_full`]'s factors.
pub fn svd_reduced(x: &Matrix, tol: Tolerance) -> Result<SvdResult> {
    let full = svd_full(x, tol)?;
    let r = full.rank;
    Ok(SvdResult {
        u: full.u.block(0, full.u.n_rows(), 0, r),
        v: full.v.block(0, full.v.n_rows(), 0, r),
        sigma: full.sigma,
        rank: r,
        form: SvdForm::Reduced,
        tol_used: tol,
    })
}

/// Accepted (u, v, σ) triples for `n ≥ p`, eigen-side on `XᵀX`.
#[allow(clippy::type_complexity)]
fn svd_tall(x: &Matrix, tol: Tolerance) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>, Vec<f64>)> {
    let (n, p) = x.shape();
    let gram = x.transpose().matmul(x)?;
    let eig = eig_symmetric(&gram, tol)?;

    let mut v_cols = eig.q.columns();
    let mut w_cols: Vec<Vec<f64>> = v_cols
        .iter()
        .map(|v| x.matvec(v).expect("shape checked"))
        .collect();
    polish(&mut w_cols, &mut v_cols);

    let mut triples: Vec<(f64, Vec<f64>, Vec<f64>)> = w_cols
        .into_iter()
        .zip(v_cols)
        .map(|(mut xv, mut v)| {
            if fix_sign(&mut v) {
                xv.iter_mut().for_each(|y| *y = -*y);
            }
            (norm(&xv), xv, v)
        })
        .collect();
    triples.sort_by(|a, b| b.0.total_cmp(&a.0));

    let sigma_max = triples.first().map_or(0.0, |t| t.0);
    let cutoff = tol.absolute(n.max(p) as f64 * sigma_max);
    let mut u_cols = Vec::new();
    let mut v_cols = Vec::new();
    let mut sigma = Vec::new();
    if sigma_max > 0.0 {
        for (s, xv, v) in triples {
            if s <= cutoff {
                break;
            }
            u_cols.push(xv.iter().map(|y| y / s).collect());
            v_cols.push(v);
            sigma.push(s);
        }
    }
    Ok((u_cols, v_cols, sigma))
}

/// One-sided Jacobi sweeps on `w = X v`, rotating `v` alongside.
///
/// The Gram eigenvectors are accurate only to about `eps · κ²` in the
/// directions of small singular values, which leaves `uᵢ = X vᵢ / σᵢ`
/// visibly non-orthogonal for ill-conditioned `X`. A pair is rotated while
/// `|wᵢᵀwⱼ| > eps · ‖wᵢ‖ ‖wⱼ‖`; starting from the Gram eigenvectors this
/// settles in one or two sweeps.
fn polish(w: &mut [Vec<f64>], v: &mut [Vec<f64>]) {
    let k = w.len();
    for _ in 0..POLISH_SWEEPS {
        let mut rotated = false;
        for i in 0..k {
            for j in i + 1..k {
                let alpha = dot(&w[i], &w[i]);
                let beta = dot(&w[j], &w[j]);
                let gamma = dot(&w[i], &w[j]);
                if gamma == 0.0 || gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_pair(w, i, j, c, s);
                rotate_pair(v, i, j, c, s);
            }
        }
        if !rotated {
            break;
        }
    }
}

fn rotate_pair(cols: &mut [Vec<f64>], i: usize, j: usize, c: f64, s: f64) {
    let (head, tail) = cols.split_at_mut(j);
    for (a, b) in head[i].iter_mut().zip(tail[0].iter_mut()) {
        let (ai, bj) = (*a, *b);
        *a = c * ai - s * bj;
        *b = s * ai + c * bj;
    }
}

/// Extends orthonormal `basis` to `dim` vectors.
///
/// Candidates e₁, e₂, … are orthogonalized against the current basis by
/// modified Gram–Schmidt (two passes) and accepted when the residual norm
/// exceeds 0.5. If that leaves the basis short, the remaining slots take the
/// candidate with the largest residual.
pub(crate) fn complete_orthonormal(mut basis: Vec<Vec<f64>>, dim: usize) -> Vec<Vec<f64>> {
    let residual = |basis: &[Vec<f64>], k: usize| {
        let mut w = vec![0.0; dim];
        w[k] = 1.0;
        for _ in 0..2 {
            for q in basis {
                let c = dot(q, &w);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= c * qi;
                }
            }
        }
        w
    };

    for k in 0..dim {
        if basis.len() >= dim {
            break;
        }
        let w = residual(&basis, k);
        let nw = norm(&w);
        if nw > 0.5 {
            basis.push(w.into_iter().map(|x| x / nw).collect());
        }
    }
    while basis.len() < dim {
        let (w, nw) = (0..dim)
            .map(|k| {
                let w = residual(&basis, k);
                let nw = norm(&w);
                (w, nw)
            })
            .fold((Vec::new(), -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        basis.push(w.into_iter().map(|x| x / nw).collect());
    }
    basis
}

/// Orthonormalizes `vectors` by modified Gram–Schmidt, dropping any whose
/// residual falls below `1000 · tol.relative` times its original norm.
pub fn orthonormalize(vectors: &[Vec<f64>], tol: Tolerance) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let orig = norm(v);
        if orig == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &out {
                let c = dot(q, &w);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= c * qi;
                }
            }
        }
        let nw = norm(&w);
        if nw > tol.absolute(orig) * 1e3 {
            out.push(w.into_iter().map(|x| x / nw).collect());
        }
    }
    out
}

/// `X = C · R` with `C` the pivot columns of `X` and `R` the nonzero rows of
/// its reduced row echelon form.
#[derive(Debug, Clone)]
pub struct CrFactors {
    pub c: Matrix,
    pub r_factor: Matrix,
    pub rank: usize,
}

pub fn cr_decompose(x: &Matrix, tol: Tolerance) -> CrFactors {
    let rr = rref_rows(x, tol);
    let rank = rr.pivot_rank;
    CrFactors {
        c: x.select_columns(&rr.pivot_cols),
        r_factor: rr.reduced.block(0, rank, 0, x.n_cols()),
        rank,
    }
}
