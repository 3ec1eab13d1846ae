//! Symmetric eigendecomposition by cyclic Jacobi rotations, and similarity
//! checks built on it.

use crate::error::{Error, Result};
use crate::matrix::{invert, pivot_rank, Matrix, Tolerance};

const MAX_SWEEPS: usize = 50;

/// `S = q · diag(lambda) · qᵀ` with orthogonal `q` and `lambda` descending.
#[derive(Debug, Clone)]
pub struct EigResult {
    pub q: Matrix,
    pub lambda: Vec<f64>,
}

impl EigResult {
    /// `q · diag(lambda) · qᵀ`.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.lambda.len();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let s: f64 = (0..n)
                    .map(|k| self.q.get(i, k) * self.lambda[k] * self.q.get(j, k))
                    .sum();
                out.set(i, j, s);
            }
        }
        out
    }
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.n_rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j) * a.get(i, j);
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a symmetric matrix.
///
/// Sweeps every off-diagonal pair cyclically. Iteration stops once the
/// off-diagonal norm is below `tol.relative · ‖S‖_F` and has stopped
/// shrinking (or reached rounding level); failure to get under the
/// tolerance within 50 sweeps is a [`Error::NoConvergence`].
///
/// Each eigenvector is signed so its largest-magnitude component is
/// positive (lowest index on ties), and eigenpairs are sorted by
/// descending eigenvalue with a stable sort.
pub fn eig_symmetric(s: &Matrix, tol: Tolerance) -> Result<EigResult> {
    if !s.is_square() {
        return Err(Error::Shape(format!(
            "eigendecomposition needs a square matrix, got {:?}",
            s.shape()
        )));
    }
    let n = s.n_rows();
    let scale = s.frobenius_norm();
    let asym = s.asymmetry()?;
    if asym > tol.absolute(scale) {
        return Err(Error::NotSymmetric { asymmetry: asym });
    }

    // symmetrize so rounding-level asymmetry does not leak into the rotations
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, 0.5 * (s.get(i, j) + s.get(j, i)));
        }
    }
    let mut v = Matrix::identity(n);

    let target = tol.absolute(scale);
    let floor = f64::EPSILON * scale;
    let mut prev_off = f64::INFINITY;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off <= floor || (off <= target && off >= 0.5 * prev_off) {
            converged = true;
            break;
        }
        prev_off = off;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        let off = off_diagonal_norm(&a);
        if off > target {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                off_norm: off,
            });
        }
    }

    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|k| {
            let mut col = v.column(k);
            fix_sign(&mut col);
            (a.get(k, k), col)
        })
        .collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));

    let lambda = pairs.iter().map(|(l, _)| *l).collect();
    let cols: Vec<Vec<f64>> = pairs.into_iter().map(|(_, c)| c).collect();
    Ok(EigResult {
        q: Matrix::from_columns(n, &cols)?,
        lambda,
    })
}

/// One Jacobi rotation annihilating `a[p][q]`, accumulated into `v`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    if t == 0.0 {
        return;
    }
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.n_rows();

    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, c * apk - s * aqk);
        a.set(q, k, s * apk + c * aqk);
    }
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, c * vkp - s * vkq);
        v.set(k, q, s * vkp + c * vkq);
    }
}

/// Flips `v` so that its largest-magnitude component is positive. Components
/// within a relative 1e-12 of the maximum count as tied; the lowest index wins.
/// Returns whether `v` was flipped.
pub(crate) fn fix_sign(v: &mut [f64]) -> bool {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return false;
    }
    let lead = v
        .iter()
        .position(|x| x.abs() >= max * (1.0 - 1e-12))
        .unwrap_or(0);
    if v[lead] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
        return true;
    }
    false
}

/// Outcome of comparing `A` with `P·A·P⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityReport {
    /// `None` when `P` is not orthogonal: the conjugate is then not
    /// symmetric and the symmetric eigen-engine does not apply.
    pub eigs_match: Option<bool>,
    pub rank_match: bool,
    pub trace_match: bool,
}

/// Checks that conjugation by `p` preserves eigenvalues, rank and trace.
pub fn similarity_check(a: &Matrix, p: &Matrix, tol: Tolerance) -> Result<SimilarityReport> {
    if !a.is_square() || !p.is_square() || a.n_rows() != p.n_rows() {
        return Err(Error::DimensionMismatch {
            op: "similarity_check",
            left: a.shape(),
            right: p.shape(),
        });
    }
    let n = a.n_rows();
    let p_inv = invert(p, tol)?;
    let b = p.matmul(a)?.matmul(&p_inv)?;

    let cond = p.frobenius_norm() * p_inv.frobenius_norm();
    let scale = a.frobenius_norm().max(1.0) * cond;

    let trace_match = (b.trace()? - a.trace()?).abs() <= tol.band(scale);
    let rank_match = pivot_rank(&b, tol) == pivot_rank(a, tol);

    let orth_err = p.transpose().matmul(p)?.sub(&Matrix::identity(n))?.frobenius_norm();
    let eigs_match = if orth_err <= tol.band(1.0) {
        let ea = eig_symmetric(a, tol)?;
        let eb = eig_symmetric(&b, tol)?;
        let band = tol.band(a.frobenius_norm().max(1.0));
        Some(
            ea.lambda
                .iter()
                .zip(&eb.lambda)
                .all(|(x, y)| (x - y).abs() <= band),
        )
    } else {
        None
    };

    Ok(SimilarityReport {
        eigs_match,
        rank_match,
        trace_match,
    })
}
