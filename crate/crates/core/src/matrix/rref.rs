use super::{Matrix, Tolerance};
use crate::error::{Error, Result};

/// Reduced echelon form together with the elementary operations that
/// produced it.
///
/// For row reduction `transform · input = reduced`; for column reduction
/// `input · transform = reduced`.
#[derive(Debug, Clone)]
pub struct RrefResult {
    pub reduced: Matrix,
    pub transform: Matrix,
    pub pivot_cols: Vec<usize>,
    pub pivot_rank: usize,
}

/// Gauss–Jordan elimination with partial pivoting, tracking every
/// elementary row operation in `transform`.
///
/// A candidate pivot is accepted only if its magnitude exceeds
/// `tol.relative × max|a_ij|`. Ties in the pivot search go to the lowest
/// row index. Rows below the last pivot are set to exact zeros.
pub fn rref_rows(a: &Matrix, tol: Tolerance) -> RrefResult {
    let (n, p) = a.shape();
    let mut reduced = a.clone();
    let mut transform = Matrix::identity(n);
    let threshold = tol.absolute(a.max_abs());
    let mut pivot_cols = Vec::new();
    let mut row = 0;

    for col in 0..p {
        if row == n {
            break;
        }
        let mut best = row;
        let mut best_abs = reduced.get(row, col).abs();
        for i in row + 1..n {
            let v = reduced.get(i, col).abs();
            if v > best_abs {
                best = i;
                best_abs = v;
            }
        }
        if best_abs <= threshold {
            continue;
        }

        reduced.swap_rows(row, best);
        transform.swap_rows(row, best);

        let inv = 1.0 / reduced.get(row, col);
        reduced.scale_row(row, inv);
        transform.scale_row(row, inv);
        reduced.set(row, col, 1.0);

        for i in 0..n {
            if i == row {
                continue;
            }
            let f = reduced.get(i, col);
            if f != 0.0 {
                reduced.axpy_row(i, row, f);
                transform.axpy_row(i, row, f);
                reduced.set(i, col, 0.0);
            }
        }
        pivot_cols.push(col);
        row += 1;
    }

    for i in row..n {
        for j in 0..p {
            reduced.set(i, j, 0.0);
        }
    }

    RrefResult {
        reduced,
        transform,
        pivot_rank: pivot_cols.len(),
        pivot_cols,
    }
}

/// Column analogue of [`rref_rows`], computed on the transpose so that
/// `a · transform = reduced`.
pub fn rref_cols(a: &Matrix, tol: Tolerance) -> RrefResult {
    let r = rref_rows(&a.transpose(), tol);
    RrefResult {
        reduced: r.reduced.transpose(),
        transform: r.transform.transpose(),
        pivot_cols: r.pivot_cols,
        pivot_rank: r.pivot_rank,
    }
}

/// Number of pivots accepted by [`rref_rows`].
pub fn pivot_rank(a: &Matrix, tol: Tolerance) -> usize {
    rref_rows(a, tol).pivot_rank
}

/// Inverse of a square nonsingular matrix, read off the row-reduction
/// transform.
pub fn invert(a: &Matrix, tol: Tolerance) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::Shape(format!("cannot invert {:?} matrix", a.shape())));
    }
    let r = rref_rows(a, tol);
    if r.pivot_rank < a.n_rows() {
        return Err(Error::Singular);
    }
    Ok(r.transform)
}
