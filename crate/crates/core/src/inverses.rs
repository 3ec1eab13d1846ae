//! One-sided, generalized, reflexive generalized, and Moore–Penrose
//! inverses, plus a classifier based on the four Penrose conditions.
//!
//! For `X` of shape n×p every inverse here is p×n. The conditions are
//!
//! * C1: `X G X = X`
//! * C2: `G X G = G`
//! * C3: `(X G)ᵀ = X G`
//! * C4: `(G X)ᵀ = G X`

use std::fmt;

use crate::error::{Error, Result};
use crate::factorizations::{cr_decompose, svd_full};
use crate::matrix::{invert, pivot_rank, rref_cols, rref_rows, Matrix, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PenroseFlags {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
}

impl PenroseFlags {
    pub fn all(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseClass {
    None,
    GInverse,
    ReflexiveGInverse,
    PseudoInverse,
}

impl InverseClass {
    pub fn from_flags(f: PenroseFlags) -> Self {
        match (f.c1, f.c2) {
            _ if f.all() => InverseClass::PseudoInverse,
            (true, true) => InverseClass::ReflexiveGInverse,
            (true, false) => InverseClass::GInverse,
            (false, _) => InverseClass::None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            InverseClass::None => "none",
            InverseClass::GInverse => "g-inverse",
            InverseClass::ReflexiveGInverse => "reflexive-g-inverse",
            InverseClass::PseudoInverse => "pseudo-inverse",
        }
    }
}

impl fmt::Display for InverseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A candidate inverse with its Penrose flags and residuals.
#[derive(Debug, Clone)]
pub struct InverseReport {
    pub g: Matrix,
    pub flags: PenroseFlags,
    pub class: InverseClass,
    /// `G X = I_p`.
    pub left_inverse: bool,
    /// `X G = I_n`.
    pub right_inverse: bool,
    /// Frobenius residuals of C1..C4.
    pub residuals: [f64; 4],
    /// Absolute threshold the residuals were compared against.
    pub threshold: f64,
}

impl InverseReport {
    /// Class label followed by any one-sided labels.
    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = vec![self.class.label()];
        if self.left_inverse {
            out.push("left-inverse");
        }
        if self.right_inverse {
            out.push("right-inverse");
        }
        out
    }
}

fn check_inverse_shape(x: &Matrix, g: &Matrix, op: &'static str) -> Result<()> {
    if g.shape() != (x.n_cols(), x.n_rows()) {
        return Err(Error::DimensionMismatch {
            op,
            left: x.shape(),
            right: g.shape(),
        });
    }
    Ok(())
}

/// Frobenius residuals of the four Penrose conditions.
pub fn penrose_residuals(x: &Matrix, g: &Matrix) -> Result<[f64; 4]> {
    check_inverse_shape(x, g, "penrose_residuals")?;
    let xg = x.matmul(g)?;
    let gx = g.matmul(x)?;
    Ok([
        xg.matmul(x)?.sub(x)?.frobenius_norm(),
        gx.matmul(g)?.sub(g)?.frobenius_norm(),
        xg.asymmetry()?,
        gx.asymmetry()?,
    ])
}

/// Scale against which Penrose residuals are judged.
pub fn penrose_scale(x: &Matrix, g: &Matrix) -> f64 {
    1f64.max(x.frobenius_norm()).max(g.frobenius_norm())
}

/// Evaluates C1..C4 against `tol.relative · max(1, ‖X‖_F, ‖G‖_F)` and the
/// one-sided identities against the same threshold.
pub fn classify_inverse(x: &Matrix, g: &Matrix, tol: Tolerance) -> Result<InverseReport> {
    check_inverse_shape(x, g, "classify_inverse")?;
    let (n, p) = x.shape();
    let residuals = penrose_residuals(x, g)?;
    let threshold = tol.absolute(penrose_scale(x, g));
    let flags = PenroseFlags {
        c1: residuals[0] <= threshold,
        c2: residuals[1] <= threshold,
        c3: residuals[2] <= threshold,
        c4: residuals[3] <= threshold,
    };
    let left = g.matmul(x)?.sub(&Matrix::identity(p))?.frobenius_norm() <= threshold;
    let right = x.matmul(g)?.sub(&Matrix::identity(n))?.frobenius_norm() <= threshold;
    Ok(InverseReport {
        g: g.clone(),
        flags,
        class: InverseClass::from_flags(flags),
        left_inverse: left,
        right_inverse: right,
        residuals,
        threshold,
    })
}

/// C1 residual of `g` for `x`, failing when it exceeds the validation band
/// `100 · tol · max(1, ‖X‖, ‖G‖)`.
fn require_g_inverse(x: &Matrix, g: &Matrix, tol: Tolerance) -> std::result::Result<(), f64> {
    let r = x.matmul(g).and_then(|xg| xg.matmul(x)).and_then(|xgx| xgx.sub(x));
    match r {
        Ok(d) => {
            let residual = d.frobenius_norm();
            if residual <= tol.band(penrose_scale(x, g)) {
                Ok(())
            } else {
                Err(residual)
            }
        }
        Err(_) => Err(f64::INFINITY),
    }
}

fn require_full_column_rank(x: &Matrix, tol: Tolerance) -> Result<()> {
    let rank = pivot_rank(x, tol);
    if rank < x.n_cols() {
        return Err(Error::RankDeficient {
            rank,
            required: x.n_cols(),
        });
    }
    Ok(())
}

fn require_full_row_rank(x: &Matrix, tol: Tolerance) -> Result<()> {
    let rank = pivot_rank(x, tol);
    if rank < x.n_rows() {
        return Err(Error::RankDeficient {
            rank,
            required: x.n_rows(),
        });
    }
    Ok(())
}

fn invert_full_rank(a: &Matrix, tol: Tolerance, required: usize) -> Result<Matrix> {
    invert(a, tol).map_err(|e| match e {
        Error::Singular => Error::RankDeficient {
            rank: pivot_rank(a, tol),
            required,
        },
        other => other,
    })
}

/// One Newton–Schulz step `G ← G + (I − G X) G` for a left inverse. A no-op
/// in exact arithmetic; in floating point it squares the residual, bringing
/// the error of a Gram-matrix inverse from `eps · κ²` down to about
/// `eps · κ`. The correction is formed from the small residual rather than
/// as `2G − G X G` to avoid cancellation.
fn refine_left(x: &Matrix, g: Matrix) -> Result<Matrix> {
    let residual = Matrix::identity(x.n_cols()).sub(&g.matmul(x)?)?;
    g.add(&residual.matmul(&g)?)
}

/// Right-sided counterpart of [`refine_left`]: `G ← G + G (I − X G)`.
fn refine_right(x: &Matrix, g: Matrix) -> Result<Matrix> {
    let residual = Matrix::identity(x.n_rows()).sub(&x.matmul(&g)?)?;
    g.add(&g.matmul(&residual)?)
}

/// `(XᵀX)⁻¹ Xᵀ` for full column rank `X`.
pub fn left_inverse(x: &Matrix, tol: Tolerance) -> Result<Matrix> {
    require_full_column_rank(x, tol)?;
    let xt = x.transpose();
    let gram_inv = invert_full_rank(&xt.matmul(x)?, tol, x.n_cols())?;
    refine_left(x, gram_inv.matmul(&xt)?)
}

/// `Xᵀ (XXᵀ)⁻¹` for full row rank `X`.
pub fn right_inverse(x: &Matrix, tol: Tolerance) -> Result<Matrix> {
    require_full_row_rank(x, tol)?;
    let xt = x.transpose();
    let gram_inv = invert_full_rank(&x.matmul(&xt)?, tol, x.n_rows())?;
    refine_right(x, xt.matmul(&gram_inv)?)
}

/// Row-reduces `[X | I_n]` to `[I_p G; 0 Z]` and returns `G`.
pub fn left_inverse_elementary(x: &Matrix, tol: Tolerance) -> Result<Matrix> {
    require_full_column_rank(x, tol)?;
    let (n, p) = x.shape();
    Ok(rref_rows(x, tol).transform.block(0, p, 0, n))
}

/// Column-reduces `[X; I_p]` to `[I_n 0; G Z]` and returns `G`.
pub fn right_inverse_elementary(x: &Matrix, tol: Tolerance) -> Result<Matrix> {
    require_full_row_rank(x, tol)?;
    let (n, p) = x.shape();
    Ok(rref_cols(x, tol).transform.block(0, p, 0, n))
}

/// The left-inverse family `[X₁⁻¹ − Y X₂ X₁⁻¹ | Y] · E`, where `E X = [X₁; X₂]`
/// comes from row reduction and `Y` is any p×(n−p) matrix.
pub fn left_inverse_family(x: &Matrix, y_param: &Matrix, tol: Tolerance) -> Result<Matrix> {
    let (n, p) = x.shape();
    require_full_column_rank(x, tol)?;
    if y_param.shape() != (p, n - p) {
        return Err(Error::Shape(format!(
            "left-inverse parameter must be {p}x{}, got {:?}",
            n - p,
            y_param.shape()
        )));
    }
    let e = rref_rows(x, tol).transform;
    let ex = e.matmul(x)?;
    let x1 = ex.block(0, p, 0, p);
    let x2 = ex.block(p, n, 0, p);
    let x1_inv = invert_full_rank(&x1, tol, p)?;
    let head = x1_inv.sub(&y_param.matmul(&x2)?.matmul(&x1_inv)?)?;
    head.hstack(y_param)?.matmul(&e)
}

/// The right-inverse family `E · [X₁⁻¹ − X₁⁻¹ X₂ Y; Y]`, where
/// `X E = [X₁ X₂]` comes from column reduction and `Y` is any (p−n)×n matrix.
pub fn right_inverse_family(x: &Matrix, y_param: &Matrix, tol: Tolerance) -> Result<Matrix> {
    let (n, p) = x.shape();
    require_full_row_rank(x, tol)?;
    if y_param.shape() != (p - n, n) {
        return Err(Error::Shape(format!(
            "right-inverse parameter must be {}x{n}, got {:?}",
            p - n,
            y_param.shape()
        )));
    }
    let e = rref_cols(x, tol).transform;
    let xe = x.matmul(&e)?;
    let x1 = xe.block(0, n, 0, n);
    let x2 = xe.block(0, n, n, p);
    let x1_inv = invert_full_rank(&x1, tol, n)?;
    let head = x1_inv.sub(&x1_inv.matmul(&x2)?.matmul(y_param)?)?;
    e.matmul(&head.vstack(y_param)?)
}

/// Two-sided reduction `T₁ · X · T₂ = [I_r 0; 0 0]` with both transforms
/// nonsingular.
#[derive(Debug, Clone)]
pub struct CanonicalFactors {
    /// n×n row transform (`E₁⁻¹` in `X = E₁ [I_r 0; 0 0] E₂`).
    pub row_transform: Matrix,
    /// p×p column transform (`E₂⁻¹`).
    pub col_transform: Matrix,
    pub rank: usize,
}

/// Row-reduces `X`, then column-reduces the echelon form.
pub fn canonical_factors(x: &Matrix, tol: Tolerance) -> CanonicalFactors {
    let rows = rref_rows(x, tol);
    let cols = rref_cols(&rows.reduced, tol);
    CanonicalFactors {
        row_transform: rows.transform,
        col_transform: cols.transform,
        rank: rows.pivot_rank,
    }
}

/// `E₂⁻¹ · [I_r A; B BA] · E₁⁻¹` for given factors. `None` parameters are
/// taken as zero blocks.
pub fn rg_from_factors(
    factors: &CanonicalFactors,
    a_param: Option<&Matrix>,
    b_param: Option<&Matrix>,
) -> Result<Matrix> {
    let n = factors.row_transform.n_rows();
    let p = factors.col_transform.n_rows();
    let r = factors.rank;
    let a = match a_param {
        Some(a) if a.shape() != (r, n - r) => {
            return Err(Error::Shape(format!(
                "A must be {r}x{}, got {:?}",
                n - r,
                a.shape()
            )))
        }
        Some(a) => a.clone(),
        None => Matrix::zeros(r, n - r),
    };
    let b = match b_param {
        Some(b) if b.shape() != (p - r, r) => {
            return Err(Error::Shape(format!(
                "B must be {}x{r}, got {:?}",
                p - r,
                b.shape()
            )))
        }
        Some(b) => b.clone(),
        None => Matrix::zeros(p - r, r),
    };
    let top = Matrix::identity(r).hstack(&a)?;
    let bottom = b.hstack(&b.matmul(&a)?)?;
    let middle = top.vstack(&bottom)?;
    factors
        .col_transform
        .matmul(&middle)?
        .matmul(&factors.row_transform)
}

/// Reflexive g-inverse from the two-sided elementary reduction of `X`.
/// `a_param` is r×(n−r) and `b_param` is (p−r)×r; `None` means zero.
pub fn rg_canonical(
    x: &Matrix,
    a_param: Option<&Matrix>,
    b_param: Option<&Matrix>,
    tol: Tolerance,
) -> Result<Matrix> {
    rg_from_factors(&canonical_factors(x, tol), a_param, b_param)
}

/// `G + A − G X A X G`, another g-inverse of `X` for any p×n `A`.
pub fn ginverse_extend(x: &Matrix, g: &Matrix, a_param: &Matrix, tol: Tolerance) -> Result<Matrix> {
    check_inverse_shape(x, g, "ginverse_extend")?;
    check_inverse_shape(x, a_param, "ginverse_extend")?;
    require_g_inverse(x, g, tol).map_err(|residual| Error::NotGInverse { residual })?;
    let gxaxg = g.matmul(x)?.matmul(a_param)?.matmul(x)?.matmul(g)?;
    g.add(a_param)?.sub(&gxaxg)
}

/// `G₁ X G₂` for two g-inverses; always reflexive.
pub fn rg_sandwich(x: &Matrix, g1: &Matrix, g2: &Matrix, tol: Tolerance) -> Result<Matrix> {
    check_inverse_shape(x, g1, "rg_sandwich")?;
    check_inverse_shape(x, g2, "rg_sandwich")?;
    for g in [g1, g2] {
        require_g_inverse(x, g, tol).map_err(|residual| Error::NotGInverse { residual })?;
    }
    g1.matmul(x)?.matmul(g2)
}

/// `(XᵀX)⁻ Xᵀ` for a g-inverse `(XᵀX)⁻` of the Gram matrix.
pub fn rg_via_gram(x: &Matrix, gram_ginv: &Matrix, tol: Tolerance) -> Result<Matrix> {
    let xt = x.transpose();
    let gram = xt.matmul(x)?;
    check_inverse_shape(&gram, gram_ginv, "rg_via_gram")?;
    require_g_inverse(&gram, gram_ginv, tol).map_err(|residual| Error::NotGramGInverse { residual })?;
    gram_ginv.matmul(&xt)
}

/// `X⁺ = V Σ⁺ Uᵀ` from the full SVD.
pub fn pinv_svd(x: &Matrix, tol: Tolerance) -> Result<Matrix> {
    let svd = svd_full(x, tol)?;
    svd.v
        .matmul(&svd.sigma_pinv())?
        .matmul(&svd.u.transpose())
}

/// `X⁺ = Rᵀ (R Rᵀ)⁻¹ (CᵀC)⁻¹ Cᵀ` from the CR decomposition.
pub fn pinv_cr(x: &Matrix, tol: Tolerance) -> Result<Matrix> {
    let (n, p) = x.shape();
    let cr = cr_decompose(x, tol);
    if cr.rank == 0 {
        return Ok(Matrix::zeros(p, n));
    }
    // both factors have full rank r, so their pseudo-inverses are the
    // normal-equation one-sided inverses
    let r_pinv = right_inverse(&cr.r_factor, tol)?;
    let c_pinv = left_inverse(&cr.c, tol)?;
    r_pinv.matmul(&c_pinv)
}
