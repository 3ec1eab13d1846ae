//! Argument grammar and dispatch to the library.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fourspace::{
    classify_inverse, consistent_unique_solve, cr_decompose, fundamental_bases, left_inverse,
    left_inverse_elementary, left_inverse_family, ls_normal, ls_svd_minnorm, matrix::dot, pinv_cr,
    pinv_svd, pivot_rank, projector_column, projector_diagnostics, projector_row, rg_canonical,
    right_inverse, right_inverse_elementary, right_inverse_family, right_solve, svd_full, svd_reduced,
    InverseReport, LsSolution, Matrix, Tolerance,
};
use thiserror::Error;

use crate::input::{parse_matrix, parse_vector, Format, InputError};
use crate::report::{ErrorInfo, Field, Report};

#[derive(Debug, Parser)]
#[command(name = "fourspace", version, about = "Four fundamental subspaces, SVD and generalized inverses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Matrix file.
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// File format; inferred from the extension when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Relative tolerance, in (0, 1).
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Emit a JSON document instead of a text table.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pivot rank and singular-value count.
    Rank,
    /// Singular value decomposition.
    Svd {
        #[arg(long)]
        reduced: bool,
    },
    /// Column-row factorization X = C R.
    Cr,
    /// Orthonormal bases of the four fundamental subspaces.
    Subspaces,
    /// Moore-Penrose pseudo-inverse.
    Pinv {
        #[arg(long, value_enum, default_value_t = PinvMethod::Svd)]
        method: PinvMethod,
    },
    /// Reflexive g-inverse from the canonical reduction.
    Ginv {
        #[arg(long, value_name = "FILE")]
        a: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        b: Option<PathBuf>,
    },
    /// Left inverse of a full-column-rank matrix.
    Leftinv(OneSided),
    /// Right inverse of a full-row-rank matrix.
    Rightinv(OneSided),
    /// Penrose flags of a candidate inverse.
    Classify {
        #[arg(long, value_name = "FILE")]
        g: PathBuf,
    },
    /// Least squares and exact solves.
    Solve {
        #[arg(long, value_enum, default_value_t = SolveMethod::Svd)]
        method: SolveMethod,
        #[arg(long, value_name = "FILE")]
        y: PathBuf,
    },
    /// Orthogonal projector onto the column or row space.
    Project {
        #[arg(long, value_enum, default_value_t = Side::Col)]
        side: Side,
    },
    /// Rank, subspaces, pseudo-inverse and its Penrose check.
    Report,
}

#[derive(Debug, Args)]
pub struct OneSided {
    #[arg(long, value_enum, default_value_t = OneSidedMethod::Normal)]
    pub method: OneSidedMethod,
    /// Free parameter of the family; zero when omitted.
    #[arg(long, value_name = "FILE")]
    pub y: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PinvMethod {
    Svd,
    Cr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OneSidedMethod {
    Normal,
    Elementary,
    Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Normal,
    Svd,
    Unique,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Col,
    Row,
}

/// Bad invocation; exit status 2 (or 0 for `--help` / `--version`).
#[derive(Debug, Error)]
pub enum UsageError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error("{0}")]
    Invalid(String),
}

impl UsageError {
    pub fn exit_code(&self) -> i32 {
        match self {
            UsageError::Clap(e) => e.exit_code(),
            UsageError::Invalid(_) => 2,
        }
    }
}

/// A finished command together with where its report should go.
#[derive(Debug)]
pub struct Invocation {
    pub report: Report,
    pub json: bool,
    pub out: Option<PathBuf>,
}

/// Domain failures; they end up in the report.
#[derive(Debug, Error)]
enum Failure {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Lib(#[from] fourspace::Error),
}

impl Failure {
    fn info(&self) -> ErrorInfo {
        let name = match self {
            Failure::Input(e) => e.name(),
            Failure::Lib(e) => e.name(),
        };
        ErrorInfo {
            name: name.to_string(),
            message: self.to_string(),
        }
    }
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> Result<Report, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    invoke(argv).map(|inv| inv.report)
}

pub fn invoke<I, T>(argv: I) -> Result<Invocation, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = std::iter::once(OsString::from("fourspace")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args)?;
    execute(cli)
}

pub fn execute(cli: Cli) -> Result<Invocation, UsageError> {
    let g = &cli.global;
    let tol = Tolerance::new(g.tol)
        .map_err(|_| UsageError::Invalid(format!("--tol must lie in (0, 1), got {}", g.tol)))?;
    let input = g
        .input
        .clone()
        .ok_or_else(|| UsageError::Invalid("--input FILE is required".into()))?;

    let ctx = Context { format: g.format, tol };
    let mut report = Report::new(command_name(&cli.command), tol.relative());
    let outcome = ctx
        .matrix(&input)
        .map_err(Failure::from)
        .and_then(|x| {
            report.input_shape = Some(x.shape());
            ctx.dispatch(&cli.command, &x, &mut report)
        });
    if let Err(e) = outcome {
        report.payload.clear();
        report.residuals.clear();
        report.error = Some(e.info());
    }
    Ok(Invocation {
        report,
        json: g.json,
        out: g.out.clone(),
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Rank => "rank",
        Command::Svd { .. } => "svd",
        Command::Cr => "cr",
        Command::Subspaces => "subspaces",
        Command::Pinv { .. } => "pinv",
        Command::Ginv { .. } => "ginv",
        Command::Leftinv(_) => "leftinv",
        Command::Rightinv(_) => "rightinv",
        Command::Classify { .. } => "classify",
        Command::Solve { .. } => "solve",
        Command::Project { .. } => "project",
        Command::Report => "report",
    }
}

fn basis(vs: Vec<Vec<f64>>) -> Field {
    Field::Basis(vs)
}

fn max_cross_dot(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .flat_map(|u| b.iter().map(move |v| dot(u, v).abs()))
        .fold(0.0, f64::max)
}

fn orthonormality_residual(q: &Matrix) -> Result<f64, fourspace::Error> {
    Ok(q.transpose()
        .matmul(q)?
        .sub(&Matrix::identity(q.n_cols()))?
        .frobenius_norm())
}

fn put_inverse(report: &mut Report, ir: &InverseReport) {
    report.put("g", Field::Matrix(ir.g.clone()));
    report.put(
        "flags",
        Field::Group(vec![
            ("c1".into(), Field::Flag(ir.flags.c1)),
            ("c2".into(), Field::Flag(ir.flags.c2)),
            ("c3".into(), Field::Flag(ir.flags.c3)),
            ("c4".into(), Field::Flag(ir.flags.c4)),
        ]),
    );
    report.put("class", Field::Text(ir.class.label().into()));
    report.put("left_inverse", Field::Flag(ir.left_inverse));
    report.put("right_inverse", Field::Flag(ir.right_inverse));
    report.put("threshold", Field::Real(ir.threshold));
    for (k, r) in ["c1", "c2", "c3", "c4"].iter().zip(ir.residuals) {
        report.residual(k, r);
    }
}

fn put_solution(report: &mut Report, x: &Matrix, sol: &LsSolution) -> Result<(), fourspace::Error> {
    report.put("method", Field::Text(sol.method.label().into()));
    report.put("beta_hat", Field::Vector(sol.beta_hat.clone()));
    report.put("y_hat", Field::Vector(sol.y_hat.clone()));
    report.put("residual", Field::Vector(sol.residual.clone()));
    report.put("rank_used", Field::Count(sol.rank_used));
    let xte = x.transpose().matvec(&sol.residual)?;
    report.residual("residual_norm", sol.residual_norm);
    report.residual("normal_equations", fourspace::matrix::norm(&xte));
    Ok(())
}

struct Context {
    format: Option<Format>,
    tol: Tolerance,
}

impl Context {
    fn format_for(&self, path: &Path) -> Format {
        self.format.unwrap_or_else(|| Format::infer(path))
    }

    fn matrix(&self, path: &Path) -> Result<Matrix, InputError> {
        parse_matrix(path, self.format_for(path))
    }

    fn vector(&self, path: &Path) -> Result<Vec<f64>, InputError> {
        parse_vector(path, self.format_for(path))
    }

    fn optional(&self, path: &Option<PathBuf>) -> Result<Option<Matrix>, InputError> {
        path.as_deref().map(|p| self.matrix(p)).transpose()
    }

    fn dispatch(&self, command: &Command, x: &Matrix, report: &mut Report) -> Result<(), Failure> {
        let tol = self.tol;
        match command {
            Command::Rank => {
                report.put("rank", Field::Count(pivot_rank(x, tol)));
                let svd = svd_reduced(x, tol)?;
                report.put("singular_values", Field::Vector(svd.sigma));
                report.put("gram_rank", Field::Count(pivot_rank(&x.transpose().matmul(x)?, tol)));
            }
            Command::Svd { reduced } => {
                let svd = if *reduced { svd_reduced(x, tol)? } else { svd_full(x, tol)? };
                report.put("rank", Field::Count(svd.rank));
                report.put("sigma", Field::Vector(svd.sigma.clone()));
                report.put("u", Field::Matrix(svd.u.clone()));
                report.put("v", Field::Matrix(svd.v.clone()));
                report.residual("reconstruction", x.sub(&svd.reconstruct())?.frobenius_norm());
                report.residual("u_orthonormality", orthonormality_residual(&svd.u)?);
                report.residual("v_orthonormality", orthonormality_residual(&svd.v)?);
            }
            Command::Cr => {
                let cr = cr_decompose(x, tol);
                report.put("rank", Field::Count(cr.rank));
                report.put("c", Field::Matrix(cr.c.clone()));
                report.put("r", Field::Matrix(cr.r_factor.clone()));
                let product = cr.c.matmul(&cr.r_factor)?;
                report.residual("reconstruction", x.sub(&product)?.frobenius_norm());
            }
            Command::Subspaces => {
                let b = fundamental_bases(x, tol)?;
                report.put("rank", Field::Count(b.rank()));
                report.residual("row_null_dot", max_cross_dot(&b.row_space, &b.null_space));
                report.residual("col_left_null_dot", max_cross_dot(&b.column_space, &b.left_null_space));
                report.put("row_space", basis(b.row_space));
                report.put("null_space", basis(b.null_space));
                report.put("column_space", basis(b.column_space));
                report.put("left_null_space", basis(b.left_null_space));
            }
            Command::Pinv { method } => {
                let g = match method {
                    PinvMethod::Svd => pinv_svd(x, tol)?,
                    PinvMethod::Cr => pinv_cr(x, tol)?,
                };
                put_inverse(report, &classify_inverse(x, &g, tol)?);
            }
            Command::Ginv { a, b } => {
                let (a, b) = (self.optional(a)?, self.optional(b)?);
                let g = rg_canonical(x, a.as_ref(), b.as_ref(), tol)?;
                put_inverse(report, &classify_inverse(x, &g, tol)?);
            }
            Command::Leftinv(args) => {
                let (n, p) = x.shape();
                let g = match args.method {
                    OneSidedMethod::Normal => left_inverse(x, tol)?,
                    OneSidedMethod::Elementary => left_inverse_elementary(x, tol)?,
                    OneSidedMethod::Family => {
                        let y = self.optional(&args.y)?.unwrap_or_else(|| Matrix::zeros(p, n.saturating_sub(p)));
                        left_inverse_family(x, &y, tol)?
                    }
                };
                let gap = g.matmul(x)?.sub(&Matrix::identity(p))?.frobenius_norm();
                put_inverse(report, &classify_inverse(x, &g, tol)?);
                report.residual("one_sided", gap);
            }
            Command::Rightinv(args) => {
                let (n, p) = x.shape();
                let g = match args.method {
                    OneSidedMethod::Normal => right_inverse(x, tol)?,
                    OneSidedMethod::Elementary => right_inverse_elementary(x, tol)?,
                    OneSidedMethod::Family => {
                        let y = self.optional(&args.y)?.unwrap_or_else(|| Matrix::zeros(p.saturating_sub(n), n));
                        right_inverse_family(x, &y, tol)?
                    }
                };
                let gap = x.matmul(&g)?.sub(&Matrix::identity(n))?.frobenius_norm();
                put_inverse(report, &classify_inverse(x, &g, tol)?);
                report.residual("one_sided", gap);
            }
            Command::Classify { g } => {
                let g = self.matrix(g)?;
                let ir = classify_inverse(x, &g, tol)?;
                put_inverse(report, &ir);
                let labels = ir.labels().join(", ");
                report.put("labels", Field::Text(labels));
            }
            Command::Solve { method, y } => {
                let y = self.vector(y)?;
                let sol = match method {
                    SolveMethod::Normal => ls_normal(x, &y, tol)?,
                    SolveMethod::Svd => ls_svd_minnorm(x, &y, tol)?,
                    SolveMethod::Unique => consistent_unique_solve(x, &y, tol)?,
                    SolveMethod::Right => right_solve(x, &y, tol)?,
                };
                put_solution(report, x, &sol)?;
            }
            Command::Project { side } => {
                let p = match side {
                    Side::Col => projector_column(x, tol)?,
                    Side::Row => projector_row(x, tol)?,
                };
                let d = projector_diagnostics(&p, tol)?;
                report.put("side", Field::Text(if *side == Side::Col { "col" } else { "row" }.into()));
                report.put("projector", Field::Matrix(p));
                report.put("idempotent", Field::Flag(d.idempotent));
                report.put("symmetric", Field::Flag(d.symmetric));
                report.put("trace", Field::Real(d.trace));
                report.put("rank", Field::Count(d.rank));
                report.put("spectrum_binary", d.spectrum_binary.map_or(Field::Null, Field::Flag));
                report.put("eigenvalues", d.eigenvalues.map_or(Field::Null, Field::Vector));
                report.residual("idempotence", d.idempotent_residual);
                report.residual("symmetry", d.symmetry_residual);
            }
            Command::Report => {
                let (n, p) = x.shape();
                let b = fundamental_bases(x, tol)?;
                let r = b.rank();
                report.put("rank", Field::Count(r));
                report.put("pivot_rank", Field::Count(pivot_rank(x, tol)));
                report.put(
                    "dimensions",
                    Field::Group(vec![
                        ("row_space".into(), Field::Count(r)),
                        ("null_space".into(), Field::Count(p - r)),
                        ("column_space".into(), Field::Count(r)),
                        ("left_null_space".into(), Field::Count(n - r)),
                    ]),
                );
                report.put("row_space", basis(b.row_space));
                report.put("null_space", basis(b.null_space));
                report.put("column_space", basis(b.column_space));
                report.put("left_null_space", basis(b.left_null_space));
                let g = pinv_svd(x, tol)?;
                put_inverse(report, &classify_inverse(x, &g, tol)?);
            }
        }
        Ok(())
    }
}
