//! Hand-derived example values. Each is recomputed by the oracle, checked
//! against the stated value, and then the library is checked against the
//! oracle, all to 1e-10.


use fourspace::*;
use oracle::{col, eye, flat, m, mul, normalize, outer_sum, t, M};

use super::Outcome;

const TOL: f64 = 1e-10;

struct Fixtures {
    out: Outcome,
    count: u64,
}

fn rows(a: &Matrix) -> M {
    a.to_rows()
}

fn lib(a: &M) -> Matrix {
    Matrix::from_rows(a).unwrap()
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

impl Fixtures {
    /// `literal` is the hand value, `oracle` its recomputation, `got` the
    /// library output.
    fn values(&mut self, name: &str, got: &[f64], oracle: &[f64], literal: &[f64]) {
        self.count += 1;
        let d_oracle = max_dev(oracle, literal);
        let d_lib = max_dev(got, oracle);
        self.out.gate(self.count, "max deviation", d_oracle.max(d_lib), TOL);
        self.out.check(
            self.count,
            &format!("{name}: oracle {oracle:?} vs stated {literal:?}"),
            d_oracle <= TOL,
        );
        self.out.check(
            self.count,
            &format!("{name}: library {got:?} vs oracle {oracle:?}"),
            d_lib <= TOL,
        );
    }

    fn matrix(&mut self, name: &str, got: &Matrix, oracle: &M, literal: &M) {
        let shape_ok = got.shape() == (oracle.len(), oracle.first().map_or(0, |r| r.len()));
        self.out.check(self.count + 1, &format!("{name}: shape {:?}", got.shape()), shape_ok);
        self.values(name, got.data(), &flat(oracle), &flat(literal));
    }

    fn scalar(&mut self, name: &str, got: f64, oracle: f64, literal: f64) {
        self.values(name, &[got], &[oracle], &[literal]);
    }

    fn same<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, oracle: T, literal: T) {
        self.count += 1;
        self.out.check(
            self.count,
            &format!("{name}: oracle {oracle:?} vs stated {literal:?}"),
            oracle == literal,
        );
        self.out.check(
            self.count,
            &format!("{name}: library {got:?} vs oracle {oracle:?}"),
            got == oracle,
        );
    }

    /// `a` and `b` span the same line or plane: compare projectors.
    fn span(&mut self, name: &str, got: &[Vec<f64>], oracle: &[Vec<f64>], literal: &[Vec<f64>]) {
        self.matrix(name, &lib(&outer_sum(got)), &outer_sum(oracle), &outer_sum(literal));
    }
}

fn tol() -> Tolerance {
    Tolerance::default()
}

pub fn run() -> Outcome {
    let mut f = Fixtures {
        out: Outcome::new(),
        count: 0,
    };
    matrix_core(&mut f);
    spectral(&mut f);
    factorizations(&mut f);
    subspaces(&mut f);
    one_sided(&mut f);
    reflexive(&mut f);
    pseudo(&mut f);
    solve(&mut f);
    f.out
}

fn matrix_core(f: &mut Fixtures) {
    let a = m(&[&[3.0, 4.0]]);
    let oracle = oracle::fro(&a);
    f.scalar("frobenius [[3,4]]", lib(&a).frobenius_norm(), oracle, 5.0);

    let x = m(&[&[1.0, 2.0], &[2.0, 4.0]]);
    let b = col(&[1.0, 2.0]);
    let got = lib(&x).matmul(&lib(&b)).unwrap();
    f.matrix("matmul", &got, &mul(&x, &b), &col(&[5.0, 10.0]));

    let (reduced, _, pivots) = oracle::gauss_jordan(&x);
    let r = rref_rows(&lib(&x), tol());
    f.matrix("rref_rows reduced", &r.reduced, &reduced, &m(&[&[1.0, 2.0], &[0.0, 0.0]]));
    f.same("rref_rows pivots", r.pivot_cols.clone(), pivots.clone(), vec![0]);
    f.same("rref_rows rank", r.pivot_rank, pivots.len(), 1);

    let (reduced_t, _, _) = oracle::gauss_jordan(&t(&x));
    let c = rref_cols(&lib(&x), tol());
    f.matrix("rref_cols reduced", &c.reduced, &t(&reduced_t), &m(&[&[1.0, 0.0], &[2.0, 0.0]]));

    f.same("pivot_rank", pivot_rank(&lib(&x), tol()), oracle::rank_small(&x), 1);
}

fn spectral(f: &mut Fixtures) {
    let s = m(&[&[2.0, 1.0], &[1.0, 2.0]]);
    let (lambda, vecs) = oracle::eig2(&s);
    let e = eig_symmetric(&lib(&s), tol()).unwrap();
    f.values("eig lambda", &e.lambda, &lambda, &[3.0, 1.0]);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    f.values("eig q1", &e.q.column(0), &vecs[0], &[h, h]);
    f.values("eig q2", &e.q.column(1), &vecs[1], &[h, -h]);

    // diag(1,2) conjugated by a quarter turn
    let a = m(&[&[1.0, 0.0], &[0.0, 2.0]]);
    let p = m(&[&[0.0, -1.0], &[1.0, 0.0]]);
    let b = mul(&mul(&p, &a), &oracle::inv_small(&p));
    let (la, _) = oracle::eig2(&a);
    let (lb, _) = oracle::eig2(&b);
    let oracle_flags = (
        la == lb,
        oracle::rank_small(&a) == oracle::rank_small(&b),
        (a[0][0] + a[1][1]) == (b[0][0] + b[1][1]),
    );
    let r = similarity_check(&lib(&a), &lib(&p), tol()).unwrap();
    f.same(
        "similarity flags",
        (r.eigs_match == Some(true), r.rank_match, r.trace_match),
        oracle_flags,
        (true, true, true),
    );
}

fn factorizations(f: &mut Fixtures) {
    let s5 = 5f64.sqrt();
    let x = m(&[&[1.0, 2.0], &[2.0, 4.0]]);
    // X = a bᵀ with a = b = (1,2): σ = ‖a‖‖b‖, u = a/‖a‖, v = b/‖b‖
    let ab = [1.0, 2.0];
    let sigma = ab.iter().map(|z| z * z).sum::<f64>();
    let unit = normalize(&ab);
    for (name, svd) in [
        ("svd_full", svd_full(&lib(&x), tol()).unwrap()),
        ("svd_reduced", svd_reduced(&lib(&x), tol()).unwrap()),
    ] {
        f.values(&format!("{name} sigma"), &svd.sigma, &[sigma], &[5.0]);
        f.values(&format!("{name} u1"), &svd.u.column(0), &unit, &[1.0 / s5, 2.0 / s5]);
        f.values(&format!("{name} v1"), &svd.v.column(0), &unit, &[1.0 / s5, 2.0 / s5]);
    }

    let x = m(&[&[1.0], &[1.0]]);
    let gram = mul(&t(&x), &x)[0][0];
    let svd = svd_reduced(&lib(&x), tol()).unwrap();
    let s2 = 2f64.sqrt();
    f.values("svd_reduced [[1],[1]] sigma", &svd.sigma, &[gram.sqrt()], &[s2]);
    f.values("svd_reduced [[1],[1]] u", &svd.u.column(0), &[1.0 / gram.sqrt(); 2], &[1.0 / s2; 2]);
    f.values("svd_reduced [[1],[1]] v", &svd.v.column(0), &[1.0], &[1.0]);

    for (x, c_lit, r_lit) in [
        (
            m(&[&[1.0, 2.0], &[2.0, 4.0]]),
            col(&[1.0, 2.0]),
            m(&[&[1.0, 2.0]]),
        ),
        (
            m(&[&[1.0, 0.0, 2.0], &[0.0, 1.0, 3.0]]),
            eye(2),
            m(&[&[1.0, 0.0, 2.0], &[0.0, 1.0, 3.0]]),
        ),
    ] {
        let (reduced, _, pivots) = oracle::gauss_jordan(&x);
        let c_oracle: M = x.iter().map(|row| pivots.iter().map(|&j| row[j]).collect()).collect();
        let r_oracle: M = reduced[..pivots.len()].to_vec();
        let cr = cr_decompose(&lib(&x), tol());
        f.matrix("cr c", &cr.c, &c_oracle, &c_lit);
        f.matrix("cr r", &cr.r_factor, &r_oracle, &r_lit);
    }
}

fn subspaces(f: &mut Fixtures) {
    let s5 = 5f64.sqrt();
    let x = m(&[&[1.0, 2.0], &[2.0, 4.0]]);
    // rank one: every nonzero row spans the row space, every nonzero
    // column the column space; the null spaces are their perpendiculars
    let row = normalize(&x[0]);
    let column = normalize(&t(&x)[0]);
    let perp = |v: &[f64]| vec![v[1], -v[0]];
    let b = fundamental_bases(&lib(&x), tol()).unwrap();
    f.values("row space", &b.row_space.concat(), &row, &[1.0 / s5, 2.0 / s5]);
    f.values("column space", &b.column_space.concat(), &column, &[1.0 / s5, 2.0 / s5]);
    let null_lit = vec![vec![2.0 / s5, -1.0 / s5]];
    f.span("null space", &b.null_space, &[perp(&row)], &null_lit);
    f.span("left null space", &b.left_null_space, &[perp(&column)], &null_lit);

    let got = column_basis_from_row_basis(&lib(&x), &[vec![1.0, 2.0]], tol()).unwrap();
    f.values("column basis from row basis", &got.concat(), &flat(&mul(&x, &col(&[1.0, 2.0]))), &[5.0, 10.0]);
    let x2 = m(&[&[0.0, 1.0], &[0.0, 0.0]]);
    let got = column_basis_from_row_basis(&lib(&x2), &[vec![0.0, 1.0]], tol()).unwrap();
    f.values("column basis, nilpotent", &got.concat(), &flat(&mul(&x2, &col(&[0.0, 1.0]))), &[1.0, 0.0]);

    let rn = rank_nullity_report(&lib(&x), tol()).unwrap();
    let r = oracle::rank_small(&x);
    f.same("rank-nullity", (rn.r, rn.dim_null, rn.dim_left_null), (r, 2 - r, 2 - r), (1, 1, 1));

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let rotated = vec![vec![h, h], vec![h, -h]];
    let standard = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
    let oracle_eq = oracle::fro(&oracle::sub(&outer_sum(&rotated), &outer_sum(&standard))) <= 1e-12;
    f.same("subspaces_equal", subspaces_equal(&rotated, &standard, tol()).unwrap(), oracle_eq, true);
}

fn one_sided(f: &mut Fixtures) {
    let tall = m(&[&[1.0], &[1.0]]);
    let wide = t(&tall);
    let normal_left = mul(&oracle::inv_small(&mul(&t(&tall), &tall)), &t(&tall));
    let normal_right = mul(&t(&wide), &oracle::inv_small(&mul(&wide, &t(&wide))));
    f.matrix("left_inverse", &left_inverse(&lib(&tall), tol()).unwrap(), &normal_left, &m(&[&[0.5, 0.5]]));
    f.matrix("right_inverse", &right_inverse(&lib(&wide), tol()).unwrap(), &normal_right, &col(&[0.5, 0.5]));

    // the top block of the transform of [X | I] is the left inverse
    for (x, lit) in [
        (m(&[&[1.0], &[1.0]]), m(&[&[1.0, 0.0]])),
        (m(&[&[2.0], &[0.0]]), m(&[&[0.5, 0.0]])),
    ] {
        let (_, transform, _) = oracle::gauss_jordan(&x);
        let oracle_g = vec![transform[0].clone()];
        f.matrix("left_inverse_elementary", &left_inverse_elementary(&lib(&x), tol()).unwrap(), &oracle_g, &lit);
        let xt = t(&x);
        f.matrix(
            "right_inverse_elementary",
            &right_inverse_elementary(&lib(&xt), tol()).unwrap(),
            &t(&oracle_g),
            &t(&lit),
        );
    }

    // reducing [[1],[1]] without pivoting gives E = [[1,0],[-1,1]], EX = [[1],[0]],
    // so the family is [1 - y·0·1 | y]·E = [1 - y, y]
    let e = m(&[&[1.0, 0.0], &[-1.0, 1.0]]);
    for (y, lit) in [(0.5, [0.5, 0.5]), (1.0, [0.0, 1.0])] {
        let ex = mul(&e, &tall);
        let x1_inv = 1.0 / ex[0][0];
        let head = x1_inv - y * ex[1][0] * x1_inv;
        let oracle_g = mul(&m(&[&[head, y]]), &e);
        let got = left_inverse_family(&lib(&tall), &lib(&m(&[&[y]])), tol()).unwrap();
        f.matrix("left_inverse_family", &got, &oracle_g, &m(&[&lit]));
        let got = right_inverse_family(&lib(&wide), &lib(&m(&[&[y]])), tol()).unwrap();
        f.matrix("right_inverse_family", &got, &t(&oracle_g), &col(&lit));
    }
}

fn reflexive(f: &mut Fixtures) {
    // two-sided reduction of [[1,2],[2,4]] without pivoting:
    // F₁ X F₂ = diag(1, 0) and G = F₂ [I_r A; B BA] F₁
    let x = m(&[&[1.0, 2.0], &[2.0, 4.0]]);
    let f1 = m(&[&[1.0, 0.0], &[-2.0, 1.0]]);
    let f2 = m(&[&[1.0, -2.0], &[0.0, 1.0]]);
    let reduced = mul(&mul(&f1, &x), &f2);
    f.matrix("two-sided reduction", &lib(&reduced), &reduced, &m(&[&[1.0, 0.0], &[0.0, 0.0]]));
    let middle = m(&[&[1.0, 0.0], &[0.0, 0.0]]);
    let oracle_g = mul(&mul(&f2, &middle), &f1);
    let factors = CanonicalFactors {
        row_transform: lib(&f1),
        col_transform: lib(&f2),
        rank: 1,
    };
    let zero = lib(&m(&[&[0.0]]));
    let got = rg_from_factors(&factors, Some(&zero), Some(&zero)).unwrap();
    f.matrix("rg from unpivoted factors", &got, &oracle_g, &m(&[&[1.0, 0.0], &[0.0, 0.0]]));

    // the pivoted reduction yields a different reflexive inverse; check C1, C2
    let pivoted = rg_canonical(&lib(&x), Some(&zero), Some(&zero), tol()).unwrap();
    let res = oracle::penrose(&x, &rows(&pivoted));
    f.values("rg_canonical pivoted C1, C2", &res[..2], &[0.0, 0.0], &[0.0, 0.0]);

    let tall = m(&[&[1.0], &[1.0]]);
    let e1_inv = m(&[&[1.0, 0.0], &[-1.0, 1.0]]);
    let oracle_g = mul(&m(&[&[1.0, 0.0]]), &e1_inv);
    let got = rg_canonical(&lib(&tall), Some(&zero), None, tol()).unwrap();
    f.matrix("rg_canonical [[1],[1]]", &got, &oracle_g, &m(&[&[1.0, 0.0]]));

    let x = m(&[&[1.0, 0.0], &[0.0, 0.0]]);
    let a = m(&[&[0.0, 0.0], &[0.0, 1.0]]);
    let oracle_g = oracle::sub(&oracle::add(&x, &a), &mul(&mul(&mul(&mul(&x, &x), &a), &x), &x));
    let got = ginverse_extend(&lib(&x), &lib(&x), &lib(&a), tol()).unwrap();
    f.matrix("ginverse_extend", &got, &oracle_g, &eye(2));
    f.scalar("ginverse_extend C1", oracle::penrose(&x, &rows(&got))[0], oracle::penrose(&x, &oracle_g)[0], 0.0);

    let g2 = m(&[&[1.0, 1.0], &[0.0, 0.0]]);
    let oracle_z = mul(&mul(&eye(2), &x), &g2);
    let got = rg_sandwich(&lib(&x), &lib(&eye(2)), &lib(&g2), tol()).unwrap();
    f.matrix("rg_sandwich", &got, &oracle_z, &m(&[&[1.0, 1.0], &[0.0, 0.0]]));
    f.values("rg_sandwich C1, C2", &oracle::penrose(&x, &rows(&got))[..2], &oracle::penrose(&x, &oracle_z)[..2], &[0.0, 0.0]);

    let gram_ginv = m(&[&[0.5]]);
    let oracle_g = mul(&gram_ginv, &t(&tall));
    let got = rg_via_gram(&lib(&tall), &lib(&gram_ginv), tol()).unwrap();
    f.matrix("rg_via_gram [[1],[1]]", &got, &oracle_g, &m(&[&[0.5, 0.5]]));

    let x = m(&[&[1.0, 2.0], &[2.0, 4.0]]);
    let gram = mul(&t(&x), &x);
    let gram_ginv = m(&[&[0.2, 0.0], &[0.0, 0.0]]);
    let gram_c1 = oracle::fro(&oracle::sub(&mul(&mul(&gram, &gram_ginv), &gram), &gram));
    f.scalar("gram g-inverse C1", gram_c1, gram_c1, 0.0);
    let oracle_g = mul(&gram_ginv, &t(&x));
    let got = rg_via_gram(&lib(&x), &lib(&gram_ginv), tol()).unwrap();
    f.matrix("rg_via_gram [[1,2],[2,4]]", &got, &oracle_g, &m(&[&[0.2, 0.4], &[0.0, 0.0]]));
    f.values("rg_via_gram C1, C2", &oracle::penrose(&x, &rows(&got))[..2], &oracle::penrose(&x, &oracle_g)[..2], &[0.0, 0.0]);
}

fn pseudo(f: &mut Fixtures) {
    // rank one: X⁺ = Xᵀ / σ² with σ² = ‖X‖_F²
    let x = m(&[&[1.0, 2.0], &[2.0, 4.0]]);
    let oracle_pinv = oracle::scale(&t(&x), 1.0 / oracle::fro(&x).powi(2));
    let lit = m(&[&[0.04, 0.08], &[0.08, 0.16]]);
    f.matrix("pinv_svd", &pinv_svd(&lib(&x), tol()).unwrap(), &oracle_pinv, &lit);
    f.matrix("pinv_cr", &pinv_cr(&lib(&x), tol()).unwrap(), &oracle_pinv, &lit);
    let tall = m(&[&[1.0], &[1.0]]);
    let oracle_pinv = oracle::scale(&t(&tall), 1.0 / oracle::fro(&tall).powi(2));
    f.matrix("pinv_cr [[1],[1]]", &pinv_cr(&lib(&tall), tol()).unwrap(), &oracle_pinv, &m(&[&[0.5, 0.5]]));

    let flags_of = |x: &M, g: &M| {
        let r = oracle::penrose(x, g);
        (r[0] == 0.0, r[1] == 0.0, r[2] == 0.0, r[3] == 0.0)
    };
    let lib_flags = |x: &M, g: &M| {
        let r = classify_inverse(&lib(x), &lib(g), tol()).unwrap();
        ((r.flags.c1, r.flags.c2, r.flags.c3, r.flags.c4), r.class.label())
    };

    let x = m(&[&[1.0, 0.0], &[0.0, 0.0]]);
    let (got, label) = lib_flags(&x, &eye(2));
    f.same("classify flags, g-inverse", got, flags_of(&x, &eye(2)), (true, false, true, true));
    f.same("classify label, g-inverse", label, "g-inverse", "g-inverse");

    let x = m(&[&[1.0, 2.0], &[2.0, 4.0]]);
    let g = m(&[&[1.0, 0.0], &[0.0, 0.0]]);
    let (got, label) = lib_flags(&x, &g);
    f.same("classify flags, reflexive", got, flags_of(&x, &g), (true, true, false, false));
    f.same("classify label, reflexive", label, "reflexive-g-inverse", "reflexive-g-inverse");
}

fn solve(f: &mut Fixtures) {
    let tall = m(&[&[1.0], &[1.0]]);
    let y = [1.0, 3.0];
    // normal equation 2β = 4
    let xty: f64 = tall.iter().zip(&y).map(|(r, yi)| r[0] * yi).sum();
    let xtx: f64 = tall.iter().map(|r| r[0] * r[0]).sum();
    let beta = xty / xtx;
    let y_hat: Vec<f64> = tall.iter().map(|r| r[0] * beta).collect();
    let e: Vec<f64> = y.iter().zip(&y_hat).map(|(a, b)| a - b).collect();
    let s = ls_normal(&lib(&tall), &y, tol()).unwrap();
    f.values("ls_normal beta", &s.beta_hat, &[beta], &[2.0]);
    f.values("ls_normal y_hat", &s.y_hat, &y_hat, &[2.0, 2.0]);
    f.values("ls_normal residual", &s.residual, &e, &[-1.0, 1.0]);
    let s = ls_svd_minnorm(&lib(&tall), &y, tol()).unwrap();
    f.values("ls_svd_minnorm beta", &s.beta_hat, &[beta], &[2.0]);
    let (yh, e_split) = observation_split(&lib(&tall), &y, tol()).unwrap();
    f.values("observation_split y_hat", &yh, &y_hat, &[2.0, 2.0]);
    f.values("observation_split e", &e_split, &e, &[-1.0, 1.0]);

    // consistent 3×2 system, normal equations solved by Cramer's rule
    let x = m(&[&[1.0, 0.0], &[0.0, 1.0], &[1.0, 1.0]]);
    let y3 = col(&[1.0, 1.0, 2.0]);
    let beta = flat(&mul(&oracle::inv_small(&mul(&t(&x), &x)), &mul(&t(&x), &y3)));
    let s = ls_normal(&lib(&x), &flat(&y3), tol()).unwrap();
    f.values("ls_normal consistent beta", &s.beta_hat, &beta, &[1.0, 1.0]);
    let e = flat(&oracle::sub(&y3, &mul(&x, &col(&beta))));
    f.values("ls_normal consistent residual", &s.residual, &e, &[0.0, 0.0, 0.0]);

    let wide = m(&[&[1.0, 1.0]]);
    let oracle_pinv = oracle::scale(&t(&wide), 1.0 / oracle::fro(&wide).powi(2));
    let beta = flat(&mul(&oracle_pinv, &col(&[2.0])));
    let s = ls_svd_minnorm(&lib(&wide), &[2.0], tol()).unwrap();
    f.values("ls_svd_minnorm wide", &s.beta_hat, &beta, &[1.0, 1.0]);

    let u = normalize(&[1.0, 1.0]);
    let h = outer_sum(&[u]);
    f.matrix("projector_column [[1],[1]]", &projector_column(&lib(&tall), tol()).unwrap(), &h, &m(&[&[0.5, 0.5], &[0.5, 0.5]]));
    f.matrix("projector_row [[1],[1]]", &projector_row(&lib(&tall), tol()).unwrap(), &m(&[&[1.0]]), &m(&[&[1.0]]));
    let u = normalize(&[1.0, 2.0]);
    f.matrix(
        "projector_column [[1,2],[2,4]]",
        &projector_column(&lib(&m(&[&[1.0, 2.0], &[2.0, 4.0]])), tol()).unwrap(),
        &outer_sum(&[u]),
        &m(&[&[0.2, 0.4], &[0.4, 0.8]]),
    );

    let p = m(&[&[0.5, 0.5], &[0.5, 0.5]]);
    let r = projector_diagnostics(&lib(&p), tol()).unwrap();
    let (spectrum, _) = oracle::eig2(&p);
    let oracle_flags = (mul(&p, &p) == p, t(&p) == p);
    f.same("projector_diagnostics flags", (r.idempotent, r.symmetric), oracle_flags, (true, true));
    f.scalar("projector_diagnostics trace", r.trace, p[0][0] + p[1][1], 1.0);
    f.same("projector_diagnostics rank", r.rank, oracle::rank_small(&p), 1);
    f.values("projector_diagnostics spectrum", r.eigenvalues.as_deref().unwrap_or(&[]), &spectrum, &[1.0, 0.0]);
    let q = m(&[&[1.0, 1.0], &[0.0, 1.0]]);
    let r = projector_diagnostics(&lib(&q), tol()).unwrap();
    f.matrix("non-projector square", &lib(&mul(&q, &q)), &mul(&q, &q), &m(&[&[1.0, 2.0], &[0.0, 1.0]]));
    f.same("non-projector idempotent", r.idempotent, mul(&q, &q) == q, false);

    // (I − X X_L⁻¹) y with X_L⁻¹ = [0.5, 0.5]
    let xl = mul(&oracle::inv_small(&mul(&t(&tall), &tall)), &t(&tall));
    let hat = mul(&tall, &xl);
    for (y, consistent, lit_beta) in [([2.0, 2.0], true, 2.0), ([1.0, 3.0], false, f64::NAN)] {
        let resid = oracle::fro(&oracle::sub(&col(&y), &mul(&hat, &col(&y))));
        let oracle_consistent = resid <= 1e-8 * oracle::fro(&col(&y)).max(1.0);
        match consistent_unique_solve(&lib(&tall), &y, tol()) {
            Ok(s) => {
                f.same("consistent_unique_solve verdict", true, oracle_consistent, consistent);
                f.values("consistent_unique_solve beta", &s.beta_hat, &flat(&mul(&xl, &col(&y))), &[lit_beta]);
            }
            Err(e) => {
                f.same("consistent_unique_solve verdict", false, oracle_consistent, consistent);
                f.same("consistent_unique_solve error", e.name(), "inconsistent-system", "inconsistent-system");
            }
        }
    }

    let s = right_solve(&lib(&wide), &[2.0], tol()).unwrap();
    f.values("right_solve [1,1]", &s.beta_hat, &flat(&mul(&oracle_pinv, &col(&[2.0]))), &[1.0, 1.0]);
    let x = m(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]]);
    let (a, b) = (3.25, -7.5);
    let xr = mul(&t(&x), &oracle::inv_small(&mul(&x, &t(&x))));
    let s = right_solve(&lib(&x), &[a, b], tol()).unwrap();
    f.values("right_solve selector", &s.beta_hat, &flat(&mul(&xr, &col(&[a, b]))), &[a, b, 0.0]);
}
