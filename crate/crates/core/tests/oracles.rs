//! Registry evaluations checked against independent oracles: nalgebra's
//! SVD / Hermitian eigensolver / Schur form on stored fixtures, and
//! closed-form 2×2 formulas.

use logmaj_core::linalg::{ComplexMatrix, PsdMatrix, C64};
use logmaj_core::means::{natural_natural, Mean};
use logmaj_core::randgen::{random_matrix, GenSpec, StreamKey};
use logmaj_core::registry::{evaluate, Instance, Params, Tolerances};
use nalgebra::{DMatrix, Schur, SymmetricEigen, SVD};

type NM = DMatrix<C64>;

fn to_na(m: &ComplexMatrix) -> NM {
    NM::from_fn(m.dim(), m.dim(), |i, j| m[(i, j)])
}

/// `M^t` for Hermitian positive definite `M` through nalgebra's eigensolver.
fn na_pow(m: &NM, t: f64) -> NM {
    let e = SymmetricEigen::new(m.clone());
    let d = NM::from_diagonal(&e.eigenvalues.map(|l| C64::new(l.powf(t), 0.0)));
    &e.eigenvectors * d * e.eigenvectors.adjoint()
}

fn na_sharp(a: &NM, b: &NM, t: f64) -> NM {
    let (ah, aih) = (na_pow(a, 0.5), na_pow(a, -0.5));
    let inner = &aih * b * &aih;
    let inner = (&inner + inner.adjoint()) * C64::new(0.5, 0.0);
    &ah * na_pow(&inner, t) * &ah
}

fn na_sv(m: &NM) -> Vec<f64> {
    let mut s: Vec<f64> = SVD::new(m.clone(), false, false)
        .singular_values
        .iter()
        .copied()
        .collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

fn na_eig_moduli(m: &NM) -> Vec<f64> {
    let (_, t) = Schur::new(m.clone()).unpack();
    let mut v: Vec<f64> = t.diagonal().iter().map(|z| z.norm()).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn assert_close_rel(got: &[f64], want: &[f64], rel: f64) {
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= rel * w.abs().max(1e-300), "got {got:?}, want {want:?}");
    }
}

/// Stored 3×3 fixture pair (positive definite, complex entries).
fn fixture_pair() -> (ComplexMatrix, ComplexMatrix) {
    let c = C64::new;
    let a = ComplexMatrix::from_rows(&[
        vec![c(2.5, 0.0), c(0.4, -0.3), c(-0.2, 0.1)],
        vec![c(0.4, 0.3), c(1.7, 0.0), c(0.5, 0.2)],
        vec![c(-0.2, -0.1), c(0.5, -0.2), c(0.9, 0.0)],
    ])
    .unwrap();
    let b = ComplexMatrix::from_rows(&[
        vec![c(1.2, 0.0), c(-0.3, 0.6), c(0.1, 0.0)],
        vec![c(-0.3, -0.6), c(2.1, 0.0), c(-0.4, 0.3)],
        vec![c(0.1, 0.0), c(-0.4, -0.3), c(3.0, 0.0)],
    ])
    .unwrap();
    (a, b)
}

fn instance(id: &str, dim: usize, inputs: Vec<ComplexMatrix>, params: &[(&str, f64)]) -> Instance {
    let params: Params = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    Instance {
        id: id.into(),
        trial: 0,
        dim,
        inputs,
        params,
    }
}

#[test]
fn zou_fixture_matches_independent_svd() {
    let (a, b) = fixture_pair();
    let (na, nb) = (to_na(&a), to_na(&b));
    let lhs = na_sv(&(na_pow(&na, 0.5) * na_sharp(&na, &nb, 0.5) * na_pow(&nb, 0.5)));
    let rhs = na_sv(&(&na * &nb));
    let o = evaluate(&instance("ZOU-1", 3, vec![a, b], &[]), &Tolerances::default()).unwrap();
    let leg = &o.legs[0];
    assert_close_rel(&leg.lhs, &lhs, 1e-11);
    assert_close_rel(&leg.rhs, &rhs, 1e-11);
    assert!(o.holds);
    // Zou's inequality is a log-majorization: the full products agree.
    assert!(leg.det_gap.unwrap() < 1e-12);
}

#[test]
fn lemma_2_1_fixture_matches_schur_oracle() {
    let (a, _) = fixture_pair();
    let c = C64::new;
    let h = ComplexMatrix::from_rows(&[
        vec![c(1.0, 0.0), c(0.7, 0.2), c(-1.1, 0.0)],
        vec![c(0.7, -0.2), c(-0.5, 0.0), c(0.3, 0.9)],
        vec![c(-1.1, 0.0), c(0.3, -0.9), c(0.2, 0.0)],
    ])
    .unwrap();
    let (na, nh) = (to_na(&a), to_na(&h));
    // λ(A^p B A^{-q} B) and λ(A^{p-q} B²) at p = 2, q = 1: both real and nonnegative.
    let x = na_eig_moduli(&(na_pow(&na, 2.0) * &nh * na_pow(&na, -1.0) * &nh));
    let y = na_eig_moduli(&(na_pow(&na, 1.0) * &nh * &nh));
    let o = evaluate(
        &instance("LEM-2.1", 3, vec![a, h], &[("p", 2.0), ("q", 1.0)]),
        &Tolerances::default(),
    )
    .unwrap();
    let leg = &o.legs[0];
    assert_close_rel(&leg.lhs, &x, 1e-9);
    assert_close_rel(&leg.rhs, &y, 1e-9);
    assert!(o.holds, "{:?}", leg.margins);
}

#[test]
fn corollary_4_1_via_singular_value_wise_comparison() {
    let mut rng = StreamKey::root(41).rng();
    for _ in 0..20 {
        let a = random_matrix(&GenSpec::pd(4).with_cond(1e2), &mut rng).unwrap();
        let b = random_matrix(&GenSpec::pd(4).with_cond(1e2), &mut rng).unwrap();
        let (na, nb) = (to_na(&a), to_na(&b));
        let (ah, bh) = (na_pow(&na, 0.5), na_pow(&nb, 0.5));
        let l = &na + &nb + &ah * &bh + &bh * &ah;
        let g = na_sharp(&na, &nb, 0.5);
        let nn = &ah * na_pow(&(&bh * na_pow(&na, -1.0) * &bh), 0.5) * &ah;
        let r = &na + &nb + g + nn;
        let (sl, sr) = (na_sv(&l), na_sv(&r));
        // Index-wise domination implies every Ky Fan partial sum is dominated.
        assert!(sl.iter().zip(&sr).all(|(x, y)| *x <= y + 1e-10));
        let o = evaluate(&instance("COR-4.1", 4, vec![a, b], &[]), &Tolerances::default()).unwrap();
        assert!(o.holds);
        let fan = &o.legs[0];
        // Fan margins are normalized by the trace norm of the right side.
        let trace_norm: f64 = sr.iter().sum();
        let mut acc = (0.0, 0.0);
        for (k, gap) in fan.margins.iter().enumerate() {
            acc.0 += sl[k];
            acc.1 += sr[k];
            assert!((gap - (acc.1 - acc.0) / trace_norm).abs() < 1e-10);
        }
    }
}

/// Eigenvalues of a 2×2 complex matrix by the quadratic formula.
fn quad_eigs(m: [[C64; 2]; 2]) -> [C64; 2] {
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let disc = (tr * tr - det * 4.0).sqrt();
    [(tr + disc) / 2.0, (tr - disc) / 2.0]
}

fn mul2(x: [[C64; 2]; 2], y: [[C64; 2]; 2]) -> [[C64; 2]; 2] {
    let mut r = [[C64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    r
}

fn inv2(x: [[C64; 2]; 2]) -> [[C64; 2]; 2] {
    let det = x[0][0] * x[1][1] - x[0][1] * x[1][0];
    [[x[1][1] / det, -x[0][1] / det], [-x[1][0] / det, x[0][0] / det]]
}

fn arr2(m: &ComplexMatrix) -> [[C64; 2]; 2] {
    [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]]
}

/// `(M + √det M·I)/√(tr M + 2√det M)` for 2×2 Hermitian positive definite `M`.
fn sqrt2(m: [[C64; 2]; 2]) -> [[C64; 2]; 2] {
    let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).re;
    let s = det.sqrt();
    let t = (m[0][0].re + m[1][1].re + 2.0 * s).sqrt();
    [[(m[0][0] + s) / t, m[0][1] / t], [m[1][0] / t, (m[1][1] + s) / t]]
}

#[test]
fn example_2_1_two_by_two_oracle() {
    let mut rng = StreamKey::root(21).rng();
    for _ in 0..50 {
        let a = random_matrix(&GenSpec::pd(2).with_cond(1e2), &mut rng).unwrap();
        let b = random_matrix(&GenSpec::pd(2).with_cond(1e2), &mut rng).unwrap();
        let (a2, b2) = (arr2(&a), arr2(&b));
        let lhs = quad_eigs(mul2(mul2(mul2(a2, b2), inv2(a2)), b2));
        let rhs = quad_eigs(mul2(b2, b2));
        let top = |e: [C64; 2]| e[0].re.max(e[1].re);
        // k = 1 prefix of the reversed relation: λ1(ABA⁻¹B) ≥ λ1(B²).
        let oracle_margin = 0.5 * (top(rhs).ln() - top(lhs).ln());
        let o = evaluate(
            &instance("EX-2.1", 2, vec![a, b], &[("r", 1.0), ("s", 0.0), ("t", 0.0)]),
            &Tolerances::default(),
        )
        .unwrap();
        let m1 = o.legs[0].margins[0];
        assert!((m1 - oracle_margin).abs() < 1e-10, "{m1} vs {oracle_margin}");
        assert!(m1 < 0.0, "the refuted claim should fail at k = 1 on generic inputs");
    }
}

#[test]
fn natural_natural_with_identity_by_composed_square_roots() {
    let a2 = [
        [C64::new(2.0, 0.0), C64::new(1.0, 0.0)],
        [C64::new(1.0, 0.0), C64::new(1.0, 0.0)],
    ];
    // A ♮♮ I = A^{1/2}(A^{-1})^{1/2}A^{1/2}.
    let ah = sqrt2(a2);
    let oracle = mul2(mul2(ah, sqrt2(inv2(a2))), ah);
    let a = PsdMatrix::from_matrix(ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 1.0]]).unwrap()).unwrap();
    let got = natural_natural(&a, &PsdMatrix::identity(2), 0.0).unwrap();
    let via_limit = logmaj_core::means::mean_limit(Mean::NaturalNatural, &a, &PsdMatrix::identity(2)).unwrap();
    for (i, row) in oracle.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            assert!((got.as_matrix()[(i, j)] - want).norm() < 1e-12);
            assert!((via_limit.as_matrix()[(i, j)] - want).norm() < 1e-12);
        }
    }
}

#[test]
fn thm_3_2_moduli_match_schur_oracle() {
    let (a, b) = fixture_pair();
    let (na, nb) = (to_na(&a), to_na(&b));
    let t = 0.3;
    let word = na_pow(&na, t) * na_sharp(&na, &nb, t) * na_pow(&nb, 1.0 - t);
    let o = evaluate(&instance("THM-3.2", 3, vec![a, b], &[("t", t)]), &Tolerances::default()).unwrap();
    assert_close_rel(&o.legs[0].lhs, &na_eig_moduli(&word), 1e-10);
    assert!(o.holds);
}
