//! The compiled-in catalog of inequalities.
//!
//! Notation: `s(X)` singular values, `λ(X)` eigenvalues (both decreasing),
//! `A #_t B` weighted geometric mean, `A #_{r,t} B` two-exponent mean,
//! `A ♮♮ B = A^{1/2}(B^{1/2}A^{-1}B^{1/2})^{1/2}A^{1/2}`.
//!
//! Spectra of non-Hermitian words are computed through similar PSD forms:
//! `λ(PQ) = s(Q^{1/2}P^{1/2})²` for PSD `P, Q`, and e.g.
//! `λ(A^p B A^q B) = s(A^{p/2} B A^{q/2})²` for Hermitian `B`.

use std::sync::LazyLock;

use super::domain::{between, branch, coupled, fixed, Domain, Grade, Params};
use super::eval::*;
use super::{InequalityDefinition, InputClass, InputSpec, LegInfo, Relation, Status};
use crate::linalg::{hadamard, ComplexMatrix, PsdMatrix, Spectrum};
use crate::norms::SchattenP;

type Legs = Result<Vec<LegOutcome>, EvalError>;

fn inputs(spec: &[(&'static str, InputClass)]) -> Vec<InputSpec> {
    spec.iter()
        .map(|&(name, class)| InputSpec {
            name,
            class,
            dim_factor: 1,
        })
        .collect()
}

fn pd_pair() -> Vec<InputSpec> {
    inputs(&[("A", InputClass::Pd), ("B", InputClass::Pd)])
}

fn psd_pair() -> Vec<InputSpec> {
    inputs(&[("A", InputClass::Psd), ("B", InputClass::Psd)])
}

fn leg(name: &'static str, relation: Relation, lhs: &'static str, rhs: &'static str) -> LegInfo {
    LegInfo {
        name,
        relation,
        lhs,
        rhs,
        asserted: true,
    }
}

fn exploratory(mut l: LegInfo) -> LegInfo {
    l.asserted = false;
    l
}

fn no_params(grade: Grade) -> Domain {
    Domain::new("default", grade, "", vec![])
}

fn t_domain(name: &'static str, grade: Grade, lo: f64, hi: f64, range: &'static str) -> Domain {
    Domain::new(name, grade, "", vec![branch("t", vec![between("t", lo, hi, range)])])
}

fn spot() -> Relation {
    Relation::NormLeq(SchattenP::SPOT_CHECK.to_vec())
}

// ---- shared building blocks ----

/// `A #_{r,t} B`, routed through the plain mean at `r = 1` so that the
/// semi-definite swap identity applies.
fn mean_rt(a: &PsdMatrix, b: &PsdMatrix, r: f64, t: f64) -> Result<PsdMatrix, EvalError> {
    if r == 1.0 {
        sharp(a, b, t)
    } else {
        gen(a, b, r, t)
    }
}

/// Factors of `A^t (A #_t B) B^{1-t}`.
fn zou_word(a: &PsdMatrix, b: &PsdMatrix, t: f64) -> Result<[PsdMatrix; 3], EvalError> {
    Ok([pw(a, t)?, sharp(a, b, t)?, pw(b, 1.0 - t)?])
}

fn product(fs: &[PsdMatrix]) -> ComplexMatrix {
    ComplexMatrix::product(fs.iter().map(|f| f.as_matrix()))
}

fn svs(fs: &[PsdMatrix]) -> Result<Spectrum, EvalError> {
    svw(&fs.iter().collect::<Vec<_>>())
}

/// `s(A^{3/2} B A^{-1/2})`.
fn skew_sv(a: &PsdMatrix, b: &PsdMatrix) -> Result<Spectrum, EvalError> {
    svw(&[&pw(a, 1.5)?, b, &pw(a, -0.5)?])
}

/// `A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}`.
fn root_sum(a: &PsdMatrix, b: &PsdMatrix) -> Result<ComplexMatrix, EvalError> {
    let (ah, bh) = (pw(a, 0.5)?, pw(b, 0.5)?);
    let cross = ah.as_matrix() * bh.as_matrix();
    Ok(&(&(a.as_matrix() + b.as_matrix()) + &cross) + &cross.adjoint())
}

fn sum(ms: &[&ComplexMatrix]) -> ComplexMatrix {
    let mut acc = ms[0].clone();
    for m in &ms[1..] {
        acc = &acc + m;
    }
    acc
}

/// `(A #_{r,t} B)^p (A #_{s,1-t} B)^p` as its two PSD factors.
fn power_pair(c: &EvalCtx) -> Result<(PsdMatrix, PsdMatrix), EvalError> {
    let (a, b) = (c.psd(0), c.psd(1));
    let (p, r, s, t) = (c.p("p"), c.p("r"), c.p("s"), c.p("t"));
    Ok((pw(&mean_rt(a, b, r, t)?, p)?, pw(&mean_rt(a, b, s, 1.0 - t)?, p)?))
}

// ---- evaluators ----

fn ev_zou(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let lhs = svs(&zou_word(a, b, 0.5)?)?;
    let rhs = svw(&[a, b])?;
    Ok(vec![log_leg("main", lhs, rhs, &c.tol)?])
}

fn ev_conj11(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let lhs = svs(&zou_word(a, b, c.p("t"))?)?;
    let rhs = svw(&[a, b])?;
    Ok(vec![log_leg("main", lhs, rhs, &c.tol)?])
}

fn ev_ls_eig(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let (r, s, t) = (c.p("r"), c.p("s"), c.p("t"));
    let lhs = lam(&mean_rt(a, b, r, t)?, &mean_rt(a, b, s, 1.0 - t)?)?;
    let rhs = lam(&pw(a, r + s - 1.0)?, b)?;
    Ok(vec![log_leg("main", lhs, rhs, &c.tol)?])
}

fn ev_conj12(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let (r, s, t) = (c.p("r"), c.p("s"), c.p("t"));
    let lhs = svw(&[&mean_rt(a, b, r, t)?, &mean_rt(a, b, s, 1.0 - t)?])?;
    let rhs = svw(&[&pw(a, r + s - 1.0)?, b])?;
    Ok(vec![log_leg("main", lhs, rhs, &c.tol)?])
}

fn ev_lem21(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.herm(1).as_matrix());
    let (p, q) = (c.p("p"), c.p("q"));
    // λ(A^p B A^{-q} B) = s(A^{p/2} B A^{-q/2})², λ(A^{p-q} B²) = s(A^{(p-q)/2} B)².
    let x = sv2(&mul(&[pw(a, p / 2.0)?.as_matrix(), b, pw(a, -q / 2.0)?.as_matrix()]))?;
    let y = sv2(&(pw(a, (p - q) / 2.0)?.as_matrix() * b))?;
    Ok(vec![reverse_log_leg("main", x, y, &c.tol)?])
}

fn ev_lem22(c: &EvalCtx) -> Legs {
    let (y, d) = (c.psd(0), c.psd(1));
    let x = psd(y.as_matrix() + d.as_matrix())?;
    let (p1, q1, r1) = (c.p("p'"), c.p("q'"), c.p("r'"));
    let xr = pw(&x, r1 / 2.0)?;
    let inner = psd(mul(&[xr.as_matrix(), pw(y, p1)?.as_matrix(), xr.as_matrix()]))?;
    let lhs = pw(&inner, 1.0 / q1)?;
    let rhs = pw(&x, (p1 + r1) / q1)?;
    Ok(vec![loewner_leg("main", lhs.as_matrix(), rhs.as_matrix(), c.tol())?])
}

fn ev_thm21(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let (p, r, s) = (c.p("p"), c.p("r"), c.p("s"));
    let (g1, g2) = power_pair(c)?;
    let lhs = lam(&g1, &g2)?;
    let rhs = lam(&pw(a, r + s - 1.0)?, b)?.powf(p);
    Ok(vec![log_leg("main", lhs, rhs, &c.tol)?])
}

fn ev_thm21_steps(c: &EvalCtx) -> Legs {
    let a = c.psd(0);
    let (p, r, s, t) = (c.p("p"), c.p("r"), c.p("s"), c.p("t"));
    // Rescale B so that A^{(r+s-1)/2} B A^{(r+s-1)/2} ≤ I with equality at the top.
    let top = lam(&pw(a, r + s - 1.0)?, c.psd(1))?.max();
    let b = c.psd(1).scale(1.0 / top)?;
    let g1p = pw(&mean_rt(a, &b, r, t)?, p)?;
    let g2 = mean_rt(a, &b, s, 1.0 - t)?;
    let mid = pw(a, r * p - (r + s) * p * t)?;
    let g2h = pw(&g2, p / 2.0)?;
    let sandwich = mul(&[g2h.as_matrix(), g1p.as_matrix(), g2h.as_matrix()]);
    let n = a.dim();
    Ok(vec![
        loewner_leg("upper", g1p.as_matrix(), mid.as_matrix(), c.tol())?,
        loewner_leg("lower", mid.as_matrix(), pw(&g2, -p)?.as_matrix(), c.tol())?,
        loewner_leg("implication", &sandwich, &ComplexMatrix::identity(n), c.tol())?,
    ])
}

fn ev_zz(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let (p, r, s) = (c.p("p"), c.p("r"), c.p("s"));
    let e = r + s - 1.0;
    let lhs = lam(&pw(a, e)?, b)?.powf(p);
    let rhs = lam(&pw(a, p * e)?, &pw(b, p)?)?;
    Ok(vec![log_leg("main", lhs, rhs, &c.tol)?])
}

fn ev_conj21(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let (p, r, s) = (c.p("p"), c.p("r"), c.p("s"));
    let (g1, g2) = power_pair(c)?;
    let lhs = lam(&g1, &g2)?;
    let rhs = lam(&pw(a, p * (r + s - 1.0))?, &pw(b, p)?)?;
    Ok(vec![log_leg("main", lhs, rhs, &c.tol)?])
}

fn ev_lem31(c: &EvalCtx) -> Legs {
    let m = c.psd(0).as_matrix();
    let n = m.dim() / 2;
    let (a, off, cc) = (m.block(0, 0, n), m.block(0, n, n), m.block(n, n, n));
    let s = sv(&off)?;
    let half = hadamard(&herm_eigs(a)?.sqrt(), &herm_eigs(cc)?.sqrt())?;
    Ok(vec![
        log_leg("moduli", moduli(&off)?, s.clone(), &c.tol)?,
        wlog_leg("hadamard", s, half, &c.tol)?,
    ])
}

fn ev_thm31(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let lhs = svs(&zou_word(a, b, 0.5)?)?;
    let mid = lam(a, b)?;
    let rhs = svw(&[a, b])?;
    let first = log_leg("mean-vs-eigen", lhs, mid.clone(), &c.tol)?;
    let second = log_leg("eigen-vs-singular", mid, rhs, &c.tol)?;
    let det = det_leg("det-equality", &[&first, &second], c.tol.tol_det);
    Ok(vec![first, second, det])
}

fn ev_rmk31(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let lhs = svw(&[&sharp(a, b, 0.0)?, b])?;
    Ok(vec![log_leg("main", lhs, lam(a, b)?, &c.tol)?])
}

fn ev_thm32(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let lhs = moduli(&product(&zou_word(a, b, c.p("t"))?))?;
    Ok(vec![log_leg("main", lhs, lam(a, b)?, &c.tol)?])
}

fn ev_thm32_step(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let t = c.p("t");
    let ih = pw(a, -0.5)?;
    let x = psd(mul(&[ih.as_matrix(), b.as_matrix(), ih.as_matrix()]))?;
    // B^{1/2-t} A^{1/2} X^t A^{2t} X^t A^{1/2} B^{1/2-t} = F* F.
    let f = svs(&[pw(a, t)?, pw(&x, t)?, pw(a, 0.5)?, pw(b, 0.5 - t)?])?;
    Ok(vec![log_leg("main", f.powf(2.0), lam(a, b)?, &c.tol)?])
}

fn ev_lem32(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.herm(1).as_matrix());
    let (p, q) = (c.p("p"), c.p("q"));
    let lhs = sv2(&mul(&[pw(a, p / 2.0)?.as_matrix(), b, pw(a, q / 2.0)?.as_matrix()]))?;
    let rhs = sv2(&(pw(a, (p + q) / 2.0)?.as_matrix() * b))?;
    Ok(vec![log_leg("main", lhs, rhs, &c.tol)?])
}

fn ev_thm33a(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let lhs = svs(&zou_word(a, b, c.p("t"))?)?;
    Ok(vec![log_leg("main", lhs, skew_sv(a, b)?, &c.tol)?])
}

fn ev_thm33b(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let lhs = svs(&zou_word(a, b, c.p("t"))?)?;
    Ok(vec![log_leg("main", lhs, skew_sv(b, a)?, &c.tol)?])
}

fn ev_rem3(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let ab = svw(&[a, b])?;
    Ok(vec![
        log_leg("A-skew", ab.clone(), skew_sv(a, b)?, &c.tol)?,
        log_leg("B-skew", ab, skew_sv(b, a)?, &c.tol)?,
    ])
}

fn ev_bly(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let g = sharp(a, b, 0.5)?;
    let l = sum(&[a.as_matrix(), b.as_matrix(), &g.as_matrix().scale(2.0)]);
    let r = root_sum(a, b)?;
    Ok(vec![
        norm_leg("schatten", &l, &r, &SchattenP::SPOT_CHECK, c.tol())?,
        fan_leg("fan", &l, &r, c.tol())?.unasserted(),
    ])
}

fn ev_prop41(c: &EvalCtx) -> Legs {
    let (a, b) = (c.herm(0).as_matrix(), c.herm(1).as_matrix());
    let block = ComplexMatrix::from_blocks(a, b, b, a)?;
    let joint = herm_eigs(block)?.into_vec();
    let mut parts = herm_eigs(a + b)?.into_vec();
    parts.extend(herm_eigs(a - b)?.into_vec());
    Ok(vec![union_leg("main", joint, parts, c.tol())?])
}

fn ev_thm41(c: &EvalCtx) -> Legs {
    let (a, b, d) = (c.psd(0), c.psd(1), c.psd(2));
    let cm = sum(&[a.as_matrix(), b.as_matrix(), d.as_matrix()]);
    let l = &(&cm - &(a.as_matrix() + b.as_matrix())) + &root_sum(a, b)?;
    let r = sum(&[&cm, sharp(a, b, 0.5)?.as_matrix(), nn(a, b)?.as_matrix()]);
    Ok(vec![wise_leg(
        "main",
        Relation::SingularValueWiseLeq,
        sv(&l)?,
        sv(&r)?,
        c.tol(),
    )?])
}

fn mean_sum(a: &PsdMatrix, b: &PsdMatrix) -> Result<(ComplexMatrix, ComplexMatrix), EvalError> {
    let g = sharp(a, b, 0.5)?;
    let h = nn(a, b)?;
    let base = a.as_matrix() + b.as_matrix();
    let mixed = sum(&[&base, g.as_matrix(), h.as_matrix()]);
    let double = &base + &h.as_matrix().scale(2.0);
    Ok((mixed, double))
}

fn ev_cor41(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let l = root_sum(a, b)?;
    let (r, _) = mean_sum(a, b)?;
    Ok(vec![
        fan_leg("fan", &l, &r, c.tol())?,
        norm_leg("schatten", &l, &r, &SchattenP::SPOT_CHECK, c.tol())?,
    ])
}

fn ev_thm42(c: &EvalCtx) -> Legs {
    let (l, r) = mean_sum(c.psd(0), c.psd(1))?;
    let ps = [SchattenP::Finite(1.0), SchattenP::Finite(2.0)];
    Ok(vec![norm_leg("schatten", &l, &r, &ps, c.tol())?])
}

fn ev_conj41(c: &EvalCtx) -> Legs {
    let (l, r) = mean_sum(c.psd(0), c.psd(1))?;
    Ok(vec![norm_leg("schatten", &l, &r, &SchattenP::SPOT_CHECK, c.tol())?])
}

fn ev_lem41(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let g: Spectrum = sharp(a, b, 0.5)?.eigenvalues().clone();
    let h: Spectrum = nn(a, b)?.eigenvalues().clone();
    Ok(vec![log_leg("main", g, h, &c.tol)?])
}

fn ev_lem42(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    Ok(vec![log_leg(
        "main",
        lam(a, &sharp(a, b, 0.5)?)?,
        lam(a, &nn(a, b)?)?,
        &c.tol,
    )?])
}

fn ev_lem43(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    Ok(vec![log_leg(
        "main",
        lam(b, &sharp(a, b, 0.5)?)?,
        lam(b, &nn(a, b)?)?,
        &c.tol,
    )?])
}

fn ev_rel_w(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let (t, k) = (c.p("t"), c.p("k"));
    let ih = pw(a, -0.5)?;
    let x = psd(mul(&[ih.as_matrix(), b.as_matrix(), ih.as_matrix()]))?;
    let bh = pw(b, 0.5)?;
    let y = psd(mul(&[bh.as_matrix(), pw(a, -1.0)?.as_matrix(), bh.as_matrix()]))?;
    let ak = pw(a, k)?;
    // λ(A^{k/2} Z A^{k/2}) = λ(A^k Z).
    let mid = lam(&pw(a, k - t)?, &pw(b, t)?)?;
    Ok(vec![
        log_leg("main", lam(&ak, &pw(&x, t)?)?, mid.clone(), &c.tol)?,
        log_leg("complement", mid, lam(&ak, &pw(&y, t)?)?, &c.tol)?,
    ])
}

fn ev_final(c: &EvalCtx) -> Legs {
    let (a, b) = (c.psd(0), c.psd(1));
    let g = sharp(a, b, 0.5)?;
    let l = sum(&[a.as_matrix(), b.as_matrix(), &g.as_matrix().scale(2.0)]);
    let mid = root_sum(a, b)?;
    let (_, r) = mean_sum(a, b)?;
    Ok(vec![
        norm_leg("first", &l, &mid, &SchattenP::SPOT_CHECK, c.tol())?,
        norm_leg("second", &mid, &r, &SchattenP::SPOT_CHECK, c.tol())?.unasserted(),
    ])
}

// ---- domains ----

/// `t` between `(rp − r)/((r+s)p)` and `(rp + s)/((r+s)p)`.
fn t_window(p: &Params) -> (f64, f64) {
    let (pp, r, s) = (p["p"], p["r"], p["s"]);
    ((r * pp - r) / ((r + s) * pp), (r * pp + s) / ((r + s) * pp))
}

const RS_BAND: f64 = 0.05;

fn same_sign_rs(with_t: bool, p_lo: f64, p_hi: f64, p_range: &'static str) -> Domain {
    let make = |label, lo: f64, hi: f64, range| {
        let mut rules = vec![
            between("p", p_lo, p_hi, p_range),
            between("r", lo, hi, range),
            between("s", lo, hi, range),
        ];
        if with_t {
            rules.push(coupled("t", "[(rp - r)/((r+s)p), (rp + s)/((r+s)p)]", t_window));
        }
        branch(label, rules)
    };
    Domain::new(
        "default",
        Grade::Proven,
        "r and s of the same sign",
        vec![
            make("nonnegative", 0.0, 2.0, "[0, 2]"),
            make("nonpositive", -1.0, 0.0, "[-1, 0]"),
        ],
    )
    .with_constraint("|r + s| >= 0.05", |p| (p["r"] + p["s"]).abs() >= RS_BAND)
}

fn unit_rs_domain(p_lo: f64, p_hi: f64, p_range: &'static str) -> Domain {
    Domain::new(
        "default",
        Grade::Proven,
        "r = s = 1",
        vec![branch(
            "unit",
            vec![
                between("p", p_lo, p_hi, p_range),
                fixed("r", 1.0, "1"),
                fixed("s", 1.0, "1"),
                coupled("t", "[(p - 1)/(2p), (p + 1)/(2p)]", |p| {
                    let pp = p["p"];
                    ((pp - 1.0) / (2.0 * pp), (pp + 1.0) / (2.0 * pp))
                }),
            ],
        )],
    )
}

fn furuta_domain() -> Domain {
    // a = −r'(1 − q'); (C1): a ≤ p' ≤ q' + a; p' ∈ (0, 1].
    let a = |p: &Params| -p["r'"] * (1.0 - p["q'"]);
    Domain::new(
        "default",
        Grade::Proven,
        "(C1) together with (C2) or (C3); 0 < Y <= X",
        vec![
            branch(
                "C2",
                vec![
                    between("q'", 0.5, 1.0, "[1/2, 1]"),
                    between("r'", -1.0, -1e-3, "[-1, -0.001]"),
                    coupled("p'", "[-r'(1-q'), min(q' - r'(1-q'), 1)]", move |p| {
                        let a = a(p);
                        (a, (p["q'"] + a).min(1.0))
                    }),
                ],
            ),
            branch(
                "C3",
                vec![
                    between("q'", 0.25, 0.49, "[1/4, 0.49]"),
                    between("r'", -1.0, -1e-3, "[-1, -0.001]"),
                    coupled(
                        "p'",
                        "[max(-r'(1-q'), (-r'(1-q') - q')/(1-2q')), min(q' - r'(1-q'), -r'(1-q')/(1-2q'), 1)]",
                        move |p| {
                            let (a, q) = (a(p), p["q'"]);
                            let lo = a.max((a - q) / (1.0 - 2.0 * q));
                            let hi = (q + a).min(a / (1.0 - 2.0 * q)).min(1.0);
                            (lo, hi)
                        },
                    ),
                ],
            ),
        ],
    )
}

fn conj21_rs(label: &'static str, r: (f64, f64, &'static str), s: (f64, f64, &'static str)) -> super::Branch {
    branch(
        label,
        vec![
            between("p", 1.0, 2.5, "[1, 2.5]"),
            between("r", r.0, r.1, r.2),
            between("s", s.0, s.1, s.2),
            between("t", 0.0, 1.0, "[0, 1]"),
        ],
    )
}

fn build() -> Vec<InequalityDefinition> {
    use InputClass::*;
    use Relation::*;
    use Status::*;
    vec![
        InequalityDefinition {
            id: "ZOU-1",
            anchor: "Zou's singular value inequality",
            statement: "s(A^{1/2}(A#B)B^{1/2}) ≺_log s(AB)",
            status: Theorem,
            inputs: psd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "s(A^{1/2}(A#B)B^{1/2})", "s(AB)")],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: true,
            evaluator: ev_zou,
        },
        InequalityDefinition {
            id: "CONJ-1.1",
            anchor: "Conjecture 1.1",
            statement: "s(A^t(A#_tB)B^{1-t}) ≺_log s(AB), 0 ≤ t ≤ 1",
            status: Conjecture,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "s(A^t(A#_tB)B^{1-t})", "s(AB)")],
            domains: vec![t_domain("default", Grade::Conjectural, 0.0, 1.0, "[0, 1]")],
            psd_probe: false,
            evaluator: ev_conj11,
        },
        InequalityDefinition {
            id: "LS-EIG",
            anchor: "Lemos–Soares eigenvalue inequality",
            statement: "λ((A#_{r,t}B)(A#_{s,1-t}B)) ≺_log λ(A^{r+s-1}B), r, s real, 0 ≤ t ≤ 1",
            status: Theorem,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ((A#_{r,t}B)(A#_{s,1-t}B))", "λ(A^{r+s-1}B)")],
            domains: vec![Domain::new(
                "default",
                Grade::Proven,
                "r, s sampled in [-1, 2]",
                vec![branch(
                    "all",
                    vec![
                        between("r", -1.0, 2.0, "[-1, 2]"),
                        between("s", -1.0, 2.0, "[-1, 2]"),
                        between("t", 0.0, 1.0, "[0, 1]"),
                    ],
                )],
            )],
            psd_probe: false,
            evaluator: ev_ls_eig,
        },
        InequalityDefinition {
            id: "CONJ-1.2",
            anchor: "Conjecture 1.2",
            statement: "s((A#_{r,t}B)(A#_{s,1-t}B)) ≺_log s(A^{r+s-1}B)",
            status: Conjecture,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "s((A#_{r,t}B)(A#_{s,1-t}B))", "s(A^{r+s-1}B)")],
            domains: vec![
                Domain::new(
                    "default",
                    Grade::Refutation,
                    "as conjectured; known false (see EX-2.1)",
                    vec![branch(
                        "all",
                        vec![
                            between("r", -1.0, 2.0, "[-1, 2]"),
                            between("s", -1.0, 2.0, "[-1, 2]"),
                            between("t", 0.0, 1.0, "[0, 1]"),
                        ],
                    )],
                ),
                Domain::new(
                    "proven",
                    Grade::Proven,
                    "r, s >= 0 and r/(r+s) <= 2t <= (2r+s)/(r+s)",
                    vec![branch(
                        "nonnegative",
                        vec![
                            between("r", 0.0, 2.0, "[0, 2]"),
                            between("s", 0.0, 2.0, "[0, 2]"),
                            coupled("t", "[r/(2(r+s)), (2r+s)/(2(r+s))]", |p| {
                                let (r, s) = (p["r"], p["s"]);
                                (r / (2.0 * (r + s)), (2.0 * r + s) / (2.0 * (r + s)))
                            }),
                        ],
                    )],
                )
                .with_constraint("r + s >= 0.05", |p| p["r"] + p["s"] >= RS_BAND),
            ],
            psd_probe: false,
            evaluator: ev_conj12,
        },
        InequalityDefinition {
            id: "LEM-2.1",
            anchor: "Lemma 2.1",
            statement: "λ(A^p B A^{-q} B) ≻_log λ(A^{p-q}B²), A > 0, B Hermitian, p, q ≥ 0",
            status: Lemma,
            inputs: inputs(&[("A", Pd), ("B", Hermitian)]),
            relation: ReverseLog,
            legs: vec![leg("main", ReverseLog, "λ(A^p B A^{-q} B)", "λ(A^{p-q}B²)")],
            domains: vec![Domain::new(
                "default",
                Grade::Proven,
                "p, q sampled in [0, 2]",
                vec![branch(
                    "all",
                    vec![between("p", 0.0, 2.0, "[0, 2]"), between("q", 0.0, 2.0, "[0, 2]")],
                )],
            )],
            psd_probe: false,
            evaluator: ev_lem21,
        },
        InequalityDefinition {
            id: "EX-2.1",
            anchor: "Example 2.1",
            statement: "at t = 0, s − 1 ≤ 0 ≤ 2r + s − 1 the claim of CONJ-1.2 fails: \
                        s((A#_{r,0}B)(A#_{s,1}B))² = λ(A^{2r+s-1}BA^{s-1}B) ≻_log λ(A^{r+s-1}B)²",
            status: ExampleRefutation,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "s((A#_{r,0}B)(A#_{s,1}B))", "s(A^{r+s-1}B)")],
            domains: vec![Domain::new(
                "default",
                Grade::Refutation,
                "t = 0, s <= 1, 2r + s >= 1",
                vec![branch(
                    "boundary",
                    vec![
                        between("s", -1.0, 1.0, "[-1, 1]"),
                        coupled("r", "[(1 - s)/2, 2]", |p| ((1.0 - p["s"]) / 2.0, 2.0)),
                        fixed("t", 0.0, "0"),
                    ],
                )],
            )],
            psd_probe: false,
            evaluator: ev_conj12,
        },
        InequalityDefinition {
            id: "LEM-2.2",
            anchor: "Lemma 2.2 (Furuta inequality with negative powers)",
            statement: "0 < Y ≤ X ⇒ (X^{r'/2} Y^{p'} X^{r'/2})^{1/q'} ≤ X^{(p'+r')/q'}",
            status: Lemma,
            inputs: inputs(&[("Y", Pd), ("D", Pd)]),
            relation: LoewnerLeq,
            legs: vec![leg(
                "main",
                LoewnerLeq,
                "(X^{r'/2} Y^{p'} X^{r'/2})^{1/q'}, X = Y + D",
                "X^{(p'+r')/q'}",
            )],
            domains: vec![furuta_domain()],
            psd_probe: false,
            evaluator: ev_lem22,
        },
        InequalityDefinition {
            id: "THM-2.1",
            anchor: "Theorem 2.1",
            statement: "λ((A#_{r,t}B)^p(A#_{s,1-t}B)^p) ≺_log λ(A^{r+s-1}B)^p, 1 ≤ p ≤ 2, r, s same sign",
            status: Theorem,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ((A#_{r,t}B)^p(A#_{s,1-t}B)^p)", "λ(A^{r+s-1}B)^p")],
            domains: vec![same_sign_rs(true, 1.0, 2.0, "[1, 2]")],
            psd_probe: false,
            evaluator: ev_thm21,
        },
        InequalityDefinition {
            id: "THM-2.1-STEPS",
            anchor: "Loewner steps in the proof of Theorem 2.1",
            statement: "with B scaled so that A^{(r+s-1)/2}BA^{(r+s-1)/2} ≤ I: \
                        (A#_{r,t}B)^p ≤ A^{rp-(r+s)pt} ≤ (A#_{s,1-t}B)^{-p}",
            status: Lemma,
            inputs: pd_pair(),
            relation: LoewnerLeq,
            legs: vec![
                leg("upper", LoewnerLeq, "(A#_{r,t}B)^p", "A^{rp-(r+s)pt}"),
                leg("lower", LoewnerLeq, "A^{rp-(r+s)pt}", "(A#_{s,1-t}B)^{-p}"),
                leg(
                    "implication",
                    LoewnerLeq,
                    "(A#_{s,1-t}B)^{p/2}(A#_{r,t}B)^p(A#_{s,1-t}B)^{p/2}",
                    "I",
                ),
            ],
            domains: vec![same_sign_rs(true, 1.0, 2.0, "[1, 2]")],
            psd_probe: false,
            evaluator: ev_thm21_steps,
        },
        InequalityDefinition {
            id: "ZZ-CHAIN",
            anchor: "Araki–Lieb–Thirring tail of Theorem 2.1",
            statement: "λ(A^{r+s-1}B)^p ≺_log λ(A^{p(r+s-1)}B^p), p ≥ 1",
            status: Theorem,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ(A^{r+s-1}B)^p", "λ(A^{p(r+s-1)}B^p)")],
            domains: vec![same_sign_rs(false, 1.0, 2.0, "[1, 2]")],
            psd_probe: false,
            evaluator: ev_zz,
        },
        InequalityDefinition {
            id: "COR-2.1",
            anchor: "Corollary 2.1",
            statement: "λ((A#_tB)^p(A#_{1-t}B)^p) ≺_log λ(AB)^p, 1 ≤ p ≤ 2, (p-1)/(2p) ≤ t ≤ (p+1)/(2p)",
            status: Corollary,
            inputs: psd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ((A#_tB)^p(A#_{1-t}B)^p)", "λ(AB)^p")],
            domains: vec![unit_rs_domain(1.0, 2.0, "[1, 2]")],
            psd_probe: true,
            evaluator: ev_thm21,
        },
        InequalityDefinition {
            id: "THM-2.2",
            anchor: "Theorem 2.2",
            statement: "λ((A#_tB)^p(A#_{1-t}B)^p) ≺_log λ(AB)^p, p ≥ 2, (p-1)/(2p) ≤ t ≤ (p+1)/(2p)",
            status: Theorem,
            inputs: psd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ((A#_tB)^p(A#_{1-t}B)^p)", "λ(AB)^p")],
            domains: vec![unit_rs_domain(2.0, 4.0, "[2, 4]")],
            psd_probe: true,
            evaluator: ev_thm21,
        },
        InequalityDefinition {
            id: "CONJ-2.1",
            anchor: "Conjecture 2.1",
            statement: "λ((A#_{r,t}B)^p(A#_{s,1-t}B)^p) ≺_log λ(A^{p(r+s-1)}B^p), p ≥ 1, 0 ≤ t ≤ 1, \
                        r, s ≥ 1 or r, s ≤ 0",
            status: Conjecture,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ((A#_{r,t}B)^p(A#_{s,1-t}B)^p)", "λ(A^{p(r+s-1)}B^p)")],
            domains: vec![
                Domain::new(
                    "default",
                    Grade::Conjectural,
                    "stated domain; p sampled in [1, 2.5]",
                    vec![
                        conj21_rs("r,s>=1", (1.0, 2.0, "[1, 2]"), (1.0, 2.0, "[1, 2]")),
                        conj21_rs("r,s<=0", (-1.0, 0.0, "[-1, 0]"), (-1.0, 0.0, "[-1, 0]")),
                    ],
                ),
                Domain::new(
                    "mixed",
                    Grade::Exploratory,
                    "exploratory: r >= 1 with s <= 0, outside the stated domain",
                    vec![conj21_rs("mixed", (1.0, 2.0, "[1, 2]"), (-1.0, 0.0, "[-1, 0]"))],
                ),
            ],
            psd_probe: false,
            evaluator: ev_conj21,
        },
        InequalityDefinition {
            id: "LEM-3.1",
            anchor: "Lemma 3.1",
            statement: "M = [[A, B], [B*, C]] ≥ 0 ⇒ |λ(B)| ≺_log s(B) ≺_wlog λ(A)^{1/2} ∘ λ(C)^{1/2}",
            status: Lemma,
            inputs: vec![InputSpec {
                name: "M",
                class: Pd,
                dim_factor: 2,
            }],
            relation: WeakLog,
            legs: vec![
                leg("moduli", Log, "|λ(B)|", "s(B)"),
                leg("hadamard", WeakLog, "s(B)", "λ(A)^{1/2} ∘ λ(C)^{1/2}"),
            ],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_lem31,
        },
        InequalityDefinition {
            id: "THM-3.1",
            anchor: "Theorem 3.1",
            statement: "s(A^{1/2}(A#B)B^{1/2}) ≺_log λ(AB) ≺_log s(AB)",
            status: Theorem,
            inputs: psd_pair(),
            relation: Log,
            legs: vec![
                leg("mean-vs-eigen", Log, "s(A^{1/2}(A#B)B^{1/2})", "λ(AB)"),
                leg("eigen-vs-singular", Log, "λ(AB)", "s(AB)"),
                leg("det-equality", DetEquality, "Σ log of each left side", "Σ log of each right side"),
            ],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: true,
            evaluator: ev_thm31,
        },
        InequalityDefinition {
            id: "RMK-3.1",
            anchor: "Remark 3.1",
            statement: "at t = 0 the claim s(A^t(A#_tB)B^{1-t}) ≺_log λ(AB) reads s(AB) ≺_log λ(AB), which fails",
            status: ExampleRefutation,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "s((A#_0B)B) = s(AB)", "λ(AB)")],
            domains: vec![no_params(Grade::Refutation)],
            psd_probe: false,
            evaluator: ev_rmk31,
        },
        InequalityDefinition {
            id: "THM-3.2",
            anchor: "Theorem 3.2",
            statement: "|λ(A^t(A#_tB)B^{1-t})| ≺_log λ(AB), 0 ≤ t ≤ 1",
            status: Theorem,
            inputs: psd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "|λ(A^t(A#_tB)B^{1-t})|", "λ(AB)")],
            domains: vec![t_domain("default", Grade::Proven, 0.0, 1.0, "[0, 1]")],
            psd_probe: true,
            evaluator: ev_thm32,
        },
        InequalityDefinition {
            id: "THM-3.2-STEP",
            anchor: "Loewner–Heinz step in the proof of Theorem 3.2",
            statement: "λ(B^{1/2-t}A^{1/2}X^tA^{2t}X^tA^{1/2}B^{1/2-t}) ≺_log λ(AB), X = A^{-1/2}BA^{-1/2}, 0 ≤ t ≤ 1/2",
            status: Lemma,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ(B^{1/2-t}A^{1/2}X^tA^{2t}X^tA^{1/2}B^{1/2-t})", "λ(AB)")],
            domains: vec![t_domain("default", Grade::Proven, 0.0, 0.5, "[0, 1/2]")],
            psd_probe: false,
            evaluator: ev_thm32_step,
        },
        InequalityDefinition {
            id: "LEM-3.2",
            anchor: "Lemma 3.2",
            statement: "λ(A^p B A^q B) ≺_log λ(A^{p+q}B²), A ≥ 0, B Hermitian, p, q ≥ 0",
            status: Lemma,
            inputs: inputs(&[("A", Psd), ("B", Hermitian)]),
            relation: Log,
            legs: vec![leg("main", Log, "λ(A^p B A^q B)", "λ(A^{p+q}B²)")],
            domains: vec![Domain::new(
                "default",
                Grade::Proven,
                "p, q sampled in [0, 2]",
                vec![branch(
                    "all",
                    vec![between("p", 0.0, 2.0, "[0, 2]"), between("q", 0.0, 2.0, "[0, 2]")],
                )],
            )],
            psd_probe: true,
            evaluator: ev_lem32,
        },
        InequalityDefinition {
            id: "THM-3.3a",
            anchor: "Theorem 3.3, first part",
            statement: "s(A^t(A#_tB)B^{1-t}) ≺_log s(A^{3/2}BA^{-1/2}), 1/2 ≤ t ≤ 1",
            status: Theorem,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "s(A^t(A#_tB)B^{1-t})", "s(A^{3/2}BA^{-1/2})")],
            domains: vec![t_domain("default", Grade::Proven, 0.5, 1.0, "[1/2, 1]")],
            psd_probe: false,
            evaluator: ev_thm33a,
        },
        InequalityDefinition {
            id: "THM-3.3b",
            anchor: "Theorem 3.3, second part",
            statement: "s(A^t(A#_tB)B^{1-t}) ≺_log s(B^{3/2}AB^{-1/2}), 0 ≤ t ≤ 1/2",
            status: Theorem,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "s(A^t(A#_tB)B^{1-t})", "s(B^{3/2}AB^{-1/2})")],
            domains: vec![t_domain("default", Grade::Proven, 0.0, 0.5, "[0, 1/2]")],
            psd_probe: false,
            evaluator: ev_thm33b,
        },
        InequalityDefinition {
            id: "REM-3-CLOSE",
            anchor: "closing remark after Theorem 3.3",
            statement: "s(AB) ≺_log s(A^{3/2}BA^{-1/2}) and s(AB) ≺_log s(B^{3/2}AB^{-1/2})",
            status: Corollary,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![
                leg("A-skew", Log, "s(AB)", "s(A^{3/2}BA^{-1/2})"),
                leg("B-skew", Log, "s(AB)", "s(B^{3/2}AB^{-1/2})"),
            ],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_rem3,
        },
        InequalityDefinition {
            id: "BLY-11",
            anchor: "Bhatia–Lim–Yamazaki norm inequality",
            statement: "‖A + B + 2(A#B)‖_p ≤ ‖A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}‖_p, 1 ≤ p ≤ ∞",
            status: Theorem,
            inputs: psd_pair(),
            relation: spot(),
            legs: vec![
                leg("schatten", spot(), "A + B + 2(A#B)", "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}"),
                exploratory(leg(
                    "fan",
                    FanDominance,
                    "A + B + 2(A#B)",
                    "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}",
                )),
            ],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: true,
            evaluator: ev_bly,
        },
        InequalityDefinition {
            id: "PROP-4.1",
            anchor: "Proposition 4.1",
            statement: "λ([[A, B], [B, A]]) = λ(A + B) ∪ λ(A − B) as multisets, A, B Hermitian",
            status: Proposition,
            inputs: inputs(&[("A", Hermitian), ("B", Hermitian)]),
            relation: SpectrumUnionEquality,
            legs: vec![leg("main", SpectrumUnionEquality, "λ([[A, B], [B, A]])", "λ(A + B) ∪ λ(A − B)")],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_prop41,
        },
        InequalityDefinition {
            id: "THM-4.1",
            anchor: "Theorem 4.1",
            statement: "C ≥ A + B ⇒ s_j(C + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}) ≤ s_j(C + A#B + A♮♮B) for all j",
            status: Theorem,
            inputs: inputs(&[("A", Pd), ("B", Pd), ("D", Pd)]),
            relation: SingularValueWiseLeq,
            legs: vec![leg(
                "main",
                SingularValueWiseLeq,
                "s(C + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}), C = A + B + D",
                "s(C + A#B + A♮♮B)",
            )],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_thm41,
        },
        InequalityDefinition {
            id: "COR-4.1",
            anchor: "Corollary 4.1",
            statement: "|||A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}||| ≤ |||A + B + A#B + A♮♮B||| for every unitarily invariant norm",
            status: Corollary,
            inputs: pd_pair(),
            relation: FanDominance,
            legs: vec![
                leg("fan", FanDominance, "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}", "A + B + A#B + A♮♮B"),
                leg("schatten", spot(), "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}", "A + B + A#B + A♮♮B"),
            ],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_cor41,
        },
        InequalityDefinition {
            id: "THM-4.2",
            anchor: "Theorem 4.2",
            statement: "‖A + B + A#B + A♮♮B‖_p ≤ ‖A + B + 2(A♮♮B)‖_p, p ∈ {1, 2}",
            status: Theorem,
            inputs: pd_pair(),
            relation: NormLeq(vec![SchattenP::Finite(1.0), SchattenP::Finite(2.0)]),
            legs: vec![leg(
                "schatten",
                NormLeq(vec![SchattenP::Finite(1.0), SchattenP::Finite(2.0)]),
                "A + B + A#B + A♮♮B",
                "A + B + 2(A♮♮B)",
            )],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_thm42,
        },
        InequalityDefinition {
            id: "LEM-4.1",
            anchor: "Lemma 4.1 (due to M. Lin)",
            statement: "λ(A#B) ≺_log λ(A♮♮B)",
            status: Lemma,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ(A#B)", "λ(A♮♮B)")],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_lem41,
        },
        InequalityDefinition {
            id: "LEM-4.2",
            anchor: "Lemma 4.2",
            statement: "λ(A(A#B)) ≺_log λ(A(A♮♮B))",
            status: Lemma,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ(A(A#B))", "λ(A(A♮♮B))")],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_lem42,
        },
        InequalityDefinition {
            id: "REL-W",
            anchor: "Furuta's log-majorization and its complement",
            statement: "λ(A^{k/2}(A^{-1/2}BA^{-1/2})^tA^{k/2}) ≺_log λ(A^{k-t}B^t) ≺_log \
                        λ(A^{k/2}(B^{1/2}A^{-1}B^{1/2})^tA^{k/2}), 0 ≤ t ≤ 1, t ≤ k ≤ 2",
            status: Lemma,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![
                leg("main", Log, "λ(A^{k/2}(A^{-1/2}BA^{-1/2})^tA^{k/2})", "λ(A^{k-t}B^t)"),
                leg("complement", Log, "λ(A^{k-t}B^t)", "λ(A^{k/2}(B^{1/2}A^{-1}B^{1/2})^tA^{k/2})"),
            ],
            domains: vec![Domain::new(
                "default",
                Grade::Proven,
                "both legs on their common range",
                vec![branch(
                    "all",
                    vec![
                        between("t", 0.0, 1.0, "[0, 1]"),
                        coupled("k", "[t, 2]", |p| (p["t"], 2.0)),
                    ],
                )],
            )],
            psd_probe: false,
            evaluator: ev_rel_w,
        },
        InequalityDefinition {
            id: "LEM-4.3",
            anchor: "Lemma 4.3",
            statement: "λ(B(A#B)) ≺_log λ(B(A♮♮B))",
            status: Lemma,
            inputs: pd_pair(),
            relation: Log,
            legs: vec![leg("main", Log, "λ(B(A#B))", "λ(B(A♮♮B))")],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_lem43,
        },
        InequalityDefinition {
            id: "CONJ-4.1",
            anchor: "Conjecture 4.1",
            statement: "‖A + B + A#B + A♮♮B‖_p ≤ ‖A + B + 2(A♮♮B)‖_p, 1 ≤ p ≤ ∞",
            status: Conjecture,
            inputs: pd_pair(),
            relation: spot(),
            legs: vec![leg("schatten", spot(), "A + B + A#B + A♮♮B", "A + B + 2(A♮♮B)")],
            domains: vec![no_params(Grade::Conjectural)],
            psd_probe: false,
            evaluator: ev_conj41,
        },
        InequalityDefinition {
            id: "FINAL-CHAIN",
            anchor: "closing norm chain",
            statement: "‖A + B + 2(A#B)‖_p ≤ ‖A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}‖_p ≤ ‖A + B + 2(A♮♮B)‖_p; \
                        the second step depends on CONJ-4.1-type reasoning and is reported, not asserted",
            status: Conditional,
            inputs: pd_pair(),
            relation: spot(),
            legs: vec![
                leg("first", spot(), "A + B + 2(A#B)", "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}"),
                exploratory(leg(
                    "second",
                    spot(),
                    "A + B + A^{1/2}B^{1/2} + B^{1/2}A^{1/2}",
                    "A + B + 2(A♮♮B)",
                )),
            ],
            domains: vec![no_params(Grade::Proven)],
            psd_probe: false,
            evaluator: ev_final,
        },
    ]
}

static CATALOG: LazyLock<Vec<InequalityDefinition>> = LazyLock::new(build);

/// All entries, in catalog order.
pub fn catalog() -> &'static [InequalityDefinition] {
    &CATALOG
}
