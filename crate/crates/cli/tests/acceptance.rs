//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Run with `cargo test -p logmaj-cli --test acceptance`.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use logmaj_core::linalg::{spectral_matrix, ComplexMatrix, HermitianMatrix, PsdMatrix};
use logmaj_core::means::{generalized_mean_rt, geometric_mean_t, natural_natural};
use logmaj_core::norms::{fan_dominates, schatten};
use logmaj_core::randgen::{random_matrix, random_unitary, GenSpec, StreamKey};
use logmaj_core::registry::{expand_ids, run_suite, SuiteConfig, Tolerances, MAX_SKIP_FRACTION};
use logmaj_core::search::{search, verify_instance, SearchConfig, SearchReport};
use rand::Rng;

const SEED: u64 = 20_240_601;
/// Entry-wise agreement required of closed-form oracles.
const ORACLE_TOL: f64 = 1e-10;
/// Relative agreement required of the structural properties.
const PROPERTY_TOL: f64 = 1e-10;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn check(cond: bool, ok: String, fail: String) -> Verdict {
    if cond {
        Ok(ok)
    } else {
        Err(fail)
    }
}

/// Every theorem-level entry holds on 200 trials per dimension 2–5.
fn theorems_hold() -> Verdict {
    let sel = expand_ids(&["all-theorems".to_string()]).map_err(|e| e.to_string())?;
    let report = run_suite(&sel, &SuiteConfig::new(200, vec![2, 3, 4, 5], SEED)).map_err(|e| e.to_string())?;
    let failures: u64 = report.summary.iter().map(|r| r.failures).sum();
    let worst_skip = report
        .summary
        .iter()
        .map(|r| r.skipped as f64 / r.trials.max(1) as f64)
        .fold(0.0, f64::max);
    let bad: Vec<&str> = report
        .summary
        .iter()
        .filter(|r| !r.expected)
        .map(|r| r.id.as_str())
        .collect();
    check(
        failures == 0 && worst_skip <= MAX_SKIP_FRACTION && bad.is_empty(),
        format!(
            "{} entries × 800 trials, 0 failures, max skip fraction {worst_skip:.4}",
            sel.len()
        ),
        format!("failures {failures}, max skip fraction {worst_skip}, unexpected {bad:?}"),
    )
}

/// Known refutations are found within 1000 restarts and match the frozen fixtures bit for bit.
fn refutations_reproduce() -> Verdict {
    let mut notes = Vec::new();
    for id in ["EX-2.1", "RMK-3.1"] {
        let report = search(id, &SearchConfig::new(1000, vec![2, 3], 7)).map_err(|e| e.to_string())?;
        if !report.violation_found {
            return Err(format!(
                "{id}: no violation in 1000 restarts (best {:e})",
                report.best_margin
            ));
        }
        let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("tests/fixtures/{id}.search.json"));
        let stored = std::fs::read_to_string(&fixture).map_err(|e| e.to_string())?;
        let fresh = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n";
        if fresh != stored {
            return Err(format!("{id}: fresh search differs from {}", fixture.display()));
        }
        let parsed: SearchReport = serde_json::from_str(&stored).map_err(|e| e.to_string())?;
        let outcome = verify_instance(&parsed, &Tolerances::default()).map_err(|e| e.to_string())?;
        if outcome.min_margin.to_bits() != parsed.best_margin.to_bits() || !outcome.violation {
            return Err(format!("{id}: fixture re-evaluates to {:e}", outcome.min_margin));
        }
        notes.push(format!(
            "{id} at restart {} (margin {:.3})",
            report.best_restart, report.best_margin
        ));
    }
    Ok(notes.join(", "))
}

/// The proven range of CONJ-1.2 shows no violations.
fn proven_range_holds() -> Verdict {
    let sel = expand_ids(&["CONJ-1.2:proven".to_string()]).map_err(|e| e.to_string())?;
    let report = run_suite(&sel, &SuiteConfig::new(500, vec![2, 3, 4, 5], SEED)).map_err(|e| e.to_string())?;
    let row = &report.summary[0];
    check(
        row.violations == 0 && row.failures == 0,
        format!("{} trials, worst margin {:e}", row.trials, row.worst_margin),
        format!("{} violations, {} failures", row.violations, row.failures),
    )
}

/// Open conjectures survive 10 000 restarts each.
fn conjectures_survive() -> Verdict {
    let mut notes = Vec::new();
    for id in ["CONJ-1.1", "CONJ-2.1", "CONJ-4.1"] {
        let r = search(id, &SearchConfig::new(10_000, vec![2, 3, 4], SEED)).map_err(|e| e.to_string())?;
        if r.violation_found {
            return Err(format!(
                "{id}: violation at restart {} (margin {:e})",
                r.best_restart, r.best_margin
            ));
        }
        notes.push(format!("{id} best {:.1e}", r.best_margin));
    }
    Ok(notes.join(", "))
}

fn max_entry_gap(x: &ComplexMatrix, y: &ComplexMatrix) -> f64 {
    x.as_slice()
        .iter()
        .zip(y.as_slice())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

/// Means of commuting pairs and 2×2 square roots agree with closed forms.
fn oracles_agree() -> Verdict {
    let mut rng = StreamKey::root(SEED).child("acceptance-oracles").rng();
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let n = 2 + i % 4;
        let u = random_unitary(n, &mut rng);
        let a: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..10.0)).collect();
        let b: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..10.0)).collect();
        let (t, r): (f64, f64) = (rng.random_range(0.0..1.0), rng.random_range(-1.0..2.0));
        let pa = PsdMatrix::from_matrix(spectral_matrix(&u, &a)).map_err(|e| e.to_string())?;
        let pb = PsdMatrix::from_matrix(spectral_matrix(&u, &b)).map_err(|e| e.to_string())?;
        let closed = |f: &dyn Fn(f64, f64) -> f64| {
            let d: Vec<f64> = a.iter().zip(&b).map(|(&x, &y)| f(x, y)).collect();
            spectral_matrix(&u, &d)
        };
        let pairs = [
            (
                geometric_mean_t(&pa, &pb, t, 0.0),
                closed(&|x, y| x.powf(1.0 - t) * y.powf(t)),
            ),
            (
                generalized_mean_rt(&pa, &pb, r, t, 0.0),
                closed(&|x, y| x.powf(r - t) * y.powf(t)),
            ),
            (natural_natural(&pa, &pb, 0.0), closed(&|x, y| (x * y).sqrt())),
        ];
        for (got, want) in pairs {
            let got = got.map_err(|e| e.to_string())?;
            worst = worst.max(max_entry_gap(got.as_matrix(), &want) / want.max_abs());
        }
    }
    for _ in 0..100 {
        let m = random_matrix(&GenSpec::pd(2).with_cond(1e3), &mut rng).map_err(|e| e.to_string())?;
        let det = (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re;
        let s = det.sqrt();
        let scale = (m.trace().re + 2.0 * s).sqrt();
        let want = (&m + &ComplexMatrix::identity(2).scale(s)).scale(1.0 / scale);
        let got = PsdMatrix::from_matrix(m)
            .and_then(|p| p.sqrt())
            .map_err(|e| e.to_string())?;
        worst = worst.max(max_entry_gap(got.as_matrix(), &want) / want.max_abs());
    }
    check(
        worst <= ORACLE_TOL,
        format!("300 commuting means + 100 square roots, worst relative gap {worst:.1e}"),
        format!("worst relative gap {worst:e} > {ORACLE_TOL:e}"),
    )
}

/// Reconstruction, unitary invariance and Fan ⇒ Schatten on 1000 instances each.
fn properties_hold() -> Verdict {
    let key = StreamKey::root(SEED).child("acceptance-properties");
    let (mut recon, mut invar, mut fan) = (0.0_f64, 0.0_f64, 0usize);
    for i in 0..1000u64 {
        let mut rng = key.index(i).rng();
        let n = 2 + (i % 5) as usize;
        let h = random_matrix(&GenSpec::hermitian(n), &mut rng).map_err(|e| e.to_string())?;
        let e = HermitianMatrix::new(h.clone())
            .and_then(|h| h.eig())
            .map_err(|e| e.to_string())?;
        recon = recon.max(e.reconstruct().distance(&h) / h.frobenius_norm());

        let p = rng.random_range(1.0..8.0);
        let (u, v) = (random_unitary(n, &mut rng), random_unitary(n, &mut rng));
        let moved = ComplexMatrix::product([&u, &h, &v]);
        let (x, y) = (schatten(&h, p), schatten(&moved, p));
        let (x, y) = (x.map_err(|e| e.to_string())?, y.map_err(|e| e.to_string())?);
        invar = invar.max((x - y).abs() / x);

        let g = random_matrix(&GenSpec::pd(n), &mut rng).map_err(|e| e.to_string())?;
        let big = &g + &h.scale(0.1);
        for (l, r) in [(&h, &big), (&big, &h), (&g, &big)] {
            if fan_dominates(l, r, 0.0).map_err(|e| e.to_string())?.holds {
                for q in [1.0, 1.5, 2.0, 3.0, p] {
                    let (nl, nr) = (schatten(l, q).unwrap(), schatten(r, q).unwrap());
                    if nl > nr * (1.0 + PROPERTY_TOL) {
                        return Err(format!("instance {i}: Fan holds but ‖·‖_{q} {nl} > {nr}"));
                    }
                }
                fan += 1;
            }
        }
    }
    check(
        recon <= PROPERTY_TOL && invar <= PROPERTY_TOL && fan >= 1000,
        format!("reconstruction {recon:.1e}, invariance {invar:.1e}, {fan} Fan-dominated pairs checked"),
        format!("reconstruction {recon:e}, invariance {invar:e}, only {fan} Fan pairs"),
    )
}

/// The CLI output does not depend on the thread count.
fn thread_count_invariant() -> Verdict {
    let run = |threads: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_logmaj"))
            .args(args)
            .env("LOGMAJ_THREADS", threads)
            .output()
            .map_err(|e| e.to_string())
    };
    let jobs: [&[&str]; 2] = [
        &[
            "verify",
            "--ids",
            "all-theorems,all-conjectures",
            "--trials",
            "25",
            "--dims",
            "2,3,4",
            "--seed",
            "5",
        ],
        &["search", "EX-2.1", "--budget", "200", "--seed", "5"],
    ];
    let mut bytes = 0;
    for args in jobs {
        let (one, four) = (run("1", args)?, run("4", args)?);
        if one.stdout != four.stdout || one.status.code() != four.status.code() {
            return Err(format!("`logmaj {}` differs between 1 and 4 threads", args.join(" ")));
        }
        if one.status.code() != Some(0) {
            return Err(format!(
                "`logmaj {}` exited with {:?}",
                args.join(" "),
                one.status.code()
            ));
        }
        bytes += one.stdout.len();
    }
    Ok(format!(
        "verify and search outputs identical with 1 and 4 threads ({bytes} bytes)"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("theorem suite holds (200 trials, dims 2-5)", theorems_hold),
        (
            "known refutations reproduce within 1000 restarts",
            refutations_reproduce,
        ),
        (
            "CONJ-1.2 proven range shows no violation (500 trials)",
            proven_range_holds,
        ),
        ("open conjectures survive 10000 restarts", conjectures_survive),
        ("closed-form oracles agree", oracles_agree),
        ("structural properties on 1000 instances", properties_hold),
        ("output independent of thread count", thread_count_invariant),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(note) => println!("PASS criterion {}: {name} — {note} [{secs:.1}s]", i + 1),
            Err(why) => {
                all = false;
                println!("FAIL criterion {}: {name} — {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
