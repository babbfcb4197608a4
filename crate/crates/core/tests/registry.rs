//! Hand-checkable registry evaluations and a small end-to-end suite.

use logmaj_core::linalg::ComplexMatrix;
use logmaj_core::registry::{evaluate, expand_ids, run_suite, Instance, Params, SuiteConfig, Tolerances};

fn diag(d: &[f64]) -> ComplexMatrix {
    ComplexMatrix::from_real_diag(d)
}

fn instance(id: &str, inputs: Vec<ComplexMatrix>) -> Instance {
    Instance {
        id: id.into(),
        trial: 0,
        dim: inputs[0].dim(),
        inputs,
        params: Params::new(),
    }
}

#[test]
fn zou_equal_diagonal_inputs_give_zero_margins() {
    let o = evaluate(
        &instance("ZOU-1", vec![diag(&[1.0, 2.0]), diag(&[1.0, 2.0])]),
        &Tolerances::default(),
    )
    .unwrap();
    assert!(o.holds);
    for m in &o.legs[0].margins {
        assert!(m.abs() < 1e-14, "{m}");
    }
}

#[test]
fn block_spectrum_of_diagonal_example() {
    let o = evaluate(
        &instance("PROP-4.1", vec![diag(&[1.0, 2.0]), diag(&[3.0, 4.0])]),
        &Tolerances::default(),
    )
    .unwrap();
    assert!(o.holds);
    let mut joint = o.legs[0].lhs.clone();
    joint.sort_by(|a, b| b.total_cmp(a));
    let want = [6.0, 4.0, -2.0, -2.0];
    assert!(joint.iter().zip(&want).all(|(a, b)| (a - b).abs() < 1e-12), "{joint:?}");
}

#[test]
fn small_theorem_suite_has_no_failures() {
    let sel = expand_ids(&["THM-3.1".to_string()]).unwrap();
    let report = run_suite(&sel, &SuiteConfig::new(100, vec![2, 3, 4], 17)).unwrap();
    assert_eq!(report.outcomes.len(), 300);
    let row = &report.summary[0];
    assert_eq!((row.failures, row.skipped), (0, 0));
    assert!(report.all_expected());
}
