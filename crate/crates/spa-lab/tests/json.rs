use proptest::prelude::*;
use spa_lab::json::{DossierJson, MatrixJson, ParamsJson, SearchOutcomeJson};
use spa_lab_core::catalog::{solve_case_ii, verify_counterexample, VerificationBudget};
use spa_lab_core::{build_witness, minimize_product_expectation, WitnessParams};

fn rel_err(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(1.0)
}

proptest! {
    #[test]
    fn witness_matrix_round_trip(a in 0.0..3.0f64, b in 0.0..3.0f64, c in 0.0..3.0f64, theta in -3.2..3.2f64) {
        let w = build_witness(&WitnessParams::new(a, b, c, theta).unwrap());
        let text = serde_json::to_string(&MatrixJson::from(&w)).unwrap();
        let back = MatrixJson::from_json(&text).unwrap().to_matrix().unwrap();
        for i in 0..9 {
            for j in 0..9 {
                let (x, y) = (w.entry(i, j), back.entry(i, j));
                prop_assert!(rel_err(x.re, y.re) <= 1e-15 && rel_err(x.im, y.im) <= 1e-15);
            }
        }
    }

    #[test]
    fn params_round_trip(a in 0.0..3.0f64, b in 0.0..3.0f64, c in 0.0..3.0f64, theta in -3.1..3.1f64) {
        let p = WitnessParams::new(a, b, c, theta).unwrap();
        let text = serde_json::to_string(&ParamsJson::from(&p)).unwrap();
        let back: ParamsJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_params().unwrap(), p);
    }
}

#[test]
fn search_outcome_round_trip() {
    let w = build_witness(&WitnessParams::new(0.3, 0.9, 0.2, 0.4).unwrap());
    let outcome = minimize_product_expectation(&w, 12, 4).unwrap();
    let j = SearchOutcomeJson::from(&outcome);
    let back: SearchOutcomeJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
    assert_eq!(back, j);
    assert_eq!(back.converged_minima.len(), 12);
    assert_eq!(back.argmin.to_vector().unwrap(), outcome.argmin);
}

#[test]
fn dossier_round_trip() {
    let s = solve_case_ii(1.9).unwrap()[0];
    let budget = VerificationBudget { spanning_restarts: 100, ..VerificationBudget::default() };
    let d = verify_counterexample(&s, &budget);
    let j = DossierJson::from(&d);
    let v = serde_json::to_value(&j).unwrap();
    assert_eq!(v["case"], "ii");
    assert_eq!(v["stages"].as_array().unwrap().len(), 7);
    assert!(v["partner"].is_object());
    let back: DossierJson = serde_json::from_value(v).unwrap();
    assert_eq!(back, j);
}
