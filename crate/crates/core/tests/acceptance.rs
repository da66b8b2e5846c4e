//! Acceptance suite. Runs every criterion at its stated tolerance, prints one
//! PASS/FAIL line each and exits nonzero if any criterion fails.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spa_lab_core::catalog::{solve_case_i, solve_case_ii, verify_counterexample, VerificationBudget};
use spa_lab_core::witness::family_pairing;
use spa_lab_core::{
    alpha_closed_form, alpha_numeric, beta_closed_form, beta_numeric, build_witness, classify,
    is_block_positive_closed_form, is_ppt_closed_form, minimize_product_expectation, p_theta,
    CaseSolution, EdgeVerdict, WitnessParams, WitnessType,
};

const SEED: u64 = 0x5eed;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// θ values that stay away from the cusps of `p_θ`.
fn theta_grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| -PI + 2.0 * PI * (k as f64 + 0.5) / n as f64).collect()
}

fn random_block_positive(rng: &mut ChaCha8Rng) -> WitnessParams {
    loop {
        let p = WitnessParams::new(
            rng.random_range(0.0..2.5),
            rng.random_range(0.0..2.0),
            rng.random_range(0.0..2.0),
            rng.random_range(-PI..PI),
        )
        .unwrap();
        if is_block_positive_closed_form(&p) {
            return p;
        }
    }
}

fn criterion_1() -> Outcome {
    let spots = [
        (0.0, 2.0),
        (2.0 * PI / 3.0, 2.0),
        (-2.0 * PI / 3.0, 2.0),
        (PI / 3.0, 1.0),
        (-PI / 3.0, 1.0),
        (PI, 1.0),
    ];
    let worst = spots.iter().map(|&(t, v)| (p_theta(t) - v).abs()).fold(0.0, f64::max);
    // p_θ = 2 nowhere else: 2 - p_θ grows like δ² away from the three peaks
    let peaks = [0.0, 2.0 * PI / 3.0, -2.0 * PI / 3.0];
    let stray = theta_grid(10_000)
        .into_iter()
        .filter(|&t| {
            let dist = peaks.iter().map(|&c| (t - c).abs()).fold(f64::INFINITY, f64::min);
            dist > 1e-3 && p_theta(t) >= 2.0 - 1e-15
        })
        .count();
    outcome(worst <= 1e-15 && stray == 0, format!("max spot error {worst:e}, stray maxima {stray}"))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut da, mut db) = (0.0_f64, 0.0_f64);
    for _ in 0..1000 {
        let p = random_block_positive(&mut rng);
        let w = build_witness(&p);
        da = da.max((alpha_closed_form(&p).unwrap() - alpha_numeric(&w)).abs());
        db = db.max((beta_closed_form(&p).unwrap() - beta_numeric(&w)).abs());
    }
    outcome(da <= 1e-8 && db <= 1e-8, format!("1000 points, max |Δα| {da:e}, max |Δβ| {db:e}"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut worst = 0.0_f64;
    for _ in 0..200 {
        let w = build_witness(&random_block_positive(&mut rng));
        worst = worst.max((alpha_numeric(&w) - beta_numeric(&w.partial_transpose())).abs());
    }
    outcome(worst <= 1e-9, format!("200 points, max |α_W - β_(W^Γ)| {worst:e}"))
}

fn criterion_4() -> Outcome {
    let values: Vec<f64> = (0..10).map(|k| 0.25 * k as f64).collect();
    let mut disagreements = 0;
    let mut ppt_count = 0;
    for theta in theta_grid(10) {
        for &a in &values {
            for &b in &values {
                for &c in &values {
                    let p = WitnessParams::new(a, b, c, theta).unwrap();
                    let w = build_witness(&p);
                    let numeric = w.min_eigenvalue() >= -1e-9 && w.partial_transpose().min_eigenvalue() >= -1e-9;
                    let closed = is_ppt_closed_form(&p);
                    ppt_count += usize::from(closed);
                    disagreements += usize::from(numeric != closed);
                }
            }
        }
    }
    outcome(
        disagreements == 0,
        format!("10000 points ({ppt_count} PPT), {disagreements} disagreements"),
    )
}

fn criterion_5() -> Outcome {
    let a_values: Vec<f64> = (0..10).map(|k| 0.25 * k as f64).collect();
    let b_values = [0.0, 0.3, 0.6, 1.2, 2.4];
    let c_values = [0.15, 0.9];
    let mut disagreements = 0;
    let mut bp_count = 0;
    let mut total = 0;
    for theta in theta_grid(10) {
        for &a in &a_values {
            for &b in &b_values {
                for &c in &c_values {
                    let p = WitnessParams::new(a, b, c, theta).unwrap();
                    let oracle = minimize_product_expectation(&build_witness(&p), 50, SEED)
                        .unwrap()
                        .best_value
                        >= -1e-6;
                    let closed = is_block_positive_closed_form(&p);
                    bp_count += usize::from(closed);
                    disagreements += usize::from(oracle != closed);
                    total += 1;
                }
            }
        }
    }
    outcome(
        disagreements == 0 && total == 1000,
        format!("{total} points ({bp_count} block-positive), {disagreements} disagreements"),
    )
}

fn p_scan() -> Vec<f64> {
    (1..1000).map(|k| 1.0 + k as f64 * 1e-3).collect()
}

fn criterion_6() -> Outcome {
    let upper = 1.0 + FRAC_1_SQRT_2;
    let mut wrong = Vec::new();
    for p in p_scan() {
        let expected = p >= 4.0 / 3.0 && p < upper;
        if solve_case_i(p).unwrap().is_empty() == expected {
            wrong.push(p);
        }
    }
    let sols = solve_case_i(4.0 / 3.0).unwrap();
    let point_ok = sols.len() == 1 && {
        let s = sols[0].params;
        (s.a - 2.0 / 3.0).abs() <= 1e-12 && (s.b - 1.0 / 3.0).abs() <= 1e-7 && (s.c - 1.0 / 3.0).abs() <= 1e-7
    };
    let detail = match sols.first() {
        Some(s) => format!(
            "{} misclassified grid points, p = 4/3 gives {} root(s), (a,b,c) = ({}, {}, {})",
            wrong.len(),
            sols.len(),
            s.params.a,
            s.params.b,
            s.params.c
        ),
        None => format!("{} misclassified grid points, no root at p = 4/3", wrong.len()),
    };
    outcome(wrong.is_empty() && point_ok, detail)
}

fn criterion_7() -> Outcome {
    let lower = 1.0 + FRAC_1_SQRT_2;
    let mut wrong = Vec::new();
    for p in p_scan() {
        let expected = p >= lower;
        if solve_case_ii(p).unwrap().is_empty() == expected {
            wrong.push(p);
        }
    }
    let sols = solve_case_ii(lower).unwrap();
    let point_ok = sols.len() == 1 && {
        let s = sols[0];
        let (b, c) = (s.params.b, s.params.c);
        let partner = s.partner_params.map(|q| (q.b, q.c));
        (s.params.a - 1.0).abs() <= 1e-12
            && (b - FRAC_1_SQRT_2).abs() <= 1e-12
            && c == 0.0
            && partner == Some((c, b))
    };
    outcome(
        wrong.is_empty() && point_ok,
        format!("{} misclassified grid points, boundary solution ok: {point_ok}", wrong.len()),
    )
}

fn pipeline_cases() -> Vec<CaseSolution> {
    let mut out = Vec::new();
    for p in [4.0 / 3.0, 1.4, 1.5] {
        out.extend(solve_case_i(p).unwrap());
    }
    for p in [1.75, 1.8, 1.9] {
        out.extend(solve_case_ii(p).unwrap());
    }
    out
}

/// Every reported numeric of the pipeline, as raw bits.
fn run_pipeline() -> (Vec<String>, Vec<u64>) {
    let budget = VerificationBudget { seed: SEED, ..VerificationBudget::default() };
    let mut failures = Vec::new();
    let mut bits = Vec::new();
    for s in pipeline_cases() {
        let d = verify_counterexample(&s, &budget);
        let r = &d.classification;
        let spa_min = r.spa_matrix.min_eigenvalue().min(r.spa_matrix.partial_transpose().min_eigenvalue());
        let det = d.detected_ppt_state;
        let checks = [
            ("type", r.witness_type == WitnessType::PptType && (r.alpha - r.beta).abs() <= 1e-8),
            ("spa_ppt", spa_min >= -1e-9),
            ("entangled", d.spa_entangled == EdgeVerdict::EntangledEdge && d.edge_residual > 1e-6),
            ("detected", det.is_some_and(|x| x.trace_pairing < -1e-9)),
        ];
        for (name, ok) in checks {
            if !ok {
                failures.push(format!("{} p={}: {name}", s.case_tag.as_str(), s.p));
            }
        }
        bits.extend([r.alpha, r.beta, spa_min, d.edge_residual].map(f64::to_bits));
        if let Some(x) = det {
            bits.extend([x.pairing, x.trace_pairing, x.state.a, x.state.b, x.state.c, x.state.theta].map(f64::to_bits));
        }
        bits.extend([d.spanning.0 as u64, d.spanning.1 as u64]);
        bits.extend(d.stages.iter().map(|st| st.value.to_bits()));
    }
    (failures, bits)
}

fn criterion_8() -> (Outcome, Vec<u64>) {
    let (mut failures, bits) = run_pipeline();
    // two-way pairing at p = 4/3
    let s = solve_case_i(4.0 / 3.0).unwrap()[0];
    let theta_pi = s.theta + PI;
    let detector = WitnessParams::new(p_theta(theta_pi), 1.0, 1.0, theta_pi).unwrap();
    let closed = family_pairing(&s.params, &detector);
    let traced = build_witness(&s.params).trace_pairing(&build_witness(&detector)).unwrap();
    let target = 2.0 * p_theta(theta_pi) - 4.0;
    if (closed - traced).abs() > 1e-10 || (closed - target).abs() > 1e-10 {
        failures.push(format!("pairing at 4/3: closed {closed}, trace {traced}, 2p-4 {target}"));
    }
    let pass = failures.is_empty();
    let detail = if pass {
        format!("6 witnesses certified, pairing at 4/3 = {closed:.12} (trace {traced:.12})")
    } else {
        failures.join("; ")
    };
    (outcome(pass, detail), bits)
}

fn criterion_9() -> Outcome {
    let s = solve_case_i(4.0 / 3.0).unwrap()[0];
    let ranks = classify(&build_witness(&s.params)).rank_signature;
    outcome(ranks == (8, 6), format!("rank signature {ranks:?}"))
}

fn criterion_10() -> Outcome {
    let budget = VerificationBudget { spanning_restarts: 500, seed: SEED, ..VerificationBudget::default() };
    let mut found = Vec::new();
    for p in [4.0 / 3.0, 1.5] {
        for s in solve_case_i(p).unwrap() {
            found.push((p, verify_counterexample(&s, &budget).spanning));
        }
    }
    let pass = !found.is_empty() && found.iter().all(|&(_, r)| r == (9, 9));
    outcome(pass, format!("spanning ranks (W, W^Γ): {found:?}"))
}

fn main() -> ExitCode {
    let mut results: Vec<(usize, &str, Outcome, f64)> = Vec::new();
    let mut timed = |n: usize, name: &'static str, f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let o = f();
        results.push((n, name, o, start.elapsed().as_secs_f64()));
    };
    timed(1, "p_theta spot values", &criterion_1);
    timed(2, "closed-form vs numeric alpha/beta", &criterion_2);
    timed(3, "gamma duality", &criterion_3);
    timed(4, "PPT criterion equivalence", &criterion_4);
    timed(5, "block-positivity equivalence", &criterion_5);
    timed(6, "case I window", &criterion_6);
    timed(7, "case II window", &criterion_7);
    let first = std::cell::RefCell::new(Vec::new());
    timed(8, "counterexample pipeline", &|| {
        let (o, bits) = criterion_8();
        *first.borrow_mut() = bits;
        o
    });
    timed(9, "rank signature", &criterion_9);
    timed(10, "spanning evidence", &criterion_10);
    timed(11, "determinism", &|| {
        let (_, again) = run_pipeline();
        let reference = first.borrow();
        let same = !reference.is_empty() && *reference == again;
        outcome(same, format!("{} numerics compared bit-for-bit", again.len()))
    });

    let mut failed = 0;
    for (n, name, o, secs) in &results {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!("criterion {n:>2} {tag}  {name}: {} [{secs:.2}s]", o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
