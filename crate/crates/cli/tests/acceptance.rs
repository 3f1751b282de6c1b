//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::process::Command;
use std::time::{Duration, Instant};

use numrad_core::harness::sampling::unit_vector;
use numrad_core::harness::{
    resolve_suite, run_suite, sample_operator, tightness_search, SampleSpec, SuiteConfig, TightenConfig, Verdict,
};
use numrad_core::linalg::{hermitian_eigenvalues_unchecked, max_eigenpair};
use numrad_core::radius::{crawford, numerical_radius, op_norm};
use numrad_core::registry::{evaluate, find_check, list_checks, Expected, OpClass, Params};
use numrad_core::{ComplexMatrix, C64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const TOL: f64 = 1e-8;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn w(t: &ComplexMatrix) -> f64 {
    numerical_radius(t).unwrap().value
}

fn equality_witnesses() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    let j = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
    let wj = w(&j);
    let jordan_ok = (wj - 0.5).abs() <= TOL && (wj - op_norm(&j).unwrap() / 2.0).abs() <= TOL;
    ok &= jordan_ok;
    notes.push(format!("w(J)={wj:.12}"));

    let mut worst_normal: f64 = 0.0;
    let mut worst_nil: f64 = 0.0;
    for seed in 1..=20 {
        let t = sample_operator(&SampleSpec { op_class: OpClass::Normal, dim: 4, seed }).unwrap();
        worst_normal = worst_normal.max((w(&t) - op_norm(&t).unwrap()).abs());
        let z = sample_operator(&SampleSpec { op_class: OpClass::SquareZero, dim: 4, seed }).unwrap();
        worst_nil = worst_nil.max((w(&z) - op_norm(&z).unwrap() / 2.0).abs());
    }
    ok &= worst_normal <= TOL && worst_nil <= TOL;
    notes.push(format!("normal max|w-|T||={worst_normal:.1e}"));
    notes.push(format!("square-zero max|w-|T|/2|={worst_nil:.1e}"));

    let c = find_check("T3.1").unwrap();
    let params = Params::new().with("p", 1.0).with("s", 0.5);
    let e = evaluate(c, &[j], &params, &[], false).unwrap();
    let aluthge_ok = (e.lhs - 0.5).abs() <= TOL && (e.rhs - 0.5).abs() <= TOL;
    ok &= aluthge_ok;
    notes.push(format!("T3.1 Jordan lhs={:.12} rhs={:.12}", e.lhs, e.rhs));
    outcome(ok, notes.join("; "))
}

fn identity_suite() -> Outcome {
    let cfg = SuiteConfig {
        checks: resolve_suite("identities").unwrap(),
        dims: vec![2, 3, 4],
        samples: 100,
        seed: 1,
        tol: TOL,
        ..SuiteConfig::default()
    };
    let start = Instant::now();
    let reports = run_suite(&cfg).unwrap();
    let elapsed = start.elapsed();
    let failing: Vec<String> =
        reports.iter().filter(|r| r.verdict != Verdict::Pass).map(|r| format!("{}@{}", r.check, r.dim)).collect();
    let worst = reports.iter().filter_map(|r| r.min_slack).fold(f64::INFINITY, f64::min);
    let ids: BTreeSet<&str> = reports.iter().map(|r| r.check.as_str()).collect();
    let ok = failing.is_empty() && ids.len() == 5 && elapsed < Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "{} checks x 3 dims x 100 samples, worst normalized slack {worst:.1e}, failing {failing:?}, {:.1}s",
            ids.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn numrad(args: &[&str]) -> (i32, Vec<u8>, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_numrad")).args(args).output().expect("numrad runs");
    (out.status.code().unwrap_or(-1), out.stdout, start.elapsed())
}

fn inequality_suite(code: i32, json: &[u8], elapsed: Duration) -> Outcome {
    let reports: Vec<Value> = match serde_json::from_slice(json) {
        Ok(v) => v,
        Err(e) => return outcome(false, format!("report is not JSON: {e}")),
    };
    let pass_ids: BTreeSet<&str> =
        list_checks().iter().filter(|c| c.expected == Expected::Pass).map(|c| c.id).collect();
    let mut covered = BTreeSet::new();
    let mut failing = Vec::new();
    for r in &reports {
        let id = r["check"].as_str().unwrap_or_default();
        if !pass_ids.contains(id) {
            continue;
        }
        covered.insert((id.to_string(), r["dim"].as_u64().unwrap_or(0)));
        if r["verdict"] != "pass" || r["samples"] != 100 {
            failing.push(format!("{id}@{}", r["dim"]));
        }
    }
    let ok = code == 0
        && pass_ids.len() >= 30
        && covered.len() == 3 * pass_ids.len()
        && failing.is_empty()
        && elapsed < Duration::from_secs(600);
    outcome(
        ok,
        format!(
            "{} expected-pass checks, {} (check, dim) reports, failing {failing:?}, exit {code}, {:.1}s",
            pass_ids.len(),
            covered.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn known_typos() -> Outcome {
    let mut notes = Vec::new();
    let c = find_check("KT-C3.9p").unwrap();
    let eye = ComplexMatrix::identity(2);
    let e = evaluate(c, &[eye.clone(), eye], &Params::new().with("p", 1.0), &[], false).unwrap();
    let mut ok = (e.lhs - 2.0).abs() <= TOL && (e.rhs - 1.0).abs() <= TOL;
    notes.push(format!("KT-C3.9p at I,I: lhs={} rhs={}", e.lhs, e.rhs));

    for id in ["C3.10", "T4.7"] {
        let corrected = tightness_search(id, &TightenConfig::default()).unwrap();
        let literal = tightness_search(id, &TightenConfig { literal: true, ..TightenConfig::default() }).unwrap();
        ok &= corrected.min_slack >= -TOL && literal.min_slack < -TOL;
        notes.push(format!(
            "{id}: corrected min slack {:.2e}, printed form min slack {:.3} (seed {})",
            corrected.min_slack,
            literal.min_slack,
            literal.best.seed.unwrap_or(0)
        ));
    }
    outcome(ok, notes.join("; "))
}

/// `w` as the best of `k` equally spaced angles; `g(θ+π) = −λmin(Re(e^{iθ}T))`
/// halves the number of eigen solves.
fn grid_radius(t: &ComplexMatrix, k: usize) -> f64 {
    (0..k / 2)
        .map(|j| {
            let ev = hermitian_eigenvalues_unchecked(t.rotated_real_part(TAU * j as f64 / k as f64).as_nalgebra());
            ev[ev.len() - 1].max(-ev[0])
        })
        .fold(0.0, f64::max)
}

fn oracles() -> Outcome {
    let mut worst_w: f64 = 0.0;
    for k in 0..50u64 {
        let n = 2 + (k % 5) as usize;
        let class = OpClass::ALL[(k / 5) as usize % OpClass::ALL.len()];
        let class = if class.available_in(n) { class } else { OpClass::General };
        let t = sample_operator(&SampleSpec { op_class: class, dim: n, seed: 1000 + k }).unwrap();
        worst_w = worst_w.max((w(&t) - grid_radius(&t, 100_000)).abs());
    }

    // Shifted so that 0 lies outside the numerical range: the sampled part has
    // norm at most 1, so c(T) is at least 0.5. Random unit vectors resolve the
    // minimum to about 1e-6 in C^2; in C^3 and up 10^6 samples leave a gap of
    // order 1e-3, so there the library value is instead matched against an
    // explicit minimizing vector.
    let mut crawford_ok = true;
    let mut sampled_gaps = Vec::new();
    let mut attained_gap: f64 = 0.0;
    for k in 0..10u64 {
        let n = if k < 6 { 2 } else { 3 + (k % 2) as usize };
        let g = sample_operator(&SampleSpec { op_class: OpClass::General, dim: n, seed: 2000 + k }).unwrap();
        let g = g.scale_re(1.0 / op_norm(&g).unwrap());
        let shift = C64::from_polar(1.5, 0.9 * k as f64);
        let t = &g + &ComplexMatrix::identity(n).scale(shift);
        let lib = crawford(&t).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3000 + k);
        let sampled =
            (0..1_000_000).map(|_| t.quadratic_form(&unit_vector(n, &mut rng)).norm()).fold(f64::INFINITY, f64::min);
        crawford_ok &= lib <= sampled + 1e-6;
        if n == 2 {
            crawford_ok &= lib >= sampled - 1e-3;
            sampled_gaps.push(format!("{:.1e}", sampled - lib));
        } else {
            let gap = (attained_minimum(&t, 100_000) - lib).abs();
            crawford_ok &= gap <= TOL;
            attained_gap = attained_gap.max(gap);
        }
    }
    outcome(
        worst_w <= 1e-6 && crawford_ok,
        format!(
            "50 radii max|w-grid|={worst_w:.1e}; crawford 2x2 sampled-min minus library [{}]; \
             3x3/4x4 library below every sample and within {attained_gap:.1e} of an attained value",
            sampled_gaps.join(", ")
        ),
    )
}

/// `|⟨Tx,x⟩|` for `x` the top eigenvector of `Re(e^{iθ}T)` at the grid angle
/// minimizing its largest eigenvalue.
fn attained_minimum(t: &ComplexMatrix, k: usize) -> f64 {
    let top = |th: f64| {
        let ev = hermitian_eigenvalues_unchecked(t.rotated_real_part(th).as_nalgebra());
        ev[ev.len() - 1]
    };
    let theta = (0..k).map(|j| TAU * j as f64 / k as f64).min_by(|a, b| top(*a).total_cmp(&top(*b))).unwrap();
    let (_, x) = max_eigenpair(&t.rotated_real_part(theta)).unwrap();
    t.quadratic_form(&x).norm()
}

fn determinism(first: &[u8], second: &[u8], codes: (i32, i32)) -> Outcome {
    let same = first == second;
    outcome(
        same && !first.is_empty(),
        format!("--workers 1 vs --workers 4: {} bytes, identical={same}, exits {codes:?}", first.len()),
    )
}

fn main() {
    let mut results = Vec::new();
    results.push(("1 equality witnesses", equality_witnesses()));
    results.push(("2 identity suite", identity_suite()));

    let (code_a, json_a, time_a) = numrad(&["run", "--suite", "all", "--seed", "7", "--workers", "1"]);
    let (code_b, json_b, _) = numrad(&["run", "--suite", "all", "--seed", "7", "--workers", "4"]);
    results.push(("3 inequality suite", inequality_suite(code_a, &json_a, time_a)));
    results.push(("4 known-typo confirmations", known_typos()));
    results.push(("5 oracle equivalence", oracles()));
    results.push(("6 determinism", determinism(&json_a, &json_b, (code_a, code_b))));

    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    if results.iter().any(|(_, o)| !o.ok) {
        std::process::exit(1);
    }
}
