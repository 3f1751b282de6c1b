use std::collections::HashSet;

use super::*;
use crate::linalg::C64;

fn jordan() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap()
}

fn sample(n: usize, k: u64) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| {
        let a = ((i * 19 + j * 5) as u64 + 37 * k) as f64;
        C64::new((a * 0.83).sin(), (a * 0.29 + 0.7).cos())
    })
}

fn unit_vectors(n: usize, count: usize) -> Vec<ComplexVector> {
    (0..count)
        .map(|k| {
            let v = ComplexVector::from_fn(n, |i, _| {
                let a = (i * 7 + k * 13) as f64;
                C64::new((a * 1.1).sin(), (a * 0.7).cos())
            });
            let nv = crate::linalg::vector_norm(&v);
            v / C64::new(nv, 0.0)
        })
        .collect()
}

fn eval(id: &str, ops: &[ComplexMatrix], params: Params) -> Evaluation {
    evaluate(find_check(id).unwrap(), ops, &params, &unit_vectors(ops[0].rows(), 50), false).unwrap()
}

#[test]
fn catalog_shape() {
    let checks = list_checks();
    assert_eq!(checks.len(), 34);
    let ids: HashSet<_> = checks.iter().chain(identity_checks()).map(|c| c.id).collect();
    assert_eq!(ids.len(), 34 + identity_checks().len());
    for c in checks.iter().chain(identity_checks()) {
        assert!(!c.reference.quote.is_empty(), "{}", c.id);
        assert!(!c.slots.is_empty(), "{}", c.id);
        for p in c.params {
            assert!(p.domain.contains(p.default), "{} {}", c.id, p.name);
            assert!(p.grid.iter().all(|&g| p.domain.contains(g)), "{} {}", c.id, p.name);
        }
    }
    assert_eq!(checks.iter().filter(|c| c.expected == Expected::KnownTypo).count(), 1);
    assert!(matches!(find_check("nope"), Err(Error::UnknownCheck(_))));
    assert_eq!(find_check("L4.1c").unwrap().id, "L4.1c");
}

#[test]
fn n1_upper_on_jordan_block() {
    let e = eval("N1", &[jordan()], Params::new());
    let upper = e.find_part("upper").unwrap();
    assert!((upper.lhs - 0.5).abs() < 1e-12);
    assert!((upper.rhs - 1.0).abs() < 1e-12);
    assert!((upper.slack() - 0.5).abs() < 1e-12);
    // the lower bound is attained
    assert!(e.find_part("lower").unwrap().slack().abs() < 1e-12);
}

#[test]
fn power_inequality_scalar_equality() {
    let t = ComplexMatrix::from_real_diagonal(&[2.0]);
    let e = eval("REF1", &[t], Params::new().with("n_pow", 2.0));
    assert!((e.lhs - 4.0).abs() < 1e-12 && (e.rhs - 4.0).abs() < 1e-12);
    assert!(e.slack.abs() < 1e-12);
}

#[test]
fn known_typo_identity_counterexample() {
    let i = ComplexMatrix::identity(2);
    let e = eval("KT-C3.9p", &[i.clone(), i], Params::new().with("p", 1.0));
    assert!((e.lhs - 2.0).abs() < 1e-12);
    assert!((e.rhs - 1.0).abs() < 1e-12);
    assert!((e.slack + 1.0).abs() < 1e-12);
    assert!(e.violates(1e-8));
}

#[test]
fn shipped_witnesses_falsify_their_forms() {
    for c in list_checks() {
        for w in c.witnesses {
            let inst = (w.build)(3).unwrap();
            let vectors = inst.vectors.unwrap_or_else(|| unit_vectors(3, 20));
            let printed = evaluate(c, &inst.ops, &inst.params, &vectors, w.literal_only).unwrap();
            assert!(printed.normalized_slack < -0.05, "{}: {}", c.id, printed.normalized_slack);
            if w.literal_only {
                let corrected = evaluate(c, &inst.ops, &inst.params, &vectors, false).unwrap();
                assert!(corrected.normalized_slack >= -1e-8, "{} corrected: {:?}", c.id, corrected.parts);
            }
        }
    }
}

#[test]
fn known_typo_witness_is_strong() {
    let c = find_check("KT-C3.9p").unwrap();
    for n in 2..=4 {
        let inst = (c.witnesses[0].build)(n).unwrap();
        let e = evaluate(c, &inst.ops, &inst.params, &[], false).unwrap();
        assert!(e.slack < -0.1);
    }
}

#[test]
fn literal_switch_only_affects_checks_with_a_printed_variant() {
    let c = find_check("N1").unwrap();
    assert_eq!(c.effective_expected(true), Expected::Pass);
    let e = evaluate(c, &[sample(3, 1)], &Params::new(), &[], true).unwrap();
    assert!(!e.literal);
    let c = find_check("C3.10").unwrap();
    assert_eq!(c.effective_expected(true), Expected::KnownTypo);
}

#[test]
fn jordan_block_attains_aluthge_bound() {
    let e = eval("T3.1", &[jordan()], Params::new().with("p", 1.0).with("s", 0.5));
    assert!((e.lhs - 0.5).abs() < 1e-9 && (e.rhs - 0.5).abs() < 1e-9);
}

#[test]
fn pass_checks_hold_on_fixed_samples() {
    for c in list_checks().iter().chain(identity_checks()).filter(|c| c.expected == Expected::Pass) {
        for n in [2, 3, 4] {
            let ops: Vec<ComplexMatrix> = c
                .slots
                .iter()
                .enumerate()
                .map(|(k, slot)| match slot.classes[0] {
                    OpClass::Positive => {
                        let g = sample(n, k as u64 + 11);
                        &g.adjoint() * &g
                    }
                    OpClass::SelfAdjoint => sample(n, k as u64 + 3).hermitian_part(),
                    _ => sample(n, k as u64 + 1),
                })
                .collect();
            let e = evaluate(c, &ops, &Params::new(), &unit_vectors(n, 30), false).unwrap();
            assert!(e.normalized_slack >= -1e-8, "{} n={n}: {:?}", c.id, e.parts);
        }
    }
}

#[test]
fn assumption_and_parameter_errors() {
    let c = find_check("C3.8").unwrap();
    let g = sample(2, 4);
    assert!(matches!(
        evaluate(c, &[g.clone(), g.clone()], &Params::new(), &[], false),
        Err(Error::AssumptionViolated(_))
    ));
    let c = find_check("F1").unwrap();
    assert!(matches!(
        evaluate(c, std::slice::from_ref(&g), &Params::new().with("r", 0.5), &[], false),
        Err(Error::ParamOutOfRange { .. })
    ));
    assert!(matches!(
        evaluate(c, std::slice::from_ref(&g), &Params::new().with("q", 1.0), &[], false),
        Err(Error::ConfigError(_))
    ));
    assert!(matches!(
        evaluate(c, &[g.clone(), g.clone()], &Params::new(), &[], false),
        Err(Error::DimensionMismatch(_))
    ));
    let c = find_check("T2.5").unwrap();
    assert!(matches!(evaluate(c, &[g.clone(), g], &Params::new(), &[], false), Err(Error::ConfigError(_))));
}

#[test]
fn anticommuting_part_applies_to_square_zero_operators() {
    let c = find_check("C2.14").unwrap();
    let e = evaluate(c, &[sample(2, 2), jordan()], &Params::new(), &[], false).unwrap();
    assert!(e.find_part("anticommuting-plus").is_some());
    assert!(e.find_part("selfadjoint-plus").is_none());
}

#[test]
fn params_parse() {
    let p = Params::parse("r=2, nu=0.25").unwrap();
    assert_eq!(p.get("r"), Some(2.0));
    assert_eq!(p.get("nu"), Some(0.25));
    assert!(Params::parse("r").is_err());
    assert!(Params::parse("r=x").is_err());
}
