mod common;

use common::*;
use proptest::prelude::*;
use serde_json::Value;
use z2inv::exactpoly::{BiDegree, Poly, Sampler};
use z2inv::invariants::{
    basic_invariants, degree_sum_check, good_gensystem_check, minor_cross_identity_check, restrict_to_slice,
    table_expected, theorem_bidegrees, Status, SystemKind, VerificationReport,
};
use z2inv::liealg::{Family, LieAlgebra, SymmetricPair};
use z2inv::Error;

const SYSTEMS: [(Family, usize, usize, SystemKind); 9] = [
    (Family::Gl, 1, 1, SystemKind::CharpolyCoeffs),
    (Family::Gl, 2, 1, SystemKind::CharpolyCoeffs),
    (Family::Gl, 2, 2, SystemKind::CharpolyCoeffs),
    (Family::Gl, 2, 1, SystemKind::PowerTraces),
    (Family::So, 2, 1, SystemKind::EvenCoeffsPlusPfaffian),
    (Family::So, 3, 1, SystemKind::EvenCoeffsPlusPfaffian),
    (Family::So, 2, 2, SystemKind::EvenCoeffsPlusPfaffian),
    (Family::So, 4, 1, SystemKind::EvenCoeffsPlusPfaffian),
    (Family::So, 4, 1, SystemKind::PowerTraces),
];

#[test]
fn degeneration_preserves_degree() {
    for (f, n, m, kind) in SYSTEMS {
        let pair = SymmetricPair::new(f, n, m).unwrap();
        for g in basic_invariants(&pair, kind).unwrap().generators() {
            assert_eq!(g.top_component().unwrap().total_degree(), g.total_degree(), "{} {kind}", pair.name());
        }
    }
}

#[test]
fn restriction_commutes_with_top_component() {
    for (f, n, m, kind) in SYSTEMS {
        let pair = SymmetricPair::new(f, n, m).unwrap();
        for g in basic_invariants(&pair, kind).unwrap().generators() {
            let top_then_restrict = restrict_to_slice(&g.top_component().unwrap(), &pair).unwrap();
            if top_then_restrict.is_zero() {
                continue;
            }
            let restrict_then_top = restrict_to_slice(g, &pair).unwrap().top_component().unwrap();
            assert_eq!(restrict_then_top, top_then_restrict, "{} {kind}", pair.name());
        }
    }
}

#[test]
fn passing_systems_match_the_table() {
    for (f, n, m, kind) in SYSTEMS {
        let pair = SymmetricPair::new(f, n, m).unwrap();
        let (report, res) = good_gensystem_check(&pair, kind, 1).unwrap();
        if kind == SystemKind::PowerTraces && f == Family::So {
            assert!(report.failed());
            continue;
        }
        assert!(report.passed(), "{}", report.summary_line());
        let mut expected = table_expected(f, n, m).or_else(|_| theorem_bidegrees(f, n, m)).unwrap();
        let mut got = res.bidegrees.clone();
        expected.sort();
        got.sort();
        assert_eq!(got, expected, "{}", pair.name());
    }
}

#[test]
fn gl_power_traces_are_also_good() {
    let pair = SymmetricPair::new(Family::Gl, 2, 1).unwrap();
    let (report, _) = good_gensystem_check(&pair, SystemKind::PowerTraces, 2).unwrap();
    assert!(report.passed(), "{}", report.summary_line());
}

#[test]
fn table_and_theorem_agree() {
    for n in 1..=8 {
        for m in 1..=n {
            assert_eq!(
                {
                    let mut v = table_expected(Family::Gl, n, m).unwrap();
                    v.sort();
                    v
                },
                {
                    let mut v = theorem_bidegrees(Family::Gl, n, m).unwrap();
                    v.sort();
                    v
                },
                "GL({n},{m})"
            );
            if let Ok(mut row) = table_expected(Family::So, n, m) {
                let mut th = theorem_bidegrees(Family::So, n, m).unwrap();
                row.sort();
                th.sort();
                assert_eq!(row, th, "SO({n},{m})");
            }
        }
    }
    assert!(matches!(table_expected(Family::Sp, 2, 1), Err(Error::Conjectural(_))));
    assert!(matches!(table_expected(Family::So, 4, 2), Err(Error::NotTabulated(_))));
    assert_eq!(
        table_expected(Family::F4, 0, 0).unwrap(),
        vec![BiDegree::new(0, 2), BiDegree::new(2, 4), BiDegree::new(4, 4), BiDegree::new(6, 6)]
    );
}

#[test]
fn heisenberg_fails_degree_sum() {
    let h = LieAlgebra::heisenberg();
    let r = degree_sum_check(&h, "heisenberg", &[Poly::var(h.space(), 2)], 0);
    assert_eq!(r.status, Status::Fail);
    assert!(r.computed["note"].as_str().unwrap().contains("codim-2"));
    let skipped = degree_sum_check(&h, "heisenberg", &[], 0);
    assert_eq!(skipped.status, Status::Skipped);
}

#[test]
fn cross_identity_detects_wrong_systems() {
    let pair = SymmetricPair::new(Family::Gl, 2, 1).unwrap();
    let (_, res) = good_gensystem_check(&pair, SystemKind::CharpolyCoeffs, 0).unwrap();
    let l = res.contraction.algebra();
    assert!(minor_cross_identity_check(l, "ok", &res.degenerated, 5, 5, 0).passed());
    let mut wrong = res.degenerated.clone();
    wrong[0] = Poly::var(l.space(), 0);
    assert!(minor_cross_identity_check(l, "wrong", &wrong, 5, 5, 0).failed());
}

#[test]
fn report_json_shape() {
    let r = VerificationReport::new("x/y", true, 1, 2).with_witness("w");
    let v: Value = serde_json::to_value(&r).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["check_id", "status", "expected", "computed", "witness", "elapsed_ms"]);
    assert_eq!(v["status"], "PASS");
    let s: Value = serde_json::to_value(VerificationReport::skipped("z", "why")).unwrap();
    assert_eq!(s["status"], "SKIPPED");
    assert_eq!(s["witness"], Value::Null);
}

proptest! {
    #![proptest_config(config(31))]

    #[test]
    fn invariants_vanish_under_derivations_at_points(case in 0usize..3, seed in any::<u64>()) {
        let (f, n, m, kind) = SYSTEMS[[1, 5, 7][case]];
        let pair = SymmetricPair::new(f, n, m).unwrap();
        let (_, res) = good_gensystem_check(&pair, kind, 0).unwrap();
        let l = res.contraction.algebra();
        let mut sampler = Sampler::new(seed);
        let pt = sampler.point(l.dim());
        // Π(ξ)·df(ξ) = 0 for invariants f.
        let pi = l.poisson_at(&pt);
        for g in &res.degenerated {
            let grad = g.gradient_at(&pt);
            for row in &pi {
                let mut acc = z2inv::Scalar::zero();
                for (a, b) in row.iter().zip(&grad) {
                    acc += &(a * b);
                }
                prop_assert!(acc.is_zero());
            }
        }
    }
}
