use super::*;
use crate::fixtures::Fixture;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn lmin(a: &SymMatrix) -> f64 {
    spectra::min_eig_bounds(a, &cfg()).unwrap().estimate
}

#[test]
fn k7_pair_localization_is_negative() {
    let r = Fixture::K7.ring().unwrap();
    let l = LocalData::from_ring(&r, &[5, 6]).unwrap();
    let t = localized_matrix(&l, 3, &cfg()).unwrap();
    assert!(t.is_exact());
    assert_eq!(t.order(), 8);
    assert!((lmin(&t) + 0.6294949095094872).abs() < 1e-10);
    let v = check_localized(&l, 3, &cfg()).unwrap();
    assert!(v.is_violated());
    assert!(matches!(v.witness().unwrap().certificate, Certificate::ExactRational { .. }));
    assert_eq!(v.witness().unwrap().criterion, "localized S={6,7} n=3");
}

#[test]
fn rank6_primary_three_is_negative() {
    let r = Fixture::Rank6Nc.ring().unwrap();
    let t = primary_matrix(&r, 3, &cfg()).unwrap();
    assert_eq!(t.order(), 216);
    assert!((lmin(&t) + 1.17637505).abs() < 1e-7);
    assert!(check_primary(&r, 3, &cfg()).unwrap().is_violated());
}

#[test]
fn small_powers_hold_on_every_corpus_ring() {
    for r in crate::fixtures::corpus() {
        for n in 1..=2 {
            let v = check_primary(&r, n, &cfg()).unwrap();
            assert!(v.is_holds(), "{} n={n}: {:?}", r.name(), v.label());
        }
    }
}

#[test]
fn rank8_pair_localization() {
    let r = Fixture::Rank8(1).ring().unwrap();
    let l = LocalData::from_ring(&r, &[6, 7]).unwrap();
    let t = localized_matrix(&l, 3, &cfg()).unwrap();
    assert!((lmin(&t) + 2.9488121757500245).abs() < 1e-9);
}

#[test]
fn reduced_identity_matches_hadamard_identity() {
    let r = Fixture::K7.ring().unwrap();
    let l = LocalData::from_ring(&r, &[5, 6]).unwrap();
    let a = reduced_matrix(&l, 3).unwrap();
    let b = build::hadamard_matrix(&l, &TwistPattern::identity(2, 3)).unwrap();
    assert_eq!(a.to_full(), b.to_full());
    assert!(a.is_exact() && b.is_exact());
}

#[test]
fn huge_reduced_power_is_finite() {
    let r = Fixture::Fibonacci.ring().unwrap();
    let l = LocalData::from_ring(&r, &[0, 1]).unwrap();
    let a = reduced_matrix(&l, 1_000_000).unwrap();
    assert!(a.to_full().iter().all(|x| x.is_finite()));
    assert!(check_reduced(&l, 1_000_000, None, &cfg()).unwrap().is_holds());
}

#[test]
fn tensor_cap_is_enforced() {
    let r = Fixture::K7.ring().unwrap();
    let small = EvalConfig {
        dense_cap: 100,
        ..cfg()
    };
    let err = primary_matrix(&r, 3, &small).unwrap_err();
    assert_eq!(err, CriteriaError::DenseCapExceeded { order: 343, cap: 100 });
    assert_eq!(primary_matrix(&r, 0, &cfg()).unwrap_err(), CriteriaError::InvalidN);
}

#[test]
fn unknown_entries_are_reported() {
    let r = Fixture::K7.ring().unwrap();
    let mut l = LocalData::from_ring(&r, &[5, 6]).unwrap();
    l.blocks[3].entries[1] = Entry::Unknown;
    assert_eq!(
        localized_matrix(&l, 2, &cfg()).unwrap_err(),
        CriteriaError::UnknownEntries { block: 4, row: 1, col: 2 }
    );
    // x4 is supported away from S, so the unknown survives every Hadamard power
    let p = TwistPattern::identity(2, 2);
    assert!(matches!(
        reduced_twisted_matrix(&l, &p),
        Err(CriteriaError::UnknownNotAnnihilated { block: 4, .. })
    ));
}

#[test]
fn exact_and_float_paths_agree() {
    let r = Fixture::K7.ring().unwrap();
    let l = LocalData::from_ring(&r, &[4, 5, 6]).unwrap();
    let exact = localized_matrix(&l, 3, &cfg()).unwrap();
    let fast = localized_matrix(
        &l,
        3,
        &EvalConfig {
            exact_cap: 0,
            ..cfg()
        },
    )
    .unwrap();
    assert!(exact.is_exact() && !fast.is_exact());
    for (a, b) in exact.to_full().iter().zip(fast.to_full()) {
        assert!((a - b).abs() <= fast.entry_error().max(1e-12));
    }
}

#[test]
fn operator_matches_dense_matrix() {
    let r = Fixture::K7.ring().unwrap();
    let l = LocalData::from_ring(&r, &[4, 5, 6]).unwrap();
    let op = localized_operator(&l, 3).unwrap();
    let dense = localized_matrix(&l, 3, &cfg()).unwrap().to_full();
    for (a, b) in op.to_dense().iter().zip(&dense) {
        assert!((a - b).abs() < 1e-12 * b.abs().max(1.0));
    }
}

#[test]
fn matrix_free_agrees_with_dense() {
    let r = Fixture::K7.ring().unwrap();
    let l = LocalData::from_ring(&r, &[5, 6]).unwrap();
    let mf = EvalConfig {
        dense_solver_cap: 4,
        ..cfg()
    };
    let v = check_localized(&l, 3, &mf).unwrap();
    assert!(v.is_violated());
    assert!((v.witness().unwrap().rayleigh + 0.6294949095094872).abs() < 1e-8);
}

#[test]
fn limit_matrix_empty_and_full() {
    let r = Fixture::K7.ring().unwrap();
    assert!(check_limit(&r, &[], &cfg()).unwrap().is_holds());
    let all: Vec<usize> = (0..7).collect();
    let a = limit_matrix(&r, &all).unwrap();
    assert!(a.is_exact());
    // only the unit acts by its dimension on everything
    assert_eq!(a.get(0, 0), 1.0);
}

#[test]
fn graded_rejects_other_moduli() {
    let r = Fixture::Cyclic(3).ring().unwrap();
    let g = GradingMap::new(&r, 3, vec![0, 1, 2]).unwrap();
    assert_eq!(graded_matrix(&r, &g, &[0, 1], 2, &cfg()).unwrap_err(), CriteriaError::UnsupportedModulus(3));
    let r2 = Fixture::Cyclic(2).ring().unwrap();
    let g2 = GradingMap::new(&r2, 2, vec![0, 1]).unwrap();
    let v = check_graded(&r2, &g2, &[0, 1], 2, &cfg()).unwrap();
    assert!(!v.is_inconclusive());
}

#[test]
fn search_finds_k7_violation() {
    let r = Fixture::K7.ring().unwrap();
    let w = search_violation(&r, &SearchBudget::default(), &cfg()).unwrap().unwrap();
    assert!(w.rayleigh < 0.0);
    let zero = SearchBudget {
        max_n: 0,
        ..SearchBudget::default()
    };
    assert_eq!(search_violation(&r, &zero, &cfg()).unwrap_err(), CriteriaError::BudgetZero);
}

#[test]
fn search_on_group_ring_finds_nothing() {
    let r = Fixture::Cyclic(4).ring().unwrap();
    assert!(search_violation(&r, &SearchBudget::default(), &cfg()).unwrap().is_none());
}

#[test]
fn orbifold_scaling_is_exact() {
    let r = Fixture::K7.ring().unwrap();
    let l = LocalData::from_ring(&r, &[5, 6]).unwrap();
    let t = localized_matrix(&l, 3, &cfg()).unwrap();
    let s = orbifold_scaled(&l, 3, 3, &cfg()).unwrap();
    assert!(s.is_exact());
    assert!((lmin(&s) - 9.0 * lmin(&t)).abs() < 1e-9);
}

#[test]
fn spec_labels() {
    let p = TwistPattern::parse(2, "I,I,swap").unwrap();
    let s = CriterionSpec::ReducedTwisted {
        set: vec![6, 7],
        pattern: p,
    };
    assert_eq!(s.to_string(), "reduced-twisted S={7,8} n=3 pattern=(I,I,swap)");
}
