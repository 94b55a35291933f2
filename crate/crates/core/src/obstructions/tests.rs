use super::*;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

#[test]
fn two_gen_dominant_unit_terms() {
    let p = TwoGenParams {
        s: 1.0,
        t: 1.0,
        k: 1.0,
        ell: 1.0,
        d2: 50.0,
        d3: 50.0,
    };
    assert_eq!(two_gen_obstruction(&p, 6).unwrap(), None);
    let bad = TwoGenParams { d3: 1.0, ..p };
    assert!(matches!(two_gen_obstruction(&bad, 6), Err(ObstructionError::InvalidParams(_))));
    assert!(matches!(two_gen_obstruction(&p, 1), Err(ObstructionError::InvalidParams(_))));
}

#[test]
fn two_gen_matches_r4k_closed_form() {
    for k in 3..=10 {
        let p = r4k_params(k).unwrap();
        let found = two_gen_obstruction(&p, 6).unwrap();
        let f = r4k_closed_form(k).unwrap();
        let at3 = two_gen_expression(&p, 3, 1);
        // same sign: the n = 3 bound is f(d₃) over a positive factor
        assert_eq!(at3 < 0.0, f < 0.0, "k={k}");
        if k >= 5 {
            assert_eq!(found.map(|t| t.0), Some(3), "k={k}");
        }
    }
}

#[test]
fn nsd_symmetric_cases() {
    assert_eq!(two_gen_obstruction_nsd(2.0, 2.0, 3.0, 6).unwrap(), None);
    assert_eq!(two_gen_obstruction_nsd(1.0, 0.0, 3.0, 6).unwrap(), None);
    assert!(two_gen_obstruction_nsd(0.0, 3.0, 2.0, 8).is_ok());
    assert!(two_gen_obstruction_nsd(-1.0, 3.0, 2.0, 8).is_err());
}

#[test]
fn r4k_family_verdicts() {
    for k in 3..=10 {
        assert!(r4k_check(k, &cfg()).unwrap().is_violated(), "k={k}");
    }
    for k in 5..=10 {
        let r = r4k_ring(k).unwrap();
        let x = r.dims().values[2];
        let kf = k as f64;
        assert!((kf * kf + kf + 1.0).sqrt() <= x + 1e-12 && x <= kf + 1.0 + 1e-12);
        assert!(r4k_closed_form(k).unwrap() < 0.0);
    }
    assert!(r4k_ring(0).is_err());
}

#[test]
fn perturbation_reference_values() {
    let b = k7_perturbation(5.0, 5.0, 5.0, 6.0, 7.0).unwrap();
    assert!((b.q2_plus - 8.882676317998447).abs() < 1e-9);
    assert!((b.q1_plus - 6.53767106356067).abs() < 1e-9);
    assert!(b.excludes(7.0));
    assert!(!b.excludes(9.0));
    assert!(b.q1_minus < 0.0 && b.q2_minus < 0.0);
}

#[test]
fn corner_det_matches_brute_force() {
    let d = [2.0, 3.0, 4.0, 5.0, 6.0, 7.0];
    let f = k7_corner_det(d);
    let g = k7_corner_det_brute(d).unwrap();
    assert!((f - g).abs() <= 1e-9 * f.abs(), "{f} vs {g}");
}

#[test]
fn quartic_roots() {
    let r = quartic_real_roots(&K7_QUARTIC);
    let want = [-8.3358, -2.9119, 6.2458, 9.5934];
    assert_eq!(r.len(), 4);
    for (a, b) in r.iter().zip(want) {
        assert!((a - b).abs() < 1e-3, "{a} vs {b}");
    }
}

#[test]
fn alpha_by_bisection() {
    let a = alpha_threshold([5.0, 5.0, 5.0, 6.0, 7.0], 7.0, 12.0, &cfg()).unwrap();
    assert!((a - 9.593447799759474).abs() < 1e-6, "{a}");
    assert!(matches!(
        alpha_threshold([5.0, 5.0, 5.0, 6.0, 7.0], 10.0, 12.0, &cfg()),
        Err(ObstructionError::HypothesisFailed(_))
    ));
}

#[test]
fn graph_dims_of_small_graphs() {
    let s = |x: &str| x.to_string();
    let a3 = BipartiteGraph::new(
        "A3",
        vec![s("a"), s("c")],
        vec![s("b")],
        "a",
        vec![(s("a"), s("b"), 1), (s("b"), s("c"), 1)],
    )
    .unwrap();
    let d = graph_dims(&a3).unwrap().values;
    assert!((d[0] - 1.0).abs() < 1e-12 && (d[1] - 1.0).abs() < 1e-12);
    assert!((d[2] - 2f64.sqrt()).abs() < 1e-12);
    let edge = BipartiteGraph::new("A2", vec![s("a")], vec![s("b")], "a", vec![(s("a"), s("b"), 1)]).unwrap();
    assert_eq!(graph_dims(&edge).unwrap().values, vec![1.0, 1.0]);
    let split = BipartiteGraph::new("x", vec![s("a"), s("c")], vec![s("b")], "a", vec![(s("a"), s("b"), 1)]);
    assert_eq!(split.unwrap_err(), ObstructionError::Disconnected);
}

#[test]
fn d5_is_excluded() {
    let g = d5_graph();
    let dims = graph_dims(&g).unwrap();
    let th = std::f64::consts::PI / 8.0;
    let qi = |n: f64| (n * th).sin() / th.sin();
    for (name, want) in [("1", 1.0), ("2", qi(2.0)), ("3", qi(3.0)), ("4", qi(4.0) / 2.0), ("5", qi(4.0) / 2.0)] {
        assert!((dims.values[g.index(name).unwrap()] - want).abs() < 1e-12, "{name}");
    }
    let l = d5_local_data(&g).unwrap();
    let v = graph_local_check(&l, 1, &cfg()).unwrap();
    assert!(v.is_violated());
    let want = 1.0 - 1.0 / (2.0 * th.sin());
    assert!((v.witness().unwrap().rayleigh - want).abs() < 1e-9);
}

#[test]
fn double_arc_family() {
    let p = GraphFamilyRaw::new(10, 100.0, 20.0).unwrap();
    assert!(chain_bound_check(p));
    assert_eq!(graph_family_check(p, 6).unwrap(), Some((3, 1, 2)));
    assert!(graph_family_witnesses(p, 6).unwrap().contains(&(4, 2, 2)));
    assert!(!chain_bound_check(GraphFamilyRaw::new(2, 100.0, 20.0).unwrap()));
    // strict at the right end
    let l = 4u32;
    let edge = 16.0 / std::f64::consts::SQRT_2;
    assert!(!chain_bound_check(GraphFamilyRaw::new(l, 0.0, edge).unwrap()));
    for m in [1.0, 5.0, 40.0] {
        for d2 in [2.0, 3.5, 9.0] {
            assert_eq!(graph_family_check(GraphFamilyRaw::new(1, m, d2).unwrap(), 6).unwrap(), None);
        }
    }
}

#[test]
fn p3_bound() {
    let b = p3_dimension_bound(16.0, 2).unwrap();
    assert!((b - (16.0 + 4.0 + 2.0)).abs() < 1e-12);
    let lo = p3_dimension_bound(101.0, 4).unwrap();
    let hi = p3_dimension_bound(101.0, 5).unwrap();
    assert!(lo.is_finite() && hi > lo);
    assert!(matches!(p3_dimension_bound(101.0, 3), Err(ObstructionError::HypothesisFailed(_))));
}

#[test]
fn extracted_family_agrees_with_determinant_route() {
    let s = |x: &str| x.to_string();
    // ℓ = 2 arcs, one branch of multiplicity 3
    let g = BipartiteGraph::new(
        "arcs",
        vec![s("r"), s("x3")],
        vec![s("x2"), s("y")],
        "r",
        vec![(s("r"), s("x2"), 1), (s("x2"), s("x3"), 2), (s("x3"), s("y"), 3)],
    )
    .unwrap();
    let p = extract_family(&g).unwrap().unwrap();
    assert_eq!((p.ell, p.mults.clone()), (2, vec![3]));
    assert_eq!(p.m_value(), 12.0);
    let l = family_local_data(&p).unwrap();
    for n in 2..=6usize {
        for a in 1..n {
            let mut perms = vec![vec![0, 1]; a];
            perms.extend(vec![vec![1, 0]; n - a]);
            let pat = criteria::TwistPattern::from_perms(2, perms).unwrap();
            let v = criteria::det2_bound_check(&l, &pat).unwrap();
            let closed = graph_family_expression(&p, n as u32, a as u32);
            assert_eq!(v.is_violated(), closed < -1e-9, "n={n} a={a} closed={closed}");
        }
    }
}

#[test]
fn extraction_shapes() {
    let s = |x: &str| x.to_string();
    let a4 = BipartiteGraph::new(
        "A4",
        vec![s("1"), s("3")],
        vec![s("2"), s("4")],
        "1",
        vec![(s("1"), s("2"), 1), (s("2"), s("3"), 1), (s("3"), s("4"), 1)],
    )
    .unwrap();
    let p = extract_family(&a4).unwrap().unwrap();
    assert_eq!((p.ell, p.m_value()), (1, 1.0));
    // root of degree 2: not the pattern
    let star = BipartiteGraph::new(
        "star",
        vec![s("r")],
        vec![s("a"), s("b")],
        "r",
        vec![(s("r"), s("a"), 1), (s("r"), s("b"), 1)],
    )
    .unwrap();
    assert_eq!(extract_family(&star).unwrap(), None);
}

#[test]
fn orbifold_scaling() {
    let r = crate::fixtures::Fixture::K7.ring().unwrap();
    let l = LocalData::from_ring(&r, &[5, 6]).unwrap();
    let base = criteria::min_eig(&criteria::localized_matrix(&l, 3, &cfg()).unwrap(), &cfg()).unwrap().midpoint();
    for ell in 1..=5u32 {
        let s = orbifold_scaled(&l, 3, ell, &cfg()).unwrap();
        let v = criteria::min_eig(&s, &cfg()).unwrap().midpoint();
        assert!((v - (ell * ell) as f64 * base).abs() < 1e-9);
    }
}
