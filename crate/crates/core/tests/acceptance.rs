//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach stdout.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use fusion_obstruct::criteria::{
    catalog_patterns, check_localized, check_primary, check_reduced, localized_matrix, localized_operator,
    primary_matrix, reduced_matrix, search_violation, LocalData, SearchBudget, TwistPattern,
};
use fusion_obstruct::obstructions::{
    alpha_threshold, chain_bound_check, d5_graph, d5_local_data, graph_family_check, graph_family_witnesses,
    graph_local_check, k7_corner_det, k7_corner_det_brute, k7_perturbation, orbifold_scaled, quartic_real_roots,
    r4k_check, r4k_closed_form, r4k_ring, GraphFamilyRaw, K7_QUARTIC,
};
use fusion_obstruct::schur::{character_table, check_schur, nu_values3};
use fusion_obstruct::spectra::{certified_rayleigh, certify_psd, kron_min_eig, min_eig_bounds};
use fusion_obstruct::{fixtures, EvalConfig, Fixture, FusionRing, PsdVerdict, SymMatrix};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

const K7_T3: [[i128; 8]; 8] = [
    [1426, 536, 536, 286, 536, 286, 286, 1001],
    [536, 1156, 286, 446, 286, 446, 1001, 526],
    [536, 286, 1156, 446, 286, 1001, 446, 526],
    [286, 446, 446, 976, 1001, 526, 526, 476],
    [536, 286, 286, 1001, 1156, 446, 446, 526],
    [286, 446, 1001, 526, 446, 976, 526, 476],
    [286, 1001, 446, 526, 446, 526, 976, 476],
    [1001, 526, 526, 476, 526, 476, 476, 886],
];

const RANK8_T3: [[i128; 8]; 8] = [
    [2095, 755, 755, 463, 755, 463, 463, 1746],
    [755, 1820, 463, 700, 463, 700, 1746, 727],
    [755, 463, 1820, 700, 463, 1746, 700, 727],
    [463, 700, 700, 1600, 1746, 727, 727, 711],
    [755, 463, 463, 1746, 1820, 700, 700, 727],
    [463, 700, 1746, 727, 700, 1600, 727, 711],
    [463, 1746, 700, 727, 700, 727, 1600, 711],
    [1746, 727, 727, 711, 727, 711, 711, 1435],
];

/// Exact equality `a = (1/denom) · want`.
fn exact_equals(a: &SymMatrix, want: &[[i128; 8]; 8], denom: i128) -> Result<(), String> {
    let e = a.exact().ok_or("matrix is not exact")?;
    ensure!(a.order() == 8, "order {}", a.order());
    for i in 0..8 {
        for j in 0..=i {
            let x = e.numer[i * (i + 1) / 2 + j];
            ensure!(x * denom == want[i][j] * e.denom, "entry ({i},{j}) = {x}/{} differs", e.denom);
            ensure!((a.get(i, j) - want[i][j] as f64 / denom as f64).abs() < 1e-12, "float entry ({i},{j})");
        }
    }
    Ok(())
}

fn witness_rayleigh(v: &PsdVerdict) -> Result<f64, String> {
    v.witness().map(|w| w.rayleigh).ok_or_else(|| format!("expected violated, got {}", v.label()))
}

fn c1() -> Outcome {
    let r = Fixture::parse("k7").unwrap().ring().map_err(err)?;
    let t0 = Instant::now();
    let l = LocalData::from_ring(&r, &[5, 6]).map_err(err)?;
    let a = localized_matrix(&l, 3, &cfg()).map_err(err)?;
    let v = check_localized(&l, 3, &cfg()).map_err(err)?;
    let dt = t0.elapsed();
    exact_equals(&a, &K7_T3, 210)?;
    let lam = witness_rayleigh(&v)?;
    let lmin = min_eig_bounds(&a, &cfg()).map_err(err)?.estimate;
    ensure!((lmin + 0.6294949095).abs() < 1e-6, "λ_min = {lmin}");
    ensure!(lam < 0.0, "witness quotient {lam}");
    ensure!(dt < Duration::from_millis(100), "took {dt:?}");
    Ok(format!("λ_min = {lmin:.10}, exact (1/210) matrix, {dt:?}"))
}

fn c2() -> Outcome {
    let rings: Vec<FusionRing> = (1..=5).map(|i| Fixture::Rank8(i).ring()).collect::<Result<_, _>>().map_err(err)?;
    let mats: Vec<SymMatrix> = rings
        .iter()
        .map(|r| localized_matrix(&LocalData::from_ring(r, &[6, 7])?, 3, &cfg()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    for m in &mats {
        exact_equals(m, &RANK8_T3, 132)?;
        ensure!(m.fingerprint() == mats[0].fingerprint(), "fingerprints differ");
    }
    let lmin = min_eig_bounds(&mats[0], &cfg()).map_err(err)?.estimate;
    ensure!((lmin + 2.948812176).abs() < 1e-6, "λ_min = {lmin}");
    // one evaluation, one witness, five exclusions
    let v = certify_psd(&mats[0], &cfg()).map_err(err)?;
    let w = v.witness().ok_or("no witness")?;
    for (r, m) in rings.iter().zip(&mats) {
        let (_, upper) = certified_rayleigh(m, &w.vector);
        ensure!(upper < 0.0, "{}: reused witness not certified", r.name());
    }
    Ok(format!("λ_min = {lmin:.9}, identical exact (1/132) matrix on all five, witness reused"))
}

fn c3() -> Outcome {
    let r = Fixture::Rank6Nc.ring().map_err(err)?;
    let t0 = Instant::now();
    let t = primary_matrix(&r, 3, &cfg()).map_err(err)?;
    let v = check_primary(&r, 3, &cfg()).map_err(err)?;
    let dt = t0.elapsed();
    ensure!(t.order() == 216, "order {}", t.order());
    ensure!(v.is_violated(), "verdict {}", v.label());
    let lmin = min_eig_bounds(&t, &cfg()).map_err(err)?.estimate;
    ensure!((lmin + 1.176375045).abs() < 1e-6, "λ_min = {lmin}");
    ensure!(dt < Duration::from_secs(5), "took {dt:?}");
    Ok(format!("216×216, λ_min = {lmin:.9}, {dt:?}"))
}

fn c4() -> Outcome {
    let b = k7_perturbation(5.0, 5.0, 5.0, 6.0, 7.0).map_err(err)?;
    ensure!((b.q2_plus - 8.882676).abs() < 1e-5, "Q2+ = {}", b.q2_plus);
    ensure!((b.q1_plus - 6.537671).abs() < 1e-5, "Q1+ = {}", b.q1_plus);
    let pos: Vec<f64> = quartic_real_roots(&K7_QUARTIC).into_iter().filter(|&x| x > 0.0).collect();
    ensure!(pos.len() == 2, "positive roots {pos:?}");
    ensure!((pos[0] - 6.2458).abs() < 1e-3 && (pos[1] - 9.5934).abs() < 1e-3, "roots {pos:?}");
    let alpha = alpha_threshold([5.0, 5.0, 5.0, 6.0, 7.0], 7.0, 12.0, &cfg()).map_err(err)?;
    ensure!((alpha - 9.5934).abs() < 1e-3, "α = {alpha}");
    Ok(format!("Q2+ = {:.6}, Q1+ = {:.6}, roots {:.4}/{:.4}, α = {alpha:.4}", b.q2_plus, b.q1_plus, pos[0], pos[1]))
}

fn c5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let d: [f64; 6] = std::array::from_fn(|_| rng.gen_range(1.0..12.0));
        let f = k7_corner_det(d);
        let g = k7_corner_det_brute(d).map_err(err)?;
        let rel = (f - g).abs() / f.abs().max(g.abs());
        worst = worst.max(rel);
        ensure!(rel <= 1e-9, "d = {d:?}: {f} vs {g}");
    }
    Ok(format!("100 random tuples, worst relative error {worst:.1e}"))
}

fn c6() -> Outcome {
    for i in 1..=5 {
        let r = Fixture::Rank8(i).ring().map_err(err)?;
        let l = LocalData::from_ring(&r, &[6, 7]).map_err(err)?;
        for text in ["I,I,swap", "I,I,swap,swap"] {
            let p = TwistPattern::parse(2, text).map_err(err)?;
            let v = check_reduced(&l, p.len() as u64, Some(&p), &cfg()).map_err(err)?;
            ensure!(v.is_violated(), "rank8_{i} ({text}): {}", v.label());
        }
    }
    Ok("(I,I,swap) and (I,I,swap,swap) violated on all five rank-8 rings".into())
}

fn c7() -> Outcome {
    for k in 3..=10 {
        let v = r4k_check(k, &cfg()).map_err(err)?;
        ensure!(v.is_violated(), "k = {k}: {}", v.label());
    }
    for k in 5..=10u32 {
        let x = r4k_ring(k).map_err(err)?.dims().values[2];
        let kf = k as f64;
        ensure!((kf * kf + kf + 1.0).sqrt() <= x + 1e-12 && x <= kf + 1.0 + 1e-12, "k = {k}: d₃ = {x}");
        let f = r4k_closed_form(k).map_err(err)?;
        ensure!(f < 0.0, "k = {k}: f = {f}");
    }
    Ok("violated for k = 3..10, f(d₃) < 0 for k = 5..10".into())
}

fn controls() -> Vec<Fixture> {
    let mut v: Vec<Fixture> = (2..=6).map(Fixture::Cyclic).collect();
    v.push(Fixture::Fibonacci);
    v.extend((2..=5).map(Fixture::NearGroup));
    v
}

fn c8() -> Outcome {
    let budget = SearchBudget::default();
    let mut checks = 0;
    for f in controls() {
        let r = f.ring().map_err(err)?;
        for n in 1..=3 {
            let v = check_primary(&r, n, &cfg()).map_err(err)?;
            ensure!(v.is_holds(), "{} primary n={n}: {}", r.name(), v.label());
            checks += 1;
        }
        // every check the default budget visits, one by one
        for k in 1..=budget.max_subset.min(r.rank()) {
            for set in subsets(r.rank(), k) {
                let l = LocalData::from_ring(&r, &set).map_err(err)?;
                for n in 1..=budget.max_n {
                    for p in catalog_patterns(k, n, budget.catalog) {
                        let v = if p.is_identity() {
                            check_localized(&l, n, &cfg())
                        } else {
                            check_reduced(&l, n as u64, Some(&p), &cfg())
                        }
                        .map_err(err)?;
                        ensure!(v.is_holds(), "{} S={set:?} n={n} {}: {}", r.name(), p.label(), v.label());
                        checks += 1;
                    }
                }
            }
        }
        ensure!(search_violation(&r, &budget, &cfg()).map_err(err)?.is_none(), "{}: search found a violation", r.name());
    }
    Ok(format!("{} controls, {checks} checks hold", controls().len()))
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..m)
        .flat_map(|first| {
            subsets(m, k - 1).into_iter().filter(move |rest| rest.iter().all(|&x| x > first)).map(move |rest| {
                let mut s = vec![first];
                s.extend(rest);
                s
            })
        })
        .collect()
}

fn all_fixtures() -> Result<Vec<FusionRing>, String> {
    let mut v = fixtures::corpus();
    for f in controls() {
        v.push(f.ring().map_err(err)?);
    }
    Ok(v)
}

fn c9() -> Outcome {
    // (a) random small rings
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let rings = common::random_rings(&mut rng, 200, 5, 3);
    ensure!(rings.len() == 200, "only {} random rings generated", rings.len());
    let max_rank = rings.iter().map(|r| r.rank()).max().unwrap_or(0);
    for r in &rings {
        for n in 1..=2 {
            let v = check_primary(r, n, &cfg()).map_err(err)?;
            ensure!(v.is_holds(), "random ring {:?}: primary n={n} {}", r.matrices(), v.label());
        }
    }
    // (b), (c) on every fixture
    let fx = all_fixtures()?;
    let mut matrix_free = 0;
    for r in &fx {
        let verdicts: Vec<PsdVerdict> = (1..=4).map(|n| check_primary(r, n, &cfg())).collect::<Result<_, _>>().map_err(err)?;
        for n in 2..=4 {
            if verdicts[n - 1].is_holds() {
                ensure!(!verdicts[n - 2].is_violated(), "{}: T{n} holds but T{} violated", r.name(), n - 1);
            }
        }
        let (t3, t4) = (&verdicts[2], &verdicts[3]);
        ensure!(!t3.is_inconclusive() && !t4.is_inconclusive(), "{}: T3 {} / T4 {}", r.name(), t3.label(), t4.label());
        ensure!(t3.is_holds() == t4.is_holds(), "{}: T3 {} but T4 {}", r.name(), t3.label(), t4.label());
        if r.rank().pow(4) > cfg().dense_solver_cap {
            matrix_free += 1;
        }
    }
    // (d) localized = principal submatrix, exactly
    for r in &fx {
        let m = r.rank();
        let t = primary_matrix(r, 2, &cfg()).map_err(err)?;
        for set in [vec![0, m - 1], (0..m).step_by(2).collect::<Vec<_>>()] {
            let l = LocalData::from_ring(r, &set).map_err(err)?;
            let loc = localized_matrix(&l, 2, &cfg()).map_err(err)?;
            let s = set.len();
            let idx: Vec<usize> = (0..s * s).map(|q| set[q / s] * m + set[q % s]).collect();
            let sub = t.principal(&idx);
            ensure!(loc.is_exact() && sub.is_exact(), "{}: not exact", r.name());
            ensure!(loc.to_full() == sub.to_full() && loc.exact() == sub.exact(), "{} S={set:?}: submatrix differs", r.name());
        }
    }
    Ok(format!(
        "200 random rings (rank ≤ {max_rank}) PSD at n=1,2; monotone and T3⇔T4 on {} fixtures ({matrix_free} via matrix-free T4); localized ≡ principal",
        fx.len()
    ))
}

fn c10() -> Outcome {
    let mut count = 0;
    for r in all_fixtures()?.iter().filter(|r| r.is_commutative()) {
        let table = character_table(r).map_err(err)?;
        let mut nu: Vec<f64> = nu_values3(&table).into_iter().map(|(_, v)| v).collect();
        let t = primary_matrix(r, 3, &cfg()).map_err(err)?;
        let n = t.order();
        let mut spec: Vec<f64> = DMatrix::from_row_slice(n, n, &t.to_full()).symmetric_eigenvalues().iter().copied().collect();
        nu.sort_by(f64::total_cmp);
        spec.sort_by(f64::total_cmp);
        ensure!(nu.len() == spec.len(), "{}: {} ν values for order {n}", r.name(), nu.len());
        for (a, b) in nu.iter().zip(&spec) {
            ensure!((a - b).abs() <= 1e-8 * b.abs().max(1.0), "{}: ν {a} vs eigenvalue {b}", r.name());
        }
        let s = check_schur(r, &cfg()).map_err(err)?;
        let p = check_primary(r, 3, &cfg()).map_err(err)?;
        ensure!(s.label() == p.label(), "{}: schur {} vs primary {}", r.name(), s.label(), p.label());
        count += 1;
    }
    Ok(format!("{count} commutative fixtures: ν multiset = spec(T3), verdicts agree"))
}

fn c11() -> Outcome {
    let g = d5_graph();
    let l = d5_local_data(&g).map_err(err)?;
    let v = graph_local_check(&l, 1, &cfg()).map_err(err)?;
    let lam = witness_rayleigh(&v)?;
    let want = 1.0 - 1.0 / (2.0 * (std::f64::consts::PI / 8.0).sin());
    ensure!((lam - want).abs() < 1e-9, "D5 λ = {lam}, want {want}");
    let p = GraphFamilyRaw::new(10, 100.0, 20.0).map_err(err)?;
    ensure!(chain_bound_check(p), "chain bound false");
    let first = graph_family_check(p, 6).map_err(err)?;
    let all = graph_family_witnesses(p, 6).map_err(err)?;
    ensure!(first.is_some() && all.contains(&(4, 2, 2)), "witnesses {all:?}");
    let r = Fixture::K7.ring().map_err(err)?;
    let lk = LocalData::from_ring(&r, &[5, 6]).map_err(err)?;
    let base = min_eig_bounds(&localized_matrix(&lk, 3, &cfg()).map_err(err)?, &cfg()).map_err(err)?.estimate;
    for ell in 1..=5u32 {
        let s = orbifold_scaled(&lk, 3, ell, &cfg()).map_err(err)?;
        let lam = min_eig_bounds(&s, &cfg()).map_err(err)?.estimate;
        ensure!((lam - (ell * ell) as f64 * base).abs() < 1e-9, "ℓ = {ell}: {lam}");
    }
    Ok(format!("D5 λ = {lam:.10}; (4,2,2) among {} witnesses; ℓ² scaling for ℓ ≤ 5", all.len()))
}

fn c12() -> Outcome {
    let r = Fixture::K7.ring().map_err(err)?;
    let l = LocalData::from_ring(&r, &[5, 6]).map_err(err)?;
    let t0 = Instant::now();
    let a = reduced_matrix(&l, 1_000_000).map_err(err)?;
    let dt = t0.elapsed();
    ensure!(a.to_full().iter().all(|x| x.is_finite()), "non-finite entries");
    ensure!(dt < Duration::from_secs(1), "took {dt:?}");
    let full = LocalData::from_ring(&r, &(0..7).collect::<Vec<_>>()).map_err(err)?;
    let op = localized_operator(&full, 3).map_err(err)?;
    let mf = kron_min_eig(&op, &cfg()).map_err(err)?.estimate;
    let dense = min_eig_bounds(&primary_matrix(&r, 3, &cfg()).map_err(err)?, &cfg()).map_err(err)?.estimate;
    ensure!((mf - dense).abs() < 1e-6, "matrix-free {mf} vs dense {dense}");
    Ok(format!("n = 10⁶ in {dt:?}; matrix-free {mf:.10} vs dense {dense:.10}"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("K7 localized (1/210) matrix", c1),
        ("rank-8 quintet", c2),
        ("rank-6 primary T3", c3),
        ("perturbation formulas", c4),
        ("corner determinant", c5),
        ("reduced twisted rank-8", c6),
        ("R4,k family", c7),
        ("positive controls", c8),
        ("structural properties", c9),
        ("commutative equivalence", c10),
        ("graph screening", c11),
        ("performance", c12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let dt = t0.elapsed();
        match res {
            Ok(msg) => println!("criterion {:>2}: PASS  {name}: {msg} [{dt:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {msg} [{dt:.2?}]", i + 1)
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
