#![allow(dead_code)]

use std::collections::BTreeMap;

use fusion_obstruct::{FusionCoeffs, FusionRing};
use rand::Rng;

/// Zero with probability `sparsity`, otherwise mostly 1 with the
/// occasional 2 or 3.
fn small_coefficient(rng: &mut impl Rng, sparsity: f64, max: u32) -> u32 {
    if rng.gen_bool(sparsity) {
        return 0;
    }
    let r: f64 = rng.gen();
    let v = if r < 0.7 {
        1
    } else if r < 0.9 {
        2
    } else {
        3
    };
    v.min(max)
}

/// Unit, duality and Frobenius reciprocity hold by construction for a
/// commutative table `N_{ab}^c = c(a, b, c*)` with `c` symmetric and
/// dual-invariant; `Table` holds one value per orbit of such triples.
struct Table {
    m: usize,
    dual: Vec<usize>,
    keys: Vec<[usize; 3]>,
    values: Vec<u32>,
    orbit: Vec<usize>,
}

impl Table {
    fn random(rng: &mut impl Rng, m: usize, max: u32) -> Self {
        // random involution fixing the unit
        let mut dual: Vec<usize> = (0..m).collect();
        let mut free: Vec<usize> = (1..m).collect();
        while free.len() >= 2 && rng.gen_bool(0.3) {
            let a = free.swap_remove(rng.gen_range(0..free.len()));
            let b = free.swap_remove(rng.gen_range(0..free.len()));
            dual[a] = b;
            dual[b] = a;
        }
        let canon = |t: [usize; 3]| {
            let mut x = t;
            x.sort_unstable();
            let mut y = [dual[t[0]], dual[t[1]], dual[t[2]]];
            y.sort_unstable();
            x.min(y)
        };
        let mut keys: BTreeMap<[usize; 3], usize> = BTreeMap::new();
        let mut orbit = vec![usize::MAX; m * m * m];
        for i in 1..m {
            for j in 1..m {
                for k in 1..m {
                    let key = canon([i, j, dual[k]]);
                    let next = keys.len();
                    orbit[(i * m + j) * m + k] = *keys.entry(key).or_insert(next);
                }
            }
        }
        let mut ordered = vec![[0; 3]; keys.len()];
        for (k, &i) in &keys {
            ordered[i] = *k;
        }
        let sparsity = rng.gen_range(0.4..0.9);
        let values = (0..ordered.len()).map(|_| small_coefficient(rng, sparsity, max)).collect();
        Self {
            m,
            dual,
            keys: ordered,
            values,
            orbit,
        }
    }

    fn coeffs(&self) -> Vec<f64> {
        let m = self.m;
        let mut n = vec![0.0; m * m * m];
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let idx = (i * m + j) * m + k;
                    n[idx] = if i == 0 {
                        (j == k) as u32 as f64
                    } else if j == 0 {
                        (i == k) as u32 as f64
                    } else if k == 0 {
                        (self.dual[i] == j) as u32 as f64
                    } else {
                        self.values[self.orbit[idx]] as f64
                    };
                }
            }
        }
        n
    }

    /// `Σ |((x_a x_b) x_c − x_a (x_b x_c))_e|`.
    fn defect(&self) -> f64 {
        let m = self.m;
        let n = self.coeffs();
        let g = |i: usize, j: usize, k: usize| n[(i * m + j) * m + k];
        let mut d = 0.0;
        for a in 1..m {
            for b in 1..m {
                for c in 1..m {
                    for e in 0..m {
                        let left: f64 = (0..m).map(|t| g(a, b, t) * g(t, c, e)).sum();
                        let right: f64 = (0..m).map(|t| g(b, c, t) * g(a, t, e)).sum();
                        d += (left - right).abs();
                    }
                }
            }
        }
        d
    }
}

/// A random table repaired towards associativity by single-orbit moves,
/// then handed to the validator, which has the final word.
pub fn candidate(rng: &mut impl Rng, m: usize, max: u32) -> Option<FusionRing> {
    let mut t = Table::random(rng, m, max);
    let mut d = t.defect();
    for _ in 0..400 {
        if d == 0.0 || t.keys.is_empty() {
            break;
        }
        let k = rng.gen_range(0..t.keys.len());
        let old = t.values[k];
        t.values[k] = rng.gen_range(0..=max);
        let nd = t.defect();
        if nd <= d {
            d = nd;
        } else {
            t.values[k] = old;
        }
    }
    let coeffs = FusionCoeffs::new(m, t.coeffs(), t.dual.clone()).ok()?;
    FusionRing::new(format!("random_{m}"), coeffs).ok()
}

/// `count` distinct valid rings of rank `2..=max_rank`, by rejection.
pub fn random_rings(rng: &mut impl Rng, count: usize, max_rank: usize, max_entry: u32) -> Vec<FusionRing> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < 200_000 {
        attempts += 1;
        let m = rng.gen_range(2..=max_rank);
        if let Some(r) = candidate(rng, m, max_entry) {
            let key: Vec<u32> = r.matrices().iter().flatten().map(|&x| x as u32).chain((0..m).map(|i| r.dual(i) as u32)).collect();
            if seen.insert(key) {
                out.push(r);
            }
        }
    }
    out
}
