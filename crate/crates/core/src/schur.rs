//! Character tables of commutative fusion rings and the Schur product test.

use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::config::EvalConfig;
use crate::ring::FusionRing;
use crate::spectra::{certify_witness, Certificate, EigInterval, Method, PsdVerdict, Witness};

type CVec = Vec<Complex<f64>>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchurError {
    #[error("ring is not commutative")]
    NotCommutative,
    #[error("character index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("empty character tuple")]
    EmptyTuple,
    #[error("simultaneous diagonalisation failed: {0}")]
    Numerical(String),
}

/// `λ[i][j]`: eigenvalue of `M_i` on the `j`-th common eigenvector.
/// Column 0 is the Perron column (`λ[i][0] = d_i`).
#[derive(Debug, Clone)]
pub struct CharacterTable {
    rank: usize,
    values: Vec<Complex<f64>>,
    vectors: Vec<Vec<Complex<f64>>>,
    /// Bound on the error of every entry.
    pub error: f64,
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<f64> {
        self.values[i * self.rank + j]
    }

    /// True when some character takes a non-real value.
    pub fn is_complex(&self) -> bool {
        self.values.iter().any(|z| z.im.abs() > 1e-9)
    }

    /// Unit common eigenvector for column `j`.
    pub fn vector(&self, j: usize) -> &[Complex<f64>] {
        &self.vectors[j]
    }
}

/// Simultaneous eigendecomposition of the fusion matrices.
///
/// A seeded random Hermitian combination `Σ c_i (M_i + M_iᵀ) + i Σ c'_i (M_i − M_iᵀ)`
/// has simple spectrum whenever the characters are distinct, so its
/// eigenvectors diagonalise every `M_i`.
pub fn character_table(ring: &FusionRing) -> Result<CharacterTable, SchurError> {
    if !ring.is_commutative() {
        return Err(SchurError::NotCommutative);
    }
    let m = ring.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc4a2_0001);
    let mut h = DMatrix::<Complex<f64>>::zeros(m, m);
    for i in 0..m {
        let c: f64 = rng.gen_range(0.5..1.5);
        let c2: f64 = rng.gen_range(0.5..1.5);
        let a = ring.matrix(i);
        for r in 0..m {
            for s in 0..m {
                let sym = a[r * m + s] + a[s * m + r];
                let anti = a[r * m + s] - a[s * m + r];
                h[(r, s)] += Complex::new(c * sym, c2 * anti);
            }
        }
    }
    let eig = h.symmetric_eigen();
    // (right, left) eigenvector pairs
    let mut cols: Vec<(CVec, CVec)> = Vec::with_capacity(m);
    let mut max_res = 0.0f64;
    for j in 0..m {
        let v: Vec<Complex<f64>> = eig.eigenvectors.column(j).iter().copied().collect();
        let mut lam = Vec::with_capacity(m);
        for i in 0..m {
            let a = ring.matrix(i);
            let av: Vec<Complex<f64>> = (0..m).map(|r| (0..m).map(|s| v[s] * a[r * m + s]).sum()).collect();
            let l: Complex<f64> = v.iter().zip(&av).map(|(x, y)| x.conj() * y).sum();
            let res = av.iter().zip(&v).map(|(y, x)| (y - x * l).norm_sqr()).sum::<f64>().sqrt();
            let d = ring.dims().values[i];
            max_res = max_res.max(res / d.max(1.0));
            lam.push(l);
        }
        cols.push((lam, v));
    }
    if max_res > 1e-9 {
        return Err(SchurError::Numerical(format!("eigenvector residual {max_res:.3e}")));
    }
    let dims = &ring.dims().values;
    let perron = cols
        .iter()
        .position(|(l, _)| l.iter().zip(dims).all(|(z, d)| (z.re - d).abs() <= 1e-8 * d.max(1.0) && z.im.abs() <= 1e-8))
        .ok_or_else(|| SchurError::Numerical("no Perron column".into()))?;
    let first = cols.remove(perron);
    // descending lexicographic on (λ_{2,j}, λ_{3,j}, …)
    cols.sort_by(|(a, _), (b, _)| {
        for i in 1..m {
            let o = b[i].re.total_cmp(&a[i].re).then(b[i].im.total_cmp(&a[i].im));
            if o != std::cmp::Ordering::Equal && (a[i] - b[i]).norm() > 1e-9 {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    });
    cols.insert(0, first);
    // fix the phase of each vector so its largest entry is real positive
    let vectors = cols
        .iter()
        .map(|(_, v)| {
            let k = (0..m).max_by(|&a, &b| v[a].norm().total_cmp(&v[b].norm())).unwrap_or(0);
            let phase = v[k].conj() / v[k].norm();
            v.iter().map(|z| z * phase).collect()
        })
        .collect();
    let mut values = vec![Complex::new(0.0, 0.0); m * m];
    for (j, (l, _)) in cols.iter().enumerate() {
        for i in 0..m {
            values[i * m + j] = l[i];
        }
    }
    Ok(CharacterTable {
        rank: m,
        values,
        vectors,
        error: (max_res + 64.0 * f64::EPSILON * m as f64) * dims.iter().fold(1.0f64, |a, &b| a.max(b)),
    })
}

/// `ν_j = Σ_i Π_k λ_{i,j_k} / λ_{i,1}^{n-2}` for 0-based columns `jvec`.
/// The value is real for every tuple; the real part is returned.
pub fn nu_value(table: &CharacterTable, jvec: &[usize]) -> Result<f64, SchurError> {
    let m = table.rank();
    if jvec.is_empty() {
        return Err(SchurError::EmptyTuple);
    }
    if let Some(&j) = jvec.iter().find(|&&j| j >= m) {
        return Err(SchurError::IndexOutOfRange(j + 1, m));
    }
    let n = jvec.len() as i32;
    let mut acc = Complex::new(0.0, 0.0);
    for i in 0..m {
        let d = table.get(i, 0).re;
        let p: Complex<f64> = jvec.iter().map(|&j| table.get(i, j)).product();
        acc += p * d.powi(2 - n);
    }
    Ok(acc.re)
}

/// All `ν` over 3-tuples, in lexicographic tuple order.
pub fn nu_values3(table: &CharacterTable) -> Vec<([usize; 3], f64)> {
    let m = table.rank();
    let mut out = Vec::with_capacity(m * m * m);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let v = nu_value(table, &[a, b, c]).expect("indices in range");
                out.push(([a, b, c], v));
            }
        }
    }
    out
}

/// Schur product test over all 3-tuples of characters.
pub fn check_schur(ring: &FusionRing, cfg: &EvalConfig) -> Result<PsdVerdict, SchurError> {
    let table = character_table(ring)?;
    let m = ring.rank();
    let nus = nu_values3(&table);
    let (jmin, nu_min) = nus.iter().copied().min_by(|a, b| a.1.total_cmp(&b.1)).expect("rank ≥ 1");
    let fp: f64 = ring.dims().values.iter().map(|d| d * d).sum();
    let err = 8.0 * table.error * fp.max(1.0);
    let tol = cfg.tol.unwrap_or(64.0 * f64::EPSILON * (m * m * m) as f64 * fp + err);
    let interval = EigInterval {
        lower: nu_min - err,
        upper: nu_min + err,
    };
    let label = format!("schur j=({},{},{})", jmin[0] + 1, jmin[1] + 1, jmin[2] + 1);
    if nu_min + err < -tol {
        // a real eigenvector of T₃ in the ν-eigenspace: Re or Im of v_a ⊗ v_b ⊗ v_c
        let (va, vb, vc) = (table.vector(jmin[0]), table.vector(jmin[1]), table.vector(jmin[2]));
        let mut t = Vec::with_capacity(m * m * m);
        for x in va {
            for y in vb {
                for z in vc {
                    t.push(x * y * z);
                }
            }
        }
        let re: f64 = t.iter().map(|z| z.re * z.re).sum();
        let im: f64 = t.iter().map(|z| z.im * z.im).sum();
        let vector: Vec<f64> = if re >= im {
            t.iter().map(|z| z.re / re.sqrt()).collect()
        } else {
            t.iter().map(|z| z.im / im.sqrt()).collect()
        };
        if m * m * m <= cfg.dense_cap {
            if let Ok(t3) = crate::criteria::primary_matrix(ring, 3, cfg) {
                if let Some(mut w) = certify_witness(&t3, &vector, interval, tol) {
                    w.criterion = label;
                    return Ok(PsdVerdict::Violated(Box::new(w)));
                }
            }
        }
        return Ok(PsdVerdict::Violated(Box::new(Witness {
            criterion: label,
            vector,
            rayleigh: nu_min,
            interval,
            certificate: Certificate::Interval { upper: nu_min + err },
            fingerprint: format!("schur:{}", ring.name()),
        })));
    }
    if nu_min - err >= -tol {
        return Ok(PsdVerdict::Holds {
            interval,
            method: Method::ClosedForm,
        });
    }
    Ok(PsdVerdict::Inconclusive {
        interval,
        method: Method::ClosedForm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;

    #[test]
    fn cyclic_characters_are_roots_of_unity() {
        let r = Fixture::Cyclic(3).ring().unwrap();
        let t = character_table(&r).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((t.get(i, j).norm() - 1.0).abs() < 1e-10);
            }
        }
        assert!(t.is_complex());
    }

    #[test]
    fn fibonacci_table() {
        let r = Fixture::Fibonacci.ring().unwrap();
        let t = character_table(&r).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((t.get(1, 0).re - phi).abs() < 1e-12);
        assert!((t.get(1, 1).re - (1.0 - phi)).abs() < 1e-12);
        let nu = nu_value(&t, &[1, 1, 1]).unwrap();
        assert!((nu - (1.0 - phi.powi(-4))).abs() < 1e-12);
        assert!(check_schur(&r, &EvalConfig::default()).unwrap().is_holds());
    }

    #[test]
    fn perron_tuple_gives_global_dimension() {
        let r = Fixture::K7.ring().unwrap();
        let t = character_table(&r).unwrap();
        assert!((nu_value(&t, &[0, 0, 0]).unwrap() - 210.0).abs() < 1e-9);
        assert!(matches!(nu_value(&t, &[0, 7]), Err(SchurError::IndexOutOfRange(8, 7))));
    }

    #[test]
    fn noncommutative_rejected() {
        let r = Fixture::Rank6Nc.ring().unwrap();
        assert_eq!(character_table(&r).unwrap_err(), SchurError::NotCommutative);
    }
}
