//! Exact PSD decision for rational matrices.
//!
//! Fraction-free symmetric elimination in diagonal order: a negative pivot,
//! or a zero pivot with a nonzero row, proves indefiniteness. On failure a
//! rational witness `x` with `xᵀAx < 0` is rebuilt from an LDLᵀ of the
//! indices that took part.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SymMatrix;

#[derive(Debug, Clone, PartialEq)]
pub enum ExactPsd {
    Psd,
    /// Rational witness with a strictly negative quadratic form.
    NotPsd(Vec<f64>),
}

enum Failure {
    Negative(usize),
    ZeroPivot(usize, usize),
}

/// Decides positive semidefiniteness exactly. Float-only matrices are
/// treated as exact binary rationals via their numerators when available,
/// otherwise as the stored `f64` values scaled to integers.
pub fn exact_psd(a: &SymMatrix) -> ExactPsd {
    let n = a.order();
    let ints = integer_entries(a);
    let mut s: Vec<Vec<BigInt>> = ints.clone();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let failure = loop {
        let Some(&k) = remaining.first() else {
            return ExactPsd::Psd;
        };
        let skk = s[k][k].clone();
        if skk.is_zero() {
            if let Some(&j) = remaining[1..].iter().find(|&&j| !s[k][j].is_zero()) {
                break Failure::ZeroPivot(k, j);
            }
            remaining.remove(0);
            continue;
        }
        if skk.is_negative() {
            break Failure::Negative(k);
        }
        remaining.remove(0);
        for (ai, &i) in remaining.iter().enumerate() {
            for &j in &remaining[ai..] {
                let v = (&skk * &s[i][j] - &s[i][k] * &s[k][j]).div_floor(&prev);
                s[i][j] = v.clone();
                s[j][i] = v;
            }
        }
        prev = skk;
        pivots.push(k);
    };
    let tail = match failure {
        Failure::Negative(k) => vec![k],
        Failure::ZeroPivot(k, j) => vec![k, j],
    };
    ExactPsd::NotPsd(witness(&ints, &pivots, &tail, n))
}

fn integer_entries(a: &SymMatrix) -> Vec<Vec<BigInt>> {
    let n = a.order();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    match a.exact() {
        Some(e) => {
            for i in 0..n {
                for j in 0..=i {
                    let v = BigInt::from(e.numer[i * (i + 1) / 2 + j]);
                    out[i][j] = v.clone();
                    out[j][i] = v;
                }
            }
        }
        None => {
            // every finite double is m·2^e; scale by a common power of two
            let min_exp = (0..n)
                .flat_map(|i| (0..=i).map(move |j| (i, j)))
                .filter_map(|(i, j)| {
                    let v = a.get(i, j);
                    (v != 0.0).then(|| v.abs().log2().floor() as i32 - 60)
                })
                .min()
                .unwrap_or(0);
            for i in 0..n {
                for j in 0..=i {
                    let v = a.get(i, j);
                    let r = BigRational::from_float(v).unwrap_or_else(BigRational::zero);
                    let scaled = if min_exp < 0 {
                        r * BigRational::from_integer(BigInt::one() << (-min_exp) as usize)
                    } else {
                        r
                    };
                    let t = scaled.to_integer();
                    out[i][j] = t.clone();
                    out[j][i] = t;
                }
            }
        }
    }
    out
}

/// Solves back through the eliminated pivots so that `xᵀAx = yᵀSy < 0`,
/// where `S` is the Schur complement on `tail`.
fn witness(a: &[Vec<BigInt>], pivots: &[usize], tail: &[usize], n: usize) -> Vec<f64> {
    let idx: Vec<usize> = pivots.iter().chain(tail).copied().collect();
    let k = idx.len();
    let mut s: Vec<Vec<BigRational>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| BigRational::from_integer(a[i][j].clone())).collect())
        .collect();
    let np = pivots.len();
    let mut l = vec![vec![BigRational::zero(); k]; np];
    for p in 0..np {
        let piv = s[p][p].clone();
        for q in p + 1..k {
            l[p][q] = &s[q][p] / &piv;
        }
        for q in p + 1..k {
            for r in p + 1..k {
                let v = &s[q][r] - &l[p][q] * &s[p][r];
                s[q][r] = v;
            }
        }
    }
    let mut x = vec![BigRational::zero(); k];
    if tail.len() == 1 {
        x[np] = BigRational::one();
    } else {
        let skj = s[np][np + 1].clone();
        let sjj = s[np + 1][np + 1].clone();
        let t = (sjj.abs() + BigRational::one()) / skj.abs();
        x[np] = t;
        x[np + 1] = if skj.is_positive() { -BigRational::one() } else { BigRational::one() };
    }
    for p in (0..np).rev() {
        let mut acc = BigRational::zero();
        for q in p + 1..k {
            acc += &l[p][q] * &x[q];
        }
        x[p] = -acc;
    }
    // clear denominators, then shrink to f64 range
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let bits = ints.iter().map(|v| v.bits()).max().unwrap_or(0);
    let shift = bits.saturating_sub(900);
    let mut out = vec![0.0; n];
    for (pos, &i) in idx.iter().enumerate() {
        let v: BigInt = if shift > 0 { &ints[pos] >> shift as usize } else { ints[pos].clone() };
        out[i] = v.to_f64().unwrap_or(0.0);
        if out[i] == 0.0 && ints[pos].sign() != Sign::NoSign {
            out[i] = if ints[pos].is_negative() { -f64::MIN_POSITIVE } else { f64::MIN_POSITIVE };
        }
    }
    let nrm = out.iter().map(|v| v * v).sum::<f64>().sqrt();
    if nrm > 0.0 && nrm.is_finite() {
        out.iter_mut().for_each(|v| *v /= nrm);
    }
    out
}
