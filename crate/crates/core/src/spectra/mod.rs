//! Certified smallest-eigenvalue bounds for real symmetric matrices.
//!
//! Dense path: Householder tridiagonalisation, Sturm-count bisection for
//! `λ_min`, inverse iteration for the eigenvector. A `Violated` verdict is
//! only issued when the Rayleigh quotient of a witness is certified negative,
//! exactly for rational matrices and by a rounding-error bound otherwise.

mod dense;
mod exact;
pub mod kron;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::config::EvalConfig;

pub use dense::{tridiagonal_min, Tridiagonal};
pub use exact::{exact_psd, ExactPsd};
pub use kron::{kron_apply, kron_min_eig, KronOperator};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("order {order} exceeds dense cap {cap}")]
    DenseCapExceeded { order: usize, cap: usize },
    #[error("eigensolver did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix has non-finite entries")]
    NonFinite,
}

/// Rational entries `numer / denom`, stored on the lower triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactEntries {
    pub numer: Vec<i128>,
    pub denom: i128,
}

/// Symmetric matrix stored once per unordered pair (lower triangle, row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    packed: Vec<f64>,
    exact: Option<ExactEntries>,
    entry_error: f64,
}

#[inline]
fn pidx(i: usize, j: usize) -> usize {
    let (a, b) = if i >= j { (i, j) } else { (j, i) };
    a * (a + 1) / 2 + b
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            packed: vec![0.0; order * (order + 1) / 2],
            exact: None,
            entry_error: 0.0,
        }
    }

    /// Takes the lower triangle of a row-major square array.
    /// `entry_error` bounds `|stored - true|` per entry.
    pub fn from_full(order: usize, full: &[f64], entry_error: f64) -> Result<Self, SpectraError> {
        if full.len() != order * order {
            return Err(SpectraError::Dimension(format!("{} entries for order {order}", full.len())));
        }
        if full.iter().any(|x| !x.is_finite()) {
            return Err(SpectraError::NonFinite);
        }
        let mut packed = Vec::with_capacity(order * (order + 1) / 2);
        for i in 0..order {
            packed.extend_from_slice(&full[i * order..i * order + i + 1]);
        }
        Ok(Self {
            order,
            packed,
            exact: None,
            entry_error,
        })
    }

    /// Packed lower triangle, row-major.
    pub(crate) fn from_packed(order: usize, packed: Vec<f64>, entry_error: f64) -> Result<Self, SpectraError> {
        if packed.len() != order * (order + 1) / 2 {
            return Err(SpectraError::Dimension("bad packing".into()));
        }
        if packed.iter().any(|x| !x.is_finite()) {
            return Err(SpectraError::NonFinite);
        }
        Ok(Self {
            order,
            packed,
            exact: None,
            entry_error,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectraError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SpectraError::Dimension("matrix is not square".into()));
        }
        let full: Vec<f64> = rows.iter().flatten().copied().collect();
        Self::from_full(n, &full, 0.0)
    }

    /// Packed exact numerators over a common positive denominator.
    pub fn from_exact(order: usize, numer: Vec<i128>, denom: i128) -> Result<Self, SpectraError> {
        if numer.len() != order * (order + 1) / 2 || denom <= 0 {
            return Err(SpectraError::Dimension("bad exact packing".into()));
        }
        let d = denom as f64;
        let packed = numer.iter().map(|&x| x as f64 / d).collect();
        Ok(Self {
            order,
            packed,
            exact: Some(ExactEntries { numer, denom }),
            entry_error: 0.0,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.packed[pidx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.packed[pidx(i, j)] = v;
        self.exact = None;
    }

    pub fn exact(&self) -> Option<&ExactEntries> {
        self.exact.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn entry_error(&self) -> f64 {
        self.entry_error
    }

    pub fn max_abs(&self) -> f64 {
        self.packed.iter().fold(0.0, |a, &b| a.max(b.abs()))
    }

    pub fn to_full(&self) -> Vec<f64> {
        let n = self.order;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = self.packed[pidx(i, j)];
                out[i * n + j] = v;
                out[j * n + i] = v;
            }
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        let n = self.order;
        self.to_full().chunks(n.max(1)).map(|r| r.to_vec()).take(n).collect()
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.order;
        let mut y = vec![0.0; n];
        for i in 0..n {
            let row = &self.packed[i * (i + 1) / 2..i * (i + 1) / 2 + i + 1];
            for (j, &a) in row.iter().enumerate() {
                y[i] += a * x[j];
                if j != i {
                    y[j] += a * x[i];
                }
            }
        }
        y
    }

    /// Default absolute tolerance `64 ε · order · max|A_ij|`.
    pub fn default_tol(&self) -> f64 {
        64.0 * f64::EPSILON * self.order as f64 * self.max_abs()
    }

    /// Default decision tolerance: [`Self::default_tol`] widened by the Weyl
    /// bound `order · entry_error` of the input uncertainty.
    pub fn decision_tol(&self) -> f64 {
        self.default_tol() + self.order as f64 * self.entry_error
    }

    /// Hex digest of the stored entries (exact numerators when available).
    pub fn fingerprint(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update((self.order as u64).to_le_bytes());
        match &self.exact {
            Some(e) => {
                h.update(e.denom.to_le_bytes());
                for x in &e.numer {
                    h.update(x.to_le_bytes());
                }
            }
            None => {
                for x in &self.packed {
                    h.update(x.to_bits().to_le_bytes());
                }
            }
        }
        h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Principal submatrix on `idx`.
    pub fn principal(&self, idx: &[usize]) -> SymMatrix {
        let k = idx.len();
        let mut packed = Vec::with_capacity(k * (k + 1) / 2);
        let mut numer = Vec::new();
        for a in 0..k {
            for b in 0..=a {
                packed.push(self.get(idx[a], idx[b]));
                if let Some(e) = &self.exact {
                    numer.push(e.numer[pidx(idx[a], idx[b])]);
                }
            }
        }
        Self {
            order: k,
            packed,
            exact: self.exact.as_ref().map(|e| ExactEntries { numer, denom: e.denom }),
            entry_error: self.entry_error,
        }
    }
}

/// Certified two-sided bracket on the smallest eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigInterval {
    pub lower: f64,
    pub upper: f64,
}

impl EigInterval {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigBounds {
    pub interval: EigInterval,
    /// Best point estimate of `λ_min`.
    pub estimate: f64,
    /// Unit approximate eigenvector for `λ_min`.
    pub vector: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Dense,
    MatrixFree,
    Exact,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `vᵀ A v = numer / denom < 0` for the integer vector `v`.
    ExactRational { numer: String, denom: String },
    /// `vᵀ A v / vᵀ v ≤ upper < 0` after accounting for rounding.
    Interval { upper: f64 },
    /// A quantity that must be nonnegative on PSD matrices is negative.
    Determinant { value: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// Human-readable criterion specification, filled in by the caller.
    pub criterion: String,
    pub vector: Vec<f64>,
    pub rayleigh: f64,
    pub interval: EigInterval,
    pub certificate: Certificate,
    pub fingerprint: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PsdVerdict {
    Holds { interval: EigInterval, method: Method },
    Violated(Box<Witness>),
    Inconclusive { interval: EigInterval, method: Method },
}

impl PsdVerdict {
    pub fn is_holds(&self) -> bool {
        matches!(self, PsdVerdict::Holds { .. })
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, PsdVerdict::Violated(_))
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, PsdVerdict::Inconclusive { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            PsdVerdict::Holds { .. } => "holds",
            PsdVerdict::Violated(_) => "violated",
            PsdVerdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn interval(&self) -> EigInterval {
        match self {
            PsdVerdict::Holds { interval, .. } | PsdVerdict::Inconclusive { interval, .. } => *interval,
            PsdVerdict::Violated(w) => w.interval,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            PsdVerdict::Violated(w) => Some(w),
            _ => None,
        }
    }

    /// Attaches a criterion description to a witness.
    pub fn with_criterion(mut self, spec: impl Into<String>) -> Self {
        if let PsdVerdict::Violated(w) = &mut self {
            w.criterion = spec.into();
        }
        self
    }

    /// Exit-code style ordering: violated > inconclusive > holds.
    pub fn severity(&self) -> u8 {
        match self {
            PsdVerdict::Holds { .. } => 0,
            PsdVerdict::Inconclusive { .. } => 1,
            PsdVerdict::Violated(_) => 2,
        }
    }
}

/// Unit-roundoff based constant `γ_k = k u / (1 - k u)`.
pub(crate) fn gamma(k: usize) -> f64 {
    let ku = k as f64 * f64::EPSILON * 0.5;
    ku / (1.0 - ku)
}

/// Bracket on `λ_min(A)` from the dense solver.
pub fn min_eig_bounds(a: &SymMatrix, cfg: &EvalConfig) -> Result<EigBounds, SpectraError> {
    let n = a.order();
    if n > cfg.dense_cap {
        return Err(SpectraError::DenseCapExceeded { order: n, cap: cfg.dense_cap });
    }
    if n == 0 {
        return Err(SpectraError::Dimension("empty matrix".into()));
    }
    // backward-error envelope of the tridiagonal reduction
    let tol = a.default_tol();
    let full = a.to_full();
    let tri = Tridiagonal::from_symmetric(full, n);
    let (lo, hi) = tri.min_eigenvalue_bracket();
    let vector = tri.min_eigenvector(hi);
    let weyl = n as f64 * a.entry_error();
    let (_, rq_upper) = certified_rayleigh(a, &vector);
    let upper = (hi + tol + weyl).min(rq_upper);
    Ok(EigBounds {
        interval: EigInterval {
            lower: lo - tol - weyl,
            upper,
        },
        estimate: 0.5 * (lo + hi),
        vector,
    })
}

/// Rayleigh quotient of `v` and a certified upper bound on the true quotient.
pub fn certified_rayleigh(a: &SymMatrix, v: &[f64]) -> (f64, f64) {
    let n = a.order();
    let av = a.matvec(v);
    let vv: f64 = v.iter().map(|x| x * x).sum();
    let q: f64 = v.iter().zip(&av).map(|(x, y)| x * y).sum();
    // |v|ᵀ|A||v| bounds the accumulated rounding
    let mut abs_q = 0.0;
    for i in 0..n {
        for j in 0..n {
            abs_q += v[i].abs() * a.get(i, j).abs() * v[j].abs();
        }
    }
    let l1: f64 = v.iter().map(|x| x.abs()).sum();
    let err = gamma(2 * n + 4) * abs_q + a.entry_error() * l1 * l1;
    let vv_lo = vv * (1.0 - gamma(n + 2));
    let num_hi = q + err;
    let upper = if num_hi >= 0.0 { num_hi / vv_lo } else { num_hi / (vv * (1.0 + gamma(n + 2))) };
    (q / vv, upper)
}

/// Exact `wᵀ N w` for an integer rescaling `w` of `v`; returns `(w, numer, denom)`
/// with value `numer / denom`.
pub fn exact_quadratic_form(e: &ExactEntries, order: usize, v: &[f64]) -> Option<(Vec<i64>, BigInt, BigInt)> {
    let vmax = v.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    if vmax == 0.0 || !vmax.is_finite() {
        return None;
    }
    let scale = (1u64 << 40) as f64 / vmax;
    let w: Vec<i64> = v.iter().map(|x| (x * scale).round() as i64).collect();
    let mut acc = BigInt::from(0);
    for i in 0..order {
        if w[i] == 0 {
            continue;
        }
        let mut row = BigInt::from(0);
        for j in 0..order {
            if w[j] != 0 {
                row += BigInt::from(e.numer[pidx(i, j)]) * w[j];
            }
        }
        acc += row * w[i];
    }
    Some((w, acc, BigInt::from(e.denom)))
}

/// Tries to certify `vᵀ A v / vᵀ v < -threshold` (`threshold ≥ 0`).
pub fn certify_witness(a: &SymMatrix, v: &[f64], interval: EigInterval, threshold: f64) -> Option<Witness> {
    if let Some(e) = a.exact() {
        let (w, numer, denom) = exact_quadratic_form(e, a.order(), v)?;
        if numer.sign() != num_bigint::Sign::Minus {
            return None;
        }
        let wf: Vec<f64> = w.iter().map(|&x| x as f64).collect();
        let norm2: f64 = wf.iter().map(|x| x * x).sum();
        let rq = num_traits::ToPrimitive::to_f64(&numer).unwrap_or(f64::NEG_INFINITY)
            / num_traits::ToPrimitive::to_f64(&denom).unwrap_or(1.0)
            / norm2;
        if threshold > 0.0 && rq >= -threshold {
            return None;
        }
        let norm = norm2.sqrt();
        return Some(Witness {
            criterion: String::new(),
            vector: wf.iter().map(|x| x / norm).collect(),
            rayleigh: rq,
            interval: EigInterval {
                lower: interval.lower,
                upper: interval.upper.min(rq.min(0.0)),
            },
            certificate: Certificate::ExactRational {
                numer: numer.to_string(),
                denom: denom.to_string(),
            },
            fingerprint: a.fingerprint(),
        });
    }
    let (rq, upper) = certified_rayleigh(a, v);
    if upper < -threshold {
        Some(Witness {
            criterion: String::new(),
            vector: v.to_vec(),
            rayleigh: rq,
            interval: EigInterval {
                lower: interval.lower,
                upper: interval.upper.min(upper),
            },
            certificate: Certificate::Interval { upper },
            fingerprint: a.fingerprint(),
        })
    } else {
        None
    }
}

/// [`certify_psd`] with an explicit tolerance.
pub fn psd_verdict(a: &SymMatrix, tol: f64) -> Result<PsdVerdict, SpectraError> {
    let cfg = EvalConfig {
        tol: Some(tol.max(0.0)),
        ..EvalConfig::default()
    };
    certify_psd(a, &cfg)
}

/// Three-way PSD decision with certified witnesses.
///
/// Violated when a Rayleigh quotient is certified below `-tol`; Holds when
/// the computed `λ_min` is at least `-tol`; in between, small rational
/// matrices are settled exactly (an exact indefiniteness proof counts as
/// Violated), everything else is Inconclusive.
pub fn certify_psd(a: &SymMatrix, cfg: &EvalConfig) -> Result<PsdVerdict, SpectraError> {
    let tol = cfg.tol.unwrap_or_else(|| a.decision_tol());
    let bounds = min_eig_bounds(a, cfg)?;
    let interval = bounds.interval;
    if bounds.estimate < -tol {
        if let Some(w) = certify_witness(a, &bounds.vector, interval, tol) {
            return Ok(PsdVerdict::Violated(Box::new(w)));
        }
    }
    let computed = interval.lower + a.default_tol();
    if computed >= -tol {
        return Ok(PsdVerdict::Holds {
            interval,
            method: Method::Dense,
        });
    }
    if a.is_exact() && a.order() <= cfg.escalate_cap {
        match exact_psd(a) {
            ExactPsd::Psd => {
                return Ok(PsdVerdict::Holds {
                    interval: EigInterval {
                        lower: 0.0f64.max(interval.lower),
                        upper: interval.upper,
                    },
                    method: Method::Exact,
                })
            }
            ExactPsd::NotPsd(v) => {
                if let Some(w) = certify_witness(a, &v, interval, 0.0) {
                    return Ok(PsdVerdict::Violated(Box::new(w)));
                }
            }
        }
    }
    Ok(PsdVerdict::Inconclusive {
        interval,
        method: Method::Dense,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let a = SymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let b = min_eig_bounds(&a, &EvalConfig::default()).unwrap();
        assert!(b.interval.lower <= 1.0 && 1.0 <= b.interval.upper);
        assert!(b.interval.upper - b.interval.lower < 1e-12);
    }

    #[test]
    fn exact_violation_is_rational() {
        let a = SymMatrix::from_exact(2, vec![1, 3, 1], 2).unwrap();
        match certify_psd(&a, &EvalConfig::default()).unwrap() {
            PsdVerdict::Violated(w) => {
                assert!(matches!(w.certificate, Certificate::ExactRational { .. }));
                assert!((w.rayleigh + 1.0).abs() < 1e-9);
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn singular_psd_holds() {
        // rank one, eigenvalues 0 and 2
        let a = SymMatrix::from_exact(2, vec![1, 1, 1], 1).unwrap();
        assert!(certify_psd(&a, &EvalConfig::default()).unwrap().is_holds());
    }

    #[test]
    fn dense_cap_is_enforced() {
        let cfg = EvalConfig {
            dense_cap: 2,
            ..EvalConfig::default()
        };
        let a = SymMatrix::zeros(3);
        assert!(matches!(min_eig_bounds(&a, &cfg), Err(SpectraError::DenseCapExceeded { .. })));
    }

    #[test]
    fn principal_keeps_exactness() {
        let a = SymMatrix::from_exact(3, vec![1, 2, 3, 4, 5, 6], 7).unwrap();
        let p = a.principal(&[2, 0]);
        assert!(p.is_exact());
        assert_eq!(p.get(0, 0), 6.0 / 7.0);
        assert_eq!(p.get(1, 0), 4.0 / 7.0);
    }
}
