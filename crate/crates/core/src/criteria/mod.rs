//! Criterion matrices and their verdicts.
//!
//! Every matrix is a weighted sum over basis elements `i` with weight
//! `d_i^{2-n}` of either a tensor product (order `s^n`) or an entrywise
//! product (order `s`) of `s×s` blocks. Integral dimensions with integral
//! blocks give exact rational entries; anything else is built in `f64` with a
//! per-entry error bound.

mod build;
mod local;
mod pattern;
mod search;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::config::EvalConfig;
use crate::ring::{FusionRing, GradingMap, RingError};
use crate::spectra::{
    self, certify_psd, kron_min_eig, Certificate, EigInterval, KronOperator, Method, PsdVerdict, SpectraError,
    SymMatrix, Witness,
};

pub use build::pow_by_squaring;
pub use local::{Entry, LocalBlock, LocalData};
pub use pattern::{catalog_patterns, PatternCatalog, Twist, TwistPattern};
pub use search::{search_violation, SearchBudget};

pub(crate) use local::Sym;

/// Tolerance for "entry equals dimension" in the limit matrix.
pub const TOL_INT: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CriteriaError {
    #[error("subset S is empty")]
    EmptySubset,
    #[error("label {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("invalid local data: {0}")]
    InvalidLocalData(String),
    #[error("block x{block} has an unknown entry at ({row}, {col})")]
    UnknownEntries { block: usize, row: usize, col: usize },
    #[error("unknown entry of block x{block} at ({row}, {col}) is not annihilated by the pattern")]
    UnknownNotAnnihilated { block: usize, row: usize, col: usize },
    #[error("invalid twist: {0}")]
    NonUnitaryTwist(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("order {order} exceeds dense cap {cap}")]
    DenseCapExceeded { order: usize, cap: usize },
    #[error("grading modulus {0} unsupported (only 2)")]
    UnsupportedModulus(u32),
    #[error("search budget must be positive")]
    BudgetZero,
    #[error("n must be at least 1")]
    InvalidN,
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Schur(#[from] crate::schur::SchurError),
}

/// A criterion, for dispatch and reporting. Labels are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub enum CriterionSpec {
    Primary { n: usize },
    Localized { set: Vec<usize>, n: usize },
    Reduced { set: Vec<usize>, n: u64 },
    Twisted { set: Vec<usize>, pattern: TwistPattern },
    ReducedTwisted { set: Vec<usize>, pattern: TwistPattern },
    Limit { set: Vec<usize> },
    Graded { grading: GradingMap, set: Vec<usize>, n: usize },
    Schur,
}

fn fmt_set(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for CriterionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriterionSpec::Primary { n } => write!(f, "primary n={n}"),
            CriterionSpec::Localized { set, n } => write!(f, "localized S={} n={n}", fmt_set(set)),
            CriterionSpec::Reduced { set, n } => write!(f, "reduced S={} n={n}", fmt_set(set)),
            CriterionSpec::Twisted { set, pattern } => {
                write!(f, "twisted S={} n={} pattern={}", fmt_set(set), pattern.len(), pattern.label())
            }
            CriterionSpec::ReducedTwisted { set, pattern } => {
                write!(f, "reduced-twisted S={} n={} pattern={}", fmt_set(set), pattern.len(), pattern.label())
            }
            CriterionSpec::Limit { set } => write!(f, "limit S={}", fmt_set(set)),
            CriterionSpec::Graded { set, n, .. } => write!(f, "graded S={} n={n}", fmt_set(set)),
            CriterionSpec::Schur => write!(f, "schur"),
        }
    }
}

impl Serialize for CriterionSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn check_n(n: usize) -> Result<(), CriteriaError> {
    if n == 0 {
        Err(CriteriaError::InvalidN)
    } else {
        Ok(())
    }
}

fn order_of(s: usize, n: usize) -> Option<usize> {
    s.checked_pow(u32::try_from(n).ok()?)
}

/// `T_n = Σ_i d_i² (M_i/d_i)^{⊗n}`, order `m^n`.
pub fn primary_matrix(ring: &FusionRing, n: usize, cfg: &EvalConfig) -> Result<SymMatrix, CriteriaError> {
    let all: Vec<usize> = (0..ring.rank()).collect();
    localized_matrix(&LocalData::from_ring(ring, &all)?, n, cfg)
}

/// `T_n^S = Σ_i d_i² (M_i^S/d_i)^{⊗n}`, order `s^n`.
pub fn localized_matrix(l: &LocalData, n: usize, cfg: &EvalConfig) -> Result<SymMatrix, CriteriaError> {
    check_n(n)?;
    twisted_tensor_matrix(l, &TwistPattern::identity(l.size(), n), cfg)
}

/// `Σ_i d_i² ⊗_j (U_j M_i^S U_jᵀ / d_i)`, order `s^n` with `n = pattern.len()`.
pub fn twisted_tensor_matrix(l: &LocalData, pattern: &TwistPattern, cfg: &EvalConfig) -> Result<SymMatrix, CriteriaError> {
    build::tensor_matrix(l, pattern, None, cfg)
}

/// `Σ_i d_i² (M_i^S/d_i)^{∘n}` with entrywise powers by repeated squaring.
pub fn reduced_matrix(l: &LocalData, n: u64) -> Result<SymMatrix, CriteriaError> {
    build::reduced_power(l, n)
}

/// `Σ_i d_i^{2-n} ∘_j (U_j M_i^S U_jᵀ)`, order `s`.
pub fn reduced_twisted_matrix(l: &LocalData, pattern: &TwistPattern) -> Result<SymMatrix, CriteriaError> {
    build::hadamard_matrix(l, pattern)
}

/// `Σ_i d_i² L_i` where `L_i[k][j] = 1` iff `j, k ∈ S` and `N_{i,j}^k = d_i`.
pub fn limit_matrix(ring: &FusionRing, set: &[usize]) -> Result<SymMatrix, CriteriaError> {
    let m = ring.rank();
    let mut in_s = vec![false; m];
    for &i in set {
        if i >= m {
            return Err(CriteriaError::IndexOutOfRange(i + 1, m));
        }
        in_s[i] = true;
    }
    let dims = ring.dims();
    let mut full = vec![0.0; m * m];
    let mut numer = vec![0i128; m * m];
    for i in 0..m {
        let d = dims.values[i];
        let mat = ring.matrix(i);
        for k in 0..m {
            for j in 0..m {
                if in_s[j] && in_s[k] && (mat[k * m + j] - d).abs() <= TOL_INT * d.max(1.0) {
                    full[k * m + j] += d * d;
                    if let Some(ints) = &dims.integral {
                        numer[k * m + j] += (ints[i] as i128) * (ints[i] as i128);
                    }
                }
            }
        }
    }
    // symmetric by Frobenius reciprocity (i ↔ i*); averaging only absorbs rounding
    for k in 0..m {
        for j in 0..k {
            let a = 0.5 * (full[k * m + j] + full[j * m + k]);
            full[k * m + j] = a;
            full[j * m + k] = a;
        }
    }
    if dims.integral.is_some() && (0..m).all(|k| (0..k).all(|j| numer[k * m + j] == numer[j * m + k])) {
        let packed = (0..m).flat_map(|k| (0..=k).map(move |j| (k, j))).map(|(k, j)| numer[k * m + j]).collect();
        return Ok(SymMatrix::from_exact(m, packed, 1)?);
    }
    let err = dims.errors.iter().zip(&dims.values).map(|(e, d)| 2.0 * d * e).sum::<f64>();
    Ok(SymMatrix::from_full(m, &full, err)?)
}

/// Graded variant: `Σ_i (−1)^{g(i)} d_i² (M_i^S/d_i)^{⊗n}` for a `Z/2` grading.
pub fn graded_matrix(
    ring: &FusionRing,
    grading: &GradingMap,
    set: &[usize],
    n: usize,
    cfg: &EvalConfig,
) -> Result<SymMatrix, CriteriaError> {
    check_n(n)?;
    if grading.modulus() != 2 {
        return Err(CriteriaError::UnsupportedModulus(grading.modulus()));
    }
    let l = LocalData::from_ring(ring, set)?;
    let signs: Vec<f64> = (0..ring.rank()).map(|i| if grading.degree(i) % 2 == 1 { -1.0 } else { 1.0 }).collect();
    build::tensor_matrix(&l, &TwistPattern::identity(l.size(), n), Some(&signs), cfg)
}

/// Dense or matrix-free verdict on `T_n`.
pub fn check_primary(ring: &FusionRing, n: usize, cfg: &EvalConfig) -> Result<PsdVerdict, CriteriaError> {
    let all: Vec<usize> = (0..ring.rank()).collect();
    let l = LocalData::from_ring(ring, &all)?;
    Ok(tensor_verdict(&l, n, cfg)?.with_criterion(CriterionSpec::Primary { n }.to_string()))
}

/// Dense or matrix-free verdict on `T_n^S`.
pub fn check_localized(l: &LocalData, n: usize, cfg: &EvalConfig) -> Result<PsdVerdict, CriteriaError> {
    Ok(tensor_verdict(l, n, cfg)?.with_criterion(
        CriterionSpec::Localized {
            set: l.labels.clone(),
            n,
        }
        .to_string(),
    ))
}

/// Verdict on the twisted tensor matrix (dense only).
pub fn check_twisted(l: &LocalData, pattern: &TwistPattern, cfg: &EvalConfig) -> Result<PsdVerdict, CriteriaError> {
    let a = twisted_tensor_matrix(l, pattern, cfg)?;
    Ok(certify_psd(&a, cfg)?.with_criterion(
        CriterionSpec::Twisted {
            set: l.labels.clone(),
            pattern: pattern.clone(),
        }
        .to_string(),
    ))
}

/// Verdict on the reduced (Hadamard) matrix; `pattern = None` means identity twists.
pub fn check_reduced(
    l: &LocalData,
    n: u64,
    pattern: Option<&TwistPattern>,
    cfg: &EvalConfig,
) -> Result<PsdVerdict, CriteriaError> {
    let (a, spec) = match pattern {
        Some(p) if !p.is_identity() => (
            reduced_twisted_matrix(l, p)?,
            CriterionSpec::ReducedTwisted {
                set: l.labels.clone(),
                pattern: p.clone(),
            },
        ),
        Some(p) => (
            reduced_matrix(l, p.len() as u64)?,
            CriterionSpec::Reduced {
                set: l.labels.clone(),
                n: p.len() as u64,
            },
        ),
        None => (
            reduced_matrix(l, n)?,
            CriterionSpec::Reduced {
                set: l.labels.clone(),
                n,
            },
        ),
    };
    Ok(certify_psd(&a, cfg)?.with_criterion(spec.to_string()))
}

pub fn check_limit(ring: &FusionRing, set: &[usize], cfg: &EvalConfig) -> Result<PsdVerdict, CriteriaError> {
    if set.is_empty() {
        let interval = EigInterval { lower: 0.0, upper: 0.0 };
        return Ok(PsdVerdict::Holds {
            interval,
            method: Method::Exact,
        });
    }
    let a = limit_matrix(ring, set)?;
    Ok(certify_psd(&a, cfg)?.with_criterion(CriterionSpec::Limit { set: set.to_vec() }.to_string()))
}

pub fn check_graded(
    ring: &FusionRing,
    grading: &GradingMap,
    set: &[usize],
    n: usize,
    cfg: &EvalConfig,
) -> Result<PsdVerdict, CriteriaError> {
    let a = graded_matrix(ring, grading, set, n, cfg)?;
    Ok(certify_psd(&a, cfg)?.with_criterion(
        CriterionSpec::Graded {
            grading: grading.clone(),
            set: set.to_vec(),
            n,
        }
        .to_string(),
    ))
}

/// Uniform dispatch.
pub fn check(ring: &FusionRing, spec: &CriterionSpec, cfg: &EvalConfig) -> Result<PsdVerdict, CriteriaError> {
    match spec {
        CriterionSpec::Primary { n } => check_primary(ring, *n, cfg),
        CriterionSpec::Localized { set, n } => check_localized(&LocalData::from_ring(ring, set)?, *n, cfg),
        CriterionSpec::Reduced { set, n } => check_reduced(&LocalData::from_ring(ring, set)?, *n, None, cfg),
        CriterionSpec::Twisted { set, pattern } => check_twisted(&LocalData::from_ring(ring, set)?, pattern, cfg),
        CriterionSpec::ReducedTwisted { set, pattern } => {
            check_reduced(&LocalData::from_ring(ring, set)?, pattern.len() as u64, Some(pattern), cfg)
        }
        CriterionSpec::Limit { set } => check_limit(ring, set, cfg),
        CriterionSpec::Graded { grading, set, n } => check_graded(ring, grading, set, *n, cfg),
        CriterionSpec::Schur => Ok(crate::schur::check_schur(ring, cfg)?),
    }
}

/// Tensor-power verdict: dense up to `dense_solver_cap`, matrix-free beyond.
fn tensor_verdict(l: &LocalData, n: usize, cfg: &EvalConfig) -> Result<PsdVerdict, CriteriaError> {
    check_n(n)?;
    let s = l.size();
    let order = order_of(s, n).ok_or(CriteriaError::DenseCapExceeded {
        order: usize::MAX,
        cap: cfg.dense_cap,
    })?;
    if order <= cfg.dense_solver_cap.min(cfg.dense_cap) {
        let a = localized_matrix(l, n, cfg)?;
        return Ok(certify_psd(&a, cfg)?);
    }
    matrix_free_verdict(l, n, cfg)
}

/// Operator `Σ_i d_i^{2-n} (M_i^S)^{⊗n}` for the matrix-free path.
pub fn localized_operator(l: &LocalData, n: usize) -> Result<KronOperator, CriteriaError> {
    check_n(n)?;
    let s = l.size();
    let mut weights = Vec::new();
    let mut factors = Vec::new();
    let mut entry_error = 0.0;
    let mut max_entry = 0.0;
    for (i, b) in l.blocks.iter().enumerate() {
        let blk = l.known_block(i)?;
        let w = b.dim.powi(2 - n as i32);
        let mx = blk.iter().fold(0.0f64, |a, &v| a.max(v));
        let term = w * mx.powi(n as i32);
        max_entry += term;
        entry_error += term * ((n as f64 - 2.0).abs() * b.dim_error / b.dim);
        weights.push(w);
        factors.push(blk);
    }
    let op = KronOperator::new(s, n, weights, factors)?;
    Ok(op.with_entry_error(entry_error + spectra_gamma(n + l.blocks.len() + 2) * max_entry))
}

fn spectra_gamma(k: usize) -> f64 {
    let ku = k as f64 * f64::EPSILON * 0.5;
    ku / (1.0 - ku)
}

fn matrix_free_verdict(l: &LocalData, n: usize, cfg: &EvalConfig) -> Result<PsdVerdict, CriteriaError> {
    let op = localized_operator(l, n)?;
    let order = op.order();
    let op_entry_error = op.entry_error();
    let bounds = kron_min_eig(&op, cfg)?;
    let max_entry: f64 = l
        .blocks
        .iter()
        .map(|b| b.dim.powi(2 - n as i32) * b.entries.iter().filter_map(|e| e.known()).fold(0.0f64, f64::max).powi(n as i32))
        .sum();
    let tol = cfg.tol.unwrap_or(64.0 * f64::EPSILON * order as f64 * max_entry + order as f64 * op_entry_error);
    let interval = bounds.interval;
    if bounds.estimate < -tol && interval.upper < -tol {
        let (rq, upper) = op.certified_rayleigh(&bounds.vector);
        return Ok(PsdVerdict::Violated(Box::new(Witness {
            criterion: String::new(),
            vector: bounds.vector,
            rayleigh: rq,
            interval,
            certificate: Certificate::Interval { upper },
            fingerprint: operator_fingerprint(l, n),
        })));
    }
    if interval.lower >= -tol {
        return Ok(PsdVerdict::Holds {
            interval,
            method: Method::MatrixFree,
        });
    }
    Ok(PsdVerdict::Inconclusive {
        interval,
        method: Method::MatrixFree,
    })
}

fn operator_fingerprint(l: &LocalData, n: usize) -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update((n as u64).to_le_bytes());
    for b in &l.blocks {
        h.update(b.dim.to_bits().to_le_bytes());
        for e in &b.entries {
            h.update(e.known().unwrap_or(-1.0).to_bits().to_le_bytes());
        }
    }
    h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Sufficient determinant test for `s = 2` reduced-twisted matrices whose
/// unknown (nonnegative) mass sits only off the diagonal.
///
/// With the known part `K` and unknown mass `λ ≥ 0` on the off-diagonal,
/// `det = K₁₁K₂₂ − (K₁₂ + λ)² ≤ det K`, so `det K < 0` settles the verdict.
pub fn det2_bound_check(l: &LocalData, pattern: &TwistPattern) -> Result<PsdVerdict, CriteriaError> {
    if l.size() != 2 || pattern.size() != 2 {
        return Err(CriteriaError::PreconditionViolated("determinant bound needs |S| = 2".into()));
    }
    if !pattern.is_permutation() {
        return Err(CriteriaError::PreconditionViolated("determinant bound needs permutation twists".into()));
    }
    let (k, _unknown_off) = build::hadamard_known_part(l, pattern)?;
    let (k11, k12, k22) = (k[0], k[1], k[3]);
    let det = k11 * k22 - k12 * k12;
    let scale = (k11 * k22).abs().max(k12 * k12);
    let err = 8.0 * f64::EPSILON * scale + build::hadamard_entry_error(l, pattern) * (k11.abs() + k22.abs() + 2.0 * k12.abs() + 1.0);
    let tr = k11 + k22;
    let disc = ((k11 - k22).powi(2) + 4.0 * k12 * k12).sqrt();
    let lam = 0.5 * (tr - disc);
    let interval = EigInterval {
        lower: f64::NEG_INFINITY,
        upper: lam,
    };
    if det < -err && k12 > 0.0 {
        // valid for every λ ≥ 0: vᵀAv = 2√(K11K22)(√(K11K22) − K12 − λ) or the K11 = 0 analogue
        let v = if k11 > 0.0 && k22 > 0.0 {
            vec![k22.sqrt(), -k11.sqrt()]
        } else if k11 == 0.0 {
            vec![k22.abs() / k12 + 1.0, -1.0]
        } else {
            vec![1.0, -(k11.abs() / k12 + 1.0)]
        };
        let nrm = (v[0] * v[0] + v[1] * v[1]).sqrt();
        let v: Vec<f64> = v.iter().map(|x| x / nrm).collect();
        let rq = k11 * v[0] * v[0] + 2.0 * k12 * v[0] * v[1] + k22 * v[1] * v[1];
        return Ok(PsdVerdict::Violated(Box::new(Witness {
            criterion: format!(
                "determinant bound S={} n={} pattern={}",
                fmt_set(&l.labels),
                pattern.len(),
                pattern.label()
            ),
            vector: v,
            rayleigh: rq,
            interval,
            certificate: Certificate::Determinant { value: det },
            fingerprint: format!("det2:{:016x}", det.to_bits()),
        })));
    }
    Ok(PsdVerdict::Inconclusive {
        interval: EigInterval {
            lower: f64::NEG_INFINITY,
            upper: f64::INFINITY,
        },
        method: Method::ClosedForm,
    })
}

/// `ℓ² T_n^S`: the localized matrix of the `Z/ℓ` orbifold ring.
pub fn orbifold_scaled(l: &LocalData, n: usize, ell: u32, cfg: &EvalConfig) -> Result<SymMatrix, CriteriaError> {
    if ell == 0 {
        return Err(CriteriaError::PreconditionViolated("ℓ must be at least 1".into()));
    }
    let t = localized_matrix(l, n, cfg)?;
    let f = (ell as f64) * (ell as f64);
    if let Some(e) = t.exact() {
        let sq = (ell as i128) * (ell as i128);
        if let Some(numer) = e.numer.iter().map(|x| x.checked_mul(sq)).collect::<Option<Vec<_>>>() {
            return Ok(SymMatrix::from_exact(t.order(), numer, e.denom)?);
        }
    }
    let full: Vec<f64> = t.to_full().iter().map(|x| x * f).collect();
    Ok(SymMatrix::from_full(t.order(), &full, t.entry_error() * f)?)
}

/// Smallest-eigenvalue bracket of a matrix, dense.
pub fn min_eig(a: &SymMatrix, cfg: &EvalConfig) -> Result<EigInterval, CriteriaError> {
    Ok(spectra::min_eig_bounds(a, cfg)?.interval)
}

#[cfg(test)]
mod tests;
