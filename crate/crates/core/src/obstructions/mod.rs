//! Closed-form obstruction families and principal-graph screening.

mod graph;
mod perturb;

use serde::Serialize;
use thiserror::Error;

use crate::config::EvalConfig;
use crate::criteria::{self, catalog_patterns, CriteriaError, LocalData, PatternCatalog};
use crate::fixtures::Fixture;
use crate::ring::{FusionRing, RingError};
use crate::spectra::PsdVerdict;

pub use criteria::orbifold_scaled;
pub use graph::{
    chain_bound_check, d5_graph, d5_local_data, extract_family, family_local_data, graph_dims, graph_family_check,
    graph_family_expression, graph_family_witnesses, graph_index, graph_local_check, p3_dimension_bound,
    BipartiteGraph, GraphFamilyParams, GraphFamilyRaw,
};
pub use perturb::{
    alpha_threshold, k7_coefficients, k7_corner_det, k7_corner_det_brute, k7_local_data, k7_perturbation,
    quartic_real_roots, t3_min_eig, PerturbationBound, K7_QUARTIC,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ObstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("negative discriminant for Q{0}")]
    NegativeDiscriminant(u8),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `(n, a, b)` with `a + b = n`.
pub type Triple = (u32, u32, u32);

/// Parameters of `x₂x₂* = 1 + s x₂ + ℓ x₃`, `x₃x₃* = 1 + t x₂ + k x₃ + …`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoGenParams {
    pub s: f64,
    pub t: f64,
    pub k: f64,
    pub ell: f64,
    pub d2: f64,
    pub d3: f64,
}

impl TwoGenParams {
    fn validate(&self) -> Result<(), ObstructionError> {
        let nonneg = [self.s, self.t, self.k].iter().all(|x| *x >= 0.0 && x.is_finite());
        if !nonneg {
            return Err(ObstructionError::InvalidParams("s, t, k must be nonnegative".into()));
        }
        if !(self.ell >= 1.0) {
            return Err(ObstructionError::InvalidParams("ℓ must be at least 1".into()));
        }
        // d = 1 would make x₂ or x₃ invertible, contradicting the fusion rules
        if !(self.d2 > 1.0 && self.d3 > 1.0) || !self.d2.is_finite() || !self.d3.is_finite() {
            return Err(ObstructionError::InvalidParams("d₂ and d₃ must exceed 1".into()));
        }
        Ok(())
    }
}

fn check_nmax(n_max: u32) -> Result<(), ObstructionError> {
    if n_max < 2 {
        return Err(ObstructionError::InvalidParams("n_max must be at least 2".into()));
    }
    Ok(())
}

/// Determinant bound of the twisted Hadamard sum on `S = {x₂, x₃}` with `a`
/// identity and `b = n − a` swap twists (self-dual case).
pub fn two_gen_expression(p: &TwoGenParams, n: u32, a: u32) -> f64 {
    let b = n - a;
    let (n, a, b) = (n as i32, a as i32, b as i32);
    let w2 = p.d2.powi(n - 2);
    let w3 = p.d3.powi(n - 2);
    let first = p.s.powi(a) * p.t.powi(b) / w2 + p.ell.powi(a) * p.k.powi(b) / w3 + 1.0;
    let second = p.s.powi(b) * p.t.powi(a) / w2 + p.ell.powi(b) * p.k.powi(a) / w3 + 1.0;
    let off = p.ell.powi(n) / w2 + p.t.powi(n) / w3;
    first * second - off * off
}

fn first_triple(n_max: u32, f: impl Fn(u32, u32) -> f64) -> Option<Triple> {
    (2..=n_max).flat_map(|n| (1..n).map(move |a| (n, a))).find(|&(n, a)| f(n, a) < 0.0).map(|(n, a)| (n, a, n - a))
}

/// First `(n, a, b)` (n ascending, then a) with a negative bound, if any.
pub fn two_gen_obstruction(p: &TwoGenParams, n_max: u32) -> Result<Option<Triple>, ObstructionError> {
    p.validate()?;
    check_nmax(n_max)?;
    Ok(first_triple(n_max, |n, a| two_gen_expression(p, n, a)))
}

/// Non-self-dual case: `2sⁿ/d₂ⁿ⁻² + 1 − (sᵃτᵇ + sᵇτᵃ)/d₂ⁿ⁻²` with `τ = τ(x₂³)`.
pub fn two_gen_expression_nsd(s: f64, tau3: f64, d2: f64, n: u32, a: u32) -> f64 {
    let b = (n - a) as i32;
    let (n, a) = (n as i32, a as i32);
    let w = d2.powi(n - 2);
    2.0 * s.powi(n) / w + 1.0 - (s.powi(a) * tau3.powi(b) + s.powi(b) * tau3.powi(a)) / w
}

pub fn two_gen_obstruction_nsd(s: f64, tau3: f64, d2: f64, n_max: u32) -> Result<Option<Triple>, ObstructionError> {
    if !(s >= 0.0 && tau3 >= 0.0) {
        return Err(ObstructionError::InvalidParams("s and τ(x₂³) must be nonnegative".into()));
    }
    if !(d2 >= 1.0) {
        return Err(ObstructionError::InvalidParams("d₂ must be at least 1".into()));
    }
    check_nmax(n_max)?;
    Ok(first_triple(n_max, |n, a| two_gen_expression_nsd(s, tau3, d2, n, a)))
}

/// The rank-4 family with `x₂² = 1 + k x₂ + x₄`, `x₃² = 1 + k x₂`.
pub fn r4k_ring(k: u32) -> Result<FusionRing, ObstructionError> {
    if k == 0 {
        return Err(ObstructionError::InvalidParams("k must be at least 1".into()));
    }
    Ok(Fixture::R4(k).ring()?)
}

/// Two-generator parameters of `R_{4,k}` after swapping `x₂` and `x₃`:
/// `x₃² = 1 + k x₂` gives `s = 0, ℓ = k`; `x₂² = 1 + k x₂ + x₄` gives `t = 0, k' = k`.
pub fn r4k_params(k: u32) -> Result<TwoGenParams, ObstructionError> {
    let r = r4k_ring(k)?;
    let d = &r.dims().values;
    Ok(TwoGenParams {
        s: 0.0,
        t: 0.0,
        k: k as f64,
        ell: k as f64,
        d2: d[2],
        d3: d[1],
    })
}

/// `f(d₃) = d₃³ − k³d₃² + (k⁴−1)d₃ + k³` at the Perron value `d₃ = ‖x₃‖`;
/// negative exactly when the `n = 3` bound is.
pub fn r4k_closed_form(k: u32) -> Result<f64, ObstructionError> {
    let r = r4k_ring(k)?;
    let x = r.dims().values[2];
    let k = k as f64;
    Ok(x.powi(3) - k.powi(3) * x * x + (k.powi(4) - 1.0) * x + k.powi(3))
}

/// Reduced-twisted scan on `S = {x₃, x₂}` for `n = 2..=6` over `{I, swap}`
/// patterns; the first violation wins, otherwise the `(I,I,swap)` verdict.
pub fn r4k_check(k: u32, cfg: &EvalConfig) -> Result<PsdVerdict, ObstructionError> {
    let r = r4k_ring(k)?;
    let l = LocalData::from_ring(&r, &[2, 1])?;
    let mut fallback = None;
    for n in 2..=6usize {
        for p in catalog_patterns(2, n, PatternCatalog::Transpositions) {
            if p.is_identity() {
                continue;
            }
            let v = criteria::check_reduced(&l, n as u64, Some(&p), cfg)?;
            if v.is_violated() {
                return Ok(v);
            }
            if n == 3 && fallback.is_none() {
                fallback = Some(v);
            }
        }
    }
    Ok(fallback.expect("n = 3 has a twisted pattern"))
}

#[cfg(test)]
mod tests;
