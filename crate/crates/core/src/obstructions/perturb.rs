//! Perturbed dimensions of the rank-7 local datum on `S = {x₆, x₇}`.

use nalgebra::DMatrix;
use serde::Serialize;

use super::ObstructionError;
use crate::config::EvalConfig;
use crate::criteria::{localized_matrix, Entry, LocalBlock, LocalData};
use crate::spectra::min_eig_bounds;

/// `M_i^S` for `i = 1..7`, row-major `2×2`.
const BLOCKS: [[f64; 4]; 7] = [
    [1.0, 0.0, 0.0, 1.0],
    [1.0, 1.0, 1.0, 1.0],
    [1.0, 1.0, 1.0, 1.0],
    [1.0, 1.0, 1.0, 1.0],
    [2.0, 1.0, 1.0, 2.0],
    [0.0, 3.0, 3.0, 1.0],
    [3.0, 1.0, 1.0, 2.0],
];

/// Quartic factor of `det T₃^S` in `d₆` at `(d₂..d₅, d₇) = (5,5,5,6,7)`,
/// highest degree first.
pub const K7_QUARTIC: [i64; 5] = [210556551, -966777308, -19784561832, 60951456720, 306237561840];

/// Local datum with `d₁ = 1` and `dims = (d₂, …, d₇)`.
pub fn k7_local_data(dims: [f64; 6]) -> Result<LocalData, ObstructionError> {
    if dims.iter().any(|d| !(*d > 0.0) || !d.is_finite()) {
        return Err(ObstructionError::InvalidParams("dimensions must be positive".into()));
    }
    let blocks = BLOCKS
        .iter()
        .enumerate()
        .map(|(i, b)| LocalBlock {
            label: i,
            dim: if i == 0 { 1.0 } else { dims[i - 1] },
            dim_error: 0.0,
            entries: b.iter().map(|&v| Entry::Known(v)).collect(),
        })
        .collect();
    Ok(LocalData::new(vec![5, 6], blocks)?)
}

/// `(A₁, B₁, C₁, A₂, B₂, C₂)` at `(d₂, d₃, d₄, d₅, d₇)`.
pub fn k7_coefficients(d2: f64, d3: f64, d4: f64, d5: f64, d7: f64) -> [f64; 6] {
    let p = d2 * d3 * d4;
    let q = d2 * d3 + d2 * d4 + d3 * d4;
    let (d5_2, d5_3, d7_2, d7_3) = (d5 * d5, d5 * d5 * d5, d7 * d7, d7 * d7 * d7);
    let a1 = d5_2 * d7_2 + 25.0 * d5_2 * d7 + 12.0 * d5 * d7_2 + 125.0 * d5_2 + 120.0 * d5 * d7 + 27.0 * d7_2;
    let b1 = -9.0 * (d5 * d7 - 15.0 * d5 - 12.0 * d7) * d5 * d7;
    let c1 = -729.0 * d5_2 * d7_2;
    let a2 = p * d5_3 * d7_3
        + 67.0 * p * d5_3 * d7_2
        + 32.0 * p * d5_2 * d7_3
        + 7.0 * q * d5_3 * d7_3
        + 1025.0 * p * d5_3 * d7
        + 962.0 * p * d5_2 * d7_2
        + 172.0 * q * d5_3 * d7_2
        + 195.0 * p * d5 * d7_3
        + 54.0 * q * d5_2 * d7_3
        + 3375.0 * p * d5_3
        + 4600.0 * p * d5_2 * d7
        + 665.0 * q * d5_3 * d7
        + 1833.0 * p * d5 * d7_2
        + 432.0 * q * d5_2 * d7_2
        + 216.0 * p * d7_3
        + 63.0 * q * d5 * d7_3;
    let b2 = 18.0
        * (p * d5_2 * d7_2 + 12.0 * p * d5_2 * d7 - 7.0 * p * d5 * d7_2 - 5.0 * q * d5_2 * d7_2 - 405.0 * p * d5_2
            - 471.0 * p * d5 * d7
            - 123.0 * q * d5_2 * d7
            - 96.0 * p * d7_2
            - 33.0 * q * d5 * d7_2)
        * d5
        * d7;
    let c2 = -729.0 * (p * d5 * d7 + 27.0 * p * d5 + 8.0 * p * d7 + q * d5 * d7) * d5_2 * d7_2;
    [a1, b1, c1, a2, b2, c2]
}

/// Roots of the two quadratic factors in `d₆`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerturbationBound {
    pub q1_plus: f64,
    pub q1_minus: f64,
    pub q2_plus: f64,
    pub q2_minus: f64,
}

impl PerturbationBound {
    /// `max(Q₁₊, Q₂₊)`.
    pub fn threshold(&self) -> f64 {
        self.q1_plus.max(self.q2_plus)
    }

    /// `d₆` below the threshold forces a negative eigenvalue of `T₃^S`.
    pub fn excludes(&self, d6: f64) -> bool {
        d6 < self.threshold()
    }
}

pub fn k7_perturbation(d2: f64, d3: f64, d4: f64, d5: f64, d7: f64) -> Result<PerturbationBound, ObstructionError> {
    if [d2, d3, d4, d5, d7].iter().any(|d| !(*d >= 1.0) || !d.is_finite()) {
        return Err(ObstructionError::InvalidParams("dimensions must be at least 1".into()));
    }
    let [a1, b1, c1, a2, b2, c2] = k7_coefficients(d2, d3, d4, d5, d7);
    let roots = |a: f64, b: f64, c: f64, which: u8| {
        let disc = b * b - 4.0 * a * c;
        if disc < 0.0 {
            return Err(ObstructionError::NegativeDiscriminant(which));
        }
        let sq = disc.sqrt();
        Ok(((-b + sq) / (2.0 * a), (-b - sq) / (2.0 * a)))
    };
    let (q1_plus, q1_minus) = roots(a1, b1, c1, 1)?;
    let (q2_plus, q2_minus) = roots(a2, b2, c2, 2)?;
    Ok(PerturbationBound {
        q1_plus,
        q1_minus,
        q2_plus,
        q2_minus,
    })
}

/// Factored determinant of the `7×7` leading corner of `T₃^S`; `d = (d₂, …, d₇)`.
pub fn k7_corner_det(d: [f64; 6]) -> f64 {
    let [d2, d3, d4, d5, d6, d7] = d;
    let [a1, b1, c1, a2, b2, c2] = k7_coefficients(d2, d3, d4, d5, d7);
    let f1 = a1 * d6 * d6 + b1 * d6 + c1;
    let f2 = a2 * d6 * d6 + b2 * d6 + c2;
    f1 * f1 * f2 / (d2 * d3 * d4 * d5.powi(7) * d6.powi(6) * d7.powi(7))
}

/// The same determinant by LU on the assembled matrix.
pub fn k7_corner_det_brute(d: [f64; 6]) -> Result<f64, ObstructionError> {
    let l = k7_local_data(d)?;
    let t = localized_matrix(&l, 3, &EvalConfig::default())?;
    let corner = DMatrix::from_fn(7, 7, |r, c| t.get(r, c));
    Ok(corner.determinant())
}

/// `λ_min(T₃^S)` at dimensions `(d₂, …, d₇)`.
pub fn t3_min_eig(d: [f64; 6], cfg: &EvalConfig) -> Result<f64, ObstructionError> {
    let l = k7_local_data(d)?;
    let t = localized_matrix(&l, 3, cfg)?;
    Ok(min_eig_bounds(&t, cfg).map_err(crate::criteria::CriteriaError::from)?.estimate)
}

/// Bisection on `d₆ ∈ [lo, hi]` for the sign change of `λ_min(T₃^S)`;
/// `d = (d₂, d₃, d₄, d₅, d₇)`.
pub fn alpha_threshold(d: [f64; 5], lo: f64, hi: f64, cfg: &EvalConfig) -> Result<f64, ObstructionError> {
    let at = |d6: f64| t3_min_eig([d[0], d[1], d[2], d[3], d6, d[4]], cfg);
    let (mut lo, mut hi) = (lo, hi);
    if !(at(lo)? < 0.0 && at(hi)? >= 0.0) {
        return Err(ObstructionError::HypothesisFailed(format!("no sign change of λ_min on [{lo}, {hi}]")));
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if at(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Real roots of an integer polynomial (highest degree first), ascending.
pub fn quartic_real_roots(coeffs: &[i64]) -> Vec<f64> {
    let c: Vec<f64> = coeffs.iter().map(|&x| x as f64).collect();
    let deg = c.len().saturating_sub(1);
    if deg == 0 || c[0] == 0.0 {
        return Vec::new();
    }
    let mut comp = DMatrix::<f64>::zeros(deg, deg);
    for j in 0..deg {
        comp[(0, j)] = -c[j + 1] / c[0];
    }
    for i in 1..deg {
        comp[(i, i - 1)] = 1.0;
    }
    let eval = |x: f64| c.iter().fold((0.0, 0.0), |(p, dp), &a| (p * x + a, dp * x + p));
    let mut roots: Vec<f64> = comp
        .complex_eigenvalues()
        .iter()
        .filter(|z| z.im.abs() <= 1e-7 * z.re.abs().max(1.0))
        .map(|z| {
            // Newton polish
            let mut x = z.re;
            for _ in 0..50 {
                let (p, dp) = eval(x);
                if dp == 0.0 {
                    break;
                }
                let step = p / dp;
                x -= step;
                if step.abs() <= 1e-15 * x.abs().max(1.0) {
                    break;
                }
            }
            x
        })
        .collect();
    roots.sort_by(f64::total_cmp);
    roots
}
