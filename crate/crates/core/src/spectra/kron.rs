//! Matrix-free `Σ_i w_i A_i^{⊗n}` and a Lanczos smallest-eigenvalue solver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dense::tridiagonal_min;
use super::{gamma, EigBounds, EigInterval, SpectraError};
use crate::config::EvalConfig;

/// `Σ_i weights[i] · factors[i]^{⊗power}` with `m×m` row-major factors.
#[derive(Debug, Clone)]
pub struct KronOperator {
    m: usize,
    power: usize,
    weights: Vec<f64>,
    factors: Vec<Vec<f64>>,
    entry_error: f64,
}

impl KronOperator {
    pub fn new(m: usize, power: usize, weights: Vec<f64>, factors: Vec<Vec<f64>>) -> Result<Self, SpectraError> {
        if power == 0 || m == 0 {
            return Err(SpectraError::Dimension("power and factor size must be positive".into()));
        }
        if weights.len() != factors.len() || factors.iter().any(|f| f.len() != m * m) {
            return Err(SpectraError::Dimension("weights and factors disagree".into()));
        }
        if m.checked_pow(power as u32).is_none() {
            return Err(SpectraError::Dimension("operator order overflows".into()));
        }
        Ok(Self {
            m,
            power,
            weights,
            factors,
            entry_error: 0.0,
        })
    }

    /// Per-entry bound on the difference to the intended operator.
    pub fn with_entry_error(mut self, e: f64) -> Self {
        self.entry_error = e;
        self
    }

    pub fn entry_error(&self) -> f64 {
        self.entry_error
    }

    pub fn order(&self) -> usize {
        self.m.pow(self.power as u32)
    }

    pub fn power(&self) -> usize {
        self.power
    }

    /// `y = A x`, cost `O(terms · n · m^{n+1})`.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) {
        let mut tmp = vec![0.0; x.len()];
        let mut work = vec![0.0; x.len()];
        y.iter_mut().for_each(|v| *v = 0.0);
        for (w, f) in self.weights.iter().zip(&self.factors) {
            if *w == 0.0 {
                continue;
            }
            tmp.copy_from_slice(x);
            for mode in 0..self.power {
                apply_mode(f, self.m, self.power, mode, &tmp, &mut work);
                std::mem::swap(&mut tmp, &mut work);
            }
            for (yi, ti) in y.iter_mut().zip(&tmp) {
                *yi += w * ti;
            }
        }
    }

    fn apply_abs(&self, x: &[f64], y: &mut [f64]) {
        let abs = KronOperator {
            m: self.m,
            power: self.power,
            weights: self.weights.iter().map(|w| w.abs()).collect(),
            factors: self.factors.iter().map(|f| f.iter().map(|v| v.abs()).collect()).collect(),
            entry_error: 0.0,
        };
        abs.apply(x, y);
    }

    /// Materialises the operator (for cross-checks on small orders).
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.order();
        let mut out = vec![0.0; n * n];
        let mut e = vec![0.0; n];
        let mut col = vec![0.0; n];
        for c in 0..n {
            e[c] = 1.0;
            self.apply(&e, &mut col);
            for r in 0..n {
                out[r * n + c] = col[r];
            }
            e[c] = 0.0;
        }
        out
    }

    /// Rayleigh quotient and a certified upper bound on the exact quotient.
    pub fn certified_rayleigh(&self, v: &[f64]) -> (f64, f64) {
        let n = v.len();
        let mut av = vec![0.0; n];
        self.apply(v, &mut av);
        let q: f64 = v.iter().zip(&av).map(|(a, b)| a * b).sum();
        let vv: f64 = v.iter().map(|x| x * x).sum();
        let absv: Vec<f64> = v.iter().map(|x| x.abs()).collect();
        self.apply_abs(&absv, &mut av);
        let abs_q: f64 = absv.iter().zip(&av).map(|(a, b)| a * b).sum();
        let l1: f64 = absv.iter().sum();
        let k = self.power * self.m + self.factors.len() + n + 4;
        let err = gamma(k) * abs_q * 1.01 + self.entry_error * l1 * l1;
        let num_hi = q + err;
        let upper = if num_hi >= 0.0 {
            num_hi / (vv * (1.0 - gamma(n + 2)))
        } else {
            num_hi / (vv * (1.0 + gamma(n + 2)))
        };
        (q / vv, upper)
    }
}

fn apply_mode(f: &[f64], m: usize, power: usize, mode: usize, x: &[f64], y: &mut [f64]) {
    let stride = m.pow((power - 1 - mode) as u32);
    let outer = x.len() / (stride * m);
    let mut buf = vec![0.0; m];
    for o in 0..outer {
        let base = o * stride * m;
        for inner in 0..stride {
            for (b, slot) in buf.iter_mut().enumerate() {
                *slot = x[base + b * stride + inner];
            }
            for a in 0..m {
                let row = &f[a * m..(a + 1) * m];
                y[base + a * stride + inner] = row.iter().zip(&buf).map(|(p, q)| p * q).sum();
            }
        }
    }
}

/// `y = Σ_i w_i A_i^{⊗n} x` without materialising the operator.
pub fn kron_apply(op: &KronOperator, x: &[f64]) -> Result<Vec<f64>, SpectraError> {
    if x.len() != op.order() {
        return Err(SpectraError::Dimension(format!("vector of length {} for order {}", x.len(), op.order())));
    }
    let mut y = vec![0.0; x.len()];
    op.apply(x, &mut y);
    Ok(y)
}

/// Thick-restart-free Lanczos with full reorthogonalisation.
///
/// The upper end of the interval is the certified Rayleigh quotient of the
/// Ritz vector; the lower end `θ - ‖r‖` only brackets *some* eigenvalue, so
/// a nonnegative lower end is evidence, not proof, of semidefiniteness.
pub fn kron_min_eig(op: &KronOperator, cfg: &EvalConfig) -> Result<EigBounds, SpectraError> {
    let n = op.order();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut start: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() - 0.5).collect();
    let mut best: Option<(f64, Vec<f64>, f64)> = None;
    let norm_est = op_norm_estimate(op);
    for _ in 0..=cfg.lanczos_restarts {
        let (theta, x) = lanczos_pass(op, &start, cfg.lanczos_max_iter.min(n));
        let mut ax = vec![0.0; n];
        op.apply(&x, &mut ax);
        let res = ax
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - theta * b).powi(2))
            .sum::<f64>()
            .sqrt();
        let better = best.as_ref().is_none_or(|(t, _, r)| theta < *t - *r || (theta <= *t && res < *r));
        if better {
            best = Some((theta, x.clone(), res));
        }
        if res <= cfg.lanczos_tol * norm_est.max(f64::MIN_POSITIVE) {
            break;
        }
        start = x;
    }
    let (theta, x, res) = best.ok_or(SpectraError::NoConvergence(0))?;
    let (_, upper) = op.certified_rayleigh(&x);
    let weyl = n as f64 * op.entry_error;
    Ok(EigBounds {
        interval: EigInterval {
            lower: theta - res - weyl - gamma(n) * norm_est,
            upper,
        },
        estimate: theta,
        vector: x,
    })
}

fn op_norm_estimate(op: &KronOperator) -> f64 {
    // ∞-norm of the entrywise-absolute operator, via its action on ones
    let n = op.order();
    let ones = vec![1.0; n];
    let mut y = vec![0.0; n];
    op.apply_abs(&ones, &mut y);
    y.into_iter().fold(0.0, f64::max)
}

fn lanczos_pass(op: &KronOperator, start: &[f64], steps: usize) -> (f64, Vec<f64>) {
    let n = start.len();
    let steps = steps.max(1);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(steps);
    let mut alpha = Vec::with_capacity(steps);
    let mut beta: Vec<f64> = Vec::with_capacity(steps);
    let nrm = start.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut q: Vec<f64> = start.iter().map(|x| x / nrm).collect();
    let mut w = vec![0.0; n];
    for j in 0..steps {
        op.apply(&q, &mut w);
        let a: f64 = w.iter().zip(&q).map(|(x, y)| x * y).sum();
        basis.push(q.clone());
        alpha.push(a);
        // full reorthogonalisation, twice for stability
        for _ in 0..2 {
            for b in &basis {
                let c: f64 = w.iter().zip(b).map(|(x, y)| x * y).sum();
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= c * bi;
                }
            }
        }
        let bnorm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if j + 1 == steps || bnorm <= 1e-14 * a.abs().max(1.0) {
            break;
        }
        beta.push(bnorm);
        q = w.iter().map(|x| x / bnorm).collect();
    }
    let (theta, y) = tridiagonal_min(&alpha, &beta);
    let mut x = vec![0.0; n];
    for (b, c) in basis.iter().zip(&y) {
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi += c * bi;
        }
    }
    let xn = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= xn);
    (theta, x)
}
