//! Householder tridiagonalisation and Sturm-sequence bisection.

/// `QᵀAQ = T` with the reflectors kept for back-transformation.
#[derive(Debug, Clone)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
    reflectors: Vec<Vec<f64>>,
}

impl Tridiagonal {
    /// Consumes a row-major symmetric `n×n` array.
    pub fn from_symmetric(mut a: Vec<f64>, n: usize) -> Self {
        let mut reflectors = Vec::with_capacity(n.saturating_sub(2));
        let mut off = vec![0.0; n.saturating_sub(1)];
        let mut p = vec![0.0; n];
        for k in 0..n.saturating_sub(2) {
            let len = n - k - 1;
            let mut v: Vec<f64> = (k + 1..n).map(|r| a[r * n + k]).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 {
                off[k] = 0.0;
                reflectors.push(Vec::new());
                continue;
            }
            let alpha = if v[0] > 0.0 { -norm } else { norm };
            v[0] -= alpha;
            let vn = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if vn == 0.0 {
                off[k] = v[0] + alpha;
                reflectors.push(Vec::new());
                continue;
            }
            v.iter_mut().for_each(|x| *x /= vn);
            off[k] = alpha;

            // A22 ← H A22 H with H = I - 2vvᵀ
            let base = k + 1;
            for i in 0..len {
                let row = &a[(base + i) * n + base..(base + i) * n + n];
                p[i] = row.iter().zip(&v).map(|(x, y)| x * y).sum();
            }
            let kk: f64 = p[..len].iter().zip(&v).map(|(x, y)| x * y).sum();
            let w: Vec<f64> = (0..len).map(|i| 2.0 * (p[i] - kk * v[i])).collect();
            for i in 0..len {
                let (vi, wi) = (v[i], w[i]);
                let row = &mut a[(base + i) * n + base..(base + i) * n + n];
                for j in 0..len {
                    row[j] -= vi * w[j] + wi * v[j];
                }
            }
            reflectors.push(v);
        }
        if n >= 2 {
            off[n - 2] = a[(n - 1) * n + n - 2];
        }
        let diag = (0..n).map(|i| a[i * n + i]).collect();
        Self { diag, off, reflectors }
    }

    /// Builds directly from a tridiagonal matrix (no reflectors).
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        Self {
            diag,
            off,
            reflectors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE
            * self
                .off
                .iter()
                .map(|e| e * e)
                .fold(1.0, f64::max);
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            q = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut r = 0.0;
            if i > 0 {
                r += self.off[i - 1].abs();
            }
            if i + 1 < n {
                r += self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Bracket `[lo, hi]` around the smallest eigenvalue, width near one ulp.
    pub fn min_eigenvalue_bracket(&self) -> (f64, f64) {
        let (g_lo, g_hi) = self.gershgorin();
        let scale = g_lo.abs().max(g_hi.abs()).max(f64::MIN_POSITIVE);
        let mut lo = g_lo - 2.0 * f64::EPSILON * scale;
        let mut hi = g_hi + 2.0 * f64::EPSILON * scale;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if hi - lo <= 2.0 * f64::EPSILON * (lo.abs().max(hi.abs())) + f64::MIN_POSITIVE {
                break;
            }
            if self.sturm_count(mid) >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        (lo, hi)
    }

    /// Inverse iteration at shift `lambda`, mapped back through the reflectors.
    pub fn min_eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.diag.len();
        if n == 1 {
            return vec![1.0];
        }
        let scale = self
            .diag
            .iter()
            .chain(&self.off)
            .fold(0.0f64, |a, &b| a.max(b.abs()))
            .max(f64::MIN_POSITIVE);
        let shift = lambda - 4.0 * f64::EPSILON * scale;
        let mut y: Vec<f64> = (0..n).map(|i| 1.0 + ((i * 7919) % 13) as f64 * 1e-3).collect();
        for _ in 0..4 {
            y = solve_shifted(&self.diag, &self.off, shift, &y);
            let nrm = y.iter().map(|x| x * x).sum::<f64>().sqrt();
            if nrm == 0.0 || !nrm.is_finite() {
                y = vec![0.0; n];
                y[0] = 1.0;
                break;
            }
            y.iter_mut().for_each(|x| *x /= nrm);
        }
        self.back_transform(&mut y);
        y
    }

    fn back_transform(&self, y: &mut [f64]) {
        for (k, v) in self.reflectors.iter().enumerate().rev() {
            if v.is_empty() {
                continue;
            }
            let tail = &mut y[k + 1..];
            let dot: f64 = tail.iter().zip(v).map(|(a, b)| a * b).sum();
            for (t, vi) in tail.iter_mut().zip(v) {
                *t -= 2.0 * dot * vi;
            }
        }
    }
}

/// Solves `(T - σI) x = b` by Gaussian elimination with partial pivoting.
fn solve_shifted(d: &[f64], e: &[f64], sigma: f64, b: &[f64]) -> Vec<f64> {
    let n = d.len();
    let tiny = f64::EPSILON * d.iter().chain(e).fold(f64::MIN_POSITIVE, |a, &x| a.max(x.abs()));
    // rows hold (main, super1, super2) after elimination
    let mut m0: Vec<f64> = d.iter().map(|x| x - sigma).collect();
    let mut m1: Vec<f64> = e.to_vec();
    m1.push(0.0);
    let mut m2 = vec![0.0; n];
    let mut sub: Vec<f64> = e.to_vec();
    let mut rhs = b.to_vec();
    for k in 0..n - 1 {
        if sub[k].abs() > m0[k].abs() {
            // swap rows k and k+1
            let (a0, a1, a2) = (m0[k], m1[k], m2[k]);
            m0[k] = sub[k];
            m1[k] = m0[k + 1];
            m2[k] = m1[k + 1];
            rhs.swap(k, k + 1);
            // old row k becomes the row to eliminate
            let f = a0 / m0[k];
            m0[k + 1] = a1 - f * m1[k];
            m1[k + 1] = a2 - f * m2[k];
            rhs[k + 1] -= f * rhs[k];
        } else {
            if m0[k] == 0.0 {
                m0[k] = tiny;
            }
            let f = sub[k] / m0[k];
            m0[k + 1] -= f * m1[k];
            // m1[k+1] is untouched since m2[k] == 0 in this branch
            m1[k + 1] -= f * m2[k];
            rhs[k + 1] -= f * rhs[k];
        }
        sub[k] = 0.0;
    }
    if m0[n - 1] == 0.0 {
        m0[n - 1] = tiny;
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = rhs[k];
        if k + 1 < n {
            s -= m1[k] * x[k + 1];
        }
        if k + 2 < n {
            s -= m2[k] * x[k + 2];
        }
        x[k] = s / m0[k];
    }
    x
}

/// Smallest eigenvalue of a symmetric tridiagonal matrix and its eigenvector.
pub fn tridiagonal_min(diag: &[f64], off: &[f64]) -> (f64, Vec<f64>) {
    let t = Tridiagonal::new(diag.to_vec(), off.to_vec());
    let (lo, hi) = t.min_eigenvalue_bracket();
    let v = t.min_eigenvector(hi);
    (0.5 * (lo + hi), v)
}
