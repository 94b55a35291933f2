//! Fusion coefficients, validated rings and Frobenius–Perron dimensions.
//!
//! Indices are 0-based internally; every user-facing message is 1-based.
//! Left multiplication matrices follow `M_i[r][c] = N_{i,c}^r`, so
//! `M_i e_c = Σ_r N_{i,c}^r e_r` is the product `x_i x_c`.

use std::fmt;

use thiserror::Error;

/// Tolerance used when validating real-coefficient fusion algebras.
pub const REAL_TOL: f64 = 1e-12;

const FP_REL_TOL: f64 = 1e-13;
const FP_MAX_ITER: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RingError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("rank must be at least 1")]
    EmptyRing,
    #[error("invalid dual map: {0}")]
    InvalidDual(String),
    #[error("negative coefficient N[{0}][{1}][{2}]")]
    NegativeEntry(usize, usize, usize),
    #[error("non-integral coefficient N[{0}][{1}][{2}]")]
    NonIntegral(usize, usize, usize),
    #[error("unit axiom fails at ({0}, {1}, {2})")]
    UnitAxiom(usize, usize, usize),
    #[error("trace axiom fails at ({0}, {1})")]
    TraceAxiom(usize, usize),
    #[error("associativity fails at (i, j, k, l) = ({0}, {1}, {2}, {3})")]
    Associativity(usize, usize, usize, usize),
    #[error("dual is not an anti-involution at ({0}, {1}, {2})")]
    DualAntiInvolution(usize, usize, usize),
    #[error("Frobenius reciprocity fails at ({0}, {1}, {2})")]
    FrobeniusReciprocity(usize, usize, usize),
    #[error("sum of fusion matrices is reducible")]
    NonIrreducible,
    #[error("Perron iteration did not converge after {0} steps")]
    NoConvergence(usize),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
}

/// Structure constants `N_{ij}^k` plus the dual involution.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionCoeffs {
    rank: usize,
    n: Vec<f64>,
    dual: Vec<usize>,
    integral: bool,
}

impl FusionCoeffs {
    /// Shape-checked constructor; does not run the axioms (see [`validate`](Self::validate)).
    pub fn new(rank: usize, n: Vec<f64>, dual: Vec<usize>) -> Result<Self, RingError> {
        if rank == 0 {
            return Err(RingError::EmptyRing);
        }
        if n.len() != rank * rank * rank {
            return Err(RingError::Shape(format!(
                "expected {} coefficients, got {}",
                rank * rank * rank,
                n.len()
            )));
        }
        if dual.len() != rank {
            return Err(RingError::Shape(format!(
                "dual has length {}, rank is {}",
                dual.len(),
                rank
            )));
        }
        for (idx, &v) in n.iter().enumerate() {
            let (i, j, k) = (idx / (rank * rank), (idx / rank) % rank, idx % rank);
            if !v.is_finite() || v < 0.0 {
                return Err(RingError::NegativeEntry(i + 1, j + 1, k + 1));
            }
        }
        let integral = n.iter().all(|v| v.fract() == 0.0 && *v < 9.0e15);
        Ok(Self {
            rank,
            n,
            dual,
            integral,
        })
    }

    pub fn from_integers(rank: usize, n: &[u32], dual: Vec<usize>) -> Result<Self, RingError> {
        Self::new(rank, n.iter().map(|&v| v as f64).collect(), dual)
    }

    /// Builds coefficients from left multiplication matrices `M_i[r][c] = N_{i,c}^r`.
    pub fn from_matrices(mats: &[Vec<Vec<f64>>], dual: Vec<usize>) -> Result<Self, RingError> {
        let m = mats.len();
        let mut n = vec![0.0; m * m * m];
        for (i, mat) in mats.iter().enumerate() {
            check_square(mat, m, i)?;
            for (r, row) in mat.iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    n[(i * m + c) * m + r] = v;
                }
            }
        }
        Self::new(m, n, dual)
    }

    /// Builds coefficients from product-row blocks: row `r` of block `i`
    /// lists the coefficients of `x_i x_r`.
    pub fn from_product_rows(blocks: &[Vec<Vec<f64>>], dual: Vec<usize>) -> Result<Self, RingError> {
        let m = blocks.len();
        let mut n = vec![0.0; m * m * m];
        for (i, blk) in blocks.iter().enumerate() {
            check_square(blk, m, i)?;
            for (r, row) in blk.iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    n[(i * m + r) * m + c] = v;
                }
            }
        }
        Self::new(m, n, dual)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.n[(i * self.rank + j) * self.rank + k]
    }

    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    fn close(&self, a: f64, b: f64) -> bool {
        if self.integral {
            a == b
        } else {
            (a - b).abs() <= REAL_TOL * (1.0 + a.abs().max(b.abs()))
        }
    }

    /// Checks the dual involution, unit, anti-involution, trace,
    /// associativity and Frobenius reciprocity, in that order.
    /// Reports the first failing index tuple (1-based).
    pub fn validate(&self) -> Result<(), RingError> {
        let m = self.rank;
        let d = &self.dual;
        for (i, &di) in d.iter().enumerate() {
            if di >= m {
                return Err(RingError::InvalidDual(format!("dual({}) out of range", i + 1)));
            }
            if d[di] != i {
                return Err(RingError::InvalidDual(format!("dual is not an involution at {}", i + 1)));
            }
        }
        if d[0] != 0 {
            return Err(RingError::InvalidDual("unit must be self-dual".into()));
        }
        for j in 0..m {
            for k in 0..m {
                let want = if j == k { 1.0 } else { 0.0 };
                if !self.close(self.get(0, j, k), want) {
                    return Err(RingError::UnitAxiom(1, j + 1, k + 1));
                }
                if !self.close(self.get(j, 0, k), want) {
                    return Err(RingError::UnitAxiom(j + 1, 1, k + 1));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if !self.close(self.get(i, j, k), self.get(d[j], d[i], d[k])) {
                        return Err(RingError::DualAntiInvolution(i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                let want = if j == d[i] { 1.0 } else { 0.0 };
                if !self.close(self.get(i, j, 0), want) {
                    return Err(RingError::TraceAxiom(i + 1, j + 1));
                }
            }
        }
        // (x_i x_j) x_k = x_i (x_j x_k), coefficient of x_l
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let mut lhs = 0.0;
                        let mut rhs = 0.0;
                        for p in 0..m {
                            lhs += self.get(i, j, p) * self.get(p, k, l);
                            rhs += self.get(j, k, p) * self.get(i, p, l);
                        }
                        if !self.close(lhs, rhs) {
                            return Err(RingError::Associativity(i + 1, j + 1, k + 1, l + 1));
                        }
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let a = self.get(i, j, k);
                    if !self.close(a, self.get(d[i], k, j)) || !self.close(a, self.get(k, d[j], i)) {
                        return Err(RingError::FrobeniusReciprocity(i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_square(mat: &[Vec<f64>], m: usize, i: usize) -> Result<(), RingError> {
    if mat.len() != m || mat.iter().any(|row| row.len() != m) {
        return Err(RingError::Shape(format!("block {} is not {m}x{m}", i + 1)));
    }
    Ok(())
}

/// Frobenius–Perron dimensions with a per-entry error estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionVector {
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    /// Exact values when every dimension is a verified integer.
    pub integral: Option<Vec<i64>>,
}

impl DimensionVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Global dimension `Σ d_i²`.
    pub fn global(&self) -> f64 {
        self.values.iter().map(|d| d * d).sum()
    }
}

/// Perron eigenvector of `Σ M_i`, normalised so that `d_1 = 1`.
pub fn fp_dimensions(coeffs: &FusionCoeffs) -> Result<DimensionVector, RingError> {
    let m = coeffs.rank();
    let mats = left_matrices(coeffs);
    let mut a = vec![0.0; m * m];
    for mat in &mats {
        for (x, y) in a.iter_mut().zip(mat) {
            *x += y;
        }
    }
    if !strongly_connected(&a, m) {
        return Err(RingError::NonIrreducible);
    }

    let mut v = vec![1.0; m];
    let mut w = vec![0.0; m];
    let mut converged = false;
    for _ in 0..FP_MAX_ITER {
        matvec(&a, &v, &mut w);
        let scale = w.iter().cloned().fold(0.0, f64::max);
        if scale <= 0.0 {
            return Err(RingError::NonIrreducible);
        }
        let mut diff = 0.0f64;
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi /= scale;
            diff = diff.max((*wi - vi).abs());
        }
        std::mem::swap(&mut v, &mut w);
        if diff <= FP_REL_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(RingError::NoConvergence(FP_MAX_ITER));
    }
    let v0 = v[0];
    let mut dims: Vec<f64> = v.iter().map(|x| x / v0).collect();
    dims[0] = 1.0;

    // each M_i must act on the Perron vector by d_i
    let norm = dims.iter().cloned().fold(0.0, f64::max);
    let mut errors = vec![0.0; m];
    for (i, mat) in mats.iter().enumerate() {
        matvec(mat, &dims, &mut w);
        let mut res = 0.0f64;
        for r in 0..m {
            res = res.max((w[r] - dims[i] * dims[r]).abs());
        }
        if res > 1e-8 * norm * dims[i].max(1.0) {
            return Err(RingError::NoConvergence(FP_MAX_ITER));
        }
        errors[i] = (res / norm).max(FP_REL_TOL * dims[i]);
    }

    let integral = integral_dims(coeffs, &dims);
    if let Some(ints) = &integral {
        for (d, &n) in dims.iter_mut().zip(ints) {
            *d = n as f64;
        }
        errors.iter_mut().for_each(|e| *e = 0.0);
    }
    Ok(DimensionVector {
        values: dims,
        errors,
        integral,
    })
}

fn integral_dims(coeffs: &FusionCoeffs, dims: &[f64]) -> Option<Vec<i64>> {
    if !coeffs.is_integral() {
        return None;
    }
    let m = coeffs.rank();
    let mut ints = Vec::with_capacity(m);
    for &d in dims {
        let r = d.round();
        if (d - r).abs() > 1e-9 * d.max(1.0) || !(1.0..=1e12).contains(&r) {
            return None;
        }
        ints.push(r as i64);
    }
    // exact eigen-equation check: Σ_c N_{i,c}^r D_c = D_i D_r
    for i in 0..m {
        for r in 0..m {
            let mut s: i128 = 0;
            for c in 0..m {
                s += coeffs.get(i, c, r) as i128 * ints[c] as i128;
            }
            if s != ints[i] as i128 * ints[r] as i128 {
                return None;
            }
        }
    }
    Some(ints)
}

fn matvec(a: &[f64], x: &[f64], y: &mut [f64]) {
    let m = x.len();
    for r in 0..m {
        y[r] = a[r * m..(r + 1) * m].iter().zip(x).map(|(p, q)| p * q).sum();
    }
}

fn strongly_connected(a: &[f64], m: usize) -> bool {
    let reach = |forward: bool| {
        let mut seen = vec![false; m];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..m {
                let e = if forward { a[u * m + v] } else { a[v * m + u] };
                if e > 0.0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    reach(true) && reach(false)
}

fn left_matrices(coeffs: &FusionCoeffs) -> Vec<Vec<f64>> {
    let m = coeffs.rank();
    (0..m)
        .map(|i| {
            let mut mat = vec![0.0; m * m];
            for r in 0..m {
                for c in 0..m {
                    mat[r * m + c] = coeffs.get(i, c, r);
                }
            }
            mat
        })
        .collect()
}

/// A validated fusion ring with cached matrices and dimensions.
#[derive(Debug, Clone)]
pub struct FusionRing {
    name: String,
    coeffs: FusionCoeffs,
    mats: Vec<Vec<f64>>,
    dims: DimensionVector,
    commutative: bool,
}

impl FusionRing {
    pub fn new(name: impl Into<String>, coeffs: FusionCoeffs) -> Result<Self, RingError> {
        coeffs.validate()?;
        let dims = fp_dimensions(&coeffs)?;
        let mats = left_matrices(&coeffs);
        let m = coeffs.rank();
        let commutative = (0..m)
            .all(|i| (0..m).all(|j| (0..m).all(|k| coeffs.get(i, j, k) == coeffs.get(j, i, k))));
        Ok(Self {
            name: name.into(),
            coeffs,
            mats,
            dims,
            commutative,
        })
    }

    /// See [`FusionCoeffs::from_product_rows`]; `dual` is 0-based.
    pub fn from_product_rows(
        name: impl Into<String>,
        blocks: &[Vec<Vec<f64>>],
        dual: Vec<usize>,
    ) -> Result<Self, RingError> {
        Self::new(name, FusionCoeffs::from_product_rows(blocks, dual)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn rank(&self) -> usize {
        self.coeffs.rank()
    }

    pub fn coeffs(&self) -> &FusionCoeffs {
        &self.coeffs
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn dual(&self, i: usize) -> usize {
        self.coeffs.dual[i]
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.is_integral()
    }

    /// Row-major `M_i`, `M_i[r][c] = N_{i,c}^r`.
    pub fn matrix(&self, i: usize) -> &[f64] {
        &self.mats[i]
    }

    pub fn matrices(&self) -> &[Vec<f64>] {
        &self.mats
    }

    /// Product-row block of `x_i`: row `r` is `x_i x_r`.
    pub fn product_rows(&self, i: usize) -> Vec<Vec<f64>> {
        let m = self.rank();
        (0..m)
            .map(|r| (0..m).map(|c| self.coeffs.get(i, r, c)).collect())
            .collect()
    }

    /// Renumbers basis elements: new label `p` is old label `perm[p]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, RingError> {
        let m = self.rank();
        let mut seen = vec![false; m];
        if perm.len() != m || perm[0] != 0 || perm.iter().any(|&p| p >= m || std::mem::replace(&mut seen[p], true)) {
            return Err(RingError::Shape("relabelling must be a permutation fixing the unit".into()));
        }
        let mut inv = vec![0; m];
        for (p, &q) in perm.iter().enumerate() {
            inv[q] = p;
        }
        let mut n = vec![0.0; m * m * m];
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    n[(i * m + j) * m + k] = self.coeffs.get(perm[i], perm[j], perm[k]);
                }
            }
        }
        let dual = (0..m).map(|p| inv[self.coeffs.dual[perm[p]]]).collect();
        Self::new(self.name.clone(), FusionCoeffs::new(m, n, dual)?)
    }
}

impl fmt::Display for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {})", self.name, self.rank())
    }
}

/// A `Z/k` grading: `N_{ij}^k > 0` implies `g(i) + g(j) = g(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingMap {
    modulus: u32,
    degrees: Vec<u32>,
}

impl GradingMap {
    pub fn new(ring: &FusionRing, modulus: u32, degrees: Vec<u32>) -> Result<Self, RingError> {
        let m = ring.rank();
        if modulus == 0 {
            return Err(RingError::InvalidGrading("modulus must be positive".into()));
        }
        if degrees.len() != m {
            return Err(RingError::InvalidGrading(format!("expected {m} degrees")));
        }
        if degrees.iter().any(|&g| g >= modulus) {
            return Err(RingError::InvalidGrading("degree out of range".into()));
        }
        if degrees[0] != 0 {
            return Err(RingError::InvalidGrading("unit must have degree 0".into()));
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if ring.coeffs.get(i, j, k) > 0.0 && (degrees[i] + degrees[j]) % modulus != degrees[k] {
                        return Err(RingError::InvalidGrading(format!(
                            "x{} x{} contains x{} but degrees disagree",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(Self { modulus, degrees })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FusionCoeffs {
        // x2 x2 = 1
        let mut n = vec![0u32; 8];
        n[0] = 1;
        n[3] = 1;
        n[5] = 1;
        n[6] = 1;
        FusionCoeffs::from_integers(2, &n, vec![0, 1]).unwrap()
    }

    #[test]
    fn z2_is_valid() {
        let ring = FusionRing::new("Z2", z2()).unwrap();
        assert_eq!(ring.dims().integral, Some(vec![1, 1]));
        assert!(ring.is_commutative());
    }

    #[test]
    fn broken_trace_is_reported() {
        let mut c = z2();
        c.n[6] = 0.0;
        assert_eq!(c.validate(), Err(RingError::TraceAxiom(2, 2)));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(FusionCoeffs::new(2, vec![0.0; 7], vec![0, 1]), Err(RingError::Shape(_))));
        assert!(matches!(FusionCoeffs::new(0, vec![], vec![]), Err(RingError::EmptyRing)));
        assert!(matches!(
            FusionCoeffs::new(1, vec![-1.0], vec![0]),
            Err(RingError::NegativeEntry(1, 1, 1))
        ));
    }

    #[test]
    fn grading_on_z2() {
        let ring = FusionRing::new("Z2", z2()).unwrap();
        assert!(GradingMap::new(&ring, 2, vec![0, 1]).is_ok());
        assert!(GradingMap::new(&ring, 3, vec![0, 1]).is_err());
    }
}
