//! Bipartite principal-graph candidates and the double-arc family.

use serde::{Deserialize, Serialize};

use super::{check_nmax, first_triple, ObstructionError, Triple};
use crate::config::EvalConfig;
use crate::criteria::{check_localized, Entry, LocalBlock, LocalData};
use crate::ring::DimensionVector;
use crate::spectra::PsdVerdict;

const POWER_TOL: f64 = 1e-14;
const POWER_MAX_ITER: usize = 1_000_000;

/// A connected bipartite graph with a distinguished root of dimension 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    pub name: String,
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub root: String,
    /// `(u, v, multiplicity)`; one endpoint even, the other odd.
    pub edges: Vec<(String, String, u32)>,
}

impl BipartiteGraph {
    pub fn new(
        name: impl Into<String>,
        even: Vec<String>,
        odd: Vec<String>,
        root: impl Into<String>,
        edges: Vec<(String, String, u32)>,
    ) -> Result<Self, ObstructionError> {
        let g = Self {
            name: name.into(),
            even,
            odd,
            root: root.into(),
            edges,
        };
        g.validate()?;
        Ok(g)
    }

    /// Checks vertex names, bipartiteness and connectivity.
    pub fn validate(&self) -> Result<(), ObstructionError> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(ObstructionError::InvalidGraph("no vertices".into()));
        }
        let mut names: Vec<&String> = self.even.iter().chain(&self.odd).collect();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(ObstructionError::InvalidGraph("duplicate vertex name".into()));
        }
        self.index(&self.root)?;
        for (u, v, mult) in &self.edges {
            let (a, b) = (self.index(u)?, self.index(v)?);
            if self.is_even(a) == self.is_even(b) {
                return Err(ObstructionError::InvalidGraph(format!("edge {u}–{v} joins vertices of the same parity")));
            }
            if *mult == 0 {
                return Err(ObstructionError::InvalidGraph(format!("edge {u}–{v} has multiplicity 0")));
            }
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![self.index(&self.root)?];
        seen[stack[0]] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if adj[u * n + v] > 0.0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(ObstructionError::Disconnected);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    /// Vertex names: even vertices first, then odd.
    pub fn vertices(&self) -> Vec<&str> {
        self.even.iter().chain(&self.odd).map(String::as_str).collect()
    }

    pub fn index(&self, name: &str) -> Result<usize, ObstructionError> {
        self.even
            .iter()
            .chain(&self.odd)
            .position(|v| v == name)
            .ok_or_else(|| ObstructionError::InvalidGraph(format!("unknown vertex `{name}`")))
    }

    fn is_even(&self, i: usize) -> bool {
        i < self.even.len()
    }

    /// Symmetric adjacency with multiplicities, row-major.
    pub fn adjacency(&self) -> Vec<f64> {
        let n = self.vertex_count();
        let mut a = vec![0.0; n * n];
        for (u, v, mult) in &self.edges {
            if let (Ok(i), Ok(j)) = (self.index(u), self.index(v)) {
                a[i * n + j] += *mult as f64;
                a[j * n + i] += *mult as f64;
            }
        }
        a
    }

    fn neighbours(&self, i: usize) -> Vec<(usize, u32)> {
        let n = self.vertex_count();
        let a = self.adjacency();
        (0..n).filter(|&j| a[i * n + j] > 0.0).map(|j| (j, a[i * n + j] as u32)).collect()
    }
}

fn perron(g: &BipartiteGraph) -> Result<(f64, Vec<f64>), ObstructionError> {
    g.validate()?;
    let n = g.vertex_count();
    let a = g.adjacency();
    // A + I is primitive on a connected graph, so power iteration converges
    let mut v = vec![1.0; n];
    let mut w = vec![0.0; n];
    for _ in 0..POWER_MAX_ITER {
        for r in 0..n {
            w[r] = v[r] + (0..n).map(|c| a[r * n + c] * v[c]).sum::<f64>();
        }
        let scale = w.iter().cloned().fold(0.0, f64::max);
        let mut diff = 0.0f64;
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi /= scale;
            diff = diff.max((*wi - vi).abs());
        }
        std::mem::swap(&mut v, &mut w);
        if diff <= POWER_TOL {
            let root = g.index(&g.root)?;
            let r = v[root];
            let dims: Vec<f64> = v.iter().map(|x| x / r).collect();
            return Ok((scale - 1.0, dims));
        }
    }
    Err(ObstructionError::HypothesisFailed("power iteration did not converge".into()))
}

/// Perron vector of the adjacency operator, normalised to 1 at the root.
pub fn graph_dims(g: &BipartiteGraph) -> Result<DimensionVector, ObstructionError> {
    let (delta, dims) = perron(g)?;
    let n = dims.len();
    let a = g.adjacency();
    let mut res = 0.0f64;
    for r in 0..n {
        let av: f64 = (0..n).map(|c| a[r * n + c] * dims[c]).sum();
        res = res.max((av - delta * dims[r]).abs());
    }
    let errors = dims.iter().map(|d| (res / delta.max(1.0)).max(POWER_TOL * d)).collect();
    Ok(DimensionVector {
        values: dims,
        errors,
        integral: None,
    })
}

/// Index `δ²`, the square of the adjacency norm.
pub fn graph_index(g: &BipartiteGraph) -> Result<f64, ObstructionError> {
    let (delta, _) = perron(g)?;
    Ok(delta * delta)
}

/// Verdict on `Σ_j d_j² (M_j^S/d_j)^{⊗n}` for caller-supplied local data.
pub fn graph_local_check(l: &LocalData, n: usize, cfg: &EvalConfig) -> Result<PsdVerdict, ObstructionError> {
    Ok(check_localized(l, n, cfg)?)
}

/// The `D₅` graph: a path `1–2–3` with two leaves `4`, `5` on `3`.
pub fn d5_graph() -> BipartiteGraph {
    let s = |x: &str| x.to_string();
    BipartiteGraph::new(
        "D5",
        vec![s("1"), s("3")],
        vec![s("2"), s("4"), s("5")],
        "1",
        vec![(s("1"), s("2"), 1), (s("2"), s("3"), 1), (s("3"), s("4"), 1), (s("3"), s("5"), 1)],
    )
    .expect("D5 is a valid graph")
}

/// Local data on `S = {x₁, x₄}` of the bimodule ring of `D₅`: `x₄` and its
/// dual `x₄*` (the other leaf) exchange `x₁` and `x₄`.
pub fn d5_local_data(g: &BipartiteGraph) -> Result<LocalData, ObstructionError> {
    let dims = graph_dims(g)?;
    let (i4, i5) = (g.index("4")?, g.index("5")?);
    let d4 = dims.values[i4];
    if (d4 - dims.values[i5]).abs() > 1e-9 * d4 {
        return Err(ObstructionError::HypothesisFailed("the two leaves must have equal dimension".into()));
    }
    let e = |v: [f64; 4]| v.iter().map(|&x| Entry::Known(x)).collect::<Vec<_>>();
    let blocks = vec![
        LocalBlock {
            label: 0,
            dim: 1.0,
            dim_error: 0.0,
            entries: e([1.0, 0.0, 0.0, 1.0]),
        },
        LocalBlock {
            label: 3,
            dim: d4,
            dim_error: dims.errors[i4],
            entries: e([0.0, 0.0, 1.0, 0.0]),
        },
        LocalBlock {
            label: 4,
            dim: d4,
            dim_error: dims.errors[i5],
            entries: e([0.0, 1.0, 0.0, 0.0]),
        },
    ];
    Ok(LocalData::new(vec![0, 3], blocks)?)
}

/// Root – `x₂` – (`ℓ` arcs) – `x₃` – branches of multiplicity `m_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphFamilyParams {
    pub ell: u32,
    pub mults: Vec<u32>,
    pub d2: f64,
}

impl GraphFamilyParams {
    pub fn new(ell: u32, mults: Vec<u32>, d2: f64) -> Result<Self, ObstructionError> {
        let p = Self { ell, mults, d2 };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), ObstructionError> {
        if self.ell == 0 {
            return Err(ObstructionError::InvalidParams("ℓ must be at least 1".into()));
        }
        if !(self.d2 > 1.0) || !self.d2.is_finite() {
            return Err(ObstructionError::InvalidParams("d₂ must exceed 1".into()));
        }
        Ok(())
    }

    /// `M = Σ m_j² + ℓ² − 1`.
    pub fn m_value(&self) -> f64 {
        self.mults.iter().map(|&m| (m as f64) * (m as f64)).sum::<f64>() + (self.ell as f64).powi(2) - 1.0
    }

    /// `d₃ = (d₂² − 1)/ℓ`, forced by `x₂² = 1 + ℓ x₃`.
    pub fn d3(&self) -> f64 {
        (self.d2 * self.d2 - 1.0) / self.ell as f64
    }
}

/// Family parameters with `M` supplied directly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphFamilyRaw {
    pub ell: u32,
    pub m: f64,
    pub d2: f64,
}

impl GraphFamilyRaw {
    pub fn new(ell: u32, m: f64, d2: f64) -> Result<Self, ObstructionError> {
        GraphFamilyParams::new(ell, vec![], d2)?;
        if !(m >= 0.0) {
            return Err(ObstructionError::InvalidParams("M must be nonnegative".into()));
        }
        Ok(Self { ell, m, d2 })
    }
}

impl From<GraphFamilyParams> for GraphFamilyRaw {
    fn from(p: GraphFamilyParams) -> Self {
        (&p).into()
    }
}

impl From<&GraphFamilyParams> for GraphFamilyRaw {
    fn from(p: &GraphFamilyParams) -> Self {
        Self {
            ell: p.ell,
            m: p.m_value(),
            d2: p.d2,
        }
    }
}

/// `(ℓ^{2a−2}Mᵇ/(d₂²−1)ⁿ⁻² + 1)(ℓ^{2b−2}Mᵃ/(d₂²−1)ⁿ⁻² + 1) − ℓ²ⁿ/d₂²ⁿ⁻⁴`.
pub fn graph_family_expression(p: impl Into<GraphFamilyRaw>, n: u32, a: u32) -> f64 {
    let p = p.into();
    let b = (n - a) as i32;
    let (n, a) = (n as i32, a as i32);
    let l = p.ell as f64;
    let w = (p.d2 * p.d2 - 1.0).powi(n - 2);
    let first = l.powi(2 * a - 2) * p.m.powi(b) / w + 1.0;
    let second = l.powi(2 * b - 2) * p.m.powi(a) / w + 1.0;
    first * second - l.powi(2 * n) / p.d2.powi(2 * n - 4)
}

/// First `(n, a, b)` (n ascending, then a) with a negative expression.
pub fn graph_family_check(p: impl Into<GraphFamilyRaw>, n_max: u32) -> Result<Option<Triple>, ObstructionError> {
    let p = p.into();
    GraphFamilyParams::new(p.ell, vec![], p.d2)?;
    check_nmax(n_max)?;
    Ok(first_triple(n_max, |n, a| graph_family_expression(p, n, a)))
}

/// Every `(n, a, b)` up to `n_max` with a negative expression.
pub fn graph_family_witnesses(p: impl Into<GraphFamilyRaw>, n_max: u32) -> Result<Vec<Triple>, ObstructionError> {
    let p = p.into();
    GraphFamilyParams::new(p.ell, vec![], p.d2)?;
    check_nmax(n_max)?;
    Ok((2..=n_max)
        .flat_map(|n| (1..n).map(move |a| (n, a, n - a)))
        .filter(|&(n, a, _)| graph_family_expression(p, n, a) < 0.0)
        .collect())
}

/// `√2·M/ℓ < d₂ − 1/d₂ < d₂ < ℓ²/√2`, sufficient for the `(4,2,2)` exclusion.
pub fn chain_bound_check(p: impl Into<GraphFamilyRaw>) -> bool {
    let p = p.into();
    let l = p.ell as f64;
    let s2 = std::f64::consts::SQRT_2;
    s2 * p.m / l < p.d2 - 1.0 / p.d2 && p.d2 - 1.0 / p.d2 < p.d2 && p.d2 < l * l / s2
}

/// Upper bound on `dim P₃` under which the `a = b = 2` exclusion applies,
/// `((δ²−1)/ℓ)·√(ℓ⁴/δ² − 1) + ℓ⁴ + ℓ² + 2`; needs `ℓ² ≥ δ`.
pub fn p3_dimension_bound(delta_sq: f64, ell: u32) -> Result<f64, ObstructionError> {
    if !(delta_sq > 1.0) || ell == 0 {
        return Err(ObstructionError::InvalidParams("need δ² > 1 and ℓ ≥ 1".into()));
    }
    let l = ell as f64;
    let l2 = l * l;
    let delta = delta_sq.sqrt();
    if l2 < delta {
        return Err(ObstructionError::HypothesisFailed(format!("ℓ² = {l2} < δ = {delta}")));
    }
    let rad = (l2 * l2 / delta_sq - 1.0).max(0.0).sqrt();
    Ok((delta_sq - 1.0) / l * rad + l2 * l2 + l2 + 2.0)
}

/// Detects the double-arc local form at the root. A single arc is read as
/// `ℓ = 1`. Anything else (root of degree ≠ 1, extra neighbours of `x₂`)
/// gives `None`.
pub fn extract_family(g: &BipartiteGraph) -> Result<Option<GraphFamilyParams>, ObstructionError> {
    let dims = graph_dims(g)?;
    let root = g.index(&g.root)?;
    let rn = g.neighbours(root);
    let [(x2, 1)] = rn[..] else {
        return Ok(None);
    };
    let n2: Vec<(usize, u32)> = g.neighbours(x2).into_iter().filter(|&(v, _)| v != root).collect();
    let [(x3, ell)] = n2[..] else {
        return Ok(None);
    };
    let mults = g.neighbours(x3).into_iter().filter(|&(v, _)| v != x2).map(|(_, m)| m).collect();
    Ok(Some(GraphFamilyParams::new(ell, mults, dims.values[x2])?))
}

/// Local data on `S = {x₂, x₃}` of the family: `x₁, x₂, x₃` known, everything
/// deeper aggregated into one block `[[0, ?], [?, ?]]`.
pub fn family_local_data(p: &GraphFamilyParams) -> Result<LocalData, ObstructionError> {
    let l = p.ell as f64;
    let k = |v: [f64; 4]| v.iter().map(|&x| Entry::Known(x)).collect::<Vec<_>>();
    let blocks = vec![
        LocalBlock {
            label: 0,
            dim: 1.0,
            dim_error: 0.0,
            entries: k([1.0, 0.0, 0.0, 1.0]),
        },
        LocalBlock {
            label: 1,
            dim: p.d2,
            dim_error: 0.0,
            entries: k([0.0, l, l, 0.0]),
        },
        LocalBlock {
            label: 2,
            dim: p.d3(),
            dim_error: 0.0,
            entries: k([l, 0.0, 0.0, p.m_value() / l]),
        },
        LocalBlock {
            label: 3,
            dim: 1.0,
            dim_error: 0.0,
            entries: vec![Entry::Known(0.0), Entry::Unknown, Entry::Unknown, Entry::Unknown],
        },
    ];
    Ok(LocalData::new(vec![1, 2], blocks)?)
}
