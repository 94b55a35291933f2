//! Local fusion data: principal blocks `M_i^S` with possibly unknown entries.

use serde::{Deserialize, Serialize};

use super::CriteriaError;
use crate::ring::FusionRing;

/// A block entry: known nonnegative value, or an unknown nonnegative integer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Entry {
    Known(f64),
    Unknown,
}

impl Entry {
    pub fn known(self) -> Option<f64> {
        match self {
            Entry::Known(v) => Some(v),
            Entry::Unknown => None,
        }
    }
}

/// Symbolic value of an entry product: structurally zero, known, or unknown.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Sym {
    Zero,
    Known(f64),
    Unknown,
}

impl Sym {
    pub(crate) fn mul(self, other: Sym) -> Sym {
        match (self, other) {
            (Sym::Zero, _) | (_, Sym::Zero) => Sym::Zero,
            (Sym::Unknown, _) | (_, Sym::Unknown) => Sym::Unknown,
            (Sym::Known(a), Sym::Known(b)) => Sym::Known(a * b),
        }
    }

    pub(crate) fn from_entry(e: Entry) -> Sym {
        match e {
            Entry::Known(0.0) => Sym::Zero,
            Entry::Known(v) => Sym::Known(v),
            Entry::Unknown => Sym::Unknown,
        }
    }
}

/// One basis element's contribution: its dimension and `s×s` block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalBlock {
    /// 0-based label of the basis element (for messages only).
    pub label: usize,
    pub dim: f64,
    /// Bound on `|dim - true dim|`.
    #[serde(default)]
    pub dim_error: f64,
    /// Row-major `s×s`.
    pub entries: Vec<Entry>,
}

/// `S`, the blocks `M_i^S` for every basis element, and dimensions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalData {
    /// 0-based labels of `S`, in matrix order.
    pub labels: Vec<usize>,
    pub blocks: Vec<LocalBlock>,
}

impl LocalData {
    pub fn new(labels: Vec<usize>, blocks: Vec<LocalBlock>) -> Result<Self, CriteriaError> {
        let s = labels.len();
        if s == 0 {
            return Err(CriteriaError::EmptySubset);
        }
        if blocks.is_empty() {
            return Err(CriteriaError::InvalidLocalData("no blocks".into()));
        }
        for b in &blocks {
            if b.entries.len() != s * s {
                return Err(CriteriaError::InvalidLocalData(format!(
                    "block x{} has {} entries, expected {}",
                    b.label + 1,
                    b.entries.len(),
                    s * s
                )));
            }
            if !(b.dim > 0.0) || !b.dim.is_finite() {
                return Err(CriteriaError::InvalidLocalData(format!("dimension of x{} must be positive", b.label + 1)));
            }
            if b.entries.iter().any(|e| matches!(e, Entry::Known(v) if !(*v >= 0.0) || !v.is_finite())) {
                return Err(CriteriaError::InvalidLocalData(format!("negative entry in block x{}", b.label + 1)));
            }
        }
        Ok(Self { labels, blocks })
    }

    /// Restricts every `M_i` to rows and columns in `set` (0-based, ordered).
    pub fn from_ring(ring: &FusionRing, set: &[usize]) -> Result<Self, CriteriaError> {
        let m = ring.rank();
        check_subset(set, m)?;
        let dims = ring.dims();
        let blocks = (0..m)
            .map(|i| {
                let mat = ring.matrix(i);
                let entries = set
                    .iter()
                    .flat_map(|&r| set.iter().map(move |&c| Entry::Known(mat[r * m + c])))
                    .collect();
                LocalBlock {
                    label: i,
                    dim: dims.values[i],
                    dim_error: dims.errors[i],
                    entries,
                }
            })
            .collect();
        Self::new(set.to_vec(), blocks)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Replaces the dimensions, block by block.
    pub fn with_dims(&self, dims: &[f64]) -> Result<Self, CriteriaError> {
        if dims.len() != self.blocks.len() {
            return Err(CriteriaError::InvalidLocalData(format!(
                "{} dimensions for {} blocks",
                dims.len(),
                self.blocks.len()
            )));
        }
        let mut out = self.clone();
        for (b, &d) in out.blocks.iter_mut().zip(dims) {
            b.dim = d;
            b.dim_error = 0.0;
        }
        Self::new(out.labels, out.blocks)
    }

    pub fn has_unknowns(&self) -> bool {
        self.blocks.iter().any(|b| b.entries.contains(&Entry::Unknown))
    }

    /// Known `f64` block, or the position of the first unknown.
    pub(crate) fn known_block(&self, i: usize) -> Result<Vec<f64>, CriteriaError> {
        let s = self.size();
        self.blocks[i]
            .entries
            .iter()
            .enumerate()
            .map(|(p, e)| {
                e.known().ok_or(CriteriaError::UnknownEntries {
                    block: self.blocks[i].label + 1,
                    row: p / s + 1,
                    col: p % s + 1,
                })
            })
            .collect()
    }

    /// Integer dimensions when every dimension is a positive integer.
    pub(crate) fn integral_dims(&self) -> Option<Vec<i128>> {
        self.blocks
            .iter()
            .map(|b| (b.dim.fract() == 0.0 && b.dim <= 1e15 && b.dim_error == 0.0).then_some(b.dim as i128))
            .collect()
    }

    pub(crate) fn entries_integral(&self) -> bool {
        self.blocks
            .iter()
            .flat_map(|b| &b.entries)
            .all(|e| matches!(e, Entry::Known(v) if v.fract() == 0.0 && *v <= 1e15))
    }
}

pub(crate) fn check_subset(set: &[usize], m: usize) -> Result<(), CriteriaError> {
    if set.is_empty() {
        return Err(CriteriaError::EmptySubset);
    }
    let mut seen = vec![false; m];
    for &i in set {
        if i >= m {
            return Err(CriteriaError::IndexOutOfRange(i + 1, m));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(CriteriaError::InvalidLocalData(format!("label {} repeated", i + 1)));
        }
    }
    Ok(())
}
