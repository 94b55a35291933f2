//! Bounded search for a violated criterion.

use serde::Serialize;

use super::{catalog_patterns, check_localized, check_reduced, CriteriaError, LocalData, PatternCatalog};
use crate::config::EvalConfig;
use crate::ring::FusionRing;
use crate::spectra::{PsdVerdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest `|S|` tried.
    pub max_subset: usize,
    /// Largest tensor/Hadamard power tried.
    pub max_n: usize,
    pub catalog: PatternCatalog,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_subset: 2,
            max_n: 3,
            catalog: PatternCatalog::Transpositions,
        }
    }
}

/// Subsets of `0..m` of size `k` in lexicographic order.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > m {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < m - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// First violation found, enumerating subsets by size then lexicographically,
/// then `n = 1..=max_n`, then canonical catalog patterns. The identity pattern
/// is tested on the tensor matrix, the others on the twisted Hadamard matrix.
/// Criteria that cannot be evaluated within the caps are skipped.
pub fn search_violation(ring: &FusionRing, budget: &SearchBudget, cfg: &EvalConfig) -> Result<Option<Witness>, CriteriaError> {
    if budget.max_subset == 0 || budget.max_n == 0 {
        return Err(CriteriaError::BudgetZero);
    }
    let m = ring.rank();
    for k in 1..=budget.max_subset.min(m) {
        for set in subsets(m, k) {
            let l = LocalData::from_ring(ring, &set)?;
            for n in 1..=budget.max_n {
                for pattern in catalog_patterns(k, n, budget.catalog) {
                    let verdict = if pattern.is_identity() {
                        check_localized(&l, n, cfg)
                    } else {
                        check_reduced(&l, n as u64, Some(&pattern), cfg)
                    };
                    match verdict {
                        Ok(PsdVerdict::Violated(w)) => return Ok(Some(*w)),
                        Ok(_) => {}
                        Err(CriteriaError::DenseCapExceeded { .. }) | Err(CriteriaError::Spectra(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_lex_order() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(subsets(2, 3).is_empty());
    }
}
