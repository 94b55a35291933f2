//! Twist patterns: one real orthogonal `s×s` matrix per tensor/Hadamard factor.

use serde::Serialize;

use super::CriteriaError;

/// Which patterns the search enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternCatalog {
    IdentityOnly,
    /// Identity plus every transposition (`{I, swap}` when `s = 2`).
    Transpositions,
    AllPermutations,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Twist {
    /// Row-major orthogonal matrix.
    pub matrix: Vec<f64>,
    /// Set when the matrix is a permutation: `(U M Uᵀ)[a][b] = M[p[a]][p[b]]`.
    pub perm: Option<Vec<usize>>,
}

impl Twist {
    pub fn from_perm(p: Vec<usize>) -> Self {
        let s = p.len();
        let mut matrix = vec![0.0; s * s];
        for (a, &pa) in p.iter().enumerate() {
            matrix[a * s + pa] = 1.0;
        }
        Self { matrix, perm: Some(p) }
    }

    pub fn identity(s: usize) -> Self {
        Self::from_perm((0..s).collect())
    }

    fn is_identity(&self) -> bool {
        self.perm.as_ref().is_some_and(|p| p.iter().enumerate().all(|(a, &b)| a == b))
    }

    fn label(&self) -> String {
        match &self.perm {
            Some(_) if self.is_identity() => "I".into(),
            Some(p) if p.len() == 2 => "swap".into(),
            Some(p) => p.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join("."),
            None => "U".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwistPattern {
    size: usize,
    twists: Vec<Twist>,
}

impl TwistPattern {
    pub fn identity(s: usize, n: usize) -> Self {
        Self {
            size: s,
            twists: vec![Twist::identity(s); n],
        }
    }

    /// Permutation twists given as 0-based image vectors.
    pub fn from_perms(s: usize, perms: Vec<Vec<usize>>) -> Result<Self, CriteriaError> {
        let mut twists = Vec::with_capacity(perms.len());
        for p in perms {
            let mut seen = vec![false; s];
            if p.len() != s || p.iter().any(|&x| x >= s || std::mem::replace(&mut seen[x], true)) {
                return Err(CriteriaError::NonUnitaryTwist(format!("{p:?} is not a permutation of {s} points")));
            }
            twists.push(Twist::from_perm(p));
        }
        Self::check(s, twists)
    }

    /// Arbitrary real orthogonal twists (row-major `s×s`).
    pub fn from_matrices(s: usize, mats: Vec<Vec<f64>>) -> Result<Self, CriteriaError> {
        let twists = mats
            .into_iter()
            .map(|matrix| {
                let perm = as_perm(&matrix, s);
                Twist { matrix, perm }
            })
            .collect();
        Self::check(s, twists)
    }

    /// Parses comma-separated tokens: `I`, `swap` (`s = 2`), or a 1-based
    /// image list such as `2.3.1`.
    pub fn parse(s: usize, text: &str) -> Result<Self, CriteriaError> {
        let mut perms = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let p = match tok.to_ascii_lowercase().as_str() {
                "i" | "id" => (0..s).collect(),
                "swap" | "s" if s == 2 => vec![1, 0],
                _ => tok
                    .split('.')
                    .map(|x| x.trim().parse::<usize>().ok().and_then(|v| v.checked_sub(1)))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| CriteriaError::NonUnitaryTwist(format!("cannot parse twist `{tok}`")))?,
            };
            perms.push(p);
        }
        if perms.is_empty() {
            return Err(CriteriaError::NonUnitaryTwist("empty pattern".into()));
        }
        Self::from_perms(s, perms)
    }

    fn check(s: usize, twists: Vec<Twist>) -> Result<Self, CriteriaError> {
        if twists.is_empty() {
            return Err(CriteriaError::NonUnitaryTwist("empty pattern".into()));
        }
        for t in &twists {
            if t.matrix.len() != s * s {
                return Err(CriteriaError::NonUnitaryTwist("twist has the wrong size".into()));
            }
            // ‖U Uᵀ − I‖_max ≤ 1e-12
            for a in 0..s {
                for b in 0..s {
                    let dot: f64 = (0..s).map(|c| t.matrix[a * s + c] * t.matrix[b * s + c]).sum();
                    let want = if a == b { 1.0 } else { 0.0 };
                    if (dot - want).abs() > 1e-12 {
                        return Err(CriteriaError::NonUnitaryTwist(format!("U Uᵀ differs from I at ({}, {})", a + 1, b + 1)));
                    }
                }
            }
        }
        Ok(Self { size: s, twists })
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn twists(&self) -> &[Twist] {
        &self.twists
    }

    pub fn is_identity(&self) -> bool {
        self.twists.iter().all(Twist::is_identity)
    }

    pub fn is_permutation(&self) -> bool {
        self.twists.iter().all(|t| t.perm.is_some())
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.twists.iter().map(Twist::label).collect();
        format!("({})", parts.join(","))
    }

    /// `U M Uᵀ` for factor `j`.
    pub(crate) fn conjugate(&self, j: usize, m: &[f64]) -> Vec<f64> {
        let s = self.size;
        let t = &self.twists[j];
        if let Some(p) = &t.perm {
            let mut out = vec![0.0; s * s];
            for a in 0..s {
                for b in 0..s {
                    out[a * s + b] = m[p[a] * s + p[b]];
                }
            }
            return out;
        }
        let u = &t.matrix;
        let mut tmp = vec![0.0; s * s];
        for a in 0..s {
            for b in 0..s {
                tmp[a * s + b] = (0..s).map(|c| u[a * s + c] * m[c * s + b]).sum();
            }
        }
        let mut out = vec![0.0; s * s];
        for a in 0..s {
            for b in 0..s {
                out[a * s + b] = (0..s).map(|c| tmp[a * s + c] * u[b * s + c]).sum();
            }
        }
        out
    }
}

fn as_perm(m: &[f64], s: usize) -> Option<Vec<usize>> {
    let mut p = Vec::with_capacity(s);
    for a in 0..s {
        let row = m.get(a * s..(a + 1) * s)?;
        let ones: Vec<usize> = (0..s).filter(|&b| row[b] == 1.0).collect();
        if ones.len() != 1 || row.iter().filter(|&&v| v != 0.0).count() != 1 {
            return None;
        }
        p.push(ones[0]);
    }
    Some(p)
}

fn permutations(s: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let s = used.len();
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for x in 0..s {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; s], &mut out);
    out
}

/// Catalog elements in enumeration order (identity first).
fn catalog_elements(s: usize, catalog: PatternCatalog) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..s).collect();
    match catalog {
        PatternCatalog::IdentityOnly => vec![id],
        PatternCatalog::Transpositions => {
            let mut out = vec![id.clone()];
            for a in 0..s {
                for b in a + 1..s {
                    let mut p = id.clone();
                    p.swap(a, b);
                    out.push(p);
                }
            }
            out
        }
        PatternCatalog::AllPermutations => permutations(s),
    }
}

/// Canonical patterns of length `n`: the first twist is the identity and the
/// rest form a non-decreasing multiset of catalog elements. Simultaneous
/// permutation conjugation and factor reordering leave both the Hadamard
/// product and the tensor spectrum unchanged, so nothing is lost.
pub fn catalog_patterns(s: usize, n: usize, catalog: PatternCatalog) -> Vec<TwistPattern> {
    let elems = catalog_elements(s, catalog);
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut idx = vec![0usize; n - 1];
    loop {
        let mut perms = vec![elems[0].clone()];
        perms.extend(idx.iter().map(|&k| elems[k].clone()));
        out.push(TwistPattern::from_perms(s, perms).expect("catalog permutations are valid"));
        // next non-decreasing index tuple, last position varies fastest
        let mut pos = n - 1;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + 1 < elems.len() {
                idx[pos] += 1;
                let v = idx[pos];
                for x in idx[pos + 1..].iter_mut() {
                    *x = v;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_label() {
        let p = TwistPattern::parse(2, "I,I,swap").unwrap();
        assert_eq!(p.label(), "(I,I,swap)");
        assert!(p.is_permutation());
        assert!(TwistPattern::parse(2, "I,x").is_err());
        assert!(TwistPattern::parse(3, "1.1.2").is_err());
    }

    #[test]
    fn catalog_counts() {
        let pats = catalog_patterns(2, 3, PatternCatalog::Transpositions);
        let labels: Vec<String> = pats.iter().map(|p| p.label()).collect();
        assert_eq!(labels, ["(I,I,I)", "(I,I,swap)", "(I,swap,swap)"]);
        assert_eq!(catalog_patterns(3, 3, PatternCatalog::AllPermutations).len(), 21);
        assert_eq!(catalog_patterns(2, 1, PatternCatalog::Transpositions).len(), 1);
    }

    #[test]
    fn rotation_is_accepted_but_not_permutation() {
        let c = (0.3f64).cos();
        let s = (0.3f64).sin();
        let p = TwistPattern::from_matrices(2, vec![vec![c, -s, s, c]]).unwrap();
        assert!(!p.is_permutation());
        assert!(TwistPattern::from_matrices(2, vec![vec![1.0, 1.0, 0.0, 1.0]]).is_err());
    }
}
