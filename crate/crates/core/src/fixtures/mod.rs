//! Built-in rings: small positive controls and the bundled reference corpus.

mod corpus;

use crate::ring::{FusionCoeffs, FusionRing, RingError};

/// Identifies a built-in ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// Group ring of `Z/n`.
    Cyclic(usize),
    /// `x² = 1 + x`.
    Fibonacci,
    /// `Z/n` plus one object `b` with `b² = b + Σ g`.
    NearGroup(usize),
    /// `R_{4,k}`: rank 4, self-dual, parameter `k ≥ 1`.
    R4(u32),
    /// The rank-7 commutative ring whose 2-element localization is violated.
    K7,
    /// Rank-6 noncommutative ring.
    Rank6Nc,
    /// Rank-7 companions of [`Fixture::K7`] sharing its local data, 1..=9.
    Rank7Extra(usize),
    /// Rank-8 rings, 1..=5.
    Rank8(usize),
}

/// Names of the 16 bundled reference rings, in corpus order.
pub const CORPUS: [&str; 16] = [
    "rank6_nc",
    "k7",
    "rank7_extra_1",
    "rank7_extra_2",
    "rank7_extra_3",
    "rank7_extra_4",
    "rank7_extra_5",
    "rank7_extra_6",
    "rank7_extra_7",
    "rank7_extra_8",
    "rank7_extra_9",
    "rank8_1",
    "rank8_2",
    "rank8_3",
    "rank8_4",
    "rank8_5",
];

impl Fixture {
    pub fn name(&self) -> String {
        match *self {
            Fixture::Cyclic(n) => format!("cyclic_{n}"),
            Fixture::Fibonacci => "fibonacci".into(),
            Fixture::NearGroup(n) => format!("near_group_{n}"),
            Fixture::R4(k) => format!("r4_{k}"),
            Fixture::K7 => "k7".into(),
            Fixture::Rank6Nc => "rank6_nc".into(),
            Fixture::Rank7Extra(i) => format!("rank7_extra_{i}"),
            Fixture::Rank8(i) => format!("rank8_{i}"),
        }
    }

    /// Parses names such as `k7`, `cyclic_5`, `rank8_3` or `r4_2`.
    pub fn parse(name: &str) -> Option<Self> {
        let name = name.trim().to_ascii_lowercase();
        let num = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
        match name.as_str() {
            "k7" => return Some(Fixture::K7),
            "fibonacci" => return Some(Fixture::Fibonacci),
            "rank6_nc" => return Some(Fixture::Rank6Nc),
            _ => {}
        }
        if let Some(n) = num("cyclic_") {
            return Some(Fixture::Cyclic(n));
        }
        if let Some(n) = num("near_group_") {
            return Some(Fixture::NearGroup(n));
        }
        if let Some(n) = num("r4_") {
            return Some(Fixture::R4(n as u32));
        }
        if let Some(n) = num("rank7_extra_") {
            return Some(Fixture::Rank7Extra(n));
        }
        num("rank8_").map(Fixture::Rank8)
    }

    pub fn ring(&self) -> Result<FusionRing, RingError> {
        let name = self.name();
        match *self {
            Fixture::Cyclic(n) => cyclic(n),
            Fixture::Fibonacci => from_rows(&name, &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]]),
            Fixture::NearGroup(n) => near_group(n),
            Fixture::R4(k) => r4(k),
            Fixture::K7 => from_const(&name, &corpus::K7),
            Fixture::Rank6Nc => from_const(&name, &corpus::RANK6_NC),
            Fixture::Rank7Extra(i) => {
                let data = match i {
                    1 => &corpus::RANK7_EXTRA_1,
                    2 => &corpus::RANK7_EXTRA_2,
                    3 => &corpus::RANK7_EXTRA_3,
                    4 => &corpus::RANK7_EXTRA_4,
                    5 => &corpus::RANK7_EXTRA_5,
                    6 => &corpus::RANK7_EXTRA_6,
                    7 => &corpus::RANK7_EXTRA_7,
                    8 => &corpus::RANK7_EXTRA_8,
                    9 => &corpus::RANK7_EXTRA_9,
                    _ => return Err(RingError::Shape(format!("no rank-7 companion {i}"))),
                };
                from_const(&name, data)
            }
            Fixture::Rank8(i) => {
                let data = match i {
                    1 => &corpus::RANK8_1,
                    2 => &corpus::RANK8_2,
                    3 => &corpus::RANK8_3,
                    4 => &corpus::RANK8_4,
                    5 => &corpus::RANK8_5,
                    _ => return Err(RingError::Shape(format!("no rank-8 ring {i}"))),
                };
                from_const(&name, data)
            }
        }
    }
}

/// The 16 reference rings in [`CORPUS`] order.
pub fn corpus() -> Vec<FusionRing> {
    CORPUS
        .iter()
        .map(|n| Fixture::parse(n).and_then(|f| f.ring().ok()).expect("bundled ring is valid"))
        .collect()
}

fn from_const<const M: usize>(name: &str, data: &[[[u8; M]; M]; M]) -> Result<FusionRing, RingError> {
    let blocks: Vec<Vec<Vec<u32>>> = data
        .iter()
        .map(|b| b.iter().map(|r| r.iter().map(|&v| v as u32).collect()).collect())
        .collect();
    from_rows(name, &blocks)
}

/// Product-row blocks; the dual is read off the trace column.
fn from_rows(name: &str, blocks: &[Vec<Vec<u32>>]) -> Result<FusionRing, RingError> {
    let m = blocks.len();
    let mut dual = vec![0; m];
    for (i, blk) in blocks.iter().enumerate() {
        dual[i] = (0..m)
            .find(|&r| blk.get(r).and_then(|row| row.first()) == Some(&1))
            .ok_or(RingError::TraceAxiom(i + 1, 1))?;
    }
    let f: Vec<Vec<Vec<f64>>> = blocks
        .iter()
        .map(|b| b.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect())
        .collect();
    FusionRing::from_product_rows(name, &f, dual)
}

fn cyclic(n: usize) -> Result<FusionRing, RingError> {
    if n == 0 {
        return Err(RingError::EmptyRing);
    }
    let mut c = vec![0u32; n * n * n];
    for a in 0..n {
        for b in 0..n {
            c[(a * n + b) * n + (a + b) % n] = 1;
        }
    }
    let dual = (0..n).map(|a| (n - a) % n).collect();
    FusionRing::new(format!("cyclic_{n}"), FusionCoeffs::from_integers(n, &c, dual)?)
}

fn near_group(n: usize) -> Result<FusionRing, RingError> {
    if n == 0 {
        return Err(RingError::EmptyRing);
    }
    let m = n + 1;
    let b = n;
    let mut c = vec![0u32; m * m * m];
    let idx = |i: usize, j: usize, k: usize| (i * m + j) * m + k;
    for a in 0..n {
        for e in 0..n {
            c[idx(a, e, (a + e) % n)] = 1;
        }
        c[idx(a, b, b)] = 1;
        c[idx(b, a, b)] = 1;
        c[idx(b, b, a)] = 1;
    }
    c[idx(b, b, b)] = 1;
    let mut dual: Vec<usize> = (0..n).map(|a| (n - a) % n).collect();
    dual.push(b);
    FusionRing::new(format!("near_group_{n}"), FusionCoeffs::from_integers(m, &c, dual)?)
}

/// Rank-4 self-dual family. Blocks (symmetric, so row and column layouts agree):
/// `x2 = [[0,1,0,0],[1,k,0,1],[0,0,k,1],[0,1,1,k]]`,
/// `x3 = [[0,0,1,0],[0,0,k,1],[1,k,0,0],[0,1,0,k]]`,
/// `x4 = [[0,0,0,1],[0,1,1,k],[0,1,0,k],[1,k,k,1]]`.
fn r4(k: u32) -> Result<FusionRing, RingError> {
    if k == 0 {
        return Err(RingError::Shape("R4 parameter must be at least 1".into()));
    }
    let blocks = vec![
        vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        vec![vec![0, 1, 0, 0], vec![1, k, 0, 1], vec![0, 0, k, 1], vec![0, 1, 1, k]],
        vec![vec![0, 0, 1, 0], vec![0, 0, k, 1], vec![1, k, 0, 0], vec![0, 1, 0, k]],
        vec![vec![0, 0, 0, 1], vec![0, 1, 1, k], vec![0, 1, 0, k], vec![1, k, k, 1]],
    ];
    from_rows(&format!("r4_{k}"), &blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_loads() {
        let rings = corpus();
        assert_eq!(rings.len(), 16);
        assert!(!rings[0].is_commutative());
        assert!(rings[1..].iter().all(|r| r.is_commutative()));
    }

    #[test]
    fn names_round_trip() {
        for f in [
            Fixture::Cyclic(3),
            Fixture::Fibonacci,
            Fixture::NearGroup(4),
            Fixture::R4(2),
            Fixture::K7,
            Fixture::Rank6Nc,
            Fixture::Rank7Extra(9),
            Fixture::Rank8(5),
        ] {
            assert_eq!(Fixture::parse(&f.name()), Some(f));
        }
        assert_eq!(Fixture::parse("nope"), None);
    }

    #[test]
    fn k7_dims_are_integral() {
        let k7 = Fixture::K7.ring().unwrap();
        assert_eq!(k7.dims().integral, Some(vec![1, 5, 5, 5, 6, 7, 7]));
    }

    #[test]
    fn controls_are_valid() {
        for n in 1..=6 {
            Fixture::Cyclic(n).ring().unwrap();
            Fixture::NearGroup(n).ring().unwrap();
        }
        for k in 1..=10 {
            Fixture::R4(k).ring().unwrap();
        }
        let fib = Fixture::Fibonacci.ring().unwrap();
        assert!((fib.dims().values[1] - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-13);
    }
}
