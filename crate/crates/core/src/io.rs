//! Ring and graph file formats.
//!
//! Rings are read from JSON (`RingFile`) or from a plain-text layout that
//! mirrors printed fusion tables: `#` comments (a `# name: …` comment sets the
//! name), the rank `m`, then `m` blocks of `m×m` integers separated by blank
//! lines where row `r` of block `i` lists the coefficients of `x_i x_r`, and
//! finally the 1-based dual permutation on the last line.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::obstructions::{BipartiteGraph, ObstructionError};
use crate::ring::{FusionCoeffs, FusionRing, RingError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("syntax error at {location}: {message}")]
    Syntax { location: String, message: String },
    #[error("validation failed: {0}")]
    Validation(#[from] RingError),
    #[error("invalid graph: {0}")]
    Graph(#[from] ObstructionError),
}

fn syntax(location: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        location: location.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingMetadata {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

/// JSON ring: `matrices[i][r][c] = M_{i+1}[r][c] = N_{i+1, c+1}^{r+1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub name: String,
    pub rank: usize,
    /// 1-based.
    pub dual: Vec<usize>,
    pub matrices: Vec<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<RingMetadata>,
}

impl RingFile {
    pub fn from_ring(ring: &FusionRing) -> Self {
        let m = ring.rank();
        Self {
            name: ring.name().to_string(),
            rank: m,
            dual: (0..m).map(|i| ring.dual(i) + 1).collect(),
            matrices: (0..m).map(|i| ring.matrix(i).chunks(m).map(<[f64]>::to_vec).collect()).collect(),
            metadata: None,
        }
    }

    pub fn into_ring(self) -> Result<FusionRing, IoError> {
        let m = self.rank;
        if self.matrices.len() != m {
            return Err(syntax("matrices", format!("{} matrices for rank {m}", self.matrices.len())));
        }
        let dual = one_based(&self.dual, m, "dual")?;
        for (i, mat) in self.matrices.iter().enumerate() {
            if mat.len() != m || mat.iter().any(|row| row.len() != m) {
                return Err(syntax(format!("matrices[{i}]"), format!("expected {m}x{m}")));
            }
        }
        Ok(FusionRing::new(self.name, FusionCoeffs::from_matrices(&self.matrices, dual)?)?)
    }
}

fn one_based(v: &[usize], m: usize, field: &str) -> Result<Vec<usize>, IoError> {
    if v.len() != m {
        return Err(syntax(field, format!("{} entries for rank {m}", v.len())));
    }
    v.iter()
        .map(|&x| {
            if x == 0 || x > m {
                Err(syntax(field, format!("label {x} outside 1..={m}")))
            } else {
                Ok(x - 1)
            }
        })
        .collect()
}

/// Parses either format, choosing JSON when the text starts with `{`.
pub fn parse_ring_str(text: &str, default_name: &str) -> Result<FusionRing, IoError> {
    if text.trim_start().starts_with('{') {
        let file: RingFile = serde_json::from_str(text).map_err(|e| syntax(format!("line {}", e.line()), e.to_string()))?;
        file.into_ring()
    } else {
        parse_text(text, default_name)
    }
}

pub fn parse_ring(path: impl AsRef<Path>) -> Result<FusionRing, IoError> {
    let path = path.as_ref();
    let text = read(path)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("ring");
    parse_ring_str(&text, stem)
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|e| IoError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn parse_text(text: &str, default_name: &str) -> Result<FusionRing, IoError> {
    let mut name = default_name.to_string();
    // (line number, integers) for every non-empty, non-comment line
    let mut rows: Vec<(usize, Vec<f64>)> = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(c) = line.strip_prefix('#') {
            if let Some(n) = c.trim().strip_prefix("name:") {
                name = n.trim().to_string();
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let vals = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<f64>().map_err(|_| syntax(format!("line {}", no + 1), format!("`{t}` is not a number"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((no + 1, vals));
    }
    let Some((first_no, first)) = rows.first() else {
        return Err(syntax("line 1", "empty ring file"));
    };
    let m = match first[..] {
        [x] if x >= 1.0 && x.fract() == 0.0 => x as usize,
        _ => return Err(syntax(format!("line {first_no}"), "first line must be the rank")),
    };
    if rows.len() != 1 + m * m + 1 {
        return Err(syntax("file", format!("expected {} matrix rows and a dual line, found {} lines", m * m, rows.len() - 1)));
    }
    let mut blocks = Vec::with_capacity(m);
    for i in 0..m {
        let mut blk = Vec::with_capacity(m);
        for r in 0..m {
            let (no, row) = &rows[1 + i * m + r];
            if row.len() != m {
                return Err(syntax(format!("line {no}"), format!("expected {m} entries, found {}", row.len())));
            }
            blk.push(row.clone());
        }
        blocks.push(blk);
    }
    let (dual_no, dual_row) = &rows[1 + m * m];
    let dual_raw: Vec<usize> = dual_row
        .iter()
        .map(|&x| if x >= 0.0 && x.fract() == 0.0 { Ok(x as usize) } else { Err(()) })
        .collect::<Result<_, _>>()
        .map_err(|_| syntax(format!("line {dual_no} (dual)"), "dual entries must be positive integers"))?;
    let dual = one_based(&dual_raw, m, &format!("line {dual_no} (dual)"))?;
    Ok(FusionRing::new(name, FusionCoeffs::from_product_rows(&blocks, dual)?)?)
}

fn fmt_num(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

/// Text serialization in the product-row layout.
pub fn ring_to_text(ring: &FusionRing) -> String {
    let m = ring.rank();
    let mut out = format!("# name: {}\n{m}\n", ring.name());
    for i in 0..m {
        out.push('\n');
        for row in ring.product_rows(i) {
            out.push_str(&row.iter().map(|&v| fmt_num(v)).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
    }
    out.push('\n');
    out.push_str(&(0..m).map(|i| (ring.dual(i) + 1).to_string()).collect::<Vec<_>>().join(" "));
    out.push('\n');
    out
}

pub fn ring_to_json(ring: &FusionRing) -> String {
    serde_json::to_string_pretty(&RingFile::from_ring(ring)).expect("ring file serializes")
}

/// Graph JSON: `{name, even, odd, root, edges: [[u, v, mult], …]}`.
pub fn parse_graph_str(text: &str) -> Result<BipartiteGraph, IoError> {
    let g: BipartiteGraph = serde_json::from_str(text).map_err(|e| syntax(format!("line {}", e.line()), e.to_string()))?;
    g.validate()?;
    Ok(g)
}

pub fn parse_graph(path: impl AsRef<Path>) -> Result<BipartiteGraph, IoError> {
    parse_graph_str(&read(path.as_ref())?)
}
