//! Versioned JSON reports and directory batches.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::EvalConfig;
use crate::criteria::{self, CriterionSpec, SearchBudget};
use crate::io::{self, IoError};
use crate::ring::FusionRing;
use crate::spectra::{EigInterval, Method, PsdVerdict, Witness};

pub const SCHEMA_VERSION: u32 = 1;

/// One evaluated criterion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub criterion: String,
    /// `holds`, `violated`, `inconclusive` or `error`.
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<EigInterval>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: f64,
}

impl CriterionResult {
    pub fn from_verdict(criterion: impl Into<String>, v: &PsdVerdict, timing_ms: f64) -> Self {
        let method = match v {
            PsdVerdict::Holds { method, .. } | PsdVerdict::Inconclusive { method, .. } => Some(*method),
            PsdVerdict::Violated(w) => Some(match w.certificate {
                crate::spectra::Certificate::ExactRational { .. } => Method::Exact,
                crate::spectra::Certificate::Determinant { .. } => Method::ClosedForm,
                crate::spectra::Certificate::Interval { .. } => Method::Dense,
            }),
        };
        Self {
            criterion: criterion.into(),
            verdict: v.label().to_string(),
            interval: Some(v.interval()),
            method,
            witness: v.witness().cloned(),
            error: None,
            timing_ms,
        }
    }

    pub fn from_error(criterion: impl Into<String>, e: &dyn std::fmt::Display, timing_ms: f64) -> Self {
        Self {
            criterion: criterion.into(),
            verdict: "error".into(),
            interval: None,
            method: None,
            witness: None,
            error: Some(e.to_string()),
            timing_ms,
        }
    }
}

/// Results for one ring (or one unreadable file).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub file: Option<String>,
    pub ring: String,
    pub rank: usize,
    pub dims: Vec<f64>,
    pub results: Vec<CriterionResult>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub holds: usize,
    pub violated: usize,
    pub inconclusive: usize,
    pub errors: usize,
}

impl Summary {
    /// `1` if anything is violated, else `65` on errors, else `2` if
    /// inconclusive, else `0`.
    pub fn exit_code(&self) -> i32 {
        if self.violated > 0 {
            1
        } else if self.errors > 0 {
            65
        } else if self.inconclusive > 0 {
            2
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub config_hash: String,
    pub config: EvalConfig,
    pub entries: Vec<ReportEntry>,
    pub summary: Summary,
}

impl Report {
    pub fn new(cfg: &EvalConfig, entries: Vec<ReportEntry>) -> Self {
        let mut summary = Summary::default();
        for r in entries.iter().flat_map(|e| &e.results) {
            match r.verdict.as_str() {
                "holds" => summary.holds += 1,
                "violated" => summary.violated += 1,
                "inconclusive" => summary.inconclusive += 1,
                _ => summary.errors += 1,
            }
        }
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config_hash: cfg.hash(),
            config: cfg.clone(),
            entries,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub(crate) fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed().as_secs_f64() * 1e3)
}

pub fn entry_for(ring: &FusionRing, file: Option<String>, results: Vec<CriterionResult>) -> ReportEntry {
    ReportEntry {
        file,
        ring: ring.name().to_string(),
        rank: ring.rank(),
        dims: ring.dims().values.clone(),
        results,
    }
}

/// Evaluates a criterion and records either its verdict or its error.
pub fn run_spec(ring: &FusionRing, spec: &CriterionSpec, cfg: &EvalConfig) -> CriterionResult {
    let (res, ms) = timed(|| criteria::check(ring, spec, cfg));
    match res {
        Ok(v) => CriterionResult::from_verdict(spec.to_string(), &v, ms),
        Err(e) => CriterionResult::from_error(spec.to_string(), &e, ms),
    }
}

/// Records a bounded search: a witness is a violation, exhaustion is `holds`
/// over the budget (no interval).
pub fn run_search(ring: &FusionRing, budget: &SearchBudget, cfg: &EvalConfig) -> CriterionResult {
    let label = format!("search |S|<={} n<={} {:?}", budget.max_subset, budget.max_n, budget.catalog);
    let (res, ms) = timed(|| criteria::search_violation(ring, budget, cfg));
    match res {
        Ok(Some(w)) => CriterionResult::from_verdict(label, &PsdVerdict::Violated(Box::new(w)), ms),
        Ok(None) => CriterionResult {
            criterion: label,
            verdict: "holds".into(),
            interval: None,
            method: None,
            witness: None,
            error: None,
            timing_ms: ms,
        },
        Err(e) => CriterionResult::from_error(label, &e, ms),
    }
}

/// Default batch suite: primary `n = 3`, then the bounded search.
pub fn default_suite(ring: &FusionRing, budget: &SearchBudget, cfg: &EvalConfig) -> Vec<CriterionResult> {
    vec![run_spec(ring, &CriterionSpec::Primary { n: 3 }, cfg), run_search(ring, budget, cfg)]
}

fn is_ring_file(p: &Path) -> bool {
    matches!(p.extension().and_then(|e| e.to_str()), Some("ring" | "json"))
}

/// Ring files (`*.ring`, `*.json`) in `dir`, sorted by file name.
pub fn ring_files(dir: &Path) -> Result<Vec<PathBuf>, IoError> {
    let rd = std::fs::read_dir(dir).map_err(|e| IoError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut files: Vec<PathBuf> = rd.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.is_file() && is_ring_file(p)).collect();
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

/// Thread count from `FUSION_OBSTRUCT_THREADS`, if set to a positive integer.
pub fn thread_override() -> Option<usize> {
    std::env::var("FUSION_OBSTRUCT_THREADS").ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Runs the default suite on every ring file in `dir` in parallel; entries
/// come back in file-name order.
pub fn batch(dir: &Path, cfg: &EvalConfig, budget: &SearchBudget) -> Result<Report, IoError> {
    let files = ring_files(dir)?;
    let work = || {
        files
            .par_iter()
            .map(|path| {
                let file = path.file_name().map(|f| f.to_string_lossy().into_owned());
                let (parsed, ms) = timed(|| io::parse_ring(path));
                match parsed {
                    Ok(ring) => entry_for(&ring, file, default_suite(&ring, budget, cfg)),
                    Err(e) => ReportEntry {
                        ring: path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
                        file,
                        rank: 0,
                        dims: Vec::new(),
                        results: vec![CriterionResult::from_error("parse", &e, ms)],
                    },
                }
            })
            .collect::<Vec<_>>()
    };
    let entries = match thread_override().and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(work),
        None => work(),
    };
    Ok(Report::new(cfg, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;

    #[test]
    fn batch_is_sorted_and_summarised() {
        let dir = std::env::temp_dir().join(format!("fo-batch-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        for (name, f) in [("b_fib.ring", Fixture::Fibonacci), ("a_k7.ring", Fixture::K7)] {
            std::fs::write(dir.join(name), io::ring_to_text(&f.ring().unwrap())).unwrap();
        }
        std::fs::write(dir.join("c_bad.ring"), "3\n1 2\n").unwrap();
        std::fs::write(dir.join("notes.txt"), "ignored").unwrap();
        let r = batch(&dir, &EvalConfig::default(), &SearchBudget::default()).unwrap();
        let files: Vec<_> = r.entries.iter().map(|e| e.file.clone().unwrap()).collect();
        assert_eq!(files, ["a_k7.ring", "b_fib.ring", "c_bad.ring"]);
        assert!(r.summary.violated >= 1 && r.summary.errors == 1);
        assert_eq!(r.summary.exit_code(), 1);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["schema_version"], 1);
        assert_eq!(json["entries"][1]["results"][0]["verdict"], "holds");
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn exit_code_priority() {
        let s = |h, v, i, e| Summary { holds: h, violated: v, inconclusive: i, errors: e };
        assert_eq!(s(3, 0, 0, 0).exit_code(), 0);
        assert_eq!(s(3, 0, 1, 0).exit_code(), 2);
        assert_eq!(s(3, 0, 1, 1).exit_code(), 65);
        assert_eq!(s(3, 1, 1, 1).exit_code(), 1);
    }
}
