use serde::Serialize;

/// Knobs shared by every eigenvalue-based check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalConfig {
    /// Largest order that may be materialised as a dense matrix.
    pub dense_cap: usize,
    /// Orders above this go to the matrix-free solver even when they fit the dense cap.
    pub dense_solver_cap: usize,
    /// Largest order built with exact rational entries.
    pub exact_cap: usize,
    /// Largest order for which an inconclusive dense verdict is retried in exact arithmetic.
    pub escalate_cap: usize,
    /// Absolute PSD tolerance; `None` means `64 ε · order · max|A_ij|`.
    pub tol: Option<f64>,
    pub lanczos_max_iter: usize,
    pub lanczos_restarts: usize,
    /// Relative residual at which Lanczos stops.
    pub lanczos_tol: f64,
    pub seed: u64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            dense_cap: 4096,
            dense_solver_cap: 1024,
            exact_cap: 1024,
            escalate_cap: 128,
            tol: None,
            lanczos_max_iter: 300,
            lanczos_restarts: 20,
            lanczos_tol: 1e-12,
            seed: 0x5eed_f00d,
        }
    }
}

impl EvalConfig {
    /// Reads `FUSION_OBSTRUCT_PRECISION` (`fast` disables exact work, `exact` widens it).
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        match std::env::var("FUSION_OBSTRUCT_PRECISION").as_deref() {
            Ok("fast") => {
                cfg.exact_cap = 0;
                cfg.escalate_cap = 0;
            }
            Ok("exact") => {
                cfg.exact_cap = cfg.dense_cap;
                cfg.escalate_cap = 512;
            }
            _ => {}
        }
        cfg
    }

    /// Stable short hash of the configuration, recorded in reports.
    pub fn hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let json = serde_json::to_string(self).unwrap_or_default();
        let digest = Sha256::digest(json.as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}
