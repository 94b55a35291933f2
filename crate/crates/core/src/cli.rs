//! Command-line front end. `run` returns the process exit code:
//! 0 holds, 1 violated, 2 inconclusive, 64 usage, 65 bad input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::EvalConfig;
use crate::criteria::{CriterionSpec, PatternCatalog, SearchBudget, TwistPattern};
use crate::fixtures::Fixture;
use crate::io;
use crate::obstructions::{self, GraphFamilyParams};
use crate::report::{self, CriterionResult, Report};
use crate::ring::FusionRing;
use crate::spectra::{Certificate, PsdVerdict};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Debug, Parser)]
#[command(name = "fusion-obstruct", version, about = "Positivity obstructions for fusion rings")]
struct Cli {
    /// Absolute PSD tolerance (default: derived from the matrix).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Write a JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a ring.
    Validate { ring: String },
    /// Frobenius–Perron dimensions.
    Dims { ring: String },
    /// Evaluate one criterion.
    Check(CheckArgs),
    /// Bounded search for a violated criterion.
    Search {
        ring: String,
        #[arg(long, default_value_t = 2)]
        max_set: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = CatalogArg::Transpositions)]
        catalog: CatalogArg,
    },
    /// Parametric families.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Perturbation bounds.
    #[command(subcommand)]
    Perturb(PerturbCmd),
    /// Default suite over every `*.ring` / `*.json` file in a directory.
    Batch {
        dir: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_set: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Primary,
    Localized,
    Reduced,
    Twisted,
    Limit,
    Schur,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CatalogArg {
    Identity,
    Transpositions,
    All,
}

impl From<CatalogArg> for PatternCatalog {
    fn from(c: CatalogArg) -> Self {
        match c {
            CatalogArg::Identity => PatternCatalog::IdentityOnly,
            CatalogArg::Transpositions => PatternCatalog::Transpositions,
            CatalogArg::All => PatternCatalog::AllPermutations,
        }
    }
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Ring file, or a built-in name such as `k7` or `cyclic_5`.
    ring: String,
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 3)]
    n: u64,
    /// 1-based labels, comma separated.
    #[arg(long, value_delimiter = ',')]
    set: Vec<usize>,
    /// Twist pattern, e.g. `I,I,swap` or `1.2,2.1`.
    #[arg(long)]
    twists: Option<String>,
}

#[derive(Debug, Subcommand)]
enum FamilyCmd {
    /// The rank-4 family `R_{4,k}`.
    R4k {
        #[arg(long)]
        k: u32,
    },
    /// Two-arc principal graphs, from parameters or a graph file.
    Graph {
        /// Graph JSON file, or `d5`.
        #[arg(long, conflicts_with_all = ["l", "mults", "d2"])]
        graph: Option<String>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        mults: Vec<u32>,
        #[arg(long)]
        d2: Option<f64>,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
}

#[derive(Debug, Subcommand)]
enum PerturbCmd {
    /// `S = {x₆, x₇}` of the rank-7 example; `--dims d2,d3,d4,d5,d7`.
    K7 {
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        dims: Vec<f64>,
        #[arg(long)]
        d6: Option<f64>,
    },
}

/// Failure with its exit code.
struct Fail(i32, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

fn data(e: impl std::fmt::Display) -> Fail {
    Fail(EXIT_DATA, e.to_string())
}

/// Rounds to 12 significant digits for display.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    format!("{:.11e}", x).parse::<f64>().map(|v| v.to_string()).unwrap_or_else(|_| x.to_string())
}

fn verdict_code(v: &str) -> i32 {
    match v {
        "holds" => EXIT_HOLDS,
        "violated" => EXIT_VIOLATED,
        "inconclusive" => EXIT_INCONCLUSIVE,
        _ => EXIT_DATA,
    }
}

fn load_ring(arg: &str) -> Result<FusionRing, Fail> {
    let p = Path::new(arg);
    if p.exists() {
        return io::parse_ring(p).map_err(data);
    }
    match Fixture::parse(arg) {
        Some(f) => f.ring().map_err(data),
        None => Err(data(format!("{arg}: no such file or built-in ring"))),
    }
}

fn zero_based(set: &[usize]) -> Result<Vec<usize>, Fail> {
    if set.is_empty() {
        return Err(usage("--set is required for this criterion"));
    }
    set.iter().map(|&x| x.checked_sub(1).ok_or_else(|| usage("--set labels are 1-based"))).collect()
}

fn print_result(out: &mut dyn Write, r: &CriterionResult) -> std::io::Result<()> {
    writeln!(out, "criterion: {}", r.criterion)?;
    writeln!(out, "verdict: {}", r.verdict)?;
    if let Some(i) = r.interval {
        let mid = r.witness.as_ref().map(|w| w.rayleigh).unwrap_or(0.5 * (i.lower + i.upper));
        writeln!(out, "lambda_min: {} in [{}, {}]", sig12(mid), sig12(i.lower), sig12(i.upper))?;
    }
    if let Some(m) = r.method {
        writeln!(out, "method: {}", serde_json::to_value(m).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())?;
    }
    if let Some(w) = &r.witness {
        if w.criterion != r.criterion {
            writeln!(out, "witness: {}", w.criterion)?;
        }
        match &w.certificate {
            Certificate::ExactRational { numer, denom } => writeln!(out, "certificate: v^T A v = {numer}/{denom}")?,
            Certificate::Interval { upper } => writeln!(out, "certificate: Rayleigh quotient <= {}", sig12(*upper))?,
            Certificate::Determinant { value } => writeln!(out, "certificate: determinant {}", sig12(*value))?,
        }
        writeln!(out, "fingerprint: {}", w.fingerprint)?;
    }
    if let Some(e) = &r.error {
        writeln!(out, "error: {e}")?;
    }
    writeln!(out, "time: {:.3} ms", r.timing_ms)
}

fn write_report(path: Option<&PathBuf>, report: &Report) -> Result<(), Fail> {
    if let Some(p) = path {
        std::fs::write(p, report.to_json()).map_err(|e| data(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn single(cli: &Cli, cfg: &EvalConfig, ring: &FusionRing, r: CriterionResult, out: &mut dyn Write) -> Result<i32, Fail> {
    writeln!(out, "ring: {} (rank {})", ring.name(), ring.rank()).map_err(data)?;
    print_result(out, &r).map_err(data)?;
    let code = verdict_code(&r.verdict);
    write_report(cli.out.as_ref(), &Report::new(cfg, vec![report::entry_for(ring, None, vec![r])]))?;
    Ok(code)
}

fn verdict_line(out: &mut dyn Write, label: &str, v: &PsdVerdict) -> Result<i32, Fail> {
    let i = v.interval();
    writeln!(out, "{label}: {} (lambda_min in [{}, {}])", v.label(), sig12(i.lower), sig12(i.upper)).map_err(data)?;
    Ok(verdict_code(v.label()))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Fail> {
    let mut cfg = EvalConfig::from_env();
    if let Some(t) = cli.tol {
        if !(t >= 0.0) {
            return Err(usage("--tol must be nonnegative"));
        }
        cfg.tol = Some(t);
    }
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(data);
    match &cli.cmd {
        Command::Validate { ring } => {
            let r = load_ring(ring)?;
            w(out, format!("ok: {} (rank {}, {})", r.name(), r.rank(), if r.is_commutative() { "commutative" } else { "noncommutative" }))?;
            Ok(EXIT_HOLDS)
        }
        Command::Dims { ring } => {
            let r = load_ring(ring)?;
            let d = r.dims();
            for (i, v) in d.values.iter().enumerate() {
                w(out, format!("d{} = {}", i + 1, sig12(*v)))?;
            }
            w(out, format!("global = {}", sig12(d.global())))?;
            Ok(EXIT_HOLDS)
        }
        Command::Check(a) => {
            let ring = load_ring(&a.ring)?;
            let n = usize::try_from(a.n).map_err(|_| usage("--n is too large"))?;
            if a.n == 0 {
                return Err(usage("--n must be positive"));
            }
            let pattern = |s: usize| -> Result<Option<TwistPattern>, Fail> {
                a.twists.as_deref().map(|t| TwistPattern::parse(s, t).map_err(|e| usage(e.to_string()))).transpose()
            };
            let spec = match a.kind {
                Kind::Primary => CriterionSpec::Primary { n },
                Kind::Localized => CriterionSpec::Localized { set: zero_based(&a.set)?, n },
                Kind::Reduced => {
                    let set = zero_based(&a.set)?;
                    match pattern(set.len())? {
                        Some(pattern) => CriterionSpec::ReducedTwisted { set, pattern },
                        None => CriterionSpec::Reduced { set, n: a.n },
                    }
                }
                Kind::Twisted => {
                    let set = zero_based(&a.set)?;
                    let pattern = pattern(set.len())?.ok_or_else(|| usage("--twists is required"))?;
                    CriterionSpec::Twisted { set, pattern }
                }
                Kind::Limit => CriterionSpec::Limit { set: zero_based(&a.set)? },
                Kind::Schur => CriterionSpec::Schur,
            };
            let r = report::run_spec(&ring, &spec, &cfg);
            single(cli, &cfg, &ring, r, out)
        }
        Command::Search { ring, max_set, max_n, catalog } => {
            let ring = load_ring(ring)?;
            let budget = SearchBudget {
                max_subset: *max_set,
                max_n: *max_n,
                catalog: (*catalog).into(),
            };
            if budget.max_subset == 0 || budget.max_n == 0 {
                return Err(usage("search bounds must be positive"));
            }
            let r = report::run_search(&ring, &budget, &cfg);
            single(cli, &cfg, &ring, r, out)
        }
        Command::Family(FamilyCmd::R4k { k }) => {
            let v = obstructions::r4k_check(*k, &cfg).map_err(data)?;
            let f = obstructions::r4k_closed_form(*k).map_err(data)?;
            w(out, format!("R4,{k}: f(d3) = {}", sig12(f)))?;
            let crit = v.witness().map(|x| x.criterion.clone()).unwrap_or_else(|| "reduced-twisted".into());
            verdict_line(out, &crit, &v)
        }
        Command::Family(FamilyCmd::Graph { graph, l, mults, d2, nmax }) => family_graph(graph.as_deref(), *l, mults, *d2, *nmax, &cfg, out),
        Command::Perturb(PerturbCmd::K7 { dims, d6 }) => {
            let [d2, d3, d4, d5, d7] = dims[..] else {
                return Err(usage("--dims takes five values: d2,d3,d4,d5,d7"));
            };
            let b = obstructions::k7_perturbation(d2, d3, d4, d5, d7).map_err(data)?;
            w(out, format!("Q1+ = {}  Q1- = {}", sig12(b.q1_plus), sig12(b.q1_minus)))?;
            w(out, format!("Q2+ = {}  Q2- = {}", sig12(b.q2_plus), sig12(b.q2_minus)))?;
            w(out, format!("threshold = {}", sig12(b.threshold())))?;
            match d6 {
                Some(d6) => {
                    let excluded = b.excludes(*d6);
                    w(out, format!("d6 = {}: {}", sig12(*d6), if excluded { "excluded" } else { "not excluded by this bound" }))?;
                    Ok(if excluded { EXIT_VIOLATED } else { EXIT_HOLDS })
                }
                None => Ok(EXIT_HOLDS),
            }
        }
        Command::Batch { dir, max_set, max_n } => {
            let budget = SearchBudget {
                max_subset: *max_set,
                max_n: *max_n,
                catalog: PatternCatalog::Transpositions,
            };
            if budget.max_subset == 0 || budget.max_n == 0 {
                return Err(usage("search bounds must be positive"));
            }
            let rep = report::batch(dir, &cfg, &budget).map_err(data)?;
            for e in &rep.entries {
                let verdicts: Vec<String> = e.results.iter().map(|r| format!("{}={}", r.criterion, r.verdict)).collect();
                w(out, format!("{}: {}", e.file.as_deref().unwrap_or(&e.ring), verdicts.join("; ")))?;
            }
            let s = rep.summary;
            w(out, format!("summary: {} holds, {} violated, {} inconclusive, {} errors", s.holds, s.violated, s.inconclusive, s.errors))?;
            write_report(cli.out.as_ref(), &rep)?;
            Ok(s.exit_code())
        }
    }
}

fn family_graph(
    graph: Option<&str>,
    l: Option<u32>,
    mults: &[u32],
    d2: Option<f64>,
    nmax: u32,
    cfg: &EvalConfig,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(data);
    let report_triple = |out: &mut dyn Write, t: Option<obstructions::Triple>| -> Result<i32, Fail> {
        match t {
            Some((n, a, b)) => {
                w(out, format!("violated at (n, a, b) = ({n}, {a}, {b})"))?;
                Ok(EXIT_VIOLATED)
            }
            None => {
                w(out, format!("no obstruction for n <= {nmax}"))?;
                Ok(EXIT_HOLDS)
            }
        }
    };
    let Some(gname) = graph else {
        let (Some(l), Some(d2)) = (l, d2) else {
            return Err(usage("give --graph, or --l, --mults and --d2"));
        };
        if mults.is_empty() {
            return Err(usage("--mults is required"));
        }
        let p = GraphFamilyParams::new(l, mults.to_vec(), d2).map_err(data)?;
        w(out, format!("l = {l}, M = {}, d3 = {}", sig12(p.m_value()), sig12(p.d3())))?;
        return report_triple(out, obstructions::graph_family_check(&p, nmax).map_err(data)?);
    };
    let g = if gname.eq_ignore_ascii_case("d5") && !Path::new(gname).exists() {
        obstructions::d5_graph()
    } else {
        io::parse_graph(gname).map_err(data)?
    };
    let dims = obstructions::graph_dims(&g).map_err(data)?;
    w(out, format!("graph {}: index {}", g.name, sig12(obstructions::graph_index(&g).map_err(data)?)))?;
    for (v, d) in g.vertices().iter().zip(&dims.values) {
        w(out, format!("  d[{v}] = {}", sig12(*d)))?;
    }
    if g.name == "D5" {
        let l = obstructions::d5_local_data(&g).map_err(data)?;
        let v = obstructions::graph_local_check(&l, 1, cfg).map_err(data)?;
        return verdict_line(out, "localized S={1,4} n=1", &v);
    }
    match obstructions::extract_family(&g).map_err(data)? {
        Some(p) => {
            w(out, format!("two-arc shape: l = {}, M = {}", p.ell, sig12(p.m_value())))?;
            report_triple(out, obstructions::graph_family_check(&p, nmax).map_err(data)?)
        }
        None => Err(data("graph does not have the two-arc shape")),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{}", e.render());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        EXIT_USAGE
                    } else {
                        EXIT_HOLDS
                    }
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
