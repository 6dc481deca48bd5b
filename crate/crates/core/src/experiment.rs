//! Seeded experiments and their reports.
//!
//! A report is written twice: a JSON document carrying the configuration,
//! every trial record and full certificate documents, and a flat CSV
//! sibling with one row per trial under a fixed header.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cliques::clique_stats;
use crate::graph::{random_graph_fixed_edges, Graph};
use crate::multipartite::{find_complete_multipartite, Regime, EXACT_MAX_TOTAL};
use crate::spectral::{spectral_radius, sqrt_edge_bound, DEFAULT_TOLERANCE};
use crate::stability::{
    check_certificate, derived_params, stability_dichotomy, CertificateDocument, Overrides, Params,
};

/// Header of the tabular report.
pub const CSV_HEADER: &str = "trial,seed,n,m,mu,k_r1,js_r1,cert,edits_or_t,verified,ms";

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Analyze,
    Dichotomy,
    Probe,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub r: usize,
    pub c: f64,
    pub eps: f64,
    pub n: usize,
    /// Edge count for generated graphs; the probe uses `⌈(1 − 1/r) n²/2⌉`
    /// when absent.
    pub m: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    pub overrides: Overrides,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    /// Fill the `ms` column with wall-clock times. Off by default so that
    /// identical configurations give byte-identical reports.
    pub record_timing: bool,
}

impl ExperimentConfig {
    pub fn probe(n: usize, r: usize, trials: usize, seed: u64) -> Self {
        ExperimentConfig {
            mode: Mode::Probe,
            r,
            c: 0.5,
            eps: 0.1,
            n,
            m: None,
            trials,
            seed,
            overrides: Overrides::default(),
            input: None,
            output: None,
            record_timing: false,
        }
    }

    /// Edge count of a probe graph.
    pub fn probe_edges(&self) -> usize {
        self.m.unwrap_or_else(|| turan_density_edges(self.n, self.r))
    }
}

/// `⌈(1 − 1/r) n² / 2⌉`, computed in integers.
pub fn turan_density_edges(n: usize, r: usize) -> usize {
    let num = (r - 1) * n * n;
    num.div_ceil(2 * r)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub tag: String,
    pub edits_or_t: usize,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub mu: f64,
    pub k_r1: u64,
    pub js_r1: u64,
    /// Largest `b` with a `K_2(b, b)` found, and the search regime of the
    /// last query.
    pub biclique_b: usize,
    pub biclique_regime: Regime,
    pub summary: Option<CertificateSummary>,
    pub certificate: Option<CertificateDocument>,
    pub failure: Option<String>,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spread {
    pub min: f64,
    pub median: f64,
    pub max: f64,
}

impl Spread {
    fn of(mut values: Vec<f64>) -> Option<Spread> {
        if values.is_empty() {
            return None;
        }
        values.sort_by(f64::total_cmp);
        let k = values.len();
        let median = if k % 2 == 1 {
            values[k / 2]
        } else {
            (values[k / 2 - 1] + values[k / 2]) / 2.0
        };
        Some(Spread {
            min: values[0],
            median,
            max: values[k - 1],
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub biclique_b: Option<Spread>,
    pub edits_or_t: Option<Spread>,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: ExperimentConfig,
    pub records: Vec<TrialRecord>,
    pub aggregate: Aggregate,
}

impl Report {
    pub fn new(config: ExperimentConfig, records: Vec<TrialRecord>) -> Report {
        let b = records.iter().map(|r| r.biclique_b as f64).collect();
        let h = records
            .iter()
            .filter_map(|r| r.summary.as_ref().map(|s| s.edits_or_t as f64))
            .collect();
        let failed = records.iter().filter(|r| r.failure.is_some()).count();
        Report {
            config,
            records,
            aggregate: Aggregate {
                biclique_b: Spread::of(b),
                edits_or_t: Spread::of(h),
                failed,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// The CSV view: header plus one row per trial.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_HEADER);
        out.push('\n');
        for rec in &self.records {
            let (tag, headline, verified) = match &rec.summary {
                Some(s) => (s.tag.as_str(), s.edits_or_t.to_string(), s.verified),
                None => ("failed", String::new(), false),
            };
            writeln!(
                out,
                "{},{},{},{},{:.9},{},{},{},{},{},{}",
                rec.trial, rec.seed, rec.n, rec.m, rec.mu, rec.k_r1, rec.js_r1, tag, headline,
                verified, rec.ms
            )
            .unwrap();
        }
        out
    }
}

/// Largest `b <= 10` such that `K_2(b, b) ⊆ g` is found, with the regime of
/// the deciding query.
pub fn largest_balanced_biclique(g: &Graph) -> (usize, Regime) {
    let mut best = 0;
    let mut regime = Regime::Exact;
    for b in 1..=EXACT_MAX_TOTAL / 2 {
        if 2 * b > g.n() {
            break;
        }
        let res = find_complete_multipartite(g, &[b, b]);
        match res {
            Ok(found) => {
                regime = found.regime;
                if found.witness.is_none() {
                    break;
                }
                best = b;
            }
            Err(_) => {
                regime = Regime::Heuristic;
                break;
            }
        }
    }
    (best, regime)
}

/// Full dichotomy on `g` followed by an independent check.
pub fn certify(g: &Graph, params: &Params) -> Result<CertificateDocument, String> {
    let cert = stability_dichotomy(g, params).map_err(|e| e.to_string())?;
    let verdict = check_certificate(g, &cert, params);
    Ok(CertificateDocument::new(params.clone(), cert, verdict))
}

fn summarize(doc: &CertificateDocument) -> CertificateSummary {
    CertificateSummary {
        tag: doc.certificate.tag().to_string(),
        edits_or_t: doc.certificate.headline(),
        verified: doc.verdict.valid,
    }
}

fn run_trial(cfg: &ExperimentConfig, trial: usize) -> TrialRecord {
    let start = Instant::now();
    let seed = cfg.seed.wrapping_add(trial as u64);
    let m = cfg.probe_edges();
    let mut rec = TrialRecord {
        trial,
        seed,
        n: cfg.n,
        m,
        mu: 0.0,
        k_r1: 0,
        js_r1: 0,
        biclique_b: 0,
        biclique_regime: Regime::Exact,
        summary: None,
        certificate: None,
        failure: None,
        ms: 0,
    };
    let outcome = (|| -> Result<(), String> {
        let g = random_graph_fixed_edges(cfg.n, m, seed).map_err(|e| e.to_string())?;
        rec.mu = spectral_radius(&g, DEFAULT_TOLERANCE)
            .map_err(|e| e.to_string())?
            .mu;
        let stats = clique_stats(&g, cfg.r + 1).map_err(|e| e.to_string())?;
        rec.k_r1 = stats.total;
        rec.js_r1 = stats.joints();
        (rec.biclique_b, rec.biclique_regime) = largest_balanced_biclique(&g);
        let params = derived_params(cfg.r, cfg.c, cfg.eps, cfg.n, cfg.overrides)
            .map_err(|e| e.to_string())?;
        let doc = certify(&g, &params)?;
        rec.summary = Some(summarize(&doc));
        if !doc.verdict.valid {
            rec.failure = Some(format!(
                "certificate rejected: {}",
                doc.verdict.reason.clone().unwrap_or_default()
            ));
        }
        rec.certificate = Some(doc);
        Ok(())
    })();
    if let Err(e) = outcome {
        rec.failure = Some(e);
    }
    if cfg.record_timing {
        rec.ms = start.elapsed().as_millis() as u64;
    }
    rec
}

/// Samples `trials` random graphs with `⌈(1 − 1/r) n²/2⌉` edges (trial `i`
/// uses seed `seed + i`) and records spectral, clique, biclique and
/// certificate data for each. Trial failures are recorded, not raised.
pub fn run_probe(cfg: &ExperimentConfig) -> Result<Report, ExperimentError> {
    if cfg.mode != Mode::Probe {
        return Err(ExperimentError::InvalidConfig("run_probe needs mode = probe".into()));
    }
    if cfg.trials == 0 {
        return Err(ExperimentError::InvalidConfig("trials must be >= 1".into()));
    }
    if cfg.r < 2 {
        return Err(ExperimentError::InvalidConfig("r must be >= 2".into()));
    }
    let records: Vec<TrialRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .collect();
    Ok(Report::new(cfg.clone(), records))
}

/// Path of the CSV sibling of a JSON report path.
pub fn csv_sibling(path: &Path) -> PathBuf {
    path.with_extension("csv")
}

/// Writes the JSON report to `path` and the CSV table next to it.
pub fn emit_report(report: &Report, path: &Path) -> Result<(), ExperimentError> {
    let json_path = if path.extension().is_some_and(|e| e == "csv") {
        path.with_extension("json")
    } else {
        path.to_path_buf()
    };
    write_file(&json_path, &report.to_json())?;
    write_file(&csv_sibling(&json_path), &report.to_csv())
}

pub fn load_report(path: &Path) -> Result<Report, ExperimentError> {
    let text = fs::read_to_string(path).map_err(|source| ExperimentError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Report::from_json(&text).map_err(|source| ExperimentError::Json {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<(), ExperimentError> {
    fs::write(path, contents).map_err(|source| ExperimentError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Spectral and clique quantities of one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub mu: f64,
    pub average_degree: f64,
    pub max_degree: usize,
    pub sqrt_edge_bound: f64,
    pub k_r1: u64,
    pub js_r1: u64,
    /// `(1 − 1/r − eps) n`
    pub spectral_threshold: f64,
    /// Whether `μ > (1 − 1/r − eps) n`.
    pub above_threshold: bool,
}

pub fn analyze(g: &Graph, r: usize, eps: f64) -> Result<Analysis, String> {
    if r < 2 {
        return Err("r must be >= 2".into());
    }
    let mu = spectral_radius(g, DEFAULT_TOLERANCE)
        .map_err(|e| e.to_string())?
        .mu;
    let stats = clique_stats(g, r + 1).map_err(|e| e.to_string())?;
    let n = g.n() as f64;
    let spectral_threshold = (1.0 - 1.0 / r as f64 - eps) * n;
    Ok(Analysis {
        n: g.n(),
        m: g.edge_count(),
        r,
        mu,
        average_degree: 2.0 * g.edge_count() as f64 / n,
        max_degree: g.max_degree(),
        sqrt_edge_bound: sqrt_edge_bound(g),
        k_r1: stats.total,
        js_r1: stats.joints(),
        spectral_threshold,
        above_threshold: mu > spectral_threshold,
    })
}
