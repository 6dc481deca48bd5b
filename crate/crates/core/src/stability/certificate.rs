//! Certificates for the two outcomes and their independent checker.

use serde::{Deserialize, Serialize};

use crate::cliques::{edge_clique_support, joints_number};
use crate::edit::{apply_edits, is_turan_under, EditSet};
use crate::graph::Graph;
use crate::multipartite::{check_multipartite_witness, MultipartiteWitness, Regime};

use super::{Params, RemovalStep};

/// Schema tag written into every serialized certificate document.
pub const CERTIFICATE_SCHEMA: &str = "spectral-stability/certificate/v1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Condition {
    /// `G ⊇ K_{r+1}(s, ..., s, t_achieved)`.
    Multipartite {
        witness: MultipartiteWitness,
        s: usize,
        t_achieved: usize,
        regime: Regime,
    },
    /// An explicit edit set from `G` onto `T_r(n)`.
    TuranEdits {
        edits: EditSet,
        edit_count: usize,
        /// `(eps^{1/4} + c^{1/(8r+8)}) n²`
        bound: f64,
        /// `(θ + (7r² − 3r) a) n²`
        sharp_bound: f64,
        /// `edit_count < bound`
        within_bound: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub condition: Condition,
    /// Edges removed by the peeling procedure, in order.
    pub removal_log: Vec<RemovalStep>,
}

impl Certificate {
    pub fn tag(&self) -> &'static str {
        match self.condition {
            Condition::Multipartite { .. } => "A",
            Condition::TuranEdits { .. } => "B",
        }
    }

    /// Edit count for condition (b), large-part size for condition (a).
    pub fn headline(&self) -> usize {
        match &self.condition {
            Condition::Multipartite { t_achieved, .. } => *t_achieved,
            Condition::TuranEdits { edit_count, .. } => *edit_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Verdict {
    fn from_result(r: Result<(), String>) -> Verdict {
        match r {
            Ok(()) => Verdict {
                valid: true,
                reason: None,
            },
            Err(reason) => Verdict {
                valid: false,
                reason: Some(reason),
            },
        }
    }
}

/// Re-verifies a certificate against the original graph, using only the
/// graph, the parameters and the certificate itself.
pub fn check_certificate(g: &Graph, cert: &Certificate, params: &Params) -> Verdict {
    Verdict::from_result(check(g, cert, params))
}

fn check(g: &Graph, cert: &Certificate, params: &Params) -> Result<(), String> {
    let r = params.r;
    if g.n() != params.n {
        return Err(format!("graph has {} vertices, params say {}", g.n(), params.n));
    }
    replay_log(g, &cert.removal_log, r, params.joint_threshold)?;
    match &cert.condition {
        Condition::Multipartite {
            witness,
            s,
            t_achieved,
            ..
        } => {
            if *s != params.s {
                return Err(format!("witness part size {s} differs from s = {}", params.s));
            }
            if *t_achieved < params.t.max(1) {
                return Err(format!("large part {t_achieved} is below t = {}", params.t));
            }
            let mut sizes = vec![*s; r];
            sizes.push(*t_achieved);
            check_multipartite_witness(g, witness, &sizes)
        }
        Condition::TuranEdits {
            edits,
            edit_count,
            bound,
            within_bound,
            ..
        } => {
            if *edit_count != edits.edit_count() {
                return Err(format!(
                    "edit_count {edit_count} but {} edits listed",
                    edits.edit_count()
                ));
            }
            if *bound != params.edit_bound {
                return Err(format!("bound {bound} differs from {}", params.edit_bound));
            }
            if *within_bound != ((*edit_count as f64) < *bound) {
                return Err("within_bound flag is inconsistent".into());
            }
            let h = apply_edits(g, edits).map_err(|e| e.to_string())?;
            is_turan_under(&h, &edits.part_assignment, r)
        }
    }
}

fn replay_log(g: &Graph, log: &[RemovalStep], r: usize, threshold: f64) -> Result<(), String> {
    let mut current = g.clone();
    for (i, step) in log.iter().enumerate() {
        let (u, v) = (step.edge.lo(), step.edge.hi());
        if !current.has_edge(u, v) {
            return Err(format!("log step {i}: {} is not an edge", step.edge));
        }
        let support = edge_clique_support(&current, u, v, r + 1).map_err(|e| e.to_string())?;
        if support != step.support {
            return Err(format!(
                "log step {i}: {} lies in {support} cliques, log says {}",
                step.edge, step.support
            ));
        }
        if support as f64 <= threshold {
            return Err(format!(
                "log step {i}: support {support} does not exceed threshold {threshold}"
            ));
        }
        current.remove_edge(u, v);
    }
    let js = joints_number(&current, r + 1).map_err(|e| e.to_string())?;
    if js as f64 > threshold {
        return Err(format!(
            "log ends early: an edge still lies in {js} cliques, above threshold {threshold}"
        ));
    }
    Ok(())
}

/// The serialized form: parameters (with defaults and overrides), the
/// certificate and the checker's verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema: String,
    pub params: Params,
    pub certificate: Certificate,
    pub verdict: Verdict,
}

impl CertificateDocument {
    pub fn new(params: Params, certificate: Certificate, verdict: Verdict) -> Self {
        CertificateDocument {
            schema: CERTIFICATE_SCHEMA.to_string(),
            params,
            certificate,
            verdict,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
