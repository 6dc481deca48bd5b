//! The constructive dichotomy: a graph with large spectral radius either
//! contains a big complete `(r+1)`-partite subgraph or is few edits away
//! from the Turán graph `T_r(n)`.
//!
//! [`stability_dichotomy`] runs the whole pipeline:
//!
//! 1. [`procedure_p`] peels edges lying in more than `joint_threshold`
//!    cliques of order `r + 1`.
//! 2. If at least `edit_budget` edges were peeled, the original graph has
//!    many `(r+1)`-cliques and [`find_kr_s_t`](crate::multipartite::find_kr_s_t)
//!    looks for a `K_{r+1}(s, ..., s, t)`.
//! 3. Otherwise (or if no witness turns up) [`extract_rpartite`] finds a
//!    large induced `r`-partite subgraph of the peeled graph and
//!    [`trim_and_complete`] turns it into an edit set onto `T_r(n)`.
//!    [`best_completion`] also tries keeping whole parts and polishes both
//!    labellings with [`refine_partition`].
//!
//! Every result is a [`Certificate`] that [`check_certificate`] verifies
//! from scratch.

mod certificate;
mod complete;
mod extract;
mod params;
mod procedure;

use thiserror::Error;

pub use certificate::{
    check_certificate, Certificate, CertificateDocument, Condition, Verdict, CERTIFICATE_SCHEMA,
};
pub use complete::{best_completion, refine_partition, trim_and_complete};
pub use extract::{extract_rpartite, EXHAUSTIVE_MAX_N};
pub use params::{derived_params, in_asymptotic_window, Overrides, Params};
pub use procedure::{procedure_p, ProcedureOutcome, RemovalStep};

use crate::cliques::CliqueError;
use crate::graph::Graph;
use crate::multipartite::{find_kr_s_t, SearchError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilityError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no r-partite subgraph meets the goals: {0}")]
    ExtractionFailed(String),
    #[error(transparent)]
    Clique(#[from] CliqueError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Runs the dichotomy on `g` and returns a certificate for whichever
/// condition holds.
pub fn stability_dichotomy(g: &Graph, params: &Params) -> Result<Certificate, StabilityError> {
    if g.n() != params.n {
        return Err(StabilityError::InvalidArgument(format!(
            "graph has {} vertices but params were derived for n = {}",
            g.n(),
            params.n
        )));
    }
    let peeled = procedure_p(g, params.r, params.joint_threshold)?;
    let budget_reached = peeled.removals.len() as u64 >= params.edit_budget;
    if budget_reached {
        if let Some(found) = find_kr_s_t(g, params.r + 1, params.s)? {
            if found.t >= params.t {
                return Ok(Certificate {
                    condition: Condition::Multipartite {
                        witness: found.witness,
                        s: params.s,
                        t_achieved: found.t,
                        regime: found.regime,
                    },
                    removal_log: peeled.removals,
                });
            }
        }
    }

    let size_goal = params.size_goal_count();
    let parts = extract_rpartite(&peeled.g_prime, params.r, size_goal, params.mindeg_goal)
        .ok_or_else(|| {
            StabilityError::ExtractionFailed(format!(
                "n = {}, removed {} edges (budget {}{}), size goal {size_goal}, min-degree goal {:.4}",
                g.n(),
                peeled.removals.len(),
                params.edit_budget,
                if budget_reached { ", no multipartite witness" } else { "" },
                params.mindeg_goal
            ))
        })?;
    let edits = best_completion(&parts, g, params)?;
    let edit_count = edits.edit_count();
    Ok(Certificate {
        condition: Condition::TuranEdits {
            edits,
            edit_count,
            bound: params.edit_bound,
            sharp_bound: params.sharp_edit_bound,
            within_bound: (edit_count as f64) < params.edit_bound,
        },
        removal_log: peeled.removals,
    })
}
