//! Largest adjacency eigenvalue and the two elementary bounds around it.
//!
//! The eigensolver is a shifted power iteration on `A + I` started from the
//! all-ones vector. A positive start vector has a nonzero Perron component,
//! and the shift makes the Perron root strictly dominant in modulus even on
//! bipartite components, where `-μ` is also an eigenvalue of `A`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Edge, Graph};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralResult {
    /// Largest adjacency eigenvalue.
    pub mu: f64,
    /// Total iterations over all components.
    pub iterations: usize,
    /// `‖Ax − μx‖₂` for the final unit vector of the dominant component; an
    /// eigenvalue of `A` lies within this distance of `mu`.
    pub residual: f64,
}

/// `μ(G)` to within `tol`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    if g.n() == 0 {
        return Err(SpectralError::InvalidArgument("graph has no vertices".into()));
    }
    if !(tol > 0.0) {
        return Err(SpectralError::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let mut best = SpectralResult {
        mu: 0.0,
        iterations: 0,
        residual: 0.0,
    };
    if g.edge_count() == 0 {
        return Ok(best);
    }
    let mut x = vec![0.0; g.n()];
    let mut y = vec![0.0; g.n()];
    let mut budget = MAX_ITERATIONS;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let (mu, iterations, residual) = component_radius(g, &comp, tol, &mut x, &mut y, budget)?;
        budget -= iterations;
        best.iterations += iterations;
        if mu > best.mu {
            best.mu = mu;
            best.residual = residual;
        }
    }
    Ok(best)
}

fn component_radius(
    g: &Graph,
    comp: &[usize],
    tol: f64,
    x: &mut [f64],
    y: &mut [f64],
    budget: usize,
) -> Result<(f64, usize, f64), SpectralError> {
    let start = 1.0 / (comp.len() as f64).sqrt();
    for &v in comp {
        x[v] = start;
    }
    let mut previous = f64::INFINITY;
    let mut residual = f64::INFINITY;
    for it in 1..=budget {
        // y = A x, restricted to the component (neighbours never leave it)
        for &v in comp {
            y[v] = g.neighbors(v).map(|u| x[u]).sum();
        }
        let rayleigh: f64 = comp.iter().map(|&v| x[v] * y[v]).sum();
        residual = comp
            .iter()
            .map(|&v| (y[v] - rayleigh * x[v]).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol && (rayleigh - previous).abs() <= tol {
            clear(comp, x, y);
            return Ok((rayleigh, it, residual));
        }
        previous = rayleigh;
        // x <- (A + I) x / ‖(A + I) x‖
        let norm = comp
            .iter()
            .map(|&v| (y[v] + x[v]).powi(2))
            .sum::<f64>()
            .sqrt();
        for &v in comp {
            x[v] = (y[v] + x[v]) / norm;
        }
    }
    clear(comp, x, y);
    Err(SpectralError::NoConvergence {
        iterations: budget,
        residual,
    })
}

fn clear(comp: &[usize], x: &mut [f64], y: &mut [f64]) {
    for &v in comp {
        x[v] = 0.0;
        y[v] = 0.0;
    }
}

/// `√(2 e(G))`, an upper bound on `μ(G)`.
pub fn sqrt_edge_bound(g: &Graph) -> f64 {
    (2.0 * g.edge_count() as f64).sqrt()
}

/// Outcome of checking `μ(G − R) ≥ μ(G) − μ(R)` for a removed edge set `R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylCheck {
    pub mu_g: f64,
    pub mu_g_minus: f64,
    pub mu_removed: f64,
    pub holds: bool,
}

/// Evaluates Weyl's inequality for the split `A(G) = A(G − R) + A(R)`.
pub fn weyl_gap_check(
    g: &Graph,
    removed: &BTreeSet<Edge>,
    tol: f64,
) -> Result<WeylCheck, SpectralError> {
    let mut rest = g.clone();
    let mut alone = Graph::empty(g.n());
    for e in removed {
        if !rest.remove_edge(e.lo(), e.hi()) {
            return Err(SpectralError::InvalidArgument(format!("{e} is not an edge")));
        }
        alone.add_edge(e.lo(), e.hi());
    }
    let mu_g = spectral_radius(g, tol)?.mu;
    let mu_g_minus = spectral_radius(&rest, tol)?.mu;
    let mu_removed = spectral_radius(&alone, tol)?.mu;
    Ok(WeylCheck {
        mu_g,
        mu_g_minus,
        mu_removed,
        holds: mu_g_minus >= mu_g - mu_removed - tol,
    })
}
