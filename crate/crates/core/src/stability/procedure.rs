//! Peeling edges that sit in many `(r+1)`-cliques.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::cliques::{clique_stats, for_each_clique_within, CliqueError};
use crate::graph::{Edge, Graph};

/// One removal: the edge and the number of `(r+1)`-cliques it was in at the
/// moment it was removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalStep {
    pub edge: Edge,
    pub support: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcedureOutcome {
    pub g_prime: Graph,
    pub removals: Vec<RemovalStep>,
}

impl ProcedureOutcome {
    pub fn removed_edges(&self) -> BTreeSet<Edge> {
        self.removals.iter().map(|s| s.edge).collect()
    }

    pub fn total_support(&self) -> u64 {
        self.removals.iter().map(|s| s.support).sum()
    }
}

/// While some edge lies in more than `joint_threshold` cliques of order
/// `r + 1`, removes the edge of largest support (lexicographically smallest
/// on ties).
///
/// Supports are maintained incrementally: deleting `a-b` destroys exactly
/// the `(r+1)`-cliques through `a-b`, and each of them costs one unit of
/// support on every other edge it contains.
pub fn procedure_p(
    g: &Graph,
    r: usize,
    joint_threshold: f64,
) -> Result<ProcedureOutcome, CliqueError> {
    if r < 2 {
        return Err(CliqueError::InvalidArgument(format!("need r >= 2, got {r}")));
    }
    if !(joint_threshold >= 0.0) {
        return Err(CliqueError::InvalidArgument(format!(
            "joint threshold must be >= 0, got {joint_threshold}"
        )));
    }
    let stats = clique_stats(g, r + 1)?;
    let mut support: HashMap<Edge, u64> = stats.edge_support.clone().into_iter().collect();
    let mut queue: BTreeSet<(Reverse<u64>, Edge)> = stats
        .edge_support
        .iter()
        .map(|(&e, &s)| (Reverse(s), e))
        .collect();

    let mut current = g.clone();
    let mut removals = Vec::new();
    while let Some(&(Reverse(top), edge)) = queue.first() {
        if top as f64 <= joint_threshold {
            break;
        }
        let (a, b) = (edge.lo(), edge.hi());
        let mut common = current.neighbor_set(a);
        common.intersect_words(current.row(b));
        let mut touched: Vec<Edge> = Vec::new();
        for_each_clique_within(&current, &common, r - 1, &mut |clique: &[usize]| {
            for (i, &x) in clique.iter().enumerate() {
                touched.push(Edge::new(a, x));
                touched.push(Edge::new(b, x));
                for &y in &clique[i + 1..] {
                    touched.push(Edge::new(x, y));
                }
            }
        });
        for e in touched {
            let s = support.get_mut(&e).expect("clique edge is tracked");
            queue.remove(&(Reverse(*s), e));
            *s -= 1;
            queue.insert((Reverse(*s), e));
        }
        queue.remove(&(Reverse(top), edge));
        support.remove(&edge);
        current.remove_edge(a, b);
        removals.push(RemovalStep { edge, support: top });
    }
    Ok(ProcedureOutcome {
        g_prime: current,
        removals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::{edge_clique_support, joints_number};
    use crate::graph::{random_graph_fixed_edges, turan_graph};

    #[test]
    fn triangle_free_input_is_untouched() {
        let g = turan_graph(8, 2).unwrap();
        let out = procedure_p(&g, 2, 0.0).unwrap();
        assert!(out.removals.is_empty());
        assert_eq!(out.g_prime, g);
    }

    #[test]
    fn k4_peels_to_c4() {
        let out = procedure_p(&Graph::complete(4), 2, 1.0).unwrap();
        assert_eq!(
            out.removals,
            vec![
                RemovalStep { edge: Edge::new(0, 1), support: 2 },
                RemovalStep { edge: Edge::new(2, 3), support: 2 },
            ]
        );
        assert_eq!(out.g_prime.edge_count(), 4);
        assert_eq!(joints_number(&out.g_prime, 3).unwrap(), 0);
        // 0-2-1-3-0
        for (u, v) in [(0, 2), (2, 1), (1, 3), (3, 0)] {
            assert!(out.g_prime.has_edge(u, v));
        }
    }

    #[test]
    fn high_threshold_removes_nothing() {
        let out = procedure_p(&Graph::complete(5), 2, 10.0).unwrap();
        assert!(out.removals.is_empty());
    }

    #[test]
    fn incremental_supports_match_recomputation() {
        for (seed, r) in [(1, 2), (2, 3), (3, 4)] {
            let g = random_graph_fixed_edges(24, 200, seed).unwrap();
            let out = procedure_p(&g, r, 1.0).unwrap();
            let mut replay = g.clone();
            for step in &out.removals {
                let (u, v) = (step.edge.lo(), step.edge.hi());
                let fresh = edge_clique_support(&replay, u, v, r + 1).unwrap();
                assert_eq!(fresh, step.support);
                assert_eq!(joints_number(&replay, r + 1).unwrap(), step.support);
                replay.remove_edge(u, v);
            }
            assert_eq!(replay, out.g_prime);
            assert!(joints_number(&replay, r + 1).unwrap() <= 1);
        }
    }
}
