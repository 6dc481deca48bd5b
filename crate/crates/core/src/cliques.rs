//! Exact `r`-clique counts, per-edge clique supports and the joints number.
//!
//! Whole-graph counts orient every edge along a degeneracy ordering and
//! recurse on forward neighbourhoods, so each clique is reached once from its
//! earliest vertex. Per-edge supports count `(r − 2)`-cliques inside the
//! common neighbourhood of the edge's endpoints.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Edge, Graph};

/// Subset cap for [`count_cliques_bruteforce`].
pub const BRUTEFORCE_SUBSET_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("clique count overflowed 64 bits")]
    Overflow,
    #[error("instance too large: {0}")]
    TooLarge(String),
}

/// `k_r(G)` together with the number of `r`-cliques through every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueStats {
    pub r: usize,
    pub total: u64,
    /// One entry per edge of the graph, zeros included.
    pub edge_support: BTreeMap<Edge, u64>,
}

impl CliqueStats {
    /// `js_r(G)`: the largest edge support, 0 without edges.
    pub fn joints(&self) -> u64 {
        self.edge_support.values().copied().max().unwrap_or(0)
    }

    /// An edge of maximum support, the lexicographically smallest on ties.
    pub fn heaviest_edge(&self) -> Option<(Edge, u64)> {
        let best = self.joints();
        self.edge_support
            .iter()
            .find(|(_, &s)| s == best)
            .map(|(&e, &s)| (e, s))
    }
}

/// Vertices in degeneracy order (repeatedly remove a minimum-degree vertex,
/// smallest label first).
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in (0..n).rev() {
        buckets[degree[v]].push(v);
    }
    let mut order = Vec::with_capacity(n);
    let mut low = 0;
    while order.len() < n {
        low = low.min(max_deg);
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop().unwrap();
        if removed[v] || degree[v] != low {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
                buckets[degree[u]].push(u);
                low = low.min(degree[u]);
            }
        }
    }
    order
}

/// Counts `k`-cliques whose vertices all lie in `cand`, where `forward[w]`
/// holds the neighbours of `w` that come after it in some total order.
fn count_within(forward: &[VertexSet], cand: &VertexSet, k: usize) -> Option<u64> {
    match k {
        0 => Some(1),
        1 => Some(cand.len() as u64),
        2 => cand.iter().try_fold(0u64, |acc, w| {
            acc.checked_add(cand.intersection_len(&forward[w]) as u64)
        }),
        _ => {
            // a candidate set that is itself a clique has C(|cand|, k) k-cliques
            let size = cand.len() as u128;
            let pairs = count_within(forward, cand, 2)? as u128;
            if pairs == size * size.saturating_sub(1) / 2 {
                return binomial_checked(size, k as u128).and_then(|c| u64::try_from(c).ok());
            }
            let mut total = 0u64;
            for w in cand.iter() {
                let mut next = cand.clone();
                next.intersect_with(&forward[w]);
                if next.len() + 1 < k {
                    continue;
                }
                total = total.checked_add(count_within(forward, &next, k - 1)?)?;
            }
            Some(total)
        }
    }
}

fn forward_sets(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let mut rank = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    (0..g.n())
        .map(|v| VertexSet::from_iter(g.n(), g.neighbors(v).filter(|&u| rank[u] > rank[v])))
        .collect()
}

/// `k_r(G)`, the exact number of `r`-vertex complete subgraphs.
pub fn count_cliques(g: &Graph, r: usize) -> Result<u64, CliqueError> {
    match r {
        0 => return Err(CliqueError::InvalidArgument("clique order must be >= 1".into())),
        1 => return Ok(g.n() as u64),
        2 => return Ok(g.edge_count() as u64),
        _ if r > g.n() => return Ok(0),
        _ => {}
    }
    let forward = forward_sets(g, &degeneracy_order(g));
    let per_root: Option<Vec<u64>> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            if forward[v].len() + 1 < r {
                Some(0)
            } else {
                count_within(&forward, &forward[v], r - 1)
            }
        })
        .collect();
    per_root
        .ok_or(CliqueError::Overflow)?
        .into_iter()
        .try_fold(0u64, |acc, c| acc.checked_add(c))
        .ok_or(CliqueError::Overflow)
}

/// Forward sets under the identity order, for repeated support queries on a
/// graph that changes between calls.
pub(crate) fn index_forward_sets(g: &Graph) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| {
            let mut s = g.neighbor_set(v);
            s.retain_above(v);
            s
        })
        .collect()
}

/// Counts `k`-cliques of `g` inside `cand`, given [`index_forward_sets`] of `g`.
pub(crate) fn count_cliques_within(forward: &[VertexSet], cand: &VertexSet, k: usize) -> Option<u64> {
    count_within(forward, cand, k)
}

/// Number of `r`-cliques of `g` containing the edge `u-v` (0 if it is not an
/// edge).
pub fn edge_clique_support(g: &Graph, u: usize, v: usize, r: usize) -> Result<u64, CliqueError> {
    if r < 2 {
        return Err(CliqueError::InvalidArgument("edge support needs r >= 2".into()));
    }
    if !g.has_edge(u, v) {
        return Ok(0);
    }
    let mut common = g.neighbor_set(u);
    common.intersect_words(g.row(v));
    if r == 2 {
        return Ok(1);
    }
    if r == 3 {
        return Ok(common.len() as u64);
    }
    let forward: Vec<VertexSet> = (0..g.n())
        .map(|w| {
            if common.contains(w) {
                let mut s = common.clone();
                s.intersect_words(g.row(w));
                s.retain_above(w);
                s
            } else {
                VertexSet::new(g.n())
            }
        })
        .collect();
    count_within(&forward, &common, r - 2).ok_or(CliqueError::Overflow)
}

/// Total count and all per-edge supports for `r`-cliques.
pub fn clique_stats(g: &Graph, r: usize) -> Result<CliqueStats, CliqueError> {
    if r < 2 {
        return Err(CliqueError::InvalidArgument("clique stats need r >= 2".into()));
    }
    let total = count_cliques(g, r)?;
    let edges: Vec<Edge> = g.edges().collect();
    let forward = if r > 3 { index_forward_sets(g) } else { Vec::new() };
    let supports: Option<Vec<u64>> = edges
        .par_iter()
        .map(|e| support_with(g, &forward, e.lo(), e.hi(), r))
        .collect();
    let supports = supports.ok_or(CliqueError::Overflow)?;
    Ok(CliqueStats {
        r,
        total,
        edge_support: edges.into_iter().zip(supports).collect(),
    })
}

/// Support of a known edge using precomputed identity-order forward sets.
pub(crate) fn support_with(
    g: &Graph,
    forward: &[VertexSet],
    u: usize,
    v: usize,
    r: usize,
) -> Option<u64> {
    let mut common = g.neighbor_set(u);
    common.intersect_words(g.row(v));
    match r {
        2 => Some(1),
        3 => Some(common.len() as u64),
        _ => count_within(forward, &common, r - 2),
    }
}

/// `js_r(G)`.
pub fn joints_number(g: &Graph, r: usize) -> Result<u64, CliqueError> {
    Ok(clique_stats(g, r)?.joints())
}

/// Calls `f` with every `k`-clique inside `cand` (vertices ascending).
pub(crate) fn for_each_clique_within<F: FnMut(&[usize])>(
    g: &Graph,
    cand: &VertexSet,
    k: usize,
    f: &mut F,
) {
    let mut stack = Vec::with_capacity(k);
    enumerate(g, cand, k, &mut stack, f);
}

fn enumerate<F: FnMut(&[usize])>(
    g: &Graph,
    cand: &VertexSet,
    k: usize,
    stack: &mut Vec<usize>,
    f: &mut F,
) {
    if k == 0 {
        f(stack);
        return;
    }
    for w in cand.iter() {
        let mut next = cand.clone();
        next.intersect_words(g.row(w));
        next.retain_above(w);
        stack.push(w);
        enumerate(g, &next, k - 1, stack, f);
        stack.pop();
    }
}

/// Counts `r`-cliques by testing every `r`-subset. Used as an oracle.
pub fn count_cliques_bruteforce(g: &Graph, r: usize) -> Result<u64, CliqueError> {
    let n = g.n();
    if r == 0 {
        return Err(CliqueError::InvalidArgument("clique order must be >= 1".into()));
    }
    if r > n {
        return Ok(0);
    }
    let subsets = binomial(n as u128, r as u128);
    if subsets > BRUTEFORCE_SUBSET_CAP {
        return Err(CliqueError::TooLarge(format!(
            "C({n}, {r}) = {subsets} subsets exceeds {BRUTEFORCE_SUBSET_CAP}"
        )));
    }
    let mut idx: Vec<usize> = (0..r).collect();
    let mut count = 0u64;
    loop {
        let complete = idx
            .iter()
            .enumerate()
            .all(|(i, &a)| idx[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if complete {
            count += 1;
        }
        // advance to the next r-subset in lexicographic order
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            if idx[i] < n - r + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact binomial coefficient, `None` on overflow.
pub(crate) fn binomial_checked(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    // every prefix product is itself a binomial coefficient, so the division is exact
    (0..k).try_fold(1u128, |acc, i| Some(acc.checked_mul(n - i)? / (i + 1)))
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}
