//! Simple undirected graphs on `0..n` backed by bit-set adjacency rows.
//!
//! Besides the [`Graph`] type this module holds the canonical constructors
//! used throughout the crate: Turán graphs, complete multipartite graphs and
//! uniformly random graphs with a fixed number of edges.

use std::fmt;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{words_for, VertexSet};

/// Largest supported order.
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid edit: {0}")]
    InvalidEdit(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
}

/// An unordered vertex pair stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the pair. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    #[inline]
    pub fn lo(self) -> usize {
        self.0
    }

    #[inline]
    pub fn hi(self) -> usize {
        self.1
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Edge {
        Edge::new(a, b)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> (usize, usize) {
        (e.0, e.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Undirected simple graph. Row `v` of the adjacency matrix is a packed bit
/// set; rows are kept symmetric and the diagonal is always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "order {n} exceeds {MAX_VERTICES}");
        let stride = words_for(n);
        Graph {
            n,
            stride,
            rows: vec![0; stride * n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(format!(
                "order {n} exceeds {MAX_VERTICES}"
            )));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidArgument(format!(
                    "edge {u}-{v} out of range for order {n}"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidArgument(format!("self-loop at {u}")));
            }
            if !g.add_edge(u, v) {
                return Err(GraphError::InvalidArgument(format!("duplicate edge {u}-{v}")));
            }
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `C_n` on `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Raw adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v), self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `u-v`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u}-{v}");
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
        self.edge_count += 1;
        true
    }

    /// Deletes `u-v`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.stride + u / 64] &= !(1 << (u % 64));
        self.edge_count -= 1;
        true
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| Edge(u, v))
        })
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Minimum degree of the subgraph induced by `set`; 0 for an empty set.
    pub fn induced_min_degree(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|v| set.intersection_len_words(self.row(v)))
            .min()
            .unwrap_or(0)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

/// Turán part sizes for `(n, r)`: the first `n mod r` parts get `⌈n/r⌉`,
/// the rest `⌊n/r⌋`.
pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    let (q, rem) = (n / r, n % r);
    (0..r).map(|i| if i < rem { q + 1 } else { q }).collect()
}

/// Number of edges of the complete multipartite graph with these part sizes.
pub fn multipartite_edge_count(sizes: &[usize]) -> usize {
    let total: usize = sizes.iter().sum();
    let within: usize = sizes.iter().map(|s| s * s).sum();
    (total * total - within) / 2
}

/// The Turán graph `T_r(n)` with parts on contiguous ranges, larger parts first.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, GraphError> {
    if r < 1 || r > n {
        return Err(GraphError::InvalidArgument(format!(
            "Turán graph needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    complete_multipartite(&turan_part_sizes(n, r))
}

/// Complete multipartite graph with the given part sizes on contiguous ranges.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
    if sizes.is_empty() {
        return Err(GraphError::InvalidArgument("no parts given".into()));
    }
    if sizes.contains(&0) {
        return Err(GraphError::InvalidArgument("part of size zero".into()));
    }
    let n: usize = sizes.iter().sum();
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let labels = contiguous_labels(sizes);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if labels[u] != labels[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Part index of each vertex when parts occupy contiguous ranges.
pub fn contiguous_labels(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect()
}

/// Uniformly random graph with exactly `m` edges. The generator is ChaCha8
/// seeded from `seed`, so the result is fixed across platforms.
pub fn random_graph_fixed_edges(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m > pairs {
        return Err(GraphError::InvalidArgument(format!(
            "{m} edges requested but only {pairs} pairs on {n} vertices"
        )));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = index::sample(&mut rng, pairs, m).into_vec();
    picked.sort_unstable();
    let mut g = Graph::empty(n);
    for k in picked {
        let (u, v) = pair_from_index(n, k);
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Random graph where each pair is an edge independently with probability `p`.
pub fn random_graph_gnp(n: usize, p: f64, seed: u64) -> Graph {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

// Row-major index of the pair (u, v), u < v, among all pairs of 0..n.
fn pair_from_index(n: usize, mut k: usize) -> (usize, usize) {
    let mut u = 0;
    loop {
        let row = n - 1 - u;
        if k < row {
            return (u, u + 1 + k);
        }
        k -= row;
        u += 1;
    }
}
