//! Search and verification of complete multipartite subgraphs
//! `K_r(s_1, ..., s_r) ⊆ G`.
//!
//! Containment is as a subgraph: every pair of vertices from different parts
//! must be adjacent, pairs inside a part are unconstrained. Small instances
//! are searched exactly by backtracking over common neighbourhoods; larger
//! ones by a greedy pivot heuristic with deterministic restarts.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Exact backtracking is used when the total witness size is at most this...
pub const EXACT_MAX_TOTAL: usize = 20;
/// ...and the host has at most this many vertices.
pub const EXACT_MAX_N: usize = 64;
/// Node cap for one exact search.
pub const EXACT_NODE_CAP: u64 = 20_000_000;
/// Random restarts of the greedy heuristic on top of one restart per seed vertex.
pub const HEURISTIC_RANDOM_RESTARTS: usize = 32;
const HEURISTIC_SEED: u64 = 0x5eed_cafe;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("exact search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
}

/// Which search produced (or failed to produce) a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Exhaustive: a missing witness means none exists.
    Exact,
    /// Greedy: a missing witness means only "not found".
    Heuristic,
}

/// Disjoint vertex sets, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultipartiteWitness {
    pub parts: Vec<Vec<usize>>,
}

impl MultipartiteWitness {
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub witness: Option<MultipartiteWitness>,
    pub regime: Regime,
}

/// A `K_r(s, ..., s, t)` with the final part as large as the search found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrstWitness {
    pub witness: MultipartiteWitness,
    pub t: usize,
    pub regime: Regime,
}

fn exact_applies(g: &Graph, total: usize) -> bool {
    total <= EXACT_MAX_TOTAL && g.n() <= EXACT_MAX_N
}

/// Looks for a `K_k(sizes)` in `g`.
pub fn find_complete_multipartite(
    g: &Graph,
    sizes: &[usize],
) -> Result<SearchResult, SearchError> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(SearchError::InvalidArgument("part sizes must be non-empty and positive".into()));
    }
    let total: usize = sizes.iter().sum();
    if total > g.n() {
        return Ok(SearchResult {
            witness: None,
            regime: Regime::Exact,
        });
    }
    if exact_applies(g, total) {
        let mut search = ExactSearch::new(g, sizes, Goal::First);
        search.run()?;
        return Ok(SearchResult {
            witness: search.best.map(|(parts, _)| MultipartiteWitness { parts }),
            regime: Regime::Exact,
        });
    }
    let witness = heuristic_search(g, sizes, Goal::First).map(|(parts, _)| MultipartiteWitness { parts });
    Ok(SearchResult {
        witness,
        regime: Regime::Heuristic,
    })
}

/// Looks for a `K_r(s, ..., s, t)`: `r − 1` parts of size `s` plus the
/// common neighbourhood of those parts as the final part, maximising `t`.
pub fn find_kr_s_t(g: &Graph, r: usize, s: usize) -> Result<Option<KrstWitness>, SearchError> {
    if r < 2 {
        return Err(SearchError::InvalidArgument(format!("need r >= 2, got {r}")));
    }
    if s == 0 {
        return Err(SearchError::InvalidArgument("part size s must be >= 1".into()));
    }
    let sizes = vec![s; r - 1];
    let core = (r - 1) * s;
    if core + 1 > g.n() {
        return Ok(None);
    }
    let (found, regime) = if exact_applies(g, core) {
        let mut search = ExactSearch::new(g, &sizes, Goal::MaxCommon);
        match search.run() {
            Ok(()) => (search.best, Regime::Exact),
            Err(SearchError::BudgetExceeded(_)) => {
                (heuristic_search(g, &sizes, Goal::MaxCommon), Regime::Heuristic)
            }
            Err(e) => return Err(e),
        }
    } else {
        (heuristic_search(g, &sizes, Goal::MaxCommon), Regime::Heuristic)
    };
    Ok(found.map(|(mut parts, common)| {
        let last = common.to_vec();
        let t = last.len();
        parts.push(last);
        KrstWitness {
            witness: MultipartiteWitness { parts },
            t,
            regime,
        }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Stop at the lexicographically first complete placement.
    First,
    /// Maximise the common neighbourhood of all placed parts (at least 1).
    MaxCommon,
}

struct ExactSearch<'a> {
    g: &'a Graph,
    sizes: &'a [usize],
    goal: Goal,
    /// sizes[i + 1..].sum() for each i
    tail: Vec<usize>,
    parts: Vec<Vec<usize>>,
    nodes: u64,
    best: Option<(Vec<Vec<usize>>, VertexSet)>,
    best_common: usize,
    done: bool,
}

impl<'a> ExactSearch<'a> {
    fn new(g: &'a Graph, sizes: &'a [usize], goal: Goal) -> Self {
        let tail = (0..sizes.len()).map(|i| sizes[i + 1..].iter().sum()).collect();
        ExactSearch {
            g,
            sizes,
            goal,
            tail,
            parts: vec![Vec::new(); sizes.len()],
            nodes: 0,
            best: None,
            best_common: 0,
            done: false,
        }
    }

    fn run(&mut self) -> Result<(), SearchError> {
        let all = VertexSet::full(self.g.n());
        self.place(0, &all, &all.clone(), 0)
    }

    /// `pool`: vertices allowed in part `i` (adjacent to every earlier part);
    /// `future`: `pool` further restricted to the neighbourhood of part `i`'s
    /// members so far.
    fn place(
        &mut self,
        i: usize,
        pool: &VertexSet,
        future: &VertexSet,
        from: usize,
    ) -> Result<(), SearchError> {
        if self.done {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > EXACT_NODE_CAP {
            return Err(SearchError::BudgetExceeded(EXACT_NODE_CAP));
        }
        if self.parts[i].len() == self.sizes[i] {
            if i + 1 == self.sizes.len() {
                self.record(future);
                return Ok(());
            }
            // equal consecutive parts are interchangeable: order them by first vertex
            let start = if self.sizes[i + 1] == self.sizes[i] {
                self.parts[i][0] + 1
            } else {
                0
            };
            let next = future.clone();
            return self.place(i + 1, &next, &next, start);
        }
        let slots = self.sizes[i] - self.parts[i].len();
        let needed_after = self.tail[i] + self.min_last_part();
        let candidates: Vec<usize> = pool.iter().filter(|&w| w >= from).collect();
        for (k, &w) in candidates.iter().enumerate() {
            if candidates.len() - k < slots {
                break;
            }
            let mut narrowed = future.clone();
            narrowed.intersect_words(self.g.row(w));
            if narrowed.len() < needed_after {
                continue;
            }
            let mut next_pool = pool.clone();
            next_pool.remove(w);
            self.parts[i].push(w);
            self.place(i, &next_pool, &narrowed, w + 1)?;
            self.parts[i].pop();
            if self.done {
                break;
            }
        }
        Ok(())
    }

    fn min_last_part(&self) -> usize {
        match self.goal {
            Goal::First => 0,
            Goal::MaxCommon => self.best_common + 1,
        }
    }

    fn record(&mut self, common: &VertexSet) {
        match self.goal {
            Goal::First => {
                self.best = Some((self.parts.clone(), common.clone()));
                self.done = true;
            }
            Goal::MaxCommon => {
                let t = common.len();
                if t > self.best_common {
                    self.best_common = t;
                    self.best = Some((self.parts.clone(), common.clone()));
                }
            }
        }
    }
}

/// Greedy pivot search. Each restart fills the parts in order, always adding
/// the candidate that keeps the largest common neighbourhood for the parts
/// still to come.
fn heuristic_search(
    g: &Graph,
    sizes: &[usize],
    goal: Goal,
) -> Option<(Vec<Vec<usize>>, VertexSet)> {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut rng = ChaCha8Rng::seed_from_u64(HEURISTIC_SEED);
    let mut best: Option<(Vec<Vec<usize>>, VertexSet)> = None;

    let restarts = by_degree
        .iter()
        .map(|&v| (Some(v), false))
        .chain(std::iter::repeat_n((None, true), HEURISTIC_RANDOM_RESTARTS));
    for (seed_vertex, shuffle) in restarts {
        let mut order: Vec<usize> = (0..n).collect();
        if shuffle {
            order.shuffle(&mut rng);
        }
        let Some(found) = greedy_attempt(g, sizes, seed_vertex, &order) else {
            continue;
        };
        let better = match (&best, goal) {
            (None, _) => true,
            (Some(b), Goal::First) => found.0 < b.0,
            (Some(b), Goal::MaxCommon) => {
                let (t_new, t_old) = (found.1.len(), b.1.len());
                t_new > t_old || (t_new == t_old && found.0 < b.0)
            }
        };
        if better {
            best = Some(found);
        }
    }
    best.filter(|(_, common)| goal == Goal::First || !common.is_empty())
}

fn greedy_attempt(
    g: &Graph,
    sizes: &[usize],
    seed_vertex: Option<usize>,
    order: &[usize],
) -> Option<(Vec<Vec<usize>>, VertexSet)> {
    let mut pool = VertexSet::full(g.n());
    let mut parts = Vec::with_capacity(sizes.len());
    for (i, &size) in sizes.iter().enumerate() {
        let needed_after: usize = sizes[i + 1..].iter().sum();
        let mut candidates = pool.clone();
        let mut future = pool.clone();
        let mut part = Vec::with_capacity(size);
        for slot in 0..size {
            let pick = if i == 0 && slot == 0 && seed_vertex.is_some() {
                seed_vertex.filter(|&v| candidates.contains(v))
            } else {
                // keep the candidate preserving the largest future pool; ties
                // go to the earliest vertex in `order`
                let mut choice: Option<(usize, usize)> = None;
                for &w in order {
                    if !candidates.contains(w) {
                        continue;
                    }
                    let keep = future.intersection_len_words(g.row(w));
                    if keep < needed_after {
                        continue;
                    }
                    if choice.is_none_or(|(_, best)| keep > best) {
                        choice = Some((w, keep));
                    }
                }
                choice.map(|(w, _)| w)
            };
            let w = pick?;
            candidates.remove(w);
            future.intersect_words(g.row(w));
            part.push(w);
        }
        part.sort_unstable();
        parts.push(part);
        pool = future;
        if pool.len() < needed_after {
            return None;
        }
    }
    Some((parts, pool))
}

/// Checks a witness against `g` and the required part sizes, reporting the
/// first violation.
pub fn check_multipartite_witness(
    g: &Graph,
    w: &MultipartiteWitness,
    sizes: &[usize],
) -> Result<(), String> {
    if w.sizes() != sizes {
        return Err(format!("part sizes {:?} differ from required {sizes:?}", w.sizes()));
    }
    let mut seen = VertexSet::new(g.n());
    for part in &w.parts {
        for &v in part {
            if v >= g.n() {
                return Err(format!("vertex {v} out of range"));
            }
            if seen.contains(v) {
                return Err(format!("vertex {v} appears twice"));
            }
            seen.insert(v);
        }
    }
    for (i, a) in w.parts.iter().enumerate() {
        for b in &w.parts[i + 1..] {
            for &u in a {
                for &v in b {
                    if !g.has_edge(u, v) {
                        return Err(format!("cross pair {u}-{v} is not an edge"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// True iff the parts are disjoint, have exactly `sizes`, and every
/// cross-part pair is an edge of `g`.
pub fn verify_multipartite_witness(g: &Graph, w: &MultipartiteWitness, sizes: &[usize]) -> bool {
    check_multipartite_witness(g, w, sizes).is_ok()
}
