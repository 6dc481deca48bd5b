//! Finding a large induced `r`-partite subgraph with high minimum degree.
//!
//! Up to [`EXHAUSTIVE_MAX_N`] vertices every deletion set is tried, smallest
//! first, so absence is exact there. Beyond that two greedy strategies run
//! and the larger valid result wins:
//!
//! * delete the vertex in most `(r+1)`-cliques until the rest is
//!   `K_{r+1}`-free, then partition by local search;
//! * partition the whole graph by local search first, then delete vertices
//!   that still have neighbours in their own part.
//!
//! Both finish by shedding minimum-degree vertices until the degree goal holds.

use crate::bitset::VertexSet;
use crate::cliques::{count_cliques_within, index_forward_sets};
use crate::graph::Graph;

pub const EXHAUSTIVE_MAX_N: usize = 16;

/// Returns `r` vertex-disjoint parts (each sorted, larger parts first; some
/// may be empty) whose union `S` satisfies: each part is independent in `g`,
/// `|S| >= size_goal` and `δ(g[S]) > mindeg_goal`.
pub fn extract_rpartite(
    g: &Graph,
    r: usize,
    size_goal: usize,
    mindeg_goal: f64,
) -> Option<Vec<Vec<usize>>> {
    assert!(r >= 2, "need r >= 2");
    let labels = if g.n() <= EXHAUSTIVE_MAX_N {
        exhaustive(g, r, size_goal, mindeg_goal)?
    } else {
        let a = clique_peeling(g, r, mindeg_goal);
        let b = partition_first(g, r, mindeg_goal);
        let size = |l: &Vec<Option<usize>>| l.iter().flatten().count();
        if size(&b) > size(&a) {
            b
        } else {
            a
        }
    };
    let parts = parts_from_labels(&labels, r);
    let total: usize = parts.iter().map(Vec::len).sum();
    if total < size_goal {
        return None;
    }
    if total > 0 {
        let set = VertexSet::from_iter(g.n(), parts.iter().flatten().copied());
        if (g.induced_min_degree(&set) as f64) <= mindeg_goal {
            return None;
        }
    } else if mindeg_goal >= 0.0 {
        return None;
    }
    Some(parts)
}

fn parts_from_labels(labels: &[Option<usize>], r: usize) -> Vec<Vec<usize>> {
    let mut parts = vec![Vec::new(); r];
    for (v, l) in labels.iter().enumerate() {
        if let Some(p) = l {
            parts[*p].push(v);
        }
    }
    parts.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.first().cmp(&y.first())));
    parts
}

fn exhaustive(g: &Graph, r: usize, size_goal: usize, mindeg_goal: f64) -> Option<Vec<Option<usize>>> {
    let n = g.n();
    let max_deleted = n.checked_sub(size_goal)?;
    for deleted in 0..=max_deleted {
        let mut found = None;
        for_each_subset(n, deleted, &mut |removed: &[usize]| {
            let mut keep = VertexSet::full(n);
            for &v in removed {
                keep.remove(v);
            }
            let mindeg_ok = if keep.is_empty() {
                mindeg_goal < 0.0
            } else {
                g.induced_min_degree(&keep) as f64 > mindeg_goal
            };
            if !mindeg_ok {
                return false;
            }
            match color(g, &keep.to_vec(), r) {
                Some(labels) => {
                    found = Some(labels);
                    true
                }
                None => false,
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Visits `k`-subsets of `0..n` in lexicographic order until `f` returns true.
fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Proper `r`-colouring of `g[vertices]` by backtracking; colours are
/// opened in order so permuted colourings are not revisited.
fn color(g: &Graph, vertices: &[usize], r: usize) -> Option<Vec<Option<usize>>> {
    fn go(g: &Graph, vertices: &[usize], r: usize, i: usize, used: usize, labels: &mut [Option<usize>]) -> bool {
        if i == vertices.len() {
            return true;
        }
        let v = vertices[i];
        for c in 0..r.min(used + 1) {
            let clash = vertices[..i]
                .iter()
                .any(|&u| labels[u] == Some(c) && g.has_edge(u, v));
            if clash {
                continue;
            }
            labels[v] = Some(c);
            if go(g, vertices, r, i + 1, used.max(c + 1), labels) {
                return true;
            }
            labels[v] = None;
        }
        false
    }
    let mut labels = vec![None; g.n()];
    go(g, vertices, r, 0, 0, &mut labels).then_some(labels)
}

fn clique_peeling(g: &Graph, r: usize, mindeg_goal: f64) -> Vec<Option<usize>> {
    let forward = index_forward_sets(g);
    let mut keep = VertexSet::full(g.n());
    loop {
        let mut worst: Option<(u64, usize)> = None;
        for v in keep.iter() {
            let mut nb = keep.clone();
            nb.intersect_words(g.row(v));
            let through = count_cliques_within(&forward, &nb, r).unwrap_or(u64::MAX);
            if through > 0 && worst.is_none_or(|(c, _)| through > c) {
                worst = Some((through, v));
            }
        }
        match worst {
            Some((_, v)) => keep.remove(v),
            None => break,
        }
    }
    let mut labels = local_search_partition(g, &keep, r);
    drop_conflicts(g, &mut labels, &mut keep);
    shed_low_degree(g, &mut labels, &mut keep, mindeg_goal);
    labels
}

fn partition_first(g: &Graph, r: usize, mindeg_goal: f64) -> Vec<Option<usize>> {
    let mut keep = VertexSet::full(g.n());
    let mut labels = local_search_partition(g, &keep, r);
    drop_conflicts(g, &mut labels, &mut keep);
    shed_low_degree(g, &mut labels, &mut keep, mindeg_goal);
    labels
}

/// Greedy start (each vertex joins the part holding fewest of its
/// neighbours) followed by single-vertex moves that strictly reduce the
/// number of edges inside parts.
pub(crate) fn local_search_partition(g: &Graph, keep: &VertexSet, r: usize) -> Vec<Option<usize>> {
    let n = g.n();
    let mut labels: Vec<Option<usize>> = vec![None; n];
    let mut members: Vec<VertexSet> = vec![VertexSet::new(n); r];
    for v in keep.iter() {
        let p = (0..r)
            .min_by_key(|&p| (members[p].intersection_len_words(g.row(v)), p))
            .unwrap();
        labels[v] = Some(p);
        members[p].insert(v);
    }
    loop {
        let mut improved = false;
        for v in keep.iter() {
            let here = labels[v].unwrap();
            let inside = members[here].intersection_len_words(g.row(v));
            let (best, count) = (0..r)
                .filter(|&p| p != here)
                .map(|p| (p, members[p].intersection_len_words(g.row(v))))
                .min_by_key(|&(p, c)| (c, p))
                .unwrap_or((here, inside));
            if count < inside {
                members[here].remove(v);
                members[best].insert(v);
                labels[v] = Some(best);
                improved = true;
            }
        }
        if !improved {
            return labels;
        }
    }
}

/// Deletes vertices with neighbours in their own part, most such neighbours
/// first, until every part is independent.
fn drop_conflicts(g: &Graph, labels: &mut [Option<usize>], keep: &mut VertexSet) {
    loop {
        let worst = keep
            .iter()
            .map(|v| {
                let own = keep
                    .iter()
                    .filter(|&u| labels[u] == labels[v] && g.has_edge(u, v))
                    .count();
                (own, v)
            })
            .filter(|&(own, _)| own > 0)
            .max_by_key(|&(own, v)| (own, std::cmp::Reverse(v)));
        match worst {
            Some((_, v)) => {
                keep.remove(v);
                labels[v] = None;
            }
            None => return,
        }
    }
}

fn shed_low_degree(g: &Graph, labels: &mut [Option<usize>], keep: &mut VertexSet, mindeg_goal: f64) {
    loop {
        let low = keep
            .iter()
            .map(|v| (keep.intersection_len_words(g.row(v)), v))
            .min();
        match low {
            Some((d, v)) if d as f64 <= mindeg_goal => {
                keep.remove(v);
                labels[v] = None;
            }
            _ => return,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_graph_gnp, turan_graph};

    fn check(g: &Graph, parts: &[Vec<usize>], size_goal: usize, mindeg_goal: f64) {
        let all: Vec<usize> = parts.iter().flatten().copied().collect();
        assert!(all.len() >= size_goal);
        let set = VertexSet::from_iter(g.n(), all.iter().copied());
        assert_eq!(set.len(), all.len(), "parts overlap");
        assert!(g.induced_min_degree(&set) as f64 > mindeg_goal);
        for p in parts {
            for (i, &u) in p.iter().enumerate() {
                for &v in &p[i + 1..] {
                    assert!(!g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn turan_graph_returns_its_parts() {
        let g = turan_graph(8, 2).unwrap();
        let parts = extract_rpartite(&g, 2, 8, 3.9).unwrap();
        assert_eq!(parts, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
    }

    #[test]
    fn k4_has_no_spanning_bipartite_subgraph() {
        assert_eq!(extract_rpartite(&Graph::complete(4), 2, 4, 0.0), None);
    }

    #[test]
    fn k4_single_edge() {
        let g = Graph::complete(4);
        let parts = extract_rpartite(&g, 2, 2, 0.5).unwrap();
        check(&g, &parts, 2, 0.5);
        assert_eq!(parts.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn greedy_regime_recovers_turan_parts() {
        let mut g = turan_graph(40, 3).unwrap();
        g.add_edge(0, 1);
        g.add_edge(20, 21);
        let parts = extract_rpartite(&g, 3, 30, 20.0).unwrap();
        check(&g, &parts, 30, 20.0);
        assert!(parts.iter().flatten().count() >= 38);
    }

    #[test]
    fn greedy_output_always_meets_goals() {
        for seed in 0..5 {
            let g = random_graph_gnp(30, 0.6, seed);
            if let Some(parts) = extract_rpartite(&g, 2, 5, 2.0) {
                check(&g, &parts, 5, 2.0);
            }
        }
    }
}
