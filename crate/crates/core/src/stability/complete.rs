//! From an `r`-partite core to an explicit edit set onto `T_r(n)`.

use crate::edit::EditSet;
use crate::graph::{turan_part_sizes, Graph};

use super::{Params, StabilityError};

/// Trims every part `V_i` to a set `U_i` of `params.part_size_u` vertices,
/// places all remaining vertices into parts so that the part sizes become
/// the Turán sizes, and returns the edits turning `g` into the complete
/// `r`-partite graph on that labelling.
///
/// The kept vertices of `V_i` are those with most neighbours in the other
/// parts. Remaining vertices are placed one at a time, in index order, into
/// the non-full part where they cause the fewest edits against the vertices
/// already placed (own part first on ties, then lowest part index).
pub fn trim_and_complete(
    g0_parts: &[Vec<usize>],
    g: &Graph,
    params: &Params,
) -> Result<EditSet, StabilityError> {
    let (n, r) = (g.n(), params.r);
    if g0_parts.len() != r {
        return Err(StabilityError::InvalidArgument(format!(
            "expected {r} parts, got {}",
            g0_parts.len()
        )));
    }
    if r > n {
        return Err(StabilityError::InvalidArgument(format!("r = {r} exceeds n = {n}")));
    }
    for (i, part) in g0_parts.iter().enumerate() {
        if part.len() < params.part_size_u {
            return Err(StabilityError::InvalidArgument(format!(
                "part {i} has {} vertices, fewer than u = {}",
                part.len(),
                params.part_size_u
            )));
        }
    }
    complete_keeping(g0_parts, g, r, params.part_size_u)
}

/// Runs [`trim_and_complete`] twice, keeping `u` vertices per part and
/// keeping every vertex the part's target allows, refines both labellings
/// and returns the cheaper edit set (the trimmed one on ties).
pub fn best_completion(
    g0_parts: &[Vec<usize>],
    g: &Graph,
    params: &Params,
) -> Result<EditSet, StabilityError> {
    let trimmed = trim_and_complete(g0_parts, g, params)?;
    let trimmed = EditSet::to_partition(g, &refine_partition(g, &trimmed.part_assignment, params.r));
    let kept = complete_keeping(g0_parts, g, params.r, g.n())?;
    let kept = EditSet::to_partition(g, &refine_partition(g, &kept.part_assignment, params.r));
    Ok(if kept.edit_count() < trimmed.edit_count() { kept } else { trimmed })
}

fn complete_keeping(
    g0_parts: &[Vec<usize>],
    g: &Graph,
    r: usize,
    keep: usize,
) -> Result<EditSet, StabilityError> {
    let n = g.n();
    let mut home: Vec<Option<usize>> = vec![None; n];
    for (i, part) in g0_parts.iter().enumerate() {
        for &v in part {
            if v >= n || home[v].is_some() {
                return Err(StabilityError::InvalidArgument(format!(
                    "vertex {v} is out of range or in two parts"
                )));
            }
            home[v] = Some(i);
        }
    }

    // larger parts receive the larger Turán targets
    let targets = turan_part_sizes(n, r);
    let mut by_size: Vec<usize> = (0..r).collect();
    by_size.sort_by_key(|&i| (std::cmp::Reverse(g0_parts[i].len()), i));
    let mut capacity = vec![0; r];
    for (rank, &i) in by_size.iter().enumerate() {
        capacity[i] = targets[rank];
    }

    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut fill = vec![0usize; r];
    for (i, part) in g0_parts.iter().enumerate() {
        let cross = |v: usize| {
            g.neighbors(v)
                .filter(|&w| home[w].is_some_and(|h| h != i))
                .count()
        };
        let mut ranked = part.clone();
        ranked.sort_by_key(|&v| (std::cmp::Reverse(cross(v)), v));
        // |U_i| is capped by the part's Turán target
        for &v in ranked.iter().take(keep.min(capacity[i])) {
            assignment[v] = Some(i);
            fill[i] += 1;
        }
    }

    // neighbours of each vertex per part, over placed vertices
    let mut placed_nb = vec![vec![0usize; r]; n];
    for v in 0..n {
        if let Some(p) = assignment[v] {
            for w in g.neighbors(v) {
                placed_nb[w][p] += 1;
            }
        }
    }
    for v in 0..n {
        if assignment[v].is_some() {
            continue;
        }
        let cost = |p: usize| {
            // edges inside p plus missing edges to the other parts
            let inside = placed_nb[v][p];
            let outside_placed: usize = (0..r).filter(|&q| q != p).map(|q| fill[q]).sum();
            let outside_nb: usize = (0..r).filter(|&q| q != p).map(|q| placed_nb[v][q]).sum();
            inside + (outside_placed - outside_nb)
        };
        let p = (0..r)
            .filter(|&p| fill[p] < capacity[p])
            .min_by_key(|&p| (cost(p), home[v] != Some(p), p))
            .expect("capacities sum to n");
        assignment[v] = Some(p);
        fill[p] += 1;
        for w in g.neighbors(v) {
            placed_nb[w][p] += 1;
        }
    }
    let assignment: Vec<usize> = assignment.into_iter().map(|p| p.unwrap()).collect();
    Ok(EditSet::to_partition(g, &assignment))
}

/// Hill climbing on a Turán-sized labelling: swaps of two vertices in
/// different parts, and moves from a part of size `q + 1` into one of size
/// `q`, applied while they strictly reduce the number of edges inside parts.
/// Part sizes stay a permutation of the Turán sizes throughout.
pub fn refine_partition(g: &Graph, assignment: &[usize], r: usize) -> Vec<usize> {
    let n = g.n();
    let mut part = assignment.to_vec();
    let mut size = vec![0usize; r];
    for &p in &part {
        size[p] += 1;
    }
    let mut nb = vec![vec![0i64; r]; n];
    for v in 0..n {
        for w in g.neighbors(v) {
            nb[w][part[v]] += 1;
        }
    }
    let relocate = |v: usize, to: usize, part: &mut Vec<usize>, nb: &mut Vec<Vec<i64>>, size: &mut Vec<usize>| {
        let from = part[v];
        for w in g.neighbors(v) {
            nb[w][from] -= 1;
            nb[w][to] += 1;
        }
        size[from] -= 1;
        size[to] += 1;
        part[v] = to;
    };
    loop {
        let mut improved = false;
        for v in 0..n {
            let here = part[v];
            for p in 0..r {
                if p != here && size[here] == size[p] + 1 && nb[v][p] < nb[v][here] {
                    relocate(v, p, &mut part, &mut nb, &mut size);
                    improved = true;
                    break;
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let (pu, pv) = (part[u], part[v]);
                if pu == pv {
                    continue;
                }
                let adj = i64::from(g.has_edge(u, v));
                let delta = nb[u][pv] + nb[v][pu] - 2 * adj - nb[u][pu] - nb[v][pv];
                if delta < 0 {
                    relocate(u, pv, &mut part, &mut nb, &mut size);
                    relocate(v, pu, &mut part, &mut nb, &mut size);
                    improved = true;
                }
            }
        }
        if !improved {
            return part;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edit::{apply_edits, is_turan_under};
    use crate::graph::turan_graph;
    use crate::stability::{derived_params, Overrides};

    fn params(n: usize, u: usize) -> Params {
        params_r(2, n, u)
    }

    fn params_r(r: usize, n: usize, u: usize) -> Params {
        let ov = Overrides {
            joint_threshold: Some(1.0),
            ..Overrides::default()
        };
        let mut p = derived_params(r, 1e-30, 1e-12, n, ov).unwrap();
        p.part_size_u = u;
        p
    }

    fn halves() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]
    }

    #[test]
    fn turan_input_needs_no_edits() {
        let g = turan_graph(8, 2).unwrap();
        let e = trim_and_complete(&halves(), &g, &params(8, 4)).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn missing_cross_edge_is_added() {
        let mut g = turan_graph(8, 2).unwrap();
        g.remove_edge(0, 5);
        let e = trim_and_complete(&halves(), &g, &params(8, 4)).unwrap();
        assert_eq!((e.additions.len(), e.removals.len()), (1, 0));
    }

    #[test]
    fn extra_inside_edge_is_removed() {
        let mut g = turan_graph(8, 2).unwrap();
        g.add_edge(0, 1);
        let parts = crate::stability::extract_rpartite(&g, 2, 7, 2.5).unwrap();
        let e = trim_and_complete(&parts, &g, &params(8, 3)).unwrap();
        assert_eq!((e.additions.len(), e.removals.len()), (0, 1));
        let h = apply_edits(&g, &e).unwrap();
        assert_eq!(h, turan_graph(8, 2).unwrap());
        is_turan_under(&h, &e.part_assignment, 2).unwrap();
    }

    #[test]
    fn small_parts_are_rejected() {
        let g = turan_graph(8, 2).unwrap();
        let parts = vec![vec![0, 1], vec![4, 5, 6, 7]];
        assert!(trim_and_complete(&parts, &g, &params(8, 3)).is_err());
        assert!(trim_and_complete(&[vec![0]], &g, &params(8, 0)).is_err());
    }

    #[test]
    fn tiny_cores_are_completed_to_turan_sizes() {
        let mut g = turan_graph(11, 3).unwrap();
        g.remove_edge(0, 10);
        let parts = vec![vec![0], vec![4], vec![8]];
        let e = trim_and_complete(&parts, &g, &params_r(3, 11, 1)).unwrap();
        let h = apply_edits(&g, &e).unwrap();
        is_turan_under(&h, &e.part_assignment, 3).unwrap();
    }

    #[test]
    fn refinement_fixes_a_swapped_pair() {
        let g = turan_graph(10, 2).unwrap();
        let mut labels: Vec<usize> = (0..10).map(|v| usize::from(v >= 5)).collect();
        labels.swap(0, 9);
        let fixed = refine_partition(&g, &labels, 2);
        assert!(EditSet::to_partition(&g, &fixed).is_empty());
    }
}
