//! Edit sets between a graph and a complete `r`-partite target, and an
//! exhaustive oracle for the distance to the Turán graph on small inputs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{turan_part_sizes, Edge, Graph, GraphError};

/// Largest order accepted by [`min_edit_to_turan_bruteforce`].
pub const BRUTEFORCE_EDIT_MAX_N: usize = 12;

/// Pairs to add and remove, plus the vertex-to-part labelling they were
/// computed against.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EditSet {
    pub additions: BTreeSet<Edge>,
    pub removals: BTreeSet<Edge>,
    pub part_assignment: Vec<usize>,
}

impl EditSet {
    pub fn edit_count(&self) -> usize {
        self.additions.len() + self.removals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.additions.is_empty() && self.removals.is_empty()
    }

    /// Edits turning `g` into the complete multipartite graph whose parts are
    /// the classes of `assignment`.
    pub fn to_partition(g: &Graph, assignment: &[usize]) -> EditSet {
        assert_eq!(assignment.len(), g.n());
        let mut edits = EditSet {
            part_assignment: assignment.to_vec(),
            ..EditSet::default()
        };
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let same = assignment[u] == assignment[v];
                match (g.has_edge(u, v), same) {
                    (true, true) => {
                        edits.removals.insert(Edge::new(u, v));
                    }
                    (false, false) => {
                        edits.additions.insert(Edge::new(u, v));
                    }
                    _ => {}
                }
            }
        }
        edits
    }
}

/// Returns `(E(g) \ removals) ∪ additions`.
pub fn apply_edits(g: &Graph, edits: &EditSet) -> Result<Graph, GraphError> {
    if let Some(e) = edits.additions.intersection(&edits.removals).next() {
        return Err(GraphError::InvalidEdit(format!("{e} both added and removed")));
    }
    let mut out = g.clone();
    for e in &edits.removals {
        if e.hi() >= g.n() || !out.remove_edge(e.lo(), e.hi()) {
            return Err(GraphError::InvalidEdit(format!("removal of absent edge {e}")));
        }
    }
    for e in &edits.additions {
        if e.hi() >= g.n() || !out.add_edge(e.lo(), e.hi()) {
            return Err(GraphError::InvalidEdit(format!("addition of present edge {e}")));
        }
    }
    Ok(out)
}

/// Checks that `g` is exactly the complete multipartite graph on the classes
/// of `assignment`, and that those classes have the Turán sizes for `r`.
pub fn is_turan_under(g: &Graph, assignment: &[usize], r: usize) -> Result<(), String> {
    let n = g.n();
    if assignment.len() != n {
        return Err(format!("assignment covers {} of {n} vertices", assignment.len()));
    }
    let mut sizes = vec![0usize; r];
    for (v, &p) in assignment.iter().enumerate() {
        if p >= r {
            return Err(format!("vertex {v} assigned to part {p} >= r = {r}"));
        }
        sizes[p] += 1;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if r > n || sizes != turan_part_sizes(n, r) {
        return Err(format!("part sizes {sizes:?} are not Turán sizes for n={n}, r={r}"));
    }
    for u in 0..n {
        for v in u + 1..n {
            let cross = assignment[u] != assignment[v];
            if g.has_edge(u, v) != cross {
                return Err(format!(
                    "pair {u}-{v}: edge={} but cross-part={cross}",
                    g.has_edge(u, v)
                ));
            }
        }
    }
    Ok(())
}

/// Minimum labelled symmetric difference between `g` and `T_r(n)`, over all
/// assignments of vertices to `r` parts with Turán sizes, with a witnessing
/// edit set. Only for `n <= 12`.
pub fn min_edit_to_turan_bruteforce(g: &Graph, r: usize) -> Result<(usize, EditSet), GraphError> {
    let n = g.n();
    if n > BRUTEFORCE_EDIT_MAX_N {
        return Err(GraphError::TooLarge(format!(
            "exhaustive edit distance limited to n <= {BRUTEFORCE_EDIT_MAX_N}, got {n}"
        )));
    }
    if r < 1 || r > n {
        return Err(GraphError::InvalidArgument(format!("need 1 <= r <= n, got r={r}")));
    }
    // cost = removals + additions = 2 * within + e(T) - e(g), so it suffices
    // to minimise the number of edges inside parts.
    let capacity = turan_part_sizes(n, r);
    let mut search = PartitionSearch {
        g,
        capacity: &capacity,
        fill: vec![0; r],
        assignment: vec![usize::MAX; n],
        best_within: usize::MAX,
        best: Vec::new(),
    };
    search.descend(0, 0);
    let edits = EditSet::to_partition(g, &search.best);
    Ok((edits.edit_count(), edits))
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    capacity: &'a [usize],
    fill: Vec<usize>,
    assignment: Vec<usize>,
    best_within: usize,
    best: Vec<usize>,
}

impl PartitionSearch<'_> {
    fn descend(&mut self, v: usize, within: usize) {
        if within >= self.best_within {
            return;
        }
        let n = self.g.n();
        if v == n {
            self.best_within = within;
            self.best = self.assignment.clone();
            return;
        }
        for p in 0..self.capacity.len() {
            if self.fill[p] == self.capacity[p] {
                continue;
            }
            // Parts of equal capacity are interchangeable: only open the first
            // empty one among them.
            if self.fill[p] == 0
                && (0..p).any(|q| self.fill[q] == 0 && self.capacity[q] == self.capacity[p])
            {
                continue;
            }
            let added = (0..v)
                .filter(|&u| self.assignment[u] == p && self.g.has_edge(u, v))
                .count();
            self.assignment[v] = p;
            self.fill[p] += 1;
            self.descend(v + 1, within + added);
            self.fill[p] -= 1;
            self.assignment[v] = usize::MAX;
        }
    }
}
