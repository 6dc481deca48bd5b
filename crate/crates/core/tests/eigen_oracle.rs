//! Cross-checks the power iteration against a dense symmetric eigensolver.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spectral_stability::graph::{random_graph_gnp, Graph};
use spectral_stability::spectral::spectral_radius;

fn dense_radius(g: &Graph) -> f64 {
    let n = g.n();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for e in g.edges() {
        a[(e.lo(), e.hi())] = 1.0;
        a[(e.hi(), e.lo())] = 1.0;
    }
    SymmetricEigen::new(a).eigenvalues.iter().copied().fold(f64::MIN, f64::max)
}

#[test]
fn power_iteration_matches_dense_eigensolver() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..150u64 {
        let n = rng.random_range(1..=80usize);
        let p = rng.random_range(0.0..1.0);
        let g = random_graph_gnp(n, p, seed);
        let fast = spectral_radius(&g, 1e-9).unwrap().mu;
        let slow = dense_radius(&g);
        assert!((fast - slow).abs() < 1e-6, "seed {seed}, n {n}: {fast} vs {slow}");
    }
}

#[test]
fn disconnected_graphs_take_the_largest_component() {
    // K_5 plus C_10: radii 4 and 2
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push((u, v));
        }
    }
    for i in 0..10 {
        edges.push((5 + i, 5 + (i + 1) % 10));
    }
    let g = Graph::from_edges(15, edges).unwrap();
    let mu = spectral_radius(&g, 1e-9).unwrap().mu;
    assert!((mu - 4.0).abs() < 1e-6);
    assert!((dense_radius(&g) - mu).abs() < 1e-6);
}
