use proptest::prelude::*;

use spectral_stability::cliques::{clique_stats, count_cliques, count_cliques_bruteforce};
use spectral_stability::edit::{apply_edits, is_turan_under, EditSet};
use spectral_stability::graph::{
    multipartite_edge_count, random_graph_fixed_edges, random_graph_gnp, turan_graph,
    turan_part_sizes, Graph,
};
use spectral_stability::io::{parse_edge_list, write_edge_list};
use spectral_stability::multipartite::{find_complete_multipartite, verify_multipartite_witness};
use spectral_stability::spectral::spectral_radius;
use spectral_stability::stability::{
    check_certificate, derived_params, procedure_p, stability_dichotomy, CertificateDocument,
    Overrides,
};

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=14, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, p)| random_graph_gnp(n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trips(g in small_graph()) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in small_graph()) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        prop_assert_eq!(g.edges().count(), g.edge_count());
    }

    #[test]
    fn turan_graph_is_balanced_and_extremal(n in 1usize..60, r in 1usize..8) {
        prop_assume!(r <= n);
        let sizes = turan_part_sizes(n, r);
        prop_assert_eq!(sizes.iter().sum::<usize>(), n);
        prop_assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
        let t = turan_graph(n, r).unwrap();
        prop_assert_eq!(t.edge_count(), multipartite_edge_count(&sizes));
        prop_assert_eq!(count_cliques(&t, r + 1).unwrap(), 0);
    }

    #[test]
    fn clique_counts_match_enumeration(g in small_graph(), k in 1usize..6) {
        prop_assert_eq!(count_cliques(&g, k).unwrap(), count_cliques_bruteforce(&g, k).unwrap());
    }

    #[test]
    fn edge_supports_sum_to_clique_edges(g in small_graph(), r in 2usize..5) {
        let stats = clique_stats(&g, r).unwrap();
        let sum: u64 = stats.edge_support.values().sum();
        let pairs = (r as u64) * (r as u64 - 1) / 2;
        prop_assert_eq!(sum, stats.total * pairs);
    }

    #[test]
    fn spectral_radius_is_monotone_under_edge_addition(
        g in small_graph(), a in any::<usize>(), b in any::<usize>()
    ) {
        prop_assume!(g.n() >= 2);
        let (u, v) = (a % g.n(), b % g.n());
        prop_assume!(u != v);
        let before = spectral_radius(&g, 1e-9).unwrap().mu;
        let mut h = g.clone();
        h.add_edge(u, v);
        let after = spectral_radius(&h, 1e-9).unwrap().mu;
        prop_assert!(after >= before - 1e-6);
    }

    #[test]
    fn peeling_never_adds_edges(g in small_graph(), r in 2usize..4, thr in 0u32..4) {
        let out = procedure_p(&g, r, thr as f64).unwrap();
        prop_assert_eq!(out.g_prime.edge_count() + out.removals.len(), g.edge_count());
        prop_assert!(clique_stats(&out.g_prime, r + 1).unwrap().joints() as f64 <= thr as f64);
    }

    #[test]
    fn partition_edits_produce_the_complete_multipartite_graph(
        n in 2usize..16, r in 2usize..5, seed in any::<u64>(), p in 0.0f64..1.0
    ) {
        prop_assume!(r <= n);
        let g = random_graph_gnp(n, p, seed);
        let assignment: Vec<usize> = (0..n).map(|v| v % r).collect();
        let edits = EditSet::to_partition(&g, &assignment);
        let h = apply_edits(&g, &edits).unwrap();
        prop_assert!(is_turan_under(&h, &assignment, r).is_ok());
    }

    #[test]
    fn multipartite_witnesses_verify(g in small_graph(), sizes in prop::collection::vec(1usize..3, 1..4)) {
        let found = find_complete_multipartite(&g, &sizes).unwrap();
        if let Some(w) = found.witness {
            prop_assert!(verify_multipartite_witness(&g, &w, &sizes));
        }
    }

    #[test]
    fn dichotomy_certificates_check_and_round_trip(n in 6usize..24, r in 2usize..4, seed in any::<u64>(), p in 0.2f64..0.9) {
        let g = random_graph_gnp(n, p, seed);
        let ov = Overrides { joint_threshold: Some(1.0), part_size_s: Some(1), ..Overrides::default() };
        let params = derived_params(r, 0.5, 0.1, n, ov).unwrap();
        let cert = stability_dichotomy(&g, &params).unwrap();
        let verdict = check_certificate(&g, &cert, &params);
        prop_assert!(verdict.valid, "{:?}", verdict.reason);
        let doc = CertificateDocument::new(params, cert, verdict);
        let json = doc.to_json();
        let back = CertificateDocument::from_json(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
    }
}

#[test]
fn fixed_edge_sampler_hits_the_requested_count() {
    for (n, m) in [(1, 0), (10, 45), (50, 100), (200, 3000)] {
        let g = random_graph_fixed_edges(n, m, 3).unwrap();
        assert_eq!(g.edge_count(), m);
    }
    assert!(random_graph_fixed_edges(4, 7, 0).is_err());
}
