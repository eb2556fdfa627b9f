use proptest::prelude::*;

use sepgraph_core::expansion::{cut_bounds, cut_exact, heuristic_cut, is_balanced_cut, Budget};
use sepgraph_core::families::random_regular;
use sepgraph_core::graph::bfs_distances;
use sepgraph_core::graph::generators::{cycle, grid, path};
use sepgraph_core::graph::{girth, is_forest, Girth};
use sepgraph_core::separation::sep_exact_profile;
use sepgraph_core::separation::{sep_lower_estimate, SepHost};
use sepgraph_core::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trip(g in arb_graph(14)) {
        let back = Graph::parse(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn bfs_is_one_lipschitz_along_edges(g in arb_graph(14), source in 0usize..14) {
        let s = source % g.vertex_count();
        let d = bfs_distances(&g, &[s]).unwrap();
        prop_assert_eq!(d[s], Some(0));
        for &(u, v) in g.edges() {
            match (d[u], d[v]) {
                (Some(a), Some(b)) => prop_assert!(a.abs_diff(b) <= 1),
                (None, None) => {}
                _ => prop_assert!(false, "edge {}-{} crosses reachability", u, v),
            }
        }
    }

    #[test]
    fn bracket_contains_exact_cut(g in arb_graph(12), seed in any::<u64>()) {
        let exact = cut_exact(&g, 20).unwrap();
        let b = cut_bounds(&g, &Budget { exhaustive_n: 0, seed, ..Budget::default() });
        prop_assert!(b.lower <= exact.value);
        prop_assert!(exact.value <= b.upper);
        prop_assert!(is_balanced_cut(&g, &b.witness));
        prop_assert_eq!(b.witness.len(), b.upper);
    }

    #[test]
    fn heuristic_cuts_are_balanced(g in arb_graph(14), seed in any::<u64>()) {
        prop_assert!(is_balanced_cut(&g, &heuristic_cut(&g, 4, seed)));
    }

    #[test]
    fn separation_profile_is_monotone(g in arb_graph(11)) {
        let profile = sep_exact_profile(&g, g.vertex_count()).unwrap();
        for w in profile.windows(2) {
            prop_assert!(w[0].value <= w[1].value);
        }
    }

    #[test]
    fn lower_estimates_never_exceed_exact(g in arb_graph(11), n in 1usize..11, seed in any::<u64>()) {
        let n = n.min(g.vertex_count());
        let exact = sep_exact_profile(&g, n).unwrap().pop().unwrap();
        let budget = Budget { seed, ..Budget::default() };
        let est = sep_lower_estimate(SepHost::Graph(&g), n, &budget);
        prop_assert!(est.value <= exact.value, "{} > {}", est.value, exact.value);
    }
}

#[test]
fn girth_of_standard_graphs() {
    for n in 3..20 {
        assert_eq!(girth(&cycle(n)), Girth::Finite(n));
    }
    assert_eq!(girth(&grid(&[5, 7])), Girth::Finite(4));
    assert_eq!(girth(&path(9)), Girth::Infinite);
    assert!(is_forest(&path(9)));
}

#[test]
fn random_regular_is_regular_and_reproducible() {
    for (n, d) in [(10, 3), (16, 4), (30, 3), (21, 4)] {
        let g = random_regular(n, d, 7).unwrap();
        assert_eq!(g.regular_degree(), Some(d));
        assert_eq!(g, random_regular(n, d, 7).unwrap());
    }
    assert!(random_regular(7, 3, 0).is_err());
}
