use num_bigint::BigUint;
use proptest::prelude::*;

use vcspace::counting::{count_solutions, cycle_simplification, unfrozen_core};
use vcspace::experiments::{fmt_sig, round_sig};
use vcspace::graph::{check_bipartition, generate_random_bipartite, leaf_removal, EnsembleParams};
use vcspace::matching::{has_augmenting_path, max_bipartite_matching, verify_matching};
use vcspace::meanfield::solve_fixed_point;
use vcspace::oracle::brute_force_min_covers;
use vcspace::rsg::{build_rsg_bipartite, consistent_assignments, freezing_influence, NodeState};
use vcspace::{BipartitePartition, Graph};

/// Random bipartite graph with X1 = 0..n1 from a bit mask over the pairs.
fn bipartite() -> impl Strategy<Value = (Graph, BipartitePartition)> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(n1, n2)| {
        proptest::collection::vec(any::<bool>(), n1 * n2).prop_map(move |bits| {
            let edges = (0..n1 * n2).filter(|&i| bits[i]).map(|i| (i / n2, n1 + i % n2));
            (Graph::from_edges(n1 + n2, edges).unwrap(), BipartitePartition::leading(n1, n2))
        })
    })
}

fn general(max_n: usize) -> impl Strategy<Value = Graph> {
    (2usize..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn generator_is_deterministic(seed in any::<u64>(), c in 0.0f64..5.0) {
        let p = EnsembleParams::new(40, 30, c, seed);
        let a = generate_random_bipartite(&p).unwrap();
        let b = generate_random_bipartite(&p).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.1.validate(&a.0).is_ok());
    }

    #[test]
    fn peeling_is_idempotent(g in general(12)) {
        let peel = leaf_removal(&g);
        let (core, _) = g.induced_subgraph(&peel.core_nodes);
        let again = leaf_removal(&core);
        prop_assert_eq!(again.core_nodes, (0..core.node_count()).collect::<Vec<_>>());
        prop_assert!(again.leaf_matchings.is_empty());
        let mut used = vec![false; g.node_count()];
        for &(a, b) in &peel.leaf_matchings {
            prop_assert!(g.has_edge(a, b));
            prop_assert!(!used[a] && !used[b]);
            used[a] = true;
            used[b] = true;
        }
        prop_assert!(peel.core_nodes.iter().all(|&u| !used[u]));
    }

    #[test]
    fn matching_is_maximum((g, part) in bipartite()) {
        let m = max_bipartite_matching(&g, &part).unwrap();
        prop_assert!(verify_matching(&g, &m));
        prop_assert!(!has_augmenting_path(&g, &part, &m));
        let (k, _) = brute_force_min_covers(&g, 1 << 20).unwrap();
        prop_assert_eq!(m.size(), k);
    }

    #[test]
    fn rsg_is_exact((g, part) in bipartite()) {
        let rsg = build_rsg_bipartite(&g, &part).unwrap();
        let (k, covers) = brute_force_min_covers(&g, 1 << 20).unwrap();
        let mut found = consistent_assignments(&rsg, 1 << 20).unwrap();
        found.sort_by_key(|a| a.covered_nodes());
        prop_assert_eq!(&found, &covers);
        prop_assert_eq!(rsg.min_cover_size(), k);
        // propagation is already at its fixpoint and never unfreezes
        let again = freezing_influence(&rsg).unwrap();
        prop_assert_eq!(&again, &rsg);
        // backbones are exactly the nodes with one value across all covers
        for u in 0..g.node_count() {
            let covered = covers.iter().filter(|a| a.covered[u]).count();
            let expected = match covered {
                0 => NodeState::UncoveredBackbone,
                c if c == covers.len() => NodeState::CoveredBackbone,
                _ => NodeState::Unfrozen,
            };
            prop_assert_eq!(rsg.state(u), expected);
        }
    }

    #[test]
    fn counting_matches_oracle((g, part) in bipartite()) {
        let rsg = build_rsg_bipartite(&g, &part).unwrap();
        let (_, covers) = brute_force_min_covers(&g, 1 << 20).unwrap();
        let r = count_solutions(&rsg).unwrap();
        prop_assert_eq!(r.solution_count, BigUint::from(covers.len()));
        let s = cycle_simplification(&rsg).unwrap();
        prop_assert!(unfrozen_core(&s.rsg).is_empty());
        prop_assert!(s.merged_node_count() <= rsg.node_count());
    }

    #[test]
    fn bipartition_witness_is_odd(g in general(10)) {
        match check_bipartition(&g) {
            Ok(part) => prop_assert!(part.validate(&g).is_ok()),
            Err(cyc) => {
                let k = cyc.nodes.len();
                prop_assert!(k % 2 == 1);
                for i in 0..k {
                    prop_assert!(g.has_edge(cyc.nodes[i], cyc.nodes[(i + 1) % k]));
                }
            }
        }
    }

    #[test]
    fn meanfield_side_swap(c1 in 0.0f64..15.0, c2 in 0.0f64..15.0) {
        let a = solve_fixed_point(c1, c2).unwrap();
        let b = solve_fixed_point(c2, c1).unwrap().swapped();
        prop_assert!((a.x - b.x).abs() < 1e-10);
        prop_assert!((a.q_plus - b.q_plus).abs() < 1e-10);
        prop_assert!((a.x - a.x_from_backbones()).abs() < 1e-10);
        prop_assert!(a.q_plus >= 0.0 && a.q_zero >= 0.0 && a.q_minus() >= -1e-12);
    }

    #[test]
    fn formatting_round_trips(x in -1e6f64..1e6) {
        let y = round_sig(x);
        prop_assert!((x - y).abs() <= 1e-11 * x.abs().max(1e-300));
        prop_assert_eq!(fmt_sig(y), fmt_sig(x));
    }
}
