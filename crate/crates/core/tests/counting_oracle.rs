use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcspace::counting::{count_solutions, cycle_simplification, unfrozen_core};
use vcspace::graph::check_bipartition;
use vcspace::oracle::brute_force_min_covers;
use vcspace::rsg::{build_rsg_bipartite, consistent_assignments};
use vcspace::{Graph, NodeState};

fn random_bipartite(rng: &mut ChaCha8Rng) -> Graph {
    let n1 = rng.gen_range(1..=7);
    let n2 = rng.gen_range(1..=7);
    let p = rng.gen_range(0.1..0.6);
    let edges: Vec<_> = (0..n1)
        .flat_map(|u| (n1..n1 + n2).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n1 + n2, edges).unwrap()
}

#[test]
fn counts_match_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..500 {
        let g = random_bipartite(&mut rng);
        let part = check_bipartition(&g).unwrap();
        let rsg = build_rsg_bipartite(&g, &part).unwrap();
        let (k, covers) = brute_force_min_covers(&g, 1 << 20).unwrap();
        assert_eq!(rsg.min_cover_size(), k);
        let r = count_solutions(&rsg).unwrap();
        assert_eq!(r.solution_count, BigUint::from(covers.len()), "{:?}", g.edges());
        assert!(r.core_count <= r.solution_count);
    }
}

#[test]
fn simplified_unfrozen_core_is_empty() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let g = random_bipartite(&mut rng);
        let rsg = build_rsg_bipartite(&g, &check_bipartition(&g).unwrap()).unwrap();
        let s = cycle_simplification(&rsg).unwrap();
        assert!(unfrozen_core(&s.rsg).is_empty(), "{:?}", g.edges());
        // the merge preserves the solution set
        let before = consistent_assignments(&rsg, 1 << 16).unwrap();
        let mut lifted: Vec<_> =
            consistent_assignments(&s.rsg, 1 << 16).unwrap().iter().map(|a| s.expand(a)).collect();
        lifted.sort_by_key(|a| a.covered_nodes());
        let mut before = before;
        before.sort_by_key(|a| a.covered_nodes());
        assert_eq!(lifted, before);
    }
}

#[test]
fn entropy_is_additive_over_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..50 {
        let a = random_bipartite(&mut rng);
        let b = random_bipartite(&mut rng);
        let na = a.node_count();
        let edges = a
            .edges()
            .iter()
            .copied()
            .chain(b.edges().iter().map(|&(u, v)| (u + na, v + na)));
        let joint = Graph::from_edges(na + b.node_count(), edges).unwrap();
        let count = |g: &Graph| {
            let rsg = build_rsg_bipartite(g, &check_bipartition(g).unwrap()).unwrap();
            count_solutions(&rsg).unwrap().solution_count
        };
        assert_eq!(count(&joint), count(&a) * count(&b));
    }
}

#[test]
fn core_nodes_are_unfrozen_with_degree_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let g = random_bipartite(&mut rng);
        let rsg = build_rsg_bipartite(&g, &check_bipartition(&g).unwrap()).unwrap();
        let core = unfrozen_core(&rsg);
        for &u in &core.nodes {
            assert_eq!(rsg.state(u), NodeState::Unfrozen);
            let deg = core.edges.iter().filter(|&&(a, b, _)| a == u || b == u).count();
            assert!(deg >= 2);
        }
    }
}
