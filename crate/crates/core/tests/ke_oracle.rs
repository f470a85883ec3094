use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcspace::ke::{grow_all, EdgeOrder};
use vcspace::matching::{verify_matching, Matching};
use vcspace::oracle::brute_force_min_covers;
use vcspace::Graph;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn check(g: &Graph, order: EdgeOrder) {
    let s = grow_all(g, order).unwrap();
    let sub = s.subgraph();
    let doubles: Vec<_> = s.rsg().double_edges().collect();
    assert!(verify_matching(sub, &Matching::from_pairs(g.node_count(), doubles.clone())));
    let (k, _) = brute_force_min_covers(sub, 1 << 20).unwrap();
    assert_eq!(k, doubles.len(), "{:?}", g.edges());
    assert_eq!(s.seed_cover_size(), k);
    let cert = s.certificate().unwrap();
    assert_eq!((cert.matching, cert.cover), (k, k));
    // accepted, discarded and pending partition the host edges
    let mut all: Vec<_> = s.accepted().iter().chain(s.discarded()).copied().collect();
    all.sort_unstable();
    assert_eq!(all, g.edges());
    assert!(s.pending().is_empty());
}

#[test]
fn grown_subgraphs_are_konig_egervary() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let n = rng.gen_range(3..=18);
        let g = random_graph(&mut rng, n, 0.25);
        check(&g, EdgeOrder::Lexicographic);
    }
}

#[test]
fn shuffled_orders_stay_konig_egervary() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for i in 0..100 {
        let n = rng.gen_range(3..=16);
        let g = random_graph(&mut rng, n, 0.3);
        check(&g, EdgeOrder::Shuffled(i));
    }
}
