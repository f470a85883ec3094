//! Exhaustive minimum vertex cover search on small graphs. Uses nothing but
//! the graph itself, so it can serve as ground truth for everything else.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rsg::Assignment;

/// Largest graph accepted by [`brute_force_min_covers`].
pub const MAX_ORACLE_NODES: usize = 64;

/// Minimum cover size and every minimum cover (sorted), by bounded branching.
pub fn brute_force_min_covers(g: &Graph, limit: usize) -> Result<(usize, Vec<Assignment>)> {
    let n = g.node_count();
    if n > MAX_ORACLE_NODES {
        return Err(Error::InvalidGraph(format!(
            "oracle supports at most {MAX_ORACLE_NODES} nodes, got {n}"
        )));
    }
    let adj: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let search = Search { adj: &adj, edges: g.edges() };

    let mut k = 0;
    while !search.exists(0, 0, k) {
        k += 1;
    }
    let mut found = Vec::new();
    search.collect(0, 0, k, &mut found, limit)?;
    let mut covers: Vec<Assignment> = found
        .into_iter()
        .map(|mask| Assignment { covered: (0..n).map(|u| mask >> u & 1 == 1).collect() })
        .collect();
    covers.sort_by_key(Assignment::covered_nodes);
    Ok((k, covers))
}

struct Search<'a> {
    adj: &'a [u64],
    edges: &'a [(usize, usize)],
}

impl Search<'_> {
    fn uncovered(&self, chosen: u64) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| chosen >> u & 1 == 0 && chosen >> v & 1 == 0)
    }

    fn exists(&self, chosen: u64, excluded: u64, budget: usize) -> bool {
        let Some((u, v)) = self.uncovered(chosen) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        [u, v].into_iter().any(|w| {
            excluded >> w & 1 == 0 && self.exists(chosen | 1 << w, excluded, budget - 1)
        })
    }

    /// Every cover extending `chosen`, avoiding `excluded`, with exactly
    /// `budget` more nodes. Branches on "u in" versus "u out (so N(u) in)",
    /// which visits each cover once.
    fn collect(
        &self,
        chosen: u64,
        excluded: u64,
        budget: usize,
        out: &mut Vec<u64>,
        limit: usize,
    ) -> Result<()> {
        let Some((u, _)) = self.uncovered(chosen) else {
            if budget == 0 {
                if out.len() == limit {
                    return Err(Error::LimitExceeded { limit });
                }
                out.push(chosen);
            }
            return Ok(());
        };
        if budget == 0 {
            return Ok(());
        }
        if excluded >> u & 1 == 0 {
            self.collect(chosen | 1 << u, excluded, budget - 1, out, limit)?;
        }
        let forced = self.adj[u] & !chosen;
        let need = forced.count_ones() as usize;
        if forced & excluded == 0 && need <= budget {
            self.collect(chosen | forced, excluded | 1 << u, budget - need, out, limit)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain subset enumeration.
    fn naive(g: &Graph) -> (usize, Vec<Vec<usize>>) {
        let n = g.node_count();
        let mut best = usize::MAX;
        let mut all = Vec::new();
        for mask in 0u32..(1 << n) {
            if g.edges().iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1) {
                let k = mask.count_ones() as usize;
                if k < best {
                    best = k;
                    all.clear();
                }
                if k == best {
                    all.push((0..n).filter(|&u| mask >> u & 1 == 1).collect::<Vec<_>>());
                }
            }
        }
        all.sort();
        (best, all)
    }

    fn run(g: &Graph) -> (usize, Vec<Vec<usize>>) {
        let (k, covers) = brute_force_min_covers(g, 1 << 20).unwrap();
        (k, covers.iter().map(Assignment::covered_nodes).collect())
    }

    #[test]
    fn single_edge() {
        assert_eq!(run(&Graph::path(2)), (1, vec![vec![0], vec![1]]));
    }

    #[test]
    fn five_cycle() {
        let (k, covers) = run(&Graph::cycle(5));
        assert_eq!(k, 3);
        assert_eq!(covers.len(), 5);
    }

    #[test]
    fn complete_bipartite_three() {
        assert_eq!(run(&Graph::complete_bipartite(3, 3)), (3, vec![vec![0, 1, 2], vec![3, 4, 5]]));
    }

    #[test]
    fn edgeless() {
        assert_eq!(run(&Graph::empty(3)), (0, vec![vec![]]));
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(
            brute_force_min_covers(&Graph::cycle(5), 4),
            Err(Error::LimitExceeded { limit: 4 })
        ));
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.7);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(run(&g), naive(&g));
        }
    }
}
