//! Undirected simple graphs, bipartitions, the random bipartite ensemble and
//! leaf-removal peeling.

use std::collections::VecDeque;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Undirected simple graph on nodes `0..node_count`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted; adjacency
/// lists are sorted by neighbor id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(node_count: usize) -> Self {
        Graph { edges: Vec::new(), adj: vec![Vec::new(); node_count] }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {node_count} nodes"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at node {u}")));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted_unique(node_count, canon))
    }

    fn from_sorted_unique(node_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); node_count];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { edges, adj }
    }

    /// Cycle graph `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle of length >= 3")
    }

    /// Path graph on `n` nodes.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("valid complete bipartite graph")
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the canonical edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Inserts an edge, keeping the canonical ordering. Returns `false` if it
    /// was already present.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v || u >= self.node_count() || v >= self.node_count() {
            return Err(Error::InvalidGraph(format!("cannot insert edge ({u}, {v})")));
        }
        let e = (u.min(v), u.max(v));
        match self.edges.binary_search(&e) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.edges.insert(pos, e);
                for (a, b) in [(u, v), (v, u)] {
                    let list = &mut self.adj[a];
                    let at = list.binary_search(&b).unwrap_err();
                    list.insert(at, b);
                }
                Ok(true)
            }
        }
    }

    /// Subgraph induced by `nodes`, relabeled densely in the order given.
    /// Returns the subgraph and the map from new ids back to original ids.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.node_count()];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (a, b) = (local[u], local[v]);
            if a != usize::MAX && b != usize::MAX {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        (Self::from_sorted_unique(nodes.len(), edges), nodes.to_vec())
    }

    /// Connected-component label for each node, labels assigned in order of
    /// the smallest node id in each component.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.node_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }
}

/// Side of a node in a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X1,
    X2,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X1 => Side::X2,
            Side::X2 => Side::X1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitePartition {
    side: Vec<Side>,
    n1: usize,
    n2: usize,
}

impl BipartitePartition {
    pub fn from_sides(side: Vec<Side>) -> Self {
        let n1 = side.iter().filter(|&&s| s == Side::X1).count();
        let n2 = side.len() - n1;
        BipartitePartition { side, n1, n2 }
    }

    /// `X1 = 0..n1`, `X2 = n1..n1+n2`.
    pub fn leading(n1: usize, n2: usize) -> Self {
        let mut side = vec![Side::X1; n1];
        side.resize(n1 + n2, Side::X2);
        BipartitePartition { side, n1, n2 }
    }

    #[inline]
    pub fn side_of(&self, u: usize) -> Side {
        self.side[u]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn node_count(&self) -> usize {
        self.side.len()
    }

    /// Checks that the partition covers `g` and that every edge crosses it.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.side.len() != g.node_count() {
            return Err(Error::InvalidPartition(format!(
                "partition has {} nodes, graph has {}",
                self.side.len(),
                g.node_count()
            )));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| self.side[u] == self.side[v]) {
            return Err(Error::InvalidPartition(format!("edge ({u}, {v}) inside one side")));
        }
        Ok(())
    }
}

/// Odd cycle witnessing that a graph is not bipartite. Consecutive nodes
/// (cyclically) are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub nodes: Vec<usize>,
}

/// Two-colors every component by BFS (smallest id of each component on X1),
/// or returns an odd cycle.
pub fn check_bipartition(g: &Graph) -> std::result::Result<BipartitePartition, OddCycle> {
    let n = g.node_count();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::X1);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.opposite());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(OddCycle { nodes: tree_cycle(u, w, &parent, &depth) });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(BipartitePartition::from_sides(side.into_iter().map(Option::unwrap).collect()))
}

/// Cycle formed by the non-tree edge `(a, b)` and the BFS tree paths to their
/// lowest common ancestor.
fn tree_cycle(a: usize, b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Parameters of the random bipartite ensemble: sizes, whole-graph mean
/// degree `c` and RNG seed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleParams {
    pub n1: usize,
    pub n2: usize,
    pub c: f64,
    pub seed: u64,
}

impl EnsembleParams {
    pub fn new(n1: usize, n2: usize, c: f64, seed: u64) -> Self {
        EnsembleParams { n1, n2, c, seed }
    }

    /// Splits `n` nodes in the proportion `r1 : r2` (X1 gets the rounded share).
    pub fn from_ratio(r1: u32, r2: u32, n: usize, c: f64, seed: u64) -> Self {
        let n1 = ((n as f64) * r1 as f64 / (r1 + r2) as f64).round() as usize;
        EnsembleParams { n1, n2: n - n1, c, seed }
    }

    /// Mean degree in X1, `c (n1+n2) / (2 n1)`.
    pub fn c1(&self) -> f64 {
        self.c * (self.n1 + self.n2) as f64 / (2.0 * self.n1 as f64)
    }

    pub fn c2(&self) -> f64 {
        self.c * (self.n1 + self.n2) as f64 / (2.0 * self.n2 as f64)
    }

    /// Per-pair edge probability `c1 / n2`.
    pub fn p(&self) -> f64 {
        if self.n1 == 0 || self.n2 == 0 || self.c == 0.0 {
            0.0
        } else {
            self.c1() / self.n2 as f64
        }
    }

    pub fn expected_edges(&self) -> f64 {
        self.p() * (self.n1 * self.n2) as f64
    }
}

/// Samples each `X1 x X2` pair independently with probability `p`.
///
/// X1 occupies ids `0..n1`. Sampling skips over absent pairs with geometric
/// gaps, which is distributionally identical to per-pair coin flips.
pub fn generate_random_bipartite(params: &EnsembleParams) -> Result<(Graph, BipartitePartition)> {
    let EnsembleParams { n1, n2, .. } = *params;
    let p = params.p();
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(Error::ProbabilityTooLarge { p });
    }
    let total = (n1 as u64) * (n2 as u64);
    let mut edges = Vec::with_capacity(params.expected_edges().ceil() as usize + 16);
    if p > 0.0 && total > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        if p >= 1.0 {
            edges.extend((0..n1).flat_map(|u| (n1..n1 + n2).map(move |v| (u, v))));
        } else {
            let log_q = (-p).ln_1p();
            let mut k: u64 = 0;
            loop {
                let r: f64 = rng.gen();
                // 1 - r lies in (0, 1]
                let gap = ((1.0 - r).ln() / log_q).floor();
                if gap >= (total - k) as f64 {
                    break;
                }
                k += gap as u64;
                edges.push(((k / n2 as u64) as usize, n1 + (k % n2 as u64) as usize));
                k += 1;
                if k >= total {
                    break;
                }
            }
        }
    }
    let g = Graph::from_sorted_unique(n1 + n2, edges);
    Ok((g, BipartitePartition::leading(n1, n2)))
}

/// Residual of leaf removal and the `(pendant, support)` pairs it removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    pub core_nodes: Vec<usize>,
    pub leaf_matchings: Vec<(usize, usize)>,
}

/// Repeatedly deletes a degree-1 node together with its unique neighbor.
///
/// Degree-1 nodes are processed from a FIFO queue seeded in increasing id.
/// Nodes left isolated by the peel belong neither to the core nor to a leaf
/// matching.
pub fn leaf_removal(g: &Graph) -> PeelResult {
    let n = g.node_count();
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| deg[u] == 1).collect();
    let mut leaf_matchings = Vec::new();

    while let Some(p) = queue.pop_front() {
        if removed[p] || deg[p] != 1 {
            continue;
        }
        let s = *g
            .neighbors(p)
            .iter()
            .find(|&&w| !removed[w])
            .expect("degree-1 node has a live neighbor");
        removed[p] = true;
        removed[s] = true;
        deg[p] = 0;
        for &w in g.neighbors(s) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
        deg[s] = 0;
        leaf_matchings.push((p, s));
    }

    let core_nodes = (0..n).filter(|&u| !removed[u] && deg[u] >= 2).collect();
    PeelResult { core_nodes, leaf_matchings }
}

/// Size of the largest connected component over the node count; 0 for the
/// empty graph.
pub fn giant_component_fraction<T: Scalar>(g: &Graph) -> T {
    let n = g.node_count();
    if n == 0 {
        return T::zero();
    }
    let (label, count) = g.component_labels();
    let mut sizes = vec![0usize; count];
    for l in label {
        sizes[l] += 1;
    }
    T::ratio(sizes.into_iter().max().unwrap_or(0), n)
}
