//! Maximum matchings: Hopcroft–Karp on bipartite graphs, plus a blossom-free
//! augmenting heuristic for general graphs.

use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{BipartitePartition, Graph, Side};

const NONE: usize = usize::MAX;

/// Set of node-disjoint edges with a per-node partner table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
    partner: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(node_count: usize) -> Self {
        Matching { pairs: Vec::new(), partner: vec![None; node_count] }
    }

    /// Builds a matching from raw pairs without validation; see [`verify_matching`].
    pub fn from_pairs(node_count: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut partner = vec![None; node_count];
        let mut out = Vec::new();
        for (u, v) in pairs {
            let e = (u.min(v), u.max(v));
            if e.1 < node_count {
                partner[e.0] = Some(e.1);
                partner[e.1] = Some(e.0);
            }
            out.push(e);
        }
        out.sort_unstable();
        Matching { pairs: out, partner }
    }

    fn from_mates(mate: &[usize]) -> Self {
        let partner: Vec<Option<usize>> =
            mate.iter().map(|&m| if m == NONE { None } else { Some(m) }).collect();
        let pairs = mate
            .iter()
            .enumerate()
            .filter(|&(u, &m)| m != NONE && u < m)
            .map(|(u, &m)| (u, m))
            .collect();
        Matching { pairs, partner }
    }

    /// Canonical `(min, max)` pairs in increasing order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    #[inline]
    pub fn partner(&self, u: usize) -> Option<usize> {
        self.partner[u]
    }

    pub fn partners(&self) -> &[Option<usize>] {
        &self.partner
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_matched(&self, u: usize) -> bool {
        self.partner[u].is_some()
    }
}

/// Checks every [`Matching`] invariant against `g`.
pub fn verify_matching(g: &Graph, m: &Matching) -> bool {
    let n = g.node_count();
    if m.partner.len() != n {
        return false;
    }
    let mut used = vec![false; n];
    for &(u, v) in &m.pairs {
        if u >= n || v >= n || !g.has_edge(u, v) || used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
        if m.partner[u] != Some(v) || m.partner[v] != Some(u) {
            return false;
        }
    }
    (0..n).all(|u| m.partner[u].is_some() == used[u])
}

/// Maximum-cardinality matching of a bipartite graph by layered augmenting
/// phases. X1 nodes are the search roots; all scans go in increasing id, so
/// the result is deterministic.
pub fn max_bipartite_matching(g: &Graph, part: &BipartitePartition) -> Result<Matching> {
    part.validate(g)?;
    let n = g.node_count();
    let left: Vec<usize> = (0..n).filter(|&u| part.side_of(u) == Side::X1).collect();
    let mut mate = vec![NONE; n];
    let mut dist = vec![u32::MAX; n];
    let mut next = vec![0usize; n];
    let mut queue = VecDeque::new();

    // Greedy warm start.
    for &u in &left {
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| mate[v] == NONE) {
            mate[u] = v;
            mate[v] = u;
        }
    }

    loop {
        queue.clear();
        for &u in &left {
            if mate[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                let w = mate[v];
                if w == NONE {
                    found = true;
                } else if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        for &u in &left {
            next[u] = 0;
        }
        let mut augmented = false;
        for &u in &left {
            if mate[u] == NONE && augment_from(g, u, &mut mate, &mut dist, &mut next) {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }
    Ok(Matching::from_mates(&mate))
}

/// Iterative DFS along the BFS layers from the free left node `root`.
fn augment_from(
    g: &Graph,
    root: usize,
    mate: &mut [usize],
    dist: &mut [u32],
    next: &mut [usize],
) -> bool {
    let mut stack = vec![root];
    // via[i] is the right node whose mate is stack[i + 1]
    let mut via: Vec<usize> = Vec::new();
    while let Some(&u) = stack.last() {
        let adj = g.neighbors(u);
        if next[u] < adj.len() {
            let v = adj[next[u]];
            next[u] += 1;
            let w = mate[v];
            if w == NONE {
                let mut cur = v;
                for i in (0..stack.len()).rev() {
                    let x = stack[i];
                    mate[cur] = x;
                    mate[x] = cur;
                    if i > 0 {
                        cur = via[i - 1];
                    }
                }
                return true;
            }
            if dist[w] != u32::MAX && dist[w] == dist[u] + 1 {
                stack.push(w);
                via.push(v);
            }
        } else {
            dist[u] = u32::MAX;
            stack.pop();
            via.pop();
        }
    }
    false
}

/// Whether an augmenting path exists for `m` in the bipartite graph. Plain
/// BFS from every free X1 node, independent of the layered search above.
pub fn has_augmenting_path(g: &Graph, part: &BipartitePartition, m: &Matching) -> bool {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> =
        (0..n).filter(|&u| part.side_of(u) == Side::X1 && !m.is_matched(u)).collect();
    for &u in &queue {
        seen[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            match m.partner(v) {
                None => return true,
                Some(w) if !seen[w] => {
                    seen[w] = true;
                    queue.push_back(w);
                }
                Some(_) => {}
            }
        }
    }
    false
}

/// Large matching of an arbitrary graph: greedy start, then repeated
/// alternating-tree searches without blossom contraction. Always a valid
/// matching; maximum on bipartite graphs, possibly not on others.
pub fn greedy_augmenting_matching(g: &Graph) -> Matching {
    let n = g.node_count();
    let mut mate = vec![NONE; n];
    for u in 0..n {
        if mate[u] != NONE {
            continue;
        }
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| mate[v] == NONE) {
            mate[u] = v;
            mate[v] = u;
        }
    }

    let mut parent = vec![NONE; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    loop {
        let mut improved = false;
        for root in 0..n {
            if mate[root] != NONE {
                continue;
            }
            seen.iter_mut().for_each(|s| *s = false);
            queue.clear();
            seen[root] = true;
            queue.push_back(root);
            let mut end = None;
            'search: while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if seen[y] {
                        continue;
                    }
                    seen[y] = true;
                    parent[y] = x;
                    let z = mate[y];
                    if z == NONE {
                        end = Some(y);
                        break 'search;
                    }
                    if !seen[z] {
                        seen[z] = true;
                        parent[z] = y;
                        queue.push_back(z);
                    }
                }
            }
            if let Some(mut y) = end {
                loop {
                    let x = parent[y];
                    let prev = mate[x];
                    mate[x] = y;
                    mate[y] = x;
                    if x == root {
                        break;
                    }
                    y = prev;
                }
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    Matching::from_mates(&mate)
}
