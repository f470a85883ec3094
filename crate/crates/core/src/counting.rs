//! Unfrozen cores, cycle simplification and exact counting of minimum covers.
//!
//! After propagation every unfrozen node sits in a double edge whose other
//! end is unfrozen too, so each such pair is one binary variable ("which end
//! is covered") and each single edge between unfrozen nodes is a binary
//! at-least-one constraint between two pairs. Counting works on that
//! pair-variable system.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{leaf_removal, Graph};
use crate::rsg::{Assignment, EdgeKind, NodeState, ReducedSolutionGraph};
use crate::scalar::Scalar;

/// Leaf-removal core of the subgraph induced by the unfrozen nodes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UnfrozenCore {
    pub nodes: Vec<usize>,
    pub edges: Vec<(usize, usize, EdgeKind)>,
}

impl UnfrozenCore {
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }
}

pub fn unfrozen_core(rsg: &ReducedSolutionGraph) -> UnfrozenCore {
    let unfrozen: Vec<usize> =
        (0..rsg.node_count()).filter(|&u| rsg.state(u) == NodeState::Unfrozen).collect();
    let (sub, back) = rsg.host().induced_subgraph(&unfrozen);
    let peel = leaf_removal(&sub);
    let nodes: Vec<usize> = peel.core_nodes.iter().map(|&i| back[i]).collect();
    let mut inside = vec![false; rsg.node_count()];
    for &u in &nodes {
        inside[u] = true;
    }
    let edges = rsg
        .host()
        .edges()
        .iter()
        .filter(|&&(u, v)| inside[u] && inside[v])
        .map(|&(u, v)| (u, v, rsg.edge_kind(u, v).expect("host edge")))
        .collect();
    UnfrozenCore { nodes, edges }
}

/// RSG after merging every alternating double/single cycle, with the map
/// from original nodes to merged nodes. Merged nodes take one common value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplifiedRsg {
    pub rsg: ReducedSolutionGraph,
    pub merge_map: Vec<usize>,
}

impl SimplifiedRsg {
    /// Lifts an assignment of the simplified RSG back to the original nodes.
    pub fn expand(&self, a: &Assignment) -> Assignment {
        Assignment { covered: self.merge_map.iter().map(|&s| a.covered[s]).collect() }
    }

    pub fn merged_node_count(&self) -> usize {
        self.rsg.node_count()
    }
}

/// Checks the preconditions shared by simplification and counting: the RSG
/// is propagation-closed and every unfrozen node has an unfrozen partner.
fn check_counting_input(rsg: &ReducedSolutionGraph) -> Result<()> {
    if !rsg.is_propagation_closed() {
        return Err(Error::InvalidRsg("freezing influence has not reached its fixpoint".into()));
    }
    for u in 0..rsg.node_count() {
        if rsg.state(u) == NodeState::Unfrozen
            && rsg.partner(u).is_none_or(|p| rsg.state(p) != NodeState::Unfrozen)
        {
            return Err(Error::InvalidRsg(format!("unfrozen node {u} lacks an unfrozen partner")));
        }
    }
    Ok(())
}

/// Merges alternating cycles until none remain.
///
/// An arc `x -> y` means "x covered forces y covered": a single edge `(a, b)`
/// between unfrozen nodes yields `partner(a) -> b` and `partner(b) -> a`.
/// Directed cycles of this digraph are exactly the alternating cycles, so
/// merging each strongly connected component reaches the same fixpoint as
/// merging cycles one at a time. Merged nodes are numbered in order of their
/// smallest original member.
pub fn cycle_simplification(rsg: &ReducedSolutionGraph) -> Result<SimplifiedRsg> {
    check_counting_input(rsg)?;
    let n = rsg.node_count();
    let unfrozen = |u: usize| rsg.state(u) == NodeState::Unfrozen;
    let mut arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in rsg.host().edges() {
        if unfrozen(a) && unfrozen(b) && rsg.partner(a) != Some(b) {
            arcs[rsg.partner(a).unwrap()].push(b);
            arcs[rsg.partner(b).unwrap()].push(a);
        }
    }
    let comp = strongly_connected(&arcs);

    // Dense ids by smallest member.
    let mut class_of_comp = vec![usize::MAX; n];
    let mut merge_map = vec![0usize; n];
    let mut reps = Vec::new();
    for u in 0..n {
        let c = comp[u];
        if class_of_comp[c] == usize::MAX {
            class_of_comp[c] = reps.len();
            reps.push(u);
        }
        merge_map[u] = class_of_comp[c];
    }
    let m = reps.len();

    let mut partner: Vec<Option<usize>> = vec![None; m];
    for u in 0..n {
        let s = merge_map[u];
        let p = rsg.partner(u).map(|p| merge_map[p]);
        if p == Some(s) {
            return Err(Error::Simplification(format!(
                "node {u} merged with its own double partner"
            )));
        }
        match (partner[s], p) {
            (None, _) if reps[s] == u => partner[s] = p,
            (q, p) if q == p => {}
            _ => {
                return Err(Error::Simplification(format!(
                    "merged node {s} has conflicting double partners"
                )))
            }
        }
    }

    let mut edges = Vec::with_capacity(rsg.host().edge_count());
    for &(u, v) in rsg.host().edges() {
        let (a, b) = (merge_map[u], merge_map[v]);
        if a == b {
            return Err(Error::Simplification(format!("edge ({u}, {v}) became a self-loop")));
        }
        edges.push((a.min(b), a.max(b)));
    }
    edges.sort_unstable();
    edges.dedup();
    let host = Graph::from_edges(m, edges)?;
    let state = reps.iter().map(|&r| rsg.state(r)).collect();
    let merged = ReducedSolutionGraph::from_parts(host, partner, state)?;
    Ok(SimplifiedRsg { rsg: merged, merge_map })
}

/// Iterative Tarjan; returns a component id per node.
fn strongly_connected(arcs: &[Vec<usize>]) -> Vec<usize> {
    let n = arcs.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut n_comp = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < arcs[v].len() {
                let w = arcs[v][*i];
                *i += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = n_comp;
                        if w == v {
                            break;
                        }
                    }
                    n_comp += 1;
                }
            }
        }
    }
    comp
}

/// Exact solution counts of an RSG and of its unfrozen core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub solution_count: BigUint,
    pub core_count: BigUint,
    /// Node count of the original graph; the entropy normalizer.
    pub node_count: usize,
}

impl CountResult {
    /// `log2(S_n) / n`.
    pub fn entropy<T: Scalar>(&self) -> T {
        normalized_log2(&self.solution_count, self.node_count)
    }

    /// `log2(S_c) / n`.
    pub fn core_entropy<T: Scalar>(&self) -> T {
        normalized_log2(&self.core_count, self.node_count)
    }
}

/// Solution count of an unfrozen core, normalized by the whole graph size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreCount {
    pub count: BigUint,
    pub node_count: usize,
}

impl CoreCount {
    pub fn entropy<T: Scalar>(&self) -> T {
        normalized_log2(&self.count, self.node_count)
    }
}

fn normalized_log2<T: Scalar>(x: &BigUint, n: usize) -> T {
    if n == 0 || x.is_zero() {
        return T::zero();
    }
    T::of(log2_big(x) / n as f64)
}

/// Base-2 logarithm of a positive big integer.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().map_or(f64::NEG_INFINITY, |v| (v as f64).log2());
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 significant bits");
    (top as f64).log2() + shift as f64
}

/// Exact number of consistent assignments (minimum covers), and of the
/// unfrozen core's assignments.
pub fn count_solutions(rsg: &ReducedSolutionGraph) -> Result<CountResult> {
    let solution_count = count_assignments(rsg)?;
    let core = unfrozen_core(rsg);
    let core_count = count_core_solutions(rsg, &core, rsg.node_count())?.count;
    Ok(CountResult { solution_count, core_count, node_count: rsg.node_count() })
}

/// Assignments of the core's pair variables under core-internal constraints.
pub fn count_core_solutions(
    rsg: &ReducedSolutionGraph,
    core: &UnfrozenCore,
    n_total: usize,
) -> Result<CoreCount> {
    if core.is_empty() {
        return Ok(CoreCount { count: BigUint::one(), node_count: n_total });
    }
    let (sub, back) = rsg.host().induced_subgraph(&core.nodes);
    let mut local = vec![usize::MAX; rsg.node_count()];
    for (i, &u) in back.iter().enumerate() {
        local[u] = i;
    }
    let mut partner = vec![None; back.len()];
    for (i, &u) in back.iter().enumerate() {
        if rsg.state(u) != NodeState::Unfrozen {
            return Err(Error::InvalidRsg(format!("core node {u} is frozen")));
        }
        match rsg.partner(u).map(|p| local[p]) {
            Some(j) if j != usize::MAX => partner[i] = Some(j),
            _ => return Err(Error::InvalidRsg(format!("core node {u} lost its partner"))),
        }
    }
    let core_rsg =
        ReducedSolutionGraph::from_parts(sub, partner, vec![NodeState::Unfrozen; back.len()])?;
    Ok(CoreCount { count: count_assignments(&core_rsg)?, node_count: n_total })
}

/// Exact count of consistent assignments: cycle simplification, then the
/// weighted pair-variable counter.
pub fn count_assignments(rsg: &ReducedSolutionGraph) -> Result<BigUint> {
    let simplified = cycle_simplification(rsg)?;
    let csp = PairCsp::from_rsg(&simplified.rsg);
    let mut budget = BRANCH_BUDGET;
    csp.count(&mut budget)
}

/// Maximum number of branching decisions per count.
pub const BRANCH_BUDGET: usize = 1 << 20;

/// Components at or below this many variables are summed exhaustively.
const ENUMERATE_MAX: usize = 10;

type Factor = [[BigUint; 2]; 2];

fn transpose(f: &Factor) -> Factor {
    [[f[0][0].clone(), f[1][0].clone()], [f[0][1].clone(), f[1][1].clone()]]
}

/// Weighted binary constraint system over pair variables: the count is
/// `sum over x of prod unary[v][x_v] * prod factor[u][v][x_u][x_v]`.
#[derive(Debug, Clone)]
struct PairCsp {
    unary: Vec<[BigUint; 2]>,
    /// `adj[u][v][a][b]` is the factor value at `x_u = a`, `x_v = b`.
    adj: Vec<BTreeMap<usize, Factor>>,
    alive: Vec<bool>,
}

impl PairCsp {
    /// Variable per unfrozen double edge; value 1 means its smaller end is
    /// covered.
    fn from_rsg(rsg: &ReducedSolutionGraph) -> Self {
        let n = rsg.node_count();
        let mut var_of = vec![usize::MAX; n];
        let mut low_end = Vec::new();
        for (a, b) in rsg.double_edges() {
            if rsg.state(a) == NodeState::Unfrozen && rsg.state(b) == NodeState::Unfrozen {
                var_of[a] = low_end.len();
                var_of[b] = low_end.len();
                low_end.push(a);
            }
        }
        let k = low_end.len();
        let mut csp = PairCsp {
            unary: vec![[BigUint::one(), BigUint::one()]; k],
            adj: vec![BTreeMap::new(); k],
            alive: vec![true; k],
        };
        for &(u, w) in rsg.host().edges() {
            let (p, q) = (var_of[u], var_of[w]);
            if p == usize::MAX || q == usize::MAX || p == q {
                continue;
            }
            // node u is covered iff x_p == 1 when u is the low end, x_p == 0 otherwise
            let cov = |node: usize, var: usize, x: usize| (x == 1) == (low_end[var] == node);
            let mut f: Factor = Default::default();
            for (a, row) in f.iter_mut().enumerate() {
                for (b, cell) in row.iter_mut().enumerate() {
                    *cell = BigUint::from((cov(u, p, a) || cov(w, q, b)) as u32);
                }
            }
            csp.multiply_factor(p, q, f);
        }
        csp
    }

    fn multiply_factor(&mut self, p: usize, q: usize, f: Factor) {
        let t = transpose(&f);
        match self.adj[p].get_mut(&q) {
            Some(g) => {
                for a in 0..2 {
                    for b in 0..2 {
                        g[a][b] *= &f[a][b];
                    }
                }
                let h = self.adj[q].get_mut(&p).expect("symmetric factor");
                for a in 0..2 {
                    for b in 0..2 {
                        h[a][b] *= &t[a][b];
                    }
                }
            }
            None => {
                self.adj[p].insert(q, f);
                self.adj[q].insert(p, t);
            }
        }
    }

    fn detach(&mut self, v: usize) -> BTreeMap<usize, Factor> {
        let nbrs = std::mem::take(&mut self.adj[v]);
        for &u in nbrs.keys() {
            self.adj[u].remove(&v);
        }
        self.alive[v] = false;
        nbrs
    }

    /// Fixes `x_v = x`, folding its factors into the neighbors' unary weights.
    fn condition(&mut self, v: usize, x: usize, queue: &mut VecDeque<usize>) -> BigUint {
        let w = self.unary[v][x].clone();
        for (u, f) in self.detach(v) {
            for b in 0..2 {
                self.unary[u][b] *= &f[x][b];
            }
            queue.push_back(u);
        }
        w
    }

    /// Eliminates determined variables and variables of degree <= 2.
    /// Returns the accumulated scale factor.
    fn reduce(&mut self, queue: &mut VecDeque<usize>) -> BigUint {
        let mut scale = BigUint::one();
        while let Some(v) = queue.pop_front() {
            if !self.alive[v] || scale.is_zero() {
                continue;
            }
            let [w0, w1] = &self.unary[v];
            match (w0.is_zero(), w1.is_zero()) {
                (true, true) => {
                    self.detach(v);
                    scale = BigUint::zero();
                    continue;
                }
                (true, false) => {
                    scale *= self.condition(v, 1, queue);
                    continue;
                }
                (false, true) => {
                    scale *= self.condition(v, 0, queue);
                    continue;
                }
                (false, false) => {}
            }
            match self.adj[v].len() {
                0 => {
                    scale *= &self.unary[v][0] + &self.unary[v][1];
                    self.alive[v] = false;
                }
                1 => {
                    let wv = self.unary[v].clone();
                    let (u, f) = self.detach(v).into_iter().next().unwrap();
                    // f is oriented from v: f[b][a] with x_v = b, x_u = a
                    for a in 0..2 {
                        let s = &f[0][a] * &wv[0] + &f[1][a] * &wv[1];
                        self.unary[u][a] *= s;
                    }
                    queue.push_back(u);
                }
                2 => {
                    let wv = self.unary[v].clone();
                    let mut it = self.detach(v).into_iter();
                    let (u, fu) = it.next().unwrap();
                    let (x, fx) = it.next().unwrap();
                    let mut g: Factor = Default::default();
                    for a in 0..2 {
                        for c in 0..2 {
                            g[a][c] = (0..2).fold(BigUint::zero(), |acc, b| {
                                acc + &fu[b][a] * &wv[b] * &fx[b][c]
                            });
                        }
                    }
                    self.multiply_factor(u, x, g);
                    queue.push_back(u);
                    queue.push_back(x);
                }
                _ => {}
            }
        }
        scale
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let k = self.alive.len();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for s in 0..k {
            if !self.alive[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in self.adj[v].keys() {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn extract(&self, vars: &[usize]) -> PairCsp {
        let mut local = BTreeMap::new();
        for (i, &v) in vars.iter().enumerate() {
            local.insert(v, i);
        }
        let adj = vars
            .iter()
            .map(|&v| self.adj[v].iter().map(|(u, f)| (local[u], f.clone())).collect())
            .collect();
        PairCsp {
            unary: vars.iter().map(|&v| self.unary[v].clone()).collect(),
            adj,
            alive: vec![true; vars.len()],
        }
    }

    fn enumerate(&self) -> BigUint {
        let k = self.alive.len();
        let mut total = BigUint::zero();
        for mask in 0u32..(1 << k) {
            let bit = |v: usize| (mask >> v & 1) as usize;
            let mut term = BigUint::one();
            for v in 0..k {
                term *= &self.unary[v][bit(v)];
                for (&u, f) in &self.adj[v] {
                    if u > v {
                        term *= &f[bit(v)][bit(u)];
                    }
                }
                if term.is_zero() {
                    break;
                }
            }
            total += term;
        }
        total
    }

    fn count(mut self, budget: &mut usize) -> Result<BigUint> {
        let mut queue: VecDeque<usize> = (0..self.alive.len()).collect();
        let mut total = self.reduce(&mut queue);
        if total.is_zero() {
            return Ok(total);
        }
        for comp in self.components() {
            let sub = self.extract(&comp);
            let c = if comp.len() <= ENUMERATE_MAX {
                sub.enumerate()
            } else {
                sub.branch(budget)?
            };
            total *= c;
            if total.is_zero() {
                break;
            }
        }
        Ok(total)
    }

    /// Splits on the highest-degree variable (lowest index on ties).
    fn branch(self, budget: &mut usize) -> Result<BigUint> {
        if *budget == 0 {
            return Err(Error::CountIntractable { variables: self.alive.len() });
        }
        *budget -= 1;
        let v = (0..self.alive.len())
            .max_by_key(|&v| (self.adj[v].len(), std::cmp::Reverse(v)))
            .expect("non-empty component");
        let mut total = BigUint::zero();
        for x in 0..2 {
            let mut sub = self.clone();
            let mut queue = VecDeque::new();
            let w = sub.condition(v, x, &mut queue);
            if w.is_zero() {
                continue;
            }
            total += w * sub.count(budget)?;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_bipartition;
    use crate::matching::Matching;
    use crate::rsg::{build_rsg_bipartite, consistent_assignments};

    fn bip(g: &Graph) -> ReducedSolutionGraph {
        build_rsg_bipartite(g, &check_bipartition(g).unwrap()).unwrap()
    }

    fn hexagon() -> ReducedSolutionGraph {
        let m = Matching::from_pairs(6, [(0, 1), (2, 3), (4, 5)]);
        ReducedSolutionGraph::from_matching(Graph::cycle(6), &m).unwrap()
    }

    #[test]
    fn p3_core_is_empty() {
        assert!(unfrozen_core(&bip(&Graph::path(3))).is_empty());
    }

    #[test]
    fn c4_unfrozen_subgraph_is_its_own_core() {
        let rsg = bip(&Graph::cycle(4));
        let core = unfrozen_core(&rsg);
        assert_eq!(core.nodes, vec![0, 1, 2, 3]);
        assert_eq!(core.edges.len(), 4);
        assert_eq!(count_core_solutions(&rsg, &core, 4).unwrap().count, BigUint::from(2u32));
    }

    #[test]
    fn hexagon_merges_to_one_double_edge() {
        let s = cycle_simplification(&hexagon()).unwrap();
        assert_eq!(s.merged_node_count(), 2);
        assert_eq!(s.rsg.host().edges(), &[(0, 1)]);
        assert_eq!(s.rsg.edge_kinds(), vec![EdgeKind::Double]);
        assert_eq!(s.merge_map, vec![0, 1, 0, 1, 0, 1]);
        let before = consistent_assignments(&hexagon(), 100).unwrap();
        let after = consistent_assignments(&s.rsg, 100).unwrap();
        assert_eq!(before.len(), 2);
        assert_eq!(after.len(), 2);
        for a in &after {
            assert!(s.expand(a).is_consistent_with(&hexagon()));
        }
        assert!(unfrozen_core(&s.rsg).is_empty());
    }

    #[test]
    fn tree_simplification_is_identity() {
        let rsg = bip(&Graph::path(4));
        let s = cycle_simplification(&rsg).unwrap();
        assert_eq!(s.merge_map, vec![0, 1, 2, 3]);
        assert_eq!(s.rsg, rsg);
    }

    #[test]
    fn small_counts() {
        let r = count_solutions(&bip(&Graph::path(2))).unwrap();
        assert_eq!(r.solution_count, BigUint::from(2u32));
        assert_eq!(r.entropy::<f64>(), 0.5);
        let r = count_solutions(&bip(&Graph::cycle(4))).unwrap();
        assert_eq!(r.solution_count, BigUint::from(2u32));
        assert_eq!(r.entropy::<f64>(), 0.25);
        let r = count_solutions(&bip(&Graph::path(3))).unwrap();
        assert_eq!(r.solution_count, BigUint::one());
        assert_eq!(r.core_count, BigUint::one());
        assert_eq!(r.core_entropy::<f64>(), 0.0);
    }

    #[test]
    fn hexagon_core_count() {
        let rsg = hexagon();
        let core = unfrozen_core(&rsg);
        assert_eq!(core.len(), 6);
        assert_eq!(count_core_solutions(&rsg, &core, 6).unwrap().count, BigUint::from(2u32));
    }

    #[test]
    fn diamond_of_implications() {
        // pairs a=(0,1) b=(2,3) c=(4,5) d=(6,7); X1 = even ids
        // singles a1-b2, a1-c2, b1-d2, c1-d2 -> 6 covers
        let g = Graph::from_edges(
            8,
            [(0, 1), (2, 3), (4, 5), (6, 7), (0, 3), (0, 5), (2, 7), (4, 7)],
        )
        .unwrap();
        let rsg = bip(&g);
        assert_eq!(count_solutions(&rsg).unwrap().solution_count, BigUint::from(6u32));
    }

    #[test]
    fn disjoint_edges_multiply() {
        let g = Graph::from_edges(40, (0..20).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let r = count_solutions(&bip(&g)).unwrap();
        assert_eq!(r.solution_count, BigUint::one() << 20);
        assert!((r.entropy::<f64>() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn wide_ladder_needs_branching() {
        // grid 2 x 14 has treewidth 2; a 3 x 8 grid forces the branch path
        let (rows, cols) = (4usize, 6usize);
        let id = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < rows {
                    edges.push((id(r, c), id(r + 1, c)));
                }
            }
        }
        let g = Graph::from_edges(rows * cols, edges).unwrap();
        let rsg = bip(&g);
        let direct = consistent_assignments(&rsg, 1 << 20).unwrap().len();
        assert_eq!(count_assignments(&rsg).unwrap(), BigUint::from(direct));
    }

    #[test]
    fn log2_of_large_numbers() {
        assert_eq!(log2_big(&BigUint::from(1024u32)), 10.0);
        let big = BigUint::one() << 600;
        assert!((log2_big(&big) - 600.0).abs() < 1e-12);
        let big3 = BigUint::from(3u32) << 500;
        assert!((log2_big(&big3) - (500.0 + 3f64.log2())).abs() < 1e-12);
    }

    #[test]
    fn unpropagated_input_is_rejected() {
        let m = Matching::from_pairs(3, [(0, 1)]);
        let mut rsg = ReducedSolutionGraph::from_matching(Graph::path(3), &m).unwrap();
        assert!(count_solutions(&rsg).is_err());
        rsg = crate::rsg::freezing_influence(&rsg).unwrap();
        // node 2 is unfrozen without a partner
        assert!(count_solutions(&rsg).is_err());
    }
}
