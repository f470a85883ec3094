//! Reduced solution graphs: a compact encoding of every minimum vertex cover
//! through node states (backbones / unfrozen) and double (mutually
//! determining) versus single edges.
//!
//! The constraint system encoded by an RSG is:
//!
//! * a backbone takes its frozen value,
//! * a double edge has exactly one covered end,
//! * a single edge has at least one covered end.
//!
//! Nodes outside the double edges carry no cover budget, so for a
//! König–Egerváry host with a maximum matching as double edges, the
//! satisfying assignments are exactly the minimum vertex covers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{check_bipartition, leaf_removal, BipartitePartition, Graph};
use crate::matching::{max_bipartite_matching, verify_matching, Matching};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeState {
    Unfrozen,
    /// Uncovered in every minimum cover (positive backbone).
    UncoveredBackbone,
    /// Covered in every minimum cover (negative backbone).
    CoveredBackbone,
}

impl NodeState {
    pub fn is_frozen(self) -> bool {
        self != NodeState::Unfrozen
    }

    /// Single-letter code of the text format: `U`, `P` or `N`.
    pub fn code(self) -> char {
        match self {
            NodeState::Unfrozen => 'U',
            NodeState::UncoveredBackbone => 'P',
            NodeState::CoveredBackbone => 'N',
        }
    }

    pub fn from_code(c: &str) -> Option<Self> {
        match c {
            "U" => Some(NodeState::Unfrozen),
            "P" => Some(NodeState::UncoveredBackbone),
            "N" => Some(NodeState::CoveredBackbone),
            _ => None,
        }
    }

    fn covered(covered: bool) -> Self {
        if covered {
            NodeState::CoveredBackbone
        } else {
            NodeState::UncoveredBackbone
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Single,
    Double,
}

impl EdgeKind {
    pub fn code(self) -> char {
        match self {
            EdgeKind::Single => 'S',
            EdgeKind::Double => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSolutionGraph {
    host: Graph,
    state: Vec<NodeState>,
    /// Double-edge partner; double edges form a matching of `host`.
    partner: Vec<Option<usize>>,
    min_cover_size: usize,
}

impl ReducedSolutionGraph {
    /// All nodes unfrozen, double edges = `matching`.
    pub fn from_matching(host: Graph, matching: &Matching) -> Result<Self> {
        if !verify_matching(&host, matching) {
            return Err(Error::InvalidRsg("double edges do not form a matching of the host".into()));
        }
        let n = host.node_count();
        Self::from_parts(host, matching.partners().to_vec(), vec![NodeState::Unfrozen; n])
    }

    /// Raw constructor; checks structural consistency but does not propagate.
    pub fn from_parts(
        host: Graph,
        partner: Vec<Option<usize>>,
        state: Vec<NodeState>,
    ) -> Result<Self> {
        let n = host.node_count();
        if partner.len() != n || state.len() != n {
            return Err(Error::InvalidRsg("per-node tables do not match node count".into()));
        }
        for (u, p) in partner.iter().enumerate() {
            if let Some(v) = *p {
                if v >= n || partner[v] != Some(u) || !host.has_edge(u, v) {
                    return Err(Error::InvalidRsg(format!("bad double edge at node {u}")));
                }
            }
        }
        let mut rsg = ReducedSolutionGraph { host, state, partner, min_cover_size: 0 };
        rsg.recompute_min_cover();
        Ok(rsg)
    }

    fn recompute_min_cover(&mut self) {
        let doubles = self.partner.iter().filter(|p| p.is_some()).count() / 2;
        let lone_covered = (0..self.node_count())
            .filter(|&u| self.partner[u].is_none() && self.state[u] == NodeState::CoveredBackbone)
            .count();
        self.min_cover_size = doubles + lone_covered;
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn node_count(&self) -> usize {
        self.host.node_count()
    }

    #[inline]
    pub fn state(&self, u: usize) -> NodeState {
        self.state[u]
    }

    pub fn states(&self) -> &[NodeState] {
        &self.state
    }

    #[inline]
    pub fn partner(&self, u: usize) -> Option<usize> {
        self.partner[u]
    }

    pub fn partners(&self) -> &[Option<usize>] {
        &self.partner
    }

    /// Number of covered nodes in every consistent assignment.
    pub fn min_cover_size(&self) -> usize {
        self.min_cover_size
    }

    pub fn edge_kind(&self, u: usize, v: usize) -> Option<EdgeKind> {
        if !self.host.has_edge(u, v) {
            None
        } else if self.partner[u] == Some(v) {
            Some(EdgeKind::Double)
        } else {
            Some(EdgeKind::Single)
        }
    }

    /// Kinds aligned with `host().edges()`.
    pub fn edge_kinds(&self) -> Vec<EdgeKind> {
        self.host
            .edges()
            .iter()
            .map(|&(u, v)| {
                if self.partner[u] == Some(v) {
                    EdgeKind::Double
                } else {
                    EdgeKind::Single
                }
            })
            .collect()
    }

    pub fn double_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter_map(|(u, p)| p.filter(|&v| u < v).map(|v| (u, v)))
    }

    pub fn count_state(&self, s: NodeState) -> usize {
        self.state.iter().filter(|&&x| x == s).count()
    }

    /// Whether the two freezing rules have no premise left to fire.
    pub fn is_propagation_closed(&self) -> bool {
        (0..self.node_count()).all(|u| match self.state[u] {
            NodeState::UncoveredBackbone => self
                .host
                .neighbors(u)
                .iter()
                .all(|&w| self.state[w] == NodeState::CoveredBackbone),
            NodeState::CoveredBackbone => self
                .partner[u]
                .is_none_or(|p| self.state[p] == NodeState::UncoveredBackbone),
            NodeState::Unfrozen => true,
        })
    }

    /// Adds a host edge as a single edge. States are untouched.
    pub(crate) fn add_single_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.host.insert_edge(u, v)?;
        Ok(())
    }

    /// Freezes `u` and propagates. On conflict `self` is left unchanged.
    pub(crate) fn freeze(&mut self, u: usize, covered: bool) -> Result<usize> {
        let mut state = self.state.clone();
        let target = NodeState::covered(covered);
        match state[u] {
            s if s == target => return Ok(0),
            NodeState::Unfrozen => state[u] = target,
            _ => return Err(Error::PropagationConflict { node: u }),
        }
        let fired = propagate(&self.host, &self.partner, &mut state, [u])? + 1;
        self.state = state;
        self.recompute_min_cover();
        Ok(fired)
    }
}

/// Unit propagation of the two freezing rules from `seeds`, in increasing
/// node id. Returns the number of freezes.
fn propagate(
    host: &Graph,
    partner: &[Option<usize>],
    state: &mut [NodeState],
    seeds: impl IntoIterator<Item = usize>,
) -> Result<usize> {
    let mut heap: BinaryHeap<Reverse<usize>> = seeds.into_iter().map(Reverse).collect();
    let mut fired = 0;
    while let Some(Reverse(x)) = heap.pop() {
        match state[x] {
            NodeState::UncoveredBackbone => {
                for &w in host.neighbors(x) {
                    match state[w] {
                        NodeState::UncoveredBackbone => {
                            return Err(Error::PropagationConflict { node: w })
                        }
                        NodeState::Unfrozen => {
                            state[w] = NodeState::CoveredBackbone;
                            fired += 1;
                            heap.push(Reverse(w));
                        }
                        NodeState::CoveredBackbone => {}
                    }
                }
            }
            NodeState::CoveredBackbone => {
                if let Some(p) = partner[x] {
                    match state[p] {
                        NodeState::CoveredBackbone => {
                            return Err(Error::PropagationConflict { node: p })
                        }
                        NodeState::Unfrozen => {
                            state[p] = NodeState::UncoveredBackbone;
                            fired += 1;
                            heap.push(Reverse(p));
                        }
                        NodeState::UncoveredBackbone => {}
                    }
                }
            }
            NodeState::Unfrozen => {}
        }
    }
    Ok(fired)
}

/// Fixpoint of: neighbors of an uncovered backbone become covered; the
/// double partner of a covered backbone becomes uncovered.
pub fn freezing_influence(rsg: &ReducedSolutionGraph) -> Result<ReducedSolutionGraph> {
    let mut out = rsg.clone();
    let seeds: Vec<usize> = (0..out.node_count()).filter(|&u| out.state[u].is_frozen()).collect();
    propagate(&out.host, &out.partner, &mut out.state, seeds)?;
    out.recompute_min_cover();
    Ok(out)
}

fn mark_unmatched_uncovered(rsg: &mut ReducedSolutionGraph) {
    for u in 0..rsg.node_count() {
        if rsg.partner[u].is_none() {
            rsg.state[u] = NodeState::UncoveredBackbone;
        }
    }
}

/// RSG of a bipartite graph: maximum matching as double edges, unmatched
/// nodes uncovered, then freezing influence to its fixpoint.
pub fn build_rsg_bipartite(g: &Graph, part: &BipartitePartition) -> Result<ReducedSolutionGraph> {
    let matching = max_bipartite_matching(g, part)?;
    let mut rsg = ReducedSolutionGraph::from_matching(g.clone(), &matching)?;
    mark_unmatched_uncovered(&mut rsg);
    freezing_influence(&rsg).map_err(|e| match e {
        Error::PropagationConflict { node } => Error::InvalidRsg(format!(
            "propagation conflict at node {node} on bipartite input (matching not maximum?)"
        )),
        other => other,
    })
}

/// Failed-hypothesis propagation: an unfrozen node whose hypothesized value
/// propagates into a contradiction is frozen to the other value, followed by
/// freezing influence; repeated until nothing freezes.
pub fn odd_cycle_breaking(rsg: &ReducedSolutionGraph) -> Result<ReducedSolutionGraph> {
    Ok(odd_cycle_breaking_counted(rsg)?.0)
}

/// As [`odd_cycle_breaking`], also returning the number of hypothesis-driven
/// freezes.
pub fn odd_cycle_breaking_counted(rsg: &ReducedSolutionGraph) -> Result<(ReducedSolutionGraph, usize)> {
    let mut out = freezing_influence(rsg)?;
    let mut prober = Prober::new(out.node_count());
    let mut freezes = 0;
    loop {
        let mut changed = false;
        for u in 0..out.node_count() {
            if out.state[u] != NodeState::Unfrozen {
                continue;
            }
            let uncovered_fails = prober.fails(&out, u, NodeState::UncoveredBackbone);
            let covered_fails = prober.fails(&out, u, NodeState::CoveredBackbone);
            match (uncovered_fails, covered_fails) {
                (true, true) => return Err(Error::BothHypothesesFail { node: u }),
                (true, false) => {
                    out.freeze(u, true)?;
                }
                (false, true) => {
                    out.freeze(u, false)?;
                }
                (false, false) => continue,
            }
            freezes += 1;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    Ok((out, freezes))
}

/// Trial propagation on a scratch overlay with an undo trail.
struct Prober {
    scratch: Vec<Option<NodeState>>,
    trail: Vec<usize>,
    stack: Vec<usize>,
}

impl Prober {
    fn new(n: usize) -> Self {
        Prober { scratch: vec![None; n], trail: Vec::new(), stack: Vec::new() }
    }

    fn fails(&mut self, rsg: &ReducedSolutionGraph, u: usize, hypothesis: NodeState) -> bool {
        let conflict = self.run(rsg, u, hypothesis);
        for &v in &self.trail {
            self.scratch[v] = None;
        }
        self.trail.clear();
        self.stack.clear();
        conflict
    }

    fn get(&self, rsg: &ReducedSolutionGraph, v: usize) -> NodeState {
        self.scratch[v].unwrap_or(rsg.state[v])
    }

    /// Returns true on contradiction.
    fn assign(&mut self, rsg: &ReducedSolutionGraph, v: usize, s: NodeState) -> bool {
        let cur = self.get(rsg, v);
        if cur == s {
            return false;
        }
        if cur != NodeState::Unfrozen {
            return true;
        }
        self.scratch[v] = Some(s);
        self.trail.push(v);
        self.stack.push(v);
        false
    }

    fn run(&mut self, rsg: &ReducedSolutionGraph, u: usize, hypothesis: NodeState) -> bool {
        if self.assign(rsg, u, hypothesis) {
            return true;
        }
        while let Some(x) = self.stack.pop() {
            match self.get(rsg, x) {
                NodeState::UncoveredBackbone => {
                    for &w in rsg.host.neighbors(x) {
                        if self.assign(rsg, w, NodeState::CoveredBackbone) {
                            return true;
                        }
                    }
                }
                NodeState::CoveredBackbone => {
                    if let Some(p) = rsg.partner[x] {
                        if self.assign(rsg, p, NodeState::UncoveredBackbone) {
                            return true;
                        }
                    }
                }
                NodeState::Unfrozen => unreachable!("only frozen nodes are queued"),
            }
        }
        false
    }
}

/// RSG of a graph whose leaf-removal core is bipartite: leaf matchings plus a
/// maximum matching of the core as double edges, unmatched nodes uncovered,
/// freezing influence, then failed-hypothesis propagation to its fixpoint.
pub fn build_rsg_bipartite_core(g: &Graph) -> Result<ReducedSolutionGraph> {
    let peel = leaf_removal(g);
    let (core, back) = g.induced_subgraph(&peel.core_nodes);
    let core_part = check_bipartition(&core)
        .map_err(|cyc| Error::NotBipartiteCore { cycle_len: cyc.nodes.len() })?;
    let core_matching = max_bipartite_matching(&core, &core_part)?;
    let pairs = peel
        .leaf_matchings
        .iter()
        .copied()
        .chain(core_matching.pairs().iter().map(|&(a, b)| (back[a], back[b])));
    let matching = Matching::from_pairs(g.node_count(), pairs);
    let mut rsg = ReducedSolutionGraph::from_matching(g.clone(), &matching)?;
    mark_unmatched_uncovered(&mut rsg);
    let rsg = freezing_influence(&rsg)?;
    odd_cycle_breaking(&rsg)
}

/// Fractions of uncovered backbones, covered backbones and unfrozen nodes.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StateRatios<T> {
    pub q_plus: T,
    pub q_minus: T,
    pub q_zero: T,
}

pub fn state_ratios<T: Scalar>(rsg: &ReducedSolutionGraph) -> StateRatios<T> {
    let n = rsg.node_count();
    StateRatios {
        q_plus: T::ratio(rsg.count_state(NodeState::UncoveredBackbone), n),
        q_minus: T::ratio(rsg.count_state(NodeState::CoveredBackbone), n),
        q_zero: T::ratio(rsg.count_state(NodeState::Unfrozen), n),
    }
}

/// Explicit cover/uncover choice for every node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    pub covered: Vec<bool>,
}

impl Assignment {
    pub fn from_nodes(n: usize, nodes: &[usize]) -> Self {
        let mut covered = vec![false; n];
        for &u in nodes {
            covered[u] = true;
        }
        Assignment { covered }
    }

    pub fn covered_nodes(&self) -> Vec<usize> {
        (0..self.covered.len()).filter(|&u| self.covered[u]).collect()
    }

    pub fn size(&self) -> usize {
        self.covered.iter().filter(|&&c| c).count()
    }

    pub fn is_cover_of(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.covered[u] || self.covered[v])
    }

    pub fn is_consistent_with(&self, rsg: &ReducedSolutionGraph) -> bool {
        self.covered.len() == rsg.node_count()
            && (0..rsg.node_count()).all(|u| match rsg.state[u] {
                NodeState::Unfrozen => true,
                NodeState::UncoveredBackbone => !self.covered[u],
                NodeState::CoveredBackbone => self.covered[u],
            })
            && rsg.host.edges().iter().all(|&(u, v)| {
                if rsg.partner[u] == Some(v) {
                    self.covered[u] != self.covered[v]
                } else {
                    self.covered[u] || self.covered[v]
                }
            })
    }
}

/// Enumerates every assignment consistent with the RSG, in lexicographic
/// order of the covered flags (uncovered first). Errors once more than
/// `limit` assignments exist.
pub fn consistent_assignments(rsg: &ReducedSolutionGraph, limit: usize) -> Result<Vec<Assignment>> {
    let n = rsg.node_count();
    let mut value: Vec<Option<bool>> = rsg
        .state
        .iter()
        .map(|s| match s {
            NodeState::Unfrozen => None,
            NodeState::UncoveredBackbone => Some(false),
            NodeState::CoveredBackbone => Some(true),
        })
        .collect();
    let frozen_ok = rsg.host.edges().iter().all(|&(u, v)| match (value[u], value[v]) {
        (Some(a), Some(b)) => edge_ok(rsg, u, v, a, b),
        _ => true,
    });
    let mut out = Vec::new();
    if !frozen_ok {
        return Ok(out);
    }
    let free: Vec<usize> = (0..n).filter(|&u| value[u].is_none()).collect();
    enumerate(rsg, &free, 0, &mut value, &mut out, limit)?;
    Ok(out)
}

fn edge_ok(rsg: &ReducedSolutionGraph, u: usize, v: usize, a: bool, b: bool) -> bool {
    if rsg.partner[u] == Some(v) {
        a != b
    } else {
        a || b
    }
}

fn enumerate(
    rsg: &ReducedSolutionGraph,
    free: &[usize],
    depth: usize,
    value: &mut [Option<bool>],
    out: &mut Vec<Assignment>,
    limit: usize,
) -> Result<()> {
    if depth == free.len() {
        if out.len() == limit {
            return Err(Error::LimitExceeded { limit });
        }
        out.push(Assignment { covered: value.iter().map(|v| v.unwrap()).collect() });
        return Ok(());
    }
    let u = free[depth];
    for choice in [false, true] {
        let ok = rsg
            .host
            .neighbors(u)
            .iter()
            .all(|&w| value[w].is_none_or(|b| edge_ok(rsg, u, w, choice, b)));
        if ok {
            value[u] = Some(choice);
            enumerate(rsg, free, depth + 1, value, out, limit)?;
            value[u] = None;
        }
    }
    Ok(())
}

/// One consistent assignment, built greedily: each unfrozen node in
/// increasing id is covered (or, failing that, uncovered) and propagated.
/// Succeeds whenever the RSG's states are exact.
pub fn any_consistent_assignment(rsg: &ReducedSolutionGraph) -> Result<Assignment> {
    let mut work = freezing_influence(rsg)?;
    for u in 0..work.node_count() {
        if work.state[u] != NodeState::Unfrozen {
            continue;
        }
        if work.freeze(u, true).is_err() {
            work.freeze(u, false)?;
        }
    }
    let a = Assignment {
        covered: work.state.iter().map(|&s| s == NodeState::CoveredBackbone).collect(),
    };
    if a.is_consistent_with(rsg) {
        Ok(a)
    } else {
        Err(Error::InvalidRsg("greedy assignment violates a constraint".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_bipartition;
    use NodeState::*;

    fn bip(g: &Graph) -> ReducedSolutionGraph {
        build_rsg_bipartite(g, &check_bipartition(g).unwrap()).unwrap()
    }

    fn covers(rsg: &ReducedSolutionGraph) -> Vec<Vec<usize>> {
        let mut c: Vec<Vec<usize>> = consistent_assignments(rsg, 1 << 16)
            .unwrap()
            .iter()
            .map(Assignment::covered_nodes)
            .collect();
        c.sort();
        c
    }

    #[test]
    fn path_three_freezes_everything() {
        // matching (0,1), node 2 unmatched
        let g = Graph::path(3);
        let m = Matching::from_pairs(3, [(0, 1)]);
        let mut rsg = ReducedSolutionGraph::from_matching(g, &m).unwrap();
        rsg.state[2] = UncoveredBackbone;
        let rsg = freezing_influence(&rsg).unwrap();
        assert_eq!(rsg.states(), &[UncoveredBackbone, CoveredBackbone, UncoveredBackbone]);
        assert_eq!(rsg.min_cover_size(), 1);
        assert_eq!(covers(&rsg), vec![vec![1]]);
    }

    #[test]
    fn star_center_is_covered() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let rsg = bip(&g);
        assert_eq!(rsg.state(0), CoveredBackbone);
        assert!((1..4).all(|u| rsg.state(u) == UncoveredBackbone));
    }

    #[test]
    fn perfect_matching_on_c4_stays_unfrozen() {
        let rsg = bip(&Graph::cycle(4));
        assert!(rsg.states().iter().all(|&s| s == Unfrozen));
        assert_eq!(freezing_influence(&rsg).unwrap(), rsg);
        assert_eq!(state_ratios::<f64>(&rsg).q_zero, 1.0);
    }

    #[test]
    fn single_edge_has_two_covers() {
        let rsg = bip(&Graph::path(2));
        assert_eq!(rsg.edge_kinds(), vec![EdgeKind::Double]);
        assert_eq!(covers(&rsg), vec![vec![0], vec![1]]);
        let r = state_ratios::<f64>(&rsg);
        assert_eq!((r.q_plus, r.q_minus, r.q_zero), (0.0, 0.0, 1.0));
    }

    #[test]
    fn p3_ratios() {
        let r = state_ratios::<f64>(&bip(&Graph::path(3)));
        assert_eq!((r.q_plus, r.q_minus, r.q_zero), (2.0 / 3.0, 1.0 / 3.0, 0.0));
    }

    #[test]
    fn conflict_is_reported() {
        let g = Graph::path(2);
        let rsg = ReducedSolutionGraph::from_parts(
            g,
            vec![None, None],
            vec![UncoveredBackbone, UncoveredBackbone],
        )
        .unwrap();
        assert!(matches!(freezing_influence(&rsg), Err(Error::PropagationConflict { .. })));
    }

    #[test]
    fn alternating_hexagon_has_two_assignments() {
        let g = Graph::cycle(6);
        let m = Matching::from_pairs(6, [(0, 1), (2, 3), (4, 5)]);
        let rsg = ReducedSolutionGraph::from_matching(g, &m).unwrap();
        assert_eq!(covers(&rsg), vec![vec![0, 2, 4], vec![1, 3, 5]]);
    }

    #[test]
    fn enumeration_limit() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let rsg = bip(&g);
        assert!(matches!(consistent_assignments(&rsg, 3), Err(Error::LimitExceeded { limit: 3 })));
        assert_eq!(consistent_assignments(&rsg, 4).unwrap().len(), 4);
    }

    fn triangle_with_pendant() -> ReducedSolutionGraph {
        // a=0, b=1, c=2, d=3
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let m = Matching::from_pairs(4, [(3, 0), (1, 2)]);
        ReducedSolutionGraph::from_matching(g, &m).unwrap()
    }

    #[test]
    fn breaking_triangle_with_pendant() {
        let rsg = odd_cycle_breaking(&triangle_with_pendant()).unwrap();
        assert_eq!(rsg.states(), &[CoveredBackbone, Unfrozen, Unfrozen, UncoveredBackbone]);
        assert_eq!(covers(&rsg), vec![vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn bipartite_core_builder_matches_breaking_example() {
        let g = triangle_with_pendant().host().clone();
        let rsg = build_rsg_bipartite_core(&g).unwrap();
        assert_eq!(rsg.states(), &[CoveredBackbone, Unfrozen, Unfrozen, UncoveredBackbone]);
        assert_eq!(covers(&rsg), vec![vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn breaking_pentagon_with_pendant() {
        // C5 on 0..5, pendant 5 on 0
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let m = Matching::from_pairs(6, [(5, 0), (1, 2), (3, 4)]);
        let rsg = ReducedSolutionGraph::from_matching(g, &m).unwrap();
        let rsg = odd_cycle_breaking(&rsg).unwrap();
        assert_eq!(rsg.state(0), CoveredBackbone);
        assert_eq!(rsg.state(5), UncoveredBackbone);
        assert_eq!(covers(&rsg), vec![vec![0, 1, 3], vec![0, 2, 3], vec![0, 2, 4]]);
    }

    #[test]
    fn breaking_is_identity_on_bipartite() {
        let rsg = bip(&Graph::cycle(6));
        assert_eq!(odd_cycle_breaking(&rsg).unwrap(), rsg);
    }

    #[test]
    fn core_graph_rejects_odd_core() {
        assert!(matches!(
            build_rsg_bipartite_core(&Graph::cycle(5)),
            Err(Error::NotBipartiteCore { cycle_len: 5 })
        ));
    }

    #[test]
    fn c4_with_pendant_path() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let rsg = build_rsg_bipartite_core(&g).unwrap();
        assert_eq!(rsg.min_cover_size(), 3);
        for a in consistent_assignments(&rsg, 100).unwrap() {
            assert!(a.is_cover_of(&g));
            assert_eq!(a.size(), 3);
        }
    }

    #[test]
    fn greedy_assignment_is_consistent() {
        let rsg = bip(&Graph::cycle(8));
        let a = any_consistent_assignment(&rsg).unwrap();
        assert!(a.is_consistent_with(&rsg));
        assert_eq!(a.size(), 4);
    }
}
