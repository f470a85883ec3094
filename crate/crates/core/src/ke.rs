//! Growing a König–Egerváry subgraph of an arbitrary graph.
//!
//! A bipartite seed is cut out along a large matching, then the remaining
//! edges are offered one at a time. Each edge is accepted only when the
//! minimum cover size of the accepted subgraph stays equal to the seed's
//! matching size.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{check_bipartition, BipartitePartition, Graph, Side};
use crate::matching::greedy_augmenting_matching;
use crate::rsg::{
    any_consistent_assignment, build_rsg_bipartite, odd_cycle_breaking_counted, NodeState,
    ReducedSolutionGraph,
};

/// What [`KeGrowthState::grow_step`] did with an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    /// One end is a covered backbone; nothing changes.
    Direct,
    /// Both ends are uncovered backbones; the edge would raise the cover size.
    Discarded,
    /// Uncovered backbone meets an unfrozen node, which becomes covered.
    FrozeEnd,
    /// Two unfrozen ends; joined by a single edge and re-probed. Carries the
    /// number of nodes frozen by the probing.
    Probed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// Increasing `(min id, max id)`.
    #[default]
    Lexicographic,
    /// Uniform shuffle from a seeded ChaCha8 stream.
    Shuffled(u64),
}

#[derive(Debug, Clone)]
pub struct KeGrowthState {
    host: Graph,
    sides: BipartitePartition,
    rsg: ReducedSolutionGraph,
    seed_cover: usize,
    discarded: Vec<(usize, usize)>,
    /// Unexamined edges, in the order they will be offered.
    pending: Vec<(usize, usize)>,
    contractions: usize,
}

/// Seeds the growth: large matching, side split, crossing edges accepted.
///
/// A bipartite input keeps its own two-coloring, so the seed is the whole
/// graph. Otherwise matched pairs are oriented in increasing order of their
/// smaller end, each way round that puts more already-placed neighbors on
/// the opposite side (smaller end to X1 on ties); unmatched nodes go to X1.
pub fn bipartite_seed(g: &Graph) -> Result<KeGrowthState> {
    let sides = match check_bipartition(g) {
        Ok(part) => part,
        Err(_) => split_along_matching(g),
    };
    let (accepted, pending): (Vec<_>, Vec<_>) = g
        .edges()
        .iter()
        .partition(|&&(u, v)| sides.side_of(u) != sides.side_of(v));
    let seed = Graph::from_edges(g.node_count(), accepted)?;
    let rsg = build_rsg_bipartite(&seed, &sides)?;
    Ok(KeGrowthState {
        host: g.clone(),
        sides,
        seed_cover: rsg.min_cover_size(),
        rsg,
        discarded: Vec::new(),
        pending,
        contractions: 0,
    })
}

fn split_along_matching(g: &Graph) -> BipartitePartition {
    let m = greedy_augmenting_matching(g);
    let mut side: Vec<Option<Side>> = vec![None; g.node_count()];
    let crossing = |side: &[Option<Side>], u: usize, s: Side| {
        g.neighbors(u).iter().filter(|&&w| side[w] == Some(s.opposite())).count()
    };
    for &(a, b) in m.pairs() {
        let keep = crossing(&side, a, Side::X1) + crossing(&side, b, Side::X2);
        let flip = crossing(&side, a, Side::X2) + crossing(&side, b, Side::X1);
        let (sa, sb) = if flip > keep { (Side::X2, Side::X1) } else { (Side::X1, Side::X2) };
        side[a] = Some(sa);
        side[b] = Some(sb);
    }
    BipartitePartition::from_sides(side.into_iter().map(|s| s.unwrap_or(Side::X1)).collect())
}

impl KeGrowthState {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Side split used for the seed.
    pub fn sides(&self) -> &BipartitePartition {
        &self.sides
    }

    pub fn rsg(&self) -> &ReducedSolutionGraph {
        &self.rsg
    }

    /// The accepted subgraph on all host nodes.
    pub fn subgraph(&self) -> &Graph {
        self.rsg.host()
    }

    pub fn accepted(&self) -> &[(usize, usize)] {
        self.rsg.host().edges()
    }

    pub fn discarded(&self) -> &[(usize, usize)] {
        &self.discarded
    }

    pub fn pending(&self) -> &[(usize, usize)] {
        &self.pending
    }

    /// Matching size of the seed, which every step preserves as the cover size.
    pub fn seed_cover_size(&self) -> usize {
        self.seed_cover
    }

    /// Nodes frozen by probing after joining two unfrozen ends.
    pub fn contractions(&self) -> usize {
        self.contractions
    }

    /// Reorders the pending edges.
    pub fn order_pending(&mut self, order: EdgeOrder) {
        self.pending.sort_unstable();
        if let EdgeOrder::Shuffled(seed) = order {
            self.pending.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
    }

    /// Offers one pending edge to the subgraph.
    pub fn grow_step(&mut self, u: usize, v: usize) -> Result<StepOutcome> {
        let e = (u.min(v), u.max(v));
        let pos = self
            .pending
            .iter()
            .position(|&p| p == e)
            .ok_or(Error::NotPending(e.0, e.1))?;
        self.pending.remove(pos);
        self.apply(e)
    }

    fn apply(&mut self, (u, v): (usize, usize)) -> Result<StepOutcome> {
        use NodeState::*;
        let outcome = match (self.rsg.state(u), self.rsg.state(v)) {
            (CoveredBackbone, _) | (_, CoveredBackbone) => {
                self.rsg.add_single_edge(u, v)?;
                StepOutcome::Direct
            }
            (UncoveredBackbone, UncoveredBackbone) => {
                self.discarded.push((u, v));
                return Ok(StepOutcome::Discarded);
            }
            (UncoveredBackbone, Unfrozen) | (Unfrozen, UncoveredBackbone) => {
                let w = if self.rsg.state(u) == Unfrozen { u } else { v };
                self.rsg.add_single_edge(u, v)?;
                self.rsg.freeze(w, true)?;
                StepOutcome::FrozeEnd
            }
            (Unfrozen, Unfrozen) => {
                self.rsg.add_single_edge(u, v)?;
                let (next, frozen) = odd_cycle_breaking_counted(&self.rsg)?;
                self.rsg = next;
                self.contractions += frozen;
                StepOutcome::Probed(frozen)
            }
        };
        if self.rsg.min_cover_size() != self.seed_cover {
            return Err(Error::InvalidRsg(format!(
                "cover size moved from {} to {} after edge ({u}, {v})",
                self.seed_cover,
                self.rsg.min_cover_size()
            )));
        }
        Ok(outcome)
    }

    /// Offers every pending edge in the current order.
    pub fn grow_remaining(&mut self) -> Result<()> {
        let pending = std::mem::take(&mut self.pending);
        for e in pending {
            self.apply(e)?;
        }
        Ok(())
    }

    /// Checks König–Egerváry equality of the accepted subgraph: its double
    /// edges are a matching and some consistent assignment covers every
    /// accepted edge with as many nodes.
    pub fn certificate(&self) -> Result<KeCertificate> {
        let matching = self.rsg.double_edges().count();
        let cover = any_consistent_assignment(&self.rsg)?;
        if !cover.is_cover_of(self.subgraph()) || cover.size() != matching {
            return Err(Error::InvalidRsg(format!(
                "no König–Egerváry certificate: matching {matching}, cover {}",
                cover.size()
            )));
        }
        Ok(KeCertificate { matching, cover: cover.size(), cover_nodes: cover.covered_nodes() })
    }
}

/// Matching and cover of equal size in the accepted subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeCertificate {
    pub matching: usize,
    pub cover: usize,
    pub cover_nodes: Vec<usize>,
}

impl fmt::Display for KeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ke_ok matching={} cover={}", self.matching, self.cover)
    }
}

/// Seeds, then offers every remaining edge in `order`.
pub fn grow_all(g: &Graph, order: EdgeOrder) -> Result<KeGrowthState> {
    let mut state = bipartite_seed(g)?;
    state.order_pending(order);
    state.grow_remaining()?;
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_loses_one_edge() {
        let g = Graph::cycle(3);
        let mut s = bipartite_seed(&g).unwrap();
        assert_eq!(s.accepted(), &[(0, 1), (1, 2)]);
        assert_eq!(s.pending(), &[(0, 2)]);
        assert_eq!(s.grow_step(2, 0).unwrap(), StepOutcome::Discarded);
        assert_eq!(s.discarded(), &[(0, 2)]);
        assert_eq!(s.certificate().unwrap().to_string(), "ke_ok matching=1 cover=1");
    }

    #[test]
    fn five_cycle_keeps_a_path() {
        let s = grow_all(&Graph::cycle(5), EdgeOrder::Lexicographic).unwrap();
        assert_eq!(s.subgraph(), &Graph::path(5));
        assert_eq!(s.discarded(), &[(0, 4)]);
        assert_eq!(s.certificate().unwrap().matching, 2);
    }

    #[test]
    fn chorded_square_accepts_by_probing() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let mut s = bipartite_seed(&g).unwrap();
        assert_eq!(s.pending(), &[(0, 2)]);
        let out = s.grow_step(0, 2).unwrap();
        assert!(matches!(out, StepOutcome::Probed(k) if k > 0));
        assert_eq!(s.accepted().len(), 5);
        let cert = s.certificate().unwrap();
        assert_eq!((cert.matching, cert.cover), (2, 2));
        assert_eq!(cert.cover_nodes, vec![0, 2]);
    }

    #[test]
    fn bipartite_input_is_unchanged() {
        let g = Graph::complete_bipartite(3, 4);
        let s = grow_all(&g, EdgeOrder::Shuffled(3)).unwrap();
        assert_eq!(s.subgraph(), &g);
        assert!(s.discarded().is_empty() && s.pending().is_empty());
    }

    #[test]
    fn edge_must_be_pending() {
        let mut s = bipartite_seed(&Graph::cycle(3)).unwrap();
        assert!(matches!(s.grow_step(0, 1), Err(Error::NotPending(0, 1))));
    }

    #[test]
    fn shuffled_order_is_reproducible() {
        let g = Graph::from_edges(
            7,
            [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6), (1, 5), (0, 6)],
        )
        .unwrap();
        let a = grow_all(&g, EdgeOrder::Shuffled(9)).unwrap();
        let b = grow_all(&g, EdgeOrder::Shuffled(9)).unwrap();
        assert_eq!(a.accepted(), b.accepted());
        assert_eq!(a.discarded(), b.discarded());
        a.certificate().unwrap();
    }
}
