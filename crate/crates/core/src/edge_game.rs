//! The edge domination game: exact solver, the line-graph cross-check, the
//! handle augmentation of a graph with an open dominating trail, and the
//! lockstep replay of the imagination strategy between the two games.

use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::game::{GameError, GameValue, Player, Solver};
use crate::graph::{line_graph, BitSet, EdgeSet, Graph, GraphError, VertexSet};
use crate::recognizers::Trail;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeGameError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("the trail is not a valid trail of the graph")]
    InvalidTrail,
    #[error("an open trail is required, got a closed one")]
    ClosedTrail,
    #[error("trail endpoints coincide")]
    EqualEndpoints,
    #[error("the trail does not dominate every edge")]
    NotDominating,
}

/// White, blue and red edges of an edge residual graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeColors {
    pub white: EdgeSet,
    pub blue: EdgeSet,
    pub red: EdgeSet,
}

/// A position of the edge game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeResidualState<'g> {
    pub graph: &'g Graph,
    pub dominated: EdgeSet,
    pub mover: Player,
}

impl<'g> EdgeResidualState<'g> {
    pub fn new(graph: &'g Graph, mover: Player) -> Result<Self, GraphError> {
        graph.check_edge_sets()?;
        Ok(EdgeResidualState { graph, dominated: BitSet::EMPTY, mover })
    }

    pub fn with_dominated(graph: &'g Graph, dominated: EdgeSet, mover: Player) -> Result<Self, GraphError> {
        graph.check_edge_sets()?;
        Ok(EdgeResidualState { graph, dominated: dominated.intersection(graph.edge_set()), mover })
    }

    pub fn undominated(&self) -> EdgeSet {
        self.graph.edge_set().difference(self.dominated)
    }

    pub fn is_over(&self) -> bool {
        self.undominated().is_empty()
    }

    pub fn is_legal(&self, e: usize) -> bool {
        e < self.graph.m() && self.graph.edge_closed_neighborhood(e).intersects(self.undominated())
    }

    pub fn legal_moves(&self) -> EdgeSet {
        let white = self.undominated();
        (0..self.graph.m())
            .filter(|&e| self.graph.edge_closed_neighborhood(e).intersects(white))
            .collect()
    }

    pub fn colors(&self) -> EdgeColors {
        let g = self.graph;
        let white = self.undominated();
        let mut blue = BitSet::EMPTY;
        let mut red = BitSet::EMPTY;
        for e in self.dominated.iter() {
            if g.edge_closed_neighborhood(e).intersects(white) {
                blue.insert(e);
            } else {
                red.insert(e);
            }
        }
        EdgeColors { white, blue, red }
    }

    /// Vertices incident with at least one white edge; all others are red.
    pub fn white_vertices(&self) -> VertexSet {
        self.graph.vertices_of_edges(self.undominated())
    }

    pub fn red_vertices(&self) -> VertexSet {
        self.graph.vertex_set().difference(self.white_vertices())
    }

    /// Every blue edge has one white and one red endpoint.
    pub fn blue_edges_well_colored(&self) -> bool {
        let white_v = self.white_vertices();
        self.colors().blue.iter().all(|e| {
            let (u, v) = self.graph.edge(e);
            white_v.contains(u) != white_v.contains(v)
        })
    }

    pub fn apply_move(&self, e: usize) -> Result<EdgeResidualState<'g>, GameError> {
        if !self.is_legal(e) {
            return Err(GameError::IllegalMove(e));
        }
        let next = EdgeResidualState {
            graph: self.graph,
            dominated: self.dominated.union(self.graph.edge_closed_neighborhood(e)),
            mover: self.mover.other(),
        };
        debug_assert!(next.blue_edges_well_colored());
        Ok(next)
    }
}

/// Memoized minimax over dominated edge sets. Works directly from the
/// vertex–edge incidences of the host graph, independently of
/// [`Solver`], so that the two can be compared through the line graph.
pub struct EdgeSolver<'g> {
    graph: &'g Graph,
    /// `reach[e]` = incident edges of both endpoints.
    reach: Vec<u64>,
    full: u64,
    memo: FxHashMap<(u64, Player), u8>,
}

impl<'g> EdgeSolver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self, GraphError> {
        graph.check_edge_sets()?;
        let reach = graph
            .edges()
            .iter()
            .map(|&(u, v)| graph.incident_edges(u).0 | graph.incident_edges(v).0)
            .collect();
        Ok(EdgeSolver { graph, reach, full: graph.edge_set().0, memo: FxHashMap::default() })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn value(&mut self, dominated: u64, mover: Player) -> u32 {
        let dominated = dominated & self.full;
        if dominated == self.full {
            return 0;
        }
        if let Some(&v) = self.memo.get(&(dominated, mover)) {
            return v as u32;
        }
        let undominated = self.full & !dominated;
        let mut seen: Vec<u64> = Vec::new();
        let mut best: Option<u32> = None;
        for e in 0..self.reach.len() {
            let gain = self.reach[e] & undominated;
            if gain == 0 || seen.contains(&gain) {
                continue;
            }
            seen.push(gain);
            let v = 1 + self.value(dominated | gain, mover.other());
            best = Some(match (best, mover) {
                (None, _) => v,
                (Some(b), Player::Dominator) => b.min(v),
                (Some(b), Player::Staller) => b.max(v),
            });
        }
        let best = best.expect("an undominated edge is always playable");
        self.memo.insert((dominated, mover), best as u8);
        best
    }

    pub fn value_of(&mut self, s: &EdgeResidualState<'_>) -> GameValue {
        GameValue::new(self.value(s.dominated.0, s.mover))
    }

    /// Smallest-index legal edge attaining the mover's optimum.
    pub fn optimal_move(&mut self, s: &EdgeResidualState<'_>) -> Result<usize, GameError> {
        let mut best: Option<(usize, u32)> = None;
        for e in s.legal_moves().iter() {
            let child = self.value(s.dominated.0 | self.reach[e], s.mover.other());
            let better = match (best, s.mover) {
                (None, _) => true,
                (Some((_, b)), Player::Dominator) => child < b,
                (Some((_, b)), Player::Staller) => child > b,
            };
            if better {
                best = Some((e, child));
            }
        }
        best.map(|(e, _)| e).ok_or(GameError::NoLegalMove)
    }
}

/// Optimal length of the edge game from the position where `predominated`
/// edges are already dominated.
pub fn edge_game_value(g: &Graph, start: Player, predominated: EdgeSet) -> Result<GameValue, GraphError> {
    let mut s = EdgeSolver::new(g)?;
    Ok(GameValue::new(s.value(predominated.0, start)))
}

/// The same value computed as the vertex game on `L(G)`.
pub fn edge_game_value_via_line_graph(g: &Graph, start: Player) -> Result<GameValue, GraphError> {
    let lg = line_graph(g)?;
    let mut s = Solver::new(&lg.graph);
    Ok(GameValue::new(s.value(0, start)))
}

/// `G` plus two new vertices `v1'`, `vl'` and the handle edges
/// `v1 v1'`, `v1' vl'`, `vl vl'`, with `v1' vl'` predominated.
#[derive(Clone, Debug)]
pub struct AugmentedGraph {
    pub graph: Graph,
    /// The played set `{v1' vl'}` as an edge set of `graph`.
    pub d0: EdgeSet,
    /// `embedding[i]` is the index in `graph` of edge `i` of the original graph.
    pub embedding: Vec<usize>,
    /// Indices in `graph` of `v1 v1'`, `v1' vl'`, `vl vl'`, in that order.
    pub handle_edges: [usize; 3],
    /// `(v1', vl')`.
    pub new_vertices: (usize, usize),
    /// The closed trail `v1 … vl vl' v1' v1`, an edge dominating circuit.
    pub circuit: Trail,
}

impl AugmentedGraph {
    /// Dominated edges at the start of the imagined game, `N[D0]`.
    pub fn initial_dominated(&self) -> EdgeSet {
        self.graph.edge_closed_neighborhood(self.handle_edges[1])
    }

    /// Preimage of an augmented-graph edge, if it comes from the original graph.
    pub fn original_edge(&self, f_edge: usize) -> Option<usize> {
        self.embedding.iter().position(|&x| x == f_edge)
    }
}

pub fn augment_with_handle(g: &Graph, t: &Trail) -> Result<AugmentedGraph, EdgeGameError> {
    if !t.is_valid_in(g) {
        return Err(EdgeGameError::InvalidTrail);
    }
    if t.closed {
        return Err(EdgeGameError::ClosedTrail);
    }
    let (v1, vl) = t.endpoints();
    if v1 == vl {
        return Err(EdgeGameError::EqualEndpoints);
    }
    if !t.is_dominating_in(g) {
        return Err(EdgeGameError::NotDominating);
    }
    let (a, b) = (g.n(), g.n() + 1);
    let mut edges = g.edges().to_vec();
    edges.extend([(v1, a), (a, b), (vl, b)]);
    let f = Graph::from_edges(g.n() + 2, &edges)?;
    f.check_edge_sets()?;
    let embedding: Vec<usize> = g.edges().iter().map(|&(u, v)| f.edge_index(u, v).unwrap()).collect();
    let handle_edges = [
        f.edge_index(v1, a).unwrap(),
        f.edge_index(a, b).unwrap(),
        f.edge_index(vl, b).unwrap(),
    ];
    let mut vertices = t.vertices.clone();
    vertices.extend([b, a, v1]);
    let mut edge_indices: Vec<usize> = t.edge_indices.iter().map(|&e| embedding[e]).collect();
    edge_indices.extend([handle_edges[2], handle_edges[1], handle_edges[0]]);
    let circuit = Trail { vertices, edge_indices, closed: true };
    debug_assert!(circuit.is_valid_in(&f));
    if !circuit.is_valid_in(&f) || !circuit.is_dominating_in(&f) {
        return Err(EdgeGameError::NotDominating);
    }
    Ok(AugmentedGraph {
        graph: f,
        d0: BitSet::singleton(handle_edges[1]),
        embedding,
        handle_edges,
        new_vertices: (a, b),
        circuit,
    })
}

/// One move of the lockstep and its interpretation in the other game.
#[derive(Clone, Debug, Serialize)]
pub struct LockstepStep {
    pub mover: Player,
    /// Edge played in the real game, as an index of the original graph.
    pub game1_edge: usize,
    /// Edge played in the imagined game, as an index of the augmented graph.
    pub game2_edge: usize,
    /// The move was copied rather than replaced by a fallback.
    pub copied: bool,
    /// Dominator's choice `v1 v1'` or `vl vl'` was swapped for the adjacent trail edge.
    pub handle_swapped: bool,
    pub undominated_game1: Vec<usize>,
    /// Undominated edges of the imagined game, mapped back to original indices.
    pub undominated_game2: Vec<usize>,
    pub sets_equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LockstepReport {
    pub steps: Vec<LockstepStep>,
    pub game1_length: usize,
    pub game2_length: usize,
    /// `γ_{e,g}` of the original graph.
    pub gamma_original: u32,
    /// `γ_{e,g}` of the augmented graph started from `D0`.
    pub gamma_augmented: u32,
    pub m: usize,
    pub invariant_held: bool,
    /// `gamma_original <= k <= gamma_augmented`.
    pub sandwich_held: bool,
    /// `gamma_augmented <= ceil(m / 2)`.
    pub augmented_bound_held: bool,
}

/// Plays the real game on `g` (Staller exact) and the imagined game on the
/// augmented graph (Dominator exact) side by side, copying each move into
/// the other game when legal and otherwise falling back to the
/// smallest-index legal edge.
pub fn imagination_lockstep(g: &Graph, t: &Trail) -> Result<LockstepReport, EdgeGameError> {
    let aug = augment_with_handle(g, t)?;
    let f = &aug.graph;
    let mut solver1 = EdgeSolver::new(g)?;
    let mut solver2 = EdgeSolver::new(f)?;
    let mut game1 = EdgeResidualState::new(g, Player::Dominator)?;
    let mut game2 = EdgeResidualState::with_dominated(f, aug.initial_dominated(), Player::Dominator)?;
    let gamma_original = solver1.value(0, Player::Dominator);
    let gamma_augmented = solver2.value(game2.dominated.0, Player::Dominator);
    let first_trail_edge = aug.embedding[t.edge_indices[0]];
    let last_trail_edge = aug.embedding[*t.edge_indices.last().unwrap()];

    let mut steps = Vec::new();
    let (mut len1, mut len2) = (0, 0);
    let mut invariant_held = true;
    while !game1.is_over() && !game2.is_over() {
        let mover = game1.mover;
        let (e1, e2, copied, handle_swapped);
        match mover {
            Player::Dominator => {
                let mut choice = solver2.optimal_move(&game2)?;
                let mut swapped = false;
                if choice == aug.handle_edges[0] {
                    choice = first_trail_edge;
                    swapped = true;
                } else if choice == aug.handle_edges[2] {
                    choice = last_trail_edge;
                    swapped = true;
                }
                game2 = game2.apply_move(choice)?;
                e2 = choice;
                match aug.original_edge(choice).filter(|&x| game1.is_legal(x)) {
                    Some(x) => {
                        e1 = x;
                        copied = true;
                    }
                    None => {
                        e1 = game1.legal_moves().first().ok_or(GameError::NoLegalMove)?;
                        copied = false;
                    }
                }
                game1 = game1.apply_move(e1)?;
                handle_swapped = swapped;
            }
            Player::Staller => {
                e1 = solver1.optimal_move(&game1)?;
                game1 = game1.apply_move(e1)?;
                let image = aug.embedding[e1];
                if game2.is_legal(image) {
                    e2 = image;
                    copied = true;
                } else {
                    e2 = game2.legal_moves().first().ok_or(GameError::NoLegalMove)?;
                    copied = false;
                }
                game2 = game2.apply_move(e2)?;
                handle_swapped = false;
            }
        }
        len1 += 1;
        len2 += 1;
        let u1 = game1.undominated();
        let u2 = game2.undominated();
        let u2_back: EdgeSet = (0..g.m()).filter(|&i| u2.contains(aug.embedding[i])).collect();
        let u2_outside = u2.iter().any(|x| aug.original_edge(x).is_none());
        let sets_equal = u1 == u2_back && !u2_outside;
        invariant_held &= sets_equal;
        steps.push(LockstepStep {
            mover,
            game1_edge: e1,
            game2_edge: e2,
            copied,
            handle_swapped,
            undominated_game1: u1.iter().collect(),
            undominated_game2: u2_back.iter().collect(),
            sets_equal,
        });
    }
    // finish whichever game is still running with plain exact play
    while !game1.is_over() {
        let e = solver1.optimal_move(&game1)?;
        game1 = game1.apply_move(e)?;
        len1 += 1;
        invariant_held = false;
    }
    while !game2.is_over() {
        let e = solver2.optimal_move(&game2)?;
        game2 = game2.apply_move(e)?;
        len2 += 1;
        invariant_held = false;
    }
    let k = len1.max(len2) as u32;
    let m = g.m();
    Ok(LockstepReport {
        steps,
        game1_length: len1,
        game2_length: len2,
        gamma_original,
        gamma_augmented,
        m,
        invariant_held,
        sandwich_held: invariant_held && gamma_original <= k && k <= gamma_augmented,
        augmented_bound_held: gamma_augmented as usize <= m.div_ceil(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognizers::{euler_trail, find_open_edge_dominating_trail};

    /// Exhaustive edge-game tree without memo.
    fn brute(g: &Graph, dominated: u64, mover: Player) -> u32 {
        let full = g.edge_set().0;
        if dominated == full {
            return 0;
        }
        let vals = (0..g.m())
            .filter(|&e| g.edge_closed_neighborhood(e).0 & !dominated != 0)
            .map(|e| 1 + brute(g, dominated | g.edge_closed_neighborhood(e).0, mover.other()));
        match mover {
            Player::Dominator => vals.min().unwrap(),
            Player::Staller => vals.max().unwrap(),
        }
    }

    fn val(g: &Graph, p: Player) -> u32 {
        edge_game_value(g, p, BitSet::EMPTY).unwrap().moves_remaining
    }

    #[test]
    fn edge_value_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(val(&c5, Player::Dominator), 3);
        assert_eq!(brute(&c5, 0, Player::Dominator), 3);
        assert_eq!(val(&Graph::complete_bipartite(1, 3), Player::Dominator), 1);
        let p4 = Graph::path(4);
        assert_eq!(val(&p4, Player::Dominator), 1);
        assert_eq!(val(&p4, Player::Staller), 2);
        assert_eq!(brute(&p4, 0, Player::Staller), 2);
    }

    #[test]
    fn via_line_graph_examples() {
        let star = Graph::complete_bipartite(1, 3);
        assert_eq!(edge_game_value_via_line_graph(&star, Player::Dominator).unwrap().moves_remaining, 1);
        assert_eq!(edge_game_value_via_line_graph(&Graph::cycle(9), Player::Dominator).unwrap().moves_remaining, 5);
        let k4 = Graph::complete(4);
        for p in [Player::Dominator, Player::Staller] {
            assert_eq!(
                edge_game_value_via_line_graph(&k4, p).unwrap(),
                edge_game_value(&k4, p, BitSet::EMPTY).unwrap()
            );
        }
        assert!(edge_game_value_via_line_graph(&Graph::empty(2).unwrap(), Player::Dominator).is_err());
    }

    #[test]
    fn colors_and_endpoint_invariant() {
        let g = Graph::path(5);
        let s = EdgeResidualState::new(&g, Player::Dominator).unwrap();
        let s = s.apply_move(0).unwrap();
        let c = s.colors();
        assert_eq!(c.red, BitSet::singleton(0));
        assert_eq!(c.blue, BitSet::singleton(1));
        assert_eq!(c.white, BitSet::from_indices([2, 3]));
        assert_eq!(s.red_vertices(), BitSet::from_indices([0, 1]));
        assert!(s.blue_edges_well_colored());
        assert_eq!(s.apply_move(0), Err(GameError::IllegalMove(0)));
    }

    #[test]
    fn augment_examples() {
        let p4 = Graph::path(4);
        let t = Trail { vertices: vec![1, 2], edge_indices: vec![1], closed: false };
        let aug = augment_with_handle(&p4, &t).unwrap();
        assert_eq!((aug.graph.n(), aug.graph.m()), (6, 6));
        assert_eq!(aug.d0, BitSet::singleton(aug.graph.edge_index(4, 5).unwrap()));
        assert!(aug.circuit.is_dominating_in(&aug.graph) && aug.circuit.closed);

        let p2 = Graph::path(2);
        let t = Trail { vertices: vec![0, 1], edge_indices: vec![0], closed: false };
        let aug = augment_with_handle(&p2, &t).unwrap();
        assert!(aug.graph.is_cycle() && aug.graph.n() == 4);

        let c5 = Graph::cycle(5);
        let closed = euler_trail(&c5, c5.edge_set()).unwrap();
        assert_eq!(augment_with_handle(&c5, &closed).unwrap_err(), EdgeGameError::ClosedTrail);

        let p5 = Graph::path(5);
        let short = Trail { vertices: vec![0, 1], edge_indices: vec![0], closed: false };
        assert_eq!(augment_with_handle(&p5, &short).unwrap_err(), EdgeGameError::NotDominating);
    }

    #[test]
    fn lockstep_examples() {
        let p4 = Graph::path(4);
        let t = find_open_edge_dominating_trail(&p4).found().unwrap();
        let r = imagination_lockstep(&p4, &t).unwrap();
        assert!(r.invariant_held && r.sandwich_held);
        assert_eq!(r.game1_length, 1);

        let p6 = Graph::path(6);
        let t = find_open_edge_dominating_trail(&p6).found().unwrap();
        let r = imagination_lockstep(&p6, &t).unwrap();
        assert!(r.invariant_held);
        assert!(r.gamma_original <= r.gamma_augmented);
    }
}
