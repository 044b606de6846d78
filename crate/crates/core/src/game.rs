//! Exact minimax solver for the vertex domination game.
//!
//! A position is the set of already dominated vertices plus the player to
//! move; which vertices were actually played does not influence the optimal
//! continuation, so positions with equal dominated sets share one memo entry.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{BitSet, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Dominator => "Dominator",
            Player::Staller => "Staller",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("move {0} is not legal in this position")]
    IllegalMove(usize),
    #[error("no legal move: the game is over")]
    NoLegalMove,
}

/// Number of moves still to be played under optimal play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GameValue {
    pub moves_remaining: u32,
}

impl GameValue {
    pub fn new(moves_remaining: u32) -> Self {
        GameValue { moves_remaining }
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.moves_remaining)
    }
}

/// White, blue and red vertices of a residual graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexColors {
    /// Not yet dominated.
    pub white: VertexSet,
    /// Dominated, with an undominated vertex in the closed neighbourhood.
    pub blue: VertexSet,
    /// Closed neighbourhood fully dominated.
    pub red: VertexSet,
}

/// A position of the vertex game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidualState<'g> {
    pub graph: &'g Graph,
    pub dominated: VertexSet,
    pub mover: Player,
}

impl<'g> ResidualState<'g> {
    pub fn new(graph: &'g Graph, mover: Player) -> Self {
        ResidualState { graph, dominated: BitSet::EMPTY, mover }
    }

    pub fn with_dominated(graph: &'g Graph, dominated: VertexSet, mover: Player) -> Self {
        ResidualState { graph, dominated: dominated.intersection(graph.vertex_set()), mover }
    }

    pub fn undominated(&self) -> VertexSet {
        self.graph.vertex_set().difference(self.dominated)
    }

    pub fn is_over(&self) -> bool {
        self.undominated().is_empty()
    }

    pub fn colors(&self) -> VertexColors {
        vertex_colors(self)
    }

    pub fn legal_moves(&self) -> VertexSet {
        legal_moves(self)
    }

    pub fn is_legal(&self, v: usize) -> bool {
        v < self.graph.n() && self.graph.closed_neighborhood(v).intersects(self.undominated())
    }

    /// Vertices that become dominated by playing `v`.
    pub fn newly_dominated(&self, v: usize) -> VertexSet {
        self.graph.closed_neighborhood(v).difference(self.dominated)
    }

    pub fn apply_move(&self, v: usize) -> Result<ResidualState<'g>, GameError> {
        apply_move(self, v)
    }

    /// `|N(v) ∩ W|`, the number of white neighbours (open neighbourhood).
    pub fn white_degree(&self, v: usize) -> usize {
        self.graph.neighbors(v).intersection(self.undominated()).len()
    }
}

pub fn vertex_colors(s: &ResidualState<'_>) -> VertexColors {
    let g = s.graph;
    let white = s.undominated();
    let mut blue = BitSet::EMPTY;
    let mut red = BitSet::EMPTY;
    for v in s.dominated.iter() {
        if g.closed_neighborhood(v).intersects(white) {
            blue.insert(v);
        } else {
            red.insert(v);
        }
    }
    VertexColors { white, blue, red }
}

/// `W ∪ B`: vertices whose closed neighbourhood still has an undominated vertex.
pub fn legal_moves(s: &ResidualState<'_>) -> VertexSet {
    let white = s.undominated();
    (0..s.graph.n())
        .filter(|&v| s.graph.closed_neighborhood(v).intersects(white))
        .collect()
}

pub fn apply_move<'g>(s: &ResidualState<'g>, v: usize) -> Result<ResidualState<'g>, GameError> {
    if !s.is_legal(v) {
        return Err(GameError::IllegalMove(v));
    }
    Ok(ResidualState {
        graph: s.graph,
        dominated: s.dominated.union(s.graph.closed_neighborhood(v)),
        mover: s.mover.other(),
    })
}

/// Memoized minimax solver for one graph. Dominator minimises and Staller
/// maximises the number of remaining moves.
pub struct Solver<'g> {
    graph: &'g Graph,
    closed: Vec<u64>,
    full: u64,
    memo: [FxHashMap<u64, u8>; 2],
    prune: bool,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Solver::with_pruning(graph, false)
    }

    /// With `prune`, a Dominator move is skipped when another move dominates
    /// a strict superset of its newly dominated vertices, and a Staller move
    /// when another one dominates a strict subset. By the continuation
    /// principle this never changes a value.
    pub fn with_pruning(graph: &'g Graph, prune: bool) -> Self {
        let closed = (0..graph.n()).map(|v| graph.closed_neighborhood(v).0).collect();
        Solver {
            graph,
            closed,
            full: graph.vertex_set().0,
            memo: [FxHashMap::default(), FxHashMap::default()],
            prune,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Number of memoized positions.
    pub fn memo_len(&self) -> usize {
        self.memo[0].len() + self.memo[1].len()
    }

    pub fn value_of(&mut self, state: &ResidualState<'_>) -> GameValue {
        GameValue::new(self.value(state.dominated.0, state.mover))
    }

    pub fn value(&mut self, dominated: u64, mover: Player) -> u32 {
        let dominated = dominated & self.full;
        if dominated == self.full {
            return 0;
        }
        if let Some(&v) = self.memo[mover.index()].get(&dominated) {
            return v as u32;
        }
        let options = self.options(dominated, mover);
        let mut best = match mover {
            Player::Dominator => u32::MAX,
            Player::Staller => 0,
        };
        for gain in options {
            let child = self.value(dominated | gain, mover.other());
            match mover {
                Player::Dominator => {
                    best = best.min(child + 1);
                    if best == 1 {
                        break;
                    }
                }
                Player::Staller => best = best.max(child + 1),
            }
        }
        self.memo[mover.index()].insert(dominated, best as u8);
        best
    }

    /// Distinct newly-dominated sets of the legal moves, in order of the
    /// smallest vertex producing them.
    fn options(&self, dominated: u64, mover: Player) -> Vec<u64> {
        let undominated = !dominated & self.full;
        let mut gains: Vec<u64> = Vec::with_capacity(self.closed.len());
        for &c in &self.closed {
            let gain = c & undominated;
            if gain != 0 && !gains.contains(&gain) {
                gains.push(gain);
            }
        }
        if self.prune && gains.len() > 1 {
            let all = gains.clone();
            gains.retain(|&a| {
                !all.iter().any(|&b| {
                    b != a
                        && match mover {
                            Player::Dominator => a & !b == 0,
                            Player::Staller => b & !a == 0,
                        }
                })
            });
        }
        gains
    }

    /// Smallest-index legal move attaining the mover's optimum.
    pub fn optimal_move(&mut self, state: &ResidualState<'_>) -> Result<usize, GameError> {
        let mut best: Option<(usize, u32)> = None;
        for v in legal_moves(state).iter() {
            let child = self.value(state.dominated.0 | self.closed[v], state.mover.other());
            let better = match (best, state.mover) {
                (None, _) => true,
                (Some((_, b)), Player::Dominator) => child < b,
                (Some((_, b)), Player::Staller) => child > b,
            };
            if better {
                best = Some((v, child));
            }
        }
        best.map(|(v, _)| v).ok_or(GameError::NoLegalMove)
    }
}

/// Optimal number of moves from the position where `predominated` is
/// already dominated and `start` moves first.
pub fn game_value(g: &Graph, start: Player, predominated: VertexSet) -> GameValue {
    let mut solver = Solver::new(g);
    GameValue::new(solver.value(predominated.0, start))
}

/// `γ_g(G)`.
pub fn gamma_g(g: &Graph) -> u32 {
    game_value(g, Player::Dominator, BitSet::EMPTY).moves_remaining
}

/// `γ_g'(G)`.
pub fn gamma_g_staller(g: &Graph) -> u32 {
    game_value(g, Player::Staller, BitSet::EMPTY).moves_remaining
}

/// Both `γ_g` and `γ_g'` from a single solver.
pub fn gamma_pair(g: &Graph) -> (u32, u32) {
    let mut s = Solver::new(g);
    (s.value(0, Player::Dominator), s.value(0, Player::Staller))
}

pub fn optimal_move(state: &ResidualState<'_>) -> Result<usize, GameError> {
    Solver::new(state.graph).optimal_move(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Full game tree, no memo, no deduplication.
    fn brute(g: &Graph, dominated: u64, mover: Player) -> u32 {
        let full = g.vertex_set().0;
        if dominated == full {
            return 0;
        }
        let vals = (0..g.n())
            .filter(|&v| g.closed_neighborhood(v).0 & !dominated != 0)
            .map(|v| 1 + brute(g, dominated | g.closed_neighborhood(v).0, mover.other()));
        match mover {
            Player::Dominator => vals.min().unwrap(),
            Player::Staller => vals.max().unwrap(),
        }
    }

    #[test]
    fn colors_examples() {
        let p3 = Graph::path(3);
        let s = ResidualState::with_dominated(&p3, BitSet::from_indices([0, 1, 2]), Player::Staller);
        let c = s.colors();
        assert!(c.white.is_empty() && c.blue.is_empty() && c.red == p3.vertex_set());

        let s = ResidualState::new(&p3, Player::Dominator).apply_move(0).unwrap();
        let c = s.colors();
        assert_eq!(c.white, BitSet::singleton(2));
        assert_eq!(c.blue, BitSet::singleton(1));
        assert_eq!(c.red, BitSet::singleton(0));

        let c4 = Graph::cycle(4);
        let c = ResidualState::new(&c4, Player::Dominator).colors();
        assert_eq!(c.white, c4.vertex_set());
        assert!(c.blue.is_empty() && c.red.is_empty());
    }

    #[test]
    fn legal_and_apply_examples() {
        let p3 = Graph::path(3);
        let s = ResidualState::with_dominated(&p3, BitSet::from_indices([0, 1]), Player::Dominator);
        assert_eq!(s.legal_moves(), BitSet::from_indices([1, 2]));
        assert_eq!(s.apply_move(2).unwrap().dominated, p3.vertex_set());
        assert_eq!(s.apply_move(0), Err(GameError::IllegalMove(0)));

        let done = ResidualState::with_dominated(&p3, p3.vertex_set(), Player::Dominator);
        assert!(done.legal_moves().is_empty());

        let c5 = Graph::cycle(5);
        let s = ResidualState::new(&c5, Player::Dominator);
        assert_eq!(s.legal_moves(), c5.vertex_set());
        let s = s.apply_move(0).unwrap();
        assert_eq!(s.dominated, BitSet::from_indices([4, 0, 1]));
        assert_eq!(s.mover, Player::Staller);
    }

    #[test]
    fn value_examples() {
        assert_eq!(gamma_g(&Graph::complete(4)), 1);
        assert_eq!(gamma_g(&Graph::cycle(9)), 5);
        let c5 = Graph::cycle(5);
        assert_eq!(brute(&c5, 0, Player::Dominator), 3);
        assert_eq!(brute(&c5, 0, Player::Staller), 2);
        assert_eq!(gamma_pair(&c5), (3, 2));
        let p3 = Graph::path(3);
        assert_eq!(game_value(&p3, Player::Dominator, p3.vertex_set()).moves_remaining, 0);
    }

    #[test]
    fn optimal_move_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(optimal_move(&ResidualState::new(&k4, Player::Dominator)), Ok(0));
        let p3 = Graph::path(3);
        assert_eq!(optimal_move(&ResidualState::new(&p3, Player::Dominator)), Ok(1));

        // Staller on C5: every first move leaves value 2 for Dominator, so
        // the smallest vertex with a maximal continuation is 0.
        let c5 = Graph::cycle(5);
        let oracle_best = (0..5)
            .max_by_key(|&v| (brute(&c5, c5.closed_neighborhood(v).0, Player::Dominator), std::cmp::Reverse(v)))
            .unwrap();
        assert_eq!(optimal_move(&ResidualState::new(&c5, Player::Staller)), Ok(oracle_best));

        let done = ResidualState::with_dominated(&p3, p3.vertex_set(), Player::Dominator);
        assert_eq!(optimal_move(&done), Err(GameError::NoLegalMove));
    }

    #[test]
    fn pruning_agrees_on_small_graphs() {
        for g in [Graph::petersen(), Graph::cycle(11), Graph::prism(), Graph::complete_bipartite(3, 4)] {
            let mut plain = Solver::new(&g);
            let mut pruned = Solver::with_pruning(&g, true);
            for mover in [Player::Dominator, Player::Staller] {
                assert_eq!(plain.value(0, mover), pruned.value(0, mover));
            }
        }
    }
}
