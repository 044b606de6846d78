//! Potential functions over residual graphs and the per-move decrease `s`.

use serde::{Deserialize, Serialize};

use super::StrategyError;
use crate::edge_game::EdgeResidualState;
use crate::game::{Player, ResidualState};
use crate::graph::{BitSet, EdgeSet, Graph, VertexSet};

/// Which weighting is in force.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum PotentialProfile {
    /// White 3, blue 1, red 0.
    CubicClawFree,
    /// White edge 2, blue circuit edge 1, blue outer edge 0, red 0. The
    /// circuit is fixed once for the whole game.
    EdgeCircuit { circuit_edges: Vec<usize> },
    /// White 22, blue-from-phase-1 10, blue-from-phase-2 9, red 0.
    ClawFreeMinDeg2,
}

impl PotentialProfile {
    pub fn name(&self) -> &'static str {
        match self {
            PotentialProfile::CubicClawFree => "cubic-claw-free",
            PotentialProfile::EdgeCircuit { .. } => "edge-circuit",
            PotentialProfile::ClawFreeMinDeg2 => "claw-free-mindeg2",
        }
    }

    pub fn circuit_set(&self) -> Option<EdgeSet> {
        match self {
            PotentialProfile::EdgeCircuit { circuit_edges } => Some(circuit_edges.iter().copied().collect()),
            _ => None,
        }
    }
}

/// Vertex-game position with the phase bookkeeping of the 22/10/9 weighting.
///
/// A blue vertex is a `B+` vertex iff it was dominated by a move played in
/// phase 1, so the tags are fully described by `phase1_dominated`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PhasedState {
    pub dominated: VertexSet,
    pub phase1_dominated: VertexSet,
    pub phase2: bool,
    pub mover: Player,
}

/// Colour classes with the blue class split by phase tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhasedColors {
    pub white: VertexSet,
    pub blue_plus: VertexSet,
    pub blue_minus: VertexSet,
    pub red: VertexSet,
}

impl PhasedState {
    pub fn new(mover: Player) -> Self {
        PhasedState { dominated: BitSet::EMPTY, phase1_dominated: BitSet::EMPTY, phase2: false, mover }
    }

    pub fn residual<'g>(&self, g: &'g Graph) -> ResidualState<'g> {
        ResidualState::with_dominated(g, self.dominated, self.mover)
    }

    pub fn colors(&self, g: &Graph) -> PhasedColors {
        let c = self.residual(g).colors();
        PhasedColors {
            white: c.white,
            blue_plus: c.blue.intersection(self.phase1_dominated),
            blue_minus: c.blue.difference(self.phase1_dominated),
            red: c.red,
        }
    }

    /// Largest number of white neighbours of a white vertex.
    pub fn max_white_degree(&self, g: &Graph) -> usize {
        let r = self.residual(g);
        r.undominated().iter().map(|v| r.white_degree(v)).max().unwrap_or(0)
    }

    /// Phase 2 starts at the first Dominator turn whose position has every
    /// white vertex with at most two white neighbours. Only Dominator turns
    /// are checked.
    pub fn enter_phase_if_due(&mut self, g: &Graph) -> bool {
        if !self.phase2 && self.mover == Player::Dominator && self.max_white_degree(g) <= 2 {
            self.phase2 = true;
            return true;
        }
        false
    }

    /// Plays `v` (assumed legal). The phase must already be settled.
    pub fn play(&self, g: &Graph, v: usize) -> PhasedState {
        let newly = g.closed_neighborhood(v).difference(self.dominated);
        PhasedState {
            dominated: self.dominated.union(newly),
            phase1_dominated: if self.phase2 { self.phase1_dominated } else { self.phase1_dominated.union(newly) },
            phase2: self.phase2,
            mover: self.mover.other(),
        }
    }
}

/// A position paired with the weighting that should score it.
#[derive(Clone, Copy, Debug)]
pub enum ProfileState<'a> {
    Vertex(&'a ResidualState<'a>),
    Phased(&'a Graph, &'a PhasedState),
    Edge(&'a EdgeResidualState<'a>),
}

pub fn cubic_potential(s: &ResidualState<'_>) -> i64 {
    let c = s.colors();
    3 * c.white.len() as i64 + c.blue.len() as i64
}

pub fn circuit_potential(s: &EdgeResidualState<'_>, circuit: EdgeSet) -> i64 {
    let c = s.colors();
    2 * c.white.len() as i64 + c.blue.intersection(circuit).len() as i64
}

pub fn clawfree_potential(g: &Graph, s: &PhasedState) -> i64 {
    let c = s.colors(g);
    22 * c.white.len() as i64 + 10 * c.blue_plus.len() as i64 + 9 * c.blue_minus.len() as i64
}

pub fn potential(profile: &PotentialProfile, state: ProfileState<'_>) -> Result<i64, StrategyError> {
    match (profile, state) {
        (PotentialProfile::CubicClawFree, ProfileState::Vertex(s)) => Ok(cubic_potential(s)),
        (PotentialProfile::ClawFreeMinDeg2, ProfileState::Phased(g, s)) => Ok(clawfree_potential(g, s)),
        (PotentialProfile::EdgeCircuit { .. }, ProfileState::Edge(s)) => {
            Ok(circuit_potential(s, profile.circuit_set().unwrap()))
        }
        _ => Err(StrategyError::KindMismatch),
    }
}

/// `s(move)`: the decrease of the potential caused by playing `mv`. For the
/// phased weighting a pending phase switch at a Dominator turn is applied
/// first, so the move is scored in the phase it belongs to.
pub fn move_gain(profile: &PotentialProfile, state: ProfileState<'_>, mv: usize) -> Result<i64, StrategyError> {
    match (profile, state) {
        (PotentialProfile::CubicClawFree, ProfileState::Vertex(s)) => {
            let after = s.apply_move(mv)?;
            Ok(cubic_potential(s) - cubic_potential(&after))
        }
        (PotentialProfile::ClawFreeMinDeg2, ProfileState::Phased(g, s)) => {
            if !s.residual(g).is_legal(mv) {
                return Err(StrategyError::Game(crate::game::GameError::IllegalMove(mv)));
            }
            let mut pre = *s;
            pre.enter_phase_if_due(g);
            Ok(clawfree_potential(g, &pre) - clawfree_potential(g, &pre.play(g, mv)))
        }
        (PotentialProfile::EdgeCircuit { .. }, ProfileState::Edge(s)) => {
            let c = profile.circuit_set().unwrap();
            let after = s.apply_move(mv)?;
            Ok(circuit_potential(s, c) - circuit_potential(&after, c))
        }
        _ => Err(StrategyError::KindMismatch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_potentials() {
        let k4 = Graph::complete(4);
        let s = ResidualState::new(&k4, Player::Dominator);
        assert_eq!(potential(&PotentialProfile::CubicClawFree, ProfileState::Vertex(&s)).unwrap(), 12);

        let c5 = Graph::cycle(5);
        let e = EdgeResidualState::new(&c5, Player::Dominator).unwrap();
        let prof = PotentialProfile::EdgeCircuit { circuit_edges: (0..5).collect() };
        assert_eq!(potential(&prof, ProfileState::Edge(&e)).unwrap(), 10);

        let p = PhasedState::new(Player::Dominator);
        assert_eq!(potential(&PotentialProfile::ClawFreeMinDeg2, ProfileState::Phased(&c5, &p)).unwrap(), 110);
    }

    #[test]
    fn gains() {
        let k4 = Graph::complete(4);
        let s = ResidualState::new(&k4, Player::Dominator);
        for v in 0..4 {
            assert_eq!(move_gain(&PotentialProfile::CubicClawFree, ProfileState::Vertex(&s), v).unwrap(), 12);
        }
        // C5: the played vertex turns red (3), its two neighbours blue (2 each)
        let c5 = Graph::cycle(5);
        let s = ResidualState::new(&c5, Player::Dominator);
        assert_eq!(move_gain(&PotentialProfile::CubicClawFree, ProfileState::Vertex(&s), 0).unwrap(), 7);

        let e = EdgeResidualState::new(&c5, Player::Dominator).unwrap();
        let prof = PotentialProfile::EdgeCircuit { circuit_edges: (0..5).collect() };
        assert_eq!(move_gain(&prof, ProfileState::Edge(&e), 0).unwrap(), 4);
    }

    #[test]
    fn mismatch_and_illegal() {
        let c5 = Graph::cycle(5);
        let e = EdgeResidualState::new(&c5, Player::Dominator).unwrap();
        assert!(matches!(
            potential(&PotentialProfile::CubicClawFree, ProfileState::Edge(&e)),
            Err(StrategyError::KindMismatch)
        ));
        let s = ResidualState::with_dominated(&c5, c5.vertex_set(), Player::Dominator);
        assert!(move_gain(&PotentialProfile::CubicClawFree, ProfileState::Vertex(&s), 0).is_err());
    }

    #[test]
    fn phase_switch_only_on_dominator_turn() {
        let c5 = Graph::cycle(5);
        let mut s = PhasedState::new(Player::Staller);
        assert!(!s.enter_phase_if_due(&c5));
        s.mover = Player::Dominator;
        assert!(s.enter_phase_if_due(&c5));
        let after = s.play(&c5, 0);
        assert!(after.phase1_dominated.is_empty());
        // blue vertices created in phase 2 weigh 9
        assert_eq!(clawfree_potential(&c5, &after), 22 * 2 + 9 * 2);
    }
}
