//! Dominator policy for claw-free graphs of minimum degree at least 2.

use serde::Serialize;

use super::cubic::white_components;
use super::{PhasedState, StrategyError};
use crate::game::{Player, ResidualState, Solver};
use crate::graph::{Graph, VertexSet};
use crate::recognizers::is_claw_free;

/// Case of a Dominator turn under the 22/10/9 weighting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum ClawFreeCase {
    /// A white vertex with at least three white neighbours.
    D1 { vertex: usize },
    /// A white path on at least three vertices, from its smaller end.
    D2 { path: Vec<usize> },
    /// A white `P_2` component with at least two blue neighbours in total.
    D3 { pair: [usize; 2] },
    /// A white cycle vertex with a blue neighbour.
    D4 { vertex: usize },
    /// Smallest vertex of the first non-cycle white component.
    D5 { component: Vec<usize> },
    /// The white graph is a union of cycles and nothing is blue.
    Endgame,
    Done,
}

impl ClawFreeCase {
    pub fn label(&self) -> &'static str {
        match self {
            ClawFreeCase::D1 { .. } => "D1",
            ClawFreeCase::D2 { .. } => "D2",
            ClawFreeCase::D3 { .. } => "D3",
            ClawFreeCase::D4 { .. } => "D4",
            ClawFreeCase::D5 { .. } => "D5",
            ClawFreeCase::Endgame => "endgame",
            ClawFreeCase::Done => "Done",
        }
    }

    pub fn prescribed_move(&self) -> Option<usize> {
        match self {
            ClawFreeCase::D1 { vertex } | ClawFreeCase::D4 { vertex } => Some(*vertex),
            ClawFreeCase::D2 { path } => Some(path[1]),
            ClawFreeCase::D3 { pair } => Some(pair[0]),
            ClawFreeCase::D5 { component } => Some(component[0]),
            ClawFreeCase::Endgame | ClawFreeCase::Done => None,
        }
    }
}

pub(crate) fn check_clawfree_hypothesis(g: &Graph) -> Result<(), StrategyError> {
    if g.min_degree() < 2 {
        return Err(StrategyError::Hypothesis("minimum degree is below 2".into()));
    }
    if !is_claw_free(g) {
        return Err(StrategyError::Hypothesis("graph is not claw-free".into()));
    }
    Ok(())
}

/// Classifies a residual graph for Dominator's next move. Cases are tested
/// in order; `Endgame` only when none of the others applies.
pub fn classify_clawfree_case(g: &Graph, state: &PhasedState) -> Result<ClawFreeCase, StrategyError> {
    check_clawfree_hypothesis(g)?;
    Ok(classify_unchecked(g, state.dominated))
}

pub(crate) fn classify_unchecked(g: &Graph, dominated: VertexSet) -> ClawFreeCase {
    let r = ResidualState::with_dominated(g, dominated, Player::Dominator);
    let c = r.colors();
    let white = c.white;
    if white.is_empty() {
        return ClawFreeCase::Done;
    }
    let wdeg = |v: usize| g.neighbors(v).intersection(white).len();
    if let Some(v) = white.iter().find(|&v| wdeg(v) >= 3) {
        return ClawFreeCase::D1 { vertex: v };
    }
    let comps = white_components(g, white);
    if let Some(p) = comps.paths.iter().find(|p| p.len() >= 3) {
        return ClawFreeCase::D2 { path: p.clone() };
    }
    let blue_around = |vs: &[usize]| {
        vs.iter().fold(VertexSet::EMPTY, |acc, &v| acc.union(g.neighbors(v))).intersection(c.blue).len()
    };
    if let Some(p) = comps.paths.iter().find(|p| p.len() == 2 && blue_around(p) >= 2) {
        return ClawFreeCase::D3 { pair: [p[0].min(p[1]), p[0].max(p[1])] };
    }
    let on_cycle = comps.cycles.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s));
    if let Some(v) = on_cycle.iter().find(|&v| g.neighbors(v).intersects(c.blue)) {
        return ClawFreeCase::D4 { vertex: v };
    }
    if let Some(p) = comps.paths.first() {
        let mut comp = p.clone();
        comp.sort_unstable();
        return ClawFreeCase::D5 { component: comp };
    }
    ClawFreeCase::Endgame
}

/// Stateful policy: once the endgame starts, Dominator plays exactly on the
/// white cycles remembered at that moment.
#[derive(Clone, Debug, Default)]
pub struct ClawFree2Policy {
    endgame: Option<VertexSet>,
}

impl ClawFree2Policy {
    pub fn new(g: &Graph) -> Result<Self, StrategyError> {
        check_clawfree_hypothesis(g)?;
        Ok(ClawFree2Policy::default())
    }

    /// White vertex set at the start of the endgame, once entered.
    pub fn endgame_start(&self) -> Option<VertexSet> {
        self.endgame
    }

    /// Dominator's move and its case label. The phase of `state` must already
    /// be settled for this turn.
    pub fn choose(&mut self, g: &Graph, state: &PhasedState) -> Result<(usize, String), StrategyError> {
        if state.residual(g).is_over() {
            return Err(StrategyError::GameOver);
        }
        if self.endgame.is_none() {
            let case = classify_unchecked(g, state.dominated);
            if let Some(v) = case.prescribed_move() {
                return Ok((v, case.label().into()));
            }
            self.endgame = Some(state.residual(g).undominated());
        }
        let keep = self.endgame.unwrap();
        let (sub, old) = g.induced_subgraph(keep);
        let local: VertexSet = old.iter().enumerate().filter(|&(_, &o)| state.dominated.contains(o)).map(|(i, _)| i).collect();
        let sub_state = ResidualState::with_dominated(&sub, local, Player::Dominator);
        let mv = Solver::with_pruning(&sub, true).optimal_move(&sub_state)?;
        Ok((old[mv], "endgame".into()))
    }
}

/// Stateless entry point: the move a fresh policy would make.
pub fn policy_clawfree2(g: &Graph, state: &PhasedState) -> Result<usize, StrategyError> {
    let mut s = *state;
    s.mover = Player::Dominator;
    s.enter_phase_if_due(g);
    Ok(ClawFree2Policy::new(g)?.choose(g, &s)?.0)
}
