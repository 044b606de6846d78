//! Greedy Dominator for the edge game on graphs with a dominating circuit.

use super::{circuit_potential, PotentialProfile, StrategyError};
use crate::edge_game::EdgeResidualState;
use crate::graph::{EdgeSet, Graph};
use crate::recognizers::{find_edge_dominating_circuit, SearchOutcome};

/// Profile built on the circuit returned by the circuit finder.
pub fn edge_circuit_profile(g: &Graph) -> Result<PotentialProfile, StrategyError> {
    g.check_edge_sets()?;
    match find_edge_dominating_circuit(g) {
        SearchOutcome::Found(t) => {
            let mut circuit_edges = t.edge_indices;
            circuit_edges.sort_unstable();
            Ok(PotentialProfile::EdgeCircuit { circuit_edges })
        }
        SearchOutcome::Absent => Err(StrategyError::Hypothesis("no edge dominating circuit".into())),
        SearchOutcome::Unknown => Err(StrategyError::Hypothesis("circuit search exceeds its edge budget".into())),
    }
}

/// The legal edge with the largest decrease, smallest index on ties.
pub fn policy_edge_circuit(state: &EdgeResidualState<'_>, circuit: EdgeSet) -> Result<usize, StrategyError> {
    let before = circuit_potential(state, circuit);
    let mut best: Option<(usize, i64)> = None;
    for e in state.legal_moves().iter() {
        let s = before - circuit_potential(&state.apply_move(e)?, circuit);
        if best.is_none_or(|(_, b)| s > b) {
            best = Some((e, s));
        }
    }
    best.map(|(e, _)| e).ok_or(StrategyError::GameOver)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Player;
    use crate::strategies::{move_gain, ProfileState};

    #[test]
    fn greedy_examples() {
        let c5 = Graph::cycle(5);
        let prof = edge_circuit_profile(&c5).unwrap();
        let circuit = prof.circuit_set().unwrap();
        assert_eq!(circuit, c5.edge_set());
        let s = EdgeResidualState::new(&c5, Player::Dominator).unwrap();
        assert_eq!(policy_edge_circuit(&s, circuit).unwrap(), 0);

        // K4: the circuit is a triangle; greedy picks a circuit edge of maximal gain
        let k4 = Graph::complete(4);
        let prof = edge_circuit_profile(&k4).unwrap();
        let circuit = prof.circuit_set().unwrap();
        assert_eq!(circuit.len(), 3);
        let s = EdgeResidualState::new(&k4, Player::Dominator).unwrap();
        let e = policy_edge_circuit(&s, circuit).unwrap();
        let gains: Vec<i64> = (0..6).map(|f| move_gain(&prof, ProfileState::Edge(&s), f).unwrap()).collect();
        assert!(circuit.contains(e));
        assert_eq!(gains[e], *gains.iter().max().unwrap());
    }

    #[test]
    fn last_white_edge() {
        let c5 = Graph::cycle(5);
        let circuit = c5.edge_set();
        let prof = PotentialProfile::EdgeCircuit { circuit_edges: (0..5).collect() };
        // dominate everything but one edge
        let s = EdgeResidualState::with_dominated(&c5, c5.edge_set().without(2), Player::Dominator).unwrap();
        let e = policy_edge_circuit(&s, circuit).unwrap();
        assert!(move_gain(&prof, ProfileState::Edge(&s), e).unwrap() >= 2);
        let over = EdgeResidualState::with_dominated(&c5, c5.edge_set(), Player::Dominator).unwrap();
        assert!(policy_edge_circuit(&over, circuit).is_err());
    }

    #[test]
    fn no_circuit() {
        assert!(edge_circuit_profile(&Graph::path(4)).is_err());
    }
}
