//! Potential-function strategies for Dominator, adversary models for
//! Staller, and auditing of the per-move claims along played games.

mod audit;
mod clawfree;
mod cubic;
mod edge_circuit;
mod potential;
mod simulate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{GameError, Player};
use crate::graph::{Graph6Error, GraphError};

pub use audit::{audit_claims, merge_verdicts, sample_state_claims, ClaimVerdict};
pub use clawfree::{classify_clawfree_case, policy_clawfree2, ClawFree2Policy, ClawFreeCase};
pub use cubic::{classify_cubic_case, policy_cubic, CubicCaseClass, CubicPolicy};
pub use edge_circuit::{edge_circuit_profile, policy_edge_circuit};
pub use potential::{
    circuit_potential, clawfree_potential, cubic_potential, move_gain, potential, PhasedColors, PhasedState,
    PotentialProfile, ProfileState,
};
pub use simulate::{policy_bound, simulate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("the potential profile does not match the kind of position")]
    KindMismatch,
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("the game is already over")]
    GameOver,
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("the report does not replay: {0}")]
    BadReport(String),
}

/// How Staller picks her moves in [`simulate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StallerModel {
    /// Maximises the exact number of remaining moves.
    ExactAdversary,
    /// Minimises the potential decrease of her move.
    GreedyMinGain,
    /// Uniform over legal moves, driven by a seeded ChaCha stream.
    SeededRandom(u64),
}

/// One played move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub player: Player,
    #[serde(rename = "move")]
    pub mv: usize,
    pub s: i64,
    /// Dominator's case label; `None` for Staller.
    pub case: Option<String>,
}

/// Trace of one simulated game plus its audit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub graph6: String,
    pub profile: PotentialProfile,
    pub staller: StallerModel,
    pub moves: Vec<MoveRecord>,
    pub s: Vec<i64>,
    pub initial_potential: i64,
    pub final_potential: i64,
    pub length: usize,
    pub bound: usize,
    /// `length <= bound`.
    pub verdict: bool,
    pub claims: Vec<ClaimVerdict>,
}

impl AuditReport {
    pub fn all_claims_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn passed(&self) -> bool {
        self.verdict && self.all_claims_passed()
    }
}
