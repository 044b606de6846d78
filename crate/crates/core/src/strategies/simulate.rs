//! Plays a Dominator policy against a Staller model and records the trace.

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::clawfree::{check_clawfree_hypothesis, ClawFree2Policy};
use super::cubic::{check_cubic_hypothesis, CubicPolicy};
use super::edge_circuit::policy_edge_circuit;
use super::{
    audit_claims, circuit_potential, clawfree_potential, cubic_potential, AuditReport, MoveRecord, PhasedState,
    PotentialProfile, StallerModel, StrategyError,
};
use crate::edge_game::{EdgeResidualState, EdgeSolver};
use crate::game::{Player, ResidualState, Solver};
use crate::graph::{to_graph6, EdgeSet, Graph};

/// One game under a profile, seen through a uniform interface.
trait Arena {
    fn is_over(&self) -> bool;
    fn legal(&self) -> Vec<usize>;
    fn potential(&self) -> i64;
    fn gain(&self, mv: usize) -> i64;
    fn dominator(&mut self) -> Result<(usize, String), StrategyError>;
    fn exact_staller(&mut self) -> Result<usize, StrategyError>;
    fn play(&mut self, mv: usize) -> Result<(), StrategyError>;
}

struct CubicArena<'g> {
    state: ResidualState<'g>,
    policy: CubicPolicy,
    solver: Solver<'g>,
}

impl Arena for CubicArena<'_> {
    fn is_over(&self) -> bool {
        self.state.is_over()
    }
    fn legal(&self) -> Vec<usize> {
        self.state.legal_moves().iter().collect()
    }
    fn potential(&self) -> i64 {
        cubic_potential(&self.state)
    }
    fn gain(&self, mv: usize) -> i64 {
        cubic_potential(&self.state) - cubic_potential(&self.state.apply_move(mv).expect("legal move"))
    }
    fn dominator(&mut self) -> Result<(usize, String), StrategyError> {
        self.policy.choose(&self.state)
    }
    fn exact_staller(&mut self) -> Result<usize, StrategyError> {
        Ok(self.solver.optimal_move(&self.state)?)
    }
    fn play(&mut self, mv: usize) -> Result<(), StrategyError> {
        if self.state.mover == Player::Staller {
            self.policy.observe_staller(mv);
        }
        self.state = self.state.apply_move(mv)?;
        Ok(())
    }
}

struct ClawFreeArena<'g> {
    g: &'g Graph,
    state: PhasedState,
    policy: ClawFree2Policy,
    solver: Solver<'g>,
}

impl ClawFreeArena<'_> {
    fn settled(&self) -> PhasedState {
        let mut s = self.state;
        s.enter_phase_if_due(self.g);
        s
    }
}

impl Arena for ClawFreeArena<'_> {
    fn is_over(&self) -> bool {
        self.state.residual(self.g).is_over()
    }
    fn legal(&self) -> Vec<usize> {
        self.state.residual(self.g).legal_moves().iter().collect()
    }
    fn potential(&self) -> i64 {
        clawfree_potential(self.g, &self.state)
    }
    fn gain(&self, mv: usize) -> i64 {
        let s = self.settled();
        clawfree_potential(self.g, &s) - clawfree_potential(self.g, &s.play(self.g, mv))
    }
    fn dominator(&mut self) -> Result<(usize, String), StrategyError> {
        let s = self.settled();
        self.policy.choose(self.g, &s)
    }
    fn exact_staller(&mut self) -> Result<usize, StrategyError> {
        Ok(self.solver.optimal_move(&self.state.residual(self.g))?)
    }
    fn play(&mut self, mv: usize) -> Result<(), StrategyError> {
        let s = self.settled();
        if !s.residual(self.g).is_legal(mv) {
            return Err(crate::game::GameError::IllegalMove(mv).into());
        }
        self.state = s.play(self.g, mv);
        Ok(())
    }
}

struct EdgeArena<'g> {
    state: EdgeResidualState<'g>,
    circuit: EdgeSet,
    solver: EdgeSolver<'g>,
}

impl Arena for EdgeArena<'_> {
    fn is_over(&self) -> bool {
        self.state.is_over()
    }
    fn legal(&self) -> Vec<usize> {
        self.state.legal_moves().iter().collect()
    }
    fn potential(&self) -> i64 {
        circuit_potential(&self.state, self.circuit)
    }
    fn gain(&self, mv: usize) -> i64 {
        self.potential() - circuit_potential(&self.state.apply_move(mv).expect("legal move"), self.circuit)
    }
    fn dominator(&mut self) -> Result<(usize, String), StrategyError> {
        Ok((policy_edge_circuit(&self.state, self.circuit)?, "greedy".into()))
    }
    fn exact_staller(&mut self) -> Result<usize, StrategyError> {
        Ok(self.solver.optimal_move(&self.state)?)
    }
    fn play(&mut self, mv: usize) -> Result<(), StrategyError> {
        self.state = self.state.apply_move(mv)?;
        Ok(())
    }
}

/// Whether the non-isolated part of `g` is a single cycle.
pub(crate) fn host_is_cycle(g: &Graph) -> bool {
    let active = g.vertex_set().iter().filter(|&v| g.degree(v) > 0).collect();
    g.induced_subgraph(active).0.is_cycle()
}

/// The move-count bound that comes with the profile's strategy on `g`.
pub fn policy_bound(g: &Graph, profile: &PotentialProfile) -> usize {
    let n = g.n();
    match profile {
        PotentialProfile::CubicClawFree => n / 2,
        PotentialProfile::EdgeCircuit { .. } => {
            let m = g.m();
            if host_is_cycle(g) {
                m.div_ceil(2)
            } else {
                m / 2
            }
        }
        PotentialProfile::ClawFreeMinDeg2 => {
            let special = g.is_cycle() && (n == 5 || n == 9);
            if g.is_connected() && !special {
                11 * n / 20
            } else {
                (11 * n).div_ceil(20)
            }
        }
    }
}

fn run(arena: &mut dyn Arena, staller: StallerModel) -> Result<(Vec<MoveRecord>, i64, i64), StrategyError> {
    let initial = arena.potential();
    let mut rng = match staller {
        StallerModel::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut moves = Vec::new();
    let mut mover = Player::Dominator;
    while !arena.is_over() {
        let (mv, case) = match mover {
            Player::Dominator => {
                let (mv, case) = arena.dominator()?;
                (mv, Some(case))
            }
            Player::Staller => {
                let mv = match staller {
                    StallerModel::ExactAdversary => arena.exact_staller()?,
                    StallerModel::GreedyMinGain => {
                        let legal = arena.legal();
                        *legal.iter().min_by_key(|&&v| (arena.gain(v), v)).ok_or(StrategyError::GameOver)?
                    }
                    StallerModel::SeededRandom(_) => {
                        arena.legal().into_iter().choose(rng.as_mut().unwrap()).ok_or(StrategyError::GameOver)?
                    }
                };
                (mv, None)
            }
        };
        let s = arena.gain(mv);
        arena.play(mv)?;
        moves.push(MoveRecord { player: mover, mv, s, case });
        mover = mover.other();
    }
    Ok((moves, initial, arena.potential()))
}

/// Plays the D-game on `g` with Dominator following the policy that belongs
/// to `profile` and Staller following `staller`, then audits the trace.
pub fn simulate(g: &Graph, profile: &PotentialProfile, staller: StallerModel) -> Result<AuditReport, StrategyError> {
    let (moves, initial, last) = match profile {
        PotentialProfile::CubicClawFree => {
            check_cubic_hypothesis(g)?;
            let mut a = CubicArena {
                state: ResidualState::new(g, Player::Dominator),
                policy: CubicPolicy::new(g)?,
                solver: Solver::with_pruning(g, true),
            };
            run(&mut a, staller)?
        }
        PotentialProfile::ClawFreeMinDeg2 => {
            check_clawfree_hypothesis(g)?;
            let mut a = ClawFreeArena {
                g,
                state: PhasedState::new(Player::Dominator),
                policy: ClawFree2Policy::new(g)?,
                solver: Solver::with_pruning(g, true),
            };
            run(&mut a, staller)?
        }
        PotentialProfile::EdgeCircuit { circuit_edges } => {
            let circuit: EdgeSet = circuit_edges.iter().copied().collect();
            check_circuit(g, circuit_edges)?;
            let mut a = EdgeArena {
                state: EdgeResidualState::new(g, Player::Dominator)?,
                circuit,
                solver: EdgeSolver::new(g)?,
            };
            run(&mut a, staller)?
        }
    };
    let bound = policy_bound(g, profile);
    let mut report = AuditReport {
        graph6: to_graph6(g),
        profile: profile.clone(),
        staller,
        s: moves.iter().map(|m| m.s).collect(),
        length: moves.len(),
        verdict: moves.len() <= bound,
        moves,
        initial_potential: initial,
        final_potential: last,
        bound,
        claims: Vec::new(),
    };
    report.claims = audit_claims(&report, profile)?;
    Ok(report)
}

/// The circuit must be a closed trail of `g` covering every edge.
pub(crate) fn check_circuit(g: &Graph, circuit_edges: &[usize]) -> Result<(), StrategyError> {
    g.check_edge_sets()?;
    let set: EdgeSet = circuit_edges.iter().copied().collect();
    if circuit_edges.iter().any(|&e| e >= g.m()) || set.len() != circuit_edges.len() {
        return Err(StrategyError::Hypothesis("circuit edges are not distinct edges of the graph".into()));
    }
    let sub = Graph::from_edges(g.n(), &circuit_edges.iter().map(|&e| g.edge(e)).collect::<Vec<_>>())?;
    let touched = g.vertices_of_edges(set);
    let even = (0..g.n()).all(|v| sub.degree(v) % 2 == 0);
    let connected = touched.first().is_some_and(|s| sub.component_of(s) == touched);
    let dominating = g.edges().iter().all(|&(u, v)| touched.contains(u) || touched.contains(v));
    if !(even && connected && dominating) {
        return Err(StrategyError::Hypothesis("not an edge dominating circuit".into()));
    }
    Ok(())
}
