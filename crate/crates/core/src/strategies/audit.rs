//! Replays traces and checks the per-move claims of each potential argument,
//! both along played games and on sampled reachable positions.

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::clawfree::{self, check_clawfree_hypothesis};
use super::cubic::{self, check_cubic_hypothesis, k_subgraphs, white_components, CubicPolicy};
use super::edge_circuit::policy_edge_circuit;
use super::simulate::{check_circuit, host_is_cycle};
use super::{
    circuit_potential, clawfree_potential, cubic_potential, AuditReport, PhasedState, PotentialProfile,
    StrategyError,
};
use crate::edge_game::EdgeResidualState;
use crate::game::{Player, ResidualState};
use crate::graph::{parse_graph6, EdgeSet, Graph, VertexSet};

const MAX_FAILURES: usize = 5;

/// Outcome of one claim over all the places it was checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim: String,
    pub checked: usize,
    pub passed: bool,
    /// The first few violations.
    pub failures: Vec<String>,
}

/// Claim verdicts in the order the claims were first touched.
#[derive(Default)]
struct Ledger(Vec<ClaimVerdict>);

impl Ledger {
    fn entry(&mut self, claim: &str) -> &mut ClaimVerdict {
        if let Some(i) = self.0.iter().position(|c| c.claim == claim) {
            return &mut self.0[i];
        }
        self.0.push(ClaimVerdict { claim: claim.into(), checked: 0, passed: true, failures: Vec::new() });
        self.0.last_mut().unwrap()
    }

    /// Registers a claim that may end up never being exercised.
    fn declare(&mut self, claim: &str) {
        self.entry(claim);
    }

    fn check(&mut self, claim: &str, ok: bool, detail: impl FnOnce() -> String) {
        let e = self.entry(claim);
        e.checked += 1;
        if !ok {
            e.passed = false;
            if e.failures.len() < MAX_FAILURES {
                e.failures.push(detail());
            }
        }
    }
}

/// Merges verdicts of the same claims, e.g. across graphs.
pub fn merge_verdicts(into: &mut Vec<ClaimVerdict>, more: Vec<ClaimVerdict>) {
    for v in more {
        match into.iter_mut().find(|c| c.claim == v.claim) {
            Some(c) => {
                c.checked += v.checked;
                c.passed &= v.passed;
                for f in v.failures {
                    if c.failures.len() < MAX_FAILURES {
                        c.failures.push(f);
                    }
                }
            }
            None => into.push(v),
        }
    }
}

// ---------------------------------------------------------------- cubic

fn cubic_gain(s: &ResidualState<'_>, v: usize) -> i64 {
    cubic_potential(s) - cubic_potential(&s.apply_move(v).expect("legal move"))
}

/// White vertices that the small-gain claim protects: isolated white
/// vertices, white cycles of length at least 4 and K-subgraph centres.
fn cubic_structures(s: &ResidualState<'_>) -> VertexSet {
    let g = s.graph;
    let c = s.colors();
    let comps = white_components(g, c.white);
    let mut out: VertexSet = comps.paths.iter().filter(|p| p.len() == 1).map(|p| p[0]).collect();
    for &comp in &comps.cycles {
        let is_cycle = comp.iter().all(|v| g.neighbors(v).intersection(comp).len() == 2);
        if is_cycle && comp.len() >= 4 {
            out = out.union(comp);
        }
    }
    for k in k_subgraphs(g, c.white, c.blue) {
        out = out.union(VertexSet::from_indices(k).intersection(c.white));
    }
    out
}

fn cubic_case_floor(label: &str) -> Option<i64> {
    match label {
        "C1" | "C2" | "C3" | "C4" => Some(9),
        "C5" | "C6" => Some(8),
        "C6-reply" => Some(10),
        "C7" => Some(6),
        _ => None,
    }
}

fn check_cubic_state(ledger: &mut Ledger, s: &ResidualState<'_>, at: &str) {
    let protected = cubic_structures(s);
    for v in s.legal_moves().iter() {
        let gain = cubic_gain(s, v);
        ledger.check("every-move-gain-3", gain >= 3, || format!("{at}: move {v} gains {gain}"));
        if s.newly_dominated(v).intersects(protected) {
            ledger.check("structure-move-gain-5", gain >= 5, || format!("{at}: move {v} gains {gain}"));
        }
    }
}

/// Whether the policy, started fresh at `dominated` with Dominator to move,
/// meets one of the four block conditions against every Staller answer.
fn block_property_holds(g: &Graph, dominated: VertexSet) -> bool {
    let s0 = ResidualState::with_dominated(g, dominated, Player::Dominator);
    let mut policy = CubicPolicy::default();
    let Ok((d1, _)) = policy.choose(&s0) else { return true };
    let a = cubic_gain(&s0, d1);
    let s1 = s0.apply_move(d1).unwrap();
    if s1.is_over() {
        return a >= 6;
    }
    for y in s1.legal_moves().iter() {
        let mut p = policy.clone();
        p.observe_staller(y);
        let b = cubic_gain(&s1, y);
        let s2 = s1.apply_move(y).unwrap();
        if a + b >= 12 {
            continue;
        }
        if s2.is_over() {
            return false;
        }
        let (d3, _) = p.choose(&s2).unwrap();
        let c = cubic_gain(&s2, d3);
        let s3 = s2.apply_move(d3).unwrap();
        if s3.is_over() {
            if a + b + c >= 18 {
                continue;
            }
            return false;
        }
        if s3.legal_moves().iter().any(|z| a + b + c + cubic_gain(&s3, z) < 24) {
            return false;
        }
    }
    true
}

/// Splits a Dominator-first trace into blocks of 1 to 4 moves, always
/// closing the shortest block that qualifies.
fn block_accounting(s: &[i64]) -> Result<usize, usize> {
    let len = s.len();
    let mut i = 0;
    let mut blocks = 0;
    while i < len {
        let sum = |k: usize| s[i..i + k].iter().sum::<i64>();
        let step = if i + 1 == len && s[i] >= 6 {
            1
        } else if i + 2 <= len && sum(2) >= 12 {
            2
        } else if i + 3 == len && sum(3) >= 18 {
            3
        } else if i + 4 <= len && sum(4) >= 24 {
            4
        } else {
            return Err(i);
        };
        i += step;
        blocks += 1;
    }
    Ok(blocks)
}

fn audit_cubic(ledger: &mut Ledger, g: &Graph, report: &AuditReport) -> Result<(), StrategyError> {
    check_cubic_hypothesis(g)?;
    for c in ["every-move-gain-3", "structure-move-gain-5", "case-gain", "block-accounting"] {
        ledger.declare(c);
    }
    let mut state = ResidualState::new(g, Player::Dominator);
    let mut prev_label: Option<&str> = None;
    for (i, m) in report.moves.iter().enumerate() {
        if m.player != state.mover || !state.is_legal(m.mv) {
            return Err(StrategyError::BadReport(format!("move {i} is not playable")));
        }
        let at = format!("move {i}");
        check_cubic_state(ledger, &state, &at);
        let gain = cubic_gain(&state, m.mv);
        ledger.check("recorded-gain", gain == m.s, || format!("{at}: recorded {} recomputed {gain}", m.s));
        if let Some(label) = m.case.as_deref() {
            let expected = cubic::classify_unchecked(&state);
            let consistent = if label == "C6-reply" {
                prev_label == Some("C6")
            } else {
                label == expected.label() && expected.prescribed_move() == Some(m.mv)
            };
            let floor = cubic_case_floor(label);
            ledger.check("case-gain", consistent && floor.is_some_and(|f| gain >= f), || {
                format!("{at}: case {label} (classified {}) gains {gain}", expected.label())
            });
            prev_label = Some(label);
        }
        state = state.apply_move(m.mv)?;
    }
    let blocks = block_accounting(&report.s);
    ledger.check("block-accounting", blocks.is_ok(), || format!("no block closes at move {}", blocks.unwrap_err()));
    Ok(())
}

// ---------------------------------------------------------------- claw-free

fn phased_gain(g: &Graph, s: &PhasedState, v: usize) -> i64 {
    clawfree_potential(g, s) - clawfree_potential(g, &s.play(g, v))
}

fn clawfree_case_floor(label: &str) -> Option<i64> {
    match label {
        "D1" | "D4" => Some(58),
        "D2" => Some(65),
        "D3" => Some(62),
        "D5" => Some(40),
        _ => None,
    }
}

/// Structural facts about blue vertices; `s` must have its phase settled.
fn check_clawfree_state(ledger: &mut Ledger, g: &Graph, s: &PhasedState, at: &str) {
    let c = s.colors(g);
    let blue = c.blue_plus.union(c.blue_minus);
    for v in blue.iter() {
        let nw: Vec<usize> = g.neighbors(v).intersection(c.white).iter().collect();
        let clique = nw.iter().enumerate().all(|(i, &a)| nw[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        ledger.check("blue-white-clique", clique, || format!("{at}: blue {v} sees independent white vertices"));
    }
    for u in c.white.iter() {
        if g.neighbors(u).intersection(c.white).len() >= 2 {
            for v in g.neighbors(u).intersection(blue).iter() {
                ledger.check("blue-plus-tagging", c.blue_plus.contains(v), || {
                    format!("{at}: blue {v} next to white {u} of white degree >= 2 is not tagged")
                });
            }
        }
    }
    for v in s.residual(g).legal_moves().iter() {
        let gain = phased_gain(g, s, v);
        ledger.check("staller-gain-22", gain >= 22, || format!("{at}: move {v} gains {gain}"));
    }
}

/// Dominator's fresh-policy move at a settled Dominator position in case (1):
/// either it ends the game with a decrease of at least 40, or together with
/// every Staller answer the decrease is at least 80.
fn check_pair_80(ledger: &mut Ledger, g: &Graph, s: &PhasedState, at: &str) {
    let case = clawfree::classify_unchecked(g, s.dominated);
    let Some(d) = case.prescribed_move() else { return };
    let a = phased_gain(g, s, d);
    let floor = clawfree_case_floor(case.label()).unwrap();
    ledger.check("case-gain", a >= floor, || format!("{at}: case {} gains {a}", case.label()));
    let s1 = s.play(g, d);
    let r1 = s1.residual(g);
    if r1.is_over() {
        ledger.check("pair-80", a >= 40, || format!("{at}: final move gains {a}"));
        return;
    }
    let worst = r1.legal_moves().iter().map(|y| phased_gain(g, &s1, y)).min().unwrap();
    ledger.check("pair-80", a + worst >= 80, || format!("{at}: {} then Staller gives {}", a, worst));
}

fn audit_clawfree(ledger: &mut Ledger, g: &Graph, report: &AuditReport) -> Result<(), StrategyError> {
    check_clawfree_hypothesis(g)?;
    for c in ["blue-white-clique", "blue-plus-tagging", "staller-gain-22", "case-gain", "pair-80", "endgame-ledger"] {
        ledger.declare(c);
    }
    let mut state = PhasedState::new(Player::Dominator);
    let mut endgame: Option<(usize, usize)> = None;
    let len = report.moves.len();
    for (i, m) in report.moves.iter().enumerate() {
        state.enter_phase_if_due(g);
        if m.player != state.mover || !state.residual(g).is_legal(m.mv) {
            return Err(StrategyError::BadReport(format!("move {i} is not playable")));
        }
        let at = format!("move {i}");
        check_clawfree_state(ledger, g, &state, &at);
        let gain = phased_gain(g, &state, m.mv);
        ledger.check("recorded-gain", gain == m.s, || format!("{at}: recorded {} recomputed {gain}", m.s));
        if m.player == Player::Staller {
            ledger.check("staller-gain-22", gain >= 22, || format!("{at}: Staller gains {gain}"));
        } else {
            let label = m.case.as_deref().unwrap_or("");
            let case = clawfree::classify_unchecked(g, state.dominated);
            if endgame.is_none() && case.label() == "endgame" {
                let c = state.colors(g);
                let ok = c.blue_plus.union(c.blue_minus).is_empty();
                ledger.check("endgame-ledger", ok, || format!("{at}: endgame entered with blue vertices"));
                endgame = Some((i, c.white.len()));
            }
            if endgame.is_some() {
                ledger.check("case-gain", label == "endgame", || format!("{at}: expected endgame, got {label}"));
            } else {
                let floor = clawfree_case_floor(label);
                let consistent = label == case.label() && case.prescribed_move() == Some(m.mv);
                ledger.check("case-gain", consistent && floor.is_some_and(|f| gain >= f), || {
                    format!("{at}: case {label} (classified {}) gains {gain}", case.label())
                });
                let ok = if i + 1 == len { gain >= 40 } else { gain + report.moves[i + 1].s >= 80 };
                ledger.check("pair-80", ok, || format!("{at}: pair decrease too small"));
            }
        }
        state = state.play(g, m.mv);
    }
    if let Some((t, w)) = endgame {
        let j = len - t;
        let drop: i64 = report.s[t..].iter().sum();
        ledger.check("endgame-ledger", 2 * j <= w + 1 && drop >= 44 * j as i64 - 22, || {
            format!("endgame of {j} moves on {w} white vertices drops {drop}")
        });
    }
    Ok(())
}

// ---------------------------------------------------------------- edge circuit

fn edge_gain(s: &EdgeResidualState<'_>, circuit: EdgeSet, e: usize) -> i64 {
    circuit_potential(s, circuit) - circuit_potential(&s.apply_move(e).expect("legal move"), circuit)
}

fn has_adjacent_white(s: &EdgeResidualState<'_>) -> bool {
    let white = s.undominated();
    (0..s.graph.n()).any(|v| s.graph.incident_edges(v).intersection(white).len() >= 2)
}

fn check_edge_state(ledger: &mut Ledger, s: &EdgeResidualState<'_>, circuit: EdgeSet, at: &str) {
    let adjacent = has_adjacent_white(s);
    for e in s.legal_moves().iter() {
        let gain = edge_gain(s, circuit, e);
        ledger.check("staller-gain-2", gain >= 2, || format!("{at}: edge {e} gains {gain}"));
        if !adjacent {
            ledger.check("isolated-white-gain-4", gain >= 4, || format!("{at}: edge {e} gains {gain}"));
        }
    }
}

fn audit_edge(ledger: &mut Ledger, g: &Graph, report: &AuditReport, circuit_edges: &[usize]) -> Result<(), StrategyError> {
    check_circuit(g, circuit_edges)?;
    let circuit: EdgeSet = circuit_edges.iter().copied().collect();
    let cycle = host_is_cycle(g);
    for c in ["staller-gain-2", "adjacent-white-gain-6", "isolated-white-gain-4", "average-gain-4"] {
        ledger.declare(c);
    }
    let mut state = EdgeResidualState::new(g, Player::Dominator)?;
    for (i, m) in report.moves.iter().enumerate() {
        if m.player != state.mover || !state.is_legal(m.mv) {
            return Err(StrategyError::BadReport(format!("move {i} is not playable")));
        }
        let at = format!("move {i}");
        check_edge_state(ledger, &state, circuit, &at);
        let gain = edge_gain(&state, circuit, m.mv);
        ledger.check("recorded-gain", gain == m.s, || format!("{at}: recorded {} recomputed {gain}", m.s));
        if m.player == Player::Dominator && !cycle && has_adjacent_white(&state) {
            ledger.check("adjacent-white-gain-6", gain >= 6, || format!("{at}: greedy gains {gain}"));
        }
        state = state.apply_move(m.mv)?;
    }
    if !cycle {
        let total: i64 = report.s.iter().sum();
        ledger.check("average-gain-4", total >= 4 * report.length as i64, || {
            format!("{} moves decrease the potential by only {total}", report.length)
        });
    }
    Ok(())
}

// ---------------------------------------------------------------- entry points

/// Replays `report` and evaluates every claim that belongs to `profile`.
pub fn audit_claims(report: &AuditReport, profile: &PotentialProfile) -> Result<Vec<ClaimVerdict>, StrategyError> {
    if &report.profile != profile {
        return Err(StrategyError::KindMismatch);
    }
    let g = parse_graph6(&report.graph6)?;
    let mut ledger = Ledger::default();
    match profile {
        PotentialProfile::CubicClawFree => audit_cubic(&mut ledger, &g, report)?,
        PotentialProfile::ClawFreeMinDeg2 => audit_clawfree(&mut ledger, &g, report)?,
        PotentialProfile::EdgeCircuit { circuit_edges } => audit_edge(&mut ledger, &g, report, circuit_edges)?,
    }
    let total: i64 = report.s.iter().sum();
    ledger.check(
        "telescoping",
        report.s.len() == report.moves.len()
            && report.s.iter().all(|&s| s >= 0)
            && total == report.initial_potential - report.final_potential
            && report.final_potential == 0,
        || format!("sum {total}, initial {}, final {}", report.initial_potential, report.final_potential),
    );
    ledger.check("bound", report.length <= report.bound, || {
        format!("length {} exceeds bound {}", report.length, report.bound)
    });
    Ok(ledger.0)
}

/// Checks the position-level claims on `samples` positions reached by
/// uniformly random play from the empty position.
pub fn sample_state_claims(
    g: &Graph,
    profile: &PotentialProfile,
    samples: usize,
    seed: u64,
) -> Result<Vec<ClaimVerdict>, StrategyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ledger = Ledger::default();
    match profile {
        PotentialProfile::CubicClawFree => {
            check_cubic_hypothesis(g)?;
            for c in ["every-move-gain-3", "structure-move-gain-5", "block-accounting"] {
                ledger.declare(c);
            }
            for k in 0..samples {
                let depth = rng.gen_range(0..=g.n());
                let mut s = ResidualState::new(g, Player::Dominator);
                for _ in 0..depth {
                    let next = s.apply_move(s.legal_moves().iter().choose(&mut rng).unwrap())?;
                    if next.is_over() {
                        break;
                    }
                    s = next;
                }
                let at = format!("sample {k} dominated {:#x}", s.dominated.0);
                check_cubic_state(&mut ledger, &s, &at);
                ledger.check("block-accounting", block_property_holds(g, s.dominated), || at.clone());
            }
        }
        PotentialProfile::ClawFreeMinDeg2 => {
            check_clawfree_hypothesis(g)?;
            for c in ["blue-white-clique", "blue-plus-tagging", "staller-gain-22", "case-gain", "pair-80"] {
                ledger.declare(c);
            }
            for k in 0..samples {
                let depth = rng.gen_range(0..=g.n());
                let mut s = PhasedState::new(Player::Dominator);
                s.enter_phase_if_due(g);
                for _ in 0..depth {
                    let mut next = s.play(g, s.residual(g).legal_moves().iter().choose(&mut rng).unwrap());
                    if next.residual(g).is_over() {
                        break;
                    }
                    next.enter_phase_if_due(g);
                    s = next;
                }
                let at = format!("sample {k} dominated {:#x} phase2 {}", s.dominated.0, s.phase2);
                check_clawfree_state(&mut ledger, g, &s, &at);
                if s.mover == Player::Dominator {
                    check_pair_80(&mut ledger, g, &s, &at);
                }
            }
        }
        PotentialProfile::EdgeCircuit { circuit_edges } => {
            check_circuit(g, circuit_edges)?;
            let circuit: EdgeSet = circuit_edges.iter().copied().collect();
            let cycle = host_is_cycle(g);
            for c in ["staller-gain-2", "adjacent-white-gain-6", "isolated-white-gain-4"] {
                ledger.declare(c);
            }
            for k in 0..samples {
                let depth = rng.gen_range(0..=g.m());
                let mut s = EdgeResidualState::new(g, Player::Dominator)?;
                for _ in 0..depth {
                    let next = s.apply_move(s.legal_moves().iter().choose(&mut rng).unwrap())?;
                    if next.is_over() {
                        break;
                    }
                    s = next;
                }
                let at = format!("sample {k} dominated {:#x}", s.dominated.0);
                check_edge_state(&mut ledger, &s, circuit, &at);
                if !cycle && has_adjacent_white(&s) {
                    let e = policy_edge_circuit(&s, circuit)?;
                    let gain = edge_gain(&s, circuit, e);
                    ledger.check("adjacent-white-gain-6", gain >= 6, || format!("{at}: greedy gains {gain}"));
                }
            }
        }
    }
    Ok(ledger.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategies::{edge_circuit_profile, simulate, MoveRecord, StallerModel};

    #[test]
    fn block_accounting_greedy() {
        assert_eq!(block_accounting(&[12]), Ok(1));
        assert_eq!(block_accounting(&[9, 3, 6]), Ok(2));
        assert_eq!(block_accounting(&[8, 3, 10]), Ok(1));
        assert_eq!(block_accounting(&[8, 3, 10, 3]), Ok(1));
        assert_eq!(block_accounting(&[5]), Err(0));
        assert_eq!(block_accounting(&[8, 3, 10, 3, 9, 3]), Ok(2));
    }

    #[test]
    fn k4_cubic_trace() {
        let r = simulate(&Graph::complete(4), &PotentialProfile::CubicClawFree, StallerModel::ExactAdversary).unwrap();
        assert_eq!(r.s.iter().sum::<i64>(), 12);
        assert!(r.claims.iter().all(|c| c.passed));
    }

    #[test]
    fn prism_staller_gains() {
        let r = simulate(&Graph::prism(), &PotentialProfile::CubicClawFree, StallerModel::ExactAdversary).unwrap();
        for m in r.moves.iter().filter(|m| m.player == Player::Staller) {
            assert!(m.s >= 3);
        }
        assert!(r.passed(), "{:?}", r.claims);
    }

    #[test]
    fn c5_endgame_ledger() {
        let r = simulate(&Graph::cycle(5), &PotentialProfile::ClawFreeMinDeg2, StallerModel::ExactAdversary).unwrap();
        let e = r.claims.iter().find(|c| c.claim == "endgame-ledger").unwrap();
        assert!(e.passed && e.checked >= 1);
        assert!(r.moves.iter().filter(|m| m.player == Player::Dominator).all(|m| m.case.as_deref() == Some("endgame")));
        assert_eq!(r.length, 3);
        assert!(r.passed());
    }

    #[test]
    fn tampered_reports() {
        let mut r = simulate(&Graph::prism(), &PotentialProfile::CubicClawFree, StallerModel::GreedyMinGain).unwrap();
        assert_eq!(audit_claims(&r, &PotentialProfile::ClawFreeMinDeg2), Err(StrategyError::KindMismatch));
        r.s[0] += 1;
        r.moves[0].s += 1;
        let v = audit_claims(&r, &PotentialProfile::CubicClawFree).unwrap();
        assert!(!v.iter().find(|c| c.claim == "recorded-gain").unwrap().passed);
        assert!(!v.iter().find(|c| c.claim == "telescoping").unwrap().passed);
        r.moves.push(MoveRecord { player: Player::Dominator, mv: 0, s: 0, case: None });
        assert!(matches!(audit_claims(&r, &PotentialProfile::CubicClawFree), Err(StrategyError::BadReport(_))));
    }

    #[test]
    fn sampled_claims_hold_on_small_hosts() {
        let prism = Graph::prism();
        for v in sample_state_claims(&prism, &PotentialProfile::CubicClawFree, 200, 1).unwrap() {
            assert!(v.passed, "{v:?}");
        }
        let k4 = Graph::complete(4);
        let prof = edge_circuit_profile(&k4).unwrap();
        for v in sample_state_claims(&k4, &prof, 200, 2).unwrap() {
            assert!(v.passed, "{v:?}");
        }
        let c6 = Graph::cycle(6);
        for v in sample_state_claims(&prism, &PotentialProfile::ClawFreeMinDeg2, 200, 3)
            .unwrap()
            .into_iter()
            .chain(sample_state_claims(&c6, &PotentialProfile::ClawFreeMinDeg2, 50, 4).unwrap())
        {
            assert!(v.passed, "{v:?}");
        }
    }
}
