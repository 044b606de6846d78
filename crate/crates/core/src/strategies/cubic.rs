//! Case analysis and Dominator policy for claw-free cubic graphs.

use serde::Serialize;

use super::StrategyError;
use crate::game::ResidualState;
use crate::graph::{Graph, VertexSet};
use crate::recognizers::{is_claw_free, is_cubic, is_triangle_edge, triangles};

/// First applicable case of the cubic analysis with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum CubicCaseClass {
    /// A white vertex with three white neighbours.
    C1 { vertex: usize },
    /// A white triangle.
    C2 { triangle: [usize; 3] },
    /// A white path component on at least three vertices, from its smaller end.
    C3 { path: Vec<usize> },
    /// A white `P_2` component that is not the centre of a K-subgraph.
    C4 { pair: [usize; 2] },
    /// Sorted vertices of a diamond with white centre and blue tips.
    C5 { k_subgraph: [usize; 4] },
    /// A white cycle labelled `v_1, ..., v_j` with `v_1 v_2` a triangle edge.
    C6 { cycle: Vec<usize> },
    /// An isolated white vertex.
    C7 { vertex: usize },
    Done,
}

impl CubicCaseClass {
    pub fn label(&self) -> &'static str {
        match self {
            CubicCaseClass::C1 { .. } => "C1",
            CubicCaseClass::C2 { .. } => "C2",
            CubicCaseClass::C3 { .. } => "C3",
            CubicCaseClass::C4 { .. } => "C4",
            CubicCaseClass::C5 { .. } => "C5",
            CubicCaseClass::C6 { .. } => "C6",
            CubicCaseClass::C7 { .. } => "C7",
            CubicCaseClass::Done => "Done",
        }
    }

    /// Dominator's prescribed vertex.
    pub fn prescribed_move(&self) -> Option<usize> {
        match self {
            CubicCaseClass::C1 { vertex } | CubicCaseClass::C7 { vertex } => Some(*vertex),
            CubicCaseClass::C2 { triangle } => Some(triangle[0]),
            CubicCaseClass::C3 { path } => Some(path[1]),
            CubicCaseClass::C4 { pair } => Some(pair[0]),
            CubicCaseClass::C5 { k_subgraph } => Some(k_subgraph[0]),
            CubicCaseClass::C6 { cycle } => Some(cycle[1]),
            CubicCaseClass::Done => None,
        }
    }
}

pub(crate) fn check_cubic_hypothesis(g: &Graph) -> Result<(), StrategyError> {
    if !is_cubic(g) {
        return Err(StrategyError::Hypothesis("graph is not cubic".into()));
    }
    if !is_claw_free(g) {
        return Err(StrategyError::Hypothesis("graph is not claw-free".into()));
    }
    Ok(())
}

/// Components of the white subgraph split by shape.
pub(crate) struct WhiteComponents {
    pub paths: Vec<Vec<usize>>,
    pub cycles: Vec<VertexSet>,
}

fn edges_within(g: &Graph, s: VertexSet) -> usize {
    s.iter().map(|v| g.neighbors(v).intersection(s).len()).sum::<usize>() / 2
}

/// Splits `G[W]` into path components (ordered from the smaller end) and
/// the remaining components, which are cycles when `Δ(G[W]) <= 2`.
pub(crate) fn white_components(g: &Graph, white: VertexSet) -> WhiteComponents {
    let mut out = WhiteComponents { paths: Vec::new(), cycles: Vec::new() };
    for comp in g.components_within(white) {
        if edges_within(g, comp) + 1 == comp.len() && comp.iter().all(|v| g.neighbors(v).intersection(comp).len() <= 2)
        {
            let start = comp.iter().find(|&v| g.neighbors(v).intersection(comp).len() <= 1).unwrap();
            let mut path = vec![start];
            let mut seen = VertexSet::singleton(start);
            while let Some(next) = g.neighbors(*path.last().unwrap()).intersection(comp).difference(seen).first() {
                seen.insert(next);
                path.push(next);
            }
            if path.len() > 1 && path[path.len() - 1] < path[0] {
                path.reverse();
            }
            out.paths.push(path);
        } else {
            out.cycles.push(comp);
        }
    }
    out
}

/// Diamonds whose two central vertices are white and whose tips are blue,
/// as sorted 4-tuples in increasing order.
pub(crate) fn k_subgraphs(g: &Graph, white: VertexSet, blue: VertexSet) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for u in white.iter() {
        for v in g.neighbors(u).intersection(white).iter().filter(|&v| v > u) {
            let common = g.neighbors(u).intersection(g.neighbors(v));
            if common.len() == 2 && common.is_subset(blue) {
                let mut t: Vec<usize> = common.iter().chain([u, v]).collect();
                t.sort_unstable();
                let (a, b) = (common.first().unwrap(), common.iter().nth(1).unwrap());
                if !g.has_edge(a, b) {
                    out.push([t[0], t[1], t[2], t[3]]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Orders a white cycle as `v_1, ..., v_j`: `v_2` is its smallest vertex and
/// `v_1` the neighbour joined to it by a triangle edge.
fn label_cycle(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let v2 = comp.first().unwrap();
    let nb: Vec<usize> = g.neighbors(v2).intersection(comp).iter().collect();
    let v1 = nb.iter().copied().find(|&x| is_triangle_edge(g, v2, x)).unwrap_or(nb[0]);
    let mut order = vec![v1, v2];
    let mut seen = VertexSet::from_indices([v1, v2]);
    while let Some(next) = g.neighbors(*order.last().unwrap()).intersection(comp).difference(seen).first() {
        seen.insert(next);
        order.push(next);
    }
    order
}

/// Classifies a residual graph of a claw-free cubic host.
pub fn classify_cubic_case(state: &ResidualState<'_>) -> Result<CubicCaseClass, StrategyError> {
    let g = state.graph;
    check_cubic_hypothesis(g)?;
    Ok(classify_unchecked(state))
}

pub(crate) fn classify_unchecked(state: &ResidualState<'_>) -> CubicCaseClass {
    let g = state.graph;
    let c = state.colors();
    let white = c.white;
    if white.is_empty() {
        return CubicCaseClass::Done;
    }
    if let Some(v) = white.iter().find(|&v| g.neighbors(v).intersection(white).len() == 3) {
        return CubicCaseClass::C1 { vertex: v };
    }
    if let Some(t) = triangles(g).into_iter().find(|t| t.iter().all(|&x| white.contains(x))) {
        return CubicCaseClass::C2 { triangle: t };
    }
    let comps = white_components(g, white);
    if let Some(p) = comps.paths.iter().find(|p| p.len() >= 3) {
        return CubicCaseClass::C3 { path: p.clone() };
    }
    let ks = k_subgraphs(g, white, c.blue);
    let in_k = |u: usize| ks.iter().any(|k| k.contains(&u));
    if let Some(p) = comps.paths.iter().find(|p| p.len() == 2 && !in_k(p[0])) {
        return CubicCaseClass::C4 { pair: [p[0].min(p[1]), p[0].max(p[1])] };
    }
    if let Some(k) = ks.first() {
        return CubicCaseClass::C5 { k_subgraph: *k };
    }
    if let Some(&comp) = comps.cycles.first() {
        return CubicCaseClass::C6 { cycle: label_cycle(g, comp) };
    }
    let v = comps.paths.iter().find(|p| p.len() == 1).map(|p| p[0]).expect("white vertex in some component");
    CubicCaseClass::C7 { vertex: v }
}

/// Remembered two-move plan from a C6 move on a cycle of length at least 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct C6Plan {
    trigger: usize,
    reply: usize,
    needs_white: VertexSet,
}

/// Stateful Dominator policy for claw-free cubic graphs.
#[derive(Clone, Debug, Default)]
pub struct CubicPolicy {
    plan: Option<C6Plan>,
    last_staller: Option<usize>,
}

impl CubicPolicy {
    pub fn new(g: &Graph) -> Result<Self, StrategyError> {
        check_cubic_hypothesis(g)?;
        Ok(CubicPolicy::default())
    }

    /// Records Staller's move so a pending plan can react to it.
    pub fn observe_staller(&mut self, mv: usize) {
        self.last_staller = Some(mv);
    }

    /// Dominator's move and the case label it was chosen under.
    pub fn choose(&mut self, state: &ResidualState<'_>) -> Result<(usize, String), StrategyError> {
        let plan = self.plan.take();
        let last = self.last_staller.take();
        if state.is_over() {
            return Err(StrategyError::GameOver);
        }
        if let Some(p) = plan {
            if last == Some(p.trigger) && p.needs_white.is_subset(state.undominated()) {
                return Ok((p.reply, "C6-reply".into()));
            }
        }
        let class = classify_unchecked(state);
        if let CubicCaseClass::C6 { cycle } = &class {
            let j = cycle.len();
            if j >= 6 {
                self.plan = Some(C6Plan {
                    trigger: cycle[0],
                    reply: cycle[j - 3],
                    needs_white: VertexSet::from_indices([cycle[j - 3], cycle[j - 2]]),
                });
            }
        }
        let mv = class.prescribed_move().ok_or(StrategyError::GameOver)?;
        Ok((mv, class.label().into()))
    }
}

/// Stateless entry point: the prescribed vertex of the current case.
pub fn policy_cubic(state: &ResidualState<'_>) -> Result<usize, StrategyError> {
    check_cubic_hypothesis(state.graph)?;
    classify_unchecked(state).prescribed_move().ok_or(StrategyError::GameOver)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::game::Player;
    use crate::graph::BitSet;
    use crate::strategies::{move_gain, PotentialProfile, ProfileState};

    fn gain(s: &ResidualState<'_>, v: usize) -> i64 {
        move_gain(&PotentialProfile::CubicClawFree, ProfileState::Vertex(s), v).unwrap()
    }

    /// Replaces every vertex of a cubic graph by a triangle.
    pub(crate) fn inflate_cubic(h: &Graph) -> Graph {
        let mut edges = Vec::new();
        let slot = |v: usize, u: usize| 3 * v + h.neighbors(v).iter().position(|x| x == u).unwrap();
        for v in 0..h.n() {
            edges.extend([(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]);
        }
        for &(u, v) in h.edges() {
            edges.push((slot(u, v), slot(v, u)));
        }
        Graph::from_edges(3 * h.n(), &edges).unwrap()
    }

    /// `k` diamonds joined in a ring through their tips.
    pub(crate) fn diamond_ring(k: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..k {
            let (a, c1, c2, b) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
            edges.extend([(a, c1), (a, c2), (c1, c2), (c1, b), (c2, b), (b, (4 * i + 4) % (4 * k))]);
        }
        Graph::from_edges(4 * k, &edges).unwrap()
    }

    /// Dominated sets `N[P]` over all played sets `P`.
    fn reachable(g: &Graph) -> Vec<BitSet> {
        let mut out: Vec<BitSet> = (0u64..1 << g.n()).map(|p| g.closed_neighborhood_of_set(BitSet(p))).collect();
        out.sort_unstable_by_key(|b| b.0);
        out.dedup();
        out
    }

    #[test]
    fn first_cases() {
        let k4 = Graph::complete(4);
        let s = ResidualState::new(&k4, Player::Dominator);
        assert_eq!(classify_cubic_case(&s).unwrap(), CubicCaseClass::C1 { vertex: 0 });
        assert_eq!(policy_cubic(&s).unwrap(), 0);

        let prism = Graph::prism();
        let s = ResidualState::new(&prism, Player::Dominator);
        let c = classify_cubic_case(&s).unwrap();
        assert_eq!(c.label(), "C1");
        assert!(gain(&s, c.prescribed_move().unwrap()) >= 9);

        let done = ResidualState::with_dominated(&prism, prism.vertex_set(), Player::Dominator);
        assert_eq!(classify_cubic_case(&done).unwrap(), CubicCaseClass::Done);
        assert!(policy_cubic(&done).is_err());
    }

    #[test]
    fn hypothesis_errors() {
        let c5 = Graph::cycle(5);
        assert!(classify_cubic_case(&ResidualState::new(&c5, Player::Dominator)).is_err());
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(CubicPolicy::new(&k33).is_err());
    }

    #[test]
    fn case_gains_on_every_reachable_state() {
        let hosts = [Graph::complete(4), Graph::prism(), inflate_cubic(&Graph::complete(4)), diamond_ring(3)];
        let mut seen = std::collections::BTreeSet::new();
        for g in &hosts {
            check_cubic_hypothesis(g).unwrap();
            for d in reachable(g) {
                let s = ResidualState::with_dominated(g, d, Player::Dominator);
                let c = classify_unchecked(&s);
                seen.insert(c.label());
                let Some(v) = c.prescribed_move() else { continue };
                let want = match c.label() {
                    "C5" | "C6" => 8,
                    "C7" => 6,
                    _ => 9,
                };
                let got = gain(&s, v);
                assert!(got >= want, "{} on {:?}: s = {got}", c.label(), d);
                if c.label() == "C7" {
                    assert_eq!(got, 6);
                }
            }
        }
        for l in ["C1", "C2", "C3", "C4", "C6", "C7", "Done"] {
            assert!(seen.contains(l), "case {l} never reached");
        }
    }

    #[test]
    fn c6_reply_after_trigger() {
        let g = inflate_cubic(&Graph::complete(4));
        let mut found = false;
        for d in reachable(&g) {
            let s = ResidualState::with_dominated(&g, d, Player::Dominator);
            let CubicCaseClass::C6 { cycle } = classify_unchecked(&s) else { continue };
            if cycle.len() < 6 {
                continue;
            }
            found = true;
            let mut policy = CubicPolicy::new(&g).unwrap();
            let (v2, label) = policy.choose(&s).unwrap();
            assert_eq!((v2, label.as_str()), (cycle[1], "C6"));
            let after = s.apply_move(v2).unwrap();
            let v1 = cycle[0];
            assert!(after.is_legal(v1));
            let after = after.apply_move(v1).unwrap();
            policy.observe_staller(v1);
            let (reply, label) = policy.choose(&after).unwrap();
            assert_eq!((reply, label.as_str()), (cycle[cycle.len() - 3], "C6-reply"));
            assert!(gain(&after, reply) >= 10);
        }
        assert!(found);
    }
}
