//! Graph-class predicates and structure finders: claw-freeness, cubicity,
//! forbidden configurations, Hamiltonian paths and cycles, and edge
//! dominating circuits and trails.

use serde::Serialize;

use crate::graph::{BitSet, EdgeSet, Graph, VertexSet};

/// Largest edge count for which the dominating-trail search runs.
pub const TRAIL_SEARCH_MAX_EDGES: usize = 24;

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// A claw as `(center, [leaves])`, the lexicographically least one.
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    for c in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(c).iter().collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some((c, [a, b, d]));
                    }
                }
            }
        }
    }
    None
}

pub fn is_cubic(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) == 3)
}

pub fn min_degree(g: &Graph) -> usize {
    g.min_degree()
}

/// Configurations excluded by the hypotheses of the triangle contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pattern {
    K4,
    Diamond,
    /// Two vertex-disjoint triangles joined by two vertex-disjoint edges.
    C6Plus,
}

/// Whether `g` avoids `pattern`. `K4` and `Diamond` are tested as induced
/// subgraphs, `C6Plus` as a (not necessarily induced) subgraph.
pub fn forbidden_subgraph_free(g: &Graph, pattern: Pattern) -> bool {
    find_pattern(g, pattern).is_none()
}

/// Vertices of the first occurrence of `pattern`, if any.
pub fn find_pattern(g: &Graph, pattern: Pattern) -> Option<Vec<usize>> {
    match pattern {
        Pattern::K4 | Pattern::Diamond => {
            let want = if pattern == Pattern::K4 { 6 } else { 5 };
            let n = g.n();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            let q = [a, b, c, d];
                            let mut e = 0;
                            for i in 0..4 {
                                for j in i + 1..4 {
                                    e += g.has_edge(q[i], q[j]) as usize;
                                }
                            }
                            if e == want {
                                return Some(q.to_vec());
                            }
                        }
                    }
                }
            }
            None
        }
        Pattern::C6Plus => {
            let tris = triangles(g);
            for (i, t1) in tris.iter().enumerate() {
                for t2 in &tris[i + 1..] {
                    if t1.iter().any(|v| t2.contains(v)) {
                        continue;
                    }
                    for (x, &a1) in t1.iter().enumerate() {
                        for &a2 in &t1[x + 1..] {
                            for &b1 in t2 {
                                for &b2 in t2 {
                                    if b1 != b2 && g.has_edge(a1, b1) && g.has_edge(a2, b2) {
                                        let mut v: Vec<usize> = t1.iter().chain(t2).copied().collect();
                                        v.sort_unstable();
                                        return Some(v);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            None
        }
    }
}

/// All triangles as sorted triples, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            for c in g.neighbors(a).intersection(g.neighbors(b)).iter().filter(|&c| c > b) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// The three kinds of vertices in a claw-free cubic graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicVertexKind {
    InK4Component,
    DiamondCentral,
    /// Incident with exactly one flat edge and lying in exactly one triangle.
    FlatAndTriangle,
    /// None of the above; impossible in a claw-free cubic graph.
    Other,
}

pub fn cubic_vertex_kind(g: &Graph, v: usize) -> CubicVertexKind {
    let comp = g.component_of(v);
    if comp.len() == 4 && comp.iter().all(|u| g.degree(u) == 3) {
        return CubicVertexKind::InK4Component;
    }
    let nb = g.neighbors(v);
    // v is a diamond centre when some neighbour shares two common neighbours with it
    if nb.iter().any(|u| g.neighbors(u).intersection(nb).len() >= 2) {
        return CubicVertexKind::DiamondCentral;
    }
    let triangle_edges = nb.iter().filter(|&u| g.neighbors(u).intersects(nb)).count();
    let tris = triangles(g).into_iter().filter(|t| t.contains(&v)).count();
    if tris == 1 && triangle_edges == 2 && g.degree(v) == 3 {
        CubicVertexKind::FlatAndTriangle
    } else {
        CubicVertexKind::Other
    }
}

/// Whether the edge `uv` lies on a triangle.
pub fn is_triangle_edge(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).intersects(g.neighbors(v))
}

/// Three-valued answer for searches with a size budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

pub fn is_traceable(g: &Graph) -> bool {
    hamiltonian_path(g).is_some()
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian_cycle(g).is_some()
}

/// Some Hamiltonian path, found by backtracking with connectivity and
/// dead-end pruning. Deterministic: starts are tried in ascending order.
pub fn hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(vec![0]);
    }
    if !g.is_connected() {
        return None;
    }
    let leaves = (0..n).filter(|&v| g.degree(v) == 1).count();
    if leaves > 2 {
        return None;
    }
    let starts: Vec<usize> = if leaves > 0 {
        (0..n).filter(|&v| g.degree(v) == 1).take(1).collect()
    } else {
        (0..n).collect()
    };
    let mut path = Vec::with_capacity(n);
    for s in starts {
        path.clear();
        path.push(s);
        if extend(g, &mut path, BitSet::singleton(s), None) {
            return Some(path);
        }
    }
    None
}

/// Some Hamiltonian cycle as a vertex sequence starting at 0 (the closing
/// edge back to 0 is implicit). Requires `n >= 3`.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let mut path = vec![0];
    if extend(g, &mut path, BitSet::singleton(0), Some(0)) {
        Some(path)
    } else {
        None
    }
}

fn extend(g: &Graph, path: &mut Vec<usize>, visited: VertexSet, close_to: Option<usize>) -> bool {
    let all = g.vertex_set();
    let end = *path.last().unwrap();
    if visited == all {
        return match close_to {
            Some(s) => g.has_edge(end, s),
            None => true,
        };
    }
    let unvisited = all.difference(visited);
    // what remains must hang together through the current end
    if g.component_within(end, unvisited.with(end)) != unvisited.with(end) {
        return false;
    }
    let mut avail_pool = unvisited.with(end);
    if let Some(s) = close_to {
        avail_pool.insert(s);
    }
    let mut dead_ends = 0;
    for u in unvisited.iter() {
        let avail = g.neighbors(u).intersection(avail_pool).len();
        match close_to {
            Some(_) => {
                if avail < 2 {
                    return false;
                }
            }
            None => {
                if avail == 0 {
                    return false;
                }
                if avail == 1 {
                    dead_ends += 1;
                    if dead_ends > 1 {
                        return false;
                    }
                }
            }
        }
    }
    for next in g.neighbors(end).intersection(unvisited).iter() {
        path.push(next);
        if extend(g, path, visited.with(next), close_to) {
            return true;
        }
        path.pop();
    }
    false
}

/// A trail: consecutive vertices adjacent, no edge repeated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trail {
    pub vertices: Vec<usize>,
    pub edge_indices: Vec<usize>,
    pub closed: bool,
}

impl Trail {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edge_indices.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.edge_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_indices.is_empty()
    }

    /// First and last vertex.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Checks the trail axioms against `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.edge_indices.is_empty() || self.vertices.len() != self.edge_indices.len() + 1 {
            return false;
        }
        let mut used = BitSet::EMPTY;
        for (i, &e) in self.edge_indices.iter().enumerate() {
            if e >= g.m() || used.contains(e) {
                return false;
            }
            used.insert(e);
            let (a, b) = (self.vertices[i], self.vertices[i + 1]);
            if g.edge_index(a, b) != Some(e) {
                return false;
            }
        }
        let (s, t) = self.endpoints();
        self.closed == (s == t)
    }

    /// Every edge of `g` has an endpoint on the trail.
    pub fn is_dominating_in(&self, g: &Graph) -> bool {
        let vs = self.vertex_set();
        g.edges().iter().all(|&(u, v)| vs.contains(u) || vs.contains(v))
    }
}

/// Result of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SearchOutcome<T> {
    Found(T),
    Absent,
    /// The instance exceeds the search budget.
    Unknown,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn decision(&self) -> Decision {
        match self {
            SearchOutcome::Found(_) => Decision::Yes,
            SearchOutcome::Absent => Decision::No,
            SearchOutcome::Unknown => Decision::Unknown,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TrailKind {
    Closed,
    Any,
    Open,
}

impl TrailKind {
    fn max_odd(self) -> usize {
        match self {
            TrailKind::Closed => 0,
            TrailKind::Any | TrailKind::Open => 2,
        }
    }

    fn accepts_odd(self, odd: usize) -> bool {
        match self {
            TrailKind::Closed => odd == 0,
            TrailKind::Any => odd == 0 || odd == 2,
            TrailKind::Open => odd == 2,
        }
    }
}

/// A closed trail whose vertices cover every edge. Among qualifying edge sets
/// the one with fewest edges is used, ties broken by the lexicographic order
/// of the sorted edge indices.
pub fn find_edge_dominating_circuit(g: &Graph) -> SearchOutcome<Trail> {
    find_dominating(g, TrailKind::Closed)
}

/// An open or closed trail whose vertices cover every edge, chosen as in
/// [`find_edge_dominating_circuit`].
pub fn find_edge_dominating_trail(g: &Graph) -> SearchOutcome<Trail> {
    find_dominating(g, TrailKind::Any)
}

/// Like [`find_edge_dominating_trail`] but only open trails qualify.
pub fn find_open_edge_dominating_trail(g: &Graph) -> SearchOutcome<Trail> {
    find_dominating(g, TrailKind::Open)
}

fn find_dominating(g: &Graph, kind: TrailKind) -> SearchOutcome<Trail> {
    let m = g.m();
    if m == 0 {
        return SearchOutcome::Absent;
    }
    if m > TRAIL_SEARCH_MAX_EDGES {
        return SearchOutcome::Unknown;
    }
    let mut search = SubsetSearch { g, kind, chosen: Vec::new() };
    for k in 1..=m {
        if let Some(s) = search.run(k, 0, BitSet::EMPTY) {
            let trail = euler_trail(g, s).expect("qualifying edge set admits an Euler trail");
            return SearchOutcome::Found(trail);
        }
    }
    SearchOutcome::Absent
}

struct SubsetSearch<'g> {
    g: &'g Graph,
    kind: TrailKind,
    chosen: Vec<usize>,
}

impl SubsetSearch<'_> {
    /// Lexicographically first `k`-subset extending `set` with indices `>= from`.
    fn run(&mut self, k: usize, from: usize, set: EdgeSet) -> Option<EdgeSet> {
        let g = self.g;
        let m = g.m();
        let covered = g.vertices_of_edges(set);
        if self.chosen.len() == k {
            let ok = g.edges().iter().all(|&(u, v)| covered.contains(u) || covered.contains(v))
                && self.kind.accepts_odd(odd_vertices(g, set).len())
                && edge_set_connected(g, set);
            return ok.then_some(set);
        }
        let need = k - self.chosen.len();
        if from + need > m {
            return None;
        }
        let future = BitSet::full(m).difference(BitSet::full(from));
        // cover feasibility
        for &(u, v) in g.edges() {
            if !covered.contains(u)
                && !covered.contains(v)
                && !g.incident_edges(u).union(g.incident_edges(v)).intersects(future)
            {
                return None;
            }
        }
        // parity: odd vertices with no future incident edge are final
        let stuck_odd = odd_vertices(g, set)
            .iter()
            .filter(|&v| !g.incident_edges(v).intersects(future))
            .count();
        if stuck_odd > self.kind.max_odd() {
            return None;
        }
        for e in from..=m - need {
            self.chosen.push(e);
            let r = self.run(k, e + 1, set.with(e));
            self.chosen.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
}

fn odd_vertices(g: &Graph, set: EdgeSet) -> VertexSet {
    let mut odd = BitSet::EMPTY;
    for e in set.iter() {
        let (u, v) = g.edge(e);
        odd.0 ^= 1 << u;
        odd.0 ^= 1 << v;
    }
    odd
}

fn edge_set_connected(g: &Graph, set: EdgeSet) -> bool {
    let Some(first) = set.first() else { return false };
    let mut reached = BitSet::singleton(first);
    let mut verts = {
        let (u, v) = g.edge(first);
        BitSet::from_indices([u, v])
    };
    loop {
        let mut grew = false;
        for e in set.difference(reached).iter() {
            let (u, v) = g.edge(e);
            if verts.contains(u) || verts.contains(v) {
                reached.insert(e);
                verts = verts.with(u).with(v);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    reached == set
}

/// Hierholzer traversal of the edge set `set`, which must be connected with
/// zero or two odd vertices. Starts at the smaller odd vertex, or at the
/// smallest vertex when all degrees are even; at every step the
/// smallest-index unused edge is taken.
pub fn euler_trail(g: &Graph, set: EdgeSet) -> Option<Trail> {
    if set.is_empty() || !edge_set_connected(g, set) {
        return None;
    }
    let odd = odd_vertices(g, set);
    let start = match odd.len() {
        0 => g.vertices_of_edges(set).first().unwrap(),
        2 => odd.first().unwrap(),
        _ => return None,
    };
    let mut unused = set;
    // stack of (vertex, edge used to reach it)
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut out: Vec<(usize, Option<usize>)> = Vec::new();
    while let Some(&(v, _)) = stack.last() {
        match g.incident_edges(v).intersection(unused).first() {
            Some(e) => {
                unused.remove(e);
                let (a, b) = g.edge(e);
                stack.push((if a == v { b } else { a }, Some(e)));
            }
            None => out.push(stack.pop().unwrap()),
        }
    }
    out.reverse();
    let vertices: Vec<usize> = out.iter().map(|&(v, _)| v).collect();
    let edge_indices: Vec<usize> = out.iter().filter_map(|&(_, e)| e).collect();
    let closed = odd.is_empty();
    Some(Trail { vertices, edge_indices, closed })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent-triple brute force over all vertex quadruples.
    fn claw_free_brute(g: &Graph) -> bool {
        let n = g.n();
        for c in 0..n {
            for a in 0..n {
                for b in a + 1..n {
                    for d in b + 1..n {
                        let leaves = [a, b, d];
                        if leaves.contains(&c) {
                            continue;
                        }
                        if leaves.iter().all(|&x| g.has_edge(c, x))
                            && !g.has_edge(a, b)
                            && !g.has_edge(a, d)
                            && !g.has_edge(b, d)
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn claw_examples() {
        assert!(!is_claw_free(&Graph::complete_bipartite(1, 3)));
        for n in 3..12 {
            assert!(is_claw_free(&Graph::cycle(n)));
        }
        let p = Graph::petersen();
        assert!(!is_claw_free(&p));
        assert_eq!(claw_free_brute(&p), is_claw_free(&p));
    }

    #[test]
    fn cubic_and_min_degree() {
        assert!(is_cubic(&Graph::complete(4)));
        assert_eq!(min_degree(&Graph::complete(4)), 3);
        assert!(!is_cubic(&Graph::cycle(5)));
        assert_eq!(min_degree(&Graph::cycle(5)), 2);
        assert_eq!(min_degree(&Graph::path(3)), 1);
    }

    #[test]
    fn forbidden_patterns() {
        assert!(!forbidden_subgraph_free(&Graph::complete(4), Pattern::K4));
        assert!(forbidden_subgraph_free(&Graph::cycle(6), Pattern::C6Plus));
        assert!(!forbidden_subgraph_free(&Graph::prism(), Pattern::C6Plus));
        assert!(forbidden_subgraph_free(&Graph::prism(), Pattern::K4));
        assert!(forbidden_subgraph_free(&Graph::prism(), Pattern::Diamond));
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!forbidden_subgraph_free(&diamond, Pattern::Diamond));
        // K4 contains diamonds only as non-induced subgraphs
        assert!(forbidden_subgraph_free(&Graph::complete(4), Pattern::Diamond));
    }

    #[test]
    fn hamiltonicity_examples() {
        let c9 = Graph::cycle(9);
        assert!(is_traceable(&c9) && is_hamiltonian(&c9));
        assert!(!is_traceable(&Graph::complete_bipartite(1, 3)));
        let p = Graph::petersen();
        assert!(!is_hamiltonian(&p));
        assert!(is_traceable(&p));
        assert!(is_traceable(&Graph::empty(1).unwrap()));
        assert!(!is_hamiltonian(&Graph::path(2)));
        let path = hamiltonian_path(&p).unwrap();
        assert_eq!(path.len(), 10);
        assert!(path.windows(2).all(|w| p.has_edge(w[0], w[1])));
    }

    #[test]
    fn circuit_examples() {
        let c7 = Graph::cycle(7);
        let t = find_edge_dominating_circuit(&c7).found().unwrap();
        assert!(t.closed && t.len() == 7 && t.is_valid_in(&c7));

        let k4 = Graph::complete(4);
        let t = find_edge_dominating_circuit(&k4).found().unwrap();
        assert_eq!(t.edge_indices.len(), 3);
        assert_eq!(t.vertex_set(), BitSet::from_indices([0, 1, 2]));
        assert!(t.is_dominating_in(&k4));

        assert_eq!(find_edge_dominating_circuit(&Graph::complete_bipartite(1, 3)), SearchOutcome::Absent);
    }

    #[test]
    fn trail_examples() {
        let p4 = Graph::path(4);
        let t = find_edge_dominating_trail(&p4).found().unwrap();
        assert_eq!(t.vertices, vec![1, 2]);
        assert!(!t.closed);

        let star = Graph::complete_bipartite(1, 3);
        let t = find_edge_dominating_trail(&star).found().unwrap();
        assert_eq!(t.vertices, vec![0, 1]);

        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        assert_eq!(find_edge_dominating_trail(&two_triangles), SearchOutcome::Absent);

        // K3 has a closed dominating trail but its shortest open one is a single edge
        let k3 = Graph::complete(3);
        assert!(find_edge_dominating_trail(&k3).found().unwrap().len() == 1);
        assert!(!find_open_edge_dominating_trail(&k3).found().unwrap().closed);
    }

    #[test]
    fn trail_search_budget() {
        let k8 = Graph::complete(8);
        assert_eq!(find_edge_dominating_circuit(&k8), SearchOutcome::Unknown);
    }

    #[test]
    fn euler_trail_is_valid() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let t = euler_trail(&g, g.edge_set()).unwrap();
        assert!(t.closed && t.len() == 6 && t.is_valid_in(&g));
        assert_eq!(t.vertices[0], 0);
    }

    #[test]
    fn trichotomy_on_small_claw_free_cubic() {
        let k4 = Graph::complete(4);
        assert_eq!(cubic_vertex_kind(&k4, 0), CubicVertexKind::InK4Component);
        let prism = Graph::prism();
        for v in 0..6 {
            assert_eq!(cubic_vertex_kind(&prism, v), CubicVertexKind::FlatAndTriangle);
        }
    }
}
