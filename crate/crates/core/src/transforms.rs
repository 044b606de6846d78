//! Triangle inflation of cubic graphs, its inverse, and the Hamiltonicity
//! transfer between the two.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::recognizers::{find_claw, find_pattern, is_cubic, is_hamiltonian, triangles, Decision, Pattern};

/// Largest cubic graph whose Hamiltonicity transfer is checked.
pub const TRANSFER_MAX_VERTICES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("claw centred at {centre} with leaves {leaves:?}")]
    Claw { centre: usize, leaves: [usize; 3] },
    #[error("forbidden {pattern:?} on vertices {vertices:?}")]
    Forbidden { pattern: Pattern, vertices: Vec<usize> },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Correspondence between a cubic graph `F` and its inflation `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleMap {
    /// `triangles[u]` = the three `G`-vertices of `t(u)`, ascending.
    pub triangles: Vec<[usize; 3]>,
    /// For each edge of `F` (in `F`'s edge order) the connecting `G`-edge.
    pub connecting: Vec<(usize, usize)>,
}

/// Replaces every vertex `u` of a cubic `F` by the triangle
/// `3u, 3u+1, 3u+2`; slot `k` of `t(u)` serves the `k`-th smallest neighbour.
pub fn inflate(f: &Graph) -> Result<(Graph, TriangleMap), TransformError> {
    if !is_cubic(f) || f.n() == 0 {
        return Err(TransformError::NotCubic);
    }
    if 3 * f.n() > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(3 * f.n()).into());
    }
    let slot = |u: usize, v: usize| 3 * u + f.neighbors(u).iter().position(|x| x == v).unwrap();
    let mut edges = Vec::with_capacity(3 * f.n() + f.m());
    for u in 0..f.n() {
        edges.extend([(3 * u, 3 * u + 1), (3 * u, 3 * u + 2), (3 * u + 1, 3 * u + 2)]);
    }
    let connecting: Vec<(usize, usize)> = f.edges().iter().map(|&(u, v)| (slot(u, v), slot(v, u))).collect();
    edges.extend(&connecting);
    let g = Graph::from_edges(3 * f.n(), &edges)?;
    let triangles = (0..f.n()).map(|u| [3 * u, 3 * u + 1, 3 * u + 2]).collect();
    Ok((g, TriangleMap { triangles, connecting }))
}

/// Contracts every triangle of a claw-free cubic `(K4, diamond, C6+)`-free
/// graph to a vertex. Triangles are numbered by their smallest vertex.
pub fn contract_triangles(g: &Graph) -> Result<(Graph, TriangleMap), TransformError> {
    if !is_cubic(g) {
        return Err(TransformError::NotCubic);
    }
    if let Some((centre, leaves)) = find_claw(g) {
        return Err(TransformError::Claw { centre, leaves });
    }
    for pattern in [Pattern::K4, Pattern::Diamond, Pattern::C6Plus] {
        if let Some(vertices) = find_pattern(g, pattern) {
            return Err(TransformError::Forbidden { pattern, vertices });
        }
    }
    let tris = triangles(g);
    let mut owner = vec![usize::MAX; g.n()];
    for (i, t) in tris.iter().enumerate() {
        for &v in t {
            owner[v] = i;
        }
    }
    let mut connecting = Vec::new();
    let mut f_edges = Vec::new();
    for &(a, b) in g.edges() {
        let (ta, tb) = (owner[a], owner[b]);
        if ta != tb {
            f_edges.push((ta.min(tb), ta.max(tb)));
            connecting.push((a, b));
        }
    }
    let f = Graph::from_edges(tris.len(), &f_edges)?;
    // reorder connecting edges to follow F's edge order
    let mut by_f: Vec<(usize, (usize, usize))> = f_edges
        .iter()
        .zip(&connecting)
        .map(|(&(x, y), &c)| (f.edge_index(x, y).unwrap(), if owner[c.0] == x { c } else { (c.1, c.0) }))
        .collect();
    by_f.sort_unstable();
    Ok((f, TriangleMap { triangles: tris, connecting: by_f.into_iter().map(|(_, c)| c).collect() }))
}

/// A bijection `p` with `b.has_edge(p[u], p[v]) == a.has_edge(u, v)`.
/// Plain backtracking, pruned by degree and triangle counts.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.m() != b.m() {
        return None;
    }
    let inv = |g: &Graph| -> Vec<(usize, usize)> {
        let mut tri = vec![0; g.n()];
        for t in triangles(g) {
            for v in t {
                tri[v] += 1;
            }
        }
        (0..g.n()).map(|v| (g.degree(v), tri[v])).collect()
    };
    let (ia, ib) = (inv(a), inv(b));
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; a.n()];
    fn go(
        a: &Graph,
        b: &Graph,
        ia: &[(usize, usize)],
        ib: &[(usize, usize)],
        u: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if u == a.n() {
            return true;
        }
        for x in 0..b.n() {
            if used[x] || ia[u] != ib[x] {
                continue;
            }
            if (0..u).any(|w| a.has_edge(u, w) != b.has_edge(x, map[w])) {
                continue;
            }
            map[u] = x;
            used[x] = true;
            if go(a, b, ia, ib, u + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
        false
    }
    go(a, b, &ia, &ib, 0, &mut map, &mut used).then_some(map)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// `Yes` when `F` and its inflation are both Hamiltonian or both not, `No`
/// when they disagree, `Unknown` above [`TRANSFER_MAX_VERTICES`].
pub fn check_hamiltonicity_transfer(f: &Graph) -> Result<Decision, TransformError> {
    if !is_cubic(f) {
        return Err(TransformError::NotCubic);
    }
    if f.n() > TRANSFER_MAX_VERTICES {
        return Ok(Decision::Unknown);
    }
    let (g, _) = inflate(f)?;
    Ok(if is_hamiltonian(f) == is_hamiltonian(&g) { Decision::Yes } else { Decision::No })
}
