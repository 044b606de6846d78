//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex, together with the graph6 codec and the line-graph
//! construction.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count. Every vertex set fits in one `u64`.
pub const MAX_VERTICES: usize = 64;

/// Largest order representable in a graph6 record.
const GRAPH6_MAX_ORDER: usize = 258_047;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, the cap is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge ({0}, {1}) is out of range or a loop")]
    BadEdge(usize, usize),
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("operation needs at least one edge")]
    Edgeless,
    #[error("graph has {0} edges, edge sets are capped at 64")]
    TooManyEdges(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("malformed length field")]
    BadLength,
    #[error("byte {0:#04x} outside the graph6 alphabet")]
    BadByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    WrongBodyLength { expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    TrailingBits,
    #[error("order {0} exceeds the vertex cap of {MAX_VERTICES}")]
    OverCap(usize),
}

/// Fixed-width bit vector over indices `0..64`. Used both for vertex sets and
/// for edge sets (indexed by canonical edge index).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet(pub u64);

pub type VertexSet = BitSet;
pub type EdgeSet = BitSet;

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> BitSet {
        if n >= 64 {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> BitSet {
        BitSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> BitSet {
        it.into_iter().fold(BitSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> BitSet {
        BitSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> BitSet {
        BitSet(self.0 & !(1u64 << i))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: BitSet) -> BitSet {
        BitSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: BitSet) -> BitSet {
        BitSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: BitSet) -> BitSet {
        BitSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: BitSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        BitSet::from_indices(iter)
    }
}

impl IntoIterator for BitSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

/// Iterates the members of a [`BitSet`] in ascending order.
#[derive(Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

/// An immutable simple graph on vertices `0..n`.
///
/// Edges are kept in lexicographic order of `(u, v)` with `u < v`; every
/// module refers to an edge by its position in that list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
    /// Incident-edge masks, filled only when `m <= 64`.
    incident: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, &[])
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::BadEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Builds a graph from symmetric, irreflexive adjacency rows.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        for u in 0..n {
            if adj[u] >> u & 1 == 1 {
                return Err(GraphError::BadEdge(u, u));
            }
            for v in BitSet(adj[u]).iter() {
                if v >= n || adj[v] >> u & 1 == 0 {
                    return Err(GraphError::BadEdge(u, v));
                }
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in BitSet(adj[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)).iter() {
                edges.push((u, v));
            }
        }
        let mut incident = Vec::new();
        if edges.len() <= 64 {
            incident = vec![0u64; n];
            for (i, &(u, v)) in edges.iter().enumerate() {
                incident[u] |= 1 << i;
                incident[v] |= 1 << i;
            }
        }
        Graph { n, adj, edges, incident }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!((3..=MAX_VERTICES).contains(&n));
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        assert!((1..=MAX_VERTICES).contains(&n));
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// The triangular prism `K_3 □ K_2`.
    pub fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, &edges)
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in ascending
    /// order. The second component maps new labels back to old ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.intersection(self.vertex_set()).iter().collect();
        let mut adj = vec![0u64; old.len()];
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        (Graph::from_adjacency_unchecked(adj), old)
    }

    /// Applies a vertex permutation: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        BitSet::full(self.n)
    }

    pub fn edge_set(&self) -> EdgeSet {
        BitSet::full(self.m())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        BitSet(self.adj[v])
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        BitSet(self.adj[v] | 1 << v)
    }

    /// `N[S]` for a vertex set `S`.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(BitSet::EMPTY, |acc, v| acc.union(self.closed_neighborhood(v)))
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Canonical index of the edge `uv`, in either orientation.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Whether the edge-set helpers are available (`m <= 64`).
    pub fn supports_edge_sets(&self) -> bool {
        self.m() <= 64
    }

    pub fn check_edge_sets(&self) -> Result<(), GraphError> {
        if self.supports_edge_sets() {
            Ok(())
        } else {
            Err(GraphError::TooManyEdges(self.m()))
        }
    }

    /// Edges incident with `v`. Panics when `m > 64`.
    #[inline]
    pub fn incident_edges(&self, v: usize) -> EdgeSet {
        BitSet(self.incident[v])
    }

    /// `N[e]`: the edge itself and every edge sharing an endpoint with it.
    #[inline]
    pub fn edge_closed_neighborhood(&self, e: usize) -> EdgeSet {
        let (u, v) = self.edges[e];
        BitSet(self.incident[u] | self.incident[v])
    }

    /// Vertices touched by the edges in `s`.
    pub fn vertices_of_edges(&self, s: EdgeSet) -> VertexSet {
        s.iter().fold(BitSet::EMPTY, |acc, e| {
            let (u, v) = self.edges[e];
            acc.with(u).with(v)
        })
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        self.component_within(start, self.vertex_set())
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = BitSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = BitSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.neighbors(v));
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_within(v, within);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// A single vertex counts as connected; the null graph does too.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertex_set()
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut seen = BitSet::singleton(s);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = BitSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.neighbors(v));
            }
            frontier = next.difference(seen);
            for v in frontier.iter() {
                dist[v] = Some(d);
            }
            seen = seen.union(frontier);
        }
        dist
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                match d {
                    None => return Diameter::Infinite,
                    Some(d) => best = best.max(d),
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Whether `self` is a single cycle `C_n` (connected and 2-regular).
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Whether `self` is a path `P_n` (including `P_1`).
    pub fn is_path(&self) -> bool {
        if self.n == 0 || !self.is_connected() || self.m() + 1 != self.n {
            return false;
        }
        self.max_degree() <= 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    /// `true` iff the diameter is at least `d` (an infinite diameter counts).
    pub fn at_least(self, d: usize) -> bool {
        match self {
            Diameter::Finite(x) => x >= d,
            Diameter::Infinite => true,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

/// A line graph together with the root edge behind each of its vertices.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `root_edges[i]` is the root-graph edge represented by vertex `i`.
    pub root_edges: Vec<(usize, usize)>,
}

/// `L(G)`: vertex `i` stands for edge `i` of `g`; two vertices are adjacent
/// iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LineGraph, GraphError> {
    let m = g.m();
    if m == 0 {
        return Err(GraphError::Edgeless);
    }
    if m > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(m));
    }
    let mut adj = vec![0u64; m];
    for i in 0..m {
        adj[i] = g.edge_closed_neighborhood(i).without(i).0;
    }
    Ok(LineGraph {
        graph: Graph::from_adjacency_unchecked(adj),
        root_edges: g.edges().to_vec(),
    })
}

/// Parses one graph6 record. A leading `>>graph6<<` header is skipped, as is
/// trailing whitespace.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            // 8-byte lengths only encode orders beyond 258047.
            return Err(Graph6Error::BadLength);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(Graph6Error::BadLength);
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::OverCap(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongBodyLength { expected, found: body.len() });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            k += 1;
        }
    }
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(Graph6Error::TrailingBits);
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encodes `g` as a graph6 record without header or newline.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OverCap(n));
    }
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Graph6 string for graphs already known to be within the cap.
pub fn to_graph6(g: &Graph) -> String {
    encode_graph6(g).expect("graphs are capped below the graph6 limit")
}
