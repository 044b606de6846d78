//! Isomorph-free generation of all graphs on up to seven vertices.

use rustc_hash::FxHashSet;

use super::HarnessError;
use crate::graph::Graph;

/// Largest order handled by [`generate_all_graphs`].
pub const GENERATE_MAX_N: usize = 7;

/// Vertex colours after colour refinement, relabelled canonically so that
/// isomorphic graphs get the same colour multiset and cell order.
fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        color = sigs.iter().map(|s| uniq.binary_search(s).unwrap()).collect();
        if uniq.len() == classes {
            return color;
        }
        classes = uniq.len();
    }
}

/// Upper-triangle adjacency bits of `g` read in the vertex order `order`.
fn code(g: &Graph, order: &[usize]) -> u64 {
    let mut c = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            c = (c << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    c
}

/// Canonical form: the smallest adjacency code over all vertex orders that
/// list the refined colour cells in increasing colour. Exact for `n <= 11`.
pub fn canonical_code(g: &Graph) -> (usize, u64) {
    let color = refined_colors(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_color: Vec<usize> = (0..g.n()).collect();
    by_color.sort_by_key(|&v| color[v]);
    for v in by_color {
        match cells.last_mut() {
            Some(cell) if color[cell[0]] == color[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(g.n());
    permute_cells(g, &cells, 0, &mut vec![false; g.n()], &mut order, &mut best);
    (g.n(), if g.n() == 0 { 0 } else { best })
}

fn permute_cells(g: &Graph, cells: &[Vec<usize>], ci: usize, used: &mut [bool], order: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        *best = (*best).min(code(g, order));
        return;
    }
    let cell = &cells[ci];
    let placed = order.len() - cells[..ci].iter().map(Vec::len).sum::<usize>();
    if placed == cell.len() {
        permute_cells(g, cells, ci + 1, used, order, best);
        return;
    }
    for &v in cell {
        if !used[v] {
            used[v] = true;
            order.push(v);
            permute_cells(g, cells, ci, used, order, best);
            order.pop();
            used[v] = false;
        }
    }
}

/// One graph per isomorphism class on `n` vertices, in increasing order of
/// edge count and then canonical code. Graphs are built by adding a vertex
/// with every possible neighbourhood to each class on `n - 1` vertices.
pub fn generate_all_graphs(n: usize) -> Result<Vec<Graph>, HarnessError> {
    if n > GENERATE_MAX_N {
        return Err(HarnessError::GenerateTooLarge(n));
    }
    let mut layer = vec![Graph::empty(0)?];
    for k in 1..=n {
        let mut seen = FxHashSet::default();
        let mut next: Vec<(usize, u64, Graph)> = Vec::new();
        for g in &layer {
            for mask in 0u64..(1 << (k - 1)) {
                let mut adj: Vec<u64> = g.adjacency_rows().to_vec();
                adj.push(mask);
                for (u, row) in adj.iter_mut().enumerate().take(k - 1) {
                    if mask >> u & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                let h = Graph::from_adjacency(adj)?;
                let c = canonical_code(&h);
                if seen.insert(c) {
                    next.push((h.m(), c.1, h));
                }
            }
        }
        next.sort_by_key(|(m, c, _)| (*m, *c));
        layer = next.into_iter().map(|(_, _, g)| g).collect();
    }
    Ok(layer)
}
