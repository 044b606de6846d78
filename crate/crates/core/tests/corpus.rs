use std::collections::HashSet;
use std::path::PathBuf;

use proptest::prelude::*;

use domgame::graph::{line_graph, parse_graph6, to_graph6, Graph};
use domgame::harness::{canonical_code, generate_all_graphs, read_graph6_file};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn generator_matches_external_enumeration() {
    let ours: HashSet<(usize, u64)> = generate_all_graphs(7).unwrap().iter().map(canonical_code).collect();
    let theirs: HashSet<(usize, u64)> =
        read_graph6_file(&data("graphs_n7.g6")).unwrap().iter().map(canonical_code).collect();
    assert_eq!(ours.len(), 1044);
    assert_eq!(ours, theirs);
}

#[test]
fn corpus_sizes() {
    let sizes: Vec<usize> = ["graphs_n8.g6", "connected_mindeg2_n9.g6", "connected_m_le12.g6", "connected_cubic_n_le14.g6"]
        .iter()
        .map(|f| read_graph6_file(&data(f)).unwrap().len())
        .collect();
    assert_eq!(sizes, vec![12346, 197772, 40964, 621]);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let back = parse_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(back.adjacency_rows(), g.adjacency_rows());
    }

    #[test]
    fn line_graph_degrees(g in arb_graph()) {
        prop_assume!(g.m() > 0);
        let lg = line_graph(&g).unwrap();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(lg.graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
        let pairs: usize = (0..g.n()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(lg.graph.m(), pairs);
    }

    #[test]
    fn canonical_code_ignores_labels(g in arb_graph(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut x = seed;
        for i in (1..perm.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_code(&g), canonical_code(&g.permuted(&perm)));
    }
}
