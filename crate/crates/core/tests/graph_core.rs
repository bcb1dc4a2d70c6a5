mod common;

use proptest::prelude::*;

use common::brute_maximal_cliques;
use tesscover::clique_graph::{clique_graph, kg_intersection_sizes};
use tesscover::corpus::{random_diamond_free, rng};
use tesscover::graph::{are_isomorphic, canonical_form, is_diamond_free, maximal_cliques, true_twin_classes, Graph};
use tesscover::io::{parse_graph, parse_graph6, write_graph, write_graph6};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #[test]
    fn cliques_match_subset_search(g in arb_graph(9)) {
        let got: Vec<Vec<usize>> = maximal_cliques(&g).unwrap().into_iter().map(|c| c.into_vec()).collect();
        let mut sorted = got.clone();
        sorted.sort();
        prop_assert_eq!(sorted, brute_maximal_cliques(&g));
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng(seed));
        let h = permuted(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&canonical_form(&g).to_graph(), &g));
    }

    #[test]
    fn text_formats_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn twin_classes_are_cliques_with_equal_closed_neighbourhoods(g in arb_graph(9)) {
        let closed = |v: usize| {
            let mut s = g.neighbors(v).to_vec();
            s.push(v);
            s.sort_unstable();
            s
        };
        let classes = true_twin_classes(&g);
        prop_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.n());
        for c in &classes {
            prop_assert!(g.is_clique(c));
            prop_assert!(c.iter().all(|&v| closed(v) == closed(c[0])));
        }
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                prop_assert_ne!(closed(a[0]), closed(b[0]));
            }
        }
    }
}

#[test]
fn diamond_free_clique_structure() {
    let mut r = rng(11);
    for _ in 0..200 {
        let g = random_diamond_free(&mut r, 10, 16);
        assert!(is_diamond_free(&g));
        let kg = clique_graph(&g).unwrap();
        assert!(kg_intersection_sizes(&kg).values().all(|&s| s == 1));
        assert!(is_diamond_free(&kg.kg));
        assert!(kg.cliques.len() <= g.m() + g.n());
    }
}

#[test]
fn parse_errors_name_the_line() {
    for (text, line) in [("2 2\n0 1\n0 1", 3), ("3 1\n1 1", 2), ("3 1\n0 3", 2), ("x", 1), ("3 2\n0 1", 1)] {
        match parse_graph(text) {
            Err(tesscover::Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}
