mod common;

use std::collections::BTreeSet;

use bei::graph::enumerate_classes;
use bei::io::{edgelist, graph6};
use bei::{Error, Graph, VertexSet};
use proptest::prelude::*;

#[test]
fn class_counts_match_the_known_sequence() {
    let classes = enumerate_classes(7, 8).unwrap();
    let counts: Vec<usize> = classes.iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn classes_are_sorted_distinct_and_canonical() {
    for level in enumerate_classes(5, 8).unwrap() {
        let keys: Vec<&str> = level.iter().map(|(k, _)| k.as_str()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        for (k, g) in &level {
            assert_eq!(g.canonical_form().unwrap(), *k);
        }
    }
}

#[test]
fn brute_force_classes_agree_for_five_vertices() {
    let brute: BTreeSet<String> = common::all_labelled_graphs(5)
        .iter()
        .map(|g| g.canonical_form().unwrap().as_str().to_string())
        .collect();
    let enumerated: BTreeSet<String> = enumerate_classes(5, 8).unwrap()[4]
        .iter()
        .map(|(k, _)| k.as_str().to_string())
        .collect();
    assert_eq!(brute, enumerated);
}

#[test]
fn capacity_errors() {
    assert!(matches!(enumerate_classes(9, 8), Err(Error::Capacity { .. })));
    assert!(Graph::path(9).canonical_form().is_err());
    assert!(Graph::from_edges(65, std::iter::empty()).is_err());
}

#[test]
fn clique_counts_of_named_families() {
    assert_eq!(Graph::complete(5).clique_count(), 1);
    assert_eq!(Graph::path(5).clique_count(), 4);
    assert_eq!(Graph::cycle(5).clique_count(), 5);
    assert_eq!(Graph::edgeless(4).clique_count(), 4);
    let octahedron = Graph::edgeless(2).join(&Graph::edgeless(2)).join(&Graph::edgeless(2));
    assert_eq!(octahedron.clique_count(), 8);
}

#[test]
fn induced_paths_and_alpha() {
    assert_eq!(Graph::cycle(6).longest_induced_path_length(), 4);
    assert_eq!(Graph::complete(4).longest_induced_path_length(), 1);
    assert_eq!(Graph::edgeless(3).longest_induced_path_length(), 0);
    let g = common::figure_one();
    assert!(g.is_simplicial(1).unwrap() && g.is_simplicial(5).unwrap());
    assert!(g.is_cut_point(2).unwrap());
    assert!(matches!(g.alpha(6), Err(Error::Domain(_))));
}

#[test]
fn vertex_set_serde() {
    let s = VertexSet::from_labels([3, 1]);
    assert_eq!(serde_json::to_string(&s).unwrap(), "[1,3]");
    assert!(serde_json::from_str::<VertexSet>("[0]").is_err());
    assert!(serde_json::from_str::<VertexSet>("[65]").is_err());
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn arb_perm(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut s = seed | 1;
    for k in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        perm.swap(k, (s % (k as u64 + 1)) as usize);
    }
    perm
}

proptest! {
    #[test]
    fn canonical_form_is_a_complete_invariant(g in arb_graph(8), seed in any::<u64>()) {
        let h = g.permuted(&arb_perm(g.n(), seed));
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
        let canon = g.canonical_graph().unwrap();
        prop_assert_eq!(canon.canonical_form().unwrap(), g.canonical_form().unwrap());
        prop_assert_eq!(canon.edge_count(), g.edge_count());
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trips(g in arb_graph(12)) {
        prop_assert_eq!(edgelist::decode(&edgelist::encode(&g)).unwrap(), g);
    }

    #[test]
    fn join_is_complete_between_sides(a in arb_graph(5), b in arb_graph(5)) {
        let j = a.join(&b);
        prop_assert_eq!(j.n(), a.n() + b.n());
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        prop_assert_eq!(j.clique_count(), a.clique_count() * b.clique_count());
        prop_assert!(j.is_connected());
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(10)) {
        let comps = g.connected_components();
        let union = comps.iter().fold(VertexSet::empty(), |acc, c| acc.union(*c));
        prop_assert_eq!(union, VertexSet::full(g.n()));
        prop_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), g.n());
        prop_assert_eq!(g.is_connected(), comps.len() == 1);
    }
}
