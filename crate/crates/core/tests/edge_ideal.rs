mod common;

use bei::edge_ideal::{
    binomial_edge_ideal, colon_generators, colon_theorem_check, combinatorial_dim, complete_multipartite, cut_sets,
    intersect_primes, join_cutsets, minimal_primes, PathMonomialSystem,
};
use bei::graph::enumerate_classes;
use bei::poly::Ring;
use bei::{Edge, Graph, VertexSet};
use proptest::prelude::*;

fn components_without(g: &Graph, t: VertexSet) -> usize {
    let keep = VertexSet::full(g.n()).difference(t);
    if keep.is_empty() {
        return 0;
    }
    g.induced_subgraph(keep).unwrap().graph.connected_components().len()
}

/// `T` is a cut set iff each of its vertices, put back, lowers the component count.
fn is_cut_set(g: &Graph, t: VertexSet) -> bool {
    let c = components_without(g, t);
    t.iter().all(|v| {
        let mut smaller = t;
        smaller.remove(v);
        components_without(g, smaller) < c
    })
}

#[test]
fn cut_sets_match_the_definition() {
    for (key, g) in enumerate_classes(6, 8).unwrap().into_iter().flatten() {
        let family = cut_sets(&g).unwrap();
        let brute: Vec<VertexSet> = (0u64..1 << g.n()).map(VertexSet::from_bits).filter(|&t| is_cut_set(&g, t)).collect();
        assert_eq!(family.len(), brute.len(), "{}", key.as_str());
        assert!(brute.iter().all(|&t| family.contains(t)));
    }
}

#[test]
fn complete_graph_ideal_is_all_minors() {
    let j = binomial_edge_ideal(&Graph::complete(4)).unwrap();
    assert_eq!(j.generators().len(), 6);
    assert_eq!(minimal_primes(&Graph::complete(4)).unwrap().len(), 1);
    assert_eq!(combinatorial_dim(&Graph::complete(4)).unwrap(), 5);
}

#[test]
fn multipartite_graphs() {
    let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
    assert_eq!((k222.n(), k222.edge_count()), (6, 12));
    assert!(complete_multipartite(&[]).is_err());
    assert!(complete_multipartite(&[2, 0]).is_err());
}

#[test]
fn figure_one_decomposes() {
    let g = common::figure_one();
    let primes = minimal_primes(&g).unwrap();
    let ts: Vec<Vec<usize>> = primes.iter().map(|p| p.t.to_vec()).collect();
    assert_eq!(ts, vec![vec![], vec![2], vec![3, 4]]);
    assert!(intersect_primes(&primes).unwrap().equals(&binomial_edge_ideal(&g).unwrap()).unwrap());
    for p in &primes {
        assert_eq!(p.ideal.height().unwrap(), p.predicted_height());
    }
}

#[test]
fn path_monomials_of_a_square() {
    let c4 = Graph::cycle(4);
    let sys = PathMonomialSystem::new(&c4, Ring::standard(4), Edge::new(1, 4)).unwrap();
    assert_eq!(sys.paths, vec![vec![1, 2, 3, 4]]);
    let ring = Ring::standard(4);
    let colon = colon_generators(&c4, Edge::new(1, 4)).unwrap();
    let shown: Vec<String> = colon.gb().to_degrevlex().iter().map(|p| ring.format_poly(p)).collect();
    assert!(shown.contains(&"y2*x3".to_string()) || shown.contains(&"x3*y2".to_string()), "{shown:?}");
    assert!(colon_theorem_check(&c4, Edge::new(1, 4)).unwrap());
    assert!(colon_generators(&c4, Edge::new(1, 3)).is_err());
}

#[test]
fn colon_theorem_on_six_vertex_samples() {
    let samples = [Graph::cycle(6), Graph::path(6), common::figure_one().disjoint_union(&Graph::edgeless(1))];
    for g in samples {
        for e in g.edges() {
            assert!(colon_theorem_check(&g, e).unwrap(), "{e}");
        }
    }
}

#[test]
fn join_cutsets_needs_two_disconnected_sides() {
    let two = Graph::edgeless(2);
    let fam = join_cutsets(&two, &two).unwrap();
    let sets: Vec<Vec<usize>> = fam.iter().map(|t| t.to_vec()).collect();
    assert_eq!(sets, vec![vec![], vec![1, 2], vec![3, 4]]);
    assert!(join_cutsets(&Graph::path(3), &two).is_err());
}

fn arb_disconnected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
        .prop_filter("disconnected", |g| !g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn join_cutset_formula(a in arb_disconnected(5), b in arb_disconnected(5)) {
        prop_assert_eq!(join_cutsets(&a, &b).unwrap(), cut_sets(&a.join(&b)).unwrap());
    }
}
