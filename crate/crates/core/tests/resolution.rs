mod common;

use std::collections::BTreeMap;

use bei::edge_ideal::binomial_edge_ideal;
use bei::graph::enumerate_classes;
use bei::poly::{Ideal, MonomialOrder, Polynomial, Ring};
use bei::resolution::{
    betti_from_resolution, betti_table, betti_table_with_order, minimal_free_resolution, regularity, BettiTable,
};
use bei::Graph;
use common::koszul::koszul_betti;
use proptest::prelude::*;

fn entries(t: &BettiTable) -> BTreeMap<(usize, u32), u64> {
    t.entries().map(|(i, j, b)| ((i, j), b)).collect()
}

#[test]
fn koszul_oracle_agrees_on_small_census() {
    for classes in enumerate_classes(4, 8).unwrap() {
        for (key, g) in classes {
            let j = binomial_edge_ideal(&g).unwrap();
            let oracle = koszul_betti(&j);
            let table = if j.is_zero() {
                BTreeMap::from([((0, 0), 1)])
            } else {
                entries(&betti_table(&j).unwrap().to_quotient())
            };
            assert_eq!(table, oracle, "graph {}", key.as_str());
        }
    }
}

#[test]
fn koszul_oracle_on_a_monomial_complete_intersection() {
    let ring = Ring::standard(2);
    let ideal = Ideal::new(ring, vec![ring.var(0), ring.var(1), ring.var(2)]);
    let expected = BTreeMap::from([((0, 0), 1), ((1, 1), 3), ((2, 2), 3), ((3, 3), 1)]);
    assert_eq!(koszul_betti(&ideal), expected);
}

#[test]
fn path_tables_are_koszul_complexes_on_quadrics() {
    for n in 2..=5 {
        let t = betti_table(&binomial_edge_ideal(&Graph::path(n)).unwrap()).unwrap().to_quotient();
        let m = (n - 1) as u64;
        for i in 0..=n - 1 {
            let binom = (0..i as u64).fold(1u64, |acc, k| acc * (m - k) / (k + 1));
            assert_eq!(t.get(i, 2 * i as u32), binom, "P{n} i={i}");
        }
        assert_eq!(regularity(&binomial_edge_ideal(&Graph::path(n)).unwrap()).unwrap(), n as u32);
    }
}

#[test]
fn explicit_resolution_matches_table() {
    for g in [Graph::cycle(4), Graph::complete(4), common::figure_one()] {
        let j = binomial_edge_ideal(&g).unwrap();
        let res = minimal_free_resolution(&j).unwrap();
        for pair in res.windows(2) {
            assert!(pair[0].composes_to_zero(&pair[1]));
        }
        assert!(res.iter().all(|p| p.is_minimal()));
        assert_eq!(betti_from_resolution(&res), betti_table(&j).unwrap().to_quotient());
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn betti_table_ignores_generator_order(g in arb_graph(5), seed in any::<u64>()) {
        let j = binomial_edge_ideal(&g).unwrap();
        prop_assume!(!j.is_zero());
        let mut gens: Vec<Polynomial> = j.generators().to_vec();
        let len = gens.len();
        for k in 0..len {
            gens.swap(k, (seed as usize).wrapping_mul(k + 7) % len);
        }
        let shuffled = Ideal::new(j.ring(), gens);
        prop_assert_eq!(betti_table(&j).unwrap(), betti_table(&shuffled).unwrap());
    }

    #[test]
    fn betti_table_ignores_monomial_order(g in arb_graph(5)) {
        let j = binomial_edge_ideal(&g).unwrap();
        prop_assume!(!j.is_zero());
        prop_assert_eq!(
            betti_table(&j).unwrap(),
            betti_table_with_order(&j, MonomialOrder::Lex).unwrap()
        );
    }

    #[test]
    fn betti_table_is_relabelling_invariant(g in arb_graph(5), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (1..=n).collect();
        for k in (1..n).rev() {
            perm.swap(k, (seed >> (k % 60)) as usize % (k + 1));
        }
        let h = g.permuted(&perm);
        let (jg, jh) = (binomial_edge_ideal(&g).unwrap(), binomial_edge_ideal(&h).unwrap());
        prop_assume!(!jg.is_zero());
        prop_assert_eq!(betti_table(&jg).unwrap(), betti_table(&jh).unwrap());
    }

    #[test]
    fn euler_characteristic_vanishes(g in arb_graph(5)) {
        let j = binomial_edge_ideal(&g).unwrap();
        prop_assume!(!j.is_zero());
        let t = betti_table(&j).unwrap().to_quotient();
        let alt: i64 = t.entries().map(|(i, _, b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(alt, 0);
    }
}
