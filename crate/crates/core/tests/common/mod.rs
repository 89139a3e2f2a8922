#![allow(dead_code)]

pub mod koszul;

use bei::Graph;

/// Every graph on `n` labelled vertices, one per edge subset. Only usable for tiny `n`.
pub fn all_labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

pub fn figure_one() -> Graph {
    Graph::from_edges(5, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap()
}
