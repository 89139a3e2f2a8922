//! Binomial edge ideals and the combinatorial objects attached to them:
//! prime components `P_T(G)`, cut-set families, colon generators along
//! paths, and cut sets of joins.

mod colon;
mod join;
mod primes;

pub use colon::{colon_generators, colon_generators_over, colon_theorem_check, PathMonomialSystem};
pub use join::{join_cutsets, predicted_join_regularity};
pub use primes::{
    combinatorial_dim, cut_sets, cut_sets_within, intersect_primes, minimal_primes, minimal_primes_over,
    prime_component, prime_component_over, CutSetFamily, PrimeComponent, SUBSET_CEILING,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::{Ideal, PrimeField, Ring};

/// The ring `F_p[x_1..x_n, y_1..y_n]` for a graph on `n` vertices.
pub fn graph_ring(g: &Graph, field: PrimeField) -> Result<Ring> {
    Ring::new(g.n(), field)
}

/// `J_G` over the default field.
pub fn binomial_edge_ideal(g: &Graph) -> Result<Ideal> {
    binomial_edge_ideal_over(g, PrimeField::default())
}

/// `J_G = (f_ij : {i,j} ∈ E(G), i < j)`; the edgeless graph gives the zero ideal.
pub fn binomial_edge_ideal_over(g: &Graph, field: PrimeField) -> Result<Ideal> {
    let ring = graph_ring(g, field)?;
    Ok(edge_ideal_in(ring, g))
}

pub(crate) fn edge_ideal_in(ring: Ring, g: &Graph) -> Ideal {
    Ideal::new(ring, g.edges().into_iter().map(|e| ring.minor(e.low(), e.high())).collect())
}

/// Binomials of the complete graph on `set`, in `ring`.
pub(crate) fn clique_binomials(ring: Ring, set: VertexSet) -> Vec<crate::poly::Polynomial> {
    let v = set.to_vec();
    let mut out = Vec::new();
    for (a, &i) in v.iter().enumerate() {
        for &j in &v[a + 1..] {
            out.push(ring.minor(i, j));
        }
    }
    out
}

/// The complete multipartite graph with parts of the given sizes, as an
/// iterated join of edgeless graphs.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(Error::domain("complete multipartite graph needs at least one part"));
    }
    if sizes.contains(&0) {
        return Err(Error::domain("part sizes must be positive"));
    }
    let total: usize = sizes.iter().sum();
    if total > crate::graph::MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            got: total,
            ceiling: crate::graph::MAX_VERTICES,
        });
    }
    Ok(sizes[1..]
        .iter()
        .fold(Graph::edgeless(sizes[0]), |g, &k| g.join(&Graph::edgeless(k))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_ideal_examples() {
        let k2 = binomial_edge_ideal(&Graph::complete(2)).unwrap();
        assert_eq!(k2.generators(), &[k2.ring().minor(1, 2)]);
        assert!(binomial_edge_ideal(&Graph::edgeless(3)).unwrap().is_zero());
        assert_eq!(binomial_edge_ideal(&Graph::path(3)).unwrap().generators().len(), 2);
        assert!(binomial_edge_ideal(&Graph::edgeless(17)).is_err());
    }

    #[test]
    fn multipartite_examples() {
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(c4.canonical_form().unwrap(), Graph::cycle(4).canonical_form().unwrap());
        assert_eq!(complete_multipartite(&[1, 1, 1, 1]).unwrap(), Graph::complete(4));
        let star = complete_multipartite(&[1, 3]).unwrap();
        assert_eq!(star.degree(1).unwrap(), 3);
        assert_eq!(star.edge_count(), 3);
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }
}
