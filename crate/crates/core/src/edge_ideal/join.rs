use super::primes::{cut_sets, CutSetFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `◯ C(H_k)` over the components `H_k` of `g`, on the labels of `g`.
fn joined_component_families(g: &Graph) -> Result<CutSetFamily> {
    let mut acc = CutSetFamily::new(vec![VertexSet::empty()]);
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(comp)?;
        let local = cut_sets(&sub.graph)?;
        let relabelled = CutSetFamily::new(
            local
                .iter()
                .map(|t| t.iter().map(|v| sub.labels[v - 1]).collect())
                .collect(),
        );
        acc = acc.collection_join(&relabelled);
    }
    Ok(acc)
}

/// The cut sets of `G1 * G2` assembled from those of the components of
/// `G1` and `G2`. Both graphs must be disconnected; `G2` is relabelled to
/// follow `G1`, as in [`Graph::join`].
pub fn join_cutsets(g1: &Graph, g2: &Graph) -> Result<CutSetFamily> {
    for (name, g) in [("first", g1), ("second", g2)] {
        if g.connected_components().len() < 2 {
            return Err(Error::domain(format!("the {name} graph must have at least two components")));
        }
    }
    let (n1, n2) = (g1.n(), g2.n());
    let v1 = VertexSet::full(n1);
    let v2 = VertexSet::full(n2).shifted(n1);
    let from_first = joined_component_families(g1)?.collection_join(&CutSetFamily::new(vec![v2]));
    let from_second = CutSetFamily::new(
        joined_component_families(g2)?
            .iter()
            .map(|t| t.shifted(n1).union(v1))
            .collect(),
    );
    let mut sets = vec![VertexSet::empty()];
    sets.extend(from_first.iter());
    sets.extend(from_second.iter());
    Ok(CutSetFamily::new(sets))
}

/// `max{r1, r2, 3}`: the regularity of the join of two graphs that are not
/// both complete, given the regularities of the factors (0 when edgeless).
pub fn predicted_join_regularity(r1: u32, r2: u32) -> u32 {
    r1.max(r2).max(3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g1: &Graph, g2: &Graph) {
        assert_eq!(join_cutsets(g1, g2).unwrap(), cut_sets(&g1.join(g2)).unwrap());
    }

    #[test]
    fn small_joins() {
        let two = Graph::edgeless(2);
        check(&two, &two);
        assert_eq!(join_cutsets(&two, &two).unwrap().len(), 3);
        check(&two, &Graph::edgeless(1).disjoint_union(&Graph::complete(2)));
        check(&Graph::path(3).disjoint_union(&Graph::edgeless(1)), &two);
    }

    #[test]
    fn refuses_connected_inputs() {
        assert!(join_cutsets(&Graph::path(3), &Graph::edgeless(2)).is_err());
        assert!(join_cutsets(&Graph::edgeless(2), &Graph::edgeless(1)).is_err());
    }

    #[test]
    fn predicted_regularity() {
        assert_eq!(predicted_join_regularity(0, 0), 3);
        assert_eq!(predicted_join_regularity(3, 2), 3);
        assert_eq!(predicted_join_regularity(5, 3), 5);
    }
}
