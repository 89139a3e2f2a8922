use serde::{Deserialize, Serialize};

use super::{clique_binomials, graph_ring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::{Ideal, PrimeField, Ring};

/// Largest vertex count for which the subset enumerations run.
pub const SUBSET_CEILING: usize = 20;

/// `P_T(G)` together with the data that defines it.
#[derive(Clone, Debug)]
pub struct PrimeComponent {
    pub t: VertexSet,
    /// Components of `G` restricted to `[n] \ T`, ordered by smallest member.
    pub components: Vec<VertexSet>,
    pub ideal: Ideal,
}

#[derive(Serialize)]
struct PrimeJson<'a> {
    #[serde(rename = "T")]
    t: VertexSet,
    components: &'a [VertexSet],
    height: usize,
    generators: Vec<String>,
}

impl PrimeComponent {
    /// `c(T)`, the number of components of `G_{[n] \ T}`.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// `n + |T| - c(T)`.
    pub fn predicted_height(&self) -> usize {
        self.ideal.ring().n() + self.t.len() - self.components.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PrimeJson {
            t: self.t,
            components: &self.components,
            height: self.predicted_height(),
            generators: self.ideal.to_json().generators,
        })
        .expect("plain data serializes")
    }
}

/// `P_T(G) = (x_i, y_i : i ∈ T) + Σ J_{K(V(G_k))}` over the components
/// `G_k` of `G_{[n] \ T}`, realized on the original labels.
pub fn prime_component(g: &Graph, t: VertexSet) -> Result<PrimeComponent> {
    prime_component_over(g, t, PrimeField::default())
}

pub fn prime_component_over(g: &Graph, t: VertexSet, field: PrimeField) -> Result<PrimeComponent> {
    if !t.is_subset(g.vertices()) {
        return Err(Error::domain(format!("{t:?} is not a subset of 1..{}", g.n())));
    }
    let ring = graph_ring(g, field)?;
    Ok(component_in(ring, g, t))
}

fn component_in(ring: Ring, g: &Graph, t: VertexSet) -> PrimeComponent {
    let rest = g.vertices().difference(t);
    let components: Vec<VertexSet> = g
        .components_within(rest.bits())
        .into_iter()
        .map(VertexSet::from_bits)
        .collect();
    let mut gens: Vec<_> = t
        .iter()
        .flat_map(|i| [ring.var(ring.x(i)), ring.var(ring.y(i))])
        .collect();
    for &c in &components {
        gens.extend(clique_binomials(ring, c));
    }
    PrimeComponent {
        t,
        components,
        ideal: Ideal::new(ring, gens),
    }
}

/// The family `C(G)`: `∅` and every `T` with the cut-point property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CutSetFamily {
    sets: Vec<VertexSet>,
}

fn set_key(s: &VertexSet) -> (usize, Vec<usize>) {
    (s.len(), s.to_vec())
}

impl CutSetFamily {
    /// Sorts by size, then lexicographically by members; drops duplicates.
    pub fn new(mut sets: Vec<VertexSet>) -> Self {
        sets.sort_by_key(set_key);
        sets.dedup();
        CutSetFamily { sets }
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, t: VertexSet) -> bool {
        self.sets.contains(&t)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }

    /// `{A ∪ B : A ∈ self, B ∈ other}`.
    pub fn collection_join(&self, other: &CutSetFamily) -> CutSetFamily {
        CutSetFamily::new(
            self.sets
                .iter()
                .flat_map(|a| other.sets.iter().map(move |b| a.union(*b)))
                .collect(),
        )
    }
}

fn has_cut_point_property(g: &Graph, t: VertexSet) -> bool {
    let rest = g.vertices().difference(t).bits();
    let base = g.count_components_within(rest);
    t.iter().all(|i| g.count_components_within(rest | 1 << (i - 1)) < base)
}

fn check_subset_ceiling(g: &Graph, ceiling: usize) -> Result<()> {
    if g.n() > ceiling {
        return Err(Error::Capacity {
            what: "vertex count for subset enumeration",
            got: g.n(),
            ceiling,
        });
    }
    Ok(())
}

/// `C(G)` by enumerating all subsets of `[n]`.
pub fn cut_sets(g: &Graph) -> Result<CutSetFamily> {
    cut_sets_within(g, SUBSET_CEILING)
}

pub fn cut_sets_within(g: &Graph, ceiling: usize) -> Result<CutSetFamily> {
    check_subset_ceiling(g, ceiling)?;
    let sets = (0u64..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&t| has_cut_point_property(g, t))
        .collect();
    Ok(CutSetFamily::new(sets))
}

/// `[P_T(G) : T ∈ C(G)]`, in the order of [`cut_sets`].
pub fn minimal_primes(g: &Graph) -> Result<Vec<PrimeComponent>> {
    minimal_primes_over(g, PrimeField::default())
}

pub fn minimal_primes_over(g: &Graph, field: PrimeField) -> Result<Vec<PrimeComponent>> {
    let ring = graph_ring(g, field)?;
    Ok(cut_sets(g)?.iter().map(|t| component_in(ring, g, t)).collect())
}

/// `max{n - |T| + c(T) : T ⊆ [n]}`.
pub fn combinatorial_dim(g: &Graph) -> Result<usize> {
    check_subset_ceiling(g, SUBSET_CEILING)?;
    let n = g.n();
    Ok((0u64..1 << n)
        .map(|t| {
            let rest = !t & crate::graph::low_mask(n);
            n - t.count_ones() as usize + g.count_components_within(rest)
        })
        .max()
        .unwrap_or(0))
}

/// `∩ P_T` over the given components, by successive intersection.
pub fn intersect_primes(primes: &[PrimeComponent]) -> Result<Ideal> {
    let (first, rest) = primes
        .split_first()
        .ok_or_else(|| Error::domain("empty intersection"))?;
    rest.iter()
        .try_fold(first.ideal.clone(), |acc, p| acc.intersection(&p.ideal))
}
