use crate::error::{Error, Result};
use crate::poly::{Ideal, MonomialOrder, Polynomial, Ring};

/// One relation: a homogeneous element of the free module `⊕ S(-d_c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub degree: u32,
    /// `(component, entry)` pairs with nonzero entries, ascending by component.
    pub entries: Vec<(usize, Polynomial)>,
}

impl Relation {
    pub fn entry(&self, comp: usize) -> Option<&Polynomial> {
        self.entries
            .binary_search_by_key(&comp, |(c, _)| *c)
            .ok()
            .map(|k| &self.entries[k].1)
    }
}

/// A graded free module `F = ⊕ S(-d_c)` together with relations in `F`;
/// it presents `F / ⟨relations⟩` and doubles as the matrix of a differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModulePresentation {
    ring: Ring,
    target_degrees: Vec<u32>,
    relations: Vec<Relation>,
}

impl GradedModulePresentation {
    /// Validates indices and homogeneity (`deg entry + d_c = relation degree`).
    pub fn new(ring: Ring, target_degrees: Vec<u32>, relations: Vec<Relation>) -> Result<Self> {
        let mut clean = Vec::with_capacity(relations.len());
        for (r, mut rel) in relations.into_iter().enumerate() {
            rel.entries.retain(|(_, p)| !p.is_zero());
            rel.entries.sort_by_key(|(c, _)| *c);
            for w in rel.entries.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(Error::Validation(format!("relation {r} repeats component {}", w[0].0)));
                }
            }
            for (c, p) in &mut rel.entries {
                let d = *target_degrees
                    .get(*c)
                    .ok_or_else(|| Error::Validation(format!("relation {r} names component {c} out of range")))?;
                if !p.terms().iter().all(|t| t.mono.degree() + d == rel.degree) {
                    return Err(Error::domain(format!("relation {r} is not homogeneous of degree {}", rel.degree)));
                }
                *p = std::mem::take(p).resorted(MonomialOrder::DegRevLex);
            }
            clean.push(rel);
        }
        Ok(GradedModulePresentation {
            ring,
            target_degrees,
            relations: clean,
        })
    }

    /// `S/I` presented as `S` modulo the generators of `I`.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let relations = ideal
            .generators()
            .iter()
            .map(|g| {
                if !g.is_homogeneous() {
                    return Err(Error::domain("non-homogeneous generator"));
                }
                Ok(Relation {
                    degree: g.degree().expect("nonzero"),
                    entries: vec![(0, g.clone())],
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GradedModulePresentation::new(ideal.ring(), vec![0], relations)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn target_degrees(&self) -> &[u32] {
        &self.target_degrees
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// True when no entry has a nonzero constant term.
    pub fn is_minimal(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.entries.iter().all(|(c, _)| self.target_degrees[*c] != r.degree))
    }

    /// Whether `self` followed by `next` is zero, reading `next`'s components
    /// as the relations of `self`.
    pub fn composes_to_zero(&self, next: &GradedModulePresentation) -> bool {
        if next.target_degrees.len() != self.relations.len() {
            return false;
        }
        let field = self.ring.field();
        let o = MonomialOrder::DegRevLex;
        next.relations.iter().all(|outer| {
            (0..self.target_degrees.len()).all(|c| {
                let mut acc = Polynomial::zero();
                for (u, coeff) in &outer.entries {
                    if let Some(p) = self.relations[*u].entry(c) {
                        acc = acc.add(field, &coeff.mul(field, p, o), o);
                    }
                }
                acc.is_zero()
            })
        })
    }
}
