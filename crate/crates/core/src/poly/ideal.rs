use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::groebner::GroebnerBasis;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A finitely generated ideal with lazily cached reduced Gröbner bases.
///
/// The caches are `OnceLock`s, so an ideal can be shared across threads and
/// the first caller computes the basis.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    drl: OnceLock<Arc<GroebnerBasis>>,
    lex: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring,
            gens: self.gens.clone(),
            drl: self.drl.clone(),
            lex: self.lex.clone(),
        }
    }
}

impl Ideal {
    /// Zero generators are dropped; the rest are kept as given (degrevlex-sorted).
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.resorted(MonomialOrder::DegRevLex))
            .collect();
        Ideal {
            ring,
            gens,
            drl: OnceLock::new(),
            lex: OnceLock::new(),
        }
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn principal(ring: Ring, f: Polynomial) -> Self {
        Ideal::new(ring, vec![f])
    }

    /// `(x_i, y_i : i in vertices)`.
    pub fn vertex_variables<I: IntoIterator<Item = usize>>(ring: Ring, vertices: I) -> Self {
        let gens = vertices
            .into_iter()
            .flat_map(|i| [ring.var(ring.x(i)), ring.var(ring.y(i))])
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// The reduced Gröbner basis under `order` (cached for degrevlex and lex).
    pub fn groebner(&self, order: MonomialOrder) -> Arc<GroebnerBasis> {
        let compute = || Arc::new(GroebnerBasis::compute(self.ring, &self.gens, order));
        match order {
            MonomialOrder::DegRevLex => self.drl.get_or_init(compute).clone(),
            MonomialOrder::Lex => self.lex.get_or_init(compute).clone(),
            MonomialOrder::Elimination { .. } => compute(),
        }
    }

    pub fn gb(&self) -> Arc<GroebnerBasis> {
        self.groebner(MonomialOrder::DegRevLex)
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || (!self.is_zero() && self.gb().contains(f))
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)));
        }
        Ok(())
    }

    /// True iff both ideals have the same reduced degrevlex basis.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.gb().is_empty() && other.gb().is_empty());
        }
        Ok(self.gb().polys() == other.gb().polys())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens.iter().all(|g| other.contains(g)))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new(self.ring, gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let (f, o) = (self.ring.field(), MonomialOrder::DegRevLex);
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(f, b, o)))
            .collect();
        Ok(Ideal::new(self.ring, gens))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.ring));
        }
        let big = self.ring.with_aux(self.ring.aux() + 1)?;
        let t = self.ring.nvars();
        let field = self.ring.field();
        let order = MonomialOrder::Elimination { split: t };
        let tm = Monomial::var(t);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|f| f.mul_term(field, 1, tm)).collect();
        for g in &other.gens {
            let tg = g.mul_term(field, 1, tm);
            gens.push(g.sub(field, &tg, MonomialOrder::DegRevLex));
        }
        let gb = GroebnerBasis::compute(big, &gens, order);
        let kept = gb
            .polys()
            .iter()
            .filter(|p| p.terms().iter().all(|term| term.mono.exponent(t) == 0))
            .cloned()
            .collect();
        Ok(Ideal::new(self.ring, kept))
    }

    /// `I : f`, computed as `(I ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::domain("colon by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(Ideal::zero(self.ring));
        }
        let field = self.ring.field();
        let o = MonomialOrder::DegRevLex;
        let meet = self.intersection(&Ideal::principal(self.ring, f.clone()))?;
        let f = f.clone().resorted(o);
        let quotients = meet
            .gens
            .iter()
            .map(|h| {
                h.exact_div(field, &f, o)
                    .expect("generators of I ∩ (f) are multiples of f")
            })
            .collect();
        Ok(Ideal::new(self.ring, quotients))
    }

    /// Krull dimension of `S/I`: the largest set of variables containing the
    /// support of no leading monomial of the degrevlex basis.
    pub fn krull_dim(&self) -> Result<usize> {
        let nvars = self.ring.nvars();
        if self.is_zero() {
            return Ok(nvars);
        }
        let gb = self.gb();
        if gb.is_unit() {
            return Err(Error::domain("the unit ideal has no dimension"));
        }
        let supports: Vec<u32> = gb.leading_monomials().iter().map(Monomial::support).collect();
        // Smallest variable set meeting every support; its complement is independent.
        let mut best = nvars;
        for hit in 0u64..(1u64 << nvars) {
            let size = hit.count_ones() as usize;
            if size < best && supports.iter().all(|&s| (s as u64) & hit != 0) {
                best = size;
            }
        }
        Ok(nvars - best)
    }

    /// `2n - dim S/I`, in the ring without auxiliary variables.
    pub fn height(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.krull_dim()?)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            ring: self.ring,
            generators: self.gens.iter().map(|g| self.ring.format_poly(g)).collect(),
        }
    }

    pub fn from_json(doc: &IdealJson) -> Result<Ideal> {
        let gens = doc
            .generators
            .iter()
            .map(|s| doc.ring.parse_poly(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(doc.ring, gens))
    }
}

/// Serialized form of an ideal: ring descriptor plus generator strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: Ring,
    pub generators: Vec<String>,
}
