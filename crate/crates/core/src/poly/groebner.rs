//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! normal selection strategy (smallest lcm first).

use super::field::PrimeField;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::{sub_mul, Polynomial, Term};
use super::ring::Ring;

/// A reduced Gröbner basis: monic, pairwise reduced, sorted by increasing
/// leading monomial. Each polynomial is sorted by the basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Fully reduces `f` (sorted by `ord`) modulo monic `reducers`.
pub(crate) fn reduce_full(field: PrimeField, ord: MonomialOrder, f: Vec<Term>, reducers: &[&Polynomial]) -> Vec<Term> {
    let mut rem = Vec::new();
    let mut f = f;
    let mut pos = 0;
    while pos < f.len() {
        let t = f[pos];
        let hit = reducers
            .iter()
            .find_map(|g| g.lead_mono().divide_into(&t.mono).map(|m| (g, m)));
        match hit {
            Some((g, m)) => {
                // Reducers are monic, so the quotient coefficient is t.coeff.
                f = sub_mul(field, ord, &f[pos..], t.coeff, m, g.terms());
                pos = 0;
            }
            None => {
                rem.push(t);
                pos += 1;
            }
        }
    }
    rem
}

struct Builder {
    field: PrimeField,
    ord: MonomialOrder,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Builder {
    fn reducers(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    fn reduce(&self, f: Vec<Term>) -> Polynomial {
        let reducers = self.reducers();
        Polynomial::from_sorted(reduce_full(self.field, self.ord, f, &reducers)).monic(self.field)
    }

    fn insert(&mut self, h: Polynomial) {
        let h_idx = self.polys.len();
        let lh = h.lead_mono();
        self.polys.push(h);
        self.active.push(true);

        // Candidate pairs (h, g) for every active g.
        let cand: Vec<(Pair, bool)> = (0..h_idx)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.polys[g].lead_mono();
                (Pair { i: g, j: h_idx, lcm: lh.lcm(&lg) }, lh.is_coprime(&lg))
            })
            .collect();

        // Chain criterion among the new pairs; coprime pairs survive this step
        // so they can shadow others, then get dropped (product criterion).
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for (k, &(p, coprime)) in cand.iter().enumerate() {
            let shadowed_later = cand[k + 1..].iter().any(|(q, _)| q.lcm.divides(&p.lcm));
            let shadowed_kept = kept.iter().any(|(q, _)| q.lcm.divides(&p.lcm));
            if coprime || (!shadowed_later && !shadowed_kept) {
                kept.push((p, coprime));
            }
        }

        // Old pairs made redundant by h.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lead_mono().lcm(&lh);
            let lj = polys[p.j].lead_mono().lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        self.pairs
            .extend(kept.into_iter().filter(|(_, coprime)| !coprime).map(|(p, _)| p));

        for g in 0..h_idx {
            if self.active[g] && lh.divides(&self.polys[g].lead_mono()) {
                self.active[g] = false;
            }
        }
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a].lcm, &self.pairs[b].lcm);
            pa.degree().cmp(&pb.degree()).then_with(|| ord.cmp(pa, pb))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: Pair) -> Vec<Term> {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = f.lead_mono().divide_into(&p.lcm).expect("lcm is a multiple");
        let mg = g.lead_mono().divide_into(&p.lcm).expect("lcm is a multiple");
        // Both monic: the leading terms cancel exactly.
        let lhs: Vec<Term> = f.terms()[1..]
            .iter()
            .map(|t| Term { mono: t.mono * mf, coeff: t.coeff })
            .collect();
        sub_mul(self.field, self.ord, &lhs, 1, mg, &g.terms()[1..])
    }
}

impl GroebnerBasis {
    pub fn compute(ring: Ring, gens: &[Polynomial], order: MonomialOrder) -> Self {
        let field = ring.field();
        let mut inputs: Vec<Polynomial> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.clone().resorted(order))
            .collect();
        inputs.sort_by_key(|g| g.degree());

        let mut b = Builder {
            field,
            ord: order,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        };
        for g in inputs {
            let h = b.reduce(g.into_terms());
            if !h.is_zero() {
                if h.is_constant() {
                    return GroebnerBasis::unit(ring, order);
                }
                b.insert(h);
            }
        }
        while let Some(p) = b.next_pair() {
            let s = b.spoly(p);
            let h = b.reduce(s);
            if !h.is_zero() {
                if h.is_constant() {
                    return GroebnerBasis::unit(ring, order);
                }
                b.insert(h);
            }
        }

        // Minimal basis, then tail-reduce each element by the others.
        let mut minimal: Vec<Polynomial> = Vec::new();
        let mut candidates = b.reducers().into_iter().cloned().collect::<Vec<_>>();
        candidates.sort_by(|a, c| order.cmp(&a.lead_mono(), &c.lead_mono()));
        for p in candidates {
            if !minimal.iter().any(|q| q.lead_mono().divides(&p.lead_mono())) {
                minimal.push(p);
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, q)| q).collect();
            let head = minimal[k].terms()[0];
            let tail = reduce_full(field, order, minimal[k].terms()[1..].to_vec(), &others);
            let mut terms = vec![head];
            terms.extend(tail);
            reduced.push(Polynomial::from_sorted(terms));
        }
        GroebnerBasis {
            ring,
            order,
            polys: reduced,
        }
    }

    fn unit(ring: Ring, order: MonomialOrder) -> Self {
        GroebnerBasis {
            ring,
            order,
            polys: vec![Polynomial::constant(ring.field(), 1)],
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Basis elements, each sorted by [`GroebnerBasis::order`].
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(Polynomial::lead_mono).collect()
    }

    /// Basis elements re-sorted by degrevlex, for display and export.
    pub fn to_degrevlex(&self) -> Vec<Polynomial> {
        self.polys.iter().map(|p| p.clone().resorted(MonomialOrder::DegRevLex)).collect()
    }

    /// Remainder of `f` on division by the basis, sorted by degrevlex.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&Polynomial> = self.polys.iter().collect();
        let f = f.clone().resorted(self.order);
        Polynomial::from_sorted(reduce_full(self.ring.field(), self.order, f.into_terms(), &refs))
            .resorted(MonomialOrder::DegRevLex)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let refs: Vec<&Polynomial> = self.polys.iter().collect();
        let field = self.ring.field();
        for j in 0..self.polys.len() {
            for i in 0..j {
                let b = Builder {
                    field,
                    ord: self.order,
                    polys: self.polys.clone(),
                    active: vec![true; self.polys.len()],
                    pairs: Vec::new(),
                };
                let lcm = self.polys[i].lead_mono().lcm(&self.polys[j].lead_mono());
                let s = b.spoly(Pair { i, j, lcm });
                if !reduce_full(field, self.order, s, &refs).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_ideal_is_made_monic() {
        let r = Ring::standard(2);
        let f = r.minor(1, 2).scale(r.field(), 5);
        let gb = GroebnerBasis::compute(r, &[f], MonomialOrder::DegRevLex);
        assert_eq!(gb.polys(), &[r.minor(1, 2).monic(r.field())]);
    }

    #[test]
    fn path_ideal_basis_satisfies_criterion() {
        let r = Ring::standard(3);
        let gb = GroebnerBasis::compute(r, &[r.minor(1, 2), r.minor(2, 3)], MonomialOrder::DegRevLex);
        assert!(gb.satisfies_buchberger_criterion());
        // f_13 * x_2 is in J_{P_3}, f_13 alone is not.
        let f13 = r.minor(1, 3);
        assert!(!gb.contains(&f13));
        assert!(gb.contains(&f13.mul_term(r.field(), 1, Monomial::var(r.x(2)))));
        assert!(gb.contains(&f13.mul_term(r.field(), 1, Monomial::var(r.y(2)))));
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::standard(1);
        let x = r.var(0);
        let g = x.sub(r.field(), &Polynomial::constant(r.field(), 1), MonomialOrder::DegRevLex);
        let gb = GroebnerBasis::compute(r, &[x, g], MonomialOrder::DegRevLex);
        assert!(gb.is_unit());
    }

    #[test]
    fn normal_form_without_reduction() {
        let r = Ring::standard(2);
        let gb = GroebnerBasis::compute(r, &[r.var(r.x(2))], MonomialOrder::DegRevLex);
        assert_eq!(gb.normal_form(&r.var(r.x(1))), r.var(r.x(1)));
    }
}
