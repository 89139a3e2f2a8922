use std::cmp::Ordering;

use super::field::{Coeff, PrimeField};
use super::monomial::Monomial;
use super::order::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// A polynomial over `F_p`: nonzero terms with distinct monomials, sorted in
/// descending order.
///
/// Polynomials handed out by the public API are sorted by degrevlex. Internal
/// Gröbner computations re-sort into their working order via [`Polynomial::resorted`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Polynomial::monomial(field.from_i64(c), Monomial::one())
    }

    pub fn monomial(coeff: Coeff, mono: Monomial) -> Self {
        if coeff == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term { mono, coeff }],
        }
    }

    /// Collects like terms and sorts under `ord`.
    pub fn from_terms<I>(field: PrimeField, terms: I, ord: MonomialOrder) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut v: Vec<Term> = terms
            .into_iter()
            .map(|(mono, coeff)| Term { mono, coeff: coeff % field.characteristic() })
            .collect();
        v.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = field.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
            if out.last().is_some_and(|l| l.coeff == 0) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    /// Trusts the caller: terms nonzero, distinct, and sorted descending.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term under the order the polynomial is sorted in.
    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_mono(&self) -> Monomial {
        self.terms[0].mono
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    pub fn resorted(mut self, ord: MonomialOrder) -> Self {
        self.terms.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
        self
    }

    pub fn is_sorted_by(&self, ord: MonomialOrder) -> bool {
        self.terms.windows(2).all(|w| ord.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn scale(&self, field: PrimeField, c: Coeff) -> Self {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|t| Term { mono: t.mono, coeff: field.mul(t.coeff, c) }).collect(),
        }
    }

    pub fn monic(&self, field: PrimeField) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => self.scale(field, field.inv(t.coeff)),
        }
    }

    /// `c * m * self`; order is preserved because orders are multiplicative.
    pub fn mul_term(&self, field: PrimeField, c: Coeff, m: Monomial) -> Self {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono * m, coeff: field.mul(t.coeff, c) })
                .collect(),
        }
    }

    pub fn add(&self, field: PrimeField, other: &Polynomial, ord: MonomialOrder) -> Self {
        Polynomial {
            terms: sub_mul(field, ord, &self.terms, field.neg(1), Monomial::one(), &other.terms),
        }
    }

    pub fn sub(&self, field: PrimeField, other: &Polynomial, ord: MonomialOrder) -> Self {
        Polynomial {
            terms: sub_mul(field, ord, &self.terms, 1, Monomial::one(), &other.terms),
        }
    }

    pub fn mul(&self, field: PrimeField, other: &Polynomial, ord: MonomialOrder) -> Self {
        let mut acc = Polynomial::zero();
        for t in &other.terms {
            acc = acc.add(field, &self.mul_term(field, t.coeff, t.mono), ord);
        }
        acc
    }

    /// `self / divisor` when the division is exact, else `None`.
    pub fn exact_div(&self, field: PrimeField, divisor: &Polynomial, ord: MonomialOrder) -> Option<Polynomial> {
        let lead = *divisor.leading()?;
        let inv = field.inv(lead.coeff);
        let mut rem = self.terms.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.first().copied() {
            let m = lead.mono.divide_into(&t.mono)?;
            let c = field.mul(t.coeff, inv);
            quot.push(Term { mono: m, coeff: c });
            rem = sub_mul(field, ord, &rem, c, m, &divisor.terms);
        }
        Some(Polynomial { terms: quot })
    }

    /// Evaluation-free substitution `var -> 0` (drops every term containing it).
    pub fn drop_var(&self, var: usize) -> Self {
        Polynomial {
            terms: self.terms.iter().filter(|t| t.mono.exponent(var) == 0).copied().collect(),
        }
    }
}

/// `a - c * m * b` for term vectors sorted descending under `ord`.
pub(crate) fn sub_mul(
    field: PrimeField,
    ord: MonomialOrder,
    a: &[Term],
    c: Coeff,
    m: Monomial,
    b: &[Term],
) -> Vec<Term> {
    let negc = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].mono * m;
        match ord.cmp(&a[i].mono, &bm) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(Term { mono: bm, coeff: field.mul(b[j].coeff, negc) });
                j += 1;
            }
            Ordering::Equal => {
                let coeff = field.add(a[i].coeff, field.mul(b[j].coeff, negc));
                if coeff != 0 {
                    out.push(Term { mono: bm, coeff });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push(Term { mono: t.mono * m, coeff: field.mul(t.coeff, negc) });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const O: MonomialOrder = MonomialOrder::DegRevLex;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn p(terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(f(), terms.iter().map(|(c, e)| (Monomial::from_exponents(e), f().from_i64(*c))), O)
    }

    #[test]
    fn collects_like_terms() {
        let q = p(&[(1, &[1]), (2, &[0, 1]), (-1, &[1])]);
        assert_eq!(q.len(), 1);
        assert_eq!(q.terms()[0].coeff, 2);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[(1, &[1]), (1, &[0, 1])]);
        let b = p(&[(1, &[1]), (-1, &[0, 1])]);
        let prod = a.mul(f(), &b, O);
        assert_eq!(prod, p(&[(1, &[2]), (-1, &[0, 2])]));
        assert!(a.sub(f(), &a, O).is_zero());
        assert_eq!(prod.exact_div(f(), &a, O).unwrap(), b);
        assert!(a.exact_div(f(), &p(&[(1, &[0, 0, 1])]), O).is_none());
    }

    #[test]
    fn homogeneity() {
        assert!(p(&[(1, &[1, 1]), (3, &[0, 0, 2])]).is_homogeneous());
        assert!(!p(&[(1, &[1, 1]), (3, &[0, 0, 1])]).is_homogeneous());
    }
}
