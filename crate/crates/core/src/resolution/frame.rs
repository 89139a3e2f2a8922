//! Schreyer frames: a (generally non-minimal) graded free resolution built
//! level by level from a Gröbner basis, where each level is itself a Gröbner
//! basis of the syzygies of the previous one under the induced order.
//!
//! A term `m·e_u` of a free module `F_i` is stored by its *total* monomial
//! `m·T_u`, where `T_u` is the lead monomial of the image of `e_u`. Terms are
//! compared by total monomial first and by generator index second, which is
//! the order Schreyer's theorem induces when generators are numbered grouped
//! by the component of their leading term.

use std::cmp::Ordering;

use crate::poly::{Coeff, Monomial, MonomialOrder, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct ModTerm {
    pub total: Monomial,
    pub comp: u32,
    pub coeff: Coeff,
}

pub(crate) fn cmp_terms(ord: MonomialOrder, a: &ModTerm, b: &ModTerm) -> Ordering {
    ord.cmp(&a.total, &b.total).then(a.comp.cmp(&b.comp))
}

/// `a - c·m·b` for descending module-term vectors.
pub(crate) fn msub_mul(
    field: PrimeField,
    ord: MonomialOrder,
    a: &[ModTerm],
    c: Coeff,
    m: Monomial,
    b: &[ModTerm],
) -> Vec<ModTerm> {
    let negc = field.neg(c);
    let scaled = |t: &ModTerm| ModTerm {
        total: t.total * m,
        comp: t.comp,
        coeff: field.mul(t.coeff, negc),
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bt = scaled(&b[j]);
        match cmp_terms(ord, &a[i], &bt) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(bt);
                j += 1;
            }
            Ordering::Equal => {
                let coeff = field.add(a[i].coeff, bt.coeff);
                if coeff != 0 {
                    out.push(ModTerm { coeff, ..bt });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(scaled));
    out
}

/// Sorts descending and merges equal terms.
pub(crate) fn normalize(field: PrimeField, ord: MonomialOrder, mut v: Vec<ModTerm>) -> Vec<ModTerm> {
    v.sort_by(|a, b| cmp_terms(ord, b, a));
    let mut out: Vec<ModTerm> = Vec::with_capacity(v.len());
    for t in v {
        match out.last_mut() {
            Some(last) if last.total == t.total && last.comp == t.comp => {
                last.coeff = field.add(last.coeff, t.coeff);
                if last.coeff == 0 {
                    out.pop();
                }
            }
            _ if t.coeff != 0 => out.push(t),
            _ => {}
        }
    }
    out
}

/// One generator of a free module in the frame, with its image one level down.
#[derive(Clone, Debug)]
pub(crate) struct FrameGen {
    pub degree: u32,
    /// Image in the level below, descending; the first term has coefficient 1.
    pub image: Vec<ModTerm>,
}

impl FrameGen {
    pub fn lead(&self) -> ModTerm {
        self.image[0]
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Level {
    pub gens: Vec<FrameGen>,
    /// For each generator of the level below, the generators whose lead sits on it.
    by_comp: Vec<Vec<u32>>,
}

impl Level {
    /// `gens` must be grouped by ascending lead component.
    pub fn new(gens: Vec<FrameGen>, below: usize) -> Self {
        let mut by_comp = vec![Vec::new(); below];
        for (u, g) in gens.iter().enumerate() {
            by_comp[g.lead().comp as usize].push(u as u32);
        }
        debug_assert!(gens.windows(2).all(|w| w[0].lead().comp <= w[1].lead().comp));
        Level { gens, by_comp }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn reducer(&self, t: &ModTerm) -> Option<(u32, Monomial)> {
        self.by_comp[t.comp as usize].iter().find_map(|&u| {
            self.gens[u as usize]
                .lead()
                .total
                .divide_into(&t.total)
                .map(|m| (u, m))
        })
    }

    /// Divides `v` by the images of this level; returns the quotient terms
    /// (one per reduction step, as `(total, generator, coefficient)`) and the
    /// remainder.
    pub fn divide(&self, field: PrimeField, ord: MonomialOrder, mut v: Vec<ModTerm>) -> (Vec<ModTerm>, Vec<ModTerm>) {
        let mut quot = Vec::new();
        let mut rem = Vec::new();
        while let Some(&t) = v.first() {
            match self.reducer(&t) {
                Some((u, m)) => {
                    v = msub_mul(field, ord, &v, t.coeff, m, &self.gens[u as usize].image);
                    quot.push(ModTerm { total: t.total, comp: u, coeff: t.coeff });
                }
                None => {
                    rem.push(t);
                    v.remove(0);
                }
            }
        }
        (quot, rem)
    }
}

/// Builds the next level: the Schreyer syzygies of `level`, restricted to
/// those whose leads are minimal generators of the lead module.
pub(crate) fn next_level(field: PrimeField, ord: MonomialOrder, level: &Level) -> Level {
    let mut out = Vec::new();
    for l in 0..level.len() {
        let gl = &level.gens[l];
        let lead_l = gl.lead();
        let peers = &level.by_comp[lead_l.comp as usize];
        let quotients: Vec<(usize, Monomial)> = peers
            .iter()
            .map(|&k| k as usize)
            .take_while(|&k| k < l)
            .map(|k| {
                let tk = level.gens[k].lead().total;
                let q = lead_l
                    .total
                    .divide_into(&tk.lcm(&lead_l.total))
                    .expect("lcm is a multiple");
                (k, q)
            })
            .collect();
        for (idx, &(k, q)) in quotients.iter().enumerate() {
            let redundant = quotients.iter().enumerate().any(|(other, (_, q2))| {
                other != idx && q2.divides(&q) && (*q2 != q || other < idx)
            });
            if redundant {
                continue;
            }
            let gk = &level.gens[k];
            let tl = lead_l.total * q;
            let qk = gk.lead().total.divide_into(&tl).expect("lcm is a multiple");
            // q·img(l) - qk·img(k), then divide through by the whole level.
            let scaled: Vec<ModTerm> = gl.image[1..]
                .iter()
                .map(|t| ModTerm { total: t.total * q, ..*t })
                .collect();
            let v = msub_mul(field, ord, &scaled, 1, qk, &gk.image[1..]);
            let (quot, rem) = level.divide(field, ord, v);
            debug_assert!(rem.is_empty(), "frame level is not a Gröbner basis");
            let mut image = vec![
                ModTerm { total: tl, comp: l as u32, coeff: 1 },
                ModTerm { total: tl, comp: k as u32, coeff: field.neg(1) },
            ];
            image.extend(quot.into_iter().map(|t| ModTerm { coeff: field.neg(t.coeff), ..t }));
            let image = normalize(field, ord, image);
            debug_assert_eq!(image[0].comp, l as u32);
            out.push(FrameGen {
                degree: gl.degree + q.degree(),
                image,
            });
        }
    }
    Level::new(out, level.len())
}

/// A complete Schreyer frame over a free base module.
#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub field: PrimeField,
    /// Degrees of the base generators (level 0).
    pub base_degrees: Vec<u32>,
    /// `levels[i - 1]` holds the generators of `F_i`.
    pub levels: Vec<Level>,
}

impl Frame {
    /// `first` must be a module Gröbner basis of the relations, grouped by lead component.
    pub fn build(field: PrimeField, order: MonomialOrder, base_degrees: Vec<u32>, first: Vec<FrameGen>, cap: usize) -> Self {
        let mut levels = vec![Level::new(first, base_degrees.len())];
        while levels.len() < cap {
            let next = next_level(field, order, levels.last().expect("nonempty"));
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        Frame {
            field,
            base_degrees,
            levels,
        }
    }

    pub fn degrees(&self, i: usize) -> Vec<u32> {
        if i == 0 {
            self.base_degrees.clone()
        } else {
            self.levels.get(i - 1).map_or_else(Vec::new, |l| l.gens.iter().map(|g| g.degree).collect())
        }
    }

    /// Lead total monomial of each generator of `F_i` (the unit monomial at level 0).
    pub fn leads(&self, i: usize) -> Vec<Monomial> {
        if i == 0 {
            vec![Monomial::one(); self.base_degrees.len()]
        } else {
            self.levels[i - 1].gens.iter().map(|g| g.lead().total).collect()
        }
    }

    pub fn length(&self) -> usize {
        self.levels.len()
    }
}

/// Module Buchberger over the base module, with every base lead equal to 1.
/// Returns a minimal Gröbner basis grouped by ascending lead component.
pub(crate) fn module_groebner(field: PrimeField, ord: MonomialOrder, elems: Vec<(u32, Vec<ModTerm>)>) -> Vec<FrameGen> {
    let mut basis: Vec<FrameGen> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let reduce = |basis: &[FrameGen], mut v: Vec<ModTerm>| -> Vec<ModTerm> {
        let mut rem = Vec::new();
        while let Some(&t) = v.first() {
            let hit = basis.iter().find_map(|g| {
                let l = g.lead();
                (l.comp == t.comp).then(|| l.total.divide_into(&t.total)).flatten().map(|m| (g, m))
            });
            match hit {
                Some((g, m)) => v = msub_mul(field, ord, &v, t.coeff, m, &g.image),
                None => {
                    rem.push(t);
                    v.remove(0);
                }
            }
        }
        rem
    };
    let monic = |v: Vec<ModTerm>| -> Vec<ModTerm> {
        let inv = field.inv(v[0].coeff);
        v.into_iter().map(|t| ModTerm { coeff: field.mul(t.coeff, inv), ..t }).collect()
    };
    let push = |basis: &mut Vec<FrameGen>, pairs: &mut Vec<(usize, usize)>, degree: u32, v: Vec<ModTerm>| {
        let idx = basis.len();
        let comp = v[0].comp;
        for (k, g) in basis.iter().enumerate() {
            if g.lead().comp == comp {
                pairs.push((k, idx));
            }
        }
        basis.push(FrameGen { degree, image: monic(v) });
    };

    for (degree, v) in elems {
        let r = reduce(&basis, normalize(field, ord, v));
        if !r.is_empty() {
            push(&mut basis, &mut pairs, degree, r);
        }
    }
    while let Some(pos) = (0..pairs.len()).min_by_key(|&p| {
        let (a, b) = pairs[p];
        basis[a].lead().total.lcm(&basis[b].lead().total).degree()
    }) {
        let (a, b) = pairs.swap_remove(pos);
        let (ga, gb) = (&basis[a], &basis[b]);
        let lcm = ga.lead().total.lcm(&gb.lead().total);
        let ma = ga.lead().total.divide_into(&lcm).expect("lcm is a multiple");
        let mb = gb.lead().total.divide_into(&lcm).expect("lcm is a multiple");
        let lhs: Vec<ModTerm> = ga.image.iter().map(|t| ModTerm { total: t.total * ma, ..*t }).collect();
        let s = msub_mul(field, ord, &lhs, 1, mb, &gb.image);
        let degree = ga.degree + ma.degree();
        let r = reduce(&basis, s);
        if !r.is_empty() {
            push(&mut basis, &mut pairs, degree, r);
        }
    }

    let mut minimal: Vec<FrameGen> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let l = g.lead();
        let redundant = basis.iter().enumerate().any(|(other, h)| {
            let hl = h.lead();
            other != idx && hl.comp == l.comp && hl.total.divides(&l.total) && (hl.total != l.total || other < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by_key(|g| g.lead().comp);
    minimal
}
