//! Graded free resolutions, Betti tables and Castelnuovo–Mumford regularity.
//!
//! Everything starts from a Schreyer frame (see [`frame`]). Betti numbers are
//! read off the frame directly: `β_{i,j} = dim_k H_i(F ⊗ k)_j`, and the
//! differentials of `F ⊗ k` are the scalar entries of the frame maps, so
//! only ranks of small matrices over `F_p` are needed. The explicit minimal
//! resolution is produced separately by cancelling unit entries.

mod betti;
mod frame;
mod linalg;
mod presentation;

use std::collections::{BTreeMap, BTreeSet};

pub use betti::{BettiTable, ModuleTag};
pub use presentation::{GradedModulePresentation, Relation};

use frame::{module_groebner, Frame, FrameGen, ModTerm};

use crate::error::{Error, Result};
use crate::poly::{Ideal, Monomial, MonomialOrder, Polynomial, Ring};

fn check_ideal(ideal: &Ideal) -> Result<()> {
    if !ideal.is_homogeneous() {
        return Err(Error::domain("resolution needs a homogeneous ideal"));
    }
    if ideal.is_unit() {
        return Err(Error::domain("resolution needs a proper ideal"));
    }
    Ok(())
}

fn ideal_frame(ideal: &Ideal, order: MonomialOrder) -> Result<Frame> {
    check_ideal(ideal)?;
    let ring = ideal.ring();
    let field = ring.field();
    let first: Vec<FrameGen> = if ideal.is_zero() {
        Vec::new()
    } else {
        ideal
            .groebner(order)
            .polys()
            .iter()
            .map(|g| FrameGen {
                degree: g.degree().expect("nonzero"),
                image: g
                    .terms()
                    .iter()
                    .map(|t| ModTerm { total: t.mono, comp: 0, coeff: t.coeff })
                    .collect(),
            })
            .collect()
    };
    Ok(build(field, order, vec![0], first, ring))
}

fn build(field: crate::poly::PrimeField, order: MonomialOrder, base: Vec<u32>, first: Vec<FrameGen>, ring: Ring) -> Frame {
    if first.is_empty() {
        return Frame {
            field,
            base_degrees: base,
            levels: Vec::new(),
        };
    }
    Frame::build(field, order, base, first, ring.nvars() + 1)
}

/// Ranks of the scalar part of `d_i : F_i -> F_{i-1}`, per internal degree.
fn scalar_ranks(frame: &Frame, i: usize) -> BTreeMap<u32, usize> {
    let mut ranks = BTreeMap::new();
    if i == 0 || i > frame.length() {
        return ranks;
    }
    let leads = frame.leads(i - 1);
    let mut by_degree: BTreeMap<u32, Vec<Vec<(u32, u32)>>> = BTreeMap::new();
    for g in &frame.levels[i - 1].gens {
        let row: Vec<(u32, u32)> = g
            .image
            .iter()
            .filter(|t| t.total == leads[t.comp as usize])
            .map(|t| (t.comp, t.coeff))
            .collect();
        if !row.is_empty() {
            by_degree.entry(g.degree).or_default().push(row);
        }
    }
    for (j, rows) in by_degree {
        let cols: BTreeSet<u32> = rows.iter().flatten().map(|&(c, _)| c).collect();
        let index: BTreeMap<u32, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let dense = rows
            .iter()
            .map(|row| {
                let mut v = vec![0; cols.len()];
                for &(c, a) in row {
                    v[index[&c]] = a;
                }
                v
            })
            .collect();
        ranks.insert(j, linalg::rank(frame.field, dense));
    }
    ranks
}

fn frame_betti(frame: &Frame) -> BettiTable {
    let len = frame.length();
    let ranks: Vec<BTreeMap<u32, usize>> = (0..=len + 1).map(|i| scalar_ranks(frame, i)).collect();
    let mut entries = BTreeMap::new();
    for i in 0..=len {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for d in frame.degrees(i) {
            *counts.entry(d).or_default() += 1;
        }
        for (j, count) in counts {
            let r = ranks[i].get(&j).copied().unwrap_or(0) + ranks[i + 1].get(&j).copied().unwrap_or(0);
            entries.insert((i, j), (count - r) as u64);
        }
    }
    BettiTable::new(ModuleTag::Quotient, entries)
}

/// The Betti table of `S/I` (tag `S/J`).
pub fn betti_table(ideal: &Ideal) -> Result<BettiTable> {
    betti_table_with_order(ideal, MonomialOrder::DegRevLex)
}

/// Same as [`betti_table`], with the frame built over another monomial order.
pub fn betti_table_with_order(ideal: &Ideal, order: MonomialOrder) -> Result<BettiTable> {
    Ok(frame_betti(&ideal_frame(ideal, order)?))
}

/// `reg(I)`, which is `reg(S/I) + 1`. The zero ideal has no regularity here.
pub fn regularity(ideal: &Ideal) -> Result<u32> {
    if ideal.is_zero() {
        return Err(Error::domain("regularity of the zero ideal is a convention, not computed"));
    }
    regularity_from_table(&betti_table(ideal)?)
}

/// `reg(J)` from either form of the table.
pub fn regularity_from_table(table: &BettiTable) -> Result<u32> {
    table
        .to_ideal()
        .regularity()
        .map(|r| r as u32)
        .ok_or_else(|| Error::domain("the zero ideal has no regularity"))
}

/// Whether `I`, generated in a single degree `d`, has `β_{i,j}(I) = 0` for `j ≠ i + d`.
pub fn has_linear_resolution(ideal: &Ideal) -> Result<bool> {
    let table = betti_table(ideal)?.to_ideal();
    let degrees: BTreeSet<u32> = table.entries().filter(|&(i, _, _)| i == 0).map(|(_, j, _)| j).collect();
    let d = match degrees.len() {
        0 => return Err(Error::domain("the zero ideal has no generators")),
        1 => *degrees.first().expect("one degree"),
        _ => return Err(Error::domain("generators of mixed degree")),
    };
    let linear = table.entries().all(|(i, j, _)| j as usize == i + d as usize);
    Ok(linear)
}

/// Polynomial matrices of the frame maps: row `u` of level `i` lists the
/// components of `d_i(e_u)` in `F_{i-1}`.
fn frame_matrices(frame: &Frame) -> Vec<Vec<BTreeMap<usize, Polynomial>>> {
    let field = frame.field;
    (1..=frame.length())
        .map(|i| {
            let leads = frame.leads(i - 1);
            frame.levels[i - 1]
                .gens
                .iter()
                .map(|g| {
                    let mut per: BTreeMap<usize, Vec<(Monomial, u32)>> = BTreeMap::new();
                    for t in &g.image {
                        let m = leads[t.comp as usize].divide_into(&t.total).expect("frame term");
                        per.entry(t.comp as usize).or_default().push((m, t.coeff));
                    }
                    per.into_iter()
                        .map(|(c, ts)| (c, Polynomial::from_terms(field, ts, MonomialOrder::DegRevLex)))
                        .filter(|(_, p)| !p.is_zero())
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Prunes a frame to a minimal resolution by repeatedly cancelling a pair
/// of generators joined by a unit entry.
fn minimize(frame: &Frame, ring: Ring) -> Result<Vec<GradedModulePresentation>> {
    let field = frame.field;
    let o = MonomialOrder::DegRevLex;
    let len = frame.length();
    let mut mats = frame_matrices(frame);
    let degrees: Vec<Vec<u32>> = (0..=len).map(|i| frame.degrees(i)).collect();
    let mut alive: Vec<Vec<bool>> = degrees.iter().map(|d| vec![true; d.len()]).collect();

    for i in 1..=len {
        loop {
            let mut changed = false;
            for u in 0..mats[i - 1].len() {
                if !alive[i][u] {
                    continue;
                }
                let pivot = mats[i - 1][u]
                    .iter()
                    .find(|(c, p)| alive[i - 1][**c] && degrees[i - 1][**c] == degrees[i][u] && !p.is_zero())
                    .map(|(c, p)| (*c, p.terms()[0].coeff));
                let Some((c, a)) = pivot else { continue };
                let inv = field.inv(a);
                let prow = mats[i - 1][u].clone();
                for w in 0..mats[i - 1].len() {
                    if w == u || !alive[i][w] {
                        continue;
                    }
                    let Some(b) = mats[i - 1][w].get(&c).cloned() else { continue };
                    let factor = b.scale(field, inv);
                    let row = &mut mats[i - 1][w];
                    for (col, p) in &prow {
                        let cur = row.remove(col).unwrap_or_default();
                        let next = cur.sub(field, &factor.mul(field, p, o), o);
                        if !next.is_zero() {
                            row.insert(*col, next);
                        }
                    }
                }
                alive[i][u] = false;
                alive[i - 1][c] = false;
                changed = true;
            }
            if !changed {
                break;
            }
        }
    }

    let renumber: Vec<Vec<Option<usize>>> = alive
        .iter()
        .map(|a| {
            let mut k = 0;
            a.iter()
                .map(|&live| {
                    live.then(|| {
                        k += 1;
                        k - 1
                    })
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for i in 1..=len {
        let target: Vec<u32> = (0..degrees[i - 1].len()).filter(|&c| alive[i - 1][c]).map(|c| degrees[i - 1][c]).collect();
        let relations: Vec<Relation> = (0..degrees[i].len())
            .filter(|&u| alive[i][u])
            .map(|u| Relation {
                degree: degrees[i][u],
                entries: mats[i - 1][u]
                    .iter()
                    .filter_map(|(c, p)| renumber[i - 1][*c].map(|k| (k, p.clone())))
                    .collect(),
            })
            .collect();
        if relations.is_empty() {
            break;
        }
        out.push(GradedModulePresentation::new(ring, target, relations)?);
    }
    Ok(out)
}

/// A minimal graded free resolution of `S/I`, as the list of differentials
/// `d_1, d_2, …` (each a presentation whose components are the previous
/// level's generators).
pub fn minimal_free_resolution(ideal: &Ideal) -> Result<Vec<GradedModulePresentation>> {
    let frame = ideal_frame(ideal, MonomialOrder::DegRevLex)?;
    minimize(&frame, ideal.ring())
}

/// Betti table read off explicit differentials: `β_{i,j}` counts degree-`j`
/// generators of `F_i` (exact when the differentials are minimal).
pub fn betti_from_resolution(resolution: &[GradedModulePresentation]) -> BettiTable {
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    if let Some(first) = resolution.first() {
        for &d in first.target_degrees() {
            *entries.entry((0, d)).or_default() += 1;
        }
    } else {
        entries.insert((0, 0), 1);
    }
    for (k, p) in resolution.iter().enumerate() {
        for r in p.relations() {
            *entries.entry((k + 1, r.degree)).or_default() += 1;
        }
    }
    BettiTable::new(ModuleTag::Quotient, entries)
}

fn module_frame(p: &GradedModulePresentation, order: MonomialOrder) -> Frame {
    let field = p.ring().field();
    let elems = p
        .relations()
        .iter()
        .filter(|r| !r.entries.is_empty())
        .map(|r| {
            let terms = r
                .entries
                .iter()
                .flat_map(|(c, poly)| {
                    poly.terms().iter().map(move |t| ModTerm {
                        total: t.mono,
                        comp: *c as u32,
                        coeff: t.coeff,
                    })
                })
                .collect();
            (r.degree, terms)
        })
        .collect();
    let first = module_groebner(field, order, elems);
    build(field, order, p.target_degrees().to_vec(), first, p.ring())
}

/// A Gröbner basis of the relation module of `p`, as a presentation with
/// the same target.
pub fn relation_basis(p: &GradedModulePresentation, order: MonomialOrder) -> Result<GradedModulePresentation> {
    let frame = module_frame(p, order);
    let mats = frame_matrices(&frame);
    let relations = match (frame.levels.first(), mats.first()) {
        (Some(level), Some(rows)) => level
            .gens
            .iter()
            .zip(rows)
            .map(|(g, row)| Relation {
                degree: g.degree,
                entries: row.iter().map(|(c, p)| (*c, p.clone())).collect(),
            })
            .collect(),
        _ => Vec::new(),
    };
    GradedModulePresentation::new(p.ring(), p.target_degrees().to_vec(), relations)
}

/// The first syzygy module of the relations of `p`, after extending them to
/// a Gröbner basis: the components of the result index the elements of
/// [`relation_basis`]`(p, order)`, in that order.
pub fn syzygies(p: &GradedModulePresentation, order: MonomialOrder) -> Result<GradedModulePresentation> {
    let frame = module_frame(p, order);
    let ring = p.ring();
    let mats = frame_matrices(&frame);
    let target = frame.degrees(1);
    let relations = match (frame.levels.get(1), mats.get(1)) {
        (Some(level), Some(rows)) => level
            .gens
            .iter()
            .zip(rows)
            .map(|(g, row)| Relation {
                degree: g.degree,
                entries: row.iter().map(|(c, p)| (*c, p.clone())).collect(),
            })
            .collect(),
        _ => Vec::new(),
    };
    GradedModulePresentation::new(ring, target, relations)
}

/// Betti table of the module presented by `p`.
pub fn module_betti_table(p: &GradedModulePresentation) -> BettiTable {
    frame_betti(&module_frame(p, MonomialOrder::DegRevLex))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_ideal(n: usize) -> Ideal {
        let ring = Ring::standard(n);
        Ideal::new(ring, (1..n).map(|i| ring.minor(i, i + 1)).collect())
    }

    fn complete_ideal(n: usize) -> Ideal {
        let ring = Ring::standard(n);
        let mut gens = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                gens.push(ring.minor(i, j));
            }
        }
        Ideal::new(ring, gens)
    }

    #[test]
    fn single_variable() {
        let ring = Ring::standard(1);
        let i = Ideal::principal(ring, ring.var(ring.x(1)));
        let t = betti_table(&i).unwrap();
        assert_eq!(t, BettiTable::new(ModuleTag::Quotient, [((0, 0), 1), ((1, 1), 1)]));
        let res = minimal_free_resolution(&i).unwrap();
        assert_eq!(res.len(), 1);
        assert_eq!(regularity(&i).unwrap(), 1);
    }

    #[test]
    fn edge_and_triangle() {
        let t = betti_table(&complete_ideal(2)).unwrap();
        assert_eq!(t, BettiTable::new(ModuleTag::Quotient, [((0, 0), 1), ((1, 2), 1)]));
        let t = betti_table(&complete_ideal(3)).unwrap();
        assert_eq!(t, BettiTable::new(ModuleTag::Quotient, [((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]));
        assert!(has_linear_resolution(&complete_ideal(3)).unwrap());
    }

    #[test]
    fn path_is_complete_intersection() {
        // J_{P_n} is a complete intersection of n - 1 quadrics.
        for n in 2..=5 {
            let t = betti_table(&path_ideal(n)).unwrap();
            let k = n - 1;
            for i in 0..=k {
                let binom = (0..i).fold(1u64, |acc, m| acc * (k - m) as u64 / (m as u64 + 1));
                assert_eq!(t.get(i, 2 * i as u32), binom, "n={n} i={i}");
            }
            assert_eq!(t.total(k + 1), 0);
            assert_eq!(regularity(&path_ideal(n)).unwrap(), n as u32);
        }
        assert!(!has_linear_resolution(&path_ideal(3)).unwrap());
    }

    #[test]
    fn minimization_agrees_with_scalar_ranks() {
        for ideal in [path_ideal(4), complete_ideal(4)] {
            let res = minimal_free_resolution(&ideal).unwrap();
            assert!(res.iter().all(GradedModulePresentation::is_minimal));
            for w in res.windows(2) {
                assert!(w[0].composes_to_zero(&w[1]));
            }
            assert_eq!(betti_from_resolution(&res), betti_table(&ideal).unwrap());
        }
    }

    #[test]
    fn lex_frame_gives_same_table() {
        for ideal in [path_ideal(4), complete_ideal(4)] {
            assert_eq!(
                betti_table_with_order(&ideal, MonomialOrder::Lex).unwrap(),
                betti_table(&ideal).unwrap()
            );
        }
    }

    #[test]
    fn rejects_bad_input() {
        let ring = Ring::standard(1);
        let inhom = ring.var(0).add(ring.field(), &ring.var(1).mul(ring.field(), &ring.var(1), MonomialOrder::DegRevLex), MonomialOrder::DegRevLex);
        assert!(betti_table(&Ideal::principal(ring, inhom)).is_err());
        assert!(betti_table(&Ideal::principal(ring, Polynomial::constant(ring.field(), 1))).is_err());
        assert!(regularity(&Ideal::zero(ring)).is_err());
        let zero = betti_table(&Ideal::zero(ring)).unwrap();
        assert_eq!(zero, BettiTable::new(ModuleTag::Quotient, [((0, 0), 1)]));
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let ring = Ring::standard(1);
        let p = GradedModulePresentation::from_ideal(&Ideal::new(ring, vec![ring.var(0), ring.var(1)])).unwrap();
        let syz = syzygies(&p, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(syz.relations().len(), 1);
        assert_eq!(syz.relations()[0].degree, 2);
        assert!(relation_basis(&p, MonomialOrder::DegRevLex).unwrap().composes_to_zero(&syz));

        let single = GradedModulePresentation::from_ideal(&Ideal::principal(ring, ring.var(0))).unwrap();
        assert!(syzygies(&single, MonomialOrder::DegRevLex).unwrap().relations().is_empty());
    }

    #[test]
    fn triangle_syzygies() {
        let p = GradedModulePresentation::from_ideal(&complete_ideal(3)).unwrap();
        let syz = syzygies(&p, MonomialOrder::DegRevLex).unwrap();
        let t = module_betti_table(&p);
        assert_eq!(t.get(2, 3), 2);
        assert!(syz.relations().iter().filter(|r| r.degree == 3).count() >= 2);
    }

    #[test]
    fn twisted_module() {
        // coker(S(-1) --x1--> S): same as S/(x1), but presented with a twisted target.
        let ring = Ring::standard(1);
        let p = GradedModulePresentation::new(
            ring,
            vec![1],
            vec![Relation { degree: 2, entries: vec![(0, ring.var(0))] }],
        )
        .unwrap();
        let t = module_betti_table(&p);
        assert_eq!(t, BettiTable::new(ModuleTag::Quotient, [((0, 1), 1), ((1, 2), 1)]));
        assert!(GradedModulePresentation::new(ring, vec![0], vec![Relation { degree: 2, entries: vec![(0, ring.var(0))] }]).is_err());
    }
}
