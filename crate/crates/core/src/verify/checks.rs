use serde_json::json;

use super::{Check, CheckResult, FailureArtifacts, IdealDump, Verdict, INTERSECTION_CEILING};
use crate::edge_ideal::{
    binomial_edge_ideal_over, colon_generators_over, combinatorial_dim, intersect_primes, minimal_primes_over,
    PathMonomialSystem,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, DEFAULT_CENSUS_CEILING};
use crate::io::graph6;
use crate::poly::{Ideal, Polynomial, PrimeField};
use crate::resolution::{betti_table, regularity_from_table, BettiTable};

/// A graph with its binomial edge ideal and Betti table, shared by the checks.
#[derive(Clone, Debug)]
pub struct GraphContext {
    pub graph: Graph,
    /// Canonical key when `n` is within the census ceiling, else the graph6
    /// string of the labelled graph.
    pub key: String,
    pub field: PrimeField,
    pub ideal: Ideal,
    /// `None` exactly when the graph has no edges.
    pub betti: Option<BettiTable>,
}

pub(crate) fn graph_key(g: &Graph) -> Result<String> {
    if g.n() <= DEFAULT_CENSUS_CEILING {
        Ok(g.canonical_form()?.as_str().to_string())
    } else {
        Ok(graph6::encode(g))
    }
}

impl GraphContext {
    pub fn new(g: &Graph, field: PrimeField) -> Result<Self> {
        let ideal = binomial_edge_ideal_over(g, field)?;
        let betti = if ideal.is_zero() { None } else { Some(betti_table(&ideal)?) };
        Self::assemble(g, field, ideal, betti)
    }

    /// Reuses a previously computed Betti table (for example from the cache).
    pub fn with_betti(g: &Graph, field: PrimeField, betti: Option<BettiTable>) -> Result<Self> {
        let ideal = binomial_edge_ideal_over(g, field)?;
        if ideal.is_zero() != betti.is_none() {
            return Err(Error::Validation("Betti table does not match the graph".into()));
        }
        Self::assemble(g, field, ideal, betti)
    }

    fn assemble(g: &Graph, field: PrimeField, ideal: Ideal, betti: Option<BettiTable>) -> Result<Self> {
        Ok(GraphContext {
            graph: g.clone(),
            key: graph_key(g)?,
            field,
            ideal,
            betti,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `reg(J_G)`, or `None` for an edgeless graph.
    pub fn reg(&self) -> Option<u32> {
        self.betti
            .as_ref()
            .map(|t| regularity_from_table(t).expect("nonzero ideal has a regularity"))
    }

    /// `reg(J_G)` with the edgeless convention `0`.
    pub fn reg_or_zero(&self) -> u32 {
        self.reg().unwrap_or(0)
    }

    fn edgeless_report(&self, check: Check) -> CheckResult {
        CheckResult::new(
            check,
            &self.key,
            Verdict::ReportOnly,
            json!({"reg": 0, "note": "edgeless graph, reg recorded as 0 by convention"}),
        )
    }

    fn failure(&self, ideals: &[(&str, &Ideal)]) -> FailureArtifacts {
        FailureArtifacts {
            graph6: graph6::encode(&self.graph),
            ideals: ideals.iter().map(|(label, i)| dump(label, i)).collect(),
        }
    }

    fn finish(&self, mut r: CheckResult, ideals: &[(&str, &Ideal)]) -> CheckResult {
        if r.verdict == Verdict::Fail {
            r.artifacts = Some(self.failure(ideals));
        }
        r
    }
}

fn dump(label: &str, ideal: &Ideal) -> IdealDump {
    let ring = ideal.ring();
    IdealDump {
        label: label.to_string(),
        groebner_basis: if ideal.is_zero() {
            Vec::new()
        } else {
            ideal.gb().to_degrevlex().iter().map(|p| ring.format_poly(p)).collect()
        },
        betti: if ideal.is_zero() { None } else { betti_table(ideal).ok() },
    }
}

fn reg_of(ideal: &Ideal) -> Result<u32> {
    regularity_from_table(&betti_table(ideal)?)
}

fn edge_label(e: Edge) -> String {
    format!("e={}-{}", e.low(), e.high())
}

/// `reg(J_G) ≤ n`.
pub fn check_mm_bound(ctx: &GraphContext) -> CheckResult {
    let Some(reg) = ctx.reg() else {
        return ctx.edgeless_report(Check::MmBound);
    };
    let n = ctx.n() as u32;
    let r = CheckResult::passing_if(Check::MmBound, &ctx.key, reg <= n, json!({"reg": reg, "n": n}));
    ctx.finish(r, &[("J_G", &ctx.ideal)])
}

/// `reg(J_G) ≥ l + 1`, with `l` the longest induced path length.
pub fn check_lower_bound(ctx: &GraphContext) -> CheckResult {
    let Some(reg) = ctx.reg() else {
        return ctx.edgeless_report(Check::LowerBound);
    };
    let l = ctx.graph.longest_induced_path_length() as u32;
    let r = CheckResult::passing_if(Check::LowerBound, &ctx.key, reg > l, json!({"reg": reg, "l": l}));
    ctx.finish(r, &[("J_G", &ctx.ideal)])
}

/// `reg(J_G) = n` for paths and `reg(J_G) ≤ n - 1` otherwise.
pub fn check_conjecture_b(ctx: &GraphContext) -> CheckResult {
    let Some(reg) = ctx.reg() else {
        return ctx.edgeless_report(Check::ConjectureB);
    };
    let n = ctx.n() as u32;
    let is_path = ctx.graph.is_path();
    let ok = if is_path { reg == n } else { reg < n };
    let r = CheckResult::passing_if(
        Check::ConjectureB,
        &ctx.key,
        ok,
        json!({"reg": reg, "n": n, "is_path": is_path}),
    );
    ctx.finish(r, &[("J_G", &ctx.ideal)])
}

/// Compares `reg(J_G)` with `c(G) + 1`; always report-only.
pub fn check_conjecture_a(ctx: &GraphContext) -> CheckResult {
    let Some(reg) = ctx.reg() else {
        return ctx.edgeless_report(Check::ConjectureA);
    };
    let c = ctx.graph.clique_count() as u32;
    CheckResult::new(
        Check::ConjectureA,
        &ctx.key,
        Verdict::ReportOnly,
        json!({"reg": reg, "c_plus_1": c + 1, "holds": reg <= c + 1}),
    )
}

/// The three regularity inequalities from `0 → S/(J_{G\e}:f_e)(-2) → S/J_{G\e} → S/J_G → 0`.
/// The colon is taken from the path generators and compared with the
/// elimination colon as well.
pub fn check_ses_inequalities(ctx: &GraphContext, e: Edge) -> Result<CheckResult> {
    let g = &ctx.graph;
    let deleted = g.delete_edges(&[e])?;
    let j_del = binomial_edge_ideal_over(&deleted, ctx.field)?;
    let colon = colon_generators_over(g, e, ctx.field)?;
    let f_e = colon.ring().minor(e.low(), e.high());
    // S/0 = S has regularity 0, so on the ideal side the zero ideal counts as 1 here
    let (colon_agrees, r_del, r_col) = if j_del.is_zero() {
        (colon.is_zero(), 1, 1)
    } else {
        (j_del.colon(&f_e)?.equals(&colon)?, reg_of(&j_del)?, reg_of(&colon)?)
    };
    let r_g = ctx.reg().expect("G has the edge e");
    let a = r_g <= r_del.max(r_col + 1);
    let b = r_del <= r_g.max(r_col + 2);
    let c = r_col + 2 <= r_del.max(r_g + 1);
    let r = CheckResult::passing_if(
        Check::Ses,
        &ctx.key,
        a && b && c && colon_agrees,
        json!({
            "reg_g": r_g, "reg_g_minus_e": r_del, "reg_colon": r_col,
            "a": a, "b": b, "c": c, "colon_agrees": colon_agrees,
        }),
    )
    .at(edge_label(e));
    Ok(ctx.finish(r, &[("J_G", &ctx.ideal), ("J_G\\e", &j_del), ("colon", &colon)]))
}

/// The elimination colon `J_{G\e} : f_e` against the path generators.
pub fn check_colon_theorem(ctx: &GraphContext, e: Edge) -> Result<CheckResult> {
    let g = &ctx.graph;
    let predicted = colon_generators_over(g, e, ctx.field)?;
    let j_del = binomial_edge_ideal_over(&g.delete_edges(&[e])?, ctx.field)?;
    let actual = j_del.colon(&predicted.ring().minor(e.low(), e.high()))?;
    let equal = actual.equals(&predicted)?;
    let r = CheckResult::passing_if(
        Check::Colon,
        &ctx.key,
        equal,
        json!({
            "elimination_gb_size": actual.gb().len(),
            "path_generators_gb_size": predicted.gb().len(),
        }),
    )
    .at(edge_label(e));
    Ok(ctx.finish(r, &[("elimination colon", &actual), ("path generators", &predicted)]))
}

/// For a simplicial `v` of degree at least 2 and an edge `e` at `v`:
/// `reg(J_{G\e} : f_e) ≤ n - 2`, and the path monomials reduce to the
/// variables of the other neighbours of `v`.
pub fn check_colon_lemma(ctx: &GraphContext, v: usize, e: Edge) -> Result<CheckResult> {
    let g = &ctx.graph;
    let (a, b) = e.endpoints();
    if v != a && v != b {
        return Err(Error::domain(format!("{e} is not incident with vertex {v}")));
    }
    if !g.has_edge(a, b) {
        return Err(Error::domain(format!("{e} is not an edge of the graph")));
    }
    if !g.is_simplicial(v)? || g.degree(v)? < 2 {
        return Err(Error::domain(format!("vertex {v} is not simplicial of degree at least 2")));
    }
    let w = if v == a { b } else { a };
    let colon = colon_generators_over(g, e, ctx.field)?;
    let ring = colon.ring();
    let reg = reg_of(&colon)?;
    let n = ctx.n() as u32;

    let system = PathMonomialSystem::new(g, ring, e)?;
    let path_ideal = Ideal::new(
        ring,
        system.generators().into_iter().map(|m| Polynomial::monomial(1, m)).collect(),
    );
    let others = g.neighbors(v)?.iter().filter(|&u| u != w);
    let identity = path_ideal.equals(&Ideal::vertex_variables(ring, others))?;

    let r = CheckResult::passing_if(
        Check::ColonLemma,
        &ctx.key,
        reg + 2 <= n && identity,
        json!({"reg_colon": reg, "n_minus_2": n - 2, "path_ideal_identity": identity}),
    )
    .at(format!("v={v},{}", edge_label(e)));
    Ok(ctx.finish(r, &[("colon", &colon), ("path monomials", &path_ideal)]))
}

fn check_intersection_ceiling(ctx: &GraphContext, ceiling: usize) -> Result<()> {
    if ctx.n() > ceiling {
        return Err(Error::Capacity {
            what: "vertex count for the decomposition check",
            got: ctx.n(),
            ceiling,
        });
    }
    Ok(())
}

/// `J_G = ∩_{T ∈ C(G)} P_T(G)`.
pub fn check_decomposition(ctx: &GraphContext) -> Result<CheckResult> {
    check_decomposition_within(ctx, INTERSECTION_CEILING)
}

pub(crate) fn check_decomposition_within(ctx: &GraphContext, ceiling: usize) -> Result<CheckResult> {
    check_intersection_ceiling(ctx, ceiling)?;
    let primes = minimal_primes_over(&ctx.graph, ctx.field)?;
    let meet = intersect_primes(&primes)?;
    let equal = meet.equals(&ctx.ideal)?;
    let r = CheckResult::passing_if(
        Check::Decomposition,
        &ctx.key,
        equal,
        json!({"primes": primes.len(), "cut_sets": primes.iter().map(|p| p.t).collect::<Vec<_>>()}),
    );
    Ok(ctx.finish(r, &[("J_G", &ctx.ideal), ("intersection", &meet)]))
}

/// `height P_T(G) = n + |T| - c(T)` for every `T ∈ C(G)`.
pub fn check_height(ctx: &GraphContext) -> Result<CheckResult> {
    let primes = minimal_primes_over(&ctx.graph, ctx.field)?;
    let mut rows = Vec::new();
    let mut bad: Option<&Ideal> = None;
    for p in &primes {
        let h = p.ideal.height()?;
        let want = p.predicted_height();
        if h != want && bad.is_none() {
            bad = Some(&p.ideal);
        }
        rows.push(json!({"T": p.t, "height": h, "predicted": want}));
    }
    let r = CheckResult::passing_if(Check::Height, &ctx.key, bad.is_none(), json!(rows));
    Ok(match bad {
        Some(ideal) => ctx.finish(r, &[("J_G", &ctx.ideal), ("P_T", ideal)]),
        None => r,
    })
}

/// `max{n - |T| + c(T)}` equals the Krull dimension of `S/J_G`.
pub fn check_dimension(ctx: &GraphContext) -> Result<CheckResult> {
    let comb = combinatorial_dim(&ctx.graph)?;
    let krull = ctx.ideal.krull_dim()?;
    let r = CheckResult::passing_if(
        Check::Dimension,
        &ctx.key,
        comb == krull,
        json!({"combinatorial": comb, "krull": krull}),
    );
    Ok(ctx.finish(r, &[("J_G", &ctx.ideal)]))
}

/// Runs one per-graph check at every place it applies.
pub fn run_check(ctx: &GraphContext, check: Check) -> Result<Vec<CheckResult>> {
    let g = &ctx.graph;
    Ok(match check {
        Check::MmBound => vec![check_mm_bound(ctx)],
        Check::LowerBound => vec![check_lower_bound(ctx)],
        Check::ConjectureA => vec![check_conjecture_a(ctx)],
        Check::ConjectureB => vec![check_conjecture_b(ctx)],
        Check::Ses => g.edges().into_iter().map(|e| check_ses_inequalities(ctx, e)).collect::<Result<_>>()?,
        Check::Colon => g.edges().into_iter().map(|e| check_colon_theorem(ctx, e)).collect::<Result<_>>()?,
        Check::ColonLemma => {
            let mut out = Vec::new();
            for v in 1..=g.n() {
                if g.degree(v)? >= 2 && g.is_simplicial(v)? {
                    for u in g.neighbors(v)?.iter() {
                        out.push(check_colon_lemma(ctx, v, Edge::new(v, u))?);
                    }
                }
            }
            out
        }
        Check::Decomposition => vec![check_decomposition_within(ctx, usize::MAX)?],
        Check::Height => vec![check_height(ctx)?],
        Check::Dimension => vec![check_dimension(ctx)?],
        other => return Err(Error::domain(format!("{other} is not a single-graph check"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(g: &Graph) -> GraphContext {
        GraphContext::new(g, PrimeField::default()).unwrap()
    }

    fn figure_one() -> Graph {
        Graph::from_edges(5, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn bounds_on_small_examples() {
        let p4 = ctx(&Graph::path(4));
        assert_eq!(p4.reg(), Some(4));
        assert_eq!(check_mm_bound(&p4).verdict, Verdict::Pass);
        assert_eq!(check_mm_bound(&ctx(&Graph::complete(5))).witness["reg"], 2);
        assert_eq!(check_lower_bound(&ctx(&Graph::cycle(5))).witness["l"], 3);
        assert_eq!(check_conjecture_b(&ctx(&Graph::cycle(4))).witness["reg"], 3);
        assert_eq!(check_conjecture_b(&ctx(&figure_one())).verdict, Verdict::Pass);
        let fan = Graph::edgeless(1).join(&Graph::path(3));
        let a = check_conjecture_a(&ctx(&fan));
        assert_eq!((a.verdict, a.witness["reg"].clone(), a.witness["c_plus_1"].clone()), (Verdict::ReportOnly, json!(3), json!(3)));
    }

    #[test]
    fn edgeless_graphs_are_reported() {
        let c = ctx(&Graph::edgeless(3));
        assert_eq!(c.reg_or_zero(), 0);
        for r in [check_mm_bound(&c), check_lower_bound(&c), check_conjecture_b(&c)] {
            assert_eq!(r.verdict, Verdict::ReportOnly);
        }
    }

    #[test]
    fn ses_examples() {
        let tri = ctx(&Graph::complete(3));
        let r = check_ses_inequalities(&tri, Edge::new(1, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!((r.witness["reg_g"].clone(), r.witness["reg_g_minus_e"].clone(), r.witness["reg_colon"].clone()), (json!(2), json!(3), json!(1)));
        let p3 = ctx(&Graph::path(3));
        assert_eq!(check_ses_inequalities(&p3, Edge::new(2, 3)).unwrap().verdict, Verdict::Pass);
        let k2 = ctx(&Graph::complete(2));
        assert_eq!(check_ses_inequalities(&k2, Edge::new(1, 2)).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn colon_lemma_examples() {
        let r = check_colon_lemma(&ctx(&figure_one()), 5, Edge::new(4, 5)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let r = check_colon_lemma(&ctx(&Graph::complete(3)), 1, Edge::new(1, 2)).unwrap();
        assert_eq!(r.witness["reg_colon"], 1);
        assert!(check_colon_lemma(&ctx(&Graph::path(3)), 1, Edge::new(1, 2)).is_err());
        assert!(check_colon_lemma(&ctx(&Graph::complete(3)), 3, Edge::new(1, 2)).is_err());
    }

    #[test]
    fn decomposition_examples() {
        for g in [Graph::path(3), Graph::complete(4), Graph::cycle(4)] {
            let c = ctx(&g);
            assert_eq!(check_decomposition(&c).unwrap().verdict, Verdict::Pass);
            assert_eq!(check_height(&c).unwrap().verdict, Verdict::Pass);
            assert_eq!(check_dimension(&c).unwrap().verdict, Verdict::Pass);
        }
        assert_eq!(check_decomposition(&ctx(&Graph::cycle(4))).unwrap().witness["primes"], 3);
        assert!(check_decomposition(&ctx(&Graph::path(7))).is_err());
    }

    #[test]
    fn failures_carry_artifacts() {
        let c = ctx(&Graph::path(3));
        let r = CheckResult::new(Check::MmBound, &c.key, Verdict::Fail, json!({}));
        let r = c.finish(r, &[("J_G", &c.ideal)]);
        let art = r.artifacts.unwrap();
        assert_eq!(art.graph6, "Bg");
        assert!(!art.ideals[0].groebner_basis.is_empty());
        assert!(art.ideals[0].betti.is_some());
    }
}
