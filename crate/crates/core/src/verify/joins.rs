use serde_json::json;

use super::checks::graph_key;
use super::{Check, CheckResult, FailureArtifacts, IdealDump};
use crate::edge_ideal::{
    binomial_edge_ideal_over, complete_multipartite, cut_sets, join_cutsets, predicted_join_regularity,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::graph6;
use crate::poly::PrimeField;
use crate::resolution::{betti_table, regularity_from_table};

fn pair_key(g1: &Graph, g2: &Graph) -> Result<String> {
    Ok(format!("{}*{}", graph_key(g1)?, graph_key(g2)?))
}

/// `reg(J_G)` with the edgeless convention `0`.
fn reg_or_zero(g: &Graph, field: PrimeField) -> Result<u32> {
    let j = binomial_edge_ideal_over(g, field)?;
    if j.is_zero() {
        return Ok(0);
    }
    regularity_from_table(&betti_table(&j)?)
}

fn join_failure(join: &Graph, field: PrimeField) -> Result<FailureArtifacts> {
    let j = binomial_edge_ideal_over(join, field)?;
    let ring = j.ring();
    Ok(FailureArtifacts {
        graph6: graph6::encode(join),
        ideals: vec![IdealDump {
            label: "J of the join".into(),
            groebner_basis: j.gb().to_degrevlex().iter().map(|p| ring.format_poly(p)).collect(),
            betti: betti_table(&j).ok(),
        }],
    })
}

/// `reg(J_{G1*G2}) = max{reg(J_G1), reg(J_G2), 3}` unless both are complete,
/// in which case the join is complete and the regularity is 2.
pub fn check_join_reg(g1: &Graph, g2: &Graph, field: PrimeField) -> Result<CheckResult> {
    let join = g1.join(g2);
    let (r1, r2) = (reg_or_zero(g1, field)?, reg_or_zero(g2, field)?);
    let actual = reg_or_zero(&join, field)?;
    let both_complete = g1.is_complete() && g2.is_complete();
    let predicted = if both_complete { 2 } else { predicted_join_regularity(r1, r2) };
    let mut r = CheckResult::passing_if(
        Check::JoinReg,
        pair_key(g1, g2)?,
        actual == predicted,
        json!({"reg1": r1, "reg2": r2, "reg_join": actual, "predicted": predicted, "both_complete": both_complete}),
    );
    if !r.passed() {
        r.artifacts = Some(join_failure(&join, field)?);
    }
    Ok(r)
}

/// Cut sets of the join from the component formula, against enumeration.
pub fn check_join_cutsets(g1: &Graph, g2: &Graph) -> Result<CheckResult> {
    let formula = join_cutsets(g1, g2)?;
    let join = g1.join(g2);
    let enumerated = cut_sets(&join)?;
    let mut r = CheckResult::passing_if(
        Check::JoinCutsets,
        pair_key(g1, g2)?,
        formula == enumerated,
        json!({"formula": formula, "enumerated": enumerated}),
    );
    if !r.passed() {
        r.artifacts = Some(FailureArtifacts {
            graph6: graph6::encode(&join),
            ideals: Vec::new(),
        });
    }
    Ok(r)
}

/// `c(G1 * G2) = c(G1) · c(G2)` for maximal clique counts.
pub fn check_clique_multiplicativity(g1: &Graph, g2: &Graph) -> Result<CheckResult> {
    let (c1, c2) = (g1.clique_count(), g2.clique_count());
    let cj = g1.join(g2).clique_count();
    Ok(CheckResult::passing_if(
        Check::CliqueMultiplicativity,
        pair_key(g1, g2)?,
        cj == c1 * c2,
        json!({"c1": c1, "c2": c2, "c_join": cj}),
    ))
}

/// A non-complete complete multipartite graph has regularity 3.
pub fn check_multipartite(sizes: &[usize], field: PrimeField) -> Result<CheckResult> {
    if sizes.len() < 2 || sizes.iter().all(|&s| s < 2) {
        return Err(Error::domain("need at least two parts, one of size at least 2"));
    }
    let g = complete_multipartite(sizes)?;
    let reg = reg_or_zero(&g, field)?;
    let mut r = CheckResult::passing_if(Check::Multipartite, graph_key(&g)?, reg == 3, json!({"reg": reg}))
        .at(format!("parts={sizes:?}"));
    if !r.passed() {
        r.artifacts = Some(join_failure(&g, field)?);
    }
    Ok(r)
}
