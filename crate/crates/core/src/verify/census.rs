use serde::{Deserialize, Serialize};

use super::checks::{run_check, GraphContext};
use super::joins::{check_clique_multiplicativity, check_join_cutsets, check_join_reg, check_multipartite};
use super::{Check, CheckResult};
use crate::error::{Error, Result};
use crate::graph::{enumerate_classes, CanonicalKey, Graph};
use crate::io::cache::{CacheEntry, ResultCache};
use crate::poly::PrimeField;
use crate::resolution::BettiTable;

/// Settings for [`run_census`] and [`run_join_checks`].
#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub n_max: usize,
    pub checks: Vec<Check>,
    /// Worker count; `0` lets the pool decide, `1` runs sequentially.
    pub jobs: usize,
    pub field: PrimeField,
    pub cache: Option<ResultCache>,
    /// Replaces every per-check vertex ceiling when set.
    pub ceiling: Option<usize>,
}

impl CensusOptions {
    /// The four regularity-bound checks, default field, no cache.
    pub fn new(n_max: usize) -> Self {
        CensusOptions {
            n_max,
            checks: vec![Check::MmBound, Check::LowerBound, Check::ConjectureA, Check::ConjectureB],
            jobs: 0,
            field: PrimeField::default(),
            cache: None,
            ceiling: None,
        }
    }

    pub fn with_checks(mut self, checks: &[Check]) -> Self {
        self.checks = checks.to_vec();
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    fn ceiling_for(&self, check: Check) -> usize {
        self.ceiling.unwrap_or(check.ceiling())
    }

    fn check_capacity(&self) -> Result<()> {
        for &c in &self.checks {
            let ceiling = self.ceiling_for(c);
            if self.n_max > ceiling {
                return Err(Error::Capacity {
                    what: if c.is_pair_check() { "joint vertex count" } else { "census vertex count" },
                    got: self.n_max,
                    ceiling,
                });
            }
        }
        Ok(())
    }

    fn enumeration_ceiling(&self) -> usize {
        self.ceiling.unwrap_or(super::COMBINATORIAL_CEILING).max(self.n_max)
    }
}

/// The outcome of a census on one isomorphism class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub key: String,
    pub n: usize,
    /// `reg(J_G)`; `0` by convention for edgeless graphs.
    pub reg: u32,
    /// Number of maximal cliques.
    pub c: usize,
    /// Length of a longest induced path.
    pub l: usize,
    pub is_path: bool,
    pub betti: Option<BettiTable>,
    pub verdicts: Vec<CheckResult>,
}

impl CensusRecord {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.verdicts.iter().filter(|r| !r.passed())
    }
}

#[cfg(feature = "parallel")]
fn map_items<T, U, F>(items: &[T], jobs: usize, f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    use rayon::prelude::*;
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::domain(format!("cannot start worker pool: {e}")))?;
    pool.install(|| items.par_iter().map(f).collect())
}

#[cfg(not(feature = "parallel"))]
fn map_items<T, U, F>(items: &[T], _jobs: usize, f: F) -> Result<Vec<U>>
where
    F: Fn(&T) -> Result<U>,
{
    items.iter().map(f).collect()
}

fn context_for(g: &Graph, key: &CanonicalKey, opts: &CensusOptions) -> Result<GraphContext> {
    let p = opts.field.characteristic();
    if let Some(cache) = &opts.cache {
        if let Some(entry) = cache.get(key.as_str(), p)? {
            return GraphContext::with_betti(g, opts.field, entry.betti);
        }
    }
    let ctx = GraphContext::new(g, opts.field)?;
    if let Some(cache) = &opts.cache {
        cache.put(&CacheEntry::new(key.as_str(), p, ctx.betti.clone()))?;
    }
    Ok(ctx)
}

fn census_record(g: &Graph, key: &CanonicalKey, opts: &CensusOptions) -> Result<CensusRecord> {
    let ctx = context_for(g, key, opts)?;
    let mut verdicts = Vec::new();
    for &check in &opts.checks {
        verdicts.extend(run_check(&ctx, check)?);
    }
    Ok(CensusRecord {
        key: key.as_str().to_string(),
        n: g.n(),
        reg: ctx.reg_or_zero(),
        c: g.clique_count(),
        l: g.longest_induced_path_length(),
        is_path: g.is_path(),
        betti: ctx.betti,
        verdicts,
    })
}

/// Runs the selected single-graph checks on every isomorphism class of
/// graphs on `1..=n_max` vertices. Records come back sorted by key, which
/// also groups them by vertex count.
pub fn run_census(opts: &CensusOptions) -> Result<Vec<CensusRecord>> {
    if let Some(bad) = opts.checks.iter().find(|c| c.is_pair_check()) {
        return Err(Error::domain(format!("{bad} runs on pairs; use run_join_checks")));
    }
    opts.check_capacity()?;
    let classes: Vec<(CanonicalKey, Graph)> = enumerate_classes(opts.n_max, opts.enumeration_ceiling())?
        .into_iter()
        .flatten()
        .collect();
    let mut records = map_items(&classes, opts.jobs, |(key, g)| census_record(g, key, opts))?;
    records.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(records)
}

/// Unordered pairs `{G1, G2}` of class representatives with
/// `|G1| + |G2| ≤ total_max`, each on at least one vertex.
pub fn join_pairs(total_max: usize, ceiling: usize) -> Result<Vec<(Graph, Graph)>> {
    if total_max < 2 {
        return Ok(Vec::new());
    }
    let reps: Vec<Graph> = enumerate_classes(total_max - 1, ceiling.max(total_max))?
        .into_iter()
        .flatten()
        .map(|(_, g)| g)
        .collect();
    let mut out = Vec::new();
    for (a, g1) in reps.iter().enumerate() {
        for g2 in &reps[a..] {
            if g1.n() + g2.n() <= total_max {
                out.push((g1.clone(), g2.clone()));
            }
        }
    }
    Ok(out)
}

/// Non-increasing part lists with at least two parts, one of size at least
/// 2, and total at most `total_max`.
fn multipartite_shapes(total_max: usize) -> Vec<Vec<usize>> {
    fn extend(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 && cur[0] >= 2 {
            out.push(cur.clone());
        }
        for k in (1..=cap.min(left)).rev() {
            cur.push(k);
            extend(left - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(total_max, total_max, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Runs the selected pair checks over [`join_pairs`]`(opts.n_max)`, where
/// `n_max` bounds the joint vertex count. The cut-set formula is only
/// applied to pairs of disconnected graphs.
pub fn run_join_checks(opts: &CensusOptions) -> Result<Vec<CheckResult>> {
    if let Some(bad) = opts.checks.iter().find(|c| !c.is_pair_check()) {
        return Err(Error::domain(format!("{bad} runs on single graphs; use run_census")));
    }
    opts.check_capacity()?;
    let pairs = join_pairs(opts.n_max, opts.enumeration_ceiling())?;
    let mut out = Vec::new();
    for &check in &opts.checks {
        let results: Vec<Vec<CheckResult>> = match check {
            Check::JoinReg => map_items(&pairs, opts.jobs, |(a, b)| Ok(vec![check_join_reg(a, b, opts.field)?]))?,
            Check::JoinCutsets => map_items(&pairs, opts.jobs, |(a, b)| {
                let disconnected = a.connected_components().len() >= 2 && b.connected_components().len() >= 2;
                Ok(if disconnected { vec![check_join_cutsets(a, b)?] } else { Vec::new() })
            })?,
            Check::CliqueMultiplicativity => {
                map_items(&pairs, opts.jobs, |(a, b)| Ok(vec![check_clique_multiplicativity(a, b)?]))?
            }
            Check::Multipartite => map_items(&multipartite_shapes(opts.n_max), opts.jobs, |s| {
                Ok(vec![check_multipartite(s, opts.field)?])
            })?,
            other => return Err(Error::domain(format!("{other} is not a pair check"))),
        };
        out.extend(results.into_iter().flatten());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    #[test]
    fn record_count_for_four_vertices() {
        let opts = CensusOptions::new(4).with_checks(&Check::GRAPH).with_jobs(1);
        let records = run_census(&opts).unwrap();
        assert_eq!(records.len(), 18);
        assert!(records.iter().all(|r| r.failures().next().is_none()));
        let k3 = records.iter().find(|r| r.key == "Bw").unwrap();
        assert_eq!((k3.reg, k3.c, k3.l, k3.is_path), (2, 1, 1, false));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let seq = run_census(&CensusOptions::new(5).with_jobs(1)).unwrap();
        let par = run_census(&CensusOptions::new(5).with_jobs(2)).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn capacity_and_kind_errors() {
        let opts = CensusOptions::new(7).with_checks(&[Check::Decomposition]);
        assert!(matches!(run_census(&opts), Err(Error::Capacity { .. })));
        assert!(run_census(&CensusOptions::new(3).with_checks(&[Check::JoinReg])).is_err());
        assert!(run_join_checks(&CensusOptions::new(3)).is_err());
    }

    #[test]
    fn cache_hits_match_cold_runs() {
        let dir = tempfile::tempdir().unwrap();
        let mut opts = CensusOptions::new(4).with_jobs(1);
        opts.cache = Some(ResultCache::open(dir.path()).unwrap());
        let cold = run_census(&opts).unwrap();
        let warm = run_census(&opts).unwrap();
        assert_eq!(cold, warm);
        assert_eq!(cold, run_census(&CensusOptions::new(4).with_jobs(1)).unwrap());
    }

    #[test]
    fn small_join_census() {
        let opts = CensusOptions::new(4).with_checks(&Check::PAIR).with_jobs(1);
        let results = run_join_checks(&opts).unwrap();
        assert!(results.iter().all(|r| r.verdict == Verdict::Pass), "{results:#?}");
        assert!(results.iter().any(|r| r.check == Check::JoinCutsets));
        assert_eq!(multipartite_shapes(4), vec![vec![2, 1], vec![2, 1, 1], vec![2, 2], vec![3, 1]]);
    }
}
