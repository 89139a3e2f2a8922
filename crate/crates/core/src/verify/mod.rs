//! Executable checks of the regularity bounds and combinatorial identities
//! for binomial edge ideals, and the census driver that runs them over all
//! isomorphism classes of small graphs.

mod census;
mod checks;
mod joins;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use census::{join_pairs, run_census, run_join_checks, CensusOptions, CensusRecord};
pub use checks::{
    check_colon_lemma, check_colon_theorem, check_conjecture_a, check_conjecture_b, check_decomposition,
    check_dimension, check_height, check_lower_bound, check_mm_bound, check_ses_inequalities, run_check, GraphContext,
};
pub use joins::{check_clique_multiplicativity, check_join_cutsets, check_join_reg, check_multipartite};

use crate::error::{Error, Result};
use crate::resolution::BettiTable;

/// Largest `n` for checks that compute resolutions.
pub const RESOLUTION_CEILING: usize = 6;
/// Largest `n` for the decomposition check (iterated elimination).
pub const INTERSECTION_CEILING: usize = 6;
/// Largest `n` for checks that only enumerate subsets and cliques.
pub const COMBINATORIAL_CEILING: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    MmBound,
    LowerBound,
    ConjectureA,
    ConjectureB,
    Ses,
    Colon,
    ColonLemma,
    Decomposition,
    Height,
    Dimension,
    JoinReg,
    JoinCutsets,
    CliqueMultiplicativity,
    Multipartite,
}

impl Check {
    /// Checks that run on a single graph during a census.
    pub const GRAPH: [Check; 10] = [
        Check::MmBound,
        Check::LowerBound,
        Check::ConjectureA,
        Check::ConjectureB,
        Check::Ses,
        Check::Colon,
        Check::ColonLemma,
        Check::Decomposition,
        Check::Height,
        Check::Dimension,
    ];

    /// Checks that run on pairs of graphs (or part sizes).
    pub const PAIR: [Check; 4] = [
        Check::JoinReg,
        Check::JoinCutsets,
        Check::CliqueMultiplicativity,
        Check::Multipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::MmBound => "mm_bound",
            Check::LowerBound => "lower_bound",
            Check::ConjectureA => "conjecture_a",
            Check::ConjectureB => "conjecture_b",
            Check::Ses => "ses",
            Check::Colon => "colon",
            Check::ColonLemma => "colon_lemma",
            Check::Decomposition => "decomposition",
            Check::Height => "height",
            Check::Dimension => "dimension",
            Check::JoinReg => "join_reg",
            Check::JoinCutsets => "join_cutsets",
            Check::CliqueMultiplicativity => "clique_multiplicativity",
            Check::Multipartite => "multipartite",
        }
    }

    /// Default vertex ceiling (for pair checks: joint vertex count).
    pub fn ceiling(self) -> usize {
        match self {
            Check::Decomposition => INTERSECTION_CEILING,
            Check::JoinCutsets | Check::CliqueMultiplicativity => COMBINATORIAL_CEILING,
            _ => RESOLUTION_CEILING,
        }
    }

    pub fn is_pair_check(self) -> bool {
        Check::PAIR.contains(&self)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::GRAPH
            .iter()
            .chain(&Check::PAIR)
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ReportOnly => "report-only",
        })
    }
}

/// One ideal involved in a failed check, dumped for offline inspection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDump {
    pub label: String,
    pub groebner_basis: Vec<String>,
    pub betti: Option<BettiTable>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureArtifacts {
    pub graph6: String,
    pub ideals: Vec<IdealDump>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: Check,
    /// Canonical key of the graph (or `key1*key2` for joins).
    pub key: String,
    /// The edge, vertex or parts the check was instantiated at, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    pub verdict: Verdict,
    /// The quantities compared.
    pub witness: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub artifacts: Option<FailureArtifacts>,
}

impl CheckResult {
    pub(crate) fn new(check: Check, key: impl Into<String>, verdict: Verdict, witness: serde_json::Value) -> Self {
        CheckResult {
            check,
            key: key.into(),
            subject: None,
            verdict,
            witness,
            artifacts: None,
        }
    }

    pub(crate) fn at(mut self, subject: impl Into<String>) -> Self {
        self.subject = Some(subject.into());
        self
    }

    pub(crate) fn passing_if(check: Check, key: impl Into<String>, ok: bool, witness: serde_json::Value) -> Self {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        CheckResult::new(check, key, verdict, witness)
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

/// Worst verdict of a list: any fail, else any report, else pass.
pub fn summarize(results: &[CheckResult]) -> Option<Verdict> {
    results.iter().map(|r| r.verdict).max_by_key(|v| match v {
        Verdict::Pass => 0,
        Verdict::ReportOnly => 1,
        Verdict::Fail => 2,
    })
}
