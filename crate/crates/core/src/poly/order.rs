use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::monomial::{lex_words, revlex_words, Monomial};
use crate::error::{Error, Result};

/// Monomial orders on `k[x_1..x_n, y_1..y_n, aux...]`, variables indexed
/// `x_1 = 0, ..., x_n = n-1, y_1 = n, ..., y_n = 2n-1`, auxiliaries after.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    /// `x_1 > ... > x_n > y_1 > ... > y_n`.
    Lex,
    /// Block order: variables with index `>= split` form a block compared
    /// first (degrevlex inside), then degrevlex on the remaining variables.
    Elimination { split: usize },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_words(a.words(), b.words())),
            MonomialOrder::Lex => lex_words(a.words(), b.words()),
            MonomialOrder::Elimination { split } => a
                .degree_from(split)
                .cmp(&b.degree_from(split))
                .then_with(|| revlex_words(&a.masked_from(split), &b.masked_from(split)))
                .then_with(|| a.degree().cmp(&b.degree()))
                .then_with(|| revlex_words(a.words(), b.words())),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination { split } => write!(f, "elimination({split})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" | "drl" => Ok(MonomialOrder::DegRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::domain(format!("unknown monomial order {other:?}"))),
        }
    }
}
