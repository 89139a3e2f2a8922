use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which module a Betti table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleTag {
    #[serde(rename = "S/J")]
    Quotient,
    #[serde(rename = "J")]
    Ideal,
}

impl fmt::Display for ModuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleTag::Quotient => "S/J",
            ModuleTag::Ideal => "J",
        })
    }
}

/// Graded Betti numbers `β_{i,j}`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiJson", try_from = "BettiJson")]
pub struct BettiTable {
    module: ModuleTag,
    entries: BTreeMap<(usize, u32), u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct BettiEntry {
    i: usize,
    j: u32,
    beta: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct BettiJson {
    module: ModuleTag,
    entries: Vec<BettiEntry>,
    #[serde(default, skip_deserializing)]
    regularity: Option<i64>,
}

impl From<BettiTable> for BettiJson {
    fn from(t: BettiTable) -> Self {
        BettiJson {
            module: t.module,
            regularity: t.regularity(),
            entries: t.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect(),
        }
    }
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = Error;

    fn try_from(doc: BettiJson) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for e in doc.entries {
            if e.beta == 0 {
                continue;
            }
            if entries.insert((e.i, e.j), e.beta).is_some() {
                return Err(Error::Validation(format!("duplicate Betti entry ({}, {})", e.i, e.j)));
            }
        }
        Ok(BettiTable { module: doc.module, entries })
    }
}

impl BettiTable {
    pub fn new<I: IntoIterator<Item = ((usize, u32), u64)>>(module: ModuleTag, entries: I) -> Self {
        BettiTable {
            module,
            entries: entries.into_iter().filter(|&(_, b)| b != 0).collect(),
        }
    }

    pub fn module(&self) -> ModuleTag {
        self.module
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max{j - i : β_{i,j} ≠ 0}`, or `None` for the zero module.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, b)| b).sum()
    }

    /// The table of `J` from that of `S/J`: `β_{i,j}(J) = β_{i+1,j}(S/J)`.
    pub fn to_ideal(&self) -> BettiTable {
        match self.module {
            ModuleTag::Ideal => self.clone(),
            ModuleTag::Quotient => BettiTable::new(
                ModuleTag::Ideal,
                self.entries.iter().filter(|(&(i, _), _)| i > 0).map(|(&(i, j), &b)| ((i - 1, j), b)),
            ),
        }
    }

    /// The table of `S/J` from that of `J`.
    pub fn to_quotient(&self) -> BettiTable {
        match self.module {
            ModuleTag::Quotient => self.clone(),
            ModuleTag::Ideal => BettiTable::new(
                ModuleTag::Quotient,
                std::iter::once(((0, 0), 1)).chain(self.entries.iter().map(|(&(i, j), &b)| ((i + 1, j), b))),
            ),
        }
    }

    fn shape(&self) -> (usize, i64, i64) {
        let pd = self.projective_dimension().unwrap_or(0);
        let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap_or(0);
        let hi = self.regularity().unwrap_or(0);
        (pd, lo, hi)
    }

    /// CSV with one row per homological degree `i` and one column per `j - i`.
    pub fn to_csv(&self) -> String {
        let (pd, lo, hi) = self.shape();
        let mut out = String::from("i");
        for d in lo..=hi {
            let _ = write!(out, ",{d}");
        }
        out.push('\n');
        for i in 0..=pd {
            let _ = write!(out, "{i}");
            for d in lo..=hi {
                let j = i as i64 + d;
                let b = if j < 0 { 0 } else { self.get(i, j as u32) };
                let _ = write!(out, ",{b}");
            }
            out.push('\n');
        }
        out
    }

    /// Macaulay2-style text: columns are `i`, rows are `j - i`, zeros shown as dots.
    pub fn to_text(&self) -> String {
        let (pd, lo, hi) = self.shape();
        let cells: Vec<Vec<String>> = (lo..=hi)
            .map(|d| {
                (0..=pd)
                    .map(|i| {
                        let j = i as i64 + d;
                        match if j < 0 { 0 } else { self.get(i, j as u32) } {
                            0 => ".".to_string(),
                            b => b.to_string(),
                        }
                    })
                    .collect()
            })
            .collect();
        let totals: Vec<String> = (0..=pd).map(|i| self.total(i).to_string()).collect();
        let header: Vec<String> = (0..=pd).map(|i| i.to_string()).collect();
        let width = cells
            .iter()
            .flatten()
            .chain(&totals)
            .map(String::len)
            .max()
            .unwrap_or(1);
        let row = |label: String, items: &[String]| {
            let body: Vec<String> = items.iter().map(|s| format!("{s:>width$}")).collect();
            format!("{label:>7} {}\n", body.join(" ")).trim_end().to_string() + "\n"
        };
        let mut out = row(String::new(), &header);
        out.push_str(&row("total:".into(), &totals));
        for (d, line) in (lo..=hi).zip(&cells) {
            out.push_str(&row(format!("{d}:"), line));
        }
        out
    }
}
