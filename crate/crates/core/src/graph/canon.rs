//! Canonical labelling and isomorphism-class enumeration for small graphs.
//!
//! The canonical form is the lexicographically smallest graph6 adjacency
//! bitstring over all relabellings that respect a colour-refinement partition.
//! Colours are isomorphism invariants, so restricting the search to
//! partition-respecting labellings keeps the minimum label-invariant.

use std::collections::BTreeSet;
use std::fmt;

use super::{BitIter, Graph};
use crate::error::{Error, Result};
use crate::io::graph6;

/// Default vertex ceiling for canonical forms and census enumeration.
pub const DEFAULT_CENSUS_CEILING: usize = 8;

/// Label-invariant key: the graph6 encoding of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative graph.
    pub fn graph(&self) -> Graph {
        graph6::decode(self.as_str()).expect("canonical keys are valid graph6")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.as_str())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Graph {
    /// Canonical key, with the default ceiling of [`DEFAULT_CENSUS_CEILING`] vertices.
    pub fn canonical_form(&self) -> Result<CanonicalKey> {
        self.canonical_form_within(DEFAULT_CENSUS_CEILING)
    }

    pub fn canonical_form_within(&self, ceiling: usize) -> Result<CanonicalKey> {
        if self.n() > ceiling {
            return Err(Error::Capacity {
                what: "vertex count for canonical form",
                got: self.n(),
                ceiling,
            });
        }
        let order = canonical_order(self);
        let mut perm = vec![0; self.n()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos + 1;
        }
        Ok(CanonicalKey(graph6::encode(&self.permuted(&perm)).into_bytes()))
    }

    /// The canonically relabelled copy of this graph.
    pub fn canonical_graph(&self) -> Result<Graph> {
        Ok(self.canonical_form()?.graph())
    }
}

/// 1-dimensional Weisfeiler–Leman colours, as dense ranks.
fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.row(v).count_ones() as usize).collect();
    let mut classes = distinct(&colour);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = BitIter(g.row(v)).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranked: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        colour = sigs
            .iter()
            .map(|s| ranked.binary_search(&s).expect("signature present"))
            .collect();
        let now = distinct(&colour);
        if now == classes {
            return colour;
        }
        classes = now;
    }
}

fn distinct(c: &[usize]) -> usize {
    c.iter().collect::<BTreeSet<_>>().len()
}

struct Search<'a> {
    g: &'a Graph,
    /// Colour required at each position.
    slot_colour: Vec<usize>,
    colour: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    /// Column `p` of the upper-triangular adjacency matrix, row 0 most significant.
    fn column(&self, placed: &[usize], v: usize) -> u64 {
        let p = placed.len();
        let mut col = 0u64;
        for (i, &u) in placed.iter().enumerate() {
            if self.g.row(u) & (1 << v) != 0 {
                col |= 1 << (p - 1 - i);
            }
        }
        col
    }

    fn run(&mut self, placed: &mut Vec<usize>, cols: &mut Vec<u64>, used: u64) {
        let p = placed.len();
        if p == self.g.n() {
            let better = match &self.best {
                None => true,
                Some((best_cols, _)) => cols.as_slice() < best_cols.as_slice(),
            };
            if better {
                self.best = Some((cols.clone(), placed.clone()));
            }
            return;
        }
        let want = self.slot_colour[p];
        for v in 0..self.g.n() {
            if used & (1 << v) != 0 || self.colour[v] != want {
                continue;
            }
            let col = self.column(placed, v);
            cols.push(col);
            // A prefix already above the incumbent cannot win.
            let hopeless = self
                .best
                .as_ref()
                .is_some_and(|(best_cols, _)| cols.as_slice() > &best_cols[..=p]);
            if !hopeless {
                placed.push(v);
                self.run(placed, cols, used | 1 << v);
                placed.pop();
            }
            cols.pop();
        }
    }
}

/// Vertex order (0-based) whose relabelling realizes the canonical form.
fn canonical_order(g: &Graph) -> Vec<usize> {
    let colour = refine_colours(g);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut s = Search {
        g,
        slot_colour,
        colour,
        best: None,
    };
    s.run(&mut Vec::new(), &mut Vec::new(), 0);
    s.best.map(|(_, order)| order).unwrap_or_default()
}

/// Isomorphism-class representatives of all graphs on `n` vertices for
/// `n = 1..=n_max`. Entry `k` holds the canonical representatives on `k + 1`
/// vertices, sorted by key.
pub fn enumerate_classes(n_max: usize, ceiling: usize) -> Result<Vec<Vec<(CanonicalKey, Graph)>>> {
    if n_max > ceiling {
        return Err(Error::Capacity {
            what: "census vertex count",
            got: n_max,
            ceiling,
        });
    }
    let mut out: Vec<Vec<(CanonicalKey, Graph)>> = Vec::new();
    if n_max == 0 {
        return Ok(out);
    }
    let k1 = Graph::edgeless(1);
    out.push(vec![(k1.canonical_form_within(ceiling)?, k1)]);
    for n in 2..=n_max {
        let mut seen = BTreeSet::new();
        for (_, base) in &out[n - 2] {
            for mask in 0..(1u64 << (n - 1)) {
                let mut g = base.disjoint_union(&Graph::edgeless(1));
                for w in BitIter(mask) {
                    g = g.add_edge(super::Edge::new(w + 1, n))?;
                }
                seen.insert(g.canonical_form_within(ceiling)?);
            }
        }
        out.push(seen.into_iter().map(|k| {
            let g = k.graph();
            (k, g)
        }).collect());
    }
    Ok(out)
}
