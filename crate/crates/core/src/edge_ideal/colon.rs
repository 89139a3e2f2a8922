use serde::Serialize;

use super::{edge_ideal_in, graph_ring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::poly::{Ideal, Monomial, Polynomial, PrimeField, Ring};

/// Simple paths `i, i_1, …, i_s, j` between the endpoints of an edge, with
/// `s ≥ 1`, and their monomials `g_{P,t}` for `0 ≤ t ≤ s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathMonomialSystem {
    pub edge: Edge,
    /// Full vertex sequences, from `edge.low()` to `edge.high()`.
    pub paths: Vec<Vec<usize>>,
    #[serde(skip)]
    pub monomials: Vec<Vec<Monomial>>,
}

impl PathMonomialSystem {
    /// Enumerates the paths by depth-first search in `g`; `e` need not be an edge.
    pub fn new(g: &Graph, ring: Ring, e: Edge) -> Result<Self> {
        if e.high() > g.n() {
            return Err(Error::domain(format!("{e} has an endpoint outside 1..{}", g.n())));
        }
        let (i, j) = e.endpoints();
        let mut paths = Vec::new();
        let mut stack = vec![i];
        dfs(g, j, &mut stack, &mut paths);
        let monomials = paths
            .iter()
            .map(|p| {
                let inner = &p[1..p.len() - 1];
                (0..=inner.len())
                    .map(|t| {
                        inner[..t]
                            .iter()
                            .map(|&v| Monomial::var(ring.y(v)))
                            .chain(inner[t..].iter().map(|&v| Monomial::var(ring.x(v))))
                            .fold(Monomial::one(), |acc, m| acc * m)
                    })
                    .collect()
            })
            .collect();
        Ok(PathMonomialSystem { edge: e, paths, monomials })
    }

    /// All `g_{P,t}`, deduplicated, in path order.
    pub fn generators(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = Vec::new();
        for m in self.monomials.iter().flatten() {
            if !out.contains(m) {
                out.push(*m);
            }
        }
        out
    }
}

fn dfs(g: &Graph, target: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let v = *stack.last().expect("path has a start");
    for w in g.neighbors(v).expect("vertex in range").iter() {
        if w == target {
            if stack.len() >= 2 {
                let mut p = stack.clone();
                p.push(w);
                out.push(p);
            }
        } else if !stack.contains(&w) {
            stack.push(w);
            dfs(g, target, stack, out);
            stack.pop();
        }
    }
}

/// `J_{(G\e)_e} + I_G`, the right-hand side of the colon formula for
/// `J_{G\e} : f_e`, over the default field.
pub fn colon_generators(g: &Graph, e: Edge) -> Result<Ideal> {
    colon_generators_over(g, e, PrimeField::default())
}

pub fn colon_generators_over(g: &Graph, e: Edge, field: PrimeField) -> Result<Ideal> {
    if e.high() > g.n() || !g.has_edge(e.low(), e.high()) {
        return Err(Error::domain(format!("{e} is not an edge of the graph")));
    }
    let ring = graph_ring(g, field)?;
    let h = g.delete_edges(&[e])?.edge_completion(e)?;
    let mut gens = edge_ideal_in(ring, &h).generators().to_vec();
    let system = PathMonomialSystem::new(g, ring, e)?;
    gens.extend(system.generators().into_iter().map(|m| Polynomial::monomial(1, m)));
    Ok(Ideal::new(ring, gens))
}

/// Whether the elimination colon `J_{G\e} : f_e` equals [`colon_generators`].
pub fn colon_theorem_check(g: &Graph, e: Edge) -> Result<bool> {
    let predicted = colon_generators(g, e)?;
    let ring = predicted.ring();
    let deleted = edge_ideal_in(ring, &g.delete_edges(&[e])?);
    let actual = deleted.colon(&ring.minor(e.low(), e.high()))?;
    actual.equals(&predicted)
}
