//! Labeled simple graphs on `[n] = {1, ..., n}`.
//!
//! Vertices are addressed by their 1-based labels in the public API and stored
//! as bit positions `label - 1` of a `u64` adjacency row, which caps graphs at
//! 64 vertices. Every operation is a pure function returning a new graph.

mod canon;

pub use canon::{enumerate_classes, CanonicalKey, DEFAULT_CENSUS_CEILING};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of `[n]`, stored as a bitmask over 0-based positions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut s = VertexSet::empty();
        for v in labels {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << (v - 1));
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing label order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0).map(|b| b + 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Shift every label up by `offset`.
    pub fn shifted(self, offset: usize) -> Self {
        VertexSet(self.0 << offset)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = labels.iter().find(|&&v| v == 0 || v > MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex label {bad} out of range")));
        }
        Ok(VertexSet::from_labels(labels))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_labels(iter)
    }
}

/// Iterator over the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An unordered pair of distinct labels, stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics on a loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("edge endpoints must be distinct")
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Validation(format!("loop at vertex {a}")));
        }
        Ok(if a < b { Edge(a, b) } else { Edge(b, a) })
    }

    pub fn low(self) -> usize {
        self.0
    }

    pub fn high(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// A finite simple graph on the vertex labels `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// An induced subgraph together with the original label of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[k]` is the original label of new vertex `k + 1`.
    pub labels: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                ceiling: MAX_VERTICES,
            });
        }
        let mut g = Graph::edgeless(n);
        for (a, b) in edges {
            let e = Edge::try_new(a, b)?;
            g.check_vertex(e.high())
                .map_err(|_| Error::Validation(format!("edge {e} has an endpoint outside 1..{n}")))?;
            if g.has_edge(e.low(), e.high()) {
                return Err(Error::Validation(format!("duplicate edge {e}")));
            }
            g.link(e.low(), e.high());
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for v in 0..n {
            g.adj[v] = low_mask(n) & !(1 << v);
        }
        g
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for v in 1..n {
            g.link(v, v + 1);
        }
        g
    }

    /// The cycle `1 - 2 - ... - n - 1`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.link(1, n);
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `{i, j}` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in BitIter(self.adj[i] & !low_mask(i + 1)) {
                out.push(Edge(i + 1, j + 1));
            }
        }
        out
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b
            && (1..=self.n).contains(&a)
            && (1..=self.n).contains(&b)
            && self.adj[a - 1] & (1 << (b - 1)) != 0
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v - 1].count_ones() as usize)
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v - 1]))
    }

    pub(crate) fn row(&self, v0: usize) -> u64 {
        self.adj[v0]
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.adj[v] == low_mask(self.n) & !(1 << v))
    }

    /// True iff the neighbourhood of `v` induces a complete graph.
    /// Isolated vertices are simplicial.
    pub fn is_simplicial(&self, v: usize) -> Result<bool> {
        Ok(self.alpha(v)? == 0)
    }

    /// True iff deleting `v` strictly increases the number of components.
    pub fn is_cut_point(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        let all = low_mask(self.n);
        let before = self.count_components_within(all);
        let after = self.count_components_within(all & !(1 << (v - 1)));
        Ok(after > before)
    }

    pub fn induced_subgraph(&self, w: VertexSet) -> Result<InducedSubgraph> {
        if !w.is_subset(self.vertices()) {
            return Err(Error::domain(format!(
                "vertex set {w:?} is not contained in 1..{}",
                self.n
            )));
        }
        let labels = w.to_vec();
        let mut g = Graph::edgeless(labels.len());
        for (a, &la) in labels.iter().enumerate() {
            for (b, &lb) in labels.iter().enumerate().skip(a + 1) {
                if self.has_edge(la, lb) {
                    g.link(a + 1, b + 1);
                }
            }
        }
        Ok(InducedSubgraph { graph: g, labels })
    }

    /// Removes every edge of `edges`; each must be present.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &e in edges {
            if !g.has_edge(e.low(), e.high()) {
                return Err(Error::domain(format!("{e} is not an edge of the graph")));
            }
            g.unlink(e.low(), e.high());
        }
        Ok(g)
    }

    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.high())?;
        if self.has_edge(e.low(), e.high()) {
            return Err(Error::domain(format!("{e} is already an edge")));
        }
        let mut g = self.clone();
        g.link(e.low(), e.high());
        Ok(g)
    }

    /// `G_e`: turns the neighbourhoods of both endpoints of `e` into cliques.
    /// `e` itself need not be an edge.
    pub fn edge_completion(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.high())?;
        let mut g = self.clone();
        for end in [e.low(), e.high()] {
            let nb = self.adj[end - 1];
            for a in BitIter(nb) {
                g.adj[a] |= nb & !(1 << a);
            }
        }
        Ok(g)
    }

    /// `G * H`, with `H` relabelled to `m+1..m+n`.
    pub fn join(&self, other: &Graph) -> Graph {
        let (m, n) = (self.n, other.n);
        let mut g = self.disjoint_union(other);
        for v in 0..m {
            g.adj[v] |= low_mask(n) << m;
        }
        for w in 0..n {
            g.adj[m + w] |= low_mask(m);
        }
        g
    }

    /// `G ⊔ H`, with `H` relabelled to `m+1..m+n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let m = self.n;
        assert!(m + other.n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << m));
        Graph {
            n: m + other.n,
            adj,
        }
    }

    /// Connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(low_mask(self.n))
            .into_iter()
            .map(VertexSet)
            .collect()
    }

    /// Components of the subgraph induced on the vertex bitmask `within`.
    pub(crate) fn components_within(&self, within: u64) -> Vec<u64> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let seed = left & left.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let mut next = 0;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub(crate) fn count_components_within(&self, within: u64) -> usize {
        self.components_within(within).len()
    }

    pub fn is_connected(&self) -> bool {
        self.count_components_within(low_mask(self.n)) <= 1
    }

    /// `binomial(deg v, 2)` minus the number of edges among the neighbours of `v`.
    pub fn alpha(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        let nb = self.adj[v - 1];
        let d = nb.count_ones() as usize;
        let inner: usize = BitIter(nb)
            .map(|a| (self.adj[a] & nb).count_ones() as usize)
            .sum::<usize>()
            / 2;
        Ok(d * d.saturating_sub(1) / 2 - inner)
    }

    /// Minimum of [`Graph::alpha`] over all vertices.
    pub fn alpha_min(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::domain("alpha is undefined on the empty graph"));
        }
        (1..=self.n).map(|v| self.alpha(v)).try_fold(usize::MAX, |m, a| Ok(m.min(a?)))
    }

    /// Number of maximal cliques (isolated vertices count as cliques of size 1).
    pub fn clique_count(&self) -> usize {
        let mut count = 0;
        self.bron_kerbosch(0, low_mask(self.n), 0, &mut |_| count += 1);
        count
    }

    /// All maximal cliques, each as a vertex set, in discovery order.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, low_mask(self.n), 0, &mut |c| out.push(VertexSet(c)));
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, emit: &mut dyn FnMut(u64)) {
        if p == 0 {
            if x == 0 {
                emit(r);
            }
            return;
        }
        // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
        let pivot = BitIter(p | x)
            .max_by_key(|&u| (self.adj[u] & p).count_ones())
            .expect("p is nonempty");
        for v in BitIter(p & !self.adj[pivot]) {
            let bit = 1 << v;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], emit);
            p &= !bit;
            x |= bit;
        }
    }

    /// Number of edges of a longest induced path (0 when there is no edge).
    pub fn longest_induced_path_length(&self) -> usize {
        let mut best = 0;
        for start in 0..self.n {
            self.extend_induced_path(start, 1 << start, 0, &mut best);
        }
        best
    }

    fn extend_induced_path(&self, last: usize, on_path: u64, edges: usize, best: &mut usize) {
        *best = (*best).max(edges);
        if *best + 1 == self.n {
            return;
        }
        let earlier = on_path & !(1 << last);
        for next in BitIter(self.adj[last] & !on_path) {
            // `next` may touch the path only at `last`.
            if self.adj[next] & earlier == 0 {
                self.extend_induced_path(next, on_path | 1 << next, edges + 1, best);
            }
        }
    }

    /// True iff the graph is a path through all of its vertices (`K_1` is `P_1`).
    pub fn is_path(&self) -> bool {
        self.n >= 1
            && self.edge_count() == self.n - 1
            && self.adj.iter().all(|r| r.count_ones() <= 2)
            && self.is_connected()
    }

    /// Relabels vertex `v` as `perm[v - 1]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::edgeless(self.n);
        for e in self.edges() {
            g.link(perm[e.low() - 1], perm[e.high() - 1]);
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::domain(format!("vertex {v} is outside 1..{}", self.n)));
        }
        Ok(())
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a - 1] |= 1 << (b - 1);
        self.adj[b - 1] |= 1 << (a - 1);
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a - 1] &= !(1 << (b - 1));
        self.adj[b - 1] &= !(1 << (a - 1));
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, e) in self.edges().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.low(), e.high())?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Edges 12, 23, 24, 34, 35, 45.
    fn figure_one() -> Graph {
        Graph::from_edges(5, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(figure_one().neighbors(2).unwrap().to_vec(), vec![1, 3, 4]);
        assert!(Graph::edgeless(3).neighbors(2).unwrap().is_empty());
        assert_eq!(Graph::complete(4).neighbors(1).unwrap().to_vec(), vec![2, 3, 4]);
        assert!(matches!(figure_one().neighbors(6), Err(Error::Domain(_))));
        assert!(figure_one().neighbors(0).is_err());
    }

    #[test]
    fn simplicial_examples() {
        let g = figure_one();
        assert!(g.is_simplicial(1).unwrap());
        assert!(g.is_simplicial(5).unwrap());
        assert!(!g.is_simplicial(2).unwrap());
        assert!(Graph::edgeless(2).is_simplicial(1).unwrap());
    }

    #[test]
    fn cut_point_examples() {
        assert!(Graph::path(3).is_cut_point(2).unwrap());
        assert!(!Graph::path(3).is_cut_point(1).unwrap());
        for v in 1..=3 {
            assert!(!Graph::complete(3).is_cut_point(v).unwrap());
        }
        let g = Graph::from_edges(5, [(1, 2), (3, 4)]).unwrap();
        assert!(!g.is_cut_point(5).unwrap());
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = figure_one();
        let sub = g.induced_subgraph(VertexSet::from_labels([3, 4, 5])).unwrap();
        assert_eq!(sub.graph, Graph::complete(3));
        assert_eq!(sub.labels, vec![3, 4, 5]);
        assert_eq!(g.induced_subgraph(VertexSet::empty()).unwrap().graph.n(), 0);
        assert_eq!(g.induced_subgraph(g.vertices()).unwrap().graph, g);
        assert!(g.induced_subgraph(VertexSet::from_labels([6])).is_err());
    }

    #[test]
    fn delete_and_add_edges() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.delete_edges(&[Edge::new(1, 3)]).unwrap(), Graph::path(3));
        assert_eq!(k3.delete_edges(&[]).unwrap(), k3);
        let g = figure_one().delete_edges(&[Edge::new(1, 2)]).unwrap();
        assert_eq!(g.degree(1).unwrap(), 0);
        assert!(Graph::path(3).delete_edges(&[Edge::new(1, 3)]).is_err());

        assert_eq!(Graph::path(3).add_edge(Edge::new(1, 3)).unwrap(), k3);
        assert_eq!(Graph::edgeless(2).add_edge(Edge::new(1, 2)).unwrap(), Graph::complete(2));
        assert_eq!(Graph::path(4).add_edge(Edge::new(1, 4)).unwrap(), Graph::cycle(4));
        assert!(k3.add_edge(Edge::new(1, 2)).is_err());
        assert!(Edge::try_new(2, 2).is_err());
    }

    #[test]
    fn edge_completion_examples() {
        let p3 = Graph::path(3);
        assert_eq!(p3.edge_completion(Edge::new(1, 3)).unwrap(), p3);
        let completed = star3().edge_completion(Edge::new(1, 2)).unwrap();
        assert_eq!(completed, Graph::complete(4));
        let two_edges = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(two_edges.edge_completion(Edge::new(1, 3)).unwrap(), two_edges);
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::edgeless(1);
        assert_eq!(k1.join(&k1), Graph::complete(2));
        let e2 = Graph::edgeless(2);
        let k22 = e2.join(&e2);
        assert_eq!(k22.edge_count(), 4);
        assert_eq!(k22.canonical_form().unwrap(), Graph::cycle(4).canonical_form().unwrap());
        let fan = k1.join(&Graph::path(3));
        assert_eq!((fan.n(), fan.edge_count()), (4, 5));
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::path(3).connected_components().len(), 1);
        let sub = figure_one()
            .induced_subgraph(VertexSet::from_labels([1, 3, 4, 5]))
            .unwrap();
        let comps: Vec<Vec<usize>> = sub
            .graph
            .connected_components()
            .into_iter()
            .map(|c| c.iter().map(|v| sub.labels[v - 1]).collect())
            .collect();
        assert_eq!(comps, vec![vec![1], vec![3, 4, 5]]);
        assert_eq!(Graph::edgeless(4).connected_components().len(), 4);
    }

    #[test]
    fn alpha_examples() {
        let g = figure_one();
        let alphas: Vec<usize> = (1..=5).map(|v| g.alpha(v).unwrap()).collect();
        assert_eq!(alphas, vec![0, 2, 1, 1, 0]);
        assert_eq!(g.alpha_min().unwrap(), 0);
        assert_eq!(Graph::cycle(4).alpha_min().unwrap(), 1);
        assert_eq!(Graph::cycle(5).alpha_min().unwrap(), 1);
        assert!((1..=5).all(|v| Graph::complete(5).alpha(v).unwrap() == 0));
        assert!(Graph::edgeless(0).alpha_min().is_err());
    }

    #[test]
    fn clique_count_examples() {
        for n in 2..=7 {
            assert_eq!(Graph::path(n).clique_count(), n - 1);
            assert_eq!(Graph::complete(n).clique_count(), 1);
        }
        let fan = Graph::edgeless(1).join(&Graph::path(3));
        assert_eq!(fan.clique_count(), 2);
        assert_eq!(Graph::edgeless(3).clique_count(), 3);
    }

    #[test]
    fn longest_induced_path_examples() {
        for n in 1..=7 {
            assert_eq!(Graph::path(n).longest_induced_path_length(), n - 1);
            assert_eq!(Graph::complete(n).longest_induced_path_length(), n.min(2) - 1);
        }
        for n in 4..=8 {
            assert_eq!(Graph::cycle(n).longest_induced_path_length(), n - 2);
        }
        assert_eq!(Graph::cycle(3).longest_induced_path_length(), 1);
    }

    #[test]
    fn is_path_examples() {
        assert!(Graph::path(5).permuted(&[3, 5, 1, 2, 4]).is_path());
        assert!(Graph::edgeless(1).is_path());
        assert!(!Graph::cycle(4).is_path());
        assert!(!Graph::path(3).disjoint_union(&Graph::edgeless(1)).is_path());
    }
}
