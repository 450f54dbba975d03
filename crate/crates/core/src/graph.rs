//! Immutable simple graphs over dense integer vertex ids, with bitset vertex
//! sets and the elementary relational predicates (complete, anticomplete,
//! covers, N^1, N^2) used by the structure verifiers and lemma engines.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    InvalidVertex(usize, usize),
    #[error("sets are not disjoint (shared vertex {0})")]
    NotDisjoint(usize),
    #[error("set is not a clique ({0} and {1} are nonadjacent)")]
    NotAClique(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set capacity mismatch ({0} vs {1})")]
    CapacityMismatch(usize, usize),
}

const WORD_BITS: usize = 64;

/// A subset of `{0..n-1}` of an associated graph, stored as a fixed-width
/// bitset. All set algebra is word-parallel; sets from different graphs
/// (different capacities) must not be mixed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of range {}", v, self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a & !b)
    }

    fn zip(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex set capacity mismatch");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct VertexSetRepr {
    n: usize,
    members: Vec<usize>,
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        VertexSetRepr {
            n: self.n,
            members: self.to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = VertexSetRepr::deserialize(d)?;
        for &v in &repr.members {
            if v >= repr.n {
                return Err(serde::de::Error::custom(format!(
                    "vertex {} out of range {}",
                    v, repr.n
                )));
            }
        }
        Ok(VertexSet::from_iter(repr.n, repr.members))
    }
}

/// An immutable simple undirected graph. Adjacency tests are O(1) via one
/// bitset row per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    /// Builds a graph from an edge list. Self-loops and duplicate edges are
    /// rejected with a diagnostic.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::InvalidVertex(u, n));
            }
            if v >= n {
                return Err(GraphError::InvalidVertex(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn petersen() -> Self {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer 5-cycle
            edges.push((i, i + 5)); // spokes
            edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_set(&self, x: &VertexSet) -> Result<(), GraphError> {
        if x.capacity() != self.n {
            return Err(GraphError::CapacityMismatch(x.capacity(), self.n));
        }
        Ok(())
    }

    fn check_disjoint(&self, x: &VertexSet, y: &VertexSet) -> Result<(), GraphError> {
        self.check_set(x)?;
        self.check_set(y)?;
        if let Some(v) = x.intersection(y).min() {
            return Err(GraphError::NotDisjoint(v));
        }
        Ok(())
    }

    pub fn is_clique(&self, x: &VertexSet) -> Result<(), GraphError> {
        self.check_set(x)?;
        let vs = x.to_vec();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.adjacent(u, v) {
                    return Err(GraphError::NotAClique(u, v));
                }
            }
        }
        Ok(())
    }

    /// True iff `x` induces no edge.
    pub fn is_stable(&self, x: &VertexSet) -> bool {
        x.iter().all(|u| self.adj[u].is_disjoint(x))
    }

    /// True iff every cross pair between the disjoint sets `x`, `y` is an edge.
    pub fn is_complete_between(&self, x: &VertexSet, y: &VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(x, y)?;
        Ok(x.iter().all(|u| y.is_subset(&self.adj[u])))
    }

    /// True iff no cross pair between the disjoint sets `x`, `y` is an edge.
    pub fn is_anticomplete_between(&self, x: &VertexSet, y: &VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(x, y)?;
        Ok(x.iter().all(|u| y.is_disjoint(&self.adj[u])))
    }

    /// True iff every vertex of `y` has at least one neighbour in `x`.
    pub fn covers(&self, x: &VertexSet, y: &VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(x, y)?;
        Ok(y.iter().all(|v| !self.adj[v].is_disjoint(x)))
    }

    /// Vertices outside the clique `x` that are complete to `x`.
    pub fn n1(&self, x: &VertexSet) -> Result<VertexSet, GraphError> {
        self.is_clique(x)?;
        let mut out = VertexSet::full(self.n).difference(x);
        for u in x.iter() {
            out = out.intersection(&self.adj[u]);
        }
        Ok(out)
    }

    /// Vertices with a neighbour in `n1(x)` and no neighbour in the clique `x`.
    pub fn n2(&self, x: &VertexSet) -> Result<VertexSet, GraphError> {
        let n1 = self.n1(x)?;
        let mut out = VertexSet::empty(self.n);
        for v in 0..self.n {
            if x.contains(v) || n1.contains(v) {
                continue;
            }
            if !self.adj[v].is_disjoint(&n1) && self.adj[v].is_disjoint(x) {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// N^1 / N^2 of a single vertex.
    pub fn n1_vertex(&self, v: usize) -> VertexSet {
        self.adj[v].clone()
    }

    pub fn n2_vertex(&self, v: usize) -> VertexSet {
        self.n2(&VertexSet::singleton(self.n, v)).unwrap()
    }

    /// BFS layers from `z0` within its component: `L_0 = {z0}`, `L_i` the
    /// vertices at distance exactly `i`.
    pub fn distance_layers(&self, z0: usize) -> Vec<VertexSet> {
        assert!(z0 < self.n);
        let mut layers = Vec::new();
        let mut seen = VertexSet::singleton(self.n, z0);
        let mut frontier = VertexSet::singleton(self.n, z0);
        while !frontier.is_empty() {
            layers.push(frontier.clone());
            let mut next = VertexSet::empty(self.n);
            for u in frontier.iter() {
                next = next.union(&self.adj[u]);
            }
            frontier = next.difference(&seen);
            seen = seen.union(&frontier);
        }
        layers
    }

    /// Connected components, each as a vertex set, in order of smallest member.
    pub fn components_of(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(self.n, start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for u in frontier.iter() {
                    next = next.union(&self.adj[u].intersection(within));
                }
                frontier = next.difference(&comp);
                comp = comp.union(&frontier);
            }
            remaining = remaining.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// The subgraph induced on `x`, plus the relabeling map: entry `i` of the
    /// map is the parent-graph id of vertex `i` of the returned graph.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(x)?;
        let map = x.to_vec();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in map.iter().enumerate() {
            for v in self.adj[u].intersection(x).iter() {
                if inv[v] > i {
                    edges.push((i, inv[v]));
                }
            }
        }
        let g = Graph::from_edges(map.len(), &edges)?;
        Ok((g, map))
    }

    /// Shortest path between `from` and `to` using only vertices of `within`
    /// (both endpoints must lie in `within`). Shortest paths are induced.
    pub fn shortest_path_within(
        &self,
        within: &VertexSet,
        from: usize,
        to: usize,
    ) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n];
        let mut seen = VertexSet::singleton(self.n, from);
        let mut frontier = vec![from];
        if from == to {
            return Some(vec![from]);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.adj[u].intersection(within).iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        prev[v] = u;
                        if v == to {
                            let mut path = vec![to];
                            let mut cur = to;
                            while prev[cur] != usize::MAX {
                                cur = prev[cur];
                                path.push(cur);
                            }
                            path.reverse();
                            return Some(path);
                        }
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        None
    }
}

/// A proper-coloring certificate: `assignment[v]` is the color of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<u32>,
    pub num_colors: u32,
}

impl Coloring {
    pub fn new(assignment: Vec<u32>) -> Self {
        let num_colors = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        Coloring {
            assignment,
            num_colors,
        }
    }
}

/// An induced-cycle certificate: a cyclic sequence of at least 4 distinct
/// vertices, consecutive ones adjacent and all other pairs nonadjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hole {
    pub cycle: Vec<usize>,
}

impl Hole {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}
