//! Simple undirected graphs on at most 64 vertices, stored as neighbor bitsets.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the vertex count: one `u64` bitset per neighborhood.
pub const MAX_ORDER: usize = 64;

/// Largest order accepted by [`enumerate_labeled`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// A set of vertices packed into a single word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    /// Lowest vertex in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Iterates set bits in increasing order.
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph. Adjacency is symmetric and loop-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                n,
                min: 0,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in graph6 column order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            self.adj[v]
                .intersection(VertexSet::full(v))
                .iter()
                .map(move |u| (u, v))
        })
    }

    /// Number of edges with one end in `x` and the other in `y` (`x`, `y` disjoint).
    pub fn edges_between(&self, x: VertexSet, y: VertexSet) -> usize {
        x.iter().map(|u| self.adj[u].intersection(y).len()).sum()
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Vertices reachable from `start` while staying inside `allowed`.
    pub fn component_within(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(allowed).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connectivity of the subgraph induced by `allowed`. The empty set counts as connected.
    pub fn is_connected_within(&self, allowed: VertexSet) -> bool {
        match allowed.first() {
            None => true,
            Some(v) => self.component_within(v, allowed) == allowed,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    pub(crate) fn from_adjacency_unchecked(n: usize, adj: Vec<VertexSet>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Degrees of a graph together with δ, Δ and the edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub edges: usize,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let edges = degrees.iter().sum::<usize>() / 2;
        DegreeProfile {
            degrees,
            min_degree,
            max_degree,
            edges,
        }
    }
}

/// Number of vertex pairs, i.e. bits in an edge mask for order `n`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph whose edge set is the bit pattern `mask` over pairs in graph6 column order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    debug_assert!(pair_count(n) <= 64);
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            bit += 1;
        }
    }
    Graph::from_adjacency_unchecked(n, adj)
}

/// Every labeled graph on `n` vertices, in increasing edge-mask order.
///
/// Parallel callers should split the mask range with [`graph_from_mask`] rather than share
/// this iterator.
pub fn enumerate_labeled(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::UnsupportedOrder {
            n,
            min: 1,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let total = 1u64 << pair_count(n);
    Ok((0..total)
        .map(move |mask| graph_from_mask(n, mask))
        .filter(move |g| !connected_only || g.is_connected()))
}
