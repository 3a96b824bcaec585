//! Simple undirected graphs and the standard constructions built on them.
//!
//! A [`Graph`] is an immutable value: vertices are the dense indices
//! `0..n`, adjacency is stored as one bitset per vertex. Every operation that
//! "changes" a graph returns a new one.

mod canon;
mod io;

use std::fmt;

use fixedbitset::FixedBitSet;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANONICAL_ORDER};
pub use io::{decode_edge_list, decode_graph6, encode_edge_list, encode_graph6, to_dot};

use crate::error::{Error, Result};

/// A simple undirected graph on the vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    edges: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Wraps a symmetric, loop-free adjacency table.
    pub(crate) fn from_adjacency(adj: Vec<FixedBitSet>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, row)| !row.contains(u) && row.ones().all(|v| adj[v].contains(u))));
        let degree_sum: usize = adj.iter().map(|row| row.count_ones(..)).sum();
        Self {
            adj,
            edges: degree_sum / 2,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![FixedBitSet::with_capacity(n); n])
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert_range(..);
                row.set(u, false);
                row
            })
            .collect();
        Self::from_adjacency(adj)
    }

    /// The path `P_n` on vertices `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// The cycle `C_n` (`n ≥ 3`; smaller `n` yields the path).
    pub fn cycle(n: usize) -> Self {
        let closing = (n >= 3).then(|| (n - 1, 0));
        Self::new(n, (1..n).map(|v| (v - 1, v)).chain(closing)).expect("cycle edges are valid")
    }

    /// The star `S_n` on `n` vertices with center `0`.
    pub fn star(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (0, v))).expect("star edges are valid")
    }

    /// The matching `M_n` on `n` vertices: edges `(0,1), (2,3), …`. For odd
    /// `n` the last vertex is isolated.
    pub fn matching(n: usize) -> Self {
        Self::new(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1))).expect("matching edges are valid")
    }

    /// The double broom `B(l, s, t)`: a path `0-1-…-(l-1)` with `s` pendant
    /// vertices on `0` and `t` pendant vertices on `l-1`. Pendants are numbered
    /// after the path, those of vertex `0` first.
    pub fn double_broom(l: usize, s: usize, t: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::OutOfDomain(
                "double broom needs a path of at least one vertex".into(),
            ));
        }
        let n = l + s + t;
        let path = (1..l).map(|v| (v - 1, v));
        let left = (l..l + s).map(|v| (0, v));
        let right = (l + s..n).map(|v| (l - 1, v));
        Self::new(n, path.chain(left).chain(right))
    }

    /// Complete multipartite graph with the given part sizes. Parts occupy
    /// contiguous blocks of vertex ids in the order given.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, size));
        }
        let adj = (0..n)
            .map(|u| {
                let mut row = FixedBitSet::with_capacity(n);
                for v in 0..n {
                    if part_of[v] != part_of[u] {
                        row.insert(v);
                    }
                }
                row
            })
            .collect();
        Self::from_adjacency(adj)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// Neighbor bitset of `v`.
    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `G ∪ H`: the vertices of `h` are renumbered to follow those of `self`.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        let shift = self.order();
        let edges = self.edges().chain(h.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(shift + h.order(), edges).expect("union edges are valid")
    }

    /// `G + H`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Graph {
        let shift = self.order();
        let n = shift + h.order();
        let cross = (0..shift).flat_map(|u| (shift..n).map(move |v| (u, v)));
        let edges = self
            .edges()
            .chain(h.edges().map(|(u, v)| (u + shift, v + shift)))
            .chain(cross);
        Graph::new(n, edges).expect("join edges are valid")
    }

    /// The subgraph induced by `vertices`. The result numbers the chosen
    /// vertices in increasing order of their original ids; duplicates are
    /// ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut chosen: Vec<usize> = vertices.to_vec();
        chosen.sort_unstable();
        chosen.dedup();
        if let Some(&bad) = chosen.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidVertex { vertex: bad, n });
        }
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in chosen.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = chosen.iter().flat_map(|&u| {
            let new_id = &new_id;
            self.adj[u]
                .ones()
                .filter(move |&v| v > u && new_id[v] != usize::MAX)
                .map(move |v| (new_id[u], new_id[v]))
        });
        Graph::new(chosen.len(), edges)
    }

    /// Returns a copy with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.order(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::OutOfDomain(format!(
                "permutation of length {} for a graph on {n} vertices",
                perm.len()
            )));
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for &p in perm {
            if p >= n || seen.put(p) {
                return Err(Error::OutOfDomain("relabeling is not a permutation".into()));
            }
        }
        Graph::new(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.put(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].ones() {
                    if !seen.put(v) {
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Acyclic: every component with `c` vertices has `c - 1` edges.
    pub fn is_forest(&self) -> bool {
        self.edges + self.components().len() == self.order()
    }

    /// Connected and acyclic, with at least one vertex.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edges + 1 == self.order() && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Part sizes of the balanced `p`-partite Turán graph on `n` vertices,
/// larger parts first.
pub fn turan_parts(n: usize, p: usize) -> Result<Vec<usize>> {
    if p < 1 {
        return Err(Error::InvalidParts(p));
    }
    let (base, extra) = (n / p, n % p);
    Ok((0..p).map(|i| base + usize::from(i < extra)).collect())
}

/// The Turán graph `T(n, p)`. Parts are contiguous id blocks, larger parts
/// first.
pub fn turan_graph(n: usize, p: usize) -> Result<Graph> {
    Ok(Graph::complete_multipartite(&turan_parts(n, p)?))
}
