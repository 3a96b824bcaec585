//! Edge blow-ups: every edge `uv` of `H` becomes a clique `K_{p+1}` on `u`,
//! `v` and `p − 1` fresh vertices private to that edge.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where a vertex of the blow-up came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Origin {
    Original(usize),
    /// A fresh vertex of the clique built on the edge `(u, v)`, `u < v`.
    Edge(usize, usize),
}

#[derive(Clone, Debug)]
pub struct BlowupResult {
    pub graph: Graph,
    pub origin: Vec<Origin>,
}

/// Builds `H^{p+1}`. Original vertices keep their ids; fresh vertices follow,
/// `p − 1` per edge, with edges taken in lexicographic order.
pub fn edge_blowup(h: &Graph, p: usize) -> Result<BlowupResult> {
    if p < 2 {
        return Err(Error::InvalidP(p));
    }
    let fresh_per_edge = p - 1;
    let n = h.order() + h.edge_count() * fresh_per_edge;
    let mut origin: Vec<Origin> = (0..h.order()).map(Origin::Original).collect();
    let mut edges = Vec::with_capacity(h.edge_count() * p * (p + 1) / 2);

    for (u, v) in h.edges() {
        let start = origin.len();
        origin.extend(std::iter::repeat_n(Origin::Edge(u, v), fresh_per_edge));
        let clique: Vec<usize> = [u, v].into_iter().chain(start..origin.len()).collect();
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    debug_assert_eq!(origin.len(), n);
    Ok(BlowupResult {
        graph: Graph::new(n, edges)?,
        origin,
    })
}
