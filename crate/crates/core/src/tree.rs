//! Tree and forest invariants: color classes, independence, covering and
//! matching numbers, the independent covering number, and the
//! `A₀ / B₀ / b` parameters used by the `k ≥ 2` formulas.
//!
//! Exact general-graph routines fall back to exhaustive search and are
//! limited to [`BRUTE_FORCE_LIMIT`] vertices.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by the exhaustive routines.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// The two color classes of a bipartite graph, `|A| ≤ |B|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub class_a: Vec<usize>,
    pub class_b: Vec<usize>,
    /// Set for the single-vertex graph, where `A = {0}` and `B = ∅`
    /// breaks the `|A| ≤ |B|` convention.
    pub degenerate: bool,
}

/// Proper 2-coloring with `0` on the smallest vertex of every component.
pub fn two_coloring(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return Err(Error::NotBipartite(v));
                }
            }
        }
    }
    Ok(color)
}

/// Color classes with `|A| ≤ |B|`; on a tie `A` is the lexicographically
/// smaller sorted vertex list.
pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let color = two_coloring(g)?;
    if g.order() == 1 {
        return Ok(Bipartition {
            class_a: vec![0],
            class_b: vec![],
            degenerate: true,
        });
    }
    let (mut a, mut b): (Vec<usize>, Vec<usize>) = (0..g.order()).partition(|&v| color[v] == 0);
    if (b.len(), &b) < (a.len(), &a) {
        std::mem::swap(&mut a, &mut b);
    }
    Ok(Bipartition {
        class_a: a,
        class_b: b,
        degenerate: false,
    })
}

fn check_brute(g: &Graph) -> Result<()> {
    if g.order() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "exhaustive invariant computation",
            size: g.order(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).fold(0, |m, u| m | 1 << u))
        .collect()
}

/// α(g) by leaf-to-root dynamic programming; `g` must be a forest.
pub fn independence_number_forest(g: &Graph) -> Result<usize> {
    if !g.is_forest() {
        return Err(Error::NotForest);
    }
    let n = g.order();
    let mut take = vec![1usize; n];
    let mut skip = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    let mut total = 0;
    for root in 0..n {
        if visited[root] {
            continue;
        }
        // iterative DFS; children are finished before their parent
        let mut order = Vec::new();
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for v in g.neighbors(u) {
                if !visited[v] {
                    visited[v] = true;
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        for &u in order.iter().rev() {
            let p = parent[u];
            if p != usize::MAX {
                take[p] += skip[u];
                skip[p] += take[u].max(skip[u]);
            }
        }
        total += take[root].max(skip[root]);
    }
    Ok(total)
}

/// α(g) by exhaustive branching, `n ≤ 20`.
pub fn independence_number_brute(g: &Graph) -> Result<usize> {
    check_brute(g)?;
    fn best(adj: &[u32], candidates: u32) -> usize {
        if candidates == 0 {
            return 0;
        }
        let v = candidates.trailing_zeros() as usize;
        let without = best(adj, candidates & !(1 << v));
        let with = 1 + best(adj, candidates & !(1 << v) & !adj[v]);
        without.max(with)
    }
    let adj = masks(g);
    Ok(best(&adj, full_mask(g.order())))
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// α(g): forest dynamic programming when `g` is a forest, exhaustive search
/// otherwise.
pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.is_forest() {
        let dp = independence_number_forest(g)?;
        if g.order() <= 12 {
            debug_assert_eq!(Ok(dp), independence_number_brute(g));
        }
        Ok(dp)
    } else {
        independence_number_brute(g)
    }
}

/// β(g) = n − α(g): the complement of an independent set is a covering.
pub fn covering_number(g: &Graph) -> Result<usize> {
    Ok(g.order() - independence_number(g)?)
}

/// β(g) as the smallest vertex subset meeting every edge, over all
/// subsets. `n ≤ 20`.
pub fn covering_number_brute(g: &Graph) -> Result<usize> {
    check_brute(g)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.order();
    let mut best = n;
    for set in 0..=full_mask(n) {
        let size = set.count_ones() as usize;
        if size < best && edges.iter().all(|&(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1) {
            best = size;
        }
    }
    Ok(best)
}

/// ν(g) by exhaustive branching, `n ≤ 20`.
pub fn matching_number_brute(g: &Graph) -> Result<usize> {
    check_brute(g)?;
    fn best(adj: &[u32], free: u32) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut result = best(adj, rest);
        let mut partners = adj[v] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros() as usize;
            partners &= partners - 1;
            result = result.max(1 + best(adj, rest & !(1 << u)));
        }
        result
    }
    let adj = masks(g);
    Ok(best(&adj, full_mask(g.order())))
}

/// ν(g) for a bipartite graph by augmenting paths.
pub fn matching_number_bipartite(g: &Graph) -> Result<usize> {
    let color = two_coloring(g)?;
    let n = g.order();
    let mut mate = vec![usize::MAX; n];

    fn augment(g: &Graph, u: usize, mate: &mut [usize], seen: &mut [bool]) -> bool {
        for v in g.neighbors(u) {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if mate[v] == usize::MAX || augment(g, mate[v], mate, seen) {
                mate[v] = u;
                mate[u] = v;
                return true;
            }
        }
        false
    }

    let mut size = 0;
    for u in (0..n).filter(|&u| color[u] == 0) {
        let mut seen = vec![false; n];
        if augment(g, u, &mut mate, &mut seen) {
            size += 1;
        }
    }
    Ok(size)
}

/// ν(g): augmenting paths on bipartite input, exhaustive search otherwise.
pub fn matching_number(g: &Graph) -> Result<usize> {
    match matching_number_bipartite(g) {
        Ok(nu) => Ok(nu),
        Err(Error::NotBipartite(_)) => matching_number_brute(g),
        Err(e) => Err(e),
    }
}

/// q(g) for a bipartite graph: every component with an edge contributes the
/// smaller of its two color classes, isolated vertices contribute nothing.
pub fn independent_covering_number(g: &Graph) -> Result<usize> {
    let color = two_coloring(g)?;
    Ok(g.components()
        .iter()
        .filter(|comp| comp.len() >= 2)
        .map(|comp| {
            let zeros = comp.iter().filter(|&&v| color[v] == 0).count();
            zeros.min(comp.len() - zeros)
        })
        .sum())
}

/// Parameters of the `k ≥ 2` case split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhlmParams {
    /// δ_T(A), the minimum degree over the smaller color class.
    pub k: usize,
    pub a0: Vec<usize>,
    pub b0: Vec<usize>,
    /// `δ(B₀) − 2`; `None` when `B₀` is empty.
    pub b: Option<usize>,
}

pub fn whlm_parameters(t: &Graph) -> Result<WhlmParams> {
    require_tree(t)?;
    let bip = bipartition(t)?;
    Ok(whlm_from(t, &bip))
}

fn whlm_from(t: &Graph, bip: &Bipartition) -> WhlmParams {
    let k = bip.class_a.iter().map(|&x| t.degree(x)).min().unwrap_or(0);
    let a0: Vec<usize> = bip
        .class_a
        .iter()
        .copied()
        .filter(|&x| t.degree(x) == k)
        .collect();
    let b0: Vec<usize> = bip
        .class_b
        .iter()
        .copied()
        .filter(|&y| t.neighbors(y).filter(|x| a0.contains(x)).count() >= 2)
        .collect();
    // every y in B₀ has degree ≥ 2
    let b = b0.iter().map(|&y| t.degree(y)).min().map(|d| d - 2);
    WhlmParams { k, a0, b0, b }
}

fn require_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() || t.order() < 2 {
        return Err(Error::NotTree);
    }
    Ok(())
}

/// A tree together with every invariant the extremal formulas consume.
#[derive(Clone, Debug, Serialize)]
pub struct TreeAnalysis {
    #[serde(skip)]
    pub tree: Graph,
    pub bipartition: Bipartition,
    pub delta_a: usize,
    pub alpha: usize,
    pub beta: usize,
    pub nu: usize,
    pub q: usize,
    pub whlm: WhlmParams,
}

impl TreeAnalysis {
    /// Analyzes a tree on at least two vertices.
    pub fn new(tree: &Graph) -> Result<Self> {
        require_tree(tree)?;
        let bipartition = bipartition(tree)?;
        let alpha = independence_number(tree)?;
        let beta = covering_number(tree)?;
        let nu = matching_number(tree)?;
        let q = independent_covering_number(tree)?;
        let whlm = whlm_from(tree, &bipartition);

        let n = tree.order();
        assert_eq!(alpha + beta, n, "Gallai identity failed");
        assert_eq!(beta, nu, "König identity failed");
        assert_eq!(q, bipartition.class_a.len(), "q(T) must equal |A| for a tree");

        Ok(Self {
            tree: tree.clone(),
            delta_a: whlm.k,
            bipartition,
            alpha,
            beta,
            nu,
            q,
            whlm,
        })
    }

    pub fn class_a_size(&self) -> usize {
        self.bipartition.class_a.len()
    }

    pub fn class_b_size(&self) -> usize {
        self.bipartition.class_b.len()
    }
}
