//! Subgraph containment and exhaustive extremal-number search.
//!
//! [`subgraph_contains`] decides non-induced containment by backtracking over
//! pattern vertices. Host vertices that are twins (equal open or closed
//! neighborhoods) are interchangeable while unused, so each level tries only
//! one vertex per twin class; on complete multipartite hosts this collapses
//! the search to the handful of part-assignments.
//!
//! [`brute_ex`] builds every `F`-free graph that can still grow into an
//! extremal one, one vertex at a time, deduplicating by canonical form. An
//! extremal graph on `n` vertices with `e` edges has a chain of induced
//! subgraphs, each obtained by deleting a minimum-degree vertex, whose
//! members on `m` vertices carry at least `e·m(m−1)/(n(n−1))` edges; only
//! such graphs are kept, and the new vertex must be of minimum degree.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, CanonicalForm, Graph};

/// Default node budget for one containment query.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Largest `n` accepted by [`brute_ex`].
pub const BRUTE_EX_LIMIT: usize = 10;

/// Backtracking subgraph matcher with a node budget.
#[derive(Clone, Debug)]
pub struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    budget: u64,
}

impl<'a> Matcher<'a> {
    pub fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        Self {
            host,
            pattern,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// True iff `pattern` is a (not necessarily induced) subgraph of `host`.
    pub fn contains(&self) -> Result<bool> {
        Ok(self.find()?.is_some())
    }

    /// An injective map from pattern vertices to host vertices preserving
    /// every pattern edge, if one exists.
    pub fn find(&self) -> Result<Option<Vec<usize>>> {
        let (host, pattern) = (self.host, self.pattern);
        if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
            return Ok(None);
        }
        let mut host_deg = host.degrees();
        let mut pat_deg = pattern.degrees();
        host_deg.sort_unstable_by(|a, b| b.cmp(a));
        pat_deg.sort_unstable_by(|a, b| b.cmp(a));
        if pat_deg.iter().zip(&host_deg).any(|(p, h)| p > h) {
            return Ok(None);
        }

        let order = matching_order(pattern);
        let mut position = vec![0; pattern.order()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        // for each step: earlier pattern neighbors, and count of later ones
        let steps: Vec<Step> = order
            .iter()
            .map(|&v| Step {
                vertex: v,
                degree: pattern.degree(v),
                earlier: pattern
                    .neighbors(v)
                    .filter(|&u| position[u] < position[v])
                    .collect(),
                later: pattern
                    .neighbors(v)
                    .filter(|&u| position[u] > position[v])
                    .count(),
            })
            .collect();

        let mut state = Backtrack {
            host,
            steps: &steps,
            twin: twin_classes(host),
            image: vec![usize::MAX; pattern.order()],
            used: FixedBitSet::with_capacity(host.order()),
            nodes: 0,
            budget: self.budget,
        };
        if state.extend(0)? {
            Ok(Some(state.image))
        } else {
            Ok(None)
        }
    }
}

struct Step {
    vertex: usize,
    degree: usize,
    earlier: Vec<usize>,
    later: usize,
}

struct Backtrack<'a> {
    host: &'a Graph,
    steps: &'a [Step],
    twin: Vec<usize>,
    image: Vec<usize>,
    used: FixedBitSet,
    nodes: u64,
    budget: u64,
}

impl Backtrack<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        let Some(step) = self.steps.get(depth) else {
            return Ok(true);
        };
        let n = self.host.order();
        let mut candidates = match step.earlier.split_first() {
            Some((&first, rest)) => {
                let mut c = self.host.adjacency(self.image[first]).clone();
                for &u in rest {
                    c.intersect_with(self.host.adjacency(self.image[u]));
                }
                c
            }
            None => {
                let mut c = FixedBitSet::with_capacity(n);
                c.insert_range(..);
                c
            }
        };
        candidates.difference_with(&self.used);

        let mut tried_classes: Vec<usize> = Vec::new();
        for h in candidates.ones() {
            if self.host.degree(h) < step.degree || tried_classes.contains(&self.twin[h]) {
                continue;
            }
            if step.later > 0 {
                let free = self.host.adjacency(h).difference(&self.used).count();
                if free < step.later {
                    continue;
                }
            }
            tried_classes.push(self.twin[h]);
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.image[step.vertex] = h;
            self.used.insert(h);
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used.set(h, false);
            self.image[step.vertex] = usize::MAX;
        }
        Ok(false)
    }
}

/// Pattern order: repeatedly take the unplaced vertex with the most placed
/// neighbors, breaking ties by larger degree, then smaller id.
fn matching_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for u in pattern.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}

/// Twin class ids: equal open neighborhoods (non-adjacent twins) or equal
/// closed neighborhoods (adjacent twins). A vertex cannot have twins of both
/// kinds, so the two groupings never conflict.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut open: HashMap<&FixedBitSet, Vec<usize>> = HashMap::new();
    for v in 0..n {
        open.entry(g.adjacency(v)).or_default().push(v);
    }
    let closed_rows: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut row = g.adjacency(v).clone();
            row.insert(v);
            row
        })
        .collect();
    let mut closed: HashMap<&FixedBitSet, Vec<usize>> = HashMap::new();
    for (v, row) in closed_rows.iter().enumerate() {
        closed.entry(row).or_default().push(v);
    }

    let mut class: Vec<usize> = (0..n).collect();
    for group in open.values().chain(closed.values()).filter(|g| g.len() > 1) {
        let rep = group[0];
        for &v in group {
            class[v] = rep;
        }
    }
    class
}

/// Non-induced containment with the default budget.
pub fn subgraph_contains(host: &Graph, pattern: &Graph) -> Result<bool> {
    Matcher::new(host, pattern).contains()
}

/// True iff `host` contains no member of `family`. Members are tried from
/// the smallest (by order, then size).
pub fn is_family_free(host: &Graph, family: &[Graph]) -> Result<bool> {
    is_family_free_with_budget(host, family, DEFAULT_BUDGET)
}

pub fn is_family_free_with_budget(host: &Graph, family: &[Graph], budget: u64) -> Result<bool> {
    let mut members: Vec<&Graph> = family.iter().collect();
    members.sort_by_key(|g| (g.order(), g.edge_count()));
    for member in members {
        if Matcher::new(host, member).budget(budget).contains()? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

/// Result of an exhaustive `ex(n, F)` computation.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    #[serde(serialize_with = "crate::report::graph6_list")]
    pub family: Vec<Graph>,
    pub ex_value: usize,
    /// Every extremal graph up to isomorphism, canonically labeled and
    /// sorted by canonical key.
    #[serde(serialize_with = "crate::report::graph6_list")]
    pub witnesses: Vec<Graph>,
    /// Number of candidate one-vertex extensions examined.
    pub explored: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

/// Exact `ex(n, family)` with every extremal graph up to isomorphism.
pub fn brute_ex(n: usize, family: &[Graph]) -> Result<SearchReport> {
    brute_ex_with_budget(n, family, DEFAULT_BUDGET)
}

pub fn brute_ex_with_budget(n: usize, family: &[Graph], budget: u64) -> Result<SearchReport> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if n > BRUTE_EX_LIMIT {
        return Err(Error::TooLarge {
            what: "exhaustive extremal search",
            size: n,
            limit: BRUTE_EX_LIMIT,
        });
    }
    let start = Instant::now();
    let mut members = family.to_vec();
    members.sort_by_key(|g| (g.order(), g.edge_count()));

    let mut explored = 0;
    let (ex_value, witnesses) = search_level(n, &members, budget, &mut explored)?;
    Ok(SearchReport {
        n,
        family: members,
        ex_value,
        witnesses,
        explored,
        elapsed: start.elapsed(),
    })
}

/// All extremal graphs for `ex(n, family)`.
pub fn extremal_witnesses(n: usize, family: &[Graph]) -> Result<Vec<Graph>> {
    Ok(brute_ex(n, family)?.witnesses)
}

fn search_level(n: usize, family: &[Graph], budget: u64, explored: &mut u64) -> Result<(usize, Vec<Graph>)> {
    // ex(n−1) ≤ ex(n) when adding an isolated vertex cannot create a
    // member, i.e. no member has an isolated vertex of its own
    let lower = if n >= 2 && family.iter().all(|f| f.min_degree().is_some_and(|d| d > 0)) {
        search_level(n - 1, family, budget, explored)?.0
    } else {
        0
    };
    let keeps = |m: usize, edges: usize| m < 2 || edges * n * (n - 1) >= lower * m * (m - 1);

    let mut level: Vec<Graph> = Vec::new();
    if is_family_free_with_budget(&Graph::empty(0), family, budget)? {
        level.push(Graph::empty(0));
    }
    for m in 1..=n {
        let results: Vec<Result<Children>> = level
            .par_iter()
            .map(|parent| extend_parent(parent, family, budget, &keeps))
            .collect();
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for r in results {
            let (children, count) = r?;
            *explored += count;
            next.extend(children);
        }
        level = next.into_values().collect();
        debug_assert!(level.iter().all(|g| g.order() == m));
    }

    let ex_value = level
        .iter()
        .map(Graph::edge_count)
        .max()
        .ok_or_else(|| Error::OutOfDomain(format!("no family-free graph on {n} vertices")))?;
    // `level` is ordered by canonical key and holds canonically labeled graphs
    let witnesses = level.into_iter().filter(|g| g.edge_count() == ex_value).collect();
    Ok((ex_value, witnesses))
}

type Children = (Vec<(CanonicalForm, Graph)>, u64);

fn extend_parent(
    parent: &Graph,
    family: &[Graph],
    budget: u64,
    keeps: &(dyn Fn(usize, usize) -> bool + Sync),
) -> Result<Children> {
    let m = parent.order() + 1;
    let new = m - 1;
    let degrees = parent.degrees();
    let max_size = parent.min_degree().map_or(0, |d| d + 1).min(new);
    let mut out = Vec::new();
    let mut explored = 0;

    for size in 0..=max_size {
        if !keeps(m, parent.edge_count() + size) {
            continue;
        }
        for subset in Combinations::new(new, size) {
            // the new vertex must have minimum degree in the child
            let in_subset = |x: usize| subset.binary_search(&x).is_ok();
            if (0..new).any(|x| degrees[x] + usize::from(in_subset(x)) < size) {
                continue;
            }
            explored += 1;
            let edges = parent.edges().chain(subset.iter().map(|&x| (x, new)));
            let child = Graph::new(m, edges)?;
            if !is_family_free_with_budget(&child, family, budget)? {
                continue;
            }
            let (form, perm) = canonical_labeling(&child)?;
            out.push((form, child.relabel(&perm)?));
        }
    }
    Ok((out, explored))
}

/// Lexicographic `size`-subsets of `0..n`.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, size: usize) -> Self {
        Self {
            n,
            current: (size <= n).then(|| (0..size).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut cur = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                self.current = Some(cur);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, turan_graph};

    #[test]
    fn containment_examples() {
        assert!(subgraph_contains(&Graph::complete(4), &Graph::complete(3)).unwrap());
        let k23 = Graph::complete_multipartite(&[2, 3]);
        assert!(!subgraph_contains(&k23, &Graph::complete(3)).unwrap());
        assert!(subgraph_contains(&Graph::cycle(5), &Graph::path(4)).unwrap());
        assert!(subgraph_contains(&Graph::path(3), &Graph::empty(3)).unwrap());
        assert!(!subgraph_contains(&Graph::path(3), &Graph::empty(4)).unwrap());
    }

    #[test]
    fn found_embedding_is_valid() {
        let host = Graph::cycle(7);
        let pattern = Graph::path(5);
        let image = Matcher::new(&host, &pattern).find().unwrap().unwrap();
        assert!(pattern.edges().all(|(u, v)| host.has_edge(image[u], image[v])));
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), pattern.order());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let host = Graph::cycle(12);
        let pattern = Graph::cycle(11);
        assert_eq!(
            Matcher::new(&host, &pattern).budget(5).contains(),
            Err(Error::BudgetExceeded(5))
        );
    }

    #[test]
    fn freeness_examples() {
        let t12 = turan_graph(12, 3).unwrap();
        assert!(is_family_free(&t12, &[Graph::complete(4)]).unwrap());
        assert!(!is_family_free(&t12, &[Graph::complete(3)]).unwrap());
    }

    #[test]
    fn twin_classes_of_multipartite() {
        let classes = twin_classes(&Graph::complete_multipartite(&[2, 3]));
        assert_eq!(classes, vec![0, 0, 2, 2, 2]);
        let classes = twin_classes(&Graph::complete(3));
        assert_eq!(classes, vec![0, 0, 0]);
        let classes = twin_classes(&Graph::path(4));
        assert_eq!(classes, vec![0, 1, 2, 3]);
    }

    #[test]
    fn brute_ex_examples() {
        let r = brute_ex(5, &[Graph::complete(3)]).unwrap();
        assert_eq!(r.ex_value, 6);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(
            canonical_form(&r.witnesses[0]).unwrap(),
            canonical_form(&Graph::complete_multipartite(&[2, 3])).unwrap()
        );

        assert_eq!(brute_ex(6, &[Graph::complete(4)]).unwrap().ex_value, 12);

        let r = brute_ex(2, &[Graph::complete(2)]).unwrap();
        assert_eq!((r.ex_value, r.witnesses.clone()), (0, vec![Graph::empty(2)]));
    }

    #[test]
    fn witness_examples() {
        let w = extremal_witnesses(4, &[Graph::path(3)]).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(
            canonical_form(&w[0]).unwrap(),
            canonical_form(&Graph::matching(4)).unwrap()
        );

        let w = extremal_witnesses(3, &[Graph::complete(3)]).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(
            canonical_form(&w[0]).unwrap(),
            canonical_form(&Graph::path(3)).unwrap()
        );
    }

    #[test]
    fn brute_ex_edge_cases() {
        assert_eq!(brute_ex(3, &[]).unwrap_err(), Error::EmptyFamily);
        assert!(matches!(
            brute_ex(11, &[Graph::complete(3)]),
            Err(Error::TooLarge { .. })
        ));
        // K1 is contained in every nonempty graph
        assert_eq!(brute_ex(0, &[Graph::empty(1)]).unwrap().ex_value, 0);
        assert!(brute_ex(1, &[Graph::empty(1)]).is_err());
        // pattern larger than n: the complete graph is free
        assert_eq!(brute_ex(3, &[Graph::complete(4)]).unwrap().ex_value, 3);
    }

    #[test]
    fn combinations_enumerate_binomials() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(
            Combinations::new(4, 0).collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(Combinations::new(3, 3).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn members_with_isolated_vertices() {
        // an edge plus an isolated vertex: on three vertices only the
        // edgeless graph avoids it, although one edge fits on two
        let edge_and_point = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(
            brute_ex(2, std::slice::from_ref(&edge_and_point))
                .unwrap()
                .ex_value,
            1
        );
        let r = brute_ex(3, &[edge_and_point]).unwrap();
        assert_eq!((r.ex_value, r.witnesses), (0, vec![Graph::empty(3)]));

        let edge_and_two = Graph::new(4, [(2, 3)]).unwrap();
        assert_eq!(brute_ex(4, &[edge_and_two]).unwrap().ex_value, 0);
    }
}
