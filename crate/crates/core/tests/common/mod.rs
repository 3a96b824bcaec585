//! Independent oracles and enumerators shared by the integration suites.
//! Everything here is deliberately naive: subsets, permutations and
//! injections are enumerated outright.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use turanlab::blowup::edge_blowup;
use turanlab::graph::canonical_form;
use turanlab::search::subgraph_contains;
use turanlab::tree::{
    covering_number, covering_number_brute, independence_number, independence_number_brute,
    independent_covering_number, matching_number, matching_number_brute,
};
use turanlab::Graph;

/// Non-isomorphic trees on `n ≥ 1` vertices, grown by leaf addition.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for m in 1..n {
        let mut next = BTreeMap::new();
        for t in &level {
            for v in 0..m {
                let mut edges: Vec<_> = t.edges().collect();
                edges.push((v, m));
                let g = Graph::new(m + 1, edges).unwrap();
                next.entry(canonical_form(&g).unwrap()).or_insert(g);
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Non-isomorphic forests on `n ≥ 1` vertices. Every forest is a tree on
/// one more vertex with some vertex deleted.
pub fn forests(n: usize) -> Vec<Graph> {
    let mut out = BTreeMap::new();
    for t in trees(n + 1) {
        for v in 0..=n {
            let keep: Vec<usize> = (0..=n).filter(|&u| u != v).collect();
            let g = t.induced_subgraph(&keep).unwrap();
            out.entry(canonical_form(&g).unwrap()).or_insert(g);
        }
    }
    out.into_values().collect()
}

/// The labeled graph on `n` vertices whose upper-triangle edges are the
/// bits of `code`, in `(0,1), (0,2), (1,2), (0,3), …` order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest code over all relabelings; equal exactly on isomorphic graphs.
pub fn brute_canonical_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index = |a: usize, b: usize| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        j * (j - 1) / 2 + i
    };
    perms
        .iter()
        .map(|perm| {
            edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << index(perm[u], perm[v]))
        })
        .min()
        .unwrap_or(0)
}

/// Whether some injective map sends every pattern edge onto a host edge,
/// by trying every injection.
pub fn contains_by_injections(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == pattern.order() {
            return true;
        }
        for v in 0..host.order() {
            if used[v] {
                continue;
            }
            if (0..i).any(|j| pattern.has_edge(i, j) && !host.has_edge(v, map[j])) {
                continue;
            }
            used[v] = true;
            map.push(v);
            if go(host, pattern, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    pattern.order() <= host.order() && go(host, pattern, &mut Vec::new(), &mut vec![false; host.order()])
}

/// Minimum size of a vertex set that is independent and meets every edge.
pub fn independent_covering_brute(g: &Graph) -> Option<usize> {
    let n = g.order();
    let edges: Vec<_> = g.edges().collect();
    (0u32..1 << n)
        .filter(|&s| {
            let inside = |v: usize| s >> v & 1 == 1;
            edges.iter().all(|&(u, v)| inside(u) != inside(v))
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Uniform random labeled tree on `n ≥ 2` vertices from a Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut StdRng) -> Graph {
    if n == 2 {
        return Graph::path(2);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

pub fn shuffled(g: &Graph, rng: &mut StdRng) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Non-isomorphic graphs on `n ≤ 6` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let bits = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeMap::new();
    for code in 0u64..1 << bits {
        let g = graph_from_code(n, code);
        seen.entry(canonical_form(&g).unwrap()).or_insert(g);
    }
    seen.into_values().collect()
}

// Suites shared between the property tests and the acceptance run. Each
// returns the number of cases checked, panicking on the first mismatch.

/// α + β = n and β = ν on every tree with at most `max_n` vertices.
pub fn suite_tree_invariants(max_n: usize) -> usize {
    let mut checked = 0;
    for n in 1..=max_n {
        for t in trees(n) {
            let alpha = independence_number(&t).unwrap();
            let beta = covering_number(&t).unwrap();
            let nu = matching_number(&t).unwrap();
            assert_eq!(
                alpha,
                independence_number_brute(&t).unwrap(),
                "α of {:?}",
                t.edges().collect::<Vec<_>>()
            );
            assert_eq!(beta, covering_number_brute(&t).unwrap());
            assert_eq!(nu, matching_number_brute(&t).unwrap());
            assert_eq!(alpha + beta, n);
            assert_eq!(beta, nu);
            checked += 1;
        }
    }
    checked
}

/// Independent covering number against subset enumeration on all forests.
pub fn suite_independent_covering(max_n: usize) -> usize {
    let mut checked = 0;
    for n in 1..=max_n {
        for f in forests(n) {
            assert_eq!(
                Some(independent_covering_number(&f).unwrap()),
                independent_covering_brute(&f),
                "forest {:?}",
                f.edges().collect::<Vec<_>>()
            );
            checked += 1;
        }
    }
    checked
}

/// Vertex and edge counts of `T^{p+1}` on random trees.
pub fn suite_blowup_sizes(count: usize, seed: u64) -> usize {
    let mut rng = rng(seed);
    for i in 0..count {
        let n = rng.gen_range(2..=30);
        let t = random_tree(n, &mut rng);
        let p = [3, 4, 5][i % 3];
        let e = n - 1;
        let b = edge_blowup(&t, p).unwrap();
        assert_eq!(b.graph.order(), n + e * (p - 1));
        assert_eq!(b.graph.edge_count(), e * (p + 1) * p / 2);
        assert_eq!(b.origin.len(), b.graph.order());
    }
    count
}

/// `subgraph_contains` against the injection oracle for every pair of
/// non-isomorphic graphs with host order at most `max_n`.
pub fn suite_containment(max_n: usize) -> usize {
    let by_order: Vec<Vec<Graph>> = (0..=max_n).map(graphs_up_to_iso).collect();
    let mut checked = 0;
    for hosts in &by_order {
        for host in hosts {
            for patterns in &by_order[..=host.order()] {
                for pattern in patterns {
                    assert_eq!(
                        subgraph_contains(host, pattern).unwrap(),
                        contains_by_injections(host, pattern),
                        "host {:?} pattern {:?}",
                        host.edges().collect::<Vec<_>>(),
                        pattern.edges().collect::<Vec<_>>()
                    );
                    checked += 1;
                }
            }
        }
    }
    checked
}
