//! Exact canonical labeling by partition refinement and backtracking.
//!
//! Each connected component is labeled separately: its vertex set is refined
//! to an equitable ordered partition, then the search tree individualizes one
//! vertex at a time from the first smallest non-singleton cell. Every discrete
//! leaf gives an adjacency certificate; the largest wins. Two leaves with the
//! same certificate reveal an automorphism, and automorphisms fixing the
//! current prefix prune sibling branches lying in the same orbit. Twin vertices
//! (equal open or closed neighborhoods) are interchangeable and are never
//! branched on twice.
//!
//! The form of the whole graph is the sorted list of component certificates,
//! so it is equal for two graphs exactly when they are isomorphic.

use std::cmp::Ordering;

use super::Graph;
use crate::error::{Error, Result};

/// Largest graph order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 256;

/// Isomorphism-invariant key. Ordering is lexicographic on the encoded bytes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Exact canonical key of `g`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical key together with a relabeling `perm` (vertex `v` becomes
/// `perm[v]`) such that `g.relabel(&perm)` is the same graph for every member
/// of an isomorphism class.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge {
            what: "canonical labeling",
            size: n,
            limit: MAX_CANONICAL_ORDER,
        });
    }

    let mut labeled: Vec<(Vec<u64>, Vec<usize>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            let local = g.induced_subgraph(&comp).expect("component vertices are valid");
            let (cert, order) = ComponentSearch::new(&local).run();
            (cert, order.into_iter().map(|i| comp[i]).collect())
        })
        .collect();
    labeled.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.0.cmp(&b.0)));

    let mut bytes = Vec::new();
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    bytes.extend_from_slice(&(labeled.len() as u32).to_be_bytes());
    let mut perm = vec![0; n];
    let mut next = 0;
    for (cert, order) in &labeled {
        bytes.extend_from_slice(&(order.len() as u32).to_be_bytes());
        for word in cert {
            bytes.extend_from_slice(&word.to_be_bytes());
        }
        for &v in order {
            perm[v] = next;
            next += 1;
        }
    }
    Ok((CanonicalForm(bytes), perm))
}

type Partition = Vec<Vec<usize>>;

struct ComponentSearch<'a> {
    g: &'a Graph,
    twin_class: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> ComponentSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        Self {
            g,
            twin_class: twin_classes(g),
            best: None,
            automorphisms: Vec::new(),
        }
    }

    /// Returns the best certificate and the vertex order realizing it
    /// (`order[i]` is the vertex placed at position `i`).
    fn run(mut self) -> (Vec<u64>, Vec<usize>) {
        let n = self.g.order();
        let mut root = vec![(0..n).collect::<Vec<_>>()];
        if n == 0 {
            root.clear();
        }
        refine(self.g, &mut root);
        let mut prefix = Vec::new();
        self.search(root, &mut prefix);
        self.best.expect("search visits at least one leaf")
    }

    fn search(&mut self, partition: Partition, prefix: &mut Vec<usize>) {
        let target = partition
            .iter()
            .enumerate()
            .filter(|(_, cell)| cell.len() > 1)
            .min_by_key(|(i, cell)| (cell.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            let order: Vec<usize> = partition.into_iter().map(|cell| cell[0]).collect();
            self.leaf(order);
            return;
        };

        let cell = partition[target].clone();
        let mut tried_twins: Vec<usize> = Vec::new();
        let mut tried: Vec<usize> = Vec::new();
        let mut orbits = Orbits::new(self.g.order());
        let mut seen_generators = 0;
        for &v in &cell {
            if tried_twins.contains(&self.twin_class[v]) {
                continue;
            }
            if seen_generators < self.automorphisms.len() {
                for gen in &self.automorphisms[seen_generators..] {
                    if prefix.iter().all(|&x| gen[x] == x) {
                        orbits.absorb(gen);
                    }
                }
                seen_generators = self.automorphisms.len();
            }
            if tried.iter().any(|&u| orbits.same(u, v)) {
                continue;
            }
            tried_twins.push(self.twin_class[v]);
            tried.push(v);

            let mut child = partition.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            refine(self.g, &mut child);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best_cert, best_order)) => match cert.cmp(best_cert) {
                Ordering::Greater => self.best = Some((cert, order)),
                Ordering::Equal => {
                    // order[i] and best_order[i] play the same role
                    let mut auto = vec![0; order.len()];
                    for (&from, &to) in order.iter().zip(best_order) {
                        auto[from] = to;
                    }
                    if auto.iter().enumerate().any(|(i, &j)| i != j) {
                        self.automorphisms.push(auto);
                    }
                }
                Ordering::Less => {}
            },
        }
    }
}

/// Upper-triangle adjacency bits in row-major order under `order`.
fn certificate(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; bits.div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        let row = g.adjacency(order[i]);
        for &w in &order[i + 1..] {
            if row.contains(w) {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

/// Refines an ordered partition until it is equitable. Split cells keep
/// their position and their fragments are ordered by neighbor-count
/// signature, which makes the result isomorphism-invariant.
fn refine(g: &Graph, partition: &mut Partition) {
    loop {
        let mut cell_of = vec![0; g.order()];
        for (i, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = partition.len();
        let mut next: Partition = Vec::with_capacity(k);
        for cell in partition.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; k];
                    for u in g.neighbors(v) {
                        sig[cell_of[u]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == k;
        *partition = next;
        if stable {
            return;
        }
    }
}

/// Assigns a class id to each vertex such that two vertices share an id
/// exactly when they are twins: `N(u) = N(v)` or `N[u] = N[v]`.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut class = vec![usize::MAX; n];
    let mut next = 0;
    for u in 0..n {
        if class[u] != usize::MAX {
            continue;
        }
        class[u] = next;
        for (v, c) in class.iter_mut().enumerate().skip(u + 1) {
            if *c == usize::MAX && are_twins(g, u, v) {
                *c = next;
            }
        }
        next += 1;
    }
    class
}

pub(crate) fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let (a, b) = (g.adjacency(u), g.adjacency(v));
    let mut a = a.clone();
    let mut b = b.clone();
    a.set(v, false);
    b.set(u, false);
    a == b
}

/// Union-find over vertices, merged along automorphism cycles.
struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn absorb(&mut self, perm: &[usize]) {
        for (x, &y) in perm.iter().enumerate() {
            let (rx, ry) = (self.find(x), self.find(y));
            if rx != ry {
                self.parent[rx.max(ry)] = rx.min(ry);
            }
        }
    }

    fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }
}
