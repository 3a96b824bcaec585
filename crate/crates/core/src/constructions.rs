//! Extremal candidates: `H'(n, p, q) = K̄_{q−1} + T(n − q + 1, p)`, its
//! clique-apex variant `H(n, p, q)`, and the lower-bound family obtained by
//! placing an extremal `𝓑`-free graph on the apex set of `H'`.
//!
//! Apexes are vertices `0..q−1`; the Turán parts follow as contiguous blocks,
//! larger parts first.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{classify, CaseLabel};
use crate::graph::{canonical_form, canonical_labeling, turan_parts, Graph, MAX_CANONICAL_ORDER};
use crate::search::extremal_witnesses;

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalCandidate {
    #[serde(serialize_with = "crate::report::graph6")]
    pub graph: Graph,
    pub apex_set: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
    /// The graph induced on the apex set.
    #[serde(serialize_with = "crate::report::graph6")]
    pub embedded: Graph,
}

/// `H'(n, p, q)` with the graph `embedded` (on `q − 1` vertices) placed on
/// the apexes in its canonical vertex order.
pub fn build_with_apex_graph(n: usize, p: usize, q: usize, embedded: &Graph) -> Result<ExtremalCandidate> {
    if p < 1 {
        return Err(Error::InvalidParts(p));
    }
    if q < 1 || n < q {
        return Err(Error::OutOfDomain(format!("need n ≥ q ≥ 1, got n={n}, q={q}")));
    }
    let apexes = q - 1;
    if embedded.order() != apexes {
        return Err(Error::OutOfDomain(format!(
            "apex graph has {} vertices, expected {apexes}",
            embedded.order()
        )));
    }
    let (_, perm) = canonical_labeling(embedded)?;
    let embedded = embedded.relabel(&perm)?;

    let sizes = turan_parts(n - apexes, p)?;
    let mut parts = Vec::with_capacity(p);
    let mut next = apexes;
    for size in sizes {
        parts.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let core = Graph::complete_multipartite(&parts.iter().map(Vec::len).collect::<Vec<_>>());
    let graph = embedded.join(&core);

    Ok(ExtremalCandidate {
        graph,
        apex_set: (0..apexes).collect(),
        parts,
        embedded,
    })
}

pub fn build_h_prime(n: usize, p: usize, q: usize) -> Result<ExtremalCandidate> {
    build_with_apex_graph(n, p, q, &Graph::empty(q.saturating_sub(1)))
}

pub fn build_h(n: usize, p: usize, q: usize) -> Result<ExtremalCandidate> {
    build_with_apex_graph(n, p, q, &Graph::complete(q.saturating_sub(1)))
}

/// One candidate per extremal `𝓑`-free graph on `q − 1` vertices, for a
/// tree in the `δ_T(A) = 1`, `α(T) > |B|` case.
pub fn build_candidates_un(t: &Graph, p: usize, n: usize) -> Result<Vec<ExtremalCandidate>> {
    let prediction = classify(t, p as u64)?;
    if prediction.case != CaseLabel::NewTheorem {
        return Err(Error::OutOfTheoremScope(format!(
            "lower-bound family needs δ_T(A) = 1 and α(T) > |B|; tree is in case {:?}",
            prediction.case
        )));
    }
    let forbidden = prediction.forbidden.expect("set for this case");
    let q = forbidden.q;
    let witnesses = extremal_witnesses(q - 1, &forbidden.members)?;

    let mut out = Vec::new();
    let mut seen = BTreeMap::new();
    for embedded in &witnesses {
        let candidate = build_with_apex_graph(n, p, q, embedded)?;
        // distinct witnesses are non-isomorphic; the totals are compared
        // only when small enough to canonicalize
        if n <= MAX_CANONICAL_ORDER {
            let form = canonical_form(&candidate.graph)?;
            if seen.insert(form, ()).is_some() {
                continue;
            }
        }
        out.push(candidate);
    }
    Ok(out)
}
