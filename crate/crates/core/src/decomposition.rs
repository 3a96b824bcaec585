//! Vertex splitting, the decomposition family of a tree blow-up, and the
//! forbidden family for the apex block.
//!
//! For `p ≥ 3` and a tree `T`, the decomposition family of `T^{p+1}` is the
//! set of forests obtained from `T` by splitting any subset of its vertices.
//! Its minimum independent covering number `q` fixes the number of apexes in
//! the extremal construction, and the forbidden family records which graphs
//! the `q − 1` apexes must avoid.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_labeling, CanonicalForm, Graph};
use crate::search::{is_family_free, subgraph_contains};
use crate::tree::{covering_number, independent_covering_number, TreeAnalysis};

/// Largest tree order accepted by [`decomposition_family`]; the family is
/// built from up to `2^n` split sets.
pub const DECOMPOSITION_LIMIT: usize = 14;

/// Splits every vertex of `split` simultaneously. A split vertex `v` is
/// replaced by `deg(v)` copies, one per incident edge, and each edge `xy`
/// becomes an edge between the representatives of `x` and `y` for that edge.
///
/// Numbering: vertices are visited in id order; an unsplit vertex takes one
/// new id, a split vertex takes one id per neighbor in increasing neighbor
/// order. A split isolated vertex disappears.
pub fn vertex_split(t: &Graph, split: &[usize]) -> Result<Graph> {
    if !t.is_forest() {
        return Err(Error::NotForest);
    }
    let n = t.order();
    let mut is_split = vec![false; n];
    for &v in split {
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        is_split[v] = true;
    }

    let mut first_id = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        first_id[v] = next;
        next += if is_split[v] { t.degree(v) } else { 1 };
    }
    let rep = |x: usize, y: usize| {
        if is_split[x] {
            first_id[x] + t.neighbors(x).take_while(|&z| z < y).count()
        } else {
            first_id[x]
        }
    };
    Graph::new(next, t.edges().map(|(x, y)| (rep(x, y), rep(y, x))))
}

/// One isomorphism class of split graphs.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyMember {
    /// Canonically labeled representative.
    #[serde(serialize_with = "crate::report::graph6")]
    pub graph: Graph,
    /// A split set producing this class (the numerically smallest bitmask).
    pub split_set: Vec<usize>,
    /// Independent covering number.
    pub q: usize,
    /// Covering number.
    pub beta: usize,
    #[serde(skip)]
    pub form: CanonicalForm,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionFamily {
    /// Members sorted by canonical key.
    pub members: Vec<FamilyMember>,
    /// Minimum independent covering number over the members.
    pub q_min: usize,
    pub t_edges: usize,
}

impl DecompositionFamily {
    pub fn graphs(&self) -> Vec<Graph> {
        self.members.iter().map(|m| m.graph.clone()).collect()
    }
}

/// All vertex splits of the tree `t`, up to isomorphism.
pub fn decomposition_family(t: &Graph) -> Result<DecompositionFamily> {
    if !t.is_tree() || t.order() < 2 {
        return Err(Error::NotTree);
    }
    if t.order() > DECOMPOSITION_LIMIT {
        return Err(Error::TooLarge {
            what: "decomposition family",
            size: t.order(),
            limit: DECOMPOSITION_LIMIT,
        });
    }
    // splitting a leaf changes nothing, so only internal vertices matter
    let internal: Vec<usize> = (0..t.order()).filter(|&v| t.degree(v) >= 2).collect();
    let classes: Vec<Result<(CanonicalForm, (u32, Graph))>> = (0u32..1 << internal.len())
        .into_par_iter()
        .map(|mask| {
            let set = mask_to_set(&internal, mask);
            let split = vertex_split(t, &set)?;
            let (form, perm) = canonical_labeling(&split)?;
            Ok((form, (mask, split.relabel(&perm)?)))
        })
        .collect();

    let mut by_form: BTreeMap<CanonicalForm, (u32, Graph)> = BTreeMap::new();
    for entry in classes {
        let (form, (mask, graph)) = entry?;
        by_form
            .entry(form)
            .and_modify(|slot| {
                if mask < slot.0 {
                    slot.0 = mask;
                }
            })
            .or_insert((mask, graph));
    }

    let members = by_form
        .into_iter()
        .map(|(form, (mask, graph))| {
            Ok(FamilyMember {
                split_set: mask_to_set(&internal, mask),
                q: independent_covering_number(&graph)?,
                beta: covering_number(&graph)?,
                graph,
                form,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let q_min = members
        .iter()
        .map(|m| m.q)
        .min()
        .expect("the unsplit tree is a member");
    Ok(DecompositionFamily {
        members,
        q_min,
        t_edges: t.edge_count(),
    })
}

fn mask_to_set(vertices: &[usize], mask: u32) -> Vec<usize> {
    vertices
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ForbiddenMode {
    /// Induced subgraphs of members on small coverings.
    CoverDerived,
    /// No member has a covering of size `q − 1`; the family is `{K_q}`.
    Clique,
}

#[derive(Clone, Debug, Serialize)]
pub struct ForbiddenFamily {
    /// Subgraph-minimal members, canonically labeled, sorted by canonical key.
    #[serde(serialize_with = "crate::report::graph6_list")]
    pub members: Vec<Graph>,
    pub mode: ForbiddenMode,
    pub q: usize,
    /// Whether the tree satisfies `δ_T(A) = 1` and `α(T) > |B|`, the only
    /// setting in which this family enters an extremal formula.
    pub within_hypotheses: bool,
}

/// Forbidden family of the tree `t`.
pub fn forbidden_family(t: &Graph) -> Result<ForbiddenFamily> {
    let analysis = TreeAnalysis::new(t)?;
    let family = decomposition_family(t)?;
    forbidden_family_from(&analysis, &family)
}

pub fn forbidden_family_from(
    analysis: &TreeAnalysis,
    family: &DecompositionFamily,
) -> Result<ForbiddenFamily> {
    let q = family.q_min;
    let within_hypotheses = analysis.delta_a == 1 && analysis.alpha > analysis.class_b_size();
    let limit = q.saturating_sub(1);

    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for member in family.members.iter().filter(|m| m.beta <= limit) {
        for cover in small_covers(&member.graph, limit) {
            let induced = member.graph.induced_subgraph(&cover)?;
            let (form, perm) = canonical_labeling(&induced)?;
            found.entry(form).or_insert(induced.relabel(&perm)?);
        }
    }

    if found.is_empty() {
        return Ok(ForbiddenFamily {
            members: vec![Graph::complete(q)],
            mode: ForbiddenMode::Clique,
            q,
            within_hypotheses,
        });
    }

    let mut candidates: Vec<(CanonicalForm, Graph)> = found.into_iter().collect();
    candidates
        .sort_by(|a, b| (a.1.order(), a.1.edge_count(), &a.0).cmp(&(b.1.order(), b.1.edge_count(), &b.0)));
    let mut minimal: Vec<(CanonicalForm, Graph)> = Vec::new();
    for (form, g) in candidates {
        let mut dominated = false;
        for (_, kept) in &minimal {
            if subgraph_contains(&g, kept)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            minimal.push((form, g));
        }
    }
    minimal.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ForbiddenFamily {
        members: minimal.into_iter().map(|(_, g)| g).collect(),
        mode: ForbiddenMode::CoverDerived,
        q,
        within_hypotheses,
    })
}

/// Vertex coverings of `g` with at most `limit` vertices, found by branching
/// on an uncovered edge. Every inclusion-minimal covering of that size is
/// produced.
fn small_covers(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, limit: usize, cover: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let uncovered = g
            .edges()
            .find(|&(u, v)| !cover.contains(&u) && !cover.contains(&v));
        match uncovered {
            None => {
                let mut c = cover.clone();
                c.sort_unstable();
                if !out.contains(&c) {
                    out.push(c);
                }
            }
            Some(_) if cover.len() == limit => {}
            Some((u, v)) => {
                for x in [u, v] {
                    cover.push(x);
                    grow(g, limit, cover, out);
                    cover.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    grow(g, limit, &mut Vec::new(), &mut out);
    out
}

/// True iff some member of `family` is a subgraph of `g`.
pub fn contains_family_member(g: &Graph, family: &[Graph]) -> Result<bool> {
    Ok(!is_family_free(g, family)?)
}

/// Canonical keys of a list of graphs, for set comparisons in tests and
/// reports.
pub fn family_forms(graphs: &[Graph]) -> Result<Vec<CanonicalForm>> {
    let mut forms = graphs.iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
    forms.sort();
    Ok(forms)
}
