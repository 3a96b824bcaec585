//! JSON documents for the command-line front end.
//!
//! Every document is an object carrying `"schema": 1` and the producing
//! command. Graphs are always graph6 strings. Wall-clock fields
//! (`generated_at`, `elapsed_ms`) are dropped in deterministic mode so that
//! identical invocations give byte-identical output.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::constructions::ExtremalCandidate;
use crate::decomposition::{DecompositionFamily, ForbiddenFamily};
use crate::formula::{choose2, t_count, Base, Evaluation, Term};
use crate::graph::{encode_graph6, Graph};
use crate::search::SearchReport;
use crate::tree::TreeAnalysis;

/// Version of every JSON document emitted by this crate.
pub const SCHEMA_VERSION: u32 = 1;

const VOLATILE_KEYS: [&str; 2] = ["generated_at", "elapsed_ms"];

pub(crate) fn graph6<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&encode_graph6(g))
}

pub(crate) fn graph6_list<S: Serializer>(graphs: &[Graph], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(graphs.iter().map(encode_graph6))
}

/// Wraps `payload` (which must serialize to an object) in the versioned
/// envelope.
pub fn envelope<T: Serialize>(command: &str, payload: &T, deterministic: bool) -> Value {
    let mut doc = Map::new();
    doc.insert("schema".into(), SCHEMA_VERSION.into());
    doc.insert("command".into(), command.into());
    match serde_json::to_value(payload).expect("report types serialize infallibly") {
        Value::Object(fields) => doc.extend(fields),
        other => {
            doc.insert("result".into(), other);
        }
    }
    if deterministic {
        let mut value = Value::Object(doc);
        strip_volatile(&mut value);
        value
    } else {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        doc.insert("generated_at".into(), secs.into());
        Value::Object(doc)
    }
}

fn strip_volatile(value: &mut Value) {
    match value {
        Value::Object(map) => {
            for key in VOLATILE_KEYS {
                map.remove(key);
            }
            map.values_mut().for_each(strip_volatile);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_volatile),
        _ => {}
    }
}

/// Tree invariants, with both bipartition class sizes spelled out.
pub fn analyze(analysis: &TreeAnalysis, deterministic: bool) -> Value {
    let payload = json!({
        "tree": encode_graph6(&analysis.tree),
        "n": analysis.tree.order(),
        "edges": analysis.tree.edge_count(),
        "classA": analysis.class_a_size(),
        "classB": analysis.class_b_size(),
        "analysis": analysis,
    });
    let mut doc = envelope("analyze", &payload, deterministic);
    // promote the headline invariants for easy scripting
    for key in ["alpha", "beta", "nu", "q"] {
        let v = doc["analysis"][key].clone();
        doc[key] = v;
    }
    doc
}

pub fn decompose(
    tree: &Graph,
    family: &DecompositionFamily,
    forbidden: &ForbiddenFamily,
    deterministic: bool,
) -> Value {
    let payload = json!({
        "tree": encode_graph6(tree),
        "members": family.members.len(),
        "graphs": family.graphs().iter().map(encode_graph6).collect::<Vec<_>>(),
        "family": family,
        "q": family.q_min,
        "forbidden": forbidden,
    });
    envelope("decompose", &payload, deterministic)
}

/// The pieces of the base value, so that `value` is the sum of
/// `base_terms` and `terms`.
fn base_terms(base: Base, n: u64, p: u64, q: u64) -> Vec<Term> {
    let apex = (q - 1) * (n + 1 - q);
    let mut out = vec![
        Term {
            name: "(q-1)(n-q+1)".into(),
            value: apex,
        },
        Term {
            name: "t(n-q+1,p)".into(),
            value: t_count(n + 1 - q, p).expect("validated by predict"),
        },
    ];
    if base == Base::H {
        out.push(Term {
            name: "C(q-1,2)".into(),
            value: choose2(q - 1),
        });
    }
    out
}

pub fn predict(tree: &Graph, eval: &Evaluation, deterministic: bool) -> Value {
    let pred = &eval.prediction;
    let payload = json!({
        "tree": encode_graph6(tree),
        "case": pred.case,
        "p": pred.p,
        "n": eval.n,
        "q": pred.q,
        "k": pred.analysis.whlm.k,
        "forbidden": pred.forbidden,
        "base": pred.base,
        "base_terms": base_terms(pred.base, eval.n, pred.p, pred.q),
        "base_value": eval.base_value,
        "terms": pred.terms,
        "value": eval.value,
        "overlap": pred.overlap,
        "asymptotic_only": pred.asymptotic_only,
        "n_min": eval.n_min,
        "warnings": eval.warnings,
    });
    envelope("predict", &payload, deterministic)
}

pub fn search(report: &SearchReport, deterministic: bool) -> Value {
    envelope("search", report, deterministic)
}

/// One entry of a `construct` manifest.
#[derive(Clone, Debug, Serialize)]
pub struct ManifestEntry {
    pub graph6_file: String,
    pub dot_file: String,
    pub vertices: usize,
    pub edges: usize,
    #[serde(flatten)]
    pub candidate: ExtremalCandidate,
}

pub fn construct(
    tree: &Graph,
    p: usize,
    n: usize,
    pattern_file: Option<&str>,
    entries: &[ManifestEntry],
    deterministic: bool,
) -> Value {
    let payload = json!({
        "tree": encode_graph6(tree),
        "p": p,
        "n": n,
        "pattern_file": pattern_file,
        "candidates": entries,
    });
    envelope("construct", &payload, deterministic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula;
    use crate::search::brute_ex;

    #[test]
    fn envelope_carries_schema_and_strips_clock_fields() {
        let report = brute_ex(4, &[Graph::complete(3)]).unwrap();
        let doc = search(&report, true);
        assert_eq!(doc["schema"], 1);
        assert_eq!(doc["command"], "search");
        assert_eq!(doc["ex_value"], 4);
        assert_eq!(doc["witnesses"], json!(["C]"]));
        assert!(doc.get("elapsed_ms").is_none() && doc.get("generated_at").is_none());

        let doc = search(&report, false);
        assert!(doc["elapsed_ms"].is_number() && doc["generated_at"].is_number());
    }

    #[test]
    fn analyze_headlines() {
        let a = TreeAnalysis::new(&Graph::double_broom(2, 2, 2).unwrap()).unwrap();
        let doc = analyze(&a, true);
        assert_eq!((doc["alpha"].as_u64(), doc["beta"].as_u64()), (Some(4), Some(2)));
        assert_eq!(doc["classA"], 3);
    }

    #[test]
    fn predict_value_is_sum_of_parts() {
        for (t, p, n) in [
            (Graph::double_broom(4, 2, 2).unwrap(), 3, 100),
            (Graph::path(4), 3, 50),
            (Graph::star(5), 4, 60),
        ] {
            let eval = formula::predict(&t, p, n, None).unwrap();
            let doc = predict(&t, &eval, true);
            let sum = |key: &str| {
                doc[key]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|t| t["value"].as_u64().unwrap())
                    .sum::<u64>()
            };
            assert_eq!(sum("base_terms"), doc["base_value"].as_u64().unwrap());
            assert_eq!(sum("base_terms") + sum("terms"), doc["value"].as_u64().unwrap());
        }
    }

    #[test]
    fn predict_broom_document() {
        let t = Graph::double_broom(4, 2, 2).unwrap();
        let doc = predict(&t, &formula::predict(&t, 3, 100, None).unwrap(), true);
        assert_eq!(doc["value"], 3398);
        assert_eq!(doc["case"], "NEW_THEOREM");
        assert_eq!(doc["forbidden"]["members"], json!(["Bw"]));
    }
}
