//! Structured reports. Every report is a JSON value with a
//! `schema_version` field; the text format is rendered from the same value,
//! so both carry identical content.

use serde_json::{json, Map, Value};

use crate::analysis::{Analysis, OrbitSummary, RankInvariance};
use crate::catalog::EntryRun;
use crate::liealg::LieAlgebra;
use crate::linalg::{format_vector, Matrix, Subspace, Vector};
use crate::normalizer::NormalizerReport;
use crate::problem::{matrix_to_value, rational_to_value, SCHEMA_VERSION};
use crate::spherical::{LstReport, SearchOutcome, TransitivityReport, TransitivityVerdict};

pub fn envelope(command: &str, name: &str, body: Map<String, Value>) -> Value {
    let mut obj = Map::new();
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("command".into(), json!(command));
    obj.insert("name".into(), json!(name));
    obj.extend(body);
    Value::Object(obj)
}

pub fn vector_value(v: &Vector) -> Value {
    Value::Array(v.iter().map(rational_to_value).collect())
}

/// A subspace of `g` as the list of its echelon basis elements, written as matrices.
pub fn subspace_value(g: &LieAlgebra, s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| matrix_to_value(&g.matrix(v))).collect())
}

fn element_value(g: &LieAlgebra, v: &Vector) -> Value {
    matrix_to_value(&g.matrix(v))
}

pub fn lst_value(g: &LieAlgebra, lst: &LstReport) -> Value {
    let mut obj = Map::new();
    obj.insert("spherical".into(), json!(lst.is_spherical));
    obj.insert("defect".into(), json!(lst.defect));
    obj.insert("candidates_passing".into(), json!(lst.candidates_passing));
    obj.insert("adapted_subset".into(), json!(lst.adapted));
    if let Some(checks) = &lst.checks {
        let flags: Map<String, Value> = checks.named().iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        obj.insert("checks".into(), Value::Object(flags));
    }
    if let Some(frame) = &lst.frame {
        obj.insert("levi_aligned".into(), json!(frame.aligned));
        obj.insert("characteristic_element".into(), element_value(g, &frame.x_s));
        obj.insert("levi_conjugator".into(), element_value(g, &frame.conjugator));
        obj.insert("dim_l".into(), json!(frame.parabolic.l.dim()));
        obj.insert("dim_u".into(), json!(frame.parabolic.u.dim()));
        obj.insert("dim_l_n".into(), json!(frame.fine.l_n.dim()));
        obj.insert("dim_l_c".into(), json!(frame.fine.l_c.dim()));
    }
    if let (Some(a_h), Some(a_z)) = (&lst.a_h, &lst.a_z) {
        obj.insert("a_h".into(), subspace_value(g, a_h));
        obj.insert("a_Z".into(), subspace_value(g, a_z));
    }
    obj.insert("rank".into(), json!(lst.rank));
    Value::Object(obj)
}

pub fn normalizer_value(g: &LieAlgebra, n: &NormalizerReport) -> Value {
    json!({
        "n_tilde": subspace_value(g, &n.n_tilde),
        "dim_n_tilde": n.n_tilde.dim(),
        "c_tilde": subspace_value(g, &n.c_tilde),
        "a_tilde": subspace_value(g, &n.a_tilde),
        "m_tilde": subspace_value(g, &n.m_tilde),
        "split_ok": n.split_ok,
        "elementary_ok": n.elementary_ok,
        "self_normalizing_ok": n.self_normalizing_ok,
        "same_adapted_ok": n.same_adapted_ok,
    })
}

pub fn orbit_value(g: &LieAlgebra, o: &OrbitSummary) -> Value {
    json!({
        "forward_samples": o.forward.samples,
        "forward_passed": o.forward.passed,
        "witness": o.forward.witness.as_ref().map(|w| element_value(g, w)),
        "round_trips": o.round_trips,
        "round_trip_failures": o.round_trip_failures,
        "passed": o.ok(),
    })
}

pub fn search_value(g: &LieAlgebra, s: &SearchOutcome) -> Value {
    match s {
        SearchOutcome::Found { attempts, pair, .. } => json!({
            "found": true,
            "attempts": attempts,
            "conjugated_h": subspace_value(g, &pair.h),
        }),
        SearchOutcome::Inconclusive { attempts } => json!({ "found": false, "attempts": attempts, "verdict": "inconclusive" }),
    }
}

pub fn transitivity_value(t: &TransitivityReport) -> Value {
    let verdict = match t.verdict {
        TransitivityVerdict::ConsistentWithCompact => "consistent-with-compact",
        TransitivityVerdict::WitnessOfNoncompactness => "witness-of-noncompactness",
        TransitivityVerdict::Inconclusive => "inconclusive",
    };
    json!({
        "compact_type": t.compact_type,
        "verdict": verdict,
        "samples_checked": t.samples_checked,
        "witness_index": t.witness_index,
        "witness": t.witness.as_ref().map(matrix_to_value),
    })
}

pub fn rank_invariance_value(r: &RankInvariance) -> Value {
    json!({
        "base_rank": r.base_rank,
        "conjugate_ranks": r.conjugate_ranks,
        "rejected": r.rejected,
        "invariant": r.invariant(),
    })
}

pub fn roots_value(analysis: &Analysis) -> Value {
    let cd = &analysis.pair.cd;
    json!({
        "dim_g": analysis.pair.g.dim(),
        "dim_a": cd.a.dim(),
        "dim_m": cd.m.dim(),
        "dim_n": cd.n.dim(),
        "positive_roots": cd.positive_roots().map(|r| format_vector(&r.values)).collect::<Vec<_>>(),
        "simple_roots": cd.simple_roots().map(|r| format_vector(&r.values)).collect::<Vec<_>>(),
    })
}

pub fn analysis_body(analysis: &Analysis) -> Map<String, Value> {
    let g = &analysis.pair.g;
    let mut obj = Map::new();
    obj.insert("base_point".into(), json!({ "spherical": analysis.base.spherical, "defect": analysis.base.defect }));
    obj.insert("conjugate_search".into(), analysis.search.as_ref().map(|s| search_value(g, s)).unwrap_or(Value::Null));
    obj.insert("roots".into(), roots_value(analysis));
    obj.insert("local_structure".into(), lst_value(g, &analysis.lst));
    obj.insert("normalizer".into(), analysis.normalizer.as_ref().map(|n| normalizer_value(g, n)).unwrap_or(Value::Null));
    obj.insert("orbit".into(), analysis.orbit.as_ref().map(|o| orbit_value(g, o)).unwrap_or(Value::Null));
    obj.insert("passed".into(), json!(analysis.ok()));
    obj
}

pub fn entry_value(run: &EntryRun) -> Value {
    let mut body = analysis_body(&run.analysis);
    body.insert("mismatches".into(), json!(run.mismatches));
    body.insert("passed".into(), json!(run.passed()));
    envelope("catalog run", run.name, body)
}

/// Indented `key: value` rendering of a report value.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_flat),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if is_flat(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(val)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_into(val, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_into(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

pub fn matrix_text(m: &Matrix) -> String {
    inline(&matrix_to_value(m))
}
