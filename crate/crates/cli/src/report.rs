//! Deterministic report assembly.
//!
//! Reports serialize through `serde_json::Value`, whose object type is a
//! sorted map, so two runs over the same instance produce byte-identical
//! JSON except for the segregated `timing_ms` field.

use serde_json::{json, Value};

use coring_core::algebra::AlgElement;
use coring_core::cohomology::{
    AbGroupPresentation, Coset, GroupH1, HarrisonH1, SweedlerCocycle, UnitSearch,
};
use coring_core::comodule::CanonicalMapReport;
use coring_core::coring::{Coring, CoringElement, Grouplike, Invertibility};
use coring_core::field::Scalar;
use coring_core::hopf::GroupElt;

pub struct Report {
    pub command: String,
    pub path: String,
    pub sha256: String,
    pub window: (i64, i64),
    pub cap: u64,
    pub result: Value,
    pub violations: Vec<String>,
    pub timing_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "instance": { "path": self.path, "sha256": self.sha256 },
            "options": { "window": [self.window.0, self.window.1], "cap": self.cap },
            "result": self.result,
            "violations": self.violations,
            "timing_ms": self.timing_ms,
        })
    }

    /// Short human-readable summary; one fact per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!(
            "instance: {} (sha256 {})\n",
            self.path,
            &self.sha256[..12]
        ));
        out.push_str(&format!(
            "options: window {}..{}, cap {}\n",
            self.window.0, self.window.1, self.cap
        ));
        render_text(&self.result, 0, &mut out);
        if self.violations.is_empty() {
            out.push_str("violations: none\n");
        } else {
            out.push_str("violations:\n");
            for v in &self.violations {
                out.push_str(&format!("  - {v}\n"));
            }
        }
        out.push_str(&format!("timing_ms: {}\n", self.timing_ms));
        out
    }
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {v}\n")),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {item}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{value}\n")),
    }
}

pub fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Mod(r) => json!(r),
        Scalar::Rat(_) => json!(s.to_string()),
    }
}

pub fn alg_element_json(c: &Coring, a: &AlgElement) -> Value {
    json!({
        "coeffs": a.iter().map(scalar_json).collect::<Vec<_>>(),
        "pretty": c.coaction().algebra().format_element(a),
    })
}

fn key_json(c: &Coring, k: GroupElt) -> Value {
    let raw = match k {
        GroupElt::Int(d) => d,
        GroupElt::Fin(i) => i as i64,
    };
    json!({ "h": raw, "name": c.coaction().hopf().key_name(k) })
}

pub fn coring_element_json(c: &Coring, x: &CoringElement) -> Value {
    let support: Vec<Value> = x
        .support()
        .iter()
        .map(|(k, v)| {
            json!({
                "key": key_json(c, *k),
                "coeffs": v.iter().map(scalar_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "support": support, "pretty": c.format_element(x) })
}

pub fn grouplike_json(c: &Coring, g: &Grouplike) -> Value {
    let (verdict, inverse) = match &g.invertibility {
        Invertibility::Invertible(inv) => ("invertible", Some(coring_element_json(c, inv))),
        Invertibility::NotInvertible => ("not_invertible", None),
        Invertibility::UnknownWithinWindow => ("unknown_within_window", None),
    };
    json!({
        "element": coring_element_json(c, &g.element),
        "invertibility": verdict,
        "inverse": inverse,
    })
}

pub fn presentation_json(p: &AbGroupPresentation) -> Value {
    json!({
        "invariant_factors": p.invariant_factors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "free_rank": p.free_rank,
        "pretty": p.to_string(),
        "generator_count": p.generator_labels.len(),
    })
}

pub fn coring_coset_json(c: &Coring, coset: &Coset<CoringElement>) -> Value {
    json!({
        "representative": coring_element_json(c, &coset.representative),
        "members": coset.members.iter().map(|m| c.format_element(m)).collect::<Vec<_>>(),
        "contains_identity": coset.contains_identity,
    })
}

pub fn harrison_json(c: &Coring, h: &HarrisonH1) -> Value {
    json!({
        "group": presentation_json(&h.group),
        "cosets": h.cosets.iter().map(|co| coring_coset_json(c, co)).collect::<Vec<_>>(),
        "grouplike_count": h.grouplike_count,
        "coboundary_count": h.coboundary_count,
        "window": [h.window.0, h.window.1],
        "window_relative": h.window_relative,
    })
}

pub fn cocycle_json(c: &Coring, z: &SweedlerCocycle) -> Value {
    let alg = c.coaction().algebra();
    json!(z
        .values
        .iter()
        .map(|v| alg.format_element(v))
        .collect::<Vec<_>>())
}

pub fn group_h1_json(c: &Coring, g: &GroupH1) -> Value {
    json!({
        "group": presentation_json(&g.group),
        "cocycle_count": g.cocycles.len(),
        "coboundary_count": g.coboundaries.len(),
        "cocycles": g.cocycles.iter().map(|z| cocycle_json(c, z)).collect::<Vec<_>>(),
        "cosets": g.cosets.iter().map(|co| json!({
            "representative": cocycle_json(c, &co.representative),
            "size": co.members.len(),
            "contains_identity": co.contains_identity,
        })).collect::<Vec<_>>(),
    })
}

pub fn canonical_map_json(r: &CanonicalMapReport) -> Value {
    json!({
        "domain_dim": r.domain_dim,
        "codomain_dim": r.codomain_dim,
        "rank": r.rank,
        "injective": r.injective,
        "surjective": r.surjective,
        "bijective": r.bijective,
        "codomain_restricted": r.codomain_restricted,
    })
}

pub fn unit_search_json(c: &Coring, u: &UnitSearch) -> Value {
    match u {
        UnitSearch::Found(a) => json!({ "verdict": "found", "unit": alg_element_json(c, a) }),
        UnitSearch::NoneExists => json!({ "verdict": "none" }),
        UnitSearch::Unknown => json!({ "verdict": "unknown" }),
    }
}
