//! Text and JSON rendering.

use serde_json::{json, Map, Value};
use swfold_core::obstruction::{SearchResult, StabilizationNote};
use swfold_core::{Basis, Exponent, KnotRecord, LaurentPoly, ThreeManifold};

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Copy of `v` with every object's keys inserted in sorted order.
pub fn sorted(v: &Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            let mut out = Map::new();
            for k in keys {
                out.insert(k.clone(), sorted(&map[k]));
            }
            Value::Object(out)
        }
        Value::Array(items) => Value::Array(items.iter().map(sorted).collect()),
        other => other.clone(),
    }
}

pub fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(&sorted(v)).expect("JSON values always serialize")
}

/// Monomial text for a spin^c class label, e.g. `m1^2*m2^-2` or `1`.
pub fn class_text(basis: &Basis, e: &Exponent) -> String {
    LaurentPoly::monomial(basis, 1, e.clone())
        .map(|p| p.to_text())
        .unwrap_or_else(|_| e.to_string())
}

pub fn unit_classes_json(basis: &Basis, units: &[(Exponent, i64)]) -> Value {
    Value::Array(
        units
            .iter()
            .map(|(e, c)| {
                json!({
                    "class": class_text(basis, e),
                    "exponent": e.to_vec(),
                    "coefficient": c,
                })
            })
            .collect(),
    )
}

pub fn manifold_header(m: &ThreeManifold) -> String {
    format!(
        "manifold: {}\nconstruction: {}\nbasis: {}\nb1: {}\nfibered: {}\n",
        m.name,
        m.provenance_text(),
        m.basis,
        m.b1,
        m.fibered
    )
}

pub fn manifold_json(m: &ThreeManifold) -> Value {
    json!({
        "manifold": m.name,
        "provenance": m.provenance,
        "basis": m.basis.names(),
        "b1": m.b1,
        "fibered": m.fibered,
    })
}

pub fn knot_text(k: &KnotRecord) -> String {
    let seifert = match &k.seifert {
        Some(v) => format!("{:?}", v.rows()),
        None => "-".into(),
    };
    format!(
        "{}: alexander = {}, fibered = {}, seifert = {}",
        k.name, k.alexander, k.fibered, seifert
    )
}

pub fn knot_json(k: &KnotRecord) -> Value {
    json!({
        "name": k.name,
        "alexander": k.alexander.to_text(),
        "fibered": k.fibered,
        "seifert": k.seifert.as_ref().map(|v| v.rows()),
    })
}

pub fn search_text(m: &ThreeManifold, r: &SearchResult, note: &StabilizationNote) -> String {
    let mut out = manifold_header(m);
    out += &format!(
        "box: {} ({} Euler classes, one per ±pair)\n",
        r.bound,
        r.entries.len()
    );
    let width = r
        .entries
        .iter()
        .map(|e| e.chi.to_text().len())
        .max()
        .unwrap_or(3)
        .max(3);
    out += &format!(
        "{:<width$}  {:<10}  {:<9}  {:<16}  units\n",
        "chi", "obstructed", "injective", "digest"
    );
    for e in &r.entries {
        out += &format!(
            "{:<width$}  {:<10}  {:<9}  {:<16}  {}\n",
            e.chi.to_text(),
            yes_no(e.obstructed),
            yes_no(e.injective),
            e.digest,
            e.unit_classes.len()
        );
    }
    out += &format!("all obstructed: {}\n", yes_no(r.all_obstructed));
    out += &format!("note: {}", note.to_string().replace('\n', "\nnote: "));
    out
}

pub fn search_json(m: &ThreeManifold, r: &SearchResult, note: &StabilizationNote) -> Value {
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "chi": e.chi.to_text(),
                "chi_vector": e.chi.vector().to_vec(),
                "obstructed": e.obstructed,
                "injective": e.injective,
                "unit_classes": unit_classes_json(&m.basis, &e.unit_classes),
                "digest": e.digest,
                "sw4": e.folded.to_text(),
            })
        })
        .collect();
    json!({
        "command": "search",
        "manifold": m.name,
        "basis": m.basis.names(),
        "box": r.bound,
        "count": r.entries.len(),
        "all_obstructed": r.all_obstructed,
        "entries": entries,
        "stabilization": {
            "text": note.to_string(),
            "collision_radius": note.collision_radius,
            "collision_classes": note.collision_classes.len(),
            "box_covers_collisions": note.box_covers_collisions(),
            "unfolded_has_units": note.unfolded_has_units,
        },
    })
}
