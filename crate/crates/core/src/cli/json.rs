//! JSON encodings shared by the subcommands. Objects use sorted keys, so
//! identical runs print identical bytes.

use serde_json::{json, Value};

use crate::bounds::{BoundReport, Surd};
use crate::curve::{CurveCheckReport, FiberWitness, GenusBounds};
use crate::exactnum::Rational;
use crate::exprio::{format_uni, format_value};
use crate::ratfunc::{ExtendedValue, FiberProfile};
use crate::sharing::{SharingReport, SharingStatus, SharingSummary};

pub fn rational(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn value(v: &ExtendedValue) -> Value {
    Value::String(format_value(v))
}

pub fn surd(s: &Surd) -> Value {
    json!({
        "rational_part": rational(&s.a),
        "sqrt_coefficient": rational(&s.b),
        "radicand": s.n.to_string(),
        "text": s.to_string(),
    })
}

pub fn bound_report(r: &BoundReport) -> Value {
    let terms: Vec<Value> = r
        .terms
        .iter()
        .map(|t| {
            json!({
                "name": t.name,
                "raw": surd(&t.raw),
                "integer_bound": t.integer_bound,
                "applicable": t.applicable,
                "citation": t.citation,
            })
        })
        .collect();
    let notes: Vec<Value> =
        r.notes.iter().map(|n| json!({ "text": n.text, "citation": n.citation })).collect();
    json!({
        "name": r.name,
        "terms": terms,
        "operative": r.operative,
        "flags": r.flags,
        "notes": notes,
    })
}

pub fn status(s: SharingStatus) -> Value {
    match s {
        SharingStatus::NotShared => json!({ "shared": false, "weight": null, "label": "not shared" }),
        SharingStatus::SharedWeight(m) => json!({ "shared": true, "weight": m, "label": format!("weight {m}") }),
        SharingStatus::SharedCM => json!({ "shared": true, "weight": "inf", "label": "CM" }),
    }
}

pub fn fiber(p: &FiberProfile) -> Value {
    let finite: Vec<Value> = p
        .finite_part
        .factors
        .iter()
        .map(|(f, k)| json!({ "factor": format_uni(f, "z"), "multiplicity": k }))
        .collect();
    json!({ "finite": finite, "infinity_multiplicity": p.infinity_multiplicity, "mass": p.mass() })
}

pub fn sharing_report(r: &SharingReport) -> Value {
    json!({
        "value": value(&r.value),
        "status": status(r.status),
        "vacuous": r.vacuous,
        "fiber_f1": fiber(&r.evidence.0),
        "fiber_f2": fiber(&r.evidence.1),
    })
}

pub fn sharing_summary(s: &SharingSummary) -> Value {
    json!({
        "reports": s.reports.iter().map(sharing_report).collect::<Vec<_>>(),
        "shared": s.shared,
        "weight_at_least_one": s.weight_at_least_one,
        "cm": s.cm,
        "functions_identical": s.functions_identical,
    })
}

pub fn witness(w: &FiberWitness) -> Value {
    let side = |s: &Option<(crate::exactnum::FieldElement, u32)>| match s {
        Some((c, k)) => json!({ "constant": c.to_string(), "exponent": k }),
        None => Value::Null,
    };
    json!({
        "value": w.value.to_string(),
        "verified": w.verified(),
        "x_side": side(&w.x_side),
        "y_side": side(&w.y_side),
    })
}

pub fn genus_bounds(g: &GenusBounds) -> Value {
    json!({ "castelnuovo": g.castelnuovo, "plane": g.plane, "operative": g.operative })
}

pub fn curve_report(r: &CurveCheckReport) -> Value {
    json!({
        "eisenstein": r.eisenstein.holds(),
        "eisenstein_failures": r.eisenstein.failures(),
        "map_degrees": [r.map_degrees.0, r.map_degrees.1],
        "fibers": r.fibers.iter().map(witness).collect::<Vec<_>>(),
        "fibers_verified": r.all_fibers_verified(),
        "cm_at_infinity": r.cm_at_infinity,
        "genus_bounds": match &r.genus_bounds {
            Ok(g) => genus_bounds(g),
            Err(e) => json!({ "error": e.to_string() }),
        },
    })
}
