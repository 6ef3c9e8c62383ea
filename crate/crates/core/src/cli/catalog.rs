//! Worked examples with their expected outcomes. Each entry recomputes its
//! facts from scratch and compares them with the published values.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde_json::{json, Value};

use super::{json as js, CliError};
use crate::bounds::{
    proposition8_parameters, sphere_puncture_bound, theorem5_bound, theorem9_bound, SurfaceParams,
};
use crate::curve::{
    check_curve, hyperelliptic_curve, normalize_for_theorem1a, normalize_for_theorem1b, superelliptic_family,
    superelliptic_genus, theorem1a_curve, theorem1b_curve, verify_rotation_sharing, verify_shared_fiber,
};
use crate::exactnum::{FieldDescriptor, FieldElement};
use crate::exprio::{infer_field, parse_ratfunc, parse_values};
use crate::poly::UniPoly;
use crate::ratfunc::{concyclic, ExtendedValue, MoebiusTransform, RationalFunction};
use crate::sharing::{classify_sharing, shared_value_scan_on, Domain, SharingStatus, SharingSummary};

/// Optional parameters; each entry reads the ones it understands.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogParams {
    pub m: Option<u32>,
    pub values: Option<String>,
    pub r: Option<u32>,
    pub points: Option<String>,
    pub d: Option<u32>,
    pub g: Option<u32>,
    pub s: Option<u32>,
}

impl CatalogParams {
    pub fn is_empty(&self) -> bool {
        *self == CatalogParams::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub citation: &'static str,
}

impl Fact {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug)]
pub struct CatalogOutcome {
    pub entry: &'static str,
    pub params: BTreeMap<String, String>,
    pub facts: Vec<Fact>,
    pub details: Value,
}

impl CatalogOutcome {
    fn new(entry: &'static str) -> Self {
        CatalogOutcome { entry, params: BTreeMap::new(), facts: Vec::new(), details: json!({}) }
    }

    fn param(&mut self, key: &str, v: impl Display) {
        self.params.insert(key.to_string(), v.to_string());
    }

    fn expect(&mut self, name: impl Into<String>, expected: impl Display, actual: impl Display, citation: &'static str) {
        self.facts.push(Fact {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            citation,
        });
    }

    fn detail(&mut self, key: &str, v: Value) {
        self.details.as_object_mut().expect("details is an object").insert(key.to_string(), v);
    }

    pub fn passed(&self) -> bool {
        self.facts.iter().all(Fact::ok)
    }

    pub fn mismatches(&self) -> Vec<&Fact> {
        self.facts.iter().filter(|f| !f.ok()).collect()
    }
}

pub struct Ctx {
    pub limit: u32,
}

pub type EntryFn = fn(&CatalogParams, &Ctx) -> Result<CatalogOutcome, CliError>;

#[derive(Clone, Copy)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub summary: &'static str,
    /// Parameters the entry accepts.
    pub accepts: &'static [&'static str],
    pub run: EntryFn,
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry { id: "ex4a", summary: "z and zeta_r z on the sphere minus the r-th roots of unity", accepts: &["r"], run: ex4a },
        CatalogEntry { id: "ex4b", summary: "T and zeta_3 T on the sphere minus three points", accepts: &["points"], run: ex4b },
        CatalogEntry { id: "ex4c", summary: "six shared values on the sphere minus r >= 4 points", accepts: &["points"], run: ex4c },
        CatalogEntry { id: "ex4d", summary: "hyperelliptic projection and its rotation", accepts: &["points", "r"], run: ex4d },
        CatalogEntry { id: "ex7", summary: "five punctures not on a circle", accepts: &["points"], run: ex7 },
        CatalogEntry { id: "ex12", summary: "weighted sharing with weights (inf, m, 0)", accepts: &["m"], run: ex12 },
        CatalogEntry { id: "thm1a", summary: "Eisenstein curve where X and Y share n values", accepts: &["values"], run: thm1a },
        CatalogEntry { id: "thm1b", summary: "Eisenstein curve where X and Y share n-1 values and inf CM", accepts: &["values"], run: thm1b },
        CatalogEntry { id: "rem10c", summary: "superelliptic curves Y^d = f(X)", accepts: &["d", "m", "r"], run: rem10c },
        CatalogEntry { id: "prop8", summary: "puncture count realizing the punctured-surface bound", accepts: &["g", "d", "s"], run: prop8 },
    ]
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn field_for(texts: &[&str], order: u32, ctx: &Ctx) -> Result<FieldDescriptor, CliError> {
    let inferred = infer_field(texts, ctx.limit)?;
    let base = inferred.order().unwrap_or(1);
    let lcm = num_integer::lcm(base, order.max(1));
    if lcm <= 2 {
        return Ok(FieldDescriptor::rationals());
    }
    Ok(FieldDescriptor::cyclotomic_with_limit(lcm, ctx.limit)?)
}

fn root_points(zeta: &FieldElement, r: u32) -> Vec<ExtendedValue> {
    (0..r).map(|k| zeta.pow(k).into()).collect()
}

fn summary_detail(s: &SharingSummary) -> Value {
    js::sharing_summary(s)
}

fn ex4a(p: &CatalogParams, ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("ex4a");
    let rs = match p.r {
        Some(r) if r < 2 => return Err(usage("ex4a needs r >= 2")),
        Some(r) => vec![r],
        None => vec![2, 3, 4, 6],
    };
    out.param("r", rs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","));
    for r in rs {
        let field = field_for(&[], r, ctx)?;
        let zeta = FieldElement::root_of_unity(&field, r)?;
        let f1 = RationalFunction::identity(&field);
        let f2 = RationalFunction::polynomial(UniPoly::monomial(zeta.clone(), 1));
        let roots = root_points(&zeta, r);
        let mut candidates = vec![ExtendedValue::Infinity, FieldElement::zero(&field).into()];
        candidates.extend(roots.iter().cloned());
        let s = shared_value_scan_on(&Domain::punctured(roots)?, &f1, &f2, &candidates)?;
        out.expect(format!("r={r}: shared values"), r + 2, s.shared, "Examples 4 a)");
        out.expect(format!("r={r}: CM values"), r + 2, s.cm, "Examples 4 a)");
        let bound = sphere_puncture_bound(r as u64, None)?.operative.unwrap_or(-1);
        out.expect(format!("r={r}: bound is attained"), r + 2, bound, "Corollary 6");
        out.detail(&format!("r={r}"), summary_detail(&s));
    }
    Ok(out)
}

fn points_or(p: &CatalogParams, default: &str) -> String {
    p.points.clone().unwrap_or_else(|| default.to_string())
}

fn ex4b(p: &CatalogParams, ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("ex4b");
    let text = points_or(p, "0,1,inf");
    out.param("points", &text);
    let field = field_for(&[&text], 3, ctx)?;
    let pts = parse_values(&text, &field)?;
    if pts.len() != 3 {
        return Err(usage(format!("ex4b needs exactly 3 points, got {}", pts.len())));
    }
    let w = FieldElement::root_of_unity(&field, 3)?;
    let targets: Vec<ExtendedValue> = root_points(&w, 3);
    let t = MoebiusTransform::through(
        [&pts[0], &pts[1], &pts[2]],
        [&targets[0], &targets[1], &targets[2]],
    )?;
    let zero = FieldElement::zero(&field);
    let rot = MoebiusTransform::new(w.clone(), zero.clone(), zero.clone(), FieldElement::one(&field))?;
    let f1 = t.to_rational_function();
    let f2 = rot.compose(&t).to_rational_function();
    let mut candidates = vec![ExtendedValue::Infinity, zero.into()];
    candidates.extend(targets);
    let s = shared_value_scan_on(&Domain::punctured(pts)?, &f1, &f2, &candidates)?;
    out.expect("shared values", 5, s.shared, "Examples 4 b)");
    out.expect("CM values", 5, s.cm, "Examples 4 b)");
    let bound = sphere_puncture_bound(3, None)?.operative.unwrap_or(-1);
    out.expect("bound is attained", 5, bound, "Corollary 6");
    out.detail("T", json!(t.to_string()));
    out.detail("scan", summary_detail(&s));
    Ok(out)
}

fn ex4c(p: &CatalogParams, ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("ex4c");
    let text = points_or(p, "0,1,2,-1");
    out.param("points", &text);
    let field = field_for(&[&text], 1, ctx)?;
    let pts = parse_values(&text, &field)?;
    if pts.len() < 4 {
        return Err(usage(format!("ex4c needs at least 4 points, got {}", pts.len())));
    }
    let one = FieldElement::one(&field);
    let zero = FieldElement::zero(&field);
    let t1 = MoebiusTransform::through(
        [&pts[0], &pts[1], &pts[2]],
        [&ExtendedValue::Infinity, &zero.clone().into(), &one.clone().into()],
    )?;
    let c = t1.apply(&pts[3]).finite().cloned().expect("fourth point differs from the first");
    let root = c
        .rational_sqrt()
        .ok_or_else(|| usage(format!("T1(P4) = {c} is not a square of a rational; choose other points")))?;
    let t2 = MoebiusTransform::new(one.clone(), root.clone(), one.clone(), -&root)?;
    let a = t2.apply(&one.clone().into()).finite().cloned().expect("sqrt(c) differs from 1");
    let f = t2.compose(&t1);
    let neg = MoebiusTransform::new(-&one, zero.clone(), zero.clone(), one.clone())?;
    let g = neg.compose(&f);
    let candidates: Vec<ExtendedValue> =
        vec![ExtendedValue::Infinity, zero.into(), one.clone().into(), (-&one).into(), a.clone().into(), (-&a).into()];
    let r = pts.len();
    let s = shared_value_scan_on(
        &Domain::punctured(pts.clone())?,
        &f.to_rational_function(),
        &g.to_rational_function(),
        &candidates,
    )?;
    out.expect("shared values", 6, s.shared, "Examples 4 c)");
    out.expect("CM values", 6, s.cm, "Examples 4 c)");
    let bound = sphere_puncture_bound(r as u64, Some(&pts))?.operative.unwrap_or(-1);
    out.expect("realized count within bound", "true", s.shared as i64 <= bound, "Corollary 6");
    out.detail("c", json!(c.to_string()));
    out.detail("a", json!(a.to_string()));
    out.detail("f", json!(f.to_string()));
    out.detail("scan", summary_detail(&s));
    Ok(out)
}

fn ex4d(p: &CatalogParams, ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("ex4d");
    let text = points_or(p, "1,i,-1,-i,2,3");
    let r = p.r.unwrap_or(4);
    out.param("points", &text);
    out.param("r", r);
    let field = field_for(&[&text], r, ctx)?;
    let pts: Vec<FieldElement> = parse_values(&text, &field)?
        .into_iter()
        .map(|v| v.finite().cloned().ok_or_else(|| usage("branch points must be finite")))
        .collect::<Result<_, _>>()?;
    let curve = hyperelliptic_curve(&pts)?;
    let check = verify_rotation_sharing(&curve, r)?;
    out.expect("genus", (pts.len() - 2) / 2, curve.genus().unwrap_or(0), "Examples 4 d)");
    out.expect("shared values", r + 2, check.summary.shared, "Examples 4 d)");
    out.expect("CM values", r + 2, check.summary.cm, "Examples 4 d)");
    out.detail("curve", json!(curve.to_string()));
    out.detail("scan", summary_detail(&check.summary));
    Ok(out)
}

fn ex7(p: &CatalogParams, ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("ex7");
    let sets: Vec<(String, String)> = match &p.points {
        Some(t) => vec![("points".into(), t.clone())],
        None => vec![
            ("unit circle".into(), "1,zeta(8),i,-1,-i".into()),
            ("one point moved to 2".into(), "1,zeta(8),i,-1,2".into()),
        ],
    };
    for (label, text) in sets {
        out.param(&label, &text);
        let field = field_for(&[&text], 1, ctx)?;
        let pts = parse_values(&text, &field)?;
        if pts.len() != 5 {
            return Err(usage(format!("ex7 needs exactly 5 points, got {}", pts.len())));
        }
        let on_circle = concyclic(&pts)?;
        let rep = sphere_puncture_bound(5, Some(&pts))?;
        let (expected, citation) = if on_circle { (7, "Corollary 6") } else { (6, "Example 7") };
        out.expect(format!("{label}: bound"), expected, rep.operative.unwrap_or(-1), citation);
        out.detail(&label, json!({ "concyclic": on_circle, "report": js::bound_report(&rep) }));
    }
    Ok(out)
}

pub const EX12_F1: &str = "-4*z^3/((z-1)^3*(z+1))";
pub const EX12_F2: &str = "-4*z/((z-1)*(z+1)^3)";

fn ex12(p: &CatalogParams, _ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("ex12");
    let m = p.m.unwrap_or(2);
    out.param("m", m);
    let q = FieldDescriptor::rationals();
    let f1 = parse_ratfunc(EX12_F1, &q)?;
    let f2 = parse_ratfunc(EX12_F2, &q)?;
    let power = RationalFunction::polynomial(UniPoly::monomial(FieldElement::one(&q), m as usize + 1));
    let (h1, h2) = (f1.compose(&power), f2.compose(&power));
    let values = [
        ("1", ExtendedValue::Finite(FieldElement::one(&q)), SharingStatus::SharedCM, SharingStatus::SharedCM),
        ("0", ExtendedValue::Finite(FieldElement::zero(&q)), SharingStatus::SharedWeight(0), SharingStatus::SharedWeight(m)),
        ("inf", ExtendedValue::Infinity, SharingStatus::SharedWeight(0), SharingStatus::SharedWeight(0)),
    ];
    let mut reports = Vec::new();
    for (name, v, base, composed) in values {
        let rb = classify_sharing(&f1, &f2, &v)?;
        let rc = classify_sharing(&h1, &h2, &v)?;
        out.expect(format!("f: value {name}"), base, rb.status, "Example 12");
        out.expect(format!("h (m={m}): value {name}"), composed, rc.status, "Example 12");
        reports.push(json!({ "value": name, "f": js::sharing_report(&rb), "h": js::sharing_report(&rc) }));
    }
    out.detail("f1", json!(f1.to_string()));
    out.detail("f2", json!(f2.to_string()));
    out.detail("reports", Value::Array(reports));
    Ok(out)
}

fn finite_values(text: &str, field: &FieldDescriptor) -> Result<Vec<ExtendedValue>, CliError> {
    Ok(parse_values(text, field)?)
}

fn fresh_value(values: &[FieldElement], field: &FieldDescriptor) -> FieldElement {
    (1i64..)
        .map(|k| FieldElement::from_integer(field, k))
        .find(|c| !values.contains(c))
        .expect("infinitely many integers")
}

fn thm1a(p: &CatalogParams, ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("thm1a");
    let text = p.values.clone().unwrap_or_else(|| "1,2".into());
    out.param("values", &text);
    let field = field_for(&[&text], 1, ctx)?;
    let (t, vals) = normalize_for_theorem1a(&finite_values(&text, &field)?)?;
    let n = vals.len() as u64;
    let curve = theorem1a_curve(&vals)?;
    let rep = check_curve(&curve, None);
    let verified = rep.fibers.iter().filter(|w| w.verified()).count();
    let fresh = fresh_value(&vals, &field);
    let c = "Theorem 1 a)";
    out.expect("Eisenstein in X", true, rep.eisenstein.holds(), c);
    out.expect("fibers verified", n, verified, c);
    out.expect(format!("fresh value {fresh} verified"), false, verify_shared_fiber(&curve, &fresh).verified(), c);
    out.expect("map degrees", format!("({}, {})", n + 1, n + 1), format!("{:?}", rep.map_degrees), c);
    out.expect("castelnuovo genus bound", n * n, rep.genus_bounds.as_ref().map(|g| g.castelnuovo).unwrap_or(0), c);
    out.detail("transform", json!(t.to_string()));
    out.detail("curve", json!(curve.to_string()));
    out.detail("report", js::curve_report(&rep));
    Ok(out)
}

fn thm1b(p: &CatalogParams, ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("thm1b");
    let text = p.values.clone().unwrap_or_else(|| "1,2".into());
    out.param("values", &text);
    let field = field_for(&[&text], 1, ctx)?;
    let (t, vals) = normalize_for_theorem1b(&finite_values(&text, &field)?, &ExtendedValue::Infinity)?;
    let n = vals.len() as u64 + 1;
    let curve = theorem1b_curve(&vals)?;
    let rep = check_curve(&curve, None);
    let verified = rep.fibers.iter().filter(|w| w.verified()).count();
    let c = "Theorem 1 b)";
    out.expect("Eisenstein in X", true, rep.eisenstein.holds(), c);
    out.expect("fibers verified", n - 1, verified, c);
    out.expect("CM at infinity", "Some(true)", format!("{:?}", rep.cm_at_infinity), c);
    out.expect("total degree", 2 * n - 1, curve.poly().total_degree().unwrap_or(0), c);
    out.expect("plane genus bound", (n - 1) * (2 * n - 3), rep.genus_bounds.as_ref().map(|g| g.plane).unwrap_or(0), c);
    out.detail("transform", json!(t.to_string()));
    out.detail("curve", json!(curve.to_string()));
    out.detail("report", js::curve_report(&rep));
    Ok(out)
}

fn rem10c(p: &CatalogParams, ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("rem10c");
    let d = p.d.unwrap_or(3);
    let m = p.m.unwrap_or(2);
    let r = p.r.unwrap_or(m * d);
    out.param("d", d);
    out.param("m", m);
    out.param("r", r);
    if r < 2 {
        return Err(usage("r must be at least 2"));
    }
    let field = field_for(&[], r, ctx)?;
    let one = FieldElement::one(&field);
    let xr1 = &UniPoly::monomial(one.clone(), r as usize) - &UniPoly::constant(one.clone());
    let md = (m * d) as usize;
    let f = if md % r as usize == 0 {
        &UniPoly::monomial(one.clone(), md) - &UniPoly::constant(one)
    } else {
        let extra: Vec<FieldElement> =
            (2..).take(md.saturating_sub(r as usize)).map(|k| FieldElement::from_integer(&field, k)).collect();
        &xr1 * &UniPoly::from_roots(&field, &extra)
    };
    let curve = superelliptic_family(d, m, r, &f)?;
    let g = curve.genus().unwrap_or(0);
    let c = "Remark 10 c)";
    let expected_g = (d as u64 - 1) * (m as u64 * d as u64 - 2) / 2;
    out.expect("genus", expected_g, g, c);
    // md = 2g/(d − 1) + 2, cleared of denominators
    let identity = (m as u64 * d as u64 - 2) * (d as u64 - 1) == 2 * superelliptic_genus(d, m);
    out.expect("md = 2g/(d-1) + 2", true, identity, c);
    let check = verify_rotation_sharing(&curve, r)?;
    out.expect("shared values", r + 2, check.summary.shared, c);
    let t9 = theorem9_bound(SurfaceParams::new(g, d as u64, r as u64))?;
    out.expect("Theorem 9 bound attained", r + 2, t9.operative.unwrap_or(-1), "Theorem 9");
    out.detail("curve", json!(curve.to_string()));
    out.detail("scan", summary_detail(&check.summary));
    Ok(out)
}

fn prop8(p: &CatalogParams, _ctx: &Ctx) -> Result<CatalogOutcome, CliError> {
    let mut out = CatalogOutcome::new("prop8");
    let (g, d, s) = (p.g.unwrap_or(2), p.d.unwrap_or(3), p.s.unwrap_or(4));
    out.param("g", g);
    out.param("d", d);
    out.param("s", s);
    let res = proposition8_parameters(g as u64, d as u64, s as u64)?;
    let c = "Proposition 8";
    let expected_r = d as i64 * s as i64 - (2 * d as i64 + 2 * g as i64 - 2);
    out.expect("r", expected_r, res.r, c);
    out.expect("shared values", s + 2, res.shared_count, c);
    out.expect("s + 2 = 4 + (2g - 2 + r)/d", true, res.identity_holds, c);
    let p5 = SurfaceParams::new(g as u64, d as u64, res.r);
    if let Ok(t5) = theorem5_bound(p5) {
        out.expect("Theorem 5 bound attained", s + 2, t5.operative.unwrap_or(-1), "Theorem 5");
    }
    Ok(out)
}
