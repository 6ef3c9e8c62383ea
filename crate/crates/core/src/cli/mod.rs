//! Command line front end.
//!
//! Subcommands print human-readable text, or a JSON object
//! `{command, inputs, results, citations}` with `--json`. Exit status is 0
//! on success, 1 when a verification does not match, and 2 on usage or
//! parse errors. `VSL_MAX_CYCLOTOMIC` raises the largest accepted
//! cyclotomic order.

pub mod catalog;
mod json;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bounds::{
    euler_characteristic, hurwitz_ramification_cap, is_hyperbolic, sphere_puncture_bound, theorem5_bound,
    theorem9_bound, theorem_a_bound, BoundReport, SurfaceParams,
};
use crate::curve::{
    check_curve, cm_at_infinity, normalize_for_theorem1a, normalize_for_theorem1b, theorem1a_curve,
    theorem1b_curve, PlaneCurve,
};
use crate::exactnum::{FieldDescriptor, DEFAULT_MAX_CYCLOTOMIC};
use crate::exprio::{format_value, infer_field, parse_bipoly, parse_field, parse_ratfunc, parse_values, ParseError};
use crate::ratfunc::ExtendedValue;
use crate::sharing::{candidate_values, shared_value_scan_on, Domain};
pub use catalog::{CatalogEntry, CatalogOutcome, CatalogParams, Fact};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "vsl", version, about = "Exact value-sharing computations for rational functions and plane curves")]
struct Cli {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Coefficient field: Q or zeta(r); inferred from the inputs when omitted
    #[arg(long, global = true)]
    field: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shared-value bounds for genus g, gonality d and r punctures
    Bounds(BoundsArgs),
    /// Build an Eisenstein curve on which X and Y share the given values
    Construct(ConstructArgs),
    /// Check that X and Y share values on a user curve F(X, Y) = 0
    Verify(VerifyArgs),
    /// Classify which values two rational functions of z share
    Share(ShareArgs),
    /// Run worked examples and compare with their expected outcomes
    Catalog(CatalogArgs),
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    g: u64,
    #[arg(long, default_value_t = 1)]
    d: u64,
    #[arg(long, default_value_t = 0)]
    r: u64,
    /// One of the shared values is shared CM
    #[arg(long)]
    cm: bool,
    /// The punctures, comma separated (sphere only)
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Thm1a,
    Thm1b,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    family: Family,
    #[arg(long, allow_hyphen_values = true)]
    values: String,
    /// The value shared CM (thm1b only)
    #[arg(long, allow_hyphen_values = true, default_value = "inf")]
    cm_value: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Polynomial in X and Y
    #[arg(long, allow_hyphen_values = true)]
    curve: String,
    #[arg(long, allow_hyphen_values = true)]
    values: String,
}

#[derive(Args, Debug)]
struct ShareArgs {
    #[arg(long, allow_hyphen_values = true)]
    f1: String,
    #[arg(long, allow_hyphen_values = true)]
    f2: String,
    /// Candidate values, comma separated; inf for infinity
    #[arg(long, allow_hyphen_values = true)]
    values: Option<String>,
    /// Add candidates found from rational points where f1 = f2
    #[arg(long)]
    discover: bool,
    /// Points removed from the sphere
    #[arg(long, allow_hyphen_values = true)]
    punctures: Option<String>,
    /// Exit with status 1 unless exactly this many values are shared
    #[arg(long)]
    expect_shared: Option<usize>,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    /// Entry to run; all entries when omitted
    entry: Option<String>,
    /// Weight exponent (ex12), or the degree multiple (rem10c)
    #[arg(long)]
    m: Option<u32>,
    /// Prescribed values (thm1a, thm1b)
    #[arg(long, allow_hyphen_values = true)]
    values: Option<String>,
    /// Number of roots of unity (ex4a, ex4d, rem10c)
    #[arg(long)]
    r: Option<u32>,
    /// Punctures or branch points (ex4b, ex4c, ex4d, ex7)
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// Gonality (rem10c, prop8)
    #[arg(long)]
    d: Option<u32>,
    /// Genus (prop8)
    #[arg(long)]
    g: Option<u32>,
    /// Degree of the map (prop8)
    #[arg(long)]
    s: Option<u32>,
}

/// A finished subcommand: JSON parts, text lines and exit status.
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub citations: BTreeSet<String>,
    pub text: Vec<String>,
    pub exit: i32,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            results: Value::Null,
            citations: BTreeSet::new(),
            text: Vec::new(),
            exit: EXIT_OK,
        }
    }

    fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn cite(&mut self, c: &str) {
        self.citations.insert(c.to_string());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "results": self.results,
            "citations": self.citations.iter().collect::<Vec<_>>(),
        })
    }
}

/// Largest cyclotomic order, from `VSL_MAX_CYCLOTOMIC` when set.
pub fn cyclotomic_limit() -> u32 {
    std::env::var("VSL_MAX_CYCLOTOMIC").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_CYCLOTOMIC)
}

fn select_field(explicit: Option<&str>, texts: &[&str], limit: u32) -> Result<FieldDescriptor, CliError> {
    match explicit {
        Some(f) => Ok(parse_field(f, limit)?),
        None => Ok(infer_field(texts, limit)?),
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let limit = cyclotomic_limit();
    let result = match &cli.command {
        Command::Bounds(a) => cmd_bounds(a, cli.field.as_deref(), limit),
        Command::Construct(a) => cmd_construct(a, cli.field.as_deref(), limit),
        Command::Verify(a) => cmd_verify(a, cli.field.as_deref(), limit),
        Command::Share(a) => cmd_share(a, cli.field.as_deref(), limit),
        Command::Catalog(a) => cmd_catalog(a, limit),
    };
    match result {
        Ok(report) => emit(&report, cli.json, out),
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(report: &Report, as_json: bool, out: &mut dyn Write) -> i32 {
    if as_json {
        let text = serde_json::to_string_pretty(&report.to_json()).expect("serializable");
        let _ = writeln!(out, "{text}");
    } else {
        for l in &report.text {
            let _ = writeln!(out, "{l}");
        }
    }
    report.exit
}

fn bound_lines(rep: &BoundReport, report: &mut Report) {
    let op = rep.operative.map_or("n/a".to_string(), |v| v.to_string());
    report.line(format!("{}: {op}", rep.name));
    for t in &rep.terms {
        report.cite(t.citation);
        let floor = t.integer_bound.map_or("n/a".to_string(), |v| v.to_string());
        let approx = if t.raw.as_rational().is_none() && t.raw.is_real() { format!(" ~ {:.4}", t.raw.to_f64()) } else { String::new() };
        report.line(format!("  {} = {}{approx} -> {floor} [{}]", t.name, t.raw, t.citation));
    }
    for (k, v) in &rep.flags {
        report.line(format!("  {k}: {v}"));
    }
    for n in &rep.notes {
        report.cite(n.citation);
        report.line(format!("  note: {} [{}]", n.text, n.citation));
    }
}

fn cmd_bounds(a: &BoundsArgs, field: Option<&str>, limit: u32) -> Result<Report, CliError> {
    let mut report = Report::new("bounds");
    report.input("g", a.g);
    report.input("d", a.d);
    report.input("r", a.r);
    report.input("cm", a.cm);
    if a.d == 0 {
        return Err(CliError::Usage("gonality d must be positive".into()));
    }
    let p = SurfaceParams::new(a.g, a.d, a.r);
    let points = match &a.points {
        None => None,
        Some(text) => {
            if a.g != 0 {
                return Err(CliError::Usage("--points only applies to the sphere (g = 0)".into()));
            }
            report.input("points", text.as_str());
            let f = select_field(field, &[text], limit)?;
            Some(parse_values(text, &f)?)
        }
    };
    let chi = euler_characteristic(p);
    report.line(format!(
        "chi = {chi} ({})",
        if is_hyperbolic(p) { "hyperbolic" } else { "not hyperbolic" }
    ));
    let mut reports = Vec::new();
    if a.r == 0 {
        reports.push(theorem_a_bound(a.g, a.d, a.cm)?);
    }
    if is_hyperbolic(p) {
        reports.push(theorem5_bound(p)?);
    }
    reports.push(theorem9_bound(p)?);
    if a.g == 0 {
        if a.d != 1 {
            return Err(crate::Error::GenusZeroGonality(a.d).into());
        }
        reports.push(sphere_puncture_bound(a.r, points.as_deref())?);
    }
    for rep in &reports {
        bound_lines(rep, &mut report);
    }
    let overall = reports.iter().filter_map(|r| r.operative).min();
    let cap = hurwitz_ramification_cap(a.g, a.d);
    report.line(format!("ramification of a degree-{} map: {cap}", a.d));
    report.line(format!("bound: {}", overall.map_or("none".to_string(), |v| v.to_string())));
    report.results = json!({
        "euler_characteristic": chi,
        "hyperbolic": is_hyperbolic(p),
        "reports": reports.iter().map(json::bound_report).collect::<Vec<_>>(),
        "hurwitz_ramification_cap": cap,
        "bound": overall,
    });
    Ok(report)
}

fn cmd_construct(a: &ConstructArgs, field: Option<&str>, limit: u32) -> Result<Report, CliError> {
    let mut report = Report::new("construct");
    let f = select_field(field, &[&a.values, &a.cm_value], limit)?;
    let values = parse_values(&a.values, &f)?;
    let (family, citation) = match a.family {
        Family::Thm1a => ("thm1a", "Theorem 1 a)"),
        Family::Thm1b => ("thm1b", "Theorem 1 b)"),
    };
    report.input("family", family);
    report.input("values", a.values.as_str());
    report.input("field", f.to_string());
    let (t, normalized, curve) = match a.family {
        Family::Thm1a => {
            let (t, v) = normalize_for_theorem1a(&values)?;
            let c = theorem1a_curve(&v)?;
            (t, v, c)
        }
        Family::Thm1b => {
            report.input("cm_value", a.cm_value.as_str());
            let cm = parse_values(&a.cm_value, &f)?;
            let [cm] = cm.as_slice() else {
                return Err(CliError::Usage("--cm-value takes a single value".into()));
            };
            let (t, v) = normalize_for_theorem1b(&values, cm)?;
            let c = theorem1b_curve(&v)?;
            (t, v, c)
        }
    };
    report.cite(citation);
    let check = check_curve(&curve, None);
    let ok = check.eisenstein.holds() && check.all_fibers_verified() && check.cm_at_infinity != Some(false);
    if !ok {
        report.exit = EXIT_MISMATCH;
    }
    report.line(format!("curve: {curve}"));
    report.line(format!("  {}", curve.descriptor()));
    report.line(format!("normalizing transform: {t}"));
    report.line(format!("Eisenstein in X: {}", check.eisenstein.holds()));
    report.line(format!("map degrees (X, Y): ({}, {})", check.map_degrees.0, check.map_degrees.1));
    for w in &check.fibers {
        report.line(format!("  value {}: {}", w.value, if w.verified() { "verified" } else { "unverified" }));
    }
    if let Some(cm) = check.cm_at_infinity {
        report.line(format!("CM at infinity: {cm}"));
    }
    if let Ok(g) = &check.genus_bounds {
        report.line(format!("genus <= {} (castelnuovo {}, plane {})", g.operative, g.castelnuovo, g.plane));
    }
    report.results = json!({
        "curve": curve.poly().to_string(),
        "descriptor": curve.descriptor(),
        "transform": t.to_string(),
        "normalized_values": normalized.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "report": json::curve_report(&check),
        "ok": ok,
    });
    Ok(report)
}

fn cmd_verify(a: &VerifyArgs, field: Option<&str>, limit: u32) -> Result<Report, CliError> {
    let mut report = Report::new("verify");
    let f = select_field(field, &[&a.curve, &a.values], limit)?;
    report.input("curve", a.curve.as_str());
    report.input("values", a.values.as_str());
    report.input("field", f.to_string());
    let curve = PlaneCurve::user_supplied(parse_bipoly(&a.curve, &f)?)?;
    let values = parse_values(&a.values, &f)?
        .into_iter()
        .map(|v| v.finite().cloned().ok_or_else(|| CliError::Usage("verify takes finite values only".into())))
        .collect::<Result<Vec<_>, _>>()?;
    let check = check_curve(&curve, Some(&values));
    let cm_inf = cm_at_infinity(&curve);
    if !check.all_fibers_verified() {
        report.exit = EXIT_MISMATCH;
    }
    report.cite("Theorem 1 a)");
    report.line(format!("curve: {curve}"));
    for w in &check.fibers {
        let status = match (&w.x_side, &w.y_side) {
            (Some((c, k)), Some((c2, k2))) => {
                format!("verified: F(a, Y) = ({c})*(Y - a)^{k}, F(X, a) = ({c2})*(X - a)^{k2}")
            }
            _ => "unverified".to_string(),
        };
        report.line(format!("  value {}: {status}", w.value));
    }
    report.line(format!("CM at infinity: {cm_inf}"));
    if let Ok(g) = &check.genus_bounds {
        report.line(format!("genus <= {} (castelnuovo {}, plane {})", g.operative, g.castelnuovo, g.plane));
    }
    let mut results = json::curve_report(&check);
    results["cm_at_infinity"] = json!(cm_inf);
    report.results = results;
    Ok(report)
}

const DISCOVERY_DISCLAIMER: &str =
    "discovered values are candidates only: the search covers rational points where f1 = f2";

fn cmd_share(a: &ShareArgs, field: Option<&str>, limit: u32) -> Result<Report, CliError> {
    let mut report = Report::new("share");
    let mut texts: Vec<&str> = vec![&a.f1, &a.f2];
    texts.extend(a.values.as_deref());
    texts.extend(a.punctures.as_deref());
    let f = select_field(field, &texts, limit)?;
    report.input("f1", a.f1.as_str());
    report.input("f2", a.f2.as_str());
    report.input("field", f.to_string());
    let f1 = parse_ratfunc(&a.f1, &f)?;
    let f2 = parse_ratfunc(&a.f2, &f)?;
    let mut candidates: Vec<ExtendedValue> = match &a.values {
        Some(v) => {
            report.input("values", v.as_str());
            parse_values(v, &f)?
        }
        None => Vec::new(),
    };
    if a.discover {
        report.input("discover", true);
        report.line(format!("note: {DISCOVERY_DISCLAIMER}"));
        for c in candidate_values(&f1, &f2)? {
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
    } else if a.values.is_none() {
        return Err(CliError::Usage("give --values, --discover, or both".into()));
    }
    let domain = match &a.punctures {
        Some(p) => {
            report.input("punctures", p.as_str());
            Domain::punctured(parse_values(p, &f)?)?
        }
        None => Domain::sphere(),
    };
    let summary = shared_value_scan_on(&domain, &f1, &f2, &candidates)?;
    report.line(format!("f1 = {f1}"));
    report.line(format!("f2 = {f2}"));
    if !domain.punctures().is_empty() {
        let list: Vec<String> = domain.punctures().iter().map(format_value).collect();
        report.line(format!("domain: sphere minus {{{}}}", list.join(", ")));
    }
    for r in &summary.reports {
        let vac = if r.vacuous { " (vacuous: taken by neither function)" } else { "" };
        report.line(format!("  {}: {}{vac}", format_value(&r.value), r.status));
    }
    report.line(format!(
        "shared: {} (weight >= 1: {}, CM: {}){}",
        summary.shared,
        summary.weight_at_least_one,
        summary.cm,
        if summary.functions_identical { "; the functions are identical" } else { "" }
    ));
    let mut results = json::sharing_summary(&summary);
    if a.discover {
        results["disclaimer"] = json!(DISCOVERY_DISCLAIMER);
    }
    if let Some(n) = a.expect_shared {
        report.input("expect_shared", n);
        if summary.shared != n {
            report.exit = EXIT_MISMATCH;
            report.line(format!("mismatch: expected {n} shared values"));
        }
    }
    report.results = results;
    Ok(report)
}

fn cmd_catalog(a: &CatalogArgs, limit: u32) -> Result<Report, CliError> {
    let params = CatalogParams {
        m: a.m,
        values: a.values.clone(),
        r: a.r,
        points: a.points.clone(),
        d: a.d,
        g: a.g,
        s: a.s,
    };
    let all = catalog::entries();
    let selected: Vec<CatalogEntry> = match &a.entry {
        None => {
            if !params.is_empty() {
                return Err(CliError::Usage("parameters need a catalog entry".into()));
            }
            all
        }
        Some(id) => {
            let e = all.into_iter().find(|e| e.id == id).ok_or_else(|| {
                let ids: Vec<&str> = catalog::entries().iter().map(|e| e.id).collect();
                CliError::Usage(format!("unknown catalog entry '{id}'; known: {}", ids.join(", ")))
            })?;
            vec![e]
        }
    };
    run_entries(&selected, &params, limit)
}

fn check_params(entry: &CatalogEntry, p: &CatalogParams) -> Result<(), CliError> {
    let given = [
        ("m", p.m.is_some()),
        ("values", p.values.is_some()),
        ("r", p.r.is_some()),
        ("points", p.points.is_some()),
        ("d", p.d.is_some()),
        ("g", p.g.is_some()),
        ("s", p.s.is_some()),
    ];
    for (name, set) in given {
        if set && !entry.accepts.contains(&name) {
            return Err(CliError::Usage(format!("catalog entry {} does not take --{name}", entry.id)));
        }
    }
    Ok(())
}

/// Runs catalog entries and aggregates their outcomes; any failed fact
/// makes the exit status 1.
pub fn run_entries(entries: &[CatalogEntry], params: &CatalogParams, limit: u32) -> Result<Report, CliError> {
    let mut report = Report::new("catalog");
    let ctx = catalog::Ctx { limit };
    let mut outcomes = Vec::new();
    for e in entries {
        check_params(e, params)?;
        outcomes.push((e, (e.run)(params, &ctx)?));
    }
    outcomes.sort_by_key(|(e, _)| e.id);
    report.input("entries", entries.iter().map(|e| e.id).collect::<Vec<_>>());
    let mut results = Vec::new();
    let mut failed = Vec::new();
    for (e, o) in &outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        report.line(format!("{status} {}: {}", e.id, e.summary));
        for (k, v) in &o.params {
            report.line(format!("  param {k} = {v}"));
        }
        for f in &o.facts {
            report.cite(f.citation);
            let mark = if f.ok() { "ok" } else { "MISMATCH" };
            report.line(format!(
                "  [{mark}] {}: expected {} [{}], got {}",
                f.name, f.expected, f.citation, f.actual
            ));
        }
        if !o.passed() {
            failed.push(e.id);
        }
        results.push(json!({
            "entry": e.id,
            "passed": o.passed(),
            "params": o.params,
            "facts": o.facts.iter().map(|f| json!({
                "name": f.name,
                "expected": f.expected,
                "actual": f.actual,
                "citation": f.citation,
                "ok": f.ok(),
            })).collect::<Vec<_>>(),
            "details": o.details,
        }));
    }
    if failed.is_empty() {
        report.line(format!("all {} entries passed", outcomes.len()));
    } else {
        report.exit = EXIT_MISMATCH;
        report.line(format!("failed entries: {}", failed.join(", ")));
    }
    report.results = json!({ "entries": results, "failed": failed });
    Ok(report)
}

/// Text or JSON rendering of a report, as `run` would print it.
pub fn render(report: &Report, as_json: bool) -> String {
    let mut buf = Vec::new();
    emit(report, as_json, &mut buf);
    String::from_utf8(buf).expect("utf-8 output")
}
