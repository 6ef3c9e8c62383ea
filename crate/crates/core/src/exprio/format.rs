use num_traits::{One, Signed, Zero};

use crate::exactnum::{FieldElement, FieldKind, Rational};
use crate::poly::{BiPoly, UniPoly};
use crate::ratfunc::{ExtendedValue, RationalFunction};

/// One signed summand of a printed sum.
struct Term {
    negative: bool,
    body: String,
}

fn join(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        match (k, t.negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&t.body);
    }
    out
}

fn rational_str(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn power(base: &str, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some(base.to_string()),
        _ => Some(format!("{base}^{k}")),
    }
}

fn rational_term(c: &Rational, parts: &[String]) -> Term {
    let mag = c.abs();
    let body = if parts.is_empty() {
        rational_str(&mag)
    } else if mag.is_one() {
        parts.join("*")
    } else {
        format!("{}*{}", rational_str(&mag), parts.join("*"))
    };
    Term { negative: c.is_negative(), body }
}

fn zeta_name(x: &FieldElement) -> String {
    match x.field().kind() {
        FieldKind::Cyclotomic(r) => format!("zeta({r})"),
        FieldKind::Rationals => unreachable!("rational elements have no ζ terms"),
    }
}

/// Summands of an element, highest power of ζ first, each followed by `tail`.
fn element_terms(x: &FieldElement, tail: &[String]) -> Vec<Term> {
    let name = || zeta_name(x);
    x.coefficients()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mut parts: Vec<String> =
                if k == 0 { Vec::new() } else { power(&name(), k).into_iter().collect() };
            parts.extend(tail.iter().cloned());
            rational_term(c, &parts)
        })
        .collect()
}

/// A coefficient times a monomial. Multi-term cyclotomic coefficients are
/// parenthesized unless the monomial is 1, in which case they are spliced.
fn coefficient_terms(c: &FieldElement, monomial: Vec<String>) -> Vec<Term> {
    let nonzero = c.coefficients().iter().filter(|q| !q.is_zero()).count();
    if nonzero <= 1 || monomial.is_empty() {
        element_terms(c, &monomial)
    } else {
        let mut parts = vec![format!("({})", join(&element_terms(c, &[])))];
        parts.extend(monomial);
        vec![Term { negative: false, body: parts.join("*") }]
    }
}

pub fn format_element(x: &FieldElement) -> String {
    join(&element_terms(x, &[]))
}

pub fn format_value(v: &ExtendedValue) -> String {
    match v {
        ExtendedValue::Finite(x) => format_element(x),
        ExtendedValue::Infinity => "inf".to_string(),
    }
}

fn uni_terms(p: &UniPoly, var: &str) -> Vec<Term> {
    p.coefficients()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .flat_map(|(k, c)| coefficient_terms(c, power(var, k).into_iter().collect()))
        .collect()
}

pub fn format_uni(p: &UniPoly, var: &str) -> String {
    join(&uni_terms(p, var))
}

pub fn format_ratfunc(f: &RationalFunction) -> String {
    let num = uni_terms(f.numerator(), "z");
    if f.denominator().is_one() {
        return join(&num);
    }
    let den = uni_terms(f.denominator(), "z");
    let wrap = |t: &[Term]| if t.len() > 1 { format!("({})", join(t)) } else { join(t) };
    format!("{}/{}", wrap(&num), wrap(&den))
}

pub fn format_bi(f: &BiPoly) -> String {
    let mut keys: Vec<(u32, u32)> = f.terms().map(|(&k, _)| k).collect();
    keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
    let terms: Vec<Term> = keys
        .into_iter()
        .flat_map(|(i, j)| {
            let mono: Vec<String> =
                power("X", i as usize).into_iter().chain(power("Y", j as usize)).collect();
            coefficient_terms(&f.coefficient(i, j), mono)
        })
        .collect();
    join(&terms)
}
