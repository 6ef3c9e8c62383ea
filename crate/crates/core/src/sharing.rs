//! Value sharing between two rational functions.
//!
//! A value `a` is shared with weight `m` when, point by point over `a`, the
//! multiplicities up to `m` agree exactly and the sets of points with
//! multiplicity above `m` coincide. Weight 0 is sharing ignoring
//! multiplicities, and sharing with every weight is sharing counting
//! multiplicities (CM).
//!
//! Point sets are compared as monic squarefree polynomials plus a bit for
//! ∞; no roots are ever computed. Sharing can be classified on the sphere
//! with finitely many punctures removed, which is where most of the
//! interesting examples live.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{gcd, rational_roots};
use crate::ratfunc::{common_field, ensure_distinct, ExtendedValue, FiberProfile, RationalFunction};

/// The sphere with finitely many points removed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Domain {
    punctures: Vec<ExtendedValue>,
}

impl Domain {
    pub fn sphere() -> Self {
        Domain::default()
    }

    pub fn punctured(punctures: Vec<ExtendedValue>) -> Result<Self> {
        ensure_distinct(&punctures)?;
        common_field(&punctures)?;
        Ok(Domain { punctures })
    }

    pub fn punctures(&self) -> &[ExtendedValue] {
        &self.punctures
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharingStatus {
    NotShared,
    SharedWeight(u32),
    SharedCM,
}

impl SharingStatus {
    pub fn is_shared(self) -> bool {
        !matches!(self, SharingStatus::NotShared)
    }

    pub fn max_weight(self) -> Option<SharingWeight> {
        match self {
            SharingStatus::NotShared => None,
            SharingStatus::SharedWeight(m) => Some(SharingWeight::Finite(m)),
            SharingStatus::SharedCM => Some(SharingWeight::Infinite),
        }
    }
}

impl fmt::Display for SharingStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SharingStatus::NotShared => write!(f, "not shared"),
            SharingStatus::SharedWeight(m) => write!(f, "weight {m}"),
            SharingStatus::SharedCM => write!(f, "CM"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharingWeight {
    Finite(u32),
    Infinite,
}

#[derive(Clone, Debug)]
pub struct SharingReport {
    pub value: ExtendedValue,
    pub status: SharingStatus,
    /// Neither function takes the value on the domain.
    pub vacuous: bool,
    pub evidence: (FiberProfile, FiberProfile),
}

#[derive(Clone, Debug)]
pub struct SharingSummary {
    pub reports: Vec<SharingReport>,
    /// Values shared with weight ≥ 0.
    pub shared: usize,
    pub weight_at_least_one: usize,
    pub cm: usize,
    pub functions_identical: bool,
}

/// Points of exact multiplicity `mult`, as (finite part, ∞ present).
fn class(p: &FiberProfile, mult: u32) -> (crate::poly::UniPoly, bool) {
    (p.finite_part.with_multiplicity(mult), p.infinity_multiplicity == mult)
}

fn above(p: &FiberProfile, mult: u32) -> (crate::poly::UniPoly, bool) {
    (p.finite_part.above_multiplicity(mult), p.infinity_multiplicity > mult)
}

fn weight_condition(p1: &FiberProfile, p2: &FiberProfile, m: u32) -> bool {
    (1..=m).all(|mu| class(p1, mu) == class(p2, mu)) && above(p1, m) == above(p2, m)
}

/// Classifies two fibers over the same value.
pub fn classify_fibers(p1: &FiberProfile, p2: &FiberProfile) -> (SharingStatus, bool) {
    if p1.is_empty() && p2.is_empty() {
        return (SharingStatus::SharedCM, true);
    }
    if !weight_condition(p1, p2, 0) {
        return (SharingStatus::NotShared, false);
    }
    if p1.same_points(p2) {
        return (SharingStatus::SharedCM, false);
    }
    let mut m = 0;
    while weight_condition(p1, p2, m + 1) {
        m += 1;
    }
    debug_assert!((0..m).all(|k| weight_condition(p1, p2, k)), "weighted sharing is monotone");
    (SharingStatus::SharedWeight(m), false)
}

fn check_pair(f1: &RationalFunction, f2: &RationalFunction) -> Result<()> {
    if f1.field() != f2.field() {
        return Err(Error::FieldMismatch { left: f1.field().kind(), right: f2.field().kind() });
    }
    if f1.is_constant() || f2.is_constant() {
        return Err(Error::ConstantFunction("sharing"));
    }
    Ok(())
}

pub fn classify_sharing(
    f1: &RationalFunction,
    f2: &RationalFunction,
    a: &ExtendedValue,
) -> Result<SharingReport> {
    classify_sharing_on(&Domain::sphere(), f1, f2, a)
}

pub fn classify_sharing_on(
    domain: &Domain,
    f1: &RationalFunction,
    f2: &RationalFunction,
    a: &ExtendedValue,
) -> Result<SharingReport> {
    check_pair(f1, f2)?;
    let a = a.lift(f1.field())?;
    let p1 = f1.fiber_profile(&a)?.restrict(domain.punctures())?;
    let p2 = f2.fiber_profile(&a)?.restrict(domain.punctures())?;
    let (status, vacuous) = classify_fibers(&p1, &p2);
    Ok(SharingReport { value: a, status, vacuous, evidence: (p1, p2) })
}

/// Largest weight with which `a` is shared; `None` when not shared.
pub fn max_sharing_weight(
    f1: &RationalFunction,
    f2: &RationalFunction,
    a: &ExtendedValue,
) -> Result<Option<SharingWeight>> {
    Ok(classify_sharing(f1, f2, a)?.status.max_weight())
}

pub fn shared_value_scan(
    f1: &RationalFunction,
    f2: &RationalFunction,
    candidates: &[ExtendedValue],
) -> Result<SharingSummary> {
    shared_value_scan_on(&Domain::sphere(), f1, f2, candidates)
}

pub fn shared_value_scan_on(
    domain: &Domain,
    f1: &RationalFunction,
    f2: &RationalFunction,
    candidates: &[ExtendedValue],
) -> Result<SharingSummary> {
    for (k, c) in candidates.iter().enumerate() {
        if candidates[..k].contains(c) {
            return Err(Error::DuplicateCandidate(c.to_string()));
        }
    }
    let mut reports = candidates
        .iter()
        .map(|a| classify_sharing_on(domain, f1, f2, a))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|x, y| x.value.canonical_cmp(&y.value));
    let shared = reports.iter().filter(|r| r.status.is_shared()).count();
    let weight_at_least_one = reports
        .iter()
        .filter(|r| matches!(r.status, SharingStatus::SharedCM | SharingStatus::SharedWeight(1..)))
        .count();
    let cm = reports.iter().filter(|r| r.status == SharingStatus::SharedCM).count();
    Ok(SharingSummary { reports, shared, weight_at_least_one, cm, functions_identical: f1 == f2 })
}

/// Values possibly shared, found from ℚ-rational points where `f1 = f2`.
///
/// Only points defined over ℚ are searched, so shared values taken at
/// irrational points are missed.
pub fn candidate_values(f1: &RationalFunction, f2: &RationalFunction) -> Result<Vec<ExtendedValue>> {
    check_pair(f1, f2)?;
    if f1 == f2 {
        return Err(Error::IdenticalFunctions);
    }
    if !f1.is_rational() || !f2.is_rational() {
        return Err(Error::NonRationalCoefficients);
    }
    let diff = f1.difference(f2);
    let mut out: Vec<ExtendedValue> = rational_roots(diff.numerator())?
        .into_iter()
        .map(|u| f1.evaluate(&ExtendedValue::Finite(u)))
        .collect();
    let common_pole = !gcd(f1.denominator(), f2.denominator())?.is_constant();
    let pole_at_infinity = |f: &RationalFunction| {
        f.numerator().degree().unwrap_or(0) > f.denominator().degree().unwrap_or(0)
    };
    if common_pole || (pole_at_infinity(f1) && pole_at_infinity(f2)) {
        out.push(ExtendedValue::Infinity);
    }
    let at_inf = f1.evaluate(&ExtendedValue::Infinity);
    if at_inf == f2.evaluate(&ExtendedValue::Infinity) {
        out.push(at_inf);
    }
    out.sort_by(|x, y| x.canonical_cmp(y));
    out.dedup();
    Ok(out)
}
