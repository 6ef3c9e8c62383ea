//! Plane curves `F(X, Y) = 0` on which the coordinate functions `X` and `Y`
//! share prescribed values, plus hyperelliptic and superelliptic families.
//!
//! Genus is never computed from singularities. The Eisenstein families
//! carry certified upper bounds, the (super)elliptic families their closed
//! form genus.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{FieldDescriptor, FieldElement};
use crate::poly::{gcd, is_eisenstein, BiPoly, EisensteinReport, UniPoly, Var};
use crate::ratfunc::{ensure_distinct, ExtendedValue, MoebiusTransform, RationalFunction};
use crate::sharing::{shared_value_scan_on, Domain, SharingSummary};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Theorem1a(Vec<FieldElement>),
    Theorem1b(Vec<FieldElement>),
    Hyperelliptic(Vec<FieldElement>),
    Superelliptic { d: u32, m: u32, r: u32, f: UniPoly },
    UserSupplied,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    poly: BiPoly,
    provenance: Provenance,
}

impl PlaneCurve {
    pub fn user_supplied(poly: BiPoly) -> Result<Self> {
        match poly.total_degree() {
            None => Err(Error::ZeroPolynomial("plane curve")),
            Some(0) => Err(Error::DegenerateCurve("constant polynomial".into())),
            Some(_) => Ok(PlaneCurve { poly, provenance: Provenance::UserSupplied }),
        }
    }

    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn field(&self) -> &FieldDescriptor {
        self.poly.field()
    }

    pub fn descriptor(&self) -> String {
        let list = |v: &[FieldElement]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        match &self.provenance {
            Provenance::Theorem1a(v) => format!("X and Y share {{{}}} (n = {})", list(v), v.len()),
            Provenance::Theorem1b(v) => {
                format!("X and Y share {{{}}} and inf CM (n = {})", list(v), v.len() + 1)
            }
            Provenance::Hyperelliptic(v) => format!("hyperelliptic, {} branch points", v.len()),
            Provenance::Superelliptic { d, m, r, .. } => format!("superelliptic, d = {d}, m = {m}, r = {r}"),
            Provenance::UserSupplied => "user supplied".into(),
        }
    }

    /// Values prescribed by the construction, if any.
    pub fn prescribed_values(&self) -> &[FieldElement] {
        match &self.provenance {
            Provenance::Theorem1a(v) | Provenance::Theorem1b(v) => v,
            _ => &[],
        }
    }

    /// Degrees of the maps `X` and `Y`, i.e. `(deg_Y F, deg_X F)`.
    pub fn map_degrees(&self) -> (u32, u32) {
        (self.poly.degree_in(Var::Y).unwrap_or(0), self.poly.degree_in(Var::X).unwrap_or(0))
    }

    /// Exact genus for the (super)elliptic families.
    pub fn genus(&self) -> Option<u64> {
        match &self.provenance {
            Provenance::Hyperelliptic(v) => Some((v.len() as u64 - 2) / 2),
            Provenance::Superelliptic { d, m, .. } => Some(superelliptic_genus(*d, *m)),
            _ => None,
        }
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.poly)
    }
}

fn check_values(values: &[FieldElement], needed: usize) -> Result<FieldDescriptor> {
    if values.len() < needed {
        return Err(Error::TooFewValues { needed, got: values.len() });
    }
    let field = values[0].field().clone();
    for (k, v) in values.iter().enumerate() {
        if v.field() != &field {
            return Err(Error::FieldMismatch { left: field.kind(), right: v.field().kind() });
        }
        if v.is_zero() {
            return Err(Error::ZeroValue);
        }
        if values[..k].contains(v) {
            return Err(Error::RepeatedValue(v.to_string()));
        }
    }
    Ok(field)
}

fn eisenstein_family(values: &[FieldElement], power: u32, field: &FieldDescriptor) -> BiPoly {
    let x = BiPoly::var(field, Var::X);
    let y = BiPoly::var(field, Var::Y);
    let mut tail = y.clone();
    for a in values {
        let c = BiPoly::constant(a.clone());
        tail = &(&tail * &(&y - &c)) * &(&x - &c);
    }
    &(&x - &y).pow(power) + &tail
}

/// `(X − Y)^{n+1} + Y ∏(Y − a_i) ∏(X − a_i)` for `n ≥ 2` distinct nonzero
/// values; `X` and `Y` share all `a_i` on the resulting curve.
pub fn theorem1a_curve(values: &[FieldElement]) -> Result<PlaneCurve> {
    let field = check_values(values, 2)?;
    let n = values.len() as u32;
    Ok(PlaneCurve {
        poly: eisenstein_family(values, n + 1, &field),
        provenance: Provenance::Theorem1a(values.to_vec()),
    })
}

/// `(X − Y)^{2n−1} + Y ∏(Y − a_i) ∏(X − a_i)` for `n − 1 ≥ 1` distinct
/// nonzero values; `X` and `Y` additionally share ∞ CM.
pub fn theorem1b_curve(values: &[FieldElement]) -> Result<PlaneCurve> {
    let field = check_values(values, 1)?;
    let n = values.len() as u32 + 1;
    Ok(PlaneCurve {
        poly: eisenstein_family(values, 2 * n - 1, &field),
        provenance: Provenance::Theorem1b(values.to_vec()),
    })
}

/// Small integers not among `values`.
fn fresh_integers(values: &[ExtendedValue], field: &FieldDescriptor, count: usize) -> Vec<FieldElement> {
    (1i64..)
        .flat_map(|k| [k, -k])
        .map(|k| FieldElement::from_integer(field, k))
        .filter(|c| !values.contains(&ExtendedValue::Finite(c.clone())))
        .take(count)
        .collect()
}

fn value_field(values: &[ExtendedValue]) -> FieldDescriptor {
    values.iter().find_map(|v| v.field().cloned()).unwrap_or_else(FieldDescriptor::rationals)
}

fn images(t: &MoebiusTransform, values: &[ExtendedValue]) -> Vec<FieldElement> {
    values
        .iter()
        .map(|v| t.apply(v).finite().cloned().expect("transform chosen to keep values finite"))
        .collect()
}

/// A transform making every value finite and nonzero, with the images, so
/// that [`theorem1a_curve`] accepts them. The identity is used when possible.
pub fn normalize_for_theorem1a(values: &[ExtendedValue]) -> Result<(MoebiusTransform, Vec<FieldElement>)> {
    ensure_distinct(values)?;
    let field = value_field(values);
    let admissible = values.iter().all(|v| v.finite().is_some_and(|x| !x.is_zero()));
    let t = if admissible {
        MoebiusTransform::identity(&field)
    } else {
        let fresh = fresh_integers(values, &field, 2);
        let one = FieldElement::one(&field);
        // z ↦ (z − α)/(z − β)
        MoebiusTransform::new(one.clone(), -&fresh[0], one, -&fresh[1])?
    };
    let imgs = images(&t, values);
    Ok((t, imgs))
}

/// A transform sending `cm_value` to ∞ and the other values to finite
/// nonzero points, with their images, for [`theorem1b_curve`].
pub fn normalize_for_theorem1b(
    values: &[ExtendedValue],
    cm_value: &ExtendedValue,
) -> Result<(MoebiusTransform, Vec<FieldElement>)> {
    let mut all = values.to_vec();
    if !all.contains(cm_value) {
        all.push(cm_value.clone());
    }
    ensure_distinct(values)?;
    let field = value_field(&all);
    let rest: Vec<ExtendedValue> = values.iter().filter(|v| *v != cm_value).cloned().collect();
    let admissible = cm_value.is_infinity() && rest.iter().all(|v| v.finite().is_some_and(|x| !x.is_zero()));
    let one = FieldElement::one(&field);
    let zero = FieldElement::zero(&field);
    let t = if admissible {
        MoebiusTransform::identity(&field)
    } else {
        let alpha = fresh_integers(&all, &field, 1).remove(0);
        match cm_value {
            ExtendedValue::Infinity => MoebiusTransform::new(one.clone(), -&alpha, zero, one)?,
            ExtendedValue::Finite(c) => MoebiusTransform::new(one.clone(), -&alpha, one, -c)?,
        }
    };
    let imgs = images(&t, &rest);
    Ok((t, imgs))
}

/// `F(a, Y) = c·(Y − a)^k` and `F(X, a) = c′·(X − a)^{k′}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberWitness {
    pub value: FieldElement,
    pub x_side: Option<(FieldElement, u32)>,
    pub y_side: Option<(FieldElement, u32)>,
}

impl FiberWitness {
    pub fn verified(&self) -> bool {
        self.x_side.is_some() && self.y_side.is_some()
    }
}

/// Returns `(c, k)` when `p = c·(t − a)^k` with `k ≥ 1`.
fn pure_power(p: &UniPoly, a: &FieldElement) -> Option<(FieldElement, u32)> {
    let k = p.degree().filter(|&k| k >= 1)?;
    let c = p.leading_coefficient()?.clone();
    (UniPoly::linear(a).pow(k as u32).scale(&c) == *p).then_some((c, k as u32))
}

/// Checks that over `a` both coordinate functions have a single fiber
/// point, namely `(a, a)`. Failure means "unverified", not "not shared".
pub fn verify_shared_fiber(c: &PlaneCurve, a: &FieldElement) -> FiberWitness {
    let f = c.poly();
    let a = match a.lift(c.field()) {
        Ok(a) => a,
        Err(_) => return FiberWitness { value: a.clone(), x_side: None, y_side: None },
    };
    FiberWitness {
        x_side: pure_power(&f.partial_evaluate(Var::X, &a), &a),
        y_side: pure_power(&f.partial_evaluate(Var::Y, &a), &a),
        value: a,
    }
}

/// Whether no point at infinity of the projective closure lies on a
/// coordinate axis. Then `X/Y` has a finite nonzero limit at every place
/// over ∞, so `X` and `Y` have the same poles with the same orders.
pub fn cm_at_infinity(c: &PlaneCurve) -> bool {
    let Ok(l) = c.poly().leading_form() else { return false };
    let one = FieldElement::one(c.field());
    let zero = FieldElement::zero(c.field());
    !l.evaluate(&one, &zero).is_zero() && !l.evaluate(&zero, &one).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusBounds {
    /// `(deg X − 1)(deg Y − 1)`.
    pub castelnuovo: u64,
    /// `(D − 1)(D − 2)/2` for total degree `D`.
    pub plane: u64,
    pub operative: u64,
}

pub fn genus_bounds(c: &PlaneCurve) -> Result<GenusBounds> {
    let (dx, dy) = c.map_degrees();
    if dx == 0 || dy == 0 {
        return Err(Error::DegenerateCurve(format!("map degrees ({dx}, {dy})")));
    }
    let d = c.poly().total_degree().unwrap_or(0) as u64;
    let castelnuovo = (dx as u64 - 1) * (dy as u64 - 1);
    let plane = (d - 1) * (d.saturating_sub(2)) / 2;
    Ok(GenusBounds { castelnuovo, plane, operative: castelnuovo.min(plane) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveCheckReport {
    pub eisenstein: EisensteinReport,
    pub map_degrees: (u32, u32),
    pub fibers: Vec<FiberWitness>,
    /// Only meaningful when ∞ is one of the prescribed values.
    pub cm_at_infinity: Option<bool>,
    pub genus_bounds: Result<GenusBounds>,
}

impl CurveCheckReport {
    pub fn all_fibers_verified(&self) -> bool {
        self.fibers.iter().all(FiberWitness::verified)
    }
}

/// Runs every check on `c`; fibers are checked over `values`, defaulting to
/// the prescribed values of the construction.
pub fn check_curve(c: &PlaneCurve, values: Option<&[FieldElement]>) -> CurveCheckReport {
    let values = values.unwrap_or_else(|| c.prescribed_values());
    CurveCheckReport {
        eisenstein: is_eisenstein(c.poly(), Var::X),
        map_degrees: c.map_degrees(),
        fibers: values.iter().map(|a| verify_shared_fiber(c, a)).collect(),
        cm_at_infinity: match c.provenance() {
            Provenance::Theorem1b(_) => Some(cm_at_infinity(c)),
            _ => None,
        },
        genus_bounds: genus_bounds(c),
    }
}

/// `Y² = ∏(X − R_i)` for an even number, at least 6, of distinct points.
pub fn hyperelliptic_curve(branch_points: &[FieldElement]) -> Result<PlaneCurve> {
    let n = branch_points.len();
    if n < 6 || n % 2 == 1 {
        return Err(Error::Precondition(format!("need an even number ≥ 6 of branch points, got {n}")));
    }
    let field = branch_points[0].field().clone();
    let pts: Vec<ExtendedValue> = branch_points.iter().cloned().map(ExtendedValue::Finite).collect();
    ensure_distinct(&pts)?;
    crate::ratfunc::common_field(&pts)?;
    let f = UniPoly::from_roots(&field, branch_points);
    let y2 = BiPoly::term(FieldElement::one(&field), 0, 2);
    Ok(PlaneCurve {
        poly: &y2 - &BiPoly::from_uni(&f, Var::X),
        provenance: Provenance::Hyperelliptic(branch_points.to_vec()),
    })
}

pub fn superelliptic_genus(d: u32, m: u32) -> u64 {
    (d as u64 - 1) * (m as u64 * d as u64 - 2) / 2
}

fn x_power_minus_one(field: &FieldDescriptor, r: u32) -> UniPoly {
    let one = FieldElement::one(field);
    &UniPoly::monomial(one.clone(), r as usize) - &UniPoly::constant(one)
}

/// `Y^d = f(X)` with `f` squarefree of degree `md` and divisible by
/// `X^r − 1`, where `2d ≤ r ≤ md`.
pub fn superelliptic_family(d: u32, m: u32, r: u32, f: &UniPoly) -> Result<PlaneCurve> {
    if d < 3 {
        return Err(Error::Precondition(format!("d must be at least 3, got {d}")));
    }
    if m < 2 {
        return Err(Error::Precondition(format!("m must be at least 2, got {m}")));
    }
    if r < 2 * d || r > m * d {
        return Err(Error::Precondition(format!("r = {r} outside {}..={}", 2 * d, m * d)));
    }
    if f.degree() != Some((m * d) as usize) {
        return Err(Error::Precondition(format!("deg f must be md = {}", m * d)));
    }
    if !gcd(f, &f.derivative())?.is_constant() {
        return Err(Error::Precondition("f is not squarefree".into()));
    }
    if !x_power_minus_one(f.field(), r).divides(f)? {
        return Err(Error::Precondition(format!("X^{r} - 1 does not divide f")));
    }
    let field = f.field();
    let yd = BiPoly::term(FieldElement::one(field), 0, d);
    Ok(PlaneCurve {
        poly: &yd - &BiPoly::from_uni(f, Var::X),
        provenance: Provenance::Superelliptic { d, m, r, f: f.clone() },
    })
}

/// The sharing pattern of `(π, ζ_r π)` on the curve minus the fibers over
/// the `r`-th roots of unity.
#[derive(Clone, Debug)]
pub struct RotationCheck {
    pub r: u32,
    pub predicted: usize,
    pub summary: SharingSummary,
}

impl RotationCheck {
    pub fn holds(&self) -> bool {
        self.summary.shared == self.predicted && self.summary.cm == self.predicted
    }
}

/// Verifies the `r + 2` shared values of `(π, ζ_r π)`, where `π` is the
/// projection to `X`. Both functions factor through `π`, so the check runs
/// on the sphere pair `(z, ζ_r z)` punctured at the `r`-th roots of unity.
pub fn verify_rotation_sharing(c: &PlaneCurve, r: u32) -> Result<RotationCheck> {
    let f = match c.provenance() {
        Provenance::Hyperelliptic(pts) => UniPoly::from_roots(c.field(), pts),
        Provenance::Superelliptic { f, .. } => f.clone(),
        _ => return Err(Error::Precondition("curve is not (super)elliptic".into())),
    };
    if r < 2 {
        return Err(Error::Precondition("r must be at least 2".into()));
    }
    let field = c.field();
    if !x_power_minus_one(field, r).divides(&f)? {
        return Err(Error::Precondition(format!("branch set does not contain all {r}-th roots of unity")));
    }
    let zeta = FieldElement::root_of_unity(field, r)?;
    let roots: Vec<ExtendedValue> = (0..r).map(|k| zeta.pow(k).into()).collect();
    let z = RationalFunction::identity(field);
    let rotated = RationalFunction::polynomial(UniPoly::monomial(zeta, 1));
    let mut candidates = vec![ExtendedValue::Infinity, FieldElement::zero(field).into()];
    candidates.extend(roots.iter().cloned());
    let summary = shared_value_scan_on(&Domain::punctured(roots)?, &z, &rotated, &candidates)?;
    Ok(RotationCheck { r, predicted: r as usize + 2, summary })
}
