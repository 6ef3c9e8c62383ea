use std::fmt;

use super::{common_field, ensure_distinct, ExtendedValue, RationalFunction};
use crate::error::{Error, Result};
use crate::exactnum::{FieldDescriptor, FieldElement};
use crate::poly::UniPoly;

/// `z ↦ (az + b) / (cz + d)` with `ad − bc ≠ 0`, scaled so that `c = 1`
/// when `c ≠ 0` and `d = 1` otherwise. Structural equality is therefore
/// equality of maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MoebiusTransform {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    d: FieldElement,
}

impl MoebiusTransform {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Self> {
        let det = (&a * &d).checked_sub(&(&b * &c))?;
        if det.is_zero() {
            return Err(Error::DegenerateMoebius);
        }
        let s = if c.is_zero() { d.inverse()? } else { c.inverse()? };
        Ok(MoebiusTransform { a: &a * &s, b: &b * &s, c: &c * &s, d: &d * &s })
    }

    pub fn identity(field: &FieldDescriptor) -> Self {
        let one = FieldElement::one(field);
        let zero = FieldElement::zero(field);
        MoebiusTransform { a: one.clone(), b: zero.clone(), c: zero, d: one }
    }

    /// Entries `(a, b, c, d)` in canonical scaling.
    pub fn coefficients(&self) -> (&FieldElement, &FieldElement, &FieldElement, &FieldElement) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn field(&self) -> &FieldDescriptor {
        self.a.field()
    }

    pub fn apply(&self, x: &ExtendedValue) -> ExtendedValue {
        match x {
            ExtendedValue::Finite(z) => {
                let den = &(&self.c * z) + &self.d;
                if den.is_zero() {
                    ExtendedValue::Infinity
                } else {
                    ExtendedValue::Finite(&(&(&self.a * z) + &self.b) / &den)
                }
            }
            ExtendedValue::Infinity => {
                if self.c.is_zero() {
                    ExtendedValue::Infinity
                } else {
                    ExtendedValue::Finite(&self.a / &self.c)
                }
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MoebiusTransform) -> MoebiusTransform {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&other.a, &other.b, &other.c, &other.d);
        MoebiusTransform::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
            .expect("product of invertible transforms is invertible")
    }

    pub fn inverse(&self) -> MoebiusTransform {
        MoebiusTransform::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
            .expect("inverse of an invertible transform")
    }

    /// `T ∘ f`; the degree of `f` is preserved.
    pub fn post_compose(&self, f: &RationalFunction) -> RationalFunction {
        let n = f.numerator();
        let d = f.denominator();
        let num = &n.scale(&self.a) + &d.scale(&self.b);
        let den = &n.scale(&self.c) + &d.scale(&self.d);
        RationalFunction::new(num, den).expect("invertible transform keeps the denominator nonzero")
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let num = UniPoly::from_coeffs(self.field(), vec![self.b.clone(), self.a.clone()]);
        let den = UniPoly::from_coeffs(self.field(), vec![self.d.clone(), self.c.clone()]);
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    /// The transform sending `p1, p2, p3` to `0, 1, ∞`.
    fn to_zero_one_infinity(p: [&ExtendedValue; 3], field: &FieldDescriptor) -> Result<Self> {
        let one = FieldElement::one(field);
        let zero = FieldElement::zero(field);
        match p {
            [ExtendedValue::Infinity, ExtendedValue::Finite(p2), ExtendedValue::Finite(p3)] => {
                Self::new(zero, p2 - p3, one, -p3)
            }
            [ExtendedValue::Finite(p1), ExtendedValue::Infinity, ExtendedValue::Finite(p3)] => {
                Self::new(one.clone(), -p1, one, -p3)
            }
            [ExtendedValue::Finite(p1), ExtendedValue::Finite(p2), ExtendedValue::Infinity] => {
                Self::new(one, -p1, zero, p2 - p1)
            }
            [ExtendedValue::Finite(p1), ExtendedValue::Finite(p2), ExtendedValue::Finite(p3)] => {
                let u = p2 - p3;
                let v = p2 - p1;
                Self::new(u.clone(), -(p1 * &u), v.clone(), -(p3 * &v))
            }
            _ => Err(Error::RepeatedPoint("inf".into())),
        }
    }

    /// The unique transform with `p_k ↦ q_k`.
    pub fn through(p: [&ExtendedValue; 3], q: [&ExtendedValue; 3]) -> Result<Self> {
        let pts: Vec<ExtendedValue> = p.iter().chain(q.iter()).map(|&v| v.clone()).collect();
        ensure_distinct(&pts[..3])?;
        ensure_distinct(&pts[3..])?;
        let field = common_field(&pts)?.expect("three distinct points include a finite one");
        let s = Self::to_zero_one_infinity(p, &field)?;
        let t = Self::to_zero_one_infinity(q, &field)?;
        Ok(t.inverse().compose(&s))
    }
}

impl fmt::Display for MoebiusTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational_function())
    }
}

impl fmt::Debug for MoebiusTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Moebius({self})")
    }
}

/// Cross-ratio normalized so that `cross_ratio(0, 1, ∞, x) = x`: the image
/// of `p4` under the transform sending `p1, p2, p3` to `0, 1, ∞`.
pub fn cross_ratio(
    p1: &ExtendedValue,
    p2: &ExtendedValue,
    p3: &ExtendedValue,
    p4: &ExtendedValue,
) -> Result<ExtendedValue> {
    let pts = [p1.clone(), p2.clone(), p3.clone(), p4.clone()];
    ensure_distinct(&pts)?;
    let field = common_field(&pts)?.expect("four distinct points include a finite one");
    let s = MoebiusTransform::to_zero_one_infinity([p1, p2, p3], &field)?;
    Ok(s.apply(p4))
}

/// Whether all points lie on one circle or line: every cross-ratio with the
/// first three points is real.
pub fn concyclic(points: &[ExtendedValue]) -> Result<bool> {
    if points.len() < 4 {
        return Err(Error::Precondition(format!(
            "concyclicity needs at least 4 points, got {}",
            points.len()
        )));
    }
    ensure_distinct(points)?;
    common_field(points)?;
    for pk in &points[3..] {
        let cr = cross_ratio(&points[0], &points[1], &points[2], pk)?;
        let real = match cr {
            ExtendedValue::Finite(x) => x.is_real(),
            ExtendedValue::Infinity => true,
        };
        if !real {
            return Ok(false);
        }
    }
    Ok(true)
}
