//! Exact arithmetic in ℚ and in cyclotomic fields ℚ(ζ_r).
//!
//! An element of ℚ(ζ_r) is stored as its residue in ℚ[t]/(Φ_r(t)): a
//! coefficient vector of length < φ(r), lowest power of ζ_r first, with
//! trailing zeros trimmed. Every constructor and operation returns this
//! canonical form, so structural equality is field equality.
//!
//! Elements of different fields never mix. Binary operators panic on a
//! field mismatch; the `checked_*` methods and [`field_arithmetic`] report it
//! as an error instead. Use [`FieldElement::lift`] to move between fields.

mod cyclotomic;
pub(crate) mod qpoly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use cyclotomic::{cyclotomic_polynomial, totient};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest cyclotomic order accepted unless a caller raises the limit.
pub const DEFAULT_MAX_CYCLOTOMIC: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    Cyclotomic(u32),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Cyclotomic(r) => write!(f, "Q(zeta({r}))"),
        }
    }
}

/// A field together with the minimal polynomial of its generator.
#[derive(Clone)]
pub struct FieldDescriptor {
    kind: FieldKind,
    modulus: Arc<[Rational]>,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor {
            kind: FieldKind::Rationals,
            modulus: Arc::from(vec![Rational::zero(), Rational::one()]),
        }
    }

    pub fn cyclotomic(order: u32) -> Result<Self> {
        Self::cyclotomic_with_limit(order, DEFAULT_MAX_CYCLOTOMIC)
    }

    pub fn cyclotomic_with_limit(order: u32, limit: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > limit {
            return Err(Error::OrderTooLarge { order, limit });
        }
        Ok(FieldDescriptor {
            kind: FieldKind::Cyclotomic(order),
            modulus: Arc::from(cyclotomic_polynomial(order)?),
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// Order `r` of the adjoined root of unity, `None` for ℚ.
    pub fn order(&self) -> Option<u32> {
        match self.kind {
            FieldKind::Rationals => None,
            FieldKind::Cyclotomic(r) => Some(r),
        }
    }

    /// Minimal polynomial of the generator (Φ_r), lowest degree first.
    /// For ℚ this is `t`, recording degree 1.
    pub fn minimal_polynomial(&self) -> &[Rational] {
        &self.modulus
    }

    /// Degree of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Whether this field contains a primitive `r`-th root of unity as its
    /// generator power, i.e. `r` divides the field's order.
    pub fn contains_roots_of_unity(&self, r: u32) -> bool {
        match self.kind {
            FieldKind::Rationals => r == 1 || r == 2,
            FieldKind::Cyclotomic(order) => r == 1 || r == 2 || order % r == 0,
        }
    }
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for FieldDescriptor {}

impl Hash for FieldDescriptor {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kind.hash(state);
    }
}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldDescriptor,
    coeffs: Vec<Rational>,
}

impl FieldElement {
    fn from_residue(field: &FieldDescriptor, coeffs: Vec<Rational>) -> Self {
        let coeffs = if coeffs.len() >= field.modulus.len() {
            qpoly::rem(&coeffs, &field.modulus)
        } else {
            let mut c = coeffs;
            qpoly::trim(&mut c);
            c
        };
        FieldElement { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldDescriptor) -> Self {
        FieldElement { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldDescriptor) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &FieldDescriptor, q: Rational) -> Self {
        Self::from_residue(field, vec![q])
    }

    pub fn from_integer(field: &FieldDescriptor, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_fraction(field: &FieldDescriptor, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_rational(field, Rational::new(num.into(), den.into())))
    }

    /// ζ_r^k reduced modulo Φ_r.
    pub fn zeta_power(field: &FieldDescriptor, k: u32) -> Result<Self> {
        let r = field.order().ok_or(Error::NoRootOfUnity(field.kind))?;
        Ok(Self::from_residue(field, qpoly::monomial((k % r) as usize, Rational::one())))
    }

    /// The generator ζ_r.
    pub fn zeta(field: &FieldDescriptor) -> Result<Self> {
        Self::zeta_power(field, 1)
    }

    /// A primitive `s`-th root of unity inside this field: ζ_r^{r/s}.
    pub fn root_of_unity(field: &FieldDescriptor, s: u32) -> Result<Self> {
        match (s, field.order()) {
            (0, _) => Err(Error::ZeroOrder),
            (1, _) => Ok(Self::one(field)),
            (2, _) => Ok(-Self::one(field)),
            (s, Some(r)) if r % s == 0 => Self::zeta_power(field, r / s),
            _ => Err(Error::NoRootOfUnity(field.kind)),
        }
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    /// Residue coefficients, lowest power of ζ first.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.field.kind, right: other.field.kind })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: qpoly::add(&self.coeffs, &other.coeffs),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: qpoly::sub(&self.coeffs, &other.coeffs),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_residue(&self.field, qpoly::mul(&self.coeffs, &other.coeffs)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.checked_mul(&other.inverse()?)
    }

    /// Multiplicative inverse by extended Euclid against Φ_r.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Self::from_rational(&self.field, self.coeffs[0].recip()));
        }
        let inv = qpoly::inverse_mod(&self.coeffs, &self.field.modulus)
            .expect("Φ_r is irreducible, so every nonzero residue is invertible");
        Ok(Self::from_residue(&self.field, inv))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Complex conjugation: the automorphism ζ_r ↦ ζ_r^{-1}; identity on ℚ.
    pub fn conjugate(&self) -> Self {
        let r = match self.field.kind {
            FieldKind::Cyclotomic(r) if self.coeffs.len() > 1 => r as usize,
            _ => return self.clone(),
        };
        let mut out = vec![Rational::zero(); r];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(r - k) % r] += c;
        }
        Self::from_residue(&self.field, out)
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Moves the element into `target`. Rational elements embed everywhere;
    /// otherwise ℚ(ζ_r) embeds into ℚ(ζ_{r'}) when `r | r'`, via
    /// ζ_r = ζ_{r'}^{r'/r}.
    pub fn lift(&self, target: &FieldDescriptor) -> Result<Self> {
        if self.field == *target {
            return Ok(self.clone());
        }
        if self.is_rational() {
            return Ok(FieldElement { field: target.clone(), coeffs: self.coeffs.clone() });
        }
        let (r, r2) = match (self.field.kind, target.kind) {
            (FieldKind::Cyclotomic(r), FieldKind::Cyclotomic(r2)) if r2 % r == 0 => (r, r2),
            (from, to) => return Err(Error::NotEmbeddable { from, to }),
        };
        let step = (r2 / r) as usize;
        let mut out = vec![Rational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * step] = c.clone();
        }
        Ok(Self::from_residue(target, out))
    }

    /// Exact square root of a rational element that is a square in ℚ.
    pub fn rational_sqrt(&self) -> Option<Self> {
        let q = self.as_rational()?;
        if q.is_negative() {
            return None;
        }
        let n = q.numer().sqrt();
        let d = q.denom().sqrt();
        if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
            Some(Self::from_rational(&self.field, Rational::new(n, d)))
        } else {
            None
        }
    }

    /// A total order used only to sort reports deterministically: compares
    /// residue coefficients from ζ^0 upward, then by length.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        for k in 0..n {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = other.coeffs.get(k).unwrap_or(&zero);
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.field.kind.cmp(&other.field.kind)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic.
pub fn field_arithmetic(x: &FieldElement, y: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::format_element(self))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}
