//! Rational functions as self-maps of the Riemann sphere.
//!
//! The point ∞ is always an explicit [`ExtendedValue::Infinity`]. Fiber
//! multiplicities at ∞ come from degree drops: for finite `a` the point ∞
//! lies over `a` with multiplicity `deg f − deg(N − aD)`, and over ∞ with
//! multiplicity `deg f − deg D`.

mod moebius;

use std::cmp::Ordering;
use std::fmt;

pub use moebius::{concyclic, cross_ratio, MoebiusTransform};

use crate::error::{Error, Result};
use crate::exactnum::{FieldDescriptor, FieldElement};
use crate::poly::{gcd, squarefree_decomposition, SquarefreeDecomposition, UniPoly};

/// A point of ℂ ∪ {∞}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtendedValue {
    Finite(FieldElement),
    Infinity,
}

impl ExtendedValue {
    pub fn finite(&self) -> Option<&FieldElement> {
        match self {
            ExtendedValue::Finite(x) => Some(x),
            ExtendedValue::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtendedValue::Infinity)
    }

    pub fn field(&self) -> Option<&FieldDescriptor> {
        self.finite().map(FieldElement::field)
    }

    pub fn lift(&self, target: &FieldDescriptor) -> Result<Self> {
        Ok(match self {
            ExtendedValue::Finite(x) => ExtendedValue::Finite(x.lift(target)?),
            ExtendedValue::Infinity => ExtendedValue::Infinity,
        })
    }

    /// ∞ first, then finite values by [`FieldElement::canonical_cmp`].
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedValue::Infinity, ExtendedValue::Infinity) => Ordering::Equal,
            (ExtendedValue::Infinity, _) => Ordering::Less,
            (_, ExtendedValue::Infinity) => Ordering::Greater,
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => a.canonical_cmp(b),
        }
    }
}

impl From<FieldElement> for ExtendedValue {
    fn from(x: FieldElement) -> Self {
        ExtendedValue::Finite(x)
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Finite(x) => write!(f, "{x}"),
            ExtendedValue::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Checks that all finite points share one field and returns it.
pub(crate) fn common_field(points: &[ExtendedValue]) -> Result<Option<FieldDescriptor>> {
    let mut field: Option<FieldDescriptor> = None;
    for p in points {
        if let Some(f) = p.field() {
            match &field {
                None => field = Some(f.clone()),
                Some(g) if g == f => {}
                Some(g) => return Err(Error::FieldMismatch { left: g.kind(), right: f.kind() }),
            }
        }
    }
    Ok(field)
}

pub(crate) fn ensure_distinct(points: &[ExtendedValue]) -> Result<()> {
    for (k, p) in points.iter().enumerate() {
        if points[..k].contains(p) {
            return Err(Error::RepeatedPoint(p.to_string()));
        }
    }
    Ok(())
}

/// Reduced quotient `N / D` with `gcd(N, D) = 1` and `D` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Reduces `N / D`; errors on a zero denominator.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        assert_eq!(num.field(), den.field(), "numerator and denominator over different fields");
        if num.is_zero() {
            let field = den.field().clone();
            return Ok(RationalFunction { num, den: UniPoly::one(&field) });
        }
        let g = gcd(&num, &den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc_inv = den.leading_coefficient().unwrap().inverse()?;
        Ok(RationalFunction { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn polynomial(p: UniPoly) -> Self {
        let den = UniPoly::one(p.field());
        RationalFunction { num: p, den }
    }

    pub fn identity(field: &FieldDescriptor) -> Self {
        Self::polynomial(UniPoly::x(field))
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::polynomial(UniPoly::constant(c))
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn field(&self) -> &FieldDescriptor {
        self.num.field()
    }

    /// Degree as a map of the sphere: `max(deg N, deg D)`.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_rational(&self) -> bool {
        self.num.is_rational() && self.den.is_rational()
    }

    pub fn lift(&self, target: &FieldDescriptor) -> Result<Self> {
        Ok(RationalFunction { num: self.num.lift(target)?, den: self.den.lift(target)? })
    }

    fn require_nonconstant(&self, op: &'static str) -> Result<()> {
        if self.is_constant() {
            Err(Error::ConstantFunction(op))
        } else {
            Ok(())
        }
    }

    pub fn evaluate(&self, p: &ExtendedValue) -> ExtendedValue {
        match p {
            ExtendedValue::Finite(x) => {
                let d = self.den.eval(x);
                if d.is_zero() {
                    ExtendedValue::Infinity
                } else {
                    ExtendedValue::Finite(&self.num.eval(x) / &d)
                }
            }
            ExtendedValue::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree().unwrap_or(0);
                match dn {
                    None => ExtendedValue::Finite(FieldElement::zero(self.field())),
                    Some(dn) if dn < dd => ExtendedValue::Finite(FieldElement::zero(self.field())),
                    Some(dn) if dn == dd => ExtendedValue::Finite(
                        self.num.leading_coefficient().unwrap()
                            / self.den.leading_coefficient().unwrap(),
                    ),
                    Some(_) => ExtendedValue::Infinity,
                }
            }
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RationalFunction) -> RationalFunction {
        let n = self.degree();
        let p = &inner.num;
        let q = &inner.den;
        let mut p_pows = vec![UniPoly::one(self.field())];
        let mut q_pows = vec![UniPoly::one(self.field())];
        for k in 1..=n {
            p_pows.push(&p_pows[k - 1] * p);
            q_pows.push(&q_pows[k - 1] * q);
        }
        let homogenize = |poly: &UniPoly| {
            poly.coefficients()
                .iter()
                .enumerate()
                .fold(UniPoly::zero(self.field()), |acc, (k, c)| {
                    acc + (&p_pows[k] * &q_pows[n - k]).scale(c)
                })
        };
        RationalFunction::new(homogenize(&self.num), homogenize(&self.den))
            .expect("composition of reduced rational functions has a nonzero denominator")
    }

    /// `self − other`, reduced.
    pub fn difference(&self, other: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        let den = &self.den * &other.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }

    /// The multiset `f^{-1}(a)`.
    pub fn fiber_profile(&self, a: &ExtendedValue) -> Result<FiberProfile> {
        self.require_nonconstant("fiber profile")?;
        let deg = self.degree();
        let fiber_poly = match a {
            ExtendedValue::Finite(a) => &self.num - &self.den.scale(a),
            ExtendedValue::Infinity => self.den.clone(),
        };
        let finite_part = squarefree_decomposition(&fiber_poly)?;
        let infinity_multiplicity = (deg - fiber_poly.degree().unwrap_or(0)) as u32;
        Ok(FiberProfile { value: a.clone(), finite_part, infinity_multiplicity })
    }

    /// Wronskian `N′D − ND′`; its roots are the finite critical points with
    /// order `e_u − 1`, poles included.
    pub fn wronskian(&self) -> UniPoly {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    pub fn ramification(&self) -> Result<RamificationProfile> {
        self.require_nonconstant("ramification")?;
        let finite = squarefree_decomposition(&self.wronskian())?;
        let at_inf = self.evaluate(&ExtendedValue::Infinity);
        let e_inf = self.fiber_profile(&at_inf)?.infinity_multiplicity;
        Ok(RamificationProfile { finite, at_infinity: e_inf - 1 })
    }

    /// `Σ (e_u − 1)` over the whole sphere.
    pub fn ramification_total(&self) -> Result<usize> {
        Ok(self.ramification()?.total())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::format_ratfunc(self))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field())
    }
}

/// Preimage of a value with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberProfile {
    pub value: ExtendedValue,
    pub finite_part: SquarefreeDecomposition,
    pub infinity_multiplicity: u32,
}

impl FiberProfile {
    /// Points counted with multiplicity; equals the map degree.
    pub fn mass(&self) -> usize {
        self.finite_part.mass() + self.infinity_multiplicity as usize
    }

    /// Same points with the same multiplicities (the scalar unit is ignored).
    pub fn same_points(&self, other: &FiberProfile) -> bool {
        self.finite_part.factors == other.finite_part.factors
            && self.infinity_multiplicity == other.infinity_multiplicity
    }

    pub fn is_empty(&self) -> bool {
        self.finite_part.factors.is_empty() && self.infinity_multiplicity == 0
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.finite_part.max_multiplicity().max(self.infinity_multiplicity)
    }

    /// Removes the given points from the fiber.
    pub fn restrict(&self, punctures: &[ExtendedValue]) -> Result<FiberProfile> {
        let field = self.finite_part.unit.field();
        let finite: Vec<FieldElement> = punctures
            .iter()
            .filter_map(ExtendedValue::finite)
            .map(|p| p.lift(field))
            .collect::<Result<_>>()?;
        let removed = UniPoly::from_roots(field, &finite);
        let mut factors = Vec::new();
        for (f, m) in &self.finite_part.factors {
            let kept = f.exact_div(&gcd(f, &removed)?)?;
            if !kept.is_constant() {
                factors.push((kept, *m));
            }
        }
        let infinity_multiplicity = if punctures.iter().any(ExtendedValue::is_infinity) {
            0
        } else {
            self.infinity_multiplicity
        };
        Ok(FiberProfile {
            value: self.value.clone(),
            finite_part: SquarefreeDecomposition { unit: self.finite_part.unit.clone(), factors },
            infinity_multiplicity,
        })
    }
}

/// Critical points with their contributions `e_u − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationProfile {
    /// Squarefree decomposition of the Wronskian: a root of exact
    /// multiplicity `k` is a finite point with `e_u − 1 = k`.
    pub finite: SquarefreeDecomposition,
    pub at_infinity: u32,
}

impl RamificationProfile {
    pub fn total(&self) -> usize {
        self.finite.mass() + self.at_infinity as usize
    }
}
