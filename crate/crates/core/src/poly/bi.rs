use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::exactnum::{FieldDescriptor, FieldElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::Y => "Y",
        }
    }
}

/// Sparse bivariate polynomial in X and Y, keyed by `(deg_X, deg_Y)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: FieldDescriptor,
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl BiPoly {
    pub fn zero(field: &FieldDescriptor) -> Self {
        BiPoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn one(field: &FieldDescriptor) -> Self {
        Self::constant(FieldElement::one(field))
    }

    /// `c · X^i · Y^j`.
    pub fn term(c: FieldElement, i: u32, j: u32) -> Self {
        let field = c.field().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { field, terms }
    }

    pub fn var(field: &FieldDescriptor, v: Var) -> Self {
        match v {
            Var::X => Self::term(FieldElement::one(field), 1, 0),
            Var::Y => Self::term(FieldElement::one(field), 0, 1),
        }
    }

    pub fn from_terms(
        field: &FieldDescriptor,
        terms: impl IntoIterator<Item = ((u32, u32), FieldElement)>,
    ) -> Self {
        let mut out = Self::zero(field);
        for ((i, j), c) in terms {
            out.add_term(i, j, &c);
        }
        out
    }

    /// Embeds a univariate polynomial as a polynomial in `v`.
    pub fn from_uni(p: &UniPoly, v: Var) -> Self {
        let terms = p.coefficients().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            (if v == Var::X { (k, 0) } else { (0, k) }, c.clone())
        });
        Self::from_terms(p.field(), terms)
    }

    fn add_term(&mut self, i: u32, j: u32, c: &FieldElement) {
        assert_eq!(c.field(), &self.field, "bivariate coefficients must share the field");
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&(i, j)) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&(i, j));
        } else {
            self.terms.insert((i, j), sum);
        }
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> FieldElement {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| if v == Var::X { i } else { j })
            .max()
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_terms(&self.field, self.terms.iter().map(|(k, v)| (*k, v * c)))
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

    pub fn evaluate(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.terms.iter().fold(FieldElement::zero(&self.field), |acc, (&(i, j), c)| {
            &acc + &(c * &x.pow(i) * y.pow(j))
        })
    }

    /// Substitutes `value` for `v`, leaving a polynomial in the other variable.
    pub fn partial_evaluate(&self, v: Var, value: &FieldElement) -> UniPoly {
        let mut coeffs: Vec<FieldElement> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (fixed, free) = if v == Var::X { (i, j) } else { (j, i) };
            let free = free as usize;
            if coeffs.len() <= free {
                coeffs.resize(free + 1, FieldElement::zero(&self.field));
            }
            coeffs[free] = &coeffs[free] + &(c * value.pow(fixed));
        }
        UniPoly::from_coeffs(&self.field, coeffs)
    }

    /// Writing `F = Σ c_k · main^k`, returns `c_k` as a polynomial in the
    /// other variable.
    pub fn coefficient_in(&self, main: Var, k: u32) -> UniPoly {
        let mut coeffs: Vec<FieldElement> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (m, free) = if main == Var::X { (i, j) } else { (j, i) };
            if m != k {
                continue;
            }
            let free = free as usize;
            if coeffs.len() <= free {
                coeffs.resize(free + 1, FieldElement::zero(&self.field));
            }
            coeffs[free] = c.clone();
        }
        UniPoly::from_coeffs(&self.field, coeffs)
    }

    /// Homogeneous component of top total degree.
    pub fn leading_form(&self) -> Result<Self> {
        let top = self.total_degree().ok_or(Error::ZeroPolynomial("leading form"))?;
        Ok(Self::from_terms(
            &self.field,
            self.terms
                .iter()
                .filter(|((i, j), _)| i + j == top)
                .map(|(k, c)| (*k, c.clone())),
        ))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|(i, j)| i + j);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        let mut out = Self::zero(&self.field);
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, &(a * b));
            }
        }
        out
    }
}

/// Outcome of the Eisenstein test for `F = Σ c_k(prime) · main^k` with
/// respect to the prime element given by the other variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinReport {
    pub main: Var,
    pub main_degree: Option<u32>,
    pub leading_is_nonzero_constant: bool,
    /// Indices `k` below the top degree where the prime does not divide `c_k`.
    pub not_divisible: Vec<u32>,
    /// Whether the prime squared divides `c_0`.
    pub constant_term_divisible_by_square: bool,
}

impl EisensteinReport {
    pub fn holds(&self) -> bool {
        self.main_degree.is_some_and(|d| d > 0)
            && self.leading_is_nonzero_constant
            && self.not_divisible.is_empty()
            && !self.constant_term_divisible_by_square
    }

    /// Human-readable list of failed conditions.
    pub fn failures(&self) -> Vec<String> {
        let prime = self.main.other().name();
        let mut out = Vec::new();
        if !self.main_degree.is_some_and(|d| d > 0) {
            out.push(format!("no positive degree in {}", self.main.name()));
            return out;
        }
        if !self.leading_is_nonzero_constant {
            out.push("leading coefficient is not a nonzero constant".into());
        }
        for k in &self.not_divisible {
            out.push(format!("coefficient of {}^{k} not divisible by {prime}", self.main.name()));
        }
        if self.constant_term_divisible_by_square {
            out.push(format!("constant term divisible by {prime}^2"));
        }
        out
    }
}

/// Eisenstein criterion in `main` with respect to the prime element given by
/// the other variable.
pub fn is_eisenstein(f: &BiPoly, main: Var) -> EisensteinReport {
    let main_degree = f.degree_in(main);
    let Some(n) = main_degree else {
        return EisensteinReport {
            main,
            main_degree,
            leading_is_nonzero_constant: false,
            not_divisible: Vec::new(),
            constant_term_divisible_by_square: true,
        };
    };
    let lead = f.coefficient_in(main, n);
    let mut not_divisible = Vec::new();
    for k in 0..n {
        let c = f.coefficient_in(main, k);
        if !c.coefficient(0).is_zero() {
            not_divisible.push(k);
        }
    }
    let c0 = f.coefficient_in(main, 0);
    EisensteinReport {
        main,
        main_degree,
        leading_is_nonzero_constant: lead.degree() == Some(0),
        not_divisible,
        constant_term_divisible_by_square: c0.coefficient(0).is_zero()
            && c0.coefficient(1).is_zero(),
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, &-c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.mul_impl(rhs)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::from_terms(&self.field, self.terms.iter().map(|(k, c)| (*k, -c)))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::format_bi(self))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}[X, Y]", self, self.field)
    }
}
