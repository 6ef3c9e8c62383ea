use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::{FieldDescriptor, FieldElement, Rational};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: FieldDescriptor,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero(field: &FieldDescriptor) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldDescriptor) -> Self {
        Self::constant(FieldElement::one(field))
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Self::from_coeffs(&field, vec![c])
    }

    /// The variable itself.
    pub fn x(field: &FieldDescriptor) -> Self {
        Self::monomial(FieldElement::one(field), 1)
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![FieldElement::zero(&field); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(&field, coeffs)
    }

    /// `z − a`.
    pub fn linear(a: &FieldElement) -> Self {
        Self::from_coeffs(a.field(), vec![-a, FieldElement::one(a.field())])
    }

    /// Panics if a coefficient lives in another field.
    pub fn from_coeffs(field: &FieldDescriptor, mut coeffs: Vec<FieldElement>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.field() == field),
            "polynomial coefficients must share the field {field}"
        );
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn from_integers(field: &FieldDescriptor, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| FieldElement::from_integer(field, c)).collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn from_rationals(field: &FieldDescriptor, coeffs: &[Rational]) -> Self {
        let coeffs =
            coeffs.iter().map(|c| FieldElement::from_rational(field, c.clone())).collect();
        Self::from_coeffs(field, coeffs)
    }

    /// `Π (z − a)` over the given roots.
    pub fn from_roots(field: &FieldDescriptor, roots: &[FieldElement]) -> Self {
        roots.iter().fold(Self::one(field), |acc, a| acc * Self::linear(a))
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn coefficients(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Zero or a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_coeffs(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("leading coefficient is nonzero")),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * FieldElement::from_integer(&self.field, k as i64))
            .collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lc = divisor.leading_coefficient().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inverse()?;
        let dd = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let mut quot = vec![FieldElement::zero(&self.field); rem.len() - dd + 1];
        while rem.len() >= dd {
            let shift = rem.len() - dd;
            let c = rem.last().unwrap() * &lc_inv;
            for (k, y) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = &rem[shift + k] - &(&c * y);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(FieldElement::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(&self.field, quot), Self::from_coeffs(&self.field, rem)))
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Precondition("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::zero(&self.field), |acc, c| &(&acc * x) + c)
    }

    /// `self(inner(z))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(&self.field), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
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

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_rational)
    }

    /// Moves all coefficients into `target`.
    pub fn lift(&self, target: &FieldDescriptor) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.lift(target)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(target, coeffs))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> Self {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        let zero = FieldElement::zero(&self.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| op(self.coeffs.get(k).unwrap_or(&zero), other.coeffs.get(k).unwrap_or(&zero)))
            .collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![FieldElement::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(&self.field, out)
    }
}

/// Monic greatest common divisor by plain Euclid.
pub fn gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial("gcd"));
    }
    let mut a = p.monic();
    let mut b = q.monic();
    while !b.is_zero() {
        let r = a.div_rem(&b)?.1;
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

/// Monic least common multiple; zero if either input is zero.
pub fn lcm(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() || q.is_zero() {
        return Ok(UniPoly::zero(p.field()));
    }
    let g = gcd(p, q)?;
    Ok((p * &q.exact_div(&g)?).monic())
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.mul_impl(rhs)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::format_uni(self, "z"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}[z]", self, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_integers(&q(), c)
    }

    #[test]
    fn gcd_examples() {
        // (z−1)(z+1) and z−1
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[-1, 0, 1])).unwrap(), p(&[1]));
        assert_eq!(gcd(&p(&[4, 2]), &UniPoly::zero(&q())).unwrap(), p(&[2, 1]));
        assert_eq!(
            gcd(&UniPoly::zero(&q()), &UniPoly::zero(&q())),
            Err(Error::ZeroPolynomial("gcd"))
        );
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(UniPoly::zero(&q()).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3, 0]).degree(), Some(2));
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert_eq!(p(&[1, 1]).div_rem(&UniPoly::zero(&q())), Err(Error::DivisionByZero));
    }

    #[test]
    fn composition_and_evaluation() {
        let f = p(&[1, 0, 1]); // z² + 1
        let g = p(&[-1, 1]); // z − 1
        let h = f.compose(&g);
        assert_eq!(h, p(&[2, -2, 1]));
        let three = FieldElement::from_integer(&q(), 3);
        assert_eq!(h.eval(&three), f.eval(&g.eval(&three)));
    }

    #[test]
    fn lcm_times_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 2, 1]);
        let g = gcd(&a, &b).unwrap();
        let l = lcm(&a, &b).unwrap();
        assert_eq!(&g * &l, (&a * &b).monic());
    }
}
