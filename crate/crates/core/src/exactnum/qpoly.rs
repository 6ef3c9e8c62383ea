//! Dense polynomials over ℚ as bare coefficient vectors, lowest degree first.
//!
//! These helpers back the residue arithmetic of cyclotomic fields. They sit
//! below [`crate::poly`], which is generic over field elements and therefore
//! cannot be used to define the fields themselves.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(k).cloned().unwrap_or_else(Rational::zero);
        out.push(x + y);
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(k).cloned().unwrap_or_else(Rational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (k, y) in b.iter().enumerate() {
            rem[shift + k] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn rem(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    div_rem(a, m).1
}

/// Inverse of `a` modulo `m`, when `gcd(a, m)` is a unit.
pub(crate) fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0 = m.to_vec();
    let mut r1 = rem(a, m);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    Some(rem(&scale(&s0, &c), m))
}

pub(crate) fn monomial(degree: usize, c: Rational) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); degree + 1];
    v[degree] = c;
    trim(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        let mut out: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x.into())).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn division_identity() {
        let a = q(&[-1, 0, 0, 0, 1]);
        let b = q(&[1, 1]);
        let (quot, r) = div_rem(&a, &b);
        assert!(r.is_empty());
        assert_eq!(add(&mul(&quot, &b), &r), a);
    }

    #[test]
    fn inverse_modulo_irreducible() {
        // (t + 2)^{-1} mod t^2 + 1
        let m = q(&[1, 0, 1]);
        let a = q(&[2, 1]);
        let inv = inverse_mod(&a, &m).unwrap();
        assert_eq!(rem(&mul(&a, &inv), &m), q(&[1]));
    }

    #[test]
    fn no_inverse_for_common_factor() {
        let m = q(&[-1, 0, 1]);
        let a = q(&[-1, 1]);
        assert!(inverse_mod(&a, &m).is_none());
    }
}
