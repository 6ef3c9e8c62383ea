//! Seeded generators and small independent oracles shared by the
//! integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vsl::exactnum::{FieldDescriptor, FieldElement, Rational};
use vsl::poly::{BiPoly, UniPoly};
use vsl::ratfunc::{ExtendedValue, MoebiusTransform, RationalFunction};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(field: &FieldDescriptor, n: i64) -> FieldElement {
    FieldElement::from_integer(field, n)
}

pub fn fields() -> Vec<FieldDescriptor> {
    let mut v = vec![FieldDescriptor::rationals()];
    for r in [3, 4, 5, 8, 12] {
        v.push(FieldDescriptor::cyclotomic(r).unwrap());
    }
    v
}

pub fn random_field(rng: &mut impl Rng) -> FieldDescriptor {
    let all = fields();
    all[rng.gen_range(0..all.len())].clone()
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let den = if rng.gen_bool(0.7) { 1 } else { rng.gen_range(1..=6) };
    q(rng.gen_range(-9..=9), den)
}

/// Random element given by its coordinates in the power basis.
pub fn random_element(rng: &mut impl Rng, field: &FieldDescriptor) -> FieldElement {
    let mut acc = FieldElement::zero(field);
    for k in 0..field.degree() {
        if rng.gen_bool(0.5) || k == 0 {
            let c = FieldElement::from_rational(field, random_rational(rng));
            let t = if k == 0 { c } else { c.checked_mul(&FieldElement::zeta_power(field, k as u32).unwrap()).unwrap() };
            acc = acc.checked_add(&t).unwrap();
        }
    }
    acc
}

pub fn random_nonzero(rng: &mut impl Rng, field: &FieldDescriptor) -> FieldElement {
    loop {
        let x = random_element(rng, field);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_small_int(rng: &mut impl Rng, field: &FieldDescriptor) -> FieldElement {
    int(field, rng.gen_range(-5..=5))
}

pub fn random_uni(rng: &mut impl Rng, field: &FieldDescriptor, max_deg: usize, sparse: bool) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg)
        .map(|_| if sparse && rng.gen_bool(0.4) { FieldElement::zero(field) } else { random_element(rng, field) })
        .collect();
    UniPoly::from_coeffs(field, coeffs)
}

pub fn random_int_uni(rng: &mut impl Rng, field: &FieldDescriptor, max_deg: usize) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-5..=5)).collect();
    UniPoly::from_integers(field, &coeffs)
}

/// Nonconstant rational function with integer coefficients and numerator
/// and denominator of degree at most `max_deg`.
pub fn random_ratfunc(rng: &mut impl Rng, field: &FieldDescriptor, max_deg: usize) -> RationalFunction {
    loop {
        let num = random_int_uni(rng, field, max_deg);
        let den = random_int_uni(rng, field, max_deg);
        if den.is_zero() {
            continue;
        }
        let f = RationalFunction::new(num, den).unwrap();
        if !f.is_constant() {
            return f;
        }
    }
}

pub fn random_bipoly(rng: &mut impl Rng, field: &FieldDescriptor, max_deg: u32) -> BiPoly {
    let n = rng.gen_range(0..6);
    let terms = (0..n)
        .map(|_| {
            let c = random_element(rng, field);
            BiPoly::term(c, rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg))
        })
        .fold(BiPoly::zero(field), |acc, t| &acc + &t);
    terms
}

pub fn random_moebius(rng: &mut impl Rng, field: &FieldDescriptor) -> MoebiusTransform {
    loop {
        let c: Vec<FieldElement> = (0..4).map(|_| random_small_int(rng, field)).collect();
        if let Ok(m) = MoebiusTransform::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()) {
            return m;
        }
    }
}

pub fn random_value(rng: &mut impl Rng, field: &FieldDescriptor) -> ExtendedValue {
    if rng.gen_bool(0.15) {
        ExtendedValue::Infinity
    } else {
        ExtendedValue::Finite(random_element(rng, field))
    }
}


/// Horner evaluation of a rational-coefficient polynomial; test-side only.
pub fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(q(0, 1), |acc, c| acc * x + c)
}
