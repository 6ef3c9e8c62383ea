use std::collections::BTreeMap;

use num_traits::One;

use super::{qpoly, Rational};
use crate::error::{Error, Result};

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `r`-th cyclotomic polynomial Φ_r as rational coefficients, lowest
/// degree first.
///
/// Computed bottom-up over the divisors of `r`: Φ_d = (t^d − 1) / Π_{e | d, e < d} Φ_e.
pub fn cyclotomic_polynomial(r: u32) -> Result<Vec<Rational>> {
    if r == 0 {
        return Err(Error::ZeroOrder);
    }
    let divs = divisors(r);
    let mut memo: BTreeMap<u32, Vec<Rational>> = BTreeMap::new();
    for &d in &divs {
        let mut acc = qpoly::sub(
            &qpoly::monomial(d as usize, Rational::one()),
            &[Rational::one()],
        );
        for (&e, phi) in &memo {
            if e < d && d % e == 0 {
                let (quot, rem) = qpoly::div_rem(&acc, phi);
                debug_assert!(rem.is_empty());
                acc = quot;
            }
        }
        memo.insert(d, acc);
    }
    Ok(memo.remove(&r).unwrap())
}
