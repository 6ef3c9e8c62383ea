use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Rational};

/// Trial division stops being reasonable well before this.
const MAX_SEARCH_COEFFICIENT: u64 = 1_000_000_000_000;

fn positive_divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&v| v <= MAX_SEARCH_COEFFICIENT)
        .ok_or_else(|| Error::CoefficientTooLarge(n.to_string()))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// All roots of `p` lying in ℚ, sorted and without repetition.
///
/// Requires every coefficient to be rational; candidates come from the
/// rational root theorem after clearing denominators.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<FieldElement>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("rational roots"));
    }
    let rationals: Vec<Rational> = p
        .coefficients()
        .iter()
        .map(|c| c.as_rational().ok_or(Error::NonRationalCoefficients))
        .collect::<Result<_>>()?;
    let den_lcm = rationals.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        rationals.iter().map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer()).collect();

    let field = p.field();
    let mut roots = Vec::new();
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[shift..];
    if ints.len() > 1 {
        let nums = positive_divisors(&ints[0])?;
        let dens = positive_divisors(ints.last().unwrap())?;
        for &a in &nums {
            for &b in &dens {
                if a.gcd(&b) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(a) * sign, BigInt::from(b));
                    let x = FieldElement::from_rational(field, cand.clone());
                    if p.eval(&x).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots.into_iter().map(|r| FieldElement::from_rational(field, r)).collect())
}
