//! Closed-form upper bounds on the number of shared values.
//!
//! Every bound is kept as an exact value `a + b√N` together with its floor;
//! floors are decided by integer comparisons, never floating point.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::ratfunc::{concyclic, ensure_distinct, ExtendedValue};

/// Genus `g`, gonality `d` and number of punctures `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceParams {
    pub g: u64,
    pub d: u64,
    pub r: u64,
}

impl SurfaceParams {
    pub fn new(g: u64, d: u64, r: u64) -> Self {
        SurfaceParams { g, d, r }
    }
}

pub fn euler_characteristic(p: SurfaceParams) -> i64 {
    2 - 2 * p.g as i64 - p.r as i64
}

pub fn is_hyperbolic(p: SurfaceParams) -> bool {
    euler_characteristic(p) < 0
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `a + b√n` with rational `a, b` and integer `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub a: Rational,
    pub b: Rational,
    pub n: BigInt,
}

impl Surd {
    pub fn rational(a: Rational) -> Self {
        Surd { a, b: Rational::zero(), n: BigInt::zero() }
    }

    pub fn new(a: Rational, b: Rational, n: BigInt) -> Self {
        Surd { a, b, n }
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero() || !self.n.is_negative()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.b.is_zero() || self.n.is_zero() {
            return Some(self.a.clone());
        }
        let s = self.n.sqrt();
        (&s * &s == self.n).then(|| &self.a + &self.b * Rational::from_integer(s))
    }

    /// Whether `k ≤ self`.
    fn at_least(&self, k: &BigInt) -> bool {
        let x = Rational::from_integer(k.clone()) - &self.a;
        if self.b.is_zero() || self.n.is_zero() {
            return !x.is_positive();
        }
        let rhs = &self.b * &self.b * Rational::from_integer(self.n.clone());
        if self.b.is_positive() {
            !x.is_positive() || &x * &x <= rhs
        } else {
            x.is_negative() && &x * &x >= rhs
        }
    }

    /// Greatest integer not exceeding the value; `None` when not real.
    pub fn floor(&self) -> Option<BigInt> {
        if !self.is_real() {
            return None;
        }
        let root = if self.n.is_positive() { self.n.sqrt() } else { BigInt::zero() };
        let guess = &self.a + &self.b * Rational::from_integer(root);
        let mut k = guess.floor().to_integer();
        while self.at_least(&(&k + 1)) {
            k += 1;
        }
        while !self.at_least(&k) {
            k -= 1;
        }
        Some(k)
    }

    pub fn to_f64(&self) -> f64 {
        let f = |q: &Rational| q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN);
        f(&self.a) + f(&self.b) * self.n.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational().filter(|_| self.b.is_zero() || self.n.is_zero()) {
            return write!(f, "{q}");
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        let mag = self.b.abs();
        let coef = if mag == rat(1) { String::new() } else { format!("{mag}*") };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coef}sqrt({})", self.n)
        } else {
            write!(f, "{} {sign} {coef}sqrt({})", self.a, self.n)
        }
    }
}

/// A known fact reported alongside bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CitedFact {
    pub text: String,
    pub citation: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTerm {
    pub name: String,
    pub raw: Surd,
    /// Floor of `raw`, when the term applies.
    pub integer_bound: Option<i64>,
    pub applicable: bool,
    pub citation: &'static str,
}

impl BoundTerm {
    fn new(name: impl Into<String>, raw: Surd, citation: &'static str) -> Self {
        let integer_bound = raw.floor().and_then(|k| k.to_i64());
        BoundTerm { name: name.into(), applicable: integer_bound.is_some(), integer_bound, raw, citation }
    }

    fn inapplicable(name: impl Into<String>, raw: Surd, citation: &'static str) -> Self {
        BoundTerm { name: name.into(), raw, integer_bound: None, applicable: false, citation }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: &'static str,
    pub terms: Vec<BoundTerm>,
    /// Minimum integer bound over applicable terms.
    pub operative: Option<i64>,
    pub flags: BTreeMap<&'static str, bool>,
    pub notes: Vec<CitedFact>,
}

impl BoundReport {
    fn new(name: &'static str, terms: Vec<BoundTerm>) -> Self {
        let operative = terms.iter().filter(|t| t.applicable).filter_map(|t| t.integer_bound).min();
        BoundReport { name, terms, operative, flags: BTreeMap::new(), notes: Vec::new() }
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        self.flags.get(key).copied()
    }
}

/// Bounds for two distinct functions on a compact surface of genus `g`
/// and gonality `d`; `one_value_cm` selects the stronger variant.
pub fn theorem_a_bound(g: u64, d: u64, one_value_cm: bool) -> Result<BoundReport> {
    if d == 0 {
        return Err(Error::Precondition("gonality must be positive".into()));
    }
    if g == 0 {
        if d != 1 {
            return Err(Error::GenusZeroGonality(d));
        }
        let term = BoundTerm::new("sphere", Surd::rational(rat(3)), "Theorem A c)");
        return Ok(BoundReport::new("theorem_A", vec![term]));
    }
    let (gi, di) = (g as i64, d as i64);
    let terms = if one_value_cm {
        let radicand = BigInt::from(4 * gi + 5 - 2 * di);
        let first = Surd::new(frac(5, 2), frac(1, 2), radicand.clone());
        let name = "(5 + sqrt(4g + 5 - 2d))/2";
        vec![
            if radicand.is_negative() {
                BoundTerm::inapplicable(name, first, "Theorem A b)")
            } else {
                BoundTerm::new(name, first, "Theorem A b)")
            },
            BoundTerm::new("2d + 1", Surd::rational(rat(2 * di + 1)), "Theorem A b)"),
            BoundTerm::new("3 + 2(g - 1)/d", Surd::rational(rat(3) + frac(2 * (gi - 1), di)), "Theorem A b)"),
        ]
    } else {
        vec![
            BoundTerm::new("2 + sqrt(2g + 2)", Surd::new(rat(2), rat(1), BigInt::from(2 * gi + 2)), "Theorem A a)"),
            BoundTerm::new("2d + 1", Surd::rational(rat(2 * di + 1)), "Theorem A a)"),
            BoundTerm::new("4 + 2(g - 1)/d", Surd::rational(rat(4) + frac(2 * (gi - 1), di)), "Theorem A a)"),
        ]
    };
    Ok(BoundReport::new("theorem_A", terms))
}

/// `4 + (2g − 2 + r)/d` for hyperbolic punctured surfaces.
pub fn theorem5_bound(p: SurfaceParams) -> Result<BoundReport> {
    if p.d == 0 {
        return Err(Error::Precondition("gonality must be positive".into()));
    }
    let chi = euler_characteristic(p);
    if chi >= 0 {
        return Err(Error::NotHyperbolic { chi });
    }
    let raw = rat(4) + frac(-chi, p.d as i64);
    let integral = raw.is_integer();
    let mut rep =
        BoundReport::new("theorem_5", vec![BoundTerm::new("4 + (2g - 2 + r)/d", Surd::rational(raw), "Theorem 5")]);
    rep.flags.insert("integral", integral);
    if integral {
        rep.notes.push(CitedFact {
            text: "when the bound is attained, both functions extend meromorphically to the compact surface".into(),
            citation: "Theorem 5",
        });
    }
    Ok(rep)
}

/// `r + 2` once there are at least `2d` punctures.
pub fn theorem9_bound(p: SurfaceParams) -> Result<BoundReport> {
    if p.d == 0 {
        return Err(Error::Precondition("gonality must be positive".into()));
    }
    let applicable = p.r >= 2 * p.d;
    let raw = Surd::rational(rat(p.r as i64 + 2));
    let term = if applicable {
        BoundTerm::new("r + 2", raw, "Theorem 9")
    } else {
        BoundTerm::inapplicable("r + 2", raw, "Theorem 9")
    };
    let mut rep = BoundReport::new("theorem_9", vec![term]);
    // window 2d ≤ r < 2g/(d − 1) + 2, i.e. (r − 2)(d − 1) < 2g
    let in_window =
        p.d >= 2 && applicable && (p.r as i64 - 2) * (p.d as i64 - 1) < 2 * p.g as i64;
    rep.flags.insert("in_window", in_window);
    let beats = applicable
        && is_hyperbolic(p)
        && rat(p.r as i64 + 2) < rat(4) + frac(2 * p.g as i64 - 2 + p.r as i64, p.d as i64);
    rep.flags.insert("beats_theorem_5", beats);
    Ok(rep)
}

/// Bound for two distinct rational functions on the sphere minus `r`
/// points. With exactly five points that do not lie on a common circle or
/// line the bound drops from 7 to 6.
pub fn sphere_puncture_bound(r: u64, points: Option<&[ExtendedValue]>) -> Result<BoundReport> {
    let mut concyclic_points = None;
    if let Some(pts) = points {
        if pts.len() as u64 != r {
            return Err(Error::PointCountMismatch { expected: r as usize, got: pts.len() });
        }
        ensure_distinct(pts)?;
        if pts.len() >= 4 {
            concyclic_points = Some(concyclic(pts)?);
        }
    }
    let mut terms = vec![match r {
        0 => BoundTerm::new("compact sphere", Surd::rational(rat(3)), "Theorem A c)"),
        1 | 2 => BoundTerm::new("at most two punctures", Surd::rational(rat(4)), "Section 3"),
        _ => BoundTerm::new("r + 2", Surd::rational(rat(r as i64 + 2)), "Corollary 6"),
    }];
    if r == 5 && concyclic_points == Some(false) {
        terms.push(BoundTerm::new("five points not on a circle", Surd::rational(rat(6)), "Example 7"));
    }
    let mut rep = BoundReport::new("sphere_punctures", terms);
    if let Some(c) = concyclic_points {
        rep.flags.insert("concyclic", c);
    }
    rep.notes.push(CitedFact {
        text: "near an essential singularity, five shared values force equality".into(),
        citation: "Theorem B",
    });
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Proposition8 {
    pub r: u64,
    pub shared_count: u64,
    /// `s + 2 = 4 + (2g − 2 + r)/d`.
    pub identity_holds: bool,
}

/// Puncture count and shared-value count realized by a degree-`s` map on a
/// surface of genus `g` and gonality `d`.
pub fn proposition8_parameters(g: u64, d: u64, s: u64) -> Result<Proposition8> {
    if d == 0 || s == 0 {
        return Err(Error::Precondition("d and s must be positive".into()));
    }
    let (g, d, s) = (g as i64, d as i64, s as i64);
    let r = d * s - (2 * d + 2 * g - 2);
    if r < 0 {
        return Err(Error::NegativePunctures(r));
    }
    let identity_holds = rat(s + 2) == rat(4) + frac(2 * g - 2 + r, d);
    Ok(Proposition8 { r: r as u64, shared_count: s as u64 + 2, identity_holds })
}

/// Total ramification `2g − 2 + 2d` of a degree-`d` map from a genus-`g`
/// surface onto the sphere.
pub fn hurwitz_ramification_cap(g: u64, d: u64) -> i64 {
    2 * g as i64 - 2 + 2 * d as i64
}
