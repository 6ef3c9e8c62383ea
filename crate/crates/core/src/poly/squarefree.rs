use super::uni::{gcd, UniPoly};
use crate::error::{Error, Result};
use crate::exactnum::FieldElement;

/// `p = unit · Π factor^multiplicity` with monic, squarefree, pairwise
/// coprime factors listed by strictly increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: FieldElement,
    pub factors: Vec<(UniPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn recompose(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| acc * f.pow(*m))
    }

    /// Product of all factors: the monic squarefree part (radical).
    pub fn radical(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::one(self.unit.field()), |acc, (f, _)| acc * f)
    }

    /// Factor whose roots have exactly this multiplicity (1 if none).
    pub fn with_multiplicity(&self, mult: u32) -> UniPoly {
        self.factors
            .iter()
            .find(|(_, m)| *m == mult)
            .map(|(f, _)| f.clone())
            .unwrap_or_else(|| UniPoly::one(self.unit.field()))
    }

    /// Product of the factors of multiplicity strictly above `mult`.
    pub fn above_multiplicity(&self, mult: u32) -> UniPoly {
        self.factors
            .iter()
            .filter(|(_, m)| *m > mult)
            .fold(UniPoly::one(self.unit.field()), |acc, (f, _)| acc * f)
    }

    /// Number of roots counted with multiplicity.
    pub fn mass(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| f.degree().unwrap_or(0) * *m as usize)
            .sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.factors.last().map_or(0, |(_, m)| *m)
    }
}

/// Yun's algorithm. Correct in characteristic 0.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<SquarefreeDecomposition> {
    let unit = p
        .leading_coefficient()
        .cloned()
        .ok_or(Error::ZeroPolynomial("squarefree decomposition"))?;
    let f = p.monic();
    let mut factors = Vec::new();
    if f.is_constant() {
        return Ok(SquarefreeDecomposition { unit, factors });
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut mult = 1u32;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        if !a.is_constant() {
            factors.push((a.clone(), mult));
        }
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        mult += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}
