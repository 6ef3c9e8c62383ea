//! Univariate and bivariate polynomials over a [`FieldElement`] scalar.
//!
//! [`FieldElement`]: crate::exactnum::FieldElement

mod bi;
mod roots;
mod squarefree;
mod uni;

pub use bi::{is_eisenstein, BiPoly, EisensteinReport, Var};
pub use roots::rational_roots;
pub use squarefree::{squarefree_decomposition, SquarefreeDecomposition};
pub use uni::{gcd, lcm, UniPoly};
