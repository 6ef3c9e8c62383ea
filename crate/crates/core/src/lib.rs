//! Exact computations around value sharing of meromorphic functions: when
//! do two maps from a (punctured) compact Riemann surface to the sphere
//! have the same preimages over a value, and how many such values can two
//! distinct maps share.
//!
//! Everything is exact. Scalars live in ℚ or a cyclotomic field ℚ(ζ_r)
//! ([`exactnum`]); on top sit polynomials ([`poly`]), rational functions and
//! Möbius maps ([`ratfunc`]), the sharing classifier ([`sharing`]), explicit
//! plane-curve families ([`curve`]) and closed-form bounds ([`bounds`]).
//! [`exprio`] reads and prints all of these, and [`cli`] is the command
//! line front end, including a catalog of worked examples.

pub mod bounds;
pub mod cli;
pub mod curve;
pub mod error;
pub mod exactnum;
pub mod exprio;
pub mod poly;
pub mod ratfunc;
pub mod sharing;

pub use error::{Error, Result};
