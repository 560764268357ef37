//! Exact arithmetic for the Tribonacci and Tribonacci-Lucas families.
//!
//! - [`poly`]: dense integer polynomials, the coefficient substrate.
//! - [`sequences`]: `T_n`, `K_n`, `T_n(x)`, `K_n(x)` and a Binet cross-check.
//! - [`triangles`]: the Tribonacci-Lucas triangle `B(n,i)` and its polynomial analogue.
//! - [`incomplete`]: incomplete Tribonacci and Tribonacci-Lucas numbers and polynomials.
//! - [`genfunc`]: truncated power series and rational generating functions.
//! - [`verify`]: the identity catalog, exhaustive sweeps and the errata report.

pub mod binomial;
pub mod error;
pub mod genfunc;
pub mod incomplete;
pub mod poly;
pub mod sequences;
pub mod triangles;
pub mod verify;

use std::fmt;

use serde::{Serialize, Serializer};

pub use error::{Error, Result};
pub use poly::{Degree, ExactInt, IntPoly, MonomialRing, Rational, Ring};

/// A value of one of the families: an integer or a polynomial in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyValue {
    Number(ExactInt),
    Poly(IntPoly),
}

impl FamilyValue {
    /// Value at `x = 1`; numbers are returned unchanged.
    pub fn at_one(&self) -> ExactInt {
        match self {
            FamilyValue::Number(v) => v.clone(),
            FamilyValue::Poly(p) => p.at_one(),
        }
    }
}

impl fmt::Display for FamilyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyValue::Number(v) => write!(f, "{v}"),
            FamilyValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for FamilyValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<ExactInt> for FamilyValue {
    fn from(v: ExactInt) -> Self {
        FamilyValue::Number(v)
    }
}

impl From<IntPoly> for FamilyValue {
    fn from(p: IntPoly) -> Self {
        FamilyValue::Poly(p)
    }
}
