//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficient `k` of an [`IntPoly`] multiplies `x^k`. Every constructor and
//! operation returns canonical form: no trailing zero coefficients, and the
//! zero polynomial has no coefficients at all.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Exact rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Commutative ring with the operations the series and generating-function
/// code needs. Implemented for [`ExactInt`], [`Rational`] and [`IntPoly`].
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Send
        + Sync
{
}

/// A ring in which the monomial `c * x^e` can be formed.
///
/// For [`ExactInt`] the indeterminate is specialised to `x = 1`, so the same
/// generic code produces both the polynomial families and their numbers.
pub trait MonomialRing: Ring {
    fn monomial(coeff: ExactInt, exp: usize) -> Self;

    /// Multiply by `x^k`.
    fn mul_x_pow(self, k: usize) -> Self;
}

impl MonomialRing for ExactInt {
    fn monomial(coeff: ExactInt, _exp: usize) -> Self {
        coeff
    }

    fn mul_x_pow(self, _k: usize) -> Self {
        self
    }
}

impl MonomialRing for IntPoly {
    fn monomial(coeff: ExactInt, exp: usize) -> Self {
        IntPoly::monomial(coeff, exp)
    }

    fn mul_x_pow(self, k: usize) -> Self {
        self.shift(k)
    }
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<ExactInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<ExactInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<ExactInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(ExactInt::one(), 1)
    }

    pub fn monomial(coeff: impl Into<ExactInt>, exp: usize) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![ExactInt::zero(); exp + 1];
        coeffs[exp] = coeff;
        IntPoly { coeffs }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactInt> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> ExactInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(mut self, k: usize) -> Self {
        if !self.coeffs.is_empty() && k > 0 {
            self.coeffs.splice(0..0, std::iter::repeat_n(ExactInt::zero(), k));
        }
        self
    }

    pub fn scale(&self, c: &ExactInt) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + Rational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x0: &ExactInt) -> ExactInt {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactInt::zero(), |acc, c| acc * x0 + c)
    }

    /// Sum of coefficients, i.e. the value at `x = 1`.
    pub fn at_one(&self) -> ExactInt {
        self.coeffs.iter().sum()
    }

    fn add_ref(&self, other: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (acc, c) in coeffs.iter_mut().zip(&short.coeffs) {
            *acc += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    fn mul_ref(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::default();
        }
        let mut coeffs = vec![ExactInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: IntPoly) -> IntPoly {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &'a IntPoly) -> IntPoly {
        self.add_ref(rhs)
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), ExactInt::zero());
        }
        for (acc, c) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *acc += c;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: IntPoly) -> IntPoly {
        self.add_ref(&-rhs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &'a IntPoly) -> IntPoly {
        self.add_ref(&-rhs.clone())
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &'a IntPoly) -> IntPoly {
        self.mul_ref(rhs)
    }
}

impl From<ExactInt> for IntPoly {
    fn from(c: ExactInt) -> Self {
        IntPoly::constant(c)
    }
}

/// Descending-power text, e.g. `x^8 + 4*x^5 + 6*x^2`; the zero polynomial is `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str("x")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial: unexpected {token} at position {position}, expected {expected}")]
pub struct ParseError {
    pub token: String,
    pub position: usize,
    pub expected: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(ExactInt),
    X,
    Caret,
    Star,
    Plus,
    Minus,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("`{v}`"),
            Tok::X => "`x`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: ExactInt = text[start..i].parse().expect("ascii digits");
                out.push((Tok::Int(v), start));
                continue;
            }
            b'x' => Tok::X,
            b'^' => Tok::Caret,
            b'*' => Tok::Star,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    token: format!("`{ch}`"),
                    position: i,
                    expected: "a term",
                });
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail(&self, expected: &'static str) -> ParseError {
        let (tok, position) = &self.toks[self.pos];
        ParseError {
            token: tok.describe(),
            position: *position,
            expected,
        }
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        if *self.peek() != Tok::Caret {
            return Ok(1);
        }
        self.next();
        match self.peek().clone() {
            Tok::Int(v) => {
                let e = v.to_usize().ok_or_else(|| self.fail("an exponent below 2^64"))?;
                self.next();
                Ok(e)
            }
            _ => Err(self.fail("an exponent")),
        }
    }

    fn term(&mut self) -> Result<(ExactInt, usize), ParseError> {
        match self.peek().clone() {
            Tok::Int(c) => {
                self.next();
                if *self.peek() != Tok::Star {
                    return Ok((c, 0));
                }
                self.next();
                if *self.peek() != Tok::X {
                    return Err(self.fail("`x`"));
                }
                self.next();
                Ok((c, self.exponent()?))
            }
            Tok::X => {
                self.next();
                Ok((ExactInt::one(), self.exponent()?))
            }
            _ => Err(self.fail("a term")),
        }
    }
}

impl FromStr for IntPoly {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut p = Parser {
            toks: tokenize(text)?,
            pos: 0,
        };
        let mut coeffs: Vec<ExactInt> = Vec::new();
        let mut negative = false;
        if *p.peek() == Tok::Minus {
            p.next();
            negative = true;
        }
        loop {
            let (c, e) = p.term()?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, ExactInt::zero());
            }
            if negative {
                coeffs[e] -= c;
            } else {
                coeffs[e] += c;
            }
            match p.peek() {
                Tok::End => break,
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                _ => return Err(p.fail("`+`, `-` or end of input")),
            }
            p.next();
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Parse `p/q` or an integer into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: ExactInt = p.trim().parse().ok()?;
            let q: ExactInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => text.parse::<ExactInt>().ok().map(Rational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str) -> IntPoly {
        text.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x^2") + p("2*x"), p("x^2 + 2*x"));
        assert_eq!(p("x^4 + 2*x") + IntPoly::zero(), p("x^4 + 2*x"));
        let sum = p("x^6 + 3*x^3 + 3") + p("-x^6");
        assert_eq!(sum, p("3*x^3 + 3"));
        assert_eq!(sum.degree(), Degree::Finite(3));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x^2") * p("x^4 + 2*x"), p("x^6 + 2*x^3"));
        assert_eq!(p("1 + x") * p("1 + x"), p("x^2 + 2*x + 1"));
        assert_eq!(p("x^3 - 7") * IntPoly::one(), p("x^3 - 7"));
    }

    #[test]
    fn eval_examples() {
        let k4 = p("x^8 + 4*x^5 + 6*x^2");
        assert_eq!(k4.eval(&q(1, 1)), q(11, 1));
        let k6 = p("x^12 + 6*x^9 + 15*x^6 + 14*x^3 + 3");
        assert_eq!(k6.eval(&q(0, 1)), q(3, 1));
        assert_eq!(p("x^4 + x").eval(&q(2, 1)), q(18, 1));
        assert_eq!(p("x^4 + x").eval(&q(1, 2)), q(9, 16));
    }

    #[test]
    fn format_examples() {
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p("x^10 + 5*x^7 + 10*x^4 + 5*x").to_string(), "x^10 + 5*x^7 + 10*x^4 + 5*x");
        assert_eq!(IntPoly::constant(3).to_string(), "3");
        assert_eq!(IntPoly::constant(1).to_string(), "1");
        assert_eq!(p("-x^2 - 2*x + 1").to_string(), "-x^2 - 2*x + 1");
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("x^4 + 2*x").coeffs(), IntPoly::from_i64s(&[0, 2, 0, 0, 1]).coeffs());
        assert_eq!(p("0"), IntPoly::zero());
        assert_eq!(p("  3 *x^ 2+x "), IntPoly::from_i64s(&[0, 1, 3]));
        let err = "x^^2".parse::<IntPoly>().unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.token, "`^`");
        assert!("2x".parse::<IntPoly>().is_err());
        assert!("x + ".parse::<IntPoly>().is_err());
        assert!("y".parse::<IntPoly>().is_err());
    }

    #[test]
    fn degree_of_zero_is_below_everything() {
        assert_eq!(IntPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn rationals_parse_in_lowest_terms() {
        assert_eq!(parse_rational("2/4"), Some(q(1, 2)));
        assert_eq!(parse_rational("3/-6"), Some(q(-1, 2)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("a/2"), None);
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-50i64..=50, 0..=17).prop_map(|c| IntPoly::from_i64s(&c))
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_a_homomorphism(a in small_poly(), b in small_poly(), x0 in small_rational()) {
            prop_assert_eq!((&a + &b).eval(&x0), a.eval(&x0) + b.eval(&x0));
            prop_assert_eq!((&a * &b).eval(&x0), a.eval(&x0) * b.eval(&x0));
        }

        #[test]
        fn format_parse_round_trip(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<IntPoly>().unwrap(), a);
        }

        #[test]
        fn canonical_after_ops(a in small_poly(), b in small_poly()) {
            for r in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(r.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
        }
    }
}
