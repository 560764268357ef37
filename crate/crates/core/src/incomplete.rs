//! Incomplete Tribonacci and Tribonacci-Lucas numbers and polynomials.
//!
//! `T_n^{(s)}(x)` truncates the double binomial sum of `T_n(x)` at level `s`
//! (`0 <= s <= (n-1)/2`); `K_n^{(s)}(x)` keeps the first `s + 1` terms of the
//! rising diagonal `sum_i B(n-i, i)(x)` (`0 <= s <= n/2`). Numbers are the
//! same objects at `x = 1`.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::{domain, Error, Result};
use crate::poly::{ExactInt, IntPoly, MonomialRing};
use crate::sequences::tribonacci_lucas_at;
use crate::triangles::{self, weighted_binomial_sum, Method};
use crate::FamilyValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IncompleteFamily {
    IncTribonacci,
    IncTribonacciLucas,
}

impl IncompleteFamily {
    /// Largest admissible truncation level at index `n`, if any.
    pub fn max_level(self, n: usize) -> Option<usize> {
        match self {
            IncompleteFamily::IncTribonacci => n.checked_sub(1).map(|m| m / 2),
            IncompleteFamily::IncTribonacciLucas => Some(n / 2),
        }
    }

    pub fn is_valid(self, n: usize, s: usize) -> bool {
        self.max_level(n).is_some_and(|m| s <= m)
    }

    fn symbol(self) -> &'static str {
        match self {
            IncompleteFamily::IncTribonacci => "T",
            IncompleteFamily::IncTribonacciLucas => "K",
        }
    }
}

/// A validated `(n, s)` pair for one of the incomplete families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IncompleteIndex {
    pub family: IncompleteFamily,
    pub n: usize,
    pub s: usize,
}

impl IncompleteIndex {
    pub fn new(family: IncompleteFamily, n: usize, s: usize) -> Result<Self> {
        match family.max_level(n) {
            Some(max) if s <= max => Ok(IncompleteIndex { family, n, s }),
            Some(max) => Err(domain(format!(
                "{}_{n}^({s}) is undefined: s must lie in 0..={max}",
                family.symbol()
            ))),
            None => Err(domain(format!("{}_{n}^({s}) is undefined: n must be >= 1", family.symbol()))),
        }
    }
}

fn x_in<E: MonomialRing>() -> E {
    E::monomial(ExactInt::one(), 1)
}

fn scalar<E: MonomialRing>(c: impl Into<ExactInt>) -> E {
    E::monomial(c.into(), 0)
}

/// `T_n^{(s)}(x) = sum_{i<=s} sum_{j<=i} C(i,j) C(n-i-j-1,i) x^{2n-3(i+j)-2}`.
pub fn incomplete_tribonacci_in<E: MonomialRing>(n: usize, s: usize) -> Result<E> {
    IncompleteIndex::new(IncompleteFamily::IncTribonacci, n, s)?;
    let ni = n as i64;
    let mut acc = E::zero();
    for i in 0..=s as i64 {
        for j in 0..=i {
            let c = binomial(i, j) * binomial(ni - i - j - 1, i);
            if c.is_zero() {
                continue;
            }
            let exp = 2 * ni - 3 * (i + j) - 2;
            if exp < 0 {
                return Err(Error::InternalConsistency(format!(
                    "negative exponent in T_{n}^({s}) at i={i}, j={j}"
                )));
            }
            acc = acc + E::monomial(c, exp as usize);
        }
    }
    Ok(acc)
}

pub fn incomplete_tribonacci_poly(n: usize, s: usize) -> Result<IntPoly> {
    incomplete_tribonacci_in(n, s)
}

/// `T_n(s)`, the value of [`incomplete_tribonacci_poly`] at `x = 1`.
pub fn incomplete_tribonacci_number(n: usize, s: usize) -> Result<ExactInt> {
    incomplete_tribonacci_poly(n, s).map(|p| p.at_one())
}

/// How `K_n^{(s)}` is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TlMethod {
    /// `sum_{i<=s} B(n-i, i)(x)` from the recurrence-built triangle.
    TriangleSum,
    /// The closed double binomial sum; `n = 0` is served from the apex value 3.
    BinomialSum,
}

pub fn incomplete_tl_in<E: MonomialRing>(n: usize, s: usize, method: TlMethod) -> Result<E> {
    IncompleteIndex::new(IncompleteFamily::IncTribonacciLucas, n, s)?;
    match method {
        TlMethod::TriangleSum => {
            let table = triangles::rows::<E>(n + 1);
            Ok((0..=s).fold(E::zero(), |acc, i| acc + table[n - i][i].clone()))
        }
        TlMethod::BinomialSum if n == 0 => Ok(scalar(3)),
        TlMethod::BinomialSum => weighted_binomial_sum(n, s, |_| ExactInt::one()),
    }
}

pub fn incomplete_tl_poly(n: usize, s: usize, method: TlMethod) -> Result<IntPoly> {
    incomplete_tl_in(n, s, method)
}

/// `K_n(s)`, the incomplete Tribonacci-Lucas polynomial at `x = 1`.
pub fn incomplete_tl_number(n: usize, s: usize) -> Result<ExactInt> {
    incomplete_tl_in(n, s, TlMethod::TriangleSum)
}

/// Closed expressions for boundary levels of `K_n^{(s)}(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryForm {
    /// `s = 0`: `x^{2n}`.
    Eq33,
    /// `s = 1`, `n >= 3`: `x^{2n} + n x^{2n-3} + n x^{2n-6}`.
    Eq34,
    /// `s = n/2`: the full `K_n(x)`.
    Eq35,
    /// `s = (n-2)/2`, `n >= 2`: `K_n(x)` minus its last diagonal entry.
    Eq36,
}

impl BoundaryForm {
    /// Truncation level the form describes at index `n`.
    pub fn level(self, n: usize) -> usize {
        match self {
            BoundaryForm::Eq33 => 0,
            BoundaryForm::Eq34 => 1,
            BoundaryForm::Eq35 => n / 2,
            BoundaryForm::Eq36 => n.saturating_sub(2) / 2,
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            BoundaryForm::Eq33 | BoundaryForm::Eq35 => 1,
            BoundaryForm::Eq34 => 3,
            BoundaryForm::Eq36 => 2,
        }
    }
}

pub fn boundary_form(n: usize, which: BoundaryForm) -> Result<IntPoly> {
    if n < which.min_n() {
        return Err(domain(format!("{which:?} needs n >= {}, got {n}", which.min_n())));
    }
    let k = || tribonacci_lucas_at(&IntPoly::x(), n);
    Ok(match which {
        BoundaryForm::Eq33 => IntPoly::monomial(1, 2 * n),
        BoundaryForm::Eq34 => {
            IntPoly::monomial(1, 2 * n) + IntPoly::monomial(n, 2 * n - 3) + IntPoly::monomial(n, 2 * n - 6)
        }
        BoundaryForm::Eq35 => k(),
        BoundaryForm::Eq36 if n.is_even() => k() - IntPoly::monomial(2, n / 2),
        BoundaryForm::Eq36 => k() - IntPoly::monomial(n, (n + 3) / 2) - IntPoly::monomial(n, (n - 3) / 2),
    })
}

/// `T_{n+1}^{(s)}(x) + x T_{n-1}^{(s-1)}(x) + 2 T_{n-2}^{(s-1)}(x)` for
/// `n > 2`, `1 <= s <= (n-1)/2`.
pub fn tl_relation_rhs_in<E: MonomialRing>(n: usize, s: usize) -> Result<E> {
    if n <= 2 || s == 0 || s > (n - 1) / 2 {
        return Err(domain(format!(
            "the cross-family relation needs n > 2 and 1 <= s <= (n-1)/2, got n={n}, s={s}"
        )));
    }
    Ok(incomplete_tribonacci_in::<E>(n + 1, s)?
        + incomplete_tribonacci_in::<E>(n - 1, s - 1)?.mul_x_pow(1)
        + scalar::<E>(2) * incomplete_tribonacci_in::<E>(n - 2, s - 1)?)
}

pub fn tl_relation_rhs(n: usize, s: usize) -> Result<IntPoly> {
    tl_relation_rhs_in(n, s)
}

/// Both sides of the partial-sum identity
/// `sum_{i<h} K_{n+i}(s) = (K_{n+h+2}(s+1) - K_{n+2}(s+1) + K_n(s) - K_{n+h}(s)) / 2`.
///
/// The left side sums triangle diagonals; the right side uses the binomial
/// closed form. The halving is checked.
pub fn partial_sum_lhs_rhs(n: usize, h: usize, s: usize) -> Result<(ExactInt, ExactInt)> {
    if n == 0 || h == 0 {
        return Err(domain(format!("the partial-sum identity needs n, h >= 1, got n={n}, h={h}")));
    }
    IncompleteIndex::new(IncompleteFamily::IncTribonacciLucas, n, s)?;
    let lhs = (0..h).try_fold(ExactInt::zero(), |acc, i| {
        Ok::<_, Error>(acc + incomplete_tl_in::<ExactInt>(n + i, s, TlMethod::TriangleSum)?)
    })?;
    let k = |m: usize, level: usize| incomplete_tl_in::<ExactInt>(m, level, TlMethod::BinomialSum);
    let twice = k(n + h + 2, s + 1)? - k(n + 2, s + 1)? + k(n, s)? - k(n + h, s)?;
    let (rhs, rem) = twice.div_rem(&ExactInt::from(2));
    if !rem.is_zero() {
        return Err(Error::InternalConsistency(format!(
            "partial-sum numerator {twice} is odd at n={n}, h={h}, s={s}"
        )));
    }
    Ok((lhs, rhs))
}

/// Both sides of the row-sum identity with `l = n/2`:
/// `sum_{s<=l} K_n^{(s)} = (l+1) K_n - sum_{i<=l} sum_{j<=i} i n/(n-i-j) C(i,j) C(n-i-j,i) x^{2n-3(i+j)}`.
pub fn row_sum_lhs_rhs_in<E: MonomialRing>(n: usize) -> Result<(E, E)> {
    if n == 0 {
        return Err(domain("the row-sum identity needs n >= 1"));
    }
    let l = n / 2;
    let lhs = (0..=l).try_fold(E::zero(), |acc, s| {
        Ok::<_, Error>(acc + incomplete_tl_in::<E>(n, s, TlMethod::TriangleSum)?)
    })?;
    let full = tribonacci_lucas_at(&x_in::<E>(), n);
    let correction = weighted_binomial_sum::<E>(n, l, ExactInt::from)?;
    Ok((lhs, scalar::<E>(l + 1) * full - correction))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSumMode {
    Numbers,
    Polynomials,
}

pub fn row_sum_lhs_rhs(n: usize, mode: RowSumMode) -> Result<(FamilyValue, FamilyValue)> {
    Ok(match mode {
        RowSumMode::Numbers => {
            let (a, b) = row_sum_lhs_rhs_in::<ExactInt>(n)?;
            (a.into(), b.into())
        }
        RowSumMode::Polynomials => {
            let (a, b) = row_sum_lhs_rhs_in::<IntPoly>(n)?;
            (a.into(), b.into())
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecurrenceVariant {
    /// `K_{n+3}^{(s+1)} = x^2 K_{n+2}^{(s+1)} + x K_{n+1}^{(s)} + K_n^{(s)}`.
    HomPoly37,
    /// `K_{n+3}^{(s)} = x^2 K_{n+2}^{(s)} + x K_{n+1}^{(s)} + K_n^{(s)} - x B(n+1-s,s)(x) - B(n-s,s)(x)`.
    NonhomPoly38,
    HomNum39,
    NonhomNum310,
    /// The non-homogeneous recurrence of `T_n^{(s)}(x)`.
    TriNonhom15,
}

/// Direct `K_{n+3}^{(s+1)}` against the homogeneous recurrence.
pub fn homogeneous_step<E: MonomialRing>(n: usize, s: usize) -> Result<(E, E)> {
    let direct = incomplete_tl_in::<E>(n + 3, s + 1, TlMethod::BinomialSum)?;
    let k = |m, level| incomplete_tl_in::<E>(m, level, TlMethod::TriangleSum);
    let assembled = k(n + 2, s + 1)?.mul_x_pow(2) + k(n + 1, s)?.mul_x_pow(1) + k(n, s)?;
    Ok((direct, assembled))
}

/// Direct `K_{n+3}^{(s)}` against the non-homogeneous recurrence.
pub fn nonhomogeneous_step<E: MonomialRing>(n: usize, s: usize) -> Result<(E, E)> {
    IncompleteIndex::new(IncompleteFamily::IncTribonacciLucas, n, s)?;
    let direct = incomplete_tl_in::<E>(n + 3, s, TlMethod::BinomialSum)?;
    let k = |m| incomplete_tl_in::<E>(m, s, TlMethod::TriangleSum);
    let b = |row| triangles::triangle_entry::<E>(row, s, Method::ClosedForm);
    let assembled = k(n + 2)?.mul_x_pow(2) + k(n + 1)?.mul_x_pow(1) + k(n)?
        - b(n + 1 - s)?.mul_x_pow(1)
        - b(n - s)?;
    Ok((direct, assembled))
}

fn monomial_at<E: MonomialRing>(coeff: ExactInt, exp: i64) -> Result<E> {
    if coeff.is_zero() {
        return Ok(E::zero());
    }
    let exp = usize::try_from(exp)
        .map_err(|_| Error::InternalConsistency(format!("negative exponent {exp} with coefficient {coeff}")))?;
    Ok(E::monomial(coeff, exp))
}

/// Direct `T_{n+3}^{(s)}` against its non-homogeneous recurrence.
pub fn tribonacci_step<E: MonomialRing>(n: usize, s: usize) -> Result<(E, E)> {
    IncompleteIndex::new(IncompleteFamily::IncTribonacci, n, s)?;
    let t = |m| incomplete_tribonacci_in::<E>(m, s);
    let direct = t(n + 3)?;
    let (ni, si) = (n as i64, s as i64);
    let mut first = E::zero();
    let mut second = E::zero();
    for j in 0..=si {
        let c = binomial(si, j);
        first = first + monomial_at::<E>(&c * binomial(ni - si - j, si), 2 * ni - 3 * (si + j))?;
        second = second + monomial_at::<E>(&c * binomial(ni - si - j - 1, si), 2 * ni - 3 * (si + j) - 2)?;
    }
    let assembled = t(n + 2)?.mul_x_pow(2) + t(n + 1)?.mul_x_pow(1) + t(n)? - first.mul_x_pow(1) - second;
    Ok((direct, assembled))
}

/// The directly computed left side and the recurrence-assembled right side.
pub fn recurrence_step(n: usize, s: usize, variant: RecurrenceVariant) -> Result<(FamilyValue, FamilyValue)> {
    fn lift<E: Into<FamilyValue>>((a, b): (E, E)) -> (FamilyValue, FamilyValue) {
        (a.into(), b.into())
    }
    Ok(match variant {
        RecurrenceVariant::HomPoly37 => lift(homogeneous_step::<IntPoly>(n, s)?),
        RecurrenceVariant::NonhomPoly38 => lift(nonhomogeneous_step::<IntPoly>(n, s)?),
        RecurrenceVariant::HomNum39 => lift(homogeneous_step::<ExactInt>(n, s)?),
        RecurrenceVariant::NonhomNum310 => lift(nonhomogeneous_step::<ExactInt>(n, s)?),
        RecurrenceVariant::TriNonhom15 => lift(tribonacci_step::<IntPoly>(n, s)?),
    })
}
