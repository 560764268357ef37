//! The Tribonacci-Lucas triangle `B(n,i)` and its polynomial analogue `B(n,i)(x)`.
//!
//! Row `n` has entries for columns `0..=n`. Boundaries are `B(0,0) = 3` and,
//! for `n >= 1`, `B(n,0)(x) = x^{2n}` and `B(n,n)(x) = 2x^n`. Interior entries
//! follow
//!
//! ```text
//! B(n+1,i)(x) = x^2 B(n,i)(x) + x B(n,i-1)(x) + B(n-1,i-1)(x)
//! ```
//!
//! with out-of-range entries read as zero. The number triangle is the same
//! computation with `x = 1`, so everything here is generic over
//! [`MonomialRing`] and instantiated at [`ExactInt`] and [`IntPoly`].

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, exact_div};
use crate::error::{domain, Error, Result};
use crate::poly::{ExactInt, IntPoly, MonomialRing};
use crate::FamilyValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleKind {
    Numbers,
    Polynomials,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Recurrence,
    ClosedForm,
}

/// Rows `0..row_count` by recurrence.
pub fn rows<E: MonomialRing>(row_count: usize) -> Vec<Vec<E>> {
    let mut out: Vec<Vec<E>> = Vec::with_capacity(row_count);
    for n in 0..row_count {
        if n == 0 {
            out.push(vec![E::monomial(3.into(), 0)]);
            continue;
        }
        let mut row = Vec::with_capacity(n + 1);
        row.push(E::monomial(1.into(), 2 * n));
        for i in 1..n {
            let prev = &out[n - 1];
            let mut v = prev[i].clone().mul_x_pow(2) + prev[i - 1].clone().mul_x_pow(1);
            if let Some(e) = n.checked_sub(2).and_then(|m| out[m].get(i - 1)) {
                v = v + e.clone();
            }
            row.push(v);
        }
        row.push(E::monomial(2.into(), n));
        out.push(row);
    }
    out
}

fn check_cell(n: usize, i: usize) -> Result<()> {
    if i > n {
        return Err(domain(format!("triangle column {i} outside 0..={n} for row {n}")));
    }
    Ok(())
}

/// Closed form of `B(n,i)(x)`:
/// `sum_j (n+i)/(n-j) C(i,j) C(n-j,i) x^{2n-i-3j}` for `n > i`.
fn closed_form<E: MonomialRing>(n: usize, i: usize) -> Result<E> {
    if n == i {
        return Ok(if n == 0 {
            E::monomial(3.into(), 0)
        } else {
            E::monomial(2.into(), n)
        });
    }
    let (ni, ii) = (n as i64, i as i64);
    let mut acc = E::zero();
    for j in 0..=ii {
        let c = binomial(ii, j) * binomial(ni - j, ii);
        if c.is_zero() {
            continue;
        }
        let coeff = exact_div((ni + ii) * c, ni - j, || format!("B({n},{i}) closed form, j={j}"))?;
        let exp = 2 * ni - ii - 3 * j;
        if exp < 0 {
            return Err(Error::InternalConsistency(format!(
                "negative exponent {exp} in B({n},{i}) closed form"
            )));
        }
        acc = acc + E::monomial(coeff, exp as usize);
    }
    Ok(acc)
}

pub fn triangle_entry<E: MonomialRing>(n: usize, i: usize, method: Method) -> Result<E> {
    check_cell(n, i)?;
    match method {
        Method::Recurrence => Ok(rows::<E>(n + 1).swap_remove(n).swap_remove(i)),
        Method::ClosedForm => closed_form(n, i),
    }
}

pub fn triangle_entry_number(n: usize, i: usize, method: Method) -> Result<ExactInt> {
    triangle_entry(n, i, method)
}

pub fn triangle_entry_poly(n: usize, i: usize, method: Method) -> Result<IntPoly> {
    triangle_entry(n, i, method)
}

/// A ragged table of triangle rows; serializes as a kind tag plus rows of
/// decimal or polynomial text.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleTable {
    kind: TriangleKind,
    rows: Vec<Vec<FamilyValue>>,
}

impl TriangleTable {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn rows(&self) -> &[Vec<FamilyValue>] {
        &self.rows
    }
}

pub fn triangle_rows(kind: TriangleKind, row_count: usize) -> Result<TriangleTable> {
    if row_count == 0 {
        return Err(domain("a triangle table needs at least one row"));
    }
    let rows = match kind {
        TriangleKind::Numbers => lift(rows::<ExactInt>(row_count)),
        TriangleKind::Polynomials => lift(rows::<IntPoly>(row_count)),
    };
    Ok(TriangleTable { kind, rows })
}

fn lift<E: Into<FamilyValue>>(rows: Vec<Vec<E>>) -> Vec<Vec<FamilyValue>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(Into::into).collect())
        .collect()
}

/// Sum of the rising diagonal `B(n-i, i)`, `i = 0..=n/2`.
pub fn diagonal_sum_in<E: MonomialRing>(n: usize) -> E {
    let table = rows::<E>(n + 1);
    (0..=n / 2).fold(E::zero(), |acc, i| acc + table[n - i][i].clone())
}

pub fn diagonal_sum(kind: TriangleKind, n: usize) -> FamilyValue {
    match kind {
        TriangleKind::Numbers => diagonal_sum_in::<ExactInt>(n).into(),
        TriangleKind::Polynomials => diagonal_sum_in::<IntPoly>(n).into(),
    }
}

/// Coefficient `n/(n-i-j) C(i,j) C(n-i-j,i)` of `x^{2n-3(i+j)}` in the
/// binomial-sum forms, or `None` for the skipped cell `n = i + j`.
pub fn diagonal_term(n: usize, i: usize, j: usize) -> Result<Option<ExactInt>> {
    if n == i + j {
        return Ok(None);
    }
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let c = binomial(i, j) * binomial(n - i - j, i);
    if c.is_zero() {
        return Ok(Some(c));
    }
    exact_div(n * c, n - i - j, || format!("binomial-sum term n={n}, i={i}, j={j}")).map(Some)
}

/// `sum_{i=0}^{imax} sum_{j=0}^{i} weight(i) * n/(n-i-j) C(i,j) C(n-i-j,i) x^{2n-3(i+j)}`,
/// skipping `n = i + j`.
pub(crate) fn weighted_binomial_sum<E: MonomialRing>(
    n: usize,
    imax: usize,
    weight: impl Fn(usize) -> ExactInt,
) -> Result<E> {
    let mut acc = E::zero();
    for i in 0..=imax {
        let w = weight(i);
        if w.is_zero() {
            continue;
        }
        for j in 0..=i {
            let Some(c) = diagonal_term(n, i, j)? else {
                continue;
            };
            if c.is_zero() {
                continue;
            }
            let exp = (2 * n).checked_sub(3 * (i + j)).ok_or_else(|| {
                Error::InternalConsistency(format!("negative exponent at n={n}, i={i}, j={j}"))
            })?;
            acc = acc + E::monomial(c * &w, exp);
        }
    }
    Ok(acc)
}

/// The double binomial sum for `K_n` / `K_n(x)`, valid for `n >= 1`.
pub fn binomial_diagonal_sum_in<E: MonomialRing>(n: usize) -> Result<E> {
    if n == 0 {
        return Err(domain("the binomial-sum form needs n >= 1"));
    }
    weighted_binomial_sum(n, n / 2, |_| 1.into())
}

pub fn binomial_diagonal_sum(kind: TriangleKind, n: usize) -> Result<FamilyValue> {
    Ok(match kind {
        TriangleKind::Numbers => binomial_diagonal_sum_in::<ExactInt>(n)?.into(),
        TriangleKind::Polynomials => binomial_diagonal_sum_in::<IntPoly>(n)?.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{tribonacci_lucas_number, tribonacci_lucas_poly};

    fn p(text: &str) -> IntPoly {
        text.parse().unwrap()
    }

    #[test]
    fn number_entries() {
        for m in [Method::Recurrence, Method::ClosedForm] {
            assert_eq!(triangle_entry_number(4, 2, m).unwrap(), 24.into());
            assert_eq!(triangle_entry_number(5, 3, m).unwrap(), 48.into());
            for n in 1..=10 {
                assert_eq!(triangle_entry_number(n, 0, m).unwrap(), 1.into());
                assert_eq!(triangle_entry_number(n, n, m).unwrap(), 2.into());
            }
            assert_eq!(triangle_entry_number(0, 0, m).unwrap(), 3.into());
        }
    }

    #[test]
    fn poly_entries() {
        for m in [Method::Recurrence, Method::ClosedForm] {
            assert_eq!(triangle_entry_poly(4, 2, m).unwrap(), p("9*x^6 + 12*x^3 + 3"));
            assert_eq!(triangle_entry_poly(5, 2, m).unwrap(), p("14*x^8 + 21*x^5 + 7*x^2"));
            assert_eq!(triangle_entry_poly(3, 3, m).unwrap(), p("2*x^3"));
        }
    }

    #[test]
    fn column_outside_row_is_rejected() {
        assert!(matches!(triangle_entry_number(3, 4, Method::Recurrence), Err(Error::Domain(_))));
        assert!(matches!(triangle_entry_poly(0, 1, Method::ClosedForm), Err(Error::Domain(_))));
    }

    #[test]
    fn tables_match_printed_rows() {
        let t = triangle_rows(TriangleKind::Numbers, 6).unwrap();
        let text: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        assert_eq!(
            text,
            vec![
                vec!["3"],
                vec!["1", "2"],
                vec!["1", "6", "2"],
                vec!["1", "8", "10", "2"],
                vec!["1", "10", "24", "14", "2"],
                vec!["1", "12", "42", "48", "18", "2"],
            ]
        );
        let one = triangle_rows(TriangleKind::Numbers, 1).unwrap();
        assert_eq!(one.rows(), &[vec![FamilyValue::Number(3.into())]]);
        assert!(triangle_rows(TriangleKind::Numbers, 0).is_err());

        let t = triangle_rows(TriangleKind::Polynomials, 6).unwrap();
        let row5: Vec<String> = t.rows()[5].iter().map(|v| v.to_string()).collect();
        assert_eq!(
            row5,
            [
                "x^10",
                "6*x^9 + 6*x^6",
                "14*x^8 + 21*x^5 + 7*x^2",
                "16*x^7 + 24*x^4 + 8*x",
                "9*x^6 + 9*x^3",
                "2*x^5"
            ]
        );
    }

    #[test]
    fn table_json_shape() {
        let t = triangle_rows(TriangleKind::Polynomials, 2).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"kind":"polynomials","rows":[["3"],["x^2","2*x"]]}"#
        );
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(diagonal_sum(TriangleKind::Numbers, 5), FamilyValue::Number(21.into()));
        assert_eq!(diagonal_sum(TriangleKind::Numbers, 0), FamilyValue::Number(3.into()));
        assert_eq!(diagonal_sum(TriangleKind::Polynomials, 4), FamilyValue::Poly(p("x^8 + 4*x^5 + 6*x^2")));
    }

    #[test]
    fn binomial_diagonal_examples() {
        assert_eq!(binomial_diagonal_sum(TriangleKind::Numbers, 4).unwrap(), FamilyValue::Number(11.into()));
        assert_eq!(binomial_diagonal_sum(TriangleKind::Numbers, 2).unwrap(), FamilyValue::Number(3.into()));
        assert_eq!(
            binomial_diagonal_sum(TriangleKind::Polynomials, 3).unwrap(),
            FamilyValue::Poly(p("x^6 + 3*x^3 + 3"))
        );
        assert!(binomial_diagonal_sum(TriangleKind::Numbers, 0).is_err());
    }

    #[test]
    fn methods_agree() {
        let nums = rows::<ExactInt>(31);
        let polys = rows::<IntPoly>(31);
        for n in 0..=30 {
            for i in 0..=n {
                assert_eq!(closed_form::<ExactInt>(n, i).unwrap(), nums[n][i], "B({n},{i})");
                assert_eq!(closed_form::<IntPoly>(n, i).unwrap(), polys[n][i], "B({n},{i})(x)");
            }
        }
    }

    #[test]
    fn specialisation_at_one() {
        let nums = rows::<ExactInt>(21);
        let polys = rows::<IntPoly>(21);
        for (rn, rp) in nums.iter().zip(&polys) {
            for (a, b) in rn.iter().zip(rp) {
                assert_eq!(&b.at_one(), a);
            }
        }
    }

    #[test]
    fn diagonals_reconstruct_lucas() {
        for n in 0..=40 {
            assert_eq!(diagonal_sum_in::<ExactInt>(n), tribonacci_lucas_number(n));
        }
        for n in 0..=24 {
            assert_eq!(diagonal_sum_in::<IntPoly>(n), tribonacci_lucas_poly(n));
        }
        for n in 1..=40 {
            assert_eq!(binomial_diagonal_sum_in::<ExactInt>(n).unwrap(), tribonacci_lucas_number(n));
        }
        for n in 1..=24 {
            assert_eq!(binomial_diagonal_sum_in::<IntPoly>(n).unwrap(), tribonacci_lucas_poly(n));
        }
    }
}
