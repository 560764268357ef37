//! Identity catalog, exhaustive sweeps and the errata report.
//!
//! Each checker evaluates the two sides of an identity through different code
//! paths (triangle recurrence against binomial closed form, direct sums against
//! generating-function expansion, exact integers against floating Binet) over
//! every valid point of a small parameter lattice.

use std::fmt::{self, Display, Write as _};

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::genfunc::{
    eq16_printed_gf, gf_vs_direct, q_gf_in, series_expand, u_numerator_head, w_gf_in, GFVariant, XMode,
};
use crate::incomplete::{
    boundary_form, homogeneous_step, incomplete_tl_in, incomplete_tl_number, incomplete_tl_poly,
    incomplete_tribonacci_number, nonhomogeneous_step, partial_sum_lhs_rhs, row_sum_lhs_rhs_in,
    tl_relation_rhs_in, tribonacci_step, BoundaryForm, IncompleteFamily, TlMethod,
};
use crate::poly::{parse_rational, ExactInt, IntPoly, Rational};
use crate::sequences::{
    binet_estimate, binet_roots, tribonacci_lucas_number, tribonacci_lucas_poly, tribonacci_number,
    tribonacci_poly, SequenceFamily,
};
use crate::triangles::{self, binomial_diagonal_sum_in, diagonal_sum_in, Method};

/// Counterexamples kept per report; the failure count stays exact.
pub const MAX_FAILURES: usize = 10;

/// Relative tolerance of the Binet cross-check.
pub const BINET_TOLERANCE: f64 = 1e-6;

/// Requested float precision for the Binet cross-check, in bits.
pub const BINET_PRECISION: u32 = 64;

/// Largest row swept by the dual-method triangle check.
pub const TRIANGLE_ROWS: usize = 30;

/// Largest starting index swept by the partial-sum identity.
pub const PARTIAL_SUM_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityInfo {
    pub id: &'static str,
    pub description: &'static str,
    pub location: &'static str,
}

const CATALOG: [IdentityInfo; 27] = [
    info("eq2.2", "binomial double sum for K_n", "Eq. (2.2)"),
    info("eq2.4", "binomial double sum for K_n(x)", "Eq. (2.4)"),
    info(
        "closed-vs-recurrence-triangle",
        "triangle recurrence vs closed form, and rising diagonals vs K_n",
        "Eqs. (2.1), (2.3), Tables 1-2",
    ),
    info("def1-methods", "incomplete Tribonacci-Lucas: triangle sum vs binomial sum", "Definition 1, Eq. (3.1)"),
    info("eq3.3", "boundary level s = 0", "Eq. (3.3)"),
    info("eq3.4", "boundary level s = 1", "Eq. (3.4)"),
    info("eq3.5", "full truncation s = n/2", "Eq. (3.5)"),
    info("eq3.6", "level s = (n-2)/2", "Eq. (3.6)"),
    info("eq3.7", "homogeneous recurrence, polynomials", "Proposition 2(i), Eq. (3.7)"),
    info("eq3.8", "non-homogeneous recurrence, polynomials", "Proposition 2(ii), Eq. (3.8)"),
    info("eq3.9", "homogeneous recurrence, numbers", "Corollary, Eq. (3.9)"),
    info("eq3.10", "non-homogeneous recurrence, numbers", "Corollary, Eq. (3.10)"),
    info("eq1.5", "non-homogeneous recurrence of incomplete Tribonacci polynomials", "Eq. (1.5)"),
    info("prop3", "incomplete Tribonacci-Lucas from incomplete Tribonacci polynomials", "Proposition 3"),
    info("cor4", "incomplete Tribonacci-Lucas from incomplete Tribonacci numbers", "Corollary 4"),
    info("thm5", "partial-sum identity", "Theorem 5, Eq. (3.11)"),
    info("prop6", "row sum of incomplete Tribonacci-Lucas polynomials", "Proposition 6, Eq. (3.12)"),
    info("cor8", "row sum of incomplete Tribonacci-Lucas numbers", "Corollary 8, Eq. (3.13)"),
    info("binet-T", "Binet form of T_n and Vieta residuals", "Eq. (1.3)"),
    info("binet-K", "Binet form of K_n", "Eq. (1.3)"),
    info("poly-at-1", "polynomial families at x = 1 give the numbers", "Sections 1-2"),
    info("thm10-printed", "Q_s generating function as printed", "Theorem 10, Eq. (4.5)"),
    info("thm10-corrected", "Q_s generating function, corrected z^2 term", "Theorem 10, Eq. (4.5)"),
    info("cor11", "Q_s at x = 1, corrected", "Corollary 11"),
    info("thm12", "W_s generating function", "Theorem 12"),
    info("cor13", "W_s at x = 1", "Corollary 13"),
    info("eq1.6-shift", "incomplete Tribonacci generating function as printed, unshifted", "Eq. (1.6)"),
];

const fn info(id: &'static str, description: &'static str, location: &'static str) -> IdentityInfo {
    IdentityInfo { id, description, location }
}

const EXPECTED_FAIL: [&str; 2] = ["thm10-printed", "eq1.6-shift"];

pub fn list_identities() -> &'static [IdentityInfo] {
    &CATALOG
}

pub fn is_expected_fail(id: &str) -> bool {
    EXPECTED_FAIL.contains(&id)
}

/// Bounds of the parameter lattices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRange {
    /// Largest index for number identities.
    pub n_max: usize,
    /// Largest index for polynomial identities.
    pub n_max_poly: usize,
    /// Largest truncation level for generating functions.
    pub s_max: usize,
    pub h_max: usize,
    /// Coefficients compared per generating function.
    pub order: usize,
    #[serde(with = "rational_texts")]
    pub x_points: Vec<Rational>,
    pub include_symbolic: bool,
}

impl Default for SweepRange {
    fn default() -> Self {
        SweepRange {
            n_max: 40,
            n_max_poly: 24,
            s_max: 8,
            h_max: 12,
            order: 48,
            x_points: ["1", "2", "1/2"].iter().map(|t| parse_rational(t).unwrap()).collect(),
            include_symbolic: true,
        }
    }
}

impl SweepRange {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("n_max", self.n_max),
            ("n_max_poly", self.n_max_poly),
            ("s_max", self.s_max),
            ("h_max", self.h_max),
            ("order", self.order),
        ] {
            if v == 0 {
                return Err(domain(format!("{name} must be >= 1")));
            }
        }
        Ok(())
    }

    fn modes(&self) -> Vec<XMode> {
        let mut out: Vec<XMode> = self.x_points.iter().cloned().map(XMode::AtValue).collect();
        if self.include_symbolic {
            out.push(XMode::Symbolic);
        }
        out
    }
}

mod rational_texts {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::poly::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rational(t).ok_or_else(|| serde::de::Error::custom(format!("bad rational `{t}`"))))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    ExpectedFail,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedFail => "expected_fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub points_checked: usize,
    pub failure_count: usize,
    pub failures: Vec<Counterexample>,
    pub status: Status,
    pub domain: String,
    pub notes: String,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Default)]
struct Sweep {
    points: usize,
    failure_count: usize,
    failures: Vec<Counterexample>,
    domain: String,
    notes: Vec<String>,
}

impl Sweep {
    fn new(domain: impl Into<String>) -> Self {
        Sweep { domain: domain.into(), ..Sweep::default() }
    }

    fn fail(&mut self, params: impl FnOnce() -> String, lhs: String, rhs: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(Counterexample { params: params(), lhs, rhs });
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, params: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.points += 1;
        if lhs != rhs {
            self.fail(params, lhs.to_string(), rhs.to_string());
        }
    }

    /// Compare two fallible sides; an error on either side is a failure.
    fn eq_res<T: PartialEq + Display>(&mut self, params: impl FnOnce() -> String, lhs: Result<T>, rhs: Result<T>) {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => self.eq(params, &a, &b),
            (a, b) => {
                self.points += 1;
                let show = |r: Result<T>| match r {
                    Ok(v) => v.to_string(),
                    Err(e) => format!("error: {e}"),
                };
                self.fail(params, show(a), show(b));
            }
        }
    }

    fn pair<T: PartialEq + Display>(&mut self, params: impl FnOnce() -> String, sides: Result<(T, T)>) {
        match sides {
            Ok((a, b)) => self.eq(params, &a, &b),
            Err(e) => {
                self.points += 1;
                self.fail(params, format!("error: {e}"), String::new());
            }
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn finish(self, id: &str) -> IdentityReport {
        let status = match (self.failure_count == 0, is_expected_fail(id)) {
            (true, false) => Status::Pass,
            (false, true) => Status::ExpectedFail,
            _ => Status::Fail,
        };
        let mut notes = self.notes;
        if status == Status::Fail && is_expected_fail(id) {
            notes.push("printed formula unexpectedly reproduced the direct values".into());
        }
        IdentityReport {
            id: id.to_string(),
            points_checked: self.points,
            failure_count: self.failure_count,
            failures: self.failures,
            status,
            domain: self.domain,
            notes: notes.join("; "),
        }
    }
}

fn check_eq22(r: &SweepRange) -> Sweep {
    let mut sw = Sweep::new(format!("1 <= n <= {}", r.n_max));
    for n in 1..=r.n_max {
        sw.eq_res(|| format!("n={n}"), binomial_diagonal_sum_in::<ExactInt>(n), Ok(tribonacci_lucas_number(n)));
    }
    sw
}

fn check_eq24(r: &SweepRange) -> Sweep {
    let mut sw = Sweep::new(format!("1 <= n <= {}", r.n_max_poly));
    for n in 1..=r.n_max_poly {
        sw.eq_res(|| format!("n={n}"), binomial_diagonal_sum_in::<IntPoly>(n), Ok(tribonacci_lucas_poly(n)));
    }
    sw
}

fn check_triangle(r: &SweepRange) -> Sweep {
    let rows = r.n_max.min(TRIANGLE_ROWS);
    let mut sw = Sweep::new(format!(
        "0 <= i <= n <= {rows} (entries, both kinds); 0 <= n <= {} / {} (diagonals)",
        r.n_max, r.n_max_poly
    ));
    let nums = triangles::rows::<ExactInt>(rows + 1);
    let polys = triangles::rows::<IntPoly>(rows + 1);
    for n in 0..=rows {
        for i in 0..=n {
            let at = || format!("n={n} i={i}");
            sw.eq_res(at, Ok(nums[n][i].clone()), triangles::triangle_entry::<ExactInt>(n, i, Method::ClosedForm));
            sw.eq_res(at, Ok(polys[n][i].clone()), triangles::triangle_entry::<IntPoly>(n, i, Method::ClosedForm));
        }
    }
    for n in 0..=r.n_max {
        sw.eq(|| format!("diagonal n={n}"), &diagonal_sum_in::<ExactInt>(n), &tribonacci_lucas_number(n));
    }
    for n in 0..=r.n_max_poly {
        sw.eq(|| format!("diagonal(x) n={n}"), &diagonal_sum_in::<IntPoly>(n), &tribonacci_lucas_poly(n));
    }
    sw
}

fn check_def1(r: &SweepRange) -> Sweep {
    let mut sw = Sweep::new(format!(
        "0 <= s <= n/2, n <= {} (polynomials), n <= {} (numbers)",
        r.n_max_poly, r.n_max
    ));
    for n in 0..=r.n_max_poly {
        for s in 0..=n / 2 {
            sw.eq_res(
                || format!("x n={n} s={s}"),
                incomplete_tl_poly(n, s, TlMethod::TriangleSum),
                incomplete_tl_poly(n, s, TlMethod::BinomialSum),
            );
        }
        sw.eq_res(
            || format!("full n={n}"),
            incomplete_tl_poly(n, n / 2, TlMethod::BinomialSum),
            Ok(tribonacci_lucas_poly(n)),
        );
    }
    for n in 0..=r.n_max {
        for s in 0..=n / 2 {
            sw.eq_res(
                || format!("n={n} s={s}"),
                incomplete_tl_in::<ExactInt>(n, s, TlMethod::TriangleSum),
                incomplete_tl_in::<ExactInt>(n, s, TlMethod::BinomialSum),
            );
        }
    }
    sw
}

fn check_boundary(which: BoundaryForm, r: &SweepRange) -> Sweep {
    let lo = which.min_n();
    let mut sw = Sweep::new(format!("{lo} <= n <= {}", r.n_max_poly));
    for n in lo..=r.n_max_poly {
        sw.eq_res(
            || format!("n={n} s={}", which.level(n)),
            incomplete_tl_poly(n, which.level(n), TlMethod::TriangleSum),
            boundary_form(n, which),
        );
    }
    sw
}

/// Recurrence checks index up to `n + 3`, so the lattice stops three short.
fn recurrence_sweep<T: PartialEq + Display>(
    n_top: usize,
    levels: impl Fn(usize) -> std::ops::RangeInclusive<usize>,
    step: impl Fn(usize, usize) -> Result<(T, T)>,
    domain: &str,
) -> Sweep {
    let n_last = n_top.saturating_sub(3);
    let mut sw = Sweep::new(format!("1 <= n <= {n_last}, {domain}"));
    for n in 1..=n_last {
        for s in levels(n) {
            sw.pair(|| format!("n={n} s={s}"), step(n, s));
        }
    }
    sw
}

fn check_prop3(r: &SweepRange) -> Sweep {
    let mut sw = Sweep::new(format!("3 <= n <= {}, 1 <= s <= (n-1)/2", r.n_max_poly));
    for n in 3..=r.n_max_poly {
        for s in 1..=(n - 1) / 2 {
            sw.eq_res(
                || format!("n={n} s={s}"),
                incomplete_tl_poly(n, s, TlMethod::BinomialSum),
                tl_relation_rhs_in::<IntPoly>(n, s),
            );
        }
    }
    sw
}

fn check_cor4(r: &SweepRange) -> Sweep {
    let mut sw = Sweep::new(format!("3 <= n <= {}, 1 <= s <= (n-1)/2", r.n_max));
    for n in 3..=r.n_max {
        for s in 1..=(n - 1) / 2 {
            sw.eq_res(|| format!("n={n} s={s}"), incomplete_tl_number(n, s), tl_relation_rhs_in::<ExactInt>(n, s));
        }
    }
    sw
}

fn check_thm5(r: &SweepRange) -> Sweep {
    let n_last = r.n_max.min(PARTIAL_SUM_N);
    let mut sw = Sweep::new(format!("1 <= n <= {n_last}, 1 <= h <= {}, 0 <= s <= n/2", r.h_max));
    for n in 1..=n_last {
        for h in 1..=r.h_max {
            for s in 0..=n / 2 {
                sw.pair(|| format!("n={n} h={h} s={s}"), partial_sum_lhs_rhs(n, h, s));
            }
        }
    }
    sw
}

fn check_row_sum<E: crate::MonomialRing>(n_top: usize) -> Sweep {
    let mut sw = Sweep::new(format!("1 <= n <= {n_top}"));
    for n in 1..=n_top {
        sw.pair(|| format!("n={n}"), row_sum_lhs_rhs_in::<E>(n));
    }
    sw
}

fn check_binet(family: SequenceFamily, r: &SweepRange) -> Sweep {
    let mut sw = Sweep::new(format!("0 <= n <= {}, tolerance {BINET_TOLERANCE:e} relative", r.n_max));
    for n in 0..=r.n_max {
        let exact = match family {
            SequenceFamily::TribonacciNumber => tribonacci_number(n),
            _ => tribonacci_lucas_number(n),
        };
        let exact_f = exact.to_f64().unwrap_or(f64::INFINITY);
        sw.points += 1;
        match binet_estimate(n, family, BINET_PRECISION) {
            Ok(est) if (est - exact_f).abs() <= BINET_TOLERANCE * exact_f.abs().max(1.0) => {}
            Ok(est) => sw.fail(|| format!("n={n}"), format!("{est:.6}"), exact.to_string()),
            Err(e) => sw.fail(|| format!("n={n}"), format!("error: {e}"), exact.to_string()),
        }
    }
    if family == SequenceFamily::TribonacciNumber {
        sw.points += 1;
        match binet_roots(BINET_PRECISION) {
            Ok(roots) => {
                let worst = roots.vieta_residuals().into_iter().fold(0.0, f64::max);
                if worst >= 1e-9 {
                    sw.fail(|| "vieta".into(), format!("{worst:e}"), "< 1e-9".into());
                }
                sw.note(format!("computed at {} significant bits", roots.precision));
            }
            Err(e) => sw.fail(|| "vieta".into(), format!("error: {e}"), String::new()),
        }
    }
    sw
}

fn check_poly_at_one(r: &SweepRange) -> Sweep {
    let mut sw = Sweep::new(format!("0 <= n <= {}; triangle rows <= {}", r.n_max, r.n_max_poly));
    for n in 0..=r.n_max {
        sw.eq(|| format!("T n={n}"), &tribonacci_poly(n).at_one(), &tribonacci_number(n));
        sw.eq(|| format!("K n={n}"), &tribonacci_lucas_poly(n).at_one(), &tribonacci_lucas_number(n));
    }
    let polys = triangles::rows::<IntPoly>(r.n_max_poly + 1);
    let nums = triangles::rows::<ExactInt>(r.n_max_poly + 1);
    for (n, (prow, nrow)) in polys.iter().zip(&nums).enumerate() {
        for (i, (p, v)) in prow.iter().zip(nrow).enumerate() {
            sw.eq(|| format!("B n={n} i={i}"), &p.at_one(), v);
        }
    }
    sw
}

fn mode_label(mode: &XMode) -> String {
    match mode {
        XMode::Symbolic => "x symbolic".into(),
        XMode::AtValue(v) => format!("x={v}"),
    }
}

fn gf_sweep(family: IncompleteFamily, variant: GFVariant, r: &SweepRange) -> Sweep {
    let (s_lo, name) = match family {
        IncompleteFamily::IncTribonacci => (0, "Q_s"),
        IncompleteFamily::IncTribonacciLucas => (1, "W_s"),
    };
    let modes = r.modes();
    let mode_names: Vec<String> = modes.iter().map(mode_label).collect();
    let mut sw = Sweep::new(format!(
        "{s_lo} <= s <= {}, powers 0..{}, {}",
        r.s_max,
        r.order,
        mode_names.join(", ")
    ));
    for s in s_lo..=r.s_max {
        for (mode, label) in modes.iter().zip(&mode_names) {
            match gf_vs_direct(family, s, variant, mode, r.order) {
                Ok(report) => {
                    sw.points += r.order;
                    for m in report.mismatches {
                        let slot = match family {
                            IncompleteFamily::IncTribonacci if m.power > 2 * s => {
                                format!(" (U_s z^{})", m.power - 2 * s - 1)
                            }
                            _ => String::new(),
                        };
                        sw.fail(|| format!("s={s} {label} z^{}{slot}", m.power), m.gf, m.direct);
                    }
                }
                Err(e) => {
                    sw.points += 1;
                    sw.fail(|| format!("s={s} {label}"), format!("error: {e}"), String::new());
                }
            }
        }
    }
    sw.note(format!("{name} expansion on the left, direct double sums on the right"));
    sw
}

/// Compare an integer-ring generating function at `x = 1` against numbers.
fn number_gf_sweep(
    s_range: std::ops::RangeInclusive<usize>,
    order: usize,
    gf: impl Fn(usize) -> Result<crate::genfunc::RationalGF<ExactInt>>,
    direct: impl Fn(usize, usize) -> Result<ExactInt>,
) -> Sweep {
    let mut sw = Sweep::new(format!("{} <= s <= {}, powers 0..{order}, x=1", s_range.start(), s_range.end()));
    for s in s_range {
        let series = gf(s).and_then(|g| series_expand(&g, order));
        match series {
            Ok(series) => {
                for (k, c) in series.coeffs().iter().enumerate() {
                    sw.eq_res(|| format!("s={s} z^{k}"), Ok(c.clone()), direct(k, s));
                }
            }
            Err(e) => {
                sw.points += 1;
                sw.fail(|| format!("s={s}"), format!("error: {e}"), String::new());
            }
        }
    }
    sw
}

fn direct_t(n: usize, s: usize) -> Result<ExactInt> {
    if IncompleteFamily::IncTribonacci.is_valid(n, s) {
        incomplete_tribonacci_number(n, s)
    } else {
        Ok(ExactInt::zero())
    }
}

fn direct_k(n: usize, s: usize) -> Result<ExactInt> {
    if IncompleteFamily::IncTribonacciLucas.is_valid(n, s) {
        incomplete_tl_in::<ExactInt>(n, s, TlMethod::BinomialSum)
    } else {
        Ok(ExactInt::zero())
    }
}

fn check_cor11(r: &SweepRange) -> Sweep {
    number_gf_sweep(0..=r.s_max, r.order, |s| Ok(q_gf_in(s, GFVariant::Corrected, &ExactInt::one())), direct_t)
}

fn check_cor13(r: &SweepRange) -> Sweep {
    number_gf_sweep(1..=r.s_max, r.order, |s| w_gf_in(s, GFVariant::Corrected, &ExactInt::one()), direct_k)
}

fn check_eq16(r: &SweepRange) -> Sweep {
    let mut sw = number_gf_sweep(0..=r.s_max, r.order, |s| Ok(eq16_printed_gf(s)), direct_t);
    sw.note("coefficients agree with the printed Q_s at x = 1 only after multiplying by z^(2s+1)");
    sw
}

fn run_checker(id: &str, r: &SweepRange) -> Option<Sweep> {
    let np = r.n_max_poly;
    let nn = r.n_max;
    let half = |n: usize| 0..=n / 2;
    let tri = |n: usize| 0..=(n - 1) / 2;
    Some(match id {
        "eq2.2" => check_eq22(r),
        "eq2.4" => check_eq24(r),
        "closed-vs-recurrence-triangle" => check_triangle(r),
        "def1-methods" => check_def1(r),
        "eq3.3" => check_boundary(BoundaryForm::Eq33, r),
        "eq3.4" => check_boundary(BoundaryForm::Eq34, r),
        "eq3.5" => check_boundary(BoundaryForm::Eq35, r),
        "eq3.6" => check_boundary(BoundaryForm::Eq36, r),
        "eq3.7" => recurrence_sweep(np, half, homogeneous_step::<IntPoly>, "0 <= s <= n/2"),
        "eq3.8" => recurrence_sweep(np, half, nonhomogeneous_step::<IntPoly>, "0 <= s <= n/2"),
        "eq3.9" => recurrence_sweep(nn, half, homogeneous_step::<ExactInt>, "0 <= s <= n/2"),
        "eq3.10" => recurrence_sweep(nn, half, nonhomogeneous_step::<ExactInt>, "0 <= s <= n/2"),
        "eq1.5" => recurrence_sweep(np, tri, tribonacci_step::<IntPoly>, "0 <= s <= (n-1)/2"),
        "prop3" => check_prop3(r),
        "cor4" => check_cor4(r),
        "thm5" => check_thm5(r),
        "prop6" => check_row_sum::<IntPoly>(np),
        "cor8" => check_row_sum::<ExactInt>(nn),
        "binet-T" => check_binet(SequenceFamily::TribonacciNumber, r),
        "binet-K" => check_binet(SequenceFamily::TribonacciLucasNumber, r),
        "poly-at-1" => check_poly_at_one(r),
        "thm10-printed" => gf_sweep(IncompleteFamily::IncTribonacci, GFVariant::AsPrinted, r),
        "thm10-corrected" => gf_sweep(IncompleteFamily::IncTribonacci, GFVariant::Corrected, r),
        "cor11" => check_cor11(r),
        "thm12" => gf_sweep(IncompleteFamily::IncTribonacciLucas, GFVariant::Corrected, r),
        "cor13" => check_cor13(r),
        "eq1.6-shift" => check_eq16(r),
        _ => return None,
    })
}

pub fn run_identity(id: &str, range: &SweepRange) -> Result<IdentityReport> {
    range.validate()?;
    let sweep = run_checker(id, range).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    Ok(sweep.finish(id))
}

/// Every catalog entry, in catalog order regardless of scheduling.
pub fn run_all(range: &SweepRange) -> Result<Vec<IdentityReport>> {
    range.validate()?;
    CATALOG.par_iter().map(|entry| run_identity(entry.id, range)).collect()
}

pub fn all_ok(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::is_ok)
}

/// Fixed-width text table, one line per report.
pub fn render_table(reports: &[IdentityReport]) -> String {
    let mut out = format!("{:<30} {:<14} {:>8} {:>8}\n", "id", "status", "points", "failures");
    for r in reports {
        let _ = writeln!(out, "{:<30} {:<14} {:>8} {:>8}", r.id, r.status, r.points_checked, r.failure_count);
        if let Some(first) = r.failures.first() {
            let _ = writeln!(out, "    first: {}: {} vs {}", first.params, first.lhs, first.rhs);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrataRecord {
    pub label: String,
    pub subject: String,
    pub printed: String,
    pub corrected: String,
    pub observations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrataReport {
    pub records: Vec<ErrataRecord>,
}

impl Display for ErrataReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.records.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            writeln!(f, "({}) {}", r.label, r.subject)?;
            writeln!(f, "    printed:   {}", r.printed)?;
            writeln!(f, "    corrected: {}", r.corrected)?;
            for o in &r.observations {
                writeln!(f, "    - {o}")?;
            }
        }
        Ok(())
    }
}

const ERRATA_ORDER: usize = 24;

fn join<T: Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn record_a() -> Result<ErrataRecord> {
    let one = Rational::one();
    let mut obs = Vec::new();
    for s in 0..=3 {
        let printed = u_numerator_head(s, GFVariant::AsPrinted, &ExactInt::one())[2].clone();
        let corrected = u_numerator_head(s, GFVariant::Corrected, &ExactInt::one())[2].clone();
        let report =
            gf_vs_direct(IncompleteFamily::IncTribonacci, s, GFVariant::AsPrinted, &XMode::AtValue(one.clone()), 12)?;
        let first = report.first().map_or("none".to_string(), |m| {
            format!("z^{} (U_s z^{}): printed {} vs direct {}", m.power, m.power - 2 * s - 1, m.gf, m.direct)
        });
        obs.push(format!(
            "s={s}, x=1: U_s z^2 coefficient printed {printed} vs corrected {corrected}; first mismatch {first}"
        ));
    }
    let printed = q_gf_in(1, GFVariant::AsPrinted, &ExactInt::one());
    let corrected = q_gf_in(1, GFVariant::Corrected, &ExactInt::one());
    obs.push(format!(
        "s=1, x=1 from z^3: printed {} vs direct {}",
        join(&series_expand(&printed, 8)?.coeffs()[3..]),
        join(&series_expand(&corrected, 8)?.coeffs()[3..]),
    ));
    let clean = (0..=8).all(|s| {
        gf_vs_direct(IncompleteFamily::IncTribonacci, s, GFVariant::Corrected, &XMode::Symbolic, ERRATA_ORDER)
            .is_ok_and(|r| r.matches())
    });
    obs.push(format!(
        "corrected form reproduces the direct polynomials for 0 <= s <= 8 through z^{}: {clean}",
        ERRATA_ORDER - 1
    ));
    Ok(ErrataRecord {
        label: "a".into(),
        subject: "thm10: z^2 term of the numerator of U_s(x,z)".into(),
        printed: "z^2 (T_{2s}(x) - 2x^{s+1})".into(),
        corrected: "z^2 T_{2s}(x)".into(),
        observations: obs,
    })
}

fn record_b() -> Result<ErrataRecord> {
    let mut obs = Vec::new();
    for s in 0..=3 {
        let eq16 = series_expand(&eq16_printed_gf(s), 8)?;
        let shifted = series_expand(&q_gf_in(s, GFVariant::AsPrinted, &ExactInt::one()), 8 + 2 * s + 1)?;
        let tail = &shifted.coeffs()[2 * s + 1..];
        obs.push(format!(
            "s={s}: eq1.6 [{}]; printed cor11 from z^{} [{}]; equal after z^{} shift: {}",
            join(eq16.coeffs()),
            2 * s + 1,
            join(tail),
            2 * s + 1,
            eq16.coeffs() == tail
        ));
    }
    Ok(ErrataRecord {
        label: "b".into(),
        subject: "eq1.6: incomplete Tribonacci number generating function".into(),
        printed: "no power-of-z factor".into(),
        corrected: "multiply by z^{2s+1}, as cor11 does (and drop the -2 per record (a))".into(),
        observations: obs,
    })
}

fn record_c() -> Result<ErrataRecord> {
    let mut obs = Vec::new();
    for mode in [XMode::AtValue(Rational::one()), XMode::Symbolic] {
        let stated =
            gf_vs_direct(IncompleteFamily::IncTribonacciLucas, 1, GFVariant::AsPrinted, &mode, ERRATA_ORDER)?;
        obs.push(format!(
            "s=1, {}: stated composition matches the direct values through z^{}: {}",
            mode_label(&mode),
            ERRATA_ORDER - 1,
            stated.matches()
        ));
    }
    let sweep = run_identity("thm12", &SweepRange { s_max: 1, order: ERRATA_ORDER, ..SweepRange::default() })?;
    obs.push(format!("thm12 sweep at s=1: {}", sweep.status));
    Ok(ErrataRecord {
        label: "c".into(),
        subject: "thm12: stated domain of W_s".into(),
        printed: "s > 1".into(),
        corrected: "s >= 1".into(),
        observations: obs,
    })
}

fn record_d() -> Result<ErrataRecord> {
    let mut obs = Vec::new();
    for s in 2..=4 {
        let r = gf_vs_direct(IncompleteFamily::IncTribonacciLucas, s, GFVariant::AsPrinted, &XMode::Symbolic, ERRATA_ORDER)?;
        let cells: Vec<String> = r
            .mismatches
            .iter()
            .map(|m| format!("z^{}: composed {} vs direct {}", m.power, m.gf, m.direct))
            .collect();
        obs.push(format!("s={s}: {}", cells.join("; ")));
    }
    obs.push("the missing cell is n = 2s, where T_{2s-2}^{(s-1)} lies outside its domain and counts as 0".into());
    Ok(ErrataRecord {
        label: "d".into(),
        subject: "thm12: composition W_s = z^-1 Q_s + (xz + 2z^2) Q_{s-1} for s >= 2".into(),
        printed: "z^-1 Q_s(x,z) + (xz + 2z^2) Q_{s-1}(x,z)".into(),
        corrected: "z^-1 Q_s(x,z) + (xz + 2z^2) Q_{s-1}(x,z) + 2 T_{2s-2}(x) z^{2s}".into(),
        observations: obs,
    })
}

pub fn errata_report() -> Result<ErrataReport> {
    Ok(ErrataReport { records: vec![record_a()?, record_b()?, record_c()?, record_d()?] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn small() -> SweepRange {
        SweepRange { n_max: 12, n_max_poly: 10, s_max: 3, h_max: 4, order: 16, ..SweepRange::default() }
    }

    #[test]
    fn catalog_is_complete_and_unique() {
        let ids: HashSet<_> = list_identities().iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), 27);
        for e in list_identities() {
            assert!(run_checker(e.id, &small()).is_some(), "{} lacks a checker", e.id);
        }
        assert!(run_checker("nosuch", &small()).is_none());
        let thm5 = list_identities().iter().find(|e| e.id == "thm5").unwrap();
        assert!(thm5.description.contains("partial-sum"));
    }

    #[test]
    fn unknown_id_is_a_lookup_error() {
        assert!(matches!(run_identity("nosuch", &small()), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn statuses_on_a_small_lattice() {
        let reports = run_all(&small()).unwrap();
        assert_eq!(reports.len(), 27);
        for (r, e) in reports.iter().zip(list_identities()) {
            assert_eq!(r.id, e.id);
            let want = if is_expected_fail(e.id) { Status::ExpectedFail } else { Status::Pass };
            assert_eq!(r.status, want, "{}: {:?}", r.id, r.failures.first());
            assert!(r.points_checked > 0, "{}", r.id);
            assert!(r.failures.len() <= MAX_FAILURES);
        }
    }

    #[test]
    fn printed_q_counterexample_location() {
        let r = run_identity("thm10-printed", &small()).unwrap();
        assert_eq!(r.status, Status::ExpectedFail);
        let first = &r.failures[0];
        assert_eq!(first.params, "s=0 x=1 z^3 (U_s z^2)");
        assert!(r.failure_count >= r.failures.len());
    }

    #[test]
    fn zero_bounds_are_rejected() {
        let bad = SweepRange { order: 0, ..SweepRange::default() };
        assert!(run_identity("eq2.2", &bad).is_err());
    }

    #[test]
    fn range_json_round_trip() {
        let r = SweepRange::default();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains(r#""x_points":["1","2","1/2"]"#));
        assert_eq!(serde_json::from_str::<SweepRange>(&text).unwrap(), r);
    }

    #[test]
    fn errata_records() {
        let e = errata_report().unwrap();
        let labels: Vec<&str> = e.records.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["a", "b", "c", "d"]);
        assert!(e.records[0].observations[0].contains("printed -2 vs corrected 0"));
        assert!(e.records[0].observations[4].contains("printed 2, 4, 4, 6"));
        assert!(e.records[1].observations.iter().all(|o| o.ends_with("true")));
        assert!(e.records[2].observations.iter().all(|o| o.ends_with("true") || o.ends_with("pass")));
        assert!(e.records[3].observations[0].starts_with("s=2: z^4:"));
    }
}
