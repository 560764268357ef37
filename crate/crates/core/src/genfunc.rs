//! Truncated power series in `z` and the generating functions of the
//! incomplete families.
//!
//! Every generating function is held as one cleared fraction
//! `z^shift * numerator(z) / denominator(z)` whose denominator has constant
//! term 1, so expansion never leaves the coefficient ring.

use std::fmt;

use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::incomplete::{incomplete_tl_poly, incomplete_tribonacci_poly, IncompleteFamily, TlMethod};
use crate::poly::{ExactInt, IntPoly, Rational, Ring};
use crate::sequences::{tribonacci_at, tribonacci_number};

pub const DEFAULT_ORDER: usize = 64;

/// Polynomial in `z`, lowest power first.
pub type ZPoly<R> = Vec<R>;

fn zadd<R: Ring>(a: &[R], b: &[R]) -> ZPoly<R> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|k| match (a.get(k), b.get(k)) {
            (Some(u), Some(v)) => u.clone() + v.clone(),
            (Some(u), None) => u.clone(),
            (None, Some(v)) => v.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

fn zneg<R: Ring>(a: &[R]) -> ZPoly<R> {
    a.iter().map(|c| -c.clone()).collect()
}

fn zmul<R: Ring>(a: &[R], b: &[R]) -> ZPoly<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, u) in a.iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (j, v) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + u.clone() * v.clone();
        }
    }
    out
}

fn zpow<R: Ring>(a: &[R], e: usize) -> ZPoly<R> {
    (0..e).fold(vec![R::one()], |acc, _| zmul(&acc, a))
}

fn zshift<R: Ring>(a: &[R], k: usize) -> ZPoly<R> {
    std::iter::repeat_n(R::zero(), k).chain(a.iter().cloned()).collect()
}

fn two<R: Ring>() -> R {
    R::one() + R::one()
}

/// A power series in `z` truncated to a fixed number of coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Keeps exactly `order` coefficients, padding with zeros.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        PowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        PowerSeries { coeffs: (0..order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut full = zmul(&self.coeffs[..order], &other.coeffs[..order]);
        full.truncate(order);
        PowerSeries::new(full, order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        PowerSeries::new(zadd(&self.coeffs[..order], &other.coeffs[..order]), order)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PowerSeries<S> {
        PowerSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: fmt::Display> Serialize for PowerSeries<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// `z^shift * numerator / denominator`.
///
/// `valid_order`, when present, bounds how many expanded coefficients are
/// meaningful (the fraction was built from a truncated series).
#[derive(Debug, Clone, PartialEq)]
pub struct RationalGF<R> {
    pub numerator: ZPoly<R>,
    pub denominator: ZPoly<R>,
    pub shift: usize,
    pub valid_order: Option<usize>,
}

impl<R: Ring> RationalGF<R> {
    pub fn new(numerator: ZPoly<R>, denominator: ZPoly<R>, shift: usize) -> Self {
        RationalGF { numerator, denominator, shift, valid_order: None }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RationalGF<S> {
        RationalGF {
            numerator: self.numerator.iter().map(&f).collect(),
            denominator: self.denominator.iter().map(&f).collect(),
            shift: self.shift,
            valid_order: self.valid_order,
        }
    }
}

struct Texts<'a, R>(&'a [R]);

impl<R: fmt::Display> Serialize for Texts<'_, R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

impl<R: fmt::Display> Serialize for RationalGF<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = if self.valid_order.is_some() { 4 } else { 3 };
        let mut st = serializer.serialize_struct("RationalGF", fields)?;
        st.serialize_field("shift", &self.shift)?;
        st.serialize_field("numerator", &Texts(&self.numerator))?;
        st.serialize_field("denominator", &Texts(&self.denominator))?;
        if let Some(v) = self.valid_order {
            st.serialize_field("valid_order", &v)?;
        }
        st.end()
    }
}

/// Expand `gf` to `order` coefficients.
pub fn series_expand<R: Ring>(gf: &RationalGF<R>, order: usize) -> Result<PowerSeries<R>> {
    if !gf.denominator.first().is_some_and(|c| c.is_one()) {
        return Err(Error::Expansion("denominator constant term must be 1".into()));
    }
    if let Some(valid) = gf.valid_order {
        if order > valid {
            return Err(Error::Expansion(format!(
                "requested {order} coefficients but the forcing series is only valid to {valid}"
            )));
        }
    }
    let body = order.saturating_sub(gf.shift);
    let mut p: Vec<R> = Vec::with_capacity(body);
    for k in 0..body {
        let mut c = gf.numerator.get(k).cloned().unwrap_or_else(R::zero);
        for (i, d) in gf.denominator.iter().enumerate().take(k + 1).skip(1) {
            if !d.is_zero() {
                c = c - d.clone() * p[k - i].clone();
            }
        }
        p.push(c);
    }
    Ok(PowerSeries::new(zshift(&p, gf.shift), order))
}

/// Non-homogeneous part of a third-order recurrence.
#[derive(Debug, Clone, PartialEq)]
pub enum Forcing<R> {
    /// Leading coefficients of `r(z) = sum r_n z^n`.
    Series(PowerSeries<R>),
    /// A closed form for `r(z)`.
    Rational(RationalGF<R>),
}

/// `S_n = a S_{n-1} + b S_{n-2} + c S_{n-3} + r_n` for `n >= 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma9Spec<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub initial: [R; 3],
    pub r: Forcing<R>,
}

impl<R: Ring> Lemma9Spec<R> {
    /// `S_0 .. S_{count-1}` by unrolling the recurrence.
    pub fn unroll(&self, count: usize) -> Result<Vec<R>> {
        let r = match &self.r {
            Forcing::Series(ps) => {
                if ps.order() < count {
                    return Err(Error::Expansion(format!("forcing series shorter than {count}")));
                }
                ps.clone()
            }
            Forcing::Rational(gf) => series_expand(gf, count)?,
        };
        let mut out: Vec<R> = self.initial.iter().take(count).cloned().collect();
        for n in 3..count {
            let next = self.a.clone() * out[n - 1].clone()
                + self.b.clone() * out[n - 2].clone()
                + self.c.clone() * out[n - 3].clone()
                + r.coeff(n);
            out.push(next);
        }
        Ok(out)
    }
}

/// Generating function of a sequence obeying a non-homogeneous third-order
/// recurrence, from its first three terms and the forcing term.
pub fn lemma9_gf<R: Ring>(spec: &Lemma9Spec<R>) -> Result<RationalGF<R>> {
    let head = match &spec.r {
        Forcing::Series(ps) => ps.clone(),
        Forcing::Rational(gf) => series_expand(gf, 3)?,
    };
    let [s0, s1, s2] = spec.initial.clone();
    let (a, b) = (spec.a.clone(), spec.b.clone());
    let base = vec![
        s0.clone() - head.coeff(0),
        s1.clone() - a.clone() * s0.clone() - head.coeff(1),
        s2 - a * s1 - b * s0 - head.coeff(2),
    ];
    let den = vec![R::one(), -spec.a.clone(), -spec.b.clone(), -spec.c.clone()];
    Ok(match &spec.r {
        Forcing::Series(ps) => RationalGF {
            numerator: zadd(&base, ps.coeffs()),
            denominator: den,
            shift: 0,
            valid_order: Some(ps.order()),
        },
        Forcing::Rational(g) => RationalGF {
            numerator: zadd(&zmul(&base, &g.denominator), &zshift(&g.numerator, g.shift)),
            denominator: zmul(&den, &g.denominator),
            shift: 0,
            valid_order: g.valid_order,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GFVariant {
    AsPrinted,
    Corrected,
}

/// How the indeterminate `x` enters a generating function.
#[derive(Debug, Clone, PartialEq)]
pub enum XMode {
    Symbolic,
    AtValue(Rational),
}

impl fmt::Display for XMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XMode::Symbolic => f.write_str("symbolic"),
            XMode::AtValue(v) => write!(f, "x={v}"),
        }
    }
}

/// `1 - x^2 z - x z^2 - z^3`.
fn tribonacci_denominator<R: Ring>(x: &R) -> ZPoly<R> {
    vec![R::one(), -(x.clone() * x.clone()), -x.clone(), -R::one()]
}

/// `(x z^2 + z^3)(x + z)^s` and `(1 - x^2 z)^{s+1}`.
fn forcing_parts<R: Ring>(s: usize, x: &R) -> (ZPoly<R>, ZPoly<R>) {
    let head = vec![R::zero(), R::zero(), x.clone(), R::one()];
    let num = zmul(&head, &zpow(&[x.clone(), R::one()], s));
    let den = zpow(&[R::one(), -(x.clone() * x.clone())], s + 1);
    (num, den)
}

/// The polynomial part `T_{2s+1} + z(T_{2s+2} - x^2 T_{2s+1}) + z^2 c_2` of the
/// numerator of `U_s`, where `c_2` is `T_{2s}(x) - 2x^{s+1}` as printed and
/// `T_{2s}(x)` once corrected.
pub fn u_numerator_head<R: Ring>(s: usize, variant: GFVariant, x: &R) -> [R; 3] {
    let t = |n| tribonacci_at(x, n);
    let x2 = x.clone() * x.clone();
    let mut c2 = t(2 * s);
    if variant == GFVariant::AsPrinted {
        let xp = (0..=s).fold(R::one(), |acc, _| acc * x.clone());
        c2 = c2 - two::<R>() * xp;
    }
    [t(2 * s + 1), t(2 * s + 2) - x2 * t(2 * s + 1), c2]
}

/// `Q_s(x, z) = z^{2s+1} U_s(x, z)`, the generating function of `T_n^{(s)}(x)`,
/// with `x` taken from the ring `R`.
pub fn q_gf_in<R: Ring>(s: usize, variant: GFVariant, x: &R) -> RationalGF<R> {
    let (g_num, g_den) = forcing_parts(s, x);
    let head = u_numerator_head(s, variant, x);
    RationalGF::new(
        zadd(&zmul(&head, &g_den), &zneg(&g_num)),
        zmul(&tribonacci_denominator(x), &g_den),
        2 * s + 1,
    )
}

/// `W_s(x, z)`, the generating function of `K_n^{(s)}(x)`, from corrected `Q`.
///
/// `AsPrinted` is the stated composition `z^{-1} Q_s + (x z + 2 z^2) Q_{s-1}`.
/// That composition loses the cell `n = 2s`, where `T_{2s-2}^{(s-1)}` is out
/// of domain; `Corrected` restores it as `2 T_{2s-2}(x) z^{2s}`. The two agree
/// at `s = 1`.
pub fn w_gf_in<R: Ring>(s: usize, variant: GFVariant, x: &R) -> Result<RationalGF<R>> {
    if s == 0 {
        return Err(domain("W_s needs s >= 1"));
    }
    // Q_s = z^{2s+1} A / B and Q_{s-1} = z^{2s-1} C / (B / (1 - x^2 z)).
    let q_hi = q_gf_in(s, GFVariant::Corrected, x);
    let q_lo = q_gf_in(s - 1, GFVariant::Corrected, x);
    let lift = [R::one(), -(x.clone() * x.clone())];
    let mixed = zmul(&zmul(&[x.clone(), two::<R>()], &q_lo.numerator), &lift);
    let mut numerator = zadd(&q_hi.numerator, &mixed);
    if variant == GFVariant::Corrected {
        let missing = two::<R>() * tribonacci_at(x, 2 * s - 2);
        numerator = zadd(&numerator, &zmul(&[missing], &q_hi.denominator));
    }
    Ok(RationalGF::new(numerator, q_hi.denominator, 2 * s))
}

/// The unshifted number form kept verbatim for the errata report, with numerator
/// `T_{2s+1} + (T_{2s+2} - T_{2s+1}) z + (T_{2s+3} - T_{2s+2} - T_{2s+1} - 2) z^2 - g(z)`,
/// `g(z) = (z^2 + z^3)(1 + z)^s / (1 - z)^{s+1}`, and no power-of-`z` shift.
pub fn eq16_printed_gf(s: usize) -> RationalGF<ExactInt> {
    let t = tribonacci_number;
    let one = ExactInt::one();
    let head = vec![
        t(2 * s + 1),
        t(2 * s + 2) - t(2 * s + 1),
        t(2 * s + 3) - t(2 * s + 2) - t(2 * s + 1) - ExactInt::from(2),
    ];
    let (g_num, g_den) = forcing_parts(s, &one);
    RationalGF::new(
        zadd(&zmul(&head, &g_den), &zneg(&g_num)),
        zmul(&tribonacci_denominator(&one), &g_den),
        0,
    )
}

/// A generating function in one of the two coefficient rings.
#[derive(Debug, Clone, PartialEq)]
pub enum ModeGF {
    Symbolic(RationalGF<IntPoly>),
    AtValue(RationalGF<Rational>),
}

impl ModeGF {
    pub fn expand_texts(&self, order: usize) -> Result<Vec<String>> {
        Ok(match self {
            ModeGF::Symbolic(gf) => series_expand(gf, order)?.coeffs().iter().map(|c| c.to_string()).collect(),
            ModeGF::AtValue(gf) => series_expand(gf, order)?.coeffs().iter().map(|c| c.to_string()).collect(),
        })
    }
}

impl Serialize for ModeGF {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ModeGF::Symbolic(gf) => gf.serialize(serializer),
            ModeGF::AtValue(gf) => gf.serialize(serializer),
        }
    }
}

pub fn q_gf(s: usize, variant: GFVariant, mode: &XMode) -> ModeGF {
    match mode {
        XMode::Symbolic => ModeGF::Symbolic(q_gf_in(s, variant, &IntPoly::x())),
        XMode::AtValue(v) => ModeGF::AtValue(q_gf_in(s, variant, v)),
    }
}

pub fn w_gf(s: usize, variant: GFVariant, mode: &XMode) -> Result<ModeGF> {
    Ok(match mode {
        XMode::Symbolic => ModeGF::Symbolic(w_gf_in(s, variant, &IntPoly::x())?),
        XMode::AtValue(v) => ModeGF::AtValue(w_gf_in(s, variant, v)?),
    })
}

/// One coefficient where the expansion and the direct value differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoeffMismatch {
    pub power: usize,
    pub gf: String,
    pub direct: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MismatchReport {
    pub order: usize,
    pub expansion: Vec<String>,
    pub mismatches: Vec<CoeffMismatch>,
}

impl MismatchReport {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn first(&self) -> Option<&CoeffMismatch> {
        self.mismatches.first()
    }
}

/// Direct incomplete value at index `n`, zero when `(n, s)` is out of domain.
pub fn direct_coefficient(family: IncompleteFamily, n: usize, s: usize) -> Result<IntPoly> {
    if !family.is_valid(n, s) {
        return Ok(IntPoly::zero());
    }
    match family {
        IncompleteFamily::IncTribonacci => incomplete_tribonacci_poly(n, s),
        IncompleteFamily::IncTribonacciLucas => incomplete_tl_poly(n, s, TlMethod::BinomialSum),
    }
}

fn compare<R: Ring>(gf: &RationalGF<R>, order: usize, direct: impl Fn(usize) -> Result<R>) -> Result<MismatchReport> {
    let series = series_expand(gf, order)?;
    let mut mismatches = Vec::new();
    for (k, c) in series.coeffs().iter().enumerate() {
        let d = direct(k)?;
        if *c != d {
            mismatches.push(CoeffMismatch { power: k, gf: c.to_string(), direct: d.to_string() });
        }
    }
    Ok(MismatchReport {
        order,
        expansion: series.coeffs().iter().map(|c| c.to_string()).collect(),
        mismatches,
    })
}

/// Expand the family's generating function and compare it coefficientwise
/// against the directly computed incomplete values.
pub fn gf_vs_direct(
    family: IncompleteFamily,
    s: usize,
    variant: GFVariant,
    mode: &XMode,
    order: usize,
) -> Result<MismatchReport> {
    if order == 0 {
        return Err(domain("order must be >= 1"));
    }
    let gf = match family {
        IncompleteFamily::IncTribonacci => q_gf(s, variant, mode),
        IncompleteFamily::IncTribonacciLucas => w_gf(s, variant, mode)?,
    };
    match gf {
        ModeGF::Symbolic(gf) => compare(&gf, order, |k| direct_coefficient(family, k, s)),
        ModeGF::AtValue(gf) => {
            let XMode::AtValue(v) = mode else { unreachable!() };
            compare(&gf, order, |k| Ok(direct_coefficient(family, k, s)?.eval(v)))
        }
    }
}
