//! Tribonacci and Tribonacci-Lucas numbers and polynomials.
//!
//! All four families obey the same third-order recurrence
//! `F_{n+3} = x^2 F_{n+2} + x F_{n+1} + F_n` (with `x = 1` for the numbers)
//! and differ only in their seeds:
//!
//! | family                | F_0 | F_1   | F_2         |
//! |-----------------------|-----|-------|-------------|
//! | Tribonacci            | 0   | 1     | x^2         |
//! | Tribonacci-Lucas      | 3   | x^2   | x^4 + 2x    |
//!
//! The exact recurrences are authoritative. [`binet_estimate`] is a
//! floating-point cross-check only.

use std::sync::RwLock;

use num_complex::Complex64;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::poly::{ExactInt, IntPoly, Ring};
use crate::FamilyValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SequenceFamily {
    TribonacciNumber,
    TribonacciLucasNumber,
    TribonacciPoly,
    TribonacciLucasPoly,
}

impl SequenceFamily {
    pub fn is_polynomial(self) -> bool {
        matches!(self, Self::TribonacciPoly | Self::TribonacciLucasPoly)
    }

    pub fn value(self, n: usize) -> FamilyValue {
        match self {
            Self::TribonacciNumber => FamilyValue::Number(tribonacci_number(n)),
            Self::TribonacciLucasNumber => FamilyValue::Number(tribonacci_lucas_number(n)),
            Self::TribonacciPoly => FamilyValue::Poly(tribonacci_poly(n)),
            Self::TribonacciLucasPoly => FamilyValue::Poly(tribonacci_lucas_poly(n)),
        }
    }
}

/// First `count` terms of `F_{n+3} = a F_{n+2} + b F_{n+1} + c F_n`.
pub fn third_order_prefix<R: Ring>(seeds: [R; 3], coeffs: [&R; 3], count: usize) -> Vec<R> {
    let mut out: Vec<R> = seeds.into_iter().take(count).collect();
    while out.len() < count {
        let k = out.len();
        let next = coeffs[0].clone() * out[k - 1].clone()
            + coeffs[1].clone() * out[k - 2].clone()
            + coeffs[2].clone() * out[k - 3].clone();
        out.push(next);
    }
    out
}

fn nth<R: Ring>(seeds: [R; 3], coeffs: [&R; 3], n: usize) -> R {
    let [mut a, mut b, mut c] = seeds;
    for _ in 0..n {
        let next = coeffs[0].clone() * c.clone() + coeffs[1].clone() * b.clone() + coeffs[2].clone() * a;
        a = b;
        b = c;
        c = next;
    }
    a
}

fn tribonacci_seeds<R: Ring>(x: &R) -> [R; 3] {
    [R::zero(), R::one(), x.clone() * x.clone()]
}

fn tribonacci_lucas_seeds<R: Ring>(x: &R) -> [R; 3] {
    let two = R::one() + R::one();
    let x2 = x.clone() * x.clone();
    [
        two.clone() + R::one(),
        x2.clone(),
        x2.clone() * x2 + two * x.clone(),
    ]
}

/// `T_n(x)` evaluated in any ring at the point `x`.
pub fn tribonacci_at<R: Ring>(x: &R, n: usize) -> R {
    let x2 = x.clone() * x.clone();
    nth(tribonacci_seeds(x), [&x2, x, &R::one()], n)
}

/// `K_n(x)` evaluated in any ring at the point `x`.
pub fn tribonacci_lucas_at<R: Ring>(x: &R, n: usize) -> R {
    let x2 = x.clone() * x.clone();
    nth(tribonacci_lucas_seeds(x), [&x2, x, &R::one()], n)
}

/// `T_n`: 0, 1, 1, 2, 4, 7, 13, 24, ...
pub fn tribonacci_number(n: usize) -> ExactInt {
    tribonacci_at(&ExactInt::one(), n)
}

/// `K_n`: 3, 1, 3, 7, 11, 21, 39, ...
pub fn tribonacci_lucas_number(n: usize) -> ExactInt {
    tribonacci_lucas_at(&ExactInt::one(), n)
}

pub fn tribonacci_poly(n: usize) -> IntPoly {
    tribonacci_at(&IntPoly::x(), n)
}

pub fn tribonacci_lucas_poly(n: usize) -> IntPoly {
    tribonacci_lucas_at(&IntPoly::x(), n)
}

/// `T_0, ..., T_{count-1}` in one pass.
pub fn tribonacci_numbers(count: usize) -> Vec<ExactInt> {
    let one = ExactInt::one();
    third_order_prefix(tribonacci_seeds(&one), [&one, &one, &one], count)
}

pub fn tribonacci_lucas_numbers(count: usize) -> Vec<ExactInt> {
    let one = ExactInt::one();
    third_order_prefix(tribonacci_lucas_seeds(&one), [&one, &one, &one], count)
}

/// Grow-on-demand cache for one family. Safe to share between threads.
#[derive(Debug)]
pub struct SequenceMemo {
    family: SequenceFamily,
    values: RwLock<Vec<FamilyValue>>,
}

impl SequenceMemo {
    pub fn new(family: SequenceFamily) -> Self {
        SequenceMemo {
            family,
            values: RwLock::new(Vec::new()),
        }
    }

    pub fn family(&self) -> SequenceFamily {
        self.family
    }

    pub fn get(&self, n: usize) -> FamilyValue {
        if let Some(v) = self.values.read().expect("memo lock").get(n) {
            return v.clone();
        }
        let mut values = self.values.write().expect("memo lock");
        if values.len() <= n {
            let x = IntPoly::x();
            let x2 = &x * &x;
            let one = IntPoly::one();
            let polys = |seeds| {
                third_order_prefix(seeds, [&x2, &x, &one], n + 1)
                    .into_iter()
                    .map(FamilyValue::Poly)
                    .collect()
            };
            *values = match self.family {
                SequenceFamily::TribonacciNumber => {
                    tribonacci_numbers(n + 1).into_iter().map(FamilyValue::Number).collect()
                }
                SequenceFamily::TribonacciLucasNumber => {
                    tribonacci_lucas_numbers(n + 1).into_iter().map(FamilyValue::Number).collect()
                }
                SequenceFamily::TribonacciPoly => polys(tribonacci_seeds(&x)),
                SequenceFamily::TribonacciLucasPoly => polys(tribonacci_lucas_seeds(&x)),
            };
        }
        values[n].clone()
    }
}

/// Approximations of the three roots of `t^3 = t^2 + t + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetRoots {
    /// The real root, about 1.8392867552.
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    /// Primitive cube root of unity `(-1 + i sqrt 3) / 2`.
    pub w: Complex64,
    /// Significant bits actually carried by the computation.
    pub precision: u32,
}

const F64_BITS: u32 = f64::MANTISSA_DIGITS;

impl BinetRoots {
    /// Residuals of `e1 = 1`, `e2 = -1`, `e3 = 1`.
    pub fn vieta_residuals(&self) -> [f64; 3] {
        let (a, b, c) = (self.alpha, self.beta, self.gamma);
        [
            (a + b + c - 1.0).norm(),
            (a * b + a * c + b * c + 1.0).norm(),
            (a * b * c - 1.0).norm(),
        ]
    }

    /// The same roots from the nested-radical closed forms.
    pub fn from_radicals() -> BinetRoots {
        let r33 = 3.0 * 33f64.sqrt();
        let u = (19.0 + r33).cbrt();
        let v = (19.0 - r33).cbrt();
        let w = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        let w2 = w * w;
        BinetRoots {
            alpha: Complex64::new((1.0 + u + v) / 3.0, 0.0),
            beta: (1.0 + w * u + w2 * v) / 3.0,
            gamma: (1.0 + w2 * u + w * v) / 3.0,
            w,
            precision: F64_BITS,
        }
    }
}

/// Roots by Newton iteration for the real root and the quadratic formula for
/// the complex pair.
///
/// Computation is carried in `f64`; requests above 53 bits are accepted and
/// served at 53 bits, which is what [`BinetRoots::precision`] reports.
pub fn binet_roots(precision: u32) -> Result<BinetRoots> {
    if precision < F64_BITS {
        return Err(domain(format!(
            "Binet precision must be at least {F64_BITS} bits, got {precision}"
        )));
    }
    let f = |t: f64| ((t - 1.0) * t - 1.0) * t - 1.0;
    let df = |t: f64| (3.0 * t - 2.0) * t - 1.0;
    let mut alpha = 2.0f64;
    for _ in 0..100 {
        let step = f(alpha) / df(alpha);
        alpha -= step;
        if step.abs() <= f64::EPSILON * alpha {
            break;
        }
    }
    // t^3 - t^2 - t - 1 = (t - alpha)(t^2 + (alpha - 1) t + 1/alpha)
    let p = alpha - 1.0;
    let disc = p * p - 4.0 / alpha;
    let im = (-disc).sqrt() / 2.0;
    let beta = Complex64::new(-p / 2.0, im);
    Ok(BinetRoots {
        alpha: Complex64::new(alpha, 0.0),
        beta,
        gamma: beta.conj(),
        w: Complex64::new(-0.5, 3f64.sqrt() / 2.0),
        precision: F64_BITS,
    })
}

/// Closed-form estimate of `T_n` or `K_n` from the characteristic roots.
pub fn binet_estimate(n: usize, family: SequenceFamily, precision: u32) -> Result<f64> {
    let roots = binet_roots(precision)?;
    let (a, b, c) = (roots.alpha, roots.beta, roots.gamma);
    let exp = u32::try_from(n).map_err(|_| domain(format!("index {n} too large for Binet")))?;
    let z = match family {
        SequenceFamily::TribonacciLucasNumber => a.powu(exp) + b.powu(exp) + c.powu(exp),
        SequenceFamily::TribonacciNumber => {
            let e = exp + 1;
            a.powu(e) / ((a - b) * (a - c)) + b.powu(e) / ((b - a) * (b - c)) + c.powu(e) / ((c - a) * (c - b))
        }
        other => {
            return Err(domain(format!("Binet formula applies to number families only, not {other:?}")))
        }
    };
    if z.im.abs() > 1e-6 * z.re.abs().max(1.0) {
        return Err(Error::NumericalInstability(format!(
            "imaginary residue {} at n = {n}; increase precision",
            z.im
        )));
    }
    Ok(z.re)
}
