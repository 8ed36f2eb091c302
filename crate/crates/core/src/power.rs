//! Bounds for the power deformation `f_c(z) = z (f(z)/z)^c`, `c = a + bi`, over
//! close-to-convex `f`.
//!
//! Since `log|f_c(z)/z| = a log|f(z)/z| - b arg(f(z)/z)`, the extremum over the
//! class is `a·Φ^-(b/a, C)`: an infimum when `a > 0`, a supremum when `a < 0`.

use num_complex::Complex64;

use crate::ctc::bounds::{b0, phi_ctc};
use crate::error::{Error, Result};
use crate::extremal::Sign;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerExponent {
    pub a: f64,
    pub b: f64,
}

impl PowerExponent {
    pub fn new(a: f64, b: f64) -> Self {
        PowerExponent { a, b }
    }
}

impl From<Complex64> for PowerExponent {
    fn from(c: Complex64) -> Self {
        PowerExponent { a: c.re, b: c.im }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Infimum,
    Supremum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerBound {
    pub kind: BoundKind,
    pub value: f64,
}

/// Sharp bound of `log|f_c(z)/z|` over `f ∈ C`, `z ∈ D`.
///
/// With `β = |b/a|`:
///
/// ```text
/// β ≤ b0:  -(a/2) log[2(5a² - 4b² + 3|a|√(a² - 8b²))/(a² + b²)] - sgn(a)·b·arctan(3b/√(a² - 8b²))
/// β ≥ b0:  (a/2) log(a² + b²) - a log(2|a|) - sgn(a)·|b|(arctan β + π)
/// ```
pub fn power_bound(c: PowerExponent) -> Result<PowerBound> {
    let PowerExponent { a, b } = c;
    if a == 0.0 || !a.is_finite() || !b.is_finite() {
        return Err(Error::DegenerateExponent);
    }
    let kind = if a > 0.0 { BoundKind::Infimum } else { BoundKind::Supremum };
    let (a2, b2) = (a * a, b * b);
    let sa = a.signum();
    let beta = (b / a).abs();
    let value = if beta <= b0() {
        let root = (a2 - 8.0 * b2).max(0.0).sqrt();
        -0.5 * a * (2.0 * (5.0 * a2 - 4.0 * b2 + 3.0 * a.abs() * root) / (a2 + b2)).ln()
            - sa * b * (3.0 * b / root).atan()
    } else {
        0.5 * a * (a2 + b2).ln() - a * (2.0 * a.abs()).ln() - sa * b.abs() * (beta.atan() + std::f64::consts::PI)
    };
    Ok(PowerBound { kind, value })
}

/// The same bound through `a·Φ^-(b/a, C)`.
pub fn power_bound_via_phi(c: PowerExponent) -> Result<f64> {
    if c.a == 0.0 {
        return Err(Error::DegenerateExponent);
    }
    Ok(c.a * phi_ctc(c.b / c.a, Sign::Minus).finite().expect("finite infimum"))
}

/// `log|f_c(z)/z| = a Re(logw) - b Im(logw)` for `logw = log(f(z)/z)`.
pub fn power_eval(logw: Complex64, c: PowerExponent) -> f64 {
    c.a * logw.re - c.b * logw.im
}
