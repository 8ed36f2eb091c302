//! Shared value types and the conversion between the directional functional
//! `Ψ_r(t)` and the pair `Φ_r^±(b)`.
//!
//! With `b = -tan t`,
//!
//! ```text
//! Ψ_r(t) = (cos t) Φ_r^+(-tan t)   if cos t > 0
//! Ψ_r(t) = (cos t) Φ_r^-(-tan t)   if cos t < 0
//! ```
//!
//! and the purely imaginary directions `e^{it} = ±i` are excluded.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use crate::error::{check_radius, Error, Result};

/// Guard on `|cos t|` below which a direction counts as purely imaginary.
pub const ANGLE_EPS: f64 = 1e-12;

/// A real number or one of the two infinities.
///
/// Extremal quantities are frequently infinite by theorem; keeping the tag
/// explicit separates those from floating-point overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    Finite(f64),
    PosInfinity,
    NegInfinity,
}

impl ExtendedReal {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    /// Lossy view as an IEEE value, for plotting and interop only.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedReal::Finite(x) => x,
            ExtendedReal::PosInfinity => f64::INFINITY,
            ExtendedReal::NegInfinity => f64::NEG_INFINITY,
        }
    }

    /// Inverse of [`ExtendedReal::to_f64`]; NaN is rejected.
    pub fn from_f64(x: f64) -> Option<Self> {
        if x.is_nan() {
            None
        } else if x == f64::INFINITY {
            Some(ExtendedReal::PosInfinity)
        } else if x == f64::NEG_INFINITY {
            Some(ExtendedReal::NegInfinity)
        } else {
            Some(ExtendedReal::Finite(x))
        }
    }
}

impl From<f64> for ExtendedReal {
    fn from(x: f64) -> Self {
        ExtendedReal::Finite(x)
    }
}

impl Neg for ExtendedReal {
    type Output = ExtendedReal;

    fn neg(self) -> Self {
        match self {
            ExtendedReal::Finite(x) => ExtendedReal::Finite(-x),
            ExtendedReal::PosInfinity => ExtendedReal::NegInfinity,
            ExtendedReal::NegInfinity => ExtendedReal::PosInfinity,
        }
    }
}

/// Scaling by a nonzero real. Scaling an infinity by zero has no meaning and
/// panics.
impl Mul<ExtendedReal> for f64 {
    type Output = ExtendedReal;

    fn mul(self, rhs: ExtendedReal) -> ExtendedReal {
        match rhs {
            ExtendedReal::Finite(x) => ExtendedReal::Finite(self * x),
            inf => {
                assert!(self != 0.0 && !self.is_nan(), "0 * infinity is undefined");
                if self > 0.0 {
                    inf
                } else {
                    -inf
                }
            }
        }
    }
}

/// Total order with `-∞ < finite < +∞`; finite values use IEEE total order.
pub fn extended_compare(a: ExtendedReal, b: ExtendedReal) -> Ordering {
    use ExtendedReal::*;
    match (a, b) {
        (Finite(x), Finite(y)) => x.total_cmp(&y),
        (NegInfinity, NegInfinity) | (PosInfinity, PosInfinity) => Ordering::Equal,
        (NegInfinity, _) | (_, PosInfinity) => Ordering::Less,
        (PosInfinity, _) | (_, NegInfinity) => Ordering::Greater,
    }
}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(extended_compare(*self, *other))
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::Finite(x) => fmt::Display::fmt(x, f),
            ExtendedReal::PosInfinity => f.write_str("+inf"),
            ExtendedReal::NegInfinity => f.write_str("-inf"),
        }
    }
}

impl FromStr for ExtendedReal {
    type Err = std::num::ParseFloatError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "+inf" | "inf" => Ok(ExtendedReal::PosInfinity),
            "-inf" => Ok(ExtendedReal::NegInfinity),
            other => other.parse::<f64>().map(ExtendedReal::Finite),
        }
    }
}

/// Which side of the extremal pair: supremum (`Plus`) or infimum (`Minus`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// The radius `r = |z|` of the evaluation point. Every class handled here is
/// rotationally invariant, so the modulus is all that matters.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EvalPoint(f64);

impl EvalPoint {
    pub fn new(r: f64) -> Result<Self> {
        check_radius(r)?;
        Ok(EvalPoint(r))
    }

    pub fn r(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for EvalPoint {
    type Error = Error;

    fn try_from(r: f64) -> Result<Self> {
        EvalPoint::new(r)
    }
}

/// Slope `b = -tan t` associated with the direction `e^{it}`.
pub fn slope_of_direction(t: f64) -> Result<f64> {
    let c = t.cos();
    if c.abs() < ANGLE_EPS {
        return Err(Error::DirectionDegenerate(c.abs()));
    }
    Ok(-t.sin() / c)
}

/// `Ψ(t)` from the values `Φ^±(-tan t)`.
///
/// Only the entry selected by the sign of `cos t` is used; the other may be
/// anything.
pub fn psi_from_phi(t: f64, phi_plus: ExtendedReal, phi_minus: ExtendedReal) -> Result<ExtendedReal> {
    let c = t.cos();
    if c.abs() < ANGLE_EPS {
        return Err(Error::DirectionDegenerate(c.abs()));
    }
    Ok(if c > 0.0 { c * phi_plus } else { c * phi_minus })
}

/// Evaluates `Ψ(t)` through a closure producing `Φ^±(b)`.
pub fn psi_via_phi<F>(t: f64, mut phi: F) -> Result<ExtendedReal>
where
    F: FnMut(f64, Sign) -> ExtendedReal,
{
    let b = slope_of_direction(t)?;
    let sign = if t.cos() > 0.0 { Sign::Plus } else { Sign::Minus };
    let value = phi(b, sign);
    match sign {
        Sign::Plus => psi_from_phi(t, value, ExtendedReal::Finite(0.0)),
        Sign::Minus => psi_from_phi(t, ExtendedReal::Finite(0.0), value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
    use ExtendedReal::*;

    #[test]
    fn psi_at_zero_angle_is_phi_plus() {
        let v = psi_from_phi(0.0, Finite(0.75), NegInfinity).unwrap();
        assert_eq!(v, Finite(0.75));
    }

    #[test]
    fn psi_at_pi_uses_phi_minus() {
        let log4 = 4f64.ln();
        let v = psi_from_phi(PI, PosInfinity, Finite(-log4)).unwrap();
        assert!((v.finite().unwrap() - log4).abs() < 1e-15);
    }

    #[test]
    fn infinity_keeps_sign_of_cosine() {
        assert_eq!(psi_from_phi(FRAC_PI_3, PosInfinity, Finite(0.0)).unwrap(), PosInfinity);
        assert_eq!(psi_from_phi(2.0 * FRAC_PI_3, Finite(0.0), PosInfinity).unwrap(), NegInfinity);
        assert_eq!(psi_from_phi(2.0 * FRAC_PI_3, Finite(0.0), NegInfinity).unwrap(), PosInfinity);
    }

    #[test]
    fn imaginary_direction_rejected() {
        assert!(matches!(
            psi_from_phi(FRAC_PI_2, Finite(1.0), Finite(1.0)),
            Err(Error::DirectionDegenerate(_))
        ));
        assert!(slope_of_direction(-FRAC_PI_2).is_err());
    }

    #[test]
    fn compare_orders_infinities() {
        assert_eq!(extended_compare(NegInfinity, Finite(0.0)), Ordering::Less);
        assert_eq!(extended_compare(PosInfinity, PosInfinity), Ordering::Equal);
        assert_eq!(extended_compare(Finite(1.0), Finite(1.0)), Ordering::Equal);
        assert_eq!(extended_compare(PosInfinity, Finite(1e308)), Ordering::Greater);
        assert!(NegInfinity < PosInfinity);
    }

    #[test]
    fn parse_render_infinities() {
        assert_eq!("+inf".parse::<ExtendedReal>().unwrap(), PosInfinity);
        assert_eq!("-inf".parse::<ExtendedReal>().unwrap(), NegInfinity);
        assert_eq!(PosInfinity.to_string(), "+inf");
        assert_eq!(ExtendedReal::from_f64(f64::NEG_INFINITY), Some(NegInfinity));
        assert_eq!(ExtendedReal::from_f64(f64::NAN), None);
    }

    #[test]
    fn eval_point_range() {
        assert!(EvalPoint::new(0.0).is_ok());
        assert!(EvalPoint::new(1.0).is_err());
        assert!(EvalPoint::new(-0.1).is_err());
    }

    #[test]
    fn psi_strictly_increasing_in_phi_plus() {
        let t = 0.4;
        let a = psi_from_phi(t, Finite(1.0), Finite(0.0)).unwrap();
        let b = psi_from_phi(t, Finite(1.0 + 1e-9), Finite(0.0)).unwrap();
        assert!(a < b);
    }
}
