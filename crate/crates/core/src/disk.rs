//! Closed forms and regions for the full class `S` (Grunsky disk), starlike
//! functions `S*` and convex functions `K` (Marx regions).
//!
//! All logarithms in this module are principal: every factor `1 - ζ` with
//! `|ζ| < 1` has positive real part, so no winding needs to be tracked.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{check_radius, Error, Result};
use crate::extremal::{ExtendedReal, Sign};
use crate::polygon::BoundaryCurve;

/// Default slack for region membership.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Closed disk in the `w`-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionDisk {
    pub center: Complex64,
    pub radius: f64,
}

impl RegionDisk {
    pub fn contains(&self, w: Complex64, tol: f64) -> bool {
        (w - self.center).norm() <= self.radius + tol
    }

    /// `sup` (or `inf`) of `Re w + b Im w` over the disk.
    pub fn support(&self, b: f64, sign: Sign) -> f64 {
        let lin = self.center.re + b * self.center.im;
        let reach = self.radius * b.hypot(1.0);
        match sign {
            Sign::Plus => lin + reach,
            Sign::Minus => lin - reach,
        }
    }

    pub fn boundary(&self, n: usize) -> Result<BoundaryCurve> {
        if n < 8 {
            return Err(Error::TooFewSamples { got: n, min: 8 });
        }
        let samples = (0..n)
            .map(|k| {
                let t = TAU * k as f64 / n as f64;
                (t, self.center + Complex64::from_polar(self.radius, t))
            })
            .collect();
        Ok(BoundaryCurve::new(samples, vec![], true))
    }
}

/// The Grunsky disk `W_r(S)`: center `-log(1 - r²)`, radius `log((1+r)/(1-r))`.
pub fn grunsky_region(r: f64) -> Result<RegionDisk> {
    check_radius(r)?;
    Ok(RegionDisk {
        center: Complex64::new(-(-r * r).ln_1p(), 0.0),
        radius: r.ln_1p() - (-r).ln_1p(),
    })
}

/// `Ψ_r(t, S) = (1 - cos t) log(1+r) - (1 + cos t) log(1-r)`.
pub fn psi_s(r: f64, t: f64) -> Result<f64> {
    check_radius(r)?;
    let c = t.cos();
    Ok((1.0 - c) * r.ln_1p() - (1.0 + c) * (-r).ln_1p())
}

/// Pointwise `Φ_r^±(b, S)`, read off the Grunsky disk.
pub fn phi_s_pointwise(r: f64, b: f64, sign: Sign) -> Result<f64> {
    Ok(grunsky_region(r)?.support(b, sign))
}

/// Full-disk `Φ^±(b, S)`: `+∞` above; below, `-log 4` at `b = 0` and `-∞`
/// otherwise.
pub fn phi_s(b: f64, sign: Sign) -> ExtendedReal {
    match sign {
        Sign::Plus => ExtendedReal::PosInfinity,
        Sign::Minus if b == 0.0 => ExtendedReal::Finite(-(4f64.ln())),
        Sign::Minus => ExtendedReal::NegInfinity,
    }
}

/// Starlike or convex; the convex region is the starlike one scaled by 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarxClass {
    Star,
    Convex,
}

impl MarxClass {
    pub fn scale(self) -> f64 {
        match self {
            MarxClass::Star => 2.0,
            MarxClass::Convex => 1.0,
        }
    }

    fn half_factor(self) -> f64 {
        self.scale() / 2.0
    }
}

/// `W_r(S*)` or `W_r(K)`: the image of `|ζ| ≤ r` under `-scale·log(1 - ζ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarxRegion {
    pub r: f64,
    pub class: MarxClass,
}

impl MarxRegion {
    pub fn new(r: f64, class: MarxClass) -> Result<Self> {
        check_radius(r)?;
        Ok(MarxRegion { r, class })
    }

    /// Point of the region boundary at angle `theta`.
    pub fn point(&self, theta: f64) -> Complex64 {
        -self.class.scale() * (Complex64::new(1.0, 0.0) - Complex64::from_polar(self.r, theta)).ln()
    }

    pub fn contains(&self, w: Complex64, tol: f64) -> bool {
        let s = self.class.scale();
        // exp is periodic; the principal preimage has |arg(1 - ζ)| < π/2
        if w.im.abs() >= s * FRAC_PI_2 {
            return false;
        }
        let zeta = Complex64::new(1.0, 0.0) - (-w / s).exp();
        zeta.norm() <= self.r + tol
    }
}

pub fn marx_boundary(r: f64, class: MarxClass, n: usize) -> Result<BoundaryCurve> {
    check_radius(r)?;
    if r == 0.0 {
        return Err(Error::DegenerateRegion);
    }
    if n < 8 {
        return Err(Error::TooFewSamples { got: n, min: 8 });
    }
    let region = MarxRegion { r, class };
    let samples = (0..n)
        .map(|k| {
            let theta = TAU * k as f64 / n as f64;
            (theta, region.point(theta))
        })
        .collect();
    Ok(BoundaryCurve::new(samples, vec![], true))
}

pub fn marx_contains(w: Complex64, r: f64, class: MarxClass) -> bool {
    MarxRegion { r, class }.contains(w, MEMBERSHIP_TOL)
}

/// The two stationary points of `θ ↦ -2 log|1 - re^{iθ}| - 2b arg(1 - re^{iθ})`,
/// i.e. the solutions of `sin θ - b cos θ + b r = 0`, in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalAngles {
    pub theta1: f64,
    pub theta2: f64,
}

fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

fn discriminant(r: f64, b: f64) -> f64 {
    1.0 + b * b * (1.0 - r * r)
}

pub fn critical_angles(r: f64, b: f64) -> CriticalAngles {
    let sd = discriminant(r, b).sqrt();
    let d = 1.0 + b * b;
    let (c1, s1) = ((b * b * r + sd) / d, (b * sd - b * r) / d);
    let (c2, s2) = ((b * b * r - sd) / d, (-b * sd - b * r) / d);
    CriticalAngles {
        theta1: wrap_angle(s1.atan2(c1)),
        theta2: wrap_angle(s2.atan2(c2)),
    }
}

/// The objective on the circle `|ζ| = r`, in real form.
fn circle_objective(r: f64, b: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    -(1.0 + r * r - 2.0 * r * c).ln() + 2.0 * b * (r * s / (1.0 - r * c)).atan()
}

/// Pointwise `Φ_r^±(b, S*)` (or `K`) in closed form.
pub fn phi_star(r: f64, b: f64, sign: Sign, class: MarxClass) -> Result<f64> {
    check_radius(r)?;
    if r == 0.0 {
        return Ok(0.0);
    }
    let sd = discriminant(r, b).sqrt();
    let base = (b * b).ln_1p();
    let twist = 2.0 * b * (b * r / sd).atan();
    let star = match sign {
        Sign::Plus => base - 2.0 * (sd - r).ln() + twist,
        Sign::Minus => base - 2.0 * (sd + r).ln() - twist,
    };
    Ok(class.half_factor() * star)
}

/// Same quantity as [`phi_star`], obtained by evaluating the objective at both
/// critical angles and taking the larger (or smaller) value.
pub fn phi_star_via_critical(r: f64, b: f64, sign: Sign, class: MarxClass) -> Result<f64> {
    check_radius(r)?;
    if r == 0.0 {
        return Ok(0.0);
    }
    let CriticalAngles { theta1, theta2 } = critical_angles(r, b);
    let (v1, v2) = (circle_objective(r, b, theta1), circle_objective(r, b, theta2));
    let star = match sign {
        Sign::Plus => v1.max(v2),
        Sign::Minus => v1.min(v2),
    };
    Ok(class.half_factor() * star)
}

/// Full-disk `Φ^-(b, S*) = log(1+b²) - log 4 - 2b arctan b`, halved for `K`.
pub fn phi_star_full_minus(b: f64, class: MarxClass) -> f64 {
    let star = (b * b).ln_1p() - 4f64.ln() - 2.0 * b * b.atan();
    class.half_factor() * star
}

/// Full-disk `Φ^±(b, S*)` or `Φ^±(b, K)`; the supremum is always `+∞`.
pub fn phi_star_full(b: f64, sign: Sign, class: MarxClass) -> ExtendedReal {
    match sign {
        Sign::Plus => ExtendedReal::PosInfinity,
        Sign::Minus => ExtendedReal::Finite(phi_star_full_minus(b, class)),
    }
}

/// `Ψ_r(t, F)` for `F ∈ {S*, K}` through the `Φ^±` relation.
pub fn psi_star(r: f64, t: f64, class: MarxClass) -> Result<f64> {
    check_radius(r)?;
    let v = crate::extremal::psi_via_phi(t, |b, sign| {
        ExtendedReal::Finite(phi_star(r, b, sign, class).expect("radius checked"))
    })?;
    Ok(v.finite().expect("finite by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn grunsky_values() {
        let d0 = grunsky_region(0.0).unwrap();
        assert_eq!(d0.center, Complex64::new(0.0, 0.0));
        assert_eq!(d0.radius, 0.0);
        let d = grunsky_region(0.5).unwrap();
        assert_abs_diff_eq!(d.center.re, 0.287_682_072_451_780_9, epsilon = 1e-15);
        assert_abs_diff_eq!(d.radius, 3f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(grunsky_region(0.9).unwrap().radius, 19f64.ln(), epsilon = 1e-14);
        assert!(grunsky_region(1.0).is_err());
    }

    #[test]
    fn psi_s_values() {
        assert_abs_diff_eq!(psi_s(0.5, PI).unwrap(), 2.0 * 1.5f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(psi_s(0.5, 0.0).unwrap(), 4f64.ln(), epsilon = 1e-15);
        assert_eq!(psi_s(0.0, 1.234).unwrap(), 0.0);
        // maximum of Re w over the disk boundary
        let disk = grunsky_region(0.5).unwrap();
        let max_re = disk.boundary(4096).unwrap().max_linear(0.0).unwrap().1;
        assert_abs_diff_eq!(max_re, psi_s(0.5, 0.0).unwrap(), epsilon = 1e-12);
    }

    #[test]
    fn psi_s_agrees_with_phi_relation() {
        for r in [0.1, 0.5, 0.9] {
            for k in 0..200 {
                let t = -PI + TAU * (k as f64 + 0.5) / 200.0;
                if t.cos().abs() <= 0.01 {
                    continue;
                }
                let via = crate::extremal::psi_via_phi(t, |b, s| phi_s_pointwise(r, b, s).unwrap().into()).unwrap();
                assert_abs_diff_eq!(via.finite().unwrap(), psi_s(r, t).unwrap(), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn phi_s_cases() {
        assert_eq!(phi_s(1.0, Sign::Plus), ExtendedReal::PosInfinity);
        assert_eq!(phi_s(0.0, Sign::Minus), ExtendedReal::Finite(-(4f64.ln())));
        assert_eq!(phi_s(-0.3, Sign::Minus), ExtendedReal::NegInfinity);
    }

    #[test]
    fn marx_boundary_points() {
        let c = marx_boundary(0.5, MarxClass::Star, 512).unwrap();
        assert_abs_diff_eq!(c.samples[0].1.re, 4f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(c.samples[256].1.re, -2.0 * 1.5f64.ln(), epsilon = 1e-15);
        for w in c.points() {
            let z = Complex64::new(1.0, 0.0) - (-w / 2.0).exp();
            assert_abs_diff_eq!(z.norm(), 0.5, epsilon = 1e-12);
        }
        assert_eq!(marx_boundary(0.0, MarxClass::Star, 64), Err(Error::DegenerateRegion));
        assert!(matches!(marx_boundary(0.5, MarxClass::Convex, 4), Err(Error::TooFewSamples { .. })));
    }

    #[test]
    fn marx_membership() {
        assert!(marx_contains(Complex64::new(0.0, 0.0), 0.3, MarxClass::Star));
        assert!(marx_contains(Complex64::new(4f64.ln(), 0.0), 0.5, MarxClass::Star));
        assert!(!marx_contains(Complex64::new(1.0, 3.0), 0.1, MarxClass::Star));
        // a 2πi·scale translate is not in the region
        assert!(!marx_contains(Complex64::new(0.0, 4.0 * PI), 0.5, MarxClass::Star));
        assert!(marx_contains(Complex64::new(2f64.ln(), 0.0), 0.5, MarxClass::Convex));
        assert!(!marx_contains(Complex64::new(4f64.ln(), 0.0), 0.5, MarxClass::Convex));
    }

    #[test]
    fn critical_angle_values() {
        let ca = critical_angles(0.7, 0.0);
        assert_eq!(ca.theta1, 0.0);
        assert_abs_diff_eq!(ca.theta2, PI, epsilon = 1e-15);
        for (r, b) in [(0.5, 1.0), (0.1, -3.0), (0.95, 0.2), (0.3, 5.0)] {
            let ca = critical_angles(r, b);
            for th in [ca.theta1, ca.theta2] {
                assert!((0.0..TAU).contains(&th));
                assert!((th.sin() - b * th.cos() + b * r).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn phi_star_reference_values() {
        assert_abs_diff_eq!(
            phi_star(0.5, 0.0, Sign::Minus, MarxClass::Star).unwrap(),
            -2.0 * 1.5f64.ln(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(phi_star(0.5, 0.0, Sign::Plus, MarxClass::Star).unwrap(), 4f64.ln(), epsilon = 1e-15);
        assert_eq!(phi_star(0.0, 3.0, Sign::Plus, MarxClass::Star).unwrap(), 0.0);
    }

    #[test]
    fn critical_route_matches_closed_form() {
        for &r in &[0.05, 0.3, 0.6, 0.95] {
            for &b in &[-5.0, -1.0, -0.1, 0.0, 0.4, 2.0, 5.0] {
                for sign in [Sign::Plus, Sign::Minus] {
                    let a = phi_star(r, b, sign, MarxClass::Star).unwrap();
                    let c = phi_star_via_critical(r, b, sign, MarxClass::Star).unwrap();
                    assert_abs_diff_eq!(a, c, epsilon = 1e-10);
                }
            }
        }
    }

    #[test]
    fn full_disk_minus() {
        assert_abs_diff_eq!(phi_star_full_minus(0.0, MarxClass::Star), -(4f64.ln()), epsilon = 1e-15);
        assert_abs_diff_eq!(phi_star_full_minus(0.0, MarxClass::Convex), -(2f64.ln()), epsilon = 1e-15);
        let at1 = phi_star_full_minus(1.0, MarxClass::Star);
        assert_abs_diff_eq!(at1, 2f64.ln() - 4f64.ln() - FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(at1, -2.263_943_507_354_841, epsilon = 1e-12);
        // limit r → 1⁻ of the pointwise value
        let mut last = f64::INFINITY;
        for k in 2..8 {
            let r = 1.0 - 10f64.powi(-k);
            let v = phi_star(r, 1.0, Sign::Minus, MarxClass::Star).unwrap();
            let gap = (v - at1).abs();
            assert!(gap < last);
            last = gap;
        }
        assert!(last < 1e-6);
        assert_eq!(phi_star_full(0.3, Sign::Plus, MarxClass::Convex), ExtendedReal::PosInfinity);
    }

    #[test]
    fn sum_identity_and_halving() {
        for i in 0..20 {
            let r = 0.05 + 0.9 * i as f64 / 19.0;
            for j in 0..20 {
                let b = -5.0 + 10.0 * j as f64 / 19.0;
                let p = phi_star(r, b, Sign::Plus, MarxClass::Star).unwrap();
                let m = phi_star(r, b, Sign::Minus, MarxClass::Star).unwrap();
                assert_abs_diff_eq!(p + m, -2.0 * (-r * r).ln_1p(), epsilon = 1e-10);
                let pk = phi_star(r, b, Sign::Plus, MarxClass::Convex).unwrap();
                assert_abs_diff_eq!(pk, 0.5 * p, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn phi_plus_monotone_in_abs_b() {
        for &r in &[0.1, 0.5, 0.9] {
            let vals: Vec<f64> = (0..=200)
                .map(|k| phi_star(r, -5.0 + 0.05 * k as f64, Sign::Plus, MarxClass::Star).unwrap())
                .collect();
            for k in 0..200 {
                let b = -5.0 + 0.05 * k as f64;
                if b >= 0.0 {
                    assert!(vals[k + 1] >= vals[k]);
                } else if b + 0.05 <= 0.0 {
                    assert!(vals[k + 1] <= vals[k]);
                }
            }
        }
    }

    #[test]
    fn stationarity_at_critical_angles() {
        let deriv = |r: f64, b: f64, th: f64| {
            -2.0 * r * (th.sin() - b * th.cos() + b * r) / (1.0 - 2.0 * r * th.cos() + r * r)
        };
        for &(r, b) in &[(0.5, 1.0), (0.9, -2.0), (0.2, 0.3)] {
            let ca = critical_angles(r, b);
            assert!(deriv(r, b, ca.theta1).abs() < 1e-10);
            assert!(deriv(r, b, ca.theta2).abs() < 1e-10);
        }
    }

    #[test]
    fn psi_star_against_boundary_samples() {
        for &r in &[0.2, 0.5, 0.8] {
            let curve = marx_boundary(r, MarxClass::Star, 1 << 16).unwrap();
            for k in 0..40 {
                let t = -PI + TAU * (k as f64 + 0.25) / 40.0;
                if t.cos().abs() <= 0.01 {
                    continue;
                }
                let e = Complex64::from_polar(1.0, t);
                let direct = curve.points().map(|w| (e * w).re).fold(f64::NEG_INFINITY, f64::max);
                assert_abs_diff_eq!(psi_star(r, t, MarxClass::Star).unwrap(), direct, epsilon = 1e-6);
            }
        }
    }
}
