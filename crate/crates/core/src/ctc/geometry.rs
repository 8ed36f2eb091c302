use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polygon::BoundaryCurve;
use crate::roots;

/// `W(C)` lies in the strip `|Im w| < 3π/2`.
pub const STRIP_HALF_WIDTH: f64 = 1.5 * PI;

/// `arccos(-1/3)`, where `γ` on `(0, π)` switches from convex to concave.
pub fn inflection_parameter() -> f64 {
    (-1.0f64 / 3.0).acos()
}

fn check_domain(t: f64) -> Result<()> {
    if t.is_finite() && t.abs() < TAU {
        Ok(())
    } else {
        Err(Error::Domain { name: "t", value: t, expected: "-2π < t < 2π" })
    }
}

/// The outer branch written in the gap `s = 2π - |t| ∈ (0, π]`:
/// `log(1 - e^{it}) ± πi = log(2 sin(s/2)) ± i(3π/2 - s/2)`.
///
/// Working in `s` keeps full relative precision as `|t| → 2π`.
pub(crate) fn gamma_outer_by_gap(s: f64, upper: bool) -> Complex64 {
    let re = (2.0 * (0.5 * s).sin()).ln();
    let im = STRIP_HALF_WIDTH - 0.5 * s;
    Complex64::new(re, if upper { im } else { -im })
}

/// `γ(t)` for `-2π < t < 2π`.
pub fn gamma(t: f64) -> Result<Complex64> {
    check_domain(t)?;
    if t.abs() < PI {
        // Im(1 + 3e^{it}) has the sign of t, so the principal branch is continuous
        Ok((Complex64::new(1.0, 0.0) + 3.0 * Complex64::cis(t)).ln())
    } else {
        Ok(gamma_outer_by_gap(TAU - t.abs(), t > 0.0))
    }
}

fn tangent_inner(t: f64) -> Complex64 {
    let e = Complex64::cis(t);
    Complex64::new(0.0, 3.0) * e / (1.0 + 3.0 * e)
}

fn tangent_outer(t: f64) -> Complex64 {
    let e = Complex64::cis(t);
    Complex64::new(0.0, -1.0) * e / (1.0 - e)
}

/// `γ'(t)`. At `|t| = π` this is the value from the outer branch; use
/// [`gamma_tangent_limits`] for both one-sided values.
pub fn gamma_tangent(t: f64) -> Result<Complex64> {
    check_domain(t)?;
    Ok(if t.abs() < PI { tangent_inner(t) } else { tangent_outer(t) })
}

/// One-sided derivatives `(γ'(t⁻), γ'(t⁺))`; they differ only at `|t| = π`.
pub fn gamma_tangent_limits(t: f64) -> Result<(Complex64, Complex64)> {
    check_domain(t)?;
    // at the breakpoint both one-sided limits are taken with e^{it} = -1 exactly
    let minus_one = Complex64::new(-1.0, 0.0);
    let inner = Complex64::new(0.0, 3.0) * minus_one / (1.0 + 3.0 * minus_one);
    let outer = Complex64::new(0.0, -1.0) * minus_one / (1.0 - minus_one);
    Ok(if t == PI {
        (inner, outer)
    } else if t == -PI {
        (outer, inner)
    } else {
        let d = gamma_tangent(t)?;
        (d, d)
    })
}

/// `d/dt arg γ'(t)` on `(0, π) ∪ (π, 2π)`.
pub fn gamma_turning_rate(t: f64) -> Result<f64> {
    if !(t > 0.0 && t < TAU && t != PI) {
        return Err(Error::Domain { name: "t", value: t, expected: "0 < t < 2π, t ≠ π" });
    }
    let c = t.cos();
    Ok(if t < PI {
        (1.0 + 3.0 * c) / (Complex64::new(1.0, 0.0) + 3.0 * Complex64::cis(t)).norm_sqr()
    } else {
        (1.0 - c) / (Complex64::new(1.0, 0.0) - Complex64::cis(t)).norm_sqr()
    })
}

/// Parameters `u ∈ (0, arccos(-1/3))` and `v ∈ (π, 2π)` of the two points where
/// one line is tangent to `γ`, and the slope parameter `b0 = sin u/(3 + cos u)`
/// of that line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangencyPair {
    pub u: f64,
    pub v: f64,
    pub b0_geo: f64,
}

/// Residuals of the tangency conditions, all of which vanish at an exact
/// solution. Angles are compared as line directions (modulo π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangencyResiduals {
    /// `arg γ'(u)` against `arg γ'(v)`.
    pub tangent_directions: f64,
    /// `arg γ'(v)` against `arg(γ(v) - γ(u))`.
    pub chord_direction: f64,
    /// `v/2 - (u + π/2 - α)`.
    pub half_angle: f64,
    /// `tan(v/2) - (v + π - 2α)/(log(1 - cos v) - log(5 + 3 cos u))`.
    pub chord_slope: f64,
    /// `tan(v/2) + (3 + cos u)/sin u`.
    pub slope_u: f64,
    /// `1 - cos v - (3 + cos u)²/(5 + 3 cos u)`.
    pub cosine: f64,
    /// `b0 + cot(v/2)`.
    pub b0_consistency: f64,
}

impl TangencyResiduals {
    pub fn max_abs(&self) -> f64 {
        [
            self.tangent_directions,
            self.chord_direction,
            self.half_angle,
            self.chord_slope,
            self.slope_u,
            self.cosine,
            self.b0_consistency,
        ]
        .iter()
        .fold(0.0, |m, x| m.max(x.abs()))
    }
}

fn alpha(u: f64) -> f64 {
    (3.0 * u.sin() / (1.0 + 3.0 * u.cos())).atan()
}

/// Signed angle between two directions as lines, in `(-π/2, π/2]`.
fn line_angle(a: Complex64, b: Complex64) -> f64 {
    let d = (a * b.conj()).arg();
    let d = d.rem_euclid(PI);
    if d > FRAC_PI_2 {
        d - PI
    } else {
        d
    }
}

impl TangencyPair {
    pub fn residuals(&self) -> TangencyResiduals {
        let (u, v) = (self.u, self.v);
        let a = alpha(u);
        let (cu, su) = (u.cos(), u.sin());
        let gu = gamma(u).expect("u in domain");
        let gv = gamma(v).expect("v in domain");
        let (du, dv) = (tangent_inner(u), tangent_outer(v));
        let tan_half = (0.5 * v).tan();
        TangencyResiduals {
            tangent_directions: line_angle(du, dv),
            chord_direction: line_angle(dv, gv - gu),
            half_angle: 0.5 * v - (u + FRAC_PI_2 - a),
            chord_slope: tan_half - (v + PI - 2.0 * a) / ((1.0 - v.cos()).ln() - (5.0 + 3.0 * cu).ln()),
            slope_u: tan_half + (3.0 + cu) / su,
            cosine: 1.0 - v.cos() - (3.0 + cu).powi(2) / (5.0 + 3.0 * cu),
            b0_consistency: self.b0_geo + 1.0 / tan_half,
        }
    }

    /// Signed distance of `w` from the common tangent line, positive on the
    /// side away from `γ`.
    pub fn line_offset(&self, w: Complex64) -> f64 {
        // the line is X + b0·Y = const through γ(u)
        let gu = gamma(self.u).expect("u in domain");
        let normal = Complex64::new(1.0, self.b0_geo) / self.b0_geo.hypot(1.0);
        ((w - gu) * normal.conj()).re
    }
}

/// Residual of the single equation in `u` obtained by eliminating `v`.
fn tangency_equation(u: f64) -> f64 {
    let cu = u.cos();
    -(3.0 + cu) / u.sin() - (u + PI - 2.0 * alpha(u)) / ((3.0 + cu).ln() - (5.0 + 3.0 * cu).ln())
}

/// Solves for the common tangent of the convex arcs `γ((0, arccos(-1/3)))`
/// and `γ((π, 2π))` by bisection plus Newton polish in `u`, then recovers `v`
/// and `b0` in closed form.
pub fn common_tangent(tol: f64) -> Result<TangencyPair> {
    if !(tol > 0.0) {
        return Err(Error::Domain { name: "tol", value: tol, expected: "tol > 0" });
    }
    const DELTA: f64 = 1e-6;
    let u = roots::find_root(tangency_equation, DELTA, inflection_parameter() - DELTA, tol)
        .map_err(|e| Error::TangencyNotFound(e.to_string()))?;
    let v = 2.0 * (u + FRAC_PI_2 - alpha(u));
    let pair = TangencyPair { u, v, b0_geo: u.sin() / (3.0 + u.cos()) };
    if !(v > PI && v < TAU) {
        return Err(Error::TangencyNotFound(format!("v = {v} outside (π, 2π)")));
    }
    let worst = pair.residuals().max_abs();
    if worst > tol.max(1e-9) {
        return Err(Error::TangencyNotFound(format!("residual {worst:e} exceeds tolerance")));
    }
    Ok(pair)
}

/// Which plane a curve is reported in: `Ω = -W(C)` (where `γ` lives) or `W(C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    Omega,
    W,
}

/// Gaps `s ∈ (0, s_max]` clustered toward 0, ascending, `m` values, last is `s_max`.
fn clustered_gaps(s_max: f64, m: usize) -> Vec<f64> {
    (1..=m)
        .map(|k| if k == m { s_max } else { s_max * (1.0 - (FRAC_PI_2 * k as f64 / m as f64).cos()) })
        .collect()
}

fn to_frame(curve: BoundaryCurve, frame: Frame) -> BoundaryCurve {
    match frame {
        Frame::Omega => curve,
        Frame::W => curve.map(|w| -w),
    }
}

/// Mirrors the upper half `(t ≥ 0)` into a full symmetric curve. `upper`
/// must be sorted by increasing `t`; a sample at `t = 0` is kept once.
fn mirror(upper: &[(f64, Complex64)]) -> Vec<(f64, Complex64)> {
    let mut out: Vec<(f64, Complex64)> = upper
        .iter()
        .rev()
        .filter(|(t, _)| *t > 0.0)
        .map(|&(t, w)| (-t, w.conj()))
        .collect();
    out.extend_from_slice(upper);
    out
}

/// `γ` sampled at `n` parameters in `(-2π, 2π)`, cosine-clustered toward both
/// ends, exactly symmetric under `t ↦ -t`.
pub fn gamma_curve(n: usize, frame: Frame) -> Result<BoundaryCurve> {
    if n < 8 {
        return Err(Error::TooFewSamples { got: n, min: 8 });
    }
    let mut upper: Vec<(f64, Complex64)> = (0..n / 2)
        .rev()
        .map(|k| {
            let t = TAU * (PI * (k as f64 + 0.5) / n as f64).cos();
            (t, gamma(t).expect("inside domain"))
        })
        .collect();
    if n % 2 == 1 {
        upper.insert(0, (0.0, gamma(0.0)?));
    }
    let curve = BoundaryCurve::new(mirror(&upper), vec![-PI, PI], false);
    Ok(to_frame(curve, frame))
}

/// Boundary of the convex hull of `Ω`: `γ` on `[-u, u]` and on
/// `|t| ∈ [v, 2π)`, joined by the two common-tangent segments. The segments
/// carry no interior samples; consecutive vertices `γ(±u)`, `γ(±v)` bound them.
pub fn hull_boundary(n: usize, frame: Frame) -> Result<BoundaryCurve> {
    if n < 64 {
        return Err(Error::TooFewSamples { got: n, min: 64 });
    }
    let pair = crate::ctc::bounds::tangency();
    let (u, v) = (pair.u, pair.v);
    let half = n / 2;
    let outer_len = TAU - v;
    let m_inner = ((half as f64 * u / (u + outer_len)).round() as usize).max(8);
    let m_outer = half.saturating_sub(m_inner).max(8);

    let mut upper: Vec<(f64, Complex64)> = Vec::with_capacity(m_inner + m_outer + 1);
    for k in 0..=m_inner {
        let t = u * k as f64 / m_inner as f64;
        upper.push((t, gamma(t)?));
    }
    for s in clustered_gaps(outer_len, m_outer).into_iter().rev() {
        let t = if s == outer_len { v } else { TAU - s };
        upper.push((t, gamma_outer_by_gap(s, true)));
    }
    let curve = BoundaryCurve::new(mirror(&upper), vec![-v, -u, u, v], false);
    Ok(to_frame(curve, frame))
}
