//! Membership in the full region `W(C)` and the two descriptions of the
//! pointwise regions `W_r(C)`.

use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use num_complex::Complex64;

use super::geometry::{gamma, gamma_outer_by_gap, STRIP_HALF_WIDTH};
use crate::error::{check_radius, Error, Result};
use crate::polygon::{polygon_contains, BoundaryCurve};

/// Default right edge of the clipped region polygon.
pub const DEFAULT_CLIP_X: f64 = 50.0;
/// Default vertex count of the region polygon.
pub const DEFAULT_REGION_SAMPLES: usize = 4096;
/// Default boundary slack for [`region_contains`].
pub const REGION_TOL: f64 = 1e-9;

/// `W(C)` truncated at `Re w = clip_x`: the vertices of `-γ` followed by the
/// vertical closing edge. The region is a half-strip opening to the right, so
/// the truncation only discards points with `Re w > clip_x`.
#[derive(Debug, Clone)]
pub struct RegionPolygon {
    vertices: Vec<Complex64>,
    clip_x: f64,
}

impl RegionPolygon {
    pub fn new(clip_x: f64, n: usize) -> Result<Self> {
        if !(clip_x > 4f64.ln()) || !clip_x.is_finite() {
            return Err(Error::Domain { name: "clip_x", value: clip_x, expected: "log 4 < clip_x < ∞" });
        }
        if n < 1024 {
            return Err(Error::TooFewSamples { got: n, min: 1024 });
        }
        // -Re γ = clip_x on the outer branch when 2 sin(s/2) = e^{-clip_x}
        let s_clip = 2.0 * (0.5 * (-clip_x).exp()).asin();
        let half = n / 2;
        let m_inner = half / 2;
        let m_outer = half - m_inner;

        // upper half of γ, t from 0 up to 2π - s_clip
        let mut upper: Vec<Complex64> = Vec::with_capacity(half + 1);
        for k in 0..m_inner {
            let t = PI * k as f64 / m_inner as f64;
            upper.push(gamma(t)?);
        }
        // log-spaced gaps from π down to s_clip
        let (lmax, lmin) = (PI.ln(), s_clip.ln());
        for k in 0..m_outer {
            let s = if k + 1 == m_outer {
                s_clip
            } else {
                (lmax + (lmin - lmax) * k as f64 / (m_outer - 1) as f64).exp()
            };
            upper.push(gamma_outer_by_gap(s, true));
        }

        let mut vertices: Vec<Complex64> = upper.iter().rev().map(|w| -w.conj()).collect();
        vertices.extend(upper.iter().skip(1).map(|w| -w));
        Ok(RegionPolygon { vertices, clip_x })
    }

    /// Shared polygon with the default clip and density.
    pub fn shared() -> &'static RegionPolygon {
        static POLY: OnceLock<RegionPolygon> = OnceLock::new();
        POLY.get_or_init(|| RegionPolygon::new(DEFAULT_CLIP_X, DEFAULT_REGION_SAMPLES).expect("valid defaults"))
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn clip_x(&self) -> f64 {
        self.clip_x
    }

    /// Whether `w` lies in the polygon or within `tol` of its boundary.
    pub fn contains(&self, w: Complex64, tol: f64) -> bool {
        if !(w.re.is_finite() && w.im.is_finite()) || w.im.abs() >= STRIP_HALF_WIDTH {
            return false;
        }
        polygon_contains(&self.vertices, w, tol)
    }
}

/// Membership of `w` in `W(C)` via a freshly built polygon of `n` vertices
/// clipped at `Re w = clip_x`.
pub fn region_contains(w: Complex64, clip_x: f64, n: usize) -> Result<bool> {
    if w.im.abs() >= STRIP_HALF_WIDTH {
        return Ok(false);
    }
    if clip_x == DEFAULT_CLIP_X && n == DEFAULT_REGION_SAMPLES {
        return Ok(RegionPolygon::shared().contains(w, REGION_TOL));
    }
    Ok(RegionPolygon::new(clip_x, n)?.contains(w, REGION_TOL))
}

fn principal_log_checked(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re > 0.0 {
        Ok(z.ln())
    } else {
        Err(Error::Branch(format!("{what} = {z} has nonpositive real part")))
    }
}

/// `h(z) = log(1 + z e^{2iφ}) - 3 log(1 + z)` with `φ = arg(1 + z/3)`; maps
/// `|z| ≤ r` onto `W_r(C)`.
pub fn pointwise_h(z: Complex64) -> Result<Complex64> {
    if !(z.norm() < 1.0) {
        return Err(Error::Domain { name: "|z|", value: z.norm(), expected: "|z| < 1" });
    }
    let one = Complex64::new(1.0, 0.0);
    let phi = (one + z / 3.0).arg();
    let a = principal_log_checked(one + z * Complex64::cis(2.0 * phi), "1 + z e^{2iφ}")?;
    let b = principal_log_checked(one + z, "1 + z")?;
    Ok(a - 3.0 * b)
}

/// Image of the circle `|z| = r` under [`pointwise_h`], closed, `n` samples at
/// equally spaced angles.
pub fn pointwise_region_h(r: f64, n: usize) -> Result<BoundaryCurve> {
    check_radius(r)?;
    if r == 0.0 {
        return Err(Error::DegenerateRegion);
    }
    if n < 8 {
        return Err(Error::TooFewSamples { got: n, min: 8 });
    }
    let samples = (0..n)
        .map(|k| {
            let theta = TAU * k as f64 / n as f64;
            pointwise_h(Complex64::from_polar(r, theta)).map(|w| (theta, w))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryCurve::new(samples, vec![], true))
}

/// `-log[2u²/(u + v)]` on the branch vanishing at `u = v = 1`, written as
/// `-(log 2 + 2 log u - log(u + v))` with principal logarithms.
pub fn biernacki_value(u: Complex64, v: Complex64) -> Complex64 {
    -(Complex64::new(2f64.ln(), 0.0) + 2.0 * u.ln() - (u + v).ln())
}

/// Deterministic points of `W_r(C)` from the description
/// `{-log[2u²/(u+v)] : |u-1| ≤ r, |v-1| ≤ r}`.
///
/// Three quarters of the budget goes to a product grid with both `u` and `v`
/// on their boundary circles (where the extreme values sit); the rest fills
/// the interior with a Kronecker low-discrepancy sequence.
pub fn biernacki_samples(r: f64, m: usize) -> Result<Vec<Complex64>> {
    check_radius(r)?;
    if r == 0.0 {
        return Err(Error::Domain { name: "r", value: r, expected: "0 < r < 1" });
    }
    if m == 0 {
        return Err(Error::TooFewSamples { got: 0, min: 1 });
    }
    let one = Complex64::new(1.0, 0.0);
    let k = ((0.75 * m as f64).sqrt().floor() as usize).max(if m >= 4 { 2 } else { 0 });
    let mut out = Vec::with_capacity(m);
    for i in 0..k {
        let u = one + Complex64::from_polar(r, TAU * i as f64 / k as f64);
        for j in 0..k {
            let v = one + Complex64::from_polar(r, TAU * j as f64 / k as f64);
            out.push(biernacki_value(u, v));
        }
    }
    // generalized golden ratio for dimension 4: root of x^5 = x + 1
    let g = 1.167_303_978_261_418_7_f64;
    let alphas = [1.0 / g, 1.0 / (g * g), 1.0 / g.powi(3), 1.0 / g.powi(4)];
    let mut idx = 0usize;
    while out.len() < m {
        idx += 1;
        let x: Vec<f64> = alphas.iter().map(|a| (0.5 + a * idx as f64).fract()).collect();
        let u = one + Complex64::from_polar(r * x[0].sqrt(), TAU * x[1]);
        let v = one + Complex64::from_polar(r * x[2].sqrt(), TAU * x[3]);
        out.push(biernacki_value(u, v));
    }
    Ok(out)
}
