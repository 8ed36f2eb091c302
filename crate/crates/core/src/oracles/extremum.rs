use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::ctc::geometry::gamma;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimum {
    Max,
    Min,
}

/// Golden-section search for a maximum of a unimodal `f` on `[a, b]`.
pub fn golden_section_max<F>(f: F, mut a: f64, mut b: f64, iters: usize) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if (b - a).abs() <= 1e-15 * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Coarse scan of `n` points on `[lo, hi)`, then golden-section refinement on
/// the two cells around the best. With `clamp`, nodes sit at cell midpoints
/// and the refinement stays inside the open interval.
fn scan_and_refine<F>(f: F, lo: f64, hi: f64, n: usize, clamp: bool) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let h = (hi - lo) / n as f64;
    let node = |k: usize| if clamp { lo + h * (k as f64 + 0.5) } else { lo + h * k as f64 };
    let (best, _) = (0..n)
        .map(|k| (k, f(node(k))))
        .max_by(|x, y| x.1.total_cmp(&y.1))
        .expect("n > 0");
    let centre = node(best);
    let (mut a, mut b) = (centre - h, centre + h);
    if clamp {
        // keep the search strictly inside the open interval
        a = a.max(lo + 1e-3 * h);
        b = b.min(hi - 1e-3 * h);
    }
    let (x, fx) = golden_section_max(&f, a, b, 200);
    let fc = f(centre);
    if fc >= fx {
        (centre, fc)
    } else {
        (x, fx)
    }
}

/// The starlike circle objective written with complex arithmetic:
/// `-2 log|1 - re^{iθ}| - 2b arg(1 - re^{iθ})`.
fn starlike_objective(r: f64, b: f64, theta: f64) -> f64 {
    let w = Complex64::new(1.0, 0.0) - Complex64::from_polar(r, theta);
    -2.0 * w.norm().ln() - 2.0 * b * w.arg()
}

/// Extremum of the starlike circle objective over `θ ∈ [0, 2π)`; returns the
/// extremizer (wrapped into `[0, 2π)`) and the extremal value.
pub fn grid_extremum(r: f64, b: f64, kind: Optimum, n: usize) -> Result<(f64, f64)> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::RadiusOutOfRange(r));
    }
    if n < 256 {
        return Err(Error::TooFewSamples { got: n, min: 256 });
    }
    let sign = match kind {
        Optimum::Max => 1.0,
        Optimum::Min => -1.0,
    };
    let (theta, v) = scan_and_refine(|th| sign * starlike_objective(r, b, th), 0.0, TAU, n, false);
    Ok((theta.rem_euclid(TAU), sign * v))
}

/// Maximum of `X + bY` over `γ(t) = X + iY`, `t ∈ (-2π, 2π)`.
pub fn curve_extremum(b: f64, n: usize) -> Result<(f64, f64)> {
    if n < 4096 {
        return Err(Error::TooFewSamples { got: n, min: 4096 });
    }
    let f = |t: f64| {
        let w = gamma(t).expect("t inside (-2π, 2π)");
        w.re + b * w.im
    };
    Ok(scan_and_refine(f, -TAU, TAU, n, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn golden_on_parabola() {
        let (x, v) = golden_section_max(|x| -(x - 0.3) * (x - 0.3) + 2.0, -1.0, 1.0, 200);
        assert_abs_diff_eq!(x, 0.3, epsilon = 1e-7);
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-14);
    }

    #[test]
    fn grid_symmetric_cases() {
        let r = 0.6;
        let (th, v) = grid_extremum(r, 0.0, Optimum::Max, 1024).unwrap();
        assert!(th < 1e-6 || TAU - th < 1e-6);
        assert_abs_diff_eq!(v, -2.0 * (1.0 - r).ln(), epsilon = 1e-12);
        let (th, v) = grid_extremum(r, 0.0, Optimum::Min, 1024).unwrap();
        assert_abs_diff_eq!(th, PI, epsilon = 1e-6);
        assert_abs_diff_eq!(v, -2.0 * (1.0 + r).ln(), epsilon = 1e-12);
        assert!(grid_extremum(1.0, 0.0, Optimum::Max, 1024).is_err());
        assert!(grid_extremum(0.5, 0.0, Optimum::Max, 16).is_err());
    }

    #[test]
    fn curve_reference_cases() {
        let (t, v) = curve_extremum(0.0, 8192).unwrap();
        assert!(t.abs() < 1e-6);
        assert_abs_diff_eq!(v, 4f64.ln(), epsilon = 1e-12);
        let (t, _) = curve_extremum(1.0, 8192).unwrap();
        assert_abs_diff_eq!(t, 1.5 * PI, epsilon = 1e-6);
        let (t, _) = curve_extremum(-1.0, 8192).unwrap();
        assert_abs_diff_eq!(t, -1.5 * PI, epsilon = 1e-6);
        assert!(curve_extremum(0.0, 100).is_err());
    }
}
