//! Values `log(f(r)/r)` of actual class members at a real point `z = r`
//! (all classes are rotationally invariant, so the radius suffices).

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::measure::{AtomicMeasure, CtcSample};
use super::quadrature::GaussLegendre;
use crate::error::{Error, Result};

const CHECKPOINTS: usize = 64;
const MAX_DOUBLINGS: u32 = 12;
const MAX_CHECKPOINT_DOUBLINGS: u32 = 6;
const CONVERGENCE_TOL: f64 = 1e-12;

fn check_open_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::RadiusOutOfRange(r))
    }
}

/// `Σ λ_k log(1 - r e^{-iθ_k})` with principal logarithms.
fn weighted_log_factor(measure: &AtomicMeasure, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    measure
        .atoms()
        .iter()
        .map(|&(theta, w)| (one - z * Complex64::cis(-theta)).ln() * w)
        .sum()
}

/// `log(f(r)/r) = -2 Σ λ_k log(1 - r e^{-iθ_k})` for the starlike function
/// `f(z) = z Π(1 - z e^{-iθ_k})^{-2λ_k}`.
pub fn sample_starlike(measure: &AtomicMeasure, r: f64) -> Complex64 {
    -2.0 * weighted_log_factor(measure, Complex64::new(r, 0.0))
}

/// Half of [`sample_starlike`]: a point of `W_r(K) = ½ W_r(S*)`.
pub fn sample_convex(measure: &AtomicMeasure, r: f64) -> Complex64 {
    0.5 * sample_starlike(measure, r)
}

fn convex_derivative(measure: &AtomicMeasure, x: f64) -> Complex64 {
    (-2.0 * weighted_log_factor(measure, Complex64::new(x, 0.0))).exp()
}

fn herglotz(measure: &AtomicMeasure, x: f64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    measure
        .atoms()
        .iter()
        .map(|&(phi, w)| {
            let e = Complex64::from_polar(x, -phi);
            (one + e) / (one - e) * w
        })
        .sum()
}

/// `F(ρ_k) = ∫_0^{ρ_k} f'` at the checkpoints `ρ_k = k r / m`, `k = 1..=m`,
/// each checkpoint interval split into `panels` Gauss–Legendre panels.
fn cumulative<F>(derivative: &F, r: f64, m: usize, panels: usize, gl: &GaussLegendre) -> Vec<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let h = r / (m * panels) as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        for j in 0..panels {
            let a = (k * panels + j) as f64 * h;
            acc += gl.integrate(a, a + h, derivative);
        }
        out.push(acc);
    }
    out
}

/// `log(f(r)/r)` for `f(z) = ∫_0^z f'`, integrated along `[0, r]` with panel
/// doubling until `f(r)` settles, and the logarithm continued from `0` at the
/// origin through the checkpoint values.
fn radial_log_ratio<F>(derivative: F, r: f64, quad_order: usize) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    check_open_radius(r)?;
    if quad_order < 16 {
        return Err(Error::TooFewSamples { got: quad_order, min: 16 });
    }
    let gl = GaussLegendre::new(quad_order);
    let mut m = CHECKPOINTS;
    'checkpoints: for _ in 0..=MAX_CHECKPOINT_DOUBLINGS {
        let mut prev = cumulative(&derivative, r, m, 1, &gl);
        let mut values = None;
        for level in 1..=MAX_DOUBLINGS {
            let next = cumulative(&derivative, r, m, 1 << level, &gl);
            let (a, b) = (prev[m - 1], next[m - 1]);
            if (a - b).norm() < CONVERGENCE_TOL * b.norm().max(1.0) {
                values = Some(next);
                break;
            }
            prev = next;
        }
        let values = values.ok_or(Error::QuadratureFailure(MAX_DOUBLINGS))?;

        let mut log = Complex64::new(0.0, 0.0);
        let mut last = Complex64::new(1.0, 0.0);
        for (k, f) in values.iter().enumerate() {
            let rho = r * (k + 1) as f64 / m as f64;
            let ratio = f / rho;
            let step = (ratio / last).arg();
            if step.abs() > FRAC_PI_2 {
                m *= 2;
                continue 'checkpoints;
            }
            log = Complex64::new(ratio.norm().ln(), log.im + step);
            last = ratio;
        }
        return Ok(log);
    }
    Err(Error::Branch(format!("argument of f(z)/z jumps by more than π/2 even with {m} checkpoints")))
}

/// `log(f(r)/r)` for the close-to-convex `f` with `f' = g'·p` described by
/// `sample`.
pub fn sample_ctc(sample: &CtcSample, r: f64, quad_order: usize) -> Result<Complex64> {
    let g = &sample.convex_measure;
    let p = &sample.herglotz_measure;
    radial_log_ratio(|x| convex_derivative(g, x) * herglotz(p, x), r, quad_order)
}

/// `log(g(r)/r)` for the convex `g` with `g'(z) = Π(1 - z e^{-iθ_k})^{-2λ_k}`,
/// by the same quadrature as [`sample_ctc`] with `p ≡ 1`.
pub fn sample_convex_quadrature(measure: &AtomicMeasure, r: f64, quad_order: usize) -> Result<Complex64> {
    radial_log_ratio(|x| convex_derivative(measure, x), r, quad_order)
}
