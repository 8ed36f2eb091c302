//! Python bindings for `varregion`.
//!
//! Infinite extremal values come back as `float("inf")`; library errors raise
//! `ValueError`.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use varregion::ctc::{self, Frame};
use varregion::disk::{self, MarxClass};
use varregion::oracles::{self, CtcSample, Optimum};
use varregion::power::{self, BoundKind, PowerExponent};
use varregion::{ExtendedReal, Sign};

fn err(e: varregion::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sign(kind: &str) -> PyResult<Sign> {
    match kind {
        "plus" => Ok(Sign::Plus),
        "minus" => Ok(Sign::Minus),
        _ => Err(PyValueError::new_err(format!("kind must be 'plus' or 'minus', got {kind:?}"))),
    }
}

fn marx(class: &str) -> PyResult<MarxClass> {
    match class {
        "star" => Ok(MarxClass::Star),
        "convex" => Ok(MarxClass::Convex),
        _ => Err(PyValueError::new_err(format!("class must be 'star' or 'convex', got {class:?}"))),
    }
}

fn ext(x: ExtendedReal) -> f64 {
    x.to_f64()
}

/// Finite atomic probability measure on the circle.
#[pyclass(module = "varregion_py", name = "AtomicMeasure")]
struct PyAtomicMeasure {
    inner: oracles::AtomicMeasure,
}

#[pymethods]
impl PyAtomicMeasure {
    /// `atoms` is a list of `(angle, weight)`; weights are normalized.
    #[new]
    fn new(atoms: Vec<(f64, f64)>) -> PyResult<Self> {
        if atoms.is_empty() || atoms.iter().any(|&(t, w)| w.is_nan() || w <= 0.0 || !t.is_finite()) {
            return Err(PyValueError::new_err("atoms must be nonempty with finite angles and positive weights"));
        }
        Ok(PyAtomicMeasure { inner: oracles::AtomicMeasure::new(atoms) })
    }

    #[staticmethod]
    fn random(seed: u64, max_atoms: usize) -> PyResult<Self> {
        if max_atoms == 0 {
            return Err(PyValueError::new_err("max_atoms must be at least 1"));
        }
        Ok(PyAtomicMeasure { inner: oracles::random_measure(seed, max_atoms) })
    }

    #[getter]
    fn atoms(&self) -> Vec<(f64, f64)> {
        self.inner.atoms().to_vec()
    }

    fn sample_starlike(&self, r: f64) -> PyResult<Complex64> {
        open_radius(r)?;
        Ok(oracles::sample_starlike(&self.inner, r))
    }

    fn sample_convex(&self, r: f64) -> PyResult<Complex64> {
        open_radius(r)?;
        Ok(oracles::sample_convex(&self.inner, r))
    }

    fn __len__(&self) -> usize {
        self.inner.atoms().len()
    }

    fn __repr__(&self) -> String {
        format!("AtomicMeasure({:?})", self.inner.atoms())
    }
}

fn open_radius(r: f64) -> PyResult<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(PyValueError::new_err(format!("r = {r} outside (0, 1)")))
    }
}

/// Common tangent of γ: parameters `u`, `v` and the slope value `b0`.
#[pyclass(module = "varregion_py", name = "TangencyPair", frozen, get_all)]
struct PyTangencyPair {
    u: f64,
    v: f64,
    b0: f64,
    max_residual: f64,
}

#[pymethods]
impl PyTangencyPair {
    fn __repr__(&self) -> String {
        format!("TangencyPair(u={}, v={}, b0={})", self.u, self.v, self.b0)
    }
}

#[pyfunction]
fn grunsky_region(r: f64) -> PyResult<(Complex64, f64)> {
    let d = disk::grunsky_region(r).map_err(err)?;
    Ok((d.center, d.radius))
}

#[pyfunction]
#[pyo3(signature = (b, kind, r=None))]
fn phi_s(b: f64, kind: &str, r: Option<f64>) -> PyResult<f64> {
    let s = sign(kind)?;
    match r {
        Some(r) => disk::phi_s_pointwise(r, b, s).map_err(err),
        None => Ok(ext(disk::phi_s(b, s))),
    }
}

/// `Φ^±(b)` for starlike (`class="star"`) or convex functions, at `|z| = r`
/// or over the whole disk when `r` is omitted.
#[pyfunction]
#[pyo3(signature = (b, kind, r=None, class="star"))]
fn phi_star(b: f64, kind: &str, r: Option<f64>, class: &str) -> PyResult<f64> {
    let (s, c) = (sign(kind)?, marx(class)?);
    match r {
        Some(r) => disk::phi_star(r, b, s, c).map_err(err),
        None => Ok(ext(disk::phi_star_full(b, s, c))),
    }
}

#[pyfunction]
#[pyo3(signature = (r, t, class="star"))]
fn psi_star(r: f64, t: f64, class: &str) -> PyResult<f64> {
    disk::psi_star(r, t, marx(class)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (w, r, class="star"))]
fn marx_contains(w: Complex64, r: f64, class: &str) -> PyResult<bool> {
    Ok(disk::marx_contains(w, r, marx(class)?))
}

#[pyfunction]
fn phi_ctc(b: f64, kind: &str) -> PyResult<f64> {
    Ok(ext(ctc::phi_ctc(b, sign(kind)?)))
}

#[pyfunction]
fn psi_ctc(t: f64) -> PyResult<f64> {
    ctc::psi_ctc(t).map(ext).map_err(err)
}

#[pyfunction]
fn psi_minus_ctc(t: f64) -> PyResult<f64> {
    ctc::psi_minus_ctc(t).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (tol=None))]
fn b0(tol: Option<f64>) -> PyResult<f64> {
    match tol {
        Some(t) => ctc::b0_root(t).map_err(err),
        None => Ok(ctc::b0()),
    }
}

#[pyfunction]
#[pyo3(signature = (tol=1e-12))]
fn common_tangent(tol: f64) -> PyResult<PyTangencyPair> {
    let p = ctc::common_tangent(tol).map_err(err)?;
    Ok(PyTangencyPair { u: p.u, v: p.v, b0: p.b0_geo, max_residual: p.residuals().max_abs() })
}

#[pyfunction]
fn gamma(t: f64) -> PyResult<Complex64> {
    ctc::gamma(t).map_err(err)
}

/// Samples of γ (or of `-γ` with `frame="w"`) as `(t, point)` pairs.
#[pyfunction]
#[pyo3(signature = (n, frame="omega", hull=false))]
fn gamma_curve(n: usize, frame: &str, hull: bool) -> PyResult<Vec<(f64, Complex64)>> {
    let f = match frame {
        "omega" => Frame::Omega,
        "w" => Frame::W,
        _ => return Err(PyValueError::new_err("frame must be 'omega' or 'w'")),
    };
    let c = if hull { ctc::hull_boundary(n, f) } else { ctc::gamma_curve(n, f) }.map_err(err)?;
    Ok(c.samples)
}

#[pyfunction]
fn region_contains(w: Complex64) -> PyResult<bool> {
    ctc::region_contains(w, ctc::region::DEFAULT_CLIP_X, ctc::region::DEFAULT_REGION_SAMPLES).map_err(err)
}

#[pyfunction]
fn pointwise_h(z: Complex64) -> PyResult<Complex64> {
    ctc::pointwise_h(z).map_err(err)
}

#[pyfunction]
fn biernacki_samples(r: f64, m: usize) -> PyResult<Vec<Complex64>> {
    ctc::biernacki_samples(r, m).map_err(err)
}

/// `log(f(r)/r)` for the close-to-convex function drawn from `seed`.
#[pyfunction]
#[pyo3(signature = (seed, r, max_atoms=4, quad_order=16))]
fn sample_ctc(seed: u64, r: f64, max_atoms: usize, quad_order: usize) -> PyResult<Complex64> {
    if max_atoms == 0 {
        return Err(PyValueError::new_err("max_atoms must be at least 1"));
    }
    oracles::sample_ctc(&CtcSample::from_seed(seed, max_atoms), r, quad_order).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (r, b, kind, n=1024))]
fn grid_extremum(r: f64, b: f64, kind: &str, n: usize) -> PyResult<(f64, f64)> {
    let k = if sign(kind)? == Sign::Plus { Optimum::Max } else { Optimum::Min };
    oracles::grid_extremum(r, b, k, n).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (b, n=8192))]
fn curve_extremum(b: f64, n: usize) -> PyResult<(f64, f64)> {
    oracles::curve_extremum(b, n).map_err(err)
}

/// Sharp bound of `log|f_c(z)/z|` for `c = a + ib`: `("inf" | "sup", value)`.
#[pyfunction]
fn power_bound(a: f64, b: f64) -> PyResult<(&'static str, f64)> {
    let pb = power::power_bound(PowerExponent::new(a, b)).map_err(err)?;
    Ok((if pb.kind == BoundKind::Infimum { "inf" } else { "sup" }, pb.value))
}

#[pymodule]
fn varregion_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAtomicMeasure>()?;
    m.add_class::<PyTangencyPair>()?;
    m.add_function(wrap_pyfunction!(grunsky_region, m)?)?;
    m.add_function(wrap_pyfunction!(phi_s, m)?)?;
    m.add_function(wrap_pyfunction!(phi_star, m)?)?;
    m.add_function(wrap_pyfunction!(psi_star, m)?)?;
    m.add_function(wrap_pyfunction!(marx_contains, m)?)?;
    m.add_function(wrap_pyfunction!(phi_ctc, m)?)?;
    m.add_function(wrap_pyfunction!(psi_ctc, m)?)?;
    m.add_function(wrap_pyfunction!(psi_minus_ctc, m)?)?;
    m.add_function(wrap_pyfunction!(b0, m)?)?;
    m.add_function(wrap_pyfunction!(common_tangent, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_curve, m)?)?;
    m.add_function(wrap_pyfunction!(region_contains, m)?)?;
    m.add_function(wrap_pyfunction!(pointwise_h, m)?)?;
    m.add_function(wrap_pyfunction!(biernacki_samples, m)?)?;
    m.add_function(wrap_pyfunction!(sample_ctc, m)?)?;
    m.add_function(wrap_pyfunction!(grid_extremum, m)?)?;
    m.add_function(wrap_pyfunction!(curve_extremum, m)?)?;
    m.add_function(wrap_pyfunction!(power_bound, m)?)?;
    Ok(())
}
