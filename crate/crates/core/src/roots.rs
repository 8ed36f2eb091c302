//! Bracketed scalar root finding: bisection to a tolerance followed by a
//! safeguarded Newton polish that never leaves the final bracket.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

/// Bisection until the bracket is narrower than `xtol` or the residual drops
/// below `ftol`. Returns the final bracket (with `f(lo)`, `f(hi)` of opposite
/// signs) and the midpoint estimate.
pub fn bisect<F>(f: F, lo: f64, hi: f64, xtol: f64, ftol: f64) -> Result<(Bracket, f64)>
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok((Bracket { lo: a, hi: a }, a));
    }
    if fb == 0.0 {
        return Ok((Bracket { lo: b, hi: b }, b));
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::NoBracket { lo, hi });
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= xtol || m == a || m == b {
            break;
        }
        let fm = f(m);
        if fm.abs() <= ftol {
            return Ok((Bracket { lo: a, hi: b }, m));
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok((Bracket { lo: a, hi: b }, 0.5 * (a + b)))
}

/// Newton iterations with a central-difference derivative, rejecting any step
/// that leaves `bracket` or does not reduce the residual.
pub fn newton_polish<F>(f: F, x0: f64, bracket: Bracket, iters: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    let mut x = x0;
    let mut fx = f(x);
    for _ in 0..iters {
        if fx == 0.0 {
            break;
        }
        let h = 1e-7 * x.abs().max(1.0);
        let d = (f(x + h) - f(x - h)) / (2.0 * h);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - fx / d;
        if !(bracket.lo..=bracket.hi).contains(&next) {
            break;
        }
        let fnext = f(next);
        if fnext.abs() >= fx.abs() {
            break;
        }
        x = next;
        fx = fnext;
    }
    x
}

/// Bisection on `[lo, hi]` followed by Newton polish.
pub fn find_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (bracket, mid) = bisect(&f, lo, hi, tol.min(1e-12), 0.0)?;
    Ok(newton_polish(&f, mid, bracket, 8))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let x = find_root(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((x - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn no_sign_change() {
        assert!(matches!(find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-10), Err(Error::NoBracket { .. })));
    }

    #[test]
    fn decreasing_function() {
        let x = find_root(|x: f64| x.cos() - x, 0.0, 1.0, 1e-14).unwrap();
        assert!((x.cos() - x).abs() < 1e-15);
    }

    #[test]
    fn endpoint_root() {
        assert_eq!(find_root(|x| x, 0.0, 1.0, 1e-10).unwrap(), 0.0);
    }
}
