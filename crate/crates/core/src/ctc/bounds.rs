//! Sharp values of `Φ^±(b, C)` over the whole disk.
//!
//! The infimum is attained on `γ` either on the inner arc (`p` branch, small
//! `|b|`) or on the outer arc (`q` branch); the two meet at `b0 ≈ 0.24001`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use super::geometry::{common_tangent, TangencyPair};
use crate::error::{Error, Result};
use crate::extremal::{psi_via_phi, ExtendedReal, Sign};
use crate::roots;

/// `1/(2√2)`: the `p` branch is defined for `|b|` up to this value.
pub const P_BRANCH_LIMIT: f64 = std::f64::consts::FRAC_1_SQRT_2 * 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    P,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchValue {
    pub b: f64,
    pub branch: Branch,
    pub value: f64,
}

/// `p(b) = -½ log[2(5 - 4b² + 3√(1-8b²))/(1+b²)] - b arctan(3b/√(1-8b²))`.
///
/// At `|b| = 1/(2√2)` the square root vanishes and the arctangent takes its
/// limit `±π/2`.
pub fn p_branch(b: f64) -> Result<f64> {
    if !(b.abs() <= P_BRANCH_LIMIT) {
        return Err(Error::Domain { name: "b", value: b, expected: "|b| ≤ 1/(2√2)" });
    }
    let b2 = b * b;
    let root = (1.0 - 8.0 * b2).max(0.0).sqrt();
    let twist = if root == 0.0 { FRAC_PI_2.copysign(b) } else { (3.0 * b / root).atan() };
    Ok(-0.5 * (2.0 * (5.0 - 4.0 * b2 + 3.0 * root) / (1.0 + b2)).ln() - b * twist)
}

/// `q(b) = ½ log(1+b²) - log 2 - b(arctan b + π)`.
pub fn q_branch(b: f64) -> f64 {
    0.5 * (b * b).ln_1p() - 2f64.ln() - b * (b.atan() + PI)
}

fn gap(b: f64) -> f64 {
    q_branch(b) - p_branch(b).expect("b inside the p domain")
}

/// Root of `q(b) = p(b)` on `(0, 1/(2√2))`. The gap `q - p` decreases strictly
/// there, from `log 2` to a negative limit, so bisection is safe.
pub fn b0_root(tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Domain { name: "tol", value: tol, expected: "tol > 0" });
    }
    let (bracket, mid) = roots::bisect(gap, 0.0, P_BRANCH_LIMIT, 1e-17, tol)?;
    if tol < 1e-12 {
        Ok(roots::newton_polish(gap, mid, bracket, 8))
    } else {
        Ok(mid)
    }
}

/// `b0` at full precision, computed once.
pub fn b0() -> f64 {
    static B0: OnceLock<f64> = OnceLock::new();
    *B0.get_or_init(|| b0_root(1e-16).expect("q - p changes sign on (0, 1/(2√2))"))
}

/// The common tangent of `γ`, computed once.
pub fn tangency() -> TangencyPair {
    static PAIR: OnceLock<TangencyPair> = OnceLock::new();
    *PAIR.get_or_init(|| common_tangent(1e-12).expect("tangent exists"))
}

/// Branch selection for `Φ^-(b, C)`; `|b| = b0` goes to `p`.
pub fn phi_ctc_branch(b: f64) -> BranchValue {
    let a = b.abs();
    if a <= b0() {
        BranchValue { b, branch: Branch::P, value: p_branch(a).expect("a ≤ b0 < 1/(2√2)") }
    } else {
        BranchValue { b, branch: Branch::Q, value: q_branch(a) }
    }
}

/// `Φ^±(b, C)`: `+∞` for the supremum, `p(|b|)` or `q(|b|)` for the infimum.
pub fn phi_ctc(b: f64, sign: Sign) -> ExtendedReal {
    match sign {
        Sign::Plus => ExtendedReal::PosInfinity,
        Sign::Minus => ExtendedReal::Finite(phi_ctc_branch(b).value),
    }
}

/// Infimum of `Re[e^{it} log(f(z)/z)]` over `f ∈ C`, `z ∈ D`, for `|t| < π/2`,
/// i.e. `(cos t) Φ^-(tan t, C)` written out in `t`.
pub fn psi_minus_ctc(t: f64) -> Result<f64> {
    if !(t.abs() < FRAC_PI_2) {
        return Err(Error::Domain { name: "t", value: t, expected: "|t| < π/2" });
    }
    let (s, c) = t.sin_cos();
    let tan = s / c;
    if tan.abs() <= b0() {
        let c2 = c * c;
        let root = (1.0 - 8.0 * tan * tan).sqrt();
        Ok(-0.5 * c * (2.0 * (9.0 * c2 - 4.0 + 3.0 * c2 * root)).ln() - s * (3.0 * tan / root).atan())
    } else {
        Ok(-c * (2.0 * c).ln() - s.abs() * (t.abs() + PI))
    }
}

/// `Ψ(t, C)` through the `Φ^±` relation: `+∞` for `cos t > 0`, finite for
/// `cos t < 0`.
pub fn psi_ctc(t: f64) -> Result<ExtendedReal> {
    psi_via_phi(t, phi_ctc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn branch_reference_values() {
        assert_abs_diff_eq!(p_branch(0.0).unwrap(), -(4f64.ln()), epsilon = 1e-15);
        assert_abs_diff_eq!(q_branch(0.0), -(2f64.ln()), epsilon = 1e-15);
        assert_abs_diff_eq!(q_branch(0.0) - p_branch(0.0).unwrap(), 2f64.ln(), epsilon = 1e-12);
        assert_abs_diff_eq!(q_branch(1.0), -4.273_564_407_267_214, epsilon = 1e-12);
        assert!(p_branch(0.36).is_err());
        assert!(p_branch(f64::NAN).is_err());
    }

    #[test]
    fn gap_at_branch_limit() {
        let limit = 1.5f64.ln() - P_BRANCH_LIMIT * (P_BRANCH_LIMIT.atan() + FRAC_PI_2);
        let at = q_branch(P_BRANCH_LIMIT) - p_branch(P_BRANCH_LIMIT).unwrap();
        assert_abs_diff_eq!(at, limit, epsilon = 1e-12);
        assert_abs_diff_eq!(at, -0.270_045_750_747_875, epsilon = 1e-12);
        // continuity of p at the endpoint
        let near = p_branch(P_BRANCH_LIMIT - 1e-12).unwrap();
        assert!((near - p_branch(P_BRANCH_LIMIT).unwrap()).abs() < 1e-4);
    }

    #[test]
    fn b0_value_and_residual() {
        let b = b0_root(1e-10).unwrap();
        assert!((b - 0.24001).abs() < 5e-6);
        assert!(gap(b).abs() < 1e-10);
        assert!((b0() - b).abs() < 1e-9);
        assert!((q_branch(b0()) - p_branch(b0()).unwrap()).abs() < 1e-14);
        let coarse = b0_root(1e-4).unwrap();
        assert!((coarse - b0()).abs() < 1e-3);
    }

    #[test]
    fn b0_agrees_with_tangency() {
        assert!((tangency().b0_geo - b0()).abs() < 1e-8);
    }

    #[test]
    fn gap_strictly_decreasing() {
        let n = 1000;
        let vals: Vec<f64> = (1..n).map(|k| gap(P_BRANCH_LIMIT * k as f64 / n as f64)).collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn phi_ctc_cases() {
        assert_eq!(phi_ctc(3.0, Sign::Plus), ExtendedReal::PosInfinity);
        assert_abs_diff_eq!(phi_ctc(0.0, Sign::Minus).finite().unwrap(), -(4f64.ln()), epsilon = 1e-15);
        assert_eq!(phi_ctc(1.0, Sign::Minus).finite().unwrap(), q_branch(1.0));
        assert_eq!(phi_ctc(0.1, Sign::Minus), phi_ctc(-0.1, Sign::Minus));
        assert_eq!(phi_ctc_branch(b0()).branch, Branch::P);
        assert_eq!(phi_ctc_branch(-0.3).branch, Branch::Q);
    }

    #[test]
    fn psi_minus_reference() {
        assert_abs_diff_eq!(psi_minus_ctc(0.0).unwrap(), -(4f64.ln()), epsilon = 1e-15);
        assert!(psi_minus_ctc(FRAC_PI_2).is_err());
        let t0 = b0().atan();
        let first = {
            let (s, c) = t0.sin_cos();
            let tan = s / c;
            let root = (1.0 - 8.0 * tan * tan).sqrt();
            -0.5 * c * (2.0 * (9.0 * c * c - 4.0 + 3.0 * c * c * root)).ln() - s * (3.0 * tan / root).atan()
        };
        let second = -t0.cos() * (2.0 * t0.cos()).ln() - t0.sin() * (t0 + PI);
        assert!((first - second).abs() < 1e-10);
    }

    #[test]
    fn psi_minus_is_scaled_phi() {
        for k in 0..=200 {
            let t = -FRAC_PI_2 + 0.05 + (PI - 0.1) * k as f64 / 200.0;
            let direct = psi_minus_ctc(t).unwrap();
            let via = t.cos() * phi_ctc(t.tan(), Sign::Minus).finite().unwrap();
            assert_abs_diff_eq!(direct, via, epsilon = 1e-12);
        }
    }

    #[test]
    fn psi_ctc_sides() {
        assert_eq!(psi_ctc(0.3).unwrap(), ExtendedReal::PosInfinity);
        let v = psi_ctc(PI).unwrap().finite().unwrap();
        assert_abs_diff_eq!(v, 4f64.ln(), epsilon = 1e-14);
    }

    #[test]
    fn nested_below_starlike() {
        use crate::disk::{phi_star_full_minus, MarxClass};
        for k in 0..=400 {
            let b = -4.0 + 0.02 * k as f64;
            let c = phi_ctc(b, Sign::Minus).finite().unwrap();
            let s = phi_star_full_minus(b, MarxClass::Star);
            assert!(c <= s + 1e-15, "b = {b}");
        }
        assert_abs_diff_eq!(
            phi_ctc(0.0, Sign::Minus).finite().unwrap(),
            phi_star_full_minus(0.0, MarxClass::Star),
            epsilon = 1e-15
        );
    }
}
