//! Close-to-convex functions.
//!
//! The full variability region `W(C)` is the unbounded Jordan domain bounded by
//! `-γ`, where
//!
//! ```text
//! γ(t) = log(1 + 3e^{it})                   |t| < π
//! γ(t) = log(1 - e^{it}) + sign(t)·πi       π ≤ |t| < 2π
//! ```
//!
//! [`geometry`] handles the curve, the common tangent that closes the convex
//! hull of `Ω = -W(C)`, and membership in the region; [`region`] the pointwise
//! regions `W_r(C)`; [`bounds`] the sharp values `Φ^±(b, C)`.

pub mod bounds;
pub mod geometry;
pub mod region;

pub use bounds::{
    b0, b0_root, p_branch, phi_ctc, phi_ctc_branch, psi_ctc, psi_minus_ctc, q_branch, tangency, Branch, BranchValue,
    P_BRANCH_LIMIT,
};
pub use geometry::{
    common_tangent, gamma, gamma_curve, gamma_tangent, gamma_tangent_limits, gamma_turning_rate, hull_boundary,
    Frame, TangencyPair, TangencyResiduals, STRIP_HALF_WIDTH,
};
pub use region::{
    biernacki_samples, biernacki_value, pointwise_h, pointwise_region_h, region_contains, RegionPolygon,
};
