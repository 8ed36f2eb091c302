//! Sharp extremal values and variability regions of `log(f(z)/z)` for the
//! classical subclasses of normalized univalent functions on the unit disk:
//! the full class `S`, starlike functions `S*`, convex functions `K` and
//! close-to-convex functions `C`.
//!
//! For a class `F` and a point `z` with `|z| = r`, the quantities computed are
//!
//! * `Φ_r^±(b, F)`: supremum / infimum of `log|f(z)/z| + b·arg(f(z)/z)`,
//! * `Ψ_r(t, F)`: supremum of `Re[e^{it} log(f(z)/z)]`,
//!
//! together with their full-disk counterparts (extremized over `z` as well).
//! Every closed form is paired with a brute-force oracle in [`oracles`]:
//! grid and curve maximization, plus Monte Carlo samplers of actual class
//! members built from atomic representation measures.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`extremal`] | [`ExtendedReal`], [`EvalPoint`], the `Ψ ↔ Φ^±` conversion |
//! | [`disk`] | Grunsky disk for `S`, Marx regions for `S*` and `K` |
//! | [`ctc`] | boundary curve of the full region `W(C)`, common tangent, bounds |
//! | [`power`] | bounds for power deformations `z(f(z)/z)^c` over `C` |
//! | [`oracles`] | independent verifiers and function samplers |

// `!(x < y)` is used deliberately so that NaN inputs are rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ctc;
pub mod disk;
pub mod error;
pub mod extremal;
pub mod oracles;
pub mod polygon;
pub mod power;
pub mod roots;

pub use error::{Error, Result};
pub use extremal::{extended_compare, psi_from_phi, EvalPoint, ExtendedReal, Sign};

pub use num_complex::Complex64;
