//! Brute-force verifiers that share no formulas with the closed forms:
//! extremization over grids and curves, and Monte Carlo samplers of actual
//! class members built from atomic representation measures.

pub mod extremum;
pub mod measure;
pub mod quadrature;
pub mod sampler;

pub use extremum::{curve_extremum, golden_section_max, grid_extremum, Optimum};
pub use measure::{derive_seed, random_measure, AtomicMeasure, CtcSample};
pub use quadrature::GaussLegendre;
pub use sampler::{sample_convex, sample_convex_quadrature, sample_ctc, sample_starlike};
