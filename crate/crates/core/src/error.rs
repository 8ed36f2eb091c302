use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("radius r = {0} outside [0, 1)")]
    RadiusOutOfRange(f64),
    #[error("{name} = {value} outside its domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    #[error("direction degenerate: |cos t| = {0:e} is below the angle guard")]
    DirectionDegenerate(f64),
    #[error("region degenerates to a single point at r = 0")]
    DegenerateRegion,
    #[error("{got} samples requested, at least {min} required")]
    TooFewSamples { got: usize, min: usize },
    #[error("common tangent not found: {0}")]
    TangencyNotFound(String),
    #[error("no sign change on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },
    #[error("quadrature did not converge after {0} panel doublings")]
    QuadratureFailure(u32),
    #[error("power exponent has zero real part; no sharp bound is known")]
    DegenerateExponent,
    #[error("branch violation: {0}")]
    Branch(String),
}

pub(crate) fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::RadiusOutOfRange(r))
    }
}
