use thiserror::Error;

/// Errors raised by the energy evaluators and the Green-function machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VdwError {
    #[error("position ({x}, {y}, {z}) lies outside the physical region of the {geometry}")]
    OutsidePhysicalRegion {
        geometry: &'static str,
        x: f64,
        y: f64,
        z: f64,
    },
    #[error("atom-surface distance must be non-zero")]
    ZeroDistance,
    #[error("atom touches or penetrates the sphere: z0 = {z0}, R = {radius}")]
    Contact { z0: f64, radius: f64 },
    #[error("evaluation point coincides with an image charge")]
    DegenerateSource,
    #[error("point is {distance:e} away from the conducting surface (tolerance {tolerance:e})")]
    NotOnSurface { distance: f64, tolerance: f64 },
    #[error("finite-difference step {step:e} underflows relative to |r0| = {scale:e}")]
    StepUnderflow { step: f64, scale: f64 },
    #[error("finite-difference step {step:e} reaches the surface at distance {distance:e}")]
    StepTooLarge { step: f64, distance: f64 },
    #[error(
        "extrapolation did not converge: relative residual {residual:e} exceeds {tolerance:e}"
    )]
    NonConvergence { residual: f64, tolerance: f64 },
    #[error("expansion parameter s = {s} outside the window (0, {limit})")]
    OutOfWindow { s: f64, limit: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl VdwError {
    /// True for errors caused by an atom placed outside (or on) the conductor.
    pub fn is_region_violation(&self) -> bool {
        matches!(
            self,
            VdwError::OutsidePhysicalRegion { .. }
                | VdwError::ZeroDistance
                | VdwError::Contact { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, VdwError>;
