//! Non-retarded van der Waals energies of an atom near grounded and isolated
//! conductors.
//!
//! The energy is `U = (1/2ε₀) Σ_m <d_m²> ∂_m ∂'_m G_H(r, r')` at `r = r' = r0`,
//! where `G_H` is the image part of the Dirichlet Green function. Three
//! independent routes are provided: closed forms ([`closed_form`]), numeric
//! differentiation of `G_H` ([`ez`]) and a finite-dipole extrapolation
//! ([`oracle`]).

// `!(x > y)` is used on purpose so that NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classic;
pub mod closed_form;
pub mod error;
pub mod ez;
pub mod images;
pub mod oracle;
pub mod series;
pub mod types;
pub mod units;

pub use error::{Result, VdwError};
pub use ez::{energy_numeric, mixed_second, Axis, DiffSettings, Estimate};
pub use images::{bc_residual, build_green, g_h, surface_sample, HomogeneousGreen};
pub use types::{
    relative_difference, to_cylindrical, AtomSpec, DipoleVariances, EnergyResult, Frame,
    GeometryConfig, Method, Position, Vec3,
};
pub use units::UnitSystem;
