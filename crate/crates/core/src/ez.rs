//! Numeric evaluation of the non-retarded energy
//! `U = (1/2ε₀) Σ_m <d_m²> ∂_m ∂'_m G_H(r, r')|_{r = r' = r₀}`
//! for any [`HomogeneousGreen`].
//!
//! The mixed derivative along a unit vector `e` uses the tensor-product
//! stencil
//!
//! ```text
//! [G(r₀+he, r₀+he) - G(r₀+he, r₀-he) - G(r₀-he, r₀+he) + G(r₀-he, r₀-he)] / 4h²
//! ```
//!
//! whose truncation error is a series in even powers of `h`, so successive
//! halvings are combined by Richardson extrapolation.

use crate::error::{Result, VdwError};
use crate::images::{build_green, HomogeneousGreen};
use crate::types::{AtomSpec, EnergyResult, GeometryConfig, Method, Position, Vec3};
use crate::units::UnitSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn unit(self) -> Vec3 {
        match self {
            Axis::X => Vec3::X,
            Axis::Y => Vec3::Y,
            Axis::Z => Vec3::Z,
        }
    }
}

/// Step control for the mixed-derivative stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffSettings {
    /// Initial step as a fraction of the local length scale.
    pub base_step: f64,
    /// Number of step halvings combined by Richardson extrapolation.
    pub richardson_levels: usize,
}

impl Default for DiffSettings {
    fn default() -> Self {
        Self {
            base_step: 8e-2,
            richardson_levels: 3,
        }
    }
}

impl DiffSettings {
    pub fn new(base_step: f64, richardson_levels: usize) -> Result<Self> {
        let s = Self {
            base_step,
            richardson_levels,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.base_step > 0.0 && self.base_step < 0.1) {
            return Err(VdwError::InvalidParameter(format!(
                "base_step must lie in (0, 0.1), got {}",
                self.base_step
            )));
        }
        if !(1..=6).contains(&self.richardson_levels) {
            return Err(VdwError::InvalidParameter(format!(
                "richardson_levels must lie in [1, 6], got {}",
                self.richardson_levels
            )));
        }
        Ok(())
    }

    /// Initial step at `r0`: `base_step · max(distance to surface, 0.01 |r0|)`.
    pub fn step_at(&self, g: &GeometryConfig, r0: &Position) -> f64 {
        self.base_step * g.distance_to_surface(r0).max(0.01 * r0.norm())
    }
}

/// A derivative estimate together with its extrapolation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub err: f64,
}

/// Raw (unextrapolated) four-point stencil along the unit vector `dir`.
pub fn mixed_stencil(green: &HomogeneousGreen, r0: &Position, dir: &Vec3, h: f64) -> Result<f64> {
    let plus = *r0 + *dir * h;
    let minus = *r0 - *dir * h;
    let pp = green.g_h(&plus, &plus)?;
    let pm = green.g_h(&plus, &minus)?;
    let mp = green.g_h(&minus, &plus)?;
    let mm = green.g_h(&minus, &minus)?;
    Ok(((pp - pm) - (mp - mm)) / (4.0 * h * h))
}

/// Richardson-extrapolated `∂_e ∂'_e G_H` at `r0` with initial step `h`.
///
/// `err` is the magnitude of the last extrapolation increment.
pub fn mixed_second_with_step(
    green: &HomogeneousGreen,
    r0: &Position,
    dir: &Vec3,
    h: f64,
    levels: usize,
) -> Result<Estimate> {
    let scale = r0.norm();
    let smallest = h / f64::powi(2.0, levels as i32);
    if smallest < 1e3 * f64::EPSILON * scale {
        return Err(VdwError::StepUnderflow {
            step: smallest,
            scale,
        });
    }
    // Neville-style tableau; row k holds the estimate with step h/2^k.
    let mut prev: Vec<f64> = Vec::with_capacity(levels + 1);
    let mut err = f64::INFINITY;
    for k in 0..=levels {
        let hk = h / f64::powi(2.0, k as i32);
        let mut row = Vec::with_capacity(k + 1);
        row.push(mixed_stencil(green, r0, dir, hk)?);
        let mut factor = 1.0;
        for j in 1..=k {
            factor *= 4.0;
            let refined = row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1.0);
            row.push(refined);
        }
        if k > 0 {
            err = (row[k] - prev[k - 1]).abs();
        }
        prev = row;
    }
    let value = *prev.last().expect("tableau has at least one row");
    if levels == 0 {
        err = 0.0;
    }
    Ok(Estimate { value, err })
}

/// `∂_m ∂'_m G_H(r, r')` at `r = r' = r0` for a Cartesian axis.
pub fn mixed_second(
    green: &HomogeneousGreen,
    g: &GeometryConfig,
    r0: &Position,
    axis: Axis,
    s: &DiffSettings,
) -> Result<Estimate> {
    mixed_second_along(green, g, r0, &axis.unit(), s)
}

/// `∂_e ∂'_e G_H` at `r0` along an arbitrary unit vector.
pub fn mixed_second_along(
    green: &HomogeneousGreen,
    g: &GeometryConfig,
    r0: &Position,
    dir: &Vec3,
    s: &DiffSettings,
) -> Result<Estimate> {
    s.validate()?;
    g.require_physical(r0)?;
    let h = s.step_at(g, r0);
    let distance = g.distance_to_surface(r0);
    if h >= distance {
        return Err(VdwError::StepTooLarge { step: h, distance });
    }
    mixed_second_with_step(green, r0, dir, h, s.richardson_levels)
}

/// Numeric non-retarded energy of `atom` at `r0`.
///
/// Variances given in the local cylindrical frame are applied along
/// `(ρ̂, φ̂, ẑ)` at the azimuth of `r0` (`ρ̂ = x̂` on the axis).
pub fn energy_numeric(
    g: &GeometryConfig,
    atom: &AtomSpec,
    r0: &Position,
    s: &DiffSettings,
    u: UnitSystem,
) -> Result<EnergyResult> {
    let green = build_green(g);
    let axes = atom.variances.frame.axes(r0);
    let mut value = 0.0;
    let mut err = 0.0;
    for (variance, dir) in atom.variances.m.iter().zip(axes.iter()) {
        if *variance == 0.0 {
            continue;
        }
        let est = mixed_second_along(&green, g, r0, dir, s)?;
        value += variance * est.value;
        err += variance * est.err;
    }
    let prefactor = 1.0 / (2.0 * u.epsilon0());
    Ok(EnergyResult {
        value: prefactor * value,
        method: Method::NumericEz,
        units: u,
        err_estimate: prefactor * err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{relative_difference, DipoleVariances};
    use std::f64::consts::PI;

    fn settings() -> DiffSettings {
        DiffSettings::default()
    }

    #[test]
    fn plane_mixed_derivatives() {
        let g = GeometryConfig::Plane;
        let green = build_green(&g);
        let r0 = Vec3::new(0.0, 0.0, 1.0);
        let x = mixed_second(&green, &g, &r0, Axis::X, &settings()).unwrap();
        let z = mixed_second(&green, &g, &r0, Axis::Z, &settings()).unwrap();
        assert!(relative_difference(x.value, -1.0 / (4.0 * PI) / 8.0) < 1e-10);
        assert!(relative_difference(z.value, -1.0 / (4.0 * PI) / 4.0) < 1e-10);
        assert!((x.value - -0.0099472).abs() < 1e-7);
    }

    #[test]
    fn grounded_sphere_mixed_derivative() {
        let g = GeometryConfig::GroundedSphere { radius: 1.0 };
        let green = build_green(&g);
        let r0 = Vec3::new(0.0, 0.0, 2.0);
        let x = mixed_second(&green, &g, &r0, Axis::X, &settings()).unwrap();
        assert!(relative_difference(x.value, -1.0 / (108.0 * PI)) < 1e-10);
    }

    #[test]
    fn axis_exchange_symmetry_on_axis() {
        for g in [
            GeometryConfig::Plane,
            GeometryConfig::GroundedSphere { radius: 1.0 },
            GeometryConfig::IsolatedSphere { radius: 1.0 },
        ] {
            let green = build_green(&g);
            let r0 = Vec3::new(0.0, 0.0, 1.7);
            let x = mixed_second(&green, &g, &r0, Axis::X, &settings()).unwrap();
            let y = mixed_second(&green, &g, &r0, Axis::Y, &settings()).unwrap();
            assert!(relative_difference(x.value, y.value) < 1e-10, "{g}");
        }
    }

    #[test]
    fn raw_stencil_is_second_order() {
        let g = GeometryConfig::GroundedSphere { radius: 1.0 };
        let green = build_green(&g);
        let r0 = Vec3::new(0.0, 0.0, 2.0);
        let exact = -1.0 / (108.0 * PI);
        let h = 0.05;
        let e1 = mixed_stencil(&green, &r0, &Vec3::X, h).unwrap() - exact;
        let e2 = mixed_stencil(&green, &r0, &Vec3::X, h / 2.0).unwrap() - exact;
        let ratio = e1 / e2;
        assert!((ratio - 4.0).abs() < 0.1, "ratio {ratio}");
    }

    #[test]
    fn error_estimate_is_reported() {
        let g = GeometryConfig::Plane;
        let green = build_green(&g);
        let r0 = Vec3::new(0.0, 0.0, 1.0);
        let est = mixed_second(&green, &g, &r0, Axis::Z, &settings()).unwrap();
        assert!(est.err > 0.0 && est.err < 1e-8);
    }

    #[test]
    fn settings_validation() {
        assert!(DiffSettings::new(0.0, 3).is_err());
        assert!(DiffSettings::new(0.1, 3).is_err());
        assert!(DiffSettings::new(1e-3, 0).is_err());
        assert!(DiffSettings::new(1e-3, 7).is_err());
        assert!(DiffSettings::new(1e-4, 3).is_ok());
    }

    #[test]
    fn step_underflow_is_an_error() {
        let g = GeometryConfig::Plane;
        let green = build_green(&g);
        let r0 = Vec3::new(1e6, 0.0, 1e-6);
        let err = mixed_second_with_step(&green, &r0, &Vec3::X, 1e-12, 3).unwrap_err();
        assert!(matches!(err, VdwError::StepUnderflow { .. }));
    }

    #[test]
    fn outside_region_is_rejected() {
        let g = GeometryConfig::BossHat { radius: 1.0 };
        let atom = AtomSpec::isotropic(1.0).unwrap();
        let err = energy_numeric(
            &g,
            &atom,
            &Vec3::new(0.0, 0.0, 0.5),
            &settings(),
            UnitSystem::Reduced,
        );
        assert!(err.unwrap_err().is_region_violation());
    }

    #[test]
    fn plane_energy_reduced_units() {
        let atom = AtomSpec::isotropic(1.0).unwrap();
        let e = energy_numeric(
            &GeometryConfig::Plane,
            &atom,
            &Vec3::new(0.3, -0.1, 1.0),
            &settings(),
            UnitSystem::Reduced,
        )
        .unwrap();
        assert!(relative_difference(e.value, -1.0 / 12.0) < 1e-9);
        assert_eq!(e.method, Method::NumericEz);
    }

    #[test]
    fn boss_hat_energy_is_phi_independent() {
        let g = GeometryConfig::BossHat { radius: 1.0 };
        let atom = AtomSpec::new(DipoleVariances::cylindrical(0.2, 0.5, 0.3).unwrap());
        let reference = energy_numeric(
            &g,
            &atom,
            &Vec3::from_cylindrical(1.4, 0.0, 0.6),
            &settings(),
            UnitSystem::Reduced,
        )
        .unwrap();
        for phi in [0.3, 1.9, -2.7, PI] {
            let e = energy_numeric(
                &g,
                &atom,
                &Vec3::from_cylindrical(1.4, phi, 0.6),
                &settings(),
                UnitSystem::Reduced,
            )
            .unwrap();
            assert!(
                relative_difference(e.value, reference.value) < 1e-9,
                "phi {phi}"
            );
        }
    }
}
