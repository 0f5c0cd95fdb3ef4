//! Historical two-body potentials: Keesom orientation, London, Wang,
//! retarded Casimir-Polder and the dipole-dipole interaction.

use std::f64::consts::PI;

use crate::error::{Result, VdwError};
use crate::types::Vec3;
use crate::units::UnitSystem;

/// Parameters of a pair of molecules.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PairSpec {
    /// Permanent dipole moments.
    pub p1: f64,
    pub p2: f64,
    /// Static polarizabilities.
    pub alpha1: f64,
    pub alpha2: f64,
    /// Dominant transition frequency.
    pub omega0: f64,
    /// Temperature.
    pub t: f64,
}

impl PairSpec {
    pub fn validate(&self) -> Result<()> {
        let all = [
            self.p1,
            self.p2,
            self.alpha1,
            self.alpha2,
            self.omega0,
            self.t,
        ];
        if all.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(VdwError::InvalidParameter(format!(
                "pair magnitudes must be non-negative: {self:?}"
            )));
        }
        Ok(())
    }
}

/// Energy annotated with an optional validity warning.
#[derive(Debug, Clone, PartialEq)]
pub struct PairEnergy {
    pub value: f64,
    pub warning: Option<String>,
}

/// Thermal ratio above which the orientation average is flagged.
pub const ORIENTATION_REGIME_RATIO: f64 = 0.1;

fn check_separation(r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(VdwError::ZeroDistance);
    }
    Ok(())
}

/// Thermally averaged dipole-dipole (Keesom) energy,
/// `U = -2 p₁² p₂² / [3 k_B T (4π ε₀)² r⁶]`.
///
/// Valid for `k_B T ≫ p₁p₂/(4π ε₀ r³)`; outside that regime the value is
/// still returned, with a warning.
pub fn u_orientation(p1: f64, p2: f64, t: f64, r: f64, u: UnitSystem) -> Result<PairEnergy> {
    check_separation(r)?;
    if !(t > 0.0) {
        return Err(VdwError::InvalidParameter(format!(
            "temperature must be positive, got {t}"
        )));
    }
    let kt = u.k_b() * t;
    let k = u.four_pi_epsilon0();
    let value = -2.0 * p1 * p1 * p2 * p2 / (3.0 * kt * k * k * r.powi(6));
    let coupling = p1 * p2 / (k * r.powi(3));
    let warning = (coupling > ORIENTATION_REGIME_RATIO * kt).then(|| {
        format!("dipole coupling {coupling:e} is not small against k_B T = {kt:e}; orientation average unreliable")
    });
    Ok(PairEnergy { value, warning })
}

/// London dispersion between identical atoms:
/// `U = -(3/4) ħ ω₀ α₀² / [(4π ε₀)² r⁶]`.
pub fn u_london(alpha0: f64, omega0: f64, r: f64, u: UnitSystem) -> Result<f64> {
    check_separation(r)?;
    let k = u.four_pi_epsilon0();
    Ok(-0.75 * u.hbar() * omega0 * alpha0 * alpha0 / (k * k * r.powi(6)))
}

/// Wang's hydrogen-hydrogen estimate `U ≈ -8.7 e² a₀² / [(4π ε₀)² r⁶]`.
pub fn u_wang(r: f64, u: UnitSystem) -> Result<f64> {
    check_separation(r)?;
    let k = u.four_pi_epsilon0();
    let e = u.elementary_charge();
    let a0 = u.bohr_radius();
    Ok(-8.7 * e * e * a0 * a0 / (k * k * r.powi(6)))
}

/// Retarded Casimir-Polder energy `U = -23 ħ c α₁ α₂ / [4π (4π ε₀)² r⁷]`.
pub fn u_retarded_cp(alpha1: f64, alpha2: f64, r: f64, u: UnitSystem) -> Result<f64> {
    check_separation(r)?;
    let k = u.four_pi_epsilon0();
    Ok(-23.0 * u.hbar() * u.speed_of_light() * alpha1 * alpha2 / (4.0 * PI * k * k * r.powi(7)))
}

/// Atom (one dominant transition `ω₁₀`, polarizability `α`) at distance `a`
/// from a small conductor of polarizability `α_s = 4π ε₀ R³`:
/// `U = -(3/2) ħ ω₁₀ α α_s / [(4π ε₀)² a⁶]`.
///
/// This is the small-sphere limit of the isolated-sphere energy.
pub fn u_atom_point_conductor(
    alpha: f64,
    omega10: f64,
    alpha_s: f64,
    a: f64,
    u: UnitSystem,
) -> Result<f64> {
    check_separation(a)?;
    let k = u.four_pi_epsilon0();
    Ok(-1.5 * u.hbar() * omega10 * alpha * alpha_s / (k * k * a.powi(6)))
}

/// Dipole-dipole interaction energy
/// `[p₁·p₂ - 3 (p₁·R̂)(p₂·R̂)] / (4π ε₀ R³)`.
pub fn h_dipole_dipole(p1: &Vec3, p2: &Vec3, sep: &Vec3, u: UnitSystem) -> Result<f64> {
    let r = sep.norm();
    if !(r > 0.0) {
        return Err(VdwError::ZeroDistance);
    }
    let n = *sep * (1.0 / r);
    Ok((p1.dot(p2) - 3.0 * p1.dot(&n) * p2.dot(&n)) / (u.four_pi_epsilon0() * r.powi(3)))
}
