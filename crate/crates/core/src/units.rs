//! Physical constants and the two unit conventions.
//!
//! SI mode uses CODATA 2018 values. Reduced mode sets `4π ε₀ = 1` and every
//! other constant (ħ, k_B, c, e, a₀) to one; lengths and dipoles are then
//! dimensionless multiples of a reference length `L` and of `sqrt(<d²>)`,
//! and energies are multiples of `<d²> / (4π ε₀ L³)`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Vacuum permittivity, F/m.
pub const EPSILON_0: f64 = 8.8541878128e-12;
/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054571817e-34;
/// Boltzmann constant, J/K.
pub const K_B: f64 = 1.380649e-23;
/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Elementary charge, C.
pub const ELEMENTARY_CHARGE: f64 = 1.602176634e-19;
/// Bohr radius, m.
pub const BOHR_RADIUS: f64 = 5.29177210903e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum UnitSystem {
    #[default]
    SI,
    Reduced,
}

impl UnitSystem {
    pub fn epsilon0(self) -> f64 {
        match self {
            UnitSystem::SI => EPSILON_0,
            UnitSystem::Reduced => 1.0 / (4.0 * PI),
        }
    }

    /// `4π ε₀`, the Coulomb denominator.
    pub fn four_pi_epsilon0(self) -> f64 {
        match self {
            UnitSystem::SI => 4.0 * PI * EPSILON_0,
            UnitSystem::Reduced => 1.0,
        }
    }

    pub fn hbar(self) -> f64 {
        self.pick(HBAR)
    }

    pub fn k_b(self) -> f64 {
        self.pick(K_B)
    }

    pub fn speed_of_light(self) -> f64 {
        self.pick(SPEED_OF_LIGHT)
    }

    pub fn elementary_charge(self) -> f64 {
        self.pick(ELEMENTARY_CHARGE)
    }

    pub fn bohr_radius(self) -> f64 {
        self.pick(BOHR_RADIUS)
    }

    fn pick(self, si: f64) -> f64 {
        match self {
            UnitSystem::SI => si,
            UnitSystem::Reduced => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            UnitSystem::SI => "si",
            UnitSystem::Reduced => "reduced",
        }
    }
}

impl fmt::Display for UnitSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UnitSystem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "si" => Ok(UnitSystem::SI),
            "reduced" => Ok(UnitSystem::Reduced),
            other => Err(format!("unknown unit system '{other}'")),
        }
    }
}

/// Reference scales linking an SI problem to its reduced counterpart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedScale {
    /// Reference length `L`, m.
    pub length: f64,
    /// Total dipole variance `<d²>`, C² m².
    pub variance_total: f64,
}

impl ReducedScale {
    pub fn new(length: f64, variance_total: f64) -> Self {
        Self {
            length,
            variance_total,
        }
    }

    /// SI energy of one reduced energy unit: `<d²> / (4π ε₀ L³)`, J.
    pub fn energy_unit(&self) -> f64 {
        self.variance_total / (4.0 * PI * EPSILON_0 * self.length.powi(3))
    }

    pub fn to_reduced_length(&self, si: f64) -> f64 {
        si / self.length
    }

    pub fn to_reduced_variance(&self, si: f64) -> f64 {
        si / self.variance_total
    }

    pub fn to_si_energy(&self, reduced: f64) -> f64 {
        reduced * self.energy_unit()
    }
}
