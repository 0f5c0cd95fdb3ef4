//! Analytic non-retarded energies for the plane, the grounded and isolated
//! spheres and the boss hat, plus their near-contact expansions.
//!
//! All energies are negative (attractive). Sphere formulas assume an
//! isotropic atom on the z axis at distance `z0` from the centre; `a = z0 - R`
//! is the gap to the surface.

use std::f64::consts::PI;

use crate::error::{Result, VdwError};
use crate::types::{DipoleVariances, EnergyResult};
use crate::units::UnitSystem;

/// Bracket coefficients `{1, -1, 1, c₃}` of the sphere expansion in
/// `s = (z0 - R)/R`.
pub const SPHERE_SERIES: [f64; 4] = [1.0, -1.0, 1.0, -7.0 / 8.0];

/// Bracket coefficients of the on-axis boss-hat expansion in `s`.
pub const BOSS_HAT_SERIES: [f64; 4] = [1.0, -1.0, 1.0, -3.0 / 8.0];

/// Third-order coefficient commonly quoted for both expansions. Correct for
/// the sphere, not for the boss hat.
pub const PRINTED_THIRD_ORDER: f64 = -7.0 / 8.0;

/// Upper end of the window in which the third-order expansions are offered.
pub const EXPANSION_WINDOW: f64 = 0.5;

/// Atom in front of the infinite grounded plane at height `z0`:
/// `U = -(<d_x²> + <d_y²> + 2<d_z²>) / (64π ε₀ |z0|³)`.
///
/// The plane is isotropic in-plane, so variances in either frame are read as
/// (in-plane, in-plane, normal).
pub fn u_plane(variances: &DipoleVariances, z0: f64, u: UnitSystem) -> Result<EnergyResult> {
    if z0 == 0.0 || !z0.is_finite() {
        return Err(VdwError::ZeroDistance);
    }
    let [m1, m2, m3] = variances.m;
    let value = -(m1 + m2 + 2.0 * m3) / (64.0 * PI * u.epsilon0() * z0.abs().powi(3));
    Ok(EnergyResult::closed_form(value, u))
}

fn check_sphere(z0: f64, radius: f64) -> Result<()> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(VdwError::InvalidParameter(format!(
            "radius must be positive, got {radius}"
        )));
    }
    if !(z0 > radius) {
        return Err(VdwError::Contact { z0, radius });
    }
    Ok(())
}

fn check_gap(a: f64, radius: f64) -> Result<()> {
    check_sphere(radius + a, radius)?;
    if !(a > 0.0) {
        return Err(VdwError::Contact {
            z0: radius + a,
            radius,
        });
    }
    Ok(())
}

/// Grounded sphere, centre-distance form:
/// `U = -(<d²>/24π ε₀) [4R³/z0⁶ (1-R²/z0²)⁻³ + R/z0⁴ (1-R²/z0²)⁻²]`.
pub fn u_grounded_sphere(
    variance_total: f64,
    z0: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    check_sphere(z0, radius)?;
    let x = 1.0 - (radius / z0).powi(2);
    let bracket = 4.0 * radius.powi(3) / (z0.powi(6) * x.powi(3)) + radius / (z0.powi(4) * x * x);
    Ok(EnergyResult::closed_form(
        -variance_total / (24.0 * PI * u.epsilon0()) * bracket,
        u,
    ))
}

/// `4/(2+t)³ + t/(2+t)²` with `t = a/R`.
fn grounded_gap_bracket(t: f64) -> f64 {
    4.0 / (2.0 + t).powi(3) + t / (2.0 + t).powi(2)
}

/// Grounded sphere, gap form: `U = -(<d²>/24π ε₀ a³) [4/(2+a/R)³ + (a/R)/(2+a/R)²]`.
pub fn u_grounded_sphere_gap(
    variance_total: f64,
    a: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    check_gap(a, radius)?;
    let value =
        -variance_total / (24.0 * PI * u.epsilon0() * a.powi(3)) * grounded_gap_bracket(a / radius);
    Ok(EnergyResult::closed_form(value, u))
}

/// Grounded sphere for an atom with one dominant transition:
/// `U = -(ħ ω₁₀ α / 16π ε₀ a³) [4/(2+a/R)³ + (a/R)/(2+a/R)²]`.
pub fn u_grounded_sphere_alpha(
    alpha: f64,
    omega10: f64,
    a: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    check_gap(a, radius)?;
    let value = -u.hbar() * omega10 * alpha / (16.0 * PI * u.epsilon0() * a.powi(3))
        * grounded_gap_bracket(a / radius);
    Ok(EnergyResult::closed_form(value, u))
}

/// Isolated (neutral) sphere: the grounded result with `R/z0⁴` removed from
/// the bracket.
pub fn u_isolated_sphere(
    variance_total: f64,
    z0: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    let grounded = u_grounded_sphere(variance_total, z0, radius, u)?;
    let correction = variance_total * radius / (24.0 * PI * u.epsilon0() * z0.powi(4));
    Ok(EnergyResult::closed_form(grounded.value + correction, u))
}

/// Isolated sphere, gap form with bracket
/// `4/(2+t)³ + t/(2+t)² - t³/(1+t)⁴`, `t = a/R`.
pub fn u_isolated_sphere_gap(
    variance_total: f64,
    a: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    check_gap(a, radius)?;
    let t = a / radius;
    let bracket = grounded_gap_bracket(t) - t.powi(3) / (1.0 + t).powi(4);
    let value = -variance_total / (24.0 * PI * u.epsilon0() * a.powi(3)) * bracket;
    Ok(EnergyResult::closed_form(value, u))
}

/// `lim U_isolated · a⁶/R³` as `R/a → 0`: `-<d²>/(4π ε₀)`.
///
/// Expanding the isolated-sphere bracket in `R/a` gives `6 (R/a)³`: the
/// `4/(2+t)³` term contributes 4 and the difference of the last two terms
/// another 2. This equals `-(1/2) α_s <E²>` for a point polarizability
/// `α_s = 4π ε₀ R³` in the dipole field of the atom.
pub fn point_conductor_limit(variance_total: f64, u: UnitSystem) -> f64 {
    -variance_total / (4.0 * PI * u.epsilon0())
}

/// The point-conductor coefficient obtained when only the `4/(2+t)³` term of
/// the bracket is kept: `-<d²>/(6π ε₀)`. Kept for comparison reports.
pub fn point_conductor_limit_leading_term_only(variance_total: f64, u: UnitSystem) -> f64 {
    -variance_total / (6.0 * PI * u.epsilon0())
}

/// Dimensionless boss-hat functions and the auxiliary polynomial `ζ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BossHatXi {
    pub xi_rho: f64,
    pub xi_phi: f64,
    pub xi_z: f64,
    /// Dimension length¹²; enters `Ξ_z` divided by `D^{5/2}`.
    pub zeta: f64,
}

fn check_boss_hat(radius: f64, rho0: f64, z0: f64) -> Result<()> {
    if !(radius >= 0.0 && radius.is_finite() && rho0 >= 0.0) {
        return Err(VdwError::InvalidParameter(format!(
            "need R >= 0 and rho0 >= 0, got R = {radius}, rho0 = {rho0}"
        )));
    }
    if !(z0 > 0.0 && rho0 * rho0 + z0 * z0 > radius * radius) {
        return Err(VdwError::OutsidePhysicalRegion {
            geometry: "boss hat",
            x: rho0,
            y: 0.0,
            z: z0,
        });
    }
    Ok(())
}

/// Boss-hat `Ξ_ρ`, `Ξ_φ`, `Ξ_z` and `ζ` at `(ρ0, z0)`, obtained by exact
/// differentiation of the three-image Green function.
///
/// With `S = ρ0² + z0² - R²` and `D = (ρ0² + z0² + R²)² - 4R²ρ0²`:
///
/// ```text
/// Ξ_ρ = 1 - 8R z0³ { N/D^{5/2} - (ρ0² + R²)/S³ }
/// N   = [(R² + z0²)² - (R² + ρ0² + 8z0²) ρ0²] R² + (z0² + ρ0²)² ρ0²
/// Ξ_φ = 1 + 8R³ z0³ { 1/S³ - 1/D^{3/2} }
/// Ξ_z = 2 + (8R z0³/S³) { R² + z0² + ζ/D^{5/2} }
/// ```
///
/// and `ζ` is the polynomial in [`zeta`].
pub fn xi_functions(radius: f64, rho0: f64, z0: f64) -> Result<BossHatXi> {
    check_boss_hat(radius, rho0, z0)?;
    let (a, b, c) = (radius * radius, rho0 * rho0, z0 * z0);
    let s = b + c - a;
    let d = (b + c + a).powi(2) - 4.0 * a * b;
    let d_half = d.sqrt();
    let d52 = d * d * d_half;
    let rz3 = radius * z0.powi(3);

    let n = ((a + c).powi(2) - (a + b + 8.0 * c) * b) * a + (c + b).powi(2) * b;
    let xi_rho = 1.0 - 8.0 * rz3 * (n / d52 - (b + a) / s.powi(3));
    let xi_phi = 1.0 + 8.0 * a * rz3 * (1.0 / s.powi(3) - 1.0 / (d * d_half));
    let zeta = zeta(radius, rho0, z0);
    let xi_z = 2.0 + 8.0 * rz3 / s.powi(3) * (a + c + zeta / d52);
    Ok(BossHatXi {
        xi_rho,
        xi_phi,
        xi_z,
        zeta,
    })
}

/// `ζ(R, ρ0, z0)`, grouped by powers of `ρ0²` with `a = R²`, `c = z0²`:
///
/// ```text
/// ζ = -(a² - c²)²(a - c)²
///     + ρ0² (a - c)(5a⁴ + 4a³c - 18a²c² + 4ac³ + 5c⁴)
///     - ρ0⁴ (10a⁴ + 8a³c - 36a²c² + 8ac³ + 10c⁴)
///     + 10 ρ0⁶ (a - c)(a + c)²
///     - ρ0⁸ (5a² + 2ac + 5c²)
///     + ρ0¹⁰ (a - c)
/// ```
pub fn zeta(radius: f64, rho0: f64, z0: f64) -> f64 {
    let (a, b, c) = (radius * radius, rho0 * rho0, z0 * z0);
    let amc = a - c;
    let apc = a + c;
    let p0 = -(a * a - c * c).powi(2) * amc * amc;
    let p1 = amc
        * (5.0 * a.powi(4) + 4.0 * a.powi(3) * c - 18.0 * a * a * c * c
            + 4.0 * a * c.powi(3)
            + 5.0 * c.powi(4));
    let p2 = -(10.0 * a.powi(4) + 8.0 * a.powi(3) * c - 36.0 * a * a * c * c
        + 8.0 * a * c.powi(3)
        + 10.0 * c.powi(4));
    let p3 = 10.0 * amc * apc * apc;
    let p4 = -(5.0 * a * a + 2.0 * a * c + 5.0 * c * c);
    let p5 = amc;
    p0 + b * (p1 + b * (p2 + b * (p3 + b * (p4 + b * p5))))
}

/// The commonly quoted closed form of the boss-hat functions, kept verbatim
/// for comparison against [`xi_functions`].
///
/// Agrees with the exact functions on the axis. Off the axis `Ξ_φ` agrees,
/// while `Ξ_ρ` (sign of the `R²` inside `(R² - ρ0² - 8z0²)`) and `ζ` (several
/// `ρ0`-dependent terms) do not.
pub fn xi_functions_printed(radius: f64, rho0: f64, z0: f64) -> Result<BossHatXi> {
    check_boss_hat(radius, rho0, z0)?;
    let (r, rho, z) = (radius, rho0, z0);
    let r2 = r * r;
    let rho2 = rho * rho;
    let z2 = z * z;
    let s = rho2 + z2 - r2;
    let d = (rho2 + z2 + r2).powi(2) - 4.0 * r2 * rho2;

    let xi_rho = 1.0
        - 8.0
            * r
            * z.powi(3)
            * ((((r2 + z2).powi(2) + (r2 - rho2 - 8.0 * z2) * rho2) * r2
                + (z2 + rho2).powi(2) * rho2)
                / d.powf(2.5)
                - (rho2 + r2) / s.powi(3));
    let xi_phi = 1.0 + 8.0 * r.powi(3) * z.powi(3) * (1.0 / s.powi(3) - 1.0 / d.powf(1.5));
    let zeta = -r2
        * rho2
        * (-10.0 * rho.powi(4) * z.powi(4)
            - 10.0 * rho.powi(4) * r2 * z2
            - 10.0 * r.powi(4) * rho.powi(4)
            + 8.0 * rho2 * r.powi(4) * z2
            - z.powi(8)
            + 2.0 * rho.powi(6) * z2
            + 8.0 * rho2 * z.powi(6)
            - 36.0 * rho2 * r2 * z.powi(4)
            + 10.0 * rho2 * r.powi(6))
        - (r.powi(4) - z.powi(4)).powi(2) * (r2 - z2).powi(2)
        - 5.0 * rho2 * z.powi(4) * (z2 + rho2) * ((z2 + rho2).powi(2) - rho2 * z2);
    let xi_z = 2.0 + 8.0 * r * z.powi(3) / s.powi(3) * (r2 + z2 + zeta / d.powf(2.5));
    Ok(BossHatXi {
        xi_rho,
        xi_phi,
        xi_z,
        zeta,
    })
}

fn boss_hat_energy(
    variances: &DipoleVariances,
    z0: f64,
    xi: &BossHatXi,
    u: UnitSystem,
) -> EnergyResult {
    let [d_rho, d_phi, d_z] = variances.m;
    let value = -(d_rho * xi.xi_rho + d_phi * xi.xi_phi + d_z * xi.xi_z)
        / (64.0 * PI * u.epsilon0() * z0.powi(3));
    EnergyResult::closed_form(value, u)
}

/// Atom at cylindrical `(ρ0, ·, z0)` near the grounded boss hat of radius `R`:
/// `U = -(<d_ρ²>Ξ_ρ + <d_φ²>Ξ_φ + <d_z²>Ξ_z) / (64π ε₀ z0³)`.
///
/// Variances are read in the local `(ρ̂, φ̂, ẑ)` frame whatever their label.
/// `R = 0` reproduces the plane.
pub fn u_bosshat(
    variances: &DipoleVariances,
    rho0: f64,
    z0: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    let xi = xi_functions(radius, rho0, z0)?;
    Ok(boss_hat_energy(variances, z0, &xi, u))
}

/// [`u_bosshat`] evaluated with [`xi_functions_printed`].
pub fn u_bosshat_printed(
    variances: &DipoleVariances,
    rho0: f64,
    z0: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    let xi = xi_functions_printed(radius, rho0, z0)?;
    Ok(boss_hat_energy(variances, z0, &xi, u))
}

fn expansion_parameter(z0: f64, radius: f64) -> Result<f64> {
    check_sphere(z0, radius)?;
    let s = (z0 - radius) / radius;
    if !(s > 0.0 && s < EXPANSION_WINDOW) {
        return Err(VdwError::OutOfWindow {
            s,
            limit: EXPANSION_WINDOW,
        });
    }
    Ok(s)
}

/// `-<d²>/(48π ε₀ (z0-R)³) · Σ_k c_k s^k` for `k ≤ 3`.
pub fn series_energy(
    coefficients: &[f64; 4],
    variance_total: f64,
    z0: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    let s = expansion_parameter(z0, radius)?;
    let bracket = coefficients.iter().rev().fold(0.0, |acc, c| acc * s + c);
    let value = -variance_total / (48.0 * PI * u.epsilon0() * (z0 - radius).powi(3)) * bracket;
    Ok(EnergyResult::closed_form(value, u))
}

/// Third-order near-contact expansion of the grounded-sphere energy.
pub fn u_sphere_expansion3(
    variance_total: f64,
    z0: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    series_energy(&SPHERE_SERIES, variance_total, z0, radius, u)
}

/// Third-order near-contact expansion of the on-axis boss-hat energy
/// (isotropic atom).
pub fn u_bosshat_expansion3(
    variance_total: f64,
    z0: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    series_energy(&BOSS_HAT_SERIES, variance_total, z0, radius, u)
}

/// On-axis isotropic boss-hat energy, the function expanded by
/// [`u_bosshat_expansion3`].
pub fn u_bosshat_on_axis_isotropic(
    variance_total: f64,
    z0: f64,
    radius: f64,
    u: UnitSystem,
) -> Result<EnergyResult> {
    let third = variance_total / 3.0;
    let v = DipoleVariances::cylindrical(third, third, third)?;
    u_bosshat(&v, 0.0, z0, radius, u)
}
