//! Image-charge constructions and the homogeneous Green function `G_H`.
//!
//! The Dirichlet Green function of a conductor is split as
//! `G(r, r') = 1/(4π|r - r'|) + G_H(r, r')`. For every geometry handled here
//! `G_H` is the (ε₀/q-scaled) potential of a finite set of image charges of a
//! unit source at `r'`, plus, for the isolated sphere, the neutralising term
//! `R / (4π |r| |r'|)`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, VdwError};
use crate::types::{GeometryConfig, Position, Vec3};

/// Rule mapping a source location `r'` to one image charge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ImageRule {
    /// Weight −1 at `(x', y', −z')`.
    PlaneMirror,
    /// Weight `−R/|r'|` at `(R²/|r'|²) r'` (Kelvin inversion).
    SphereInversion { radius: f64 },
    /// Weight `+R/|r'|` at the mirror of the inversion point.
    MirroredInversion { radius: f64 },
}

/// One image charge, expressed as a charge ratio `q_i/q` and a location,
/// both functions of the source position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageCharge {
    pub rule: ImageRule,
}

impl ImageCharge {
    pub const fn new(rule: ImageRule) -> Self {
        Self { rule }
    }

    pub fn weight(&self, source: &Position) -> f64 {
        match self.rule {
            ImageRule::PlaneMirror => -1.0,
            ImageRule::SphereInversion { radius } => -radius / source.norm(),
            ImageRule::MirroredInversion { radius } => radius / source.norm(),
        }
    }

    pub fn location(&self, source: &Position) -> Position {
        match self.rule {
            ImageRule::PlaneMirror => source.mirror_z(),
            ImageRule::SphereInversion { radius } => {
                *source * (radius * radius / source.norm_squared())
            }
            ImageRule::MirroredInversion { radius } => {
                source.mirror_z() * (radius * radius / source.norm_squared())
            }
        }
    }
}

/// Analytic addition to the image sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Supplement {
    /// `G⁽¹⁾(r, r') = R / (4π |r| |r'|)`, keeping an isolated sphere neutral.
    NeutralSphere { radius: f64 },
}

impl Supplement {
    fn eval(&self, r: &Position, r_prime: &Position) -> f64 {
        match *self {
            Supplement::NeutralSphere { radius } => radius / (4.0 * PI * r.norm() * r_prime.norm()),
        }
    }
}

/// Homogeneous part of the Green function for one geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousGreen {
    pub images: Vec<ImageCharge>,
    pub extra: Option<Supplement>,
}

/// Image system for `g`.
pub fn build_green(g: &GeometryConfig) -> HomogeneousGreen {
    use ImageRule::*;
    let (images, extra) = match *g {
        GeometryConfig::Plane => (vec![ImageCharge::new(PlaneMirror)], None),
        GeometryConfig::GroundedSphere { radius } => {
            (vec![ImageCharge::new(SphereInversion { radius })], None)
        }
        GeometryConfig::IsolatedSphere { radius } => (
            vec![ImageCharge::new(SphereInversion { radius })],
            Some(Supplement::NeutralSphere { radius }),
        ),
        GeometryConfig::BossHat { radius } => (
            vec![
                ImageCharge::new(SphereInversion { radius }),
                ImageCharge::new(MirroredInversion { radius }),
                ImageCharge::new(PlaneMirror),
            ],
            None,
        ),
    };
    HomogeneousGreen { images, extra }
}

impl HomogeneousGreen {
    /// `G_H(r, r')`, in units of 1/length.
    ///
    /// The caller is responsible for keeping `r'` in the physical region; `r`
    /// may also sit on the surface. Fails only when `r` hits an image.
    pub fn g_h(&self, r: &Position, r_prime: &Position) -> Result<f64> {
        let mut sum = 0.0;
        for image in &self.images {
            let d = r.distance(&image.location(r_prime));
            if d == 0.0 || !d.is_finite() {
                return Err(VdwError::DegenerateSource);
            }
            sum += image.weight(r_prime) / d;
        }
        let mut value = sum / (4.0 * PI);
        if let Some(extra) = &self.extra {
            value += extra.eval(r, r_prime);
        }
        if value.is_finite() {
            Ok(value)
        } else {
            Err(VdwError::DegenerateSource)
        }
    }

    /// Full Green function `1/(4π|r - r'|) + G_H(r, r')`.
    pub fn full(&self, r: &Position, r_prime: &Position) -> Result<f64> {
        let d = r.distance(r_prime);
        if d == 0.0 {
            return Err(VdwError::DegenerateSource);
        }
        Ok(1.0 / (4.0 * PI * d) + self.g_h(r, r_prime)?)
    }
}

/// Free-function form of [`HomogeneousGreen::g_h`].
pub fn g_h(green: &HomogeneousGreen, r: &Position, r_prime: &Position) -> Result<f64> {
    green.g_h(r, r_prime)
}

/// Distance from an arbitrary point to the conducting surface itself (not to
/// the conductor's interior).
pub fn distance_to_conductor_surface(g: &GeometryConfig, p: &Position) -> f64 {
    match *g {
        GeometryConfig::Plane => p.z.abs(),
        GeometryConfig::GroundedSphere { radius } | GeometryConfig::IsolatedSphere { radius } => {
            (p.norm() - radius).abs()
        }
        GeometryConfig::BossHat { radius } => {
            let rho = p.rho();
            let dome = if p.z >= 0.0 {
                (p.norm() - radius).abs()
            } else {
                (rho - radius).hypot(p.z)
            };
            let annulus = if rho >= radius {
                p.z.abs()
            } else {
                (radius - rho).hypot(p.z)
            };
            dome.min(annulus)
        }
    }
}

/// Boundary-condition residual at a surface point for a unit source at `r'`.
///
/// Grounded geometries return `1/(4π|r_s - r'|) + G_H(r_s, r')`, which must
/// vanish. The isolated sphere returns the norm of
/// `∇'G(r_s, r')|_{r'} + r'/(4π|r'|³)`: with the dipole pointing from the
/// negative to the positive charge, the sphere potential induced by a dipole
/// `d` at `r'` is `-d·r'/(4π ε₀ |r'|³)`, so the source gradient of the full
/// Green function must equal `-r'/(4π|r'|³)` on the whole surface. The
/// gradient is taken by Richardson-extrapolated central differences.
pub fn bc_residual(
    green: &HomogeneousGreen,
    g: &GeometryConfig,
    r_surface: &Position,
    r_prime: &Position,
) -> Result<f64> {
    let scale = g
        .radius()
        .unwrap_or(0.0)
        .max(r_surface.norm())
        .max(r_prime.norm())
        .max(f64::MIN_POSITIVE);
    let tolerance = 1e-9 * scale;
    let distance = distance_to_conductor_surface(g, r_surface);
    if distance > tolerance {
        return Err(VdwError::NotOnSurface {
            distance,
            tolerance,
        });
    }
    g.require_physical(r_prime)?;

    if g.is_grounded() {
        return green.full(r_surface, r_prime);
    }

    let h = 1e-3 * g.distance_to_surface(r_prime);
    let grad_at = |h: f64| -> Result<Vec3> {
        let mut out = [0.0; 3];
        for (k, axis) in [Vec3::X, Vec3::Y, Vec3::Z].iter().enumerate() {
            let plus = green.full(r_surface, &(*r_prime + *axis * h))?;
            let minus = green.full(r_surface, &(*r_prime - *axis * h))?;
            out[k] = (plus - minus) / (2.0 * h);
        }
        Ok(Vec3::new(out[0], out[1], out[2]))
    };
    let coarse = grad_at(h)?;
    let fine = grad_at(h / 2.0)?;
    let grad = fine + (fine - coarse) * (1.0 / 3.0);
    let target = -(*r_prime) * (1.0 / (4.0 * PI * r_prime.norm().powi(3)));
    Ok((grad - target).norm())
}

/// Deterministic sample of `n` points on the conducting surface.
///
/// Planar parts are truncated at `rho ≤ 10·R` (or `rho ≤ 10` for the plane);
/// use [`surface_sample_within`] to choose the extent.
pub fn surface_sample(g: &GeometryConfig, n: usize, rng_seed: u64) -> Vec<Position> {
    let extent = 10.0 * g.radius().unwrap_or(1.0);
    surface_sample_within(g, n, rng_seed, extent)
}

/// As [`surface_sample`], with planar parts truncated at `rho ≤ extent`.
///
/// The boss hat gets `ceil(n/2)` points on the dome and the rest on the
/// annulus `R < rho ≤ extent`.
pub fn surface_sample_within(
    g: &GeometryConfig,
    n: usize,
    rng_seed: u64,
    extent: f64,
) -> Vec<Position> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    match *g {
        GeometryConfig::Plane => (0..n).map(|_| disk_point(&mut rng, 0.0, extent)).collect(),
        GeometryConfig::GroundedSphere { radius } | GeometryConfig::IsolatedSphere { radius } => (0
            ..n)
            .map(|_| sphere_point(&mut rng, radius, false))
            .collect(),
        GeometryConfig::BossHat { radius } => {
            let dome = n.div_ceil(2);
            let mut out: Vec<Position> = (0..dome)
                .map(|_| sphere_point(&mut rng, radius, true))
                .collect();
            let outer = extent.max(radius * (1.0 + 1e-9));
            out.extend((dome..n).map(|_| disk_point(&mut rng, radius, outer)));
            out
        }
    }
}

/// Uniform on the sphere (Archimedes); upper hemisphere only when `upper`.
fn sphere_point<R: Rng>(rng: &mut R, radius: f64, upper: bool) -> Position {
    let cos_t: f64 = if upper {
        rng.gen_range(0.0..=1.0)
    } else {
        rng.gen_range(-1.0..=1.0)
    };
    let phi: f64 = rng.gen_range(-PI..PI);
    let sin_t = (1.0 - cos_t * cos_t).max(0.0).sqrt();
    let (s, c) = phi.sin_cos();
    Vec3::new(radius * sin_t * c, radius * sin_t * s, radius * cos_t)
}

/// Area-uniform on the annulus `inner ≤ rho ≤ outer` of the plane `z = 0`.
fn disk_point<R: Rng>(rng: &mut R, inner: f64, outer: f64) -> Position {
    let u: f64 = rng.gen_range(0.0..=1.0);
    let rho = (inner * inner + u * (outer * outer - inner * inner))
        .sqrt()
        .max(inner);
    let phi: f64 = rng.gen_range(-PI..PI);
    Vec3::from_cylindrical(rho, phi, 0.0)
}

/// The boss-hat distances written directly in cylindrical coordinates:
/// `(ξ, ξ₋, ξ₊)`.
///
/// `ξ = |r - r'_{i3}|` is a plain distance, while the radicals `ξ∓` equal
/// `|r'|² · |r - r'_{i1,2}|`; this is what makes the `R|r'|/ξ∓` weights in
/// [`boss_hat_g_h_cylindrical`] come out as `R/(|r'| |r - r'_i|)`.
pub fn boss_hat_xi(radius: f64, r: &Position, r_prime: &Position) -> (f64, f64, f64) {
    let (rho, phi, z) = r.to_cylindrical();
    let (rho_p, phi_p, z_p) = r_prime.to_cylindrical();
    let cos = (phi_p - phi).cos();
    let r2 = radius * radius;
    let rp2 = rho_p * rho_p + z_p * z_p;
    let xi = (rho_p * rho_p + rho * rho + (z_p + z).powi(2) - 2.0 * rho_p * rho * cos).sqrt();
    let radical = |sign: f64| {
        (r2 * r2 * rho_p * rho_p + rp2 * rp2 * rho * rho + (rp2 * z + sign * r2 * z_p).powi(2)
            - 2.0 * r2 * rp2 * rho_p * rho * cos)
            .sqrt()
    };
    (xi, radical(-1.0), radical(1.0))
}

/// Boss-hat `G_H` assembled from the cylindrical `ξ` radicals; an
/// independent evaluation path for the Cartesian image sum.
pub fn boss_hat_g_h_cylindrical(radius: f64, r: &Position, r_prime: &Position) -> f64 {
    let (xi, xi_minus, xi_plus) = boss_hat_xi(radius, r, r_prime);
    let w = radius * r_prime.norm();
    (-1.0 / xi - w / xi_minus + w / xi_plus) / (4.0 * PI)
}
