//! Shared domain types: points, conductor geometries, dipole statistics and
//! energy results.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Result, VdwError};
use crate::units::UnitSystem;

/// A point (or displacement) in 3-space, stored in Cartesian components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Positions and displacements share one representation.
pub type Position = Vec3;

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn from_cylindrical(rho: f64, phi: f64, z: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self::new(rho * c, rho * s, z)
    }

    pub fn from_spherical(r: f64, theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self::new(r * st * cp, r * st * sp, r * ct)
    }

    pub fn rho(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Azimuth in (-π, π]; zero on the z axis.
    pub fn phi(&self) -> f64 {
        if self.x == 0.0 && self.y == 0.0 {
            return 0.0;
        }
        let phi = self.y.atan2(self.x);
        if phi == -PI {
            PI
        } else {
            phi
        }
    }

    /// `(rho, phi, z)`.
    pub fn to_cylindrical(&self) -> (f64, f64, f64) {
        (self.rho(), self.phi(), self.z)
    }

    pub fn dot(&self, other: &Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn distance(&self, other: &Vec3) -> f64 {
        (*self - *other).norm()
    }

    pub fn mirror_z(&self) -> Vec3 {
        Vec3::new(self.x, self.y, -self.z)
    }

    pub fn normalized(&self) -> Vec3 {
        *self * (1.0 / self.norm())
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Cylindrical view of a point.
pub fn to_cylindrical(p: &Position) -> (f64, f64, f64) {
    p.to_cylindrical()
}

/// The conducting surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeometryConfig {
    /// Infinite grounded plane `z = 0`.
    Plane,
    /// Grounded sphere of radius `radius` centred at the origin.
    GroundedSphere { radius: f64 },
    /// Neutral isolated sphere of radius `radius` centred at the origin.
    IsolatedSphere { radius: f64 },
    /// Grounded hemisphere `|r| = R, z ≥ 0` on top of the grounded plane `z = 0`.
    BossHat { radius: f64 },
}

impl GeometryConfig {
    pub fn grounded_sphere(radius: f64) -> Result<Self> {
        check_radius(radius).map(|radius| GeometryConfig::GroundedSphere { radius })
    }

    pub fn isolated_sphere(radius: f64) -> Result<Self> {
        check_radius(radius).map(|radius| GeometryConfig::IsolatedSphere { radius })
    }

    pub fn boss_hat(radius: f64) -> Result<Self> {
        check_radius(radius).map(|radius| GeometryConfig::BossHat { radius })
    }

    pub fn radius(&self) -> Option<f64> {
        match *self {
            GeometryConfig::Plane => None,
            GeometryConfig::GroundedSphere { radius }
            | GeometryConfig::IsolatedSphere { radius }
            | GeometryConfig::BossHat { radius } => Some(radius),
        }
    }

    pub fn is_grounded(&self) -> bool {
        !matches!(self, GeometryConfig::IsolatedSphere { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            GeometryConfig::Plane => "plane",
            GeometryConfig::GroundedSphere { .. } => "grounded sphere",
            GeometryConfig::IsolatedSphere { .. } => "isolated sphere",
            GeometryConfig::BossHat { .. } => "boss hat",
        }
    }

    /// Whether `p` lies strictly outside the conductor.
    pub fn physical_region(&self, p: &Position) -> bool {
        match *self {
            GeometryConfig::Plane => p.z > 0.0,
            GeometryConfig::GroundedSphere { radius }
            | GeometryConfig::IsolatedSphere { radius } => p.norm() > radius,
            GeometryConfig::BossHat { radius } => p.z > 0.0 && p.norm() > radius,
        }
    }

    /// Euclidean distance from a physical point to the nearest point of the surface.
    pub fn distance_to_surface(&self, p: &Position) -> f64 {
        match *self {
            GeometryConfig::Plane => p.z.abs(),
            GeometryConfig::GroundedSphere { radius }
            | GeometryConfig::IsolatedSphere { radius } => (p.norm() - radius).abs(),
            // For z > 0 the hemisphere distance |r| - R never exceeds the
            // distance to the inner disk, so the two-term minimum is exact.
            GeometryConfig::BossHat { radius } => (p.norm() - radius).abs().min(p.z.abs()),
        }
    }

    pub(crate) fn require_physical(&self, p: &Position) -> Result<()> {
        if self.physical_region(p) {
            Ok(())
        } else {
            Err(VdwError::OutsidePhysicalRegion {
                geometry: self.name(),
                x: p.x,
                y: p.y,
                z: p.z,
            })
        }
    }
}

impl fmt::Display for GeometryConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.radius() {
            Some(r) => write!(f, "{} (R = {r})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// Free-function form of [`GeometryConfig::physical_region`].
pub fn physical_region(g: &GeometryConfig, p: &Position) -> bool {
    g.physical_region(p)
}

fn check_radius(radius: f64) -> Result<f64> {
    if radius.is_finite() && radius > 0.0 {
        Ok(radius)
    } else {
        Err(VdwError::InvalidParameter(format!(
            "radius must be positive and finite, got {radius}"
        )))
    }
}

/// Orthonormal frame in which the dipole variances are diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Frame {
    /// `(x, y, z)`.
    #[default]
    Cartesian,
    /// `(ρ̂, φ̂, ẑ)` evaluated at the atom's azimuth.
    CylindricalLocal,
}

impl Frame {
    pub fn name(self) -> &'static str {
        match self {
            Frame::Cartesian => "cartesian",
            Frame::CylindricalLocal => "cylindrical",
        }
    }

    /// The three frame axes at the point `at`.
    pub fn axes(self, at: &Position) -> [Vec3; 3] {
        match self {
            Frame::Cartesian => [Vec3::X, Vec3::Y, Vec3::Z],
            Frame::CylindricalLocal => {
                let (s, c) = at.phi().sin_cos();
                [Vec3::new(c, s, 0.0), Vec3::new(-s, c, 0.0), Vec3::Z]
            }
        }
    }
}

/// Diagonal ground-state dipole fluctuations `<d_m²>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleVariances {
    pub frame: Frame,
    pub m: [f64; 3],
}

impl DipoleVariances {
    pub fn new(frame: Frame, m1: f64, m2: f64, m3: f64) -> Result<Self> {
        let m = [m1, m2, m3];
        if m.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(VdwError::InvalidParameter(format!(
                "dipole variances must be non-negative, got {m:?}"
            )));
        }
        Ok(Self { frame, m })
    }

    pub fn cartesian(dx2: f64, dy2: f64, dz2: f64) -> Result<Self> {
        Self::new(Frame::Cartesian, dx2, dy2, dz2)
    }

    pub fn cylindrical(drho2: f64, dphi2: f64, dz2: f64) -> Result<Self> {
        Self::new(Frame::CylindricalLocal, drho2, dphi2, dz2)
    }

    /// `<d_m²> = <d²>/3` on every axis.
    pub fn isotropic(total: f64) -> Result<Self> {
        let third = total / 3.0;
        Self::new(Frame::Cartesian, third, third, third)
    }

    pub fn total(&self) -> f64 {
        self.m.iter().sum()
    }

    pub fn is_isotropic(&self) -> bool {
        let t = self.total();
        self.m
            .iter()
            .all(|v| (v - t / 3.0).abs() <= 1e-12 * t.abs())
    }

    /// Same numbers, different frame label.
    pub fn in_frame(self, frame: Frame) -> Self {
        Self { frame, ..self }
    }
}

/// Optional single dominant transition characterising the atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominantTransition {
    /// Static polarizability, C² m² / J in SI.
    pub alpha: f64,
    /// Angular transition frequency, rad/s in SI.
    pub omega10: f64,
}

impl DominantTransition {
    /// `<d²> = |d₁₀|² = (3/2) ħ ω₁₀ α`.
    pub fn variance_total(&self, units: UnitSystem) -> f64 {
        1.5 * units.hbar() * self.omega10 * self.alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomSpec {
    pub variances: DipoleVariances,
    pub transition: Option<DominantTransition>,
}

impl AtomSpec {
    pub fn new(variances: DipoleVariances) -> Self {
        Self {
            variances,
            transition: None,
        }
    }

    pub fn isotropic(total: f64) -> Result<Self> {
        DipoleVariances::isotropic(total).map(Self::new)
    }

    /// Isotropic atom whose total variance follows from a dominant transition.
    pub fn from_transition(alpha: f64, omega10: f64, units: UnitSystem) -> Result<Self> {
        if !(alpha >= 0.0 && omega10 >= 0.0) {
            return Err(VdwError::InvalidParameter(
                "polarizability and transition frequency must be non-negative".into(),
            ));
        }
        let transition = DominantTransition { alpha, omega10 };
        Ok(Self {
            variances: DipoleVariances::isotropic(transition.variance_total(units))?,
            transition: Some(transition),
        })
    }
}

/// How an energy was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    NumericEz,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::NumericEz => "numeric_ez",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyResult {
    /// J in SI, `<d²>/(4π ε₀ L³)` units in reduced mode.
    pub value: f64,
    pub method: Method,
    pub units: UnitSystem,
    /// Absolute error estimate; zero for closed forms.
    pub err_estimate: f64,
}

impl EnergyResult {
    pub fn closed_form(value: f64, units: UnitSystem) -> Self {
        Self {
            value,
            method: Method::ClosedForm,
            units,
            err_estimate: 0.0,
        }
    }

    pub fn relative_difference(&self, other: &EnergyResult) -> f64 {
        relative_difference(self.value, other.value)
    }
}

/// `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_difference(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cylindrical_view_examples() {
        assert_eq!(to_cylindrical(&Vec3::new(1.0, 0.0, 2.0)), (1.0, 0.0, 2.0));
        assert_eq!(to_cylindrical(&Vec3::new(0.0, 0.0, 5.0)), (0.0, 0.0, 5.0));
        let (rho, phi, z) = to_cylindrical(&Vec3::new(3.0, 4.0, 0.0));
        assert_eq!(rho, 5.0);
        assert_eq!(phi, 4.0_f64.atan2(3.0));
        assert_eq!(z, 0.0);
    }

    #[test]
    fn phi_on_negative_x_axis_is_plus_pi() {
        assert_eq!(Vec3::new(-1.0, 0.0, 0.0).phi(), PI);
        assert_eq!(Vec3::new(-1.0, -0.0, 0.0).phi(), PI);
    }

    #[test]
    fn physical_region_examples() {
        assert!(physical_region(
            &GeometryConfig::Plane,
            &Vec3::new(0.0, 0.0, 1.0)
        ));
        let gs = GeometryConfig::grounded_sphere(2.0).unwrap();
        assert!(!physical_region(&gs, &Vec3::new(0.0, 0.0, 1.0)));
        let bh = GeometryConfig::boss_hat(1.0).unwrap();
        assert!(physical_region(&bh, &Vec3::new(5.0, 0.0, 0.5)));
        assert!(!physical_region(&bh, &Vec3::new(0.5, 0.0, 0.5)));
        assert!(!physical_region(&bh, &Vec3::new(5.0, 0.0, -0.5)));
    }

    #[test]
    fn radius_must_be_positive() {
        assert!(GeometryConfig::grounded_sphere(0.0).is_err());
        assert!(GeometryConfig::boss_hat(-1.0).is_err());
        assert!(GeometryConfig::isolated_sphere(f64::NAN).is_err());
    }

    #[test]
    fn boss_hat_distance_to_surface() {
        let bh = GeometryConfig::boss_hat(1.0).unwrap();
        assert!((bh.distance_to_surface(&Vec3::new(0.0, 0.0, 3.0)) - 2.0).abs() < 1e-15);
        assert!((bh.distance_to_surface(&Vec3::new(5.0, 0.0, 0.5)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn isotropic_variances_split_exactly() {
        let v = DipoleVariances::isotropic(3.0).unwrap();
        assert_eq!(v.m, [1.0, 1.0, 1.0]);
        assert!(v.is_isotropic());
        assert!(DipoleVariances::cartesian(-1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn transition_fixes_variance() {
        let units = UnitSystem::SI;
        let (alpha, omega) = (7.4e-41, 1.6e16);
        let atom = AtomSpec::from_transition(alpha, omega, units).unwrap();
        let expected = 1.5 * units.hbar() * omega * alpha;
        assert!(relative_difference(atom.variances.total(), expected) < 1e-15);
    }

    #[test]
    fn cylindrical_frame_axes_are_orthonormal() {
        let p = Vec3::from_cylindrical(2.0, 0.7, 1.0);
        let a = Frame::CylindricalLocal.axes(&p);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((a[i].dot(&a[j]) - expect).abs() < 1e-15);
            }
        }
        // ρ̂ points away from the axis.
        assert!((a[0].dot(&p) - 2.0).abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn cylindrical_round_trip(
            log_r in -6.0f64..6.0,
            phi in -3.1f64..3.1,
            cos_t in -1.0f64..1.0,
        ) {
            let r = 10f64.powf(log_r);
            let rho = r * (1.0 - cos_t * cos_t).sqrt();
            let z = r * cos_t;
            let p = Vec3::from_cylindrical(rho, phi, z);
            let (rho2, phi2, z2) = p.to_cylindrical();
            prop_assert!((rho2 - rho).abs() <= 1e-12 * r);
            prop_assert!((z2 - z).abs() <= 1e-12 * r);
            if rho > 1e-3 * r {
                let dphi = (phi2 - phi).rem_euclid(2.0 * PI);
                let dphi = dphi.min(2.0 * PI - dphi);
                prop_assert!(dphi <= 1e-12);
            }
            prop_assert!(rho2 >= 0.0 && phi2 > -PI && phi2 <= PI);
        }
    }
}
