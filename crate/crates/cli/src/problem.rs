use serde::Serialize;
use vdw_core::closed_form::{
    u_bosshat, u_bosshat_expansion3, u_grounded_sphere, u_isolated_sphere, u_plane,
    u_sphere_expansion3,
};
use vdw_core::oracle::{default_schedule, extrapolated_energy};
use vdw_core::{
    energy_numeric, AtomSpec, DiffSettings, DipoleVariances, EnergyResult, Frame, GeometryConfig,
    UnitSystem, VdwError, Vec3,
};

use crate::args::{FrameArg, GeometryArg, MethodArg, ProblemArgs, UnitsArg};
use crate::CliError;

/// Fully resolved inputs of one evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct Problem {
    pub geometry: &'static str,
    pub radius: Option<f64>,
    pub z0: f64,
    pub rho0: f64,
    pub variances: [f64; 3],
    pub frame: &'static str,
    pub units: &'static str,
    pub method: &'static str,
    #[serde(skip)]
    pub config: GeometryConfig,
    #[serde(skip)]
    pub atom: AtomSpec,
    #[serde(skip)]
    pub unit_system: UnitSystem,
    #[serde(skip)]
    pub method_arg: MethodArg,
    #[serde(skip)]
    pub settings: DiffSettings,
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Closed => "closed",
        MethodArg::Numeric => "numeric",
        MethodArg::Oracle => "oracle",
        MethodArg::Expansion3 => "expansion3",
    }
}

impl Problem {
    pub fn from_args(a: &ProblemArgs) -> Result<Self, CliError> {
        let unit_system = match a.units {
            UnitsArg::Si => UnitSystem::SI,
            UnitsArg::Reduced => UnitSystem::Reduced,
        };
        let need_radius = || {
            a.radius.ok_or_else(|| {
                CliError::Usage(format!("--radius is required for {:?}", a.geometry).to_lowercase())
            })
        };
        let config = match a.geometry {
            GeometryArg::Plane => GeometryConfig::Plane,
            GeometryArg::Gsphere => GeometryConfig::grounded_sphere(need_radius()?)?,
            GeometryArg::Isphere => GeometryConfig::isolated_sphere(need_radius()?)?,
            GeometryArg::Bosshat => GeometryConfig::boss_hat(need_radius()?)?,
        };
        let frame = match a.frame {
            FrameArg::Cartesian => Frame::Cartesian,
            FrameArg::Cylindrical => Frame::CylindricalLocal,
        };
        let atom = match (&a.variances, a.isotropic, a.alpha.zip(a.omega10)) {
            (Some(v), _, _) => match v.as_slice() {
                [a, b, c] => AtomSpec::new(DipoleVariances::new(frame, *a, *b, *c)?),
                _ => {
                    return Err(CliError::Usage(format!(
                        "--variances needs three values, got {}",
                        v.len()
                    )))
                }
            },
            (None, Some(total), _) => AtomSpec::isotropic(total)?,
            (None, None, Some((alpha, omega))) => {
                AtomSpec::from_transition(alpha, omega, unit_system)?
            }
            (None, None, None) => {
                return Err(CliError::Usage(
                    "one of --variances, --isotropic or --alpha/--omega10 is required".into(),
                ))
            }
        };
        let mut settings = DiffSettings::default();
        if let Some(b) = a.base_step {
            settings.base_step = b;
        }
        if let Some(l) = a.levels {
            settings.richardson_levels = l;
        }
        settings.validate()?;
        if !a.rho0.is_finite() || a.rho0 < 0.0 {
            return Err(CliError::Usage(format!(
                "--rho0 must be non-negative, got {}",
                a.rho0
            )));
        }
        Ok(Self {
            geometry: config.name(),
            radius: config.radius(),
            z0: a.z0.unwrap_or(f64::NAN),
            rho0: a.rho0,
            variances: atom.variances.m,
            frame: atom.variances.frame.name(),
            units: unit_system.name(),
            method: method_name(a.method),
            config,
            atom,
            unit_system,
            method_arg: a.method,
            settings,
        })
    }

    pub fn position(&self, rho0: f64, z0: f64) -> Vec3 {
        Vec3::new(rho0, 0.0, z0)
    }

    /// Energy with the atom at `(rho0, 0, z0)`.
    pub fn evaluate(&self, rho0: f64, z0: f64) -> Result<EnergyResult, CliError> {
        if !z0.is_finite() {
            return Err(CliError::Usage("--z0 is required".into()));
        }
        let r0 = self.position(rho0, z0);
        let u = self.unit_system;
        let v = &self.atom.variances;
        let total = v.total();
        let result = match self.method_arg {
            MethodArg::Numeric => energy_numeric(&self.config, &self.atom, &r0, &self.settings, u)?,
            MethodArg::Oracle => {
                let schedule = default_schedule(&self.config, &r0);
                extrapolated_energy(&self.config, &self.atom, &r0, &schedule, u)?
            }
            MethodArg::Closed => match self.config {
                GeometryConfig::Plane => u_plane(v, z0, u)?,
                GeometryConfig::GroundedSphere { radius } => {
                    self.require_isotropic()?;
                    u_grounded_sphere(total, r0.norm(), radius, u)?
                }
                GeometryConfig::IsolatedSphere { radius } => {
                    self.require_isotropic()?;
                    u_isolated_sphere(total, r0.norm(), radius, u)?
                }
                GeometryConfig::BossHat { radius } => u_bosshat(v, rho0, z0, radius, u)?,
            },
            MethodArg::Expansion3 => {
                if rho0 != 0.0 {
                    return Err(CliError::Usage(
                        "expansion3 is defined on the axis only (rho0 = 0)".into(),
                    ));
                }
                match self.config {
                    GeometryConfig::GroundedSphere { radius } => {
                        u_sphere_expansion3(total, z0, radius, u)?
                    }
                    GeometryConfig::BossHat { radius } => {
                        u_bosshat_expansion3(total, z0, radius, u)?
                    }
                    _ => {
                        return Err(CliError::Usage(
                            "expansion3 is available for gsphere and bosshat only".into(),
                        ))
                    }
                }
            }
        };
        Ok(result)
    }

    fn require_isotropic(&self) -> Result<(), CliError> {
        if self.atom.variances.is_isotropic() {
            Ok(())
        } else {
            Err(CliError::Usage(
                "the closed sphere formulas need an isotropic atom; use --method numeric".into(),
            ))
        }
    }

    /// Distance from `(rho0, 0, z0)` to the conductor.
    pub fn gap(&self, rho0: f64, z0: f64) -> f64 {
        self.config.distance_to_surface(&self.position(rho0, z0))
    }
}

impl From<VdwError> for CliError {
    fn from(e: VdwError) -> Self {
        if e.is_region_violation() {
            CliError::Region(e.to_string())
        } else {
            match e {
                VdwError::InvalidParameter(_)
                | VdwError::OutOfWindow { .. }
                | VdwError::StepTooLarge { .. } => CliError::Usage(e.to_string()),
                other => CliError::Failure(other.to_string()),
            }
        }
    }
}
