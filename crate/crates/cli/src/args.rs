use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "vdw",
    version,
    about = "Non-retarded atom-conductor dispersion energies"
)]
#[command(args_override_self = true)]
pub struct Cli {
    /// key=value file whose entries act as defaults for the flags.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy at one atom position, as JSON.
    Energy(EnergyArgs),
    /// Energy over a range of z0 or rho0, as CSV.
    Scan(ScanArgs),
    /// Run the invariant checks and report the worst residual of each.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryArg {
    Plane,
    Gsphere,
    Isphere,
    Bosshat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Numeric,
    Oracle,
    /// Third-order near-contact expansion (sphere and on-axis boss hat).
    Expansion3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitsArg {
    Si,
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    Cartesian,
    Cylindrical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanVar {
    Z0,
    Rho0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Normalize {
    None,
    #[value(name = "R3")]
    R3,
    #[value(name = "a3")]
    A3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sampling {
    Grid,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bc,
    Symmetry,
    Limits,
    Threeway,
    Expansion,
    All,
}

/// Geometry, atom and evaluation options shared by `energy` and `scan`.
#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    #[arg(long, value_enum)]
    pub geometry: GeometryArg,

    /// Sphere or boss-hat radius.
    #[arg(long)]
    pub radius: Option<f64>,

    /// Height of the atom above the plane, or above the sphere centre.
    #[arg(long, allow_hyphen_values = true)]
    pub z0: Option<f64>,

    /// Distance of the atom from the symmetry axis.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub rho0: f64,

    /// Three comma-separated variances <d_m²>.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["isotropic", "alpha"])]
    pub variances: Option<Vec<f64>>,

    /// Frame of --variances.
    #[arg(long, value_enum, default_value = "cylindrical")]
    pub frame: FrameArg,

    /// Isotropic atom with this total variance <d²>.
    #[arg(long, conflicts_with = "alpha")]
    pub isotropic: Option<f64>,

    /// Static polarizability of a single dominant transition.
    #[arg(long, requires = "omega10")]
    pub alpha: Option<f64>,

    /// Angular frequency of the dominant transition.
    #[arg(long, requires = "alpha")]
    pub omega10: Option<f64>,

    #[arg(long, value_enum, default_value = "si")]
    pub units: UnitsArg,

    #[arg(long, value_enum, default_value = "closed")]
    pub method: MethodArg,

    /// Initial finite-difference step, as a fraction of the surface distance.
    #[arg(long)]
    pub base_step: Option<f64>,

    /// Richardson halvings for the numeric method.
    #[arg(long)]
    pub levels: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct EnergyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,

    #[arg(long, value_enum, default_value = "z0")]
    pub var: ScanVar,

    #[arg(long, allow_hyphen_values = true)]
    pub from: f64,

    #[arg(long, allow_hyphen_values = true)]
    pub to: f64,

    #[arg(long, default_value_t = 100)]
    pub points: usize,

    /// Space the points logarithmically.
    #[arg(long)]
    pub log: bool,

    #[arg(long, value_enum, default_value = "none")]
    pub normalize: Normalize,

    /// Evenly spaced grid, or sorted uniform draws seeded by --seed.
    #[arg(long, value_enum, default_value = "grid")]
    pub sample: Sampling,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Output CSV; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}
