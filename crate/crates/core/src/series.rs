//! Least-squares power-series fits used to read off expansion coefficients
//! and scaling exponents from exact closed forms.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};

use crate::closed_form::{u_bosshat_on_axis_isotropic, u_grounded_sphere};
use crate::error::{Result, VdwError};
use crate::units::UnitSystem;

/// Fit window for near-contact coefficients.
pub const FIT_WINDOW: (f64, f64) = (1e-4, 1e-2);

/// Coefficients `c_0..=c_degree` of the polynomial minimising
/// `Σ (f(s_i) - Σ c_k s_i^k)²` over `n` points evenly spread on `[lo, hi]`.
///
/// The fit runs in `t = s/hi` so the Vandermonde columns stay O(1).
pub fn fit_power_series<F>(f: F, lo: f64, hi: f64, n: usize, degree: usize) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(lo < hi && hi > 0.0) || n <= degree {
        return Err(VdwError::InvalidParameter(format!(
            "need lo < hi and more points than coefficients (lo = {lo}, hi = {hi}, n = {n}, degree = {degree})"
        )));
    }
    let mut a = DMatrix::<f64>::zeros(n, degree + 1);
    let mut b = DVector::<f64>::zeros(n);
    for i in 0..n {
        let s = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let t = s / hi;
        let mut p = 1.0;
        for k in 0..=degree {
            a[(i, k)] = p;
            p *= t;
        }
        b[i] = f(s)?;
    }
    let svd = a.svd(true, true);
    let c = svd
        .solve(&b, 1e-14)
        .map_err(|e| VdwError::InvalidParameter(format!("least-squares solve failed: {e}")))?;
    Ok(c.iter()
        .enumerate()
        .map(|(k, ck)| ck / hi.powi(k as i32))
        .collect())
}

/// Bracket `B(s)` defined by `U = -<d²>/(48π ε₀ (z0-R)³) · B(s)`, unit sphere.
pub fn sphere_bracket(s: f64) -> Result<f64> {
    let u = UnitSystem::Reduced;
    let e = u_grounded_sphere(1.0, 1.0 + s, 1.0, u)?.value;
    Ok(-e * 48.0 * PI * u.epsilon0() * s.powi(3))
}

/// Same bracket for the on-axis boss hat with an isotropic atom.
pub fn bosshat_bracket(s: f64) -> Result<f64> {
    let u = UnitSystem::Reduced;
    let e = u_bosshat_on_axis_isotropic(1.0, 1.0 + s, 1.0, u)?.value;
    Ok(-e * 48.0 * PI * u.epsilon0() * s.powi(3))
}

/// Degree-6 fit of a bracket over [`FIT_WINDOW`]; returns `c_0..=c_6`.
pub fn near_contact_coefficients<F>(bracket: F) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    fit_power_series(bracket, FIT_WINDOW.0, FIT_WINDOW.1, 201, 6)
}

/// Slope of the least-squares line through `(ln x, ln |y|)`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len().min(ys.len()) as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.abs().ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Exponent `p` of `U_bosshat/U_sphere - 1 ~ s^p` on the axis, from a
/// log-log fit over `s ∈ [1e-3, 1e-2]`.
pub fn bosshat_sphere_exponent() -> Result<f64> {
    let n = 25;
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for i in 0..n {
        let s = 1e-3 * 10f64.powf(i as f64 / (n - 1) as f64);
        xs.push(s);
        ys.push(bosshat_bracket(s)? / sphere_bracket(s)? - 1.0);
    }
    Ok(loglog_slope(&xs, &ys))
}
