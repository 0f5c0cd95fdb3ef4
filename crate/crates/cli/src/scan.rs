use std::fmt::Write as _;
use std::fs;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::args::{MethodArg, Normalize, Sampling, ScanArgs, ScanVar};
use crate::problem::Problem;
use crate::CliError;

pub const HEADER: &str = "x,value,err,method";

/// `(x, value, err, method)`.
type Row = (f64, f64, f64, &'static str);

/// Abscissae of the scan, ascending.
pub fn abscissae(a: &ScanArgs) -> Result<Vec<f64>, CliError> {
    let (lo, hi, n) = (a.from, a.to, a.points);
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || n < 2 {
        return Err(CliError::Usage(format!(
            "need --from < --to and --points >= 2 (got {lo}, {hi}, {n})"
        )));
    }
    if a.log && lo <= 0.0 {
        return Err(CliError::Usage("--log needs --from > 0".into()));
    }
    let map = |t: f64| {
        if a.log {
            lo * (hi / lo).powf(t)
        } else {
            lo + (hi - lo) * t
        }
    };
    let mut xs: Vec<f64> = match a.sample {
        Sampling::Grid => (0..n).map(|i| map(i as f64 / (n - 1) as f64)).collect(),
        Sampling::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            (0..n).map(|_| map(rng.gen_range(0.0..=1.0))).collect()
        }
    };
    xs.sort_by(f64::total_cmp);
    Ok(xs)
}

fn method_label(p: &Problem) -> &'static str {
    match p.method_arg {
        MethodArg::Expansion3 => "expansion3",
        _ => "",
    }
}

/// CSV text of the scan; rows are computed in parallel and written in x order.
pub fn render(a: &ScanArgs, p: &Problem) -> Result<String, CliError> {
    let xs = abscissae(a)?;
    let base_z0 = a.problem.z0;
    if a.var == ScanVar::Rho0 && base_z0.is_none() {
        return Err(CliError::Usage("--var rho0 needs a fixed --z0".into()));
    }
    if a.normalize == Normalize::R3 && p.radius.is_none() {
        return Err(CliError::Usage("--normalize R3 needs a radius".into()));
    }
    let rows: Vec<Result<Row, CliError>> = xs
        .par_iter()
        .map(|&x| {
            let (rho0, z0) = match a.var {
                ScanVar::Z0 => (p.rho0, x),
                ScanVar::Rho0 => (x, base_z0.unwrap_or(f64::NAN)),
            };
            let e = p.evaluate(rho0, z0)?;
            let factor = match a.normalize {
                Normalize::None => 1.0,
                Normalize::R3 => p.radius.unwrap_or(1.0).powi(3),
                Normalize::A3 => p.gap(rho0, z0).powi(3),
            };
            let label = match method_label(p) {
                "" => e.method.name(),
                other => other,
            };
            Ok((x, e.value * factor, e.err_estimate * factor, label))
        })
        .collect();
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for row in rows {
        let (x, v, err, m) = row?;
        writeln!(out, "{x:.16e},{v:.16e},{err:.16e},{m}").expect("writing to a String cannot fail");
    }
    Ok(out)
}

pub fn run(a: &ScanArgs, out: &mut dyn std::io::Write) -> Result<(), CliError> {
    let p = Problem::from_args(&a.problem)?;
    let csv = render(a, &p)?;
    match &a.out {
        Some(path) => {
            fs::write(path, csv).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))
        }
        None => crate::emit(out, &csv),
    }
}
