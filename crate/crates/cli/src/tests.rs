use super::run;

struct Output {
    code: u8,
    stdout: Vec<u8>,
}

fn vdw(args: &[&str]) -> Output {
    let argv = std::iter::once("vdw")
        .chain(args.iter().copied())
        .map(Into::into)
        .collect();
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdout, &mut stderr);
    Output { code, stdout }
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn plane_energy_json() {
    let out = vdw(&[
        "energy",
        "--geometry",
        "plane",
        "--isotropic",
        "1",
        "--z0",
        "1",
        "--units",
        "reduced",
    ]);
    assert!(out.code == 0);
    let v = json(&out);
    assert!((v["energy"].as_f64().unwrap() + 1.0 / 12.0).abs() < 1e-15);
    assert_eq!(v["err_estimate"].as_f64(), Some(0.0));
    assert_eq!(v["method"], "closed_form");
    assert_eq!(v["units"], "reduced");
    assert_eq!(v["inputs"]["geometry"], "plane");
    assert_eq!(v["inputs"]["z0"].as_f64(), Some(1.0));
}

#[test]
fn sphere_closed_and_numeric_agree_within_reported_error() {
    let base = [
        "energy",
        "--geometry",
        "gsphere",
        "--radius",
        "1",
        "--z0",
        "2",
        "--isotropic",
        "1",
        "--units",
        "reduced",
    ];
    let closed = json(&vdw(&base));
    let mut args = base.to_vec();
    args.extend(["--method", "numeric"]);
    let numeric = json(&vdw(&args));
    let diff = (closed["energy"].as_f64().unwrap() - numeric["energy"].as_f64().unwrap()).abs();
    assert!(diff <= numeric["err_estimate"].as_f64().unwrap().max(1e-12));
    assert_eq!(numeric["method"], "numeric_ez");
}

#[test]
fn oracle_method_reports_error_estimate() {
    let v = json(&vdw(&[
        "energy",
        "--geometry",
        "bosshat",
        "--radius",
        "1",
        "--z0",
        "0.9",
        "--rho0",
        "0.7",
        "--variances",
        "0.5,0.2,0.3",
        "--units",
        "reduced",
        "--method",
        "oracle",
    ]));
    assert_eq!(v["method"], "oracle");
    assert!(v["err_estimate"].as_f64().unwrap() > 0.0);
}

#[test]
fn exit_codes() {
    let region = vdw(&[
        "energy",
        "--geometry",
        "bosshat",
        "--radius",
        "1",
        "--z0",
        "-0.5",
        "--isotropic",
        "1",
    ]);
    assert_eq!(region.code, (3));
    let inside = vdw(&[
        "energy",
        "--geometry",
        "gsphere",
        "--radius",
        "1",
        "--z0",
        "0.5",
        "--isotropic",
        "1",
    ]);
    assert_eq!(inside.code, (3));
    let bad = vdw(&[
        "energy",
        "--geometry",
        "torus",
        "--z0",
        "1",
        "--isotropic",
        "1",
    ]);
    assert_eq!(bad.code, (2));
    let missing = vdw(&[
        "energy",
        "--geometry",
        "bosshat",
        "--z0",
        "1",
        "--isotropic",
        "1",
    ]);
    assert_eq!(missing.code, (2));
    let window = vdw(&[
        "energy",
        "--geometry",
        "gsphere",
        "--radius",
        "1",
        "--z0",
        "3",
        "--isotropic",
        "1",
        "--method",
        "expansion3",
    ]);
    assert_eq!(window.code, (2));
    let unwritable = vdw(&[
        "scan",
        "--geometry",
        "plane",
        "--isotropic",
        "1",
        "--from",
        "1",
        "--to",
        "2",
        "--points",
        "3",
        "--out",
        "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(unwritable.code, (4));
}

#[test]
fn plane_scan_obeys_cubic_law() {
    let out = vdw(&[
        "scan",
        "--geometry",
        "plane",
        "--isotropic",
        "1",
        "--units",
        "reduced",
        "--from",
        "1",
        "--to",
        "10",
        "--points",
        "10",
    ]);
    assert!(out.code == 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,value,err,method"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f[3], "closed_form");
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 10);
    for w in rows.windows(2) {
        let expected = w[0].1 * (w[0].0 / w[1].0).powi(3);
        assert!(((w[1].1 - expected) / expected).abs() < 1e-13);
    }
}

#[test]
fn boss_hat_curve_is_monotone_attraction() {
    let out = vdw(&[
        "scan",
        "--geometry",
        "bosshat",
        "--radius",
        "1",
        "--variances",
        "0,0,1",
        "--units",
        "reduced",
        "--from",
        "1.05",
        "--to",
        "5",
        "--points",
        "200",
        "--normalize",
        "R3",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let values: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values.len(), 200);
    assert!(values.iter().all(|v| *v < 0.0));
    assert!(values.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn scan_uses_seventeen_significant_digits() {
    let out = vdw(&[
        "scan",
        "--geometry",
        "plane",
        "--isotropic",
        "1",
        "--units",
        "reduced",
        "--from",
        "1",
        "--to",
        "3",
        "--points",
        "2",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    let value = row.split(',').nth(1).unwrap();
    let mantissa = value.trim_start_matches('-').split('e').next().unwrap();
    assert_eq!(mantissa.replace('.', "").len(), 17);
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(
        &cfg,
        "# plane run\ngeometry = plane\nisotropic = 1\nunits = reduced\nz0 = 2\n",
    )
    .unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file = json(&vdw(&["energy", "--config", cfg]));
    assert!((from_file["energy"].as_f64().unwrap() + 1.0 / 96.0).abs() < 1e-15);
    let overridden = json(&vdw(&["energy", "--config", cfg, "--z0", "1"]));
    assert!((overridden["energy"].as_f64().unwrap() + 1.0 / 12.0).abs() < 1e-15);
}

#[test]
fn validate_suites_pass() {
    for suite in ["bc", "symmetry", "limits", "threeway", "expansion"] {
        let out = vdw(&["validate", "--suite", suite, "--seed", "42"]);
        let report = String::from_utf8_lossy(&out.stdout);
        assert_eq!(out.code, (0), "{suite}:\n{report}");
        assert!(report.contains("0 failed"));
    }
}
