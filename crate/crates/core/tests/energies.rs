use std::f64::consts::PI;

use proptest::prelude::*;
use vdw_core::closed_form::*;
use vdw_core::ez::mixed_second_along;
use vdw_core::oracle::{default_schedule, extrapolated_energy};
use vdw_core::series::{bosshat_sphere_exponent, near_contact_coefficients, sphere_bracket};
use vdw_core::*;

const RED: UnitSystem = UnitSystem::Reduced;

fn log_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
}

#[test]
fn numeric_plane_grid() {
    let atom = AtomSpec::new(DipoleVariances::cartesian(0.1, 0.3, 0.6).unwrap());
    for z in log_grid(0.1, 100.0, 50) {
        let n = energy_numeric(
            &GeometryConfig::Plane,
            &atom,
            &Vec3::new(0.4, -1.0, z),
            &DiffSettings::default(),
            RED,
        )
        .unwrap();
        let c = u_plane(&atom.variances, z, RED).unwrap();
        assert!(relative_difference(n.value, c.value) < 1e-8, "z0 = {z}");
        assert!(n.err_estimate >= 0.0);
    }
}

#[test]
fn numeric_sphere_grids() {
    let atom = AtomSpec::isotropic(1.0).unwrap();
    for radius in [0.5, 1.0, 4.0] {
        let gs = GeometryConfig::grounded_sphere(radius).unwrap();
        let is = GeometryConfig::isolated_sphere(radius).unwrap();
        for ratio in log_grid(1.05, 50.0, 50) {
            let z = ratio * radius;
            let r0 = Vec3::new(0.0, 0.0, z);
            let ng = energy_numeric(&gs, &atom, &r0, &DiffSettings::default(), RED)
                .unwrap()
                .value;
            let ni = energy_numeric(&is, &atom, &r0, &DiffSettings::default(), RED)
                .unwrap()
                .value;
            let cg = u_grounded_sphere(1.0, z, radius, RED).unwrap().value;
            let ci = u_isolated_sphere(1.0, z, radius, RED).unwrap().value;
            assert!(
                relative_difference(ng, cg) < 1e-7,
                "grounded z0/R = {ratio}"
            );
            assert!(
                relative_difference(ni, ci) < 1e-7,
                "isolated z0/R = {ratio}"
            );
        }
    }
}

#[test]
fn sphere_energy_depends_only_on_distance() {
    let g = GeometryConfig::grounded_sphere(1.0).unwrap();
    let atom = AtomSpec::isotropic(1.0).unwrap();
    let on_axis = energy_numeric(
        &g,
        &atom,
        &Vec3::new(0.0, 0.0, 2.5),
        &DiffSettings::default(),
        RED,
    )
    .unwrap();
    let off = energy_numeric(
        &g,
        &atom,
        &Vec3::from_spherical(2.5, 1.1, 2.0),
        &DiffSettings::default(),
        RED,
    )
    .unwrap();
    assert!(relative_difference(on_axis.value, off.value) < 1e-9);
}

#[test]
fn boss_hat_numeric_on_axis() {
    let g = GeometryConfig::boss_hat(1.0).unwrap();
    let atom = AtomSpec::isotropic(1.0).unwrap();
    let n = energy_numeric(
        &g,
        &atom,
        &Vec3::new(0.0, 0.0, 1.5),
        &DiffSettings::default(),
        RED,
    )
    .unwrap();
    let c = u_bosshat_on_axis_isotropic(1.0, 1.5, 1.0, RED).unwrap();
    assert!(relative_difference(n.value, c.value) < 1e-7);
}

#[test]
fn oracle_spot_checks() {
    let iso = AtomSpec::isotropic(1.0).unwrap();
    let cases: Vec<(GeometryConfig, Vec3, f64)> = vec![
        (
            GeometryConfig::Plane,
            Vec3::new(0.0, 0.0, 2.0),
            u_plane(&iso.variances, 2.0, RED).unwrap().value,
        ),
        (
            GeometryConfig::grounded_sphere(1.0).unwrap(),
            Vec3::new(0.0, 0.0, 3.0),
            u_grounded_sphere(1.0, 3.0, 1.0, RED).unwrap().value,
        ),
        (
            GeometryConfig::isolated_sphere(1.0).unwrap(),
            Vec3::new(0.0, 0.0, 1.3),
            u_isolated_sphere(1.0, 1.3, 1.0, RED).unwrap().value,
        ),
    ];
    for (g, r0, exact) in cases {
        let e = extrapolated_energy(&g, &iso, &r0, &default_schedule(&g, &r0), RED).unwrap();
        assert!(relative_difference(e.value, exact) < 1e-5, "{g}");
    }
}

#[test]
fn oracle_certifies_boss_hat_on_and_off_axis() {
    let v = DipoleVariances::cylindrical(0.5, 0.2, 0.3).unwrap();
    let atom = AtomSpec::new(v);
    let g = GeometryConfig::boss_hat(1.0).unwrap();
    for (rho, z) in [(0.0, 1.4), (0.7, 0.9), (0.7, 2.0)] {
        let r0 = Vec3::new(rho, 0.0, z);
        let e = extrapolated_energy(&g, &atom, &r0, &default_schedule(&g, &r0), RED).unwrap();
        let c = u_bosshat(&v, rho, z, 1.0, RED).unwrap();
        assert!(
            relative_difference(e.value, c.value) < 1e-5,
            "rho0 = {rho}, z0 = {z}"
        );
    }
}

#[test]
fn limits() {
    let iso = DipoleVariances::isotropic(1.0).unwrap();
    let v = DipoleVariances::cylindrical(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0).unwrap();
    let bh = u_bosshat(&v, 0.3, 1.0, 1e-6, RED).unwrap().value;
    assert!(relative_difference(bh, u_plane(&iso, 1.0, RED).unwrap().value) < 1e-5);

    let a = 1e-3;
    let sphere = u_grounded_sphere_gap(1.0, a, 1.0, RED).unwrap().value;
    assert!(relative_difference(sphere, u_plane(&iso, a, RED).unwrap().value) < 3e-3);
}

#[test]
fn expansion_coefficients() {
    let c = near_contact_coefficients(sphere_bracket).unwrap();
    assert!((c[3] - SPHERE_SERIES[3]).abs() < 1e-3);
    let p = bosshat_sphere_exponent().unwrap();
    assert!(p >= 3.0 - 0.05);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn grounded_sphere_attracts_more_than_isolated(ratio in 1.001..200.0f64, radius in 0.01..100.0f64) {
        let z = ratio * radius;
        let g = u_grounded_sphere(1.0, z, radius, RED).unwrap().value;
        let i = u_isolated_sphere(1.0, z, radius, RED).unwrap().value;
        prop_assert!(g <= i && i < 0.0);
    }

    #[test]
    fn large_sphere_approaches_plane(t in 1e-5..0.1f64) {
        let iso = DipoleVariances::isotropic(1.0).unwrap();
        let s = u_grounded_sphere_gap(1.0, t, 1.0, RED).unwrap().value;
        let p = u_plane(&iso, t, RED).unwrap().value;
        prop_assert!((s / p - 1.0).abs() <= 2.0 * t);
    }

    #[test]
    fn plane_energy_scales_as_inverse_cube(z in 0.01..100.0f64, k in 0.1..10.0f64) {
        let iso = DipoleVariances::isotropic(1.0).unwrap();
        let a = u_plane(&iso, z, RED).unwrap().value;
        let b = u_plane(&iso, k * z, RED).unwrap().value;
        prop_assert!(relative_difference(a, b * k.powi(3)) < 1e-13);
    }

    #[test]
    fn boss_hat_energy_is_azimuth_independent(rho in 0.0..3.0f64, z in 0.05..3.0f64, phi in -3.1..3.1f64) {
        prop_assume!(rho * rho + z * z > 1.05);
        let g = GeometryConfig::boss_hat(1.0).unwrap();
        let atom = AtomSpec::new(DipoleVariances::cylindrical(0.5, 0.2, 0.3).unwrap());
        let a = energy_numeric(&g, &atom, &Vec3::from_cylindrical(rho, 0.0, z), &DiffSettings::default(), RED).unwrap();
        let b = energy_numeric(&g, &atom, &Vec3::from_cylindrical(rho, phi, z), &DiffSettings::default(), RED).unwrap();
        prop_assert!(relative_difference(a.value, b.value) < 1e-9);
    }

    #[test]
    fn xi_functions_match_numeric_derivatives(rho in 0.0..3.0f64, z in 0.1..3.0f64, phi in -3.1..3.1f64) {
        prop_assume!(rho * rho + z * z > 1.1);
        let g = GeometryConfig::boss_hat(1.0).unwrap();
        let green = build_green(&g);
        let r0 = Vec3::from_cylindrical(rho, phi, z);
        let xi = xi_functions(1.0, rho, z).unwrap();
        let axes = vdw_core::Frame::CylindricalLocal.axes(&r0);
        for (axis, target) in axes.iter().zip([xi.xi_rho, xi.xi_phi, xi.xi_z]) {
            let m = mixed_second_along(&green, &g, &r0, axis, &DiffSettings::default()).unwrap().value;
            let from_numeric = -32.0 * PI * z.powi(3) * m;
            prop_assert!(relative_difference(from_numeric, target) < 1e-6, "{from_numeric} vs {target}");
        }
    }

    #[test]
    fn closed_numeric_oracle_agree(rho in 0.0..2.0f64, z in 0.3..2.5f64) {
        prop_assume!(rho * rho + z * z > 1.2);
        let g = GeometryConfig::boss_hat(1.0).unwrap();
        let v = DipoleVariances::cylindrical(0.3, 0.3, 0.4).unwrap();
        let atom = AtomSpec::new(v);
        let r0 = Vec3::new(rho, 0.0, z);
        let c = u_bosshat(&v, rho, z, 1.0, RED).unwrap().value;
        let n = energy_numeric(&g, &atom, &r0, &DiffSettings::default(), RED).unwrap().value;
        let o = extrapolated_energy(&g, &atom, &r0, &default_schedule(&g, &r0), RED).unwrap().value;
        prop_assert!(relative_difference(c, n) < 1e-5);
        prop_assert!(relative_difference(c, o) < 1e-5);
        prop_assert!(relative_difference(n, o) < 1e-5);
    }
}
