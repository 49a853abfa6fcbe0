use approx::assert_abs_diff_eq;
use nalgebra::{Rotation3, Unit};
use proptest::prelude::*;
use pryce_spin::classical::*;
use pryce_spin::dirac::PryceKind;
use pryce_spin::{Error, Vec3};

fn b_field(b: f64, e: f64) -> FieldConfig {
    FieldConfig::new(Vec3::zeros(), Vec3::new(0.0, 0.0, b), e, 1.0).unwrap()
}

fn vec3() -> impl Strategy<Value = Vec3> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

fn velocity() -> impl Strategy<Value = Vec3> {
    vec3().prop_map(|v| v * 0.95 / v.norm().max(1.0))
}

/// Helix of a charge in B = B ẑ: the transverse momentum rotates as
/// dp/dt = −Ω×p with Ω = eB/(γ̄m), the spin identically (g = 2).
#[test]
fn helix_matches_closed_form() {
    let (e, b, m) = (-1.0, 0.8, 1.0);
    let v0 = Vec3::new(0.5, 0.0, 0.2);
    let s0 = Vec3::new(0.6, 0.0, 0.8);
    let gamma = 1.0 / (1.0 - v0.norm_squared()).sqrt();
    let w = e * b / (gamma * m);
    let period = std::f64::consts::TAU / w.abs();
    let steps = 3000;
    let traj = integrate(
        &Scenario::new(ClassicalState::new(Vec3::zeros(), v0, s0), b_field(b, e), period / 1000.0, steps)
            .with_sample_every(100),
    )
    .unwrap();
    let radius = v0.x / w.abs();
    for smp in &traj.samples {
        let t = smp.state.t;
        // rotation angle about +z is −w t
        let phi = -w * t;
        let rot = Rotation3::from_axis_angle(&Vec3::z_axis(), phi);
        let x = Vec3::new(radius * phi.sin(), radius * (1.0 - phi.cos()), v0.z * t);
        assert!((smp.state.x - x).norm() < 1e-9 * radius, "t = {t}: {}", (smp.state.x - x).norm());
        assert!((smp.state.v - rot * v0).norm() < 1e-9);
        assert!((smp.state.s - rot * s0).norm() < 1e-9);
        assert_abs_diff_eq!(smp.gamma, gamma, epsilon = 1e-12);
    }
}

#[test]
fn thomas_precession_in_pure_b() {
    let (e, b) = (-1.0, 0.7);
    let fields = b_field(b, e);
    for speed in [0.1, 0.5, 0.9] {
        let st = ClassicalState::new(Vec3::zeros(), Vec3::new(0.0, speed, 0.0), Vec3::x());
        let g = st.gamma().unwrap();
        let big_omega = Vec3::new(0.0, 0.0, e * b / g);
        let wt = thomas_omega(&acceleration(&st, &fields).unwrap(), &st.v).unwrap();
        assert!((wt - (g - 1.0) * big_omega).norm() < 1e-14);
        // orbital rotation vector is −Ω: the Thomas term turns against the orbit
        assert!(wt.dot(&(-big_omega)) < 0.0);
    }
}

#[test]
fn fprime_split_holds_along_a_gyrating_orbit() {
    let fields = FieldConfig::new(Vec3::new(0.0, 0.3, 0.1), Vec3::new(0.2, 0.0, 1.0), -1.0, 1.0).unwrap();
    let st = ClassicalState::new(Vec3::zeros(), Vec3::new(0.3, 0.0, 0.4), Vec3::new(0.0, 0.6, 0.8));
    let traj = integrate(&Scenario::new(st, fields, 0.01, 2000).with_sample_every(20)).unwrap();
    for smp in &traj.samples {
        let st = &smp.state;
        let a = acceleration(st, &fields).unwrap();
        let rhs = fprime(st, &fields).unwrap() / smp.gamma + thomas_omega(&a, &st.v).unwrap().cross(&st.s);
        assert!((bmt_rhs(st, &fields).unwrap() - rhs).norm() < 1e-14);
    }
}

#[test]
fn central_difference_converges_to_compact_form_when_gamma_drifts() {
    // The compact form is the exact derivative of δX_P, constant γ̄ or not.
    let fields = FieldConfig::new(Vec3::new(0.0, 0.3, 0.0), Vec3::new(0.0, 0.0, 1.0), -1.0, 1.0).unwrap();
    let st = ClassicalState::new(Vec3::zeros(), Vec3::new(0.3, 0.0, 0.2), Vec3::new(0.0, 0.6, 0.8));
    let errors: Vec<f64> = (0..3)
        .map(|l| {
            let k = 1usize << l;
            let sc = Scenario::new(st, fields, 0.02 / k as f64, 200 * k).with_sample_every(5);
            let traj = integrate(&sc).unwrap();
            traj.central_difference(|x| x.shift)
                .into_iter()
                .map(|(i, fd)| (fd - traj.samples[i].anomalous_velocity).norm())
                .fold(0.0, f64::max)
        })
        .collect();
    for w in errors.windows(2) {
        let order = (w[0] / w[1]).log2();
        assert!((1.5..=2.5).contains(&order), "{errors:?}");
    }
}

#[test]
fn rotating_the_setup_rotates_the_trajectory() {
    let rot = Rotation3::from_axis_angle(&Unit::new_normalize(Vec3::new(-1.0, 0.5, 2.0)), 1.1);
    let (e, b) = (Vec3::new(0.0, 0.2, 0.05), Vec3::new(0.1, 0.0, 0.9));
    let st = ClassicalState::new(Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.4, 0.1, 0.0), Vec3::new(0.0, 0.0, 1.0));
    let run = |r: &Rotation3<f64>| {
        let fields = FieldConfig::new(r * e, r * b, -1.0, 1.0).unwrap();
        let st = ClassicalState::new(r * st.x, r * st.v, r * st.s);
        integrate(&Scenario::new(st, fields, 0.01, 500).with_sample_every(50)).unwrap()
    };
    let plain = run(&Rotation3::identity());
    let turned = run(&rot);
    for (a, b) in plain.samples.iter().zip(&turned.samples) {
        assert!((rot * a.state.x - b.state.x).norm() < 1e-12);
        assert!((rot * a.anomalous_velocity - b.anomalous_velocity).norm() < 1e-13);
        for kind in PryceKind::ALL {
            assert!((rot * a.mass_center(kind) - b.mass_center(kind)).norm() < 1e-12);
        }
    }
}

#[test]
fn spin_norm_projection() {
    let fields = b_field(1.0, -1.0);
    let st = ClassicalState::new(Vec3::zeros(), Vec3::new(0.6, 0.0, 0.0), Vec3::new(0.6, 0.0, 0.8));
    let dt = std::f64::consts::TAU * 1.25 / 100.0;
    let drift = |norm: SpinNorm| {
        let traj = integrate(&Scenario::new(st, fields, dt, 1000).with_spin_norm(norm)).unwrap();
        traj.samples.iter().map(|x| (x.state.s.norm() - 1.0).abs()).fold(0.0, f64::max)
    };
    assert!(drift(SpinNorm::Projected) < 1e-14);
    let free = drift(SpinNorm::Free);
    assert!(free > 1e-9 && free < 1e-4, "{free}");
}

#[test]
fn step_guard_and_bad_input() {
    let fields = b_field(1.0, -1.0);
    let st = ClassicalState::new(Vec3::zeros(), Vec3::new(0.6, 0.0, 0.0), Vec3::z());
    assert!(matches!(integrate(&Scenario::new(st, fields, 0.5, 10)), Err(Error::StepTooLarge { .. })));
    assert!(integrate(&Scenario::new(st, fields, 0.01, 10).with_sample_every(0)).is_err());
    let fast = ClassicalState::new(Vec3::zeros(), Vec3::new(1.0, 0.0, 0.0), Vec3::z());
    assert!(matches!(fast.gamma(), Err(Error::Superluminal { .. })));
    assert!(FieldConfig::new(Vec3::zeros(), Vec3::zeros(), -1.0, 0.0).is_err());
}

#[test]
fn form_refusals() {
    let fields = FieldConfig::new(Vec3::new(0.0, 0.1, 0.0), Vec3::new(0.0, 0.0, 1.0), -1.0, 1.0).unwrap();
    let along_e = ClassicalState::new(Vec3::zeros(), Vec3::new(0.0, 0.5, 0.0), Vec3::x());
    assert!(matches!(anomalous_velocity_decomposed(&along_e, &fields), Err(Error::GammaNotConstant { .. })));
    assert!(matches!(
        anomalous_velocity_compact(&along_e, &fields).unwrap().regime,
        GammaRegime::Refused { .. }
    ));
    let tilted = ClassicalState::new(Vec3::zeros(), Vec3::new(0.5, 0.0, 0.0), Vec3::x());
    assert!(matches!(anomalous_velocity_thomas_form(&tilted, &fields), Err(Error::FPrimeNonzero { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn lab_spin_shift_equals_rest_spin_shift(s in vec3(), v in velocity()) {
        let lab = boost_spin(&s, &v).unwrap();
        let a = position_shift(&lab.s, &v, 1.0).unwrap();
        let b = rest_frame_shift(&s, &v, 1.0).unwrap();
        prop_assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn compact_matches_decomposed_when_e_is_orthogonal_to_v(
        v in velocity(), s in vec3(), b in vec3(), e_raw in vec3()
    ) {
        let e = e_raw - v * (e_raw.dot(&v) / v.norm_squared().max(1e-30));
        let fields = FieldConfig::new(e, b, -1.0, 1.0).unwrap();
        let st = ClassicalState::new(Vec3::zeros(), v, s);
        let compact = anomalous_velocity_compact(&st, &fields).unwrap().value;
        let (ve, vb) = anomalous_velocity_decomposed(&st, &fields).unwrap();
        prop_assert!((compact - ve - vb).norm() < 1e-13);
    }

    #[test]
    fn compact_minus_decomposed_is_the_energy_change_term(
        v in velocity(), s in vec3(), b in vec3(), e in vec3()
    ) {
        let e = e * 1e-7;
        let fields = FieldConfig::new(e, b, -1.0, 1.0).unwrap();
        let st = ClassicalState::new(Vec3::zeros(), v, s);
        let g = st.gamma().unwrap();
        let compact = anomalous_velocity_compact(&st, &fields).unwrap().value;
        let (ve, vb) = anomalous_velocity_decomposed(&st, &fields).unwrap();
        let extra = -(fields.charge / (2.0 * g)) * v.dot(&e) * s.cross(&v);
        prop_assert!((compact - ve - vb - extra).norm() < 1e-14);
    }

    #[test]
    fn bmt_preserves_spin_length(v in velocity(), s in vec3(), b in vec3(), e in vec3()) {
        let fields = FieldConfig::new(e, b, -1.0, 1.0).unwrap();
        let st = ClassicalState::new(Vec3::zeros(), v, s);
        prop_assert!(bmt_rhs(&st, &fields).unwrap().dot(&s).abs() < 1e-14);
    }
}
