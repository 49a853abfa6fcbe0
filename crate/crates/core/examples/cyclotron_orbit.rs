//! Electron in a uniform magnetic field: the integrated orbit against the
//! closed-form circle, spin precession at the cyclotron rate, and the three
//! mass centers circling with the orbit.

use pryce_spin::classical::{integrate, ClassicalState, FieldConfig, Scenario};
use pryce_spin::dirac::PryceKind;
use pryce_spin::Vec3;

fn main() -> pryce_spin::Result<()> {
    let (m, e, b): (f64, f64, f64) = (1.0, -1.0, 1.0);
    let v0: f64 = 0.6;
    let gamma = 1.0 / (1.0 - v0 * v0).sqrt();
    let omega = e.abs() * b / (gamma * m);
    let period = std::f64::consts::TAU / omega;
    let radius = gamma * m * v0 / (e.abs() * b);

    let fields = FieldConfig::new(Vec3::zeros(), Vec3::new(0.0, 0.0, b), e, m)?;
    let initial = ClassicalState::new(Vec3::zeros(), Vec3::new(v0, 0.0, 0.0), Vec3::new(0.6, 0.0, 0.8));
    let traj = integrate(&Scenario::new(initial, fields, period / 1000.0, 10_000).with_sample_every(500))?;

    // Negative charge, B along +z: counter-clockwise about the center (0, R).
    let exact = |t: f64| Vec3::new(radius * (omega * t).sin(), radius * (1.0 - (omega * t).cos()), 0.0);
    println!("R = {radius:.6}, T = {period:.6}");
    println!("{:>8} {:>12} {:>12} {:>14}", "t/T", "|x - exact|/R", "spin - v angle", "|X_d - x|");
    for smp in &traj.samples {
        let t = smp.state.t;
        let err = (smp.state.x - exact(t)).norm() / radius;
        let spin_angle = smp.state.s.y.atan2(smp.state.s.x) - smp.state.v.y.atan2(smp.state.v.x);
        let offset = (smp.mass_center(PryceKind::D) - smp.state.x).norm();
        println!("{:>8.3} {err:>12.3e} {spin_angle:>12.6} {offset:>14.6e}", t / period);
    }
    Ok(())
}
