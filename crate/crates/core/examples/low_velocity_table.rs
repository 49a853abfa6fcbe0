//! Slow electron in a pure electric field: the measured anomalous velocity of
//! each mass center against f_P(1)·(e/2m²) s×E.

use pryce_spin::classical::{integrate, ClassicalState, FieldConfig, Scenario};
use pryce_spin::dirac::PryceKind;
use pryce_spin::Vec3;

fn main() -> pryce_spin::Result<()> {
    let (m, e) = (1.0, -1.0);
    let field = Vec3::new(1e-4, 0.0, 0.0);
    let fields = FieldConfig::new(field, Vec3::zeros(), e, m)?;
    let initial = ClassicalState::new(Vec3::zeros(), Vec3::new(0.0, 2e-4, 0.0), Vec3::new(0.0, 0.0, 1.0));
    let traj = integrate(&Scenario::new(initial, fields, 0.02, 100))?;

    let i = traj.samples.len() / 2;
    let smp = &traj.samples[i];
    let base = e / (2.0 * m * m) * smp.state.s.cross(&field);
    println!("t = {:.3}, gamma - 1 = {:.3e}", smp.state.t, smp.gamma - 1.0);
    println!("{:<6}{:>8}{:>16}{:>16}{:>12}", "kind", "f_P(1)", "measured y", "predicted y", "rel. dev");
    for kind in PryceKind::ALL {
        let fd = traj
            .central_difference(|x| x.mass_center(kind) - x.state.x)
            .into_iter()
            .find(|(j, _)| *j == i)
            .map(|(_, d)| d)
            .expect("interior sample");
        let predicted = kind.fp(1.0)? * base;
        let dev = (fd - predicted).norm() / base.norm();
        println!("{:<6}{:>8.3}{:>16.8e}{:>16.8e}{dev:>12.2e}", kind.label(), kind.fp(1.0)?, fd.y, predicted.y);
    }
    Ok(())
}
