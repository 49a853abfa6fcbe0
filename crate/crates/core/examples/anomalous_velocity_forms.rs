//! The anomalous velocity V_P in its compact, decomposed and Thomas forms,
//! and when each form applies.

use pryce_spin::classical::{
    anomalous_velocity_compact, anomalous_velocity_decomposed, anomalous_velocity_thomas_form, effective_field,
    fprime, ClassicalState, FieldConfig,
};
use pryce_spin::Vec3;

fn show(label: &str, state: &ClassicalState, fields: &FieldConfig) -> pryce_spin::Result<()> {
    println!("{label}");
    let compact = anomalous_velocity_compact(state, fields)?;
    println!("  compact     {:?}  ({:?})", compact.value.as_slice(), compact.regime);
    match anomalous_velocity_decomposed(state, fields) {
        Ok((ve, vb)) => println!("  decomposed  {:?}  |diff| {:.2e}", (ve + vb).as_slice(), (ve + vb - compact.value).norm()),
        Err(e) => println!("  decomposed  refused: {e}"),
    }
    println!("  |F'| = {:.3e}", fprime(state, fields)?.norm());
    match anomalous_velocity_thomas_form(state, fields) {
        Ok(vt) => println!("  thomas      {:?}  |diff| {:.2e}", vt.as_slice(), (vt - compact.value).norm()),
        Err(e) => println!("  thomas      refused: {e}"),
    }
    Ok(())
}

fn main() -> pryce_spin::Result<()> {
    let crossed = FieldConfig::new(Vec3::new(0.0, 0.01, 0.0), Vec3::new(0.0, 0.0, 0.02), -1.0, 1.0)?;
    let state = ClassicalState::new(Vec3::zeros(), Vec3::new(0.3, 0.0, 0.0), Vec3::new(0.0, 0.0, 0.5));
    show("crossed fields, E.v = 0", &state, &crossed)?;

    let along_e = ClassicalState::new(Vec3::zeros(), Vec3::new(0.0, 0.3, 0.0), Vec3::new(0.0, 0.0, 0.5));
    show("crossed fields, v along E (gamma changing)", &along_e, &crossed)?;

    let b = FieldConfig::new(Vec3::zeros(), Vec3::new(0.0, 0.0, 0.5), -1.0, 1.0)?;
    let v = Vec3::new(0.4, 0.0, 0.3);
    let s = effective_field(&b, &v)?.normalize();
    show("pure B, spin along the effective field", &ClassicalState::new(Vec3::zeros(), v, s), &b)
}
