use super::state::{dilation, ClassicalState, FieldConfig};
use crate::{Result, Vec3};

pub const G_FACTOR: f64 = 2.0;

/// dp/dt = e (E + v × B).
pub fn lorentz_rhs(state: &ClassicalState, fields: &FieldConfig) -> Vec3 {
    fields.charge * (fields.electric + state.v.cross(&fields.magnetic))
}

/// dv/dt from dp/dt with p = γ̄ m v: (F_p − v (v·F_p)) / (γ̄ m).
pub fn acceleration(state: &ClassicalState, fields: &FieldConfig) -> Result<Vec3> {
    let g = dilation(&state.v)?;
    let dp = lorentz_rhs(state, fields);
    Ok((dp - state.v * state.v.dot(&dp)) / (g * fields.mass))
}

/// F = m dv/dt.
pub fn lorentz_force(state: &ClassicalState, fields: &FieldConfig) -> Result<Vec3> {
    Ok(fields.mass * acceleration(state, fields)?)
}

/// ω = (e / m γ̄) [B + γ̄/(1+γ̄) E × v].
pub fn omega(fields: &FieldConfig, v: &Vec3) -> Result<Vec3> {
    let g = dilation(v)?;
    Ok(omega_with_gamma(fields, v, g))
}

pub(crate) fn omega_with_gamma(fields: &FieldConfig, v: &Vec3, g: f64) -> Vec3 {
    (fields.qm() / g) * (fields.magnetic + (g / (1.0 + g)) * fields.electric.cross(v))
}

/// ds/dt = s × ω.
pub fn bmt_rhs(state: &ClassicalState, fields: &FieldConfig) -> Result<Vec3> {
    Ok(state.s.cross(&omega(fields, &state.v)?))
}

/// ω_T = γ̄²/(γ̄+1) (dv/dt × v).
pub fn thomas_omega(dv_dt: &Vec3, v: &Vec3) -> Result<Vec3> {
    let g = dilation(v)?;
    Ok((g * g / (g + 1.0)) * dv_dt.cross(v))
}

/// B − γ̄/(1+γ̄) (v·B) v − v × E, the rest-frame magnetic field divided by γ̄.
pub fn effective_field(fields: &FieldConfig, v: &Vec3) -> Result<Vec3> {
    let g = dilation(v)?;
    let b = fields.magnetic;
    Ok(b - (g / (1.0 + g)) * v.dot(&b) * v - v.cross(&fields.electric))
}

/// F′ = (γ̄ g e / 2m) s × [B − γ̄/(1+γ̄)(v·B)v − v×E] with g = 2, so that
/// ds/dt = F′/γ̄ + ω_T × s.
pub fn fprime(state: &ClassicalState, fields: &FieldConfig) -> Result<Vec3> {
    let g = dilation(&state.v)?;
    let coeff = g * G_FACTOR * fields.charge / (2.0 * fields.mass);
    Ok(coeff * state.s.cross(&effective_field(fields, &state.v)?))
}
