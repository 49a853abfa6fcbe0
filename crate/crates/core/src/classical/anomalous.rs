use super::equations::{acceleration, effective_field, fprime, lorentz_force, omega, thomas_omega};
use super::state::{boost_spin, dilation, ClassicalState, FieldConfig};
use crate::dirac::PryceKind;
use crate::{Error, Result, Vec3};

/// |e E·v| / m² above which constant γ̄ is no longer assumed silently.
pub const GAMMA_WARN_RATE: f64 = 1e-9;
/// |e E·v| / m² above which the decomposed form is refused.
pub const GAMMA_REFUSE_RATE: f64 = 1e-6;
/// Largest admissible sin(angle) between s and the effective field for the
/// Thomas form, i.e. |F′| / ((γ̄|e|/m)|s||B_eff|).
pub const FPRIME_TOLERANCE: f64 = 1e-10;

/// How well the state satisfies dγ̄/dt = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaRegime {
    Constant,
    /// Energy changes at rate `rate` = |e E·v| / m², above the warning level.
    Drifting { rate: f64 },
    /// Above the refusal level.
    Refused { rate: f64 },
}

impl GammaRegime {
    pub fn is_constant(&self) -> bool {
        matches!(self, GammaRegime::Constant)
    }
}

pub fn gamma_regime(state: &ClassicalState, fields: &FieldConfig) -> GammaRegime {
    let rate = (fields.charge * fields.electric.dot(&state.v)).abs() / (fields.mass * fields.mass);
    if rate > GAMMA_REFUSE_RATE {
        GammaRegime::Refused { rate }
    } else if rate > GAMMA_WARN_RATE {
        GammaRegime::Drifting { rate }
    } else {
        GammaRegime::Constant
    }
}

/// Anomalous velocity with the constant-γ̄ assessment of the state it was
/// evaluated on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnomalousVelocity {
    pub value: Vec3,
    pub regime: GammaRegime,
}

/// δX_P = (1/2m) S × v with the lab-frame spin S.
pub fn position_shift(lab_spin: &Vec3, v: &Vec3, m: f64) -> Result<Vec3> {
    dilation(v)?;
    Ok(lab_spin.cross(v) / (2.0 * m))
}

/// (1/2m) s × v with the rest-frame spin. Equal to [`position_shift`] of the
/// boosted spin because the boost only adds a component along v.
pub fn rest_frame_shift(s: &Vec3, v: &Vec3, m: f64) -> Result<Vec3> {
    dilation(v)?;
    Ok(s.cross(v) / (2.0 * m))
}

/// X_P = x + f_P(γ̄) δX_P.
pub fn mass_center(state: &ClassicalState, m: f64, kind: PryceKind) -> Result<Vec3> {
    let g = dilation(&state.v)?;
    let lab = boost_spin(&state.s, &state.v)?;
    let shift = position_shift(&lab.s, &state.v, m)?;
    Ok(state.x + kind.fp(g)? * shift)
}

/// V_P = (1/2m) [(s·v) ω − (ω·v) s + s × F/m] with F = m dv/dt.
///
/// F carries the full Lorentz acceleration, so this is d/dt of (1/2m) s×v
/// even when γ̄ drifts; the regime is reported alongside.
pub fn anomalous_velocity_compact(state: &ClassicalState, fields: &FieldConfig) -> Result<AnomalousVelocity> {
    let regime = gamma_regime(state, fields);
    if state.s == Vec3::zeros() {
        dilation(&state.v)?;
        return Ok(AnomalousVelocity { value: Vec3::zeros(), regime });
    }
    let m = fields.mass;
    let (s, v) = (&state.s, &state.v);
    let w = omega(fields, v)?;
    let f = lorentz_force(state, fields)?;
    let value = (s.dot(v) * w - w.dot(v) * s + s.cross(&f) / m) / (2.0 * m);
    Ok(AnomalousVelocity { value, regime })
}

/// (V_P(E), V_P(B)):
/// V_P(E) = (e / 2m²γ̄) [s − γ̄/(1+γ̄)(s·v) v] × E,
/// V_P(B) = (e / 2m²γ̄) [(s·B) v − (v·B) s].
pub fn anomalous_velocity_decomposed(state: &ClassicalState, fields: &FieldConfig) -> Result<(Vec3, Vec3)> {
    if let GammaRegime::Refused { rate } = gamma_regime(state, fields) {
        return Err(Error::GammaNotConstant { drift: rate, limit: GAMMA_REFUSE_RATE });
    }
    let g = dilation(&state.v)?;
    let (s, v) = (&state.s, &state.v);
    let (e_field, b_field) = (&fields.electric, &fields.magnetic);
    let coeff = fields.charge / (2.0 * fields.mass * fields.mass * g);
    let from_e = coeff * (s - (g / (1.0 + g)) * s.dot(v) * v).cross(e_field);
    let from_b = coeff * (s.dot(b_field) * v - v.dot(b_field) * s);
    Ok((from_e, from_b))
}

/// V_P = (1/2m) [−(s·v) ω_T + s × F/m], valid only where F′ = 0.
pub fn anomalous_velocity_thomas_form(state: &ClassicalState, fields: &FieldConfig) -> Result<Vec3> {
    let g = dilation(&state.v)?;
    if state.s == Vec3::zeros() {
        return Ok(Vec3::zeros());
    }
    let fp = fprime(state, fields)?;
    let scale = g * fields.qm().abs() * state.s.norm() * effective_field(fields, &state.v)?.norm();
    let tolerance = FPRIME_TOLERANCE * scale;
    if fp.norm() > tolerance {
        return Err(Error::FPrimeNonzero { norm: fp.norm(), tolerance });
    }
    let m = fields.mass;
    let a = acceleration(state, fields)?;
    let wt = thomas_omega(&a, &state.v)?;
    let (s, v) = (&state.s, &state.v);
    Ok((-s.dot(v) * wt + s.cross(&a)) / (2.0 * m))
}
