//! Classical point-electron dynamics: Lorentz force, BMT spin precession,
//! the position shift of the Pryce mass centers and the anomalous velocity.
//!
//! The g factor is fixed at 2 everywhere.

mod anomalous;
mod equations;
mod integrate;
mod state;

pub use anomalous::{
    anomalous_velocity_compact, anomalous_velocity_decomposed, anomalous_velocity_thomas_form,
    gamma_regime, mass_center, position_shift, rest_frame_shift, AnomalousVelocity, GammaRegime,
    FPRIME_TOLERANCE, GAMMA_REFUSE_RATE, GAMMA_WARN_RATE,
};
pub use equations::{
    acceleration, bmt_rhs, effective_field, fprime, lorentz_force, lorentz_rhs, omega, thomas_omega,
    G_FACTOR,
};
pub use integrate::{integrate, Sample, Scenario, SpinNorm, Trajectory, STEP_GUARD};
pub use state::{boost_spin, dilation, unboost_spin, ClassicalState, FieldConfig, LabSpin, SPEED_LIMIT};
