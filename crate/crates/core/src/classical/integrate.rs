use nalgebra::SVector;

use super::anomalous::{anomalous_velocity_compact, position_shift};
use super::equations::omega_with_gamma;
use super::state::{boost_spin, dilation, ClassicalState, FieldConfig, LabSpin};
use crate::dirac::PryceKind;
use crate::{Error, Result, Vec3};

/// Upper bound on dt × (fastest rate in the problem).
pub const STEP_GUARD: f64 = 0.1;

type Phase = SVector<f64, 9>;

/// What to do with |s| between steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpinNorm {
    /// Rescale s to its initial length after every step. RK4 alone loses
    /// |s| at a rate of (|ω|dt)⁶/144 per step.
    #[default]
    Projected,
    /// Plain RK4 on all nine components.
    Free,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub initial: ClassicalState,
    pub fields: FieldConfig,
    pub dt: f64,
    pub steps: usize,
    pub sample_every: usize,
    pub spin_norm: SpinNorm,
}

impl Scenario {
    pub fn new(initial: ClassicalState, fields: FieldConfig, dt: f64, steps: usize) -> Self {
        Scenario { initial, fields, dt, steps, sample_every: 1, spin_norm: SpinNorm::default() }
    }

    pub fn with_sample_every(mut self, every: usize) -> Self {
        self.sample_every = every;
        self
    }

    pub fn with_spin_norm(mut self, spin_norm: SpinNorm) -> Self {
        self.spin_norm = spin_norm;
        self
    }

    /// max(|ω|, |e||B|/m, |e||E|/m) at the initial state.
    pub fn fastest_rate(&self) -> Result<f64> {
        let f = &self.fields;
        let w = super::equations::omega(f, &self.initial.v)?.norm();
        let qm = f.qm().abs();
        Ok(w.max(qm * f.magnetic.norm()).max(qm * f.electric.norm()))
    }
}

/// One trajectory sample with its derived quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub state: ClassicalState,
    pub gamma: f64,
    pub lab_spin: LabSpin,
    /// δX_P
    pub shift: Vec3,
    /// X_P for c, d, e in that order
    pub mass_centers: [Vec3; 3],
    /// analytic V_P (compact form)
    pub anomalous_velocity: Vec3,
}

impl Sample {
    fn derive(state: ClassicalState, fields: &FieldConfig) -> Result<Self> {
        let gamma = dilation(&state.v)?;
        let lab_spin = boost_spin(&state.s, &state.v)?;
        let shift = position_shift(&lab_spin.s, &state.v, fields.mass)?;
        let mut mass_centers = [Vec3::zeros(); 3];
        for (slot, kind) in mass_centers.iter_mut().zip(PryceKind::ALL) {
            *slot = state.x + kind.fp(gamma)? * shift;
        }
        let anomalous_velocity = anomalous_velocity_compact(&state, fields)?.value;
        Ok(Sample { state, gamma, lab_spin, shift, mass_centers, anomalous_velocity })
    }

    pub fn mass_center(&self, kind: PryceKind) -> Vec3 {
        self.mass_centers[kind as usize]
    }

    /// γ̄ m
    pub fn energy(&self, m: f64) -> f64 {
        self.gamma * m
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub fields: FieldConfig,
    /// time between consecutive samples
    pub interval: f64,
    pub samples: Vec<Sample>,
}

impl Trajectory {
    /// Second-order central differences of `f` at every interior sample,
    /// returned as (sample index, derivative).
    pub fn central_difference(&self, f: impl Fn(&Sample) -> Vec3) -> Vec<(usize, Vec3)> {
        let h = self.interval;
        self.samples
            .windows(3)
            .enumerate()
            .map(|(i, w)| (i + 1, (f(&w[2]) - f(&w[0])) / (2.0 * h)))
            .collect()
    }

    pub fn last(&self) -> &Sample {
        self.samples.last().expect("trajectory always holds the initial sample")
    }
}

fn velocity_of(p: &Vec3, m: f64) -> (Vec3, f64) {
    let g = (1.0 + p.norm_squared() / (m * m)).sqrt();
    (p / (g * m), g)
}

fn rhs(y: &Phase, f: &FieldConfig) -> Phase {
    let p = Vec3::new(y[3], y[4], y[5]);
    let s = Vec3::new(y[6], y[7], y[8]);
    let (v, g) = velocity_of(&p, f.mass);
    let dp = f.charge * (f.electric + v.cross(&f.magnetic));
    let ds = s.cross(&omega_with_gamma(f, &v, g));
    Phase::from_column_slice(&[v.x, v.y, v.z, dp.x, dp.y, dp.z, ds.x, ds.y, ds.z])
}

fn rk4_step(y: &Phase, dt: f64, f: &FieldConfig) -> Phase {
    let k1 = rhs(y, f);
    let k2 = rhs(&(y + k1 * (0.5 * dt)), f);
    let k3 = rhs(&(y + k2 * (0.5 * dt)), f);
    let k4 = rhs(&(y + k3 * dt), f);
    y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0)
}

/// Fixed-step classical RK4 on (x, p, s) with p = γ̄ m v.
pub fn integrate(scenario: &Scenario) -> Result<Trajectory> {
    let Scenario { initial, fields, dt, steps, sample_every, spin_norm } = scenario;
    if !(dt.is_finite() && *dt > 0.0) {
        return Err(Error::Config(format!("dt must be positive, got {dt}")));
    }
    if *sample_every == 0 {
        return Err(Error::Config("sample_every must be at least 1".into()));
    }
    let product = dt * scenario.fastest_rate()?;
    if product >= STEP_GUARD {
        return Err(Error::StepTooLarge { product, limit: STEP_GUARD });
    }

    let p0 = initial.momentum(fields.mass)?;
    let s_norm = initial.s.norm();
    let mut y = Phase::from_column_slice(&[
        initial.x.x, initial.x.y, initial.x.z, p0.x, p0.y, p0.z, initial.s.x, initial.s.y, initial.s.z,
    ]);
    let unpack = |y: &Phase, step: usize| -> Result<ClassicalState> {
        let p = Vec3::new(y[3], y[4], y[5]);
        let (v, _) = velocity_of(&p, fields.mass);
        dilation(&v).map_err(|e| Error::IntegrationAborted { step, source: Box::new(e) })?;
        Ok(ClassicalState {
            t: initial.t + step as f64 * dt,
            x: Vec3::new(y[0], y[1], y[2]),
            v,
            s: Vec3::new(y[6], y[7], y[8]),
        })
    };

    let mut samples = Vec::with_capacity(steps / sample_every + 1);
    samples.push(Sample::derive(unpack(&y, 0)?, fields)?);
    for step in 1..=*steps {
        y = rk4_step(&y, *dt, fields);
        if *spin_norm == SpinNorm::Projected && s_norm > 0.0 {
            let s = y.fixed_rows::<3>(6).norm();
            y.fixed_rows_mut::<3>(6).scale_mut(s_norm / s);
        }
        if !y.iter().all(|c| c.is_finite()) {
            return Err(Error::IntegrationAborted {
                step,
                source: Box::new(Error::Superluminal { speed: f64::NAN }),
            });
        }
        let state = unpack(&y, step)?;
        if step % sample_every == 0 {
            samples.push(Sample::derive(state, fields)?);
        }
    }
    Ok(Trajectory { fields: *fields, interval: dt * *sample_every as f64, samples })
}
