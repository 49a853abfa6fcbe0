use serde::{Deserialize, Serialize};

use crate::{Error, Result, Vec3};

/// Speeds at or above this are rejected: γ̄ would be ~7e5 or worse.
pub const SPEED_LIMIT: f64 = 1.0 - 1e-12;

/// Point electron at time `t`: canonical position, velocity and rest-frame
/// polarization `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalState {
    pub t: f64,
    pub x: Vec3,
    pub v: Vec3,
    pub s: Vec3,
}

impl ClassicalState {
    pub fn new(x: Vec3, v: Vec3, s: Vec3) -> Self {
        ClassicalState { t: 0.0, x, v, s }
    }

    pub fn gamma(&self) -> Result<f64> {
        dilation(&self.v)
    }

    /// p = γ̄ m v
    pub fn momentum(&self, m: f64) -> Result<Vec3> {
        Ok(self.gamma()? * m * self.v)
    }
}

/// Uniform static fields together with the particle's charge and mass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub electric: Vec3,
    pub magnetic: Vec3,
    pub charge: f64,
    pub mass: f64,
}

impl FieldConfig {
    pub fn new(electric: Vec3, magnetic: Vec3, charge: f64, mass: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidMass(mass));
        }
        Ok(FieldConfig { electric, magnetic, charge, mass })
    }

    /// Charge-to-mass ratio e/m.
    pub fn qm(&self) -> f64 {
        self.charge / self.mass
    }
}

/// Lab-frame spin 4-vector (S₀, S).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabSpin {
    pub s0: f64,
    pub s: Vec3,
}

/// γ̄ = 1/sqrt(1 − v²).
pub fn dilation(v: &Vec3) -> Result<f64> {
    let speed = v.norm();
    if !(speed < SPEED_LIMIT) {
        return Err(Error::Superluminal { speed });
    }
    Ok(1.0 / (1.0 - v.norm_squared()).sqrt())
}

/// S₀ = γ̄ v·s, S = s + γ̄²/(γ̄+1) (s·v) v.
pub fn boost_spin(s: &Vec3, v: &Vec3) -> Result<LabSpin> {
    let g = dilation(v)?;
    let sv = s.dot(v);
    Ok(LabSpin { s0: g * sv, s: s + (g * g / (g + 1.0)) * sv * v })
}

/// s = S − γ̄/(γ̄+1) (v·S) v.
pub fn unboost_spin(lab: &LabSpin, v: &Vec3) -> Result<Vec3> {
    let g = dilation(v)?;
    Ok(lab.s - (g / (g + 1.0)) * v.dot(&lab.s) * v)
}
