//! Scenario files: sectioned key-value plain text (TOML).
//!
//! ```toml
//! name = "cyclotron"
//! mode = "simulate"          # simulate | verify-fg | verify-algebra | converge
//! mass = 1.0                 # default 1
//! charge = -1.0              # default -1 (electron)
//! pryce_kinds = ["c", "d", "e"]
//!
//! [fields]
//! electric = [0.0, 0.0, 0.0]
//! magnetic = [0.0, 0.0, 1.0]
//!
//! [initial]
//! x = [0.0, 0.0, 0.0]
//! v = [0.6, 0.0, 0.0]
//! s = [0.6, 0.0, 0.8]
//! # spin_along_effective_field = true   # rotate s onto B − γ̄/(1+γ̄)(v·B)v − v×E
//!
//! [integration]
//! dt = 0.00785
//! steps = 10000
//! sample_every = 10          # default 1
//!
//! [packet]                   # verify-fg, converge target "fg"
//! p0 = [0.0, 0.0, 0.6]
//! widths = [0.01, 0.01, 0.01]
//! spin = [1.0, 0.0, 0.0]
//! points = 32
//! truncation = 5.0
//!
//! [converge]
//! target = "integrator"      # integrator | fg | vp-fd
//! rungs = 3
//!
//! [output]
//! plot = ["Vp_x", "Vp_y"]    # CSV columns written as two-column files with --plot
//! ```
//!
//! Unknown keys are rejected.

use serde::{Deserialize, Serialize};

use crate::classical::{effective_field, integrate, ClassicalState, FieldConfig, Scenario, SpinNorm, SPEED_LIMIT};
use crate::dirac::{Momentum3, PryceKind};
use crate::wavepacket::{GridSpec, MomentumWavePacket};
use crate::{Error, Result, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Simulate,
    VerifyFg,
    VerifyAlgebra,
    Converge,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Simulate => "simulate",
            Mode::VerifyFg => "verify-fg",
            Mode::VerifyAlgebra => "verify-algebra",
            Mode::Converge => "converge",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConvergeTarget {
    Integrator,
    Fg,
    VpFd,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldsBlock {
    #[serde(default)]
    pub electric: [f64; 3],
    #[serde(default)]
    pub magnetic: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialBlock {
    #[serde(default)]
    pub x: [f64; 3],
    pub v: [f64; 3],
    pub s: [f64; 3],
    #[serde(default, skip_serializing_if = "is_false")]
    pub spin_along_effective_field: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SpinNormSetting {
    #[default]
    Projected,
    Free,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegrationBlock {
    pub dt: f64,
    pub steps: usize,
    #[serde(default = "one")]
    pub sample_every: usize,
    #[serde(default)]
    pub spin_norm: SpinNormSetting,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PacketBlock {
    pub p0: [f64; 3],
    pub widths: [f64; 3],
    pub spin: [f64; 3],
    #[serde(default = "default_points")]
    pub points: usize,
    #[serde(default = "default_truncation")]
    pub truncation: f64,
}

fn default_points() -> usize {
    GridSpec::default().points
}

fn default_truncation() -> f64 {
    GridSpec::default().truncation
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvergeBlock {
    pub target: ConvergeTarget,
    #[serde(default = "three")]
    pub rungs: usize,
}

fn three() -> usize {
    3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    #[serde(default = "hundred")]
    pub samples: usize,
    #[serde(default = "ten")]
    pub max_momentum: f64,
    #[serde(default)]
    pub seed: u64,
}

impl Default for AlgebraBlock {
    fn default() -> Self {
        AlgebraBlock { samples: 100, max_momentum: 10.0, seed: 0 }
    }
}

fn hundred() -> usize {
    100
}

fn ten() -> f64 {
    10.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    #[serde(default)]
    pub plot: Vec<String>,
}

fn default_mass() -> f64 {
    1.0
}

fn default_charge() -> f64 {
    -1.0
}

fn all_kinds() -> Vec<PryceKind> {
    PryceKind::ALL.to_vec()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub mode: Mode,
    #[serde(default = "default_mass")]
    pub mass: f64,
    #[serde(default = "default_charge")]
    pub charge: f64,
    #[serde(default = "all_kinds")]
    pub pryce_kinds: Vec<PryceKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fields: Option<FieldsBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<InitialBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integration: Option<IntegrationBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub packet: Option<PacketBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub converge: Option<ConvergeBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputBlock>,
}

fn v3(a: [f64; 3]) -> Vec3 {
    Vec3::new(a[0], a[1], a[2])
}

fn missing(block: &str, mode: &str) -> Error {
    Error::Config(format!("mode '{mode}' requires a [{block}] section"))
}

/// Parses and validates a scenario document.
pub fn parse_config(text: &str) -> Result<ScenarioConfig> {
    let cfg: ScenarioConfig = toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))?;
    cfg.validate()?;
    Ok(cfg)
}

impl ScenarioConfig {
    /// Canonical text form; `parse_config(cfg.to_toml())` gives back `cfg`.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always representable as TOML")
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::Config(format!("mass: must be positive, got {}", self.mass)));
        }
        if !self.charge.is_finite() {
            return Err(Error::Config("charge: must be finite".into()));
        }
        if self.pryce_kinds.is_empty() {
            return Err(Error::Config("pryce_kinds: list at least one of c, d, e".into()));
        }
        let mut kinds = self.pryce_kinds.clone();
        kinds.sort();
        kinds.dedup();
        if kinds.len() != self.pryce_kinds.len() {
            return Err(Error::Config("pryce_kinds: duplicate entry".into()));
        }
        if let Some(init) = &self.initial {
            let speed = v3(init.v).norm();
            if !(speed < SPEED_LIMIT) {
                return Err(Error::Config(format!("initial.v: |v| = {speed} must be below 1")));
            }
            if !init.x.iter().chain(&init.s).all(|c| c.is_finite()) {
                return Err(Error::Config("initial: x and s must be finite".into()));
            }
        }
        if let Some(f) = &self.fields {
            if !f.electric.iter().chain(&f.magnetic).all(|c| c.is_finite()) {
                return Err(Error::Config("fields: components must be finite".into()));
            }
        }
        if let Some(int) = &self.integration {
            if !(int.dt.is_finite() && int.dt > 0.0) {
                return Err(Error::Config(format!("integration.dt: must be positive, got {}", int.dt)));
            }
            if int.steps == 0 {
                return Err(Error::Config("integration.steps: must be positive".into()));
            }
            if int.sample_every == 0 {
                return Err(Error::Config("integration.sample_every: must be positive".into()));
            }
            if !(int.dt * int.steps as f64).is_finite() {
                return Err(Error::Config("integration: dt * steps overflows".into()));
            }
        }
        if let Some(p) = &self.packet {
            if p.widths.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
                return Err(Error::Config("packet.widths: must be positive".into()));
            }
            if v3(p.spin).norm() == 0.0 {
                return Err(Error::Config("packet.spin: must be non-zero".into()));
            }
        }
        if let Some(c) = &self.converge {
            if c.rungs < 3 {
                return Err(Error::LadderTooShort(c.rungs));
            }
        }

        let mode = self.mode.as_str();
        let need_dynamics = |cfg: &Self| -> Result<()> {
            cfg.fields.as_ref().ok_or_else(|| missing("fields", mode))?;
            cfg.initial.as_ref().ok_or_else(|| missing("initial", mode))?;
            cfg.integration.as_ref().ok_or_else(|| missing("integration", mode))?;
            Ok(())
        };
        match self.mode {
            Mode::Simulate => need_dynamics(self)?,
            Mode::VerifyFg => {
                self.packet.as_ref().ok_or_else(|| missing("packet", mode))?;
            }
            Mode::VerifyAlgebra => {}
            Mode::Converge => {
                let c = self.converge.as_ref().ok_or_else(|| missing("converge", mode))?;
                match c.target {
                    ConvergeTarget::Fg => {
                        self.packet.as_ref().ok_or_else(|| missing("packet", mode))?;
                    }
                    ConvergeTarget::Integrator | ConvergeTarget::VpFd => need_dynamics(self)?,
                }
            }
        }
        Ok(())
    }

    pub fn field_config(&self) -> Result<FieldConfig> {
        let f = self.fields.as_ref().ok_or_else(|| missing("fields", self.mode.as_str()))?;
        FieldConfig::new(v3(f.electric), v3(f.magnetic), self.charge, self.mass)
    }

    pub fn initial_state(&self) -> Result<ClassicalState> {
        let init = self.initial.as_ref().ok_or_else(|| missing("initial", self.mode.as_str()))?;
        let v = v3(init.v);
        let mut s = v3(init.s);
        if init.spin_along_effective_field {
            let b = effective_field(&self.field_config()?, &v)?;
            if b.norm() == 0.0 {
                return Err(Error::Config("initial.spin_along_effective_field: effective field vanishes".into()));
            }
            s = b.normalize() * s.norm();
        }
        Ok(ClassicalState::new(v3(init.x), v, s))
    }

    pub fn scenario(&self) -> Result<Scenario> {
        let int = self.integration.as_ref().ok_or_else(|| missing("integration", self.mode.as_str()))?;
        let spin_norm = match int.spin_norm {
            SpinNormSetting::Projected => SpinNorm::Projected,
            SpinNormSetting::Free => SpinNorm::Free,
        };
        Ok(Scenario::new(self.initial_state()?, self.field_config()?, int.dt, int.steps)
            .with_sample_every(int.sample_every)
            .with_spin_norm(spin_norm))
    }

    pub fn packet(&self) -> Result<MomentumWavePacket> {
        self.packet_with_widths(None)
    }

    /// Packet from the [packet] block, optionally with all widths scaled.
    pub fn packet_with_widths(&self, scale: Option<f64>) -> Result<MomentumWavePacket> {
        let p = self.packet.as_ref().ok_or_else(|| missing("packet", self.mode.as_str()))?;
        let widths = v3(p.widths) * scale.unwrap_or(1.0);
        MomentumWavePacket::gaussian(
            Momentum3(v3(p.p0)),
            widths,
            v3(p.spin),
            self.mass,
            GridSpec { points: p.points, truncation: p.truncation },
        )
    }

    pub fn plot_columns(&self) -> Vec<String> {
        match &self.output {
            Some(o) if !o.plot.is_empty() => o.plot.clone(),
            _ => ["dXx", "dXy", "dXz", "Vp_x", "Vp_y", "Vp_z"].iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Runs the integrator once (used for dry-run validation of scenarios).
    pub fn integrate(&self) -> Result<crate::classical::Trajectory> {
        integrate(&self.scenario()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
name = "b-only"
mode = "simulate"

[fields]
magnetic = [0.0, 0.0, 1.0]

[initial]
v = [0.3, 0.0, 0.0]
s = [0.0, 1.0, 0.0]

[integration]
dt = 0.01
steps = 10
"#;

    #[test]
    fn defaults_are_filled() {
        let cfg = parse_config(MINIMAL).unwrap();
        assert_eq!(cfg.mass, 1.0);
        assert_eq!(cfg.charge, -1.0);
        assert_eq!(cfg.integration.as_ref().unwrap().sample_every, 1);
        assert_eq!(cfg.pryce_kinds, PryceKind::ALL.to_vec());
        assert_eq!(cfg.fields.as_ref().unwrap().electric, [0.0; 3]);
        assert!(cfg.scenario().is_ok());
    }

    #[test]
    fn superluminal_velocity_is_named() {
        let text = MINIMAL.replace("v = [0.3, 0.0, 0.0]", "v = [1.2, 0.0, 0.0]");
        match parse_config(&text) {
            Err(Error::Config(msg)) => assert!(msg.contains("initial.v"), "{msg}"),
            other => panic!("expected config error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_fail() {
        let text = MINIMAL.replace("steps = 10", "steps = 10\nstpes = 11");
        assert!(matches!(parse_config(&text), Err(Error::Config(_))));
        let text = MINIMAL.replace("mode = \"simulate\"", "mode = \"simulate\"\nmas = 2.0");
        assert!(parse_config(&text).is_err());
    }

    #[test]
    fn missing_block_fails() {
        let text = MINIMAL.replace("[integration]\ndt = 0.01\nsteps = 10\n", "");
        match parse_config(&text) {
            Err(Error::Config(msg)) => assert!(msg.contains("[integration]"), "{msg}"),
            other => panic!("{other:?}"),
        }
        let text = MINIMAL.replace("mode = \"simulate\"", "mode = \"verify-fg\"");
        assert!(parse_config(&text).is_err());
    }

    #[test]
    fn short_ladder_rejected() {
        let text = format!("{MINIMAL}\n[converge]\ntarget = \"integrator\"\nrungs = 2\n")
            .replace("\"simulate\"", "\"converge\"");
        assert!(matches!(parse_config(&text), Err(Error::LadderTooShort(2))));
    }

    #[test]
    fn canonical_form_is_a_fixed_point() {
        let once = parse_config(MINIMAL).unwrap().to_toml();
        let twice = parse_config(&once).unwrap().to_toml();
        assert_eq!(once, twice);
        assert_eq!(parse_config(&once).unwrap(), parse_config(MINIMAL).unwrap());
    }

    #[test]
    fn spin_aligned_with_effective_field() {
        let text = MINIMAL.replace("s = [0.0, 1.0, 0.0]", "s = [0.0, 0.5, 0.0]\nspin_along_effective_field = true");
        let cfg = parse_config(&text).unwrap();
        let st = cfg.initial_state().unwrap();
        assert!((st.s - Vec3::new(0.0, 0.0, 0.5)).norm() < 1e-15);
    }
}
