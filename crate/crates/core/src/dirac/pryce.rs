use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrices::{dirac, ComplexMatrix4};
use super::operators::Momentum3;
use super::check_mass;
use crate::{Error, Result, Vec3};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The three Pryce mass-center operators. `E` is the Newton–Wigner
/// (mean-position) operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PryceKind {
    C,
    D,
    E,
}

impl PryceKind {
    pub const ALL: [PryceKind; 3] = [PryceKind::C, PryceKind::D, PryceKind::E];

    pub fn label(&self) -> &'static str {
        match self {
            PryceKind::C => "c",
            PryceKind::D => "d",
            PryceKind::E => "e",
        }
    }

    /// Shorthand for `pryce_factors(self, gamma)?.fp`.
    pub fn fp(&self, gamma: f64) -> Result<f64> {
        Ok(pryce_factors(*self, gamma)?.fp)
    }
}

impl fmt::Display for PryceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PryceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c" => Ok(PryceKind::C),
            "d" => Ok(PryceKind::D),
            "e" => Ok(PryceKind::E),
            other => Err(Error::Config(format!("unknown Pryce kind '{other}' (expected c, d or e)"))),
        }
    }
}

/// Type-dependent factors of the general mass-center operator
/// x̂ + f₁ iβα/2m + f₂ (p×σ)/2m² + f₃ iβ(α·p)p/2m³, with fp = f₁ − f₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PryceFactors {
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub fp: f64,
}

pub fn pryce_factors(kind: PryceKind, gamma: f64) -> Result<PryceFactors> {
    if !(gamma >= 1.0) || !gamma.is_finite() {
        return Err(Error::InvalidDilation(gamma));
    }
    let g = gamma;
    let (f1, f2, f3) = match kind {
        PryceKind::D => (1.0, 0.0, -1.0 / (g * g)),
        PryceKind::E => (1.0 / g, 1.0 / (g * (1.0 + g)), -1.0 / (g * g * (g + 1.0))),
        PryceKind::C => (1.0 / (g * g), 1.0 / (g * g), 0.0),
    };
    // closed forms: fp_d = 1, fp_e = 1/(1+γ̄), fp_c = 0
    let fp = match kind {
        PryceKind::D => 1.0,
        PryceKind::E => 1.0 / (1.0 + g),
        PryceKind::C => 0.0,
    };
    Ok(PryceFactors { f1, f2, f3, fp })
}

/// iβα_j, j = 1..3.
pub fn i_beta_alpha() -> [ComplexMatrix4; 3] {
    let d = dirac();
    [0, 1, 2].map(|j| d.beta * d.alpha[j] * I)
}

/// (p × σ)_j.
pub fn p_cross_sigma(p: &Vec3) -> [ComplexMatrix4; 3] {
    let s = &dirac().sigma;
    [
        s[2] * real(p.y) - s[1] * real(p.z),
        s[0] * real(p.z) - s[2] * real(p.x),
        s[1] * real(p.x) - s[0] * real(p.y),
    ]
}

/// iβ(α·p) p_j.
pub fn i_beta_alpha_dot_p_p(p: &Vec3) -> [ComplexMatrix4; 3] {
    let iba = i_beta_alpha();
    let dot = iba[0] * real(p.x) + iba[1] * real(p.y) + iba[2] * real(p.z);
    [0, 1, 2].map(|j| dot * real(p[j]))
}

fn combine(
    a: &[ComplexMatrix4; 3],
    ca: f64,
    b: &[ComplexMatrix4; 3],
    cb: f64,
    c: &[ComplexMatrix4; 3],
    cc: f64,
) -> [ComplexMatrix4; 3] {
    [0, 1, 2].map(|j| a[j] * real(ca) + b[j] * real(cb) + c[j] * real(cc))
}

/// Matrix part X_P − x̂ of the requested mass-center operator at sharp
/// momentum `p`, in the explicit per-kind form.
pub fn pryce_kernel(kind: PryceKind, p: &Momentum3, m: f64) -> Result<[ComplexMatrix4; 3]> {
    let m = check_mass(m)?;
    let e = p.energy(m);
    let iba = i_beta_alpha();
    let pxs = p_cross_sigma(&p.0);
    let longitudinal = i_beta_alpha_dot_p_p(&p.0);
    Ok(match kind {
        PryceKind::D => combine(&iba, 0.5 / m, &pxs, 0.0, &longitudinal, -0.5 / (m * e * e)),
        PryceKind::E => combine(
            &iba,
            0.5 / e,
            &pxs,
            0.5 / (e * (e + m)),
            &longitudinal,
            -0.5 / (e * e * (e + m)),
        ),
        PryceKind::C => combine(&iba, 0.5 * m / (e * e), &pxs, 0.5 / (e * e), &longitudinal, 0.0),
    })
}

/// Same kernel through the factor table:
/// f₁ iβα/2m + f₂ (p×σ)/2m² + f₃ iβ(α·p)p/2m³ with γ̄ = E(p)/m.
pub fn pryce_kernel_general(kind: PryceKind, p: &Momentum3, m: f64) -> Result<[ComplexMatrix4; 3]> {
    let m = check_mass(m)?;
    let f = pryce_factors(kind, p.dilation(m).max(1.0))?;
    Ok(combine(
        &i_beta_alpha(),
        f.f1 / (2.0 * m),
        &p_cross_sigma(&p.0),
        f.f2 / (2.0 * m * m),
        &i_beta_alpha_dot_p_p(&p.0),
        f.f3 / (2.0 * m * m * m),
    ))
}
