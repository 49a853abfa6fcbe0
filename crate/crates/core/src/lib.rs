//! Relativistic spin dynamics of an electron, in two layers.
//!
//! The quantum layer ([`dirac`], [`wavepacket`]) builds the Dirac operator
//! algebra, the Foldy–Wouthuysen transform and the three Pryce mass-center
//! operators, and evaluates their expectation values on sharply peaked
//! positive-energy wave packets. The classical layer ([`classical`])
//! integrates the Lorentz force and BMT equations and evaluates the position
//! shift and anomalous velocity of the mass center in several equivalent
//! forms. [`scenario`] ties both together behind a config-driven runner.
//!
//! Natural units are used throughout (ħ = c = 1).

pub mod classical;
pub mod dirac;
mod error;
pub mod scenario;
pub mod wavepacket;

pub use error::{Error, Result};

/// Real 3-vector used for positions, velocities, spins and fields.
pub type Vec3 = nalgebra::Vector3<f64>;
pub use num_complex::Complex64;
