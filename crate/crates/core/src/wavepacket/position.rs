//! ⟨x̂⟩ in the momentum representation, x̂ = i∇_p, with spectral
//! differentiation along each grid axis.

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::packet::MomentumWavePacket;
use crate::dirac::Spinor;
use crate::{Error, Result, Vec3};

/// Grid spacing may not exceed this fraction of the packet width, otherwise
/// the envelope is not resolved by the Fourier modes.
pub(crate) const MAX_SPACING_PER_WIDTH: f64 = 0.5;

/// Derivative wavenumbers 2πn/(N h), n in [−N/2, N/2), with the Nyquist mode
/// of even N set to zero.
fn wavenumbers(n: usize, h: f64) -> Vec<f64> {
    let base = 2.0 * std::f64::consts::PI / (n as f64 * h);
    (0..n)
        .map(|k| {
            if 2 * k == n {
                0.0
            } else if 2 * k < n {
                base * k as f64
            } else {
                base * (k as f64 - n as f64)
            }
        })
        .collect()
}

/// ∂ψ/∂p_axis on the grid.
fn spectral_derivative(packet: &MomentumWavePacket, axis: usize) -> Vec<Spinor> {
    let n = packet.grid().points;
    let h = packet.spacing()[axis];
    let stride = match axis {
        0 => n * n,
        1 => n,
        _ => 1,
    };
    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(n);
    let inverse = planner.plan_fft_inverse(n);
    let k = wavenumbers(n, h);
    let amps = packet.amplitudes();
    let mut out = vec![Spinor::zeros(); amps.len()];
    let mut line = vec![Complex64::default(); n];

    for start in 0..amps.len() {
        // first element of each line along `axis`
        if (start / stride) % n != 0 {
            continue;
        }
        for c in 0..4 {
            for (j, slot) in line.iter_mut().enumerate() {
                *slot = amps[start + j * stride][c];
            }
            forward.process(&mut line);
            for (slot, kj) in line.iter_mut().zip(&k) {
                *slot *= Complex64::new(0.0, *kj / n as f64);
            }
            inverse.process(&mut line);
            for (j, val) in line.iter().enumerate() {
                out[start + j * stride][c] = *val;
            }
        }
    }
    out
}

impl MomentumWavePacket {
    /// ⟨x̂⟩ = Σ ψ† (i∇_p ψ) · cell.
    pub fn expectation_position(&self) -> Result<Vec3> {
        let n = self.grid().points;
        if n < 8 {
            return Err(Error::GridTooCoarse { reason: format!("{n} points per axis, need at least 8") });
        }
        for axis in 0..3 {
            let ratio = self.spacing()[axis] / self.widths()[axis];
            if ratio > MAX_SPACING_PER_WIDTH {
                return Err(Error::GridTooCoarse {
                    reason: format!("spacing/width = {ratio:.3} on axis {axis} (max {MAX_SPACING_PER_WIDTH})"),
                });
            }
        }
        let i = Complex64::new(0.0, 1.0);
        let mut x = Vec3::zeros();
        for axis in 0..3 {
            let d = spectral_derivative(self, axis);
            let sum: Complex64 = self.amplitudes().iter().zip(&d).map(|(a, da)| a.dotc(&(da * i))).sum();
            x[axis] = sum.re * self.cell_volume();
        }
        Ok(x)
    }
}
