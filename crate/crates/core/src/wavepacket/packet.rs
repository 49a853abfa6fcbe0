use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dirac::{
    negative_energy_projector, positive_energy_spinor, two_spinor_along, ComplexMatrix4, Momentum3, Spinor,
};
use crate::{Error, Result, Vec3};

/// Largest Gaussian mass a grid may cut off.
pub const TRUNCATION_LIMIT: f64 = 1e-6;
/// Largest imaginary part accepted from a kernel declared Hermitian.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Regular grid: `points` per axis spanning ±`truncation` widths around the
/// packet center.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub points: usize,
    pub truncation: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { points: 32, truncation: 5.0 }
    }
}

impl GridSpec {
    /// Fraction of |ψ|² ∝ exp(−q²/w²) lying outside the box, all three axes.
    pub fn lost_mass(&self) -> f64 {
        1.0 - libm::erf(self.truncation).powi(3)
    }
}

/// Gaussian-enveloped positive-energy packet
/// ψ(p) ∝ exp(−Σ_j (p_j − p0_j)² / 2w_j²) u(p),
/// with u(p) the positive-energy spinor whose FW image carries the requested
/// rest-frame spin. Amplitudes are normalized so Σ|ψ|² · cell = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumWavePacket {
    mass: f64,
    center: Momentum3,
    widths: Vec3,
    spin: Vec3,
    grid: GridSpec,
    origin: Vec3,
    spacing: Vec3,
    amplitudes: Vec<Spinor>,
}

impl MomentumWavePacket {
    pub fn gaussian(
        center: Momentum3,
        widths: Vec3,
        rest_spin_direction: Vec3,
        mass: f64,
        grid: GridSpec,
    ) -> Result<Self> {
        let mass = crate::dirac::check_mass(mass)?;
        for w in widths.iter() {
            if !(w.is_finite() && *w > 0.0) {
                return Err(Error::InvalidWidth(*w));
            }
        }
        let spin_norm = rest_spin_direction.norm();
        if !(spin_norm.is_finite() && spin_norm > 0.0) {
            return Err(Error::InvalidSpinDirection);
        }
        if grid.points < 4 {
            return Err(Error::GridTooCoarse { reason: format!("{} points per axis", grid.points) });
        }
        let lost = grid.lost_mass();
        if !(lost <= TRUNCATION_LIMIT) {
            return Err(Error::GridTruncation { lost, limit: TRUNCATION_LIMIT });
        }

        let n = grid.points;
        let half = widths * grid.truncation;
        let origin = center.0 - half;
        let spacing = half * (2.0 / (n - 1) as f64);
        let chi = two_spinor_along(&rest_spin_direction);

        let mut amplitudes = Vec::with_capacity(n * n * n);
        for ix in 0..n {
            for iy in 0..n {
                for iz in 0..n {
                    let p = origin + spacing.component_mul(&Vec3::new(ix as f64, iy as f64, iz as f64));
                    let q = (p - center.0).component_div(&widths);
                    let envelope = (-0.5 * q.norm_squared()).exp();
                    let u = positive_energy_spinor(&Momentum3(p), mass, &chi)?;
                    amplitudes.push(u * Complex64::from(envelope));
                }
            }
        }
        let mut packet = MomentumWavePacket {
            mass,
            center,
            widths,
            spin: rest_spin_direction / spin_norm,
            grid,
            origin,
            spacing,
            amplitudes,
        };
        let scale = 1.0 / packet.norm().sqrt();
        packet.amplitudes.iter_mut().for_each(|a| *a *= Complex64::from(scale));
        Ok(packet)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn center(&self) -> Momentum3 {
        self.center
    }

    pub fn widths(&self) -> Vec3 {
        self.widths
    }

    pub fn spin_direction(&self) -> Vec3 {
        self.spin
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn spacing(&self) -> Vec3 {
        self.spacing
    }

    pub fn cell_volume(&self) -> f64 {
        self.spacing.product()
    }

    pub fn amplitudes(&self) -> &[Spinor] {
        &self.amplitudes
    }

    /// Grid momentum of the flat index `k` (z fastest).
    pub fn momentum_at(&self, k: usize) -> Momentum3 {
        let n = self.grid.points;
        let idx = Vec3::new((k / (n * n)) as f64, ((k / n) % n) as f64, (k % n) as f64);
        Momentum3(self.origin + self.spacing.component_mul(&idx))
    }

    fn points(&self) -> impl Iterator<Item = (Momentum3, &Spinor)> + '_ {
        self.amplitudes.iter().enumerate().map(|(k, a)| (self.momentum_at(k), a))
    }

    /// Σ |ψ|² · cell.
    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_squared()).sum::<f64>() * self.cell_volume()
    }

    /// Σ ψ† K(p) ψ · cell.
    pub fn expectation(&self, kernel: impl Fn(&Momentum3) -> ComplexMatrix4) -> Complex64 {
        let sum: Complex64 = self.points().map(|(p, a)| a.dotc(&(kernel(&p) * a))).sum();
        sum * self.cell_volume()
    }

    /// Component-wise expectation of a 3-vector of kernels.
    pub fn expectation3(&self, kernel: impl Fn(&Momentum3) -> [ComplexMatrix4; 3]) -> [Complex64; 3] {
        let mut acc = [Complex64::default(); 3];
        for (p, a) in self.points() {
            let k = kernel(&p);
            for j in 0..3 {
                acc[j] += a.dotc(&(k[j] * a));
            }
        }
        acc.map(|z| z * self.cell_volume())
    }

    /// Real expectation of a Hermitian 3-vector kernel; fails if any
    /// component keeps an imaginary part above [`HERMITIAN_TOLERANCE`].
    pub fn expectation_vector(&self, kernel: impl Fn(&Momentum3) -> [ComplexMatrix4; 3]) -> Result<Vec3> {
        let z = self.expectation3(kernel);
        let imag = z.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
        if imag > HERMITIAN_TOLERANCE {
            return Err(Error::NonHermitian { imag });
        }
        Ok(Vec3::new(z[0].re, z[1].re, z[2].re))
    }

    /// ⟨p̂⟩, the packet's mean momentum.
    pub fn mean_momentum(&self) -> Momentum3 {
        let sum: Vec3 = self.points().map(|(p, a)| p.0 * a.norm_squared()).sum();
        Momentum3(sum * self.cell_volume())
    }

    /// γ̄ = E(⟨p̂⟩)/m.
    pub fn gamma(&self) -> f64 {
        self.mean_momentum().dilation(self.mass)
    }

    /// v = ⟨p̂⟩/E(⟨p̂⟩).
    pub fn velocity(&self) -> Vec3 {
        self.mean_momentum().velocity(self.mass)
    }

    /// Norm of the negative-energy part, sqrt(Σ |Λ₋ψ|² · cell).
    pub fn negative_energy_residual(&self) -> Result<f64> {
        let mut sum = 0.0;
        for (p, a) in self.points() {
            sum += (negative_energy_projector(&p, self.mass)? * a).norm_squared();
        }
        Ok((sum * self.cell_volume()).sqrt())
    }

    /// Copy translated by `a` in position space: ψ(p) → e^{−ip·a} ψ(p).
    pub fn translated(&self, a: &Vec3) -> Self {
        let mut out = self.clone();
        for (k, amp) in out.amplitudes.iter_mut().enumerate() {
            let phase = Complex64::from_polar(1.0, -self.momentum_at(k).0.dot(a));
            *amp *= phase;
        }
        out
    }

    /// Copy with every amplitude multiplied by `f(p)`; the result is not
    /// renormalized.
    pub fn map_amplitudes(&self, f: impl Fn(&Momentum3, &Spinor) -> Spinor) -> Self {
        let mut out = self.clone();
        for (k, amp) in out.amplitudes.iter_mut().enumerate() {
            *amp = f(&self.momentum_at(k), amp);
        }
        out
    }
}
