//! Dirac-space operator algebra in the standard (Dirac–Pauli) representation.
//!
//! Every operator is a dense 4×4 complex matrix. Momentum-dependent kernels
//! are evaluated for a sharp momentum `p`, i.e. the canonical momentum acts as
//! a number on the packet component it is applied to.

mod identities;
mod matrices;
mod operators;
mod pryce;

pub use identities::{random_momenta, verify_algebra, AlgebraCheck, ALGEBRA_TOLERANCE};
pub use matrices::{dirac, gamma_set, pauli, ComplexMatrix4, DiracMatrices, Spinor};
pub use operators::{
    fw_transform, free_hamiltonian, little_group_generators, negative_energy_projector,
    o_operator, positive_energy_spinor, two_spinor_along, FwSign, LittleGroup, Momentum3,
};
pub use pryce::{
    i_beta_alpha, i_beta_alpha_dot_p_p, p_cross_sigma, pryce_factors, pryce_kernel,
    pryce_kernel_general, PryceFactors, PryceKind,
};

use crate::{Error, Result};

pub(crate) fn check_mass(m: f64) -> Result<f64> {
    if m.is_finite() && m > 0.0 {
        Ok(m)
    } else {
        Err(Error::InvalidMass(m))
    }
}

/// Largest entry modulus of `a - b`.
pub fn max_abs_diff(a: &ComplexMatrix4, b: &ComplexMatrix4) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
