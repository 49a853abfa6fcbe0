use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrices::{dirac, ComplexMatrix4};
use super::operators::{fw_transform, free_hamiltonian, little_group_generators, FwSign, Momentum3};
use super::{check_mass, max_abs_diff};
use crate::{Result, Vec3};

/// Pass threshold for every identity in [`verify_algebra`].
pub const ALGEBRA_TOLERANCE: f64 = 1e-12;

/// One algebraic identity and its worst residual over all tested momenta.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraCheck {
    pub name: &'static str,
    pub residual: f64,
}

impl AlgebraCheck {
    pub fn passed(&self) -> bool {
        self.residual < ALGEBRA_TOLERANCE
    }
}

/// `n` momenta drawn uniformly from the ball |p| ≤ `max_norm`.
pub fn random_momenta(n: usize, max_norm: f64, seed: u64) -> Vec<Momentum3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if v.norm_squared() <= 1.0 {
            out.push(Momentum3(v * max_norm));
        }
    }
    out
}

fn anticommutator(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    a * b + b * a
}

fn commutator(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    a * b - b * a
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Runs the representation identities once and the momentum-dependent ones
/// (FW unitarity and diagonalization, little-group commutation, H² = E²)
/// over every supplied momentum.
pub fn verify_algebra(momenta: &[Momentum3], m: f64) -> Result<Vec<AlgebraCheck>> {
    let m = check_mass(m)?;
    let d = dirac();
    let id = ComplexMatrix4::identity();
    let i = Complex64::new(0.0, 1.0);
    let mut checks = Vec::new();

    let mut clifford = 0.0f64;
    for mu in 0..4 {
        for nu in 0..4 {
            let want = if mu == nu { id * Complex64::from(2.0) } else { ComplexMatrix4::zeros() };
            clifford = clifford.max(max_abs_diff(&anticommutator(&d.gamma[mu], &d.gamma[nu]), &want));
        }
    }
    checks.push(AlgebraCheck { name: "clifford {g_mu,g_nu} = 2 delta", residual: clifford });

    let g5 = d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3];
    checks.push(AlgebraCheck { name: "gamma5 = g1 g2 g3 g4", residual: max_abs_diff(&g5, &d.gamma5) });

    let mut alpha_def = 0.0f64;
    let mut sigma_def = 0.0f64;
    for k in 0..3 {
        alpha_def = alpha_def.max(max_abs_diff(&(d.beta * d.gamma[k] * i), &d.alpha[k]));
        sigma_def = sigma_def.max(max_abs_diff(&(d.gamma[3] * d.gamma5 * d.gamma[k] * i), &d.sigma[k]));
    }
    checks.push(AlgebraCheck { name: "alpha_i = i beta g_i", residual: alpha_def });
    checks.push(AlgebraCheck { name: "sigma_i = i g4 g5 g_i", residual: sigma_def });

    let mut alpha_anti = 0.0f64;
    let mut sigma_comm = 0.0f64;
    for a in 0..3 {
        alpha_anti = alpha_anti.max(max_abs_diff(&anticommutator(&d.alpha[a], &d.beta), &ComplexMatrix4::zeros()));
        for b in 0..3 {
            let want = if a == b { id * Complex64::from(2.0) } else { ComplexMatrix4::zeros() };
            alpha_anti = alpha_anti.max(max_abs_diff(&anticommutator(&d.alpha[a], &d.alpha[b]), &want));
            let mut rhs = ComplexMatrix4::zeros();
            for c in 0..3 {
                rhs += d.sigma[c] * (i * 2.0 * levi_civita(a, b, c));
            }
            sigma_comm = sigma_comm.max(max_abs_diff(&commutator(&d.sigma[a], &d.sigma[b]), &rhs));
        }
    }
    checks.push(AlgebraCheck { name: "{alpha_i,alpha_j} = 2 delta, {alpha_i,beta} = 0", residual: alpha_anti });
    checks.push(AlgebraCheck { name: "[sigma_i,sigma_j] = 2i eps sigma_k", residual: sigma_comm });

    let mut herm = 0.0f64;
    for op in d.gamma.iter().chain(d.alpha.iter()).chain(d.sigma.iter()).chain([&d.beta, &d.gamma5]) {
        herm = herm.max(max_abs_diff(op, &op.adjoint()));
    }
    checks.push(AlgebraCheck { name: "hermiticity of representation", residual: herm });

    let mut unitary = 0.0f64;
    let mut inverse = 0.0f64;
    let mut diagonal = 0.0f64;
    let mut little = 0.0f64;
    let mut square = 0.0f64;
    for p in momenta {
        let e = p.energy(m);
        let h = free_hamiltonian(p, m)?;
        let u = fw_transform(p, m, FwSign::Plus)?;
        let v = fw_transform(p, m, FwSign::Minus)?;
        unitary = unitary.max(max_abs_diff(&(u.adjoint() * u), &id));
        inverse = inverse.max(max_abs_diff(&(u * v), &id));
        diagonal = diagonal.max(max_abs_diff(&(u * h * u.adjoint()), &(d.beta * Complex64::from(e))));
        square = square.max(max_abs_diff(&(h * h), &(id * Complex64::from(e * e))));
        let lg = little_group_generators(p, m)?;
        for t in lg.t.iter().chain([&lg.t4]) {
            little = little.max(max_abs_diff(&commutator(t, &h), &ComplexMatrix4::zeros()));
        }
    }
    checks.push(AlgebraCheck { name: "FW unitarity U^dag U = I", residual: unitary });
    checks.push(AlgebraCheck { name: "FW inverse U(+) U(-) = I", residual: inverse });
    checks.push(AlgebraCheck { name: "FW diagonalization U H U^dag = beta E", residual: diagonal });
    checks.push(AlgebraCheck { name: "H^2 = E^2", residual: square });
    checks.push(AlgebraCheck { name: "[T_mu, H] = 0", residual: little });

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_momenta_stay_in_ball() {
        let ps = random_momenta(200, 10.0, 7);
        assert_eq!(ps.len(), 200);
        assert!(ps.iter().all(|p| p.0.norm() <= 10.0));
        assert_eq!(ps, random_momenta(200, 10.0, 7));
    }

    #[test]
    fn suite_passes_for_unit_and_non_unit_mass() {
        for m in [1.0, 0.3, 4.0] {
            let checks = verify_algebra(&random_momenta(50, 10.0 * m, 1), m).unwrap();
            for c in &checks {
                assert!(c.passed(), "{} residual {:e} (m = {m})", c.name, c.residual);
            }
        }
    }
}
