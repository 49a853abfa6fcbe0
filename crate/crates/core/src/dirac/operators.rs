use nalgebra::Vector2;
use num_complex::Complex64;

use super::matrices::{dirac, ComplexMatrix4, Spinor};
use super::check_mass;
use crate::{Result, Vec3};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A sharp 3-momentum, in units of mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momentum3(pub Vec3);

impl Momentum3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Momentum3(Vec3::new(x, y, z))
    }

    pub fn zero() -> Self {
        Momentum3(Vec3::zeros())
    }

    /// E(p) = sqrt(m² + |p|²).
    pub fn energy(&self, m: f64) -> f64 {
        (m * m + self.0.norm_squared()).sqrt()
    }

    /// γ̄ = E(p) / m.
    pub fn dilation(&self, m: f64) -> f64 {
        self.energy(m) / m
    }

    /// v = p / E(p).
    pub fn velocity(&self, m: f64) -> Vec3 {
        self.0 / self.energy(m)
    }
}

impl From<Vec3> for Momentum3 {
    fn from(v: Vec3) -> Self {
        Momentum3(v)
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn alpha_dot(p: &Vec3) -> ComplexMatrix4 {
    let d = dirac();
    d.alpha[0] * real(p.x) + d.alpha[1] * real(p.y) + d.alpha[2] * real(p.z)
}

fn sigma_dot(p: &Vec3) -> ComplexMatrix4 {
    let d = dirac();
    d.sigma[0] * real(p.x) + d.sigma[1] * real(p.y) + d.sigma[2] * real(p.z)
}

/// H(p) = α·p + βm.
pub fn free_hamiltonian(p: &Momentum3, m: f64) -> Result<ComplexMatrix4> {
    let m = check_mass(m)?;
    Ok(alpha_dot(&p.0) + dirac().beta * real(m))
}

/// Little-group generators of a plane wave with momentum `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct LittleGroup {
    /// T = βσ − γ₅ p / m
    pub t: [ComplexMatrix4; 3],
    /// T₄ = i σ·p / m (anti-Hermitian)
    pub t4: ComplexMatrix4,
}

/// T = βσ − γ₅p/m and T₄ = iσ·p/m. With m = 1 these are the usual
/// FG generators; the 1/m keeps T dimensionless and makes [T_μ, H(p)] = 0 for
/// any mass.
pub fn little_group_generators(p: &Momentum3, m: f64) -> Result<LittleGroup> {
    let m = check_mass(m)?;
    let d = dirac();
    let q = p.0 / m;
    let t = [0, 1, 2].map(|i| d.beta * d.sigma[i] - d.gamma5 * real(q[i]));
    let t4 = sigma_dot(&q) * I;
    Ok(LittleGroup { t, t4 })
}

/// Which of the two Foldy–Wouthuysen factors to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FwSign {
    /// (E + βα·p + m)/sqrt(2E(E+m)): maps the Dirac picture to the
    /// diagonal one, U H U† = βE.
    Plus,
    /// (E − βα·p + m)/sqrt(2E(E+m)) = U†.
    Minus,
}

/// (E ± βα·p + m) / sqrt(2E(E+m)).
pub fn fw_transform(p: &Momentum3, m: f64, sign: FwSign) -> Result<ComplexMatrix4> {
    let m = check_mass(m)?;
    let e = p.energy(m);
    let norm = (2.0 * e * (e + m)).sqrt();
    let odd = dirac().beta * alpha_dot(&p.0);
    let odd = match sign {
        FwSign::Plus => odd,
        FwSign::Minus => -odd,
    };
    Ok((ComplexMatrix4::identity() * real(e + m) + odd) / real(norm))
}

/// Mean-spin operator O = U† βσ U, the Dirac-picture image of βσ under the
/// FW transform.
pub fn o_operator(p: &Momentum3, m: f64) -> Result<[ComplexMatrix4; 3]> {
    let u = fw_transform(p, m, FwSign::Plus)?;
    let u_dag = u.adjoint();
    let d = dirac();
    Ok([0, 1, 2].map(|i| u_dag * (d.beta * d.sigma[i]) * u))
}

/// Two-spinor χ with σ·n χ = χ for the unit vector along `n`.
pub fn two_spinor_along(n: &Vec3) -> Vector2<Complex64> {
    let n = n.normalize();
    let theta = n.z.clamp(-1.0, 1.0).acos();
    let phi = n.y.atan2(n.x);
    Vector2::new(
        real((0.5 * theta).cos()),
        Complex64::from_polar((0.5 * theta).sin(), phi),
    )
}

/// Positive-energy spinor u(p) = U(p)† (χ, 0): its FW image is the rest
/// spinor χ, so the mean spin ⟨O⟩ equals χ†σχ.
pub fn positive_energy_spinor(p: &Momentum3, m: f64, chi: &Vector2<Complex64>) -> Result<Spinor> {
    let u_dag = fw_transform(p, m, FwSign::Minus)?;
    let rest = Spinor::new(chi[0], chi[1], Complex64::default(), Complex64::default());
    Ok(u_dag * rest)
}

/// Negative-energy projector (E − H(p)) / 2E.
pub fn negative_energy_projector(p: &Momentum3, m: f64) -> Result<ComplexMatrix4> {
    let h = free_hamiltonian(p, m)?;
    let e = p.energy(m);
    Ok((ComplexMatrix4::identity() * real(e) - h) / real(2.0 * e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::max_abs_diff;

    #[test]
    fn hamiltonian_at_rest_is_beta_m() {
        let h = free_hamiltonian(&Momentum3::zero(), 2.0).unwrap();
        assert!(max_abs_diff(&h, &(dirac().beta * real(2.0))) == 0.0);
    }

    #[test]
    fn hamiltonian_squares_to_energy() {
        let p = Momentum3::new(0.3, -1.2, 2.5);
        let h = free_hamiltonian(&p, 1.5).unwrap();
        let e2 = p.energy(1.5).powi(2);
        assert!(max_abs_diff(&(h * h), &(ComplexMatrix4::identity() * real(e2))) < 1e-13);
    }

    #[test]
    fn rejects_bad_mass() {
        assert!(free_hamiltonian(&Momentum3::zero(), 0.0).is_err());
        assert!(fw_transform(&Momentum3::zero(), -1.0, FwSign::Plus).is_err());
        assert!(little_group_generators(&Momentum3::zero(), f64::NAN).is_err());
    }

    #[test]
    fn generators_at_rest() {
        let lg = little_group_generators(&Momentum3::zero(), 1.0).unwrap();
        let d = dirac();
        for i in 0..3 {
            assert_eq!(lg.t[i], d.beta * d.sigma[i]);
        }
        assert_eq!(lg.t4, ComplexMatrix4::zeros());
    }

    #[test]
    fn generator_along_z() {
        let q = 0.7;
        let lg = little_group_generators(&Momentum3::new(0.0, 0.0, q), 1.0).unwrap();
        let d = dirac();
        let expected = d.beta * d.sigma[2] - d.gamma5 * real(q);
        assert!(max_abs_diff(&lg.t[2], &expected) < 1e-15);
    }

    #[test]
    fn fw_at_rest_is_identity() {
        let u = fw_transform(&Momentum3::zero(), 1.0, FwSign::Plus).unwrap();
        assert!(max_abs_diff(&u, &ComplexMatrix4::identity()) < 1e-15);
    }

    #[test]
    fn fw_is_unitary() {
        let p = Momentum3::new(0.3, -0.2, 0.7);
        let u = fw_transform(&p, 1.0, FwSign::Plus).unwrap();
        assert!(max_abs_diff(&(u.adjoint() * u), &ComplexMatrix4::identity()) < 1e-15);
        let v = fw_transform(&p, 1.0, FwSign::Minus).unwrap();
        assert!(max_abs_diff(&(u * v), &ComplexMatrix4::identity()) < 1e-15);
        assert!(max_abs_diff(&v, &u.adjoint()) < 1e-15);
    }

    #[test]
    fn o_at_rest_is_beta_sigma() {
        let o = o_operator(&Momentum3::zero(), 1.0).unwrap();
        let d = dirac();
        for i in 0..3 {
            assert!(max_abs_diff(&o[i], &(d.beta * d.sigma[i])) < 1e-15);
        }
    }

    #[test]
    fn o_is_hermitian() {
        let p = Momentum3::new(-1.1, 0.4, 2.3);
        for oi in o_operator(&p, 1.0).unwrap() {
            assert!(max_abs_diff(&oi, &oi.adjoint()) < 1e-14);
        }
    }

    #[test]
    fn mean_spin_of_boosted_spin_up() {
        // spinor sandwich written out by hand instead of through U
        let q: f64 = 0.8;
        let m: f64 = 1.0;
        let e: f64 = (m * m + q * q).sqrt();
        let n = (2.0 * e * (e + m)).sqrt();
        // U†(1,0,0,0) = ((E+m), 0, q, 0)/N for p along z
        let u = Spinor::new(real((e + m) / n), real(0.0), real(q / n), real(0.0));
        let built = positive_energy_spinor(&Momentum3::new(0.0, 0.0, q), m, &two_spinor_along(&Vec3::z()))
            .unwrap();
        assert!((u - built).norm() < 1e-15);
        let o = o_operator(&Momentum3::new(0.0, 0.0, q), m).unwrap();
        let o3 = (u.adjoint() * o[2] * u)[(0, 0)];
        assert!((o3 - real(1.0)).norm() < 1e-14);
    }

    #[test]
    fn positive_spinor_is_eigenvector() {
        let p = Momentum3::new(0.4, 0.9, -0.3);
        let chi = two_spinor_along(&Vec3::new(1.0, -2.0, 0.5));
        let u = positive_energy_spinor(&p, 1.3, &chi).unwrap();
        let h = free_hamiltonian(&p, 1.3).unwrap();
        assert!((h * u - u * real(p.energy(1.3))).norm() < 1e-14);
        let neg = negative_energy_projector(&p, 1.3).unwrap();
        assert!((neg * u).norm() < 1e-15);
    }

    #[test]
    fn two_spinor_points_along_axis() {
        let s = crate::dirac::pauli();
        for n in [Vec3::x(), -Vec3::y(), -Vec3::z(), Vec3::new(0.3, 0.4, -0.2)] {
            let chi = two_spinor_along(&n);
            let nn = n.normalize();
            for i in 0..3 {
                let val = (chi.adjoint() * s[i] * chi)[(0, 0)];
                assert!((val.re - nn[i]).abs() < 1e-15 && val.im.abs() < 1e-15);
            }
        }
    }
}
