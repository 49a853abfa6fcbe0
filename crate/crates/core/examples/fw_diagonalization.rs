//! Foldy–Wouthuysen transform at one momentum: U H U† is diagonal, the
//! positive-energy spinor is U†(χ, 0), and O = U†βσU differs from σ.

use pryce_spin::dirac::{
    dirac, free_hamiltonian, fw_transform, little_group_generators, max_abs_diff, o_operator,
    positive_energy_spinor, two_spinor_along, FwSign, Momentum3,
};
use pryce_spin::Vec3;

fn main() -> pryce_spin::Result<()> {
    let m = 1.0;
    let p = Momentum3::new(0.3, -0.4, 1.2);
    let e = p.energy(m);
    println!("p = {:?}, E = {e:.6}, gamma = {:.6}", p.0.as_slice(), p.dilation(m));

    let h = free_hamiltonian(&p, m)?;
    let u = fw_transform(&p, m, FwSign::Plus)?;
    let diag = u * h * u.adjoint();
    let target = dirac().beta.map(|z| z * e);
    println!("|U H U^dag - beta E|_max = {:.3e}", max_abs_diff(&diag, &target));

    let chi = two_spinor_along(&Vec3::new(0.0, 0.0, 1.0));
    let u_p = positive_energy_spinor(&p, m, &chi)?;
    let residual = (h * u_p - u_p.map(|z| z * e)).norm();
    println!("|H u - E u| = {residual:.3e}");

    let o = o_operator(&p, m)?;
    let lg = little_group_generators(&p, m)?;
    for i in 0..3 {
        let exp = |a: &pryce_spin::dirac::ComplexMatrix4| (u_p.adjoint() * a * u_p)[(0, 0)].re;
        println!(
            "axis {i}: <sigma> = {:+.6}  <O> = {:+.6}  <T> = {:+.6}",
            exp(&dirac().sigma[i]),
            exp(&o[i]),
            exp(&lg.t[i])
        );
    }
    Ok(())
}
