//! ⟨X_P⟩ − ⟨x̂⟩ for the three mass centers of a packet, compared with
//! f_P ⟨T⟩×⟨p̂⟩ / (2m²γ̄), and the absolute positions ⟨x̂⟩, ⟨X_P⟩.

use pryce_spin::dirac::{Momentum3, PryceKind};
use pryce_spin::wavepacket::{mass_center_offset, verify_main_result, GridSpec, MomentumWavePacket};
use pryce_spin::Vec3;

fn main() -> pryce_spin::Result<()> {
    let packet = MomentumWavePacket::gaussian(
        Momentum3::new(0.0, 0.0, 0.6),
        Vec3::repeat(0.01),
        Vec3::new(1.0, 0.0, 0.0),
        1.0,
        GridSpec::default(),
    )?
    .translated(&Vec3::new(1.0, -2.0, 0.5));

    let x = packet.expectation_position()?;
    println!("gamma = {:.6}, <x> = {:?}", packet.gamma(), x.as_slice());
    for kind in PryceKind::ALL {
        let row = &verify_main_result(&packet, kind)?.rows[0];
        let x_p = x + mass_center_offset(&packet, kind)?;
        println!("{}\n  <X_{kind}> = {:?}", row.id, x_p.as_slice());
        println!("  offset {}  predicted {}  residual {:.3e}", row.lhs, row.rhs, row.residual);
    }
    let od = mass_center_offset(&packet, PryceKind::D)?;
    let oe = mass_center_offset(&packet, PryceKind::E)?;
    println!("d/e offset ratio {:.6} vs 1 + gamma = {:.6}", od.y / oe.y, 1.0 + packet.gamma());
    Ok(())
}
