//! Expectation-value relations of a sharply peaked packet, and how their
//! residuals shrink with the momentum width.

use pryce_spin::dirac::Momentum3;
use pryce_spin::wavepacket::{verify_fg_relations, GridSpec, MomentumWavePacket, FG_RELATIONS};
use pryce_spin::Vec3;

fn main() -> pryce_spin::Result<()> {
    let p0 = Momentum3::new(0.0, 0.0, 0.6);
    let spin = Vec3::new(1.0, 0.0, 0.0);
    let packet = |w: f64| MomentumWavePacket::gaussian(p0, Vec3::repeat(w), spin, 1.0, GridSpec::default());

    let report = verify_fg_relations(&packet(0.01)?)?;
    println!("width 0.01:\n{report}");

    let widths = [0.04, 0.02, 0.01];
    let reports = widths.iter().map(|&w| verify_fg_relations(&packet(w)?)).collect::<Result<Vec<_>, _>>()?;
    println!("{:<22}{}", "residual / width^2", widths.map(|w| format!("{w:>12}")).concat());
    for id in FG_RELATIONS {
        let cells: String = reports
            .iter()
            .zip(widths)
            .map(|(r, w)| format!("{:>12.4e}", r.get(id).expect("row present").residual / (w * w)))
            .collect();
        println!("{id:<22}{cells}");
    }
    Ok(())
}
