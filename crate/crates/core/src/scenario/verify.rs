use std::fs;
use std::path::Path;
use std::time::Instant;

use super::config::{AlgebraBlock, ScenarioConfig};
use super::report::{CheckRow, RunReport};
use crate::dirac::{random_momenta, verify_algebra, PryceKind, ALGEBRA_TOLERANCE};
use crate::wavepacket::{
    mass_center_offset, verify_fg_relations, verify_main_result, ExpectationReport, MomentumWavePacket, FG_ENVELOPE,
    FG_PASS, MAIN_RESULT_C_TOLERANCE,
};
use crate::Result;

/// Algebra identities over `samples` random momenta with |p| ≤ `max_momentum`.
pub fn run_verify_algebra(block: &AlgebraBlock, mass: f64) -> Result<RunReport> {
    let start = Instant::now();
    let momenta = random_momenta(block.samples, block.max_momentum, block.seed);
    let checks = verify_algebra(&momenta, mass)?;
    let elapsed = start.elapsed();
    let mut report = RunReport::new(format!(
        "algebra: {} momenta, |p| <= {}, seed {}",
        block.samples, block.max_momentum, block.seed
    ));
    for c in checks {
        report.push(CheckRow::new(format!("algebra[{}]", c.name), c.residual, ALGEBRA_TOLERANCE).timed(elapsed));
    }
    Ok(report)
}

/// Warn threshold for a packet of this width: FG_ENVELOPE · (Δp/m)².
pub fn fg_warn_threshold(packet: &MomentumWavePacket) -> f64 {
    let dp = packet.widths().max() / packet.mass();
    (FG_ENVELOPE * dp * dp).max(FG_PASS)
}

#[derive(Debug, Clone)]
pub struct FgVerification {
    pub relations: ExpectationReport,
    pub report: RunReport,
}

/// Expectation-value relations and the mass-center offsets of a packet.
pub fn verify_packet(packet: &MomentumWavePacket, kinds: &[PryceKind]) -> Result<FgVerification> {
    let warn = fg_warn_threshold(packet);
    let mut report = RunReport::new("expectation values");

    let start = Instant::now();
    let mut relations = verify_fg_relations(packet)?;
    let elapsed = start.elapsed();
    for row in &relations.rows {
        report.push(CheckRow::graded(format!("fg[{}]", row.id), row.residual, FG_PASS, warn).timed(elapsed));
    }

    for &kind in kinds {
        let start = Instant::now();
        let main = verify_main_result(packet, kind)?;
        let elapsed = start.elapsed();
        for row in &main.rows {
            let check = match kind {
                PryceKind::C => CheckRow::new(&row.id, row.residual, MAIN_RESULT_C_TOLERANCE),
                _ => CheckRow::graded(&row.id, row.residual, FG_PASS, warn),
            };
            report.push(check.timed(elapsed));
        }
        relations.rows.extend(main.rows);
    }

    if kinds.contains(&PryceKind::D) && kinds.contains(&PryceKind::E) {
        let start = Instant::now();
        let od = mass_center_offset(packet, PryceKind::D)?;
        let oe = mass_center_offset(packet, PryceKind::E)?;
        // The ratio is undefined when both offsets vanish (spin along p).
        if oe.norm() > 1e-12 * packet.mass().recip() {
            let expected = 1.0 + packet.gamma();
            let ratio = od.dot(&oe) / oe.norm_squared();
            report.push(
                CheckRow::graded("offset_ratio[d/e]", (ratio / expected - 1.0).abs(), FG_PASS, warn)
                    .timed(start.elapsed()),
            );
        }
    }
    Ok(FgVerification { relations, report })
}

/// verify-fg: algebra suite plus the packet relations. Writes
/// `relations.txt`, `report.txt` and `report.toml` when `out` is given.
pub fn run_verify_fg(cfg: &ScenarioConfig, seed: Option<u64>, out: Option<&Path>) -> Result<FgVerification> {
    let mut block = cfg.algebra.clone().unwrap_or_default();
    if let Some(seed) = seed {
        block.seed = seed;
    }
    let mut report = run_verify_algebra(&block, cfg.mass)?;
    report.title = format!("verify-fg {}", cfg.name);
    let packet = cfg.packet()?;
    let fg = verify_packet(&packet, &cfg.pryce_kinds)?;
    report.extend(fg.report);
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("relations.txt"), fg.relations.to_string())?;
        fs::write(dir.join("report.txt"), report.to_string())?;
        fs::write(dir.join("report.toml"), report.to_toml())?;
    }
    Ok(FgVerification { relations: fg.relations, report })
}
