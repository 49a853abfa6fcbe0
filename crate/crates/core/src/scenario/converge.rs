use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use super::config::{ConvergeTarget, ScenarioConfig};
use super::output::format_number;
use super::report::{CheckRow, RunReport, Status};
use crate::classical::{integrate, Scenario, Trajectory};
use crate::wavepacket::verify_fg_relations;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rung {
    /// dt for the integrator, sample spacing for vp-fd, max width for fg
    pub resolution: f64,
    pub residual: f64,
    /// log₂(residual of the previous rung / this residual)
    pub order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub target: ConvergeTarget,
    pub rungs: Vec<Rung>,
    /// accepted range of observed orders
    pub window: (f64, f64),
}

impl ConvergenceTable {
    fn from_residuals(target: ConvergeTarget, resolutions: Vec<f64>, residuals: Vec<f64>) -> Self {
        let window = match target {
            ConvergeTarget::Integrator => (3.5, 4.5),
            ConvergeTarget::Fg | ConvergeTarget::VpFd => (1.5, 2.5),
        };
        let rungs = resolutions
            .iter()
            .zip(&residuals)
            .enumerate()
            .map(|(i, (&resolution, &residual))| Rung {
                resolution,
                residual,
                order: (i > 0).then(|| (residuals[i - 1] / residual).log2()),
            })
            .collect();
        ConvergenceTable { target, rungs, window }
    }

    pub fn orders(&self) -> Vec<f64> {
        self.rungs.iter().filter_map(|r| r.order).collect()
    }

    /// One row per observed order; residual is the distance from the middle
    /// of the window.
    pub fn report(&self) -> RunReport {
        let (lo, hi) = self.window;
        let mid = 0.5 * (lo + hi);
        let mut report = RunReport::new(format!("converge {}", self.target_label()));
        for (i, order) in self.orders().into_iter().enumerate() {
            let mut row = CheckRow::new(format!("order[{}]", i + 1), (order - mid).abs(), 0.5 * (hi - lo));
            if !(lo..=hi).contains(&order) {
                row.status = Status::Fail;
            }
            report.push(row);
        }
        report
    }

    pub fn target_label(&self) -> &'static str {
        match self.target {
            ConvergeTarget::Integrator => "integrator",
            ConvergeTarget::Fg => "fg",
            ConvergeTarget::VpFd => "vp-fd",
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("resolution,residual,order\n");
        for r in &self.rungs {
            let order = r.order.map(format_number).unwrap_or_default();
            s.push_str(&format!("{},{},{}\n", format_number(r.resolution), format_number(r.residual), order));
        }
        s
    }
}

impl fmt::Display for ConvergenceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} (order window {}..{})", self.target_label(), self.window.0, self.window.1)?;
        writeln!(f, "{:>14}{:>14}{:>10}", "resolution", "residual", "order")?;
        for r in &self.rungs {
            let order = r.order.map(|o| format!("{o:.4}")).unwrap_or_else(|| "-".into());
            writeln!(f, "{:>14.5e}{:>14.5e}{:>10}", r.resolution, r.residual, order)?;
        }
        Ok(())
    }
}

fn refined(base: &Scenario, level: u32, keep_sample_times: bool) -> Scenario {
    let k = 1usize << level;
    let mut sc = base.clone();
    sc.dt = base.dt / k as f64;
    sc.steps = base.steps * k;
    if keep_sample_times {
        sc.sample_every = base.sample_every * k;
    }
    sc
}

fn final_phase(traj: &Trajectory) -> Result<[f64; 6]> {
    let st = &traj.last().state;
    let p = st.momentum(traj.fields.mass)?;
    Ok([st.x.x, st.x.y, st.x.z, p.x, p.y, p.z])
}

/// Refinement ladder for the integrator (Richardson differences of the final
/// position and momentum), the packet relations (largest residual as Δp
/// halves) or the central-difference anomalous velocity (largest deviation
/// from the compact V_P as the sample spacing halves).
pub fn convergence_ladder(cfg: &ScenarioConfig, target: ConvergeTarget, rungs: usize) -> Result<ConvergenceTable> {
    if rungs < 3 {
        return Err(Error::LadderTooShort(rungs));
    }
    let levels = rungs as u32;
    match target {
        ConvergeTarget::Integrator => {
            let base = cfg.scenario()?;
            let finals = (0..=levels)
                .map(|l| final_phase(&integrate(&refined(&base, l, true))?))
                .collect::<Result<Vec<_>>>()?;
            let residuals = finals
                .windows(2)
                .map(|w| w[0].iter().zip(&w[1]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
                .collect();
            let resolutions = (0..levels).map(|l| base.dt / (1u64 << l) as f64).collect();
            Ok(ConvergenceTable::from_residuals(target, resolutions, residuals))
        }
        ConvergeTarget::Fg => {
            let mut resolutions = Vec::new();
            let mut residuals = Vec::new();
            for l in 0..levels {
                let scale = 0.5f64.powi(l as i32);
                let packet = cfg.packet_with_widths(Some(scale))?;
                resolutions.push(packet.widths().max());
                residuals.push(verify_fg_relations(&packet)?.max_residual());
            }
            Ok(ConvergenceTable::from_residuals(target, resolutions, residuals))
        }
        ConvergeTarget::VpFd => {
            let base = cfg.scenario()?;
            let mut resolutions = Vec::new();
            let mut residuals = Vec::new();
            for l in 0..levels {
                let traj = integrate(&refined(&base, l, false))?;
                let worst = traj
                    .central_difference(|x| x.shift)
                    .into_iter()
                    .map(|(i, fd)| (fd - traj.samples[i].anomalous_velocity).norm())
                    .fold(0.0, f64::max);
                resolutions.push(traj.interval);
                residuals.push(worst);
            }
            Ok(ConvergenceTable::from_residuals(target, resolutions, residuals))
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConvergenceRun {
    pub table: ConvergenceTable,
    pub report: RunReport,
}

/// converge: builds the ladder from the [converge] block and writes
/// `convergence.txt`, `convergence.csv` and the report when `out` is given.
pub fn run_converge(cfg: &ScenarioConfig, out: Option<&Path>) -> Result<ConvergenceRun> {
    let block = cfg
        .converge
        .as_ref()
        .ok_or_else(|| Error::Config("mode 'converge' requires a [converge] section".into()))?;
    let start = Instant::now();
    let table = convergence_ladder(cfg, block.target, block.rungs)?;
    let elapsed = start.elapsed();
    let mut report = table.report();
    report.title = format!("converge {} ({})", cfg.name, table.target_label());
    for row in &mut report.rows {
        row.wall_time = elapsed;
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("convergence.txt"), table.to_string())?;
        fs::write(dir.join("convergence.csv"), table.to_csv())?;
        fs::write(dir.join("report.txt"), report.to_string())?;
        fs::write(dir.join("report.toml"), report.to_toml())?;
    }
    Ok(ConvergenceRun { table, report })
}

