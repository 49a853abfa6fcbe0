use std::fs;
use std::path::Path;
use std::time::Instant;

use super::config::ScenarioConfig;
use super::output::{trajectory_table, write_csv, write_plots, Table};
use super::report::{CheckRow, RunReport, Status};
use crate::classical::{
    anomalous_velocity_decomposed, anomalous_velocity_thomas_form, gamma_regime, integrate, FieldConfig,
    Trajectory, GAMMA_WARN_RATE,
};
use crate::dirac::PryceKind;
use crate::{Result, Vec3};

/// Spin-norm drift allowed over a run.
pub const SPIN_NORM_TOLERANCE: f64 = 1e-12;
/// Relative energy drift allowed when there is no electric field.
pub const ENERGY_TOLERANCE: f64 = 1e-10;
/// Absolute agreement required between the forms of V_P.
pub const FORM_AGREEMENT_TOLERANCE: f64 = 1e-10;
/// The low-velocity comparison is made only while γ̄ − 1 stays below this.
pub const LOW_VELOCITY_LIMIT: f64 = 1e-4;

#[derive(Debug, Clone)]
pub struct SimulationRun {
    pub trajectory: Trajectory,
    pub table: Table,
    pub report: RunReport,
}

/// Integrates the scenario, evaluates the trajectory checks and, when `out`
/// is given, writes `trajectory.csv`, `report.txt` and `report.toml` there
/// (plus `<column>.dat` files when `plot` is set).
pub fn run_simulate(cfg: &ScenarioConfig, out: Option<&Path>, plot: bool) -> Result<SimulationRun> {
    let start = Instant::now();
    let trajectory = integrate(&cfg.scenario()?)?;
    let elapsed = start.elapsed();

    let mut report = RunReport::new(format!("simulate {}", cfg.name));
    for row in trajectory_checks(&trajectory, &cfg.pryce_kinds, cfg.scenario()?.fastest_rate()?)? {
        report.push(row);
    }
    // Every row is derived from the one integration; charge its time to all.
    for row in &mut report.rows {
        row.wall_time = elapsed;
    }

    let table = trajectory_table(&trajectory, &cfg.pryce_kinds);
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        write_csv(&dir.join("trajectory.csv"), &table)?;
        fs::write(dir.join("report.txt"), report.to_string())?;
        fs::write(dir.join("report.toml"), report.to_toml())?;
        if plot {
            write_plots(dir, &table, &cfg.plot_columns())?;
        }
    }
    Ok(SimulationRun { trajectory, table, report })
}

/// d f_P / dγ̄
fn fp_slope(kind: PryceKind, gamma: f64) -> f64 {
    match kind {
        PryceKind::C | PryceKind::D => 0.0,
        PryceKind::E => -1.0 / ((1.0 + gamma) * (1.0 + gamma)),
    }
}

fn max_norm<'a>(it: impl Iterator<Item = &'a Vec3>) -> f64 {
    it.map(|v| v.norm()).fold(0.0, f64::max)
}

/// Consistency checks on an integrated trajectory.
pub fn trajectory_checks(traj: &Trajectory, kinds: &[PryceKind], rate: f64) -> Result<Vec<CheckRow>> {
    let f = &traj.fields;
    let m = f.mass;
    let samples = &traj.samples;
    let first = &samples[0];
    let mut rows = Vec::new();

    let s0 = first.state.s.norm();
    if s0 > 0.0 {
        let drift = samples.iter().map(|x| (x.state.s.norm() / s0 - 1.0).abs()).fold(0.0, f64::max);
        rows.push(CheckRow::new("spin_norm", drift, SPIN_NORM_TOLERANCE));
    }
    if f.electric == Vec3::zeros() {
        let drift = samples.iter().map(|x| (x.gamma / first.gamma - 1.0).abs()).fold(0.0, f64::max);
        rows.push(CheckRow::new("energy", drift, ENERGY_TOLERANCE));
    }
    let rate_gamma = samples
        .iter()
        .map(|x| (f.charge * f.electric.dot(&x.state.v)).abs() / (m * m))
        .fold(0.0, f64::max);
    rows.push(CheckRow::graded("constant_gamma", rate_gamma, GAMMA_WARN_RATE, f64::INFINITY));

    // Exact d/dt of X_P = x + f_P δX_P along the flow.
    let gamma_dot = |i: usize| f.charge * f.electric.dot(&samples[i].state.v) / m;
    let h = traj.interval;
    let fd_bound = |scale: f64, size: f64| (h * rate).powi(2) * scale + 4.0 * f64::EPSILON * size / h + 1e-15;
    let max_x = max_norm(samples.iter().map(|x| &x.state.x));
    for &kind in kinds {
        let analytic = |i: usize| -> Result<Vec3> {
            let smp = &samples[i];
            Ok(kind.fp(smp.gamma)? * smp.anomalous_velocity + fp_slope(kind, smp.gamma) * gamma_dot(i) * smp.shift)
        };
        let mut residual: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for (i, fd) in traj.central_difference(|x| x.mass_center(kind)) {
            let exact = samples[i].state.v + analytic(i)?;
            residual = residual.max((fd - exact).norm());
            scale = scale.max(exact.norm());
        }
        let size = max_x + max_norm(samples.iter().map(|x| &x.shift));
        rows.push(CheckRow::new(format!("mass_center_velocity[{kind}]"), residual, fd_bound(scale, size)));
    }

    rows.extend(form_agreement(traj)?);
    rows.extend(low_velocity_checks(traj, kinds)?);
    Ok(rows)
}

/// Compact vs decomposed V_P at every sample with constant γ̄, and compact vs
/// the Thomas form at every sample with F′ = 0. Rows appear only when some
/// sample is admissible; the row name carries the number of samples used.
pub fn form_agreement(traj: &Trajectory) -> Result<Vec<CheckRow>> {
    let f: &FieldConfig = &traj.fields;
    let mut decomposed = (0usize, 0.0f64);
    let mut thomas = (0usize, 0.0f64);
    for smp in &traj.samples {
        let st = &smp.state;
        if gamma_regime(st, f).is_constant() {
            let (ve, vb) = anomalous_velocity_decomposed(st, f)?;
            decomposed.0 += 1;
            decomposed.1 = decomposed.1.max((ve + vb - smp.anomalous_velocity).norm());
        }
        if let Ok(vt) = anomalous_velocity_thomas_form(st, f) {
            thomas.0 += 1;
            thomas.1 = thomas.1.max((vt - smp.anomalous_velocity).norm());
        }
    }
    let mut rows = Vec::new();
    if decomposed.0 > 0 {
        rows.push(CheckRow::new(
            format!("forms_agree[decomposed,n={}]", decomposed.0),
            decomposed.1,
            FORM_AGREEMENT_TOLERANCE,
        ));
    }
    if thomas.0 > 0 {
        rows.push(CheckRow::new(format!("forms_agree[thomas,n={}]", thomas.0), thomas.1, FORM_AGREEMENT_TOLERANCE));
    }
    Ok(rows)
}

/// Relative tolerance of the low-velocity comparison for each kind.
pub fn low_velocity_tolerance(kind: PryceKind) -> f64 {
    match kind {
        PryceKind::C => 1e-12,
        PryceKind::D => 1e-6,
        PryceKind::E => 1e-3,
    }
}

/// In a pure electric field at γ̄ → 1, the measured anomalous velocity of X_P
/// (central difference of X_P − x) approaches f_P(1)·(e/2m²) s×E. Residuals
/// are relative to the largest d-type prediction. Skipped when B ≠ 0 or the
/// motion is not slow.
pub fn low_velocity_checks(traj: &Trajectory, kinds: &[PryceKind]) -> Result<Vec<CheckRow>> {
    let f = &traj.fields;
    let slow = traj.samples.iter().all(|x| x.gamma - 1.0 < LOW_VELOCITY_LIMIT);
    if f.magnetic != Vec3::zeros() || f.electric == Vec3::zeros() || !slow {
        return Ok(Vec::new());
    }
    let m = f.mass;
    let base = |i: usize| f.charge / (2.0 * m * m) * traj.samples[i].state.s.cross(&f.electric);
    let scale = (0..traj.samples.len()).map(|i| base(i).norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    for &kind in kinds {
        let f1 = kind.fp(1.0)?;
        let residual = traj
            .central_difference(|x| x.mass_center(kind) - x.state.x)
            .into_iter()
            .map(|(i, fd)| (fd - f1 * base(i)).norm())
            .fold(0.0, f64::max)
            / scale;
        rows.push(CheckRow::new(format!("low_velocity[{kind}]"), residual, low_velocity_tolerance(kind)));
    }
    Ok(rows)
}

/// Worst status of a set of rows.
pub fn worst(rows: &[CheckRow]) -> Status {
    rows.iter().map(|r| r.status).fold(Status::Pass, |a, b| match (a, b) {
        (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
        (Status::Warn, _) | (_, Status::Warn) => Status::Warn,
        _ => Status::Pass,
    })
}
