use std::fs;
use std::path::Path;

use super::config::{parse_config, ScenarioConfig};
use super::report::{CheckRow, RunReport, Status};
use super::simulate::{run_simulate, SimulationRun, FORM_AGREEMENT_TOLERANCE};
use crate::Result;

/// Shipped simulate scenarios: (file name, contents).
pub const GALLERY: [(&str, &str); 4] = [
    ("e_only_low_velocity.toml", include_str!("../../scenarios/e_only_low_velocity.toml")),
    ("cyclotron.toml", include_str!("../../scenarios/cyclotron.toml")),
    ("crossed_drift.toml", include_str!("../../scenarios/crossed_drift.toml")),
    ("thomas_form.toml", include_str!("../../scenarios/thomas_form.toml")),
];

pub fn gallery_configs() -> Result<Vec<ScenarioConfig>> {
    GALLERY.iter().map(|(_, text)| parse_config(text)).collect()
}

/// Runs every gallery scenario, each into `out/<name>/` when `out` is given.
/// Row names are prefixed with the scenario name. Each scenario must admit
/// the decomposed-form comparison, and at least one must admit the Thomas
/// form.
pub fn run_gallery(out: Option<&Path>, plot: bool) -> Result<(Vec<SimulationRun>, RunReport)> {
    let mut report = RunReport::new("gallery");
    let mut runs = Vec::new();
    let mut thomas_rows = 0;
    for cfg in gallery_configs()? {
        let dir = out.map(|d| d.join(&cfg.name));
        let run = run_simulate(&cfg, dir.as_deref(), plot)?;
        if !run.report.rows.iter().any(|r| r.name.starts_with("forms_agree[decomposed")) {
            report.push(CheckRow {
                status: Status::Fail,
                ..CheckRow::new(format!("{}/forms_agree[decomposed] (no admissible sample)", cfg.name), f64::NAN, FORM_AGREEMENT_TOLERANCE)
            });
        }
        thomas_rows += run.report.rows.iter().filter(|r| r.name.starts_with("forms_agree[thomas")).count();
        for row in &run.report.rows {
            report.push(CheckRow { name: format!("{}/{}", cfg.name, row.name), ..row.clone() });
        }
        runs.push(run);
    }
    if thomas_rows == 0 {
        report.push(CheckRow {
            status: Status::Fail,
            ..CheckRow::new("forms_agree[thomas] (no admissible sample)", f64::NAN, FORM_AGREEMENT_TOLERANCE)
        });
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.txt"), report.to_string())?;
        fs::write(dir.join("report.toml"), report.to_toml())?;
    }
    Ok((runs, report))
}
