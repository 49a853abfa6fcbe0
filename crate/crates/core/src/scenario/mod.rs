//! Scenario files, the runs they drive, and their reports.

mod config;
mod converge;
mod gallery;
mod output;
mod report;
mod simulate;
mod verify;

pub use config::{
    parse_config, AlgebraBlock, ConvergeBlock, ConvergeTarget, FieldsBlock, InitialBlock, IntegrationBlock, Mode,
    OutputBlock, PacketBlock, ScenarioConfig, SpinNormSetting,
};
pub use converge::{convergence_ladder, run_converge, ConvergenceRun, ConvergenceTable, Rung};
pub use gallery::{gallery_configs, run_gallery, GALLERY};
pub use output::{format_number, trajectory_table, write_csv, write_plots, Table};
pub use report::{CheckRow, RunReport, Status};
pub use simulate::{
    form_agreement, low_velocity_checks, low_velocity_tolerance, run_simulate, trajectory_checks, worst,
    SimulationRun, ENERGY_TOLERANCE, FORM_AGREEMENT_TOLERANCE, LOW_VELOCITY_LIMIT, SPIN_NORM_TOLERANCE,
};
pub use verify::{fg_warn_threshold, run_verify_algebra, run_verify_fg, verify_packet, FgVerification};

/// Reads and validates a scenario file.
pub fn load_config(path: &std::path::Path) -> crate::Result<ScenarioConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| crate::Error::Config(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}
