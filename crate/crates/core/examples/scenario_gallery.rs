//! Runs the shipped scenarios and writes trajectories and reports under
//! `gallery-out/` (or the directory given as the first argument).

use std::path::PathBuf;

use pryce_spin::scenario::run_gallery;

fn main() -> pryce_spin::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| "gallery-out".into());
    let (runs, report) = run_gallery(Some(&out), true)?;
    print!("{report}");
    for run in &runs {
        println!("{}: {} samples", run.report.title, run.table.rows.len());
    }
    println!("written to {}", out.display());
    std::process::exit(i32::from(report.exit_code()));
}
