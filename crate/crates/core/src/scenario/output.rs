use std::fs;
use std::path::Path;

use crate::classical::Trajectory;
use crate::dirac::PryceKind;
use crate::{Error, Result, Vec3};

/// Trajectory table: one header, one row of numbers per sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }
}

fn push3(row: &mut Vec<f64>, v: &Vec3) {
    row.extend_from_slice(&[v.x, v.y, v.z]);
}

/// Columns: t, x, v, rest-frame s, lab spin (S⁰, S), δX_P, one X_P triple
/// per requested kind, the compact V_P, and the energy γ̄m.
pub fn trajectory_table(traj: &Trajectory, kinds: &[PryceKind]) -> Table {
    let mut header: Vec<String> = ["t", "x", "y", "z", "vx", "vy", "vz", "sx", "sy", "sz", "S0", "Sx", "Sy", "Sz", "dXx", "dXy", "dXz"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for k in kinds {
        for c in ["x", "y", "z"] {
            header.push(format!("X{}_{c}", k.label()));
        }
    }
    header.extend(["Vp_x", "Vp_y", "Vp_z", "energy"].iter().map(|s| s.to_string()));

    let m = traj.fields.mass;
    let rows = traj
        .samples
        .iter()
        .map(|smp| {
            let st = &smp.state;
            let mut row = vec![st.t];
            push3(&mut row, &st.x);
            push3(&mut row, &st.v);
            push3(&mut row, &st.s);
            row.push(smp.lab_spin.s0);
            push3(&mut row, &smp.lab_spin.s);
            push3(&mut row, &smp.shift);
            for k in kinds {
                push3(&mut row, &smp.mass_center(*k));
            }
            push3(&mut row, &smp.anomalous_velocity);
            row.push(smp.energy(m));
            row
        })
        .collect();
    Table { header, rows }
}

/// 17 significant digits, enough to round-trip every f64.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv(path: &Path, table: &Table) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|x| format_number(*x)))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `<column>.dat` with two whitespace-separated columns (t, value)
/// for each requested column, readable by gnuplot.
pub fn write_plots(dir: &Path, table: &Table, columns: &[String]) -> Result<()> {
    let t = table.column("t").expect("table always has a time column");
    for name in columns {
        let values = table
            .column(name)
            .ok_or_else(|| Error::Config(format!("output.plot: unknown column '{name}'")))?;
        let mut text = format!("# t {name}\n");
        for (a, b) in t.iter().zip(&values) {
            text.push_str(&format!("{} {}\n", format_number(*a), format_number(*b)));
        }
        fs::write(dir.join(format!("{name}.dat")), text)?;
    }
    Ok(())
}
