use std::fmt;
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl Status {
    /// Pass at or below `pass`, warn up to `warn`, fail beyond (or on NaN).
    pub fn grade(residual: f64, pass: f64, warn: f64) -> Status {
        if residual <= pass {
            Status::Pass
        } else if residual <= warn {
            Status::Warn
        } else {
            Status::Fail
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Warn => "warn",
            Status::Fail => "fail",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub status: Status,
    pub residual: f64,
    pub tolerance: f64,
    #[serde(rename = "wall_time_s", serialize_with = "seconds")]
    pub wall_time: Duration,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl CheckRow {
    /// A check that passes when `residual <= tolerance`.
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self::graded(name, residual, tolerance, tolerance)
    }

    pub fn graded(name: impl Into<String>, residual: f64, tolerance: f64, warn: f64) -> Self {
        CheckRow {
            name: name.into(),
            status: Status::grade(residual, tolerance, warn),
            residual,
            tolerance,
            wall_time: Duration::ZERO,
        }
    }

    pub fn timed(mut self, wall_time: Duration) -> Self {
        self.wall_time = wall_time;
        self
    }
}

/// Named checks of one run, printed with 6 significant digits.
#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct RunReport {
    pub title: String,
    #[serde(rename = "check")]
    pub rows: Vec<CheckRow>,
}

impl RunReport {
    pub fn new(title: impl Into<String>) -> Self {
        RunReport { title: title.into(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: CheckRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: RunReport) {
        self.rows.extend(other.rows);
    }

    pub fn get(&self, name: &str) -> Option<&CheckRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Structured key-value form (TOML).
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("report is always representable as TOML")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(5).max(5);
        writeln!(f, "# {}", self.title)?;
        writeln!(f, "{:<width$}  {:<6}{:>14}{:>14}{:>12}", "check", "status", "residual", "tolerance", "time [s]")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<width$}  {:<6}{:>14.5e}{:>14.5e}{:>12.5e}",
                r.name,
                r.status.label(),
                r.residual,
                r.tolerance,
                r.wall_time.as_secs_f64()
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grading() {
        assert_eq!(Status::grade(1e-4, 1e-3, 1e-2), Status::Pass);
        assert_eq!(Status::grade(5e-3, 1e-3, 1e-2), Status::Warn);
        assert_eq!(Status::grade(1.0, 1e-3, 1e-2), Status::Fail);
        assert_eq!(Status::grade(f64::NAN, 1e-3, 1e-2), Status::Fail);
    }

    #[test]
    fn exit_code_follows_failures() {
        let mut r = RunReport::new("t");
        r.push(CheckRow::graded("a", 2.0, 1.0, 3.0));
        assert_eq!(r.exit_code(), 0);
        r.push(CheckRow::new("b", 2.0, 1.0));
        assert_eq!(r.exit_code(), 1);
        let text = r.to_string();
        assert!(text.contains("warn") && text.contains("fail"));
        assert!(r.to_toml().contains("[[check]]"));
    }
}
