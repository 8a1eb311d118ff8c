use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::CliError;

/// Header plus rows of already formatted cells.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResultTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl ResultTable {
    pub fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Cells of column `name` parsed as numbers.
    pub fn numbers(&self, name: &str) -> Vec<f64> {
        let i = self.column(name).unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().map(|r| r[i].parse().unwrap_or(f64::NAN)).collect()
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.into_inner().map_err(|e| CliError::Io(e.into_error()))
    }
}

/// Shortest round-trip decimal form.
pub fn num(x: f64) -> String {
    format!("{x}")
}

#[derive(Debug, Serialize)]
struct Sidecar<'a> {
    scenario: &'a str,
    table: &'a str,
    config_digest: String,
    master_seed: u64,
    n_samples: usize,
    rows: usize,
    runtime_s: f64,
}

/// Writes `<dir>/<name>.csv` and a `<dir>/<name>.json` summary. Returns the CSV path.
pub fn write_table(
    dir: &Path,
    name: &str,
    table: &ResultTable,
    cfg: &ExperimentConfig,
    runtime_s: f64,
) -> Result<PathBuf, CliError> {
    std::fs::create_dir_all(dir)?;
    let csv_path = dir.join(format!("{name}.csv"));
    std::fs::write(&csv_path, table.to_csv()?)?;
    let side = Sidecar {
        scenario: cfg.scenario.name(),
        table: name,
        config_digest: cfg.digest(),
        master_seed: cfg.master_seed,
        n_samples: cfg.n_samples,
        rows: table.rows.len(),
        runtime_s,
    };
    let json = serde_json::to_string_pretty(&side).expect("sidecar serialises");
    std::fs::write(dir.join(format!("{name}.json")), json + "\n")?;
    Ok(csv_path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_header_and_rows() {
        let mut t = ResultTable::new(&["a", "b"]);
        t.push(vec![num(0.1), num(2.0)]);
        assert_eq!(String::from_utf8(t.to_csv().unwrap()).unwrap(), "a,b\n0.1,2\n");
        assert_eq!(t.numbers("b"), vec![2.0]);
    }
}
