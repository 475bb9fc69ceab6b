//! Experiment reports and their CSV/JSON serialized forms.
//!
//! Every experiment runner produces an [`ExperimentReport`]: run metadata, a
//! list of axis descriptors, and one or more named tables of typed cells.
//! JSON serialization carries the whole report; CSV serialization writes one
//! file per table (the first table at the requested path, the rest at
//! derived paths) and holds only tabular data.
//!
//! Numbers survive a round trip: floats are written in the shortest form
//! that parses back to the identical bit pattern, and the CSV reader infers
//! integer, float, and text cells from their rendered forms.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write as _};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::optim::OptimizerSettings;

/// Plain mirror of [`SystemConfig`] for embedding in report metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemSnapshot {
    pub user_count: usize,
    pub transmit_power_dbm: f64,
    pub noise_power_dbm: f64,
    pub path_loss_constant: f64,
    pub path_loss_exponent: f64,
    pub residual_sic_factor: f64,
}

impl From<&SystemConfig> for SystemSnapshot {
    fn from(config: &SystemConfig) -> Self {
        SystemSnapshot {
            user_count: config.user_count(),
            transmit_power_dbm: config.transmit_power_dbm(),
            noise_power_dbm: config.noise_power_dbm(),
            path_loss_constant: config.path_loss_constant(),
            path_loss_exponent: config.path_loss_exponent(),
            residual_sic_factor: config.residual_sic_factor(),
        }
    }
}

/// Plain mirror of [`OptimizerSettings`] for embedding in report metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerSnapshot {
    pub grid_step: f64,
    pub boundary_margin: f64,
    pub refinement_iterations: usize,
    pub refinement_tolerance: f64,
}

impl From<&OptimizerSettings> for OptimizerSnapshot {
    fn from(settings: &OptimizerSettings) -> Self {
        OptimizerSnapshot {
            grid_step: settings.grid_step(),
            boundary_margin: settings.boundary_margin(),
            refinement_iterations: settings.refinement_iterations(),
            refinement_tolerance: settings.refinement_tolerance(),
        }
    }
}

/// Context an experiment ran under. Fields that do not apply to a given
/// experiment stay `None` and are omitted from JSON.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distances_m: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gains: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_index: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_allocation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemSnapshot>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimizer: Option<OptimizerSnapshot>,
}

/// One axis an experiment swept, with its grid of values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub unit: String,
    pub values: Vec<f64>,
}

/// A single typed table cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Null,
}

impl Cell {
    /// Renders the cell for CSV. Floats use the shortest representation
    /// that round-trips (integral floats keep a trailing `.0`), nulls
    /// render as the empty string.
    fn render(&self) -> String {
        match self {
            Cell::Int(value) => value.to_string(),
            Cell::Float(value) => format!("{value:?}"),
            Cell::Text(value) => value.clone(),
            Cell::Null => String::new(),
        }
    }

    /// Inverse of [`Cell::render`]: empty → null, then integer, float, and
    /// finally text.
    fn parse(field: &str) -> Cell {
        if field.is_empty() {
            return Cell::Null;
        }
        if let Ok(value) = field.parse::<i64>() {
            return Cell::Int(value);
        }
        if let Ok(value) = field.parse::<f64>() {
            return Cell::Float(value);
        }
        Cell::Text(field.to_string())
    }

    /// Numeric view of the cell, treating integers as floats.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Int(value) => Some(*value as f64),
            Cell::Float(value) => Some(*value),
            _ => None,
        }
    }
}

/// A named table: a header row and typed data rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, columns: Vec<String>) -> Self {
        Table {
            name: name.into(),
            columns,
            rows: Vec::new(),
        }
    }

    /// Appends a row, which must match the header width.
    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    /// Index of a named column.
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|column| column == name)
    }

    /// All values of a named column as floats (integer cells converted).
    pub fn column_f64(&self, name: &str) -> Result<Vec<f64>> {
        let index = self
            .column_index(name)
            .ok_or_else(|| Error::domain(format!("table {} has no column {name:?}", self.name)))?;
        self.rows
            .iter()
            .map(|row| {
                row[index]
                    .as_f64()
                    .ok_or_else(|| Error::domain(format!("column {name:?} holds non-numeric cells")))
            })
            .collect()
    }
}

/// A complete experiment result: what ran, under which context, and the
/// resulting tables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub metadata: Metadata,
    pub axes: Vec<Axis>,
    pub tables: Vec<Table>,
}

impl ExperimentReport {
    /// The table with the given name, if present.
    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|table| table.name == name)
    }
}

/// Writes the whole report as pretty-printed JSON.
pub fn write_json(report: &ExperimentReport, path: &Path) -> Result<()> {
    let file = File::create(path)?;
    let mut writer = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut writer, report)
        .map_err(|err| Error::io(format!("cannot serialize report: {err}")))?;
    writer.write_all(b"\n")?;
    writer.flush()?;
    Ok(())
}

/// Reads a report previously written by [`write_json`].
pub fn read_json(path: &Path) -> Result<ExperimentReport> {
    let file = File::open(path)?;
    serde_json::from_reader(BufReader::new(file))
        .map_err(|err| Error::domain(format!("cannot parse report {}: {err}", path.display())))
}

fn sibling_path(path: &Path, table_name: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|stem| stem.to_string_lossy().into_owned())
        .unwrap_or_else(|| "report".to_string());
    let extension = path
        .extension()
        .map(|ext| ext.to_string_lossy().into_owned())
        .unwrap_or_else(|| "csv".to_string());
    path.with_file_name(format!("{stem}.{table_name}.{extension}"))
}

fn write_table_csv(table: &Table, path: &Path) -> Result<()> {
    if table
        .rows
        .iter()
        .any(|row| row.len() != table.columns.len())
    {
        return Err(Error::domain(format!(
            "table {} has rows not matching its {}-column header",
            table.name,
            table.columns.len()
        )));
    }
    let mut writer = csv::Writer::from_path(path)
        .map_err(|err| Error::io(format!("cannot open {}: {err}", path.display())))?;
    writer
        .write_record(&table.columns)
        .map_err(|err| Error::io(err.to_string()))?;
    for row in &table.rows {
        writer
            .write_record(row.iter().map(Cell::render))
            .map_err(|err| Error::io(err.to_string()))?;
    }
    writer.flush()?;
    Ok(())
}

/// Writes the report's tables as CSV: the first table at `path`, any others
/// at `<stem>.<table_name>.<ext>` next to it. Returns every path written.
/// Metadata and axes are not representable in CSV; use JSON to keep them.
pub fn write_csv(report: &ExperimentReport, path: &Path) -> Result<Vec<PathBuf>> {
    if report.tables.is_empty() {
        return Err(Error::domain("report has no tables to write"));
    }
    let mut written = Vec::with_capacity(report.tables.len());
    write_table_csv(&report.tables[0], path)?;
    written.push(path.to_path_buf());
    for table in &report.tables[1..] {
        let sibling = sibling_path(path, &table.name);
        write_table_csv(table, &sibling)?;
        written.push(sibling);
    }
    Ok(written)
}

/// Reads one CSV table back. The table name is taken from the file stem;
/// cell types are inferred from the rendered forms.
pub fn read_table_csv(path: &Path) -> Result<Table> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|err| Error::io(format!("cannot open {}: {err}", path.display())))?;
    let columns: Vec<String> = reader
        .headers()
        .map_err(|err| Error::domain(format!("bad CSV header: {err}")))?
        .iter()
        .map(str::to_string)
        .collect();
    let name = path
        .file_stem()
        .map(|stem| stem.to_string_lossy().into_owned())
        .unwrap_or_default();
    let mut table = Table::new(name, columns);
    for record in reader.records() {
        let record = record.map_err(|err| Error::domain(format!("bad CSV row: {err}")))?;
        table.rows.push(record.iter().map(Cell::parse).collect());
    }
    Ok(table)
}
