//! CSV ingestion of a two-column series pair.

use std::fs::File;
use std::path::{Path, PathBuf};

use symte_core::TimeSeries;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("file not found: {0}")]
    FileNotFound(PathBuf),
    #[error("column `{0}` not found in header")]
    ColumnNotFound(String),
    #[error(
        "no usable rows: every row has a missing or non-numeric value in the selected columns"
    )]
    NoUsableRows,
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Two aligned series read from one CSV file.
#[derive(Debug, Clone)]
pub struct Ingested {
    pub x: TimeSeries,
    pub y: TimeSeries,
    /// Rows dropped for a missing or unparseable value.
    pub dropped: usize,
}

/// Resolves a selector against the header: an exact header name wins,
/// otherwise a 0-based column index.
pub fn resolve_column(headers: &csv::StringRecord, selector: &str) -> Result<usize, IngestError> {
    if let Some(i) = headers.iter().position(|h| h == selector) {
        return Ok(i);
    }
    match selector.parse::<usize>() {
        Ok(i) if i < headers.len() => Ok(i),
        _ => Err(IngestError::ColumnNotFound(selector.to_string())),
    }
}

fn parse_cell(record: &csv::StringRecord, i: usize) -> Option<f64> {
    record
        .get(i)
        .and_then(|s| s.trim().parse::<f64>().ok())
        .filter(|v| v.is_finite())
}

pub fn ingest_csv(path: &Path, x_col: &str, y_col: &str) -> Result<Ingested, IngestError> {
    let file = File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => IngestError::FileNotFound(path.to_path_buf()),
        _ => IngestError::Io(e),
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(file);
    let headers = reader.headers()?.clone();
    let (xi, yi) = (
        resolve_column(&headers, x_col)?,
        resolve_column(&headers, y_col)?,
    );

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut dropped = 0;
    let mut record = csv::StringRecord::new();
    while reader.read_record(&mut record)? {
        match (parse_cell(&record, xi), parse_cell(&record, yi)) {
            (Some(x), Some(y)) => {
                xs.push(x);
                ys.push(y);
            }
            _ => dropped += 1,
        }
    }
    if xs.is_empty() {
        return Err(IngestError::NoUsableRows);
    }
    let name = |i: usize| headers.get(i).unwrap_or_default().to_string();
    Ok(Ingested {
        x: TimeSeries::new(name(xi), xs).expect("finite, non-empty"),
        y: TimeSeries::new(name(yi), ys).expect("finite, non-empty"),
        dropped,
    })
}
