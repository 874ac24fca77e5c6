//! Stable JSON and CSV rendering of sweep reports.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::corpus::SweepReport;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(format!("unknown format {s:?} (expected json or csv)")),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        })
    }
}

/// Pretty JSON with object keys sorted and a trailing newline.
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json::Map is a BTreeMap, so going through Value sorts keys
    let value = serde_json::to_value(value)?;
    let mut text = serde_json::to_string_pretty(&value)?;
    text.push('\n');
    Ok(text)
}

pub fn render(report: &SweepReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => to_sorted_json(report),
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            if report.rows.is_empty() {
                w.write_record(["canon", "v", "e", "b1", "aut", "orientable_k", "orientable_s", "agree"])?;
            }
            for row in &report.rows {
                w.serialize(row)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io {
                path: "<csv buffer>".into(),
                source: e.into_error(),
            })?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

pub fn write_report(report: &SweepReport, path: &Path, format: ReportFormat) -> Result<()> {
    let text = render(report, format)?;
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
