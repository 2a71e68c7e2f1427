//! Labeled weight tables from CSV or JSON.

use std::path::Path;

use renyi_core::MassMeasure;
use serde::Deserialize;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct InputRecord {
    pub label: String,
    pub weight: f64,
}

pub fn read_measure(path: &Path) -> Result<MassMeasure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_measure(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// JSON when the first non-blank character is `[`, CSV otherwise.
pub fn parse_measure(text: &str) -> Result<MassMeasure> {
    let records = if text.trim_start().starts_with('[') {
        parse_json(text)?
    } else {
        parse_csv(text)?
    };
    if records.is_empty() {
        return Err(CliError::Input("no records".into()));
    }
    for (i, r) in records.iter().enumerate() {
        if !(r.weight.is_finite() && r.weight >= 0.0) {
            return Err(CliError::Input(format!(
                "record {} ({:?}): weight {} must be finite and non-negative",
                i + 1,
                r.label,
                r.weight
            )));
        }
    }
    let (labels, weights): (Vec<String>, Vec<f64>) = records.into_iter().map(|r| (r.label, r.weight)).unzip();
    Ok(MassMeasure::new(labels, weights)?)
}

fn parse_json(text: &str) -> Result<Vec<InputRecord>> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed JSON: {e}")))
}

fn parse_csv(text: &str) -> Result<Vec<InputRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| CliError::Input(format!("malformed CSV: {e}")))?;
        if rec.len() != 2 {
            return Err(CliError::Input(format!(
                "line {}: expected 2 fields (label,weight), found {}",
                i + 1,
                rec.len()
            )));
        }
        if i == 0 && rec[0].eq_ignore_ascii_case("label") && rec[1].eq_ignore_ascii_case("weight") {
            continue;
        }
        let weight = rec[1]
            .parse::<f64>()
            .map_err(|_| CliError::Input(format!("line {}: weight {:?} is not a number", i + 1, &rec[1])))?;
        out.push(InputRecord {
            label: rec[0].to_string(),
            weight,
        });
    }
    Ok(out)
}
