//! Table rendering, plot files and atomic writes.

use std::io::Write;
use std::path::{Path, PathBuf};

use renyi_core::ExtendedOrder;
use serde_json::{Map, Value};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Order(ExtendedOrder),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

/// Shortest round-trip decimal; exponent form outside `[1e-5, 1e16)`.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else if x == 0.0 || (1e-5..1e16).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Num(v) => fmt_num(*v),
            Cell::Int(n) => n.to_string(),
            Cell::Order(o) => match o {
                ExtendedOrder::Finite(r) => fmt_num(*r),
                inf => inf.to_string(),
            },
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) if v.is_finite() => Value::from(*v),
            Cell::Int(n) => Value::from(*n),
            Cell::Order(ExtendedOrder::Finite(r)) => Cell::Num(*r).json(),
            Cell::Empty => Value::Null,
            other => Value::String(other.text()),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(rows)).expect("serializable");
        s.push('\n');
        s
    }
}

/// Two whitespace-separated columns `r value`. Infinite orders are moved to
/// the nearest finite grid edge and announced by a comment line.
pub fn plot_data(title: &str, points: &[(ExtendedOrder, f64)], edges: (f64, f64)) -> String {
    let mut s = format!("# r {title}\n");
    for &(order, value) in points {
        let r = match order {
            ExtendedOrder::Finite(r) => r,
            ExtendedOrder::NegInfinity => {
                s.push_str(&format!("# r = -inf clamped to {}\n", fmt_num(edges.0)));
                edges.0
            }
            ExtendedOrder::PosInfinity => {
                s.push_str(&format!("# r = inf clamped to {}\n", fmt_num(edges.1)));
                edges.1
            }
        };
        s.push_str(&format!("{} {}\n", fmt_num(r), fmt_num(value)));
    }
    s
}

/// Writes every file through a temporary sibling and renames only once all
/// contents are on disk.
pub fn write_all_atomic(files: &[(PathBuf, String)]) -> Result<()> {
    let err = |path: &Path, source| CliError::Write {
        path: path.display().to_string(),
        source,
    };
    let mut staged = Vec::with_capacity(files.len());
    for (path, contents) in files {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| err(path, e))?;
        tmp.write_all(contents.as_bytes()).map_err(|e| err(path, e))?;
        tmp.as_file().sync_all().map_err(|e| err(path, e))?;
        staged.push((tmp, path));
    }
    for (tmp, path) in staged {
        tmp.persist(path).map_err(|e| err(path, e.error))?;
    }
    Ok(())
}
