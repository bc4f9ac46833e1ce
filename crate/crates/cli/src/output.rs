//! Report sinks: JSON lines or CSV, to a file or standard output.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use aalpha::numfmt::{sig17, sig6};

use crate::config::Format;
use crate::CliError;

/// One output value; rendered with 17 significant digits in JSON and 6 in CSV.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Nums(Vec<f64>),
    Null,
}

impl Cell {
    fn json(&self) -> String {
        match self {
            Cell::Num(x) if x.is_finite() => sig17(*x),
            Cell::Num(_) | Cell::Null => "null".into(),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(t) => serde_json::to_string(t).expect("strings serialise"),
            Cell::Nums(v) => {
                let items: Vec<String> = v.iter().map(|&x| Cell::Num(x).json()).collect();
                format!("[{}]", items.join(","))
            }
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(x) if x.is_finite() => sig6(*x),
            Cell::Num(_) | Cell::Null => String::new(),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(t) => t.clone(),
            Cell::Nums(v) => v.iter().map(|&x| sig6(x)).collect::<Vec<_>>().join(" "),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Null, Cell::Num)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<Option<bool>> for Cell {
    fn from(v: Option<bool>) -> Self {
        v.map_or(Cell::Null, Cell::Bool)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<Vec<f64>> for Cell {
    fn from(v: Vec<f64>) -> Self {
        Cell::Nums(v)
    }
}

/// An ordered record; field names double as the CSV header.
#[derive(Debug, Clone, Default)]
pub struct Record {
    fields: Vec<(&'static str, Cell)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(mut self, name: &'static str, value: impl Into<Cell>) -> Self {
        self.fields.push((name, value.into()));
        self
    }

    pub fn to_json(&self) -> String {
        let parts: Vec<String> = self
            .fields
            .iter()
            .map(|(k, v)| format!("{}:{}", serde_json::to_string(k).expect("key"), v.json()))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

enum Target {
    Jsonl(Box<dyn Write>),
    Csv {
        writer: csv::Writer<Box<dyn Write>>,
        header: Option<Vec<&'static str>>,
    },
}

pub struct Sink {
    target: Target,
}

fn io_error(e: impl std::fmt::Display) -> CliError {
    CliError::Io(e.to_string())
}

impl Sink {
    pub fn open(path: Option<&Path>, format: Format) -> Result<Self, CliError> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))?,
            )),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        let target = match format {
            Format::Jsonl => Target::Jsonl(out),
            Format::Csv => Target::Csv {
                writer: csv::Writer::from_writer(out),
                header: None,
            },
        };
        Ok(Self { target })
    }

    /// Writes a record. In CSV mode the first record fixes the header.
    pub fn write(&mut self, record: &Record) -> Result<(), CliError> {
        self.write_json_or_csv(&record.to_json(), record)
    }

    /// Writes pre-rendered JSON in JSONL mode and `record` in CSV mode.
    pub fn write_json_or_csv(&mut self, json: &str, record: &Record) -> Result<(), CliError> {
        match &mut self.target {
            Target::Jsonl(out) => writeln!(out, "{json}").map_err(io_error),
            Target::Csv { writer, header } => {
                let names: Vec<&'static str> = record.fields.iter().map(|(k, _)| *k).collect();
                match header {
                    None => {
                        writer.write_record(&names).map_err(io_error)?;
                        *header = Some(names);
                    }
                    Some(h) if *h != names => {
                        return Err(CliError::Io("CSV record does not match the header".into()));
                    }
                    Some(_) => {}
                }
                writer
                    .write_record(record.fields.iter().map(|(_, v)| v.csv()))
                    .map_err(io_error)
            }
        }
    }

    pub fn finish(self) -> Result<(), CliError> {
        match self.target {
            Target::Jsonl(mut out) => out.flush().map_err(io_error),
            Target::Csv { mut writer, .. } => writer.flush().map_err(io_error),
        }
    }
}
