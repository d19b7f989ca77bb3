//! CSV and JSON emission.
//!
//! Numbers are rounded to nine significant digits before they are written,
//! so a JSON value parsed back equals the rounded value exactly.

use std::fs::File;
use std::io::{self, Write};

use serde_json::{json, Map, Value};

use crate::config::Format;
use crate::error::{CliError, Result};
use crate::run::SweepRow;

pub const HEADER: [&str; 10] = [
    "problem", "c2", "N", "b", "k", "k0", "ratio", "n_used", "est_error", "status",
];

/// `v` rounded to nine significant digits.
pub fn round9(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    format!("{v:.8e}").parse().expect("formatted float parses")
}

/// Text form of [`round9`]: plain decimal for moderate magnitudes,
/// exponent notation otherwise.
pub fn format_number(v: f64) -> String {
    let r = round9(v);
    if r == 0.0 || (1e-4..1e9).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn number(v: f64) -> Value {
    serde_json::Number::from_f64(round9(v)).map_or(Value::Null, Value::Number)
}

fn row_record(row: &SweepRow) -> Vec<String> {
    let mut record = vec![
        row.problem.name().to_string(),
        format_number(row.c2),
        format_number(row.coupling),
        format_number(row.b),
    ];
    match &row.outcome {
        Ok(scf) => record.extend([
            format_number(scf.k),
            format_number(scf.k0),
            format_number(scf.ratio),
            scf.n_used.to_string(),
            format_number(scf.est_error),
        ]),
        Err(_) => record.extend([String::new(), String::new(), String::new(), row.size.to_string(), String::new()]),
    }
    record.push(row.status());
    record
}

fn row_json(row: &SweepRow) -> Value {
    let (k, k0, ratio, n_used, est) = match &row.outcome {
        Ok(scf) => (number(scf.k), number(scf.k0), number(scf.ratio), scf.n_used, number(scf.est_error)),
        Err(_) => (Value::Null, Value::Null, Value::Null, row.size, Value::Null),
    };
    json!({
        "problem": row.problem.name(),
        "c2": number(row.c2),
        "N": number(row.coupling),
        "b": number(row.b),
        "k": k,
        "k0": k0,
        "ratio": ratio,
        "n_used": n_used,
        "est_error": est,
        "status": row.status(),
    })
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn write_table<W: Write>(out: W, header: &[&str], records: impl Iterator<Item = Vec<String>>) -> io::Result<()> {
    let mut writer = csv_writer(out);
    writer.write_record(header)?;
    for record in records {
        writer.write_record(&record)?;
    }
    writer.flush()
}

/// Write the sweep table in the requested format.
pub fn write_rows<W: Write>(mut out: W, rows: &[SweepRow], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => write_table(out, &HEADER, rows.iter().map(row_record)),
        Format::Json => {
            let value = Value::Array(rows.iter().map(row_json).collect());
            serde_json::to_writer_pretty(&mut out, &value)?;
            writeln!(out)
        }
    }
}

/// Write named numeric columns (profiles, kernel tables).
pub fn write_columns<W: Write>(mut out: W, names: &[&str], rows: &[Vec<f64>], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => write_table(
            out,
            names,
            rows.iter().map(|r| r.iter().map(|&v| format_number(v)).collect()),
        ),
        Format::Json => {
            let value = Value::Array(
                rows.iter()
                    .map(|r| {
                        let obj: Map<String, Value> =
                            names.iter().zip(r).map(|(n, &v)| (n.to_string(), number(v))).collect();
                        Value::Object(obj)
                    })
                    .collect(),
            );
            serde_json::to_writer_pretty(&mut out, &value)?;
            writeln!(out)
        }
    }
}

/// Run `write` against the file at `path`, or standard output when `None`.
pub fn with_output(path: Option<&str>, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
    match path {
        Some(p) => {
            let mut file = File::create(p).map_err(|e| CliError::io(p, e))?;
            write(&mut file).map_err(|e| CliError::io(p, e))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock).map_err(|e| CliError::io("<stdout>", e))
        }
    }
}
