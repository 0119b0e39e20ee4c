//! Record formats for brick reports.
//!
//! * `Line`: one JSON object per line, keys `s, i, dual, k, m, perfect,
//!   mult, frob` in that order, written as `{"s": [10, 15], "k": 2, ...}`.
//! * `Table`: `;`-separated with the header
//!   `s_gens;i_gens;dual_gens;k;m;perfect;mult;frob`; lists are
//!   comma-separated inside a field.

use std::io::{self, BufRead, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

use super::BrickReport;

pub const TABLE_HEADER: [&str; 8] = [
    "s_gens",
    "i_gens",
    "dual_gens",
    "k",
    "m",
    "perfect",
    "mult",
    "frob",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordFormat {
    Line,
    Table,
}

impl FromStr for RecordFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "line" => Ok(RecordFormat::Line),
            "table" => Ok(RecordFormat::Table),
            other => Err(Error::InvalidConfig(format!(
                "unknown record format {other:?}"
            ))),
        }
    }
}

/// JSON layout with a space after every `:` and `,`.
struct SpacedFormatter;

impl serde_json::ser::Formatter for SpacedFormatter {
    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn split(field: &str) -> Result<Vec<i64>> {
    if field.is_empty() {
        return Ok(Vec::new());
    }
    field
        .split(',')
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| Error::MalformedRecord(format!("bad integer {v:?}")))
        })
        .collect()
}

fn parse<T: FromStr>(field: &str, name: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| Error::MalformedRecord(format!("bad {name} field {field:?}")))
}

pub fn write_reports<W: Write>(
    reports: &[BrickReport],
    out: W,
    format: RecordFormat,
) -> Result<()> {
    match format {
        RecordFormat::Line => {
            let mut out = io::BufWriter::new(out);
            for r in reports {
                let mut ser = serde_json::Serializer::with_formatter(&mut out, SpacedFormatter);
                r.serialize(&mut ser).map_err(io::Error::from)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
        RecordFormat::Table => {
            let mut w = csv::WriterBuilder::new().delimiter(b';').from_writer(out);
            w.write_record(TABLE_HEADER)?;
            for r in reports {
                w.write_record([
                    join(&r.s_gens),
                    join(&r.i_gens),
                    join(&r.dual_gens),
                    r.k.to_string(),
                    r.m.to_string(),
                    r.perfect.to_string(),
                    r.multiplicity.to_string(),
                    r.frobenius.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn read_reports<R: BufRead>(input: R, format: RecordFormat) -> Result<Vec<BrickReport>> {
    match format {
        RecordFormat::Line => {
            let mut reports = Vec::new();
            for line in input.lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                reports.push(
                    serde_json::from_str(&line)
                        .map_err(|e| Error::MalformedRecord(e.to_string()))?,
                );
            }
            Ok(reports)
        }
        RecordFormat::Table => {
            let mut rdr = csv::ReaderBuilder::new().delimiter(b';').from_reader(input);
            if rdr.headers()?.iter().ne(TABLE_HEADER) {
                return Err(Error::MalformedRecord("unexpected table header".into()));
            }
            let mut reports = Vec::new();
            for row in rdr.records() {
                let row = row?;
                if row.len() != TABLE_HEADER.len() {
                    return Err(Error::MalformedRecord(format!(
                        "expected 8 fields, got {}",
                        row.len()
                    )));
                }
                reports.push(BrickReport {
                    s_gens: split(&row[0])?,
                    i_gens: split(&row[1])?,
                    dual_gens: split(&row[2])?,
                    k: parse(&row[3], "k")?,
                    m: parse(&row[4], "m")?,
                    perfect: parse(&row[5], "perfect")?,
                    multiplicity: parse(&row[6], "mult")?,
                    frobenius: parse(&row[7], "frob")?,
                });
            }
            Ok(reports)
        }
    }
}
