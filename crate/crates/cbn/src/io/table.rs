//! Genotype data files.
//!
//! Two CSV layouts share a header row of event names:
//!
//! * **matrix** — one observation per row, `n` comma-separated 0/1 entries;
//!   duplicate rows aggregate.
//! * **counts** — one genotype per row as `bitstring,count`.
//!
//! The dialect is deliberately rigid (comma separator, names over
//! `[A-Za-z0-9_]`, UTF-8, LF) so written files are byte-reproducible.

use std::io::Write;
use std::path::Path;

use crate::counts::CountVector;
use crate::error::{CbnError, Result};
use crate::genotype::Genotype;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataFormat {
    Auto,
    Matrix,
    Counts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceKind {
    Matrix,
    Counts,
}

/// Parsed and aggregated genotype data, still at the string level.
#[derive(Debug, Clone, PartialEq)]
pub struct GenotypeTable {
    event_names: Vec<String>,
    /// (bitstring, count), aggregated, in canonical genotype order.
    rows: Vec<(String, f64)>,
    source_kind: SourceKind,
}

/// Number of events representable in the bit-packed genotype.
const MAX_WIDTH: usize = 63;

impl GenotypeTable {
    pub fn read_path(path: &Path, format: DataFormat) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_str(&text, format)
    }

    pub fn parse_str(text: &str, format: DataFormat) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty());

        let (header_line, header) =
            lines.next().ok_or(CbnError::EmptyData)?;
        let names = parse_header(header_line, header)?;
        let n = names.len();

        let data: Vec<(usize, &str)> = lines.collect();
        if data.is_empty() {
            return Err(CbnError::EmptyData);
        }

        let kind = match format {
            DataFormat::Matrix => SourceKind::Matrix,
            DataFormat::Counts => SourceKind::Counts,
            // A matrix row has n single 0/1 fields; a counts row packs all
            // events into one bitstring field, so no row parses as both.
            DataFormat::Auto => {
                if parse_matrix_row(data[0].0, data[0].1, n).is_ok() {
                    SourceKind::Matrix
                } else {
                    SourceKind::Counts
                }
            }
        };

        let mut agg = CountVector::new(n);
        for (line, row) in data {
            let (g, c) = match kind {
                SourceKind::Matrix => (parse_matrix_row(line, row, n)?, 1.0),
                SourceKind::Counts => parse_counts_row(line, row, n)?,
            };
            agg.add(g, c);
        }

        let rows = agg
            .support()
            .map(|(g, c)| (g.to_bitstring(), c))
            .collect();
        Ok(GenotypeTable { event_names: names, rows, source_kind: kind })
    }

    /// Builds a table from an in-memory count vector (e.g. simulated data).
    pub fn from_counts(u: &CountVector, event_names: &[String]) -> Result<Self> {
        if event_names.len() != u.n() {
            return Err(CbnError::DimensionMismatch {
                expected: u.n(),
                got: event_names.len(),
            });
        }
        for name in event_names {
            check_name(name)?;
        }
        Ok(GenotypeTable {
            event_names: event_names.to_vec(),
            rows: u.support().map(|(g, c)| (g.to_bitstring(), c)).collect(),
            source_kind: SourceKind::Counts,
        })
    }

    pub fn event_names(&self) -> &[String] {
        &self.event_names
    }

    pub fn n(&self) -> usize {
        self.event_names.len()
    }

    pub fn rows(&self) -> &[(String, f64)] {
        &self.rows
    }

    pub fn source_kind(&self) -> SourceKind {
        self.source_kind
    }

    pub fn total(&self) -> f64 {
        self.rows.iter().map(|(_, c)| c).sum()
    }

    pub fn to_counts(&self) -> Result<CountVector> {
        let mut u = CountVector::new(self.n());
        for (bits, count) in &self.rows {
            u.add(Genotype::parse_bitstring(bits)?, *count);
        }
        Ok(u)
    }

    /// Writes the counts layout; counts that are whole numbers are printed
    /// without a decimal point.
    pub fn write_counts_format(&self, w: &mut dyn Write) -> Result<()> {
        writeln!(w, "{}", self.event_names.join(","))?;
        for (bits, count) in &self.rows {
            writeln!(w, "{},{}", bits, format_count(*count))?;
        }
        Ok(())
    }
}

pub(crate) fn format_count(c: f64) -> String {
    if c.fract() == 0.0 && c.abs() < 9e15 {
        format!("{}", c as i64)
    } else {
        format!("{c}")
    }
}

fn parse_header(line: usize, header: &str) -> Result<Vec<String>> {
    let names: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
    for name in &names {
        check_name(name).map_err(|_| CbnError::Parse {
            line,
            msg: format!("invalid event name {name:?} (allowed: [A-Za-z0-9_]+)"),
        })?;
    }
    if names.len() > MAX_WIDTH {
        return Err(CbnError::Parse {
            line,
            msg: format!("{} events exceed the representable maximum of {MAX_WIDTH}", names.len()),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for name in &names {
        if !seen.insert(name) {
            return Err(CbnError::Parse {
                line,
                msg: format!("duplicate event name {name:?}"),
            });
        }
    }
    Ok(names)
}

pub(crate) fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(CbnError::Parse {
            line: 0,
            msg: format!("invalid event name {name:?}"),
        });
    }
    Ok(())
}

fn parse_matrix_row(line: usize, row: &str, n: usize) -> Result<Genotype> {
    let fields: Vec<&str> = row.split(',').map(str::trim).collect();
    if fields.len() != n {
        return Err(CbnError::InconsistentWidth { line, expected: n });
    }
    let mut g = Genotype::empty(n);
    for (e, field) in fields.iter().enumerate() {
        match *field {
            "0" => {}
            "1" => g = g.with_event(e),
            other => {
                return Err(CbnError::Parse {
                    line,
                    msg: format!("non-binary entry {other:?}"),
                })
            }
        }
    }
    Ok(g)
}

fn parse_counts_row(line: usize, row: &str, n: usize) -> Result<(Genotype, f64)> {
    let fields: Vec<&str> = row.split(',').map(str::trim).collect();
    if fields.len() != 2 {
        return Err(CbnError::Parse {
            line,
            msg: format!("expected \"bitstring,count\", got {} fields", fields.len()),
        });
    }
    if fields[0].len() != n {
        return Err(CbnError::InconsistentWidth { line, expected: n });
    }
    let g = Genotype::parse_bitstring(fields[0]).map_err(|e| CbnError::Parse {
        line,
        msg: e.to_string(),
    })?;
    let count: f64 = fields[1].parse().map_err(|_| CbnError::Parse {
        line,
        msg: format!("invalid count {:?}", fields[1]),
    })?;
    if !count.is_finite() || count <= 0.0 {
        return Err(CbnError::Parse {
            line,
            msg: format!("count must be positive and finite, got {count}"),
        });
    }
    Ok((g, count))
}
