//! Tabular ingestion: CSV/TSV parsing, record extraction and cleansing, and
//! merging of rows that share a timestamp into ordered time boxes.

use std::collections::HashMap;

use chrono::{DateTime, NaiveDate, NaiveDateTime};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Input table dialect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFormat {
    /// Comma separated, RFC-4180 double-quote quoting.
    Csv,
    /// Tab separated, no quoting.
    Tsv,
}

impl TableFormat {
    /// Guess the format from a file name; anything but `.tsv`/`.tab` is CSV.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(|e| e.to_ascii_lowercase())
            .as_deref()
        {
            Some("tsv") | Some("tab") => TableFormat::Tsv,
            _ => TableFormat::Csv,
        }
    }

    fn delimiter(self) -> u8 {
        match self {
            TableFormat::Csv => b',',
            TableFormat::Tsv => b'\t',
        }
    }
}

/// A parsed table. Every row has exactly `headers.len()` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Result of [`parse_table`] together with the repairs that were made.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedTable {
    pub table: RawTable,
    /// Rows whose cell count differed from the header and were dropped.
    pub ragged_rows: usize,
    /// Invalid UTF-8 sequences replaced by U+FFFD.
    pub invalid_utf8: usize,
}

/// One cleaned `(time, text)` row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub time_key: String,
    pub text: String,
}

/// Records kept by [`extract_records`] and the number of rows discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extracted {
    pub records: Vec<Record>,
    pub dropped: usize,
}

/// Merged text for one time step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeBox {
    pub index: usize,
    pub time_label: String,
    pub text: String,
}

fn decode_lossy(data: &[u8]) -> (String, usize) {
    let mut out = String::with_capacity(data.len());
    let mut invalid = 0;
    for chunk in data.utf8_chunks() {
        out.push_str(chunk.valid());
        if !chunk.invalid().is_empty() {
            out.push(char::REPLACEMENT_CHARACTER);
            invalid += 1;
        }
    }
    (out, invalid)
}

/// Parse CSV or TSV bytes into a [`RawTable`]. The first row is the header.
pub fn parse_table(data: &[u8], format: TableFormat) -> Result<ParsedTable> {
    let (text, invalid_utf8) = decode_lossy(data);
    let text = text.strip_prefix('\u{feff}').unwrap_or(&text);

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .delimiter(format.delimiter())
        .quoting(format == TableFormat::Csv)
        .from_reader(text.as_bytes());

    let mut records = reader.records();
    let headers: Vec<String> = match records.next() {
        Some(Ok(rec)) => rec.iter().map(|h| h.trim().to_string()).collect(),
        // The reader only fails on I/O or UTF-8 errors, neither of which can
        // happen on an in-memory `str`.
        Some(Err(_)) | None => return Err(Error::EmptyInput),
    };
    if headers.is_empty() || headers.iter().all(|h| h.is_empty()) {
        return Err(Error::EmptyInput);
    }

    let mut rows = Vec::new();
    let mut ragged_rows = 0;
    for rec in records {
        let Ok(rec) = rec else {
            ragged_rows += 1;
            continue;
        };
        if rec.len() != headers.len() {
            ragged_rows += 1;
            continue;
        }
        rows.push(rec.iter().map(str::to_string).collect());
    }
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(ParsedTable {
        table: RawTable { headers, rows },
        ragged_rows,
        invalid_utf8,
    })
}

/// Serialize a table back to CSV or TSV text (header first, `\n` line ends).
///
/// TSV has no quoting, so cells containing tabs or newlines do not survive a
/// TSV round trip.
pub fn write_table(table: &RawTable, format: TableFormat) -> String {
    let mut writer = csv::WriterBuilder::new()
        .delimiter(format.delimiter())
        .terminator(csv::Terminator::Any(b'\n'))
        .quote_style(match format {
            TableFormat::Csv => csv::QuoteStyle::Necessary,
            TableFormat::Tsv => csv::QuoteStyle::Never,
        })
        .from_writer(Vec::new());
    // Writing into a Vec cannot fail.
    writer
        .write_record(&table.headers)
        .expect("in-memory write");
    for row in &table.rows {
        writer.write_record(row).expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("input cells are UTF-8")
}

fn column_index(table: &RawTable, name: &str) -> Result<usize> {
    table
        .headers
        .iter()
        .position(|h| h == name)
        .or_else(|| {
            table
                .headers
                .iter()
                .position(|h| h.eq_ignore_ascii_case(name))
        })
        .ok_or_else(|| Error::UnknownColumn {
            name: name.to_string(),
            available: table.headers.join(", "),
        })
}

/// Whitespace controls become spaces, other control characters are removed.
fn clean_text(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for c in raw.chars() {
        if c.is_control() {
            if c.is_whitespace() {
                out.push(' ');
            }
        } else {
            out.push(c);
        }
    }
    out.trim().to_string()
}

/// Pull `(time, text)` records out of a table, dropping rows with a blank time
/// or text cell.
pub fn extract_records(table: &RawTable, time_col: &str, text_col: &str) -> Result<Extracted> {
    let time_idx = column_index(table, time_col)?;
    let text_idx = column_index(table, text_col)?;
    if time_idx == text_idx {
        return Err(Error::SameColumn(time_col.to_string()));
    }

    let mut records = Vec::with_capacity(table.rows.len());
    let mut dropped = 0;
    for row in &table.rows {
        let time_key = row[time_idx].trim();
        let text = clean_text(&row[text_idx]);
        if time_key.is_empty() || text.is_empty() {
            dropped += 1;
            continue;
        }
        records.push(Record {
            time_key: time_key.to_string(),
            text,
        });
    }
    if records.is_empty() {
        return Err(Error::AllRowsDropped { dropped });
    }
    Ok(Extracted { records, dropped })
}

fn parse_number(key: &str) -> Option<f64> {
    key.trim().parse::<f64>().ok().filter(|v| v.is_finite())
}

fn parse_iso_datetime(key: &str) -> Option<NaiveDateTime> {
    let key = key.trim();
    if let Ok(d) = NaiveDate::parse_from_str(key, "%Y-%m-%d") {
        return d.and_hms_opt(0, 0, 0);
    }
    if let Ok(dt) = DateTime::parse_from_rfc3339(key) {
        return Some(dt.naive_utc());
    }
    [
        "%Y-%m-%dT%H:%M:%S%.f",
        "%Y-%m-%d %H:%M:%S%.f",
        "%Y-%m-%dT%H:%M",
    ]
    .iter()
    .find_map(|fmt| NaiveDateTime::parse_from_str(key, fmt).ok())
}

/// How the distinct time keys of a dataset are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyOrdering {
    Numeric,
    Chronological,
    FirstAppearance,
}

/// Sort distinct keys (given in first-appearance order) in place and report
/// the rule that applied.
pub fn order_time_keys(keys: &mut [String]) -> KeyOrdering {
    if let Some(nums) = keys
        .iter()
        .map(|k| parse_number(k))
        .collect::<Option<Vec<_>>>()
    {
        let mut paired: Vec<(f64, String)> = nums.into_iter().zip(keys.iter().cloned()).collect();
        paired.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (slot, (_, k)) in keys.iter_mut().zip(paired) {
            *slot = k;
        }
        return KeyOrdering::Numeric;
    }
    if let Some(dates) = keys
        .iter()
        .map(|k| parse_iso_datetime(k))
        .collect::<Option<Vec<_>>>()
    {
        let mut paired: Vec<(NaiveDateTime, String)> =
            dates.into_iter().zip(keys.iter().cloned()).collect();
        paired.sort_by_key(|a| a.0);
        for (slot, (_, k)) in keys.iter_mut().zip(paired) {
            *slot = k;
        }
        return KeyOrdering::Chronological;
    }
    KeyOrdering::FirstAppearance
}

/// Merge records sharing a time key into one [`TimeBox`] per key. Texts are
/// joined with a single space in input order.
pub fn merge_records(records: &[Record]) -> Vec<TimeBox> {
    let mut keys: Vec<String> = Vec::new();
    let mut texts: HashMap<&str, String> = HashMap::new();
    for rec in records {
        match texts.get_mut(rec.time_key.as_str()) {
            Some(text) => {
                text.push(' ');
                text.push_str(&rec.text);
            }
            None => {
                keys.push(rec.time_key.clone());
                texts.insert(rec.time_key.as_str(), rec.text.clone());
            }
        }
    }
    order_time_keys(&mut keys);
    keys.into_iter()
        .enumerate()
        .map(|(index, key)| {
            let text = texts.remove(key.as_str()).unwrap_or_default();
            TimeBox {
                index,
                time_label: key,
                text,
            }
        })
        .collect()
}
