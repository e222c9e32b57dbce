//! End-to-end driver: bytes in, layout out.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::{extract_records, merge_records, parse_table, TableFormat, TimeBox};
use crate::layout::{compute_layers, place_words, LayoutConfig, LayoutResult};
use crate::metrics::{count_frequencies, select_top_k, StreamWeights};
use crate::nlp::{analyze, Lexicon, Token, TokenizeMode};
use crate::render::emit_json;

/// Which columns to read and how to parse the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputSpec {
    pub format: TableFormat,
    pub time_col: String,
    pub text_col: String,
}

/// Output of the text stages: analyzed tokens per time box.
#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub time_labels: Vec<String>,
    pub tokens: Vec<Vec<Token>>,
    pub rows: usize,
    pub ragged_rows: usize,
    pub dropped_rows: usize,
    pub invalid_utf8: usize,
}

/// Counters and timings for one run.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RunStats {
    pub rows: usize,
    pub ragged_rows: usize,
    pub dropped_rows: usize,
    pub invalid_utf8: usize,
    pub boxes: usize,
    pub tokens: usize,
    pub distinct_terms: usize,
    pub placed: usize,
    pub dropped_words: usize,
    /// Parse, clean, merge and NLP.
    pub extract_time: Duration,
    /// Metrics, layers and placement.
    pub layout_time: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub result: LayoutResult,
    pub stats: RunStats,
}

/// Parse, clean, merge into time boxes and analyze each box's text.
pub fn extract(
    data: &[u8],
    input: &InputSpec,
    tokenization: TokenizeMode,
    lexicon: &Lexicon,
) -> Result<Corpus> {
    let parsed = parse_table(data, input.format)?;
    if parsed.table.rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let extracted = extract_records(&parsed.table, &input.time_col, &input.text_col)?;
    let boxes: Vec<TimeBox> = merge_records(&extracted.records);
    let tokens = boxes
        .iter()
        .map(|b| analyze(lexicon, &b.text, tokenization))
        .collect();
    Ok(Corpus {
        time_labels: boxes.into_iter().map(|b| b.time_label).collect(),
        tokens,
        rows: parsed.table.rows.len(),
        ragged_rows: parsed.ragged_rows,
        dropped_rows: extracted.dropped,
        invalid_utf8: parsed.invalid_utf8,
    })
}

/// Metrics, stream bands and word placement for an analyzed corpus.
pub fn build_layout(corpus: &Corpus, config: &LayoutConfig) -> Result<(LayoutResult, usize)> {
    config.validate()?;
    let n = corpus.time_labels.len();
    let stats = count_frequencies(&corpus.tokens, config.mode)?;
    let weights = StreamWeights::from_stats(&stats, config.mode, n);
    let streams = compute_layers(&weights, config)?;
    let selections = select_top_k(&stats, config.metric, config.top_k, n, config.mode);
    Ok((
        place_words(&streams, &selections, &corpus.time_labels, config),
        stats.len(),
    ))
}

/// Full pipeline on raw file bytes.
pub fn run(
    data: &[u8],
    input: &InputSpec,
    config: &LayoutConfig,
    lexicon: &Lexicon,
) -> Result<RunOutput> {
    config.validate()?;
    let start = Instant::now();
    let corpus = extract(data, input, config.tokenization, lexicon)?;
    let extract_time = start.elapsed();
    let start = Instant::now();
    let (result, distinct_terms) = build_layout(&corpus, config)?;
    let layout_time = start.elapsed();
    let stats = RunStats {
        rows: corpus.rows,
        ragged_rows: corpus.ragged_rows,
        dropped_rows: corpus.dropped_rows,
        invalid_utf8: corpus.invalid_utf8,
        boxes: corpus.time_labels.len(),
        tokens: corpus.tokens.iter().map(Vec::len).sum(),
        distinct_terms,
        placed: result.words.len(),
        dropped_words: result.dropped.len(),
        extract_time,
        layout_time,
    };
    Ok(RunOutput { result, stats })
}

/// The JSON request accepted by [`run_document`]: input columns plus any
/// layout settings (missing ones take their defaults).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigDocument {
    #[serde(default = "default_format")]
    pub format: TableFormat,
    pub time_col: String,
    pub text_col: String,
    #[serde(flatten)]
    pub layout: LayoutConfig,
}

fn default_format() -> TableFormat {
    TableFormat::Csv
}

impl ConfigDocument {
    pub fn input(&self) -> InputSpec {
        InputSpec {
            format: self.format,
            time_col: self.time_col.clone(),
            text_col: self.text_col.clone(),
        }
    }
}

/// Single-call boundary for embedding front ends: a JSON config document and
/// the file bytes in, a layout document out.
pub fn run_document(config_json: &str, data: &[u8]) -> Result<String> {
    let doc: ConfigDocument =
        serde_json::from_str(config_json).map_err(|e| Error::Document(format!("config: {e}")))?;
    let out = run(data, &doc.input(), &doc.layout, Lexicon::bundled())?;
    Ok(emit_json(&out.result))
}
