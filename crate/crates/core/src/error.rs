use thiserror::Error;

/// Errors raised by the pipeline stages.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("input contains no data rows")]
    EmptyInput,
    #[error("unknown column `{name}` (available: {available})")]
    UnknownColumn { name: String, available: String },
    #[error("time column and text column must differ (both `{0}`)")]
    SameColumn(String),
    #[error("every row was dropped during cleaning ({dropped} blank time or text cells)")]
    AllRowsDropped { dropped: usize },
    #[error("no terms extracted in {mode} mode; check the text column or the filters")]
    NoTermsExtracted { mode: &'static str },
    #[error("all stream weights are zero")]
    AllWeightsZero,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("lexicon {file}: {message}")]
    Lexicon { file: String, message: String },
    #[error("malformed document: {0}")]
    Document(String),
}

impl Error {
    /// Name of the pipeline stage that produced the error.
    pub fn stage(&self) -> &'static str {
        match self {
            Error::EmptyInput => "ingest/parse",
            Error::UnknownColumn { .. } | Error::SameColumn(_) | Error::AllRowsDropped { .. } => {
                "ingest/extract"
            }
            Error::NoTermsExtracted { .. } => "metrics",
            Error::AllWeightsZero => "layout",
            Error::InvalidConfig(_) | Error::Document(_) => "config",
            Error::Lexicon { .. } => "nlp/lexicon",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
