//! WordStream engine: turns a time-stamped text table into a stacked stream
//! graph of categories with the top words of each time step placed inside
//! their stream.
//!
//! ```
//! use wordstream_core::{run_document, parse_json};
//!
//! let csv = "week,text\n1,Google helps me study.\n2,I studied with GitHub and Google.\n";
//! let doc = run_document(r#"{"timeCol":"week","textCol":"text"}"#, csv.as_bytes()).unwrap();
//! let layout = parse_json(&doc).unwrap();
//! assert_eq!(layout.time_labels, ["1", "2"]);
//! ```

pub mod error;
pub mod ingest;
pub mod layout;
pub mod metrics;
pub mod nlp;
pub mod pipeline;
pub mod render;
pub mod synth;

pub use error::{Error, Result};
pub use ingest::{TableFormat, TimeBox};
pub use layout::{DroppedWord, LayoutConfig, LayoutResult, PlacedWord, StreamLayer, Viewport};
pub use metrics::{Category, Metric, Mode};
pub use nlp::{Lexicon, TokenizeMode};
pub use pipeline::{run, run_document, ConfigDocument, InputSpec, RunOutput, RunStats};
pub use render::{emit_json, emit_svg, parse_json};
