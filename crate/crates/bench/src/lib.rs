//! Shared inputs for the pipeline benchmarks.

use wordstream_core::pipeline::InputSpec;
use wordstream_core::{synth, TableFormat};

/// Row count of the large benchmark corpus (about 1.5 MB of CSV).
pub const LARGE_ROWS: usize = 5200;
pub const LARGE_SEED: u64 = 42;

pub fn large_corpus() -> (Vec<u8>, InputSpec) {
    let input = InputSpec {
        format: TableFormat::Csv,
        time_col: "date".into(),
        text_col: "text".into(),
    };
    (synth::large_csv(LARGE_ROWS, LARGE_SEED).into_bytes(), input)
}

pub fn journal_corpus() -> (Vec<u8>, InputSpec) {
    let input = InputSpec {
        format: TableFormat::Csv,
        time_col: "Week".into(),
        text_col: "Response Text".into(),
    };
    (synth::journal_csv().into_bytes(), input)
}
