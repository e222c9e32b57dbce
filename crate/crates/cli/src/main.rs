//! `wordstream`: render a WordStream from a CSV/TSV file.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use wordstream_core::pipeline::{run, InputSpec, RunStats};
use wordstream_core::{
    emit_json, emit_svg, Error, LayoutConfig, Lexicon, Metric, Mode, TableFormat, TokenizeMode,
};

/// Environment variable naming a directory of replacement word lists.
const LEXICON_DIR_ENV: &str = "WSM_LEXICON_DIR";

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Tsv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Pos,
    Ner,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MetricArg {
    Frequency,
    Sudden,
    Tfidf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TokenizeArg {
    Word,
    Chunk,
}

#[derive(Debug, Parser)]
#[command(
    name = "wordstream",
    version,
    about = "Lay out a WordStream (topic streams with embedded word clouds) from a time-stamped text table",
    after_help = "Writes the JSON layout to stdout when neither --out-svg nor --out-json is given.\n\
                  Set WSM_LEXICON_DIR to a directory holding replacement word lists."
)]
struct Args {
    /// CSV or TSV file to read.
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Table dialect [default: from the file extension]
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Column holding the time step of each row.
    #[arg(long, value_name = "NAME")]
    time_col: String,
    /// Column holding the text of each row.
    #[arg(long, value_name = "NAME")]
    text_col: String,
    /// Categorize words by part of speech or by named entity.
    #[arg(long, value_enum, default_value = "pos")]
    mode: ModeArg,
    /// What sets word size and ranking.
    #[arg(long, value_enum, default_value = "frequency")]
    metric: MetricArg,
    #[arg(long, value_name = "N", default_value_t = 12.0)]
    min_font: f64,
    #[arg(long, value_name = "N", default_value_t = 42.0)]
    max_font: f64,
    /// Words shown per stream per time step.
    #[arg(long, value_name = "N", default_value_t = 8)]
    top_k: usize,
    #[arg(long, value_name = "N", default_value_t = 1200.0)]
    width: f64,
    #[arg(long, value_name = "N", default_value_t = 600.0)]
    height: f64,
    /// Single words, or adjective-noun phrases (slower).
    #[arg(long, value_enum, default_value = "word")]
    tokenize: TokenizeArg,
    #[arg(long, value_name = "PATH")]
    out_svg: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    out_json: Option<PathBuf>,
    /// Print row, drop and term counts and timings.
    #[arg(long)]
    stats: bool,
}

impl Args {
    fn config(&self) -> LayoutConfig {
        LayoutConfig {
            min_font: self.min_font,
            max_font: self.max_font,
            top_k: self.top_k,
            width: self.width,
            height: self.height,
            mode: match self.mode {
                ModeArg::Pos => Mode::Pos,
                ModeArg::Ner => Mode::Ner,
            },
            metric: match self.metric {
                MetricArg::Frequency => Metric::Frequency,
                MetricArg::Sudden => Metric::SuddenChange,
                MetricArg::Tfidf => Metric::Tfidf,
            },
            tokenization: match self.tokenize {
                TokenizeArg::Word => TokenizeMode::Word,
                TokenizeArg::Chunk => TokenizeMode::NounChunk,
            },
        }
    }

    fn input_spec(&self) -> InputSpec {
        InputSpec {
            format: match self.format {
                Some(FormatArg::Csv) => TableFormat::Csv,
                Some(FormatArg::Tsv) => TableFormat::Tsv,
                None => TableFormat::from_path(&self.input),
            },
            time_col: self.time_col.clone(),
            text_col: self.text_col.clone(),
        }
    }
}

enum Failure {
    Usage(String),
    Input(String),
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

fn print_stats(s: &RunStats) {
    println!("rows: {}", s.rows);
    println!("ragged rows dropped: {}", s.ragged_rows);
    println!("blank rows dropped: {}", s.dropped_rows);
    println!("invalid utf-8 sequences: {}", s.invalid_utf8);
    println!("time boxes: {}", s.boxes);
    println!("tokens: {}", s.tokens);
    println!("distinct terms: {}", s.distinct_terms);
    println!("words placed: {}", s.placed);
    println!("words dropped: {}", s.dropped_words);
    println!("extract time: {:.3} s", s.extract_time.as_secs_f64());
    println!("layout time: {:.3} s", s.layout_time.as_secs_f64());
}

fn stage_error(e: Error) -> Failure {
    let msg = format!("{}: {e}", e.stage());
    match e {
        Error::InvalidConfig(_) | Error::Document(_) => Failure::Usage(msg),
        _ => Failure::Input(msg),
    }
}

fn execute(args: &Args) -> Result<(), Failure> {
    let config = args.config();
    config.validate().map_err(stage_error)?;

    let owned;
    let lexicon = match std::env::var_os(LEXICON_DIR_ENV) {
        Some(dir) => {
            owned = Lexicon::from_dir(Path::new(&dir)).map_err(stage_error)?;
            &owned
        }
        None => Lexicon::bundled(),
    };

    let data = std::fs::read(&args.input)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", args.input.display())))?;
    let out = run(&data, &args.input_spec(), &config, lexicon).map_err(stage_error)?;

    if let Some(path) = &args.out_svg {
        write_file(path, &emit_svg(&out.result))?;
    }
    if let Some(path) = &args.out_json {
        write_file(path, &emit_json(&out.result))?;
    }
    if args.out_svg.is_none() && args.out_json.is_none() {
        print!("{}", emit_json(&out.result));
    }
    if args.stats {
        print_stats(&out.stats);
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
