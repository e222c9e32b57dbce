use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wordstream_bench::{journal_corpus, large_corpus};
use wordstream_core::pipeline::{build_layout, extract, run};
use wordstream_core::{emit_json, emit_svg, LayoutConfig, Lexicon, Metric, Mode, TokenizeMode};

fn extraction(c: &mut Criterion) {
    let lexicon = Lexicon::bundled();
    let (data, input) = large_corpus();
    let mut group = c.benchmark_group("extract");
    group.sample_size(10);
    for mode in [TokenizeMode::Word, TokenizeMode::NounChunk] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{mode:?}")),
            &mode,
            |b, &mode| b.iter(|| extract(&data, &input, mode, lexicon).unwrap()),
        );
    }
    group.finish();
}

fn layout(c: &mut Criterion) {
    let lexicon = Lexicon::bundled();
    let (data, input) = large_corpus();
    let corpus = extract(&data, &input, TokenizeMode::Word, lexicon).unwrap();
    let mut group = c.benchmark_group("layout");
    group.sample_size(10);
    for (mode, metric) in [
        (Mode::Pos, Metric::Frequency),
        (Mode::Ner, Metric::SuddenChange),
    ] {
        let config = LayoutConfig {
            mode,
            metric,
            ..LayoutConfig::default()
        };
        group.bench_function(format!("{mode:?}-{metric:?}"), |b| {
            b.iter(|| build_layout(&corpus, &config).unwrap())
        });
    }
    group.finish();
}

fn end_to_end(c: &mut Criterion) {
    let lexicon = Lexicon::bundled();
    let (data, input) = journal_corpus();
    let config = LayoutConfig::default();
    c.bench_function("journal/run", |b| {
        b.iter(|| run(&data, &input, &config, lexicon).unwrap())
    });
    let result = run(&data, &input, &config, lexicon).unwrap().result;
    c.bench_function("journal/emit_svg", |b| b.iter(|| emit_svg(&result)));
    c.bench_function("journal/emit_json", |b| b.iter(|| emit_json(&result)));
}

criterion_group!(benches, extraction, layout, end_to_end);
criterion_main!(benches);
