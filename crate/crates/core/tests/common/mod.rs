//! Test-side oracles and generators. Nothing here calls into the layout code
//! it checks; geometry is recomputed from the serialized fields.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordstream_core::layout::SAMPLES_PER_INTERVAL;
use wordstream_core::nlp::{Entity, Pos, Token};
use wordstream_core::pipeline::Corpus;
use wordstream_core::{LayoutConfig, LayoutResult, Metric, Mode, TokenizeMode};

pub const CONTAINMENT_TOLERANCE: f64 = 0.5;
pub const PROPORTION_TOLERANCE: f64 = 1e-6;

const WORDS: [&str; 24] = [
    "data",
    "river",
    "study",
    "market",
    "museum",
    "network",
    "cloud",
    "energy",
    "storm",
    "garden",
    "policy",
    "camera",
    "engine",
    "harbor",
    "library",
    "planet",
    "signal",
    "theory",
    "wallet",
    "winter",
    "x",
    "mm",
    "verylongcompoundword",
    "tunnel",
];

fn token(lemma: &str, pos: Pos, ner: Option<Entity>) -> Token {
    Token {
        surface: lemma.to_string(),
        lemma: lemma.to_string(),
        pos,
        ner,
        sentence_start: false,
    }
}

/// Random analyzed corpus: 1-12 boxes, skewed word counts, mixed categories.
pub fn random_corpus(rng: &mut ChaCha8Rng) -> Corpus {
    let n = rng.gen_range(1..=12);
    let vocab = rng.gen_range(3..WORDS.len());
    let tokens: Vec<Vec<Token>> = (0..n)
        .map(|_| {
            let len = rng.gen_range(0..120);
            (0..len)
                .map(|_| {
                    // Squaring skews toward the start of the vocabulary.
                    let r: f64 = rng.gen();
                    let w = WORDS[((r * r) * vocab as f64) as usize];
                    let pos =
                        [Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb][rng.gen_range(0..4)];
                    let ner = (pos == Pos::Noun && rng.gen_bool(0.4)).then(|| {
                        [Entity::Person, Entity::Place, Entity::Organization][rng.gen_range(0..3)]
                    });
                    token(w, pos, ner)
                })
                .collect()
        })
        .collect();
    Corpus {
        time_labels: (0..n).map(|t| format!("t{t}")).collect(),
        tokens,
        rows: n,
        ragged_rows: 0,
        dropped_rows: 0,
        invalid_utf8: 0,
    }
}

pub fn random_config(rng: &mut ChaCha8Rng) -> LayoutConfig {
    let min_font = rng.gen_range(4.0..20.0);
    LayoutConfig {
        min_font,
        max_font: min_font + rng.gen_range(0.0..40.0),
        top_k: rng.gen_range(1..=12),
        width: rng.gen_range(100.0..1600.0),
        height: rng.gen_range(100.0..900.0),
        mode: if rng.gen_bool(0.5) {
            Mode::Pos
        } else {
            Mode::Ner
        },
        metric: [Metric::Frequency, Metric::SuddenChange, Metric::Tfidf][rng.gen_range(0..3)],
        tokenization: TokenizeMode::Word,
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn lerp(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    if x <= xs[0] {
        return ys[0];
    }
    for i in 1..xs.len() {
        if x <= xs[i] {
            let u = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
            return ys[i - 1] + u * (ys[i] - ys[i - 1]);
        }
    }
    *ys.last().unwrap()
}

/// Pairs of placed words whose boxes share interior area.
pub fn overlapping_pairs(result: &LayoutResult) -> Vec<(usize, usize)> {
    let w = &result.words;
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let (a, b) = (&w[i], &w[j]);
            let dx = (a.x + a.w).min(b.x + b.w) - a.x.max(b.x);
            let dy = (a.y + a.h).min(b.y + b.h) - a.y.max(b.y);
            if dx > 0.0 && dy > 0.0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Words not inside their column and band. The band is checked at every
/// band vertex under the word and at 0.25-unit steps.
pub fn containment_violations(result: &LayoutResult, tol: f64) -> Vec<String> {
    let n = result.time_labels.len();
    let cw = result.viewport.width / n as f64;
    let mut out = Vec::new();
    for word in &result.words {
        let layer = result
            .layers
            .iter()
            .find(|l| l.category == word.category)
            .expect("layer for category");
        let (x0, x1) = (cw * word.box_index as f64, cw * (word.box_index + 1) as f64);
        if word.x < x0 - tol || word.x + word.w > x1 + tol {
            out.push(format!("{} outside column {}", word.term, word.box_index));
            continue;
        }
        let mut probes: Vec<f64> = layer
            .x
            .iter()
            .copied()
            .filter(|&x| x >= word.x && x <= word.x + word.w)
            .collect();
        let steps = (word.w / 0.25).ceil() as usize;
        probes.extend((0..=steps).map(|k| (word.x + k as f64 * 0.25).min(word.x + word.w)));
        for x in probes {
            let top = lerp(&layer.x, &layer.top, x);
            let bottom = lerp(&layer.x, &layer.bottom, x);
            if word.y < top - tol || word.y + word.h > bottom + tol {
                out.push(format!(
                    "{} at x={x:.2}: [{:.2}, {:.2}] not within band [{top:.2}, {bottom:.2}]",
                    word.term,
                    word.y,
                    word.y + word.h
                ));
                break;
            }
        }
        if word.x < 0.0
            || word.y < 0.0
            || word.x + word.w > result.viewport.width + tol
            || word.y + word.h > result.viewport.height + tol
        {
            out.push(format!("{} outside viewport", word.term));
        }
    }
    out
}

/// Largest relative deviation of thickness / weight from its mean over all
/// box centers with positive weight.
pub fn proportionality_error(result: &LayoutResult) -> f64 {
    let mut ratios = Vec::new();
    for layer in &result.layers {
        for (t, &w) in layer.box_weights.iter().enumerate() {
            let i = 1 + t * SAMPLES_PER_INTERVAL;
            let expected_x =
                result.viewport.width / result.time_labels.len() as f64 * (t as f64 + 0.5);
            assert!(
                (layer.x[i] - expected_x).abs() < 1e-9,
                "sample {i} is not box center {t}"
            );
            if w > 0.0 {
                ratios.push((layer.bottom[i] - layer.top[i]) / w);
            }
        }
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    ratios
        .iter()
        .map(|r| ((r - mean) / mean).abs())
        .fold(0.0, f64::max)
}

/// Independent count of selected terms per `(box, category)`: distinct
/// lemmas present in the box, capped at top-K.
pub fn expected_selection_counts(
    corpus: &Corpus,
    config: &LayoutConfig,
) -> BTreeMap<(usize, String), usize> {
    let mut out = BTreeMap::new();
    for (t, tokens) in corpus.tokens.iter().enumerate() {
        let mut per_cat: BTreeMap<String, BTreeSet<&str>> = BTreeMap::new();
        for tok in tokens {
            let cat = match config.mode {
                Mode::Pos => match tok.pos {
                    Pos::Noun => Some("Noun"),
                    Pos::Verb => Some("Verb"),
                    Pos::Adjective => Some("Adjective"),
                    _ => None,
                },
                Mode::Ner => tok.ner.map(|e| match e {
                    Entity::Person => "Person",
                    Entity::Place => "Place",
                    Entity::Organization => "Organization",
                }),
            };
            if let Some(c) = cat {
                per_cat.entry(c.to_string()).or_default().insert(&tok.lemma);
            }
        }
        for (c, terms) in per_cat {
            out.insert((t, c), terms.len().min(config.top_k));
        }
    }
    out
}

pub fn actual_counts(result: &LayoutResult) -> BTreeMap<(usize, String), usize> {
    let mut out: BTreeMap<(usize, String), usize> = BTreeMap::new();
    for w in &result.words {
        *out.entry((w.box_index, w.category.name().to_string()))
            .or_default() += 1;
    }
    for d in &result.dropped {
        *out.entry((d.box_index, d.category.name().to_string()))
            .or_default() += 1;
    }
    out
}

/// Every invariant the layout promises, as a list of human-readable failures.
pub fn layout_violations(
    corpus: &Corpus,
    config: &LayoutConfig,
    result: &LayoutResult,
) -> Vec<String> {
    let mut out = Vec::new();
    let overlaps = overlapping_pairs(result);
    if !overlaps.is_empty() {
        out.push(format!(
            "{} overlapping pairs, first {:?}",
            overlaps.len(),
            overlaps[0]
        ));
    }
    out.extend(containment_violations(result, CONTAINMENT_TOLERANCE));
    let err = proportionality_error(result);
    if err > PROPORTION_TOLERANCE {
        out.push(format!("thickness/weight relative error {err:e}"));
    }
    if expected_selection_counts(corpus, config) != actual_counts(result) {
        out.push("placed + dropped differs from selected in some cell".to_string());
    }
    for w in &result.words {
        if w.font_size < config.min_font - 1e-9 || w.font_size > config.max_font + 1e-9 {
            out.push(format!("{} font {} outside range", w.term, w.font_size));
        }
    }
    for layer in &result.layers {
        if layer.top.iter().zip(&layer.bottom).any(|(t, b)| b < t) {
            out.push(format!("{:?} band has negative thickness", layer.category));
        }
    }
    out
}
