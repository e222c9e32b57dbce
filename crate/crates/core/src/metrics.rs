//! Per-term series over time boxes (frequency, sudden change, TF-IDF) and
//! top-K selection per box and category.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nlp::{Entity, Pos, Token};

/// Exact sudden-change value.
pub type SuddenRatio = Ratio<u64>;

/// Categorization scheme.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Noun / Verb / Adjective.
    #[default]
    Pos,
    /// Person / Place / Organization.
    Ner,
}

impl Mode {
    /// Categories in stacking order.
    pub fn categories(self) -> [Category; 3] {
        match self {
            Mode::Pos => [Category::Noun, Category::Verb, Category::Adjective],
            Mode::Ner => [Category::Person, Category::Place, Category::Organization],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Pos => "pos",
            Mode::Ner => "ner",
        }
    }

    /// Category a token is counted under, if any.
    pub fn category_of(self, token: &Token) -> Option<Category> {
        match self {
            Mode::Pos => match token.pos {
                Pos::Noun => Some(Category::Noun),
                Pos::Verb => Some(Category::Verb),
                Pos::Adjective => Some(Category::Adjective),
                _ => None,
            },
            Mode::Ner => token.ner.map(|e| match e {
                Entity::Person => Category::Person,
                Entity::Place => Category::Place,
                Entity::Organization => Category::Organization,
            }),
        }
    }
}

/// A stream category. The declaration order is the stacking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Category {
    Noun,
    Verb,
    Adjective,
    Person,
    Place,
    Organization,
}

impl Category {
    pub fn name(self) -> &'static str {
        match self {
            Category::Noun => "Noun",
            Category::Verb => "Verb",
            Category::Adjective => "Adjective",
            Category::Person => "Person",
            Category::Place => "Place",
            Category::Organization => "Organization",
        }
    }

    /// Position within its mode's stacking order (0..3).
    pub fn slot(self) -> usize {
        match self {
            Category::Noun | Category::Person => 0,
            Category::Verb | Category::Place => 1,
            Category::Adjective | Category::Organization => 2,
        }
    }
}

/// What drives word size and ranking.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Metric {
    #[default]
    #[serde(rename = "frequency")]
    Frequency,
    #[serde(rename = "sudden")]
    SuddenChange,
    #[serde(rename = "tfidf")]
    Tfidf,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Frequency => "frequency",
            Metric::SuddenChange => "sudden",
            Metric::Tfidf => "tfidf",
        }
    }
}

/// Series for one `(lemma, category)` term across all time boxes.
#[derive(Debug, Clone, PartialEq)]
pub struct TermStats {
    pub term: String,
    pub category: Category,
    pub frequency: Vec<u64>,
    pub sudden: Vec<SuddenRatio>,
    pub tfidf: Vec<f64>,
    /// Number of boxes with a non-zero count.
    pub document_frequency: usize,
}

impl TermStats {
    pub fn total(&self) -> u64 {
        self.frequency.iter().sum()
    }

    /// Metric value at box `t` as a float.
    pub fn value(&self, metric: Metric, t: usize) -> f64 {
        match metric {
            Metric::Frequency => self.frequency[t] as f64,
            Metric::SuddenChange => {
                let s = self.sudden[t];
                *s.numer() as f64 / *s.denom() as f64
            }
            Metric::Tfidf => self.tfidf[t],
        }
    }

    fn cmp_value(&self, other: &TermStats, metric: Metric, t: usize) -> Ordering {
        match metric {
            Metric::Frequency => self.frequency[t].cmp(&other.frequency[t]),
            Metric::SuddenChange => self.sudden[t].cmp(&other.sudden[t]),
            Metric::Tfidf => self.tfidf[t].total_cmp(&other.tfidf[t]),
        }
    }
}

/// `S_t = (F_t + 1) / (F_{t-1} + 1)` with `F_0 = 0` before the first box.
pub fn sudden_change(frequency: &[u64]) -> Vec<SuddenRatio> {
    let mut prev = 0;
    frequency
        .iter()
        .map(|&f| {
            let s = Ratio::new(f + 1, prev + 1);
            prev = f;
            s
        })
        .collect()
}

/// Raw term frequency times `ln(n / df)`; each box is one document.
pub fn tfidf(frequency: &[u64], document_frequency: usize, n: usize) -> Vec<f64> {
    debug_assert!(document_frequency >= 1 && document_frequency <= n);
    if document_frequency == 0 || n == 0 {
        return vec![0.0; frequency.len()];
    }
    let idf = (n as f64 / document_frequency as f64).ln();
    frequency.iter().map(|&f| f as f64 * idf).collect()
}

/// Count `(lemma, category)` occurrences per box and derive the other series.
/// Output is sorted by category order, then term.
pub fn count_frequencies(boxes: &[Vec<Token>], mode: Mode) -> Result<Vec<TermStats>> {
    let n = boxes.len();
    let mut counts: BTreeMap<(Category, &str), Vec<u64>> = BTreeMap::new();
    for (t, tokens) in boxes.iter().enumerate() {
        for token in tokens {
            if let Some(category) = mode.category_of(token) {
                counts
                    .entry((category, token.lemma.as_str()))
                    .or_insert_with(|| vec![0; n])[t] += 1;
            }
        }
    }
    if counts.is_empty() {
        return Err(Error::NoTermsExtracted { mode: mode.name() });
    }
    Ok(counts
        .into_iter()
        .map(|((category, term), frequency)| {
            let document_frequency = frequency.iter().filter(|&&f| f > 0).count();
            TermStats {
                term: term.to_string(),
                category,
                sudden: sudden_change(&frequency),
                tfidf: tfidf(&frequency, document_frequency, n),
                frequency,
                document_frequency,
            }
        })
        .collect())
}

/// A term chosen for display in one box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectedTerm {
    pub term: String,
    pub value: f64,
}

/// Top terms of one category in one box, best first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxSelection {
    pub box_index: usize,
    pub category: Category,
    pub terms: Vec<SelectedTerm>,
}

/// Rank terms with a non-zero count in each box by `metric` and keep the best
/// `k` per category. Ties: metric desc, total frequency desc, term asc.
/// Output has one entry per `(box, category)` in box then stacking order.
pub fn select_top_k(
    stats: &[TermStats],
    metric: Metric,
    k: usize,
    n_boxes: usize,
    mode: Mode,
) -> Vec<BoxSelection> {
    let mut out = Vec::with_capacity(n_boxes * 3);
    for t in 0..n_boxes {
        for category in mode.categories() {
            let mut candidates: Vec<&TermStats> = stats
                .iter()
                .filter(|s| s.category == category && s.frequency.get(t).is_some_and(|&f| f > 0))
                .collect();
            candidates.sort_by(|a, b| {
                b.cmp_value(a, metric, t)
                    .then_with(|| b.total().cmp(&a.total()))
                    .then_with(|| a.term.cmp(&b.term))
            });
            candidates.truncate(k);
            out.push(BoxSelection {
                box_index: t,
                category,
                terms: candidates
                    .into_iter()
                    .map(|s| SelectedTerm {
                        term: s.term.clone(),
                        value: s.value(metric, t),
                    })
                    .collect(),
            });
        }
    }
    out
}

/// `W(t, c)`: total count of every retained term of category `c` in box `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct StreamWeights {
    pub categories: [Category; 3],
    /// `values[c][t]`.
    pub values: Vec<Vec<f64>>,
}

impl StreamWeights {
    pub fn from_stats(stats: &[TermStats], mode: Mode, n_boxes: usize) -> Self {
        let categories = mode.categories();
        let mut values = vec![vec![0.0; n_boxes]; 3];
        for s in stats {
            if let Some(c) = categories.iter().position(|&c| c == s.category) {
                for (slot, &f) in values[c].iter_mut().zip(&s.frequency) {
                    *slot += f as f64;
                }
            }
        }
        StreamWeights { categories, values }
    }

    pub fn n_boxes(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }
}
