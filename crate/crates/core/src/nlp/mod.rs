//! Self-contained rule-based NLP: tokenization, part-of-speech tagging,
//! gazetteer entity recognition, lemmatization and stop-word removal.
//!
//! Everything here is deterministic and driven by the word lists in
//! [`Lexicon`]; tagging accuracy is best effort.

mod lemma;
mod lexicon;
mod tagger;
mod tokenize;

use serde::{Deserialize, Serialize};

pub use lemma::{lemmatize, lemmatize_tokens};
pub use lexicon::{Lexicon, LexiconSources};
pub use tagger::{filter_stopwords, ner_tag, pos_tag};
pub use tokenize::{fuse_noun_chunks, tokenize, tokenize_words};

/// Part-of-speech tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pos {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Determiner,
    Conjunction,
    Preposition,
    Pronoun,
    Number,
    Other,
}

impl Pos {
    pub const ALL: [Pos; 10] = [
        Pos::Noun,
        Pos::Verb,
        Pos::Adjective,
        Pos::Adverb,
        Pos::Determiner,
        Pos::Conjunction,
        Pos::Preposition,
        Pos::Pronoun,
        Pos::Number,
        Pos::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pos::Noun => "Noun",
            Pos::Verb => "Verb",
            Pos::Adjective => "Adjective",
            Pos::Adverb => "Adverb",
            Pos::Determiner => "Determiner",
            Pos::Conjunction => "Conjunction",
            Pos::Preposition => "Preposition",
            Pos::Pronoun => "Pronoun",
            Pos::Number => "Number",
            Pos::Other => "Other",
        }
    }

    /// Case-insensitive parse of a tag name as written in lexicon files.
    pub fn parse(tag: &str) -> Option<Pos> {
        Pos::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(tag.trim()))
    }

    /// Tags skipped as stop words.
    pub fn is_closed_class(self) -> bool {
        matches!(
            self,
            Pos::Determiner | Pos::Conjunction | Pos::Preposition | Pos::Pronoun
        )
    }
}

/// Named-entity class; only ever assigned to nouns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Entity {
    Person,
    Place,
    Organization,
}

/// How text is split into units.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenizeMode {
    /// Whitespace-delimited words. Fast.
    #[default]
    Word,
    /// Adjective* Noun+ runs fused into one unit. Noticeably slower.
    #[serde(rename = "chunk")]
    NounChunk,
}

/// One analyzed unit of text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    /// Lowercase root form; never empty.
    pub lemma: String,
    pub pos: Pos,
    /// Set only when `pos` is [`Pos::Noun`].
    pub ner: Option<Entity>,
    /// First token of a sentence. Capitalization there says nothing about
    /// proper nouns.
    pub sentence_start: bool,
}

/// Full analysis of one text: tokenize, tag, recognize entities, lemmatize
/// and drop stop words.
pub fn analyze(lexicon: &Lexicon, text: &str, mode: TokenizeMode) -> Vec<Token> {
    let units = tokenize::word_units(text);
    let mut tokens = tagger::tag_units(lexicon, &units);
    if mode == TokenizeMode::NounChunk {
        tokens = fuse_noun_chunks(tokens);
    }
    ner_tag(lexicon, &mut tokens);
    lemmatize_tokens(lexicon, &mut tokens);
    filter_stopwords(lexicon, tokens)
}
