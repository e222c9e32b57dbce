use super::{tagger, Lexicon, Pos, Token, TokenizeMode};

/// A whitespace-delimited unit with its edge punctuation removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Unit<'a> {
    pub surface: &'a str,
    pub sentence_start: bool,
}

fn ends_sentence(raw: &str) -> bool {
    raw.chars()
        .rev()
        .take_while(|c| !c.is_alphanumeric())
        .any(|c| matches!(c, '.' | '!' | '?'))
}

pub(crate) fn word_units(text: &str) -> Vec<Unit<'_>> {
    let mut units = Vec::new();
    let mut at_start = true;
    for raw in text.split_whitespace() {
        let surface = raw.trim_matches(|c: char| !c.is_alphanumeric());
        if !surface.is_empty() {
            units.push(Unit {
                surface,
                sentence_start: at_start,
            });
            at_start = false;
        }
        if ends_sentence(raw) {
            at_start = true;
        }
    }
    units
}

/// Split on whitespace runs and strip leading/trailing punctuation from each
/// unit. Interior apostrophes and hyphens survive.
pub fn tokenize_words(text: &str) -> Vec<String> {
    word_units(text)
        .into_iter()
        .map(|u| u.surface.to_string())
        .collect()
}

/// Fuse maximal `Adjective* Noun+` runs of tagged tokens into single noun
/// tokens whose surface joins the parts with single spaces. Runs never cross
/// a sentence boundary. An adjective run not followed by a noun is left alone.
pub fn fuse_noun_chunks(tokens: Vec<Token>) -> Vec<Token> {
    let mut out = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        let continues = |k: usize| k < tokens.len() && (k == i || !tokens[k].sentence_start);
        let mut j = i;
        while continues(j) && tokens[j].pos == Pos::Adjective {
            j += 1;
        }
        let mut k = j;
        while continues(k) && tokens[k].pos == Pos::Noun {
            k += 1;
        }
        if k == j {
            // No noun after the adjectives.
            out.push(tokens[i].clone());
            i += 1;
            continue;
        }
        if k - i == 1 {
            out.push(tokens[i].clone());
        } else {
            let surface = tokens[i..k]
                .iter()
                .map(|t| t.surface.as_str())
                .collect::<Vec<_>>()
                .join(" ");
            out.push(Token {
                lemma: surface.to_lowercase(),
                surface,
                pos: Pos::Noun,
                ner: None,
                sentence_start: tokens[i].sentence_start,
            });
        }
        i = k;
    }
    out
}

/// Split text into surface units. `NounChunk` tags the words first and fuses
/// noun phrases, so it needs the lexicon and costs more.
pub fn tokenize(text: &str, mode: TokenizeMode, lexicon: &Lexicon) -> Vec<String> {
    match mode {
        TokenizeMode::Word => tokenize_words(text),
        TokenizeMode::NounChunk => {
            let tagged = tagger::tag_units(lexicon, &word_units(text));
            fuse_noun_chunks(tagged)
                .into_iter()
                .map(|t| t.surface)
                .collect()
        }
    }
}
