use super::{Lexicon, Pos, Token};

fn has_vowel(s: &str) -> bool {
    s.chars()
        .any(|c| matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y'))
}

/// `stopp` -> `stop`, but not for letters English doubles in the root
/// (`call`, `miss`, `buzz`, `stuff`).
fn undouble(stem: &str) -> Option<&str> {
    let mut rev = stem.chars().rev();
    let (a, b) = (rev.next()?, rev.next()?);
    let doubled = a == b
        && a.is_ascii_alphabetic()
        && !matches!(a, 'a' | 'e' | 'i' | 'o' | 'u' | 'l' | 's' | 'z' | 'f');
    doubled.then(|| &stem[..stem.len() - 1])
}

fn strip_inflection(lexicon: &Lexicon, word: &str, suffix: &str) -> Option<String> {
    let stem = word.strip_suffix(suffix)?;
    if stem.chars().count() < 3 || !has_vowel(stem) {
        return None;
    }
    if let Some(root) = undouble(stem) {
        return Some(root.to_string());
    }
    let with_e = format!("{stem}e");
    if lexicon.is_known_lemma(&with_e) {
        Some(with_e)
    } else {
        Some(stem.to_string())
    }
}

fn strip_plural(word: &str) -> Option<String> {
    if word.chars().count() < 4 {
        return None;
    }
    if let Some(stem) = word.strip_suffix("es") {
        if ["ss", "ch", "sh", "x", "z"]
            .iter()
            .any(|e| stem.ends_with(e))
        {
            return Some(stem.to_string());
        }
    }
    if word.ends_with('s') && !["ss", "us", "is"].iter().any(|e| word.ends_with(e)) {
        return Some(word[..word.len() - 1].to_string());
    }
    None
}

/// One rewrite step. Every rule shortens the word, so repeated application
/// terminates.
fn step(lexicon: &Lexicon, word: &str, pos: Pos) -> Option<String> {
    if !matches!(pos, Pos::Noun | Pos::Verb) {
        return None;
    }
    if pos == Pos::Noun {
        if let Some(stem) = word.strip_suffix("'s").or_else(|| word.strip_suffix('\'')) {
            if !stem.is_empty() {
                return Some(stem.to_string());
            }
        }
    }
    let len = word.chars().count();
    for (suffix, replacement, min_len) in [("ies", "y", 5), ("ied", "y", 5), ("ying", "y", 6)] {
        if len >= min_len {
            if let Some(stem) = word.strip_suffix(suffix) {
                return Some(format!("{stem}{replacement}"));
            }
        }
    }
    strip_inflection(lexicon, word, "ing")
        .or_else(|| strip_inflection(lexicon, word, "ed"))
        .or_else(|| strip_plural(word))
}

/// Lowercase root form of `surface` read as `pos`.
///
/// Exception table first, then known lexicon words stay as they are, then
/// suffix rules (`-ies`/`-ied`/`-ying` to `-y`, undoubling, silent-e restore,
/// plural stripping) for nouns and verbs until a known word or a fixed point
/// is reached. Idempotent on its own outputs. Multi-word units lemmatize
/// their last word.
pub fn lemmatize(lexicon: &Lexicon, surface: &str, pos: Pos) -> String {
    let lower = surface.trim().to_lowercase();
    if let Some((head, last)) = lower.rsplit_once(' ') {
        return format!("{head} {}", lemmatize_word(lexicon, last, pos));
    }
    lemmatize_word(lexicon, &lower, pos)
}

fn lemmatize_word(lexicon: &Lexicon, lower: &str, pos: Pos) -> String {
    let mut word = lower.to_string();
    loop {
        if let Some(lemma) = lexicon.lemma_exception(&word) {
            return lemma.to_string();
        }
        if lexicon.is_known_lemma(&word) {
            return word;
        }
        match step(lexicon, &word, pos) {
            Some(next) => word = next,
            None => return word,
        }
    }
}

/// Fill in lemmas. Entity names keep their lowercase surface.
pub fn lemmatize_tokens(lexicon: &Lexicon, tokens: &mut [Token]) {
    for t in tokens.iter_mut() {
        t.lemma = if t.ner.is_some() || t.pos == Pos::Number {
            t.surface.to_lowercase()
        } else {
            lemmatize(lexicon, &t.surface, t.pos)
        };
        if t.lemma.is_empty() {
            t.lemma = t.surface.to_lowercase();
        }
    }
}
