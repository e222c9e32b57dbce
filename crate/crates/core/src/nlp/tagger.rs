use super::tokenize::Unit;
use super::{Entity, Lexicon, Pos, Token};

// Checked in order; first match wins.
const SUFFIX_RULES: &[(&str, Pos)] = &[
    ("ly", Pos::Adverb),
    ("ing", Pos::Verb),
    ("ed", Pos::Verb),
    ("ous", Pos::Adjective),
    ("ful", Pos::Adjective),
    ("ive", Pos::Adjective),
    ("able", Pos::Adjective),
    ("tion", Pos::Noun),
    ("ness", Pos::Noun),
    ("ment", Pos::Noun),
    ("ity", Pos::Noun),
];

fn suffix_pos(lower: &str) -> Option<Pos> {
    SUFFIX_RULES
        .iter()
        .find(|(suffix, _)| lower.len() >= suffix.len() + 2 && lower.ends_with(suffix))
        .map(|&(_, pos)| pos)
}

/// Digits with optional separators (`1,000`, `3.5`, `2021-03`), or an
/// ordinal like `2nd`.
fn is_numeric(lower: &str) -> bool {
    let Some(first) = lower.chars().next() else {
        return false;
    };
    if !first.is_ascii_digit() {
        return false;
    }
    if lower
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '.' | ',' | ':' | '/' | '-'))
    {
        return true;
    }
    let digits = lower.trim_start_matches(|c: char| c.is_ascii_digit());
    matches!(digits, "st" | "nd" | "rd" | "th" | "s")
}

fn is_ing_or_ed(lower: &str) -> bool {
    (lower.ends_with("ing") || lower.ends_with("ed")) && suffix_pos(lower) == Some(Pos::Verb)
}

/// Tag one word. Returns the tag and whether it came from the lexicon.
fn classify(lexicon: &Lexicon, lower: &str) -> (Pos, bool) {
    if let Some(pos) = lexicon.pos(lower) {
        return (pos, true);
    }
    if let Some(pos) = suffix_pos(lower) {
        return (pos, false);
    }
    if is_numeric(lower) {
        return (Pos::Number, false);
    }
    (Pos::Noun, false)
}

pub(crate) fn tag_units(lexicon: &Lexicon, units: &[Unit<'_>]) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::with_capacity(units.len());
    for unit in units {
        let lower = unit.surface.to_lowercase();
        let (mut pos, known) = classify(lexicon, &lower);
        if !known
            && is_ing_or_ed(&lower)
            && out.last().is_some_and(|prev| prev.pos == Pos::Determiner)
        {
            pos = Pos::Noun;
        }
        out.push(Token {
            surface: unit.surface.to_string(),
            lemma: lower,
            pos,
            ner: None,
            sentence_start: unit.sentence_start,
        });
    }
    out
}

/// Part-of-speech tag a token sequence. Decision chain per token: lexicon,
/// suffix rules, numeric literal, default noun. An unknown `-ing`/`-ed` word
/// right after a determiner is a noun. Lemmas are left as the lowercase
/// surface; the first token counts as a sentence start.
pub fn pos_tag<S: AsRef<str>>(lexicon: &Lexicon, tokens: &[S]) -> Vec<Token> {
    let units: Vec<Unit<'_>> = tokens
        .iter()
        .enumerate()
        .map(|(i, s)| Unit {
            surface: s.as_ref(),
            sentence_start: i == 0,
        })
        .collect();
    tag_units(lexicon, &units)
}

fn is_titlecase(surface: &str) -> bool {
    let mut chars = surface.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    // All-caps words are usually acronyms, not names.
    first.is_uppercase() && chars.any(|c| c.is_lowercase())
}

/// Mark nouns found in the gazetteers (Organization > Place > Person).
/// Unlisted title-case nouns that do not open a sentence become Person.
pub fn ner_tag(lexicon: &Lexicon, tokens: &mut [Token]) {
    for t in tokens.iter_mut() {
        if t.pos != Pos::Noun {
            t.ner = None;
            continue;
        }
        let lower = t.surface.to_lowercase();
        t.ner = lexicon
            .entity(&lower)
            .or_else(|| (is_titlecase(&t.surface) && !t.sentence_start).then_some(Entity::Person));
    }
}

/// Drop closed-class tokens (determiners, conjunctions, prepositions,
/// pronouns) and anything on the explicit stop-list.
pub fn filter_stopwords(lexicon: &Lexicon, tokens: Vec<Token>) -> Vec<Token> {
    tokens
        .into_iter()
        .filter(|t| {
            !t.pos.is_closed_class()
                && !lexicon.is_stopword(&t.lemma)
                && !lexicon.is_stopword(&t.surface.to_lowercase())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nlp::LexiconSources;
    use proptest::prelude::*;

    fn lex() -> &'static Lexicon {
        Lexicon::bundled()
    }

    fn tags(words: &[&str]) -> Vec<Pos> {
        pos_tag(lex(), words).into_iter().map(|t| t.pos).collect()
    }

    #[test]
    fn closed_class_lookup() {
        assert_eq!(tags(&["the"]), [Pos::Determiner]);
        assert_eq!(
            tags(&["And", "of", "them"]),
            [Pos::Conjunction, Pos::Preposition, Pos::Pronoun]
        );
    }

    #[test]
    fn suffix_rules_on_unknown_words() {
        // None of these are lexicon entries.
        for (w, p) in [
            ("blorfully", Pos::Adverb),
            ("blorfing", Pos::Verb),
            ("blorfed", Pos::Verb),
            ("blorfous", Pos::Adjective),
            ("blorfful", Pos::Adjective),
            ("blorfive", Pos::Adjective),
            ("blorfable", Pos::Adjective),
            ("blorfation", Pos::Noun),
            ("blorfness", Pos::Noun),
            ("blorfment", Pos::Noun),
            ("blorfity", Pos::Noun),
            ("blorf", Pos::Noun),
        ] {
            assert!(!lex().contains(w), "{w} is in the lexicon");
            assert_eq!(tags(&[w]), [p], "{w}");
        }
    }

    #[test]
    fn beautiful_is_adjective_by_suffix() {
        let empty = Lexicon::from_sources(LexiconSources {
            lexicon: "",
            lemma_exceptions: "",
            stopwords: "",
            persons: "",
            places: "",
            organizations: "",
        })
        .unwrap();
        assert_eq!(pos_tag(&empty, &["beautiful"])[0].pos, Pos::Adjective);
        assert_eq!(tags(&["beautiful"]), [Pos::Adjective]);
    }

    #[test]
    fn numbers() {
        assert_eq!(
            tags(&["2021", "3.5", "1,000", "2nd", "1990s"]),
            [Pos::Number; 5]
        );
        assert!(!is_numeric("abc"));
        assert!(!is_numeric("2x4"));
    }

    #[test]
    fn determiner_context_rule() {
        assert_eq!(tags(&["the", "studying"]), [Pos::Determiner, Pos::Noun]);
        assert_eq!(tags(&["am", "studying"]), [Pos::Verb, Pos::Verb]);
        assert_eq!(tags(&["studying"]), [Pos::Verb]);
    }

    #[test]
    fn organizations_from_the_journal_use_case() {
        let mut toks = pos_tag(
            lex(),
            &["google", "github", "microsoft", "myspace", "walked"],
        );
        ner_tag(lex(), &mut toks);
        for t in &toks[..4] {
            assert_eq!(t.pos, Pos::Noun, "{}", t.surface);
            assert_eq!(t.ner, Some(Entity::Organization), "{}", t.surface);
        }
        assert_eq!(toks[4].pos, Pos::Verb);
        assert_eq!(toks[4].ner, None);
    }

    #[test]
    fn ner_priority_and_fallback() {
        let mut toks = pos_tag(
            lex(),
            &["Zorbel", "met", "Quintara", "in", "Paris", "with", "Mary"],
        );
        ner_tag(lex(), &mut toks);
        let ner: Vec<_> = toks.iter().map(|t| t.ner).collect();
        assert_eq!(
            ner,
            [
                None, // sentence start
                None,
                Some(Entity::Person),
                None,
                Some(Entity::Place),
                None,
                Some(Entity::Person),
            ]
        );
        // Acronyms do not trigger the fallback.
        let mut toks = pos_tag(lex(), &["we", "like", "XYZQ"]);
        ner_tag(lex(), &mut toks);
        assert_eq!(toks[2].ner, None);
    }

    #[test]
    fn stop_word_filtering() {
        let toks = pos_tag(lex(), &["the", "study"]);
        let kept = filter_stopwords(lex(), toks);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].surface, "study");
        assert_eq!(kept[0].pos, Pos::Noun);

        assert!(filter_stopwords(lex(), Vec::new()).is_empty());

        let toks = pos_tag(lex(), &["and", "in", "learn"]);
        assert_eq!(
            toks.iter().map(|t| t.pos).collect::<Vec<_>>(),
            [Pos::Conjunction, Pos::Preposition, Pos::Verb]
        );
        let kept = filter_stopwords(lex(), toks);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].surface, "learn");

        let toks = pos_tag(lex(), &["was", "have", "does", "data"]);
        let kept = filter_stopwords(lex(), toks);
        assert_eq!(kept.len(), 1);
    }

    proptest! {
        #[test]
        fn tagging_is_total(words in proptest::collection::vec("[A-Za-z0-9'-]{1,12}", 0..30)) {
            let toks = pos_tag(lex(), &words);
            prop_assert_eq!(toks.len(), words.len());
        }

        #[test]
        fn filter_keeps_content_words_unless_stop_listed(
            words in proptest::collection::vec("[a-z]{1,10}", 0..30)
        ) {
            let toks = pos_tag(lex(), &words);
            let kept = filter_stopwords(lex(), toks.clone());
            let mut it = kept.iter();
            for t in &toks {
                let content = matches!(t.pos, Pos::Noun | Pos::Verb | Pos::Adjective);
                let listed = lex().is_stopword(&t.lemma) || lex().is_stopword(&t.surface);
                if content && !listed {
                    // Survivors keep their order and are unchanged.
                    prop_assert_eq!(Some(t), it.find(|k| *k == t));
                }
            }
        }
    }
}
