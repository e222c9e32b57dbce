use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::{Entity, Pos};

const LEXICON_FILE: &str = "lexicon.tsv";
const EXCEPTIONS_FILE: &str = "lemma_exceptions.tsv";
const STOPWORDS_FILE: &str = "stopwords.txt";
const PERSON_FILE: &str = "person.txt";
const PLACE_FILE: &str = "place.txt";
const ORGANIZATION_FILE: &str = "organization.txt";

/// Raw text of the six data files that make up a [`Lexicon`].
#[derive(Debug, Clone, Copy)]
pub struct LexiconSources<'a> {
    pub lexicon: &'a str,
    pub lemma_exceptions: &'a str,
    pub stopwords: &'a str,
    pub persons: &'a str,
    pub places: &'a str,
    pub organizations: &'a str,
}

impl LexiconSources<'static> {
    /// The data files compiled into the crate.
    pub fn bundled() -> Self {
        LexiconSources {
            lexicon: include_str!("../../data/lexicon.tsv"),
            lemma_exceptions: include_str!("../../data/lemma_exceptions.tsv"),
            stopwords: include_str!("../../data/stopwords.txt"),
            persons: include_str!("../../data/person.txt"),
            places: include_str!("../../data/place.txt"),
            organizations: include_str!("../../data/organization.txt"),
        }
    }
}

/// Word lists backing the tagger, lemmatizer, stop-word filter and entity
/// recognizer. Immutable once loaded; all keys are lowercase.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    word_to_pos: HashMap<String, Pos>,
    lemma_exceptions: HashMap<String, String>,
    /// Targets of `lemma_exceptions`; treated as finished lemmas.
    lemma_targets: HashSet<String>,
    stop_list: HashSet<String>,
    persons: HashSet<String>,
    places: HashSet<String>,
    organizations: HashSet<String>,
}

fn entries(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn word_set(text: &str) -> HashSet<String> {
    entries(text).map(|(_, l)| l.to_lowercase()).collect()
}

fn pairs<'a>(
    text: &'a str,
    file: &'a str,
) -> impl Iterator<Item = Result<(usize, String, &'a str)>> + 'a {
    entries(text).map(move |(line, l)| {
        let (key, value) = l.split_once('\t').ok_or_else(|| Error::Lexicon {
            file: file.to_string(),
            message: format!("line {line}: expected `surface<TAB>value`"),
        })?;
        Ok((line, key.trim().to_lowercase(), value.trim()))
    })
}

impl Lexicon {
    /// The bundled lexicon, parsed once per process.
    pub fn bundled() -> &'static Lexicon {
        static BUNDLED: OnceLock<Lexicon> = OnceLock::new();
        BUNDLED.get_or_init(|| {
            Lexicon::from_sources(LexiconSources::bundled()).expect("bundled lexicon is valid")
        })
    }

    /// Load from a directory. Files missing from the directory fall back to
    /// the bundled copy.
    pub fn from_dir(dir: &Path) -> Result<Lexicon> {
        let bundled = LexiconSources::bundled();
        let read = |name: &str, fallback: &'static str| -> Result<String> {
            let path = dir.join(name);
            match std::fs::read_to_string(&path) {
                Ok(text) => Ok(text),
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(fallback.to_string()),
                Err(e) => Err(Error::Lexicon {
                    file: path.display().to_string(),
                    message: e.to_string(),
                }),
            }
        };
        let lexicon = read(LEXICON_FILE, bundled.lexicon)?;
        let lemma_exceptions = read(EXCEPTIONS_FILE, bundled.lemma_exceptions)?;
        let stopwords = read(STOPWORDS_FILE, bundled.stopwords)?;
        let persons = read(PERSON_FILE, bundled.persons)?;
        let places = read(PLACE_FILE, bundled.places)?;
        let organizations = read(ORGANIZATION_FILE, bundled.organizations)?;
        Lexicon::from_sources(LexiconSources {
            lexicon: &lexicon,
            lemma_exceptions: &lemma_exceptions,
            stopwords: &stopwords,
            persons: &persons,
            places: &places,
            organizations: &organizations,
        })
    }

    pub fn from_sources(src: LexiconSources<'_>) -> Result<Lexicon> {
        let mut word_to_pos = HashMap::new();
        for entry in pairs(src.lexicon, LEXICON_FILE) {
            let (line, word, tag) = entry?;
            let pos = Pos::parse(tag).ok_or_else(|| Error::Lexicon {
                file: LEXICON_FILE.into(),
                message: format!("line {line}: unknown tag `{tag}`"),
            })?;
            word_to_pos.insert(word, pos);
        }

        let mut lemma_exceptions = HashMap::new();
        for entry in pairs(src.lemma_exceptions, EXCEPTIONS_FILE) {
            let (line, word, lemma) = entry?;
            if lemma.is_empty() {
                return Err(Error::Lexicon {
                    file: EXCEPTIONS_FILE.into(),
                    message: format!("line {line}: empty lemma"),
                });
            }
            lemma_exceptions.insert(word, lemma.to_lowercase());
        }
        // A target that is itself an exception key would make lemmatization
        // non-idempotent.
        if let Some((k, v)) = lemma_exceptions
            .iter()
            .find(|(k, v)| k != v && lemma_exceptions.contains_key(v.as_str()))
        {
            return Err(Error::Lexicon {
                file: EXCEPTIONS_FILE.into(),
                message: format!("lemma `{v}` of `{k}` is itself an exception entry"),
            });
        }
        lemma_exceptions.retain(|k, v| k != v);
        let lemma_targets = lemma_exceptions.values().cloned().collect();

        Ok(Lexicon {
            word_to_pos,
            lemma_exceptions,
            lemma_targets,
            stop_list: word_set(src.stopwords),
            persons: word_set(src.persons),
            places: word_set(src.places),
            organizations: word_set(src.organizations),
        })
    }

    /// Tag of a lowercase word, if listed.
    pub fn pos(&self, lower: &str) -> Option<Pos> {
        self.word_to_pos.get(lower).copied()
    }

    pub fn contains(&self, lower: &str) -> bool {
        self.word_to_pos.contains_key(lower)
    }

    /// Closed-class words are the entries tagged with a closed-class tag.
    pub fn is_closed_class(&self, lower: &str) -> bool {
        self.pos(lower).is_some_and(Pos::is_closed_class)
    }

    pub fn closed_class_words(&self) -> impl Iterator<Item = &str> {
        self.word_to_pos
            .iter()
            .filter(|(_, p)| p.is_closed_class())
            .map(|(w, _)| w.as_str())
    }

    pub fn lemma_exception(&self, lower: &str) -> Option<&str> {
        self.lemma_exceptions.get(lower).map(String::as_str)
    }

    /// A word the lemmatizer treats as already in root form.
    pub(crate) fn is_known_lemma(&self, lower: &str) -> bool {
        self.word_to_pos.contains_key(lower) || self.lemma_targets.contains(lower)
    }

    pub fn is_stopword(&self, lower: &str) -> bool {
        self.stop_list.contains(lower)
    }

    /// Gazetteer lookup with priority Organization > Place > Person.
    pub fn entity(&self, lower: &str) -> Option<Entity> {
        if self.organizations.contains(lower) {
            Some(Entity::Organization)
        } else if self.places.contains(lower) {
            Some(Entity::Place)
        } else if self.persons.contains(lower) {
            Some(Entity::Person)
        } else {
            None
        }
    }

    /// Every `(surface, tag)` entry, in no particular order.
    pub fn words(&self) -> impl Iterator<Item = (&str, Pos)> {
        self.word_to_pos.iter().map(|(w, p)| (w.as_str(), *p))
    }

    pub fn len(&self) -> usize {
        self.word_to_pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word_to_pos.is_empty()
    }

    pub fn gazetteer_sizes(&self) -> [(Entity, usize); 3] {
        [
            (Entity::Person, self.persons.len()),
            (Entity::Place, self.places.len()),
            (Entity::Organization, self.organizations.len()),
        ]
    }
}
