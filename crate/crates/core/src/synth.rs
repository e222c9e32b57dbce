//! Deterministic synthetic corpora for tests, benchmarks and the demo file.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ingest::{write_table, RawTable, TableFormat};

pub const JOURNAL_WEEKS: usize = 9;
pub const JOURNAL_STUDENTS: usize = 7;
/// Week (1-based) in which GitHub first shows up.
pub const GITHUB_WEEK: usize = 6;
/// Week (1-based) in which MySpace shows up.
pub const MYSPACE_WEEK: usize = 8;

pub const JOURNAL_HEADERS: [&str; 5] = [
    "Course ID",
    "Course Name",
    "Week",
    "Prompt Text",
    "Response Text",
];

const ACTIVITIES: [&str; 7] = [
    "search for sources",
    "organize my notes",
    "share slides with the group",
    "check the reading list",
    "write a short draft",
    "compare survey results",
    "plan the weekly schedule",
];

const TOPICS: [&str; 9] = [
    "privacy",
    "networking",
    "design",
    "research",
    "marketing",
    "analytics",
    "security",
    "writing",
    "history",
];

const REFLECTIONS: [&str; 7] = [
    "The readings felt clear and useful.",
    "Our group discussed careful design choices.",
    "I wrote notes about online communities.",
    "The lecture explained social platforms well.",
    "We measured how quickly people adopt new tools.",
    "I struggled with the long assignment but finished it.",
    "Everyone shared interesting examples in class.",
];

/// Student weekly journal: `google` in every response, `github` appearing
/// from week six, `myspace` only in week eight, an occasional `microsoft`,
/// and a few people and cities.
pub fn journal_table() -> RawTable {
    let mut rows = Vec::with_capacity(JOURNAL_WEEKS * JOURNAL_STUDENTS);
    for week in 1..=JOURNAL_WEEKS {
        for s in 0..JOURNAL_STUDENTS {
            let mut text = format!(
                "This week I used Google to {} for the {} project. {}",
                ACTIVITIES[(s + week) % ACTIVITIES.len()],
                TOPICS[(week + 2 * s) % TOPICS.len()],
                REFLECTIONS[(3 * week + s) % REFLECTIONS.len()],
            );
            if week >= GITHUB_WEEK && s < 6 {
                text.push_str(" We moved our code to GitHub and reviewed changes together.");
            }
            if week == MYSPACE_WEEK && s < 3 {
                text.push_str(" I found an old MySpace page from years ago.");
            }
            if (week == 2 && s == 1) || (week == 4 && s == 5) {
                text.push_str(" My laptop runs software from Microsoft now.");
            }
            if s == 2 && week % 3 == 0 {
                text.push_str(" I talked with James about the plan.");
            }
            if s == 4 && week % 2 == 1 {
                text.push_str(" Our team met with Carlos online.");
            }
            if s == 6 {
                let city = ["Chicago", "Boston", "Seattle", "Denver"][week % 4];
                text.push_str(&format!(" I worked remotely from {city} again."));
            }
            rows.push(vec![
                "INFO-5301".to_string(),
                "Social Media Analytics".to_string(),
                format!("Week {week}"),
                "Which tools did you use this week, and what did you learn?".to_string(),
                text,
            ]);
        }
    }
    RawTable {
        headers: JOURNAL_HEADERS.iter().map(|h| h.to_string()).collect(),
        rows,
    }
}

/// The journal as CSV text.
pub fn journal_csv() -> String {
    write_table(&journal_table(), TableFormat::Csv)
}

const NOUNS: [&str; 40] = [
    "report",
    "budget",
    "market",
    "customer",
    "network",
    "policy",
    "product",
    "student",
    "teacher",
    "system",
    "design",
    "price",
    "river",
    "storm",
    "election",
    "vaccine",
    "energy",
    "museum",
    "airport",
    "contract",
    "festival",
    "garden",
    "harbor",
    "journal",
    "library",
    "meeting",
    "neighbor",
    "orchestra",
    "platform",
    "question",
    "railway",
    "software",
    "tunnel",
    "village",
    "weather",
    "audience",
    "bicycle",
    "camera",
    "doctor",
    "engine",
];
const VERBS: [&str; 20] = [
    "announced",
    "reported",
    "discussed",
    "improved",
    "launched",
    "opened",
    "closed",
    "expanded",
    "reviewed",
    "tested",
    "visited",
    "described",
    "measured",
    "increased",
    "reduced",
    "built",
    "shared",
    "planned",
    "explained",
    "changed",
];
const ADJECTIVES: [&str; 16] = [
    "new",
    "local",
    "quiet",
    "large",
    "small",
    "careful",
    "public",
    "strong",
    "bright",
    "early",
    "recent",
    "popular",
    "difficult",
    "useful",
    "serious",
    "modern",
];
const NAMES: [&str; 8] = [
    "Google",
    "Microsoft",
    "Chicago",
    "Boston",
    "James",
    "Carlos",
    "Seattle",
    "Amazon",
];

/// A large news-like table with `rows` rows spread over 52 weekly ISO dates.
/// Each row is about 290 bytes, so 5200 rows make roughly 1.5 MB.
pub fn large_table(rows: usize, seed: u64) -> RawTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = chrono::NaiveDate::from_ymd_opt(2023, 1, 2).expect("valid date");
    let mut out = Vec::with_capacity(rows);
    for i in 0..rows {
        let date = start + chrono::Duration::weeks((i % 52) as i64);
        let mut text = String::new();
        while text.len() < 238 {
            let name = NAMES.choose(&mut rng).expect("non-empty");
            let sentence = format!(
                "The {} {} {} the {} {} near {} ",
                ADJECTIVES.choose(&mut rng).expect("non-empty"),
                NOUNS.choose(&mut rng).expect("non-empty"),
                VERBS.choose(&mut rng).expect("non-empty"),
                ADJECTIVES.choose(&mut rng).expect("non-empty"),
                NOUNS.choose(&mut rng).expect("non-empty"),
                name,
            );
            text.push_str(sentence.trim_end());
            text.push_str(if rng.gen_bool(0.2) { "! " } else { ". " });
        }
        out.push(vec![
            date.format("%Y-%m-%d").to_string(),
            format!("source-{}", i % 17),
            text.trim_end().to_string(),
        ]);
    }
    RawTable {
        headers: vec!["date".into(), "source".into(), "text".into()],
        rows: out,
    }
}

/// [`large_table`] as CSV text.
pub fn large_csv(rows: usize, seed: u64) -> String {
    write_table(&large_table(rows, seed), TableFormat::Csv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn journal_shape() {
        let t = journal_table();
        assert_eq!(t.rows.len(), JOURNAL_WEEKS * JOURNAL_STUDENTS);
        assert!(t.rows.iter().all(|r| r.len() == JOURNAL_HEADERS.len()));
        assert_eq!(journal_csv(), journal_csv());
    }

    #[test]
    fn large_corpus_size() {
        let csv = large_csv(5200, 7);
        assert!(
            csv.len() > 1_400_000 && csv.len() < 1_700_000,
            "{}",
            csv.len()
        );
        assert_eq!(csv, large_csv(5200, 7));
        assert_ne!(csv, large_csv(5200, 8));
    }
}
