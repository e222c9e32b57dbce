mod common;

use common::*;
use serde_json::Value;
use wordstream_core::layout::{compute_layers, place_words, Streams};
use wordstream_core::metrics::{BoxSelection, SelectedTerm, StreamWeights};
use wordstream_core::pipeline::build_layout;
use wordstream_core::render::SCHEMA_DOCUMENT;
use wordstream_core::{
    emit_json, emit_svg, parse_json, Category, LayoutConfig, LayoutResult, Mode,
};

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(SCHEMA_DOCUMENT).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn random_layouts(count: u64) -> Vec<LayoutResult> {
    (0..count)
        .filter_map(|seed| {
            let mut rng = rng(1000 + seed);
            let corpus = random_corpus(&mut rng);
            let config = random_config(&mut rng);
            build_layout(&corpus, &config).ok().map(|(r, _)| r)
        })
        .collect()
}

fn single_layer(words: &[(&str, f64)]) -> (Streams, Vec<BoxSelection>, LayoutConfig) {
    let config = LayoutConfig {
        width: 600.0,
        height: 300.0,
        ..LayoutConfig::default()
    };
    let weights = StreamWeights {
        categories: Mode::Pos.categories(),
        values: vec![vec![4.0, 4.0], vec![0.0, 0.0], vec![0.0, 0.0]],
    };
    let streams = compute_layers(&weights, &config).unwrap();
    let sel = vec![BoxSelection {
        box_index: 0,
        category: Category::Noun,
        terms: words
            .iter()
            .map(|(t, v)| SelectedTerm {
                term: t.to_string(),
                value: *v,
            })
            .collect(),
    }];
    (streams, sel, config)
}

fn labels() -> Vec<String> {
    vec!["Mon <1>".into(), "Tue & co".into()]
}

#[test]
fn svg_is_well_formed_on_every_layout() {
    for r in random_layouts(60) {
        let svg = emit_svg(&r);
        roxmltree::Document::parse(&svg).unwrap_or_else(|e| panic!("{e}\n{svg}"));
    }
}

#[test]
fn svg_element_counts() {
    let (streams, sel, config) = single_layer(&[("alpha", 1.0)]);
    let r = place_words(&streams, &sel, &labels(), &config);
    assert_eq!(r.words.len(), 1);
    let svg = emit_svg(&r);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let count = |tag: &str| doc.descendants().filter(|n| n.has_tag_name(tag)).count();
    // Three bands are always drawn; two are empty here.
    assert_eq!(count("path"), 3);
    assert_eq!(count("text"), 1 + 2);
    let root = doc.root_element();
    assert_eq!(root.attribute("viewBox"), Some("0 0 600.00 300.00"));

    let empty = place_words(&streams, &[], &labels(), &config);
    let svg = emit_svg(&empty);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(
        doc.descendants().filter(|n| n.has_tag_name("text")).count(),
        2
    );
    let axis: Vec<_> = doc
        .descendants()
        .filter(|n| n.has_tag_name("text"))
        .map(|n| n.text().unwrap().to_string())
        .collect();
    assert_eq!(axis, labels());
}

#[test]
fn svg_coordinates_match_layout() {
    for r in random_layouts(30) {
        let svg = emit_svg(&r);
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let words: Vec<_> = doc
            .descendants()
            .filter(|n| n.has_tag_name("text") && n.attribute("data-box").is_some())
            .collect();
        assert_eq!(words.len(), r.words.len());
        for (node, w) in words.iter().zip(&r.words) {
            let get = |a: &str| node.attribute(a).unwrap().parse::<f64>().unwrap();
            assert!((get("x") - w.x).abs() <= 0.005 + 1e-9);
            assert!((get("y") - w.y).abs() <= 0.005 + 1e-9);
            assert!((get("font-size") - w.font_size).abs() <= 0.005 + 1e-9);
            assert!((get("textLength") - w.w).abs() <= 0.005 + 1e-9);
            assert_eq!(node.text(), Some(w.term.as_str()));
        }
        // Axis labels sit at column centers.
        let cw = r.viewport.width / r.n_boxes() as f64;
        let axis: Vec<f64> = doc
            .descendants()
            .filter(|n| n.attribute("text-anchor") == Some("middle"))
            .map(|n| n.attribute("x").unwrap().parse().unwrap())
            .collect();
        for (t, x) in axis.iter().enumerate() {
            assert!((x - cw * (t as f64 + 0.5)).abs() <= 0.005 + 1e-9);
        }
    }
}

#[test]
fn json_validates_against_schema() {
    let v = validator();
    let layouts = random_layouts(60);
    assert!(layouts.iter().any(|r| !r.dropped.is_empty()));
    for r in layouts {
        let doc: Value = serde_json::from_str(&emit_json(&r)).unwrap();
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{errors:#?}");
    }
}

#[test]
fn schema_rejects_wrong_documents() {
    let v = validator();
    let r = &random_layouts(3)[0];
    let mut doc: Value = serde_json::from_str(&emit_json(r)).unwrap();
    doc["schema"] = Value::from("layout-schema v2");
    assert!(!v.is_valid(&doc));
    let mut doc: Value = serde_json::from_str(&emit_json(r)).unwrap();
    doc.as_object_mut().unwrap().remove("layers");
    assert!(!v.is_valid(&doc));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for r in random_layouts(40) {
        let first = emit_json(&r);
        let second = emit_json(&parse_json(&first).unwrap());
        assert_eq!(first, second);
        assert!(first.ends_with('\n') && !first.ends_with("\n\n"));
    }
}

#[test]
fn json_keys_in_documented_order() {
    let r = &random_layouts(3)[0];
    let json = emit_json(r);
    let order = [
        "\"schema\"",
        "\"config\"",
        "\"viewport\"",
        "\"timeLabels\"",
        "\"scale\"",
        "\"layers\"",
        "\"words\"",
        "\"dropped\"",
    ];
    let positions: Vec<usize> = order.iter().map(|k| json.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
}

#[test]
fn numbers_have_at_most_six_decimals() {
    for r in random_layouts(20) {
        let doc: Value = serde_json::from_str(&emit_json(&r)).unwrap();
        let mut stack = vec![&doc];
        while let Some(v) = stack.pop() {
            match v {
                Value::Number(n) => {
                    let s = n.to_string();
                    if let Some((_, frac)) = s.split_once('.') {
                        let digits = frac.split(['e', 'E']).next().unwrap();
                        assert!(digits.len() <= 6 && !s.contains(['e', 'E']), "{s}");
                    }
                }
                Value::Array(a) => stack.extend(a),
                Value::Object(o) => stack.extend(o.values()),
                _ => {}
            }
        }
    }
}

#[test]
fn forced_no_fit_is_reported() {
    // A word far wider than its 300-unit column.
    let (streams, sel, config) = single_layer(&[("short", 2.0), (&"w".repeat(60), 1.0)]);
    let r = place_words(&streams, &sel, &labels(), &config);
    assert_eq!(r.words.len(), 1);
    assert_eq!(r.dropped.len(), 1);
    let doc: Value = serde_json::from_str(&emit_json(&r)).unwrap();
    assert_eq!(doc["dropped"][0]["reason"], "no-fit");
    assert_eq!(doc["dropped"][0]["rank"], 1);
    assert!(validator().is_valid(&doc));
}

#[test]
fn parse_rejects_other_schema_versions() {
    let r = &random_layouts(3)[0];
    let json = emit_json(r).replace("layout-schema v1", "layout-schema v9");
    assert!(parse_json(&json).is_err());
    assert!(parse_json("{").is_err());
}
