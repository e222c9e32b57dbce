//! Fixed category colors. Bands use the base color; words use a darker shade
//! that deepens with rank.

use crate::metrics::Category;

const BASE: [(u8, u8, u8); 3] = [(0x4e, 0x79, 0xa7), (0xf2, 0x8e, 0x2b), (0x59, 0xa1, 0x4f)];

/// Band fill for a category, by stacking slot.
pub fn layer_color(category: Category) -> &'static str {
    ["#4e79a7", "#f28e2b", "#59a14f"][category.slot()]
}

/// Word fill: the base color darkened by 35% for rank 0 up to 60% for the
/// last rank.
pub fn word_color(category: Category, rank: usize, top_k: usize) -> String {
    let (r, g, b) = BASE[category.slot()];
    let frac = if top_k > 1 {
        rank.min(top_k - 1) as f64 / (top_k - 1) as f64
    } else {
        0.0
    };
    let keep = 0.65 - 0.25 * frac;
    let f = |c: u8| (f64::from(c) * keep).round() as u8;
    format!("#{:02x}{:02x}{:02x}", f(r), f(g), f(b))
}
