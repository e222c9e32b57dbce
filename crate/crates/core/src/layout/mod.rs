//! Stream geometry and word placement.
//!
//! The viewport is split into one equal-width column per time box. Each
//! category is a band stacked around a centered (silhouette) baseline; the
//! band's thickness at a box center is proportional to the category's total
//! count there. Selected words are placed inside their `(box, category)` cell
//! on an occupancy grid so no two word boxes overlap.

mod charwidth;
mod interp;
mod placement;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{BoxSelection, Category, Metric, Mode, StreamWeights};
use crate::nlp::TokenizeMode;
use crate::render::palette;

pub use charwidth::{char_width, text_width};
pub use interp::{monotone_cubic, polyline_at, polyline_extreme};

/// Boundary samples between two adjacent box centers.
pub const SAMPLES_PER_INTERVAL: usize = 8;
/// Share of the viewport height taken by the tallest stack.
pub const HEIGHT_UTILIZATION: f64 = 0.9;
/// Occupancy grid cell size in layout units.
pub const GRID_CELL: f64 = 2.0;
/// Font size multiplier applied on each failed placement attempt.
pub const SHRINK_STEP: f64 = 0.9;

/// Reason recorded for words that could not be placed.
pub const NO_FIT: &str = "no-fit";

/// Every user-tunable parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, rename_all = "camelCase")]
pub struct LayoutConfig {
    #[serde(serialize_with = "round6")]
    pub min_font: f64,
    #[serde(serialize_with = "round6")]
    pub max_font: f64,
    /// Words per stream per time box.
    pub top_k: usize,
    #[serde(serialize_with = "round6")]
    pub width: f64,
    #[serde(serialize_with = "round6")]
    pub height: f64,
    pub mode: Mode,
    pub metric: Metric,
    pub tokenization: TokenizeMode,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        LayoutConfig {
            min_font: 12.0,
            max_font: 42.0,
            top_k: 8,
            width: 1200.0,
            height: 600.0,
            mode: Mode::Pos,
            metric: Metric::Frequency,
            tokenization: TokenizeMode::Word,
        }
    }
}

impl LayoutConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.min_font.is_finite() && self.min_font > 0.0) {
            return fail(format!("minFont must be positive (got {})", self.min_font));
        }
        if !(self.max_font.is_finite() && self.max_font > 0.0) {
            return fail(format!("maxFont must be positive (got {})", self.max_font));
        }
        if self.min_font > self.max_font {
            return fail(format!(
                "minFont ({}) must not exceed maxFont ({})",
                self.min_font, self.max_font
            ));
        }
        if !(self.width.is_finite() && self.width >= 100.0) {
            return fail(format!("width must be at least 100 (got {})", self.width));
        }
        if !(self.height.is_finite() && self.height >= 100.0) {
            return fail(format!("height must be at least 100 (got {})", self.height));
        }
        if self.top_k < 1 {
            return fail("topK must be at least 1 (got 0)".to_string());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Viewport {
    #[serde(serialize_with = "round6")]
    pub width: f64,
    #[serde(serialize_with = "round6")]
    pub height: f64,
}

/// One category band. `top[i]` and `bottom[i]` are the boundaries at `x[i]`;
/// y grows downward so `bottom >= top`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StreamLayer {
    pub category: Category,
    pub color: String,
    /// `W(t, c)` for every box.
    #[serde(serialize_with = "round_vec")]
    pub box_weights: Vec<f64>,
    #[serde(serialize_with = "round_vec")]
    pub x: Vec<f64>,
    #[serde(serialize_with = "round_vec")]
    pub top: Vec<f64>,
    #[serde(serialize_with = "round_vec")]
    pub bottom: Vec<f64>,
}

impl StreamLayer {
    pub fn top_at(&self, x: f64) -> f64 {
        polyline_at(&self.x, &self.top, x)
    }

    pub fn bottom_at(&self, x: f64) -> f64 {
        polyline_at(&self.x, &self.bottom, x)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PlacedWord {
    pub term: String,
    pub category: Category,
    pub box_index: usize,
    /// Position in the box's ranking, 0 = best.
    pub rank: usize,
    #[serde(serialize_with = "round6")]
    pub font_size: f64,
    #[serde(serialize_with = "round6")]
    pub x: f64,
    #[serde(serialize_with = "round6")]
    pub y: f64,
    #[serde(serialize_with = "round6")]
    pub w: f64,
    #[serde(serialize_with = "round6")]
    pub h: f64,
    #[serde(serialize_with = "round6")]
    pub metric_value: f64,
    pub color: String,
}

impl PlacedWord {
    /// Open-interior intersection test; touching edges do not overlap.
    pub fn overlaps(&self, other: &PlacedWord) -> bool {
        self.x < other.x + other.w
            && other.x < self.x + self.w
            && self.y < other.y + other.h
            && other.y < self.y + self.h
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DroppedWord {
    pub term: String,
    pub category: Category,
    pub box_index: usize,
    pub rank: usize,
    #[serde(serialize_with = "round6")]
    pub metric_value: f64,
    pub reason: String,
}

/// Complete layout; the contract between the engine and any renderer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LayoutResult {
    pub config: LayoutConfig,
    pub viewport: Viewport,
    pub time_labels: Vec<String>,
    /// Height per unit of weight shared by every band.
    #[serde(serialize_with = "round6")]
    pub scale: f64,
    pub layers: Vec<StreamLayer>,
    pub words: Vec<PlacedWord>,
    pub dropped: Vec<DroppedWord>,
}

impl LayoutResult {
    pub fn n_boxes(&self) -> usize {
        self.time_labels.len()
    }

    pub fn column_width(&self) -> f64 {
        self.viewport.width / self.n_boxes() as f64
    }

    /// Horizontal extent of box `t`.
    pub fn column(&self, t: usize) -> (f64, f64) {
        column_bounds(self.viewport.width, self.n_boxes(), t)
    }
}

pub(crate) fn column_bounds(width: f64, n: usize, t: usize) -> (f64, f64) {
    let cw = width / n as f64;
    (cw * t as f64, cw * (t + 1) as f64)
}

pub(crate) fn box_center(width: f64, n: usize, t: usize) -> f64 {
    width / n as f64 * (t as f64 + 0.5)
}

pub(crate) fn round_to(v: f64, digits: i32) -> f64 {
    let p = 10f64.powi(digits);
    let r = (v * p).round() / p;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn round6<S: serde::Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_to(*v, 6))
}

fn round_vec<S: serde::Serializer>(v: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| round_to(*x, 6)))
}

/// Sample abscissae: viewport edges plus `SAMPLES_PER_INTERVAL` steps between
/// consecutive box centers. Box center `t` is sample `1 + t * SAMPLES_PER_INTERVAL`.
pub fn sample_xs(width: f64, n: usize) -> Vec<f64> {
    let mut xs = Vec::with_capacity(2 + (n.saturating_sub(1)) * SAMPLES_PER_INTERVAL + 1);
    xs.push(0.0);
    for t in 0..n {
        xs.push(box_center(width, n, t));
        if t + 1 < n {
            let cw = width / n as f64;
            for j in 1..SAMPLES_PER_INTERVAL {
                let frac = j as f64 / SAMPLES_PER_INTERVAL as f64;
                xs.push(cw * (t as f64 + 0.5 + frac));
            }
        }
    }
    xs.push(width);
    xs
}

/// Stream bands for a weight matrix, plus the shared height-per-weight scale.
#[derive(Debug, Clone, PartialEq)]
pub struct Streams {
    pub layers: Vec<StreamLayer>,
    pub scale: f64,
}

/// Build the stacked bands. The stack at each box is centered on the middle
/// of the viewport and the tallest stack spans `HEIGHT_UTILIZATION` of the
/// height. Each boundary is a monotone cubic between box centers; boundaries
/// are then forced into stacking order so no band has negative thickness.
pub fn compute_layers(weights: &StreamWeights, config: &LayoutConfig) -> Result<Streams> {
    let n = weights.n_boxes();
    if n == 0 {
        return Err(Error::AllWeightsZero);
    }
    let totals: Vec<f64> = (0..n)
        .map(|t| weights.values.iter().map(|row| row[t]).sum())
        .collect();
    let max_total = totals.iter().copied().fold(0.0, f64::max);
    if max_total <= 0.0 {
        return Err(Error::AllWeightsZero);
    }
    let scale = HEIGHT_UTILIZATION * config.height / max_total;
    let mid = config.height / 2.0;

    let centers: Vec<f64> = (0..n).map(|t| box_center(config.width, n, t)).collect();
    let xs = sample_xs(config.width, n);
    let n_layers = weights.values.len();

    // boundaries[k] at box centers: top of the stack plus the first k bands.
    let mut boundaries: Vec<Vec<f64>> = Vec::with_capacity(n_layers + 1);
    for k in 0..=n_layers {
        let knots: Vec<f64> = (0..n)
            .map(|t| {
                let above: f64 = weights.values[..k].iter().map(|row| row[t]).sum();
                mid - scale * totals[t] / 2.0 + scale * above
            })
            .collect();
        boundaries.push(monotone_cubic(&centers, &knots, &xs));
    }
    for k in 1..boundaries.len() {
        let (done, rest) = boundaries.split_at_mut(k);
        for (y, prev) in rest[0].iter_mut().zip(&done[k - 1]) {
            *y = y.max(*prev);
        }
    }

    let layers = weights
        .categories
        .iter()
        .enumerate()
        .take(n_layers)
        .map(|(c, &category)| StreamLayer {
            category,
            color: palette::layer_color(category).to_string(),
            box_weights: weights.values[c].clone(),
            x: xs.clone(),
            top: boundaries[c].clone(),
            bottom: boundaries[c + 1].clone(),
        })
        .collect();
    Ok(Streams { layers, scale })
}

/// Linear map of a metric value onto `[min_font, max_font]`; the midpoint
/// size when the range is degenerate.
pub fn font_size(value: f64, vmin: f64, vmax: f64, config: &LayoutConfig) -> f64 {
    if vmax <= vmin {
        return (config.min_font + config.max_font) / 2.0;
    }
    let f = config.min_font + (config.max_font - config.min_font) * (value - vmin) / (vmax - vmin);
    f.clamp(config.min_font, config.max_font)
}

/// Place every selected word. Cells are processed in box order, then stacking
/// order, then rank.
pub fn place_words(
    streams: &Streams,
    selections: &[BoxSelection],
    time_labels: &[String],
    config: &LayoutConfig,
) -> LayoutResult {
    let n = time_labels.len();
    let (vmin, vmax) = selections
        .iter()
        .flat_map(|s| s.terms.iter().map(|t| t.value))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });

    let mut grid = placement::OccupancyGrid::new(config.width, config.height);
    let mut words = Vec::new();
    let mut dropped = Vec::new();
    for sel in selections {
        let Some(layer) = streams.layers.iter().find(|l| l.category == sel.category) else {
            continue;
        };
        let (x0, x1) = column_bounds(config.width, n, sel.box_index);
        // A category with no weight in this box has no region here, even
        // where the interpolated band starts to widen toward a neighbor.
        let empty = layer.box_weights[sel.box_index] <= 0.0;
        let mut cell = placement::Cell::new(layer, x0, x1, &grid);
        for (rank, selected) in sel.terms.iter().enumerate() {
            let size = font_size(selected.value, vmin, vmax, config);
            let spot = if empty {
                None
            } else {
                cell.place(&mut grid, &selected.term, size, config.min_font)
            };
            match spot {
                Some((font, rect)) => words.push(PlacedWord {
                    term: selected.term.clone(),
                    category: sel.category,
                    box_index: sel.box_index,
                    rank,
                    font_size: font,
                    x: rect.x,
                    y: rect.y,
                    w: rect.w,
                    h: rect.h,
                    metric_value: selected.value,
                    color: palette::word_color(sel.category, rank, config.top_k),
                }),
                None => dropped.push(DroppedWord {
                    term: selected.term.clone(),
                    category: sel.category,
                    box_index: sel.box_index,
                    rank,
                    metric_value: selected.value,
                    reason: NO_FIT.to_string(),
                }),
            }
        }
    }

    LayoutResult {
        config: *config,
        viewport: Viewport {
            width: config.width,
            height: config.height,
        },
        time_labels: time_labels.to_vec(),
        scale: streams.scale,
        layers: streams.layers.clone(),
        words,
        dropped,
    }
}
