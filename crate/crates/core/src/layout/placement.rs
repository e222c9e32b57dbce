//! Occupancy grid and per-cell word search.

use super::{polyline_extreme, text_width, StreamLayer, GRID_CELL, SHRINK_STEP};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Rect {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

/// Viewport-wide grid of `GRID_CELL` squares. A placed word marks every cell
/// its box touches, so two words never share a cell and never overlap.
pub(crate) struct OccupancyGrid {
    cols: usize,
    rows: usize,
    taken: Vec<bool>,
    /// 2D prefix sums over `taken`, `(cols + 1) * (rows + 1)`.
    sums: Vec<u32>,
}

impl OccupancyGrid {
    pub fn new(width: f64, height: f64) -> Self {
        let cols = (width / GRID_CELL).ceil() as usize;
        let rows = (height / GRID_CELL).ceil() as usize;
        OccupancyGrid {
            cols,
            rows,
            taken: vec![false; cols * rows],
            sums: vec![0; (cols + 1) * (rows + 1)],
        }
    }

    fn sum_at(&self, i: usize, j: usize) -> u32 {
        self.sums[j * (self.cols + 1) + i]
    }

    /// Whether any cell in columns `i0..i1`, rows `j0..j1` is taken.
    fn any_taken(&self, i0: usize, i1: usize, j0: usize, j1: usize) -> bool {
        self.sum_at(i1, j1) + self.sum_at(i0, j0) != self.sum_at(i0, j1) + self.sum_at(i1, j0)
    }

    fn mark(&mut self, i0: usize, i1: usize, j0: usize, j1: usize) {
        for j in j0..j1 {
            for i in i0..i1 {
                self.taken[j * self.cols + i] = true;
            }
        }
        let stride = self.cols + 1;
        for j in j0..self.rows {
            let mut row = 0;
            for i in 0..self.cols {
                row += u32::from(self.taken[j * self.cols + i]);
                self.sums[(j + 1) * stride + i + 1] = self.sums[j * stride + i + 1] + row;
            }
        }
    }
}

/// Grid column range `[i0, i1)` covered by `[x, x + w]`.
fn cell_span(start: usize, w: f64) -> usize {
    start + ((w / GRID_CELL) - 1e-9).ceil().max(1.0) as usize
}

/// One `(box, category)` region: the column strip of the box intersected
/// with the category's band.
pub(crate) struct Cell {
    /// First and one-past-last grid column fully inside the box column.
    first: usize,
    last: usize,
    /// Per grid column `i`: highest band top and lowest band bottom over the
    /// cell's x range, so any box inside them lies inside the band.
    max_top: Vec<f64>,
    min_bottom: Vec<f64>,
    center_x: f64,
    center_y: f64,
}

impl Cell {
    pub fn new(layer: &StreamLayer, x0: f64, x1: f64, grid: &OccupancyGrid) -> Self {
        let first = ((x0 / GRID_CELL) - 1e-9).ceil().max(0.0) as usize;
        let last = (((x1 / GRID_CELL) + 1e-9).floor() as usize).min(grid.cols);
        let mut max_top = Vec::with_capacity(last.saturating_sub(first));
        let mut min_bottom = Vec::with_capacity(last.saturating_sub(first));
        for i in first..last {
            let (a, b) = (i as f64 * GRID_CELL, (i + 1) as f64 * GRID_CELL);
            max_top.push(polyline_extreme(&layer.x, &layer.top, a, b, true));
            min_bottom.push(polyline_extreme(&layer.x, &layer.bottom, a, b, false));
        }
        let center_x = (x0 + x1) / 2.0;
        let center_y = (layer.top_at(center_x) + layer.bottom_at(center_x)) / 2.0;
        Cell {
            first,
            last,
            max_top,
            min_bottom,
            center_x,
            center_y,
        }
    }

    /// Try `size`, then shrink by `SHRINK_STEP` while above `min_font`, then
    /// `min_font` itself. Marks the grid on success.
    pub fn place(
        &mut self,
        grid: &mut OccupancyGrid,
        term: &str,
        size: f64,
        min_font: f64,
    ) -> Option<(f64, Rect)> {
        let mut font = size;
        loop {
            if let Some(rect) = self.try_size(grid, term, font) {
                return Some((font, rect));
            }
            if font <= min_font {
                return None;
            }
            font = (font * SHRINK_STEP).max(min_font);
        }
    }

    fn try_size(&self, grid: &mut OccupancyGrid, term: &str, font: f64) -> Option<Rect> {
        let w = text_width(term, font);
        let h = font;
        if self.last <= self.first || w <= 0.0 {
            return None;
        }
        let span = cell_span(0, w);
        let rspan = cell_span(0, h);
        if span > self.last - self.first || rspan > grid.rows {
            return None;
        }

        // Feasible vertical range for each start column.
        let starts = self.last - self.first - span + 1;
        let mut windows = Vec::with_capacity(starts);
        for s in 0..starts {
            let top = self.max_top[s..s + span]
                .iter()
                .copied()
                .fold(f64::MIN, f64::max);
            let bottom = self.min_bottom[s..s + span]
                .iter()
                .copied()
                .fold(f64::MAX, f64::min);
            windows.push((top, bottom));
        }
        let lo = windows.iter().map(|w| w.0).fold(f64::MAX, f64::min);
        let hi = windows.iter().map(|w| w.1).fold(f64::MIN, f64::max);
        if hi - lo < h {
            return None;
        }

        let j_min = ((lo / GRID_CELL) - 1e-9).ceil().max(0.0) as usize;
        let j_max = (((hi - h) / GRID_CELL) + 1e-9)
            .floor()
            .min((grid.rows - rspan) as f64);
        if j_max < j_min as f64 {
            return None;
        }
        let mut rows: Vec<usize> = (j_min..=j_max as usize).collect();
        rows.sort_by(|&a, &b| {
            let da = (a as f64 * GRID_CELL + h / 2.0 - self.center_y).abs();
            let db = (b as f64 * GRID_CELL + h / 2.0 - self.center_y).abs();
            da.total_cmp(&db).then(a.cmp(&b))
        });
        let mut cols: Vec<usize> = (0..starts).collect();
        cols.sort_by(|&a, &b| {
            let xa = (self.first + a) as f64 * GRID_CELL + w / 2.0;
            let xb = (self.first + b) as f64 * GRID_CELL + w / 2.0;
            (xa - self.center_x)
                .abs()
                .total_cmp(&(xb - self.center_x).abs())
                .then(a.cmp(&b))
        });

        for &j in &rows {
            let y = j as f64 * GRID_CELL;
            for &s in &cols {
                let (top, bottom) = windows[s];
                if y < top || y + h > bottom {
                    continue;
                }
                let i0 = self.first + s;
                let i1 = cell_span(i0, w);
                let j1 = cell_span(j, h);
                if grid.any_taken(i0, i1, j, j1) {
                    continue;
                }
                grid.mark(i0, i1, j, j1);
                return Some(Rect {
                    x: i0 as f64 * GRID_CELL,
                    y,
                    w,
                    h,
                });
            }
        }
        None
    }
}
