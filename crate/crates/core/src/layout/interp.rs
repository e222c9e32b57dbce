//! Monotone piecewise-cubic interpolation and polyline queries.

fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Tangents for a monotone cubic Hermite curve through `(xs, ys)` using
/// Steffen's limiter. On each interval the curve stays between the two
/// endpoint values.
fn steffen_tangents(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    if n < 2 {
        return vec![0.0; n];
    }
    let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
    let s: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / h[i]).collect();
    let mut m = vec![0.0; n];
    m[0] = s[0];
    m[n - 1] = s[n - 2];
    for i in 1..n - 1 {
        let p = (s[i - 1] * h[i] + s[i] * h[i - 1]) / (h[i - 1] + h[i]);
        m[i] = (sign(s[i - 1]) + sign(s[i])) * s[i - 1].abs().min(s[i].abs()).min(0.5 * p.abs());
    }
    m
}

/// Hermite evaluation without the final clamp, and the clamp bounds.
fn hermite(xs: &[f64], ys: &[f64], m: &[f64], x: f64) -> (f64, f64, f64) {
    let last = xs.len() - 1;
    if x <= xs[0] {
        return (ys[0], ys[0], ys[0]);
    }
    if x >= xs[last] {
        return (ys[last], ys[last], ys[last]);
    }
    let i = xs.partition_point(|&k| k <= x) - 1;
    let h = xs[i + 1] - xs[i];
    let u = (x - xs[i]) / h;
    let (u2, u3) = (u * u, u * u * u);
    let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    let h10 = u3 - 2.0 * u2 + u;
    let h01 = -2.0 * u3 + 3.0 * u2;
    let h11 = u3 - u2;
    let y = h00 * ys[i] + h10 * h * m[i] + h01 * ys[i + 1] + h11 * h * m[i + 1];
    (y, ys[i].min(ys[i + 1]), ys[i].max(ys[i + 1]))
}

/// Evaluate the monotone cubic through the knots at each of `at`. Points
/// outside the knot range take the nearest end value.
pub fn monotone_cubic(xs: &[f64], ys: &[f64], at: &[f64]) -> Vec<f64> {
    assert_eq!(xs.len(), ys.len());
    assert!(!xs.is_empty());
    let m = steffen_tangents(xs, ys);
    at.iter()
        .map(|&x| {
            let (y, lo, hi) = hermite(xs, ys, &m, x);
            // Guard against rounding just past an endpoint.
            y.clamp(lo, hi)
        })
        .collect()
}

/// Linear interpolation of the polyline `(xs, ys)` at `x` (clamped to range).
pub fn polyline_at(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let last = xs.len() - 1;
    if x <= xs[0] {
        return ys[0];
    }
    if x >= xs[last] {
        return ys[last];
    }
    let i = xs.partition_point(|&k| k <= x) - 1;
    let u = (x - xs[i]) / (xs[i + 1] - xs[i]);
    ys[i] + u * (ys[i + 1] - ys[i])
}

/// Maximum (or minimum) of the polyline over `[a, b]`: the extreme is at an
/// end of the range or at a vertex inside it.
pub fn polyline_extreme(xs: &[f64], ys: &[f64], a: f64, b: f64, max: bool) -> f64 {
    let pick = |p: f64, q: f64| if max { p.max(q) } else { p.min(q) };
    let mut v = pick(polyline_at(xs, ys, a), polyline_at(xs, ys, b));
    let start = xs.partition_point(|&k| k <= a);
    for (&x, &y) in xs[start..].iter().zip(&ys[start..]) {
        if x >= b {
            break;
        }
        v = pick(v, y);
    }
    v
}
