use std::fmt::Write;

use crate::layout::LayoutResult;

const AXIS_FONT: f64 = 11.0;

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

/// Render a layout as a standalone SVG document whose user units are layout
/// units. Bands are closed paths; each word is a `<text>` whose em box starts
/// at the word's top-left corner and is stretched to the measured width.
pub fn emit_svg(result: &LayoutResult) -> String {
    let (w, h) = (result.viewport.width, result.viewport.height);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}" font-family="Helvetica, Arial, sans-serif">"#,
        num(w),
        num(h),
        num(w),
        num(h)
    );
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{}" height="{}" fill="#ffffff"/>"##,
        num(w),
        num(h)
    );

    out.push_str("<g class=\"layers\">\n");
    for layer in &result.layers {
        let mut d = String::new();
        for (i, (x, y)) in layer.x.iter().zip(&layer.top).enumerate() {
            let _ = write!(
                d,
                "{}{} {} ",
                if i == 0 { "M" } else { "L" },
                num(*x),
                num(*y)
            );
        }
        for (x, y) in layer.x.iter().zip(&layer.bottom).rev() {
            let _ = write!(d, "L{} {} ", num(*x), num(*y));
        }
        d.push('Z');
        let _ = writeln!(
            out,
            r#"<path class="layer" data-category="{}" fill="{}" fill-opacity="0.45" d="{}"/>"#,
            layer.category.name(),
            layer.color,
            d
        );
    }
    out.push_str("</g>\n<g class=\"words\">\n");
    for word in &result.words {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="{}" textLength="{}" lengthAdjust="spacingAndGlyphs" dominant-baseline="text-before-edge" fill="{}" data-category="{}" data-box="{}">{}</text>"#,
            num(word.x),
            num(word.y),
            num(word.font_size),
            num(word.w),
            word.color,
            word.category.name(),
            word.box_index,
            escape(&word.term)
        );
    }
    out.push_str("</g>\n<g class=\"axis\">\n");
    for (t, label) in result.time_labels.iter().enumerate() {
        let (x0, x1) = result.column(t);
        let _ = writeln!(
            out,
            r##"<text x="{}" y="{}" font-size="{}" text-anchor="middle" fill="#333333">{}</text>"##,
            num((x0 + x1) / 2.0),
            num(h - 4.0),
            num(AXIS_FONT),
            escape(label)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escapes_markup() {
        assert_eq!(escape(r#"a<b>&"c'"#), "a&lt;b&gt;&amp;&quot;c&apos;");
        assert_eq!(num(-0.001), "0.00");
        assert_eq!(num(1.005), "1.00");
    }
}
