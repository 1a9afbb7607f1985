//! Self-contained SVG rendering of the doubled periodic orbit: two panels,
//! one per coordinate plane, with the orbit circle in black and the
//! critical segment in red.

use std::fmt::Write;

/// Renders the figure for box radius `b`: the orbit is the circle of
/// radius `b/2` in both projections, the critical set meets each panel in
/// the segment `[-b, b] × {0}`.
pub fn periodic_figure(b: f64) -> String {
    let mut out = String::new();
    let panel = 360.0f64;
    let margin = 20.0f64;
    let width = 2.0 * panel + 3.0 * margin;
    let height = panel + 2.0 * margin + 24.0;
    // Math-space scale: the panel shows [-1.2 b, 1.2 b] in both axes.
    let scale = panel / (2.4 * b);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();
    for (i, label) in ["(x1, x2)", "(x3, x4)"].iter().enumerate() {
        let cx = margin + panel / 2.0 + i as f64 * (panel + margin);
        let cy = margin + panel / 2.0;
        writeln!(
            out,
            r#"<g transform="translate({cx},{cy}) scale({scale},-{scale})">"#
        )
        .unwrap();
        // Light axes.
        writeln!(
            out,
            r##"<line x1="{x0}" y1="0" x2="{x1}" y2="0" stroke="#cccccc" stroke-width="{w}"/>"##,
            x0 = -1.2 * b,
            x1 = 1.2 * b,
            w = 1.0 / scale
        )
        .unwrap();
        writeln!(
            out,
            r##"<line x1="0" y1="{y0}" x2="0" y2="{y1}" stroke="#cccccc" stroke-width="{w}"/>"##,
            y0 = -1.2 * b,
            y1 = 1.2 * b,
            w = 1.0 / scale
        )
        .unwrap();
        // Critical segment in red.
        writeln!(
            out,
            r#"<line x1="{x0}" y1="0" x2="{x1}" y2="0" stroke="red" stroke-width="{w}"/>"#,
            x0 = -b,
            x1 = b,
            w = 3.0 / scale
        )
        .unwrap();
        // The orbit: a circle of radius b/2 in black.
        writeln!(
            out,
            r#"<circle cx="0" cy="0" r="{r}" fill="none" stroke="black" stroke-width="{w}"/>"#,
            r = b / 2.0,
            w = 2.0 / scale
        )
        .unwrap();
        writeln!(out, "</g>").unwrap();
        writeln!(
            out,
            r#"<text x="{cx}" y="{ty}" text-anchor="middle" font-family="monospace" font-size="14">{label}</text>"#,
            ty = margin + panel + 18.0
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}
