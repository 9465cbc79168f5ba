//! Deterministic SVG rendering of embedded graphs.
//!
//! Vertices are dots colored by parity class, edges are segments (dashed
//! when the weight is a proper dyadic), and an optional matching is
//! highlighted. Equal inputs produce byte-identical output.

use std::fmt::Write as _;

use crate::graph::{Color, EmbeddedPlanarGraph, GridPoint};

const SCALE: i64 = 24;
const MARGIN: i64 = 20;
const DOT_RADIUS: i64 = 5;

/// Render `g` as an SVG 1.1 document; `matching` edges (unordered endpoint
/// pairs) are drawn highlighted.
pub fn render_svg(g: &EmbeddedPlanarGraph, matching: Option<&[(GridPoint, GridPoint)]>) -> String {
    let matched: std::collections::BTreeSet<(GridPoint, GridPoint)> = matching
        .unwrap_or(&[])
        .iter()
        .map(|&(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect();

    let (min_x, max_x, min_y, max_y) = g.vertices().iter().fold(
        (0i64, 0i64, 0i64, 0i64),
        |(ax, bx, ay, by), p| (ax.min(p.x), bx.max(p.x), ay.min(p.y), by.max(p.y)),
    );
    // flip y so the mathematical orientation (y up) is preserved on screen
    let tx = |p: GridPoint| -> (i64, i64) {
        (
            (p.x - min_x) * SCALE + MARGIN,
            (max_y - p.y) * SCALE + MARGIN,
        )
    };
    let width = (max_x - min_x) * SCALE + 2 * MARGIN;
    let height = (max_y - min_y) * SCALE + 2 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {width} {height}">"#
    );
    for e in g.edges() {
        let (x1, y1) = tx(e.u);
        let (x2, y2) = tx(e.v);
        let highlighted = matched.contains(&(e.u, e.v));
        let stroke = if highlighted { "#d62728" } else { "#555555" };
        let stroke_width = if highlighted { 5 } else { 2 };
        let dash = if e.w.exp2() > 0 {
            r##" stroke-dasharray="4 3""##
        } else {
            ""
        };
        let _ = writeln!(
            out,
            r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" stroke-width="{stroke_width}"{dash}/>"##
        );
    }
    for &p in g.vertices() {
        let (cx, cy) = tx(p);
        let fill = match p.color() {
            Color::White => "#ffffff",
            Color::Black => "#000000",
        };
        let _ = writeln!(
            out,
            r##"<circle cx="{cx}" cy="{cy}" r="{DOT_RADIUS}" fill="{fill}" stroke="#000000" stroke-width="1"/>"##
        );
    }
    out.push_str("</svg>\n");
    out
}
