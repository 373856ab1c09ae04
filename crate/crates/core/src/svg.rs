//! SVG figure of a triangulation: thin blue triangle edges, bold hull
//! edges, labelled vertices.
//!
//! Coordinates are mapped into an 800×800 viewport with a 40 pixel margin,
//! one scale for both axes, y pointing up. Numbers are printed with two
//! decimals so the output is byte-stable.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::Result;
use crate::hull::HullLoop;
use crate::table::PointTable;
use crate::triangle::PointId;
use crate::triangulation::Triangulation;

pub const SIZE: f64 = 800.0;
pub const MARGIN: f64 = 40.0;

struct Viewport {
    min_x: f64,
    min_y: f64,
    scale: f64,
    off_x: f64,
    off_y: f64,
}

impl Viewport {
    fn fit(table: &PointTable) -> Viewport {
        let xs = table.points().iter().map(|p| p.x() as f64);
        let ys = table.points().iter().map(|p| p.y() as f64);
        let (min_x, max_x) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
        let (min_y, max_y) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
        let span = (max_x - min_x).max(max_y - min_y).max(1.0);
        let inner = SIZE - 2.0 * MARGIN;
        let scale = inner / span;
        Viewport {
            min_x,
            min_y,
            scale,
            off_x: MARGIN + (inner - (max_x - min_x) * scale) / 2.0,
            off_y: MARGIN + (inner - (max_y - min_y) * scale) / 2.0,
        }
    }

    fn map(&self, table: &PointTable, id: PointId) -> (f64, f64) {
        let p = table.points()[id.0];
        let x = self.off_x + (p.x() as f64 - self.min_x) * self.scale;
        let y = SIZE - (self.off_y + (p.y() as f64 - self.min_y) * self.scale);
        (x, y)
    }
}

pub fn render_svg(table: &PointTable, t: &Triangulation) -> Result<String> {
    let hull = HullLoop::from_triangulation(t, table)?;
    let view = Viewport::fit(table);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let hull_edges: BTreeSet<(PointId, PointId)> = hull.edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let line = |out: &mut String, a: PointId, b: PointId, width: &str| {
        let ((x1, y1), (x2, y2)) = (view.map(table, a), view.map(table, b));
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="blue" stroke-width="{width}"/>"#
        );
    };
    let _ = writeln!(out, r#"<g id="triangles">"#);
    for e in t.edges().keys() {
        let (a, b) = e.endpoints();
        if !hull_edges.contains(&(a, b)) {
            line(&mut out, a, b, "1");
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g id="hull">"#);
    for &(a, b) in &hull_edges {
        line(&mut out, a, b, "3");
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g id="vertices" font-family="monospace" font-size="12">"#);
    for id in table.ids() {
        let (x, y) = view.map(table, id);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
        let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}">{id}</text>"#, x + 5.0, y - 5.0);
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}
