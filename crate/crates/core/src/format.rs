//! Text formats: the point file read by the CLI and the triangulation
//! document it writes.
//!
//! A point file has one `x y` pair per line. Lines whose first non-blank
//! character is `#` are comments and blank lines are skipped; ids count the
//! remaining lines from zero.
//!
//! The document is JSON with a fixed layout (one point or triangle per
//! line) so that equal triangulations give byte-identical files.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Result;
use crate::hull::HullLoop;
use crate::predicates::Point;
use crate::table::PointTable;
use crate::triangle::PointId;
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("malformed document: {0}")]
    Document(String),
}

/// Reads `x y` pairs. Range and general-position checks are left to
/// [`PointTable`].
pub fn parse_point_file(text: &str) -> std::result::Result<Vec<(i64, i64)>, ParseError> {
    let mut coords = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |message: String| ParseError::Syntax { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(syntax(format!("expected two integers, found {} fields", fields.len())));
        }
        let parse = |s: &str| s.parse::<i64>().map_err(|e| syntax(format!("{s:?}: {e}")));
        coords.push((parse(fields[0])?, parse(fields[1])?));
    }
    Ok(coords)
}

pub fn render_point_file(points: &[Point]) -> String {
    points.iter().fold(String::new(), |mut out, p| {
        let _ = writeln!(out, "{} {}", p.x(), p.y());
        out
    })
}

/// A triangulation as written to disk: triangles counterclockwise with the
/// smallest index first, sorted; the hull counterclockwise from its
/// smallest index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub points: Vec<[i64; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub hull: Vec<usize>,
}

impl Document {
    pub fn from_triangulation(table: &PointTable, t: &Triangulation) -> Result<Document> {
        let hull = HullLoop::from_triangulation(t, table)?;
        Ok(Document {
            points: table.points().iter().map(|p| [p.x(), p.y()]).collect(),
            triangles: t.index_triples().into_iter().map(|v| v.map(|id| id.0)).collect(),
            hull: hull.vertices().iter().map(|id| id.0).collect(),
        })
    }

    pub fn parse(text: &str) -> std::result::Result<Document, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError::Document(e.to_string()))
    }

    pub fn render(&self) -> String {
        fn list<T>(out: &mut String, key: &str, items: &[T], last: bool, show: impl Fn(&T) -> String) {
            let _ = write!(out, "  \"{key}\": [");
            for (i, item) in items.iter().enumerate() {
                let _ = write!(out, "\n    {}{}", show(item), if i + 1 < items.len() { "," } else { "\n  " });
            }
            let _ = writeln!(out, "]{}", if last { "" } else { "," });
        }
        let mut out = String::from("{\n");
        list(&mut out, "points", &self.points, false, |p| format!("[{}, {}]", p[0], p[1]));
        list(&mut out, "triangles", &self.triangles, false, |t| format!("[{}, {}, {}]", t[0], t[1], t[2]));
        let hull: Vec<String> = self.hull.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "  \"hull\": [{}]", hull.join(", "));
        out.push_str("}\n");
        out
    }

    /// The point table, validated like any other input.
    pub fn table(&self) -> Result<PointTable> {
        let coords: Vec<(i64, i64)> = self.points.iter().map(|p| (p[0], p[1])).collect();
        PointTable::from_coords(&coords)
    }

    pub fn raw_triangles(&self) -> Vec<[PointId; 3]> {
        self.triangles.iter().map(|t| t.map(PointId)).collect()
    }

    pub fn hull_ids(&self) -> Vec<PointId> {
        self.hull.iter().map(|&i| PointId(i)).collect()
    }
}
