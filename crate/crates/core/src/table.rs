use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::predicates::{orient, Orientation, Point};
use crate::triangle::PointId;

/// The input point set, validated for general position: at least three
/// points, pairwise distinct, no three collinear. `PointId`s are positions
/// in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointTable {
    points: Vec<Point>,
}

impl PointTable {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewPoints(points.len()));
        }
        check_general_position(&points)?;
        Ok(PointTable { points })
    }

    /// Convenience constructor from raw coordinate pairs.
    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        let points = coords.iter().map(|&c| Point::try_from(c)).collect::<Result<Vec<_>>>()?;
        PointTable::new(points)
    }

    /// The table of the first `len` points. Ids are unchanged.
    pub fn prefix(&self, len: usize) -> Result<Self> {
        if len < 3 || len > self.points.len() {
            return Err(Error::TooFewPoints(len.min(self.points.len())));
        }
        Ok(PointTable { points: self.points[..len].to_vec() })
    }

    /// A copy with `p` appended as the next id, checking that general
    /// position survives.
    pub fn extended(&self, p: Point) -> Result<Self> {
        let new_id = PointId(self.points.len());
        if let Some(i) = self.points.iter().position(|a| *a == p) {
            return Err(Error::DuplicatePoint { first: PointId(i), second: new_id });
        }
        for (i, a) in self.points.iter().enumerate() {
            for (j, b) in self.points.iter().enumerate().skip(i + 1) {
                if orient(a, b, &p) == Orientation::Collinear {
                    return Err(Error::CollinearTriple([PointId(i), PointId(j), new_id]));
                }
            }
        }
        let mut points = self.points.clone();
        points.push(p);
        Ok(PointTable { points })
    }

    /// A copy with query point `p` appended, rejecting only duplicates. Used
    /// to insert a point that may line up with two interior points; the
    /// insertion only ever looks at hull edges.
    pub(crate) fn with_query_point(&self, p: Point) -> Result<Self> {
        if let Some(i) = self.points.iter().position(|a| *a == p) {
            return Err(Error::DuplicatePoint { first: PointId(i), second: PointId(self.points.len()) });
        }
        let mut points = self.points.clone();
        points.push(p);
        Ok(PointTable { points })
    }

    /// Skips validation; lets tests build tables that are not in general
    /// position.
    #[cfg(test)]
    pub(crate) fn unchecked(coords: Vec<(i64, i64)>) -> Self {
        let points = coords.into_iter().map(|c| Point::try_from(c).unwrap()).collect();
        PointTable { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, id: PointId) -> Option<&Point> {
        self.points.get(id.0)
    }

    pub fn point(&self, id: PointId) -> Result<Point> {
        self.get(id).copied().ok_or(Error::UnknownPoint(id))
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn ids(&self) -> impl Iterator<Item = PointId> + '_ {
        (0..self.points.len()).map(PointId)
    }

    pub fn iter(&self) -> impl Iterator<Item = (PointId, &Point)> + '_ {
        self.points.iter().enumerate().map(|(i, p)| (PointId(i), p))
    }
}

/// Direction from one point to another reduced to lowest terms, with a
/// sign convention that identifies opposite directions.
pub(crate) fn line_direction(from: &Point, to: &Point) -> (i64, i64) {
    let (dx, dy) = (to.x() - from.x(), to.y() - from.y());
    let g = dx.gcd(&dy);
    let (dx, dy) = (dx / g, dy / g);
    if dx < 0 || (dx == 0 && dy < 0) {
        (-dx, -dy)
    } else {
        (dx, dy)
    }
}

/// Reports the first duplicate pair, then the first collinear triple
/// `[i, j, k]` with `i < j < k` in lexicographic order of `(i, k)`.
fn check_general_position(points: &[Point]) -> Result<()> {
    let mut seen: HashMap<Point, usize> = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if let Some(&first) = seen.get(p) {
            return Err(Error::DuplicatePoint { first: PointId(first), second: PointId(i) });
        }
        seen.insert(*p, i);
    }
    let mut directions: HashMap<(i64, i64), usize> = HashMap::new();
    for (i, a) in points.iter().enumerate() {
        directions.clear();
        for (k, b) in points.iter().enumerate().skip(i + 1) {
            if let Some(&j) = directions.get(&line_direction(a, b)) {
                return Err(Error::CollinearTriple([PointId(i), PointId(j), PointId(k)]));
            }
            directions.insert(line_direction(a, b), k);
        }
    }
    Ok(())
}
