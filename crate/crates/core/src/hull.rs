//! The convex hull as a successor function on its vertices.
//!
//! [`HullLoop`] stores the hull as a cyclic sequence, counterclockwise,
//! rotated so the smallest id comes first. The successor `f(x)` of a hull
//! vertex is the next element of the sequence, wrapping around at the end;
//! all modular arithmetic on positions happens in [`HullLoop::iterate`].
//!
//! Against a point `d` outside the hull the hull edges split into one
//! contiguous red arc and one blue arc. The two vertices where the colors
//! change are the purple points: `p1` starts the red arc, `p2` ends it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::predicates::{orient, Orientation, Point};
use crate::table::PointTable;
use crate::triangle::PointId;
use crate::triangulation::{Edge, Triangulation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Red,
    Blue,
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeColor::Red => "RED",
            EdgeColor::Blue => "BLUE",
        })
    }
}

/// The two purple points of a hull seen from an outside point, and the
/// length of the red arc between them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PurpleReport {
    /// `[p1, f(p1)]` is red, `[f⁻¹(p1), p1]` is blue.
    pub p1: PointId,
    /// `[p2, f(p2)]` is blue, `[f⁻¹(p2), p2]` is red.
    pub p2: PointId,
    /// Number of red edges; `f^red_run(p1) = p2`.
    pub red_run: usize,
}

#[derive(Clone, Debug)]
pub struct HullLoop {
    cycle: Vec<PointId>,
    position: HashMap<PointId, usize>,
}

impl PartialEq for HullLoop {
    fn eq(&self, other: &Self) -> bool {
        self.cycle == other.cycle
    }
}

impl Eq for HullLoop {}

impl HullLoop {
    /// Wraps a counterclockwise cycle of distinct ids, rotating it so the
    /// smallest id comes first.
    pub fn from_cycle(mut cycle: Vec<PointId>) -> Result<HullLoop> {
        if cycle.len() < 3 {
            return Err(Error::MalformedBoundary(format!("loop of length {}", cycle.len())));
        }
        let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
        cycle.rotate_left(start);
        let position: HashMap<PointId, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        if position.len() != cycle.len() {
            return Err(Error::MalformedBoundary("repeated vertex in loop".into()));
        }
        Ok(HullLoop { cycle, position })
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// The loop in counterclockwise order, smallest id first.
    pub fn vertices(&self) -> &[PointId] {
        &self.cycle
    }

    pub fn contains(&self, x: PointId) -> bool {
        self.position.contains_key(&x)
    }

    /// `f^k(x)`; negative `k` walks backwards.
    pub fn iterate(&self, x: PointId, k: i64) -> Option<PointId> {
        let n = self.cycle.len() as i64;
        let i = *self.position.get(&x)? as i64;
        Some(self.cycle[(i + k).rem_euclid(n) as usize])
    }

    /// `f(x)`.
    pub fn successor(&self, x: PointId) -> Option<PointId> {
        self.iterate(x, 1)
    }

    /// `f⁻¹(x)`, the same as `f^(n-1)(x)`.
    pub fn predecessor(&self, x: PointId) -> Option<PointId> {
        self.iterate(x, -1)
    }

    /// Directed hull edges `(x, f(x))`, starting at the first vertex.
    pub fn edges(&self) -> impl Iterator<Item = (PointId, PointId)> + '_ {
        let n = self.cycle.len();
        (0..n).map(move |i| (self.cycle[i], self.cycle[(i + 1) % n]))
    }

    /// Same cyclic sequence up to rotation. Reflections are not equal.
    pub fn rotation_eq(&self, other: &HullLoop) -> bool {
        let Some(&first) = other.cycle.first() else {
            return self.cycle.is_empty();
        };
        self.len() == other.len()
            && self.contains(first)
            && other.cycle.iter().enumerate().all(|(k, &v)| self.iterate(first, k as i64) == Some(v))
    }

    /// The hull loop of a triangulation, from its directed boundary edges.
    ///
    /// Checks that the boundary chains into one cycle and that every other
    /// vertex of the triangulation lies strictly left of every hull edge.
    pub fn from_triangulation(t: &Triangulation, table: &PointTable) -> Result<HullLoop> {
        let boundary = t.directed_boundary();
        if boundary.is_empty() {
            return Err(Error::MalformedBoundary("no boundary edges".into()));
        }
        let mut succ: BTreeMap<PointId, PointId> = BTreeMap::new();
        let mut targets: BTreeSet<PointId> = BTreeSet::new();
        for b in &boundary {
            if succ.insert(b.from, b.to).is_some() || !targets.insert(b.to) {
                return Err(Error::MalformedBoundary(format!("vertex {} has two boundary successors or predecessors", b.from)));
            }
        }
        let start = *succ.keys().next().unwrap();
        let mut cycle = vec![start];
        let mut x = succ[&start];
        while x != start {
            if cycle.len() > succ.len() {
                return Err(Error::MalformedBoundary("boundary walk does not close".into()));
            }
            cycle.push(x);
            x = *succ
                .get(&x)
                .ok_or_else(|| Error::MalformedBoundary(format!("boundary stops at vertex {x}")))?;
        }
        if cycle.len() != succ.len() {
            return Err(Error::MalformedBoundary(format!(
                "boundary splits into several loops ({} of {} edges on the first)",
                cycle.len(),
                succ.len()
            )));
        }
        let hull = HullLoop::from_cycle(cycle)?;
        let vertices = t.vertices();
        for (x, fx) in hull.edges() {
            let (px, pfx) = (table.point(x)?, table.point(fx)?);
            for &p in vertices.iter().filter(|&&p| p != x && p != fx) {
                if orient(&px, &pfx, &table.point(p)?) != Orientation::CounterClockwise {
                    return Err(Error::MalformedBoundary(format!("vertex {p} is not left of hull edge ({x}, {fx})")));
                }
            }
        }
        Ok(hull)
    }

    /// Colors of the edges `[f^k(x0), f^(k+1)(x0)]`, `k = 0..n`, where `x0`
    /// is the first vertex of the loop.
    pub fn classify_edges(&self, t: &Triangulation, table: &PointTable, d: &Point) -> Result<Vec<EdgeColor>> {
        if let Some(tri) = t.find_containing(table, d)? {
            return Err(Error::InsidePoint(tri));
        }
        self.edges()
            .map(|(x, fx)| {
                let red = t.edge_is_red_at(table, &Edge::new(x, fx)?, d)?;
                Ok(if red { EdgeColor::Red } else { EdgeColor::Blue })
            })
            .collect()
    }

    /// The purple points of the hull seen from `d`.
    ///
    /// ```
    /// use naivetri::{HullLoop, PointId, PointTable, Point, Triangulation};
    ///
    /// let table = PointTable::from_coords(&[(0, 0), (4, 0), (0, 4)]).unwrap();
    /// let t = Triangulation::triangulate(&table).unwrap();
    /// let hull = HullLoop::from_triangulation(&t, &table).unwrap();
    /// let report = hull.purple_points(&t, &table, &Point::new(5, 5).unwrap()).unwrap();
    /// assert_eq!((report.p1, report.p2, report.red_run), (PointId(1), PointId(2), 1));
    /// ```
    pub fn purple_points(&self, t: &Triangulation, table: &PointTable, d: &Point) -> Result<PurpleReport> {
        let colors = self.classify_edges(t, table, d)?;
        purple_from_colors(self, &colors)
    }
}

/// Locates the purple points in a coloring of `hull`'s edges (as returned by
/// [`HullLoop::classify_edges`]).
pub fn purple_from_colors(hull: &HullLoop, colors: &[EdgeColor]) -> Result<PurpleReport> {
    let n = hull.len();
    assert_eq!(colors.len(), n);
    let changes = color_changes(colors);
    if changes != 2 {
        return Err(Error::ContiguityViolation { changes });
    }
    let vertices = hull.vertices();
    let mut p1 = None;
    let mut p2 = None;
    for k in 0..n {
        match (colors[(k + n - 1) % n], colors[k]) {
            (EdgeColor::Blue, EdgeColor::Red) => p1 = Some(vertices[k]),
            (EdgeColor::Red, EdgeColor::Blue) => p2 = Some(vertices[k]),
            _ => {}
        }
    }
    let (p1, p2) = (p1.unwrap(), p2.unwrap());
    let red_run = colors.iter().filter(|&&c| c == EdgeColor::Red).count();
    if hull.iterate(p1, red_run as i64) != Some(p2) {
        return Err(Error::ContiguityViolation { changes });
    }
    Ok(PurpleReport { p1, p2, red_run })
}

/// Positions `k` where edge `k` and edge `k - 1` differ in color, cyclically.
pub fn color_changes(colors: &[EdgeColor]) -> usize {
    let n = colors.len();
    (0..n).filter(|&k| colors[k] != colors[(k + n - 1) % n]).count()
}

/// Convex hull of the whole table by gift wrapping. Never looks at a
/// triangulation.
pub fn hull_oracle(table: &PointTable) -> Result<HullLoop> {
    let ids: Vec<PointId> = table.ids().collect();
    hull_oracle_of(table, &ids)
}

/// Convex hull of the given subset of the table by gift wrapping.
pub fn hull_oracle_of(table: &PointTable, ids: &[PointId]) -> Result<HullLoop> {
    if ids.len() < 3 {
        return Err(Error::TooFewPoints(ids.len()));
    }
    let pts: Vec<(PointId, Point)> = ids.iter().map(|&id| Ok((id, table.point(id)?))).collect::<Result<_>>()?;
    // Lowest, then leftmost: certainly a hull vertex.
    let start = *pts.iter().min_by_key(|(_, p)| (p.y(), p.x())).unwrap();
    let mut cycle = vec![start.0];
    let mut current = start;
    loop {
        let mut next = *pts.iter().find(|(id, _)| *id != current.0).unwrap();
        for cand in pts.iter().filter(|(id, _)| *id != current.0) {
            if cand.0 == next.0 {
                continue;
            }
            match orient(&current.1, &next.1, &cand.1) {
                Orientation::Clockwise => next = *cand,
                Orientation::Collinear => return Err(Error::DegenerateInput(current.1, next.1, cand.1)),
                Orientation::CounterClockwise => {}
            }
        }
        if next.0 == start.0 {
            break;
        }
        if cycle.len() == pts.len() {
            return Err(Error::MalformedBoundary("gift wrapping did not close".into()));
        }
        cycle.push(next.0);
        current = next;
    }
    HullLoop::from_cycle(cycle)
}
