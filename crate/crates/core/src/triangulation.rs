//! The naive incremental triangulation.
//!
//! A triangulation is nothing more than a set of oriented triangles. Edges,
//! boundary edges and their colors are recomputed from that set whenever
//! they are needed, so every operation here is linear in the number of
//! triangles and building a triangulation of `n` points costs `O(n²)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::predicates::{inside_triangle, separated, Point};
use crate::table::PointTable;
use crate::triangle::{Idx3, OrientedTriangle, PointId};

/// An unordered pair of distinct points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: PointId,
    hi: PointId,
}

impl Edge {
    pub fn new(a: PointId, b: PointId) -> Result<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => {
                Err(Error::PreconditionViolated(format!("edge endpoints coincide at {a}")))
            }
        }
    }

    /// Endpoints, smaller id first.
    pub fn endpoints(&self) -> (PointId, PointId) {
        (self.lo, self.hi)
    }

    pub fn contains(&self, id: PointId) -> bool {
        self.lo == id || self.hi == id
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

/// A boundary edge directed so that the rest of its triangle lies on the
/// left.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectedBoundaryEdge {
    pub from: PointId,
    pub to: PointId,
    pub opposite: PointId,
}

/// What an insertion step did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// The point split this triangle in three.
    Inside(OrientedTriangle),
    /// The point was outside; one triangle was fanned onto each red edge.
    Outside(Vec<Edge>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Triangulation {
    triangles: BTreeSet<OrientedTriangle>,
}

impl Triangulation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_triangles(triangles: impl IntoIterator<Item = OrientedTriangle>) -> Self {
        Triangulation { triangles: triangles.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &OrientedTriangle> + '_ {
        self.triangles.iter()
    }

    pub fn contains(&self, t: &OrientedTriangle) -> bool {
        self.triangles.contains(t)
    }

    /// Canonical index triples: each CCW with the smallest id first, sorted.
    pub fn index_triples(&self) -> Vec<[PointId; 3]> {
        self.triangles.iter().map(|t| t.vertices()).collect()
    }

    /// Union of the vertex sets of all triangles.
    pub fn vertices(&self) -> BTreeSet<PointId> {
        self.triangles.iter().flat_map(|t| t.vertices()).collect()
    }

    /// Every edge with the number of triangles containing it.
    pub fn edges(&self) -> BTreeMap<Edge, usize> {
        let mut counts = BTreeMap::new();
        for t in &self.triangles {
            for i in Idx3::all() {
                let (a, b) = t.edge_opposite(i);
                *counts.entry(Edge { lo: a.min(b), hi: a.max(b) }).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Edges that belong to exactly one triangle.
    pub fn boundary_edges(&self) -> BTreeSet<Edge> {
        self.edges().into_iter().filter(|&(_, n)| n == 1).map(|(e, _)| e).collect()
    }

    /// Boundary edges, directed along their triangle's orientation.
    pub fn directed_boundary(&self) -> Vec<DirectedBoundaryEdge> {
        let counts = self.edges();
        let mut out = Vec::new();
        for t in &self.triangles {
            for i in Idx3::all() {
                let (from, to) = t.edge_opposite(i);
                let e = Edge { lo: from.min(to), hi: from.max(to) };
                if counts[&e] == 1 {
                    out.push(DirectedBoundaryEdge { from, to, opposite: t.vertex(i) });
                }
            }
        }
        out
    }

    /// The vertex opposite to boundary edge `e` in its unique triangle.
    fn boundary_opposite(&self, e: &Edge) -> Result<PointId> {
        let mut found = None;
        for t in self.triangles.iter().filter(|t| t.contains(e.lo) && t.contains(e.hi)) {
            if found.is_some() {
                return Err(Error::NotBoundary(*e));
            }
            found = t.vertices().into_iter().find(|v| !e.contains(*v));
        }
        found.ok_or(Error::NotBoundary(*e))
    }

    /// Whether boundary edge `e` separates its triangle's third vertex from
    /// the point `d`.
    pub fn edge_is_red(&self, table: &PointTable, e: &Edge, d: PointId) -> Result<bool> {
        self.edge_is_red_at(table, e, &table.point(d)?)
    }

    /// [`Triangulation::edge_is_red`] for an arbitrary query point.
    pub fn edge_is_red_at(&self, table: &PointTable, e: &Edge, d: &Point) -> Result<bool> {
        let c = self.boundary_opposite(e)?;
        separated(&table.point(e.lo)?, &table.point(e.hi)?, &table.point(c)?, d)
    }

    /// The triangle strictly containing `d`, by linear scan.
    pub fn find_containing(&self, table: &PointTable, d: &Point) -> Result<Option<OrientedTriangle>> {
        let mut found = None;
        for t in &self.triangles {
            if inside_triangle(&t.points(table)?, d)? {
                if found.is_some() {
                    return Err(Error::MultipleContainers(*d));
                }
                found = Some(*t);
            }
        }
        Ok(found)
    }

    /// Replaces `t` by the three triangles joining `d` to its edges.
    pub fn insert_inside(&self, table: &PointTable, t: &OrientedTriangle, d: PointId) -> Result<Triangulation> {
        let pd = table.point(d)?;
        if !self.triangles.contains(t) || !inside_triangle(&t.points(table)?, &pd)? {
            return Err(Error::PreconditionViolated(format!("point {d} is not inside triangle {t}")));
        }
        let mut triangles = self.triangles.clone();
        triangles.remove(t);
        for i in Idx3::all() {
            triangles.insert(OrientedTriangle::three_points([t.vertex(i), t.vertex(i.succ()), d], table)?);
        }
        Ok(Triangulation { triangles })
    }

    /// The red boundary edges with respect to `d`.
    pub fn red_boundary_edges(&self, table: &PointTable, d: &Point) -> Result<Vec<Edge>> {
        let mut red = Vec::new();
        for b in self.directed_boundary() {
            let (pa, pb, pc) = (table.point(b.from)?, table.point(b.to)?, table.point(b.opposite)?);
            if separated(&pa, &pb, &pc, d)? {
                red.push(Edge::new(b.from, b.to)?);
            }
        }
        red.sort();
        Ok(red)
    }

    /// Adds a triangle joining `d` to every red boundary edge.
    pub fn insert_outside(&self, table: &PointTable, d: PointId) -> Result<Triangulation> {
        let pd = table.point(d)?;
        if let Some(t) = self.find_containing(table, &pd)? {
            return Err(Error::PreconditionViolated(format!("point {d} is inside triangle {t}")));
        }
        self.fan(table, d, &pd).map(|(t, _)| t)
    }

    fn fan(&self, table: &PointTable, d: PointId, pd: &Point) -> Result<(Triangulation, Vec<Edge>)> {
        let red = self.red_boundary_edges(table, pd)?;
        if red.is_empty() {
            return Err(Error::NoRedEdge(d));
        }
        let mut triangles = self.triangles.clone();
        for e in &red {
            triangles.insert(OrientedTriangle::three_points([e.lo, e.hi, d], table)?);
        }
        Ok((Triangulation { triangles }, red))
    }

    /// One step of the algorithm: split the containing triangle if there is
    /// one, fan onto red edges otherwise.
    pub fn insert(&self, table: &PointTable, d: PointId) -> Result<(Triangulation, Insertion)> {
        let pd = table.point(d)?;
        match self.find_containing(table, &pd)? {
            Some(t) => Ok((self.insert_inside(table, &t, d)?, Insertion::Inside(t))),
            None => {
                let (next, red) = self.fan(table, d, &pd)?;
                Ok((next, Insertion::Outside(red)))
            }
        }
    }

    /// The first triangle, on the first three points of the table.
    pub fn seed(table: &PointTable) -> Result<Triangulation> {
        if table.len() < 3 {
            return Err(Error::TooFewPoints(table.len()));
        }
        let t = OrientedTriangle::three_points([PointId(0), PointId(1), PointId(2)], table)?;
        Ok(Triangulation::from_triangles([t]))
    }

    /// Triangulates the table, inserting points in input order.
    ///
    /// ```
    /// use naivetri::{PointTable, Triangulation};
    ///
    /// let square = PointTable::from_coords(&[(0, 0), (4, 0), (4, 4), (0, 4)]).unwrap();
    /// assert_eq!(Triangulation::triangulate(&square).unwrap().len(), 2);
    /// ```
    pub fn triangulate(table: &PointTable) -> Result<Triangulation> {
        let mut last = Triangulation::new();
        for step in Steps::new(table)? {
            last = step?.triangulation;
        }
        Ok(last)
    }
}

/// One state of the incremental construction.
#[derive(Clone, Debug)]
pub struct Step {
    /// Number of points inserted so far; ids `0..inserted` are in.
    pub inserted: usize,
    pub triangulation: Triangulation,
    /// `None` for the seed triangle.
    pub insertion: Option<Insertion>,
}

/// Iterator over every intermediate triangulation, starting with the seed.
pub struct Steps<'a> {
    table: &'a PointTable,
    current: Option<Triangulation>,
    next: usize,
    failed: bool,
}

impl<'a> Steps<'a> {
    pub fn new(table: &'a PointTable) -> Result<Self> {
        if table.len() < 3 {
            return Err(Error::TooFewPoints(table.len()));
        }
        Ok(Steps { table, current: None, next: 0, failed: false })
    }
}

impl Iterator for Steps<'_> {
    type Item = Result<Step>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.next >= self.table.len() {
            return None;
        }
        let result = match &self.current {
            None => Triangulation::seed(self.table).map(|t| (t, None, 3)),
            Some(t) => t.insert(self.table, PointId(self.next)).map(|(t, i)| (t, Some(i), self.next + 1)),
        };
        match result {
            Ok((triangulation, insertion, inserted)) => {
                self.current = Some(triangulation.clone());
                self.next = inserted;
                Some(Ok(Step { inserted, triangulation, insertion }))
            }
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{orientation_determinant, Orientation, orient};

    fn ids<const N: usize>(v: [usize; N]) -> [PointId; N] {
        v.map(PointId)
    }

    fn tri(table: &PointTable, v: [usize; 3]) -> OrientedTriangle {
        OrientedTriangle::three_points(ids(v), table).unwrap()
    }

    fn edge(a: usize, b: usize) -> Edge {
        Edge::new(PointId(a), PointId(b)).unwrap()
    }

    // (0,0), (1,1) and (5,5) are collinear, as are (0,0), (4,4) and (8,8).
    // No operation below looks at such a triple.
    fn triangle_table() -> PointTable {
        PointTable::unchecked(vec![(0, 0), (4, 0), (0, 4), (1, 1), (5, 5)])
    }

    fn square_table() -> PointTable {
        PointTable::unchecked(vec![(0, 0), (4, 0), (4, 4), (0, 4), (8, 2), (8, 8)])
    }

    fn square(table: &PointTable) -> Triangulation {
        Triangulation::from_triangles([tri(table, [0, 1, 2]), tri(table, [0, 2, 3])])
    }

    #[test]
    fn edge_rejects_loops() {
        assert!(Edge::new(PointId(3), PointId(3)).is_err());
        assert_eq!(edge(4, 1).endpoints(), (PointId(1), PointId(4)));
    }

    #[test]
    fn edge_counts() {
        let table = square_table();
        assert!(Triangulation::new().edges().is_empty());
        let one = Triangulation::from_triangles([tri(&table, [0, 1, 2])]);
        assert_eq!(one.edges().values().copied().collect::<Vec<_>>(), vec![1, 1, 1]);
        let two = square(&table);
        let counts = two.edges();
        assert_eq!(counts.len(), 5);
        assert_eq!(counts[&edge(0, 2)], 2);
        assert_eq!(counts.values().filter(|&&n| n == 1).count(), 4);
    }

    #[test]
    fn boundary_of_square_excludes_diagonal() {
        let table = square_table();
        let expected: BTreeSet<_> = [edge(0, 1), edge(1, 2), edge(2, 3), edge(0, 3)].into();
        assert_eq!(square(&table).boundary_edges(), expected);
    }

    #[test]
    fn inside_insertion_keeps_boundary() {
        let table = triangle_table();
        let t = Triangulation::seed(&table).unwrap();
        let split = t.insert_inside(&table, &tri(&table, [0, 1, 2]), PointId(3)).unwrap();
        assert_eq!(split.len(), 3);
        assert_eq!(split.boundary_edges(), t.boundary_edges());
        assert_eq!(split.iter().filter(|t| t.contains(PointId(3))).count(), 3);
        let expected: BTreeSet<_> =
            [tri(&table, [0, 1, 3]), tri(&table, [1, 2, 3]), tri(&table, [2, 0, 3])].into();
        assert_eq!(split.iter().copied().collect::<BTreeSet<_>>(), expected);
        // Doubled areas 4 + 8 + 4 = 16, the seed's doubled area.
        let areas: Vec<i128> = split
            .iter()
            .map(|t| {
                let [a, b, c] = t.points(&table).unwrap();
                orientation_determinant(&a, &b, &c)
            })
            .collect();
        assert_eq!(areas.iter().sum::<i128>(), 16);
        assert_eq!(
            {
                let mut a = areas.clone();
                a.sort();
                a
            },
            vec![4, 4, 8]
        );
    }

    #[test]
    fn inside_insertion_precondition() {
        let table = triangle_table();
        let t = Triangulation::seed(&table).unwrap();
        assert!(matches!(
            t.insert_inside(&table, &tri(&table, [0, 1, 2]), PointId(4)),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn edge_colors_against_triangle() {
        let table = triangle_table();
        let t = Triangulation::seed(&table).unwrap();
        assert!(t.edge_is_red(&table, &edge(1, 2), PointId(4)).unwrap());
        assert!(!t.edge_is_red(&table, &edge(0, 1), PointId(4)).unwrap());
        for e in t.boundary_edges() {
            assert!(!t.edge_is_red(&table, &e, PointId(3)).unwrap());
        }
        let split = t.insert_inside(&table, &tri(&table, [0, 1, 2]), PointId(3)).unwrap();
        assert_eq!(split.edge_is_red(&table, &edge(0, 3), PointId(4)), Err(Error::NotBoundary(edge(0, 3))));
        assert_eq!(split.edge_is_red(&table, &edge(3, 4), PointId(4)), Err(Error::NotBoundary(edge(3, 4))));
    }

    #[test]
    fn find_containing_examples() {
        let table = triangle_table();
        let t = Triangulation::seed(&table).unwrap();
        assert_eq!(t.find_containing(&table, &Point::new(1, 1).unwrap()).unwrap(), Some(tri(&table, [0, 1, 2])));
        assert_eq!(t.find_containing(&table, &Point::new(5, 5).unwrap()).unwrap(), None);
        assert_eq!(Triangulation::new().find_containing(&table, &Point::new(1, 1).unwrap()).unwrap(), None);
    }

    #[test]
    fn find_containing_detects_overlap() {
        let table = PointTable::from_coords(&[(0, 0), (8, 0), (0, 8), (1, 1), (9, 1), (1, 9), (3, 2)]).unwrap();
        let broken = Triangulation::from_triangles([tri(&table, [0, 1, 2]), tri(&table, [3, 4, 5])]);
        let d = table.point(PointId(6)).unwrap();
        assert!(inside_triangle(&[table.points()[0], table.points()[1], table.points()[2]], &d).unwrap());
        assert_eq!(broken.find_containing(&table, &d), Err(Error::MultipleContainers(d)));
    }

    #[test]
    fn outside_insertion_examples() {
        let table = triangle_table();
        let t = Triangulation::seed(&table).unwrap();
        let grown = t.insert_outside(&table, PointId(4)).unwrap();
        assert_eq!(grown.len(), 2);
        let new = tri(&table, [1, 4, 2]);
        assert_eq!(new.vertices(), ids([1, 4, 2]));
        let [a, b, c] = new.points(&table).unwrap();
        assert_eq!(orientation_determinant(&a, &b, &c), 24);
        assert!(grown.contains(&new));

        let table = square_table();
        let sq = square(&table);
        assert_eq!(sq.insert_outside(&table, PointId(4)).unwrap().len(), 3);
        assert_eq!(sq.red_boundary_edges(&table, &table.points()[4]).unwrap(), vec![edge(1, 2)]);
        assert_eq!(sq.insert_outside(&table, PointId(5)).unwrap().len(), 4);
        assert_eq!(sq.red_boundary_edges(&table, &table.points()[5]).unwrap(), vec![edge(1, 2), edge(2, 3)]);
    }

    #[test]
    fn outside_insertion_rejects_inside_points() {
        let table = triangle_table();
        let t = Triangulation::seed(&table).unwrap();
        assert!(matches!(t.insert_outside(&table, PointId(3)), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn no_red_edge_is_internal() {
        let table = triangle_table();
        // An empty triangulation has no boundary; the fan has nowhere to go.
        let err = Triangulation::new().insert_outside(&table, PointId(4)).unwrap_err();
        assert_eq!(err, Error::NoRedEdge(PointId(4)));
        assert!(err.is_internal());
    }

    #[test]
    fn triangulate_examples() {
        let three = PointTable::from_coords(&[(0, 0), (4, 0), (0, 4)]).unwrap();
        assert_eq!(Triangulation::triangulate(&three).unwrap().len(), 1);
        let square = PointTable::from_coords(&[(0, 0), (4, 0), (4, 4), (0, 4)]).unwrap();
        let t = Triangulation::triangulate(&square).unwrap();
        assert_eq!(t.len(), 2 * 4 - 4 - 2);
        assert_eq!(t.index_triples(), vec![ids([0, 1, 2]), ids([0, 2, 3])]);
        let split = PointTable::from_coords(&[(0, 0), (4, 0), (0, 4), (1, 1)]).unwrap();
        assert_eq!(Triangulation::triangulate(&split).unwrap().len(), 3);
    }

    #[test]
    fn steps_report_each_insertion() {
        let table = triangle_table();
        let steps: Vec<Step> = Steps::new(&table).unwrap().collect::<Result<_>>().unwrap();
        assert_eq!(steps.iter().map(|s| s.inserted).collect::<Vec<_>>(), vec![3, 4, 5]);
        assert_eq!(steps.iter().map(|s| s.triangulation.len()).collect::<Vec<_>>(), vec![1, 3, 4]);
        assert!(matches!(steps[1].insertion, Some(Insertion::Inside(_))));
        assert_eq!(steps[2].insertion, Some(Insertion::Outside(vec![edge(1, 2)])));
    }

    #[test]
    fn every_triangle_is_ccw() {
        let table = PointTable::from_coords(&[(3, 1), (9, 2), (4, 8), (0, 5), (6, 4), (12, 9), (-2, -3)]).unwrap();
        let t = Triangulation::triangulate(&table).unwrap();
        for tr in t.iter() {
            for i in Idx3::all() {
                let (a, b, c) = (
                    table.point(tr.vertex(i)).unwrap(),
                    table.point(tr.vertex(i.succ())).unwrap(),
                    table.point(tr.vertex(i.pred())).unwrap(),
                );
                assert_eq!(orient(&a, &b, &c), Orientation::CounterClockwise);
            }
        }
        assert_eq!(t.vertices().len(), table.len());
    }
}
