//! Oriented triangles indexed by the cyclic group of order three.
//!
//! A triangle stores three [`PointId`]s. Whatever index `i` we start from,
//! `(t[i], t[i + 1], t[i - 1])` turns counterclockwise; the arithmetic on
//! indices lives in [`Idx3`] so there is no such thing as vertex 18.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::predicates::{orient, Orientation, Point};
use crate::table::PointTable;

/// Index of a point in a [`PointTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId(pub usize);

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of ℤ/3ℤ. The three elements are written `0`, `1` and `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Idx3(u8);

impl Idx3 {
    pub const ZERO: Idx3 = Idx3(0);
    pub const ONE: Idx3 = Idx3(1);
    pub const MINUS_ONE: Idx3 = Idx3(2);

    /// The residue class of `i`.
    pub const fn new(i: i64) -> Idx3 {
        Idx3(i.rem_euclid(3) as u8)
    }

    /// `0, 1, -1`, in that order.
    pub const fn all() -> [Idx3; 3] {
        [Idx3::ZERO, Idx3::ONE, Idx3::MINUS_ONE]
    }

    /// Representative in `0..3`.
    pub const fn value(self) -> usize {
        self.0 as usize
    }

    pub fn succ(self) -> Idx3 {
        self + Idx3::ONE
    }

    pub fn pred(self) -> Idx3 {
        self - Idx3::ONE
    }
}

impl Add for Idx3 {
    type Output = Idx3;

    fn add(self, rhs: Idx3) -> Idx3 {
        Idx3((self.0 + rhs.0) % 3)
    }
}

impl Neg for Idx3 {
    type Output = Idx3;

    fn neg(self) -> Idx3 {
        Idx3((3 - self.0) % 3)
    }
}

impl Sub for Idx3 {
    type Output = Idx3;

    fn sub(self, rhs: Idx3) -> Idx3 {
        self + -rhs
    }
}

impl From<i64> for Idx3 {
    fn from(i: i64) -> Idx3 {
        Idx3::new(i)
    }
}

/// A counterclockwise triangle over a point table, stored with its smallest
/// id at index `0`.
///
/// Two triangles over the same three points compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedTriangle {
    vertices: [PointId; 3],
}

impl OrientedTriangle {
    /// Orients an arbitrary 3-point set.
    ///
    /// ```
    /// use naivetri::{OrientedTriangle, PointId, PointTable, Idx3, orient, Orientation};
    ///
    /// let table = PointTable::from_coords(&[(0, 0), (0, 4), (4, 0)]).unwrap();
    /// let t = OrientedTriangle::three_points([PointId(2), PointId(1), PointId(0)], &table).unwrap();
    /// assert_eq!(t.vertices(), [PointId(0), PointId(2), PointId(1)]);
    /// let [a, b, c] = t.points(&table).unwrap();
    /// assert_eq!(orient(&a, &b, &c), Orientation::CounterClockwise);
    /// ```
    pub fn three_points(
        ids: impl IntoIterator<Item = PointId>,
        table: &PointTable,
    ) -> Result<OrientedTriangle> {
        let set: BTreeSet<PointId> = ids.into_iter().collect();
        if set.len() != 3 {
            return Err(Error::WrongCardinality(set.len()));
        }
        let mut ids = set.into_iter();
        let (a, b, c) = (ids.next().unwrap(), ids.next().unwrap(), ids.next().unwrap());
        let (pa, pb, pc) = (table.point(a)?, table.point(b)?, table.point(c)?);
        match orient(&pa, &pb, &pc) {
            Orientation::CounterClockwise => Ok(OrientedTriangle { vertices: [a, b, c] }),
            Orientation::Clockwise => Ok(OrientedTriangle { vertices: [a, c, b] }),
            Orientation::Collinear => Err(Error::DegenerateInput(pa, pb, pc)),
        }
    }

    /// `t_i`.
    #[inline]
    pub fn vertex(&self, i: Idx3) -> PointId {
        self.vertices[i.value()]
    }

    /// `[t_0, t_1, t_{-1}]`.
    pub fn vertices(&self) -> [PointId; 3] {
        self.vertices
    }

    pub fn vertex_set(&self) -> BTreeSet<PointId> {
        self.vertices.into_iter().collect()
    }

    pub fn contains(&self, id: PointId) -> bool {
        self.vertices.contains(&id)
    }

    /// The index of `id` in this triangle, if it is a vertex.
    pub fn index_of(&self, id: PointId) -> Option<Idx3> {
        self.vertices.iter().position(|&v| v == id).map(|i| Idx3::new(i as i64))
    }

    /// `(t_{i+1}, t_{i-1})`, the edge that does not contain `t_i`.
    pub fn edge_opposite(&self, i: Idx3) -> (PointId, PointId) {
        (self.vertex(i.succ()), self.vertex(i.pred()))
    }

    /// The coordinates of `[t_0, t_1, t_{-1}]`.
    pub fn points(&self, table: &PointTable) -> Result<[Point; 3]> {
        Ok([
            table.point(self.vertices[0])?,
            table.point(self.vertices[1])?,
            table.point(self.vertices[2])?,
        ])
    }
}

impl fmt::Display for OrientedTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        write!(f, "{a},{b},{c}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> PointTable {
        PointTable::from_coords(&[(0, 0), (4, 0), (0, 4), (1, 2), (3, 9)]).unwrap()
    }

    fn ids(v: &[usize]) -> Vec<PointId> {
        v.iter().map(|&i| PointId(i)).collect()
    }

    #[test]
    fn group_laws() {
        for i in Idx3::all() {
            assert_eq!(i + Idx3::new(3), i);
            assert_eq!(i + -i, Idx3::ZERO);
            assert_eq!(i.succ().pred(), i);
        }
        assert_eq!(Idx3::ZERO - Idx3::ONE, Idx3::new(2));
        assert_eq!(Idx3::ZERO - Idx3::ONE, Idx3::MINUS_ONE);
        assert_eq!(Idx3::new(-1), Idx3::MINUS_ONE);
        assert_eq!(Idx3::new(18), Idx3::ZERO);
    }

    #[test]
    fn three_points_orients() {
        let table = table();
        let t = OrientedTriangle::three_points(ids(&[0, 1, 2]), &table).unwrap();
        assert_eq!(t.vertex_set(), ids(&[0, 1, 2]).into_iter().collect());
        for i in Idx3::all() {
            let [a, b, c] = [t.vertex(i), t.vertex(i.succ()), t.vertex(i.pred())]
                .map(|id| table.point(id).unwrap());
            assert_eq!(orient(&a, &b, &c), Orientation::CounterClockwise);
        }
        assert_eq!(OrientedTriangle::three_points(ids(&[2, 1, 0]), &table).unwrap(), t);
    }

    #[test]
    fn three_points_errors() {
        let line = PointTable::unchecked(vec![(0, 0), (1, 1), (2, 2)]);
        assert!(matches!(
            OrientedTriangle::three_points(ids(&[0, 1, 2]), &line),
            Err(Error::DegenerateInput(..))
        ));
        let table = table();
        assert_eq!(
            OrientedTriangle::three_points(ids(&[0, 1]), &table),
            Err(Error::WrongCardinality(2))
        );
        assert_eq!(
            OrientedTriangle::three_points(ids(&[0, 1, 1]), &table),
            Err(Error::WrongCardinality(2))
        );
        assert_eq!(
            OrientedTriangle::three_points(ids(&[0, 1, 2, 3]), &table),
            Err(Error::WrongCardinality(4))
        );
        assert_eq!(
            OrientedTriangle::three_points(ids(&[0, 1, 7]), &table),
            Err(Error::UnknownPoint(PointId(7)))
        );
        let cw = PointTable::from_coords(&[(0, 0), (1, 2), (2, 1)]).unwrap();
        let t = OrientedTriangle::three_points(ids(&[0, 1, 2]), &cw).unwrap();
        assert_eq!(t.vertices(), [PointId(0), PointId(2), PointId(1)]);
    }

    #[test]
    fn vertex_wraps_around() {
        let t = OrientedTriangle::three_points(ids(&[3, 1, 4]), &table()).unwrap();
        assert_eq!(t.vertex(Idx3::ZERO + Idx3::new(3)), t.vertex(Idx3::ZERO));
        assert_eq!(t.vertex(Idx3::ZERO - Idx3::ONE), t.vertex(Idx3::new(2)));
        let all: BTreeSet<_> = Idx3::all().into_iter().map(|i| t.vertex(i)).collect();
        assert_eq!(all.len(), 3);
        assert_eq!(t.vertex(Idx3::ZERO), PointId(1));
    }

    #[test]
    fn edge_opposite_covers_all_edges() {
        let table = table();
        let t = OrientedTriangle::three_points(ids(&[0, 1, 2]), &table).unwrap();
        assert_eq!(t.edge_opposite(Idx3::ZERO), (PointId(1), PointId(2)));
        let mut edges = BTreeSet::new();
        for i in Idx3::all() {
            let (a, b) = t.edge_opposite(i);
            assert!(a != t.vertex(i) && b != t.vertex(i));
            edges.insert((a.min(b), a.max(b)));
            let (pa, pb, pc) =
                (table.point(a).unwrap(), table.point(b).unwrap(), table.point(t.vertex(i)).unwrap());
            assert_eq!(orient(&pa, &pb, &pc), Orientation::CounterClockwise);
            // Reversed edge with the opposite vertex is clockwise.
            assert_eq!(orient(&pb, &pa, &pc), Orientation::Clockwise);
        }
        assert_eq!(edges.len(), 3);
    }
}
