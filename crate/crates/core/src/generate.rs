//! Random point sets in general position.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::predicates::{Point, COORD_BOUND};
use crate::table::line_direction;

/// Candidates rejected before giving up.
pub const REJECTION_BUDGET: u64 = 1_000_000;

/// `n` points with coordinates in `[-bound, bound]`, pairwise distinct and
/// with no three collinear. Candidates are drawn uniformly and rejected if
/// they repeat a point or line up with any existing pair. The same
/// `(n, seed, bound)` always gives the same points.
///
/// A grid column holds at most two points of such a set, so requests for
/// more than `2 * (2 * bound + 1)` points fail straight away.
///
/// ```
/// use naivetri::{generate_points, PointTable};
///
/// let pts = generate_points(20, 7, 1000).unwrap();
/// assert!(PointTable::new(pts).is_ok());
/// ```
pub fn generate_points(n: usize, seed: u64, bound: i64) -> Result<Vec<Point>> {
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    if !(0..=COORD_BOUND).contains(&bound) {
        return Err(Error::CoordinateOutOfRange { x: bound, y: bound });
    }
    let width = 2 * bound as u128 + 1;
    if n as u128 > 2 * width {
        return Err(Error::GenerationExhausted(format!(
            "{n} points cannot avoid collinear triples in a {width}×{width} grid"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut seen: HashSet<Point> = HashSet::with_capacity(n);
    // directions[i]: reduced directions from points[i] to every later point.
    let mut directions: Vec<HashSet<(i64, i64)>> = Vec::with_capacity(n);
    let mut rejected = 0u64;
    while points.len() < n {
        let c = Point::new(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound))?;
        let bad = seen.contains(&c)
            || points.iter().zip(&directions).any(|(a, dirs)| dirs.contains(&line_direction(a, &c)));
        if bad {
            rejected += 1;
            if rejected >= REJECTION_BUDGET {
                return Err(Error::GenerationExhausted(format!(
                    "placed {} of {n} points before {REJECTION_BUDGET} rejections",
                    points.len()
                )));
            }
            continue;
        }
        for (a, dirs) in points.iter().zip(directions.iter_mut()) {
            dirs.insert(line_direction(a, &c));
        }
        points.push(c);
        seen.insert(c);
        directions.push(HashSet::new());
    }
    Ok(points)
}
