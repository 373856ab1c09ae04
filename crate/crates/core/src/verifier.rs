//! Executable correctness checks for triangulations.
//!
//! Each check returns a [`CheckResult`] instead of failing fast, so a report
//! lists every property that holds and every one that does not. The checks
//! that decide geometry on their own (non-overlap, area conservation, hull
//! equality, coverage, boundary colors) work on raw index triples and the
//! gift-wrapping hull; they never call into the construction code they are
//! checking.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hull::{color_changes, hull_oracle, EdgeColor, HullLoop};
use crate::predicates::{
    inside_or_on_triangle_rational, orient, orient_rational, orientation_determinant, Orientation, Point,
    RationalPoint, COORD_BOUND,
};
use crate::table::PointTable;
use crate::triangle::{OrientedTriangle, PointId};
use crate::triangulation::{Insertion, Steps, Triangulation};

/// Index triple as it appears in a document; not necessarily valid.
pub type RawTriangle = [PointId; 3];

/// Upper bound for the integer weights of sampled convex combinations.
pub const MAX_SAMPLE_WEIGHT: u32 = 97;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult { name, status: Status::Pass, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult { name, status: Status::Fail, detail: detail.into() }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult { name, status: Status::Skipped, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// No check failed. Skipped checks do not count against the report.
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| !c.failed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.failed())
    }

    /// Aligned table for people.
    pub fn render_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{:<width$}  {:<7}  {}", c.name, c.status.to_string(), c.detail);
        }
        let _ = writeln!(out, "overall: {}", if self.overall() { "PASS" } else { "FAIL" });
        out
    }

    /// One tab-separated `name, status, detail` line per check.
    pub fn render_summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}\t{}\t{}", c.name, c.status, c.detail);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Random interior points for the coverage and hull-blue checks; `0`
    /// skips both.
    pub samples: usize,
    pub seed: u64,
    /// External query points for the red-run check.
    pub red_run_queries: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { samples: 1000, seed: 0, red_run_queries: 8 }
    }
}

fn coords(table: &PointTable, t: &RawTriangle) -> std::result::Result<[Point; 3], String> {
    let get = |id: PointId| table.get(id).copied().ok_or_else(|| format!("triangle {} uses unknown point {id}", show(t)));
    Ok([get(t[0])?, get(t[1])?, get(t[2])?])
}

fn show(t: &RawTriangle) -> String {
    format!("[{}, {}, {}]", t[0], t[1], t[2])
}

/// Every triangle has three pairwise-distinct vertices.
pub fn check_sizes(triangles: &[RawTriangle]) -> CheckResult {
    const NAME: &str = "sizes";
    match triangles.iter().find(|t| t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
        Some(t) => CheckResult::fail(NAME, format!("triangle {} has a repeated vertex", show(t))),
        None => CheckResult::pass(NAME, format!("{} triangles, all 3-sets", triangles.len())),
    }
}

/// The union of the triangles' vertex sets is exactly the table.
pub fn check_vertex_union(triangles: &[RawTriangle], table: &PointTable) -> CheckResult {
    const NAME: &str = "vertex_union";
    let used: BTreeSet<PointId> = triangles.iter().flatten().copied().collect();
    if let Some(extra) = used.iter().find(|id| id.0 >= table.len()) {
        return CheckResult::fail(NAME, format!("point {extra} is not in the input"));
    }
    let missing: Vec<String> = table.ids().filter(|id| !used.contains(id)).map(|id| id.to_string()).collect();
    if missing.is_empty() {
        CheckResult::pass(NAME, format!("all {} points used", table.len()))
    } else {
        CheckResult::fail(NAME, format!("missing points: {}", missing.join(", ")))
    }
}

fn strictly_inside(t: &[Point; 3], o: Orientation, p: &Point) -> bool {
    (0..3).all(|i| orient(&t[i], &t[(i + 1) % 3], p) == o)
}

fn properly_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    [o1, o2, o3, o4].iter().all(|&o| o != Orientation::Collinear) && o1 != o2 && o3 != o4
}

/// Decides whether the interiors of two non-degenerate triangles meet.
fn overlap(ta: &RawTriangle, pa: &[Point; 3], oa: Orientation, tb: &RawTriangle, pb: &[Point; 3], ob: Orientation) -> Option<String> {
    let shared = ta.iter().filter(|v| tb.contains(v)).count();
    if shared == 3 {
        return Some(format!("triangle {} appears twice", show(ta)));
    }
    for k in 0..3 {
        if !ta.contains(&tb[k]) && strictly_inside(pa, oa, &pb[k]) {
            return Some(format!("vertex {} of {} is inside {}", tb[k], show(tb), show(ta)));
        }
        if !tb.contains(&ta[k]) && strictly_inside(pb, ob, &pa[k]) {
            return Some(format!("vertex {} of {} is inside {}", ta[k], show(ta), show(tb)));
        }
    }
    for i in 0..3 {
        let (ea, eb) = ((ta[i], ta[(i + 1) % 3]), (pa[i], pa[(i + 1) % 3]));
        for j in 0..3 {
            let (fa, fb) = ((tb[j], tb[(j + 1) % 3]), (pb[j], pb[(j + 1) % 3]));
            if ea.0 == fa.0 || ea.0 == fa.1 || ea.1 == fa.0 || ea.1 == fa.1 {
                continue;
            }
            if properly_cross(&eb.0, &eb.1, &fb.0, &fb.1) {
                return Some(format!(
                    "edge ({}, {}) of {} crosses edge ({}, {}) of {}",
                    ea.0,
                    ea.1,
                    show(ta),
                    fa.0,
                    fa.1,
                    show(tb)
                ));
            }
        }
    }
    None
}

/// No two triangles have intersecting interiors. Brute force over pairs
/// whose bounding boxes overlap.
pub fn check_no_overlap(triangles: &[RawTriangle], table: &PointTable) -> CheckResult {
    const NAME: &str = "no_overlap";
    let mut resolved = Vec::with_capacity(triangles.len());
    for t in triangles {
        let p = match coords(table, t) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, e),
        };
        let o = orient(&p[0], &p[1], &p[2]);
        if o == Orientation::Collinear {
            return CheckResult::fail(NAME, format!("triangle {} is degenerate", show(t)));
        }
        let min = (p.iter().map(Point::x).min().unwrap(), p.iter().map(Point::y).min().unwrap());
        let max = (p.iter().map(Point::x).max().unwrap(), p.iter().map(Point::y).max().unwrap());
        resolved.push((t, p, o, min, max));
    }
    resolved.sort_by_key(|r| r.3 .0);
    let mut pairs = 0usize;
    for (i, a) in resolved.iter().enumerate() {
        for b in resolved[i + 1..].iter().take_while(|b| b.3 .0 < a.4 .0) {
            if b.3 .1 >= a.4 .1 || a.3 .1 >= b.4 .1 {
                continue;
            }
            pairs += 1;
            if let Some(why) = overlap(a.0, &a.1, a.2, b.0, &b.1, b.2) {
                return CheckResult::fail(NAME, why);
            }
        }
    }
    CheckResult::pass(NAME, format!("{} triangles, {pairs} candidate pairs disjoint", triangles.len()))
}

/// Twice the area of a simple polygon given in order.
fn doubled_polygon_area(polygon: &[Point]) -> i128 {
    let n = polygon.len();
    let sum: i128 = (0..n)
        .map(|i| {
            let (p, q) = (&polygon[i], &polygon[(i + 1) % n]);
            i128::from(p.x()) * i128::from(q.y()) - i128::from(q.x()) * i128::from(p.y())
        })
        .sum();
    sum.abs()
}

/// The triangles' doubled areas add up to the doubled area of the convex
/// hull. Exact integers, zero tolerance.
pub fn check_area_conservation(triangles: &[RawTriangle], table: &PointTable) -> CheckResult {
    const NAME: &str = "area_conservation";
    let mut total: i128 = 0;
    for t in triangles {
        match coords(table, t) {
            Ok([a, b, c]) => total += orientation_determinant(&a, &b, &c).abs(),
            Err(e) => return CheckResult::fail(NAME, e),
        }
    }
    let hull = match hull_oracle(table) {
        Ok(h) => h,
        Err(e) => return CheckResult::fail(NAME, format!("hull oracle failed: {e}")),
    };
    let polygon: Vec<Point> = hull.vertices().iter().map(|&id| table.points()[id.0]).collect();
    let expected = doubled_polygon_area(&polygon);
    if total == expected {
        CheckResult::pass(NAME, format!("doubled area {total}"))
    } else {
        CheckResult::fail(NAME, format!("doubled triangle areas sum to {total}, hull has {expected}"))
    }
}

/// Random rational points strictly inside the convex hull: convex
/// combinations with weights in `1..=97` of the hull's fan triangles.
pub fn sample_interior_points(table: &PointTable, samples: usize, seed: u64) -> Result<Vec<RationalPoint>> {
    let hull = hull_oracle(table)?;
    let h: Vec<Point> = hull.vertices().iter().map(|&id| table.points()[id.0]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..samples)
        .map(|_| {
            let k = rng.random_range(1..h.len() - 1);
            let weights: [u32; 3] = std::array::from_fn(|_| rng.random_range(1..=MAX_SAMPLE_WEIGHT));
            RationalPoint::convex_combination(&[h[0], h[k], h[k + 1]], &weights)
        })
        .collect())
}

/// Every given point lies inside or on some triangle.
pub fn check_coverage_of(triangles: &[RawTriangle], table: &PointTable, points: &[RationalPoint]) -> CheckResult {
    const NAME: &str = "point_coverage";
    let mut resolved = Vec::with_capacity(triangles.len());
    for t in triangles {
        match coords(table, t) {
            Ok(p) => resolved.push(p),
            Err(e) => return CheckResult::fail(NAME, e),
        }
    }
    for q in points {
        if !resolved.iter().any(|t| inside_or_on_triangle_rational(t, q)) {
            return CheckResult::fail(NAME, format!("{q} is not covered by any triangle"));
        }
    }
    CheckResult::pass(NAME, format!("{} samples covered", points.len()))
}

/// Sampled form of "every point of the hull is in some triangle".
pub fn check_point_coverage(triangles: &[RawTriangle], table: &PointTable, samples: usize, seed: u64) -> CheckResult {
    if samples == 0 {
        return CheckResult::skipped("point_coverage", "no samples requested");
    }
    match sample_interior_points(table, samples, seed) {
        Ok(points) => check_coverage_of(triangles, table, &points),
        Err(e) => CheckResult::fail("point_coverage", format!("sampling failed: {e}")),
    }
}

/// Boundary edges of raw triangles with the opposite vertex, counted
/// independently of [`Triangulation::edges`].
fn raw_boundary(triangles: &[RawTriangle]) -> Vec<(PointId, PointId, PointId)> {
    let mut counts: BTreeMap<(PointId, PointId), (usize, PointId)> = BTreeMap::new();
    for t in triangles {
        for i in 0..3 {
            let (a, b, c) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            let entry = counts.entry((a.min(b), a.max(b))).or_insert((0, c));
            entry.0 += 1;
        }
    }
    counts.into_iter().filter(|(_, (n, _))| *n == 1).map(|((a, b), (_, c))| (a, b, c)).collect()
}

/// For every given point, every boundary edge is blue: the point and the
/// edge's opposite vertex are strictly on the same side.
pub fn check_hull_blue_of(triangles: &[RawTriangle], table: &PointTable, points: &[RationalPoint]) -> CheckResult {
    const NAME: &str = "hull_blue";
    let mut edges = Vec::new();
    for (a, b, c) in raw_boundary(triangles) {
        let (Some(pa), Some(pb), Some(pc)) = (table.get(a), table.get(b), table.get(c)) else {
            return CheckResult::fail(NAME, format!("boundary edge ({a}, {b}) uses an unknown point"));
        };
        edges.push((a, b, RationalPoint::from(*pa), RationalPoint::from(*pb), orient(pa, pb, pc)));
    }
    if edges.is_empty() {
        return CheckResult::fail(NAME, "no boundary edges");
    }
    for q in points {
        for (a, b, ra, rb, side) in &edges {
            if orient_rational(ra, rb, q) != *side || *side == Orientation::Collinear {
                return CheckResult::fail(NAME, format!("boundary edge ({a}, {b}) is red for {q}"));
            }
        }
    }
    CheckResult::pass(NAME, format!("{} samples × {} boundary edges blue", points.len(), edges.len()))
}

pub fn check_hull_blue(triangles: &[RawTriangle], table: &PointTable, samples: usize, seed: u64) -> CheckResult {
    if samples == 0 {
        return CheckResult::skipped("hull_blue", "no samples requested");
    }
    match sample_interior_points(table, samples, seed) {
        Ok(points) => check_hull_blue_of(triangles, table, &points),
        Err(e) => CheckResult::fail("hull_blue", format!("sampling failed: {e}")),
    }
}

/// `|T| = 2n - h - 2` with `h` from the gift-wrapping hull.
pub fn check_euler_count(triangles: &[RawTriangle], table: &PointTable) -> CheckResult {
    const NAME: &str = "euler_count";
    let h = match hull_oracle(table) {
        Ok(hull) => hull.len(),
        Err(e) => return CheckResult::fail(NAME, format!("hull oracle failed: {e}")),
    };
    let expected = 2 * table.len() - h - 2;
    if triangles.len() == expected {
        CheckResult::pass(NAME, format!("{} = 2·{} - {h} - 2", triangles.len(), table.len()))
    } else {
        CheckResult::fail(NAME, format!("{} triangles, expected 2·{} - {h} - 2 = {expected}", triangles.len(), table.len()))
    }
}

/// A claimed hull loop equals the gift-wrapping hull up to rotation.
pub fn check_hull_equality(claimed: Result<HullLoop>, table: &PointTable) -> CheckResult {
    const NAME: &str = "hull_equality";
    let claimed = match claimed {
        Ok(h) => h,
        Err(e) => return CheckResult::fail(NAME, format!("no hull loop: {e}")),
    };
    match hull_oracle(table) {
        Ok(oracle) if oracle.rotation_eq(&claimed) => CheckResult::pass(NAME, format!("{}-cycle", oracle.len())),
        Ok(oracle) => CheckResult::fail(
            NAME,
            format!("loop {:?} differs from gift wrapping {:?}", ids(claimed.vertices()), ids(oracle.vertices())),
        ),
        Err(e) => CheckResult::fail(NAME, format!("hull oracle failed: {e}")),
    }
}

fn ids(v: &[PointId]) -> Vec<usize> {
    v.iter().map(|id| id.0).collect()
}

/// Outcome of checking the red arc for one query point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RedRunOutcome {
    Inside(OrientedTriangle),
    Checked { changes: usize, red_run: usize, added: usize },
}

/// Classifies the hull of `t` against `d` and inserts `d` as a new point.
/// Fails with `DegenerateInput` when `d` is collinear with a hull edge and
/// `DuplicatePoint` when it is already in the table.
pub fn red_run_for(t: &Triangulation, table: &PointTable, d: Point) -> Result<RedRunOutcome> {
    let extended = table.with_query_point(d)?;
    let hull = HullLoop::from_triangulation(t, table)?;
    let colors = match hull.classify_edges(t, table, &d) {
        Err(Error::InsidePoint(tri)) => return Ok(RedRunOutcome::Inside(tri)),
        other => other?,
    };
    let changes = color_changes(&colors);
    let red_run = colors.iter().filter(|&&c| c == EdgeColor::Red).count();
    let added = t.insert_outside(&extended, PointId(table.len()))?.len() - t.len();
    Ok(RedRunOutcome::Checked { changes, red_run, added })
}

/// For each external query point: exactly two color changes, a red arc of
/// length at least one, purple points at its ends, and an outside insertion
/// that adds one triangle per red edge.
pub fn check_red_run(t: &Triangulation, table: &PointTable, queries: &[Point]) -> Result<CheckResult> {
    const NAME: &str = "red_run";
    if queries.is_empty() {
        return Ok(CheckResult::skipped(NAME, "no query points"));
    }
    let hull = HullLoop::from_triangulation(t, table);
    let mut inside = 0;
    let mut checked = 0;
    for &d in queries {
        match red_run_for(t, table, d) {
            Ok(RedRunOutcome::Inside(_)) => inside += 1,
            Ok(RedRunOutcome::Checked { changes, red_run, added }) => {
                if changes != 2 || red_run == 0 || added != red_run {
                    return Ok(CheckResult::fail(
                        NAME,
                        format!("query {d}: {changes} color changes, {red_run} red edges, {added} triangles added"),
                    ));
                }
                let hull = hull.as_ref().map_err(Clone::clone)?;
                if let Err(e) = hull.purple_points(t, table, &d) {
                    return Ok(CheckResult::fail(NAME, format!("query {d}: {e}")));
                }
                checked += 1;
            }
            Err(e @ (Error::DegenerateInput(..) | Error::CollinearTriple(_) | Error::DuplicatePoint { .. })) => {
                return Err(e)
            }
            Err(e) => return Ok(CheckResult::fail(NAME, format!("query {d}: {e}"))),
        }
    }
    if checked == 0 {
        return Ok(CheckResult::skipped(NAME, format!("all {inside} query points were inside")));
    }
    Ok(CheckResult::pass(NAME, format!("{checked} queries, {inside} inside skipped")))
}

/// Integer points strictly outside the hull that keep the table in general
/// position. May return fewer than `count` points if the box is crowded.
pub fn external_queries(table: &PointTable, count: usize, seed: u64) -> Result<Vec<Point>> {
    let hull = hull_oracle(table)?;
    let polygon: Vec<Point> = hull.vertices().iter().map(|&id| table.points()[id.0]).collect();
    let (min_x, max_x) = (table.points().iter().map(Point::x).min().unwrap(), table.points().iter().map(Point::x).max().unwrap());
    let (min_y, max_y) = (table.points().iter().map(Point::y).min().unwrap(), table.points().iter().map(Point::y).max().unwrap());
    let margin = (max_x - min_x).max(max_y - min_y) / 2 + 2;
    let lo_x = (min_x - margin).max(-COORD_BOUND);
    let hi_x = (max_x + margin).min(COORD_BOUND);
    let lo_y = (min_y - margin).max(-COORD_BOUND);
    let hi_y = (max_y + margin).min(COORD_BOUND);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count && tries < 10_000 * count.max(1) {
        tries += 1;
        let d = Point::new(rng.random_range(lo_x..=hi_x), rng.random_range(lo_y..=hi_y))?;
        let n = polygon.len();
        let inside = (0..n).all(|i| orient(&polygon[i], &polygon[(i + 1) % n], &d) == Orientation::CounterClockwise);
        if inside || out.contains(&d) || table.extended(d).is_err() {
            continue;
        }
        out.push(d);
    }
    Ok(out)
}

/// Runs every check on a triangulation of `table`.
pub fn verify_triangulation(t: &Triangulation, table: &PointTable, opts: &VerifyOptions) -> Result<VerificationReport> {
    let raw = t.index_triples();
    let samples = if opts.samples > 0 { sample_interior_points(table, opts.samples, opts.seed)? } else { Vec::new() };
    let mut checks = vec![
        check_sizes(&raw),
        check_vertex_union(&raw, table),
        check_no_overlap(&raw, table),
        check_area_conservation(&raw, table),
    ];
    if opts.samples > 0 {
        checks.push(check_coverage_of(&raw, table, &samples));
        checks.push(check_hull_blue_of(&raw, table, &samples));
    } else {
        checks.push(CheckResult::skipped("point_coverage", "no samples requested"));
        checks.push(CheckResult::skipped("hull_blue", "no samples requested"));
    }
    checks.push(check_euler_count(&raw, table));
    checks.push(check_hull_equality(HullLoop::from_triangulation(t, table), table));
    let queries = external_queries(table, opts.red_run_queries, opts.seed ^ 0x5eed_0f9e0)?;
    checks.push(check_red_run(t, table, &queries)?);
    Ok(VerificationReport { checks })
}

/// Triangulates `table` and runs every check on the result.
///
/// ```
/// use naivetri::{verify_all, PointTable, VerifyOptions};
///
/// let square = PointTable::from_coords(&[(0, 0), (4, 0), (4, 4), (0, 4)]).unwrap();
/// let report = verify_all(&square, &VerifyOptions { samples: 100, ..Default::default() }).unwrap();
/// assert!(report.overall());
/// ```
pub fn verify_all(table: &PointTable, opts: &VerifyOptions) -> Result<VerificationReport> {
    let t = Triangulation::triangulate(table)?;
    verify_triangulation(&t, table, opts)
}

/// Checks the effect of one insertion step on the triangle count and the
/// boundary.
fn check_step_law(before: &Triangulation, after: &Triangulation, insertion: &Insertion, d: PointId) -> CheckResult {
    const NAME: &str = "insertion_size_law";
    match insertion {
        Insertion::Inside(t) => {
            if after.len() != before.len() + 2 {
                CheckResult::fail(NAME, format!("inside split of {t} gave {} -> {} triangles", before.len(), after.len()))
            } else if after.boundary_edges() != before.boundary_edges() {
                CheckResult::fail(NAME, format!("inside split of {t} changed the boundary"))
            } else {
                CheckResult::pass(NAME, "inside: +2, boundary kept")
            }
        }
        Insertion::Outside(red) => {
            if red.is_empty() || after.len() != before.len() + red.len() {
                CheckResult::fail(NAME, format!("outside fan with {} red edges gave {} -> {} triangles", red.len(), before.len(), after.len()))
            } else if !after.boundary_edges().iter().any(|e| e.contains(d)) {
                CheckResult::fail(NAME, format!("point {d} is not on the new boundary"))
            } else {
                CheckResult::pass(NAME, format!("outside: +{}", red.len()))
            }
        }
    }
}

/// The loop-invariant form: every check after every insertion, on the
/// prefix of the table inserted so far. Results are folded per check; a
/// check fails if it fails at any step.
pub fn verify_steps(table: &PointTable, opts: &VerifyOptions) -> Result<VerificationReport> {
    let mut merged: Vec<(CheckResult, usize)> = Vec::new();
    let merge = |c: CheckResult, inserted: usize, merged: &mut Vec<(CheckResult, usize)>| {
        match merged.iter_mut().find(|(m, _)| m.name == c.name) {
            None => merged.push((c, 1)),
            Some((m, n)) => {
                *n += 1;
                if m.status != Status::Fail && c.status == Status::Fail {
                    *m = CheckResult::fail(c.name, format!("after {inserted} points: {}", c.detail));
                } else if m.status == Status::Skipped && c.status == Status::Pass {
                    *m = c;
                }
            }
        }
    };
    let mut previous: Option<Triangulation> = None;
    for (k, step) in Steps::new(table)?.enumerate() {
        let step = step?;
        let prefix = table.prefix(step.inserted)?;
        let step_opts = VerifyOptions { seed: opts.seed.wrapping_add(k as u64), ..*opts };
        let report = verify_triangulation(&step.triangulation, &prefix, &step_opts)?;
        for c in report.checks {
            let c = if c.status == Status::Fail {
                CheckResult::fail(c.name, format!("after {} points: {}", step.inserted, c.detail))
            } else {
                c
            };
            merge(c, step.inserted, &mut merged);
        }
        if let (Some(before), Some(insertion)) = (&previous, &step.insertion) {
            let law = check_step_law(before, &step.triangulation, insertion, PointId(step.inserted - 1));
            merge(law, step.inserted, &mut merged);
        }
        previous = Some(step.triangulation);
    }
    let checks = merged
        .into_iter()
        .map(|(c, n)| match c.status {
            Status::Fail => c,
            _ => CheckResult { detail: format!("{n} steps; last: {}", c.detail), ..c },
        })
        .collect();
    Ok(VerificationReport { checks })
}

/// Checks a triangle list and hull loop read back from a document. Unlike
/// [`verify_triangulation`] nothing here assumes the triangles are valid.
pub fn verify_mesh(
    table: &PointTable,
    triangles: &[RawTriangle],
    hull: &[PointId],
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let mut checks = vec![
        check_sizes(triangles),
        check_canonical_form(triangles, table),
        check_vertex_union(triangles, table),
        check_no_overlap(triangles, table),
        check_area_conservation(triangles, table),
        check_point_coverage(triangles, table, opts.samples, opts.seed),
        check_hull_blue(triangles, table, opts.samples, opts.seed),
        check_euler_count(triangles, table),
    ];
    let claimed = HullLoop::from_cycle(hull.to_vec());
    let as_loop = match &claimed {
        Ok(h) => h.vertices() == hull,
        Err(_) => false,
    };
    let mut hull_check = check_hull_equality(claimed, table);
    if hull_check.passed() && !as_loop {
        hull_check = CheckResult::fail(hull_check.name, "hull list does not start at its smallest index");
    }
    checks.push(hull_check);
    let oriented: Result<Vec<OrientedTriangle>> =
        triangles.iter().map(|t| OrientedTriangle::three_points(t.iter().copied(), table)).collect();
    match oriented {
        Ok(list) => {
            let t = Triangulation::from_triangles(list);
            checks.push(match HullLoop::from_triangulation(&t, table) {
                Ok(h) if hull == h.vertices() => CheckResult::pass("boundary_loop", format!("{}-cycle", h.len())),
                Ok(h) => CheckResult::fail("boundary_loop", format!("boundary loop is {:?}, document says {:?}", ids(h.vertices()), ids(hull))),
                Err(e) => CheckResult::fail("boundary_loop", e.to_string()),
            });
            let queries = external_queries(table, opts.red_run_queries, opts.seed ^ 0x5eed_0f9e0)?;
            checks.push(check_red_run(&t, table, &queries).unwrap_or_else(|e| CheckResult::fail("red_run", e.to_string())));
        }
        Err(e) => {
            checks.push(CheckResult::fail("boundary_loop", format!("not a set of triangles: {e}")));
            checks.push(CheckResult::fail("red_run", format!("not a set of triangles: {e}")));
        }
    }
    Ok(VerificationReport { checks })
}

/// Each triple is counterclockwise with its smallest index first and the
/// list is sorted without repeats.
pub fn check_canonical_form(triangles: &[RawTriangle], table: &PointTable) -> CheckResult {
    const NAME: &str = "canonical_form";
    for t in triangles {
        let p = match coords(table, t) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, e),
        };
        if t[0] > t[1] || t[0] > t[2] || orient(&p[0], &p[1], &p[2]) != Orientation::CounterClockwise {
            return CheckResult::fail(NAME, format!("triangle {} is not in canonical CCW form", show(t)));
        }
    }
    if triangles.windows(2).any(|w| w[0] >= w[1]) {
        return CheckResult::fail(NAME, "triangle list is not strictly sorted");
    }
    CheckResult::pass(NAME, "sorted, CCW, smallest index first")
}
