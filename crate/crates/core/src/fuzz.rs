//! Randomized and exhaustive checks of the orientation axioms.
//!
//! Random instances rarely satisfy the premises of axioms 4 and 5, so each
//! trial draws five points and then looks for an ordering of them that does.
//! A trial where no ordering works counts as vacuous.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::generate::generate_points;
use crate::predicates::{
    axiom1, axiom2, axiom3, axiom4, axiom5, axiom5_pivot_b, check_left_of_segment_lemma, orient, Implication,
    Orientation, Point, RationalPoint,
};
use crate::verifier::MAX_SAMPLE_WEIGHT;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyCounts {
    pub name: &'static str,
    /// Instances whose premises held.
    pub tested: u64,
    pub vacuous: u64,
    pub violated: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub trials: u64,
    pub properties: Vec<PropertyCounts>,
}

impl FuzzReport {
    pub fn violations(&self) -> u64 {
        self.properties.iter().map(|p| p.violated).sum()
    }

    pub fn get(&self, name: &str) -> Option<&PropertyCounts> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let _ = writeln!(out, "{:<22} {:>10} {:>10} {:>10}", "property", "tested", "vacuous", "violated");
        for p in &self.properties {
            let _ = writeln!(out, "{:<22} {:>10} {:>10} {:>10}", p.name, p.tested, p.vacuous, p.violated);
        }
        let _ = write!(out, "trials: {}  violations: {}", self.trials, self.violations());
        f.write_str(&out)
    }
}

const NAMES: [&str; 8] = [
    "axiom1",
    "axiom2",
    "axiom3",
    "axiom4",
    "axiom5",
    "axiom5_pivot_b",
    "axiom5_relabelled",
    "left_of_segment_lemma",
];

fn empty_counts() -> Vec<PropertyCounts> {
    NAMES.iter().map(|&name| PropertyCounts { name, ..Default::default() }).collect()
}

/// All orderings of `0..5`, lexicographic.
fn permutations5() -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(120);
    for a in 0..5 {
        for b in (0..5).filter(|&b| b != a) {
            for c in (0..5).filter(|&c| c != a && c != b) {
                for d in (0..5).filter(|&d| d != a && d != b && d != c) {
                    let e = 10 - a - b - c - d;
                    out.push([a, b, c, d, e]);
                }
            }
        }
    }
    out
}

/// Records the first ordering whose premises hold.
fn record(counts: &mut PropertyCounts, perms: &[[usize; 5]], eval: impl Fn(&[usize; 5]) -> Result<Implication>) {
    for perm in perms {
        let imp = eval(perm).expect("tuple is in general position");
        if !imp.is_vacuous() {
            counts.tested += 1;
            if !imp.holds() {
                counts.violated += 1;
            }
            return;
        }
    }
    counts.vacuous += 1;
}

fn ccw(a: &Point, b: &Point, c: &Point) -> bool {
    orient(a, b, c) == Orientation::CounterClockwise
}

/// Evaluates every property on one tuple of 5 points in general position.
fn evaluate_tuple(p: &[Point], perms: &[[usize; 5]], counts: &mut [PropertyCounts], mode: usize, rng: &mut ChaCha8Rng) {
    record(&mut counts[0], perms, |q| axiom1(&p[q[0]], &p[q[1]], &p[q[2]]));
    record(&mut counts[1], perms, |q| axiom2(&p[q[0]], &p[q[1]], &p[q[2]]));
    record(&mut counts[2], perms, |q| axiom3(&p[q[0]], &p[q[1]], &p[q[2]]));
    record(&mut counts[3], perms, |q| axiom4(&p[q[0]], &p[q[1]], &p[q[2]], &p[q[3]]));
    record(&mut counts[4], perms, |q| axiom5(&p[q[0]], &p[q[1]], &p[q[2]], &p[q[3]], &p[q[4]]));
    record(&mut counts[5], perms, |q| axiom5_pivot_b(&p[q[0]], &p[q[1]], &p[q[2]], &p[q[3]], &p[q[4]]));
    // bac ∧ bad ∧ bae ∧ bcd ∧ bde ⇒ bce, axiom 5 with `a` and `b` swapped.
    record(&mut counts[6], perms, |q| axiom5(&p[q[1]], &p[q[0]], &p[q[2]], &p[q[3]], &p[q[4]]));

    // Lemma: the triangle shares nothing, `a`, `b`, or both with [a, b].
    let lemma = &mut counts[7];
    for q in perms {
        let (a, b) = (p[q[0]], p[q[1]]);
        let t = match mode % 4 {
            0 => [p[q[2]], p[q[3]], p[q[4]]],
            1 => [a, p[q[2]], p[q[3]]],
            2 => [b, p[q[2]], p[q[3]]],
            _ => [a, b, p[q[2]]],
        };
        if !t.iter().filter(|v| **v != a && **v != b).all(|v| ccw(&a, &b, v)) {
            continue;
        }
        let weights: [u32; 3] = std::array::from_fn(|_| rng.random_range(1..=MAX_SAMPLE_WEIGHT));
        let f = RationalPoint::convex_combination(&t, &weights);
        lemma.tested += 1;
        if !check_left_of_segment_lemma(&a, &b, &t, &f).expect("preconditions were checked") {
            lemma.violated += 1;
        }
        return;
    }
    lemma.vacuous += 1;
}

/// Runs `trials` random 5-point tuples with coordinates in `[-bound, bound]`.
///
/// ```
/// let report = naivetri::fuzz_axioms(200, 1, 50).unwrap();
/// assert_eq!(report.violations(), 0);
/// assert_eq!(report.get("axiom3").unwrap().tested, 200);
/// ```
pub fn fuzz_axioms(trials: u64, seed: u64, bound: i64) -> Result<FuzzReport> {
    let mut counts = empty_counts();
    let perms = permutations5();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let p = generate_points(5, rng.random(), bound)?;
        evaluate_tuple(&p, &perms, &mut counts, trial as usize, &mut rng);
    }
    Ok(FuzzReport { trials, properties: counts })
}

/// Every ordered 5-tuple of distinct points of `[0, max]²` in general
/// position, checked against axioms 4 and 5 and the pivot-b form. Each
/// ordering is one instance; nothing is permuted.
pub fn exhaust_grid(max: i64) -> Result<FuzzReport> {
    let grid: Vec<Point> = (0..=max).flat_map(|x| (0..=max).map(move |y| (x, y))).map(Point::try_from).collect::<Result<_>>()?;
    let n = grid.len();
    let mut counts = vec![
        PropertyCounts { name: "axiom4", ..Default::default() },
        PropertyCounts { name: "axiom5", ..Default::default() },
        PropertyCounts { name: "axiom5_pivot_b", ..Default::default() },
    ];
    let tally = |c: &mut PropertyCounts, imp: Implication| {
        if imp.is_vacuous() {
            c.vacuous += 1;
        } else {
            c.tested += 1;
            if !imp.holds() {
                c.violated += 1;
            }
        }
    };
    let collinear = |a: usize, b: usize, c: usize| orient(&grid[a], &grid[b], &grid[c]) == Orientation::Collinear;
    let mut tuples = 0u64;
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a) {
            for c in (0..n).filter(|&c| c != a && c != b && !collinear(a, b, c)) {
                for d in (0..n).filter(|&d| ![a, b, c].contains(&d)) {
                    if collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d) {
                        continue;
                    }
                    for e in (0..n).filter(|&e| ![a, b, c, d].contains(&e)) {
                        let prior = [a, b, c, d];
                        let bad = (0..4).any(|i| (i + 1..4).any(|j| collinear(prior[i], prior[j], e)));
                        if bad {
                            continue;
                        }
                        tuples += 1;
                        let (pa, pb, pc, pd, pe) = (&grid[a], &grid[b], &grid[c], &grid[d], &grid[e]);
                        tally(&mut counts[0], axiom4(pa, pb, pc, pd)?);
                        tally(&mut counts[1], axiom5(pa, pb, pc, pd, pe)?);
                        tally(&mut counts[2], axiom5_pivot_b(pa, pb, pc, pd, pe)?);
                    }
                }
            }
        }
    }
    Ok(FuzzReport { trials: tuples, properties: counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_distinct() {
        let perms = permutations5();
        assert_eq!(perms.len(), 120);
        let set: std::collections::BTreeSet<_> = perms.iter().collect();
        assert_eq!(set.len(), 120);
        assert!(perms.iter().all(|p| { let mut s = *p; s.sort(); s == [0, 1, 2, 3, 4] }));
        assert_eq!(perms[0], [0, 1, 2, 3, 4]);
    }

    #[test]
    fn zero_trials() {
        let r = fuzz_axioms(0, 0, 1000).unwrap();
        assert_eq!(r.violations(), 0);
        assert!(r.properties.iter().all(|p| p.tested == 0 && p.vacuous == 0));
    }

    #[test]
    fn premises_are_found() {
        let r = fuzz_axioms(500, 42, 1000).unwrap();
        assert_eq!(r.violations(), 0);
        for p in &r.properties {
            assert_eq!(p.tested + p.vacuous, 500, "{}", p.name);
            assert!(p.tested > 0, "{} never tested", p.name);
        }
        // Every set of 5 points has a hull edge with the rest on one side.
        assert_eq!(r.get("axiom5").unwrap().vacuous, 0);
    }

    #[test]
    fn tiny_bound() {
        let r = fuzz_axioms(300, 3, 2).unwrap();
        assert_eq!(r.violations(), 0);
    }

    #[test]
    fn deterministic() {
        assert_eq!(fuzz_axioms(100, 9, 100).unwrap(), fuzz_axioms(100, 9, 100).unwrap());
    }

    #[test]
    fn grid_2x2_has_no_five_points() {
        let r = exhaust_grid(1).unwrap();
        assert_eq!(r.trials, 0);
    }

    #[test]
    fn grid_3x3() {
        let r = exhaust_grid(2).unwrap();
        assert!(r.trials > 0);
        assert_eq!(r.violations(), 0);
        assert!(r.properties.iter().all(|p| p.tested > 0));
    }

    #[test]
    fn report_text() {
        let r = fuzz_axioms(10, 0, 100).unwrap();
        let text = r.to_string();
        assert!(text.lines().next().unwrap().starts_with("property"));
        assert!(text.ends_with("trials: 10  violations: 0"));
        assert_eq!(text.lines().count(), NAMES.len() + 2);
    }
}
