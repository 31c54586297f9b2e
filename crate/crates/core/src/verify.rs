//! Built-in verification suites, runnable from the command line.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::circle::{
    distinct_triangles_circle, nearest_integer_n2_over_12, partitions3, regular_ngon, CircleConfig,
};
use crate::congruence::distinct_triangles;
use crate::error::{Error, Result};
use crate::geometry::{collinear, int, orientation, rat, squared_distance, Point, Rational};
use crate::ground::{build_ground_set, GroundKind};
use crate::quad::{case_bound, classify_quad, QuadTag};
use crate::search::{
    max_points_with_exactly, min_triangles, regular_polygon_evidence, seven_points_evidence,
    SearchOptions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Lemma,
    Theorem1,
    Theorem2,
    Conjectures,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "lemma" => Ok(Suite::Lemma),
            "theorem1" => Ok(Suite::Theorem1),
            "theorem2" => Ok(Suite::Theorem2),
            "conjectures" => Ok(Suite::Conjectures),
            other => Err(Error::InvalidParameter(format!(
                "unknown suite {other:?}; expected lemma, theorem1, theorem2 or conjectures"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Lemma => "lemma",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Conjectures => "conjectures",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub jobs: usize,
    pub quad_samples: usize,
    pub parallelogram_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            jobs: 1,
            quad_samples: 10_000,
            parallelogram_samples: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn equal<T: PartialEq + fmt::Debug>(name: impl Into<String>, got: T, want: T) -> Self {
        let passed = got == want;
        Check::new(name, passed, format!("got {got:?}, expected {want:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub passed: bool,
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let checks = match suite {
        Suite::Lemma => lemma_checks(opts)?,
        Suite::Theorem1 => theorem1_checks(opts)?,
        Suite::Theorem2 => theorem2_checks()?,
        Suite::Conjectures => conjecture_checks(opts)?,
    };
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        suite,
        checks,
        passed,
    })
}

fn pts(c: &[(i64, i64)]) -> Vec<Point> {
    c.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
}

fn search_opts(opts: &VerifyOptions) -> SearchOptions {
    SearchOptions {
        jobs: opts.jobs,
        ..SearchOptions::default()
    }
}

/// A coordinate that is an integer half of the time and a small fraction
/// otherwise.
fn random_coord(rng: &mut ChaCha8Rng) -> Rational {
    if rng.gen_bool(0.5) {
        int(rng.gen_range(-3..=3))
    } else {
        rat(rng.gen_range(-12..=12), rng.gen_range(1..=4))
    }
}

pub fn random_point(rng: &mut ChaCha8Rng) -> Point {
    Point::new(random_coord(rng), random_coord(rng))
}

/// Four distinct random points, not all collinear.
pub fn random_quad(rng: &mut ChaCha8Rng) -> Vec<Point> {
    loop {
        let q: Vec<Point> = (0..4).map(|_| random_point(rng)).collect();
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| q[i] != q[j]));
        let all_collinear = collinear(&q[0], &q[1], &q[2]) && collinear(&q[0], &q[1], &q[3]);
        if distinct && !all_collinear {
            return q;
        }
    }
}

/// The tags whose defining property holds, decided without the classifier:
/// interior points by orientation, the hull cycle by trying all three
/// quadrilaterals on the four points.
pub fn applicable_tags(q: &[Point]) -> Vec<QuadTag> {
    let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
    let three_collinear = triples
        .iter()
        .any(|&(a, b, c)| collinear(&q[a], &q[b], &q[c]));
    let interior = (0..4).any(|p| {
        let o: Vec<usize> = (0..4).filter(|&i| i != p).collect();
        let s = [
            orientation(&q[o[0]], &q[o[1]], &q[p]),
            orientation(&q[o[1]], &q[o[2]], &q[p]),
            orientation(&q[o[2]], &q[o[0]], &q[p]),
        ];
        s[0] == s[1] && s[1] == s[2]
    });

    let mut tags = Vec::new();
    if interior && !three_collinear {
        tags.push(QuadTag::NotConvex);
    }
    if three_collinear {
        tags.push(QuadTag::ThreeCollinear);
    }
    if interior || three_collinear {
        return tags;
    }

    let cycle = [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]]
        .into_iter()
        .find(|c| {
            let o: Vec<_> = (0..4)
                .map(|k| orientation(&q[c[k]], &q[c[(k + 1) % 4]], &q[c[(k + 2) % 4]]))
                .collect();
            o.iter().all(|x| *x == o[0])
        })
        .expect("a convex quadrilateral has a convex cycle");
    let s: Vec<_> = (0..4)
        .map(|k| squared_distance(&q[cycle[k]], &q[cycle[(k + 1) % 4]]))
        .collect();
    let (a, b, c, d) = (&s[0], &s[1], &s[2], &s[3]);
    let pairs_equal = [a == b, a == c, a == d, b == c, b == d, c == d];
    let eq_count = pairs_equal.iter().filter(|&&e| e).count();

    if eq_count == 0 {
        tags.push(QuadTag::AllSidesDistinct);
    }
    if eq_count == 1 && (a == b || b == c || c == d || d == a) {
        tags.push(QuadTag::OnePairAdjacent);
    }
    if eq_count == 1 && (a == c || b == d) {
        tags.push(QuadTag::OnePairOpposite);
    }
    if eq_count == 2 && ((a == b && c == d) || (b == c && d == a)) {
        tags.push(QuadTag::Kite);
    }
    if eq_count == 2 && a == c && b == d {
        tags.push(QuadTag::Parallelogram);
    }
    if eq_count == 3 {
        tags.push(QuadTag::ThreeSidesCongruent);
    }
    if eq_count == 6 {
        tags.push(QuadTag::Rhombus);
    }
    tags
}

/// A named configuration and its expected class count.
type Witness = (&'static str, &'static [(i64, i64)], usize);

fn lemma_checks(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut exclusive_fail = None;
    let mut bound_fail = None;
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..opts.quad_samples {
        let q = random_quad(&mut rng);
        let case = classify_quad(&q)?;
        seen.insert(case.tag.name());
        let tags = applicable_tags(&q);
        if exclusive_fail.is_none() && tags != [case.tag] {
            exclusive_fail = Some(format!("{q:?}: classifier {case}, predicates {tags:?}"));
        }
        let count = distinct_triangles(&q)?.count();
        let bound = case_bound(case).min_distinct_triangles;
        if bound_fail.is_none() && count < bound {
            bound_fail = Some(format!("{q:?}: {case} count {count} < bound {bound}"));
        }
    }
    let n = opts.quad_samples;
    let mut checks = vec![
        Check::new(
            "random quadruples get exactly one case",
            exclusive_fail.is_none(),
            exclusive_fail.unwrap_or_else(|| format!("{n} samples, tags seen: {seen:?}")),
        ),
        Check::new(
            "random quadruples respect their bound",
            bound_fail.is_none(),
            bound_fail.unwrap_or_else(|| format!("{n} samples")),
        ),
    ];

    let tight: [Witness; 7] = [
        ("rectangle", &[(0, 0), (3, 0), (3, 1), (0, 1)], 1),
        ("square", &[(0, 0), (1, 0), (1, 1), (0, 1)], 1),
        ("parallelogram", &[(0, 0), (3, 0), (4, 2), (1, 2)], 2),
        ("rhombus", &[(0, 0), (2, 1), (4, 0), (2, -1)], 2),
        ("kite", &[(0, 0), (2, 0), (3, 3), (0, 2)], 3),
        ("isosceles trapezoid", &[(0, 0), (4, 0), (3, 2), (1, 2)], 2),
        ("three collinear", &[(0, 0), (1, 0), (2, 0), (0, 1)], 3),
    ];
    for (name, c, want) in tight {
        let q = pts(c);
        let case = classify_quad(&q)?;
        let count = distinct_triangles(&q)?.count();
        let bound = case_bound(case).min_distinct_triangles;
        checks.push(Check::new(
            format!("{name} count"),
            count == want && count >= bound,
            format!("{case}: count {count}, expected {want}, bound {bound}"),
        ));
    }
    Ok(checks)
}

/// A random parallelogram with no right angle.
pub fn random_parallelogram(rng: &mut ChaCha8Rng) -> Vec<Point> {
    loop {
        let o = random_point(rng);
        let u = random_point(rng);
        let v = random_point(rng);
        if u.cross(&v).is_zero() || u.dot(&v).is_zero() {
            continue;
        }
        let a = &o + &u;
        let c = &o + &v;
        let b = &a + &v;
        return vec![o, a, b, c];
    }
}

fn theorem1_checks(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let so = search_opts(opts);
    let mut checks = Vec::new();

    let square = pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
    checks.push(Check::equal(
        "unit square count",
        distinct_triangles(&square)?.count(),
        1,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let mut bad = None;
    for _ in 0..opts.parallelogram_samples {
        let p = random_parallelogram(&mut rng);
        let c = distinct_triangles(&p)?.count();
        if c != 2 && bad.is_none() {
            bad = Some(format!("{p:?} has {c}"));
        }
    }
    checks.push(Check::new(
        "non-rectangle parallelograms count 2",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} samples", opts.parallelogram_samples)),
    ));

    let pentagon = regular_ngon(5)?;
    checks.push(Check::equal(
        "regular pentagon count",
        distinct_triangles_circle(&pentagon)?.count(),
        2,
    ));
    let circle_sq = CircleConfig::new(vec![int(0), rat(1, 4), rat(1, 2), rat(3, 4)], true)?;
    let planar_sq = pts(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]);
    let c1 = distinct_triangles_circle(&circle_sq)?.count();
    let c2 = distinct_triangles(&planar_sq)?.count();
    checks.push(Check::equal("square with center, circle form", c1, 2));
    checks.push(Check::equal("square with center, planar form", c2, 2));

    let grid5 = build_ground_set(GroundKind::RationalGrid { k: 5 })?;
    let row = max_points_with_exactly(&grid5, 1, &so)?;
    // the scan covers every subset size, so max_n < 5 rules out 5 points
    checks.push(Check::new(
        "no 5 grid points with exactly one class",
        row.exhaustive && row.max_n.is_some_and(|m| m < 5),
        format!(
            "largest subset of RationalGrid(k=5) with one class: {:?}",
            row.max_n
        ),
    ));
    let rect_witness = row.witnesses.first().is_some_and(|w| {
        let p = grid5.planar_points(w).unwrap_or_default();
        p.len() == 4
            && classify_quad(&p).is_ok_and(|c| c.is_rectangle)
            && distinct_triangles(&p).is_ok_and(|s| s.count() == 1)
    });
    checks.push(Check::new(
        "F(1) over RationalGrid(k=5)",
        row.exhaustive && row.max_n == Some(4) && rect_witness,
        format!(
            "max_n {:?}, witness {:?}",
            row.max_n,
            row.witnesses.first().map(|w| grid5.labels(w))
        ),
    ));

    let d20 = build_ground_set(GroundKind::CircleDivisions {
        d: 20,
        with_center: true,
    })?;
    let r = min_triangles(&d20, 6, &so)?;
    checks.push(Check::new(
        "no 6 sites of CircleDivisions(D=20, center) with two classes",
        r.exhaustive && r.best_count.is_some_and(|b| b >= 3),
        format!("minimum: {:?}", r.best_count),
    ));
    let row = max_points_with_exactly(&d20, 2, &so)?;
    checks.push(Check::new(
        "F(2) over CircleDivisions(D=20, center)",
        row.exhaustive && row.max_n == Some(5),
        format!("max_n {:?}, witnesses {}", row.max_n, row.witnesses.len()),
    ));
    let d10 = build_ground_set(GroundKind::CircleDivisions {
        d: 10,
        with_center: false,
    })?;
    let r = min_triangles(&d10, 5, &so)?;
    checks.push(Check::new(
        "pentagon is optimal in CircleDivisions(D=10)",
        r.best_count == Some(2)
            && r.witnesses
                .iter()
                .any(|w| d10.equivalent(w, &[0, 2, 4, 6, 8], false)),
        format!("minimum {:?}", r.best_count),
    ));
    Ok(checks)
}

fn theorem2_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut mismatch = None;
    let mut gap_fail = None;
    for n in 3..=2000u64 {
        let p = partitions3(n)?.count() as u64;
        if p != nearest_integer_n2_over_12(n) && mismatch.is_none() {
            mismatch = Some(format!("n={n}: {p} partitions"));
        }
        let gap = (Rational::from_integer(p.into()) - rat((n * n) as i64, 12)).abs();
        if gap > rat(3, 4) && gap_fail.is_none() {
            gap_fail = Some(format!("n={n}: gap {gap}"));
        }
    }
    checks.push(Check::new(
        "partition count is the nearest integer to n^2/12, n in 3..=2000",
        mismatch.is_none(),
        mismatch.unwrap_or_default(),
    ));
    checks.push(Check::new(
        "partition count within 3/4 of n^2/12, n in 3..=2000",
        gap_fail.is_none(),
        gap_fail.unwrap_or_default(),
    ));

    let mut bad = None;
    for n in 3..=120usize {
        let c = distinct_triangles_circle(&regular_ngon(n)?)?.count() as u64;
        let p = partitions3(n as u64)?.count() as u64;
        if c != p && bad.is_none() {
            bad = Some(format!("n={n}: {c} classes, {p} partitions"));
        }
    }
    checks.push(Check::new(
        "regular n-gon classes equal partitions, n in 3..=120",
        bad.is_none(),
        bad.unwrap_or_default(),
    ));
    Ok(checks)
}

fn conjecture_checks(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let so = search_opts(opts);
    let mut checks = Vec::new();
    let seven = seven_points_evidence(
        &[
            GroundKind::CircleDivisions {
                d: 14,
                with_center: false,
            },
            GroundKind::EisensteinBall { r: 2 },
            GroundKind::RationalGrid { k: 3 },
        ],
        &so,
    )?;
    for row in &seven.rows {
        checks.push(Check::new(
            format!("seven points over {}", row.ground),
            row.holds && row.exhaustive,
            format!("minimum {:?}, need 4; {}", row.min_found, seven.qualifier),
        ));
    }

    let mut grounds: Vec<GroundKind> = (4..=8)
        .map(|n| GroundKind::CircleDivisions {
            d: 2 * n,
            with_center: false,
        })
        .collect();
    grounds.push(GroundKind::EisensteinBall { r: 3 });
    for g in grounds {
        let ns: Vec<usize> = match g {
            GroundKind::CircleDivisions { d, .. } => vec![d / 2],
            _ => (4..=8).collect(),
        };
        let rep = regular_polygon_evidence(&[g], &ns, &so)?;
        for row in &rep.rows {
            checks.push(Check::new(
                format!("regular polygon optimal, {} n={}", row.ground, row.n),
                row.holds && row.exhaustive && row.ngon_attains != Some(false),
                format!(
                    "minimum {:?}, need {}, n-gon attains {:?}; {}",
                    row.min_found, row.required, row.ngon_attains, rep.qualifier
                ),
            ));
        }
    }
    Ok(checks)
}
