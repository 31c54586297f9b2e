//! Triangle congruence classes and whole-configuration congruence.
//!
//! Two noncollinear triples are congruent exactly when their sorted squared
//! side lengths agree (SSS), so a class is identified by that sorted triple.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    collinear, ensure_distinct, format_rational, squared_distance, Point, QLength, Rational,
};

/// Sorted squared side lengths of a noncollinear triangle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleSignature {
    sides: [QLength; 3],
}

impl TriangleSignature {
    /// Builds a signature from three squared lengths in any order. Returns
    /// `None` unless they describe a nondegenerate triangle.
    pub fn from_sides(a: QLength, b: QLength, c: QLength) -> Option<Self> {
        let mut sides = [a, b, c];
        sides.sort();
        let sig = TriangleSignature { sides };
        sig.satisfies_triangle_inequality().then_some(sig)
    }

    pub fn sides(&self) -> &[QLength; 3] {
        &self.sides
    }

    /// Strict triangle inequality on the square roots, decided exactly:
    /// for `a <= b <= c`, `sqrt(c) < sqrt(a) + sqrt(b)` iff `c <= a + b` or
    /// `(c - a - b)^2 < 4ab`.
    pub fn satisfies_triangle_inequality(&self) -> bool {
        let [a, b, c] = &self.sides;
        let (a, b, c) = (a.value(), b.value(), c.value());
        if a.is_zero() {
            return false;
        }
        let excess = c - a - b;
        if !excess.is_positive() {
            return true;
        }
        let four = Rational::from_integer(4.into());
        &excess * &excess < four * a * b
    }

    /// Signature after scaling every length by `s`; `s_squared` is `s^2`.
    pub fn scaled(&self, s_squared: &Rational) -> TriangleSignature {
        let [a, b, c] = &self.sides;
        TriangleSignature {
            sides: [
                QLength::new(a.value() * s_squared),
                QLength::new(b.value() * s_squared),
                QLength::new(c.value() * s_squared),
            ],
        }
    }
}

impl fmt::Debug for TriangleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.sides[0], self.sides[1], self.sides[2]
        )
    }
}

impl fmt::Display for TriangleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Triangle {
    Proper(TriangleSignature),
    Collinear,
}

impl Triangle {
    pub fn signature(self) -> Option<TriangleSignature> {
        match self {
            Triangle::Proper(s) => Some(s),
            Triangle::Collinear => None,
        }
    }
}

pub fn triangle_signature(a: &Point, b: &Point, c: &Point) -> Result<Triangle> {
    ensure_distinct(&[a.clone(), b.clone(), c.clone()])?;
    if collinear(a, b, c) {
        return Ok(Triangle::Collinear);
    }
    let sig = TriangleSignature::from_sides(
        squared_distance(a, b),
        squared_distance(a, c),
        squared_distance(b, c),
    )
    .expect("noncollinear triple violates the triangle inequality");
    Ok(Triangle::Proper(sig))
}

/// The set of distinct triangles determined by a point set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriangleClassSet {
    classes: BTreeSet<TriangleSignature>,
}

impl TriangleClassSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns true when the class was not present yet.
    pub fn insert(&mut self, sig: TriangleSignature) -> bool {
        self.classes.insert(sig)
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> impl Iterator<Item = &TriangleSignature> {
        self.classes.iter()
    }

    pub fn contains(&self, sig: &TriangleSignature) -> bool {
        self.classes.contains(sig)
    }
}

pub fn distinct_triangles(points: &[Point]) -> Result<TriangleClassSet> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            got: points.len(),
        });
    }
    ensure_distinct(points)?;
    let n = points.len();
    let mut d2 = vec![vec![QLength::new(Rational::zero()); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = squared_distance(&points[i], &points[j]);
            d2[j][i] = d.clone();
            d2[i][j] = d;
        }
    }
    let mut set = TriangleClassSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(&points[i], &points[j], &points[k]) {
                    continue;
                }
                let sig = TriangleSignature::from_sides(
                    d2[i][j].clone(),
                    d2[i][k].clone(),
                    d2[j][k].clone(),
                )
                .expect("noncollinear triple violates the triangle inequality");
                set.insert(sig);
            }
        }
    }
    Ok(set)
}

/// `x -> M x + t` with `M` a rational orthogonal matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalIsometry {
    matrix: [[Rational; 2]; 2],
    translation: Point,
}

impl RationalIsometry {
    pub fn new(matrix: [[Rational; 2]; 2], translation: Point) -> Result<Self> {
        let [[a, b], [c, d]] = &matrix;
        let one = Rational::one();
        // columns orthonormal
        let ok = a * a + c * c == one && b * b + d * d == one && (a * b + c * d).is_zero();
        if !ok {
            return Err(Error::NotOrthogonal);
        }
        Ok(RationalIsometry {
            matrix,
            translation,
        })
    }

    pub fn identity() -> Self {
        let (z, o) = (Rational::zero(), Rational::one());
        RationalIsometry {
            matrix: [[o.clone(), z.clone()], [z.clone(), o]],
            translation: Point::new(z.clone(), z),
        }
    }

    pub fn translation(t: Point) -> Self {
        RationalIsometry {
            translation: t,
            ..Self::identity()
        }
    }

    /// Rotation by the angle with `cos = (p^2 - q^2)/(p^2 + q^2)` and
    /// `sin = 2pq/(p^2 + q^2)`, optionally preceded by the reflection
    /// `(x, y) -> (x, -y)`, then translated.
    pub fn from_pythagorean(p: i64, q: i64, reflect: bool, translation: Point) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidParameter(
                "pythagorean parameters are both zero".into(),
            ));
        }
        let (p, q) = (
            Rational::from_integer(p.into()),
            Rational::from_integer(q.into()),
        );
        let h = &p * &p + &q * &q;
        let cos = (&p * &p - &q * &q) / &h;
        let two = Rational::from_integer(2.into());
        let sin = two * &p * &q / &h;
        let matrix = if reflect {
            [[cos.clone(), sin.clone()], [sin, -cos]]
        } else {
            [[cos.clone(), -sin.clone()], [sin, cos]]
        };
        Self::new(matrix, translation)
    }

    pub fn reflect_x_axis() -> Self {
        let (z, o) = (Rational::zero(), Rational::one());
        RationalIsometry {
            matrix: [[o.clone(), z.clone()], [z.clone(), -o]],
            translation: Point::new(z.clone(), z),
        }
    }

    pub fn determinant(&self) -> Rational {
        let [[a, b], [c, d]] = &self.matrix;
        a * d - b * c
    }

    pub fn apply(&self, p: &Point) -> Point {
        let [[a, b], [c, d]] = &self.matrix;
        Point::new(
            a * &p.x + b * &p.y + &self.translation.x,
            c * &p.x + d * &p.y + &self.translation.y,
        )
    }
}

pub fn apply_isometry(points: &[Point], iso: &RationalIsometry) -> Vec<Point> {
    points.iter().map(|p| iso.apply(p)).collect()
}

/// True iff some isometry (reflections included) maps `p` onto `q`.
pub fn configurations_congruent(p: &[Point], q: &[Point]) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch(p.len(), q.len()));
    }
    ensure_distinct(p)?;
    ensure_distinct(q)?;
    if p.len() <= 1 {
        return Ok(true);
    }
    let target: HashSet<&Point> = q.iter().collect();
    let (p1, p2) = (&p[0], &p[1]);
    let u = p2 - p1;
    let d = u.dot(&u);
    let u_reflected = Point::new(u.x.clone(), -u.y.clone());

    for (i, q1) in q.iter().enumerate() {
        for (j, q2) in q.iter().enumerate() {
            if i == j {
                continue;
            }
            let v = q2 - q1;
            if v.dot(&v) != d {
                continue;
            }
            for reflect in [false, true] {
                let src = if reflect { &u_reflected } else { &u };
                let cos = src.dot(&v) / &d;
                let sin = src.cross(&v) / &d;
                let matrix = if reflect {
                    // rotation after (x, y) -> (x, -y)
                    [[cos.clone(), sin.clone()], [sin.clone(), -cos.clone()]]
                } else {
                    [[cos.clone(), -sin.clone()], [sin.clone(), cos.clone()]]
                };
                let origin = Point::new(Rational::zero(), Rational::zero());
                let partial = RationalIsometry {
                    matrix,
                    translation: origin,
                };
                let moved = partial.apply(p1);
                let iso = RationalIsometry {
                    translation: q1 - &moved,
                    ..partial
                };
                if p.iter().all(|pt| target.contains(&iso.apply(pt))) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// True iff `q` is congruent to a uniformly scaled copy of `p`.
///
/// Scale factors may be irrational (a unit square and its 45 degree rotated
/// double), so this compares pairwise squared distances up to one common
/// ratio rather than constructing the map.
pub fn configurations_similar(p: &[Point], q: &[Point]) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch(p.len(), q.len()));
    }
    ensure_distinct(p)?;
    ensure_distinct(q)?;
    let dp = distance_matrix(p);
    let dq = distance_matrix(q);
    Ok(metric_match(&dp, &dq, true))
}

fn distance_matrix(pts: &[Point]) -> Vec<Vec<Rational>> {
    pts.iter()
        .map(|a| {
            pts.iter()
                .map(|b| squared_distance(a, b).into_inner())
                .collect()
        })
        .collect()
}

/// Searches for a bijection `s` with `b[s(i)][s(j)] = lambda * a[i][j]` for
/// all pairs, where `lambda = 1` unless `scaled`. Planar point sets with such
/// a bijection are congruent (similar when scaled), so this decides
/// congruence for any exact length representation that is a genuine
/// squared metric.
pub fn metric_match<T>(a: &[Vec<T>], b: &[Vec<T>], scaled: bool) -> bool
where
    T: Clone + PartialEq + std::ops::Mul<Output = T>,
{
    let n = a.len();
    if n != b.len() {
        return false;
    }
    if n <= 1 {
        return true;
    }
    // lambda = b_ref / a_ref is represented by the pair (a_ref, b_ref); the
    // test b[x][y] * a_ref == a[i][j] * b_ref avoids division.
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut ratio: Option<(T, T)> = None;
    fn rec<T: Clone + PartialEq + std::ops::Mul<Output = T>>(
        i: usize,
        a: &[Vec<T>],
        b: &[Vec<T>],
        scaled: bool,
        assign: &mut [usize],
        used: &mut [bool],
        ratio: &mut Option<(T, T)>,
    ) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let set_ratio_here = scaled && ratio.is_none() && i >= 1;
            if set_ratio_here {
                *ratio = Some((a[0][i].clone(), b[assign[0]][cand].clone()));
            }
            let ok = (0..i).all(|j| {
                let (x, y) = (a[j][i].clone(), b[assign[j]][cand].clone());
                match (scaled, ratio.as_ref()) {
                    (true, Some((ra, rb))) => y * ra.clone() == x * rb.clone(),
                    _ => x == y,
                }
            });
            if ok {
                assign[i] = cand;
                used[cand] = true;
                if rec(i + 1, a, b, scaled, assign, used, ratio) {
                    return true;
                }
                used[cand] = false;
                assign[i] = usize::MAX;
            }
            if set_ratio_here {
                *ratio = None;
            }
        }
        false
    }
    rec(0, a, b, scaled, &mut assign, &mut used, &mut ratio)
}

/// Multiplies every coordinate by `s`.
pub fn scale_points(points: &[Point], s: &Rational) -> Vec<Point> {
    points.iter().map(|p| p.scale(s)).collect()
}

/// Smallest common denominator of all coordinates; scaling by it yields
/// integer points.
pub fn common_denominator(points: &[Point]) -> num_bigint::BigInt {
    points.iter().fold(num_bigint::BigInt::one(), |acc, p| {
        acc.lcm(p.x.denom()).lcm(p.y.denom())
    })
}

pub fn describe_signature(sig: &TriangleSignature) -> [String; 3] {
    let [a, b, c] = sig.sides();
    [
        format_rational(a.value()),
        format_rational(b.value()),
        format_rational(c.value()),
    ]
}
