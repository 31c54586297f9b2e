//! Exact rational kernel: points, squared distances and sign-exact
//! predicates. Nothing in here ever rounds.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num / den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses an integer or `p/q` token. The denominator must be a positive
/// integer; the result is normalized.
pub fn parse_rational(token: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num = parse_signed(num).ok_or_else(|| format!("bad numerator in {token:?}"))?;
    let den = match den {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("bad denominator in {token:?}"));
            }
            let d = BigInt::from_str(d).map_err(|e| e.to_string())?;
            if d.is_zero() {
                return Err(format!("zero denominator in {token:?}"));
            }
            d
        }
    };
    Ok(Rational::new(num, den))
}

fn parse_signed(s: &str) -> Option<BigInt> {
    let digits = s
        .strip_prefix('-')
        .or_else(|| s.strip_prefix('+'))
        .unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).ok()
}

/// Canonical text form: bare integer or `p/q` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for drawing only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

impl<'a> Sub<&'a Point> for &'a Point {
    type Output = Point;
    fn sub(self, rhs: &'a Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Add<&'a Point> for &'a Point {
    type Output = Point;
    fn add(self, rhs: &'a Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Mul<&'a Rational> for &'a Point {
    type Output = Point;
    fn mul(self, rhs: &'a Rational) -> Point {
        self.scale(rhs)
    }
}

/// A squared length. Zero exactly when the two generating points coincide.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QLength(Rational);

impl QLength {
    /// Wraps a non-negative rational. Panics on negative input.
    pub fn new(value: Rational) -> Self {
        assert!(!value.is_negative(), "squared length must be non-negative");
        QLength(value)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Debug for QLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl fmt::Display for QLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

pub fn squared_distance(p: &Point, q: &Point) -> QLength {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    QLength(&dx * &dx + &dy * &dy)
}

/// Turn direction of the triple `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn from_sign<T: Signed>(v: &T) -> Self {
        if v.is_positive() {
            Orientation::CounterClockwise
        } else if v.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// Sign of `(b - a) x (c - a)`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    let ab = b - a;
    let ac = c - a;
    Orientation::from_sign(&ab.cross(&ac))
}

pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    orientation(a, b, c) == Orientation::Collinear
}

/// Rejects inputs containing the same point twice.
pub fn ensure_distinct(pts: &[Point]) -> Result<()> {
    let mut seen = std::collections::HashMap::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(Error::DuplicatePoint(j, i));
        }
        seen.insert(p, i);
    }
    Ok(())
}

/// Position report for four points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvexReport {
    /// All four points lie on the hull boundary. `cycle` lists input indices
    /// counter-clockwise starting at index 0. `degenerate` names a point
    /// sitting on a hull edge between two others (three collinear).
    Convex {
        cycle: [usize; 4],
        degenerate: Option<usize>,
    },
    /// One point lies strictly inside the triangle of the other three.
    NotConvex { interior: usize },
}

impl ConvexReport {
    pub fn is_convex(&self) -> bool {
        matches!(self, ConvexReport::Convex { .. })
    }
}

pub fn in_convex_position(pts: &[Point]) -> Result<ConvexReport> {
    if pts.len() != 4 {
        return Err(Error::WrongCardinality {
            expected: 4,
            got: pts.len(),
        });
    }
    ensure_distinct(pts)?;

    const TRIPLES: [[usize; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];

    let mut collinear_triple = None;
    for (skip, t) in TRIPLES.iter().enumerate() {
        if collinear(&pts[t[0]], &pts[t[1]], &pts[t[2]]) {
            if collinear_triple.is_some() {
                // two collinear triples share a line through all four
                return Err(Error::AllCollinear);
            }
            collinear_triple = Some((skip, *t));
        }
    }

    if let Some((apex, t)) = collinear_triple {
        // the middle point of the collinear triple sits on the hull edge
        let middle = middle_of(&pts[t[0]], &pts[t[1]], &pts[t[2]]);
        let middle = t[middle];
        let ends: Vec<usize> = t.iter().copied().filter(|&i| i != middle).collect();
        let mut tri = [ends[0], ends[1], apex];
        if orientation(&pts[tri[0]], &pts[tri[1]], &pts[tri[2]]) == Orientation::Clockwise {
            tri.swap(0, 1);
        }
        // insert the middle point between the two ends of the collinear edge
        let mut cycle = Vec::with_capacity(4);
        for k in 0..3 {
            let (u, v) = (tri[k], tri[(k + 1) % 3]);
            cycle.push(u);
            if (u == ends[0] && v == ends[1]) || (u == ends[1] && v == ends[0]) {
                cycle.push(middle);
            }
        }
        return Ok(ConvexReport::Convex {
            cycle: rotate_to_zero(&cycle),
            degenerate: Some(middle),
        });
    }

    for (inner, t) in TRIPLES.iter().enumerate() {
        let p = &pts[inner];
        let o1 = orientation(&pts[t[0]], &pts[t[1]], p);
        let o2 = orientation(&pts[t[1]], &pts[t[2]], p);
        let o3 = orientation(&pts[t[2]], &pts[t[0]], p);
        if o1 == o2 && o2 == o3 {
            return Ok(ConvexReport::NotConvex { interior: inner });
        }
    }

    // index 0 is a hull vertex; order the rest by angle around it
    let mut rest = [1usize, 2, 3];
    rest.sort_by(|&i, &j| match orientation(&pts[0], &pts[i], &pts[j]) {
        Orientation::CounterClockwise => std::cmp::Ordering::Less,
        Orientation::Clockwise => std::cmp::Ordering::Greater,
        Orientation::Collinear => std::cmp::Ordering::Equal,
    });
    Ok(ConvexReport::Convex {
        cycle: [0, rest[0], rest[1], rest[2]],
        degenerate: None,
    })
}

/// Index (0..3) of the point lying between the other two on a common line.
fn middle_of(a: &Point, b: &Point, c: &Point) -> usize {
    let between = |p: &Point, u: &Point, v: &Point| (u - p).dot(&(v - p)).is_negative();
    if between(a, b, c) {
        0
    } else if between(b, a, c) {
        1
    } else {
        2
    }
}

fn rotate_to_zero(cycle: &[usize]) -> [usize; 4] {
    let start = cycle.iter().position(|&i| i == 0).unwrap_or(0);
    let mut out = [0usize; 4];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = cycle[(start + k) % 4];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn squared_distance_examples() {
        assert_eq!(squared_distance(&p(0, 0), &p(1, 0)).value(), &int(1));
        let half = Point::new(rat(1, 2), rat(1, 2));
        assert_eq!(squared_distance(&p(0, 0), &half).value(), &rat(1, 2));
        assert_eq!(squared_distance(&p(1, 2), &p(4, 6)).value(), &int(25));
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)).sign(), 1);
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(2, 0)).sign(), 0);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)).sign(), -1);
    }

    #[test]
    fn convex_square() {
        let sq = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(
            in_convex_position(&sq).unwrap(),
            ConvexReport::Convex {
                cycle: [0, 1, 2, 3],
                degenerate: None
            }
        );
        // same square listed in a scrambled order
        let scrambled = [p(0, 0), p(1, 1), p(1, 0), p(0, 1)];
        assert_eq!(
            in_convex_position(&scrambled).unwrap(),
            ConvexReport::Convex {
                cycle: [0, 2, 1, 3],
                degenerate: None
            }
        );
    }

    #[test]
    fn interior_point() {
        let pts = [p(0, 0), p(4, 0), p(2, 3), p(2, 1)];
        assert_eq!(
            in_convex_position(&pts).unwrap(),
            ConvexReport::NotConvex { interior: 3 }
        );
        let pts = [p(2, 1), p(0, 0), p(4, 0), p(2, 3)];
        assert_eq!(
            in_convex_position(&pts).unwrap(),
            ConvexReport::NotConvex { interior: 0 }
        );
    }

    #[test]
    fn three_collinear_is_degenerate_convex() {
        let pts = [p(0, 0), p(1, 0), p(2, 0), p(0, 1)];
        assert_eq!(
            in_convex_position(&pts).unwrap(),
            ConvexReport::Convex {
                cycle: [0, 1, 2, 3],
                degenerate: Some(1)
            }
        );
        let pts = [p(1, 0), p(0, 1), p(0, 0), p(2, 0)];
        match in_convex_position(&pts).unwrap() {
            ConvexReport::Convex { cycle, degenerate } => {
                assert_eq!(degenerate, Some(0));
                assert_eq!(cycle, [0, 3, 1, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn convex_rejects_bad_input() {
        let dup = [p(0, 0), p(1, 0), p(0, 0), p(0, 1)];
        assert_eq!(in_convex_position(&dup), Err(Error::DuplicatePoint(0, 2)));
        let line = [p(0, 0), p(1, 1), p(2, 2), p(5, 5)];
        assert_eq!(in_convex_position(&line), Err(Error::AllCollinear));
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(8, 4)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }
}
