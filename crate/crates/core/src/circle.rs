//! Points on the unit circle, optionally with its center.
//!
//! A circle point is stored as its turn fraction (angle / 2pi). The chord
//! between fractions at gap `d` has length `2 sin(pi g)` with
//! `g = min(d, 1 - d)`, and that map is strictly increasing on `(0, 1/2]`,
//! so chords are compared through `g` alone and every count stays exact.
//! The radius equals the chord at `g = 1/6`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{format_rational, rat, Rational};

/// Canonical gap fraction of a chord, in `(0, 1/2]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordClass(Rational);

impl ChordClass {
    /// The chord congruent to a radius.
    pub fn radius() -> Self {
        ChordClass(rat(1, 6))
    }

    pub fn gap(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Debug for ChordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={}", format_rational(&self.0))
    }
}

impl fmt::Display for ChordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

fn reduce_turn(f: &Rational) -> Rational {
    f - f.floor()
}

/// `(f2 - f1) mod 1`, in `[0, 1)`.
fn turn_gap(f1: &Rational, f2: &Rational) -> Rational {
    reduce_turn(&(f2 - f1))
}

pub fn chord_class(f1: &Rational, f2: &Rational) -> Result<ChordClass> {
    let d = turn_gap(f1, f2);
    if d.is_zero() {
        return Err(Error::EqualFractions(format_rational(f1)));
    }
    let other = Rational::one() - &d;
    Ok(ChordClass(if other < d { other } else { d }))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CircleSite {
    Arc(Rational),
    Center,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleConfig {
    fractions: Vec<Rational>,
    with_center: bool,
}

impl CircleConfig {
    /// Validates and sorts the fractions. Each must lie in `[0, 1)` and be
    /// distinct.
    pub fn new(mut fractions: Vec<Rational>, with_center: bool) -> Result<Self> {
        for f in &fractions {
            if f.is_negative() || f >= &Rational::one() {
                return Err(Error::FractionOutOfRange(format_rational(f)));
            }
        }
        fractions.sort();
        if let Some(w) = fractions.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::EqualFractions(format_rational(&w[0])));
        }
        Ok(CircleConfig {
            fractions,
            with_center,
        })
    }

    pub fn fractions(&self) -> &[Rational] {
        &self.fractions
    }

    pub fn with_center(&self) -> bool {
        self.with_center
    }

    pub fn len(&self) -> usize {
        self.fractions.len() + usize::from(self.with_center)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Arc points in fraction order, then the center if present.
    pub fn sites(&self) -> Vec<CircleSite> {
        let mut s: Vec<CircleSite> = self
            .fractions
            .iter()
            .cloned()
            .map(CircleSite::Arc)
            .collect();
        if self.with_center {
            s.push(CircleSite::Center);
        }
        s
    }

    /// Rotates every point by `delta` turns.
    pub fn rotated(&self, delta: &Rational) -> CircleConfig {
        let f = self
            .fractions
            .iter()
            .map(|f| reduce_turn(&(f + delta)))
            .collect();
        CircleConfig::new(f, self.with_center).expect("rotation keeps fractions distinct")
    }

    /// Mirror image `f -> (1 - f) mod 1`.
    pub fn reflected(&self) -> CircleConfig {
        let f = self
            .fractions
            .iter()
            .map(|f| reduce_turn(&(Rational::one() - f)))
            .collect();
        CircleConfig::new(f, self.with_center).expect("reflection keeps fractions distinct")
    }
}

/// Chord class of the segment between two sites, `None` when they coincide.
pub fn site_chord(a: &CircleSite, b: &CircleSite) -> Option<ChordClass> {
    match (a, b) {
        (CircleSite::Arc(f1), CircleSite::Arc(f2)) => chord_class(f1, f2).ok(),
        (CircleSite::Center, CircleSite::Center) => None,
        _ => Some(ChordClass::radius()),
    }
}

/// Sorted chord classes of a triangle of sites, or `None` when the three
/// are collinear (center plus two antipodal points).
pub fn circle_triangle(a: &CircleSite, b: &CircleSite, c: &CircleSite) -> Option<[ChordClass; 3]> {
    let sites = [a, b, c];
    let arcs: Vec<&Rational> = sites
        .iter()
        .filter_map(|s| match s {
            CircleSite::Arc(f) => Some(f),
            CircleSite::Center => None,
        })
        .collect();
    if arcs.len() == 2 && turn_gap(arcs[0], arcs[1]) == rat(1, 2) {
        return None;
    }
    let mut t = [site_chord(a, b)?, site_chord(a, c)?, site_chord(b, c)?];
    t.sort();
    Some(t)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CircleClassSet {
    classes: BTreeSet<[ChordClass; 3]>,
}

impl CircleClassSet {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> impl Iterator<Item = &[ChordClass; 3]> {
        self.classes.iter()
    }

    pub fn contains(&self, t: &[ChordClass; 3]) -> bool {
        self.classes.contains(t)
    }
}

pub fn distinct_triangles_circle(cfg: &CircleConfig) -> Result<CircleClassSet> {
    if cfg.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            got: cfg.len(),
        });
    }
    let sites = cfg.sites();
    let n = sites.len();

    // intern each pair's chord so the triple loop works on small integers
    let mut ids: HashMap<ChordClass, u32> = HashMap::new();
    let mut by_id: Vec<ChordClass> = Vec::new();
    let mut pair = vec![0u32; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let c = site_chord(&sites[i], &sites[j]).expect("sites are distinct");
            let id = *ids.entry(c.clone()).or_insert_with(|| {
                by_id.push(c);
                (by_id.len() - 1) as u32
            });
            pair[i * n + j] = id;
            pair[j * n + i] = id;
        }
    }

    // only center triples can be collinear
    let center = cfg.with_center.then_some(n - 1);
    let half = rat(1, 2);
    let antipodal: Vec<bool> = (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            match (&sites[i], &sites[j]) {
                (CircleSite::Arc(a), CircleSite::Arc(b)) => turn_gap(a, b) == half,
                _ => false,
            }
        })
        .collect();

    let mut seen: HashSet<[u32; 3]> = HashSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if center == Some(k) && antipodal[i * n + j] {
                    continue;
                }
                let mut t = [pair[i * n + j], pair[i * n + k], pair[j * n + k]];
                t.sort_unstable();
                seen.insert(t);
            }
        }
    }

    let classes = seen
        .into_iter()
        .map(|t| {
            let mut c = t.map(|id| by_id[id as usize].clone());
            c.sort();
            c
        })
        .collect();
    Ok(CircleClassSet { classes })
}

pub fn regular_ngon(n: usize) -> Result<CircleConfig> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "regular polygon needs n >= 3, got {n}"
        )));
    }
    let fractions = (0..n as i64).map(|k| rat(k, n as i64)).collect();
    CircleConfig::new(fractions, false)
}

/// `n = a + b + c` with `a >= b >= c >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition3 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Partition3 {
    /// The partition read off the triangle on polygon vertices `0 < i < j < n`:
    /// the three arc gaps `{i, j - i, n - j}`.
    pub fn from_vertices(n: u64, i: u64, j: u64) -> Option<Self> {
        if !(0 < i && i < j && j < n) {
            return None;
        }
        let mut parts = [i, j - i, n - j];
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Some(Partition3 {
            a: parts[0],
            b: parts[1],
            c: parts[2],
        })
    }

    pub fn sum(&self) -> u64 {
        self.a + self.b + self.c
    }
}

impl fmt::Display for Partition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Lexicographic enumeration of the partitions of `n` into three parts.
#[derive(Debug, Clone)]
pub struct Partitions3 {
    n: u64,
    a: u64,
    b: u64,
}

impl Partitions3 {
    fn b_range(n: u64, a: u64) -> (u64, u64) {
        let rest = n - a;
        (rest.div_ceil(2), a.min(rest - 1))
    }
}

impl Iterator for Partitions3 {
    type Item = Partition3;

    fn next(&mut self) -> Option<Partition3> {
        loop {
            if self.a + 2 > self.n {
                return None;
            }
            let (_, hi) = Self::b_range(self.n, self.a);
            if self.b <= hi {
                let p = Partition3 {
                    a: self.a,
                    b: self.b,
                    c: self.n - self.a - self.b,
                };
                self.b += 1;
                return Some(p);
            }
            self.a += 1;
            if self.a + 2 > self.n {
                return None;
            }
            self.b = Self::b_range(self.n, self.a).0;
        }
    }
}

pub fn partitions3(n: u64) -> Result<Partitions3> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "partitions into three parts need n >= 3, got {n}"
        )));
    }
    let a = n.div_ceil(3);
    Ok(Partitions3 {
        n,
        a,
        b: Partitions3::b_range(n, a).0,
    })
}

pub fn ngon_triangle_count(n: u64) -> Result<u64> {
    Ok(partitions3(n)?.count() as u64)
}

/// `round(n^2 / 12)`. The residue of `n^2` mod 12 is one of 0, 1, 4, 9, so
/// the rounding never ties.
pub fn nearest_integer_n2_over_12(n: u64) -> u64 {
    (n * n + 6) / 12
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::int;

    #[test]
    fn chord_examples() {
        assert_eq!(chord_class(&int(0), &rat(1, 2)).unwrap().gap(), &rat(1, 2));
        assert_eq!(chord_class(&int(0), &rat(5, 6)).unwrap().gap(), &rat(1, 6));
        assert_eq!(
            chord_class(&rat(1, 5), &rat(3, 5)).unwrap().gap(),
            &rat(2, 5)
        );
        assert_eq!(
            chord_class(&rat(3, 5), &rat(1, 5)).unwrap().gap(),
            &rat(2, 5)
        );
        assert!(matches!(
            chord_class(&rat(1, 3), &rat(1, 3)),
            Err(Error::EqualFractions(_))
        ));
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            CircleConfig::new(vec![rat(1, 2), rat(2, 4)], false),
            Err(Error::EqualFractions(_))
        ));
        assert!(matches!(
            CircleConfig::new(vec![int(1)], false),
            Err(Error::FractionOutOfRange(_))
        ));
        assert!(matches!(
            CircleConfig::new(vec![rat(-1, 3)], false),
            Err(Error::FractionOutOfRange(_))
        ));
        let two = CircleConfig::new(vec![int(0), rat(1, 2)], false).unwrap();
        assert!(matches!(
            distinct_triangles_circle(&two),
            Err(Error::TooFewPoints { .. })
        ));
    }

    #[test]
    fn circle_counts() {
        let pentagon = regular_ngon(5).unwrap();
        assert_eq!(distinct_triangles_circle(&pentagon).unwrap().count(), 2);
        let hexagon = regular_ngon(6).unwrap();
        assert_eq!(distinct_triangles_circle(&hexagon).unwrap().count(), 3);
        let sq_center =
            CircleConfig::new(regular_ngon(4).unwrap().fractions().to_vec(), true).unwrap();
        assert_eq!(distinct_triangles_circle(&sq_center).unwrap().count(), 2);
    }

    #[test]
    fn center_with_antipodes_is_collinear() {
        let cfg = CircleConfig::new(vec![int(0), rat(1, 2)], true).unwrap();
        assert_eq!(distinct_triangles_circle(&cfg).unwrap().count(), 0);
        let t = circle_triangle(
            &CircleSite::Arc(rat(1, 4)),
            &CircleSite::Center,
            &CircleSite::Arc(rat(3, 4)),
        );
        assert_eq!(t, None);
    }

    #[test]
    fn hexagon_with_center_has_equilateral_triangles() {
        // center plus two adjacent vertices: unit equilateral triangle
        let cfg = CircleConfig::new(regular_ngon(6).unwrap().fractions().to_vec(), true).unwrap();
        let set = distinct_triangles_circle(&cfg).unwrap();
        let r = ChordClass::radius();
        assert!(set.contains(&[r.clone(), r.clone(), r]));
    }

    #[test]
    fn ngon_examples() {
        assert_eq!(
            regular_ngon(3).unwrap().fractions(),
            &[int(0), rat(1, 3), rat(2, 3)]
        );
        assert_eq!(
            regular_ngon(4).unwrap().fractions(),
            &[int(0), rat(1, 4), rat(1, 2), rat(3, 4)]
        );
        assert_eq!(regular_ngon(9).unwrap().fractions().len(), 9);
        assert!(regular_ngon(2).is_err());
    }

    #[test]
    fn partition_examples() {
        let p = |a, b, c| Partition3 { a, b, c };
        assert_eq!(
            partitions3(3).unwrap().collect::<Vec<_>>(),
            vec![p(1, 1, 1)]
        );
        assert_eq!(
            partitions3(6).unwrap().collect::<Vec<_>>(),
            vec![p(2, 2, 2), p(3, 2, 1), p(4, 1, 1)]
        );
        let nine: Vec<_> = partitions3(9).unwrap().collect();
        assert_eq!(nine.len(), 7);
        assert!(nine.contains(&p(4, 3, 2)));
        assert!(nine.contains(&p(6, 2, 1)));
        assert!(partitions3(2).is_err());
    }

    #[test]
    fn figure_bijection_for_nine() {
        assert_eq!(
            Partition3::from_vertices(9, 4, 7),
            Partition3::from_vertices(9, 3, 5)
        );
        assert_eq!(
            Partition3::from_vertices(9, 6, 8),
            Some(Partition3 { a: 6, b: 2, c: 1 })
        );
    }

    #[test]
    fn nearest_integer_examples() {
        assert_eq!(nearest_integer_n2_over_12(9), 7);
        assert_eq!(nearest_integer_n2_over_12(6), 3);
        assert_eq!(nearest_integer_n2_over_12(3), 1);
        assert_eq!(nearest_integer_n2_over_12(0), 0);
        assert_eq!(ngon_triangle_count(4).unwrap(), 1);
        assert_eq!(ngon_triangle_count(6).unwrap(), 3);
        assert_eq!(ngon_triangle_count(12).unwrap(), 12);
    }
}
