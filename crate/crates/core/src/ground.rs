//! Finite candidate universes for extremal searches.
//!
//! Each ground set owns an exact length oracle and a precomputed table that
//! maps every site triple to a dense triangle-class id, so the search loop
//! never touches rationals.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::circle::{circle_triangle, site_chord, CircleSite};
use crate::congruence::{configurations_congruent, configurations_similar, metric_match};
use crate::error::{Error, Result};
use crate::geometry::{collinear, int, rat, squared_distance, Point, Rational};

/// Largest ground set the dense class table is built for.
pub const MAX_SITES: usize = 128;

/// Marks a collinear triple in the class table.
pub const COLLINEAR: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroundKind {
    /// `k x k` integer grid `{0..k-1}^2`, spacing 1.
    RationalGrid { k: usize },
    /// The `d` points `j/d` on the unit circle, plus its center if asked.
    CircleDivisions { d: usize, with_center: bool },
    /// Triangular lattice points `(a, b)` with `a^2 + ab + b^2 <= r^2`.
    EisensteinBall { r: usize },
}

impl GroundKind {
    pub fn family(&self) -> Family {
        match self {
            GroundKind::RationalGrid { .. } => Family::Planar,
            GroundKind::CircleDivisions { .. } => Family::Chord,
            GroundKind::EisensteinBall { .. } => Family::Lattice,
        }
    }
}

impl fmt::Display for GroundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundKind::RationalGrid { k } => write!(f, "RationalGrid(k={k})"),
            GroundKind::CircleDivisions { d, with_center } => {
                write!(
                    f,
                    "CircleDivisions(D={d}{})",
                    if *with_center { ", center" } else { "" }
                )
            }
            GroundKind::EisensteinBall { r } => write!(f, "EisensteinBall(r={r})"),
        }
    }
}

/// What a length key measures. Keys of different families are not
/// comparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Squared euclidean length.
    Planar,
    /// Canonical chord gap fraction on the unit circle.
    Chord,
    /// Triangular lattice norm `da^2 + da db + db^2`.
    Lattice,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Planar => "planar",
            Family::Chord => "chord",
            Family::Lattice => "lattice",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LengthKey {
    family: Family,
    value: Rational,
}

impl LengthKey {
    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn try_cmp(&self, other: &LengthKey) -> Result<Ordering> {
        if self.family != other.family {
            return Err(Error::CrossFamily(self.family.name(), other.family.name()));
        }
        Ok(self.value.cmp(&other.value))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Site {
    Grid(Point),
    Circle(CircleSite),
    Lattice(i64, i64),
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Grid(p) => write!(f, "{p:?}"),
            Site::Circle(CircleSite::Arc(fr)) => {
                write!(f, "{}", crate::geometry::format_rational(fr))
            }
            Site::Circle(CircleSite::Center) => f.write_str("center"),
            Site::Lattice(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

pub fn lattice_norm(da: i64, db: i64) -> i64 {
    da * da + da * db + db * db
}

pub fn lattice_cross(a1: i64, b1: i64, a2: i64, b2: i64) -> i64 {
    a1 * b2 - a2 * b1
}

/// Cartesian image of a lattice point in the basis `(1, 0)`,
/// `(1/2, sqrt(3)/2)`; for drawing only.
pub fn lattice_to_cartesian(a: i64, b: i64) -> (f64, f64) {
    (a as f64 + b as f64 / 2.0, b as f64 * 3f64.sqrt() / 2.0)
}

pub struct GroundSet {
    kind: GroundKind,
    sites: Vec<Site>,
    lengths: Vec<LengthKey>,
    classes: Vec<u32>,
    class_count: usize,
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroundSet")
            .field("kind", &self.kind)
            .field("sites", &self.sites.len())
            .field("classes", &self.class_count)
            .finish()
    }
}

pub fn build_ground_set(kind: GroundKind) -> Result<GroundSet> {
    let sites = match kind {
        GroundKind::RationalGrid { k } => {
            if k < 2 {
                return Err(Error::InvalidParameter(format!(
                    "grid needs k >= 2, got {k}"
                )));
            }
            let k = k as i64;
            (0..k)
                .flat_map(|y| (0..k).map(move |x| Site::Grid(Point::from_ints(x, y))))
                .collect::<Vec<_>>()
        }
        GroundKind::CircleDivisions { d, with_center } => {
            if d < 3 {
                return Err(Error::InvalidParameter(format!(
                    "circle divisions need D >= 3, got {d}"
                )));
            }
            let mut s: Vec<Site> = (0..d as i64)
                .map(|j| Site::Circle(CircleSite::Arc(rat(j, d as i64))))
                .collect();
            if with_center {
                s.push(Site::Circle(CircleSite::Center));
            }
            s
        }
        GroundKind::EisensteinBall { r } => {
            if r < 1 {
                return Err(Error::InvalidParameter(format!(
                    "lattice ball needs r >= 1, got {r}"
                )));
            }
            let r = r as i64;
            let mut pts: Vec<(i64, i64)> = (-2 * r..=2 * r)
                .flat_map(|a| (-2 * r..=2 * r).map(move |b| (a, b)))
                .filter(|&(a, b)| lattice_norm(a, b) <= r * r)
                .collect();
            pts.sort_by(|&p, &q| spiral_order(p, q));
            pts.into_iter().map(|(a, b)| Site::Lattice(a, b)).collect()
        }
    };
    if sites.len() > MAX_SITES {
        return Err(Error::InvalidParameter(format!(
            "{kind} has {} sites, more than the supported {MAX_SITES}",
            sites.len()
        )));
    }
    Ok(GroundSet::from_sites(kind, sites))
}

/// Norm first, then angle counter-clockwise from the positive a-axis.
fn spiral_order(p: (i64, i64), q: (i64, i64)) -> Ordering {
    let half = |(a, b): (i64, i64)| -> u8 {
        // upper half-plane (angle in [0, pi)) first
        if b > 0 || (b == 0 && a > 0) {
            0
        } else {
            1
        }
    };
    lattice_norm(p.0, p.1)
        .cmp(&lattice_norm(q.0, q.1))
        .then_with(|| half(p).cmp(&half(q)))
        .then_with(|| 0.cmp(&lattice_cross(p.0, p.1, q.0, q.1)))
}

impl GroundSet {
    fn from_sites(kind: GroundKind, sites: Vec<Site>) -> GroundSet {
        let n = sites.len();
        let family = kind.family();
        let mut lengths = Vec::with_capacity(n * n);
        for a in &sites {
            for b in &sites {
                lengths.push(LengthKey {
                    family,
                    value: raw_length(a, b),
                });
            }
        }

        let mut ids: HashMap<[Rational; 3], u32> = HashMap::new();
        let mut classes = vec![COLLINEAR; n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if triple_collinear(&sites[i], &sites[j], &sites[k]) {
                        continue;
                    }
                    let mut key = [
                        lengths[i * n + j].value.clone(),
                        lengths[i * n + k].value.clone(),
                        lengths[j * n + k].value.clone(),
                    ];
                    key.sort();
                    let next = ids.len() as u32;
                    classes[(i * n + j) * n + k] = *ids.entry(key).or_insert(next);
                }
            }
        }
        GroundSet {
            kind,
            sites,
            lengths,
            classes,
            class_count: ids.len(),
        }
    }

    pub fn kind(&self) -> GroundKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn site(&self, i: usize) -> &Site {
        &self.sites[i]
    }

    pub fn length(&self, i: usize, j: usize) -> &LengthKey {
        &self.lengths[i * self.sites.len() + j]
    }

    /// Number of distinct triangle classes over the whole ground set.
    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Class id of the triple `i < j < k`, or [`COLLINEAR`].
    #[inline]
    pub fn class_of(&self, i: usize, j: usize, k: usize) -> u32 {
        let n = self.sites.len();
        debug_assert!(i < j && j < k && k < n);
        self.classes[(i * n + j) * n + k]
    }

    pub fn labels(&self, subset: &[usize]) -> Vec<String> {
        subset.iter().map(|&i| self.sites[i].to_string()).collect()
    }

    /// Rational planar points of a grid subset.
    pub fn planar_points(&self, subset: &[usize]) -> Option<Vec<Point>> {
        subset
            .iter()
            .map(|&i| match &self.sites[i] {
                Site::Grid(p) => Some(p.clone()),
                _ => None,
            })
            .collect()
    }

    /// Whether two subsets are congruent (or similar when `up_to_scale`).
    pub fn equivalent(&self, a: &[usize], b: &[usize], up_to_scale: bool) -> bool {
        if a.len() != b.len() {
            return false;
        }
        match self.kind {
            GroundKind::RationalGrid { .. } => {
                let pa = self.planar_points(a).expect("grid sites");
                let pb = self.planar_points(b).expect("grid sites");
                let r = if up_to_scale {
                    configurations_similar(&pa, &pb)
                } else {
                    configurations_congruent(&pa, &pb)
                };
                r.unwrap_or(false)
            }
            GroundKind::CircleDivisions { d, .. } => {
                self.circle_canonical(a, d) == self.circle_canonical(b, d)
            }
            GroundKind::EisensteinBall { .. } => {
                let m = |s: &[usize]| -> Vec<Vec<Rational>> {
                    s.iter()
                        .map(|&i| s.iter().map(|&j| self.length(i, j).value.clone()).collect())
                        .collect()
                };
                metric_match(&m(a), &m(b), up_to_scale)
            }
        }
    }

    /// Smallest image of the subset under the rotations and reflections of
    /// the `d`-gon, with the center flag.
    fn circle_canonical(&self, subset: &[usize], d: usize) -> (Vec<usize>, bool) {
        let center = subset
            .iter()
            .any(|&i| matches!(self.sites[i], Site::Circle(CircleSite::Center)));
        let arcs: Vec<usize> = subset.iter().copied().filter(|&i| i < d).collect();
        let mut best: Option<Vec<usize>> = None;
        for r in 0..d {
            for flip in [false, true] {
                let mut img: Vec<usize> = arcs
                    .iter()
                    .map(|&j| if flip { (d - j + r) % d } else { (j + r) % d })
                    .collect();
                img.sort_unstable();
                if best.as_ref().is_none_or(|b| img < *b) {
                    best = Some(img);
                }
            }
        }
        (best.unwrap_or_default(), center)
    }

    /// Triangle count of a subset computed straight from the site
    /// geometry, bypassing the class table.
    pub fn recount(&self, subset: &[usize]) -> usize {
        match self.kind {
            GroundKind::RationalGrid { .. } => {
                let pts = self.planar_points(subset).expect("grid sites");
                if pts.len() < 3 {
                    return 0;
                }
                crate::congruence::distinct_triangles(&pts)
                    .map(|s| s.count())
                    .unwrap_or(0)
            }
            GroundKind::CircleDivisions { .. } => {
                let mut fr = Vec::new();
                let mut center = false;
                for &i in subset {
                    match &self.sites[i] {
                        Site::Circle(CircleSite::Arc(f)) => fr.push(f.clone()),
                        _ => center = true,
                    }
                }
                crate::circle::CircleConfig::new(fr, center)
                    .and_then(|c| crate::circle::distinct_triangles_circle(&c))
                    .map(|s| s.count())
                    .unwrap_or(0)
            }
            GroundKind::EisensteinBall { .. } => {
                let pts: Vec<(i64, i64)> = subset
                    .iter()
                    .map(|&i| match self.sites[i] {
                        Site::Lattice(a, b) => (a, b),
                        _ => unreachable!("lattice ground holds lattice sites"),
                    })
                    .collect();
                lattice_distinct_triangles(&pts)
            }
        }
    }
}

fn raw_length(a: &Site, b: &Site) -> Rational {
    match (a, b) {
        (Site::Grid(p), Site::Grid(q)) => squared_distance(p, q).into_inner(),
        (Site::Circle(x), Site::Circle(y)) => site_chord(x, y)
            .map(|c| c.gap().clone())
            .unwrap_or_else(|| int(0)),
        (Site::Lattice(a1, b1), Site::Lattice(a2, b2)) => int(lattice_norm(a1 - a2, b1 - b2)),
        _ => unreachable!("ground sets hold a single site family"),
    }
}

fn triple_collinear(a: &Site, b: &Site, c: &Site) -> bool {
    match (a, b, c) {
        (Site::Grid(p), Site::Grid(q), Site::Grid(r)) => collinear(p, q, r),
        (Site::Circle(x), Site::Circle(y), Site::Circle(z)) => circle_triangle(x, y, z).is_none(),
        (Site::Lattice(a1, b1), Site::Lattice(a2, b2), Site::Lattice(a3, b3)) => {
            lattice_cross(a2 - a1, b2 - b1, a3 - a1, b3 - b1) == 0
        }
        _ => unreachable!("ground sets hold a single site family"),
    }
}

/// Triangle classes of triangular-lattice points given in basis
/// coordinates, keyed by sorted lattice norms.
pub fn lattice_triangle_classes(pts: &[(i64, i64)]) -> BTreeSet<[i64; 3]> {
    let mut set = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let (p, q, r) = (pts[i], pts[j], pts[k]);
                if lattice_cross(q.0 - p.0, q.1 - p.1, r.0 - p.0, r.1 - p.1) == 0 {
                    continue;
                }
                let mut key = [
                    lattice_norm(q.0 - p.0, q.1 - p.1),
                    lattice_norm(r.0 - p.0, r.1 - p.1),
                    lattice_norm(r.0 - q.0, r.1 - q.1),
                ];
                key.sort_unstable();
                set.insert(key);
            }
        }
    }
    set
}

pub fn lattice_distinct_triangles(pts: &[(i64, i64)]) -> usize {
    lattice_triangle_classes(pts).len()
}
