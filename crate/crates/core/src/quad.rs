//! Taxonomy of four-point sets and the triangle lower bound attached to
//! each case.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{in_convex_position, squared_distance, ConvexReport, Point, QLength};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuadTag {
    NotConvex,
    ThreeCollinear,
    AllSidesDistinct,
    OnePairAdjacent,
    OnePairOpposite,
    Kite,
    Parallelogram,
    ThreeSidesCongruent,
    Rhombus,
}

impl QuadTag {
    pub const ALL: [QuadTag; 9] = [
        QuadTag::NotConvex,
        QuadTag::ThreeCollinear,
        QuadTag::AllSidesDistinct,
        QuadTag::OnePairAdjacent,
        QuadTag::OnePairOpposite,
        QuadTag::Kite,
        QuadTag::Parallelogram,
        QuadTag::ThreeSidesCongruent,
        QuadTag::Rhombus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QuadTag::NotConvex => "NotConvex",
            QuadTag::ThreeCollinear => "ThreeCollinear",
            QuadTag::AllSidesDistinct => "AllSidesDistinct",
            QuadTag::OnePairAdjacent => "OnePairAdjacent",
            QuadTag::OnePairOpposite => "OnePairOpposite",
            QuadTag::Kite => "Kite",
            QuadTag::Parallelogram => "Parallelogram",
            QuadTag::ThreeSidesCongruent => "ThreeSidesCongruent",
            QuadTag::Rhombus => "Rhombus",
        }
    }
}

impl fmt::Display for QuadTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A classified quadruple. The flags are only ever set for the tags they
/// refine: `is_rectangle`/`is_square` for `Parallelogram` and `Rhombus`,
/// `is_isosceles_trapezoid` for `OnePairOpposite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuadCase {
    pub tag: QuadTag,
    pub is_rectangle: bool,
    pub is_square: bool,
    /// The congruent opposite sides are the legs of an isosceles trapezoid
    /// (equal diagonals). Such a quadrilateral has only two classes.
    pub is_isosceles_trapezoid: bool,
}

impl QuadCase {
    pub fn plain(tag: QuadTag) -> Self {
        QuadCase {
            tag,
            is_rectangle: false,
            is_square: false,
            is_isosceles_trapezoid: false,
        }
    }
}

impl fmt::Display for QuadCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)?;
        let mut flags = Vec::new();
        if self.is_square {
            flags.push("is_square");
        }
        if self.is_rectangle {
            flags.push("is_rectangle");
        }
        if self.is_isosceles_trapezoid {
            flags.push("is_isosceles_trapezoid");
        }
        if !flags.is_empty() {
            write!(f, "({})", flags.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseBound {
    pub case: QuadCase,
    pub min_distinct_triangles: usize,
}

pub fn classify_quad(pts: &[Point]) -> Result<QuadCase> {
    let report = in_convex_position(pts)?;
    let cycle = match report {
        ConvexReport::NotConvex { .. } => return Ok(QuadCase::plain(QuadTag::NotConvex)),
        ConvexReport::Convex {
            degenerate: Some(_),
            ..
        } => return Ok(QuadCase::plain(QuadTag::ThreeCollinear)),
        ConvexReport::Convex { cycle, .. } => cycle,
    };

    let sides: [QLength; 4] =
        std::array::from_fn(|k| squared_distance(&pts[cycle[k]], &pts[cycle[(k + 1) % 4]]));
    let diagonals_equal = squared_distance(&pts[cycle[0]], &pts[cycle[2]])
        == squared_distance(&pts[cycle[1]], &pts[cycle[3]]);

    let adjacent_equal = (0..4).filter(|&k| sides[k] == sides[(k + 1) % 4]).count();
    let opposite_equal = (0..2).filter(|&k| sides[k] == sides[k + 2]).count();

    // multiplicities of the side values, largest first
    let mut mult: Vec<usize> = Vec::new();
    let mut seen: Vec<&QLength> = Vec::new();
    for s in &sides {
        match seen.iter().position(|t| *t == s) {
            Some(i) => mult[i] += 1,
            None => {
                seen.push(s);
                mult.push(1);
            }
        }
    }
    mult.sort_unstable_by(|a, b| b.cmp(a));

    let case = match mult.as_slice() {
        [4] => QuadCase {
            tag: QuadTag::Rhombus,
            is_rectangle: diagonals_equal,
            is_square: diagonals_equal,
            is_isosceles_trapezoid: false,
        },
        [3, 1] => QuadCase::plain(QuadTag::ThreeSidesCongruent),
        [2, 2] if opposite_equal == 2 => QuadCase {
            tag: QuadTag::Parallelogram,
            is_rectangle: diagonals_equal,
            is_square: false,
            is_isosceles_trapezoid: false,
        },
        [2, 2] => QuadCase::plain(QuadTag::Kite),
        [2, 1, 1] if adjacent_equal == 1 => QuadCase::plain(QuadTag::OnePairAdjacent),
        [2, 1, 1] => QuadCase {
            is_isosceles_trapezoid: diagonals_equal,
            ..QuadCase::plain(QuadTag::OnePairOpposite)
        },
        [1, 1, 1, 1] => QuadCase::plain(QuadTag::AllSidesDistinct),
        other => unreachable!("impossible side multiplicities {other:?}"),
    };
    Ok(case)
}

pub fn case_bound(case: QuadCase) -> CaseBound {
    let min = match case.tag {
        QuadTag::AllSidesDistinct | QuadTag::OnePairAdjacent | QuadTag::Kite => 3,
        QuadTag::OnePairOpposite if case.is_isosceles_trapezoid => 2,
        QuadTag::OnePairOpposite => 3,
        QuadTag::NotConvex | QuadTag::ThreeCollinear | QuadTag::ThreeSidesCongruent => 2,
        QuadTag::Parallelogram if case.is_rectangle => 1,
        QuadTag::Parallelogram => 2,
        QuadTag::Rhombus if case.is_square => 1,
        QuadTag::Rhombus => 2,
    };
    CaseBound {
        case,
        min_distinct_triangles: min,
    }
}

/// Rejects sets of four collinear points up front with a clear error.
pub fn ensure_quad(pts: &[Point]) -> Result<()> {
    if pts.len() != 4 {
        return Err(Error::WrongCardinality {
            expected: 4,
            got: pts.len(),
        });
    }
    in_convex_position(pts).map(|_| ())
}
