//! Plain-text point files.
//!
//! ```text
//! # a unit square
//! points
//! 0 0
//! 1 0
//! 1 1
//! 0 1
//! ```
//!
//! The first record names the format: `points` (rational `x y` pairs,
//! each coordinate an integer or `p/q`), `circle` (one turn fraction per
//! line plus an optional `center` line) or `eisenstein` (integer `a b`
//! lattice coordinates). `#` starts a comment.

use crate::circle::{circle_triangle, distinct_triangles_circle, CircleConfig, CircleSite};
use crate::congruence::{describe_signature, distinct_triangles};
use crate::error::{Error, Result};
use crate::geometry::{collinear, format_rational, parse_rational, Point, Rational};
use crate::ground::{lattice_cross, lattice_triangle_classes};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointFile {
    Points(Vec<Point>),
    Circle {
        fractions: Vec<Rational>,
        center: bool,
    },
    Eisenstein(Vec<(i64, i64)>),
}

impl PointFile {
    pub fn parse(text: &str) -> Result<PointFile> {
        let mut records = text.lines().enumerate().filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        });
        let (hline, header) = records
            .next()
            .ok_or_else(|| Error::parse(1, "empty file: expected a header"))?;

        match header {
            "points" => {
                let mut pts = Vec::new();
                for (line, body) in records {
                    let f = fields::<2>(line, body)?;
                    let x = parse_rational(f[0]).map_err(|m| Error::parse(line, m))?;
                    let y = parse_rational(f[1]).map_err(|m| Error::parse(line, m))?;
                    pts.push(Point::new(x, y));
                }
                Ok(PointFile::Points(pts))
            }
            "circle" => {
                let mut fractions = Vec::new();
                let mut center = false;
                for (line, body) in records {
                    if body == "center" {
                        if center {
                            return Err(Error::parse(line, "center given twice"));
                        }
                        center = true;
                        continue;
                    }
                    let f = fields::<1>(line, body)?;
                    fractions.push(parse_rational(f[0]).map_err(|m| Error::parse(line, m))?);
                }
                Ok(PointFile::Circle { fractions, center })
            }
            "eisenstein" => {
                let mut pts = Vec::new();
                for (line, body) in records {
                    let f = fields::<2>(line, body)?;
                    let parse = |s: &str| {
                        s.parse::<i64>().map_err(|_| {
                            Error::parse(line, format!("expected an integer, got {s:?}"))
                        })
                    };
                    pts.push((parse(f[0])?, parse(f[1])?));
                }
                Ok(PointFile::Eisenstein(pts))
            }
            other => Err(Error::parse(
                hline,
                format!("unknown header {other:?}; expected points, circle or eisenstein"),
            )),
        }
    }

    /// Canonical text: lowest-terms rationals, records in file order, the
    /// `center` line last.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        match self {
            PointFile::Points(pts) => {
                out.push_str("points\n");
                for p in pts {
                    out.push_str(&format!(
                        "{} {}\n",
                        format_rational(&p.x),
                        format_rational(&p.y)
                    ));
                }
            }
            PointFile::Circle { fractions, center } => {
                out.push_str("circle\n");
                for f in fractions {
                    out.push_str(&format_rational(f));
                    out.push('\n');
                }
                if *center {
                    out.push_str("center\n");
                }
            }
            PointFile::Eisenstein(pts) => {
                out.push_str("eisenstein\n");
                for (a, b) in pts {
                    out.push_str(&format!("{a} {b}\n"));
                }
            }
        }
        out
    }

    pub fn header(&self) -> &'static str {
        match self {
            PointFile::Points(_) => "points",
            PointFile::Circle { .. } => "circle",
            PointFile::Eisenstein(_) => "eisenstein",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            PointFile::Points(p) => p.len(),
            PointFile::Circle { fractions, center } => fractions.len() + usize::from(*center),
            PointFile::Eisenstein(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn circle_config(&self) -> Option<Result<CircleConfig>> {
        match self {
            PointFile::Circle { fractions, center } => {
                Some(CircleConfig::new(fractions.clone(), *center))
            }
            _ => None,
        }
    }

    /// Checks for repeated points (and out-of-range fractions).
    pub fn validate(&self) -> Result<()> {
        match self {
            PointFile::Points(p) => crate::geometry::ensure_distinct(p),
            PointFile::Circle { .. } => self.circle_config().expect("circle").map(|_| ()),
            PointFile::Eisenstein(p) => {
                let mut seen = std::collections::HashMap::new();
                for (i, q) in p.iter().enumerate() {
                    if let Some(j) = seen.insert(*q, i) {
                        return Err(Error::DuplicatePoint(j, i));
                    }
                }
                Ok(())
            }
        }
    }

    /// Exact collinearity of three records.
    pub fn collinear(&self, i: usize, j: usize, k: usize) -> bool {
        match self {
            PointFile::Points(p) => collinear(&p[i], &p[j], &p[k]),
            PointFile::Circle { .. } => {
                let s = self.circle_sites();
                circle_triangle(&s[i], &s[j], &s[k]).is_none()
            }
            PointFile::Eisenstein(p) => {
                let (a, b, c) = (p[i], p[j], p[k]);
                lattice_cross(b.0 - a.0, b.1 - a.1, c.0 - a.0, c.1 - a.1) == 0
            }
        }
    }

    /// Records as circle sites in file order, center last.
    pub fn circle_sites(&self) -> Vec<CircleSite> {
        match self {
            PointFile::Circle { fractions, center } => {
                let mut s: Vec<CircleSite> =
                    fractions.iter().cloned().map(CircleSite::Arc).collect();
                if *center {
                    s.push(CircleSite::Center);
                }
                s
            }
            _ => Vec::new(),
        }
    }

    /// Distinct triangle classes, each rendered as three length strings
    /// (squared lengths, chord gap fractions or lattice norms).
    pub fn triangle_classes(&self) -> Result<Vec<[String; 3]>> {
        if self.len() < 3 {
            return Err(Error::TooFewPoints {
                needed: 3,
                got: self.len(),
            });
        }
        self.validate()?;
        match self {
            PointFile::Points(p) => Ok(distinct_triangles(p)?
                .classes()
                .map(describe_signature)
                .collect()),
            PointFile::Circle { .. } => {
                let cfg = self.circle_config().expect("circle")?;
                Ok(distinct_triangles_circle(&cfg)?
                    .classes()
                    .map(|t| t.clone().map(|c| format_rational(c.gap())))
                    .collect())
            }
            PointFile::Eisenstein(p) => Ok(lattice_triangle_classes(p)
                .into_iter()
                .map(|t| t.map(|v| v.to_string()))
                .collect()),
        }
    }
}

fn fields<const N: usize>(line: usize, body: &str) -> Result<[&str; N]> {
    let parts: Vec<&str> = body.split_whitespace().collect();
    parts
        .as_slice()
        .try_into()
        .map_err(|_| Error::parse(line, format!("expected {N} field(s), got {}", parts.len())))
}
