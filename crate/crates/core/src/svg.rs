//! SVG drawings of point configurations.
//!
//! The output depends only on the input: the bounding box is mapped onto a
//! fixed 600 x 600 canvas with a 10% margin, every coordinate is printed
//! with three decimals, and elements appear in index order.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::circle::CircleSite;
use crate::error::{Error, Result};
use crate::geometry::to_f64;
use crate::ground::lattice_to_cartesian;
use crate::pointfile::PointFile;

pub const CANVAS: f64 = 600.0;
pub const MARGIN: f64 = 0.1 * CANVAS;
pub const POINT_RADIUS: f64 = 4.0;

/// Drawing coordinates of each record, y pointing up.
pub fn layout(file: &PointFile) -> Vec<(f64, f64)> {
    match file {
        PointFile::Points(p) => p.iter().map(|q| (to_f64(&q.x), to_f64(&q.y))).collect(),
        PointFile::Circle { .. } => file
            .circle_sites()
            .iter()
            .map(|s| match s {
                CircleSite::Arc(f) => {
                    let t = TAU * to_f64(f);
                    (t.cos(), t.sin())
                }
                CircleSite::Center => (0.0, 0.0),
            })
            .collect(),
        PointFile::Eisenstein(p) => p.iter().map(|&(a, b)| lattice_to_cartesian(a, b)).collect(),
    }
}

fn fmt3(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// Maps drawing coordinates onto the canvas with a uniform scale, centering
/// the bounding box and flipping y.
fn to_canvas(pts: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let (mut x0, mut y0) = (f64::INFINITY, f64::INFINITY);
    let (mut x1, mut y1) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let inner = CANVAS - 2.0 * MARGIN;
    let scale = if span > 0.0 { inner / span } else { 1.0 };
    let ox = MARGIN + (inner - (x1 - x0) * scale) / 2.0;
    let oy = MARGIN + (inner - (y1 - y0) * scale) / 2.0;
    pts.iter()
        .map(|&(x, y)| (ox + (x - x0) * scale, CANVAS - (oy + (y - y0) * scale)))
        .collect()
}

pub fn render_svg(file: &PointFile) -> Result<String> {
    if file.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    file.validate()?;
    let pts = to_canvas(&layout(file));
    let n = pts.len();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 600 600">"#
    );
    let _ = writeln!(out, r#"<rect width="600" height="600" fill="white"/>"#);
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="1">"#);
    for i in 0..n {
        for j in i + 1..n {
            let dashed = (0..n).any(|k| k != i && k != j && file.collinear(i, j, k));
            let (a, b) = (pts[i], pts[j]);
            let _ = write!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}""#,
                fmt3(a.0),
                fmt3(a.1),
                fmt3(b.0),
                fmt3(b.1)
            );
            if dashed {
                out.push_str(r#" stroke-dasharray="6 4""#);
            }
            out.push_str("/>\n");
        }
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    for (x, y) in &pts {
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}"/>"#,
            fmt3(*x),
            fmt3(*y),
            POINT_RADIUS
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, tag: &str) -> usize {
        svg.matches(tag).count()
    }

    #[test]
    fn element_counts() {
        let hex = PointFile::parse("circle\n0\n1/6\n1/3\n1/2\n2/3\n5/6\n").unwrap();
        let s = render_svg(&hex).unwrap();
        assert_eq!(count(&s, "<circle "), 6);
        assert_eq!(count(&s, "<line "), 15);

        let sq = PointFile::parse("points\n0 0\n2 0\n2 2\n0 2\n1 1\n").unwrap();
        let s = render_svg(&sq).unwrap();
        assert_eq!(count(&s, "<circle "), 5);
        assert_eq!(count(&s, "<line "), 10);
        // the two diagonals pass through the center, four halves each dashed
        assert_eq!(count(&s, "stroke-dasharray"), 6);

        let tri = PointFile::parse("points\n0 0\n1 0\n0 1\n").unwrap();
        assert_eq!(count(&render_svg(&tri).unwrap(), "<line "), 3);
    }

    #[test]
    fn fits_canvas_with_margin() {
        let f = PointFile::parse("points\n-5 1\n5 1\n0 3\n").unwrap();
        let s = render_svg(&f).unwrap();
        assert!(s.contains(r#"cx="60.000""#));
        assert!(s.contains(r#"cx="540.000""#));
        assert!(!s.contains("-0.000"));
        assert_eq!(s, render_svg(&f).unwrap());
    }
}
