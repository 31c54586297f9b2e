//! Reports produced by the command-line tool, with their text and JSON
//! renderings. Nothing here reads the clock, so output is reproducible.

use std::fmt::Write as _;

use serde::Serialize;

use crate::circle::{nearest_integer_n2_over_12, partitions3};
use crate::congruence::distinct_triangles;
use crate::error::{Error, Result};
use crate::ground::{build_ground_set, GroundKind, GroundSet};
use crate::pointfile::PointFile;
use crate::quad::{case_bound, classify_quad, QuadCase};
use crate::record::SCHEMA;
use crate::search::{max_points_with_exactly, min_triangles, SearchOptions};
use crate::verify::VerifyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub trait Report: Serialize {
    const COMMAND: &'static str;

    fn text(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }

    fn json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Envelope<'a, T: ?Sized> {
            schema: u32,
            command: &'static str,
            #[serde(flatten)]
            body: &'a T,
        }
        serde_json::to_value(Envelope {
            schema: SCHEMA,
            command: Self::COMMAND,
            body: self,
        })
        .expect("report serializes")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub format: &'static str,
    pub n: usize,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<[String; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

pub fn cmd_count(file: &PointFile, with_classes: bool) -> Result<CountReport> {
    let classes = file.triangle_classes()?;
    let count = classes.len();
    Ok(CountReport {
        format: file.header(),
        n: file.len(),
        count,
        classes: with_classes.then_some(classes),
        warning: (count == 0).then(|| "no noncollinear triple".to_string()),
    })
}

impl Report for CountReport {
    const COMMAND: &'static str = "count";

    fn text(&self) -> String {
        let mut s = format!("points: {}\ndistinct triangles: {}\n", self.n, self.count);
        if let Some(classes) = &self.classes {
            let unit = match self.format {
                "points" => "squared side lengths",
                "circle" => "chord gap fractions",
                _ => "lattice norms",
            };
            let _ = writeln!(s, "classes ({unit}):");
            for c in classes {
                let _ = writeln!(s, "  ({}, {}, {})", c[0], c[1], c[2]);
            }
        }
        if let Some(w) = &self.warning {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub case: QuadCase,
    pub bound: usize,
    pub actual: usize,
    pub bound_respected: bool,
}

pub fn cmd_classify(file: &PointFile) -> Result<ClassifyReport> {
    let pts = match file {
        PointFile::Points(p) => p,
        other => {
            return Err(Error::Unsupported(format!(
                "classify needs a points file, got a {} file",
                other.header()
            )))
        }
    };
    if pts.len() != 4 {
        return Err(Error::WrongCardinality {
            expected: 4,
            got: pts.len(),
        });
    }
    let case = classify_quad(pts)?;
    let bound = case_bound(case).min_distinct_triangles;
    let actual = distinct_triangles(pts)?.count();
    Ok(ClassifyReport {
        case,
        bound,
        actual,
        bound_respected: actual >= bound,
    })
}

impl Report for ClassifyReport {
    const COMMAND: &'static str = "classify";

    fn text(&self) -> String {
        format!(
            "case: {}\nbound: {}\nactual: {}\n{}",
            self.case,
            self.bound,
            self.actual,
            if self.bound_respected {
                ""
            } else {
                "warning: actual count is below the case bound\n"
            }
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NgonReport {
    pub n: u64,
    pub partitions: u64,
    pub nearest_n2_over_12: u64,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub listing: Option<Vec<[u64; 3]>>,
}

pub fn cmd_ngon(n: u64, list: bool) -> Result<NgonReport> {
    let parts: Vec<[u64; 3]> = partitions3(n)?.map(|p| [p.a, p.b, p.c]).collect();
    let nearest = nearest_integer_n2_over_12(n);
    Ok(NgonReport {
        n,
        partitions: parts.len() as u64,
        nearest_n2_over_12: nearest,
        agree: parts.len() as u64 == nearest,
        listing: list.then_some(parts),
    })
}

impl Report for NgonReport {
    const COMMAND: &'static str = "ngon";

    fn text(&self) -> String {
        let mut s = format!(
            "n: {}\npartitions into three parts: {}\nnearest integer to n^2/12: {}\nagree: {}\n",
            self.n, self.partitions, self.nearest_n2_over_12, self.agree
        );
        if let Some(list) = &self.listing {
            for p in list {
                let _ = writeln!(s, "  ({}, {}, {})", p[0], p[1], p[2]);
            }
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub sites: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SearchReport {
    Minimum {
        ground: GroundKind,
        n: usize,
        best_count: Option<usize>,
        witnesses: Vec<Witness>,
        nodes_explored: u64,
        exhaustive: bool,
        qualifier: String,
    },
    Exactly {
        ground: GroundKind,
        t: usize,
        max_n: Option<usize>,
        witnesses: Vec<Witness>,
        nodes_explored: u64,
        exhaustive: bool,
        qualifier: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchGoal {
    /// Fewest classes among subsets of this size.
    Size(usize),
    /// Largest subset with exactly this many classes.
    Exactly(usize),
}

fn witnesses(ground: &GroundSet, w: &[Vec<usize>]) -> Vec<Witness> {
    w.iter()
        .map(|idx| Witness {
            indices: idx.clone(),
            sites: ground.labels(idx),
        })
        .collect()
}

fn qualifier(kind: GroundKind, exhaustive: bool) -> String {
    if exhaustive {
        format!("exhaustive over {kind} only; evidence, not proof")
    } else {
        format!("truncated by the node budget; not exhaustive over {kind}")
    }
}

pub fn cmd_search(
    kind: GroundKind,
    goal: SearchGoal,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    let ground = build_ground_set(kind)?;
    Ok(match goal {
        SearchGoal::Size(n) => {
            let r = min_triangles(&ground, n, opts)?;
            SearchReport::Minimum {
                ground: kind,
                n,
                best_count: r.best_count,
                witnesses: witnesses(&ground, &r.witnesses),
                nodes_explored: r.nodes_explored,
                exhaustive: r.exhaustive,
                qualifier: qualifier(kind, r.exhaustive),
            }
        }
        SearchGoal::Exactly(t) => {
            if t == 0 {
                return Err(Error::InvalidParameter("--exactly needs t >= 1".into()));
            }
            let r = max_points_with_exactly(&ground, t, opts)?;
            SearchReport::Exactly {
                ground: kind,
                t,
                max_n: r.max_n,
                witnesses: witnesses(&ground, &r.witnesses),
                nodes_explored: r.nodes_explored,
                exhaustive: r.exhaustive,
                qualifier: qualifier(kind, r.exhaustive),
            }
        }
    })
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "none".to_string(), |x| x.to_string())
}

impl Report for SearchReport {
    const COMMAND: &'static str = "search";

    fn text(&self) -> String {
        let mut s = String::new();
        let (ws, nodes, qual) = match self {
            SearchReport::Minimum {
                ground,
                n,
                best_count,
                witnesses,
                nodes_explored,
                qualifier,
                ..
            } => {
                let _ = writeln!(
                    s,
                    "ground: {ground}\nn: {n}\nbest count: {}",
                    opt(best_count)
                );
                (witnesses, nodes_explored, qualifier)
            }
            SearchReport::Exactly {
                ground,
                t,
                max_n,
                witnesses,
                nodes_explored,
                qualifier,
                ..
            } => {
                let _ = writeln!(
                    s,
                    "ground: {ground}\nexactly {t} classes\nmax points: {}\nwitnesses are up to similarity",
                    opt(max_n)
                );
                (witnesses, nodes_explored, qualifier)
            }
        };
        for w in ws {
            let _ = writeln!(s, "witness: {}", w.sites.join(" "));
        }
        let _ = writeln!(s, "nodes explored: {nodes}\n{qual}");
        s
    }
}

impl Report for VerifyReport {
    const COMMAND: &'static str = "verify";

    fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(s, "{mark} {}", c.name);
            } else {
                let _ = writeln!(s, "{mark} {}: {}", c.name, c.detail);
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(
            s,
            "suite {}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            failed
        );
        s
    }
}
