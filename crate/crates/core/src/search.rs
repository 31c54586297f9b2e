//! Depth-first subset search over a ground set.
//!
//! Subsets are grown in canonical site order while a per-class multiplicity
//! table tracks the running number of distinct triangles. Adding points
//! never removes a class, so the running count bounds every completion from
//! below and any branch whose count is already too large is cut.

use rayon::prelude::*;
use serde::Serialize;

use crate::circle::nearest_integer_n2_over_12;
use crate::error::{Error, Result};
use crate::ground::{build_ground_set, GroundKind, GroundSet, COLLINEAR};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop after this many search nodes; the result is then not exhaustive.
    pub budget: Option<u64>,
    /// Keep at most this many pairwise non-equivalent witnesses.
    pub max_witnesses: usize,
    /// Disable to enumerate every subset (reference mode for testing).
    pub prune: bool,
    /// Worker threads; 1 is the sequential reference. A budgeted search
    /// always runs sequentially so the budget means the same thing.
    pub jobs: usize,
    /// Skip subsets whose points all lie on one line.
    pub noncollinear_only: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: None,
            max_witnesses: 4,
            prune: true,
            jobs: 1,
            noncollinear_only: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub ground: GroundKind,
    pub n: usize,
    /// `None` only when the budget ran out before any full subset was seen.
    pub best_count: Option<usize>,
    /// Site indices, ascending, lexicographically earliest first.
    pub witnesses: Vec<Vec<usize>>,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FRow {
    pub t: usize,
    pub ground: GroundKind,
    /// Largest subset size with exactly `t` classes, if any.
    pub max_n: Option<usize>,
    /// Witnesses of size `max_n`, pairwise non-similar.
    pub witnesses: Vec<Vec<usize>>,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

enum Step {
    Descend,
    Prune,
}

struct Walker<'g> {
    ground: &'g GroundSet,
    chosen: Vec<usize>,
    counts: Vec<u32>,
    distinct: usize,
    nodes: u64,
    budget: Option<u64>,
    truncated: bool,
}

impl<'g> Walker<'g> {
    fn new(ground: &'g GroundSet, budget: Option<u64>) -> Self {
        Walker {
            ground,
            chosen: Vec::new(),
            counts: vec![0; ground.class_count()],
            distinct: 0,
            nodes: 0,
            budget,
            truncated: false,
        }
    }

    fn push(&mut self, site: usize) {
        let m = self.chosen.len();
        for a in 0..m {
            for b in a + 1..m {
                let c = self.ground.class_of(self.chosen[a], self.chosen[b], site);
                if c != COLLINEAR {
                    let slot = &mut self.counts[c as usize];
                    if *slot == 0 {
                        self.distinct += 1;
                    }
                    *slot += 1;
                }
            }
        }
        self.chosen.push(site);
        self.nodes += 1;
    }

    fn pop(&mut self) {
        let site = self.chosen.pop().expect("pop on empty walker");
        let m = self.chosen.len();
        for a in 0..m {
            for b in a + 1..m {
                let c = self.ground.class_of(self.chosen[a], self.chosen[b], site);
                if c != COLLINEAR {
                    let slot = &mut self.counts[c as usize];
                    *slot -= 1;
                    if *slot == 0 {
                        self.distinct -= 1;
                    }
                }
            }
        }
    }

    /// Visits subsets extending `chosen` with sites `>= start`, up to
    /// `depth` points. Returns false once the walk must stop.
    fn walk<F>(&mut self, start: usize, depth: usize, visit: &mut F) -> bool
    where
        F: FnMut(&[usize], usize) -> Step,
    {
        let n = self.ground.len();
        if self.chosen.len() >= depth {
            return true;
        }
        for site in start..n {
            if let Some(b) = self.budget {
                if self.nodes >= b {
                    self.truncated = true;
                    return false;
                }
            }
            self.push(site);
            let step = visit(&self.chosen, self.distinct);
            let go_on = match step {
                Step::Prune => true,
                Step::Descend => {
                    if self.chosen.len() < depth {
                        self.walk(site + 1, depth, visit)
                    } else {
                        true
                    }
                }
            };
            self.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

struct Best {
    count: Option<usize>,
    witnesses: Vec<Vec<usize>>,
}

impl Best {
    fn offer(&mut self, ground: &GroundSet, subset: &[usize], count: usize, cap: usize) {
        match self.count {
            Some(b) if count > b => {}
            Some(b) if count == b => {
                if self.witnesses.len() < cap
                    && !self
                        .witnesses
                        .iter()
                        .any(|w| ground.equivalent(w, subset, false))
                {
                    self.witnesses.push(subset.to_vec());
                }
            }
            _ => {
                self.count = Some(count);
                self.witnesses = if cap > 0 {
                    vec![subset.to_vec()]
                } else {
                    vec![]
                };
            }
        }
    }

    fn full(&self, cap: usize) -> bool {
        self.witnesses.len() >= cap
    }
}

/// One depth-first pass over subsets of size `n` whose first site lies in
/// `firsts`.
fn min_walk(
    ground: &GroundSet,
    n: usize,
    firsts: std::ops::Range<usize>,
    opts: &SearchOptions,
) -> (Best, u64, bool) {
    let mut best = Best {
        count: None,
        witnesses: Vec::new(),
    };
    let mut walker = Walker::new(ground, opts.budget);
    let size = ground.len();
    let cap = opts.max_witnesses.max(1);
    let mut visit = |chosen: &[usize], distinct: usize| -> Step {
        if opts.prune {
            if let Some(b) = best.count {
                if distinct > b || (distinct == b && best.full(cap)) {
                    return Step::Prune;
                }
            }
        }
        let len = chosen.len();
        if len == n {
            // with at least three points, no class means all collinear
            if opts.noncollinear_only && distinct == 0 {
                return Step::Prune;
            }
            best.offer(ground, chosen, distinct, cap);
            return Step::Prune;
        }
        // not enough sites left to reach n
        let last = *chosen.last().expect("nonempty");
        if size - last - 1 < n - len {
            return Step::Prune;
        }
        Step::Descend
    };
    for first in firsts {
        if size - first < n {
            break;
        }
        if let Some(b) = walker.budget {
            if walker.nodes >= b {
                walker.truncated = true;
                break;
            }
        }
        walker.push(first);
        let cont = match visit(&walker.chosen, walker.distinct) {
            Step::Descend => walker.walk(first + 1, n, &mut visit),
            Step::Prune => true,
        };
        walker.pop();
        if !cont {
            break;
        }
    }
    let truncated = walker.truncated;
    let nodes = walker.nodes;
    (best, nodes, truncated)
}

pub fn min_triangles(ground: &GroundSet, n: usize, opts: &SearchOptions) -> Result<SearchResult> {
    if n > ground.len() {
        return Err(Error::InvalidParameter(format!(
            "subset size {n} exceeds the {} sites of {}",
            ground.len(),
            ground.kind()
        )));
    }
    if n == 0 {
        return Ok(SearchResult {
            ground: ground.kind(),
            n,
            best_count: Some(0),
            witnesses: vec![vec![]],
            nodes_explored: 0,
            exhaustive: true,
        });
    }
    let cap = opts.max_witnesses.max(1);
    let firsts = ground.len() - n + 1;

    let (best, nodes, truncated) = if opts.jobs <= 1 || opts.budget.is_some() {
        min_walk(ground, n, 0..firsts, opts)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        let parts: Vec<(Best, u64, bool)> = pool.install(|| {
            (0..firsts)
                .into_par_iter()
                .map(|f| min_walk(ground, n, f..f + 1, opts))
                .collect()
        });
        let global = parts.iter().filter_map(|p| p.0.count).min();
        let mut merged = Best {
            count: global,
            witnesses: Vec::new(),
        };
        let mut nodes = 0;
        let mut truncated = false;
        for (b, k, t) in parts {
            nodes += k;
            truncated |= t;
            if b.count != global {
                continue;
            }
            for w in b.witnesses {
                if merged.witnesses.len() < cap
                    && !merged
                        .witnesses
                        .iter()
                        .any(|x| ground.equivalent(x, &w, false))
                {
                    merged.witnesses.push(w);
                }
            }
        }
        (merged, nodes, truncated)
    };

    Ok(SearchResult {
        ground: ground.kind(),
        n,
        best_count: best.count,
        witnesses: best.witnesses,
        nodes_explored: nodes,
        exhaustive: !truncated,
    })
}

/// Largest subset determining exactly `t` distinct triangles.
pub fn max_points_with_exactly(ground: &GroundSet, t: usize, opts: &SearchOptions) -> Result<FRow> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let cap = opts.max_witnesses.max(1);
    let size = ground.len();
    // per subset size: witnesses with exactly t classes, pairwise non-similar
    let mut found: Vec<Vec<Vec<usize>>> = vec![Vec::new(); size + 1];
    let mut walker = Walker::new(ground, opts.budget);
    let mut visit = |chosen: &[usize], distinct: usize| -> Step {
        if distinct > t {
            return Step::Prune;
        }
        if distinct == t {
            let slot = &mut found[chosen.len()];
            if slot.len() < cap && !slot.iter().any(|w| ground.equivalent(w, chosen, true)) {
                slot.push(chosen.to_vec());
            }
        }
        Step::Descend
    };
    walker.walk(0, size, &mut visit);

    let max_n = (3..=size).rev().find(|&m| !found[m].is_empty());
    Ok(FRow {
        t,
        ground: ground.kind(),
        max_n,
        witnesses: max_n
            .map(|m| std::mem::take(&mut found[m]))
            .unwrap_or_default(),
        nodes_explored: walker.nodes,
        exhaustive: !walker.truncated,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conjecture {
    /// Every seven points determine at least four classes.
    SevenPoints,
    /// The regular n-gon minimizes the class count among n-point sets.
    RegularPolygonOptimal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvidenceRow {
    pub ground: GroundKind,
    pub n: usize,
    pub min_found: Option<usize>,
    pub required: usize,
    pub holds: bool,
    pub exhaustive: bool,
    /// For circle grounds whose division count is a multiple of `n`: whether
    /// the regular n-gon inside the ground attains `required` exactly.
    pub ngon_attains: Option<bool>,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvidenceReport {
    pub conjecture: Conjecture,
    pub rows: Vec<EvidenceRow>,
    pub all_hold: bool,
    pub qualifier: String,
}

fn evidence_row(
    ground: &GroundSet,
    n: usize,
    required: usize,
    opts: &SearchOptions,
) -> Result<EvidenceRow> {
    // both conjectures concern point sets that are not all collinear
    let opts = SearchOptions {
        noncollinear_only: true,
        ..opts.clone()
    };
    let r = min_triangles(ground, n, &opts)?;
    let ngon_attains = match ground.kind() {
        GroundKind::CircleDivisions { d, .. } if d % n == 0 => {
            let ngon: Vec<usize> = (0..n).map(|j| j * (d / n)).collect();
            Some(ground.recount(&ngon) == required)
        }
        _ => None,
    };
    let holds = r.best_count.is_some_and(|b| b >= required);
    Ok(EvidenceRow {
        ground: ground.kind(),
        n,
        min_found: r.best_count,
        required,
        holds,
        exhaustive: r.exhaustive,
        ngon_attains,
        witness: r
            .witnesses
            .first()
            .map(|w| ground.labels(w))
            .unwrap_or_default(),
    })
}

fn qualifier(grounds: &[GroundKind]) -> String {
    let names: Vec<String> = grounds.iter().map(|g| g.to_string()).collect();
    format!(
        "exhaustive over the subsets of {} that are not all collinear; evidence, not proof",
        names.join(", ")
    )
}

pub fn seven_points_evidence(
    grounds: &[GroundKind],
    opts: &SearchOptions,
) -> Result<EvidenceReport> {
    let mut rows = Vec::new();
    for &kind in grounds {
        let g = build_ground_set(kind)?;
        rows.push(evidence_row(&g, 7, 4, opts)?);
    }
    let all_hold = rows.iter().all(|r| r.holds && r.exhaustive);
    Ok(EvidenceReport {
        conjecture: Conjecture::SevenPoints,
        rows,
        all_hold,
        qualifier: qualifier(grounds),
    })
}

pub fn regular_polygon_evidence(
    grounds: &[GroundKind],
    ns: &[usize],
    opts: &SearchOptions,
) -> Result<EvidenceReport> {
    let mut rows = Vec::new();
    for &kind in grounds {
        let g = build_ground_set(kind)?;
        for &n in ns {
            if n < 3 || n > g.len() {
                continue;
            }
            let required = nearest_integer_n2_over_12(n as u64) as usize;
            rows.push(evidence_row(&g, n, required, opts)?);
        }
    }
    let all_hold = rows
        .iter()
        .all(|r| r.holds && r.exhaustive && r.ngon_attains != Some(false));
    Ok(EvidenceReport {
        conjecture: Conjecture::RegularPolygonOptimal,
        rows,
        all_hold,
        qualifier: qualifier(grounds),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::build_ground_set;

    fn circle(d: usize, with_center: bool) -> GroundSet {
        build_ground_set(GroundKind::CircleDivisions { d, with_center }).unwrap()
    }

    #[test]
    fn hexagon_is_optimal_in_twelve_divisions() {
        let g = circle(12, false);
        let r = min_triangles(&g, 6, &SearchOptions::default()).unwrap();
        assert_eq!(r.best_count, Some(3));
        assert!(r.exhaustive);
        let hexagon = [0, 2, 4, 6, 8, 10];
        assert!(r.witnesses.iter().any(|w| g.equivalent(w, &hexagon, false)));
    }

    #[test]
    fn square_in_small_grid() {
        let g = build_ground_set(GroundKind::RationalGrid { k: 2 }).unwrap();
        let r = min_triangles(&g, 4, &SearchOptions::default()).unwrap();
        assert_eq!(r.best_count, Some(1));
        assert_eq!(r.witnesses, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn pentagon_in_ten_divisions() {
        let g = circle(10, false);
        let r = min_triangles(&g, 5, &SearchOptions::default()).unwrap();
        assert_eq!(r.best_count, Some(2));
        assert!(r
            .witnesses
            .iter()
            .any(|w| g.equivalent(w, &[0, 2, 4, 6, 8], false)));
    }

    #[test]
    fn oversized_request_is_an_error() {
        let g = circle(5, false);
        assert!(min_triangles(&g, 6, &SearchOptions::default()).is_err());
    }

    #[test]
    fn tiny_subsets() {
        let g = circle(5, false);
        let r = min_triangles(&g, 2, &SearchOptions::default()).unwrap();
        assert_eq!(r.best_count, Some(0));
        let r = min_triangles(&g, 0, &SearchOptions::default()).unwrap();
        assert_eq!(r.best_count, Some(0));
    }

    #[test]
    fn budget_truncates() {
        let g = circle(12, false);
        let opts = SearchOptions {
            budget: Some(10),
            ..SearchOptions::default()
        };
        let r = min_triangles(&g, 6, &opts).unwrap();
        assert!(!r.exhaustive);
        assert!(r.nodes_explored <= 10);
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let g = circle(14, true);
        let seq = min_triangles(&g, 6, &SearchOptions::default()).unwrap();
        let par = min_triangles(
            &g,
            6,
            &SearchOptions {
                jobs: 4,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        assert_eq!(seq.best_count, par.best_count);
        for w in &par.witnesses {
            assert!(seq.witnesses.iter().any(|s| g.equivalent(s, w, false)));
        }
    }

    #[test]
    fn max_points_single_class_in_grid() {
        let g = build_ground_set(GroundKind::RationalGrid { k: 4 }).unwrap();
        let row = max_points_with_exactly(&g, 1, &SearchOptions::default()).unwrap();
        assert_eq!(row.max_n, Some(4));
        assert!(row.exhaustive);
        assert_eq!(row.witnesses[0], vec![0, 1, 4, 5]);
    }

    #[test]
    fn max_points_rejects_zero() {
        let g = circle(6, false);
        assert!(max_points_with_exactly(&g, 0, &SearchOptions::default()).is_err());
    }

    #[test]
    fn evidence_flags_regular_polygon() {
        let r = regular_polygon_evidence(
            &[GroundKind::CircleDivisions {
                d: 10,
                with_center: false,
            }],
            &[5],
            &SearchOptions::default(),
        )
        .unwrap();
        assert!(r.all_hold);
        assert_eq!(r.rows[0].min_found, Some(2));
        assert_eq!(r.rows[0].ngon_attains, Some(true));
        assert!(r.qualifier.contains("evidence"));
    }
}
