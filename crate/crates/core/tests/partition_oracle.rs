//! Independent oracles for partitions into three parts and the regular
//! polygon count.

use std::collections::BTreeSet;

use distinct_triangles::circle::{circle_triangle, CircleSite};
use distinct_triangles::geometry::rat;
use distinct_triangles::*;

/// Pairs `k < l` of `{1, .., n}` with `k >= l - k >= n - l > 0`, counted
/// with explicit loop bounds.
fn pairs_by_bounds(n: u64) -> u64 {
    let mut total = 0;
    for k in n.div_ceil(3)..=n.saturating_sub(2) {
        let lo = k + (n - k).div_ceil(2);
        let hi = (2 * k).min(n - 1);
        if hi >= lo {
            total += hi - lo + 1;
        }
    }
    total
}

fn pairs_by_filter(n: u64) -> u64 {
    let mut total = 0;
    for k in 1..=n {
        for l in k + 1..=n {
            if k >= l - k && l - k >= n - l && n - l > 0 {
                total += 1;
            }
        }
    }
    total
}

#[test]
fn loop_bounds_match_the_defining_inequalities() {
    for n in 3..=300 {
        assert_eq!(pairs_by_bounds(n), pairs_by_filter(n), "n={n}");
    }
}

#[test]
fn partitions_match_both_oracles() {
    for n in 3..=2000u64 {
        let p = partitions3(n).unwrap().count() as u64;
        assert_eq!(p, pairs_by_bounds(n), "n={n}");
        assert_eq!(p, nearest_integer_n2_over_12(n), "n={n}");
    }
}

#[test]
fn partitions_are_sorted_descending_and_lexicographic() {
    for n in 3..=60u64 {
        let list: Vec<Partition3> = partitions3(n).unwrap().collect();
        for p in &list {
            assert!(p.a >= p.b && p.b >= p.c && p.c >= 1);
            assert_eq!(p.sum(), n);
        }
        let keys: Vec<_> = list.iter().map(|p| (p.a, p.b, p.c)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted, "n={n}");
    }
}

#[test]
fn nine_has_seven_partitions() {
    let list: Vec<_> = partitions3(9).unwrap().map(|p| (p.a, p.b, p.c)).collect();
    assert_eq!(
        list,
        vec![
            (3, 3, 3),
            (4, 3, 2),
            (4, 4, 1),
            (5, 2, 2),
            (5, 3, 1),
            (6, 2, 1),
            (7, 1, 1)
        ]
    );
}

/// Classes of the regular n-gon as multisets of arc lengths, by brute force
/// over all triples.
fn arc_classes(n: u64) -> BTreeSet<[u64; 3]> {
    let mut set = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut arcs = [j - i, k - j, n - k + i];
                arcs.sort_unstable();
                set.insert(arcs);
            }
        }
    }
    set
}

#[test]
fn ngon_count_matches_arc_multisets() {
    for n in 3..=60 {
        let c = distinct_triangles_circle(&regular_ngon(n as usize).unwrap())
            .unwrap()
            .count();
        assert_eq!(c, arc_classes(n).len(), "n={n}");
    }
}

#[test]
fn triangles_through_one_vertex_give_every_class() {
    for n in 3..=40usize {
        let cfg = regular_ngon(n).unwrap();
        let all: BTreeSet<_> = distinct_triangles_circle(&cfg)
            .unwrap()
            .classes()
            .cloned()
            .collect();
        let zero = CircleSite::Arc(rat(0, 1));
        let mut through_zero = BTreeSet::new();
        for a in 1..n {
            for b in a + 1..n {
                let t = circle_triangle(
                    &zero,
                    &CircleSite::Arc(rat(a as i64, n as i64)),
                    &CircleSite::Arc(rat(b as i64, n as i64)),
                )
                .expect("polygon vertices are never collinear");
                through_zero.insert(t);
            }
        }
        assert_eq!(through_zero, all, "n={n}");
    }
}

#[test]
fn vertex_pairs_map_to_partitions() {
    let n = 9;
    let p = Partition3::from_vertices(n, 4, 7).unwrap();
    assert_eq!((p.a, p.b, p.c), (4, 3, 2));
    let p = Partition3::from_vertices(n, 6, 8).unwrap();
    assert_eq!((p.a, p.b, p.c), (6, 2, 1));
}
