//! Exact counting of the distinct triangles determined by finite planar
//! point sets.
//!
//! Triangles are compared by their sorted squared side lengths over exact
//! rationals. Points on a common circle are handled through turn fractions
//! so that regular polygons stay exact, and small structured ground sets
//! can be searched exhaustively for configurations with few triangles.

pub mod circle;
pub mod commands;
pub mod congruence;
pub mod error;
pub mod geometry;
pub mod ground;
pub mod pointfile;
pub mod quad;
pub mod record;
pub mod search;
pub mod svg;
pub mod verify;

pub use circle::{
    chord_class, distinct_triangles_circle, nearest_integer_n2_over_12, ngon_triangle_count,
    partitions3, regular_ngon, ChordClass, CircleConfig, CircleSite, Partition3,
};
pub use congruence::{
    apply_isometry, configurations_congruent, configurations_similar, distinct_triangles,
    triangle_signature, RationalIsometry, Triangle, TriangleClassSet, TriangleSignature,
};
pub use error::{Error, Result};
pub use geometry::{
    in_convex_position, orientation, squared_distance, ConvexReport, Orientation, Point, QLength,
    Rational,
};
pub use ground::{build_ground_set, GroundKind, GroundSet};
pub use pointfile::PointFile;
pub use quad::{case_bound, classify_quad, CaseBound, QuadCase, QuadTag};
pub use search::{max_points_with_exactly, min_triangles, FRow, SearchOptions, SearchResult};
