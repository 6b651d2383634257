//! Pure planar geometry: distances, lines, segments and bounding boxes.
//!
//! Everything works in local planar meters. Projection from geographic
//! coordinates lives in [`crate::store`]; no function here applies any
//! tolerance fuzzing — comparisons against tolerances belong to callers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A planar position in meters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Euclidean distance to another point.
    pub fn distance(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }
}

/// A timestamped planar position, the unit of every stream in the crate.
///
/// `t` is seconds since an arbitrary epoch; within one trajectory timestamps
/// are strictly increasing. Coordinates are meters east/north of a local
/// origin.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TrackPoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl TrackPoint {
    pub fn new(t: f64, x: f64, y: f64) -> Self {
        TrackPoint { t, x, y }
    }

    pub fn pos(self) -> Point {
        Point::new(self.x, self.y)
    }

    pub fn is_finite(self) -> bool {
        self.t.is_finite() && self.x.is_finite() && self.y.is_finite()
    }
}

/// An infinite line through two distinct positions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    pub a: Point,
    pub b: Point,
}

impl Line {
    pub fn new(a: Point, b: Point) -> Self {
        Line { a, b }
    }
}

/// A finite segment. Zero-length segments are permitted only where an
/// operation explicitly allows them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub s: Point,
    pub e: Point,
}

impl Segment {
    pub fn new(s: Point, e: Point) -> Self {
        Segment { s, e }
    }

    pub fn bbox(self) -> BBox {
        BBox {
            min_x: self.s.x.min(self.e.x),
            min_y: self.s.y.min(self.e.y),
            max_x: self.s.x.max(self.e.x),
            max_y: self.s.y.max(self.e.y),
        }
    }
}

/// An axis-aligned bounding box, `min_x <= max_x` and `min_y <= max_y`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl BBox {
    pub fn new(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> Self {
        BBox { min_x, min_y, max_x, max_y }
    }

    /// Degenerate box covering a single point.
    pub fn of_point(p: Point) -> Self {
        BBox { min_x: p.x, min_y: p.y, max_x: p.x, max_y: p.y }
    }

    /// Grow the box (in place) to cover `p`.
    pub fn extend(&mut self, p: Point) {
        self.min_x = self.min_x.min(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_x = self.max_x.max(p.x);
        self.max_y = self.max_y.max(p.y);
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min_x && p.x <= self.max_x && p.y >= self.min_y && p.y <= self.max_y
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.min_x, self.min_y),
            Point::new(self.min_x, self.max_y),
            Point::new(self.max_x, self.max_y),
            Point::new(self.max_x, self.min_y),
        ]
    }
}

/// Perpendicular distance from `p` to the infinite line.
///
/// The line must be non-degenerate; a line whose defining positions coincide
/// is a contract violation.
pub fn point_to_line_distance(p: Point, line: Line) -> Result<f64> {
    let dx = line.b.x - line.a.x;
    let dy = line.b.y - line.a.y;
    if dx == 0.0 && dy == 0.0 {
        return Err(Error::invalid("degenerate line: a == b"));
    }
    let cross = dx * (p.y - line.a.y) - dy * (p.x - line.a.x);
    Ok(cross.abs() / (dx * dx + dy * dy).sqrt())
}

/// Minimum distance from `p` to any point of `seg`.
///
/// Zero-length segments are allowed and reduce to point distance. For a
/// non-degenerate segment the result is never below the distance to the
/// segment's carrier line.
pub fn point_to_segment_distance(p: Point, seg: Segment) -> f64 {
    let wx = seg.e.x - seg.s.x;
    let wy = seg.e.y - seg.s.y;
    let len2 = wx * wx + wy * wy;
    if len2 == 0.0 {
        return p.distance(seg.s);
    }
    let t = ((p.x - seg.s.x) * wx + (p.y - seg.s.y) * wy) / len2;
    let t = t.clamp(0.0, 1.0);
    p.distance(Point::new(seg.s.x + t * wx, seg.s.y + t * wy))
}

/// Symmetric distance between two segments: the maximum over all four
/// endpoint-to-opposite-segment distances.
pub fn segment_to_segment_distance(a: Segment, b: Segment) -> f64 {
    point_to_segment_distance(a.s, b)
        .max(point_to_segment_distance(a.e, b))
        .max(point_to_segment_distance(b.s, a))
        .max(point_to_segment_distance(b.e, a))
}

/// Distance from segment `tau` to the polyline through `points`, together
/// with the index of the nearest polyline segment.
///
/// For each consecutive pair of `points` the symmetric measure of
/// [`segment_to_segment_distance`] is evaluated; the minimizing segment wins,
/// ties going to the lowest index. `points` must contain at least two
/// entries.
pub fn segment_to_trajectory_distance(tau: Segment, points: &[TrackPoint]) -> Result<(f64, usize)> {
    if points.len() < 2 {
        return Err(Error::invalid("trajectory needs at least 2 points"));
    }
    let mut best = f64::INFINITY;
    let mut best_idx = 0usize;
    for i in 0..points.len() - 1 {
        let seg = Segment::new(points[i].pos(), points[i + 1].pos());
        let d = segment_to_segment_distance(tau, seg);
        if d < best {
            best = d;
            best_idx = i;
        }
    }
    Ok((best, best_idx))
}

/// Move every side of `b` outward by `delta` meters. `delta` must be
/// non-negative.
pub fn bbox_expand(b: BBox, delta: f64) -> Result<BBox> {
    if !(delta >= 0.0) {
        return Err(Error::invalid(format!("negative bbox expansion: {delta}")));
    }
    Ok(BBox {
        min_x: b.min_x - delta,
        min_y: b.min_y - delta,
        max_x: b.max_x + delta,
        max_y: b.max_y + delta,
    })
}

/// True iff the boxes share at least one point. Touching edges and corners
/// count as intersecting.
pub fn bbox_intersects(a: BBox, b: BBox) -> bool {
    a.min_x <= b.max_x && b.min_x <= a.max_x && a.min_y <= b.max_y && b.min_y <= a.max_y
}
