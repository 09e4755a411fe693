//! Plane-geometry primitives used by the tiling module: segment
//! intersection, convex clipping, polygon area, and point location.
//!
//! Coordinates come from sums of roots of unity, so everything is
//! well-conditioned; the tolerances below are fixed accordingly.

use std::fmt;

/// Tolerance for point identity (absolute, unit-circle scale).
pub const POINT_EPS: f64 = 1e-9;

/// Relative tolerance for collinearity / containment decisions.
pub const GEOM_REL_EPS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    pub fn sub(&self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    pub fn add(&self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }

    pub fn scale(&self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }

    pub fn dot(&self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(&self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(&self, o: Point) -> f64 {
        self.sub(o).norm()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.6}, {:.6})", self.x, self.y)
    }
}

/// Twice the signed area of triangle abc (positive when counterclockwise).
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    b.sub(a).cross(c.sub(a))
}

/// Distance from `p` to the closed segment `[a, b]`.
pub fn point_seg_dist(p: Point, a: Point, b: Point) -> f64 {
    let ab = b.sub(a);
    let len2 = ab.dot(ab);
    if len2 <= POINT_EPS * POINT_EPS {
        return p.dist(a);
    }
    let t = (p.sub(a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a.add(ab.scale(t)))
}

/// How two closed segments meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegMeet {
    Disjoint,
    At(Point),
    Overlap(Point, Point),
}

/// Classifies the intersection of segments `[p1, q1]` and `[p2, q2]` with
/// tolerance `eps` on the orientation tests.
pub fn seg_meet(p1: Point, q1: Point, p2: Point, q2: Point, eps: f64) -> SegMeet {
    let d1 = q1.sub(p1);
    let d2 = q2.sub(p2);
    let denom = d1.cross(d2);
    let o1 = orient(p1, q1, p2);
    let o2 = orient(p1, q1, q2);
    let o3 = orient(p2, q2, p1);
    let o4 = orient(p2, q2, q1);

    if o1.abs() <= eps && o2.abs() <= eps {
        // collinear: compare intervals along the dominant axis
        let axis_x = d1.x.abs().max(d2.x.abs()) >= d1.y.abs().max(d2.y.abs());
        let key = |p: Point| if axis_x { p.x } else { p.y };
        let (a1, b1) = minmax(key(p1), key(q1));
        let (a2, b2) = minmax(key(p2), key(q2));
        let lo = a1.max(a2);
        let hi = b1.min(b2);
        if lo > hi + eps {
            return SegMeet::Disjoint;
        }
        let at = |v: f64, a: Point, b: Point| -> Point {
            let ka = key(a);
            let kb = key(b);
            if (kb - ka).abs() <= eps {
                return a;
            }
            let t = ((v - ka) / (kb - ka)).clamp(0.0, 1.0);
            a.add(b.sub(a).scale(t))
        };
        let lo_pt = at(lo, p1, q1);
        let hi_pt = at(hi, p1, q1);
        if lo_pt.dist(hi_pt) <= eps {
            return SegMeet::At(lo_pt);
        }
        return SegMeet::Overlap(lo_pt, hi_pt);
    }

    let sgn = |v: f64| {
        if v > eps {
            1
        } else if v < -eps {
            -1
        } else {
            0
        }
    };
    let (s1, s2, s3, s4) = (sgn(o1), sgn(o2), sgn(o3), sgn(o4));
    let straddle = |a: i32, b: i32| a * b < 0 || a == 0 || b == 0;
    if straddle(s1, s2) && straddle(s3, s4) {
        if denom.abs() <= eps * eps {
            // nearly parallel; report an endpoint touch if there is one
            for (p, a, b) in [(p2, p1, q1), (q2, p1, q1), (p1, p2, q2), (q1, p2, q2)] {
                if point_seg_dist(p, a, b) <= eps {
                    return SegMeet::At(p);
                }
            }
            return SegMeet::Disjoint;
        }
        let w = p2.sub(p1);
        let t = (w.cross(d2) / denom).clamp(0.0, 1.0);
        let candidate = p1.add(d1.scale(t));
        if point_seg_dist(candidate, p2, q2) <= eps && point_seg_dist(candidate, p1, q1) <= eps {
            return SegMeet::At(candidate);
        }
        return SegMeet::Disjoint;
    }
    SegMeet::Disjoint
}

fn minmax(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Signed area of a polygon (shoelace; positive when counterclockwise).
pub fn polygon_signed_area(pts: &[Point]) -> f64 {
    let n = pts.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n {
        acc += pts[i].cross(pts[(i + 1) % n]);
    }
    acc / 2.0
}

pub fn polygon_area(pts: &[Point]) -> f64 {
    polygon_signed_area(pts).abs()
}

/// Reorders a polygon counterclockwise (no-op when already CCW).
pub fn ccw(pts: &[Point]) -> Vec<Point> {
    if polygon_signed_area(pts) < 0.0 {
        pts.iter().rev().copied().collect()
    } else {
        pts.to_vec()
    }
}

/// Clips `subject` against a convex `clip` polygon given in CCW order
/// (Sutherland-Hodgman). Points within `eps` of a clip edge are kept, so the
/// result includes the shared boundary.
pub fn convex_clip(subject: &[Point], clip: &[Point], eps: f64) -> Vec<Point> {
    let mut output: Vec<Point> = subject.to_vec();
    let m = clip.len();
    for i in 0..m {
        if output.is_empty() {
            return output;
        }
        let a = clip[i];
        let b = clip[(i + 1) % m];
        let input = std::mem::take(&mut output);
        let inside = |p: Point| orient(a, b, p) >= -eps;
        let k = input.len();
        for j in 0..k {
            let cur = input[j];
            let prev = input[(j + k - 1) % k];
            match (inside(prev), inside(cur)) {
                (true, true) => output.push(cur),
                (true, false) => {
                    if let Some(x) = line_seg_cross(a, b, prev, cur) {
                        output.push(x);
                    }
                }
                (false, true) => {
                    if let Some(x) = line_seg_cross(a, b, prev, cur) {
                        output.push(x);
                    }
                    output.push(cur);
                }
                (false, false) => {}
            }
        }
    }
    output
}

/// Intersection of the infinite line through `a, b` with the segment
/// `[p, q]` (the segment is known to straddle the line).
fn line_seg_cross(a: Point, b: Point, p: Point, q: Point) -> Option<Point> {
    let d = b.sub(a);
    let e = q.sub(p);
    let denom = d.cross(e);
    if denom.abs() < 1e-30 {
        return None;
    }
    let u = (p.sub(a).cross(d) / denom).clamp(0.0, 1.0);
    Some(p.add(e.scale(u)))
}

/// Largest pairwise distance among the points.
pub fn diameter(pts: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            best = best.max(pts[i].dist(pts[j]));
        }
    }
    best
}

/// Even-odd point-in-polygon test; points on the boundary should be handled
/// by the caller with a distance check first.
pub fn point_in_polygon(p: Point, poly: &[Point]) -> bool {
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Distance from `p` to the closed polyline through `pts` (cyclic).
pub fn dist_to_cycle(p: Point, pts: &[Point]) -> f64 {
    let n = pts.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        best = best.min(point_seg_dist(p, pts[i], pts[(i + 1) % n]));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn seg_meet_basic() {
        let eps = 1e-9;
        assert_eq!(
            seg_meet(pt(0.0, 0.0), pt(2.0, 2.0), pt(0.0, 2.0), pt(2.0, 0.0), eps),
            SegMeet::At(pt(1.0, 1.0))
        );
        assert_eq!(
            seg_meet(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0), pt(1.0, 1.0), eps),
            SegMeet::Disjoint
        );
        match seg_meet(pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 0.0), pt(3.0, 0.0), eps) {
            SegMeet::Overlap(a, b) => {
                assert!(a.dist(pt(1.0, 0.0)) < 1e-12 && b.dist(pt(2.0, 0.0)) < 1e-12);
            }
            other => panic!("expected overlap, got {other:?}"),
        }
        // shared endpoint only
        assert_eq!(
            seg_meet(pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 0.0), pt(2.0, 1.0), eps),
            SegMeet::At(pt(1.0, 0.0))
        );
        // T-touch: endpoint of one in the middle of the other
        assert_eq!(
            seg_meet(pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), eps),
            SegMeet::At(pt(1.0, 0.0))
        );
    }

    #[test]
    fn clip_squares() {
        let sq = |cx: f64, cy: f64| {
            vec![
                pt(cx - 1.0, cy - 1.0),
                pt(cx + 1.0, cy - 1.0),
                pt(cx + 1.0, cy + 1.0),
                pt(cx - 1.0, cy + 1.0),
            ]
        };
        let a = sq(0.0, 0.0);
        let b = sq(1.0, 0.0);
        let clipped = convex_clip(&a, &b, 1e-9);
        assert!((polygon_area(&clipped) - 2.0).abs() < 1e-9);

        let far = sq(5.0, 0.0);
        assert!(polygon_area(&convex_clip(&a, &far, 1e-9)) < 1e-12);

        // sharing exactly one edge: degenerate strip of zero area
        let adj = sq(2.0, 0.0);
        let strip = convex_clip(&a, &adj, 1e-9);
        assert!(polygon_area(&strip) < 1e-6);
        assert!(diameter(&strip) > 1.9);
    }

    #[test]
    fn point_location() {
        let tri = vec![pt(0.0, 0.0), pt(4.0, 0.0), pt(0.0, 4.0)];
        assert!(point_in_polygon(pt(1.0, 1.0), &tri));
        assert!(!point_in_polygon(pt(3.0, 3.0), &tri));
        assert!(dist_to_cycle(pt(2.0, 0.0), &tri) < 1e-12);
    }

    #[test]
    fn areas_and_orientation() {
        let sq = vec![pt(0.0, 0.0), pt(2.0, 0.0), pt(2.0, 2.0), pt(0.0, 2.0)];
        assert!((polygon_signed_area(&sq) - 4.0).abs() < 1e-12);
        let cw: Vec<Point> = sq.iter().rev().copied().collect();
        assert!((polygon_signed_area(&cw) + 4.0).abs() < 1e-12);
        assert!(polygon_signed_area(&ccw(&cw)) > 0.0);
    }
}
