//! The planar bicolored tiling of a separated collection: the root-of-unity
//! embedding, white and black cells from cliques, complex validation, the
//! necklace curve with its inside region, the fill-in criterion, and SVG
//! rendering.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use crate::cyclic::{neighbors, Ground, Subset};
use crate::error::{Error, Result};
use crate::geom::{
    ccw, convex_clip, diameter, dist_to_cycle, orient, point_in_polygon, polygon_area,
    polygon_signed_area, Point, SegMeet, GEOM_REL_EPS, POINT_EPS,
};
use crate::necklace::{GeneralizedNecklace, Necklace};
use crate::regions::Collection;

/// The k-th of the clockwise-ordered n-th roots of unity; k = n sits at the
/// top of the circle and increasing k moves clockwise.
pub fn unit_vector(k: usize, n: usize) -> Point {
    let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
    Point::new(theta.sin(), theta.cos())
}

/// The embedded point of a subset: the sum of the unit vectors of its
/// elements. The empty set and the full set both land on the origin.
pub fn embed(x: &Subset) -> Point {
    let n = x.n();
    let mut p = Point::new(0.0, 0.0);
    for e in x.elems() {
        p = p.add(unit_vector(e, n));
    }
    p
}

fn scale_of(points: impl Iterator<Item = Point>) -> f64 {
    let mut s = 1.0f64;
    for p in points {
        s = s.max(p.norm());
    }
    s
}

/// A closed polygonal curve through embedded subsets, in sequence order.
#[derive(Debug, Clone)]
pub struct Curve {
    pts: Vec<Point>,
    source: Vec<Subset>,
}

impl Curve {
    /// The closed polyline through the embedded sets, in the given cyclic
    /// order. No validation happens here; see [`Curve::check_simple`].
    pub fn through(sets: &[Subset]) -> Curve {
        Curve { pts: sets.iter().map(embed).collect(), source: sets.to_vec() }
    }

    pub fn points(&self) -> &[Point] {
        &self.pts
    }

    pub fn source(&self) -> &[Subset] {
        &self.source
    }

    pub fn scale(&self) -> f64 {
        scale_of(self.pts.iter().copied())
    }

    /// Simplicity: consecutive segments meet only at their shared endpoint
    /// and non-consecutive segments do not meet at all. Returns a witness
    /// description on failure.
    pub fn check_simple(&self) -> std::result::Result<(), String> {
        let m = self.pts.len();
        if m <= 1 {
            return Ok(());
        }
        if m == 2 {
            // degenerate two-point cycle: fine as long as the points differ
            return if self.pts[0].dist(self.pts[1]) > POINT_EPS {
                Ok(())
            } else {
                Err("consecutive curve vertices coincide".into())
            };
        }
        for i in 0..m {
            if self.pts[i].dist(self.pts[(i + 1) % m]).abs() <= POINT_EPS {
                return Err(format!(
                    "curve vertices {} and {} coincide",
                    self.source[i],
                    self.source[(i + 1) % m]
                ));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let adjacent = j == i + 1 || (i == 0 && j == m - 1);
                let (a1, b1) = (self.pts[i], self.pts[(i + 1) % m]);
                let (a2, b2) = (self.pts[j], self.pts[(j + 1) % m]);
                match crate::geom::seg_meet(a1, b1, a2, b2, POINT_EPS) {
                    SegMeet::Disjoint => {}
                    SegMeet::At(p) => {
                        if adjacent {
                            let shared = if j == i + 1 { b1 } else { a1 };
                            if p.dist(shared) > POINT_EPS {
                                return Err(format!(
                                    "segments {}-{} and {}-{} cross at {p}",
                                    self.source[i],
                                    self.source[(i + 1) % m],
                                    self.source[j],
                                    self.source[(j + 1) % m]
                                ));
                            }
                        } else {
                            return Err(format!(
                                "segments {}-{} and {}-{} meet at {p}",
                                self.source[i],
                                self.source[(i + 1) % m],
                                self.source[j],
                                self.source[(j + 1) % m]
                            ));
                        }
                    }
                    SegMeet::Overlap(p, q) => {
                        return Err(format!(
                            "segments {}-{} and {}-{} overlap between {p} and {q}",
                            self.source[i],
                            self.source[(i + 1) % m],
                            self.source[j],
                            self.source[(j + 1) % m]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_simple(&self) -> bool {
        self.check_simple().is_ok()
    }

    /// Closed-region membership: points within the containment tolerance of
    /// the curve count as inside.
    pub fn contains(&self, p: Point) -> bool {
        let tol = GEOM_REL_EPS * self.scale();
        if dist_to_cycle(p, &self.pts) <= tol {
            return true;
        }
        point_in_polygon(p, &self.pts)
    }

    /// Area enclosed by the curve.
    pub fn area(&self) -> f64 {
        polygon_area(&self.pts)
    }
}

/// The curve of a connected Grassmann necklace. Non-simplicity would
/// contradict what the library asserts about necklaces, so it surfaces as a
/// property violation rather than a validation error.
pub fn necklace_curve(nk: &Necklace) -> Result<Curve> {
    if !nk.is_connected() {
        return Err(Error::InvalidInput(format!(
            "necklace {nk} repeats a member; its curve needs all members distinct"
        )));
    }
    let curve = Curve::through(nk.sets());
    if let Err(witness) = curve.check_simple() {
        return Err(Error::Property(format!(
            "necklace curve of {nk} is not simple: {witness}"
        )));
    }
    Ok(curve)
}

/// The curve of an already-validated generalized necklace.
pub fn generalized_curve(k: &GeneralizedNecklace) -> Curve {
    Curve::through(k.sets())
}

/// The plabic tiling of a separated collection: embedded vertices, white
/// cells indexed by their (r-1)-set core, black cells indexed by their
/// (r+1)-set hull, and the edge set.
#[derive(Debug, Clone)]
pub struct Tiling {
    ground: Ground,
    vertices: BTreeMap<Subset, Point>,
    edges: BTreeSet<(Subset, Subset)>,
    white: BTreeMap<Subset, Vec<Subset>>,
    black: BTreeMap<Subset, Vec<Subset>>,
}

impl Tiling {
    /// Builds the tiling. Fails on a non-separated collection; reports a
    /// property violation if two members embed onto the same point (which
    /// separation rules out).
    pub fn build(c: &Collection) -> Result<Tiling> {
        if !c.is_separated() {
            return Err(Error::InvalidInput(
                "the collection is not weakly separated; no tiling exists".into(),
            ));
        }
        let members = c.to_vec();
        let mut vertices = BTreeMap::new();
        for m in &members {
            vertices.insert(*m, embed(m));
        }
        let verts: Vec<(Subset, Point)> = vertices.iter().map(|(s, p)| (*s, *p)).collect();
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if verts[i].1.dist(verts[j].1) <= POINT_EPS {
                    return Err(Error::Property(format!(
                        "members {} and {} embed onto the same point",
                        verts[i].0, verts[j].0
                    )));
                }
            }
        }

        // white cliques: keyed by X - {a}; black cliques: keyed by X + {b}
        let mut white: BTreeMap<Subset, Vec<Subset>> = BTreeMap::new();
        let mut black: BTreeMap<Subset, Vec<Subset>> = BTreeMap::new();
        let mut white_keys: BTreeSet<Subset> = BTreeSet::new();
        let mut black_keys: BTreeSet<Subset> = BTreeSet::new();
        for m in &members {
            for a in m.elems() {
                white_keys.insert(m.without(a));
            }
            for b in 1..=c.ground().n() {
                if !m.contains(b) {
                    black_keys.insert(m.with(b));
                }
            }
        }
        for key in white_keys {
            let clique: Vec<Subset> =
                members.iter().copied().filter(|m| key.is_subset_of(m)).collect();
            if clique.len() >= 3 {
                white.insert(key, order_white(key, clique));
            }
        }
        for key in black_keys {
            let clique: Vec<Subset> =
                members.iter().copied().filter(|m| m.is_subset_of(&key)).collect();
            if clique.len() >= 3 {
                black.insert(key, order_black(key, clique));
            }
        }

        let mut edges: BTreeSet<(Subset, Subset)> = BTreeSet::new();
        for cell in white.values().chain(black.values()) {
            let k = cell.len();
            for t in 0..k {
                edges.insert(edge_key(cell[t], cell[(t + 1) % k]));
            }
        }
        // lone neighbor pairs whose shared core and hull cliques are exactly
        // the pair itself
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let (x, y) = (members[i], members[j]);
                if !neighbors(&x, &y) {
                    continue;
                }
                let core = x.inter(&y);
                let hull = x.union(&y);
                let w: Vec<Subset> =
                    members.iter().copied().filter(|m| core.is_subset_of(m)).collect();
                let b: Vec<Subset> =
                    members.iter().copied().filter(|m| m.is_subset_of(&hull)).collect();
                if w.len() == 2 && b.len() == 2 {
                    edges.insert(edge_key(x, y));
                }
            }
        }

        Ok(Tiling { ground: c.ground(), vertices, edges, white, black })
    }

    pub fn ground(&self) -> Ground {
        self.ground
    }

    pub fn vertices(&self) -> &BTreeMap<Subset, Point> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Subset, Subset)> {
        &self.edges
    }

    pub fn white_cells(&self) -> &BTreeMap<Subset, Vec<Subset>> {
        &self.white
    }

    pub fn black_cells(&self) -> &BTreeMap<Subset, Vec<Subset>> {
        &self.black
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.white.len() + self.black.len()
    }

    /// V - E + F; equals 1 exactly when the tiling is a disk.
    pub fn euler(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// All two-dimensional cells: (is_white, key, boundary members).
    pub fn cells(&self) -> impl Iterator<Item = (bool, &Subset, &Vec<Subset>)> {
        self.white
            .iter()
            .map(|(k, v)| (true, k, v))
            .chain(self.black.iter().map(|(k, v)| (false, k, v)))
    }

    /// Boundary points of a cell, in stored cyclic order.
    pub fn cell_points(&self, members: &[Subset]) -> Vec<Point> {
        members.iter().map(|m| self.vertices[m]).collect()
    }

    /// Sum of the areas of all two-dimensional cells.
    pub fn total_cell_area(&self) -> f64 {
        self.cells().map(|(_, _, cell)| polygon_area(&self.cell_points(cell))).sum()
    }

    pub fn scale(&self) -> f64 {
        scale_of(self.vertices.values().copied())
    }
}

fn edge_key(a: Subset, b: Subset) -> (Subset, Subset) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Members of a white clique lie on a unit circle around the embedded core;
/// sorting by the extra element walks that circle clockwise.
fn order_white(key: Subset, mut clique: Vec<Subset>) -> Vec<Subset> {
    clique.sort_by_key(|m| m.minus(&key).elems().next().unwrap());
    clique
}

/// Members of a black clique lie on a unit circle around the embedded hull;
/// sorting by the missing element walks that circle clockwise.
fn order_black(key: Subset, mut clique: Vec<Subset>) -> Vec<Subset> {
    clique.sort_by_key(|m| key.minus(m).elems().next().unwrap());
    clique
}

/// Outcome of the polygonal-complex checks.
#[derive(Debug, Clone)]
pub struct ComplexReport {
    pub violations: Vec<String>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Validates that the tiling is a polygonal complex:
/// cell boundaries are convex, cell interiors are pairwise disjoint, two
/// cells meet in a shared vertex or a shared edge or not at all, and a
/// segment between embedded neighbors that cuts through a cell has both ends
/// among that cell's vertices.
pub fn complex_check(t: &Tiling) -> ComplexReport {
    let mut violations = Vec::new();
    let scale = t.scale();
    let tol = GEOM_REL_EPS * scale;
    let tol_area = GEOM_REL_EPS * scale * scale;

    let cells: Vec<(String, Vec<Subset>, Vec<Point>)> = t
        .cells()
        .map(|(is_white, key, cell)| {
            let name = format!("{}({key})", if is_white { "white" } else { "black" });
            (name, cell.clone(), t.cell_points(cell))
        })
        .collect();

    for (name, _, pts) in &cells {
        let k = pts.len();
        let area = polygon_signed_area(pts);
        if area.abs() <= tol_area {
            violations.push(format!("cell {name} is degenerate (area {area:.2e})"));
            continue;
        }
        let sign = area.signum();
        for i in 0..k {
            let o = orient(pts[i], pts[(i + 1) % k], pts[(i + 2) % k]);
            if o * sign <= tol_area {
                violations.push(format!("cell {name} has a non-convex corner at index {i}"));
            }
        }
    }

    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let (name_a, members_a, pts_a) = &cells[i];
            let (name_b, members_b, pts_b) = &cells[j];
            let p = convex_clip(&ccw(pts_a), &ccw(pts_b), POINT_EPS);
            if p.is_empty() {
                continue;
            }
            let area = polygon_area(&p);
            if area > tol_area {
                violations.push(format!(
                    "cells {name_a} and {name_b} overlap with area {area:.3e}"
                ));
                continue;
            }
            let shared: Vec<Subset> =
                members_a.iter().filter(|m| members_b.contains(m)).copied().collect();
            let d = diameter(&p);
            if d <= tol {
                // a single point: must be a shared vertex
                let pt = p[0];
                if !shared.iter().any(|m| t.vertices[m].dist(pt) <= tol) {
                    violations.push(format!(
                        "cells {name_a} and {name_b} touch at {pt} which is not a shared vertex"
                    ));
                }
            } else {
                // a segment: must be a shared edge of both boundaries
                let (lo, hi) = farthest_pair(&p);
                let find = |pt: Point| shared.iter().find(|m| t.vertices[m].dist(pt) <= tol);
                match (find(lo), find(hi)) {
                    (Some(a), Some(b)) => {
                        if !(boundary_consecutive(members_a, a, b)
                            && boundary_consecutive(members_b, a, b))
                        {
                            violations.push(format!(
                                "cells {name_a} and {name_b} meet along {a}-{b} which is not an edge of both"
                            ));
                        }
                    }
                    _ => violations.push(format!(
                        "cells {name_a} and {name_b} meet along a segment {lo}-{hi} whose ends are not shared vertices"
                    )),
                }
            }
        }
    }

    // neighbor segments cutting through a cell must end at its vertices
    let verts: Vec<(Subset, Point)> = t.vertices.iter().map(|(s, p)| (*s, *p)).collect();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let (x, px) = verts[i];
            let (y, py) = verts[j];
            if !neighbors(&x, &y) {
                continue;
            }
            for (name, members, pts) in &cells {
                let len = seg_in_convex_len(px, py, &ccw(pts));
                if len > tol && !(members.contains(&x) && members.contains(&y)) {
                    violations.push(format!(
                        "segment {x}-{y} runs through cell {name} without being a chord of its vertices"
                    ));
                }
            }
        }
    }

    ComplexReport { violations }
}

fn farthest_pair(pts: &[Point]) -> (Point, Point) {
    let mut best = (pts[0], pts[0]);
    let mut best_d = -1.0;
    for i in 0..pts.len() {
        for j in i..pts.len() {
            let d = pts[i].dist(pts[j]);
            if d > best_d {
                best_d = d;
                best = (pts[i], pts[j]);
            }
        }
    }
    best
}

fn boundary_consecutive(cell: &[Subset], a: &Subset, b: &Subset) -> bool {
    let k = cell.len();
    (0..k).any(|t| {
        let (u, v) = (&cell[t], &cell[(t + 1) % k]);
        (u == a && v == b) || (u == b && v == a)
    })
}

/// Length of the part of segment [a, b] inside a convex CCW polygon.
fn seg_in_convex_len(a: Point, b: Point, poly: &[Point]) -> f64 {
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    let d = b.sub(a);
    let k = poly.len();
    for i in 0..k {
        let (u, v) = (poly[i], poly[(i + 1) % k]);
        let f0 = orient(u, v, a);
        let f1 = orient(u, v, b);
        // inside means f >= 0 (left of each CCW edge, with slack)
        const SLACK: f64 = 1e-12;
        if f0 < -SLACK && f1 < -SLACK {
            return 0.0;
        }
        if (f0 - f1).abs() > SLACK {
            let tstar = f0 / (f0 - f1);
            if f0 < f1 {
                lo = lo.max(tstar);
            } else {
                hi = hi.min(tstar);
            }
        }
    }
    if hi > lo {
        (hi - lo) * d.norm()
    } else {
        0.0
    }
}

/// Report of the geometric-vs-combinatorial interior membership comparison.
#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub cases: usize,
    pub mismatches: Vec<(Subset, bool, bool)>,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For every set of the separated fan, compares interior membership with the
/// geometric inside test against the necklace curve.
pub fn verify_membership_geometry(nk: &Necklace) -> Result<MembershipReport> {
    let curve = necklace_curve(nk)?;
    let fan = crate::regions::separated_fan(nk)?;
    let mut mismatches = Vec::new();
    let mut cases = 0;
    for x in fan.iter() {
        cases += 1;
        let combinatorial = nk.interior_contains(x);
        let geometric = curve.contains(embed(x));
        if combinatorial != geometric {
            mismatches.push((*x, combinatorial, geometric));
        }
    }
    Ok(MembershipReport { cases, mismatches })
}

/// Does the tiling fill the region bounded by the curve? Decided by area
/// equality (the complex checks guarantee the cells do not overlap), with a
/// deterministic point-sampling double check in the borderline band.
pub fn fills_region(t: &Tiling, curve: &Curve) -> Result<bool> {
    let report = complex_check(t);
    if !report.passed() {
        return Err(Error::Validation(format!(
            "tiling is not a valid complex: {}",
            report.violations.join("; ")
        )));
    }
    let region = curve.area();
    let cells = t.total_cell_area();
    let tol = GEOM_REL_EPS * region.max(1.0);
    let diff = (region - cells).abs();
    if diff <= tol {
        return Ok(true);
    }
    if diff <= 10.0 * tol {
        return Ok(sample_covered(t, curve));
    }
    Ok(false)
}

/// Grid-samples the inside of the curve and tests coverage by some cell.
fn sample_covered(t: &Tiling, curve: &Curve) -> bool {
    let pts = curve.points();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in pts {
        lo_x = lo_x.min(p.x);
        hi_x = hi_x.max(p.x);
        lo_y = lo_y.min(p.y);
        hi_y = hi_y.max(p.y);
    }
    let tol = GEOM_REL_EPS * curve.scale();
    let cells: Vec<Vec<Point>> = t.cells().map(|(_, _, c)| ccw(&t.cell_points(c))).collect();
    const STEPS: usize = 64;
    for gx in 0..=STEPS {
        for gy in 0..=STEPS {
            let p = Point::new(
                lo_x + (hi_x - lo_x) * gx as f64 / STEPS as f64,
                lo_y + (hi_y - lo_y) * gy as f64 / STEPS as f64,
            );
            if dist_to_cycle(p, pts) <= tol || !point_in_polygon(p, pts) {
                continue;
            }
            let covered = cells
                .iter()
                .any(|c| point_in_polygon(p, c) || dist_to_cycle(p, c) <= tol);
            if !covered {
                return false;
            }
        }
    }
    true
}

/// Writes a deterministic SVG image of the tiling: white cells with black
/// strokes, black cells in 50% gray, edges, labeled vertex dots, and the
/// optional necklace curve dashed. Coordinates are scaled to a 1000-unit
/// viewport.
pub fn render_svg<W: Write>(t: &Tiling, curve: Option<&Curve>, out: &mut W) -> std::io::Result<()> {
    const VIEW: f64 = 1000.0;
    const MARGIN: f64 = 70.0;

    let mut all: Vec<Point> = t.vertices.values().copied().collect();
    if let Some(c) = curve {
        all.extend_from_slice(c.points());
    }
    let (map_x, map_y): (Box<dyn Fn(f64) -> f64>, Box<dyn Fn(f64) -> f64>) = if all.is_empty() {
        (Box::new(|x| x), Box::new(|y| y))
    } else {
        let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for p in &all {
            lo_x = lo_x.min(p.x);
            hi_x = hi_x.max(p.x);
            lo_y = lo_y.min(p.y);
            hi_y = hi_y.max(p.y);
        }
        let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-9);
        let k = (VIEW - 2.0 * MARGIN) / span;
        let cx = (lo_x + hi_x) / 2.0;
        let cy = (lo_y + hi_y) / 2.0;
        (
            Box::new(move |x: f64| VIEW / 2.0 + (x - cx) * k),
            Box::new(move |y: f64| VIEW / 2.0 - (y - cy) * k),
        )
    };
    let fmt_pt = |p: Point| format!("{:.3},{:.3}", map_x(p.x), map_y(p.y));

    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {VIEW} {VIEW}\" \
         font-family=\"monospace\" font-size=\"22\">"
    )?;
    for (is_white, _, cell) in t.cells() {
        let pts = t.cell_points(cell);
        let path: Vec<String> = pts.iter().map(|p| fmt_pt(*p)).collect();
        let fill = if is_white { "#ffffff" } else { "#808080" };
        writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"{fill}\" stroke=\"#000000\" stroke-width=\"2\"/>",
            path.join(" ")
        )?;
    }
    for (a, b) in &t.edges {
        let pa = t.vertices[a];
        let pb = t.vertices[b];
        writeln!(
            out,
            "  <line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#000000\" stroke-width=\"2\"/>",
            map_x(pa.x),
            map_y(pa.y),
            map_x(pb.x),
            map_y(pb.y)
        )?;
    }
    if let Some(c) = curve {
        let path: Vec<String> = c.points().iter().map(|p| fmt_pt(*p)).collect();
        writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" stroke-dasharray=\"12 8\"/>",
            path.join(" ")
        )?;
    }
    for (s, p) in &t.vertices {
        writeln!(
            out,
            "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"6\" fill=\"#000000\"/>",
            map_x(p.x),
            map_y(p.y)
        )?;
        writeln!(
            out,
            "  <text x=\"{:.3}\" y=\"{:.3}\" text-anchor=\"middle\">{s}</text>",
            map_x(p.x),
            map_y(p.y) - 12.0
        )?;
    }
    writeln!(out, "</svg>")?;
    Ok(())
}

/// Convenience wrapper writing the SVG to a file path.
pub fn render_svg_file(
    t: &Tiling,
    curve: Option<&Curve>,
    path: &std::path::Path,
) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    render_svg(t, curve, &mut file)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::Permutation;

    fn coll(n: usize, lits: &[&str]) -> Collection {
        let members: Vec<Subset> = lits.iter().map(|l| Subset::parse(l, n).unwrap()).collect();
        let r = members[0].card();
        Collection::new(Ground::new(n, r).unwrap(), members).unwrap()
    }

    fn fig2() -> Collection {
        coll(
            7,
            &[
                "127", "123", "234", "345", "456", "567", "167", "126", "124", "134", "346",
                "467", "146",
            ],
        )
    }

    #[test]
    fn embed_basics() {
        let n = 6;
        assert!(embed(&Subset::empty(n)).norm() < 1e-12);
        assert!(embed(&Subset::full(n)).norm() < 1e-12);
        for x in Ground::new(n, 2).unwrap().subsets() {
            let p = embed(&x);
            let q = embed(&x.complement());
            assert!(p.add(q).norm() < 1e-12, "complement antisymmetry failed for {x}");
        }
    }

    #[test]
    fn square_tiling_structure() {
        let c = coll(4, &["12", "23", "34", "14", "13"]);
        let t = Tiling::build(&c).unwrap();
        assert_eq!(t.vertex_count(), 5);
        let white_keys: Vec<String> = t.white_cells().keys().map(|k| k.to_string()).collect();
        assert_eq!(white_keys, vec!["1", "3"]);
        let black_keys: Vec<String> = t.black_cells().keys().map(|k| k.to_string()).collect();
        assert_eq!(black_keys, vec!["123", "134"]);
        assert_eq!(t.edge_count(), 8);
        assert_eq!(t.euler(), 1);
        assert!(complex_check(&t).passed());

        let nk = Necklace::largest(Ground::new(4, 2).unwrap());
        let curve = necklace_curve(&nk).unwrap();
        assert!((curve.area() - 4.0).abs() < 1e-9);
        assert!((t.total_cell_area() - 4.0).abs() < 1e-9);
        assert!(fills_region(&t, &curve).unwrap());
    }

    #[test]
    fn single_vertex_tiling() {
        let c = coll(3, &["12"]);
        let t = Tiling::build(&c).unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.edge_count(), 0);
        assert_eq!(t.face_count(), 0);
        assert!(complex_check(&t).passed());
    }

    #[test]
    fn rejects_non_separated() {
        let c = coll(4, &["13", "24"]);
        assert!(Tiling::build(&c).is_err());
    }

    #[test]
    fn heptagon_fixture_counts() {
        let t = Tiling::build(&fig2()).unwrap();
        assert_eq!(t.vertex_count(), 13);
        assert_eq!(t.face_count(), 13);
        assert_eq!(t.euler(), 1);
        assert!(complex_check(&t).passed());

        let nk = Necklace::largest(Ground::new(7, 3).unwrap());
        let curve = necklace_curve(&nk).unwrap();
        assert!(fills_region(&t, &curve).unwrap());

        // an interior vertex of the picture lies inside the necklace curve
        assert!(curve.contains(embed(&Subset::parse("146", 7).unwrap())));
        // necklace vertices lie on the curve and count as inside
        assert!(curve.contains(embed(&Subset::parse("123", 7).unwrap())));
        // far away is outside
        assert!(!curve.contains(Point::new(50.0, 0.0)));
        // the centroid is inside
        assert!(curve.contains(Point::new(0.0, 0.0)));
    }

    #[test]
    fn removing_a_member_breaks_fill() {
        let c = coll(4, &["12", "23", "34", "14", "13"]);
        let nk = Necklace::largest(Ground::new(4, 2).unwrap());
        let curve = necklace_curve(&nk).unwrap();
        let t = Tiling::build(&c.without(&Subset::parse("13", 4).unwrap())).unwrap();
        assert!(!fills_region(&t, &curve).unwrap());
    }

    #[test]
    fn curve_simplicity() {
        let nk = Necklace::largest(Ground::new(7, 3).unwrap());
        assert!(necklace_curve(&nk).is_ok());

        // triangle curves are always simple
        let tri = Curve::through(&[
            Subset::parse("12", 4).unwrap(),
            Subset::parse("23", 4).unwrap(),
            Subset::parse("13", 4).unwrap(),
        ]);
        assert!(tri.is_simple());

        // a hand-made bowtie self-intersects
        let bowtie = Curve {
            pts: vec![
                Point::new(0.0, 0.0),
                Point::new(2.0, 2.0),
                Point::new(2.0, 0.0),
                Point::new(0.0, 2.0),
            ],
            source: vec![Subset::empty(4); 4],
        };
        assert!(!bowtie.is_simple());

        // disconnected necklaces have no curve
        let constant = Necklace::validate(vec![Subset::full(3); 3]).unwrap();
        assert!(necklace_curve(&constant).is_err());
    }

    #[test]
    fn simplicity_across_all_connected_necklaces_small() {
        for n in 2..=5 {
            for p in Permutation::all(n) {
                let nk = Necklace::from_permutation(&p);
                if nk.is_connected() {
                    necklace_curve(&nk).unwrap();
                }
            }
        }
    }

    #[test]
    fn corrupted_vertex_is_reported() {
        let c = coll(4, &["12", "23", "34", "14", "13"]);
        let mut t = Tiling::build(&c).unwrap();
        let key = Subset::parse("13", 4).unwrap();
        t.vertices.insert(key, Point::new(0.9, 0.9));
        assert!(!complex_check(&t).passed());
    }

    #[test]
    fn membership_geometry_small_case() {
        let nk = Necklace::validate(
            ["12", "24", "34", "14"]
                .iter()
                .map(|l| Subset::parse(l, 4).unwrap())
                .collect(),
        )
        .unwrap();
        let report = verify_membership_geometry(&nk).unwrap();
        assert_eq!(report.cases, 5);
        assert!(report.passed(), "mismatches: {:?}", report.mismatches);
    }

    #[test]
    fn svg_is_deterministic_and_labeled() {
        let c = fig2();
        let t = Tiling::build(&c).unwrap();
        let nk = Necklace::largest(Ground::new(7, 3).unwrap());
        let curve = necklace_curve(&nk).unwrap();
        let mut one = Vec::new();
        render_svg(&t, Some(&curve), &mut one).unwrap();
        let mut two = Vec::new();
        render_svg(&t, Some(&curve), &mut two).unwrap();
        assert_eq!(one, two);
        let text = String::from_utf8(one).unwrap();
        assert_eq!(text.matches("<text").count(), 13);
        assert!(text.contains("stroke-dasharray"));

        let empty = Collection::empty(Ground::new(4, 2).unwrap());
        let te = Tiling::build(&empty).unwrap();
        let mut buf = Vec::new();
        render_svg(&te, None, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
    }
}
