//! Half-plane clipping of labeled polygons.
//!
//! Power cells are intersections of half-planes with the design domain.
//! Clipping a non-convex domain against a half-plane can disconnect it, so
//! the clipper returns every resulting piece: kept boundary runs are
//! stitched back together along the cut line by sorting the crossing points
//! and pairing adjacent ones. Each surviving edge keeps a label recording
//! where it came from (a domain edge or a bisector against another site),
//! which the power-diagram layer uses to build the neighbor graph.

use super::point::Point2;
use super::polygon::{point_in_loop, signed_area, Polygon};
use super::GeomError;

/// Closed half-plane `normal · x <= offset` with unit normal, so signed
/// distances are in length units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub normal: Point2,
    pub offset: f64,
}

impl HalfPlane {
    /// Half-plane from an outward unit normal and a point on its boundary.
    pub fn from_normal_point(normal: Point2, point: Point2) -> Self {
        let n = normal / normal.norm();
        HalfPlane {
            normal: n,
            offset: n.dot(point),
        }
    }

    /// The power bisector between weighted sites, keeping the side of
    /// `(site_i, w_i)`: points x with ‖x−x_i‖² − w_i ≤ ‖x−x_j‖² − w_j.
    pub fn power_bisector(site_i: Point2, w_i: f64, site_j: Point2, w_j: f64) -> Self {
        let d = site_j - site_i;
        let len = d.norm();
        let normal = d / len;
        let offset = (site_j.norm_squared() - site_i.norm_squared() + w_i - w_j) / (2.0 * len);
        HalfPlane { normal, offset }
    }

    /// Positive outside the half-plane, in length units.
    pub fn signed_dist(&self, p: Point2) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

/// Provenance of a polygon edge surviving the clipping pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabel {
    /// Lies on edge `i` of the original domain polygon.
    Boundary(usize),
    /// Lies on the power bisector against site `j`.
    Bisector(usize),
    /// Introduced by a clip without site bookkeeping (public wrappers).
    Cut,
}

/// A closed polygon whose edge `i` (from vertex `i` to vertex `i+1`,
/// wrapping) carries `labels[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPolygon {
    pub verts: Vec<Point2>,
    pub labels: Vec<EdgeLabel>,
}

impl LabeledPolygon {
    pub fn from_polygon(p: &Polygon) -> Self {
        let verts = p.vertices().to_vec();
        let labels = (0..verts.len()).map(EdgeLabel::Boundary).collect();
        LabeledPolygon { verts, labels }
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.verts)
    }

    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        point_in_loop(&self.verts, p, tol)
    }

    pub fn to_polygon(&self) -> Result<Polygon, GeomError> {
        Polygon::new(self.verts.clone())
    }

    /// Remove zero-length edges (consecutive vertices closer than `eps`).
    fn dedup(&mut self, eps: f64) {
        let mut i = 0;
        while self.verts.len() > 1 && i < self.verts.len() {
            let j = (i + 1) % self.verts.len();
            if self.verts[i].dist(self.verts[j]) <= eps {
                // Edge i -> j has zero length; its label disappears.
                self.verts.remove(j);
                self.labels.remove(i.min(self.labels.len() - 1));
                if j < i {
                    i = 0;
                }
            } else {
                i += 1;
            }
        }
    }
}

struct Run {
    verts: Vec<Point2>,
    labels: Vec<EdgeLabel>,
}

enum Crossing {
    Entry(usize),
    Exit(usize),
}

/// Clip `poly` against `hp`, labeling new edges along the cut line with
/// `new_label`. Returns every piece of the intersection; pieces are CCW and
/// deduplicated, with near-zero-area slivers dropped. `eps` is the geometric
/// tolerance in length units.
pub fn clip_labeled(
    poly: &LabeledPolygon,
    hp: &HalfPlane,
    new_label: EdgeLabel,
    eps: f64,
) -> Vec<LabeledPolygon> {
    let n = poly.verts.len();
    if n < 3 {
        return Vec::new();
    }
    let dist: Vec<f64> = poly.verts.iter().map(|&v| hp.signed_dist(v)).collect();
    let inside: Vec<bool> = dist.iter().map(|&d| d <= eps).collect();

    if inside.iter().all(|&b| b) {
        return vec![poly.clone()];
    }
    if inside.iter().all(|&b| !b) {
        return Vec::new();
    }

    // Start the walk at an outside vertex so every run begins with an entry
    // crossing and ends with an exit crossing.
    let start = inside.iter().position(|&b| !b).unwrap();
    let mut runs: Vec<Run> = Vec::new();
    let mut current: Option<Run> = None;
    for k in 0..n {
        let i = (start + k) % n;
        let j = (i + 1) % n;
        let lab = poly.labels[i];
        match (inside[i], inside[j]) {
            (true, true) => {
                if let Some(run) = current.as_mut() {
                    run.verts.push(poly.verts[j]);
                    run.labels.push(lab);
                }
            }
            (false, true) => {
                let p = cross_point(poly.verts[i], poly.verts[j], dist[i], dist[j]);
                current = Some(Run {
                    verts: vec![p, poly.verts[j]],
                    labels: vec![lab],
                });
            }
            (true, false) => {
                let p = cross_point(poly.verts[i], poly.verts[j], dist[i], dist[j]);
                if let Some(mut run) = current.take() {
                    run.verts.push(p);
                    run.labels.push(lab);
                    runs.push(run);
                }
            }
            (false, false) => {}
        }
    }
    if runs.is_empty() {
        return Vec::new();
    }

    // Stitch runs along the cut line: crossing points sorted along the line
    // alternate interior/exterior, so adjacent sorted pairs bound the closing
    // edges. Each pair connects one run's exit to another run's entry.
    let along = hp.normal.perp();
    let mut crossings: Vec<(f64, Crossing)> = Vec::new();
    for (r, run) in runs.iter().enumerate() {
        crossings.push((run.verts[0].dot(along), Crossing::Entry(r)));
        crossings.push((run.verts[run.verts.len() - 1].dot(along), Crossing::Exit(r)));
    }
    crossings.sort_by(|a, b| a.0.total_cmp(&b.0));

    // exit_to_entry[r] = run whose entry closes run r's exit.
    let mut exit_to_entry = vec![usize::MAX; runs.len()];
    let mut paired = true;
    for pair in crossings.chunks(2) {
        match (&pair[0].1, &pair[1].1) {
            (Crossing::Exit(x), Crossing::Entry(e)) | (Crossing::Entry(e), Crossing::Exit(x)) => {
                exit_to_entry[*x] = *e;
            }
            _ => {
                paired = false;
                break;
            }
        }
    }
    if !paired {
        // Tangential degeneracy; fall back to chaining runs in traversal
        // order, which reproduces plain Sutherland-Hodgman output.
        for r in 0..runs.len() {
            exit_to_entry[r] = (r + 1) % runs.len();
        }
    }

    let mut used = vec![false; runs.len()];
    let mut pieces = Vec::new();
    for r0 in 0..runs.len() {
        if used[r0] {
            continue;
        }
        let mut verts = Vec::new();
        let mut labels = Vec::new();
        let mut r = r0;
        loop {
            used[r] = true;
            verts.extend_from_slice(&runs[r].verts);
            labels.extend_from_slice(&runs[r].labels);
            labels.push(new_label); // closing edge from this exit
            r = exit_to_entry[r];
            if r == r0 || r == usize::MAX || used[r] {
                break;
            }
        }
        let mut piece = LabeledPolygon { verts, labels };
        piece.dedup(eps * 1e-3);
        if piece.verts.len() >= 3 && piece.area() > eps * eps {
            pieces.push(piece);
        }
    }
    pieces
}

fn cross_point(a: Point2, b: Point2, da: f64, db: f64) -> Point2 {
    let t = da / (da - db);
    a + (b - a) * t
}

/// Pick the piece containing `site`, or the largest piece when none does.
pub fn select_piece(
    pieces: Vec<LabeledPolygon>,
    site: Option<Point2>,
    tol: f64,
) -> Option<LabeledPolygon> {
    if pieces.is_empty() {
        return None;
    }
    if let Some(s) = site {
        if let Some(idx) = pieces.iter().position(|p| p.contains(s, tol)) {
            return pieces.into_iter().nth(idx);
        }
    }
    pieces
        .into_iter()
        .max_by(|a, b| a.area().total_cmp(&b.area()))
}

/// Intersection of `subject` with a convex clip polygon. Returns the piece
/// containing the subject centroid, or the largest piece, or `None` when the
/// intersection is empty.
pub fn clip_convex(subject: &Polygon, clip: &Polygon) -> Option<Polygon> {
    let eps = 1e-12 * subject.max_extent().max(clip.max_extent());
    debug_assert!(clip.is_convex(1e-9 * clip.max_extent()));
    let mut current = vec![LabeledPolygon::from_polygon(subject)];
    for (a, b) in clip.edges() {
        let d = b - a;
        let outward = Point2::new(d.y, -d.x);
        let hp = HalfPlane::from_normal_point(outward, a);
        let mut next = Vec::new();
        for piece in &current {
            next.extend(clip_labeled(piece, &hp, EdgeLabel::Cut, eps));
        }
        if next.is_empty() {
            return None;
        }
        current = next;
    }
    select_piece(current, None, eps).and_then(|p| p.to_polygon().ok())
}

/// Intersection of `subject` with a sequence of half-planes. When several
/// disjoint pieces appear, keeps the one containing `keep_for` (falling back
/// to the largest).
pub fn clip_halfplanes(
    subject: &Polygon,
    planes: &[HalfPlane],
    keep_for: Option<Point2>,
) -> Option<Polygon> {
    let eps = 1e-12 * subject.max_extent();
    let mut current = LabeledPolygon::from_polygon(subject);
    for hp in planes {
        let pieces = clip_labeled(&current, hp, EdgeLabel::Cut, eps);
        current = select_piece(pieces, keep_for, eps)?;
    }
    current.to_polygon().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn unit_square() -> Polygon {
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn square_clipped_by_itself_is_unchanged() {
        let sq = unit_square();
        let out = clip_convex(&sq, &sq).unwrap();
        assert_relative_eq!(out.area(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn square_halfplane_bisection() {
        let sq = unit_square();
        let hp = HalfPlane {
            normal: Point2::new(1.0, 0.0),
            offset: 0.5,
        };
        let out = clip_halfplanes(&sq, &[hp], None).unwrap();
        assert_relative_eq!(out.area(), 0.5, epsilon = 1e-12);
        for v in out.vertices() {
            assert!(v.x <= 0.5 + 1e-12);
        }
    }

    #[test]
    fn inner_cell_clipped_by_domain_is_unchanged() {
        let outer = unit_square();
        let inner = Polygon::new(vec![
            Point2::new(0.25, 0.25),
            Point2::new(0.75, 0.25),
            Point2::new(0.75, 0.75),
            Point2::new(0.25, 0.75),
        ])
        .unwrap();
        let out = clip_convex(&inner, &outer).unwrap();
        assert_relative_eq!(out.area(), 0.25, epsilon = 1e-14);
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn empty_result_is_none() {
        let sq = unit_square();
        let hp = HalfPlane {
            normal: Point2::new(1.0, 0.0),
            offset: -1.0,
        };
        assert!(clip_halfplanes(&sq, &[hp], None).is_none());
    }

    fn u_shape() -> Polygon {
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(3.0, 0.0),
            Point2::new(3.0, 3.0),
            Point2::new(2.0, 3.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 3.0),
            Point2::new(0.0, 3.0),
        ])
        .unwrap()
    }

    #[test]
    fn disconnecting_clip_splits_into_pieces() {
        // Keep y >= 2: the U splits into its two arm tips.
        let u = LabeledPolygon::from_polygon(&u_shape());
        let hp = HalfPlane {
            normal: Point2::new(0.0, -1.0),
            offset: -2.0,
        };
        let pieces = clip_labeled(&u, &hp, EdgeLabel::Cut, 1e-12);
        assert_eq!(pieces.len(), 2);
        let mut areas: Vec<f64> = pieces.iter().map(|p| p.area()).collect();
        areas.sort_by(f64::total_cmp);
        assert_relative_eq!(areas[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(areas[1], 1.0, epsilon = 1e-12);
        for p in &pieces {
            assert!(p.area() > 0.0, "pieces must stay CCW");
        }
    }

    #[test]
    fn piece_selection_prefers_site() {
        let u = u_shape();
        let hp = HalfPlane {
            normal: Point2::new(0.0, -1.0),
            offset: -2.0,
        };
        let left = clip_halfplanes(&u, &[hp], Some(Point2::new(0.5, 2.5))).unwrap();
        assert!(left.contains(Point2::new(0.5, 2.5), 1e-12));
        assert_relative_eq!(left.area(), 1.0, epsilon = 1e-12);
        // A site in the removed part falls back to the largest piece.
        let fallback = clip_halfplanes(&u, &[hp], Some(Point2::new(1.5, 0.5))).unwrap();
        assert_relative_eq!(fallback.area(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn bisector_labels_survive() {
        let sq = LabeledPolygon::from_polygon(&unit_square());
        let hp = HalfPlane::power_bisector(
            Point2::new(0.25, 0.5),
            0.0,
            Point2::new(0.75, 0.5),
            0.0,
        );
        let pieces = clip_labeled(&sq, &hp, EdgeLabel::Bisector(1), 1e-12);
        assert_eq!(pieces.len(), 1);
        let piece = &pieces[0];
        assert_relative_eq!(piece.area(), 0.5, epsilon = 1e-12);
        let cut_len: f64 = piece
            .labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == EdgeLabel::Bisector(1))
            .map(|(i, _)| {
                piece.verts[i].dist(piece.verts[(i + 1) % piece.verts.len()])
            })
            .sum();
        assert_relative_eq!(cut_len, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn weighted_bisector_shifts_toward_lighter_site() {
        // w_i - w_j = 0.25 moves the bisector 0.25 toward site j
        // (sites 0.5 apart on the x axis).
        let hp = HalfPlane::power_bisector(
            Point2::new(0.25, 0.5),
            0.25,
            Point2::new(0.75, 0.5),
            0.0,
        );
        assert_relative_eq!(hp.signed_dist(Point2::new(0.75, 0.5)), 0.0, epsilon = 1e-12);
    }
}
