use super::point::{segments_properly_intersect, Point2};
use super::GeomError;
use serde::{Deserialize, Serialize};

/// Shoelace area of a closed vertex loop. Positive for counter-clockwise
/// ordering, negative for clockwise.
pub fn signed_area(verts: &[Point2]) -> f64 {
    let n = verts.len();
    if n < 3 {
        return 0.0;
    }
    let mut sum = 0.0;
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        sum += a.cross(b);
    }
    0.5 * sum
}

/// A simple polygon with counter-clockwise vertex order.
///
/// Construction normalizes orientation (clockwise input is reversed) and
/// rejects degenerate loops. Simplicity is only checked on demand via
/// [`Polygon::check_simple`]; cells produced by clipping are simple by
/// construction and skip the quadratic test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point2>", into = "Vec<Point2>")]
pub struct Polygon {
    verts: Vec<Point2>,
}

impl Polygon {
    pub fn new(mut verts: Vec<Point2>) -> Result<Self, GeomError> {
        if verts.len() < 3 {
            return Err(GeomError::TooFewVertices(verts.len()));
        }
        if verts.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let area = signed_area(&verts);
        let scale = verts
            .iter()
            .map(|v| v.x.abs().max(v.y.abs()))
            .fold(0.0, f64::max)
            .max(1e-300);
        if area.abs() <= 1e-14 * scale * scale {
            return Err(GeomError::DegenerateArea);
        }
        if area < 0.0 {
            verts.reverse();
        }
        Ok(Polygon { verts })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Area in mm²; always positive for a constructed polygon.
    pub fn area(&self) -> f64 {
        signed_area(&self.verts)
    }

    /// Area-weighted centroid.
    pub fn centroid(&self) -> Point2 {
        let n = self.verts.len();
        let a = self.area();
        let mut cx = 0.0;
        let mut cy = 0.0;
        for i in 0..n {
            let p = self.verts[i];
            let q = self.verts[(i + 1) % n];
            let w = p.cross(q);
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
        }
        Point2::new(cx / (6.0 * a), cy / (6.0 * a))
    }

    /// Axis-aligned bounding box as (min, max) corners.
    pub fn bounding_box(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.verts {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// Maximum bounding-box edge; the length scale used for tolerances.
    pub fn max_extent(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        (hi.x - lo.x).max(hi.y - lo.y)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.verts.len();
        (0..n).map(move |i| (self.verts[i], self.verts[(i + 1) % n]))
    }

    /// Point-in-polygon test by ray crossing; points within `tol` of the
    /// boundary count as inside.
    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        point_in_loop(&self.verts, p, tol)
    }

    /// True when every interior angle turns the same way (within `tol`
    /// length units of slack on the cross products).
    pub fn is_convex(&self, tol: f64) -> bool {
        let n = self.verts.len();
        for i in 0..n {
            let a = self.verts[i];
            let b = self.verts[(i + 1) % n];
            let c = self.verts[(i + 2) % n];
            if (b - a).cross(c - b) < -tol * tol {
                return false;
            }
        }
        true
    }

    /// O(n²) simplicity check: no two non-adjacent edges may cross.
    pub fn check_simple(&self) -> Result<(), GeomError> {
        let n = self.verts.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if j == i || (j + 1) % n == i || (i + 1) % n == j {
                    continue;
                }
                let (a, b) = (self.verts[i], self.verts[(i + 1) % n]);
                let (c, d) = (self.verts[j], self.verts[(j + 1) % n]);
                if segments_properly_intersect(a, b, c, d) {
                    return Err(GeomError::SelfIntersecting(i, j));
                }
            }
        }
        Ok(())
    }
}

/// Ray-crossing membership test on a raw vertex loop; points within `tol`
/// of the boundary count as inside.
pub(crate) fn point_in_loop(verts: &[Point2], p: Point2, tol: f64) -> bool {
    let n = verts.len();
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let d = b - a;
        let len2 = d.norm_squared();
        let t = if len2 == 0.0 {
            0.0
        } else {
            ((p - a).dot(d) / len2).clamp(0.0, 1.0)
        };
        if p.dist(a + d * t) <= tol {
            return true;
        }
    }
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let vi = verts[i];
        let vj = verts[j];
        if (vi.y > p.y) != (vj.y > p.y) {
            let x_cross = vi.x + (p.y - vi.y) / (vj.y - vi.y) * (vj.x - vi.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

impl TryFrom<Vec<Point2>> for Polygon {
    type Error = GeomError;
    fn try_from(verts: Vec<Point2>) -> Result<Self, Self::Error> {
        Polygon::new(verts)
    }
}

impl From<Polygon> for Vec<Point2> {
    fn from(p: Polygon) -> Self {
        p.verts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn square() -> Polygon {
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn l_shape() -> Polygon {
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 2.0),
        ])
        .unwrap()
    }

    #[test]
    fn unit_square_area() {
        assert_relative_eq!(square().area(), 1.0);
    }

    #[test]
    fn triangle_area() {
        let t = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert_relative_eq!(t.area(), 0.5);
    }

    #[test]
    fn clockwise_input_has_negative_signed_area_and_is_normalized() {
        let cw = vec![
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 0.0),
        ];
        assert!(signed_area(&cw) < 0.0);
        let p = Polygon::new(cw).unwrap();
        assert!(p.area() > 0.0);
        assert!(signed_area(p.vertices()) > 0.0);
    }

    #[test]
    fn degenerate_polygons_rejected() {
        assert!(matches!(
            Polygon::new(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]),
            Err(GeomError::TooFewVertices(2))
        ));
        let collinear = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
        ];
        assert!(matches!(
            Polygon::new(collinear),
            Err(GeomError::DegenerateArea)
        ));
    }

    #[test]
    fn square_centroid() {
        let c = square().centroid();
        assert_relative_eq!(c.x, 0.5);
        assert_relative_eq!(c.y, 0.5);
    }

    #[test]
    fn triangle_centroid_is_vertex_mean() {
        let t = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(3.0, 0.0),
            Point2::new(0.0, 3.0),
        ])
        .unwrap();
        let c = t.centroid();
        assert_relative_eq!(c.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(c.y, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn l_shape_centroid_matches_rectangle_decomposition() {
        // Two rectangles: (0,0)-(2,1) with area 2 centered at (1,0.5), and
        // (0,1)-(1,2) with area 1 centered at (0.5,1.5).
        let expected = (2.0 * 1.0 + 1.0 * 0.5) / 3.0;
        let c = l_shape().centroid();
        assert_relative_eq!(c.x, expected, epsilon = 1e-12);
        assert_relative_eq!(c.y, expected, epsilon = 1e-12);
        assert_relative_eq!(expected, 5.0 / 6.0, epsilon = 1e-15);
    }

    #[test]
    fn self_intersection_detected() {
        let bowtie = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ]);
        // Bowtie has near-zero signed area or fails the simplicity check.
        match bowtie {
            Err(_) => {}
            Ok(p) => assert!(p.check_simple().is_err()),
        }
    }

    #[test]
    fn contains_interior_boundary_exterior() {
        let p = l_shape();
        assert!(p.contains(Point2::new(0.5, 0.5), 1e-12));
        assert!(p.contains(Point2::new(2.0, 0.5), 1e-12)); // on boundary
        assert!(!p.contains(Point2::new(1.5, 1.5), 1e-12)); // in the notch
    }

    #[test]
    fn convexity() {
        assert!(square().is_convex(1e-12));
        assert!(!l_shape().is_convex(1e-12));
    }
}
