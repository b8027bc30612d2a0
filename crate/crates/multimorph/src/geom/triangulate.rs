//! Triangulation of power cells.
//!
//! Convex cells with an interior site become a fan of triangles through the
//! site. Non-convex cells (or cells that lost their site to clipping) are
//! ear-clipped, the site is inserted if it lies strictly inside, and edges
//! are flipped to the constrained Delaunay configuration. No Steiner points
//! are ever introduced: triangle corners are cell boundary vertices plus at
//! most the site.

use super::point::Point2;
use super::polygon::Polygon;
use super::GeomError;
use std::collections::HashMap;

/// Corner of a cell triangle: a boundary vertex of the cell polygon or the
/// cell site itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellVertex {
    Boundary(usize),
    Site,
}

/// Triangulate a cell around its site. Triangles are CCW and cover the cell
/// exactly (up to slivers below the tolerance `eps`, in length units).
pub fn triangulate_cell(
    cell: &Polygon,
    site: Point2,
    eps: f64,
) -> Result<Vec<[CellVertex; 3]>, GeomError> {
    let verts = cell.vertices();
    let nb = verts.len();
    let interior = site_strictly_inside(cell, site, eps);

    if interior && cell.is_convex(eps) {
        let mut tris = Vec::with_capacity(nb);
        for m in 0..nb {
            tris.push([
                CellVertex::Site,
                CellVertex::Boundary(m),
                CellVertex::Boundary((m + 1) % nb),
            ]);
        }
        return Ok(tris);
    }

    let mut points: Vec<Point2> = verts.to_vec();
    let area_eps = eps * cell.max_extent();
    let mut tris = ear_clip(&points, area_eps)?;

    if interior {
        points.push(site);
        tris = insert_point(tris, &points, nb, area_eps);
    }

    // Constrained edges are the cell boundary; everything else may flip.
    let constrained: Vec<(usize, usize)> = (0..nb)
        .map(|i| ordered(i, (i + 1) % nb))
        .collect();
    delaunay_flips(&mut tris, &points, &constrained);

    Ok(tris
        .into_iter()
        .map(|t| {
            t.map(|v| {
                if v == nb {
                    CellVertex::Site
                } else {
                    CellVertex::Boundary(v)
                }
            })
        })
        .collect())
}

fn site_strictly_inside(cell: &Polygon, site: Point2, eps: f64) -> bool {
    if !cell.contains(site, 0.0) {
        return false;
    }
    cell.edges().all(|(a, b)| {
        let d = b - a;
        let len2 = d.norm_squared();
        let t = if len2 == 0.0 {
            0.0
        } else {
            ((site - a).dot(d) / len2).clamp(0.0, 1.0)
        };
        site.dist(a + d * t) > 2.0 * eps
    })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

/// Ear clipping for a simple CCW polygon; degenerate (collinear) corners are
/// dropped rather than emitted as zero-area triangles.
fn ear_clip(verts: &[Point2], area_eps: f64) -> Result<Vec<[usize; 3]>, GeomError> {
    let n = verts.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices(n));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut tris = Vec::with_capacity(n - 2);
    while idx.len() > 3 {
        let m = idx.len();
        let mut clipped = false;
        for k in 0..m {
            let (a, b, c) = (idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]);
            let area2 = orient(verts[a], verts[b], verts[c]);
            if area2 <= area_eps {
                continue;
            }
            let blocked = idx.iter().any(|&o| {
                o != a && o != b && o != c && in_triangle(verts[o], verts[a], verts[b], verts[c], area_eps)
            });
            if !blocked {
                tris.push([a, b, c]);
                idx.remove(k);
                clipped = true;
                break;
            }
        }
        if !clipped {
            // Numerically flat corner; remove the flattest vertex. The area
            // lost is below the tolerance.
            let m = idx.len();
            let k = (0..m)
                .min_by(|&p, &q| {
                    let f = |k: usize| {
                        orient(
                            verts[idx[(k + m - 1) % m]],
                            verts[idx[k]],
                            verts[idx[(k + 1) % m]],
                        )
                        .abs()
                    };
                    f(p).total_cmp(&f(q))
                })
                .unwrap();
            idx.remove(k);
        }
    }
    let area2 = orient(verts[idx[0]], verts[idx[1]], verts[idx[2]]);
    if area2 > area_eps {
        tris.push([idx[0], idx[1], idx[2]]);
    }
    if tris.is_empty() {
        return Err(GeomError::Triangulation(
            "polygon collapsed to zero area".into(),
        ));
    }
    Ok(tris)
}

fn in_triangle(p: Point2, a: Point2, b: Point2, c: Point2, area_eps: f64) -> bool {
    orient(a, b, p) >= -area_eps && orient(b, c, p) >= -area_eps && orient(c, a, p) >= -area_eps
}

/// Insert point `pi` (index into `points`) into an existing triangulation,
/// splitting the containing triangle (or the two triangles sharing an edge
/// the point falls on).
fn insert_point(tris: Vec<[usize; 3]>, points: &[Point2], pi: usize, area_eps: f64) -> Vec<[usize; 3]> {
    let p = points[pi];
    let mut located: Option<(usize, [f64; 3])> = None;
    for (ti, t) in tris.iter().enumerate() {
        let d = [
            orient(points[t[0]], points[t[1]], p),
            orient(points[t[1]], points[t[2]], p),
            orient(points[t[2]], points[t[0]], p),
        ];
        if d.iter().all(|&x| x >= -area_eps) {
            located = Some((ti, d));
            break;
        }
    }
    let Some((ti, d)) = located else {
        return tris; // outside every triangle; leave untouched
    };
    let t = tris[ti];
    let on_edge = (0..3).find(|&e| d[e].abs() <= area_eps);
    let mut out: Vec<[usize; 3]> = Vec::with_capacity(tris.len() + 2);
    match on_edge {
        None => {
            for (i, tri) in tris.iter().enumerate() {
                if i != ti {
                    out.push(*tri);
                }
            }
            out.push([t[0], t[1], pi]);
            out.push([t[1], t[2], pi]);
            out.push([t[2], t[0], pi]);
        }
        Some(e) => {
            let (a, b) = (t[e], t[(e + 1) % 3]);
            let c = t[(e + 2) % 3];
            // Find the neighbor across (a, b), if any.
            let mut neighbor: Option<(usize, usize)> = None; // (tri index, opposite vertex)
            for (i, tri) in tris.iter().enumerate() {
                if i == ti {
                    continue;
                }
                for k in 0..3 {
                    if tri[k] == b && tri[(k + 1) % 3] == a {
                        neighbor = Some((i, tri[(k + 2) % 3]));
                    }
                }
            }
            for (i, tri) in tris.iter().enumerate() {
                if i != ti && Some(i) != neighbor.map(|(n, _)| n) {
                    out.push(*tri);
                }
            }
            out.push([a, pi, c]);
            out.push([pi, b, c]);
            if let Some((_, d2)) = neighbor {
                out.push([b, pi, d2]);
                out.push([pi, a, d2]);
            }
        }
    }
    out
}

fn incircle(a: Point2, b: Point2, c: Point2, d: Point2) -> f64 {
    let (ax, ay) = (a.x - d.x, a.y - d.y);
    let (bx, by) = (b.x - d.x, b.y - d.y);
    let (cx, cy) = (c.x - d.x, c.y - d.y);
    let a2 = ax * ax + ay * ay;
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx)
}

/// Lawson edge flips toward the constrained Delaunay triangulation.
fn delaunay_flips(tris: &mut Vec<[usize; 3]>, points: &[Point2], constrained: &[(usize, usize)]) {
    let is_constrained = |a: usize, b: usize| constrained.contains(&ordered(a, b));
    let cap = 4 * tris.len() * tris.len() + 16;
    for _ in 0..cap {
        let mut edge_map: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for (ti, t) in tris.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                edge_map.entry(ordered(a, b)).or_default().push((ti, t[(k + 2) % 3]));
            }
        }
        let mut flipped = false;
        let mut keys: Vec<(usize, usize)> = edge_map.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let owners = &edge_map[&key];
            if owners.len() != 2 || is_constrained(key.0, key.1) {
                continue;
            }
            let ((t1, c), (t2, d)) = (owners[0], owners[1]);
            // Orient the shared edge so that (a, b, c) is CCW.
            let (mut a, mut b) = key;
            if orient(points[a], points[b], points[c]) < 0.0 {
                std::mem::swap(&mut a, &mut b);
            }
            // Only flip strictly convex quads.
            if orient(points[a], points[d], points[b]) >= 0.0
                || orient(points[c], points[a], points[d]) <= 0.0
                || orient(points[d], points[b], points[c]) <= 0.0
            {
                continue;
            }
            if incircle(points[a], points[b], points[c], points[d]) > 0.0 {
                tris[t1] = [c, a, d];
                tris[t2] = [d, b, c];
                flipped = true;
                break;
            }
        }
        if !flipped {
            break;
        }
    }
}
