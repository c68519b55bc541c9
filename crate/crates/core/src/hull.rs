//! Convex hull and halfplane clipping kernels behind [`crate::algebra`].

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::geometry::{
    affine_frame, assemble_full, plane_basis, Direction, HalfSpace, Polytope,
};
use crate::num;
use crate::vector::Vector;

/// Counter-clockwise hull indices of planar points (Andrew's monotone chain).
/// Points within `tol` of a hull edge are dropped.
pub(crate) fn hull2_indices(pts: &[[f64; 2]], tol: f64) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| {
        pts[a][0]
            .partial_cmp(&pts[b][0])
            .unwrap_or(Ordering::Equal)
            .then(pts[a][1].partial_cmp(&pts[b][1]).unwrap_or(Ordering::Equal))
    });
    idx.dedup_by(|a, b| {
        let (p, q) = (pts[*a], pts[*b]);
        num::abs(p[0] - q[0]) <= tol && num::abs(p[1] - q[1]) <= tol
    });
    if idx.len() < 3 {
        return idx;
    }
    // pop `a` when it lies right of, or within tol of, the line o -> b
    let keep_left = |o: usize, a: usize, b: usize| -> bool {
        let (o, a, b) = (pts[o], pts[a], pts[b]);
        let (bx, by) = (b[0] - o[0], b[1] - o[1]);
        let cross = bx * (a[1] - o[1]) - by * (a[0] - o[0]);
        let len = num::sqrt(bx * bx + by * by);
        -cross > tol * len
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && !keep_left(lower[lower.len() - 2], lower[lower.len() - 1], i) {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && !keep_left(upper[upper.len() - 2], upper[upper.len() - 1], i) {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Result of clipping every boundary line of a planar halfplane system.
pub(crate) struct Clip {
    /// Endpoints of the nonempty boundary pieces.
    pub points: Vec<[f64; 2]>,
    /// Whether constraint `k` carries an edge of positive length.
    pub edge: Vec<bool>,
    pub unbounded: bool,
}

/// Clips each line `<a_k, x> = b_k` (unit `a_k`) against all other
/// constraints `<a_j, x> <= b_j`.
pub(crate) fn clip_lines(a: &[[f64; 2]], b: &[f64], tol: f64) -> Clip {
    let m = a.len();
    let mut out = Clip { points: Vec::new(), edge: alloc::vec![false; m], unbounded: false };
    for k in 0..m {
        let p0 = [b[k] * a[k][0], b[k] * a[k][1]];
        let d = [-a[k][1], a[k][0]];
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        let mut feasible = true;
        for j in 0..m {
            if j == k {
                continue;
            }
            let c = a[j][0] * d[0] + a[j][1] * d[1];
            let r = b[j] - (a[j][0] * p0[0] + a[j][1] * p0[1]);
            if num::abs(c) <= 1e-12 {
                if r < -tol {
                    feasible = false;
                    break;
                }
            } else if c > 0.0 {
                hi = hi.min(r / c);
            } else {
                lo = lo.max(r / c);
            }
        }
        if !feasible || hi < lo - tol {
            continue;
        }
        if !lo.is_finite() || !hi.is_finite() {
            out.unbounded = true;
            continue;
        }
        if hi - lo > tol {
            out.edge[k] = true;
            out.points.push([p0[0] + lo * d[0], p0[1] + lo * d[1]]);
            out.points.push([p0[0] + hi * d[0], p0[1] + hi * d[1]]);
        } else {
            let t = 0.5 * (lo + hi);
            out.points.push([p0[0] + t * d[0], p0[1] + t * d[1]]);
        }
    }
    out
}

/// Facet normals of the hull of a full-dimensional spatial point set, found
/// by gift wrapping around hull edges.
pub(crate) fn gift_wrap_normals(points: &[Vector], tol: f64) -> Vec<Vector> {
    let i0 = (0..points.len())
        .min_by(|&i, &j| points[i].lex_cmp(&points[j]))
        .unwrap_or(0);
    let p0 = points[i0];

    // x = min supports the set; wrap around the vertical line through p0
    let n0 = Vector::new3(-1.0, 0.0, 0.0);
    let ez = Vector::new3(0.0, 0.0, 1.0);
    let mut m = wrap(points, &p0, &ez, &n0, &n0.cross(&ez));
    let mut first = gather_facet(points, &m, tol);
    if first.1.len() < 3 {
        let (a, b) = segment_ends(points, &first.1);
        let e = (points[b] - points[a]).normalized().unwrap_or(ez);
        m = wrap(points, &points[a], &e, &m, &m.cross(&e));
        first = gather_facet(points, &m, tol);
    }

    let mut facets: Vec<(Vector, Vec<usize>)> = Vec::new();
    let mut keys: Vec<Vec<usize>> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    let mut push = |f: (Vector, Vec<usize>), facets: &mut Vec<(Vector, Vec<usize>)>, queue: &mut Vec<usize>| {
        let mut key = f.1.clone();
        key.sort_unstable();
        if f.1.len() >= 3 && !keys.contains(&key) {
            keys.push(key);
            facets.push(f);
            queue.push(facets.len() - 1);
        }
    };
    push(first, &mut facets, &mut queue);

    let mut guard = 0usize;
    while let Some(fi) = queue.pop() {
        guard += 1;
        if guard > 8 * points.len() * points.len() + 64 {
            break;
        }
        let (n_f, loop_) = facets[fi].clone();
        let k = loop_.len();
        for i in 0..k {
            let a = points[loop_[i]];
            let b = points[loop_[(i + 1) % k]];
            let Some(e) = (b - a).normalized() else { continue };
            let t = n_f.cross(&e);
            let m = wrap(points, &a, &e, &n_f, &t);
            let f = gather_facet(points, &m, tol);
            push(f, &mut facets, &mut queue);
        }
    }
    facets.into_iter().map(|(n, _)| n).collect()
}

/// Rotates the supporting plane with outward normal `n_f` about the line
/// `a + s e` until it hits the point set again. `t` points from the line
/// into the face already known to lie in the plane.
fn wrap(points: &[Vector], a: &Vector, e: &Vector, n_f: &Vector, t: &Vector) -> Vector {
    let mut best: Option<(f64, Vector)> = None;
    let scale = points.iter().fold(1.0, |m: f64, p| m.max(p.max_abs()));
    for p in points {
        let mut w = *p - *a;
        w -= *e * w.dot(e);
        if w.norm() <= 1e-13 * scale {
            continue;
        }
        let phi = num::atan2(-w.dot(n_f), w.dot(t));
        if best.map_or(true, |(b, _)| phi > b) {
            best = Some((phi, w));
        }
    }
    let Some((_, w)) = best else { return *n_f };
    let r = w * (1.0 / w.norm());
    let (cos_phi, sin_phi) = (r.dot(t), -r.dot(n_f));
    let m = -(*t * sin_phi + *n_f * cos_phi);
    m.normalized().unwrap_or(*n_f)
}

/// Points on the supporting plane with normal `m`, as a counter-clockwise
/// loop, together with a refit (Newell) normal.
fn gather_facet(points: &[Vector], m: &Vector, tol: f64) -> (Vector, Vec<usize>) {
    let alpha = points.iter().map(|p| p.dot(m)).fold(f64::NEG_INFINITY, f64::max);
    let on: Vec<usize> = (0..points.len())
        .filter(|&i| points[i].dot(m) >= alpha - tol)
        .collect();
    let (e1, e2) = plane_basis(m);
    let proj: Vec<[f64; 2]> = on.iter().map(|&i| [points[i].dot(&e1), points[i].dot(&e2)]).collect();
    let loop_: Vec<usize> = hull2_indices(&proj, tol).into_iter().map(|k| on[k]).collect();
    if loop_.len() < 3 {
        return (*m, loop_);
    }
    let c = loop_.iter().fold(Vector::ZERO, |s, &i| s + points[i]) * (1.0 / loop_.len() as f64);
    let mut n = Vector::ZERO;
    for i in 0..loop_.len() {
        let a = points[loop_[i]] - c;
        let b = points[loop_[(i + 1) % loop_.len()]] - c;
        n += a.cross(&b);
    }
    (n.normalized().unwrap_or(*m), loop_)
}

fn segment_ends(points: &[Vector], idx: &[usize]) -> (usize, usize) {
    let mut best = (idx[0], idx[0], -1.0);
    for &i in idx {
        for &j in idx {
            let d = points[i].distance(&points[j]);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    (best.0, best.1)
}

/// Hull of a point set whose affine dimension is below the ambient one.
pub(crate) fn lower_dim_hull(dim: usize, points: &[Vector], adim: usize, frame: [usize; 4], tol: f64) -> Polytope {
    let axes = |k: usize| Direction::from_unit(Vector::axis(k));
    let hs = |u: Vector, p: &Vector| HalfSpace { normal: Direction::from_unit(u), offset: p.dot(&u) };
    match adim {
        0 => {
            let p = points[frame[0]];
            let mut facets = Vec::new();
            for k in 0..dim {
                facets.push(HalfSpace { normal: axes(k), offset: p[k] });
                facets.push(HalfSpace { normal: Direction::from_unit(-Vector::axis(k)), offset: -p[k] });
            }
            Polytope::finalize(dim, alloc::vec![p], facets)
        }
        1 => {
            let a0 = points[frame[0]];
            let d = (points[frame[1]] - a0).normalized().unwrap_or(Vector::axis(0));
            let (mut lo, mut hi) = (0usize, 0usize);
            for (i, p) in points.iter().enumerate() {
                if p.dot(&d) < points[lo].dot(&d) {
                    lo = i;
                }
                if p.dot(&d) > points[hi].dot(&d) {
                    hi = i;
                }
            }
            let (a, b) = (points[lo], points[hi]);
            let mut facets = alloc::vec![hs(d, &b), hs(-d, &a)];
            let comp: Vec<Vector> = if dim == 2 {
                alloc::vec![d.perp()]
            } else {
                let (w1, w2) = plane_basis(&d);
                alloc::vec![w1, w2]
            };
            for w in comp {
                facets.push(hs(w, &a));
                facets.push(hs(-w, &a));
            }
            Polytope::finalize(dim, alloc::vec![a, b], facets)
        }
        _ => {
            // planar polygon in space
            let p0 = points[frame[0]];
            let m = (points[frame[1]] - p0)
                .cross(&(points[frame[2]] - p0))
                .normalized()
                .unwrap_or(Vector::axis(2));
            let (e1, e2) = plane_basis(&m);
            let proj: Vec<[f64; 2]> = points.iter().map(|p| [p.dot(&e1), p.dot(&e2)]).collect();
            let loop_: Vec<Vector> = hull2_indices(&proj, tol).into_iter().map(|i| points[i]).collect();
            let mut facets = alloc::vec![hs(m, &p0), hs(-m, &p0)];
            for i in 0..loop_.len() {
                let a = loop_[i];
                let b = loop_[(i + 1) % loop_.len()];
                if let Some(n) = (b - a).cross(&m).normalized() {
                    facets.push(hs(n, &a));
                }
            }
            Polytope::finalize(dim, loop_, facets)
        }
    }
}

/// Hull of a full-dimensional point set.
pub(crate) fn full_hull(dim: usize, points: &[Vector], tol: f64) -> Polytope {
    if dim == 2 {
        let proj: Vec<[f64; 2]> = points.iter().map(|p| [p.x(), p.y()]).collect();
        let idx = hull2_indices(&proj, tol);
        let verts: Vec<Vector> = idx.iter().map(|&i| points[i]).collect();
        let normals: Vec<Vector> = (0..verts.len())
            .filter_map(|i| {
                let d = verts[(i + 1) % verts.len()] - verts[i];
                (-d.perp()).normalized()
            })
            .collect();
        assemble_full(2, &verts, &normals)
    } else {
        let normals = gift_wrap_normals(points, tol);
        assemble_full(3, points, &normals)
    }
}

pub(crate) fn frame_of(points: &[Vector], tol: f64) -> (usize, [usize; 4]) {
    affine_frame(points, tol)
}
