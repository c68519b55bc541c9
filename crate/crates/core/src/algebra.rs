//! Constructive operations on polytopes: hull, halfspace intersection,
//! Minkowski sum and erosion by a gauge body.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{
    assemble_full, check_same_dim, coord_scale, plane_basis, HalfSpace, Polytope, ANGLE_TOL, TIGHT,
};
use crate::hull::{clip_lines, frame_of, full_hull, lower_dim_hull};
use crate::num;
use crate::vector::Vector;

fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(dim))
    }
}

/// Convex hull of a finite point set. Collinear or coplanar inputs give a
/// lower-dimensional polytope.
pub fn hull(dim: usize, points: &[Vector]) -> Result<Polytope> {
    check_dim(dim)?;
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidInput("non-finite coordinate".into()));
    }
    if dim == 2 && points.iter().any(|p| p.z() != 0.0) {
        return Err(Error::InvalidInput("planar point with nonzero z".into()));
    }
    let tol = TIGHT * coord_scale(points);
    let (adim, frame) = frame_of(points, tol);
    if adim < dim {
        return Ok(lower_dim_hull(dim, points, adim, frame, tol));
    }
    Ok(full_hull(dim, points, tol))
}

/// Whether the origin lies in the interior of the convex hull of `normals`.
pub fn positively_spanning(dim: usize, normals: &[Vector]) -> bool {
    if normals.len() <= dim {
        return false;
    }
    match hull(dim, normals) {
        Ok(h) if h.is_full_dim() => h.facets().iter().all(|f| f.offset > 1e-12),
        _ => false,
    }
}

/// Vertex enumeration of `⋂ {x : <x, u> <= α}`.
///
/// Each boundary hyperplane is clipped by all the others (in space, the clip
/// happens inside the plane with the planar routine); the surviving pieces
/// give the vertices and the irredundant facets. A degenerate intersection is
/// returned as a lower-dimensional polytope.
pub fn intersect_halfspaces(dim: usize, hs: &[HalfSpace]) -> Result<Polytope> {
    check_dim(dim)?;
    let normals: Vec<Vector> = hs.iter().map(|h| h.normal.vector()).collect();
    if hs.len() < dim + 1 || !positively_spanning(dim, &normals) {
        return Err(Error::Unbounded);
    }
    let s = hs.iter().fold(1.0, |m: f64, h| m.max(num::abs(h.offset)));
    let tol = TIGHT * s;
    let mut points: Vec<Vector> = Vec::new();
    if dim == 2 {
        let a: Vec<[f64; 2]> = normals.iter().map(|u| [u.x(), u.y()]).collect();
        let b: Vec<f64> = hs.iter().map(|h| h.offset).collect();
        let clip = clip_lines(&a, &b, tol);
        if clip.unbounded {
            return Err(Error::Unbounded);
        }
        points.extend(clip.points.iter().map(|p| Vector::new2(p[0], p[1])));
    } else {
        for (i, hi) in hs.iter().enumerate() {
            let u = hi.normal.vector();
            let (e1, e2) = plane_basis(&u);
            let o = u * hi.offset;
            let mut a: Vec<[f64; 2]> = Vec::new();
            let mut b: Vec<f64> = Vec::new();
            let mut empty = false;
            for (j, hj) in hs.iter().enumerate() {
                if j == i {
                    continue;
                }
                let v = hj.normal.vector();
                let inplane = [v.dot(&e1), v.dot(&e2)];
                let len = num::sqrt(inplane[0] * inplane[0] + inplane[1] * inplane[1]);
                let rhs = hj.offset - hi.offset * u.dot(&v);
                if len <= 1e-12 {
                    if rhs < -tol {
                        empty = true;
                        break;
                    }
                    continue;
                }
                a.push([inplane[0] / len, inplane[1] / len]);
                b.push(rhs / len);
            }
            if empty {
                continue;
            }
            let clip = clip_lines(&a, &b, tol);
            if clip.unbounded {
                return Err(Error::Unbounded);
            }
            points.extend(clip.points.iter().map(|p| o + e1 * p[0] + e2 * p[1]));
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyBody);
    }
    let ptol = TIGHT * coord_scale(&points);
    let (adim, frame) = frame_of(&points, ptol);
    if adim < dim {
        return Ok(lower_dim_hull(dim, &points, adim, frame, ptol));
    }
    Ok(assemble_full(dim, &points, &normals))
}

/// Minkowski sum `P + Q`.
///
/// In the plane the vertices are read off sector by sector of the merged
/// normal fans, so the facet normals of the result are exactly those of the
/// summands. In space the candidate facet normals are the facet normals of
/// both summands plus the cross products of edge pairs that are extreme in
/// the same direction; the vertices are among the pairwise vertex sums.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    check_same_dim(p, q)?;
    let dim = p.dim();
    let mut normals: Vec<Vector> = Vec::new();
    for f in p.facets().iter().chain(q.facets()) {
        let u = f.normal.vector();
        if !normals.iter().any(|w| w.distance(&u) < ANGLE_TOL) {
            normals.push(u);
        }
    }
    let points: Vec<Vector> = if dim == 2 {
        let mut angles: Vec<f64> = normals.iter().map(|u| num::atan2(u.y(), u.x())).collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
        let k = angles.len();
        (0..k)
            .map(|i| {
                let a = angles[i];
                let b = if i + 1 < k { angles[i + 1] } else { angles[0] + 2.0 * core::f64::consts::PI };
                let mid = 0.5 * (a + b);
                let w = Vector::new2(num::cos(mid), num::sin(mid));
                argmax(p.vertices(), &w) + argmax(q.vertices(), &w)
            })
            .collect()
    } else {
        let tol = TIGHT * p.scale().max(q.scale());
        let pe = p.edges();
        let qe = q.edges();
        for &(a, b) in &pe {
            let dp = p.vertices()[b] - p.vertices()[a];
            for &(c, d) in &qe {
                let dq = q.vertices()[d] - q.vertices()[c];
                let Some(w) = dp.cross(&dq).normalized() else { continue };
                if dp.cross(&dq).norm() <= 1e-12 * dp.norm() * dq.norm() {
                    continue;
                }
                for w in [w, -w] {
                    let hp = p.h(&w);
                    let hq = q.h(&w);
                    let extreme = num::abs(p.vertices()[a].dot(&w) - hp) <= tol
                        && num::abs(p.vertices()[b].dot(&w) - hp) <= tol
                        && num::abs(q.vertices()[c].dot(&w) - hq) <= tol
                        && num::abs(q.vertices()[d].dot(&w) - hq) <= tol;
                    if extreme && !normals.iter().any(|n| n.distance(&w) < ANGLE_TOL) {
                        normals.push(w);
                    }
                }
            }
        }
        let mut pts = Vec::with_capacity(p.vertices().len() * q.vertices().len());
        for a in p.vertices() {
            for b in q.vertices() {
                pts.push(*a + *b);
            }
        }
        pts
    };
    let tol = TIGHT * coord_scale(&points);
    let (adim, frame) = frame_of(&points, tol);
    if adim < dim {
        return Ok(lower_dim_hull(dim, &points, adim, frame, tol));
    }
    Ok(assemble_full(dim, &points, &normals))
}

fn argmax(vertices: &[Vector], w: &Vector) -> Vector {
    let mut best = vertices[0];
    let mut bv = best.dot(w);
    for v in &vertices[1..] {
        let d = v.dot(w);
        if d > bv {
            bv = d;
            best = *v;
        }
    }
    best
}

/// Inner parallel body `P ~ tE = ⋂_{u ∈ U(P)} {x : <x,u> <= h_P(u) - t h_E(u)}`.
///
/// Only the facet normals of `P` are used: for a polytope this finite
/// intersection already equals the Minkowski difference. At `t = inr(P;E)`
/// the result is lower-dimensional.
pub fn erode(p: &Polytope, t: f64, e: &Polytope) -> Result<Polytope> {
    check_same_dim(p, e)?;
    if !p.is_full_dim() || !e.is_full_dim() {
        return Err(Error::LowerDimensional);
    }
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidInput("erosion distance must be finite and >= 0".into()));
    }
    if t == 0.0 {
        return Ok(p.clone());
    }
    let hs: Vec<HalfSpace> = p
        .facets()
        .iter()
        .map(|f| HalfSpace { normal: f.normal, offset: f.offset - t * e.h(&f.normal.vector()) })
        .collect();
    intersect_halfspaces(p.dim(), &hs)
}
