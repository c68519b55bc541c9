//! Directions, halfspaces and the dual-representation [`Polytope`].
//!
//! Every polytope carries both its vertex list and an irredundant facet list
//! whose offsets are support values. Constructors in [`crate::algebra`]
//! cross-validate the two descriptions; the query methods here (support
//! function, Hausdorff distance, homothety detection, inclusion) only read
//! them.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::num;
use crate::vector::Vector;

/// Global tolerance for user-facing geometric predicates.
pub const EPS_GEOM: f64 = 1e-9;

/// Two unit directions are identified when they are closer than this (radians).
pub const ANGLE_TOL: f64 = 1e-9;

/// Relative tolerance for incidence decisions while assembling polytopes.
pub(crate) const TIGHT: f64 = 1e-10;

/// Threshold on |det| below which a set of unit normals is treated as rank deficient.
const RANK_TOL: f64 = 1e-12;

/// A unit vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction(Vector);

impl Direction {
    /// Normalizes `v`; fails for vectors shorter than [`EPS_GEOM`].
    pub fn new(v: Vector) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::InvalidInput("non-finite direction".into()));
        }
        if v.norm() < EPS_GEOM {
            return Err(Error::ZeroDirection);
        }
        Ok(Direction(v * (1.0 / v.norm())))
    }

    /// Wraps a vector that is already of unit length.
    pub(crate) fn from_unit(v: Vector) -> Self {
        Direction(v)
    }

    #[inline]
    pub fn vector(&self) -> Vector {
        self.0
    }

    /// Angle to another direction in radians.
    pub fn angle_to(&self, other: &Direction) -> f64 {
        let chord = self.0.distance(&other.0);
        2.0 * libm::asin((chord / 2.0).min(1.0))
    }

    pub fn same_as(&self, other: &Direction) -> bool {
        self.0.distance(&other.0) < ANGLE_TOL
    }
}

/// The closed halfspace `{x : <x, normal> <= offset}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfSpace {
    pub normal: Direction,
    pub offset: f64,
}

impl HalfSpace {
    pub fn new(normal: Vector, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::InvalidInput("non-finite halfspace offset".into()));
        }
        let n = normal.norm();
        let dir = Direction::new(normal)?;
        Ok(HalfSpace { normal: dir, offset: offset / n })
    }

    /// Signed violation `<p, u> - offset`.
    #[inline]
    pub fn excess(&self, p: &Vector) -> f64 {
        p.dot(&self.normal.0) - self.offset
    }

    #[inline]
    pub fn contains(&self, p: &Vector, tol: f64) -> bool {
        self.excess(p) <= tol
    }
}

/// `x -> scale * x + translation`, carrying one body onto another.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomothetyWitness {
    pub scale: f64,
    pub translation: Vector,
}

impl HomothetyWitness {
    pub fn apply(&self, p: &Vector) -> Vector {
        *p * self.scale + self.translation
    }
}

/// A convex polytope in the plane or in space, stored with both its vertices
/// and its facet halfspaces.
///
/// Lower-dimensional polytopes (points, segments, planar polygons in space)
/// keep an H-description made of their affine hull equations, written as
/// opposite halfspace pairs, together with their relative facets.
#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<HalfSpace>,
    faces: Vec<Vec<usize>>,
    affine_dim: usize,
}

impl Polytope {
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    #[inline]
    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Indices of the vertices on facet `i`, in counter-clockwise order seen
    /// from outside (spatial bodies) or as the edge endpoints (planar bodies).
    pub fn face_vertices(&self, i: usize) -> &[usize] {
        &self.faces[i]
    }

    #[inline]
    pub fn is_full_dim(&self) -> bool {
        self.affine_dim == self.dim
    }

    /// Dimension of the affine hull.
    #[inline]
    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    /// Convex hull of `points`; see [`crate::algebra::hull`].
    pub fn from_vertices(dim: usize, points: &[Vector]) -> Result<Self> {
        crate::algebra::hull(dim, points)
    }

    /// Intersection of halfspaces; see [`crate::algebra::intersect_halfspaces`].
    pub fn from_halfspaces(dim: usize, hs: &[HalfSpace]) -> Result<Self> {
        crate::algebra::intersect_halfspaces(dim, hs)
    }

    /// Support function `h(u) = max <x, u>` over the body.
    pub fn support(&self, u: Vector) -> Result<f64> {
        if u.norm() < EPS_GEOM {
            return Err(Error::ZeroDirection);
        }
        Ok(self.h(&u))
    }

    /// Support value without the zero-direction check.
    #[inline]
    pub(crate) fn h(&self, u: &Vector) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// The outer unit normals of the facets, i.e. the set `U(P)`.
    pub fn facet_normals(&self) -> Result<Vec<Direction>> {
        if !self.is_full_dim() {
            return Err(Error::LowerDimensional);
        }
        Ok(self.facets.iter().map(|f| f.normal).collect())
    }

    /// Largest absolute coordinate, at least 1. Used to scale tolerances.
    pub fn scale(&self) -> f64 {
        coord_scale(&self.vertices)
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max(a.distance(b));
            }
        }
        d
    }

    /// Arithmetic mean of the vertices (equivariant under homotheties).
    pub fn vertex_centroid(&self) -> Vector {
        let mut c = Vector::ZERO;
        for v in &self.vertices {
            c += *v;
        }
        c * (1.0 / self.vertices.len() as f64)
    }

    pub fn contains(&self, p: &Vector, tol: f64) -> bool {
        self.facets.iter().all(|f| f.contains(p, tol))
    }

    /// Edges as vertex index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for face in &self.faces {
            let k = face.len();
            if k < 2 {
                continue;
            }
            let pairs = if k == 2 { 1 } else { k };
            for i in 0..pairs {
                let (a, b) = (face[i], face[(i + 1) % k]);
                let e = (a.min(b), a.max(b));
                if a != b && !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        if out.is_empty() && self.vertices.len() == 2 {
            out.push((0, 1));
        }
        out
    }

    /// The image under `x -> alpha * x + shift`.
    pub fn homothetic(&self, alpha: f64, shift: Vector) -> Result<Polytope> {
        if !(alpha.is_finite() && shift.is_finite()) {
            return Err(Error::InvalidInput("non-finite homothety".into()));
        }
        if alpha <= 0.0 {
            let pts: Vec<Vector> = self.vertices.iter().map(|v| *v * alpha + shift).collect();
            return crate::algebra::hull(self.dim, &pts);
        }
        let vertices = self.vertices.iter().map(|v| *v * alpha + shift).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| HalfSpace {
                normal: f.normal,
                offset: alpha * f.offset + f.normal.0.dot(&shift),
            })
            .collect();
        Ok(Polytope {
            dim: self.dim,
            vertices,
            facets,
            faces: self.faces.clone(),
            affine_dim: self.affine_dim,
        })
    }

    pub fn scaled(&self, mu: f64) -> Result<Polytope> {
        self.homothetic(mu, Vector::ZERO)
    }

    pub fn translated(&self, t: Vector) -> Result<Polytope> {
        self.homothetic(1.0, t)
    }

    /// Euclidean distance from `p` to the body.
    pub fn distance_to_point(&self, p: &Vector) -> f64 {
        let tol = TIGHT * self.scale().max(p.max_abs());
        match self.affine_dim {
            0 => self.vertices[0].distance(p),
            1 => segment_distance(p, &self.vertices[0], &self.vertices[1]),
            2 if self.dim == 3 => {
                let n = planar_normal(&self.vertices);
                let loop_ = order_loop(&self.vertices, &n);
                polygon_distance(p, &loop_, &n, n.dot(&self.vertices[0]))
            }
            _ => {
                let mut best = f64::INFINITY;
                let mut outside = false;
                for (i, f) in self.facets.iter().enumerate() {
                    if f.excess(p) <= tol {
                        continue;
                    }
                    outside = true;
                    let face = &self.faces[i];
                    let d = if self.dim == 2 {
                        segment_distance(p, &self.vertices[face[0]], &self.vertices[face[1]])
                    } else {
                        let pts: Vec<Vector> = face.iter().map(|&k| self.vertices[k]).collect();
                        polygon_distance(p, &pts, &f.normal.0, f.offset)
                    };
                    best = best.min(d);
                }
                if outside {
                    best
                } else {
                    0.0
                }
            }
        }
    }

    /// Hausdorff distance between two bodies of the same ambient dimension.
    pub fn hausdorff(&self, other: &Polytope) -> Result<f64> {
        check_same_dim(self, other)?;
        let a = self
            .vertices
            .iter()
            .map(|v| other.distance_to_point(v))
            .fold(0.0, f64::max);
        let b = other
            .vertices
            .iter()
            .map(|v| self.distance_to_point(v))
            .fold(0.0, f64::max);
        Ok(a.max(b))
    }

    /// `true` iff every vertex of `self` satisfies every facet inequality of
    /// `other` within `tol`.
    pub fn is_subset_of(&self, other: &Polytope, tol: f64) -> Result<bool> {
        check_same_dim(self, other)?;
        Ok(self
            .vertices
            .iter()
            .all(|v| other.facets.iter().all(|f| f.contains(v, tol))))
    }

    /// Looks for `alpha > 0`, `x0` with `other = alpha * self + x0`.
    ///
    /// The candidate scale comes from the volume ratio and the translation
    /// from the vertex centroids; the candidate is accepted when the facet
    /// normal sets match and the Hausdorff distance of the image to `other`
    /// is below `EPS_GEOM` times the diameter of `other`.
    pub fn detect_homothety(&self, other: &Polytope) -> Result<Option<HomothetyWitness>> {
        check_same_dim(self, other)?;
        if !self.is_full_dim() || !other.is_full_dim() {
            return Err(Error::LowerDimensional);
        }
        if self.facets.len() != other.facets.len() {
            return Ok(None);
        }
        // loose pre-filter; the Hausdorff test below decides
        let matched = self.facets.iter().all(|f| {
            other
                .facets
                .iter()
                .any(|g| f.normal.0.distance(&g.normal.0) < 1e-6)
        });
        if !matched {
            return Ok(None);
        }
        let n = self.dim as f64;
        let vp = crate::metrics::volume(self);
        let vq = crate::metrics::volume(other);
        let alpha = num::powf(vq / vp, 1.0 / n);
        if !(alpha.is_finite() && alpha > 0.0) {
            return Ok(None);
        }
        let x0 = other.vertex_centroid() - self.vertex_centroid() * alpha;
        let image = self.homothetic(alpha, x0)?;
        let tol = EPS_GEOM * other.diameter().max(1.0);
        if image.hausdorff(other)? <= tol {
            Ok(Some(HomothetyWitness { scale: alpha, translation: x0 }))
        } else {
            Ok(None)
        }
    }

    /// Builds a polytope from already-validated vertices and facets,
    /// computing the canonical ordering and the vertex/facet incidences.
    pub(crate) fn finalize(dim: usize, vertices: Vec<Vector>, facets: Vec<HalfSpace>) -> Polytope {
        let affine_dim = affine_dimension(&vertices, TIGHT * coord_scale(&vertices));
        let mut facets = facets;
        facets.sort_by(|a, b| a.normal.0.lex_cmp(&b.normal.0));
        let vertices = if dim == 2 {
            order_ccw(vertices)
        } else {
            let mut v = vertices;
            v.sort_by(|a, b| a.lex_cmp(b));
            v
        };
        let tol = TIGHT * coord_scale(&vertices);
        let faces = facets
            .iter()
            .map(|f| {
                let idx: Vec<usize> = (0..vertices.len())
                    .filter(|&k| num::abs(f.excess(&vertices[k])) <= tol)
                    .collect();
                if dim == 2 {
                    order_edge(&vertices, idx, &f.normal.0)
                } else {
                    order_face(&vertices, idx, &f.normal.0)
                }
            })
            .collect();
        Polytope { dim, vertices, facets, faces, affine_dim }
    }
}

/// Assembles a full-dimensional polytope from a superset of its vertices and
/// a superset of its facet normals. Offsets are recomputed as support values
/// over `points`; vertices are the points whose tight normals have full rank
/// and facets are the normals whose tight vertices span a hyperplane.
pub(crate) fn assemble_full(dim: usize, points: &[Vector], normals: &[Vector]) -> Polytope {
    let tol = TIGHT * coord_scale(points);
    let mut dirs: Vec<Vector> = Vec::new();
    for u in normals {
        if !dirs.iter().any(|d| d.distance(u) < ANGLE_TOL) {
            dirs.push(*u);
        }
    }
    let offsets: Vec<f64> = dirs
        .iter()
        .map(|u| points.iter().map(|p| p.dot(u)).fold(f64::NEG_INFINITY, f64::max))
        .collect();

    let mut vertices: Vec<Vector> = Vec::new();
    for p in points {
        let tight: Vec<Vector> = dirs
            .iter()
            .zip(&offsets)
            .filter(|(u, a)| p.dot(u) >= **a - tol)
            .map(|(u, _)| *u)
            .collect();
        if normal_rank(dim, &tight) == dim && !vertices.iter().any(|v| v.distance(p) <= tol) {
            vertices.push(*p);
        }
    }

    let mut facets = Vec::new();
    for u in &dirs {
        let alpha = vertices.iter().map(|p| p.dot(u)).fold(f64::NEG_INFINITY, f64::max);
        let on: Vec<Vector> = vertices
            .iter()
            .filter(|p| p.dot(u) >= alpha - tol)
            .copied()
            .collect();
        if affine_dimension(&on, tol) + 1 >= dim {
            facets.push(HalfSpace { normal: Direction::from_unit(*u), offset: alpha });
        }
    }
    Polytope::finalize(dim, vertices, facets)
}

pub(crate) fn check_same_dim(p: &Polytope, q: &Polytope) -> Result<()> {
    if p.dim != q.dim {
        Err(Error::DimensionMismatch(p.dim, q.dim))
    } else {
        Ok(())
    }
}

pub(crate) fn coord_scale(points: &[Vector]) -> f64 {
    points.iter().fold(1.0, |m, p| m.max(p.max_abs()))
}

/// Rank of a set of unit normals, decided with [`RANK_TOL`].
pub(crate) fn normal_rank(dim: usize, normals: &[Vector]) -> usize {
    if normals.is_empty() {
        return 0;
    }
    let mut rank = 1;
    for (i, a) in normals.iter().enumerate() {
        for (j, b) in normals.iter().enumerate().skip(i + 1) {
            let c = a.cross(b);
            if c.norm() > RANK_TOL {
                if dim == 2 {
                    return 2;
                }
                rank = 2;
                for d in normals.iter().skip(j + 1) {
                    if num::abs(c.dot(d)) > RANK_TOL {
                        return 3;
                    }
                }
            }
        }
    }
    rank
}

/// Affine dimension of a point set: 0, 1, 2 or 3.
pub(crate) fn affine_dimension(points: &[Vector], tol: f64) -> usize {
    affine_frame(points, tol).0
}

/// Affine dimension plus the indices of up to four affinely independent
/// points chosen greedily by distance.
pub(crate) fn affine_frame(points: &[Vector], tol: f64) -> (usize, [usize; 4]) {
    let mut idx = [0usize; 4];
    if points.is_empty() {
        return (0, idx);
    }
    let p0 = points[0];
    let far = |f: &dyn Fn(&Vector) -> f64| -> (usize, f64) {
        points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, f(p)))
            .fold((0, -1.0), |best, x| if x.1 > best.1 { x } else { best })
    };
    let (i1, d1) = far(&|p| p.distance(&p0));
    if d1 <= tol {
        return (0, idx);
    }
    idx[1] = i1;
    let e1 = (points[i1] - p0) * (1.0 / d1);
    let (i2, d2) = far(&|p| {
        let w = *p - p0;
        (w - e1 * w.dot(&e1)).norm()
    });
    if d2 <= tol {
        return (1, idx);
    }
    idx[2] = i2;
    let w2 = points[i2] - p0;
    let e2 = (w2 - e1 * w2.dot(&e1)) * (1.0 / d2);
    let m = e1.cross(&e2);
    let (i3, d3) = far(&|p| num::abs((*p - p0).dot(&m)));
    if d3 <= tol {
        return (2, idx);
    }
    idx[3] = i3;
    (3, idx)
}

/// Orthonormal `(e1, e2)` spanning the plane orthogonal to unit `u`, with `e1 x e2 = u`.
pub(crate) fn plane_basis(u: &Vector) -> (Vector, Vector) {
    let a = u.0.iter().map(|c| num::abs(*c)).collect::<Vec<_>>();
    let axis = if a[0] <= a[1] && a[0] <= a[2] {
        Vector::axis(0)
    } else if a[1] <= a[2] {
        Vector::axis(1)
    } else {
        Vector::axis(2)
    };
    let e1 = (axis - *u * axis.dot(u)).normalized().unwrap_or(Vector::axis(0));
    let e2 = u.cross(&e1);
    (e1, e2)
}

/// Unit normal of a planar point set in space (best triple by area).
pub(crate) fn planar_normal(points: &[Vector]) -> Vector {
    let (_, idx) = affine_frame(points, 0.0);
    let a = points[idx[1]] - points[idx[0]];
    let b = points[idx[2]] - points[idx[0]];
    a.cross(&b).normalized().unwrap_or(Vector::axis(2))
}

fn centroid(points: &[Vector]) -> Vector {
    let mut c = Vector::ZERO;
    for p in points {
        c += *p;
    }
    c * (1.0 / points.len().max(1) as f64)
}

/// Counter-clockwise order around the centroid starting at the lexicographic minimum.
fn order_ccw(mut pts: Vec<Vector>) -> Vec<Vector> {
    if pts.len() < 2 {
        return pts;
    }
    let c = centroid(&pts);
    pts.sort_by(|a, b| {
        let ta = num::atan2(a.y() - c.y(), a.x() - c.x());
        let tb = num::atan2(b.y() - c.y(), b.x() - c.x());
        ta.partial_cmp(&tb).unwrap_or(Ordering::Equal)
    });
    let start = (0..pts.len())
        .min_by(|&i, &j| pts[i].lex_cmp(&pts[j]))
        .unwrap_or(0);
    pts.rotate_left(start);
    pts
}

/// Orders a planar point loop counter-clockwise around `normal`.
pub(crate) fn order_loop(points: &[Vector], normal: &Vector) -> Vec<Vector> {
    let idx: Vec<usize> = (0..points.len()).collect();
    order_face(points, idx, normal)
        .into_iter()
        .map(|i| points[i])
        .collect()
}

fn order_face(vertices: &[Vector], mut idx: Vec<usize>, normal: &Vector) -> Vec<usize> {
    if idx.len() < 3 {
        return idx;
    }
    let pts: Vec<Vector> = idx.iter().map(|&i| vertices[i]).collect();
    let c = centroid(&pts);
    let (e1, e2) = plane_basis(normal);
    idx.sort_by(|&a, &b| {
        let (wa, wb) = (vertices[a] - c, vertices[b] - c);
        let ta = num::atan2(wa.dot(&e2), wa.dot(&e1));
        let tb = num::atan2(wb.dot(&e2), wb.dot(&e1));
        ta.partial_cmp(&tb).unwrap_or(Ordering::Equal)
    });
    idx
}

/// Orders the two endpoints of a planar edge so the outward normal is on the right.
fn order_edge(vertices: &[Vector], idx: Vec<usize>, normal: &Vector) -> Vec<usize> {
    if idx.len() != 2 {
        return idx;
    }
    let d = vertices[idx[1]] - vertices[idx[0]];
    if d.perp().dot(normal) > 0.0 {
        alloc::vec![idx[1], idx[0]]
    } else {
        idx
    }
}

pub(crate) fn segment_distance(p: &Vector, a: &Vector, b: &Vector) -> f64 {
    let d = *b - *a;
    let len2 = d.norm_squared();
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((*p - *a).dot(&d) / len2).clamp(0.0, 1.0);
    p.distance(&(*a + d * t))
}

/// Distance from `p` to a convex polygon (ordered counter-clockwise around
/// `normal`) lying in the plane `<x, normal> = offset`.
fn polygon_distance(p: &Vector, loop_: &[Vector], normal: &Vector, offset: f64) -> f64 {
    let k = loop_.len();
    match k {
        0 => return f64::INFINITY,
        1 => return p.distance(&loop_[0]),
        2 => return segment_distance(p, &loop_[0], &loop_[1]),
        _ => {}
    }
    let height = p.dot(normal) - offset;
    let q = *p - *normal * height;
    let inside = (0..k).all(|i| {
        let a = loop_[i];
        let b = loop_[(i + 1) % k];
        (b - a).cross(&(q - a)).dot(normal) >= -TIGHT * (b - a).norm() * (1.0 + q.max_abs())
    });
    if inside {
        return num::abs(height);
    }
    (0..k)
        .map(|i| segment_distance(p, &loop_[i], &loop_[(i + 1) % k]))
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn support_examples() {
        let sq = shapes::unit_square();
        assert_eq!(sq.support(Vector::new2(1.0, 0.0)).unwrap(), 1.0);
        assert_eq!(sq.support(Vector::new2(1.0, 1.0)).unwrap(), 2.0);
        let d = shapes::diamond();
        assert_eq!(d.support(Vector::new2(1.0, 1.0)).unwrap(), 1.0);
        assert_eq!(sq.support(Vector::new2(0.0, 0.0)), Err(Error::ZeroDirection));
    }

    #[test]
    fn support_is_positively_homogeneous() {
        let d = shapes::diamond();
        let u = Vector::new2(0.3, -1.7);
        let a = d.support(u).unwrap();
        let b = d.support(u * 4.5).unwrap();
        assert!((b - 4.5 * a).abs() < 1e-12);
    }

    #[test]
    fn facet_normal_examples() {
        let sq = shapes::unit_square();
        let n: Vec<Vector> = sq.facet_normals().unwrap().iter().map(|d| d.vector()).collect();
        assert_eq!(n.len(), 4);
        for e in [
            Vector::new2(1.0, 0.0),
            Vector::new2(-1.0, 0.0),
            Vector::new2(0.0, 1.0),
            Vector::new2(0.0, -1.0),
        ] {
            assert!(n.iter().any(|u| u.distance(&e) < 1e-12));
        }
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let dn: Vec<Vector> = shapes::diamond()
            .facet_normals()
            .unwrap()
            .iter()
            .map(|d| d.vector())
            .collect();
        assert_eq!(dn.len(), 4);
        for (x, y) in [(s, s), (-s, s), (s, -s), (-s, -s)] {
            assert!(dn.iter().any(|u| u.distance(&Vector::new2(x, y)) < 1e-12));
        }
        let cube = shapes::unit_cube();
        assert_eq!(cube.facet_normals().unwrap().len(), 6);
    }

    #[test]
    fn facet_normals_reject_lower_dim() {
        let seg = crate::algebra::hull(2, &[Vector::new2(0.0, 0.0), Vector::new2(1.0, 1.0)]).unwrap();
        assert_eq!(seg.facet_normals(), Err(Error::LowerDimensional));
    }

    #[test]
    fn hausdorff_examples() {
        let sq = shapes::unit_square();
        assert_eq!(sq.hausdorff(&sq).unwrap(), 0.0);
        let big = shapes::rect(0.0, 2.0, 0.0, 2.0);
        assert!((sq.hausdorff(&big).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        let moved = sq.translated(Vector::new2(3.0, 0.0)).unwrap();
        assert!((sq.hausdorff(&moved).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(
            sq.hausdorff(&shapes::unit_cube()),
            Err(Error::DimensionMismatch(2, 3))
        );
    }

    #[test]
    fn hausdorff_to_segment_and_in_space() {
        let seg = crate::algebra::hull(2, &[Vector::new2(0.0, 0.0), Vector::new2(1.0, 0.0)]).unwrap();
        let sq = shapes::unit_square();
        assert!((seg.hausdorff(&sq).unwrap() - 1.0).abs() < 1e-12);
        let cube = shapes::unit_cube();
        let cube2 = shapes::cube_centered(1.0);
        // farthest vertex (-1,-1,-1) from [0,1]^3
        assert!((cube.hausdorff(&cube2).unwrap() - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn homothety_examples() {
        let k = shapes::diamond();
        let img = k.homothetic(2.0, Vector::new2(1.0, 1.0)).unwrap();
        let w = k.detect_homothety(&img).unwrap().unwrap();
        assert!((w.scale - 2.0).abs() < 1e-12);
        assert!(w.translation.distance(&Vector::new2(1.0, 1.0)) < 1e-12);

        let sq = shapes::unit_square();
        let rect = shapes::rect(0.0, 1.0, 0.0, 2.0);
        assert!(sq.detect_homothety(&rect).unwrap().is_none());
        assert!(shapes::diamond().detect_homothety(&sq).unwrap().is_none());
    }

    #[test]
    fn subset_examples() {
        let sq = shapes::unit_square();
        assert!(sq.is_subset_of(&sq, EPS_GEOM).unwrap());
        assert!(sq.is_subset_of(&shapes::rect(-1.0, 2.0, -1.0, 2.0), EPS_GEOM).unwrap());
        assert!(!shapes::rect(0.0, 2.0, 0.0, 2.0).is_subset_of(&sq, EPS_GEOM).unwrap());
        assert!(sq.is_subset_of(&shapes::unit_cube(), EPS_GEOM).is_err());
    }

    #[test]
    fn direction_rejects_zero() {
        assert_eq!(Direction::new(Vector::new2(0.0, 1e-12)), Err(Error::ZeroDirection));
        let d = Direction::new(Vector::new2(3.0, 4.0)).unwrap();
        assert!((d.vector().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn halfspace_normalizes_offset() {
        let h = HalfSpace::new(Vector::new2(2.0, 0.0), 4.0).unwrap();
        assert!((h.offset - 2.0).abs() < 1e-15);
    }
}
