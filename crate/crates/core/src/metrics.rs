//! Scalar functionals of bodies relative to a gauge: volume, surface area,
//! relative inradius, relative quermassintegrals.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::minkowski_sum;
use crate::error::{Error, Result};
use crate::geometry::{check_same_dim, Direction, Polytope};
use crate::lp;
use crate::num;
use crate::vector::Vector;

/// Relative tolerance of the Steiner fit consistency check on `W_n`.
pub const EPS_FIT: f64 = 1e-7;

/// n-dimensional volume; zero for lower-dimensional bodies.
pub fn volume(p: &Polytope) -> f64 {
    if !p.is_full_dim() {
        return 0.0;
    }
    let v = p.vertices();
    if p.dim() == 2 {
        // fan from the first vertex keeps small bodies far from the origin accurate
        let o = v[0];
        let mut s = 0.0;
        for i in 1..v.len() - 1 {
            s += (v[i] - o).cross2(&(v[i + 1] - o));
        }
        return 0.5 * s;
    }
    let c = p.vertex_centroid();
    p.facets()
        .iter()
        .enumerate()
        .map(|(i, f)| (f.offset - c.dot(&f.normal.vector())) * facet_area(p, i) / 3.0)
        .sum()
}

/// Area of facet `i` of a spatial polytope.
fn facet_area(p: &Polytope, i: usize) -> f64 {
    let face = p.face_vertices(i);
    if face.len() < 3 {
        return 0.0;
    }
    let v = p.vertices();
    let u = p.facets()[i].normal.vector();
    let o = v[face[0]];
    let mut s = 0.0;
    for k in 1..face.len() - 1 {
        s += (v[face[k]] - o).cross(&(v[face[k + 1]] - o)).dot(&u);
    }
    0.5 * s
}

/// Perimeter (planar) or total facet area (spatial).
pub fn classical_surface(p: &Polytope) -> Result<f64> {
    if !p.is_full_dim() {
        return Err(Error::LowerDimensional);
    }
    let v = p.vertices();
    Ok(if p.dim() == 2 {
        (0..p.facets().len())
            .map(|i| {
                let f = p.face_vertices(i);
                v[f[0]].distance(&v[f[1]])
            })
            .sum()
    } else {
        (0..p.facets().len()).map(|i| facet_area(p, i)).sum()
    })
}

/// Classical isoperimetric quotient `S(K)^n / vol(K)^(n-1)`.
pub fn classical_quotient(p: &Polytope) -> Result<f64> {
    let n = p.dim() as i32;
    let s = classical_surface(p)?;
    Ok(num::powi(s, n) / num::powi(volume(p), n - 1))
}

/// Optimal solution of the relative inradius program.
#[derive(Clone, Debug)]
pub struct Inradius {
    pub r: f64,
    pub center: Vector,
    /// Dual multipliers of the facet constraints of `K` (optimality certificate).
    pub duals: Vec<f64>,
}

/// Relative inradius `inr(K;E)`: the largest `r` such that a translate of
/// `rE` fits in `K`, obtained from the program
/// `max r  s.t.  <x,u> + r h_E(u) <= h_K(u)  for u ∈ U(K)`.
pub fn inradius(k: &Polytope, e: &Polytope) -> Result<Inradius> {
    check_same_dim(k, e)?;
    if !k.is_full_dim() || !e.is_full_dim() {
        return Err(Error::LowerDimensional);
    }
    let n = k.dim();
    let c0 = k.vertex_centroid();
    let mut rows = Vec::with_capacity(k.facets().len());
    let mut rhs = Vec::with_capacity(k.facets().len());
    for f in k.facets() {
        let u = f.normal.vector();
        let mut row = vec![0.0; 2 * n + 1];
        for i in 0..n {
            row[i] = u[i];
            row[n + i] = -u[i];
        }
        row[2 * n] = e.h(&u);
        rows.push(row);
        rhs.push(f.offset - c0.dot(&u));
    }
    let mut obj = vec![0.0; 2 * n + 1];
    obj[2 * n] = 1.0;
    let sol = lp::maximize(&obj, &rows, &rhs)
        .map_err(|_| Error::DomainError("inradius program did not converge".into()))?;
    let mut center = c0;
    for i in 0..n {
        center.0[i] += sol.x[i] - sol.x[n + i];
    }
    Ok(Inradius { r: sol.value.max(0.0), center, duals: sol.duals })
}

/// The relative quermassintegrals `W_0..W_n` of a body with respect to a gauge.
#[derive(Clone, Debug, PartialEq)]
pub struct QuermassVector {
    pub w: Vec<f64>,
}

impl QuermassVector {
    pub fn dim(&self) -> usize {
        self.w.len() - 1
    }

    pub fn volume(&self) -> f64 {
        self.w[0]
    }

    /// Relative surface area `S(K;E) = n W_1(K;E)`.
    pub fn surface(&self) -> f64 {
        self.dim() as f64 * self.w[1]
    }

    /// Relative isoperimetric quotient `S(K;E)^n / vol(K)^(n-1)`.
    pub fn isoperimetric(&self) -> f64 {
        let n = self.dim() as i32;
        num::powi(self.surface(), n) / num::powi(self.w[0], n - 1)
    }

    /// `I_i = W_{i+1}^(n-i) / W_i^(n-i-1)` for `0 <= i <= n-2`.
    pub fn quotient_single(&self, i: usize) -> f64 {
        let n = self.dim() as i32;
        let i32_ = i as i32;
        num::powi(self.w[i + 1], n - i32_) / num::powi(self.w[i], n - i32_ - 1)
    }

    /// `I_{i,j} = W_j^(n-i) / W_i^(n-j)` for `0 <= i < j < n`.
    pub fn quotient_pair(&self, i: usize, j: usize) -> f64 {
        let n = self.dim() as i32;
        num::powi(self.w[j], n - i as i32) / num::powi(self.w[i], n - j as i32)
    }
}

/// Solves `A x = b` for a small dense system by Gaussian elimination with
/// partial pivoting.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| num::abs(a[i][col]).partial_cmp(&num::abs(a[j][col])).unwrap())
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// Relative quermassintegrals from the relative Steiner polynomial.
///
/// `vol(K + tsE)` is sampled at `t = 0, 1, ..., n` and the Vandermonde
/// system is solved for the coefficients `binom(n,i) W_i s^i`. The body is
/// first centred at the origin and `s` is a power of two matching the size of
/// `K` to that of `E`, so small bodies keep full relative precision. `W_0` is
/// `vol(K)` itself; `W_n` is checked against `vol(E)`.
pub fn steiner_fit(k: &Polytope, e: &Polytope) -> Result<QuermassVector> {
    check_same_dim(k, e)?;
    if !e.is_full_dim() {
        return Err(Error::LowerDimensional);
    }
    let n = k.dim();
    let w0 = volume(k);
    let k = k.translated(-k.vertex_centroid())?;
    let ratio = k.diameter() / e.diameter();
    let s = if ratio > 0.0 && ratio.is_finite() {
        num::exp2(num::round(num::log2(ratio)))
    } else {
        1.0
    };
    let v0 = volume(&k);
    let mut rows = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for t in 1..=n {
        let tf = t as f64;
        let sum = minkowski_sum(&k, &e.scaled(tf * s)?)?;
        rows.push((1..=n).map(|i| num::powi(tf, i as i32)).collect());
        rhs.push(volume(&sum) - v0);
    }
    let c = solve_dense(rows, rhs);
    let mut w = Vec::with_capacity(n + 1);
    w.push(w0);
    for i in 1..=n {
        w.push(c[i - 1] / (num::binom(n, i) * num::powi(s, i as i32)));
    }
    let ve = volume(e);
    if num::abs(w[n] - ve) > EPS_FIT * ve.max(f64::MIN_POSITIVE) {
        return Err(Error::FitInconsistent { fitted: w[n], expected: ve });
    }
    Ok(QuermassVector { w })
}

/// Planar mixed area `V(K,E) = ½ Σ h_E(u_i) ℓ_i` over the edges of `K`,
/// computed without Minkowski sums.
pub fn mixed_area_oracle(k: &Polytope, e: &Polytope) -> Result<f64> {
    if k.dim() != 2 || e.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: k.dim().max(e.dim()) });
    }
    if !k.is_full_dim() || !e.is_full_dim() {
        return Err(Error::LowerDimensional);
    }
    let v = k.vertices();
    Ok(0.5
        * k.facets()
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let fv = k.face_vertices(i);
                e.h(&f.normal.vector()) * v[fv[0]].distance(&v[fv[1]])
            })
            .sum::<f64>())
}

/// `S(K;E) = n W_1(K;E)`.
pub fn rel_surface_area(k: &Polytope, e: &Polytope) -> Result<f64> {
    Ok(steiner_fit(k, e)?.surface())
}

/// Relative isoperimetric quotient `I(K;E)`.
pub fn isoperimetric_quotient(k: &Polytope, e: &Polytope) -> Result<f64> {
    if !k.is_full_dim() {
        return Err(Error::DomainError("quotient undefined for a lower-dimensional body".into()));
    }
    Ok(steiner_fit(k, e)?.isoperimetric())
}

/// A body together with its gauge and the cached data every family
/// computation needs.
#[derive(Clone, Debug)]
pub struct GaugeContext {
    pub body: Polytope,
    pub gauge: Polytope,
    pub inradius: f64,
    pub incenter: Vector,
    pub normals: Vec<Direction>,
    pub certificate: Vec<f64>,
}

impl GaugeContext {
    pub fn new(body: Polytope, gauge: Polytope) -> Result<Self> {
        let inr = inradius(&body, &gauge)?;
        let normals = body.facet_normals()?;
        Ok(GaugeContext {
            body,
            gauge,
            inradius: inr.r,
            incenter: inr.center,
            normals,
            certificate: inr.duals,
        })
    }

    pub fn dim(&self) -> usize {
        self.body.dim()
    }

    /// `incenter + r E ⊆ K`, within tolerance.
    pub fn inscribed_gauge(&self) -> Result<Polytope> {
        self.gauge.homothetic(self.inradius, self.incenter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hull;
    use crate::shapes;

    #[test]
    fn volume_examples() {
        assert!((volume(&shapes::unit_square()) - 1.0).abs() < 1e-15);
        assert!((volume(&shapes::diamond()) - 2.0).abs() < 1e-15);
        assert!((volume(&shapes::octahedron()) - 4.0 / 3.0).abs() < 1e-14);
        let seg = hull(2, &[Vector::new2(0.0, 0.0), Vector::new2(1.0, 0.0)]).unwrap();
        assert_eq!(volume(&seg), 0.0);
    }

    #[test]
    fn surface_examples() {
        assert!((classical_surface(&shapes::unit_square()).unwrap() - 4.0).abs() < 1e-15);
        assert!((classical_surface(&shapes::rect(0.0, 2.0, 0.0, 3.0)).unwrap() - 10.0).abs() < 1e-14);
        assert!((classical_surface(&shapes::unit_cube()).unwrap() - 6.0).abs() < 1e-14);
        let seg = hull(2, &[Vector::new2(0.0, 0.0), Vector::new2(1.0, 0.0)]).unwrap();
        assert_eq!(classical_surface(&seg), Err(Error::LowerDimensional));
    }

    #[test]
    fn inradius_examples() {
        let sq = shapes::unit_square();
        assert!((inradius(&sq, &sq).unwrap().r - 1.0).abs() < 1e-12);
        let rect = shapes::rect(0.0, 1.0, 0.0, 2.0);
        assert!((inradius(&sq, &rect).unwrap().r - 0.5).abs() < 1e-12);
        let big = shapes::rect(-1.0, 1.0, -1.0, 1.0);
        let inr = inradius(&big, &shapes::diamond()).unwrap();
        assert!((inr.r - 1.0).abs() < 1e-12);
        assert!(inr.center.norm() < 1e-12);
    }

    #[test]
    fn inradius_certificate_is_dual_feasible() {
        let sq = shapes::unit_square();
        let rect = shapes::rect(0.0, 1.0, 0.0, 2.0);
        let inr = inradius(&sq, &rect).unwrap();
        assert!(inr.duals.iter().all(|y| *y >= -1e-12));
        // Σ y_u h_E(u) = 1 (dual of the r column)
        let s: f64 = sq
            .facets()
            .iter()
            .zip(&inr.duals)
            .map(|(f, y)| y * rect.h(&f.normal.vector()))
            .sum();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn steiner_examples() {
        let d = shapes::diamond();
        let w = steiner_fit(&d, &d).unwrap();
        for wi in &w.w {
            assert!((wi - 2.0).abs() < 1e-12);
        }
        let w = steiner_fit(&shapes::unit_square(), &d).unwrap();
        for (a, b) in w.w.iter().zip([1.0, 2.0, 2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        let w = steiner_fit(&shapes::unit_square(), &shapes::rect(0.0, 1.0, 0.0, 2.0)).unwrap();
        for (a, b) in w.w.iter().zip([1.0, 1.5, 2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn steiner_in_space() {
        // cube [-1,1]^3 and octahedron: W = (8, 8, 4, 4/3)
        let w = steiner_fit(&shapes::cube_centered(1.0), &shapes::octahedron()).unwrap();
        for (a, b) in w.w.iter().zip([8.0, 8.0, 4.0, 4.0 / 3.0]) {
            assert!((a - b).abs() < 1e-10, "{:?}", w.w);
        }
    }

    #[test]
    fn mixed_area_examples() {
        let sq = shapes::unit_square();
        assert!((mixed_area_oracle(&sq, &shapes::diamond()).unwrap() - 2.0).abs() < 1e-15);
        let rect = shapes::rect(0.0, 1.0, 0.0, 2.0);
        assert!((mixed_area_oracle(&sq, &rect).unwrap() - 1.5).abs() < 1e-15);
        let k = shapes::regular_polygon_gauge(7);
        assert!((mixed_area_oracle(&k, &k).unwrap() - volume(&k)).abs() < 1e-12);
        assert!(matches!(
            mixed_area_oracle(&shapes::unit_cube(), &shapes::unit_cube()),
            Err(Error::WrongDimension { .. })
        ));
    }

    #[test]
    fn relative_surface_examples() {
        let d = shapes::diamond();
        assert!((rel_surface_area(&d, &d).unwrap() - 4.0).abs() < 1e-12);
        assert!((rel_surface_area(&shapes::unit_square(), &d).unwrap() - 4.0).abs() < 1e-12);
        let rect = shapes::rect(0.0, 1.0, 0.0, 2.0);
        assert!((rel_surface_area(&shapes::unit_square(), &rect).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn relative_surface_converges_to_classical() {
        let k = hull(
            2,
            &[Vector::new2(0.0, 0.0), Vector::new2(1.3, 0.2), Vector::new2(0.4, 0.9)],
        )
        .unwrap();
        let exact = classical_surface(&k).unwrap();
        let errs: Vec<f64> = [16, 64, 256]
            .iter()
            .map(|&m| num::abs(rel_surface_area(&k, &shapes::regular_polygon_gauge(m)).unwrap() - exact))
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    }
}
