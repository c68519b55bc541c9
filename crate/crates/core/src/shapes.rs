//! Named bodies used as inputs and gauges.

use alloc::vec::Vec;

use crate::algebra::hull;
use crate::geometry::Polytope;
use crate::num;
use crate::vector::Vector;

/// Axis-parallel rectangle `[x0,x1] x [y0,y1]`.
pub fn rect(x0: f64, x1: f64, y0: f64, y1: f64) -> Polytope {
    hull(
        2,
        &[
            Vector::new2(x0, y0),
            Vector::new2(x1, y0),
            Vector::new2(x1, y1),
            Vector::new2(x0, y1),
        ],
    )
    .expect("rectangle corners are valid")
}

/// `[0,1]^2`.
pub fn unit_square() -> Polytope {
    rect(0.0, 1.0, 0.0, 1.0)
}

/// `conv{±e1, ±e2}`.
pub fn diamond() -> Polytope {
    cross_polytope(2)
}

/// `conv{±e_i}` in dimension 2 or 3.
pub fn cross_polytope(dim: usize) -> Polytope {
    let mut pts = Vec::new();
    for k in 0..dim {
        pts.push(Vector::axis(k));
        pts.push(-Vector::axis(k));
    }
    hull(dim, &pts).expect("cross-polytope vertices are valid")
}

pub fn octahedron() -> Polytope {
    cross_polytope(3)
}

/// Axis-parallel box `[lo.x, hi.x] x [lo.y, hi.y] x [lo.z, hi.z]`.
pub fn box3(lo: Vector, hi: Vector) -> Polytope {
    let mut pts = Vec::new();
    for &x in &[lo.x(), hi.x()] {
        for &y in &[lo.y(), hi.y()] {
            for &z in &[lo.z(), hi.z()] {
                pts.push(Vector::new3(x, y, z));
            }
        }
    }
    hull(3, &pts).expect("box corners are valid")
}

/// `[0,1]^3`.
pub fn unit_cube() -> Polytope {
    box3(Vector::ZERO, Vector::new3(1.0, 1.0, 1.0))
}

/// `[-a,a]^3`.
pub fn cube_centered(a: f64) -> Polytope {
    box3(Vector::new3(-a, -a, -a), Vector::new3(a, a, a))
}

/// Regular `m`-gon circumscribed about the unit disk, with facet normals at
/// angles `2πk/m`. For `m` divisible by 4 the support value at `±e_i` is 1.
pub fn regular_polygon_gauge(m: usize) -> Polytope {
    let m = m.max(3);
    let step = 2.0 * core::f64::consts::PI / m as f64;
    let r = 1.0 / num::cos(0.5 * step);
    let pts: Vec<Vector> = (0..m)
        .map(|k| {
            let a = (k as f64 + 0.5) * step;
            Vector::new2(r * num::cos(a), r * num::sin(a))
        })
        .collect();
    hull(2, &pts).expect("polygon vertices are valid")
}

/// The octagon gauge `E₈` (regular, circumscribed about the unit disk).
pub fn octagon() -> Polytope {
    regular_polygon_gauge(8)
}
