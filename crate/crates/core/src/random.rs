//! Seeded random bodies for property checks and law suites.
//!
//! Planar bodies are polygons inscribed in random ellipses, so every sampled
//! point is a vertex; spatial bodies are hulls of points on random
//! ellipsoids.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::hull;
use crate::error::Result;
use crate::families::DirectionSet;
use crate::geometry::Polytope;
use crate::num;
use crate::vector::Vector;

pub type SeededRng = ChaCha8Rng;

/// Independent seed for the `index`-th check under a master seed.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    // splitmix64 step
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng(master: u64, index: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, index))
}

/// Convex polygon with `min_v..=max_v` vertices on an ellipse of semi-axes in
/// `[0.5, 1.5]`, randomly rotated, centred within `±center` of the origin.
pub fn random_polygon<R: Rng>(rng: &mut R, min_v: usize, max_v: usize, center: f64) -> Result<Polytope> {
    let m = rng.gen_range(min_v..=max_v);
    let a = rng.gen_range(0.5..1.5);
    let b = rng.gen_range(0.5..1.5);
    let rot = rng.gen_range(0.0..2.0 * PI);
    let c = if center > 0.0 {
        Vector::new2(rng.gen_range(-center..center), rng.gen_range(-center..center))
    } else {
        Vector::ZERO
    };
    let (cr, sr) = (num::cos(rot), num::sin(rot));
    let step = 2.0 * PI / m as f64;
    let pts: Vec<Vector> = (0..m)
        .map(|i| {
            let t = step * (i as f64 + rng.gen_range(-0.3..0.3));
            let (x, y) = (a * num::cos(t), b * num::sin(t));
            c + Vector::new2(cr * x - sr * y, sr * x + cr * y)
        })
        .collect();
    hull(2, &pts)
}

/// Point on the unit sphere, uniform.
pub fn random_unit3<R: Rng>(rng: &mut R) -> Vector {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi = rng.gen_range(0.0..2.0 * PI);
    let s = num::sqrt(1.0 - z * z);
    Vector::new3(s * num::cos(phi), s * num::sin(phi), z)
}

/// Hull of `min_v..=max_v` points on an axis-aligned ellipsoid with
/// semi-axes in `[0.5, 1.5]`, centred within `±center` of the origin.
pub fn random_polytope3<R: Rng>(rng: &mut R, min_v: usize, max_v: usize, center: f64) -> Result<Polytope> {
    let m = rng.gen_range(min_v..=max_v);
    let axes = [rng.gen_range(0.5..1.5), rng.gen_range(0.5..1.5), rng.gen_range(0.5..1.5)];
    let c = if center > 0.0 {
        Vector::new3(
            rng.gen_range(-center..center),
            rng.gen_range(-center..center),
            rng.gen_range(-center..center),
        )
    } else {
        Vector::ZERO
    };
    // the six axis points keep the body fat
    let mut pts: Vec<Vector> = Vec::with_capacity(m + 6);
    for i in 0..3 {
        pts.push(Vector::axis(i) * axes[i]);
        pts.push(Vector::axis(i) * -axes[i]);
    }
    for _ in 0..m {
        let u = random_unit3(rng);
        pts.push(Vector::new3(u.x() * axes[0], u.y() * axes[1], u.z() * axes[2]));
    }
    for p in &mut pts {
        *p += c;
    }
    hull(3, &pts)
}

/// Random body of the given dimension: 5-12 vertex polygons in the plane,
/// 4-10 extra ellipsoid points in space.
pub fn random_body<R: Rng>(rng: &mut R, dim: usize, center: f64) -> Result<Polytope> {
    if dim == 2 {
        random_polygon(rng, 5, 12, center)
    } else {
        random_polytope3(rng, 4, 10, center)
    }
}

/// `U(K)` together with `extra` random directions.
pub fn random_direction_set<R: Rng>(rng: &mut R, k: &Polytope, extra: usize) -> Result<DirectionSet> {
    let mut dirs: Vec<Vector> = k.facet_normals()?.iter().map(|d| d.vector()).collect();
    let base = dirs.len();
    while dirs.len() < base + extra {
        let v = if k.dim() == 2 {
            let t = rng.gen_range(0.0..2.0 * PI);
            Vector::new2(num::cos(t), num::sin(t))
        } else {
            random_unit3(rng)
        };
        if dirs.iter().all(|d| d.distance(&v) > 1e-3) {
            dirs.push(v);
        }
    }
    DirectionSet::new(k.dim(), &dirs, "U(K)+random")
}
