//! Small fixed-size vector used for both planar and spatial bodies.
//!
//! Planar data is stored with a zero third coordinate, so dot products,
//! norms and sums agree between the two settings. The owning [`Polytope`]
//! records the ambient dimension.
//!
//! [`Polytope`]: crate::Polytope

use core::fmt;
use core::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use crate::num;

#[derive(Clone, Copy, PartialEq, Default)]
pub struct Vector(pub [f64; 3]);

impl Vector {
    pub const ZERO: Vector = Vector([0.0; 3]);

    #[inline]
    pub const fn new2(x: f64, y: f64) -> Self {
        Vector([x, y, 0.0])
    }

    #[inline]
    pub const fn new3(x: f64, y: f64, z: f64) -> Self {
        Vector([x, y, z])
    }

    /// Builds a vector from a coordinate slice of length 2 or 3.
    pub fn from_slice(xs: &[f64]) -> Option<Self> {
        match *xs {
            [x, y] => Some(Self::new2(x, y)),
            [x, y, z] => Some(Self::new3(x, y, z)),
            _ => None,
        }
    }

    /// Unit vector along axis `i`.
    pub fn axis(i: usize) -> Self {
        let mut v = Self::ZERO;
        v.0[i] = 1.0;
        v
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.0[0]
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.0[1]
    }

    #[inline]
    pub fn z(&self) -> f64 {
        self.0[2]
    }

    /// The first `dim` coordinates.
    pub fn coords(&self, dim: usize) -> &[f64] {
        &self.0[..dim]
    }

    #[inline]
    pub fn dot(&self, other: &Vector) -> f64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    #[inline]
    pub fn cross(&self, other: &Vector) -> Vector {
        let [a1, a2, a3] = self.0;
        let [b1, b2, b3] = other.0;
        Vector([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    /// z-component of the planar cross product.
    #[inline]
    pub fn cross2(&self, other: &Vector) -> f64 {
        self.0[0] * other.0[1] - self.0[1] * other.0[0]
    }

    /// Counter-clockwise rotation by a right angle in the plane.
    #[inline]
    pub fn perp(&self) -> Vector {
        Vector::new2(-self.0[1], self.0[0])
    }

    #[inline]
    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        num::sqrt(self.norm_squared())
    }

    pub fn normalized(&self) -> Option<Vector> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(*self * (1.0 / n))
        } else {
            None
        }
    }

    #[inline]
    pub fn distance(&self, other: &Vector) -> f64 {
        (*self - *other).norm()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, &c| m.max(num::abs(c)))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// Lexicographic comparison, used for canonical orderings.
    pub fn lex_cmp(&self, other: &Vector) -> core::cmp::Ordering {
        for i in 0..3 {
            match self.0[i].partial_cmp(&other.0[i]) {
                Some(core::cmp::Ordering::Equal) | None => continue,
                Some(o) => return o,
            }
        }
        core::cmp::Ordering::Equal
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for Vector {
    type Output = Vector;
    #[inline]
    fn add(self, o: Vector) -> Vector {
        Vector([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl AddAssign for Vector {
    #[inline]
    fn add_assign(&mut self, o: Vector) {
        *self = *self + o;
    }
}

impl Sub for Vector {
    type Output = Vector;
    #[inline]
    fn sub(self, o: Vector) -> Vector {
        Vector([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl SubAssign for Vector {
    #[inline]
    fn sub_assign(&mut self, o: Vector) {
        *self = *self - o;
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    #[inline]
    fn mul(self, s: f64) -> Vector {
        Vector([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

impl Mul<Vector> for f64 {
    type Output = Vector;
    #[inline]
    fn mul(self, v: Vector) -> Vector {
        v * self
    }
}

impl Neg for Vector {
    type Output = Vector;
    #[inline]
    fn neg(self) -> Vector {
        Vector([-self.0[0], -self.0[1], -self.0[2]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_orthogonal() {
        let a = Vector::new3(1.0, 2.0, 3.0);
        let b = Vector::new3(-2.0, 0.5, 4.0);
        let c = a.cross(&b);
        assert!(c.dot(&a).abs() < 1e-12);
        assert!(c.dot(&b).abs() < 1e-12);
    }

    #[test]
    fn from_slice_rejects_other_lengths() {
        assert!(Vector::from_slice(&[1.0]).is_none());
        assert!(Vector::from_slice(&[1.0, 2.0, 3.0, 4.0]).is_none());
        assert_eq!(Vector::from_slice(&[1.0, 2.0]), Some(Vector::new2(1.0, 2.0)));
    }
}
