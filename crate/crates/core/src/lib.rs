//! Convex polytopes measured against a polytopal gauge.
//!
//! The crate computes relative quermassintegrals, relative inradii and
//! isoperimetric-type quotients of planar and spatial polytopes, builds the
//! one-parameter families of parallel bodies, Wulff shapes and form bodies,
//! and checks the monotonicity and constancy laws those quotients obey.
//!
//! Everything here works without `std`; only `alloc` is required.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod diagnostics;
pub mod error;
pub mod families;
pub mod geometry;
mod hull;
mod lp;
pub mod metrics;
pub mod num;
pub mod random;
pub mod shapes;
pub mod vector;

pub use diagnostics::{DiagnosisReport, LawId, LawParams, PassReport};
pub use error::{Error, Result};
pub use geometry::{Direction, HalfSpace, HomothetyWitness, Polytope, ANGLE_TOL, EPS_GEOM};
pub use families::{DirectionSet, FamilyCurve, GridSpec, Quotient};
pub use metrics::{GaugeContext, QuermassVector};
pub use vector::Vector;
