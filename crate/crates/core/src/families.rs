//! One-parameter families of bodies: parallel bodies `K_λ`, Wulff shapes
//! `K(Ω,λ)`, gauge envelopes `E^Ω`, form bodies, and sampled quotient curves.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{erode, intersect_halfspaces, minkowski_sum, positively_spanning};
use crate::error::{Error, Result};
use crate::geometry::{check_same_dim, Direction, HalfSpace, Polytope, EPS_GEOM};
use crate::metrics::{inradius, steiner_fit, GaugeContext, QuermassVector};
use crate::num;
use crate::vector::Vector;

/// A finite, positively spanning set of unit directions.
#[derive(Clone, Debug)]
pub struct DirectionSet {
    dim: usize,
    dirs: Vec<Direction>,
    pub label: String,
}

impl DirectionSet {
    /// Normalizes `dirs`, rejecting duplicates and sets whose convex hull
    /// does not contain the origin in its interior.
    pub fn new(dim: usize, dirs: &[Vector], label: &str) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::UnsupportedDimension(dim));
        }
        let mut out: Vec<Direction> = Vec::with_capacity(dirs.len());
        for v in dirs {
            if dim == 2 && v.z() != 0.0 {
                return Err(Error::InvalidInput("planar direction with a third coordinate".into()));
            }
            let d = Direction::new(*v)?;
            if out.iter().any(|o| o.same_as(&d)) {
                return Err(Error::InvalidInput(format!("duplicate direction {:?}", d.vector())));
            }
            out.push(d);
        }
        let vs: Vec<Vector> = out.iter().map(|d| d.vector()).collect();
        if !positively_spanning(dim, &vs) {
            return Err(Error::Unbounded);
        }
        Ok(DirectionSet { dim, dirs: out, label: label.into() })
    }

    /// `{±e_1, ..., ±e_n}`.
    pub fn axes(dim: usize) -> Result<Self> {
        let mut v = Vec::new();
        for i in 0..dim.min(3) {
            v.push(Vector::axis(i));
            v.push(-Vector::axis(i));
        }
        Self::new(dim, &v, "axes")
    }

    /// The facet normals `U(P)` of a full-dimensional polytope.
    pub fn normals_of(p: &Polytope) -> Result<Self> {
        let dirs = p.facet_normals()?;
        Ok(DirectionSet { dim: p.dim(), dirs, label: "U(K)".into() })
    }

    /// `self ∪ other`, dropping directions already present.
    pub fn union(&self, other: &DirectionSet) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut dirs = self.dirs.clone();
        for d in &other.dirs {
            if !dirs.iter().any(|o| o.same_as(d)) {
                dirs.push(*d);
            }
        }
        Ok(DirectionSet { dim: self.dim, dirs, label: format!("{}+{}", self.label, other.label) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dirs(&self) -> &[Direction] {
        &self.dirs
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn contains(&self, d: &Direction) -> bool {
        self.dirs.iter().any(|o| o.same_as(d))
    }

    pub fn is_subset_of(&self, other: &DirectionSet) -> bool {
        self.dirs.iter().all(|d| other.contains(d))
    }

    /// `U(P) ⊆ self`, so that the halfspaces at these normals reproduce `P`.
    pub fn determines(&self, p: &Polytope) -> Result<bool> {
        Ok(p.facet_normals()?.iter().all(|d| self.contains(d)))
    }
}

fn check_lambda(lambda: f64, r: f64) -> Result<()> {
    if !lambda.is_finite() {
        return Err(Error::InvalidInput("λ must be finite".into()));
    }
    if lambda < -r - EPS_GEOM * r.max(1.0) {
        return Err(Error::OutOfRange { value: lambda, min: -r });
    }
    Ok(())
}

/// Parallel body with a known inradius `r`.
pub(crate) fn parallel_with(k: &Polytope, e: &Polytope, r: f64, lambda: f64) -> Result<Polytope> {
    check_lambda(lambda, r)?;
    if lambda > 0.0 {
        minkowski_sum(k, &e.scaled(lambda)?)
    } else if lambda < 0.0 {
        erode(k, (-lambda).min(r), e)
    } else {
        Ok(k.clone())
    }
}

/// The relative parallel body `K_λ`: `K + λE` for `λ >= 0` and the
/// Minkowski difference `K ~ |λ|E` for `-inr(K;E) <= λ < 0`.
pub fn parallel_body(k: &Polytope, e: &Polytope, lambda: f64) -> Result<Polytope> {
    check_same_dim(k, e)?;
    if lambda > 0.0 {
        return minkowski_sum(k, &e.scaled(lambda)?);
    }
    let r = inradius(k, e)?.r;
    parallel_with(k, e, r, lambda)
}

pub(crate) fn wulff_with(
    k: &Polytope,
    e: &Polytope,
    omega: &DirectionSet,
    r: f64,
    lambda: f64,
) -> Result<Polytope> {
    check_lambda(lambda, r)?;
    let lambda = lambda.max(-r);
    let hs: Vec<HalfSpace> = omega
        .dirs()
        .iter()
        .map(|d| {
            let u = d.vector();
            HalfSpace { normal: *d, offset: k.h(&u) + lambda * e.h(&u) }
        })
        .collect();
    intersect_halfspaces(k.dim(), &hs)
}

/// The Wulff shape `K(Ω,λ) = ⋂_{u∈Ω} {x : <x,u> <= h_K(u) + λ h_E(u)}`.
pub fn wulff_body(k: &Polytope, e: &Polytope, omega: &DirectionSet, lambda: f64) -> Result<Polytope> {
    check_same_dim(k, e)?;
    if omega.dim() != k.dim() {
        return Err(Error::DimensionMismatch(k.dim(), omega.dim()));
    }
    if !omega.determines(k)? {
        return Err(Error::NotDetermining);
    }
    let r = inradius(k, e)?.r;
    wulff_with(k, e, omega, r, lambda)
}

impl GaugeContext {
    /// `K_λ` using the cached inradius.
    pub fn parallel(&self, lambda: f64) -> Result<Polytope> {
        parallel_with(&self.body, &self.gauge, self.inradius, lambda)
    }

    /// `K(Ω,λ)` using the cached inradius.
    pub fn wulff(&self, omega: &DirectionSet, lambda: f64) -> Result<Polytope> {
        if !omega.determines(&self.body)? {
            return Err(Error::NotDetermining);
        }
        wulff_with(&self.body, &self.gauge, omega, self.inradius, lambda)
    }
}

/// `E^Ω = ⋂_{u∈Ω} {x : <x,u> <= h_E(u)}`, the smallest tangential body of
/// `E` determined by `Ω`.
pub fn gauge_envelope(e: &Polytope, omega: &DirectionSet) -> Result<Polytope> {
    if omega.dim() != e.dim() {
        return Err(Error::DimensionMismatch(e.dim(), omega.dim()));
    }
    let hs: Vec<HalfSpace> = omega
        .dirs()
        .iter()
        .map(|d| HalfSpace { normal: *d, offset: e.h(&d.vector()) })
        .collect();
    let env = intersect_halfspaces(e.dim(), &hs)?;
    debug_assert!(e.is_subset_of(&env, 1e-7 * e.scale()).unwrap_or(false));
    Ok(env)
}

/// The form body `K* = E^{U(K)}`.
pub fn form_body(k: &Polytope, e: &Polytope) -> Result<Polytope> {
    check_same_dim(k, e)?;
    if !e.is_full_dim() {
        return Err(Error::LowerDimensional);
    }
    gauge_envelope(e, &DirectionSet::normals_of(k)?)
}

/// How the λ grid of a curve is laid out.
#[derive(Clone, Debug, PartialEq)]
pub enum GridSpec {
    /// Given values, strictly increasing.
    Explicit(Vec<f64>),
    /// `steps` equally spaced values from `lmin` to `lmax` inclusive.
    Uniform { lmin: f64, lmax: f64, steps: usize },
    /// Half the points logarithmically clustered at `-r + δ` with
    /// `δ = 1e-6 r`, the other half uniform on `(0, lmax]`.
    Clustered { lmax: f64, points: usize },
}

impl GridSpec {
    pub fn clustered(lmax: f64) -> Self {
        GridSpec::Clustered { lmax, points: 64 }
    }

    /// The grid values for a body of inradius `r`; every value must lie in
    /// `(-r, ∞)`.
    pub fn resolve(&self, r: f64) -> Result<Vec<f64>> {
        let v = match self {
            GridSpec::Explicit(v) => v.clone(),
            GridSpec::Uniform { lmin, lmax, steps } => {
                let (lmin, lmax, steps) = (*lmin, *lmax, *steps);
                if steps == 0 || !(lmin.is_finite() && lmax.is_finite()) {
                    return Err(Error::BadParams("uniform grid needs finite bounds and steps >= 1".into()));
                }
                if steps == 1 {
                    alloc::vec![lmin]
                } else {
                    let dl = (lmax - lmin) / (steps - 1) as f64;
                    (0..steps).map(|i| lmin + dl * i as f64).collect()
                }
            }
            GridSpec::Clustered { lmax, points } => {
                let (lmax, points) = (*lmax, *points);
                if points < 2 || !(lmax.is_finite() && lmax > 0.0) {
                    return Err(Error::BadParams("clustered grid needs lmax > 0 and >= 2 points".into()));
                }
                let inner = points / 2;
                let outer = points - inner;
                let delta = 1e-6 * r;
                let mut v = Vec::with_capacity(points);
                // offsets from -r geometric in [δ, r); the last inner point stays below 0
                let ratio = num::ln(r / delta) / inner as f64;
                for i in 0..inner {
                    v.push(-r + delta * num::exp(ratio * i as f64));
                }
                for i in 1..=outer {
                    v.push(lmax * i as f64 / outer as f64);
                }
                v
            }
        };
        if v.is_empty() {
            return Err(Error::BadParams("empty grid".into()));
        }
        if v.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::BadParams("grid must be strictly increasing".into()));
        }
        if let Some(&bad) = v.iter().find(|&&l| !(l > -r) || !l.is_finite()) {
            return Err(Error::OutOfRange { value: bad, min: -r });
        }
        Ok(v)
    }
}

/// A quotient that can be recorded along a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quotient {
    /// `S(K_λ;E)^n / vol(K_λ)^(n-1)`.
    I,
    /// The same quotient on the Wulff family `K(Ω,λ)`.
    IOmega,
    /// `I_i = W_{i+1}^(n-i) / W_i^(n-i-1)`.
    Single(usize),
    /// `I_{i,j} = W_j^(n-i) / W_i^(n-j)`.
    Pair(usize, usize),
}

impl Quotient {
    pub fn validate(&self, dim: usize) -> Result<()> {
        let ok = match *self {
            Quotient::I | Quotient::IOmega => true,
            Quotient::Single(i) => i + 2 <= dim,
            Quotient::Pair(i, j) => i < j && j < dim,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadParams(format!("quotient {self} is not defined in dimension {dim}")))
        }
    }

    /// Evaluates the quotient on a quermass vector (`IOmega` is evaluated as
    /// `I` on the Wulff body's vector).
    pub fn eval(&self, w: &QuermassVector) -> f64 {
        match *self {
            Quotient::I | Quotient::IOmega => w.isoperimetric(),
            Quotient::Single(i) => w.quotient_single(i),
            Quotient::Pair(i, j) => w.quotient_pair(i, j),
        }
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quotient::I => f.write_str("I"),
            Quotient::IOmega => f.write_str("I_Omega"),
            Quotient::Single(i) => write!(f, "I_{i}"),
            Quotient::Pair(i, j) => write!(f, "I_{i}_{j}"),
        }
    }
}

impl FromStr for Quotient {
    type Err = Error;

    /// Accepts `I`, `IO`/`IOmega`/`I_Omega`, `I1`/`I_1`, `I02`/`I_0_2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("unknown quotient `{s}`"));
        let t = s.trim();
        match t {
            "I" => return Ok(Quotient::I),
            "IO" | "IOmega" | "I_Omega" | "I^Omega" => return Ok(Quotient::IOmega),
            _ => {}
        }
        let rest = t.strip_prefix('I').ok_or_else(bad)?;
        let digits: Vec<usize> = rest
            .chars()
            .filter(|c| *c != '_')
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_>>()?;
        match digits[..] {
            [i] => Ok(Quotient::Single(i)),
            [i, j] => Ok(Quotient::Pair(i, j)),
            _ => Err(bad()),
        }
    }
}

/// One grid point of a sampled curve.
#[derive(Clone, Debug)]
pub struct CurveRecord {
    pub lambda: f64,
    pub w: QuermassVector,
    /// Aligned with [`FamilyCurve::columns`].
    pub values: Vec<f64>,
}

/// Quotient curves sampled along `λ ↦ K_λ` (and optionally `λ ↦ K(Ω,λ)`).
#[derive(Clone, Debug)]
pub struct FamilyCurve {
    pub dim: usize,
    pub inradius: f64,
    pub grid: GridSpec,
    /// Recorded quotients; `I` always comes first.
    pub columns: Vec<Quotient>,
    pub records: Vec<CurveRecord>,
    pub omega: Option<DirectionSet>,
}

impl FamilyCurve {
    pub fn lambdas(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.lambda).collect()
    }

    /// The values of one quotient column, if recorded.
    pub fn series(&self, q: Quotient) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| *c == q)?;
        Some(self.records.iter().map(|r| r.values[idx]).collect())
    }

    pub fn quotient_i(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.values[0]).collect()
    }
}

/// Samples the requested quotients of `K_λ` (and of `K(Ω,λ)` for
/// [`Quotient::IOmega`]) on a grid inside `(-inr(K;E), ∞)`.
pub fn sample_curve(
    k: &Polytope,
    e: &Polytope,
    grid: &GridSpec,
    omega: Option<&DirectionSet>,
    quotients: &[Quotient],
) -> Result<FamilyCurve> {
    check_same_dim(k, e)?;
    let n = k.dim();
    let mut columns = alloc::vec![Quotient::I];
    for q in quotients {
        q.validate(n)?;
        if !columns.contains(q) {
            columns.push(*q);
        }
    }
    let wants_omega = columns.contains(&Quotient::IOmega);
    if wants_omega {
        let om = omega.ok_or_else(|| Error::BadParams("I_Omega requires a direction set".into()))?;
        if om.dim() != n {
            return Err(Error::DimensionMismatch(n, om.dim()));
        }
        if !om.determines(k)? {
            return Err(Error::NotDetermining);
        }
    }
    let r = inradius(k, e)?.r;
    let lambdas = grid.resolve(r)?;
    let mut records = Vec::with_capacity(lambdas.len());
    for &lambda in &lambdas {
        let body = parallel_with(k, e, r, lambda)?;
        if !body.is_full_dim() {
            return Err(Error::DomainError(format!("K_λ is lower-dimensional at λ = {lambda}")));
        }
        let w = steiner_fit(&body, e)?;
        let w_omega = if wants_omega {
            let wb = wulff_with(k, e, omega.unwrap(), r, lambda)?;
            if !wb.is_full_dim() {
                return Err(Error::DomainError(format!("K(Ω,λ) is lower-dimensional at λ = {lambda}")));
            }
            Some(steiner_fit(&wb, e)?)
        } else {
            None
        };
        let values = columns
            .iter()
            .map(|q| match q {
                Quotient::IOmega => w_omega.as_ref().unwrap().isoperimetric(),
                other => other.eval(&w),
            })
            .collect();
        records.push(CurveRecord { lambda, w, values });
    }
    Ok(FamilyCurve {
        dim: n,
        inradius: r,
        grid: grid.clone(),
        columns,
        records,
        omega: omega.cloned(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::volume;
    use crate::shapes;
    use alloc::string::ToString;

    fn close(p: &Polytope, q: &Polytope) -> bool {
        p.hausdorff(q).unwrap() < 1e-9
    }

    #[test]
    fn parallel_examples() {
        let sq = shapes::unit_square();
        let rect = shapes::rect(0.0, 1.0, 0.0, 2.0);
        assert!(close(&parallel_body(&sq, &rect, 1.0).unwrap(), &shapes::rect(0.0, 2.0, 0.0, 3.0)));
        let inner = parallel_body(&sq, &shapes::diamond(), -0.25).unwrap();
        assert!(close(&inner, &shapes::rect(0.25, 0.75, 0.25, 0.75)));
        assert!(close(&parallel_body(&sq, &rect, 0.0).unwrap(), &sq));
        assert!(matches!(parallel_body(&sq, &rect, -0.6), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn parallel_at_minus_inradius_is_lower_dimensional() {
        let k = shapes::rect(0.0, 2.0, 0.0, 1.0);
        let p = parallel_body(&k, &shapes::unit_square(), -1.0).unwrap();
        assert!(!p.is_full_dim());
        assert_eq!(volume(&p), 0.0);
    }

    #[test]
    fn wulff_examples() {
        let sq = shapes::unit_square();
        let e8 = shapes::octagon();
        let axes = DirectionSet::axes(2).unwrap();
        let w = wulff_body(&sq, &e8, &axes, 1.0).unwrap();
        assert!(close(&w, &shapes::rect(-1.0, 2.0, -1.0, 2.0)));
        let sum = parallel_body(&sq, &e8, 1.0).unwrap();
        assert!(volume(&w) > volume(&sum) + 1e-3);
        assert!(close(&wulff_body(&sq, &e8, &axes, 0.0).unwrap(), &sq));
        let diag = DirectionSet::normals_of(&shapes::diamond()).unwrap();
        assert_eq!(wulff_body(&sq, &e8, &diag, 1.0).unwrap_err(), Error::NotDetermining);
    }

    #[test]
    fn envelope_and_form_body_examples() {
        let axes = DirectionSet::axes(2).unwrap();
        let sq2 = shapes::rect(-1.0, 1.0, -1.0, 1.0);
        assert!(close(&gauge_envelope(&shapes::octagon(), &axes).unwrap(), &sq2));
        assert!(close(&gauge_envelope(&shapes::diamond(), &axes).unwrap(), &sq2));
        let e = shapes::regular_polygon_gauge(5);
        let ue = DirectionSet::normals_of(&e).unwrap();
        assert!(close(&gauge_envelope(&e, &ue).unwrap(), &e));
        assert!(close(&form_body(&shapes::unit_square(), &shapes::octagon()).unwrap(), &sq2));
        assert!(close(&form_body(&e, &e).unwrap(), &e));
        let fb = form_body(&shapes::unit_cube(), &shapes::octahedron()).unwrap();
        assert!(close(&fb, &shapes::cube_centered(1.0)));
    }

    #[test]
    fn direction_set_validation() {
        let v = [Vector::new2(1.0, 0.0), Vector::new2(0.0, 1.0)];
        assert_eq!(DirectionSet::new(2, &v, "").unwrap_err(), Error::Unbounded);
        let dup = [
            Vector::new2(1.0, 0.0),
            Vector::new2(2.0, 0.0),
            Vector::new2(-1.0, 1.0),
            Vector::new2(-1.0, -1.0),
        ];
        assert!(matches!(DirectionSet::new(2, &dup, ""), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn quotient_names() {
        assert_eq!("I".parse::<Quotient>().unwrap(), Quotient::I);
        assert_eq!("IO".parse::<Quotient>().unwrap(), Quotient::IOmega);
        assert_eq!("I1".parse::<Quotient>().unwrap(), Quotient::Single(1));
        assert_eq!("I02".parse::<Quotient>().unwrap(), Quotient::Pair(0, 2));
        assert_eq!("I_0_2".parse::<Quotient>().unwrap(), Quotient::Pair(0, 2));
        assert!("J".parse::<Quotient>().is_err());
        assert!("I123".parse::<Quotient>().is_err());
        for q in [Quotient::I, Quotient::IOmega, Quotient::Single(0), Quotient::Pair(1, 2)] {
            assert_eq!(q.to_string().parse::<Quotient>().unwrap(), q);
        }
        assert!(Quotient::Single(1).validate(2).is_err());
        assert!(Quotient::Pair(0, 2).validate(3).is_ok());
    }

    #[test]
    fn grid_resolution() {
        let g = GridSpec::clustered(4.0).resolve(0.5).unwrap();
        assert_eq!(g.len(), 64);
        assert!((g[0] + 0.5 - 0.5e-6).abs() < 1e-15);
        assert!(g[31] < 0.0);
        assert_eq!(*g.last().unwrap(), 4.0);
        assert!(GridSpec::Explicit(alloc::vec![0.0, 0.0]).resolve(1.0).is_err());
        assert!(GridSpec::Explicit(alloc::vec![-1.0]).resolve(1.0).is_err());
    }

    #[test]
    fn curve_examples() {
        let sq = shapes::unit_square();
        let grid = GridSpec::Explicit(alloc::vec![-0.25, 0.0, 1.0]);
        let c = sample_curve(&sq, &shapes::diamond(), &grid, None, &[]).unwrap();
        for (a, b) in c.quotient_i().iter().zip([16.0, 16.0, 64.0 / 7.0]) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
        let rect = shapes::rect(0.0, 1.0, 0.0, 2.0);
        let grid = GridSpec::Explicit(alloc::vec![0.0, 1.0]);
        let c = sample_curve(&sq, &rect, &grid, None, &[]).unwrap();
        for (a, b) in c.quotient_i().iter().zip([9.0, 49.0 / 6.0]) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn curve_for_gauge_itself_is_constant() {
        let e = shapes::regular_polygon_gauge(6);
        let c = sample_curve(&e, &e, &GridSpec::clustered(3.0), None, &[]).unwrap();
        let target = 4.0 * volume(&e);
        for v in c.quotient_i() {
            assert!((v - target).abs() < 1e-8 * target, "{v} vs {target}");
        }
    }

    #[test]
    fn curve_records_omega_and_higher_quotients() {
        let k = shapes::box3(Vector::new3(0.0, 0.0, 0.0), Vector::new3(1.0, 2.0, 1.5));
        let e = shapes::octahedron();
        let omega = DirectionSet::axes(3).unwrap();
        let qs = [Quotient::IOmega, Quotient::Single(0), Quotient::Single(1), Quotient::Pair(0, 2)];
        let grid = GridSpec::Explicit(alloc::vec![-0.2, 0.5]);
        let c = sample_curve(&k, &e, &grid, Some(&omega), &qs).unwrap();
        assert_eq!(c.columns.len(), 5);
        // Ω = U(K): both families coincide for λ <= 0
        let i = c.series(Quotient::I).unwrap();
        let io = c.series(Quotient::IOmega).unwrap();
        assert!((i[0] - io[0]).abs() < 1e-9 * i[0]);
        assert!(io[1].is_finite() && io[1] > 0.0);
        assert!(sample_curve(&k, &e, &grid, None, &[Quotient::IOmega]).is_err());
    }
}
