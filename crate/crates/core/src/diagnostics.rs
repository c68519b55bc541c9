//! Executable checks of the monotonicity and constancy laws, tangential-body
//! detection, and derivative-class estimates.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;

use crate::algebra::{erode, minkowski_sum};
use crate::error::{Error, Result};
use crate::families::{
    gauge_envelope, parallel_with, sample_curve, wulff_with, DirectionSet, FamilyCurve, GridSpec,
};
use crate::geometry::{check_same_dim, HomothetyWitness, Polytope, EPS_GEOM};
use crate::metrics::{inradius, steiner_fit, volume, QuermassVector};
use crate::num;
use crate::random;

/// Relative tolerance for derivative identities checked by finite differences.
pub const DERIV_TOL: f64 = 1e-3;
/// Relative rise allowed between consecutive samples of a decreasing curve.
pub const MONOTONE_TOL: f64 = 1e-7;

/// Finite-difference step for a body of inradius `r`.
pub fn default_step(r: f64) -> f64 {
    1e-4 * r.max(1.0)
}

/// `(nonincreasing, worst relative rise)` of a sequence.
pub fn monotone_series(values: &[f64], tol_rel: f64) -> (bool, f64) {
    let worst = values
        .windows(2)
        .map(|w| (w[1] - w[0]) / num::abs(w[0]).max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max);
    (worst <= tol_rel, worst)
}

/// Monotonicity of the `I` column of a curve.
pub fn monotone_check(curve: &FamilyCurve, tol_rel: f64) -> (bool, f64) {
    monotone_series(&curve.quotient_i(), tol_rel)
}

fn support_tol(k: &Polytope) -> f64 {
    EPS_GEOM * k.scale()
}

/// `true` iff `E ⊆ K` and every facet hyperplane of `K` supports `E`.
pub fn tangential_test(k: &Polytope, e: &Polytope) -> bool {
    tangential_test_tol(k, e, support_tol(k))
}

pub fn tangential_test_tol(k: &Polytope, e: &Polytope, tol: f64) -> bool {
    if k.dim() != e.dim() || !k.is_full_dim() || !e.is_full_dim() {
        return false;
    }
    if !e.is_subset_of(k, tol).unwrap_or(false) {
        return false;
    }
    k.facets().iter().all(|f| e.h(&f.normal.vector()) >= f.offset - tol)
}

/// `true` iff every `(n-p-1)`-extreme supporting hyperplane of `K` also
/// supports `E`.
///
/// A supporting hyperplane with normal in the relative interior of the normal
/// cone of a face `F` is `(n-p-1)`-extreme exactly when `dim F >= p`, so the
/// support functions must agree on the normal cones of all faces of dimension
/// at least `p`. Both are linear there iff a single vertex of `E` attains
/// `h_K` at every facet normal generating the cone.
pub fn p_tangential_test(k: &Polytope, e: &Polytope, p: usize) -> Result<bool> {
    p_tangential_test_tol(k, e, p, support_tol(k))
}

pub fn p_tangential_test_tol(k: &Polytope, e: &Polytope, p: usize, tol: f64) -> Result<bool> {
    check_same_dim(k, e)?;
    let n = k.dim();
    if n != 2 && n != 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    if p >= n {
        return Err(Error::BadParams(format!("p must lie in 0..={}", n - 1)));
    }
    if !k.is_full_dim() || !e.is_full_dim() || !e.is_subset_of(k, tol)? {
        return Ok(false);
    }
    // generators of the normal cone of each face, by face dimension
    let mut cones: Vec<Vec<usize>> = Vec::new();
    cones.extend((0..k.facets().len()).map(|i| vec![i]));
    if n == 3 && p <= 1 {
        for (a, b) in k.edges() {
            let gens: Vec<usize> = (0..k.facets().len())
                .filter(|&i| {
                    let f = k.face_vertices(i);
                    f.contains(&a) && f.contains(&b)
                })
                .collect();
            cones.push(gens);
        }
    }
    if p == 0 {
        for v in 0..k.vertices().len() {
            cones.push((0..k.facets().len()).filter(|&i| k.face_vertices(i).contains(&v)).collect());
        }
    }
    let touches = |gens: &[usize]| {
        e.vertices().iter().any(|y| {
            gens.iter().all(|&i| {
                let f = &k.facets()[i];
                y.dot(&f.normal.vector()) >= f.offset - tol
            })
        })
    };
    Ok(cones.iter().all(|g| touches(g)))
}

/// Quermass vectors at `λ - h`, `λ`, `λ + h`.
fn triple(k: &Polytope, e: &Polytope, r: f64, lambda: f64, h: f64) -> Result<[QuermassVector; 3]> {
    let w = |l: f64| -> Result<QuermassVector> { steiner_fit(&parallel_with(k, e, r, l)?, e) };
    Ok([w(lambda - h)?, w(lambda)?, w(lambda + h)?])
}

/// Outcome of one derivative comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
enum DerivCheck {
    Pass,
    Fail,
    Breakpoint,
}

fn derivative_check(left: f64, mid: f64, right: f64, h: f64, target: f64, tol: f64) -> DerivCheck {
    let scale = num::abs(target).max(f64::MIN_POSITIVE);
    let lder = (mid - left) / h;
    let rder = (right - mid) / h;
    if num::abs(lder - rder) > 10.0 * tol * scale {
        return DerivCheck::Breakpoint;
    }
    let central = (right - left) / (2.0 * h);
    if num::abs(central - target) <= tol * scale {
        DerivCheck::Pass
    } else {
        DerivCheck::Fail
    }
}

/// Largest `p` such that `dW_i/dλ = (n-i) W_{i+1}` holds for all `i <= p` at
/// every usable grid point, judged by central differences with step `h` and
/// relative tolerance `tol`.
///
/// Grid points closer than `h` to `-r` are skipped. A kink, where the
/// one-sided difference quotients disagree, counts against the identity. The
/// volume identity (`i = 0`) always holds, so the result is never below 0 and
/// only `i >= 1` is tested.
pub fn r_class_estimate(k: &Polytope, e: &Polytope, grid: &GridSpec, h: f64, tol: f64) -> Result<usize> {
    check_same_dim(k, e)?;
    let n = k.dim();
    let r = inradius(k, e)?.r;
    let lambdas = grid.resolve(r)?;
    let mut holds = vec![true; n];
    for &lambda in &lambdas {
        if lambda - h <= -r {
            continue;
        }
        let [a, b, c] = triple(k, e, r, lambda, h)?;
        for (i, ok) in holds.iter_mut().enumerate().skip(1) {
            if !*ok {
                continue;
            }
            let target = (n - i) as f64 * b.w[i + 1];
            if derivative_check(a.w[i], b.w[i], c.w[i], h, target, tol) != DerivCheck::Pass {
                *ok = false;
            }
        }
    }
    Ok(holds.iter().skip(1).take_while(|x| **x).count())
}

/// Verdicts for the equivalent characterizations of a constant quotient on
/// `[λ0, λ1]`, each computed independently.
#[derive(Clone, Debug)]
pub struct DiagnosisReport {
    pub lambda0: f64,
    pub lambda1: f64,
    /// `I(λ0)`, `I(λ1)`.
    pub quotients: (f64, f64),
    /// `I(λ0) = I(λ1)`.
    pub equal_quotients: bool,
    /// `K_{λ1} = α K_{λ0} + x0`.
    pub homothety: Option<HomothetyWitness>,
    /// `K_{λ1}` is homothetic to a tangential body of `E`.
    pub tangential: bool,
    /// `I` constant on the sampled part of `(-r, λ1]`.
    pub constant_on_grid: bool,
    pub monotone: bool,
    pub max_rise: f64,
    /// Maximal runs of the sampled grid on which `I` stays constant.
    pub constancy_intervals: Vec<(f64, f64)>,
    /// `p`-tangentiality of the normalized `K_{λ1}` for `p = 0..n`.
    pub p_tangential: Vec<(usize, bool)>,
    pub r_class: usize,
    /// For `λ1 > 0`: whether `K` itself is homothetic to `E`.
    pub homothetic_to_gauge: Option<bool>,
    /// For `λ1 > 0`: whether `I(λ0) = I(λ1) = n^n vol(E)`.
    pub at_gauge_bound: Option<bool>,
    pub notes: Vec<String>,
}

impl DiagnosisReport {
    /// The four verdicts coincide.
    pub fn consistent(&self) -> bool {
        let v = [self.equal_quotients, self.homothety.is_some(), self.tangential, self.constant_on_grid];
        v.iter().all(|x| *x == v[0])
    }
}

/// Runs the constancy characterizations on `[λ0, λ1]`.
pub fn constancy_diagnosis(k: &Polytope, e: &Polytope, lambda0: f64, lambda1: f64) -> Result<DiagnosisReport> {
    constancy_diagnosis_tol(k, e, lambda0, lambda1, MONOTONE_TOL)
}

pub fn constancy_diagnosis_tol(
    k: &Polytope,
    e: &Polytope,
    lambda0: f64,
    lambda1: f64,
    tol_rel: f64,
) -> Result<DiagnosisReport> {
    check_same_dim(k, e)?;
    let n = k.dim();
    let r = inradius(k, e)?.r;
    if !(lambda0 > -r) {
        return Err(Error::OutOfRange { value: lambda0, min: -r });
    }
    if !(lambda1 > lambda0) {
        return Err(Error::BadParams("need λ0 < λ1".into()));
    }
    let k0 = parallel_with(k, e, r, lambda0)?;
    let k1 = parallel_with(k, e, r, lambda1)?;
    let i0 = steiner_fit(&k0, e)?.isoperimetric();
    let i1 = steiner_fit(&k1, e)?.isoperimetric();
    let equal_quotients = num::abs(i0 - i1) <= tol_rel * i0.max(i1);

    let homothety = k0.detect_homothety(&k1)?;

    let inr1 = inradius(&k1, e)?;
    let normalized = k1.homothetic(1.0 / inr1.r, inr1.center * (-1.0 / inr1.r))?;
    let tangential = tangential_test(&normalized, e);
    let mut p_tangential = Vec::with_capacity(n);
    for p in 0..n {
        p_tangential.push((p, p_tangential_test(&normalized, e, p)?));
    }

    let lo = -r + 1e-6 * r;
    let grid = GridSpec::Uniform { lmin: lo, lmax: lambda1, steps: 24 };
    let curve = sample_curve(k, e, &grid, None, &[])?;
    let values = curve.quotient_i();
    let last = *values.last().unwrap();
    let constant_on_grid = values.iter().all(|v| num::abs(v - last) <= tol_rel * last);
    let (monotone, max_rise) = monotone_series(&values, tol_rel);
    let lambdas = curve.lambdas();
    let mut constancy_intervals = Vec::new();
    let mut start = 0;
    for j in 1..=values.len() {
        let same = j < values.len() && num::abs(values[j] - values[start]) <= tol_rel * values[start];
        if !same {
            if j - 1 > start {
                constancy_intervals.push((lambdas[start], lambdas[j - 1]));
            }
            start = j;
        }
    }

    let r_class = r_class_estimate(k, e, &grid, default_step(r), DERIV_TOL)?;

    let (homothetic_to_gauge, at_gauge_bound) = if lambda1 > 0.0 {
        let bound = num::powi(n as f64, n as i32) * volume(e);
        let at = num::abs(i0 - bound) <= tol_rel * bound && num::abs(i1 - bound) <= tol_rel * bound;
        (Some(e.detect_homothety(k)?.is_some()), Some(at))
    } else {
        (None, None)
    };

    let mut notes = vec![String::from(
        "equality cases stated for smooth gauges are not asserted: the gauge is a polytope",
    )];
    if lambda1 > 0.0 && equal_quotients != homothetic_to_gauge.unwrap_or(false) {
        notes.push("for λ1 > 0 constancy should force K to be homothetic to E".into());
    }

    Ok(DiagnosisReport {
        lambda0,
        lambda1,
        quotients: (i0, i1),
        equal_quotients,
        homothety,
        tangential,
        constant_on_grid,
        monotone,
        max_rise,
        constancy_intervals,
        p_tangential,
        r_class,
        homothetic_to_gauge,
        at_gauge_bound,
        notes,
    })
}

/// The implemented laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LawId {
    SteinerShift,
    InOfOut,
    FamilyConcavity,
    BmConcavity,
    DvolEqSurface,
    WulffShift,
    SupportAgreement,
    LimitShape,
    OmegaCompare,
    Minimizer,
}

impl LawId {
    pub const ALL: [LawId; 10] = [
        LawId::SteinerShift,
        LawId::InOfOut,
        LawId::FamilyConcavity,
        LawId::BmConcavity,
        LawId::DvolEqSurface,
        LawId::WulffShift,
        LawId::SupportAgreement,
        LawId::LimitShape,
        LawId::OmegaCompare,
        LawId::Minimizer,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LawId::SteinerShift => "STEINER_SHIFT",
            LawId::InOfOut => "IN_OF_OUT",
            LawId::FamilyConcavity => "FAMILY_CONCAVITY",
            LawId::BmConcavity => "BM_CONCAVITY",
            LawId::DvolEqSurface => "DVOL_EQ_SURFACE",
            LawId::WulffShift => "WULFF_SHIFT",
            LawId::SupportAgreement => "SUPPORT_AGREEMENT",
            LawId::LimitShape => "LIMIT_SHAPE",
            LawId::OmegaCompare => "OMEGA_COMPARE",
            LawId::Minimizer => "MINIMIZER",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase().replace('-', "_");
        LawId::ALL
            .iter()
            .find(|l| l.name() == t)
            .copied()
            .ok_or_else(|| Error::BadParams(format!("unknown law `{s}`")))
    }
}

/// Parameters of a single law check; which fields are needed depends on the
/// law.
#[derive(Clone, Debug, Default)]
pub struct LawParams {
    pub lambda: Option<f64>,
    pub lambda0: Option<f64>,
    pub lambda1: Option<f64>,
    /// The reference parameter `Λ` of the Wulff shift identity.
    pub big_lambda: Option<f64>,
    pub mu: Option<f64>,
    pub h: Option<f64>,
    pub tol: Option<f64>,
    pub omega: Option<DirectionSet>,
    pub omega2: Option<DirectionSet>,
    pub lambdas: Vec<f64>,
}

fn need(v: Option<f64>, name: &str) -> Result<f64> {
    match v {
        Some(x) if x.is_finite() => Ok(x),
        Some(_) => Err(Error::BadParams(format!("{name} must be finite"))),
        None => Err(Error::BadParams(format!("missing parameter {name}"))),
    }
}

/// Result of one law check.
#[derive(Clone, Debug)]
pub struct PassReport {
    pub law: LawId,
    pub passed: bool,
    /// Worst observed deviation, in the law's own units.
    pub residual: f64,
    pub tolerance: f64,
    /// Sample points skipped as derivative breakpoints.
    pub breakpoints: usize,
    pub detail: String,
}

fn hausdorff_tol(p: &Polytope) -> f64 {
    EPS_GEOM * p.diameter().max(1.0)
}

fn rel(a: f64, b: f64) -> f64 {
    num::abs(a - b) / num::abs(a).max(num::abs(b)).max(f64::MIN_POSITIVE)
}

/// Checks one law on one instance.
pub fn law_check(law: LawId, k: &Polytope, e: &Polytope, params: &LawParams) -> Result<PassReport> {
    check_same_dim(k, e)?;
    if !k.is_full_dim() || !e.is_full_dim() {
        return Err(Error::LowerDimensional);
    }
    let n = k.dim();
    let r = inradius(k, e)?.r;
    let report = |passed: bool, residual: f64, tolerance: f64, detail: String| PassReport {
        law,
        passed,
        residual,
        tolerance,
        breakpoints: 0,
        detail,
    };
    match law {
        LawId::SteinerShift => {
            let lambda = need(params.lambda, "lambda")?;
            if lambda <= 0.0 {
                return Err(Error::BadParams("lambda must be positive".into()));
            }
            let tol = params.tol.unwrap_or(1e-8);
            let w = steiner_fit(k, e)?;
            let ws = steiner_fit(&parallel_with(k, e, r, lambda)?, e)?;
            let mut worst = 0.0f64;
            for i in 0..=n {
                let predicted: f64 = (0..=n - i)
                    .map(|j| num::binom(n - i, j) * num::powi(lambda, j as i32) * w.w[i + j])
                    .sum();
                worst = worst.max(rel(ws.w[i], predicted));
            }
            Ok(report(worst <= tol, worst, tol, format!("λ = {lambda}")))
        }
        LawId::InOfOut => {
            let l0 = need(params.lambda0, "lambda0")?;
            let l1 = need(params.lambda1, "lambda1")?;
            if !(l0 < l1) {
                return Err(Error::BadParams("need lambda0 < lambda1".into()));
            }
            let k0 = parallel_with(k, e, r, l0)?;
            let k1 = parallel_with(k, e, r, l1)?;
            let back = erode(&k1, l1 - l0, e)?;
            let d = k0.hausdorff(&back)?;
            let tol = params.tol.unwrap_or_else(|| hausdorff_tol(&k1));
            Ok(report(d <= tol, d, tol, format!("K_{l0} vs K_{l1} ~ {}E", l1 - l0)))
        }
        LawId::FamilyConcavity | LawId::BmConcavity => {
            let l0 = need(params.lambda0, "lambda0")?;
            let l1 = need(params.lambda1, "lambda1")?;
            let mu = need(params.mu, "mu")?;
            if !(0.0..=1.0).contains(&mu) {
                return Err(Error::BadParams("mu must lie in [0,1]".into()));
            }
            let k0 = parallel_with(k, e, r, l0)?;
            let k1 = parallel_with(k, e, r, l1)?;
            let mix = minkowski_sum(&k0.scaled(mu)?, &k1.scaled(1.0 - mu)?)?;
            if law == LawId::FamilyConcavity {
                let target = parallel_with(k, e, r, mu * l0 + (1.0 - mu) * l1)?;
                let tol = params.tol.unwrap_or_else(|| EPS_GEOM * target.scale());
                let excess = mix
                    .vertices()
                    .iter()
                    .flat_map(|v| target.facets().iter().map(move |f| f.excess(v)))
                    .fold(0.0, f64::max);
                Ok(report(excess <= tol, excess, tol, format!("μ = {mu}")))
            } else {
                let tol = params.tol.unwrap_or(1e-9);
                let (wm, w0, w1) = (steiner_fit(&mix, e)?, steiner_fit(&k0, e)?, steiner_fit(&k1, e)?);
                let mut worst = 0.0f64;
                for i in 0..n {
                    let p = 1.0 / (n - i) as f64;
                    let lhs = num::powf(wm.w[i], p);
                    let rhs = mu * num::powf(w0.w[i], p) + (1.0 - mu) * num::powf(w1.w[i], p);
                    worst = worst.max((rhs - lhs) / rhs);
                }
                Ok(report(worst <= tol, worst.max(0.0), tol, format!("μ = {mu}")))
            }
        }
        LawId::DvolEqSurface => {
            let lambdas = if params.lambdas.is_empty() {
                vec![need(params.lambda, "lambda")?]
            } else {
                params.lambdas.clone()
            };
            let h = params.h.unwrap_or_else(|| default_step(r));
            let tol = params.tol.unwrap_or(DERIV_TOL);
            let mut worst = 0.0f64;
            let mut breakpoints = 0;
            let mut checked = 0;
            for &lambda in &lambdas {
                if lambda - h <= -r {
                    return Err(Error::OutOfRange { value: lambda - h, min: -r });
                }
                let vol = |l: f64| -> Result<f64> { Ok(volume(&parallel_with(k, e, r, l)?)) };
                let (a, c) = (vol(lambda - h)?, vol(lambda + h)?);
                let body = parallel_with(k, e, r, lambda)?;
                let b = volume(&body);
                let s = steiner_fit(&body, e)?.surface();
                match derivative_check(a, b, c, h, s, tol) {
                    DerivCheck::Breakpoint => breakpoints += 1,
                    _ => {
                        checked += 1;
                        worst = worst.max(rel((c - a) / (2.0 * h), s));
                    }
                }
            }
            Ok(PassReport {
                law,
                passed: worst <= tol,
                residual: worst,
                tolerance: tol,
                breakpoints,
                detail: format!("{checked} points checked, h = {h}"),
            })
        }
        LawId::WulffShift => {
            let omega = params.omega.clone().map_or_else(|| DirectionSet::normals_of(k), Ok)?;
            let big = need(params.big_lambda, "big_lambda")?;
            let lambda = need(params.lambda, "lambda")?;
            if !(big > 0.0 && lambda <= big) {
                return Err(Error::BadParams("need big_lambda > 0 and lambda <= big_lambda".into()));
            }
            if !omega.determines(k)? {
                return Err(Error::NotDetermining);
            }
            let direct = wulff_with(k, e, &omega, r, lambda)?;
            let reference = wulff_with(k, e, &omega, r, big)?;
            let r_ref = inradius(&reference, e)?.r;
            let shifted = parallel_with(&reference, e, r_ref, lambda - big)?;
            let d = direct.hausdorff(&shifted)?;
            let tol = params.tol.unwrap_or_else(|| hausdorff_tol(&reference));
            Ok(report(d <= tol, d, tol, format!("λ = {lambda}, Λ = {big}, |Ω| = {}", omega.len())))
        }
        LawId::SupportAgreement => {
            let omega = params.omega.clone().map_or_else(|| DirectionSet::normals_of(k), Ok)?;
            let lambda = need(params.lambda, "lambda")?;
            if lambda <= 0.0 {
                return Err(Error::BadParams("lambda must be positive".into()));
            }
            if !omega.determines(k)? {
                return Err(Error::NotDetermining);
            }
            let body = wulff_with(k, e, &omega, r, lambda)?;
            let tol = params.tol.unwrap_or(1e-9);
            let mut worst = 0.0f64;
            for d in omega.dirs() {
                let u = d.vector();
                let want = k.h(&u) + lambda * e.h(&u);
                worst = worst.max(num::abs(body.h(&u) - want) / want.abs().max(1.0));
            }
            Ok(report(worst <= tol, worst, tol, format!("λ = {lambda}, |Ω| = {}", omega.len())))
        }
        LawId::LimitShape => {
            let lambdas = if params.lambdas.is_empty() { vec![10.0, 100.0, 1000.0] } else { params.lambdas.clone() };
            let tol = params.tol.unwrap_or(1e-2);
            let (target, omega) = match &params.omega {
                Some(om) => {
                    if !om.determines(k)? {
                        return Err(Error::NotDetermining);
                    }
                    (gauge_envelope(e, om)?, Some(om))
                }
                None => (e.clone(), None),
            };
            let mut dists = Vec::with_capacity(lambdas.len());
            for &l in &lambdas {
                if l <= 0.0 {
                    return Err(Error::BadParams("limit shape needs positive λ".into()));
                }
                let body = match omega {
                    Some(om) => wulff_with(k, e, om, r, l)?,
                    None => parallel_with(k, e, r, l)?,
                };
                dists.push(body.scaled(1.0 / l)?.hausdorff(&target)?);
            }
            let decreasing = dists.windows(2).all(|w| w[1] < w[0]);
            let last = *dists.last().unwrap();
            Ok(report(decreasing && last <= tol, last, tol, format!("distances {dists:?}")))
        }
        LawId::OmegaCompare => {
            let o1 = params.omega.as_ref().ok_or_else(|| Error::BadParams("missing omega".into()))?;
            let o2 = params.omega2.as_ref().ok_or_else(|| Error::BadParams("missing omega2".into()))?;
            if !o1.is_subset_of(o2) {
                return Err(Error::BadParams("omega must be contained in omega2".into()));
            }
            if !o1.determines(k)? {
                return Err(Error::NotDetermining);
            }
            let lambdas = if params.lambdas.is_empty() { vec![-0.5 * r, 0.0, 0.5, 2.0] } else { params.lambdas.clone() };
            let tol = params.tol.unwrap_or(1e-9);
            let mut worst = 0.0f64;
            let mut pattern = String::new();
            for &l in &lambdas {
                let i1 = steiner_fit(&wulff_with(k, e, o1, r, l)?, e)?.isoperimetric();
                let i2 = steiner_fit(&wulff_with(k, e, o2, r, l)?, e)?.isoperimetric();
                let d = rel(i1, i2);
                let sign = if d <= tol {
                    '='
                } else if i1 > i2 {
                    '>'
                } else {
                    '<'
                };
                if l <= 0.0 {
                    worst = worst.max(d);
                }
                pattern.push_str(&format!("λ={l}: I1{sign}I2; "));
            }
            Ok(report(worst <= tol, worst, tol, pattern))
        }
        LawId::Minimizer => {
            let omega = params.omega.clone().map_or_else(|| DirectionSet::normals_of(k), Ok)?;
            if !omega.determines(k)? {
                return Err(Error::NotDetermining);
            }
            let tol = params.tol.unwrap_or(1e-9);
            let env = gauge_envelope(e, &omega)?;
            let bound = num::powi(n as f64, n as i32) * volume(&env);
            let q = steiner_fit(k, e)?.isoperimetric();
            let equality = num::abs(q - bound) <= tol * bound;
            let homothetic = env.detect_homothety(k)?.is_some();
            let passed = q >= bound * (1.0 - tol) && equality == homothetic;
            Ok(report(
                passed,
                (q - bound) / bound,
                tol,
                format!("I = {q}, bound = {bound}, equality = {equality}, homothetic = {homothetic}"),
            ))
        }
    }
}

/// Outcome of a seeded batch of law checks.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub law: LawId,
    pub dim: usize,
    pub seed: u64,
    pub reports: Vec<PassReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| !r.passed).count()
    }
}

/// Random instance and parameters for the `index`-th check of a suite.
pub fn random_instance(law: LawId, dim: usize, seed: u64, index: u64) -> Result<(Polytope, Polytope, LawParams)> {
    let mut rng = random::rng(seed, index);
    let k = random::random_body(&mut rng, dim, 0.5)?;
    let e = random::random_body(&mut rng, dim, 0.2)?;
    let r = inradius(&k, &e)?.r;
    let mut p = LawParams::default();
    match law {
        LawId::SteinerShift => p.lambda = Some(rng.gen_range(0.1..2.0)),
        LawId::InOfOut => {
            p.lambda0 = Some(-r * rng.gen_range(0.05..0.9));
            p.lambda1 = Some(rng.gen_range(0.1..2.0));
        }
        LawId::FamilyConcavity | LawId::BmConcavity => {
            p.lambda0 = Some(-r * rng.gen_range(0.05..0.9));
            p.lambda1 = Some(rng.gen_range(-0.5 * r..2.0));
            p.mu = Some(rng.gen_range(0.1..0.9));
        }
        LawId::DvolEqSurface => {
            p.lambdas = vec![-r * rng.gen_range(0.1..0.8), rng.gen_range(0.1..2.0)];
        }
        LawId::WulffShift => {
            p.omega = Some(random::random_direction_set(&mut rng, &k, 3)?);
            p.big_lambda = Some(rng.gen_range(0.2..2.0));
            p.lambda = Some(rng.gen_range(-0.8 * r..p.big_lambda.unwrap()));
        }
        LawId::SupportAgreement => {
            p.omega = Some(random::random_direction_set(&mut rng, &k, 3)?);
            p.lambda = Some(rng.gen_range(0.1..2.0));
        }
        LawId::LimitShape => {
            if rng.gen_bool(0.5) {
                p.omega = Some(random::random_direction_set(&mut rng, &k, 2)?);
            }
        }
        LawId::OmegaCompare => {
            let o1 = random::random_direction_set(&mut rng, &k, 2)?;
            let extra = random::random_direction_set(&mut rng, &k, 2)?;
            p.omega2 = Some(o1.union(&extra)?);
            p.omega = Some(o1);
            p.lambdas = vec![-0.5 * r, 0.0, 0.5, 2.0];
        }
        LawId::Minimizer => {
            p.omega = Some(random::random_direction_set(&mut rng, &k, 2)?);
        }
    }
    Ok((k, e, p))
}

/// Runs `count` seeded random checks of `law` in dimension `dim`.
pub fn run_law_suite(law: LawId, dim: usize, count: usize, seed: u64) -> Result<SuiteReport> {
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    let mut reports = Vec::with_capacity(count);
    for i in 0..count {
        let (k, e, p) = random_instance(law, dim, seed, i as u64)?;
        reports.push(law_check(law, &k, &e, &p)?);
    }
    Ok(SuiteReport { law, dim, seed, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;
    use crate::vector::Vector;

    #[test]
    fn monotone_examples() {
        let sq = shapes::unit_square();
        let c = sample_curve(&sq, &shapes::diamond(), &GridSpec::clustered(4.0), None, &[]).unwrap();
        let (ok, rise) = monotone_check(&c, MONOTONE_TOL);
        assert!(ok && rise <= 1e-12, "{rise}");
        let mut v = c.quotient_i();
        v[10] *= 1.01;
        let (ok, rise) = monotone_series(&v, MONOTONE_TOL);
        assert!(!ok && (rise - 0.01).abs() < 1e-3);
    }

    #[test]
    fn tangential_examples() {
        let d = shapes::diamond();
        assert!(tangential_test(&shapes::rect(-1.0, 1.0, -1.0, 1.0), &d));
        assert!(tangential_test(&shapes::cube_centered(1.0), &shapes::octahedron()));
        assert!(!tangential_test(&shapes::rect(-2.0, 2.0, -2.0, 2.0), &d));
        // E not inside K
        assert!(!tangential_test(&shapes::unit_square(), &d));
    }

    #[test]
    fn p_tangential_examples() {
        let c = shapes::cube_centered(1.0);
        let o = shapes::octahedron();
        assert!(p_tangential_test(&c, &o, 2).unwrap());
        assert!(!p_tangential_test(&c, &o, 1).unwrap());
        assert!(!p_tangential_test(&c, &o, 0).unwrap());
        assert!(p_tangential_test(&o, &o, 0).unwrap());
        assert!(p_tangential_test(&c, &c, 0).unwrap());
        let sq = shapes::rect(-1.0, 1.0, -1.0, 1.0);
        assert!(p_tangential_test(&sq, &shapes::diamond(), 1).unwrap());
        assert!(!p_tangential_test(&sq, &shapes::diamond(), 0).unwrap());
        assert!(p_tangential_test(&c, &o, 3).is_err());
    }

    #[test]
    fn r_class_examples() {
        let grid = GridSpec::Uniform { lmin: -0.6, lmax: 1.5, steps: 6 };
        let c = shapes::cube_centered(1.0);
        let h = default_step(1.0);
        assert_eq!(r_class_estimate(&c, &c, &grid, h, DERIV_TOL).unwrap(), 2);
        assert_eq!(r_class_estimate(&c, &shapes::octahedron(), &grid, h, DERIV_TOL).unwrap(), 0);
        let sq = shapes::rect(-1.0, 1.0, -1.0, 1.0);
        let d = shapes::diamond();
        // inner bodies are squares, so dW_1/dλ = 4 while W_2 = 2
        assert_eq!(r_class_estimate(&sq, &d, &grid, h, DERIV_TOL).unwrap(), 0);
        let outer = GridSpec::Uniform { lmin: 0.1, lmax: 2.0, steps: 5 };
        assert_eq!(r_class_estimate(&sq, &d, &outer, h, DERIV_TOL).unwrap(), 1);
    }

    #[test]
    fn diagnosis_of_square_and_diamond() {
        let rep = constancy_diagnosis(&shapes::unit_square(), &shapes::diamond(), -0.4, -0.1).unwrap();
        assert!(rep.equal_quotients && rep.tangential && rep.constant_on_grid);
        let w = rep.homothety.unwrap();
        assert!((w.scale - 0.8 / 0.2).abs() < 1e-9);
        assert!(rep.consistent());
        assert_eq!(rep.homothetic_to_gauge, None);
    }

    #[test]
    fn diagnosis_of_gauge_itself() {
        let e = shapes::regular_polygon_gauge(5);
        let rep = constancy_diagnosis(&e, &e, -0.5, 2.0).unwrap();
        assert!(rep.consistent() && rep.equal_quotients);
        assert_eq!(rep.homothetic_to_gauge, Some(true));
        assert_eq!(rep.at_gauge_bound, Some(true));
        assert_eq!(rep.constancy_intervals.len(), 1);
    }

    #[test]
    fn diagnosis_of_square_and_rectangle() {
        let rep = constancy_diagnosis(&shapes::unit_square(), &shapes::rect(0.0, 1.0, 0.0, 2.0), 0.0, 1.0).unwrap();
        assert!(!rep.equal_quotients && rep.homothety.is_none() && !rep.tangential && !rep.constant_on_grid);
        assert!((rep.quotients.0 - 9.0).abs() < 1e-10 && (rep.quotients.1 - 49.0 / 6.0).abs() < 1e-10);
        assert!(rep.consistent());
    }

    #[test]
    fn law_examples() {
        let sq = shapes::unit_square();
        let rect = shapes::rect(0.0, 1.0, 0.0, 2.0);
        let p = LawParams { lambda0: Some(-0.2), lambda1: Some(0.7), ..Default::default() };
        let rep = law_check(LawId::InOfOut, &sq, &rect, &p).unwrap();
        assert!(rep.passed && rep.residual <= 1e-9, "{rep:?}");

        let p = LawParams { lambda: Some(0.5), h: Some(1e-4), ..Default::default() };
        let rep = law_check(LawId::DvolEqSurface, &sq, &shapes::diamond(), &p).unwrap();
        assert!(rep.passed && rep.residual * 6.0 <= 1e-5, "{rep:?}");

        let e8 = shapes::octagon();
        let axes = DirectionSet::axes(2).unwrap();
        for (a, b) in [(1.0, 1.0), (1.0, 2.0), (0.3, 0.7)] {
            let k = shapes::rect(0.0, a, 0.0, b);
            let p = LawParams { omega: Some(axes.clone()), ..Default::default() };
            let rep = law_check(LawId::Minimizer, &k, &e8, &p).unwrap();
            assert!(rep.passed, "{rep:?}");
            let closed: f64 = 4.0 * (a + b) * (a + b) / (a * b);
            assert!((rep.residual - (closed - 16.0) / 16.0).abs() < 1e-9);
        }
        assert!(matches!(law_check(LawId::InOfOut, &sq, &rect, &LawParams::default()), Err(Error::BadParams(_))));
    }

    #[test]
    fn law_names_round_trip() {
        for l in LawId::ALL {
            assert_eq!(l.name().parse::<LawId>().unwrap(), l);
        }
        assert_eq!("in-of-out".parse::<LawId>().unwrap(), LawId::InOfOut);
        assert!("NOPE".parse::<LawId>().is_err());
    }

    #[test]
    fn omega_compare_agrees_for_inner_bodies() {
        let k = shapes::unit_square();
        let o1 = DirectionSet::axes(2).unwrap();
        let extra = DirectionSet::new(
            2,
            &[Vector::new2(1.0, 1.0), Vector::new2(-1.0, 1.0), Vector::new2(0.0, -1.0)],
            "",
        )
        .unwrap();
        let p = LawParams { omega: Some(o1.clone()), omega2: Some(o1.union(&extra).unwrap()), ..Default::default() };
        let rep = law_check(LawId::OmegaCompare, &k, &shapes::octagon(), &p).unwrap();
        assert!(rep.passed, "{rep:?}");
    }
}
