use proptest::prelude::*;
use wulff_core::algebra::minkowski_sum;
use wulff_core::families::{gauge_envelope, parallel_body, wulff_body};
use wulff_core::metrics::{inradius, volume};
use wulff_core::random::{self, random_body, random_direction_set};
use wulff_core::{DirectionSet, Polytope, EPS_GEOM};

struct Case {
    k: Polytope,
    e: Polytope,
    r: f64,
    omega: DirectionSet,
    wider: DirectionSet,
}

fn case(seed: u64, dim: usize) -> Case {
    let mut rng = random::rng(seed, 10 + dim as u64);
    let k = random_body(&mut rng, dim, 0.5).unwrap();
    let e = random_body(&mut rng, dim, 0.2).unwrap();
    let r = inradius(&k, &e).unwrap().r;
    let omega = random_direction_set(&mut rng, &k, 2).unwrap();
    let more = random_direction_set(&mut rng, &k, 3).unwrap();
    let wider = omega.union(&more).unwrap();
    Case { k, e, r, omega, wider }
}

fn dims() -> impl Strategy<Value = usize> {
    prop_oneof![3 => Just(2usize), 1 => Just(3usize)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn wulff_shift(seed: u64, dim in dims(), big in 0.2f64..2.0, t in 0.0f64..1.0) {
        let c = case(seed, dim);
        let lambda = -0.9 * c.r + t * (big + 0.9 * c.r);
        let direct = wulff_body(&c.k, &c.e, &c.omega, lambda).unwrap();
        let reference = wulff_body(&c.k, &c.e, &c.omega, big).unwrap();
        let shifted = parallel_body(&reference, &c.e, lambda - big).unwrap();
        prop_assert!(direct.hausdorff(&shifted).unwrap() <= EPS_GEOM * reference.diameter().max(1.0));
    }

    #[test]
    fn support_agreement(seed: u64, dim in dims(), lambda in 0.05f64..3.0) {
        let c = case(seed, dim);
        let w = wulff_body(&c.k, &c.e, &c.omega, lambda).unwrap();
        for d in c.omega.dirs() {
            let u = d.vector();
            let want = c.k.support(u).unwrap() + lambda * c.e.support(u).unwrap();
            prop_assert!((w.support(u).unwrap() - want).abs() <= 1e-9 * want.abs().max(1.0));
        }
    }

    #[test]
    fn nesting(seed: u64, dim in dims(), lambda in -1.0f64..2.0) {
        let c = case(seed, dim);
        let lambda = if lambda < 0.0 { lambda * 0.95 * c.r } else { lambda };
        let w1 = wulff_body(&c.k, &c.e, &c.omega, lambda).unwrap();
        let w2 = wulff_body(&c.k, &c.e, &c.wider, lambda).unwrap();
        let p = parallel_body(&c.k, &c.e, lambda).unwrap();
        let tol = EPS_GEOM * w1.scale();
        prop_assert!(w2.is_subset_of(&w1, tol).unwrap());
        prop_assert!(p.is_subset_of(&w2, tol).unwrap());
        if lambda <= 0.0 {
            prop_assert!(w1.hausdorff(&p).unwrap() <= tol);
            prop_assert!(w2.hausdorff(&p).unwrap() <= tol);
        }
    }

    #[test]
    fn limit_shapes(seed: u64, dim in dims()) {
        let c = case(seed, dim);
        let env = gauge_envelope(&c.e, &c.omega).unwrap();
        let mut last = (f64::INFINITY, f64::INFINITY);
        for l in [10.0, 100.0, 1000.0] {
            let d = parallel_body(&c.k, &c.e, l).unwrap().scaled(1.0 / l).unwrap().hausdorff(&c.e).unwrap();
            let dw = wulff_body(&c.k, &c.e, &c.omega, l).unwrap().scaled(1.0 / l).unwrap().hausdorff(&env).unwrap();
            prop_assert!(d < last.0 && dw < last.1);
            last = (d, dw);
        }
        prop_assert!(last.0 <= 1e-2 && last.1 <= 1e-2);
    }

    #[test]
    fn family_is_concave(seed: u64, dim in dims(), a in 0.0f64..1.0, b in 0.0f64..1.0, mu in 0.0f64..1.0) {
        let c = case(seed, dim);
        let span = |x: f64| -0.95 * c.r + x * (2.0 + 0.95 * c.r);
        let (l0, l1) = (span(a), span(b));
        let k0 = parallel_body(&c.k, &c.e, l0).unwrap();
        let k1 = parallel_body(&c.k, &c.e, l1).unwrap();
        let mix = minkowski_sum(&k0.scaled(mu).unwrap(), &k1.scaled(1.0 - mu).unwrap()).unwrap();
        let target = parallel_body(&c.k, &c.e, mu * l0 + (1.0 - mu) * l1).unwrap();
        prop_assert!(mix.is_subset_of(&target, EPS_GEOM * target.scale()).unwrap());
    }

    #[test]
    fn envelope_contains_gauge(seed: u64, dim in dims()) {
        let c = case(seed, dim);
        let env = gauge_envelope(&c.e, &c.omega).unwrap();
        prop_assert!(c.e.is_subset_of(&env, EPS_GEOM * env.scale()).unwrap());
        for d in c.omega.dirs() {
            let u = d.vector();
            prop_assert!((env.support(u).unwrap() - c.e.support(u).unwrap()).abs() <= 1e-9);
        }
        prop_assert!(volume(&env) >= volume(&c.e) * (1.0 - 1e-12));
    }
}
