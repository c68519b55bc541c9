use proptest::prelude::*;
use rand::Rng;
use wulff_core::algebra::{erode, hull, intersect_halfspaces, minkowski_sum};
use wulff_core::families::parallel_body;
use wulff_core::metrics::inradius;
use wulff_core::random::{self, random_body, random_unit3};
use wulff_core::{Polytope, Vector, EPS_GEOM};

fn body(seed: u64, dim: usize, center: f64) -> Polytope {
    random_body(&mut random::rng(seed, dim as u64), dim, center).unwrap()
}

fn direction(rng: &mut random::SeededRng, dim: usize) -> Vector {
    if dim == 2 {
        let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        Vector::new2(t.cos(), t.sin())
    } else {
        random_unit3(rng)
    }
}

fn dims() -> impl Strategy<Value = usize> {
    prop_oneof![3 => Just(2usize), 1 => Just(3usize)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn support_is_subadditive(seed: u64, dim in dims()) {
        let p = body(seed, dim, 1.0);
        let mut rng = random::rng(seed, 99);
        for _ in 0..20 {
            let u = direction(&mut rng, dim) * rng.gen_range(0.1..3.0);
            let v = direction(&mut rng, dim) * rng.gen_range(0.1..3.0);
            let lhs = p.support(u + v).unwrap();
            let rhs = p.support(u).unwrap() + p.support(v).unwrap();
            prop_assert!(lhs <= rhs + 1e-12);
        }
    }

    #[test]
    fn hull_and_facets_are_dual(seed: u64, dim in dims(), n in 4usize..30) {
        let mut rng = random::rng(seed, 1);
        let pts: Vec<Vector> = (0..n)
            .map(|_| {
                let mut v = Vector::ZERO;
                for i in 0..dim {
                    v.0[i] = rng.gen_range(-1.0..1.0);
                }
                v
            })
            .collect();
        let h = hull(dim, &pts).unwrap();
        prop_assume!(h.is_full_dim());
        for p in &pts {
            prop_assert!(h.contains(p, 1e-12));
        }
        let back = intersect_halfspaces(dim, h.facets()).unwrap();
        prop_assert!(back.hausdorff(&h).unwrap() <= EPS_GEOM);
        prop_assert_eq!(back.vertices().len(), h.vertices().len());
    }

    #[test]
    fn homothety_is_recovered(seed: u64, dim in dims(), alpha in 0.1f64..10.0) {
        let p = body(seed, dim, 0.5);
        let mut rng = random::rng(seed, 2);
        let shift = direction(&mut rng, dim) * rng.gen_range(0.0..3.0);
        let q = p.homothetic(alpha, shift).unwrap();
        let w = p.detect_homothety(&q).unwrap().expect("homothety not found");
        prop_assert!((w.scale - alpha).abs() <= 1e-9 * alpha);
        prop_assert!((w.translation - shift).norm() <= 1e-9 * shift.norm().max(alpha));
    }

    #[test]
    fn non_homothetic_bodies_are_rejected(seed: u64, dim in dims()) {
        let p = body(seed, dim, 0.5);
        let q = body(seed.wrapping_add(1), dim, 0.5);
        prop_assert!(p.detect_homothety(&q).unwrap().is_none());
    }

    #[test]
    fn hausdorff_triangle_inequality(seed: u64, dim in dims()) {
        let a = body(seed, dim, 1.0);
        let b = body(seed ^ 1, dim, 1.0);
        let c = body(seed ^ 2, dim, 1.0);
        let ab = a.hausdorff(&b).unwrap();
        let bc = b.hausdorff(&c).unwrap();
        let ac = a.hausdorff(&c).unwrap();
        prop_assert!(ac <= ab + bc + EPS_GEOM);
        prop_assert!((ab - b.hausdorff(&a).unwrap()).abs() <= 1e-15);
    }

    #[test]
    fn sum_support_is_additive(seed: u64, dim in dims()) {
        let p = body(seed, dim, 1.0);
        let q = body(seed ^ 7, dim, 1.0);
        let s = minkowski_sum(&p, &q).unwrap();
        let mut rng = random::rng(seed, 3);
        for _ in 0..100 {
            let u = direction(&mut rng, dim);
            let d = s.support(u).unwrap() - p.support(u).unwrap() - q.support(u).unwrap();
            prop_assert!(d.abs() <= 1e-9);
        }
    }

    #[test]
    fn erosion_undoes_sum(seed: u64, dim in dims(), t in 0.05f64..2.0) {
        let p = body(seed, dim, 0.5);
        let e = body(seed ^ 3, dim, 0.2);
        let grown = minkowski_sum(&p, &e.scaled(t).unwrap()).unwrap();
        let back = erode(&grown, t, &e).unwrap();
        prop_assert!(p.is_subset_of(&back, 1e-9).unwrap());
        prop_assert!(back.hausdorff(&p).unwrap() <= EPS_GEOM * grown.diameter().max(1.0));
    }

    #[test]
    fn inner_bodies_are_erosions_of_outer_ones(seed: u64, dim in dims(), a in 0.05f64..0.95, l1 in 0.1f64..2.0) {
        let k = body(seed, dim, 0.5);
        let e = body(seed ^ 5, dim, 0.2);
        let r = inradius(&k, &e).unwrap().r;
        let l0 = -a * r;
        let k0 = parallel_body(&k, &e, l0).unwrap();
        let k1 = parallel_body(&k, &e, l1).unwrap();
        let back = erode(&k1, l1 - l0, &e).unwrap();
        prop_assert!(k0.hausdorff(&back).unwrap() <= EPS_GEOM * k1.diameter().max(1.0));
    }
}

#[test]
fn subset_examples() {
    use wulff_core::shapes::rect;
    let k = rect(0.0, 1.0, 0.0, 1.0);
    assert!(k.is_subset_of(&k, 0.0).unwrap());
    assert!(k.is_subset_of(&rect(-1.0, 2.0, -1.0, 2.0), 0.0).unwrap());
    assert!(!rect(0.0, 2.0, 0.0, 2.0).is_subset_of(&k, 1e-9).unwrap());
}
