use proptest::prelude::*;
use wulff_cli::body_file::{read_body, write_body, BodyFile};
use wulff_cli::curve_file::{read_curve, rows, write_curve};
use wulff_core::families::sample_curve;
use wulff_core::random::{random_body, rng};
use wulff_core::{shapes, GridSpec, Quotient};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn body_file_round_trip(seed in any::<u64>(), dim in 2usize..=3) {
        let p = random_body(&mut rng(seed, 0), dim, 3.0).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.json");
        write_body(&path, &p, Some("p")).unwrap();
        let (q, label) = read_body(&path).unwrap();
        prop_assert_eq!(label.as_deref(), Some("p"));
        prop_assert!(p.hausdorff(&q).unwrap() <= wulff_core::EPS_GEOM);
        let again = BodyFile::parse(&BodyFile::from_polytope(&q, None).to_json()).unwrap().to_polytope().unwrap();
        prop_assert_eq!(again.vertices(), q.vertices());
    }

    #[test]
    fn curve_csv_is_bit_exact(seed in any::<u64>(), lmax in 0.5f64..5.0) {
        let k = random_body(&mut rng(seed, 1), 2, 3.0).unwrap();
        let e = shapes::unit_square();
        let c = sample_curve(&k, &e, &GridSpec::clustered(lmax), None, &[Quotient::Single(0)]).unwrap();
        let mut buf = Vec::new();
        write_curve(&c, &mut buf).unwrap();
        let t = read_curve(buf.as_slice()).unwrap();
        let expect = rows(&c);
        prop_assert_eq!(t.rows.len(), expect.len());
        for (a, b) in t.rows.iter().zip(&expect) {
            for (x, y) in a.iter().zip(b) {
                prop_assert_eq!(x.to_bits(), y.to_bits());
            }
        }
    }
}
