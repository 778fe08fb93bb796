use angvor_core::{
    ccw_distance, sym_distance, triangle_base_angles, wrap_ccw, wrap_signed, Angle, Point,
    SimilarityTransform, Site,
};
use proptest::prelude::*;
use std::f64::consts::{PI, TAU};

fn point() -> impl Strategy<Value = Point> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(x, y)| Point::new(x, y))
}

fn similarity() -> impl Strategy<Value = SimilarityTransform> {
    (-PI..PI, -2.3..2.3f64, point(), any::<bool>()).prop_map(|(r, ls, t, refl)| {
        SimilarityTransform::new(Angle::from_radians(r), ls.exp(), t, refl).unwrap()
    })
}

fn whole_turns(d: f64) -> f64 {
    (d / TAU - (d / TAU).round()).abs()
}

proptest! {
    #[test]
    fn wraps_are_idempotent_and_agree_mod_two_pi(a in -1e3..1e3f64) {
        let a = Angle::from_radians(a);
        let s = wrap_signed(a).unwrap();
        let c = wrap_ccw(a).unwrap();
        prop_assert_eq!(wrap_signed(s).unwrap(), s);
        prop_assert_eq!(wrap_ccw(c).unwrap(), c);
        prop_assert!(s.radians() > -PI && s.radians() <= PI);
        prop_assert!(c.radians() >= 0.0 && c.radians() < TAU);
        prop_assert!(whole_turns(s.radians() - a.radians()) < 1e-12);
        prop_assert!(whole_turns(c.radians() - a.radians()) < 1e-12);
    }

    #[test]
    fn sym_is_exactly_min_of_ccw_and_complement(
        s in point(), theta in -10.0..10.0f64, z in point()
    ) {
        prop_assume!(s.distance(z) > 1e-9);
        let site = Site::new(s, Angle::from_radians(theta)).unwrap();
        let c = ccw_distance(&site, z).unwrap().radians();
        let m = sym_distance(&site, z).unwrap().radians();
        prop_assert_eq!(m, c.min(TAU - c));
        prop_assert!((0.0..=PI).contains(&m));
        prop_assert!((0.0..TAU).contains(&c));
    }

    #[test]
    fn transform_round_trips(t in similarity(), p in point()) {
        let back = t.inverse().apply(t.apply(p));
        let size = 1.0 + p.norm() + t.translation.norm() / t.scale;
        prop_assert!(back.distance(p) <= 1e-12 * size, "{back:?} {p:?}");
    }

    #[test]
    fn base_angles_are_similarity_invariant(
        p in point(), q in point(), z in point(), t in similarity()
    ) {
        let area = (q - p).cross(z - p).abs();
        prop_assume!(area > 1e-3 && p.distance(q) > 1e-3);
        let (mu, nu) = triangle_base_angles(p, q, z).unwrap();
        let (mu2, nu2) = triangle_base_angles(t.apply(p), t.apply(q), t.apply(z)).unwrap();
        prop_assert!((mu.radians() - mu2.radians()).abs() <= 1e-10);
        prop_assert!((nu.radians() - nu2.radians()).abs() <= 1e-10);
    }
}
