use angvor_core::bisector::{
    oriented_bisector, symmetric_bisector, symmetric_bisector_with, BisectorCurve, BisectorOptions,
    Piece,
};
use angvor_core::{ccw_distance, Angle, BBox, Point, SimilarityTransform, Site};
use proptest::prelude::*;
use std::f64::consts::{PI, TAU};

const SAMPLES: usize = 200;

fn site() -> impl Strategy<Value = Site> {
    (-2.0..2.0f64, -2.0..2.0f64, -PI..PI)
        .prop_map(|(x, y, t)| Site::new(Point::new(x, y), Angle::from_radians(t)).unwrap())
}

fn pair() -> impl Strategy<Value = (Site, Site)> {
    (site(), site()).prop_filter("separated", |(p, q)| p.position.distance(q.position) > 0.5)
}

fn rigid_similarity() -> impl Strategy<Value = SimilarityTransform> {
    (-PI..PI, -2.3..2.3f64, -10.0..10.0f64, -10.0..10.0f64).prop_map(|(r, ls, x, y)| {
        SimilarityTransform::new(Angle::from_radians(r), ls.exp(), Point::new(x, y), false).unwrap()
    })
}

/// Interior samples of every equidistant piece; piece ends come from a
/// bisection and are left out.
fn interior_samples(c: &BisectorCurve) -> Vec<Point> {
    let mut out = Vec::new();
    for bp in c.equidistant_pieces() {
        let pts = bp.piece.sample(SAMPLES).unwrap();
        out.extend_from_slice(&pts[1..pts.len() - 1]);
    }
    out
}

fn near_a_site(c: &BisectorCurve, z: Point, r: f64) -> bool {
    z.distance(c.site_p.position) < r || z.distance(c.site_q.position) < r
}

/// Length of the part of `a` lying within `tol` of `b`.
fn overlap_length(a: &Piece, b: &Piece, tol: f64) -> f64 {
    let pts = a.sample(SAMPLES).unwrap();
    let close: Vec<bool> = pts
        .iter()
        .map(|&z| b.distance_to(z).unwrap() <= tol)
        .collect();
    pts.windows(2)
        .zip(close.windows(2))
        .filter(|(_, c)| c[0] && c[1])
        .map(|(w, _)| w[0].distance(w[1]))
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn swapping_sites_keeps_the_point_set((p, q) in pair()) {
        let a = symmetric_bisector(&p, &q).unwrap();
        let b = symmetric_bisector(&q, &p).unwrap();
        prop_assert_eq!(a.bbox, b.bbox);
        for (x, y) in [(&a, &b), (&b, &a)] {
            for z in interior_samples(x) {
                let d = y.distance_to(z).unwrap();
                prop_assert!(d <= 1e-9, "{z:?} is {d} away");
            }
        }
    }

    #[test]
    fn bisector_is_similarity_equivariant((p, q) in pair(), t in rigid_similarity()) {
        let a = symmetric_bisector(&p, &q).unwrap();
        let (tp, tq) = (t.apply_site(&p), t.apply_site(&q));
        let half = 0.5 * a.bbox.width() * t.scale * 2f64.sqrt() * 1.01;
        let wide = BBox::centered(t.apply(p.position.midpoint(q.position)), half);
        let b = symmetric_bisector_with(&tp, &tq, &BisectorOptions { bbox: Some(wide), ..Default::default() }).unwrap();
        let tol = 1e-9 * t.scale;
        for z in interior_samples(&a) {
            let d = b.distance_to(t.apply(z)).unwrap();
            prop_assert!(d <= tol, "forward {d}");
        }
        let inv = t.inverse();
        for w in interior_samples(&b) {
            let z = inv.apply(w);
            let inner = BBox::centered(a.bbox.corners()[0].midpoint(a.bbox.corners()[2]), 0.5 * a.bbox.width() * 0.99);
            if inner.contains(z) {
                let d = a.distance_to(z).unwrap() * t.scale;
                prop_assert!(d <= tol, "backward {d}");
            }
        }
    }

    #[test]
    fn pieces_do_not_overlap((p, q) in pair()) {
        let c = symmetric_bisector(&p, &q).unwrap();
        let pieces: Vec<&Piece> = c.equidistant_pieces().map(|bp| &bp.piece).collect();
        let total: f64 = pieces.iter().map(|pc| pc.approx_length().unwrap()).sum();
        for i in 0..pieces.len() {
            for j in 0..pieces.len() {
                if i != j {
                    let o = overlap_length(pieces[i], pieces[j], 1e-9);
                    prop_assert!(o <= 1e-9 * total, "pieces {i} and {j} share {o}");
                }
            }
        }
    }

    #[test]
    fn oriented_arc_is_equidistant((p, q) in pair()) {
        let c = oriented_bisector(&p, &q).unwrap();
        let mask = 1e-6 * p.position.distance(q.position);
        for bp in c.equidistant_pieces() {
            for z in bp.piece.sample(1000).unwrap() {
                if near_a_site(&c, z, mask) {
                    continue;
                }
                let d = ccw_distance(&p, z).unwrap().radians() - ccw_distance(&q, z).unwrap().radians();
                let r = (d - TAU * (d / TAU).round()).abs();
                prop_assert!(r <= 1e-7, "{r} at {z:?}");
            }
        }
    }
}
