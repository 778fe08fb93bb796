#[path = "support/h_delta.rs"]
mod h_delta;

use angvor_core::loci::{canonical_frame, constant_angle_difference_locus, DifferenceLocus};
use angvor_core::{Angle, Point};

const COMMITTED: &str = include_str!("golden/h_delta_oracle.json");

fn numbers(v: &serde_json::Value, out: &mut Vec<f64>) {
    match v {
        serde_json::Value::Number(n) => out.push(n.as_f64().unwrap()),
        serde_json::Value::Array(a) => a.iter().for_each(|x| numbers(x, out)),
        serde_json::Value::Object(m) => m.values().for_each(|x| numbers(x, out)),
        _ => {}
    }
}

#[test]
fn fresh_run_matches_committed_table() {
    let fresh: serde_json::Value =
        serde_json::from_str(&h_delta::to_json(&h_delta::run())).unwrap();
    let committed: serde_json::Value = serde_json::from_str(COMMITTED).unwrap();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    numbers(&fresh, &mut a);
    numbers(&committed, &mut b);
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() <= 1e-14 * (1.0 + y.abs()), "{x} vs {y}");
    }
}

#[test]
fn committed_table_confirms_half_angle_tangent() {
    let committed: serde_json::Value = serde_json::from_str(COMMITTED).unwrap();
    assert!(committed["max_outer_deviation"].as_f64().unwrap() < 1e-12);
    assert!(committed["max_fitted_h_relative_error"].as_f64().unwrap() < 1e-12);
    assert!(
        committed["max_inner_deviation_from_supplement"]
            .as_f64()
            .unwrap()
            < 1e-12
    );
    for row in committed["rows"].as_array().unwrap() {
        let h = row["h"].as_f64().unwrap();
        let delta = row["fitted_delta"].as_f64().unwrap();
        assert!(((delta / 2.0).tan() - h).abs() < 1e-12 * (1.0 + h));
    }
}

#[test]
fn library_uses_the_oracle_constant() {
    for row in h_delta::run().rows {
        let (p, q) = (Point::new(row.h, 1.0), Point::new(-row.h, -1.0));
        let DifferenceLocus::Hyperbola(arc) =
            constant_angle_difference_locus(p, q, Angle::from_radians(row.fitted_delta)).unwrap()
        else {
            panic!("expected a hyperbola");
        };
        assert!((arc.h - row.h).abs() < 1e-12 * (1.0 + row.h));
        let frame = canonical_frame(p, q, row.h).unwrap();
        for c in [Point::ORIGIN, Point::new(1.0, 2.0)] {
            assert!(frame.apply(c).distance(c) < 1e-12);
        }
    }
}
