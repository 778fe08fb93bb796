//! Stand-alone h-δ oracle in plain f64 arithmetic, independent of the
//! library.
//!
//! For each h it places P = (h, 1), Q = (−h, −1), walks along x·y = h and
//! measures the base angles of triangle P, Z, Q directly.

#![allow(dead_code)]

use serde::Serialize;

pub const H_VALUES: [f64; 8] = [0.05, 0.25, 0.5, 1.0, 1.5, 2.0, 5.0, 20.0];
/// Multiples of h used as x coordinates of the probe points on `x > h`.
pub const OUTER_X: [f64; 6] = [1.1, 1.5, 2.0, 4.0, 10.0, 100.0];
/// Multiples of h for probe points on `0 < x < h`.
pub const INNER_X: [f64; 4] = [0.01, 0.1, 0.5, 0.9];

#[derive(Debug, Clone, Serialize)]
pub struct Probe {
    pub x: f64,
    pub y: f64,
    pub mu: f64,
    pub nu: f64,
    pub difference: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HRow {
    pub h: f64,
    pub outer: Vec<Probe>,
    pub inner: Vec<Probe>,
    /// Mean of `μ − ν` over the outer probes.
    pub fitted_delta: f64,
    /// `tan(fitted_delta / 2)`, to be compared with `h`.
    pub fitted_h: f64,
    /// `π − 2·atan(1/h)`.
    pub predicted_delta: f64,
    pub max_outer_deviation: f64,
    /// Largest `|(μ − ν) − (π − predicted_delta)|` over the inner probes.
    pub max_inner_deviation_from_supplement: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub description: &'static str,
    pub rows: Vec<HRow>,
    pub max_outer_deviation: f64,
    pub max_fitted_h_relative_error: f64,
    pub max_inner_deviation_from_supplement: f64,
}

fn angle_between(a: (f64, f64), b: (f64, f64)) -> f64 {
    let cross = a.0 * b.1 - a.1 * b.0;
    let dot = a.0 * b.0 + a.1 * b.1;
    cross.abs().atan2(dot)
}

fn probe(h: f64, x: f64) -> Probe {
    let y = h / x;
    let (px, py, qx, qy) = (h, 1.0, -h, -1.0);
    let mu = angle_between((qx - px, qy - py), (x - px, y - py));
    let nu = angle_between((px - qx, py - qy), (x - qx, y - qy));
    Probe {
        x,
        y,
        mu,
        nu,
        difference: mu - nu,
    }
}

pub fn run() -> OracleReport {
    let pi = std::f64::consts::PI;
    let rows: Vec<HRow> = H_VALUES
        .iter()
        .map(|&h| {
            let outer: Vec<Probe> = OUTER_X.iter().map(|&k| probe(h, k * h)).collect();
            let inner: Vec<Probe> = INNER_X.iter().map(|&k| probe(h, k * h)).collect();
            let fitted_delta = outer.iter().map(|p| p.difference).sum::<f64>() / outer.len() as f64;
            let predicted_delta = pi - 2.0 * (1.0 / h).atan();
            let max_outer_deviation = outer
                .iter()
                .map(|p| (p.difference - predicted_delta).abs())
                .fold(0.0, f64::max);
            let max_inner = inner
                .iter()
                .map(|p| (p.difference - (pi - predicted_delta)).abs())
                .fold(0.0, f64::max);
            HRow {
                h,
                outer,
                inner,
                fitted_delta,
                fitted_h: (fitted_delta / 2.0).tan(),
                predicted_delta,
                max_outer_deviation,
                max_inner_deviation_from_supplement: max_inner,
            }
        })
        .collect();
    OracleReport {
        description:
            "P=(h,1), Q=(-h,-1), Z on x*y=h; mu at P, nu at Q; outer probes x>h, inner probes 0<x<h",
        max_outer_deviation: rows
            .iter()
            .map(|r| r.max_outer_deviation)
            .fold(0.0, f64::max),
        max_fitted_h_relative_error: rows
            .iter()
            .map(|r| ((r.fitted_h - r.h) / r.h).abs())
            .fold(0.0, f64::max),
        max_inner_deviation_from_supplement: rows
            .iter()
            .map(|r| r.max_inner_deviation_from_supplement)
            .fold(0.0, f64::max),
        rows,
    }
}

pub fn to_json(report: &OracleReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("serializable");
    s.push('\n');
    s
}
