//! Loci of constant base-angle sum and constant base-angle difference.
//!
//! For a segment `PQ` and an apex `Z`, write `μ` and `ν` for the interior
//! angles of triangle `PQZ` at `P` and at `Q`.
//!
//! * `μ + ν = σ` holds on a circular arc through `P` and `Q` (the apex angle
//!   is `π − σ`, so this is the inscribed angle theorem).
//! * `μ − ν = δ` holds on one branch of a rectangular hyperbola. After a
//!   similarity that puts `P = (h, 1)` and `Q = (−h, −1)`, the hyperbola is
//!   `x·y = h` with `h = tan(|δ|/2)`; the branch through `P` carries `δ > 0`
//!   and the branch through `Q` carries `δ < 0`. For `δ = 0` the locus is the
//!   perpendicular bisector of `PQ`.
//!
//! Hyperbolic arcs are parametrized by `u = ln(|x|/h)`, so `P` and `Q` both
//! sit at `u = 0`.

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::geometry::{polar_angle, wrap_signed_f, Angle, BBox, Point, SimilarityTransform};
use crate::{Error, Result};

/// Closed parameter interval; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const UNBOUNDED: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub const fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn intersect(&self, o: &Interval) -> Option<Interval> {
        let lo = self.lo.max(o.lo);
        let hi = self.hi.min(o.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// `n ≥ 2` evenly spaced values from `lo` to `hi` inclusive.
    pub fn linspace(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        let step = if n > 1 {
            self.len() / (n - 1) as f64
        } else {
            0.0
        };
        (0..n).map(move |i| {
            if i + 1 == n {
                self.hi
            } else {
                self.lo + step * i as f64
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Ccw,
    Cw,
}

/// Side of the directed line `P → Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    PositiveX,
    NegativeX,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::PositiveX => 1.0,
            Branch::NegativeX => -1.0,
        }
    }
}

/// `center + radius·(cos t, sin t)` for `t` sweeping from `start_angle` to
/// `end_angle` in the given orientation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircularArc {
    pub center: Point,
    pub radius: f64,
    pub start_angle: Angle,
    pub end_angle: Angle,
    pub orientation: Orientation,
}

impl CircularArc {
    /// Swept angle in `[0, 2π)`.
    pub fn sweep(&self) -> f64 {
        let d = self.end_angle.radians() - self.start_angle.radians();
        let d = match self.orientation {
            Orientation::Ccw => d,
            Orientation::Cw => -d,
        };
        d.rem_euclid(2.0 * PI)
    }

    fn signed_step(&self, t: f64) -> f64 {
        match self.orientation {
            Orientation::Ccw => t,
            Orientation::Cw => -t,
        }
    }

    /// Point at swept angle `t ∈ [0, sweep]` from the start.
    pub fn point_at(&self, t: f64) -> Point {
        let a = self.start_angle.radians() + self.signed_step(t);
        let (s, c) = a.sin_cos();
        self.center + Point::new(c, s) * self.radius
    }

    pub fn start_point(&self) -> Point {
        self.point_at(0.0)
    }

    pub fn end_point(&self) -> Point {
        self.point_at(self.sweep())
    }

    /// Sub-arc between swept angles `t0 ≤ t1`.
    pub fn sub_arc(&self, t0: f64, t1: f64) -> CircularArc {
        let base = self.start_angle.radians();
        CircularArc {
            start_angle: Angle::from_radians(wrap_signed_f(base + self.signed_step(t0))),
            end_angle: Angle::from_radians(wrap_signed_f(base + self.signed_step(t1))),
            ..*self
        }
    }

    pub fn sample(&self, n: usize) -> Vec<Point> {
        Interval::new(0.0, self.sweep())
            .linspace(n)
            .map(|t| self.point_at(t))
            .collect()
    }

    pub fn length(&self) -> f64 {
        self.radius * self.sweep()
    }
}

/// One branch of `x·y = h`, mapped to the world by `frame`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperbolicArc {
    pub h: f64,
    /// Canonical to world.
    pub frame: SimilarityTransform,
    pub branch: Branch,
    /// Range of `u`, where canonical `x = ±h·e^u`.
    pub u_range: Interval,
}

impl HyperbolicArc {
    pub fn canonical_point(&self, u: f64) -> Point {
        let s = self.branch.sign();
        Point::new(s * self.h * u.exp(), s * (-u).exp())
    }

    pub fn point_at(&self, u: f64) -> Point {
        self.frame.apply(self.canonical_point(u))
    }

    pub fn with_u_range(&self, u_range: Interval) -> HyperbolicArc {
        HyperbolicArc { u_range, ..*self }
    }

    /// `n` points at evenly spaced `u` over the (bounded) range.
    pub fn sample(&self, n: usize) -> Result<Vec<Point>> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least 2 samples, got {n}"
            )));
        }
        if !self.u_range.is_bounded() {
            return Err(Error::NeedsClipping);
        }
        Ok(self.u_range.linspace(n).map(|u| self.point_at(u)).collect())
    }

    /// `|x·y − h|` for the canonical pre-image of a world point.
    pub fn pullback_residual(&self, w: Point) -> f64 {
        let c = self.frame.inverse().apply(w);
        (c.x * c.y - self.h).abs()
    }

    /// Canonical pre-image of a world point.
    pub fn pullback(&self, w: Point) -> Point {
        self.frame.inverse().apply(w)
    }

    /// World images of the foci `±(√(2h), √(2h))`.
    pub fn foci(&self) -> (Point, Point) {
        let c = (2.0 * self.h).sqrt();
        (
            self.frame.apply(Point::new(c, c)),
            self.frame.apply(Point::new(-c, -c)),
        )
    }

    /// World images of the two asymptotes (the canonical axes), as
    /// `(anchor, direction)` pairs.
    pub fn asymptotes(&self) -> [(Point, Angle); 2] {
        let o = self.frame.apply(Point::ORIGIN);
        [
            (o, self.frame.apply_angle(Angle::ZERO)),
            (o, self.frame.apply_angle(Angle::from_radians(PI / 2.0))),
        ]
    }

    /// The u-range that keeps the branch inside the disc around the frame
    /// origin that encloses `bbox`. Everything of the branch inside `bbox`
    /// lies in the returned range.
    pub fn covering_range(&self, bbox: &BBox) -> Option<Interval> {
        let inv = self.frame.inverse();
        let r = bbox
            .corners()
            .iter()
            .map(|c| inv.apply(*c).norm())
            .fold(0.0_f64, f64::max);
        // |y| = e^{-u} ≤ r and |x| = h·e^u ≤ r
        let cover = Interval::new(-r.ln(), (r / self.h).ln());
        cover.intersect(&self.u_range)
    }
}

/// `anchor + t·(cos direction, sin direction)` for `t` in `t_range`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearPiece {
    pub anchor: Point,
    /// Stored in `(−π, π]`.
    pub direction: Angle,
    pub t_range: Interval,
}

impl LinearPiece {
    pub fn new(anchor: Point, direction: Angle, t_range: Interval) -> Self {
        LinearPiece {
            anchor,
            direction: Angle::from_radians(wrap_signed_f(direction.radians())),
            t_range,
        }
    }

    /// The segment from `a` to `b`, parametrized by arc length from `a`.
    pub fn segment(a: Point, b: Point) -> Result<Self> {
        let dir = polar_angle(a, b)?;
        Ok(LinearPiece::new(a, dir, Interval::new(0.0, a.distance(b))))
    }

    pub fn unit(&self) -> Point {
        Point::from_angle(self.direction)
    }

    pub fn point_at(&self, t: f64) -> Point {
        self.anchor + self.unit() * t
    }

    /// Liang–Barsky: the part of `t_range` inside `bbox`.
    pub fn clip_range(&self, bbox: &BBox) -> Option<Interval> {
        let d = self.unit();
        let mut lo = self.t_range.lo;
        let mut hi = self.t_range.hi;
        for (p0, dp, min, max) in [
            (self.anchor.x, d.x, bbox.xmin, bbox.xmax),
            (self.anchor.y, d.y, bbox.ymin, bbox.ymax),
        ] {
            if dp.abs() < 1e-300 {
                if p0 < min || p0 > max {
                    return None;
                }
                continue;
            }
            let (a, b) = ((min - p0) / dp, (max - p0) / dp);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            lo = lo.max(a);
            hi = hi.min(b);
        }
        (lo <= hi).then_some(Interval::new(lo, hi))
    }
}

/// Arc of apex points `Z` on one side of the directed line `P → Q` for which
/// `μ + ν = sigma`. The arc runs from `P` to `Q`; both endpoints belong to
/// the circle but not to the locus.
pub fn constant_angle_sum_locus(
    p: Point,
    q: Point,
    sigma: Angle,
    side: Side,
) -> Result<CircularArc> {
    let s = sigma.radians();
    if !(p.is_finite() && q.is_finite() && s.is_finite()) {
        return Err(Error::NonFinite);
    }
    if p == q {
        return Err(Error::InvalidParameter("P and Q coincide".into()));
    }
    if !(s > 0.0 && s < PI) {
        return Err(Error::InvalidParameter(format!(
            "angle sum must lie in (0, π), got {s}"
        )));
    }
    let chord = q - p;
    let len = chord.norm();
    let radius = len / (2.0 * s.sin());
    let left_normal = chord.perp() * (1.0 / len);
    let normal = match side {
        Side::Left => left_normal,
        Side::Right => -left_normal,
    };
    // The centre sits on the apex side iff the apex angle π − σ is acute.
    let center = p.midpoint(q) + normal * (-radius * s.cos());
    let start_angle = polar_angle(center, p)?;
    let end_angle = polar_angle(center, q)?;
    // Left of P→Q, travelling P to Q keeps the enclosed segment on the right.
    let orientation = match side {
        Side::Left => Orientation::Cw,
        Side::Right => Orientation::Ccw,
    };
    Ok(CircularArc {
        center,
        radius,
        start_angle,
        end_angle,
        orientation,
    })
}

/// Result of [`constant_angle_difference_locus`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum DifferenceLocus {
    Hyperbola(HyperbolicArc),
    Line(LinearPiece),
}

/// Canonical-to-world frame sending `(h, 1)` to `p` and `(−h, −1)` to `q`.
pub fn canonical_frame(p: Point, q: Point, h: f64) -> Result<SimilarityTransform> {
    canonical_frame_with(p, q, h, false)
}

/// As [`canonical_frame`]; with `reflect` the result is the mirror image of
/// the unreflected frame across the line `pq`.
pub fn canonical_frame_with(
    p: Point,
    q: Point,
    h: f64,
    reflect: bool,
) -> Result<SimilarityTransform> {
    let norm = h.hypot(1.0);
    let world_dir = polar_angle(q, p)?.radians();
    let canonical_dir = 1.0_f64.atan2(h);
    let rotation = if reflect {
        world_dir + canonical_dir
    } else {
        world_dir - canonical_dir
    };
    SimilarityTransform::new(
        Angle::from_radians(wrap_signed_f(rotation)),
        p.distance(q) / (2.0 * norm),
        p.midpoint(q),
        reflect,
    )
}

/// Apex points `Z` with signed base-angle difference `μ − ν = delta`, on
/// one side of the line `pq`.
///
/// For `delta ≠ 0` this is the half-branch `u ≥ 0` of the canonical
/// hyperbola, starting at `p` (`delta > 0`) or `q` (`delta < 0`). The other
/// half of that branch carries the difference `±(π − |delta|)`. The full
/// locus is this piece together with its mirror image across `pq`, see
/// [`difference_locus_components`].
pub fn constant_angle_difference_locus(
    p: Point,
    q: Point,
    delta: Angle,
) -> Result<DifferenceLocus> {
    difference_locus_side(p, q, delta, false)
}

/// Both components of the locus `μ − ν = delta`: the piece returned by
/// [`constant_angle_difference_locus`] and its mirror image across `pq`.
/// For `delta = 0` the perpendicular bisector is its own mirror image and
/// is returned once.
pub fn difference_locus_components(
    p: Point,
    q: Point,
    delta: Angle,
) -> Result<Vec<DifferenceLocus>> {
    let first = difference_locus_side(p, q, delta, false)?;
    if let DifferenceLocus::Line(_) = first {
        return Ok(vec![first]);
    }
    Ok(vec![first, difference_locus_side(p, q, delta, true)?])
}

/// Apex points with unsigned difference `|μ − ν| = |delta|`: the components
/// for `+|delta|` followed by those for `−|delta|`.
pub fn unsigned_difference_locus(p: Point, q: Point, delta: Angle) -> Result<Vec<DifferenceLocus>> {
    let d = delta.radians().abs();
    let mut out = difference_locus_components(p, q, Angle::from_radians(d))?;
    if d > 0.0 {
        out.extend(difference_locus_components(p, q, Angle::from_radians(-d))?);
    }
    Ok(out)
}

fn difference_locus_side(
    p: Point,
    q: Point,
    delta: Angle,
    reflect: bool,
) -> Result<DifferenceLocus> {
    let d = delta.radians();
    if !(p.is_finite() && q.is_finite() && d.is_finite()) {
        return Err(Error::NonFinite);
    }
    if p == q {
        return Err(Error::InvalidParameter("P and Q coincide".into()));
    }
    if d.abs() >= PI {
        return Err(Error::InvalidParameter(format!(
            "angle difference must lie in (−π, π), got {d}"
        )));
    }
    if d == 0.0 {
        let dir = polar_angle(q, p)?.radians() + PI / 2.0;
        return Ok(DifferenceLocus::Line(LinearPiece::new(
            p.midpoint(q),
            Angle::from_radians(dir),
            Interval::UNBOUNDED,
        )));
    }
    let h = (0.5 * d.abs()).tan();
    let frame = canonical_frame_with(p, q, h, reflect)?;
    let branch = if d > 0.0 {
        Branch::PositiveX
    } else {
        Branch::NegativeX
    };
    Ok(DifferenceLocus::Hyperbola(HyperbolicArc {
        h,
        frame,
        branch,
        u_range: Interval::new(0.0, f64::INFINITY),
    }))
}

pub fn sample_hyperbolic_arc(arc: &HyperbolicArc, n: usize) -> Result<Vec<Point>> {
    arc.sample(n)
}

pub fn hyperbola_foci(arc: &HyperbolicArc) -> (Point, Point) {
    arc.foci()
}

/// Eccentricity of every rectangular hyperbola.
pub const RECTANGULAR_ECCENTRICITY: f64 = SQRT_2;
