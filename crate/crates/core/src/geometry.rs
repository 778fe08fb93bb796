//! Points, angles, sites and similarity transforms, plus the two rotating-ray
//! distances.
//!
//! A site is a point with a fixed ray attached to it. The distance from the
//! site to a point `z` is the angle the ray must turn until it points at `z`:
//! counterclockwise only ([`ccw_distance`], codomain `[0, 2π)`) or in whichever
//! direction is cheaper ([`sym_distance`], codomain `[0, π]`).

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector pointing in direction `a`.
    #[inline]
    pub fn from_angle(a: Angle) -> Self {
        let (s, c) = a.radians().sin_cos();
        Point::new(c, s)
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, o: Point) -> f64 {
        (self - o).norm()
    }

    #[inline]
    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    /// Counterclockwise perpendicular.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Axis-aligned box `[xmin, xmax] × [ymin, ymax]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BBox {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl BBox {
    pub fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Result<Self> {
        if !(xmin.is_finite() && ymin.is_finite() && xmax.is_finite() && ymax.is_finite()) {
            return Err(Error::NonFinite);
        }
        if !(xmax > xmin && ymax > ymin) {
            return Err(Error::InvalidParameter(format!(
                "empty box [{xmin}, {xmax}] x [{ymin}, {ymax}]"
            )));
        }
        Ok(BBox {
            xmin,
            ymin,
            xmax,
            ymax,
        })
    }

    /// Square of half-side `half` centred on `c`.
    pub fn centered(c: Point, half: f64) -> Self {
        BBox {
            xmin: c.x - half,
            ymin: c.y - half,
            xmax: c.x + half,
            ymax: c.y + half,
        }
    }

    /// Default working box for a pair of sites: the square
    /// `midpoint ± 5·|pq|`, i.e. `[−10, 10]²` for sites at `(±1, 0)`.
    pub fn around_pair(p: Point, q: Point) -> Self {
        BBox::centered(p.midpoint(q), 5.0 * p.distance(q))
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    #[inline]
    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.xmin && p.x <= self.xmax && p.y >= self.ymin && p.y <= self.ymax
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.xmin, self.ymin),
            Point::new(self.xmax, self.ymin),
            Point::new(self.xmax, self.ymax),
            Point::new(self.xmin, self.ymax),
        ]
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.xmin, self.ymin, self.xmax, self.ymax]
    }
}

/// An angle in radians. No range is implied; use [`wrap_signed`] or
/// [`wrap_ccw`] to normalize.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    #[inline]
    pub const fn from_radians(r: f64) -> Self {
        Angle(r)
    }

    #[inline]
    pub fn from_degrees(d: f64) -> Self {
        Angle(d.to_radians())
    }

    #[inline]
    pub const fn radians(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    #[inline]
    pub fn abs(self) -> Angle {
        Angle(self.0.abs())
    }
}

impl Add for Angle {
    type Output = Angle;
    #[inline]
    fn add(self, o: Angle) -> Angle {
        Angle(self.0 + o.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    #[inline]
    fn sub(self, o: Angle) -> Angle {
        Angle(self.0 - o.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    #[inline]
    fn neg(self) -> Angle {
        Angle(-self.0)
    }
}

/// Residue of `a` in `[0, 2π)`. Rounding can push `rem_euclid` onto `2π`
/// itself for tiny negative inputs; that value is folded back to zero.
#[inline]
fn residue(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Wraps into `(−π, π]`.
pub fn wrap_signed(a: Angle) -> Result<Angle> {
    if !a.0.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(Angle(signed_from_residue(residue(a.0))))
}

/// Wraps into `[0, 2π)`.
pub fn wrap_ccw(a: Angle) -> Result<Angle> {
    if !a.0.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(Angle(residue(a.0)))
}

#[inline]
fn signed_from_residue(r: f64) -> f64 {
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Infallible wrap for values already known to be finite.
#[inline]
pub(crate) fn wrap_signed_f(a: f64) -> f64 {
    debug_assert!(a.is_finite());
    signed_from_residue(residue(a))
}

/// Direction of the vector `to − from`, in `(−π, π]`.
pub fn polar_angle(from: Point, to: Point) -> Result<Angle> {
    let d = to - from;
    if !d.is_finite() {
        return Err(Error::NonFinite);
    }
    if d.x == 0.0 && d.y == 0.0 {
        return Err(Error::Degenerate("coincident points have no direction"));
    }
    // atan2 yields −π for (negative, −0.0); the convention here is +π.
    Ok(Angle(wrap_signed_f(d.y.atan2(d.x))))
}

/// A point site carrying a fixed ray.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Site {
    pub position: Point,
    /// Orientation of the ray, stored in `(−π, π]`.
    pub ray_direction: Angle,
}

impl Site {
    pub fn new(position: Point, ray_direction: Angle) -> Result<Self> {
        if !position.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Site {
            position,
            ray_direction: wrap_signed(ray_direction)?,
        })
    }

    pub fn from_degrees(x: f64, y: f64, theta_deg: f64) -> Result<Self> {
        Site::new(Point::new(x, y), Angle::from_degrees(theta_deg))
    }

    /// Signed turn from the ray to the direction of `z`, in `(−π, π]`.
    /// Positive means counterclockwise.
    pub fn offset(&self, z: Point) -> Result<Angle> {
        let a = polar_angle(self.position, z)?;
        Ok(Angle(wrap_signed_f(a.0 - self.ray_direction.0)))
    }
}

/// Counterclockwise turn from the ray of `s` to the direction of `z`, in `[0, 2π)`.
pub fn ccw_distance(s: &Site, z: Point) -> Result<Angle> {
    let a = polar_angle(s.position, z)?;
    Ok(Angle(residue(a.0 - s.ray_direction.0)))
}

/// Cheapest turn (either sense) from the ray of `s` to the direction of `z`,
/// in `[0, π]`.
pub fn sym_distance(s: &Site, z: Point) -> Result<Angle> {
    let a = polar_angle(s.position, z)?;
    // Derived from the same residue as ccw_distance, so that
    // sym == min(ccw, 2π − ccw) holds bit for bit.
    let r = residue(a.0 - s.ray_direction.0);
    Ok(Angle(if r > PI { TAU - r } else { r }))
}

/// Which rotating-ray distance to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    OrientedCcw,
    SymmetricMin,
}

impl Metric {
    #[inline]
    pub fn distance(self, s: &Site, z: Point) -> Result<Angle> {
        match self {
            Metric::OrientedCcw => ccw_distance(s, z),
            Metric::SymmetricMin => sym_distance(s, z),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::OrientedCcw => "oriented_ccw",
            Metric::SymmetricMin => "symmetric_min",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Unsigned angle between vectors `u` and `v`, in `[0, π]`.
#[inline]
pub(crate) fn angle_between(u: Point, v: Point) -> f64 {
    u.cross(v).abs().atan2(u.dot(v))
}

/// Interior angles of triangle `P, Q, Z` at `P` (first) and at `Q` (second).
pub fn triangle_base_angles(p: Point, q: Point, z: Point) -> Result<(Angle, Angle)> {
    if !(p.is_finite() && q.is_finite() && z.is_finite()) {
        return Err(Error::NonFinite);
    }
    let pq = q - p;
    let pz = z - p;
    let scale = pq.norm() * pz.norm();
    if scale == 0.0 || p == z || q == z {
        return Err(Error::Degenerate("triangle has coincident vertices"));
    }
    if pq.cross(pz).abs() <= 1e-14 * scale {
        return Err(Error::Degenerate("triangle vertices are collinear"));
    }
    let mu = angle_between(pq, pz);
    let nu = angle_between(p - q, z - q);
    Ok((Angle(mu), Angle(nu)))
}

/// Uniform scale, rotation and translation, with an optional mirror across
/// the x-axis. Applied in the order reflect, rotate, scale, translate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityTransform {
    pub rotation: Angle,
    pub scale: f64,
    pub translation: Point,
    pub reflect: bool,
}

impl Default for SimilarityTransform {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl SimilarityTransform {
    pub const IDENTITY: SimilarityTransform = SimilarityTransform {
        rotation: Angle::ZERO,
        scale: 1.0,
        translation: Point::ORIGIN,
        reflect: false,
    };

    pub fn new(rotation: Angle, scale: f64, translation: Point, reflect: bool) -> Result<Self> {
        if !(scale.is_finite() && rotation.0.is_finite() && translation.is_finite()) {
            return Err(Error::NonFinite);
        }
        if scale <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "similarity scale must be positive, got {scale}"
            )));
        }
        Ok(SimilarityTransform {
            rotation,
            scale,
            translation,
            reflect,
        })
    }

    pub fn rotation(angle: Angle) -> Self {
        SimilarityTransform {
            rotation: angle,
            ..Self::IDENTITY
        }
    }

    pub fn translation(t: Point) -> Self {
        SimilarityTransform {
            translation: t,
            ..Self::IDENTITY
        }
    }

    /// Applies only the linear part (no translation).
    #[inline]
    pub fn apply_vector(&self, v: Point) -> Point {
        let v = if self.reflect {
            Point::new(v.x, -v.y)
        } else {
            v
        };
        let (s, c) = self.rotation.0.sin_cos();
        Point::new(c * v.x - s * v.y, s * v.x + c * v.y) * self.scale
    }

    #[inline]
    pub fn apply(&self, p: Point) -> Point {
        self.apply_vector(p) + self.translation
    }

    /// Image of a direction angle under the linear part.
    pub fn apply_angle(&self, a: Angle) -> Angle {
        let a = if self.reflect { -a } else { a };
        Angle(wrap_signed_f(a.0 + self.rotation.0))
    }

    pub fn inverse(&self) -> Self {
        let inv_scale = 1.0 / self.scale;
        // F R(−θ) = R(θ) F, so the inverse keeps the reflect-first order.
        let rotation = if self.reflect {
            self.rotation
        } else {
            -self.rotation
        };
        let linear = SimilarityTransform {
            rotation,
            scale: inv_scale,
            translation: Point::ORIGIN,
            reflect: self.reflect,
        };
        SimilarityTransform {
            translation: -linear.apply_vector(self.translation),
            ..linear
        }
    }

    /// `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &SimilarityTransform) -> Self {
        let reflect = self.reflect ^ inner.reflect;
        let rotation = if self.reflect {
            self.rotation - inner.rotation
        } else {
            self.rotation + inner.rotation
        };
        SimilarityTransform {
            rotation,
            scale: self.scale * inner.scale,
            translation: self.apply(inner.translation),
            reflect,
        }
    }

    pub fn apply_site(&self, s: &Site) -> Site {
        Site {
            position: self.apply(s.position),
            ray_direction: self.apply_angle(s.ray_direction),
        }
    }
}

pub fn apply_transform(t: &SimilarityTransform, p: Point) -> Point {
    t.apply(p)
}

pub fn invert_transform(t: &SimilarityTransform) -> SimilarityTransform {
    t.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn origin_site(theta: f64) -> Site {
        Site::new(Point::ORIGIN, Angle::from_radians(theta)).unwrap()
    }

    #[test]
    fn wrap_signed_examples() {
        let w = |a: f64| wrap_signed(Angle::from_radians(a)).unwrap().radians();
        assert!(close(w(3.0 * PI), PI, 1e-15));
        assert!(w(3.0 * PI) > 0.0);
        assert_eq!(w(-FRAC_PI_2), -FRAC_PI_2);
        assert!(close(w(7.0 * PI / 3.0), FRAC_PI_3, 1e-15));
        assert_eq!(w(-PI), PI);
        assert_eq!(w(PI), PI);
    }

    #[test]
    fn wrap_ccw_examples() {
        let w = |a: f64| wrap_ccw(Angle::from_radians(a)).unwrap().radians();
        assert!(close(w(-FRAC_PI_2), 3.0 * FRAC_PI_2, 1e-15));
        assert_eq!(w(0.0), 0.0);
        assert_eq!(w(TAU), 0.0);
        assert_eq!(w(-1e-300), 0.0);
    }

    #[test]
    fn wraps_reject_non_finite() {
        assert_eq!(
            wrap_signed(Angle::from_radians(f64::NAN)),
            Err(Error::NonFinite)
        );
        assert_eq!(
            wrap_ccw(Angle::from_radians(f64::INFINITY)),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn polar_angle_examples() {
        let o = Point::ORIGIN;
        assert_eq!(polar_angle(o, Point::new(1.0, 0.0)).unwrap().radians(), 0.0);
        assert_eq!(
            polar_angle(o, Point::new(0.0, 1.0)).unwrap().radians(),
            FRAC_PI_2
        );
        assert!(close(
            polar_angle(Point::new(1.0, 1.0), o).unwrap().radians(),
            -3.0 * FRAC_PI_4,
            1e-15
        ));
        assert_eq!(
            polar_angle(o, Point::new(-1.0, -0.0)).unwrap().radians(),
            PI
        );
        assert!(matches!(polar_angle(o, o), Err(Error::Degenerate(_))));
    }

    #[test]
    fn ccw_distance_examples() {
        let s = origin_site(0.0);
        assert!(close(
            ccw_distance(&s, Point::new(0.0, 1.0)).unwrap().radians(),
            FRAC_PI_2,
            1e-15
        ));
        assert!(close(
            ccw_distance(&s, Point::new(0.0, -1.0)).unwrap().radians(),
            3.0 * FRAC_PI_2,
            1e-15
        ));
        assert_eq!(
            ccw_distance(&s, Point::new(1.0, 0.0)).unwrap().radians(),
            0.0
        );
        assert!(matches!(
            ccw_distance(&s, Point::ORIGIN),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn sym_distance_examples() {
        let s = origin_site(0.0);
        assert!(close(
            sym_distance(&s, Point::new(0.0, -1.0)).unwrap().radians(),
            FRAC_PI_2,
            1e-15
        ));
        assert_eq!(
            sym_distance(&s, Point::new(-1.0, 0.0)).unwrap().radians(),
            PI
        );
        assert!(close(
            sym_distance(&s, Point::new(1.0, 1.0)).unwrap().radians(),
            FRAC_PI_4,
            1e-15
        ));
        assert!(matches!(
            sym_distance(&s, Point::ORIGIN),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn site_direction_is_wrapped() {
        let s = Site::from_degrees(0.0, 0.0, 270.0).unwrap();
        assert!(close(s.ray_direction.radians(), -FRAC_PI_2, 1e-15));
        let s = Site::from_degrees(0.0, 0.0, -180.0).unwrap();
        assert_eq!(s.ray_direction.radians(), PI);
    }

    #[test]
    fn ccw_jumps_across_ray_while_sym_stays_continuous() {
        let s = Site::from_degrees(0.3, -0.2, 40.0).unwrap();
        let dir = Point::from_angle(s.ray_direction);
        let normal = dir.perp();
        for k in 1..20 {
            let on_ray = s.position + dir * (0.25 * k as f64);
            let above = on_ray + normal * 0.5e-6;
            let below = on_ray - normal * 0.5e-6;
            let sa = sym_distance(&s, above).unwrap().radians();
            let sb = sym_distance(&s, below).unwrap().radians();
            assert!((sa - sb).abs() < 1e-4);
            let ca = ccw_distance(&s, above).unwrap().radians();
            let cb = ccw_distance(&s, below).unwrap().radians();
            assert!(((cb - ca) - TAU).abs() < 1e-4, "ccw jump {}", cb - ca);
        }
    }

    #[test]
    fn triangle_base_angles_examples() {
        let (m, n) = triangle_base_angles(
            Point::new(0.0, 1.0),
            Point::new(0.0, -1.0),
            Point::new(1.0, 0.0),
        )
        .unwrap();
        assert!(close(m.radians(), FRAC_PI_4, 1e-15));
        assert!(close(n.radians(), FRAC_PI_4, 1e-15));

        // Reference values from a 40-digit evaluation.
        let p = Point::new(1.0, 1.0);
        let q = Point::new(-1.0, -1.0);
        let (m, n) = triangle_base_angles(p, q, Point::new(2.0, 0.5)).unwrap();
        assert!(close(m.radians(), 1.892_546_881_191_539, 1e-13));
        assert!(close(n.radians(), 0.321_750_554_396_642_2, 1e-13));

        let (m, n) = triangle_base_angles(p, q, Point::new(4.0, 0.25)).unwrap();
        assert!(close(m.radians() - n.radians(), FRAC_PI_2, 1e-9));
        assert!(close(m.radians(), 2.111_215_827_065_480_8, 1e-13));
    }

    #[test]
    fn triangle_base_angles_rejects_degenerate() {
        let p = Point::new(0.0, 0.0);
        let q = Point::new(2.0, 0.0);
        assert!(matches!(
            triangle_base_angles(p, q, Point::new(5.0, 0.0)),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            triangle_base_angles(p, p, Point::new(5.0, 1.0)),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            triangle_base_angles(p, q, q),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn transform_examples() {
        let pt = Point::new(3.0, 4.0);
        assert_eq!(SimilarityTransform::IDENTITY.apply(pt), pt);

        let r = SimilarityTransform::rotation(Angle::from_radians(FRAC_PI_2));
        let img = r.apply(Point::new(1.0, 0.0));
        assert!(close(img.x, 0.0, 1e-15) && close(img.y, 1.0, 1e-15));

        let t = SimilarityTransform::new(Angle::ZERO, 2.0, Point::new(1.0, 0.0), false).unwrap();
        assert_eq!(t.apply(Point::new(1.0, 1.0)), Point::new(3.0, 2.0));
    }

    #[test]
    fn transform_rejects_bad_scale() {
        assert!(SimilarityTransform::new(Angle::ZERO, 0.0, Point::ORIGIN, false).is_err());
        assert!(SimilarityTransform::new(Angle::ZERO, -1.0, Point::ORIGIN, false).is_err());
    }

    #[test]
    fn reflection_mirrors_before_rotation() {
        let t = SimilarityTransform::new(Angle::from_radians(FRAC_PI_2), 1.0, Point::ORIGIN, true)
            .unwrap();
        // (0,1) -> mirror (0,-1) -> rotate +90° -> (1,0)
        let img = t.apply(Point::new(0.0, 1.0));
        assert!(close(img.x, 1.0, 1e-15) && close(img.y, 0.0, 1e-15));
        let back = t.inverse().apply(img);
        assert!(close(back.x, 0.0, 1e-15) && close(back.y, 1.0, 1e-15));
    }

    #[test]
    fn compose_matches_sequential_application() {
        let a =
            SimilarityTransform::new(Angle::from_radians(0.7), 1.5, Point::new(1.0, -2.0), true)
                .unwrap();
        let b =
            SimilarityTransform::new(Angle::from_radians(-2.1), 0.3, Point::new(-0.5, 4.0), false)
                .unwrap();
        for (x, y) in [(0.0, 0.0), (1.0, 2.0), (-3.0, 0.5)] {
            let p = Point::new(x, y);
            for (outer, inner) in [(a, b), (b, a), (a, a)] {
                let want = outer.apply(inner.apply(p));
                let got = outer.compose(&inner).apply(p);
                assert!(want.distance(got) < 1e-13);
            }
        }
    }

    #[test]
    fn transformed_angle_tracks_transformed_direction() {
        let t = SimilarityTransform::new(Angle::from_radians(2.5), 3.0, Point::new(1.0, 1.0), true)
            .unwrap();
        let s = Site::from_degrees(0.5, -1.0, 33.0).unwrap();
        let ts = t.apply_site(&s);
        let tip = s.position + Point::from_angle(s.ray_direction);
        let dir = polar_angle(ts.position, t.apply(tip)).unwrap();
        assert!(close(
            wrap_signed_f(dir.radians() - ts.ray_direction.radians()),
            0.0,
            1e-13
        ));
    }
}
