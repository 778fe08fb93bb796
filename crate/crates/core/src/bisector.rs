//! Two-site bisectors under the oriented and the symmetric rotating-ray
//! distance.
//!
//! Write `a`, `b` for the signed offsets (in `(−π, π]`) from the rays of `p`
//! and `q` to a point `z`. The symmetric bisector `|a| = |b|` splits into
//!
//! * `a = b`: the polar angles from `p` and `q` differ by the constant
//!   `θp − θq`, a circular arc through both sites (or a piece of line `pq`);
//! * `a = −b`: the polar angles add up to the constant `θp + θq`. On each side
//!   of line `pq` this fixes the signed base-angle difference, so the points
//!   lie on the two branches of one rectangular hyperbola through `p` and `q`.
//!
//! Candidates from both families are built analytically, bounded to a
//! working box, and then clipped by sampling the equidistance predicate and
//! refining the sub-interval ends by bisection. The oriented bisector reuses
//! the `a = b` family and adds both rays as region boundaries.

use std::cmp::Ordering;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::geometry::{
    ccw_distance, polar_angle, sym_distance, wrap_signed_f, BBox, Metric, Point, Site,
};
use crate::loci::{
    constant_angle_difference_locus, constant_angle_sum_locus, difference_locus_components,
    CircularArc, DifferenceLocus, HyperbolicArc, Interval, LinearPiece, Side,
};
use crate::{Angle, Error, Result};

/// Membership tolerance for equidistance, in radians.
pub const EPS_BIS: f64 = 1e-7;
/// Parameter tolerance for clip endpoints.
pub const PARAM_TOL: f64 = 1e-10;
/// Angles within this of `0` or `±π` are treated as the degenerate cases.
pub const ANGLE_EPS: f64 = 1e-12;
/// Default number of samples per candidate when clipping.
pub const DEFAULT_CLIP_SAMPLES: usize = 256;

/// A locus primitive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Piece {
    Arc(CircularArc),
    Hyperbola(HyperbolicArc),
    Line(LinearPiece),
}

impl Piece {
    fn rank(&self) -> u8 {
        match self {
            Piece::Arc(_) => 0,
            Piece::Hyperbola(_) => 1,
            Piece::Line(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Piece::Arc(_) => "arc",
            Piece::Hyperbola(_) => "hyperbola",
            Piece::Line(_) => "line",
        }
    }

    /// Arcs use swept angle, hyperbolae the log-parameter `u`, lines arc length.
    pub fn param_range(&self) -> Interval {
        match self {
            Piece::Arc(a) => Interval::new(0.0, a.sweep()),
            Piece::Hyperbola(h) => h.u_range,
            Piece::Line(l) => l.t_range,
        }
    }

    pub fn point_at(&self, t: f64) -> Point {
        match self {
            Piece::Arc(a) => a.point_at(t),
            Piece::Hyperbola(h) => h.point_at(t),
            Piece::Line(l) => l.point_at(t),
        }
    }

    /// Restriction to `r`, which must lie inside [`Piece::param_range`].
    /// Arc parameters restart at zero afterwards.
    pub fn restrict(&self, r: Interval) -> Piece {
        match self {
            Piece::Arc(a) => Piece::Arc(a.sub_arc(r.lo, r.hi)),
            Piece::Hyperbola(h) => Piece::Hyperbola(h.with_u_range(r)),
            Piece::Line(l) => Piece::Line(LinearPiece { t_range: r, ..*l }),
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.param_range().is_bounded()
    }

    /// A bounded version covering at least the part inside `bbox`; exact for
    /// lines, conservative for hyperbolae, unchanged for arcs.
    pub fn bounded_in(&self, bbox: &BBox) -> Option<Piece> {
        match self {
            Piece::Arc(_) => Some(*self),
            Piece::Hyperbola(h) => h.covering_range(bbox).map(|r| self.restrict(r)),
            Piece::Line(l) => l.clip_range(bbox).map(|r| self.restrict(r)),
        }
    }

    pub fn sample(&self, n: usize) -> Result<Vec<Point>> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least 2 samples, got {n}"
            )));
        }
        let r = self.param_range();
        if !r.is_bounded() {
            return Err(Error::NeedsClipping);
        }
        Ok(r.linspace(n).map(|t| self.point_at(t)).collect())
    }

    /// Parameters whose consecutive points are at most `max_step` apart.
    pub fn adaptive_params(&self, max_step: f64) -> Result<Vec<f64>> {
        let r = self.param_range();
        if !r.is_bounded() {
            return Err(Error::NeedsClipping);
        }
        let seeds: Vec<f64> = r.linspace(65).collect();
        let mut out = vec![seeds[0]];
        for w in seeds.windows(2) {
            self.subdivide(w[0], w[1], max_step, 0, &mut out);
        }
        Ok(out)
    }

    fn subdivide(&self, t0: f64, t1: f64, max_step: f64, depth: u32, out: &mut Vec<f64>) {
        if depth < 40 && self.point_at(t0).distance(self.point_at(t1)) > max_step {
            let mid = 0.5 * (t0 + t1);
            self.subdivide(t0, mid, max_step, depth + 1, out);
            self.subdivide(mid, t1, max_step, depth + 1, out);
        } else {
            out.push(t1);
        }
    }

    pub fn polyline(&self, max_step: f64) -> Result<Vec<Point>> {
        Ok(self
            .adaptive_params(max_step)?
            .into_iter()
            .map(|t| self.point_at(t))
            .collect())
    }

    /// Length of a fine polyline approximation.
    pub fn approx_length(&self) -> Result<f64> {
        let pts = self.sample(2049)?;
        Ok(pts.windows(2).map(|w| w[0].distance(w[1])).sum())
    }

    /// Distance from `z` to the (bounded) piece: nearest of 1025 samples,
    /// then golden-section search on the neighbouring parameter interval.
    pub fn distance_to(&self, z: Point) -> Result<f64> {
        let r = self.param_range();
        if !r.is_bounded() {
            return Err(Error::NeedsClipping);
        }
        const N: usize = 1025;
        let ts: Vec<f64> = r.linspace(N).collect();
        let (best, _) = ts
            .iter()
            .enumerate()
            .map(|(i, &t)| (i, self.point_at(t).distance(z)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty");
        let mut lo = ts[best.saturating_sub(1)];
        let mut hi = ts[(best + 1).min(N - 1)];
        let f = |t: f64| self.point_at(t).distance(z);
        let g = 0.5 * (5f64.sqrt() - 1.0);
        let mut x1 = hi - g * (hi - lo);
        let mut x2 = lo + g * (hi - lo);
        let (mut f1, mut f2) = (f(x1), f(x2));
        for _ in 0..200 {
            if hi - lo <= 1e-15 * (1.0 + lo.abs().max(hi.abs())) {
                break;
            }
            if f1 <= f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = f(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = f(x2);
            }
        }
        Ok(f1.min(f2).min(f(lo)).min(f(hi)))
    }
}

/// Which sense of rotation realizes a site's symmetric distance at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Turn {
    Ccw,
    Cw,
    OnRay,
}

impl Turn {
    fn of_offset(a: f64) -> Turn {
        match a.partial_cmp(&0.0) {
            Some(Ordering::Greater) => Turn::Ccw,
            Some(Ordering::Less) => Turn::Cw,
            _ => Turn::OnRay,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegimeTag {
    pub p_side: Turn,
    pub q_side: Turn,
}

impl RegimeTag {
    pub fn at(p: &Site, q: &Site, z: Point) -> Result<RegimeTag> {
        Ok(RegimeTag {
            p_side: Turn::of_offset(p.offset(z)?.radians()),
            q_side: Turn::of_offset(q.offset(z)?.radians()),
        })
    }
}

/// Which family a candidate belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `a = b`: constant polar-angle difference.
    EqualOffsets,
    /// `a = −b`: constant polar-angle sum.
    OppositeOffsets,
    /// The ray of a site (oriented metric only).
    SiteRay,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceRole {
    /// Every point is equidistant from both sites.
    Equidistant,
    /// Separates the regions without being equidistant (a site's own ray
    /// under the oriented metric).
    RegionBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub piece: Piece,
    pub family: Family,
    /// Regime at a representative interior point, if one exists.
    pub regime: Option<RegimeTag>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BisectorPiece {
    pub piece: Piece,
    pub family: Family,
    pub role: PieceRole,
    pub regime: Option<RegimeTag>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisectorCurve {
    pub metric: Metric,
    pub site_p: Site,
    pub site_q: Site,
    pub bbox: BBox,
    pub pieces: Vec<BisectorPiece>,
}

impl BisectorCurve {
    pub fn equidistant_pieces(&self) -> impl Iterator<Item = &BisectorPiece> {
        self.pieces
            .iter()
            .filter(|p| p.role == PieceRole::Equidistant)
    }

    /// Equidistance residual at `z` under this curve's metric.
    pub fn residual(&self, z: Point) -> Result<f64> {
        equidistance_residual(self.metric, &self.site_p, &self.site_q, z)
    }

    /// Largest residual over `n` evenly spaced samples per equidistant piece,
    /// skipping samples closer than `site_mask` to either site.
    pub fn max_residual(&self, n: usize, site_mask: f64) -> Result<f64> {
        let mut worst = 0.0_f64;
        let (p, q) = (self.site_p.position, self.site_q.position);
        for bp in self.equidistant_pieces() {
            for z in bp.piece.sample(n)? {
                if z.distance(p) < site_mask || z.distance(q) < site_mask {
                    continue;
                }
                if let Ok(r) = self.residual(z) {
                    worst = worst.max(r);
                }
            }
        }
        Ok(worst)
    }

    /// Distance from `z` to the nearest equidistant piece.
    pub fn distance_to(&self, z: Point) -> Result<f64> {
        let mut best = f64::INFINITY;
        for bp in self.equidistant_pieces() {
            best = best.min(bp.piece.distance_to(z)?);
        }
        Ok(best)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectorOptions {
    /// Working box; defaults to [`BBox::around_pair`].
    pub bbox: Option<BBox>,
    pub samples: usize,
}

impl Default for BisectorOptions {
    fn default() -> Self {
        BisectorOptions {
            bbox: None,
            samples: DEFAULT_CLIP_SAMPLES,
        }
    }
}

/// `|d_p(z) − d_q(z)|`; for the oriented metric the difference is taken
/// modulo `2π`, since both distances wrap at their rays.
pub fn equidistance_residual(metric: Metric, p: &Site, q: &Site, z: Point) -> Result<f64> {
    Ok(match metric {
        Metric::SymmetricMin => {
            (sym_distance(p, z)?.radians() - sym_distance(q, z)?.radians()).abs()
        }
        Metric::OrientedCcw => {
            wrap_signed_f(ccw_distance(p, z)?.radians() - ccw_distance(q, z)?.radians()).abs()
        }
    })
}

fn check_pair(p: &Site, q: &Site) -> Result<()> {
    if p.position == q.position {
        return Err(Error::Degenerate("sites coincide"));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum LineKind {
    Segment,
    BeyondP,
    BeyondQ,
    PerpendicularBisector,
}

fn line_piece(kind: LineKind, p: Point, q: Point) -> Result<LinearPiece> {
    Ok(match kind {
        LineKind::Segment => LinearPiece::segment(p, q)?,
        LineKind::BeyondP => {
            LinearPiece::new(p, polar_angle(q, p)?, Interval::new(0.0, f64::INFINITY))
        }
        LineKind::BeyondQ => {
            LinearPiece::new(q, polar_angle(p, q)?, Interval::new(0.0, f64::INFINITY))
        }
        LineKind::PerpendicularBisector => {
            match constant_angle_difference_locus(p, q, Angle::ZERO)? {
                DifferenceLocus::Line(l) => l,
                DifferenceLocus::Hyperbola(_) => unreachable!("zero difference gives a line"),
            }
        }
    })
}

/// `a = b` family: pieces as (piece, line kind if degenerate).
fn equal_offset_pieces(p: &Site, q: &Site) -> Result<(Option<Piece>, Vec<LineKind>)> {
    let gamma = wrap_signed_f(p.ray_direction.radians() - q.ray_direction.radians());
    if gamma.abs() <= ANGLE_EPS {
        return Ok((None, vec![LineKind::BeyondP, LineKind::BeyondQ]));
    }
    if PI - gamma.abs() <= ANGLE_EPS {
        return Ok((None, vec![LineKind::Segment]));
    }
    // Apex angle |γ|, so base angles sum to π − |γ|; γ > 0 lies right of p→q.
    let side = if gamma > 0.0 { Side::Right } else { Side::Left };
    let arc = constant_angle_sum_locus(
        p.position,
        q.position,
        Angle::from_radians(PI - gamma.abs()),
        side,
    )?;
    Ok((Some(Piece::Arc(arc)), Vec::new()))
}

/// Signed base-angle difference `μ − ν` shared by the `a = −b` points left
/// of the directed line `q → p`; points on the right carry the opposite sign.
pub fn opposite_offset_difference(p: &Site, q: &Site) -> Result<Angle> {
    check_pair(p, q)?;
    let phi = polar_angle(q.position, p.position)?.radians();
    let d = wrap_signed_f(p.ray_direction.radians() + q.ray_direction.radians() - 2.0 * phi);
    Ok(Angle::from_radians(wrap_signed_f(PI - d)))
}

fn opposite_offset_pieces(p: &Site, q: &Site) -> Result<(Vec<Piece>, Vec<LineKind>)> {
    let delta = opposite_offset_difference(p, q)?.radians();
    if delta.abs() <= ANGLE_EPS {
        return Ok((
            Vec::new(),
            vec![LineKind::PerpendicularBisector, LineKind::Segment],
        ));
    }
    if PI - delta.abs() <= ANGLE_EPS {
        return Ok((Vec::new(), vec![LineKind::BeyondP, LineKind::BeyondQ]));
    }
    // μ − ν = delta on the left of the directed line q→p, −delta on its right
    let (pp, qp) = (p.position, q.position);
    let mut pieces = Vec::with_capacity(2);
    for (d, left) in [(delta, true), (-delta, false)] {
        for comp in difference_locus_components(pp, qp, Angle::from_radians(d))? {
            let piece = match comp {
                DifferenceLocus::Hyperbola(h) => Piece::Hyperbola(h),
                DifferenceLocus::Line(l) => Piece::Line(l),
            };
            let side = (pp - qp).cross(piece.point_at(1.0) - qp);
            if (side > 0.0) == left {
                pieces.push(piece);
            }
        }
    }
    Ok((pieces, Vec::new()))
}

fn representative_param(piece: &Piece) -> f64 {
    let r = piece.param_range();
    match (r.lo.is_finite(), r.hi.is_finite()) {
        (true, true) => 0.5 * (r.lo + r.hi),
        (true, false) => r.lo + 1.0,
        (false, true) => r.hi - 1.0,
        (false, false) => 1.0,
    }
}

fn candidate(piece: Piece, family: Family, p: &Site, q: &Site) -> Candidate {
    let z = piece.point_at(representative_param(&piece));
    Candidate {
        piece,
        family,
        regime: RegimeTag::at(p, q, z).ok(),
    }
}

/// All analytic candidates for the symmetric bisector. Unbounded pieces are
/// returned unbounded; each degenerate line piece appears once even when
/// both families produce it.
pub fn candidate_loci(p: &Site, q: &Site) -> Result<Vec<Candidate>> {
    check_pair(p, q)?;
    let (arc, eq_lines) = equal_offset_pieces(p, q)?;
    let (hyps, opp_lines) = opposite_offset_pieces(p, q)?;
    let mut out = Vec::new();
    if let Some(arc) = arc {
        out.push(candidate(arc, Family::EqualOffsets, p, q));
    }
    for h in hyps {
        out.push(candidate(h, Family::OppositeOffsets, p, q));
    }
    let mut seen: Vec<LineKind> = Vec::new();
    for (kind, family) in eq_lines
        .into_iter()
        .map(|k| (k, Family::EqualOffsets))
        .chain(opp_lines.into_iter().map(|k| (k, Family::OppositeOffsets)))
    {
        if seen.contains(&kind) {
            continue;
        }
        seen.push(kind);
        let piece = Piece::Line(line_piece(kind, p.position, q.position)?);
        out.push(candidate(piece, family, p, q));
    }
    Ok(out)
}

/// Maximal sub-intervals of `range` where `pred` holds, from `n` uniform
/// samples with ends refined by bisection to [`PARAM_TOL`]. Refined ends
/// are always on the side where `pred` holds.
pub fn predicate_intervals<F: Fn(f64) -> bool>(
    range: Interval,
    n: usize,
    pred: F,
) -> Vec<Interval> {
    let n = n.max(2);
    let ts: Vec<f64> = range.linspace(n).collect();
    let flags: Vec<bool> = ts.iter().map(|&t| pred(t)).collect();
    let refine = |mut bad: f64, mut good: f64| {
        for _ in 0..200 {
            if (good - bad).abs() <= PARAM_TOL {
                break;
            }
            let mid = 0.5 * (bad + good);
            if pred(mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good
    };
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        if !flags[i] {
            i += 1;
            continue;
        }
        let start = i;
        while i + 1 < n && flags[i + 1] {
            i += 1;
        }
        let end = i;
        let lo = if start == 0 {
            ts[0]
        } else {
            refine(ts[start - 1], ts[start])
        };
        let hi = if end == n - 1 {
            ts[n - 1]
        } else {
            refine(ts[end + 1], ts[end])
        };
        if hi > lo {
            out.push(Interval::new(lo, hi));
        }
        i += 1;
    }
    out
}

/// Parts of a bounded piece lying inside `bbox`.
pub fn clip_to_box(piece: &Piece, bbox: &BBox, n: usize) -> Result<Vec<Piece>> {
    let Some(bounded) = piece.bounded_in(bbox) else {
        return Ok(Vec::new());
    };
    if let Piece::Line(_) = bounded {
        return Ok(vec![bounded]);
    }
    Ok(predicate_intervals(bounded.param_range(), n, |t| {
        bbox.contains(bounded.point_at(t))
    })
    .into_iter()
    .map(|r| bounded.restrict(r))
    .collect())
}

fn clip_by_metric(
    candidate: &Piece,
    metric: Metric,
    p: &Site,
    q: &Site,
    n: usize,
) -> Result<Vec<Piece>> {
    let range = candidate.param_range();
    if !range.is_bounded() {
        return Err(Error::NeedsClipping);
    }
    let pred = |t: f64| {
        equidistance_residual(metric, p, q, candidate.point_at(t))
            .map(|r| r <= EPS_BIS)
            .unwrap_or(false)
    };
    Ok(predicate_intervals(range, n.max(16), pred)
        .into_iter()
        .map(|r| candidate.restrict(r))
        .collect())
}

/// Sub-pieces of a bounded candidate on which the symmetric distances agree
/// to within [`EPS_BIS`]. Site positions never pass the predicate.
pub fn clip_by_regime(candidate: &Piece, p: &Site, q: &Site, n: usize) -> Result<Vec<Piece>> {
    clip_by_metric(candidate, Metric::SymmetricMin, p, q, n)
}

fn piece_order(a: &BisectorPiece, b: &BisectorPiece) -> Ordering {
    let key = |bp: &BisectorPiece| {
        let r = bp.piece.param_range();
        let z = bp.piece.point_at(r.lo);
        (bp.role as u8, bp.piece.rank(), z.x, z.y)
    };
    let (ka, kb) = (key(a), key(b));
    ka.0.cmp(&kb.0)
        .then(ka.1.cmp(&kb.1))
        .then(ka.2.total_cmp(&kb.2))
        .then(ka.3.total_cmp(&kb.3))
}

fn assemble(
    metric: Metric,
    p: &Site,
    q: &Site,
    bbox: BBox,
    candidates: Vec<Candidate>,
    samples: usize,
) -> Result<Vec<BisectorPiece>> {
    let mut pieces = Vec::new();
    for c in candidates {
        for boxed in clip_to_box(&c.piece, &bbox, samples)? {
            for clipped in clip_by_metric(&boxed, metric, p, q, samples)? {
                let mid = clipped.point_at(representative_param(&clipped));
                pieces.push(BisectorPiece {
                    piece: clipped,
                    family: c.family,
                    role: PieceRole::Equidistant,
                    regime: RegimeTag::at(p, q, mid).ok(),
                });
            }
        }
    }
    Ok(pieces)
}

pub fn symmetric_bisector(p: &Site, q: &Site) -> Result<BisectorCurve> {
    symmetric_bisector_with(p, q, &BisectorOptions::default())
}

/// Union of all clipped candidates, in canonical order (piece type, then
/// starting point).
pub fn symmetric_bisector_with(
    p: &Site,
    q: &Site,
    opts: &BisectorOptions,
) -> Result<BisectorCurve> {
    check_pair(p, q)?;
    let bbox = opts
        .bbox
        .unwrap_or_else(|| BBox::around_pair(p.position, q.position));
    let mut pieces = assemble(
        Metric::SymmetricMin,
        p,
        q,
        bbox,
        candidate_loci(p, q)?,
        opts.samples,
    )?;
    pieces.sort_by(piece_order);
    Ok(BisectorCurve {
        metric: Metric::SymmetricMin,
        site_p: *p,
        site_q: *q,
        bbox,
        pieces,
    })
}

pub fn oriented_bisector(p: &Site, q: &Site) -> Result<BisectorCurve> {
    oriented_bisector_with(p, q, &BisectorOptions::default())
}

/// The constant-inscribed-angle arc (or its degenerate line pieces) where
/// the counterclockwise distances agree, plus both site rays as region
/// boundaries.
pub fn oriented_bisector_with(p: &Site, q: &Site, opts: &BisectorOptions) -> Result<BisectorCurve> {
    check_pair(p, q)?;
    let bbox = opts
        .bbox
        .unwrap_or_else(|| BBox::around_pair(p.position, q.position));
    let (arc, lines) = equal_offset_pieces(p, q)?;
    let mut candidates: Vec<Candidate> = arc
        .into_iter()
        .map(|a| candidate(a, Family::EqualOffsets, p, q))
        .collect();
    for kind in lines {
        let piece = Piece::Line(line_piece(kind, p.position, q.position)?);
        candidates.push(candidate(piece, Family::EqualOffsets, p, q));
    }
    let mut pieces = assemble(Metric::OrientedCcw, p, q, bbox, candidates, opts.samples)?;
    for s in [p, q] {
        let ray = LinearPiece::new(
            s.position,
            s.ray_direction,
            Interval::new(0.0, f64::INFINITY),
        );
        if let Some(r) = ray.clip_range(&bbox) {
            pieces.push(BisectorPiece {
                piece: Piece::Line(LinearPiece { t_range: r, ..ray }),
                family: Family::SiteRay,
                role: PieceRole::RegionBoundary,
                regime: None,
            });
        }
    }
    pieces.sort_by(piece_order);
    Ok(BisectorCurve {
        metric: Metric::OrientedCcw,
        site_p: *p,
        site_q: *q,
        bbox,
        pieces,
    })
}
