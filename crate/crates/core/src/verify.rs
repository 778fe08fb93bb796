//! Property suites behind `angvor verify`.
//!
//! Every suite is a pure function of a [`VerifyConfig`]: random inputs come
//! from per-trial ChaCha streams keyed by the seed, so reports are
//! byte-identical across runs and execution strategies. Reports carry no
//! timings.

use std::f64::consts::PI;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bisector::{symmetric_bisector_with, BisectorOptions};
use crate::exec::Exec;
use crate::figures::disconnected_pair;
use crate::geometry::{
    triangle_base_angles, wrap_signed_f, Angle, BBox, Metric, Point, SimilarityTransform, Site,
};
use crate::loci::{
    constant_angle_sum_locus, difference_locus_components, DifferenceLocus, HyperbolicArc,
    Interval, Side,
};
use crate::oracle::{
    compare_curve_to_grid, count_faces, line_crossings, random_line, random_site_pair,
    rasterize_voronoi_plane, rasterize_voronoi_with, trial_rng, Connectivity, FaceReport, GridSpec,
    PlaneChart, AGREEMENT_DIAGONALS,
};
use crate::{Error, Result};

pub const TOOL: &str = "angvor";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const DELTA_GRID_DEG: [f64; 10] = [
    10.0, -10.0, 45.0, -45.0, 90.0, -90.0, 135.0, -135.0, 170.0, -170.0,
];
pub const SIGMA_GRID_DEG: [f64; 5] = [10.0, 45.0, 90.0, 135.0, 170.0];
/// Hyperbola samples cover `u ∈ [0, U_MAX]` of each half-branch.
pub const U_MAX: f64 = 5.0;
pub const LOCUS_TOL: f64 = 1e-9;
pub const THALES_TOL: f64 = 1e-12;
pub const FOCI_MIN_REL: f64 = 1e-6;
/// Samples closer than this multiple of `|PQ|` to a site are skipped: the
/// angle at a site is undefined there and ill-conditioned nearby.
pub const SITE_MASK_REL: f64 = 1e-6;
pub const RESIDUAL_TOL: f64 = 1e-7;
/// The analytic-vs-raster comparison labels with no tie band, so that label
/// changes sit exactly at sign changes of the distance difference.
pub const COMPARISON_TIE_BAND: f64 = 0.0;
pub const MAX_FACES: usize = 4;
pub const MAX_CROSSINGS: usize = 3;
pub const MIN_SITE_SEPARATION: f64 = 0.5;

const SALT_LOCI: u64 = 0x6c6f_6369;
const SALT_BISECTOR: u64 = 0x6269_7365;
const SALT_FACES: u64 = 0x6661_6365;
const SALT_SITES: u64 = 0x7369_7465;
const SALT_LINES: u64 = 0x6c69_6e65;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Loci,
    Bisector,
    Faces,
    Crossings,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random similarity placements per locus angle.
    pub placements: usize,
    pub curve_samples: usize,
    /// Site pairs for the bisector and crossing suites.
    pub configs: usize,
    /// Site pairs for the face suite.
    pub trials: usize,
    pub lines: usize,
    pub line_samples: usize,
    pub resolution: usize,
    /// Tie band of the face suite, radians.
    pub tie_band: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            placements: 20,
            curve_samples: 1000,
            configs: 20,
            trials: 100,
            lines: 10_000,
            line_samples: 1000,
            resolution: 512,
            tie_band: 1e-2,
        }
    }
}

impl VerifyConfig {
    fn check(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParameter(m.to_string()));
        if self.curve_samples < 2 {
            return bad("need at least 2 samples per curve");
        }
        if self.resolution < 2 {
            return bad("resolution must be at least 2");
        }
        if self.line_samples < 1000 {
            return bad("need at least 1000 samples per line");
        }
        if !(self.tie_band.is_finite() && self.tie_band >= 0.0) {
            return bad("tie band must be >= 0");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub suite: Suite,
    pub seed: u64,
    pub config: VerifyConfig,
}

impl Header {
    fn new(suite: Suite, config: &VerifyConfig) -> Self {
        Header {
            tool: TOOL.into(),
            version: VERSION.into(),
            suite,
            seed: config.seed,
            config: *config,
        }
    }
}

/// Site pairs of the randomized suites: positions in `[−2, 2]²`, at least
/// [`MIN_SITE_SEPARATION`] apart, uniform ray directions.
pub fn site_region() -> BBox {
    BBox::centered(Point::ORIGIN, 2.0)
}

/// Window of the raster comparisons and line probes.
pub fn oracle_box() -> BBox {
    BBox::centered(Point::ORIGIN, 3.0)
}

fn site_pair(seed: u64, salt: u64, k: usize) -> (Site, Site) {
    random_site_pair(
        &mut trial_rng(seed ^ salt, k as u64),
        &site_region(),
        MIN_SITE_SEPARATION,
    )
}

// ---------------------------------------------------------------- loci

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LociTolerances {
    pub difference_rad: f64,
    pub canonical_rel: f64,
    pub sum_rad: f64,
    pub thales_abs: f64,
    pub foci_min_rel: f64,
    pub site_mask_rel: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LociReport {
    pub header: Header,
    pub tolerances: LociTolerances,
    pub delta_deg: Vec<f64>,
    pub sigma_deg: Vec<f64>,
    pub u_max: f64,
    pub hyperbolas: usize,
    pub arcs: usize,
    pub samples_checked: usize,
    pub samples_masked: usize,
    /// `max |wrap(μ − ν − δ)|` over hyperbola samples.
    pub max_difference_error: f64,
    /// `max |x·y − h| / (1 + h)` over canonical pullbacks.
    pub max_canonical_residual: f64,
    /// `max |pullback(P) − (h, 1)|, |pullback(Q) − (−h, −1)|`, relative to
    /// `1 + h`.
    pub max_frame_error: f64,
    pub max_sum_error: f64,
    pub max_thales_center_error: f64,
    pub max_thales_radius_error: f64,
    /// `min |F − P|, |F − Q|` over all foci, relative to `|PQ|`.
    pub min_foci_separation: f64,
    pub difference_passed: bool,
    pub canonical_passed: bool,
    pub sum_passed: bool,
    pub foci_passed: bool,
    pub passed: bool,
}

/// Random placement of the base pair `(1, 0), (−1, 0)`: uniform rotation,
/// log-uniform scale in `[0.1, 10]`, translation in `[−10, 10]²`.
pub fn random_placement<R: Rng>(rng: &mut R) -> SimilarityTransform {
    let rotation = Angle::from_radians(rng.gen_range(-PI..PI));
    let scale = rng.gen_range(0.1_f64.ln()..10.0_f64.ln()).exp();
    let t = Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
    SimilarityTransform::new(rotation, scale, t, false).expect("finite placement")
}

#[derive(Default)]
struct LociAcc {
    hyperbolas: usize,
    arcs: usize,
    checked: usize,
    masked: usize,
    diff: f64,
    canon: f64,
    frame: f64,
    sum: f64,
    center: f64,
    radius: f64,
    foci: f64,
}

impl LociAcc {
    fn merge(mut self, o: LociAcc) -> LociAcc {
        self.hyperbolas += o.hyperbolas;
        self.arcs += o.arcs;
        self.checked += o.checked;
        self.masked += o.masked;
        self.diff = self.diff.max(o.diff);
        self.canon = self.canon.max(o.canon);
        self.frame = self.frame.max(o.frame);
        self.sum = self.sum.max(o.sum);
        self.center = self.center.max(o.center);
        self.radius = self.radius.max(o.radius);
        self.foci = self.foci.min(o.foci);
        self
    }
}

fn check_hyperbola(
    arc: &HyperbolicArc,
    p: Point,
    q: Point,
    delta: f64,
    n: usize,
    acc: &mut LociAcc,
) -> Result<()> {
    let pq = p.distance(q);
    let mask = SITE_MASK_REL * pq;
    let scale = 1.0 + arc.h;
    acc.hyperbolas += 1;
    let ends = [(p, Point::new(arc.h, 1.0)), (q, Point::new(-arc.h, -1.0))];
    for (world, canonical) in ends {
        acc.frame = acc
            .frame
            .max(arc.pullback(world).distance(canonical) / scale);
    }
    for z in arc.with_u_range(Interval::new(0.0, U_MAX)).sample(n)? {
        acc.canon = acc.canon.max(arc.pullback_residual(z) / scale);
        if z.distance(p) < mask || z.distance(q) < mask {
            acc.masked += 1;
            continue;
        }
        acc.checked += 1;
        let (mu, nu) = triangle_base_angles(p, q, z)?;
        acc.diff = acc
            .diff
            .max(wrap_signed_f(mu.radians() - nu.radians() - delta).abs());
    }
    let (f1, f2) = arc.foci();
    for f in [f1, f2] {
        acc.foci = acc.foci.min(f.distance(p).min(f.distance(q)) / pq);
    }
    Ok(())
}

fn loci_placement(config: &VerifyConfig, k: usize) -> Result<LociAcc> {
    let frame = random_placement(&mut trial_rng(config.seed ^ SALT_LOCI, k as u64));
    let (p, q) = (
        frame.apply(Point::new(1.0, 0.0)),
        frame.apply(Point::new(-1.0, 0.0)),
    );
    let pq = p.distance(q);
    let mask = SITE_MASK_REL * pq;
    let n = config.curve_samples;
    let mut acc = LociAcc {
        foci: f64::INFINITY,
        ..Default::default()
    };
    for deg in DELTA_GRID_DEG {
        let delta = Angle::from_degrees(deg);
        for comp in difference_locus_components(p, q, delta)? {
            let DifferenceLocus::Hyperbola(arc) = comp else {
                return Err(Error::Degenerate("nonzero difference produced a line"));
            };
            check_hyperbola(&arc, p, q, delta.radians(), n, &mut acc)?;
        }
    }
    for deg in SIGMA_GRID_DEG {
        let sigma = Angle::from_degrees(deg);
        for side in [Side::Left, Side::Right] {
            let arc = constant_angle_sum_locus(p, q, sigma, side)?;
            acc.arcs += 1;
            for z in arc.sample(n) {
                if z.distance(p) < mask || z.distance(q) < mask {
                    acc.masked += 1;
                    continue;
                }
                acc.checked += 1;
                let (mu, nu) = triangle_base_angles(p, q, z)?;
                acc.sum = acc
                    .sum
                    .max(wrap_signed_f(mu.radians() + nu.radians() - sigma.radians()).abs());
            }
            if deg == 90.0 {
                acc.center = acc.center.max(arc.center.distance(p.midpoint(q)));
                acc.radius = acc.radius.max((arc.radius - 0.5 * pq).abs());
            }
        }
    }
    Ok(acc)
}

pub fn verify_loci(config: &VerifyConfig, exec: Exec) -> Result<LociReport> {
    config.check()?;
    let acc = exec
        .map_indices(config.placements, |k| loci_placement(config, k))
        .into_iter()
        .try_fold(
            LociAcc {
                foci: f64::INFINITY,
                ..Default::default()
            },
            |a, b| b.map(|b| a.merge(b)),
        )?;
    let difference_passed = acc.diff <= LOCUS_TOL;
    let canonical_passed = acc.canon <= LOCUS_TOL && acc.frame <= LOCUS_TOL;
    let sum_passed = acc.sum <= LOCUS_TOL && acc.center <= THALES_TOL && acc.radius <= THALES_TOL;
    let foci_passed = acc.foci >= FOCI_MIN_REL;
    Ok(LociReport {
        header: Header::new(Suite::Loci, config),
        tolerances: LociTolerances {
            difference_rad: LOCUS_TOL,
            canonical_rel: LOCUS_TOL,
            sum_rad: LOCUS_TOL,
            thales_abs: THALES_TOL,
            foci_min_rel: FOCI_MIN_REL,
            site_mask_rel: SITE_MASK_REL,
        },
        delta_deg: DELTA_GRID_DEG.to_vec(),
        sigma_deg: SIGMA_GRID_DEG.to_vec(),
        u_max: U_MAX,
        hyperbolas: acc.hyperbolas,
        arcs: acc.arcs,
        samples_checked: acc.checked,
        samples_masked: acc.masked,
        max_difference_error: acc.diff,
        max_canonical_residual: acc.canon,
        max_frame_error: acc.frame,
        max_sum_error: acc.sum,
        max_thales_center_error: acc.center,
        max_thales_radius_error: acc.radius,
        min_foci_separation: if acc.hyperbolas == 0 { 0.0 } else { acc.foci },
        difference_passed,
        canonical_passed,
        sum_passed,
        foci_passed,
        passed: difference_passed && canonical_passed && sum_passed && foci_passed,
    })
}

// ------------------------------------------------------------ bisector

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisectorTolerances {
    pub agreement_diagonals: f64,
    pub residual_rad: f64,
    pub site_mask_rel: f64,
    pub comparison_tie_band: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisectorTrial {
    pub index: usize,
    pub p: Site,
    pub q: Site,
    pub pieces: usize,
    pub curve_samples: usize,
    pub tie_only_samples: usize,
    pub unresolved_samples: usize,
    pub boundary_cells: usize,
    pub curve_to_grid: f64,
    pub grid_to_curve: f64,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisectorReport {
    pub header: Header,
    pub tolerances: BisectorTolerances,
    pub grid_box: BBox,
    pub trials: Vec<BisectorTrial>,
    pub max_curve_to_grid: f64,
    pub max_grid_to_curve: f64,
    pub max_residual: f64,
    /// Samples on measure-zero tie sets, summed over trials.
    pub tie_only_samples: usize,
    pub unresolved_samples: usize,
    pub passed: bool,
}

pub fn bisector_trial(
    p: &Site,
    q: &Site,
    spec: &GridSpec,
    samples: usize,
    exec: Exec,
) -> Result<(BisectorTrial, f64)> {
    let labels = rasterize_voronoi_with(
        &[*p, *q],
        spec,
        Metric::SymmetricMin,
        COMPARISON_TIE_BAND,
        exec,
    )?;
    let curve = symmetric_bisector_with(
        p,
        q,
        &BisectorOptions {
            bbox: Some(spec.bbox),
            ..Default::default()
        },
    )?;
    let cmp = compare_curve_to_grid(&curve, &labels)?;
    let residual = curve.max_residual(samples, SITE_MASK_REL * p.position.distance(q.position))?;
    let passed = cmp.passed && residual <= RESIDUAL_TOL;
    Ok((
        BisectorTrial {
            index: 0,
            p: *p,
            q: *q,
            pieces: curve.equidistant_pieces().count(),
            curve_samples: cmp.curve_samples,
            tie_only_samples: cmp.tie_only_samples,
            unresolved_samples: cmp.unresolved_samples,
            boundary_cells: cmp.boundary_cells,
            curve_to_grid: cmp.max_curve_to_grid,
            grid_to_curve: cmp.max_grid_to_curve,
            residual,
            passed,
        },
        residual,
    ))
}

pub fn verify_bisector(config: &VerifyConfig, exec: Exec) -> Result<BisectorReport> {
    config.check()?;
    let grid_box = oracle_box();
    let spec = GridSpec::new(grid_box, config.resolution, config.resolution)?;
    let mut trials = Vec::with_capacity(config.configs);
    for k in 0..config.configs {
        let (p, q) = site_pair(config.seed, SALT_BISECTOR, k);
        let (mut t, _) = bisector_trial(&p, &q, &spec, config.curve_samples, exec)?;
        t.index = k;
        trials.push(t);
    }
    let max = |f: fn(&BisectorTrial) -> f64| trials.iter().map(f).fold(0.0_f64, f64::max);
    Ok(BisectorReport {
        header: Header::new(Suite::Bisector, config),
        tolerances: BisectorTolerances {
            agreement_diagonals: AGREEMENT_DIAGONALS,
            residual_rad: RESIDUAL_TOL,
            site_mask_rel: SITE_MASK_REL,
            comparison_tie_band: COMPARISON_TIE_BAND,
        },
        grid_box,
        max_curve_to_grid: max(|t| t.curve_to_grid),
        max_grid_to_curve: max(|t| t.grid_to_curve),
        max_residual: max(|t| t.residual),
        tie_only_samples: trials.iter().map(|t| t.tie_only_samples).sum(),
        unresolved_samples: trials.iter().map(|t| t.unresolved_samples).sum(),
        passed: trials.iter().all(|t| t.passed),
        trials,
    })
}

// --------------------------------------------------------------- faces

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceTolerances {
    pub max_faces: usize,
    pub tie_band: f64,
    pub connectivity: Connectivity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CraftedFaces {
    pub p: Site,
    pub q: Site,
    pub plane: FaceReport,
    pub window: FaceReport,
    /// Largest number of resolved components of a single label.
    pub max_components_per_label: usize,
    pub disconnected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FacesReport {
    pub header: Header,
    pub tolerances: FaceTolerances,
    /// Faces are counted on a [`PlaneChart`] raster around each pair, which
    /// sees the whole plane.
    pub chart_scale_rel: f64,
    /// `histogram[k]` = trials with `k` resolved faces.
    pub histogram: Vec<usize>,
    pub max_resolved_faces: usize,
    /// Including components that hold no interior cell.
    pub max_components: usize,
    /// Same counts on the fixed window, for reference only: a window can
    /// cut one face of the plane into several pieces.
    pub window_box: BBox,
    pub window_max_resolved_faces: usize,
    pub window_max_components: usize,
    pub crafted: CraftedFaces,
    pub passed: bool,
}

fn face_counts(
    p: &Site,
    q: &Site,
    config: &VerifyConfig,
    exec: Exec,
) -> Result<(FaceReport, FaceReport)> {
    let chart = PlaneChart::around_pair(p.position, q.position);
    let sites = [*p, *q];
    let plane = rasterize_voronoi_plane(
        &sites,
        &chart,
        config.resolution,
        Metric::SymmetricMin,
        config.tie_band,
        exec,
    )?;
    let spec = GridSpec::new(oracle_box(), config.resolution, config.resolution)?;
    let window =
        rasterize_voronoi_with(&sites, &spec, Metric::SymmetricMin, config.tie_band, exec)?;
    Ok((
        count_faces(&plane, Connectivity::Four),
        count_faces(&window, Connectivity::Four),
    ))
}

pub fn verify_faces(config: &VerifyConfig, exec: Exec) -> Result<FacesReport> {
    config.check()?;
    let mut histogram = vec![0usize; MAX_FACES + 1];
    let (mut max_res, mut max_comp, mut win_res, mut win_comp) = (0, 0, 0, 0);
    for k in 0..config.trials {
        let (p, q) = site_pair(config.seed, SALT_FACES, k);
        let (plane, window) = face_counts(&p, &q, config, exec)?;
        if histogram.len() <= plane.resolved_faces {
            histogram.resize(plane.resolved_faces + 1, 0);
        }
        histogram[plane.resolved_faces] += 1;
        max_res = max_res.max(plane.resolved_faces);
        max_comp = max_comp.max(plane.total_faces);
        win_res = win_res.max(window.resolved_faces);
        win_comp = win_comp.max(window.total_faces);
    }
    let (p, q) = disconnected_pair();
    let (plane, window) = face_counts(&p, &q, config, exec)?;
    let per_label = plane
        .per_label
        .iter()
        .map(|l| l.resolved)
        .max()
        .unwrap_or(0);
    let crafted = CraftedFaces {
        p,
        q,
        max_components_per_label: per_label,
        disconnected: per_label >= 2,
        plane,
        window,
    };
    Ok(FacesReport {
        header: Header::new(Suite::Faces, config),
        tolerances: FaceTolerances {
            max_faces: MAX_FACES,
            tie_band: config.tie_band,
            connectivity: Connectivity::Four,
        },
        chart_scale_rel: 1.0,
        histogram,
        max_resolved_faces: max_res,
        max_components: max_comp,
        window_box: oracle_box(),
        window_max_resolved_faces: win_res,
        window_max_components: win_comp,
        passed: max_res <= MAX_FACES && crafted.disconnected,
        crafted,
    })
}

// ----------------------------------------------------------- crossings

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossingsReport {
    pub header: Header,
    pub max_crossings_allowed: usize,
    pub line_box: BBox,
    pub accepted_lines: usize,
    /// Lines rejected because they run along the bisector; each one was
    /// replaced by a fresh draw.
    pub rejected_lines: usize,
    /// `histogram[k]` = accepted lines with `k` sign changes.
    pub histogram: Vec<usize>,
    pub max_crossings: usize,
    pub passed: bool,
}

fn crossings_for_config(
    config: &VerifyConfig,
    k: usize,
    lines: usize,
) -> Result<(Vec<usize>, usize)> {
    let (p, q) = site_pair(config.seed, SALT_SITES, k);
    let bbox = oracle_box();
    let mut rng = trial_rng(config.seed ^ SALT_LINES, k as u64);
    let mut counts = Vec::with_capacity(lines);
    let mut rejected = 0;
    while counts.len() < lines {
        let line = random_line(&mut rng, &bbox);
        match line_crossings(&p, &q, &line, config.line_samples, &bbox) {
            Ok(c) => counts.push(c),
            Err(Error::RejectedLine) => {
                rejected += 1;
                if rejected > 100 * lines.max(1) {
                    return Err(Error::Degenerate("almost every probe line was rejected"));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok((counts, rejected))
}

pub fn verify_crossings(config: &VerifyConfig, exec: Exec) -> Result<CrossingsReport> {
    config.check()?;
    let n = config.configs.max(1);
    let share = |k: usize| config.lines / n + usize::from(k < config.lines % n);
    let per_config = exec.map_indices(if config.configs == 0 { 0 } else { n }, |k| {
        crossings_for_config(config, k, share(k))
    });
    let mut histogram = vec![0usize; MAX_CROSSINGS + 1];
    let (mut accepted, mut rejected) = (0, 0);
    for r in per_config {
        let (counts, rej) = r?;
        rejected += rej;
        accepted += counts.len();
        for c in counts {
            if histogram.len() <= c {
                histogram.resize(c + 1, 0);
            }
            histogram[c] += 1;
        }
    }
    let max_crossings = histogram.iter().rposition(|&h| h > 0).unwrap_or(0);
    Ok(CrossingsReport {
        header: Header::new(Suite::Crossings, config),
        max_crossings_allowed: MAX_CROSSINGS,
        line_box: oracle_box(),
        accepted_lines: accepted,
        rejected_lines: rejected,
        histogram,
        max_crossings,
        passed: max_crossings <= MAX_CROSSINGS,
    })
}

// ----------------------------------------------------------------- all

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AllReport {
    pub header: Header,
    pub loci: LociReport,
    pub bisector: BisectorReport,
    pub faces: FacesReport,
    pub crossings: CrossingsReport,
    pub passed: bool,
}

pub fn verify_all(config: &VerifyConfig, exec: Exec) -> Result<AllReport> {
    let loci = verify_loci(config, exec)?;
    let bisector = verify_bisector(config, exec)?;
    let faces = verify_faces(config, exec)?;
    let crossings = verify_crossings(config, exec)?;
    Ok(AllReport {
        header: Header::new(Suite::All, config),
        passed: loci.passed && bisector.passed && faces.passed && crossings.passed,
        loci,
        bisector,
        faces,
        crossings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            placements: 2,
            curve_samples: 50,
            configs: 2,
            trials: 2,
            lines: 40,
            resolution: 64,
            ..Default::default()
        }
    }

    #[test]
    fn loci_suite_on_a_small_config() {
        let r = verify_loci(&small(), Exec::Sequential).unwrap();
        assert_eq!(r.hyperbolas, 2 * 2 * DELTA_GRID_DEG.len());
        assert_eq!(r.arcs, 2 * 2 * SIGMA_GRID_DEG.len());
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn crossing_lines_are_shared_across_configs() {
        let c = VerifyConfig {
            lines: 41,
            configs: 4,
            ..small()
        };
        let r = verify_crossings(&c, Exec::Sequential).unwrap();
        assert_eq!(r.accepted_lines, 41);
        assert_eq!(r.histogram.iter().sum::<usize>(), 41);
    }

    #[test]
    fn strategies_agree() {
        let c = small();
        assert_eq!(
            verify_crossings(&c, Exec::Sequential).unwrap(),
            verify_crossings(&c, Exec::Parallel).unwrap()
        );
        assert_eq!(
            verify_faces(&c, Exec::Sequential).unwrap(),
            verify_faces(&c, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn invalid_config_is_rejected() {
        let c = VerifyConfig {
            line_samples: 10,
            ..small()
        };
        assert!(verify_crossings(&c, Exec::Sequential).is_err());
    }
}
