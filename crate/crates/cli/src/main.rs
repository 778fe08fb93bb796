//! `angvor`: loci, bisectors, raster diagrams, verification suites and the
//! reference figures from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input, 3 I/O error.

mod sitefile;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use angvor_core::bisector::{
    clip_to_box, oriented_bisector_with, symmetric_bisector_with, BisectorCurve, BisectorOptions,
    Piece, DEFAULT_CLIP_SAMPLES,
};
use angvor_core::figures;
use angvor_core::loci::{
    constant_angle_sum_locus, difference_locus_components, unsigned_difference_locus,
    DifferenceLocus, Side,
};
use angvor_core::oracle::{
    count_faces, rasterize_distance_with, rasterize_voronoi_with, Connectivity, FaceReport,
    GridSpec,
};
use angvor_core::raster_io::{emit_angf, emit_pgm};
use angvor_core::render::{emit_svg, Drawable, Scene};
use angvor_core::verify::{self, VerifyConfig, TOOL, VERSION};
use angvor_core::{Angle, BBox, Exec, Metric, Point, Site};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sitefile::{Loaded, SiteFile};

const SVG_WIDTH_PX: u32 = 600;

#[derive(Debug)]
pub enum CliError {
    Verification(String),
    Input(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Verification(m) | CliError::Input(m) | CliError::Io(m) => m,
        }
    }
}

impl From<angvor_core::Error> for CliError {
    fn from(e: angvor_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "angvor",
    version,
    about = "Rotating-ray angular distances and their bisectors"
)]
struct Cli {
    /// Worker threads for raster and trial loops (results do not depend on it).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a constant angle-sum arc or constant angle-difference hyperbola.
    Locus(LocusArgs),
    /// Two-site bisector as a piece list and an SVG.
    Bisector(BisectorArgs),
    /// Labelled raster diagram and face report.
    Voronoi(VoronoiArgs),
    /// Run the randomized property suites.
    Verify(VerifyArgs),
    /// Render one of the reference figures.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LocusKind {
    Sum,
    Diff,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MetricArg {
    Sym,
    Ccw,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Sym => Metric::SymmetricMin,
            MetricArg::Ccw => Metric::OrientedCcw,
        }
    }
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let x: f64 = x.trim().parse().map_err(|e| format!("{x:?}: {e}"))?;
    let y: f64 = y.trim().parse().map_err(|e| format!("{y:?}: {e}"))?;
    if !(x.is_finite() && y.is_finite()) {
        return Err("coordinates must be finite".into());
    }
    Ok(Point::new(x, y))
}

#[derive(Debug, Args)]
struct LocusArgs {
    kind: LocusKind,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    p: Point,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    q: Point,
    /// Angle sum or signed difference, degrees.
    #[arg(long, allow_hyphen_values = true)]
    angle: f64,
    /// Side of the directed line p → q (sum only).
    #[arg(long, value_enum, default_value = "left")]
    side: SideArg,
    /// Difference only: all apex points with `|μ − ν| = |angle|`.
    #[arg(long)]
    unsigned: bool,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct BisectorArgs {
    #[arg(long)]
    sites: PathBuf,
    #[arg(long, value_enum, default_value = "sym")]
    metric: MetricArg,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VoronoiArgs {
    #[arg(long)]
    sites: PathBuf,
    #[arg(long, value_enum, default_value = "sym")]
    metric: MetricArg,
    #[arg(long, default_value_t = 512)]
    resolution: usize,
    /// Cells whose two smallest distances differ by at most this many
    /// radians are ties.
    #[arg(long, default_value_t = 1e-2)]
    tie_band: f64,
    /// Also write each site's distance field as `distance_<i>.angf`.
    #[arg(long)]
    angf: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Loci,
    Bisector,
    Faces,
    Crossings,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: SuiteArg,
    #[arg(long)]
    seed: Option<u64>,
    /// Site pairs of the face suite.
    #[arg(long)]
    trials: Option<usize>,
    /// Accepted probe lines of the crossing suite.
    #[arg(long)]
    lines: Option<usize>,
    /// Site pairs of the bisector and crossing suites.
    #[arg(long)]
    configs: Option<usize>,
    /// Similarity placements per locus angle.
    #[arg(long)]
    placements: Option<usize>,
    #[arg(long)]
    resolution: Option<usize>,
    #[arg(long)]
    tie_band: Option<f64>,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FigureArg {
    Fig1,
    Fig2,
}

#[derive(Debug, Args)]
struct RenderArgs {
    figure: FigureArg,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn ensure_dir(dir: &Path) -> CliResult {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    s.push('\n');
    write_file(path, s.as_bytes())
}

#[derive(Serialize)]
struct Provenance {
    tool: &'static str,
    version: &'static str,
}

const PROVENANCE: Provenance = Provenance {
    tool: TOOL,
    version: VERSION,
};

#[derive(Serialize)]
struct SampleLine {
    component: usize,
    x: f64,
    y: f64,
}

fn cmd_locus(a: &LocusArgs) -> CliResult {
    if a.samples < 2 {
        return Err(CliError::Input("need at least 2 samples".into()));
    }
    let angle = Angle::from_degrees(a.angle);
    let bbox = BBox::around_pair(a.p, a.q);
    let components: Vec<Piece> = match a.kind {
        LocusKind::Sum => {
            let side = match a.side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            vec![Piece::Arc(constant_angle_sum_locus(a.p, a.q, angle, side)?)]
        }
        LocusKind::Diff => {
            let mut out = Vec::new();
            let loci = if a.unsigned {
                unsigned_difference_locus(a.p, a.q, angle)?
            } else {
                difference_locus_components(a.p, a.q, angle)?
            };
            for c in loci {
                let piece = match c {
                    DifferenceLocus::Hyperbola(h) => Piece::Hyperbola(h),
                    DifferenceLocus::Line(l) => Piece::Line(l),
                };
                out.extend(clip_to_box(&piece, &bbox, DEFAULT_CLIP_SAMPLES)?);
            }
            out
        }
    };
    ensure_dir(&a.out)?;
    let mut jsonl = Vec::new();
    let mut scene = Scene::new(bbox, SVG_WIDTH_PX);
    for (i, piece) in components.iter().enumerate() {
        let pts = piece.sample(a.samples)?;
        for z in &pts {
            serde_json::to_writer(
                &mut jsonl,
                &SampleLine {
                    component: i,
                    x: z.x,
                    y: z.y,
                },
            )
            .map_err(|e| CliError::Io(e.to_string()))?;
            jsonl.push(b'\n');
        }
        scene.polyline(pts, "curve");
    }
    for (at, label) in [(a.p, "P"), (a.q, "Q")] {
        scene.push(Drawable::SiteMarker {
            at,
            label: Some(label.into()),
        });
    }
    write_file(&a.out.join("locus.jsonl"), &jsonl)?;
    emit_svg(&scene, &a.out.join("locus.svg"))?;
    println!(
        "{} component(s), {} samples each, written to {}",
        components.len(),
        a.samples,
        a.out.display()
    );
    Ok(())
}

#[derive(Serialize)]
struct PieceEntry<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    family: angvor_core::bisector::Family,
    role: angvor_core::bisector::PieceRole,
    clip_range: [f64; 2],
    parameters: &'a Piece,
}

#[derive(Serialize)]
struct PiecesReport<'a> {
    #[serde(flatten)]
    provenance: Provenance,
    metric: Metric,
    sites: [sitefile::SiteEntry; 2],
    bbox: BBox,
    pieces: Vec<PieceEntry<'a>>,
}

fn entry(s: &Site) -> sitefile::SiteEntry {
    sitefile::SiteEntry {
        x: s.position.x,
        y: s.position.y,
        theta_deg: s.ray_direction.degrees(),
    }
}

fn bisector_scene(curve: &BisectorCurve) -> CliResult<Scene> {
    let mut scene = Scene::new(curve.bbox, SVG_WIDTH_PX);
    let step = curve.bbox.width().max(curve.bbox.height()) / 500.0;
    for bp in &curve.pieces {
        let style = match bp.role {
            angvor_core::bisector::PieceRole::Equidistant => "bisector",
            angvor_core::bisector::PieceRole::RegionBoundary => "construction",
        };
        scene.polyline(bp.piece.polyline(step)?, style);
    }
    let ray = 0.05 * curve.bbox.width();
    scene.site(&curve.site_p, Some("p"), ray);
    scene.site(&curve.site_q, Some("q"), ray);
    Ok(scene)
}

fn cmd_bisector(a: &BisectorArgs) -> CliResult {
    let loaded = SiteFile::read(&a.sites)?;
    let [p, q] = loaded.sites[..] else {
        return Err(CliError::Input(format!(
            "bisector needs exactly 2 sites, got {}",
            loaded.sites.len()
        )));
    };
    let opts = BisectorOptions {
        bbox: Some(loaded.working_box()),
        ..Default::default()
    };
    let curve = match Metric::from(a.metric) {
        Metric::SymmetricMin => symmetric_bisector_with(&p, &q, &opts)?,
        Metric::OrientedCcw => oriented_bisector_with(&p, &q, &opts)?,
    };
    ensure_dir(&a.out)?;
    let report = PiecesReport {
        provenance: PROVENANCE,
        metric: curve.metric,
        sites: [entry(&p), entry(&q)],
        bbox: curve.bbox,
        pieces: curve
            .pieces
            .iter()
            .map(|bp| {
                let r = bp.piece.param_range();
                PieceEntry {
                    kind: bp.piece.kind(),
                    family: bp.family,
                    role: bp.role,
                    clip_range: [r.lo, r.hi],
                    parameters: &bp.piece,
                }
            })
            .collect(),
    };
    write_json(&a.out.join("pieces.json"), &report)?;
    emit_svg(&bisector_scene(&curve)?, &a.out.join("bisector.svg"))?;
    println!(
        "{} piece(s) written to {}",
        report.pieces.len(),
        a.out.display()
    );
    Ok(())
}

#[derive(Serialize)]
struct VoronoiConfigEcho {
    metric: Metric,
    resolution: usize,
    tie_band: f64,
    bbox: BBox,
    sites: Vec<sitefile::SiteEntry>,
}

#[derive(Serialize)]
struct VoronoiReport {
    #[serde(flatten)]
    provenance: Provenance,
    config: VoronoiConfigEcho,
    faces: FaceReport,
}

fn cmd_voronoi(a: &VoronoiArgs) -> CliResult {
    let loaded: Loaded = SiteFile::read(&a.sites)?;
    if !(a.tie_band.is_finite() && a.tie_band >= 0.0) {
        return Err(CliError::Input("tie band must be >= 0".into()));
    }
    let bbox = loaded.working_box();
    let spec = GridSpec::new(bbox, a.resolution, a.resolution)?;
    let metric = Metric::from(a.metric);
    let labels = rasterize_voronoi_with(&loaded.sites, &spec, metric, a.tie_band, Exec::Parallel)?;
    ensure_dir(&a.out)?;
    emit_pgm(&labels, &a.out.join("labels.pgm"))?;
    if a.angf {
        for (i, s) in loaded.sites.iter().enumerate() {
            let field = rasterize_distance_with(s, &spec, metric, Exec::Parallel);
            emit_angf(&field, &a.out.join(format!("distance_{i}.angf")))?;
        }
    }
    let faces = count_faces(&labels, Connectivity::Four);
    let report = VoronoiReport {
        provenance: PROVENANCE,
        config: VoronoiConfigEcho {
            metric,
            resolution: a.resolution,
            tie_band: a.tie_band,
            bbox,
            sites: loaded.sites.iter().map(entry).collect(),
        },
        faces,
    };
    write_json(&a.out.join("faces.json"), &report)?;
    println!(
        "{} face(s), {} resolved, written to {}",
        report.faces.total_faces,
        report.faces.resolved_faces,
        a.out.display()
    );
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> CliResult {
    let d = VerifyConfig::default();
    let config = VerifyConfig {
        seed: a.seed.unwrap_or(d.seed),
        trials: a.trials.unwrap_or(d.trials),
        lines: a.lines.unwrap_or(d.lines),
        configs: a.configs.unwrap_or(d.configs),
        placements: a.placements.unwrap_or(d.placements),
        resolution: a.resolution.unwrap_or(d.resolution),
        tie_band: a.tie_band.unwrap_or(d.tie_band),
        ..d
    };
    let exec = Exec::Parallel;
    let (json, passed, summary) = match a.suite {
        SuiteArg::Loci => {
            let r = verify::verify_loci(&config, exec)?;
            let s = format!(
                "loci: difference {:.3e}, canonical {:.3e}, sum {:.3e}, foci {:.4}",
                r.max_difference_error,
                r.max_canonical_residual,
                r.max_sum_error,
                r.min_foci_separation
            );
            (to_json(&r)?, r.passed, s)
        }
        SuiteArg::Bisector => {
            let r = verify::verify_bisector(&config, exec)?;
            let s = format!(
                "bisector: curve->grid {:.3}, grid->curve {:.3} cell diagonals, residual {:.3e}",
                r.max_curve_to_grid, r.max_grid_to_curve, r.max_residual
            );
            (to_json(&r)?, r.passed, s)
        }
        SuiteArg::Faces => {
            let r = verify::verify_faces(&config, exec)?;
            let s = format!(
                "faces: max_faces {} over {} trials, crafted pair disconnected: {}",
                r.max_resolved_faces, config.trials, r.crafted.disconnected
            );
            (to_json(&r)?, r.passed, s)
        }
        SuiteArg::Crossings => {
            let r = verify::verify_crossings(&config, exec)?;
            let s = format!(
                "crossings: max_crossings {} over {} lines ({} rejected)",
                r.max_crossings, r.accepted_lines, r.rejected_lines
            );
            (to_json(&r)?, r.passed, s)
        }
        SuiteArg::All => {
            let r = verify::verify_all(&config, exec)?;
            let s = format!(
                "all: loci {}, bisector {}, faces {}, crossings {}",
                r.loci.passed, r.bisector.passed, r.faces.passed, r.crossings.passed
            );
            (to_json(&r)?, r.passed, s)
        }
    };
    ensure_dir(&a.out)?;
    write_file(&a.out.join("report.json"), json.as_bytes())?;
    println!("{summary}");
    if passed {
        println!("PASS");
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "verification failed, see {}",
            a.out.join("report.json").display()
        )))
    }
}

fn to_json<T: Serialize>(v: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn cmd_render(a: &RenderArgs) -> CliResult {
    ensure_dir(&a.out)?;
    match a.figure {
        FigureArg::Fig1 => {
            emit_svg(&figures::figure1_scene()?, &a.out.join("fig1.svg"))?;
            emit_pgm(&figures::figure1_labels()?, &a.out.join("fig1_labels.pgm"))?;
        }
        FigureArg::Fig2 => emit_svg(&figures::figure2_scene()?, &a.out.join("fig2.svg"))?,
    }
    Ok(())
}

fn configure_threads(threads: Option<usize>) -> CliResult {
    let Some(n) = threads else {
        return Ok(());
    };
    if n == 0 {
        return Err(CliError::Input("--threads must be at least 1".into()));
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    configure_threads(cli.threads)?;
    match &cli.command {
        Command::Locus(a) => cmd_locus(a),
        Command::Bisector(a) => cmd_bisector(a),
        Command::Voronoi(a) => cmd_voronoi(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Render(a) => cmd_render(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "angvor: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
