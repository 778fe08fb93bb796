//! The two reference scenes: a two-site diagram whose region of `p` is
//! disconnected, and the constant-difference hyperbola in its canonical
//! position.

use crate::bisector::{symmetric_bisector_with, BisectorOptions, Piece};
use crate::exec::Exec;
use crate::geometry::{Angle, BBox, Metric, Point, Site};
use crate::loci::{difference_locus_components, DifferenceLocus, Interval, LinearPiece};
use crate::oracle::{rasterize_voronoi_with, GridSpec, LabelGrid};
use crate::render::{spiral_polyline, Drawable, Scene};
use crate::Result;

pub const FIGURE_WIDTH_PX: u32 = 600;
/// Resolution of the label underlay of the first figure.
pub const UNDERLAY_RESOLUTION: usize = 150;
pub const UNDERLAY_TIE_BAND: f64 = 1e-2;

/// A pair whose symmetric Voronoi region of `p` has two components.
pub fn disconnected_pair() -> (Site, Site) {
    (
        Site::from_degrees(-1.0, 0.0, 90.0).expect("finite"),
        Site::from_degrees(1.0, 0.0, 105.0).expect("finite"),
    )
}

pub fn figure1_box() -> BBox {
    BBox::centered(Point::ORIGIN, 3.0)
}

pub fn figure1_labels() -> Result<LabelGrid> {
    let (p, q) = disconnected_pair();
    let spec = GridSpec::new(figure1_box(), UNDERLAY_RESOLUTION, UNDERLAY_RESOLUTION)?;
    rasterize_voronoi_with(
        &[p, q],
        &spec,
        Metric::SymmetricMin,
        UNDERLAY_TIE_BAND,
        Exec::Sequential,
    )
}

/// Sites with their rays, one turn of the angle spiral around each site,
/// the symmetric bisector, and the region of `p` shaded from a coarse
/// label raster.
pub fn figure1_scene() -> Result<Scene> {
    let (p, q) = disconnected_pair();
    let bbox = figure1_box();
    let mut scene = Scene::new(bbox, FIGURE_WIDTH_PX);
    scene.push(Drawable::RasterUnderlay {
        grid: figure1_labels()?,
        colors: vec![(0, "#d9d9d9".into())],
    });
    let c = 0.8 / std::f64::consts::TAU;
    for s in [&p, &q] {
        scene.polyline(
            spiral_polyline(s, Angle::from_radians(std::f64::consts::TAU), 64, c)?,
            "spiral",
        );
    }
    let curve = symmetric_bisector_with(
        &p,
        &q,
        &BisectorOptions {
            bbox: Some(bbox),
            ..Default::default()
        },
    )?;
    for bp in curve.equidistant_pieces() {
        scene.polyline(bp.piece.polyline(0.02)?, "bisector");
    }
    scene.site(&p, Some("p"), 0.5);
    scene.site(&q, Some("q"), 0.5);
    Ok(scene)
}

pub fn figure2_box() -> BBox {
    BBox::centered(Point::ORIGIN, 4.0)
}

/// `P = (1, 1)`, `Q = (−1, −1)`, difference `π/2`: the branch of `y = 1/x`
/// through `P` with the coordinate axes as asymptotes, and one apex
/// triangle.
pub fn figure2_scene() -> Result<Scene> {
    let (p, q) = (Point::new(1.0, 1.0), Point::new(-1.0, -1.0));
    let bbox = figure2_box();
    let mut scene = Scene::new(bbox, FIGURE_WIDTH_PX);
    let mut asymptotes_drawn = false;
    for comp in difference_locus_components(p, q, Angle::from_radians(std::f64::consts::FRAC_PI_2))?
    {
        let DifferenceLocus::Hyperbola(arc) = comp else {
            continue;
        };
        if !asymptotes_drawn {
            for (o, dir) in arc.asymptotes() {
                let line = LinearPiece::new(o, dir, Interval::UNBOUNDED);
                if let Some(b) = Piece::Line(line).bounded_in(&bbox) {
                    scene.polyline(b.sample(2)?, "asymptote");
                }
            }
            asymptotes_drawn = true;
        }
        if let Some(b) = Piece::Hyperbola(arc).bounded_in(&bbox) {
            scene.polyline(b.polyline(0.02)?, "curve");
        }
    }
    let z = Point::new(2.0, 0.5);
    scene.polyline(vec![q, p, z, q], "construction");
    scene.push(Drawable::SiteMarker {
        at: p,
        label: Some("P".into()),
    });
    scene.push(Drawable::SiteMarker {
        at: q,
        label: Some("Q".into()),
    });
    scene.push(Drawable::SiteMarker {
        at: z,
        label: Some("Z".into()),
    });
    Ok(scene)
}
