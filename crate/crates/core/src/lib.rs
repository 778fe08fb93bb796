//! Rotating-ray angular distances and their bisectors.
//!
//! Every site carries a fixed ray; the distance from a site to a point is
//! the angle the ray has to turn to face that point. This crate provides
//!
//! * the two distance functions and the basic plane geometry ([`geometry`]),
//! * analytic loci of constant base-angle sum (circular arcs) and constant
//!   base-angle difference (rectangular hyperbolae) ([`loci`]),
//! * two-site bisectors under both distances ([`bisector`]),
//! * a brute-force raster oracle used to check all of the above ([`oracle`]),
//! * deterministic SVG/PGM output ([`render`], [`raster_io`]) and the
//!   property suites behind `angvor verify` ([`verify`]).

pub mod bisector;
pub mod exec;
pub mod figures;
pub mod geometry;
pub mod loci;
pub mod oracle;
pub mod raster_io;
pub mod render;
pub mod verify;

pub use exec::Exec;
pub use geometry::{
    apply_transform, ccw_distance, invert_transform, polar_angle, sym_distance,
    triangle_base_angles, wrap_ccw, wrap_signed, Angle, BBox, Metric, Point, SimilarityTransform,
    Site,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-finite input")]
    NonFinite,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unbounded curve must be clipped before sampling")]
    NeedsClipping,
    #[error("line contains a positive-length piece of the bisector")]
    RejectedLine,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
