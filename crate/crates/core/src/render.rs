//! Deterministic SVG scenes.
//!
//! World coordinates have the y-axis pointing up; the flip to screen
//! coordinates happens once, in [`Scene::to_svg`]. Numbers are written with
//! nine significant digits and no element carries a generated id other than
//! the fixed `frame` clip path and `arrow` marker, so identical scenes give
//! identical bytes.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use crate::bisector::Piece;
use crate::geometry::{Angle, BBox, Point, Site};
use crate::oracle::LabelGrid;
use crate::{Error, Result};

/// Formats `v` with nine significant digits, trailing zeros removed.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    pub stroke: String,
    pub stroke_width: f64,
    pub fill: Option<String>,
    pub dash: Option<String>,
}

impl Style {
    pub fn stroke(color: &str, width: f64) -> Self {
        Style {
            stroke: color.to_string(),
            stroke_width: width,
            fill: None,
            dash: None,
        }
    }

    pub fn dashed(mut self, pattern: &str) -> Self {
        self.dash = Some(pattern.to_string());
        self
    }

    pub fn filled(mut self, color: &str) -> Self {
        self.fill = Some(color.to_string());
        self
    }

    fn attrs(&self) -> String {
        let mut s = format!(
            r#"stroke="{}" stroke-width="{}" fill="{}""#,
            self.stroke,
            fmt_num(self.stroke_width),
            self.fill.as_deref().unwrap_or("none")
        );
        if let Some(d) = &self.dash {
            let _ = write!(s, r#" stroke-dasharray="{d}""#);
        }
        s
    }
}

/// Named styles; widths are in output pixels.
#[derive(Debug, Clone, PartialEq)]
pub struct StyleTable {
    pub styles: BTreeMap<String, Style>,
    pub background: String,
}

impl Default for StyleTable {
    fn default() -> Self {
        let mut styles = BTreeMap::new();
        styles.insert(
            "site".into(),
            Style::stroke("#000000", 1.0).filled("#000000"),
        );
        styles.insert("ray".into(), Style::stroke("#000000", 1.0));
        styles.insert("curve".into(), Style::stroke("#000000", 1.5));
        styles.insert("bisector".into(), Style::stroke("#000000", 2.0));
        styles.insert("spiral".into(), Style::stroke("#808080", 0.75));
        styles.insert(
            "asymptote".into(),
            Style::stroke("#808080", 0.75).dashed("4 3"),
        );
        styles.insert("construction".into(), Style::stroke("#808080", 0.75));
        styles.insert("text".into(), Style::stroke("none", 0.0).filled("#000000"));
        StyleTable {
            styles,
            background: "#ffffff".into(),
        }
    }
}

impl StyleTable {
    fn get(&self, key: &str) -> Style {
        self.styles
            .get(key)
            .cloned()
            .unwrap_or_else(|| Style::stroke("#000000", 1.0))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Drawable {
    SiteMarker {
        at: Point,
        label: Option<String>,
    },
    RayArrow {
        from: Point,
        direction: Angle,
        length: f64,
    },
    Polyline {
        points: Vec<Point>,
        style: String,
    },
    /// Label raster drawn as filled row runs; labels without a colour are
    /// left blank.
    RasterUnderlay {
        grid: LabelGrid,
        colors: Vec<(u8, String)>,
    },
    Text {
        at: Point,
        text: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub bbox: BBox,
    pub width_px: u32,
    pub layers: Vec<Drawable>,
    pub style: StyleTable,
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl Scene {
    pub fn new(bbox: BBox, width_px: u32) -> Self {
        Scene {
            bbox,
            width_px,
            layers: Vec::new(),
            style: StyleTable::default(),
        }
    }

    pub fn push(&mut self, d: Drawable) -> &mut Self {
        self.layers.push(d);
        self
    }

    pub fn polyline(&mut self, points: Vec<Point>, style: &str) -> &mut Self {
        self.push(Drawable::Polyline {
            points,
            style: style.to_string(),
        })
    }

    pub fn site(&mut self, s: &Site, label: Option<&str>, ray_length: f64) -> &mut Self {
        self.push(Drawable::RayArrow {
            from: s.position,
            direction: s.ray_direction,
            length: ray_length,
        });
        self.push(Drawable::SiteMarker {
            at: s.position,
            label: label.map(str::to_string),
        })
    }

    fn px_scale(&self) -> f64 {
        self.width_px as f64 / self.bbox.width()
    }

    pub fn height_px(&self) -> u32 {
        (self.bbox.height() * self.px_scale()).round() as u32
    }

    fn to_px(&self, p: Point) -> (f64, f64) {
        let k = self.px_scale();
        ((p.x - self.bbox.xmin) * k, (self.bbox.ymax - p.y) * k)
    }

    fn xy(&self, p: Point) -> String {
        let (x, y) = self.to_px(p);
        format!("{},{}", fmt_num(x), fmt_num(y))
    }

    pub fn to_svg(&self) -> String {
        let (w, h) = (self.width_px, self.height_px());
        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        );
        let _ = writeln!(
            s,
            r#"<rect x="0" y="0" width="{w}" height="{h}" fill="{}"/>"#,
            self.style.background
        );
        if !self.layers.is_empty() {
            let _ = writeln!(
                s,
                r#"<defs><clipPath id="frame"><rect x="0" y="0" width="{w}" height="{h}"/></clipPath><marker id="arrow" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto" markerUnits="userSpaceOnUse"><path d="M0,0 L8,4 L0,8 z" fill="{}"/></marker></defs>"#,
                self.style.get("ray").stroke
            );
            s.push_str("<g clip-path=\"url(#frame)\">\n");
            for d in &self.layers {
                self.write_drawable(&mut s, d);
            }
            s.push_str("</g>\n");
        }
        s.push_str("</svg>\n");
        s
    }

    fn write_drawable(&self, s: &mut String, d: &Drawable) {
        match d {
            Drawable::SiteMarker { at, label } => {
                let (x, y) = self.to_px(*at);
                let st = self.style.get("site");
                let _ = writeln!(
                    s,
                    r#"<circle cx="{}" cy="{}" r="3" {}/>"#,
                    fmt_num(x),
                    fmt_num(y),
                    st.attrs()
                );
                if let Some(l) = label {
                    let _ = writeln!(
                        s,
                        r#"<text x="{}" y="{}" font-family="serif" font-size="14" fill="{}">{}</text>"#,
                        fmt_num(x + 5.0),
                        fmt_num(y - 5.0),
                        self.style.get("text").fill.unwrap_or_default(),
                        escape(l)
                    );
                }
            }
            Drawable::RayArrow {
                from,
                direction,
                length,
            } => {
                let to = *from + Point::from_angle(*direction) * *length;
                let _ = writeln!(
                    s,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}" {} marker-end="url(#arrow)"/>"#,
                    fmt_num(self.to_px(*from).0),
                    fmt_num(self.to_px(*from).1),
                    fmt_num(self.to_px(to).0),
                    fmt_num(self.to_px(to).1),
                    self.style.get("ray").attrs()
                );
            }
            Drawable::Polyline { points, style } => {
                if points.len() < 2 {
                    return;
                }
                let pts: Vec<String> = points.iter().map(|p| self.xy(*p)).collect();
                let _ = writeln!(
                    s,
                    r#"<polyline points="{}" {} stroke-linejoin="round"/>"#,
                    pts.join(" "),
                    self.style.get(style).attrs()
                );
            }
            Drawable::RasterUnderlay { grid, colors } => {
                let spec = grid.spec;
                let k = self.px_scale();
                let (cw, ch) = (spec.dx() * k, spec.dy() * k);
                let color_of = |l: u8| {
                    colors
                        .iter()
                        .find(|(c, _)| *c == l)
                        .map(|(_, c)| c.as_str())
                };
                for (j, row) in grid.rows().enumerate() {
                    let mut i = 0;
                    while i < row.len() {
                        let l = row[i];
                        let start = i;
                        while i < row.len() && row[i] == l {
                            i += 1;
                        }
                        if let Some(color) = color_of(l) {
                            let (x, y) = self.to_px(Point::new(
                                spec.bbox.xmin + start as f64 * spec.dx(),
                                spec.bbox.ymin + (j + 1) as f64 * spec.dy(),
                            ));
                            let _ = writeln!(
                                s,
                                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{color}" stroke="none"/>"#,
                                fmt_num(x),
                                fmt_num(y),
                                fmt_num((i - start) as f64 * cw),
                                fmt_num(ch)
                            );
                        }
                    }
                }
            }
            Drawable::Text { at, text } => {
                let (x, y) = self.to_px(*at);
                let _ = writeln!(
                    s,
                    r#"<text x="{}" y="{}" font-family="serif" font-size="14" fill="{}">{}</text>"#,
                    fmt_num(x),
                    fmt_num(y),
                    self.style.get("text").fill.unwrap_or_default(),
                    escape(text)
                );
            }
        }
    }
}

pub fn emit_svg(scene: &Scene, path: &Path) -> io::Result<()> {
    fs::write(path, scene.to_svg())
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

/// Archimedean spiral `r = c·α` around the site, starting along its ray:
/// the point at turn `α` is `position + c·α·(cos(θ + α), sin(θ + α))`.
///
/// Sampling is uniform in `α` with `pts_per_turn` points per full turn, plus
/// a geometric run of extra samples near `α = 0` so that the first segment
/// leaves the site within 1e−3 rad of the ray direction.
pub fn spiral_polyline(
    s: &Site,
    max_angle: Angle,
    pts_per_turn: usize,
    c: f64,
) -> Result<Vec<Point>> {
    let max = max_angle.radians();
    if !(max > 0.0 && max <= 2.0 * TAU) {
        return Err(Error::InvalidParameter(format!(
            "spiral angle must lie in (0, 4π], got {max}"
        )));
    }
    if pts_per_turn < 32 {
        return Err(Error::InvalidParameter(format!(
            "need at least 32 points per turn, got {pts_per_turn}"
        )));
    }
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "spiral scale must be positive, got {c}"
        )));
    }
    let n = ((max / TAU) * pts_per_turn as f64).ceil().max(1.0) as usize;
    let step = max / n as f64;
    let mut alphas = vec![0.0];
    let mut head = Vec::new();
    let mut a = step;
    while a > 5e-4 {
        a *= 0.5;
        head.push(a);
    }
    alphas.extend(head.into_iter().rev());
    alphas.extend((1..=n).map(|k| if k == n { max } else { step * k as f64 }));
    let theta = s.ray_direction.radians();
    Ok(alphas
        .into_iter()
        .map(|a| {
            let (sin, cos) = (theta + a).sin_cos();
            s.position + Point::new(cos, sin) * (c * a)
        })
        .collect())
}

pub fn curve_to_polyline(piece: &Piece, n: usize) -> Result<Vec<Point>> {
    piece.sample(n)
}
