//! Raster file formats.
//!
//! * Label rasters are binary PGM (`P5`, maxval 255). Pixel values are the
//!   labels themselves (255 = tie). Image rows run top to bottom, so the
//!   first row written is the grid row at `ymax`.
//! * Distance fields use the `ANGF` format, all little-endian:
//!
//!   | offset | size      | content                                  |
//!   |--------|-----------|------------------------------------------|
//!   | 0      | 4         | magic `ANGF`                             |
//!   | 4      | 4         | width, `u32`                             |
//!   | 8      | 4         | height, `u32`                            |
//!   | 12     | 32        | `xmin, ymin, xmax, ymax`, `f64` each     |
//!   | 44     | 4·w·h     | cells as `f32`, grid order (row 0 = ymin)|

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::geometry::BBox;
use crate::oracle::{DistanceGrid, GridSpec, LabelGrid, RasterGrid};

pub const ANGF_MAGIC: &[u8; 4] = b"ANGF";
const ANGF_HEADER: usize = 44;

fn with_path(path: &Path, e: io::Error) -> io::Error {
    io::Error::new(e.kind(), format!("{}: {e}", path.display()))
}

pub fn pgm_bytes(grid: &LabelGrid) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", grid.spec.width, grid.spec.height).into_bytes();
    out.reserve(grid.cells.len());
    for row in grid.rows().rev() {
        out.extend_from_slice(row);
    }
    out
}

pub fn emit_pgm(grid: &LabelGrid, path: &Path) -> io::Result<()> {
    fs::write(path, pgm_bytes(grid)).map_err(|e| with_path(path, e))
}

/// Parses a `P5` file written by [`emit_pgm`]. The box is not stored in PGM
/// and must be supplied.
pub fn parse_pgm(bytes: &[u8], bbox: BBox) -> io::Result<LabelGrid> {
    let bad = |m: &str| io::Error::new(io::ErrorKind::InvalidData, m.to_string());
    let mut fields = Vec::new();
    let mut pos = 0;
    while fields.len() < 4 {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(bad("truncated PGM header"));
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| bad("bad PGM header"))?);
    }
    if fields[0] != "P5" || fields[3] != "255" {
        return Err(bad("expected P5 with maxval 255"));
    }
    let w: usize = fields[1].parse().map_err(|_| bad("bad width"))?;
    let h: usize = fields[2].parse().map_err(|_| bad("bad height"))?;
    let data = &bytes[pos + 1..];
    if data.len() != w * h {
        return Err(bad("pixel data length mismatch"));
    }
    let spec = GridSpec::new(bbox, w, h).map_err(|e| bad(&e.to_string()))?;
    let mut cells = Vec::with_capacity(w * h);
    for row in data.chunks(w).rev() {
        cells.extend_from_slice(row);
    }
    Ok(RasterGrid { spec, cells })
}

pub fn angf_bytes(grid: &DistanceGrid) -> Vec<u8> {
    let mut out = Vec::with_capacity(ANGF_HEADER + 4 * grid.cells.len());
    out.extend_from_slice(ANGF_MAGIC);
    out.extend_from_slice(&(grid.spec.width as u32).to_le_bytes());
    out.extend_from_slice(&(grid.spec.height as u32).to_le_bytes());
    for v in grid.spec.bbox.as_array() {
        out.extend_from_slice(&v.to_le_bytes());
    }
    for &c in &grid.cells {
        out.extend_from_slice(&(c as f32).to_le_bytes());
    }
    out
}

pub fn emit_angf(grid: &DistanceGrid, path: &Path) -> io::Result<()> {
    let mut f = fs::File::create(path).map_err(|e| with_path(path, e))?;
    f.write_all(&angf_bytes(grid))
        .map_err(|e| with_path(path, e))
}

pub fn parse_angf(bytes: &[u8]) -> io::Result<DistanceGrid> {
    let bad = |m: &str| io::Error::new(io::ErrorKind::InvalidData, m.to_string());
    if bytes.len() < ANGF_HEADER || &bytes[..4] != ANGF_MAGIC {
        return Err(bad("not an ANGF file"));
    }
    let u32_at = |o: usize| u32::from_le_bytes(bytes[o..o + 4].try_into().unwrap()) as usize;
    let f64_at = |o: usize| f64::from_le_bytes(bytes[o..o + 8].try_into().unwrap());
    let (w, h) = (u32_at(4), u32_at(8));
    let bbox = BBox::new(f64_at(12), f64_at(20), f64_at(28), f64_at(36))
        .map_err(|e| bad(&e.to_string()))?;
    let body = &bytes[ANGF_HEADER..];
    if body.len() != 4 * w * h {
        return Err(bad("cell data length mismatch"));
    }
    let spec = GridSpec::new(bbox, w, h).map_err(|e| bad(&e.to_string()))?;
    let cells = body
        .chunks_exact(4)
        .map(|c| f32::from_le_bytes(c.try_into().unwrap()) as f64)
        .collect();
    Ok(RasterGrid { spec, cells })
}
