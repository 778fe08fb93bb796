use std::path::Path;

use angvor_core::{BBox, Point, Site};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteEntry {
    pub x: f64,
    pub y: f64,
    pub theta_deg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteFile {
    pub sites: Vec<SiteEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bbox: Option<[f64; 4]>,
}

/// Validated contents of a site file.
#[derive(Debug, Clone, PartialEq)]
pub struct Loaded {
    pub sites: Vec<Site>,
    pub bbox: Option<BBox>,
}

impl SiteFile {
    pub fn read(path: &Path) -> Result<Loaded, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let file: SiteFile = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        file.validate()
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn validate(&self) -> Result<Loaded, String> {
        if self.sites.is_empty() {
            return Err("site file lists no sites".into());
        }
        let mut sites = Vec::with_capacity(self.sites.len());
        for (i, s) in self.sites.iter().enumerate() {
            let site =
                Site::from_degrees(s.x, s.y, s.theta_deg).map_err(|e| format!("site {i}: {e}"))?;
            if let Some(j) = sites
                .iter()
                .position(|o: &Site| o.position == site.position)
            {
                return Err(format!("sites {j} and {i} share a position"));
            }
            sites.push(site);
        }
        let bbox = match self.bbox {
            Some([xmin, ymin, xmax, ymax]) => {
                Some(BBox::new(xmin, ymin, xmax, ymax).map_err(|e| format!("bbox: {e}"))?)
            }
            None => None,
        };
        Ok(Loaded { sites, bbox })
    }
}

impl Loaded {
    /// The file's box, or a square of half-width five site-set diameters
    /// around the centre of the sites' bounding rectangle.
    pub fn working_box(&self) -> BBox {
        if let Some(b) = self.bbox {
            return b;
        }
        let xs = self.sites.iter().map(|s| s.position.x);
        let ys = self.sites.iter().map(|s| s.position.y);
        let (xmin, xmax) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), x| {
            (a.min(x), b.max(x))
        });
        let (ymin, ymax) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), y| {
            (a.min(y), b.max(y))
        });
        let mut diameter = 0.0_f64;
        for a in &self.sites {
            for b in &self.sites {
                diameter = diameter.max(a.position.distance(b.position));
            }
        }
        let half = if diameter > 0.0 { 5.0 * diameter } else { 1.0 };
        BBox::centered(Point::new(0.5 * (xmin + xmax), 0.5 * (ymin + ymax)), half)
    }
}
