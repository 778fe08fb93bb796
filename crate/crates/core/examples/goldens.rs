//! Regenerates the committed reference scenes in `tests/golden/`.

use angvor_core::figures;
use angvor_core::raster_io::pgm_bytes;
use std::path::Path;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("fig1.svg"), figures::figure1_scene()?.to_svg())?;
    std::fs::write(dir.join("fig2.svg"), figures::figure2_scene()?.to_svg())?;
    std::fs::write(
        dir.join("fig1_labels.pgm"),
        pgm_bytes(&figures::figure1_labels()?),
    )?;
    println!("wrote goldens to {}", dir.display());
    Ok(())
}
