use angvor_core::figures;
use angvor_core::raster_io::{parse_pgm, pgm_bytes};

#[test]
fn figure1_svg_is_byte_identical() {
    let svg = figures::figure1_scene().unwrap().to_svg();
    assert!(svg.as_bytes() == include_bytes!("golden/fig1.svg"));
}

#[test]
fn figure2_svg_is_byte_identical() {
    let svg = figures::figure2_scene().unwrap().to_svg();
    assert!(svg.as_bytes() == include_bytes!("golden/fig2.svg"));
}

#[test]
fn figure1_labels_pgm_is_byte_identical() {
    let bytes = pgm_bytes(&figures::figure1_labels().unwrap());
    assert!(bytes == include_bytes!("golden/fig1_labels.pgm"));
}

#[test]
fn committed_pgm_parses_back() {
    let grid = parse_pgm(
        include_bytes!("golden/fig1_labels.pgm"),
        figures::figure1_box(),
    )
    .unwrap();
    assert_eq!(grid, figures::figure1_labels().unwrap());
}
