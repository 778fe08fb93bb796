use std::path::Path;
use std::process::{Command, Output};

fn angvor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_angvor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

const MIRROR: &str = r#"{"sites":[{"x":-1,"y":0,"theta_deg":0},{"x":1,"y":0,"theta_deg":180}]}"#;

#[test]
fn difference_locus_samples_the_unit_hyperbola() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d");
    let o = angvor(&[
        "locus",
        "diff",
        "--p",
        "1,1",
        "--q",
        "-1,-1",
        "--angle",
        "90",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success(), "{o:?}");
    let text = std::fs::read_to_string(out.join("locus.jsonl")).unwrap();
    let mut n = 0;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let (x, y) = (v["x"].as_f64().unwrap(), v["y"].as_f64().unwrap());
        assert!(x > 0.0 && (x * y - 1.0).abs() < 1e-9);
        n += 1;
    }
    assert_eq!(n, 2000);
    assert!(std::fs::read_to_string(out.join("locus.svg"))
        .unwrap()
        .starts_with("<?xml"));
}

#[test]
fn sum_locus_samples_the_unit_semicircle() {
    let dir = tempfile::tempdir().unwrap();
    let o = angvor(&[
        "locus",
        "sum",
        "--p",
        "-1,0",
        "--q",
        "1,0",
        "--angle",
        "90",
        "--out",
        s(dir.path()),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.path().join("locus.jsonl")).unwrap();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let (x, y) = (v["x"].as_f64().unwrap(), v["y"].as_f64().unwrap());
        assert!((x.hypot(y) - 1.0).abs() < 1e-12 && y > -1e-12);
    }
}

#[test]
fn out_of_domain_angle_exits_2_with_one_line() {
    let dir = tempfile::tempdir().unwrap();
    let o = angvor(&[
        "locus",
        "diff",
        "--p",
        "1,1",
        "--q",
        "-1,-1",
        "--angle",
        "180",
        "--out",
        s(dir.path()),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        String::from_utf8(o.stderr)
            .unwrap()
            .trim_end()
            .lines()
            .count(),
        1
    );
}

#[test]
fn mirror_bisector_has_axis_and_segment() {
    let dir = tempfile::tempdir().unwrap();
    let sites = dir.path().join("sites.json");
    std::fs::write(&sites, MIRROR).unwrap();
    let o = angvor(&[
        "bisector",
        "--sites",
        s(&sites),
        "--metric",
        "sym",
        "--out",
        s(dir.path()),
    ]);
    assert!(o.status.success(), "{o:?}");
    let r = json(&dir.path().join("pieces.json"));
    let pieces = r["pieces"].as_array().unwrap();
    let vertical = pieces.iter().any(|p| {
        p["type"] == "line"
            && p["parameters"]["anchor"]["x"].as_f64() == Some(0.0)
            && (p["parameters"]["direction"].as_f64().unwrap().abs() - std::f64::consts::FRAC_PI_2)
                .abs()
                < 1e-12
    });
    let segment = pieces.iter().any(|p| {
        let r = &p["clip_range"];
        p["type"] == "line"
            && p["parameters"]["direction"].as_f64() == Some(0.0)
            && r[0].as_f64().unwrap() < 1e-9
            && (r[1].as_f64().unwrap() - 2.0).abs() < 1e-9
    });
    assert!(vertical && segment, "{pieces:?}");
    assert_eq!(r["tool"], "angvor");
    assert!(dir.path().join("bisector.svg").exists());
}

#[test]
fn bisector_needs_two_sites() {
    let dir = tempfile::tempdir().unwrap();
    let sites = dir.path().join("one.json");
    std::fs::write(&sites, r#"{"sites":[{"x":0,"y":0,"theta_deg":0}]}"#).unwrap();
    let o = angvor(&["bisector", "--sites", s(&sites), "--out", s(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_site_file_exits_2_and_missing_file_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"sites":[{"x":0,"y":0,"theta_deg":0},{"x":0,"y":0,"theta_deg":1}]}"#,
    )
    .unwrap();
    let o = angvor(&["voronoi", "--sites", s(&bad), "--out", s(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    let o = angvor(&["voronoi", "--sites", s(&missing), "--out", s(dir.path())]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn voronoi_writes_labels_faces_and_fields() {
    let dir = tempfile::tempdir().unwrap();
    let sites = dir.path().join("sites.json");
    std::fs::write(&sites, MIRROR).unwrap();
    let o = angvor(&[
        "voronoi",
        "--sites",
        s(&sites),
        "--resolution",
        "64",
        "--angf",
        "--out",
        s(dir.path()),
    ]);
    assert!(o.status.success(), "{o:?}");
    let pgm = std::fs::read(dir.path().join("labels.pgm")).unwrap();
    assert!(pgm.starts_with(b"P5\n64 64\n255\n"));
    assert_eq!(pgm.len(), b"P5\n64 64\n255\n".len() + 64 * 64);
    let r = json(&dir.path().join("faces.json"));
    assert_eq!(r["config"]["resolution"], 64);
    assert_eq!(r["faces"]["connectivity"], "four");
    for i in 0..2 {
        let f = std::fs::read(dir.path().join(format!("distance_{i}.angf"))).unwrap();
        assert_eq!(&f[..4], b"ANGF");
        assert_eq!(f.len(), 44 + 4 * 64 * 64);
    }
}

#[test]
fn verify_report_echoes_config_and_repeats_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let args = [
        "verify",
        "crossings",
        "--seed",
        "7",
        "--lines",
        "400",
        "--configs",
        "4",
    ];
    let o = angvor(&[&["--threads", "1"], &args[..], &["--out", s(&a)]].concat());
    assert!(o.status.success(), "{o:?}");
    let o = angvor(&[&["--threads", "3"], &args[..], &["--out", s(&b)]].concat());
    assert!(o.status.success());
    let ra = std::fs::read(a.join("report.json")).unwrap();
    assert_eq!(ra, std::fs::read(b.join("report.json")).unwrap());
    let r: serde_json::Value = serde_json::from_slice(&ra).unwrap();
    assert_eq!(r["header"]["seed"], 7);
    assert_eq!(r["header"]["config"]["lines"], 400);
    assert_eq!(r["accepted_lines"], 400);
    assert!(r["max_crossings"].as_u64().unwrap() <= 3);
}

#[test]
fn failed_verification_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let o = angvor(&[
        "verify",
        "faces",
        "--resolution",
        "8",
        "--trials",
        "3",
        "--out",
        s(dir.path()),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&dir.path().join("report.json"))["passed"], false);
}

#[test]
fn rendered_figures_match_the_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden");
    for fig in ["fig1", "fig2"] {
        let o = angvor(&["render", fig, "--out", s(dir.path())]);
        assert!(o.status.success());
        let name = format!("{fig}.svg");
        assert!(
            std::fs::read(dir.path().join(&name)).unwrap()
                == std::fs::read(golden.join(&name)).unwrap()
        );
    }
    assert!(
        std::fs::read(dir.path().join("fig1_labels.pgm")).unwrap()
            == std::fs::read(golden.join("fig1_labels.pgm")).unwrap()
    );
}

#[test]
fn unsigned_difference_covers_both_branches() {
    let dir = tempfile::tempdir().unwrap();
    let o = angvor(&[
        "locus",
        "diff",
        "--p",
        "1,1",
        "--q",
        "-1,-1",
        "--angle",
        "-90",
        "--unsigned",
        "--samples",
        "50",
        "--out",
        s(dir.path()),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.path().join("locus.jsonl")).unwrap();
    let xs: Vec<f64> = text
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["x"]
                .as_f64()
                .unwrap()
        })
        .collect();
    assert_eq!(xs.len(), 200);
    assert!(xs.iter().any(|&x| x > 0.0) && xs.iter().any(|&x| x < 0.0));
}
