//! Writes the h-δ oracle table to `tests/golden/h_delta_oracle.json`.

#[path = "../tests/support/h_delta.rs"]
mod h_delta;

fn main() -> std::io::Result<()> {
    let report = h_delta::run();
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/golden/h_delta_oracle.json"
    );
    std::fs::write(path, h_delta::to_json(&report))?;
    println!(
        "max |(mu - nu) - (pi - 2 atan(1/h))| = {:e}",
        report.max_outer_deviation
    );
    println!(
        "max relative error of tan(fitted delta / 2) against h = {:e}",
        report.max_fitted_h_relative_error
    );
    println!(
        "inner half, max deviation from the supplement = {:e}",
        report.max_inner_deviation_from_supplement
    );
    Ok(())
}
