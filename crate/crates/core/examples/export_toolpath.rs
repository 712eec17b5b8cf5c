//! Fits a rounded rectangle and writes it as an arc list, SVG and G-code.
//!
//! ```text
//! cargo run --example export_toolpath -- /tmp/plate
//! ```
//! writes `/tmp/plate.json`, `/tmp/plate.svg` and `/tmp/plate.nc`; without an
//! argument the G-code goes to standard output.

use biarcs::io::{emit_arcjson, emit_gcode, emit_svg};
use biarcs::{assign_tangents, fit_spline, Polyline, StrategyKind, StrategySpec, Vec2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let outline = [
        (0.0, 0.0),
        (40.0, 0.0),
        (60.0, 10.0),
        (60.0, 30.0),
        (40.0, 40.0),
        (0.0, 40.0),
        (-10.0, 20.0),
    ];
    let poly = Polyline::new(
        outline.iter().map(|&(x, y)| Vec2::new(x, y)).collect(),
        true,
    )?;
    let tangents = assign_tangents(&poly)?;
    let spline = fit_spline(
        &poly,
        &tangents,
        &StrategySpec::new(StrategyKind::CubicMidpoint),
    )?;

    match std::env::args().nth(1) {
        Some(stem) => {
            std::fs::write(format!("{stem}.json"), emit_arcjson(&spline, 6))?;
            std::fs::write(format!("{stem}.svg"), emit_svg(&spline, 6))?;
            std::fs::write(format!("{stem}.nc"), emit_gcode(&spline, 4))?;
            println!("wrote {stem}.json, {stem}.svg, {stem}.nc");
        }
        None => print!("{}", emit_gcode(&spline, 4)),
    }
    Ok(())
}
