//! Smooths a sharp 13-vertex outline with each strategy and counts fallbacks.

use biarcs::{assign_tangents, fit_spline, Polyline, StrategyKind, StrategySpec, Vec2};

const W: [(f64, f64); 13] = [
    (0.0, 100.0),
    (18.0, 100.0),
    (32.0, 35.0),
    (44.0, 75.0),
    (56.0, 75.0),
    (68.0, 35.0),
    (82.0, 100.0),
    (100.0, 100.0),
    (76.0, 0.0),
    (60.0, 0.0),
    (50.0, 45.0),
    (40.0, 0.0),
    (24.0, 0.0),
];

fn main() -> biarcs::Result<()> {
    let poly = Polyline::new(W.iter().map(|&(x, y)| Vec2::new(x, y)).collect(), true)?;
    let tangents = assign_tangents(&poly)?;
    for kind in [
        StrategyKind::EqualChord,
        StrategyKind::ParallelTangent,
        StrategyKind::JShaped,
        StrategyKind::CubicMidpoint,
    ] {
        let s = fit_spline(&poly, &tangents, &StrategySpec::new(kind))?;
        println!(
            "{:<18} segments {:>2}  fallbacks {:>2}  length {:8.3}  max junction error {:.1e}",
            kind.to_string(),
            s.segments.len(),
            s.fallback_count(),
            s.total_length,
            s.max_junction_error()
        );
    }
    Ok(())
}
