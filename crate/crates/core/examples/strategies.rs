//! Compares the joint selection strategies on two pairs, including fallbacks.

use biarcs::strategy::{select, Side};
use biarcs::{G1Pair, StrategyKind, StrategySpec, Vec2};

fn report(name: &str, pair: &G1Pair) -> biarcs::Result<()> {
    println!("== {name}");
    let mut specs: Vec<StrategySpec> = StrategyKind::ALL
        .into_iter()
        .filter(|k| *k != StrategyKind::CurvatureConstrained)
        .map(StrategySpec::new)
        .collect();
    specs.push(StrategySpec::curvature(20.0, Side::Start));

    for spec in &specs {
        let res = select(pair, spec)?;
        let b = &res.biarc;
        let r = |s: biarcs::ArcSegment| s.radius().map_or("line".into(), |r| format!("{r:.3}"));
        println!(
            "{:<24} -> {:<14} u = {:>8.4}  R_A = {:>9}  R_B = {:>9}",
            spec.kind.to_string(),
            res.applied.to_string(),
            res.u,
            r(b.first),
            r(b.second)
        );
        for d in &res.diagnostics {
            println!("    {d}");
        }
    }
    Ok(())
}

fn main() -> biarcs::Result<()> {
    let north_west = G1Pair::new(Vec2::ZERO, Vec2::Y, Vec2::new(-200.0, 0.0), -Vec2::X)?;
    report("north to west", &north_west)?;
    let s_curve = G1Pair::new(
        Vec2::ZERO,
        Vec2::from_angle(0.8),
        Vec2::new(60.0, 10.0),
        Vec2::from_angle(0.3),
    )?;
    report("gentle S", &s_curve)
}
