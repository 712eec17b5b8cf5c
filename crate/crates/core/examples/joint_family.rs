//! Walks the joint circle: every u in [-1, 1] gives a different biarc with
//! the same end conditions.

use biarcs::{build_biarc, G1Pair, JointFrame, Vec2};

fn main() -> biarcs::Result<()> {
    let pair = G1Pair::new(
        Vec2::ZERO,
        Vec2::from_angle(60f64.to_radians()),
        Vec2::new(10.0, 0.0),
        Vec2::from_angle(-20f64.to_radians()),
    )?;
    let frame = JointFrame::new(&pair)?;
    println!(
        "psi = {:.2}°, joint circle radius {:.4}",
        frame.psi().to_degrees(),
        frame.radius().unwrap()
    );
    println!(
        "{:>6} {:>18} {:>10} {:>10} {:>9}",
        "u", "joint", "R_A", "R_B", "length"
    );
    for k in -4..=4 {
        let u = k as f64 / 5.0;
        let b = build_biarc(&pair, u)?;
        let r = |s: biarcs::ArcSegment| s.radius().map_or("line".into(), |r| format!("{r:.3}"));
        println!(
            "{u:>6.2} ({:>7.3}, {:>7.3}) {:>10} {:>10} {:>9.4}",
            b.joint.x,
            b.joint.y,
            r(b.first),
            r(b.second),
            b.length()
        );
        // the chord maps back to the same parameter
        assert!((frame.param_of_chord(b.chord_a)? - u).abs() < 1e-9);
    }
    Ok(())
}
