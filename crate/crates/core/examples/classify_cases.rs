//! One pair for each geometric case, with the segments it produces.

use biarcs::{build_biarc, classify, G1Pair, Vec2};

fn main() -> biarcs::Result<()> {
    let s = 0.5f64.sqrt();
    let v = Vec2::new;
    let pairs = [
        (v(0.0, 0.0), v(s, s), v(10.0, 0.0), v(0.0, -1.0)),
        (v(1.0, 0.0), v(0.0, 1.0), v(0.0, 1.0), v(-1.0, 0.0)),
        (v(0.0, 0.0), v(0.0, 1.0), v(-200.0, 0.0), v(-1.0, 0.0)),
        (v(0.0, 0.0), v(1.0, 0.0), v(10.0, 0.0), v(0.0, 1.0)),
        (v(0.0, 0.0), v(1.0, 0.0), v(2.0, 1.0), v(1.0, 0.0)),
        (v(0.0, 0.0), v(1.0, 0.0), v(5.0, 0.0), v(1.0, 0.0)),
        (v(0.0, 0.0), v(1.0, 0.0), v(0.0, 2.0), v(-1.0, 0.0)),
    ];
    for (a, ta, b, tb) in pairs {
        let pair = G1Pair::new(a, ta, b, tb)?;
        let case = classify(&pair)?;
        let segs = build_biarc(&pair, 0.0)?.segments();
        let kinds: Vec<String> = segs
            .iter()
            .map(|s| match s.radius() {
                Some(r) => format!("arc R={r:.3}"),
                None => "line".to_string(),
            })
            .collect();
        println!("{:<42} {}", case.to_string(), kinds.join(", "));
    }
    Ok(())
}
