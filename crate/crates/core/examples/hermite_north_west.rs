//! One biarc between (0,0) heading north and (-200,0) heading west.
//!
//! ```text
//! cargo run --example hermite_north_west
//! ```

use biarcs::{build_biarc, classify, G1Pair, JointFrame, Vec2};

fn main() -> biarcs::Result<()> {
    let pair = G1Pair::new(
        Vec2::new(0.0, 0.0),
        Vec2::new(0.0, 1.0),
        Vec2::new(-200.0, 0.0),
        Vec2::new(-1.0, 0.0),
    )?;
    let frame = JointFrame::new(&pair)?;
    println!("{}", classify(&pair)?);
    println!("psi            {:.4}°", frame.psi().to_degrees());
    println!("joint radius   {:.4}", frame.radius().unwrap());
    println!(
        "circle center  {:?}",
        pair.start + frame.center_offset().unwrap()
    );

    let b = build_biarc(&pair, 0.0)?;
    println!("joint          ({:.4}, {:.4})", b.joint.x, b.joint.y);
    println!(
        "joint tangent  ({:.4}, {:.4})",
        b.joint_tangent.x, b.joint_tangent.y
    );
    for (name, seg, angle) in [("A", b.first, b.alpha), ("B", b.second, b.beta)] {
        let c = seg.center().unwrap();
        println!(
            "arc {name}: R = {:9.4}  sweep = {:8.3}°  center = ({:.4}, {:.4})",
            seg.radius().unwrap(),
            angle.to_degrees(),
            c.x,
            c.y
        );
    }
    println!("length         {:.4}", b.length());
    Ok(())
}
