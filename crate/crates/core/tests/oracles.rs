//! Independent oracles: closed forms evaluated the long way, grid scans and
//! dense sampling, compared against the library's direct computations.

mod common;

use approx::assert_abs_diff_eq;
use biarcs::spline::spline_length;
use biarcs::strategy::{cubic_midpoint, j_shaped, j_shaped_line_side, parallel_tangent, Side};
use biarcs::{
    assign_tangents, build_biarc, fit_spline, ArcSegment, G1Pair, JointFrame, StrategyKind,
    StrategySpec, Vec2,
};
use rand::Rng;

/// Chord to the joint written as a sum of sines, without the product rewrite.
fn chord_sum_of_sines(pair: &G1Pair, u: f64) -> Vec2 {
    let psi = pair.angle().psi;
    let c = pair.chord;
    let (s, co) = (psi / 2.0).sin_cos();
    let (su, cu) = (u * psi / 2.0).sin_cos();
    (c * (s + su) + c.tilde() * (co - cu)) / (2.0 * s)
}

#[test]
fn chord_matches_sum_of_sines() {
    let mut rng = common::rng(100);
    for _ in 0..2000 {
        let pair = common::random_pair(&mut rng);
        let frame = JointFrame::new(&pair).unwrap();
        let u = rng.random_range(-1.0..=1.0);
        let got = frame.chord_at(u);
        let want = chord_sum_of_sines(&pair, u);
        let err = (got - want).length() / pair.chord.length();
        assert!(err < 1e-12, "u = {u}: {got:?} vs {want:?}");
    }
}

#[test]
fn chord_end_points() {
    let mut rng = common::rng(101);
    for _ in 0..200 {
        let pair = common::random_pair(&mut rng);
        let frame = JointFrame::new(&pair).unwrap();
        let c = pair.chord;
        assert!(frame.chord_at(-1.0).length() <= 1e-12 * c.length());
        assert!((frame.chord_at(1.0) - c).length() <= 1e-12 * c.length());
    }
}

#[test]
fn chord_near_parallel_tangents_is_continuous() {
    // as ψ → 0 the circular family must approach the straight one
    let c = Vec2::new(3.0, 1.0);
    for k in 4..12 {
        let eps = 10f64.powi(-k);
        let pair = G1Pair::new(Vec2::ZERO, Vec2::X, c, Vec2::from_angle(eps)).unwrap();
        let frame = JointFrame::new(&pair).unwrap();
        for u in [-0.7, 0.0, 0.3, 0.9] {
            let straight = c * ((1.0 + u) / 2.0);
            let err = (frame.chord_at(u) - straight).length();
            assert!(err < 10.0 * eps * c.length(), "ψ = {eps}: error {err}");
        }
    }
}

/// Parameter from a chord using tan φ = num/den, as a plain ratio.
fn u_from_tangent_ratio(pair: &G1Pair, a: Vec2, denominator_sign: f64) -> f64 {
    let psi = pair.angle().psi;
    let c = pair.chord;
    let c2 = c.length_squared();
    let num = 2.0 * a.dot(c) - c2;
    let den = 2.0 * a.skew(c) + denominator_sign * c2 / (psi / 2.0).tan();
    2.0 * (num / den).atan() / psi
}

#[test]
fn inversion_uses_positive_cotangent_term() {
    let pair = common::north_west_pair();
    let frame = JointFrame::new(&pair).unwrap();
    let a = frame.chord_at(-1.0 / 3.0);
    assert_abs_diff_eq!(
        u_from_tangent_ratio(&pair, a, 1.0),
        -1.0 / 3.0,
        epsilon = 1e-12
    );
    // the opposite sign lands on a different point of the circle
    assert!((u_from_tangent_ratio(&pair, a, -1.0) + 1.0 / 3.0).abs() > 0.5);
}

#[test]
fn inversion_matches_tangent_ratio_on_random_frames() {
    let mut rng = common::rng(102);
    for _ in 0..1000 {
        let pair = common::random_pair(&mut rng);
        let frame = JointFrame::new(&pair).unwrap();
        // keep |φ| < π/2 - margin so the plain arctangent branch is the right one
        let u = rng.random_range(-0.9..0.9);
        let a = frame.chord_at(u);
        let ratio = u_from_tangent_ratio(&pair, a, 1.0);
        let direct = frame.param_of_chord(a).unwrap();
        assert!((ratio - u).abs() < 1e-8, "ratio form gave {ratio} for {u}");
        assert!(
            (direct - u).abs() < 1e-10,
            "param_of_chord gave {direct} for {u}"
        );
    }
}

#[test]
fn north_west_cubic_chord_inverts_to_grid_minimum() {
    let pair = common::north_west_pair();
    let frame = JointFrame::new(&pair).unwrap();
    let m = cubic_midpoint(&frame, &pair).unwrap();
    let n = 200_000;
    let best = (0..=n)
        .map(|k| -1.0 + 2.0 * k as f64 / n as f64)
        .min_by(|x, y| {
            let dx = (frame.chord_at(*x) - m.chord).length();
            let dy = (frame.chord_at(*y) - m.chord).length();
            dx.total_cmp(&dy)
        })
        .unwrap();
    assert_abs_diff_eq!(m.u, best, epsilon = 2.0 / n as f64);
    assert_abs_diff_eq!(m.chord.x, -63.4, epsilon = 0.05);
    assert_abs_diff_eq!(m.chord.y, 36.6, epsilon = 0.05);
}

/// Roots of `f` on `(-1, 1)` by sign changes over a fine grid plus bisection.
fn scan_roots(f: impl Fn(f64) -> f64) -> Vec<f64> {
    let n = 4000;
    let grid: Vec<f64> = (0..=n).map(|k| -1.0 + 2.0 * k as f64 / n as f64).collect();
    let mut roots = Vec::new();
    for w in grid.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if f(mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots
}

fn min_chord(frame: &JointFrame, u: f64) -> f64 {
    let a = frame.chord_at(u);
    a.length().min((frame.chord() - a).length())
}

#[test]
fn parallel_tangent_matches_grid_scan() {
    let mut rng = common::rng(103);
    let mut found = 0;
    for _ in 0..300 {
        let pair = common::random_pair(&mut rng);
        let frame = JointFrame::new(&pair).unwrap();
        let c = pair.chord;
        let roots: Vec<f64> = scan_roots(|u| frame.joint_tangent_at(u).skew(c))
            .into_iter()
            .filter(|u| u.abs() < 1.0 - 1e-6)
            .collect();
        match parallel_tangent(&frame, &pair) {
            Ok(u) => {
                found += 1;
                let best = roots
                    .iter()
                    .copied()
                    .max_by(|x, y| min_chord(&frame, *x).total_cmp(&min_chord(&frame, *y)))
                    .expect("scan finds the strategy's root");
                assert!((u - best).abs() < 1e-7, "strategy {u}, scan {best}");
            }
            Err(_) => assert!(
                roots.is_empty(),
                "scan found {roots:?} but strategy gave none"
            ),
        }
    }
    assert!(found > 50);
}

#[test]
fn j_shaped_matches_grid_scan() {
    let mut rng = common::rng(104);
    let mut found = 0;
    for _ in 0..300 {
        let pair = common::random_pair(&mut rng);
        let frame = JointFrame::new(&pair).unwrap();
        let Some(side) = j_shaped_line_side(&pair) else {
            continue;
        };
        let t = match side {
            Side::Start => pair.start_tangent,
            Side::End => pair.end_tangent,
        };
        // a real line needs t_J = t, not merely parallel
        let roots: Vec<f64> = scan_roots(|u| frame.joint_tangent_at(u).skew(t))
            .into_iter()
            .filter(|u| u.abs() < 1.0 - 1e-6 && frame.joint_tangent_at(*u).dot(t) > 0.0)
            .collect();
        match j_shaped(&frame, &pair) {
            Ok(u) => {
                found += 1;
                assert!(
                    roots.iter().any(|r| (r - u).abs() < 1e-7),
                    "strategy {u}, scan {roots:?}"
                );
                let b = build_biarc(&pair, u).unwrap();
                let seg = if side == Side::Start {
                    b.first
                } else {
                    b.second
                };
                assert!(seg.is_line());
            }
            Err(_) => assert!(
                roots.is_empty(),
                "scan found {roots:?} but strategy gave none"
            ),
        }
    }
    assert!(found > 30);
}

#[test]
fn j_shaped_ending_line_fixture() {
    // dot(c, tA) = 1 < dot(c, tB) = 2: the ending arc straightens
    let pair = G1Pair::new(Vec2::ZERO, Vec2::Y, Vec2::new(2.0, 1.0), Vec2::X).unwrap();
    let frame = JointFrame::new(&pair).unwrap();
    let u = j_shaped(&frame, &pair).unwrap();
    let roots = scan_roots(|u| frame.joint_tangent_at(u).skew(Vec2::X));
    assert!(roots.iter().any(|r| (r - u).abs() < 1e-7));
    let b = build_biarc(&pair, u).unwrap();
    assert!(b.second.is_line());
    assert_abs_diff_eq!(b.joint.x, 1.0, epsilon = 1e-12);
    assert_abs_diff_eq!(b.joint.y, 1.0, epsilon = 1e-12);
    assert_abs_diff_eq!(b.first.radius().unwrap(), -1.0, epsilon = 1e-12);
}

#[test]
fn north_west_strategies_vanish() {
    // both joints that make the tangent horizontal sit on the end point B
    let pair = common::north_west_pair();
    let frame = JointFrame::new(&pair).unwrap();
    let roots = scan_roots(|u| frame.joint_tangent_at(u).skew(pair.chord));
    assert!(
        roots.iter().all(|u| (u.abs() - 1.0).abs() < 1e-6),
        "{roots:?}"
    );
    assert!(parallel_tangent(&frame, &pair).is_err());
    assert!(j_shaped(&frame, &pair).is_err());
}

fn sampled_length(s: &ArcSegment, n: usize) -> f64 {
    let mut prev = s.point_at(0.0);
    let mut total = 0.0;
    for k in 1..=n {
        let p = s.point_at(k as f64 / n as f64);
        total += prev.distance(p);
        prev = p;
    }
    total
}

#[test]
fn north_west_length_matches_sampling() {
    let b = build_biarc(&common::north_west_pair(), 0.0).unwrap();
    let segs = b.segments();
    let exact = spline_length(&segs);
    let sampled: f64 = segs.iter().map(|s| sampled_length(s, 10_000)).sum();
    assert_abs_diff_eq!(exact, 249.1, epsilon = 0.05);
    assert!((exact - sampled).abs() <= 1e-6 * exact);
}

#[test]
fn spline_length_matches_sampling() {
    let poly = common::letter_w();
    let t = assign_tangents(&poly).unwrap();
    for kind in [StrategyKind::EqualChord, StrategyKind::CubicMidpoint] {
        let s = fit_spline(&poly, &t, &StrategySpec::new(kind)).unwrap();
        let sampled: f64 = s
            .segments
            .iter()
            .map(|seg| sampled_length(seg, 10_000))
            .sum();
        assert!((s.total_length - sampled).abs() <= 1e-6 * s.total_length);
    }
}

#[test]
fn arc_points_follow_the_sampled_circle() {
    // point_at rotates about the center; every sample must keep the radius
    let b = build_biarc(&common::north_west_pair(), 0.3).unwrap();
    for seg in [b.first, b.second] {
        let (c, r) = (seg.center().unwrap(), seg.radius().unwrap().abs());
        for k in 0..=100 {
            let p = seg.point_at(k as f64 / 100.0);
            assert!((p.distance(c) - r).abs() < 1e-9 * r);
        }
        assert!((seg.point_at(1.0) - seg.end()).length() < 1e-9 * r);
    }
}
