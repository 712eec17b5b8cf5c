#![allow(dead_code, clippy::neg_cmp_op_on_partial_ord)]

use biarcs::spline::{ArcSpline, Polyline};
use biarcs::{G1Pair, Vec2};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn north_west_pair() -> G1Pair {
    G1Pair::new(
        Vec2::ZERO,
        Vec2::new(0.0, 1.0),
        Vec2::new(-200.0, 0.0),
        Vec2::new(-1.0, 0.0),
    )
    .unwrap()
}

/// Outline of a letter W: 13 vertices, several angles far sharper than 90°.
pub fn letter_w() -> Polyline {
    let v = [
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
    Polyline::new(v.iter().map(|&(x, y)| Vec2::new(x, y)).collect(), true).unwrap()
}

pub fn random_point(rng: &mut StdRng) -> Vec2 {
    Vec2::new(
        rng.random_range(-100.0..100.0),
        rng.random_range(-100.0..100.0),
    )
}

pub fn random_unit(rng: &mut StdRng) -> Vec2 {
    Vec2::from_angle(rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))
}

/// Random pair with `|c| >= 1`, `|sin ψ/2| >= 0.05` and `cos ψ/2 >= 0.05`.
pub fn random_pair(rng: &mut StdRng) -> G1Pair {
    loop {
        let a = random_point(rng);
        let b = random_point(rng);
        if a.distance(b) < 1.0 {
            continue;
        }
        let p = G1Pair::new(a, random_unit(rng), b, random_unit(rng)).unwrap();
        let ang = p.angle();
        if ang.sin_half.abs() >= 0.05 && ang.cos_half >= 0.05 {
            return p;
        }
    }
}

/// Random pair with identical start and end tangents (ψ = 0).
pub fn random_parallel_pair(rng: &mut StdRng) -> G1Pair {
    loop {
        let a = random_point(rng);
        let b = random_point(rng);
        if a.distance(b) < 1.0 {
            continue;
        }
        let t = random_unit(rng);
        return G1Pair::new(a, t, b, t).unwrap();
    }
}

/// Checks the arc-spline chain invariants; returns a description of the first violation.
pub fn check_chain(
    poly: &Polyline,
    tangents: &[Vec2],
    spline: &ArcSpline,
    tol: f64,
) -> Result<(), String> {
    if spline.segments.len() > 2 * poly.edge_count() {
        return Err(format!(
            "{} segments for {} edges",
            spline.segments.len(),
            poly.edge_count()
        ));
    }
    if !spline.is_connected() {
        return Err("segments do not share end points".into());
    }
    let err = spline.max_junction_error();
    if !(err <= tol) {
        return Err(format!("junction tangent mismatch {err:e}"));
    }
    for s in &spline.segments {
        if let Some(r) = s.radius() {
            let c = s.center().unwrap();
            let rs = (s.start().distance(c) - r.abs()).abs();
            let re = (s.end().distance(c) - r.abs()).abs();
            if rs > tol * r.abs() || re > tol * r.abs() {
                return Err(format!("arc end point off its circle ({rs:e}, {re:e})"));
            }
            if s.sweep().signum() != r.signum() {
                return Err("sweep and radius disagree in sign".into());
            }
        }
    }
    // every vertex starts a segment, and the spline honors the vertex tangent there
    for (i, (&v, &t)) in poly.vertices().iter().zip(tangents).enumerate() {
        if i == poly.vertices().len() - 1 && !poly.is_closed() {
            let last = spline.segments.last().unwrap();
            if last.end() != v || (last.end_tangent() - t).length() > tol {
                return Err(format!("last vertex {i} not honored"));
            }
            continue;
        }
        let Some(s) = spline.segments.iter().find(|s| s.start() == v) else {
            return Err(format!("vertex {i} is not a segment end point"));
        };
        let d = (s.start_tangent() - t).length();
        if d > tol {
            return Err(format!("tangent at vertex {i} off by {d:e}"));
        }
    }
    Ok(())
}
