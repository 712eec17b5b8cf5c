use std::f64::consts::PI;
use std::fmt::Write;

use super::format::format_number;
use super::split_full_circles;
use crate::biarc::ArcSegment;
use crate::spline::ArcSpline;
use crate::symplectic::Vec2;

const BOUNDS_SAMPLES: usize = 32;

fn bounds(segments: &[ArcSegment]) -> (Vec2, Vec2) {
    let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut add = |p: Vec2| {
        lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
    };
    for s in segments {
        add(s.start());
        add(s.end());
        if !s.is_line() {
            for k in 1..BOUNDS_SAMPLES {
                add(s.point_at(k as f64 / BOUNDS_SAMPLES as f64));
            }
        }
    }
    (lo, hi)
}

/// One `<path>` with `A` commands for arcs and `L` for lines.
///
/// Coordinates stay in y-up math convention; a single `scale(1,-1)` group
/// flips them for display, so sweep-flag 1 means counterclockwise.
pub fn emit_svg(spline: &ArcSpline, precision: usize) -> String {
    let segments = split_full_circles(&spline.segments);
    let num = |x: f64| format_number(x, precision);
    let pt = |p: Vec2| format!("{} {}", num(p.x), num(p.y));

    let mut d = String::new();
    let mut pen: Option<Vec2> = None;
    for s in &segments {
        if pen != Some(s.start()) {
            if !d.is_empty() {
                d.push(' ');
            }
            write!(d, "M {}", pt(s.start())).unwrap();
        }
        match *s {
            ArcSegment::Line { end, .. } => write!(d, " L {}", pt(end)).unwrap(),
            ArcSegment::Arc {
                end, radius, sweep, ..
            } => {
                let r = num(radius.abs());
                let large = u8::from(sweep.abs() > PI);
                let ccw = u8::from(sweep > 0.0);
                write!(d, " A {r} {r} 0 {large} {ccw} {}", pt(end)).unwrap();
            }
        }
        pen = Some(s.end());
    }
    if spline.closed && !segments.is_empty() {
        d.push_str(" Z");
    }

    let (lo, hi) = if segments.is_empty() {
        (Vec2::ZERO, Vec2::new(1.0, 1.0))
    } else {
        bounds(&segments)
    };
    let size = (hi - lo).x.max((hi - lo).y).max(f64::MIN_POSITIVE);
    let margin = 0.05 * size;
    let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
    let stroke = 0.005 * size;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<!-- y-up coordinates: the group transform flips y; arc sweep-flag 1 = counterclockwise -->\n",
    );
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        num(lo.x - margin),
        num(-(hi.y + margin)),
        num(w),
        num(h)
    )
    .unwrap();
    out.push_str("  <g transform=\"scale(1,-1)\">\n");
    writeln!(
        out,
        "    <path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>",
        num(stroke)
    )
    .unwrap();
    out.push_str("  </g>\n</svg>\n");
    out
}
