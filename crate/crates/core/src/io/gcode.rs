use std::fmt::Write;

use super::format::format_fixed;
use super::split_full_circles;
use crate::biarc::ArcSegment;
use crate::error::{Error, Result};
use crate::spline::ArcSpline;
use crate::symplectic::Vec2;

/// XY-plane program: a rapid move to the start, then `G1` for lines and
/// `G2`/`G3` (clockwise/counterclockwise) for arcs with incremental `I J`
/// center offsets. Every word is written out on every line; numbers carry
/// `decimals` places with trailing zeros dropped.
pub fn emit_gcode(spline: &ArcSpline, decimals: usize) -> String {
    let segments = split_full_circles(&spline.segments);
    let num = |x: f64| format_fixed(x, decimals);
    let mut out = String::new();
    let Some(first) = segments.first() else {
        return out;
    };
    let p = first.start();
    writeln!(out, "G0 X{} Y{}", num(p.x), num(p.y)).unwrap();
    let mut pen = p;
    for s in &segments {
        if s.start() != pen {
            let p = s.start();
            writeln!(out, "G0 X{} Y{}", num(p.x), num(p.y)).unwrap();
        }
        match *s {
            ArcSegment::Line { end, .. } => {
                writeln!(out, "G1 X{} Y{}", num(end.x), num(end.y)).unwrap()
            }
            ArcSegment::Arc {
                start,
                end,
                center,
                sweep,
                ..
            } => {
                let code = if sweep > 0.0 { "G3" } else { "G2" };
                let ij = center - start;
                writeln!(
                    out,
                    "{code} X{} Y{} I{} J{}",
                    num(end.x),
                    num(end.y),
                    num(ij.x),
                    num(ij.y)
                )
                .unwrap();
            }
        }
        pen = s.end();
    }
    out
}

/// Reads back programs written by [`emit_gcode`], rebuilding each move as a segment.
pub fn parse_gcode(text: &str) -> Result<Vec<ArcSegment>> {
    let mut pen: Option<Vec2> = None;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let loc = || format!("gcode:{}", lineno + 1);
        let mut words = line.split_whitespace();
        let Some(code) = words.next() else { continue };
        let (mut x, mut y, mut i, mut j) = (None, None, None, None);
        for w in words {
            let (letter, value) = w.split_at(1);
            let v: f64 = value
                .parse()
                .map_err(|_| Error::parse(loc(), format!("bad number in '{w}'")))?;
            match letter {
                "X" => x = Some(v),
                "Y" => y = Some(v),
                "I" => i = Some(v),
                "J" => j = Some(v),
                _ => return Err(Error::parse(loc(), format!("unexpected word '{w}'"))),
            }
        }
        let target = match (x, y) {
            (Some(x), Some(y)) => Vec2::new(x, y),
            _ => return Err(Error::parse(loc(), "missing X or Y")),
        };
        if code == "G0" {
            pen = Some(target);
            continue;
        }
        let start = pen.ok_or_else(|| Error::parse(loc(), "move before positioning"))?;
        match code {
            "G1" => out.push(ArcSegment::line(start, target)),
            "G2" | "G3" => {
                let (Some(i), Some(j)) = (i, j) else {
                    return Err(Error::parse(loc(), "arc without I/J"));
                };
                let center = start + Vec2::new(i, j);
                let ccw = code == "G3";
                let r = (start - center).length();
                let mut sweep = (start - center).angle_to(target - center);
                if ccw && sweep <= 0.0 {
                    sweep += std::f64::consts::TAU;
                } else if !ccw && sweep >= 0.0 {
                    sweep -= std::f64::consts::TAU;
                }
                out.push(ArcSegment::Arc {
                    start,
                    end: target,
                    center,
                    radius: if ccw { r } else { -r },
                    sweep,
                });
            }
            other => return Err(Error::parse(loc(), format!("unsupported code '{other}'"))),
        }
        pen = Some(target);
    }
    Ok(out)
}
