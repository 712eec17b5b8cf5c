use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symplectic::Vec2;

/// A directed circular arc or line segment.
///
/// Arcs use signed quantities: `radius > 0` and `sweep > 0` for
/// counterclockwise traversal, both negative for clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ArcSegment {
    Line {
        start: Vec2,
        end: Vec2,
    },
    Arc {
        start: Vec2,
        end: Vec2,
        center: Vec2,
        radius: f64,
        sweep: f64,
    },
}

impl ArcSegment {
    pub fn line(start: Vec2, end: Vec2) -> Self {
        ArcSegment::Line { start, end }
    }

    pub fn start(&self) -> Vec2 {
        match *self {
            ArcSegment::Line { start, .. } | ArcSegment::Arc { start, .. } => start,
        }
    }

    pub fn end(&self) -> Vec2 {
        match *self {
            ArcSegment::Line { end, .. } | ArcSegment::Arc { end, .. } => end,
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self, ArcSegment::Line { .. })
    }

    /// Signed radius; `None` for lines.
    pub fn radius(&self) -> Option<f64> {
        match *self {
            ArcSegment::Arc { radius, .. } => Some(radius),
            ArcSegment::Line { .. } => None,
        }
    }

    /// Signed sweep angle, zero for lines.
    pub fn sweep(&self) -> f64 {
        match *self {
            ArcSegment::Arc { sweep, .. } => sweep,
            ArcSegment::Line { .. } => 0.0,
        }
    }

    pub fn center(&self) -> Option<Vec2> {
        match *self {
            ArcSegment::Arc { center, .. } => Some(center),
            ArcSegment::Line { .. } => None,
        }
    }

    /// Arc length.
    pub fn length(&self) -> f64 {
        match *self {
            ArcSegment::Line { start, end } => start.distance(end),
            ArcSegment::Arc { radius, sweep, .. } => (radius * sweep).abs(),
        }
    }

    /// Unit tangent in the direction of travel at `p`, which must lie on the segment's support.
    pub fn tangent_at_point(&self, p: Vec2) -> Vec2 {
        match *self {
            ArcSegment::Line { start, end } => (end - start) / start.distance(end),
            ArcSegment::Arc { center, radius, .. } => (p - center).tilde() / radius,
        }
    }

    pub fn start_tangent(&self) -> Vec2 {
        self.tangent_at_point(self.start())
    }

    pub fn end_tangent(&self) -> Vec2 {
        self.tangent_at_point(self.end())
    }

    /// Point at fraction `s ∈ [0, 1]` of the way along the segment.
    pub fn point_at(&self, s: f64) -> Vec2 {
        match *self {
            ArcSegment::Line { start, end } => start + (end - start) * s,
            ArcSegment::Arc {
                start,
                center,
                sweep,
                ..
            } => center + (start - center).rotate(s * sweep),
        }
    }

    /// Same geometry traversed in the opposite direction.
    pub fn reversed(&self) -> Self {
        match *self {
            ArcSegment::Line { start, end } => ArcSegment::Line {
                start: end,
                end: start,
            },
            ArcSegment::Arc {
                start,
                end,
                center,
                radius,
                sweep,
            } => ArcSegment::Arc {
                start: end,
                end: start,
                center,
                radius: -radius,
                sweep: -sweep,
            },
        }
    }

    /// Splits arcs sweeping more than `max_sweep` into equal pieces.
    ///
    /// Piece boundaries are computed by rotation; the final end point is the
    /// original one so chains stay exactly connected.
    pub fn split(&self, max_sweep: f64) -> Vec<ArcSegment> {
        let ArcSegment::Arc {
            start,
            end,
            center,
            radius,
            sweep,
        } = *self
        else {
            return vec![*self];
        };
        let n = (sweep.abs() / max_sweep).ceil().max(1.0) as usize;
        if n == 1 {
            return vec![*self];
        }
        let piece = sweep / n as f64;
        let mut out = Vec::with_capacity(n);
        let mut from = start;
        for k in 1..=n {
            let to = if k == n {
                end
            } else if 2 * k == n {
                // half way round: the antipode, free of rotation round-off
                center * 2.0 - start
            } else {
                center + (start - center).rotate(piece * k as f64)
            };
            out.push(ArcSegment::Arc {
                start: from,
                end: to,
                center,
                radius,
                sweep: piece,
            });
            from = to;
        }
        out
    }

    /// True for full circles, whose start and end coincide.
    pub fn is_full_circle(&self) -> bool {
        (self.sweep().abs() - 2.0 * PI).abs() < 1e-12
    }
}

/// Result of fitting one biarc half to its chord.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArcFit {
    Line,
    Arc {
        /// α or β in `(-2π, 2π]`.
        angle: f64,
        radius: f64,
        /// Center relative to the point carrying `tangent`.
        center_offset: Vec2,
    },
}

impl ArcFit {
    pub fn angle(&self) -> f64 {
        match *self {
            ArcFit::Line => 0.0,
            ArcFit::Arc { angle, .. } => angle,
        }
    }
}

/// Arc through the chord that is tangent to `tangent` at one of its ends.
///
/// With `at_start` the tangent belongs to the chord's start (the first biarc
/// arc: angle measured from tangent to chord); otherwise to its end (the
/// second arc: angle measured from chord to tangent, center offset relative
/// to the chord's end point).
pub fn arc_from_chord(chord: Vec2, tangent: Vec2, at_start: bool, eps_line: f64) -> Result<ArcFit> {
    let len2 = chord.length_squared();
    if !(len2 > 0.0) {
        return Err(Error::ZeroChord);
    }
    let (s, d) = if at_start {
        (tangent.skew(chord), tangent.dot(chord))
    } else {
        (chord.skew(tangent), chord.dot(tangent))
    };
    if s.abs() < eps_line * len2.sqrt() {
        if d > 0.0 {
            return Ok(ArcFit::Line);
        }
        return Err(Error::Inconsistent(
            "tangent points against its chord; the segment would run backwards".into(),
        ));
    }
    let radius = len2 / (2.0 * s);
    Ok(ArcFit::Arc {
        angle: 2.0 * s.atan2(d),
        radius,
        center_offset: tangent.tilde() * radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn north_west_first_arc() {
        let a = Vec2::new(-100.0, 100.0 * (std::f64::consts::SQRT_2 - 1.0));
        let ArcFit::Arc {
            angle,
            radius,
            center_offset,
        } = arc_from_chord(a, Vec2::Y, true, 1e-9).unwrap()
        else {
            panic!("expected arc");
        };
        assert_abs_diff_eq!(angle.to_degrees(), 135.0, epsilon = 1e-10);
        assert_abs_diff_eq!(radius, 58.578_643_762_690_5, epsilon = 1e-9);
        assert_abs_diff_eq!(center_offset.x, -radius, epsilon = 1e-12);
        assert_abs_diff_eq!(center_offset.y, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn north_west_second_arc() {
        let b = Vec2::new(-100.0, -100.0 * (std::f64::consts::SQRT_2 - 1.0));
        let fit = arc_from_chord(b, Vec2::new(-1.0, 0.0), false, 1e-9).unwrap();
        let ArcFit::Arc {
            angle,
            radius,
            center_offset,
        } = fit
        else {
            panic!("expected arc");
        };
        assert_abs_diff_eq!(angle.to_degrees(), -45.0, epsilon = 1e-10);
        assert_abs_diff_eq!(radius, -141.421_356_237_309_5, epsilon = 1e-9);
        assert_abs_diff_eq!(center_offset.x, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(center_offset.y, 141.421_356_237_309_5, epsilon = 1e-9);
    }

    #[test]
    fn parallel_chord_is_line() {
        assert_eq!(
            arc_from_chord(Vec2::new(3.0, 0.0), Vec2::X, true, 1e-9).unwrap(),
            ArcFit::Line
        );
        assert!(arc_from_chord(Vec2::new(-3.0, 0.0), Vec2::X, true, 1e-9).is_err());
        assert_eq!(
            arc_from_chord(Vec2::ZERO, Vec2::X, true, 1e-9),
            Err(Error::ZeroChord)
        );
    }

    #[test]
    fn arc_tangents_and_points() {
        let seg = ArcSegment::Arc {
            start: Vec2::new(1.0, 0.0),
            end: Vec2::new(0.0, 1.0),
            center: Vec2::ZERO,
            radius: 1.0,
            sweep: std::f64::consts::FRAC_PI_2,
        };
        assert_abs_diff_eq!(seg.start_tangent().y, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(seg.end_tangent().x, -1.0, epsilon = 1e-15);
        let mid = seg.point_at(0.5);
        assert_abs_diff_eq!(mid.x, mid.y, epsilon = 1e-15);
        let r = seg.reversed();
        assert_abs_diff_eq!(r.start_tangent().x, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn split_full_circle() {
        let start = Vec2::new(2.0, 0.0);
        let seg = ArcSegment::Arc {
            start,
            end: start,
            center: Vec2::ZERO,
            radius: 2.0,
            sweep: 2.0 * PI,
        };
        assert!(seg.is_full_circle());
        let halves = seg.split(PI);
        assert_eq!(halves.len(), 2);
        assert_eq!(halves[0].end(), halves[1].start());
        assert_eq!(halves[1].end(), start);
        assert_abs_diff_eq!(halves[0].end().x, -2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(seg.length(), 4.0 * PI);
    }
}
