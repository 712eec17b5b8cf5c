//! Joint circle, case classification and biarc assembly.

mod frame;
mod pair;
mod segment;

use std::f64::consts::{PI, TAU};
use std::fmt;

pub use frame::{JointFrame, ON_CIRCLE_TOLERANCE};
pub use pair::{biarc_angle, BiarcAngle, G1Pair, Tolerances, MIN_TANGENT_LENGTH};
pub use segment::{arc_from_chord, ArcFit, ArcSegment};

use crate::error::{Error, Result};
use crate::symplectic::Vec2;

/// Allowed drift of `α + β - ψ (mod 2π)` before construction is refused.
const ANGLE_SUM_TOLERANCE: f64 = 1e-8;

/// Geometric situation of a pair of Hermite data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// Tangents point into the joint circle.
    ArcAInner = 1,
    /// All three tangents touch the joint circle; the biarc is one arc.
    SingleArc = 2,
    /// Tangents point out of the joint circle.
    ArcAOuter = 3,
    /// Start tangent points straight at the end point.
    StartCollinear = 4,
    /// Parallel tangents not aligned with the chord; joints lie on line AB.
    ParallelOffset = 5,
    /// Parallel tangents aligned with the chord; the biarc is a single line.
    SingleLine = 6,
    /// Antiparallel tangents; the chord is a diameter of the joint circle.
    Antiparallel = 7,
}

impl Case {
    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn description(self) -> &'static str {
        match self {
            Case::ArcAInner => "tangents point inward",
            Case::SingleArc => "single arc",
            Case::ArcAOuter => "tangents point outward",
            Case::StartCollinear => "start tangent along chord",
            Case::ParallelOffset => "parallel tangents, joint on AB",
            Case::SingleLine => "single line",
            Case::Antiparallel => "antiparallel tangents",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {} ({})", self.id(), self.description())
    }
}

pub fn classify(pair: &G1Pair) -> Result<Case> {
    classify_with(pair, &Tolerances::default())
}

/// Assigns one of the seven geometric cases.
///
/// Parallel and antiparallel tangents are detected through the half-angle
/// terms (`|sin ψ/2|`, `|cos ψ/2|` below `eps_angle`) so the classifier
/// agrees with the frame's degenerate-line switch. Otherwise the cases are
/// separated by the sign of `c·t_A - c·t_B`.
pub fn classify_with(pair: &G1Pair, tol: &Tolerances) -> Result<Case> {
    let c_len = pair.require_chord()?;
    let c = pair.chord;
    let angle = pair.angle();
    let tie = tol.eps_case * c_len;
    let collinear = c.skew(pair.start_tangent).abs() <= tie;

    if angle.sin_half.abs() < tol.eps_angle {
        return Ok(if collinear {
            Case::SingleLine
        } else {
            Case::ParallelOffset
        });
    }
    if angle.cos_half.abs() < tol.eps_angle {
        return Ok(Case::Antiparallel);
    }
    let diff = c.dot(pair.start_tangent) - c.dot(pair.end_tangent);
    Ok(if diff.abs() <= tie {
        Case::SingleArc
    } else if diff > 0.0 {
        if collinear {
            Case::StartCollinear
        } else {
            Case::ArcAInner
        }
    } else {
        Case::ArcAOuter
    })
}

/// Two arcs joined with a common tangent at `joint`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Biarc {
    pub case: Case,
    pub first: ArcSegment,
    pub second: ArcSegment,
    pub joint: Vec2,
    pub joint_tangent: Vec2,
    pub u: f64,
    /// Signed sweep of the first arc.
    pub alpha: f64,
    /// Signed sweep of the second arc.
    pub beta: f64,
    /// Chord from the start point to the joint.
    pub chord_a: Vec2,
    /// Chord from the joint to the end point.
    pub chord_b: Vec2,
    /// ψ of the underlying pair.
    pub psi: f64,
}

impl Biarc {
    /// False for joints on the far side of the joint circle (`|u| > 1`).
    pub fn in_window(&self) -> bool {
        self.u.abs() <= 1.0
    }

    /// The segments to emit: one line for a single-line biarc, one arc when
    /// both halves share a circle, otherwise both halves minus any of zero length.
    pub fn segments(&self) -> Vec<ArcSegment> {
        let start = self.first.start();
        let end = self.second.end();
        match (self.first, self.second) {
            (ArcSegment::Line { .. }, ArcSegment::Line { .. }) if self.case == Case::SingleLine => {
                return vec![ArcSegment::line(start, end)];
            }
            (
                ArcSegment::Arc {
                    center, radius: ra, ..
                },
                ArcSegment::Arc { radius: rb, .. },
            ) if self.case == Case::SingleArc && (ra - rb).abs() <= 1e-9 * ra.abs() => {
                return vec![ArcSegment::Arc {
                    start,
                    end,
                    center,
                    radius: ra,
                    sweep: self.alpha + self.beta,
                }];
            }
            _ => {}
        }
        [self.first, self.second]
            .into_iter()
            .filter(|s| s.start() != s.end() || s.is_full_circle())
            .collect()
    }

    pub fn length(&self) -> f64 {
        self.first.length() + self.second.length()
    }
}

pub fn build_biarc(pair: &G1Pair, u: f64) -> Result<Biarc> {
    build_biarc_with(pair, u, &Tolerances::default())
}

/// Builds the member of the biarc family with joint parameter `u`.
pub fn build_biarc_with(pair: &G1Pair, u: f64, tol: &Tolerances) -> Result<Biarc> {
    let frame = JointFrame::with_tolerances(pair, *tol)?;
    let case = classify_with(pair, tol)?;
    build_from_frame(pair, &frame, case, u)
}

pub(crate) fn build_from_frame(
    pair: &G1Pair,
    frame: &JointFrame,
    case: Case,
    u: f64,
) -> Result<Biarc> {
    if !u.is_finite() {
        return Err(Error::construction(case, "joint parameter is not finite"));
    }
    let c = pair.chord;
    let c_len = c.length();
    let chord_a = frame.chord_at(u);
    let chord_b = c - chord_a;
    if !chord_a.is_finite() {
        return Err(Error::construction(case, "joint position is not finite"));
    }
    let min_len = 1e-12 * c_len;
    if chord_a.length() <= min_len || chord_b.length() <= min_len {
        return Err(Error::construction(
            case,
            format!("joint at u = {u} coincides with an end point"),
        ));
    }
    let eps_line = frame.tolerances().eps_line;
    let wrap = |e: Error| Error::construction(case, e.to_string());
    let fit_a = arc_from_chord(chord_a, pair.start_tangent, true, eps_line).map_err(wrap)?;
    let fit_b = arc_from_chord(chord_b, pair.end_tangent, false, eps_line).map_err(wrap)?;

    let (alpha, beta) = (fit_a.angle(), fit_b.angle());
    let psi = frame.psi();
    let drift = wrap_angle(alpha + beta - psi);
    if !(drift.abs() <= ANGLE_SUM_TOLERANCE) {
        return Err(Error::construction(
            case,
            format!("arc angles do not add up to the biarc angle (off by {drift:.3e} rad)"),
        ));
    }

    let joint = pair.start + chord_a;
    let first = match fit_a {
        ArcFit::Line => ArcSegment::line(pair.start, joint),
        ArcFit::Arc {
            angle,
            radius,
            center_offset,
        } => ArcSegment::Arc {
            start: pair.start,
            end: joint,
            center: pair.start + center_offset,
            radius,
            sweep: angle,
        },
    };
    let second = match fit_b {
        ArcFit::Line => ArcSegment::line(joint, pair.end),
        ArcFit::Arc {
            angle,
            radius,
            center_offset,
        } => ArcSegment::Arc {
            start: joint,
            end: pair.end,
            center: pair.end + center_offset,
            radius,
            sweep: angle,
        },
    };

    Ok(Biarc {
        case,
        first,
        second,
        joint,
        joint_tangent: frame.joint_tangent_at(u),
        u,
        alpha,
        beta,
        chord_a,
        chord_b,
        psi,
    })
}

/// Reduces an angle to `(-π, π]`.
pub fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}
