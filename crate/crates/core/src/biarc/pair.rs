use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symplectic::Vec2;

/// Shortest tangent vector accepted for normalization.
pub const MIN_TANGENT_LENGTH: f64 = 1e-12;

/// Numerical thresholds shared by the frame, the classifier and arc construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// `|sin(ψ/2)|` below this switches the joint circle to its straight-line limit.
    pub eps_angle: f64,
    /// `|skew(t, chord)| < eps_line * |chord|` turns an arc into a line.
    pub eps_line: f64,
    /// Relative tie tolerance (times `|c|`) used by the case classifier.
    pub eps_case: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_angle: 1e-9,
            eps_line: 1e-9,
            eps_case: 1e-9,
        }
    }
}

/// Two end points with unit tangents: the boundary condition of a biarc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct G1Pair {
    pub start: Vec2,
    pub start_tangent: Vec2,
    pub end: Vec2,
    pub end_tangent: Vec2,
    /// `end - start`.
    pub chord: Vec2,
}

impl G1Pair {
    /// Builds a pair, normalizing both tangents.
    pub fn new(start: Vec2, start_tangent: Vec2, end: Vec2, end_tangent: Vec2) -> Result<Self> {
        for (v, what) in [
            (start, "start point"),
            (start_tangent, "start tangent"),
            (end, "end point"),
            (end_tangent, "end tangent"),
        ] {
            if !v.is_finite() {
                return Err(Error::NonFinite(what));
            }
        }
        let start_tangent = start_tangent
            .normalized(MIN_TANGENT_LENGTH)
            .ok_or(Error::ZeroTangent("start tangent"))?;
        let end_tangent = end_tangent
            .normalized(MIN_TANGENT_LENGTH)
            .ok_or(Error::ZeroTangent("end tangent"))?;
        let chord = end - start;
        if !chord.is_finite() {
            return Err(Error::NonFinite("chord"));
        }
        Ok(G1Pair {
            start,
            start_tangent,
            end,
            end_tangent,
            chord,
        })
    }

    pub(crate) fn require_chord(&self) -> Result<f64> {
        let len = self.chord.length();
        if len > 0.0 {
            Ok(len)
        } else {
            Err(Error::ZeroChord)
        }
    }

    pub fn angle(&self) -> BiarcAngle {
        biarc_angle(self.start_tangent, self.end_tangent)
    }
}

/// The directed angle ψ from the start tangent to the end tangent, with its half-angle terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiarcAngle {
    /// ψ in `(-π, π]`.
    pub psi: f64,
    pub sin_half: f64,
    pub cos_half: f64,
}

impl BiarcAngle {
    /// `tan(ψ/2)`, absent for antiparallel tangents.
    pub fn tan_half(&self) -> Option<f64> {
        (self.cos_half > f64::EPSILON).then(|| self.sin_half / self.cos_half)
    }

    /// `tan(ψ/4)`, finite over the whole range of ψ.
    pub fn tan_quarter(&self) -> f64 {
        self.sin_half / (1.0 + self.cos_half)
    }
}

/// ψ from two unit tangents via `atan2(skew, dot)`.
///
/// The half-angle terms are taken from ψ/2 directly rather than from the
/// square-root forms, which lose all precision for nearly parallel tangents.
/// `sin_half` carries the sign of `skew(t_a, t_b)`; `cos_half >= 0`.
pub fn biarc_angle(t_a: Vec2, t_b: Vec2) -> BiarcAngle {
    let mut psi = t_a.skew(t_b).atan2(t_a.dot(t_b));
    if psi <= -PI {
        psi = PI;
    }
    let (sin_half, cos_half) = (0.5 * psi).sin_cos();
    BiarcAngle {
        psi,
        sin_half,
        cos_half,
    }
}
