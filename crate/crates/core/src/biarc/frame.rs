//! The joint circle and its one-parameter family of join points.
//!
//! Join points are addressed by `u`, with the circle angle `φ = u·ψ/2`
//! measured from the origin `J0`, the circle point on the perpendicular
//! bisector of `AB` nearest to the chord. `u = -1` is the start point,
//! `u = 1` the end point and `u = 0` the equal-chord joint.

use crate::biarc::pair::{BiarcAngle, G1Pair, Tolerances};
use crate::error::{Error, Result};
use crate::symplectic::Vec2;

/// Relative residual allowed by [`JointFrame::param_of_chord`] for a point
/// to count as lying on the joint circle.
pub const ON_CIRCLE_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointFrame {
    angle: BiarcAngle,
    chord: Vec2,
    chord_len: f64,
    radius: f64,
    center_offset: Vec2,
    origin_offset: Vec2,
    origin_tangent: Vec2,
    reflected_start_tangent: Vec2,
    degenerate_line: bool,
    tol: Tolerances,
}

impl JointFrame {
    pub fn new(pair: &G1Pair) -> Result<Self> {
        Self::with_tolerances(pair, Tolerances::default())
    }

    pub fn with_tolerances(pair: &G1Pair, tol: Tolerances) -> Result<Self> {
        let chord_len = pair.require_chord()?;
        let c = pair.chord;
        let angle = pair.angle();
        let BiarcAngle {
            psi,
            sin_half,
            cos_half,
        } = angle;

        let reflected = pair.start_tangent.reflect(c)?;
        let reflected = reflected / reflected.length();

        let degenerate_line = sin_half.abs() < tol.eps_angle;
        let (radius, center_offset, origin_tangent) = if degenerate_line {
            (f64::NAN, Vec2::new(f64::NAN, f64::NAN), reflected)
        } else {
            let radius = chord_len / (2.0 * sin_half);
            let center = c * 0.5 + c.tilde() * (cos_half / (2.0 * sin_half));
            (radius, center, reflected.rotate(-0.5 * psi))
        };
        let origin_offset = (c - c.tilde() * angle.tan_quarter()) * 0.5;

        Ok(JointFrame {
            angle,
            chord: c,
            chord_len,
            radius,
            center_offset,
            origin_offset,
            origin_tangent,
            reflected_start_tangent: reflected,
            degenerate_line,
            tol,
        })
    }

    pub fn psi(&self) -> f64 {
        self.angle.psi
    }

    pub fn angle(&self) -> BiarcAngle {
        self.angle
    }

    pub fn sin_half(&self) -> f64 {
        self.angle.sin_half
    }

    pub fn cos_half(&self) -> f64 {
        self.angle.cos_half
    }

    pub fn tan_half(&self) -> Option<f64> {
        self.angle.tan_half()
    }

    pub fn chord(&self) -> Vec2 {
        self.chord
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// True when the joint circle has degenerated into the line through A and B.
    pub fn is_degenerate_line(&self) -> bool {
        self.degenerate_line
    }

    /// Signed joint circle radius `c / (2 sin(ψ/2))`; `None` on the degenerate line.
    pub fn radius(&self) -> Option<f64> {
        (!self.degenerate_line).then_some(self.radius)
    }

    /// Joint circle center relative to the start point.
    pub fn center_offset(&self) -> Option<Vec2> {
        (!self.degenerate_line).then_some(self.center_offset)
    }

    /// Offset of the joint circle origin `J0` from the start point.
    pub fn origin_offset(&self) -> Vec2 {
        self.origin_offset
    }

    /// Biarc tangent at `J0`.
    pub fn origin_tangent(&self) -> Vec2 {
        self.origin_tangent
    }

    /// Start tangent mirrored at the chord.
    pub fn reflected_start_tangent(&self) -> Vec2 {
        self.reflected_start_tangent
    }

    /// Chord vector from the start point to the join point at parameter `u`.
    ///
    /// Uses the product form
    /// `a(u) = sin(ψ(1+u)/4) / sin(ψ/2) · rotate(c, -ψ(1-u)/4)`,
    /// which is algebraically the sum-of-sines expression but keeps full
    /// precision as ψ approaches zero.
    pub fn chord_at(&self, u: f64) -> Vec2 {
        if self.degenerate_line {
            return self.chord * (0.5 * (1.0 + u));
        }
        let psi = self.angle.psi;
        let scale = (0.25 * psi * (1.0 + u)).sin() / self.angle.sin_half;
        self.chord.rotate(-0.25 * psi * (1.0 - u)) * scale
    }

    /// Joint circle angle `φ = u·ψ/2`.
    pub fn phi_of(&self, u: f64) -> f64 {
        0.5 * u * self.angle.psi
    }

    /// Inverse of `phi_of`; meaningless on the degenerate line.
    pub fn u_of_phi(&self, phi: f64) -> f64 {
        2.0 * phi / self.angle.psi
    }

    /// Relative distance of `start + a` from the joint circle.
    ///
    /// Zero exactly when `sin(ψ/2)(a² - a·c) + cos(ψ/2) skew(a, c) = 0`, the
    /// circle equation written without the center; on the degenerate line it
    /// reduces to collinearity with the chord.
    pub fn circle_residual(&self, a: Vec2) -> f64 {
        let scale = a.length() * self.chord_len;
        if scale == 0.0 {
            return 0.0;
        }
        let c = self.chord;
        let r = if self.degenerate_line {
            a.skew(c)
        } else {
            self.angle.sin_half * (a.length_squared() - a.dot(c)) + self.angle.cos_half * a.skew(c)
        };
        (r / scale).abs()
    }

    /// Parameter `u` of the join point `start + a`.
    pub fn param_of_chord(&self, a: Vec2) -> Result<f64> {
        let residual = self.circle_residual(a);
        if !(residual <= ON_CIRCLE_TOLERANCE) {
            return Err(Error::OffCircle { residual });
        }
        let c = self.chord;
        let c2 = c.length_squared();
        if self.degenerate_line {
            return Ok(2.0 * a.dot(c) / c2 - 1.0);
        }
        let BiarcAngle {
            sin_half, cos_half, ..
        } = self.angle;
        let sin_phi = sin_half * (2.0 * a.dot(c) - c2);
        let cos_phi = 2.0 * sin_half * a.skew(c) + cos_half * c2;
        Ok(self.u_of_phi(sin_phi.atan2(cos_phi)))
    }

    /// Common tangent of both arcs at the join point for parameter `u`.
    pub fn joint_tangent_at(&self, u: f64) -> Vec2 {
        if self.degenerate_line {
            self.reflected_start_tangent
        } else {
            self.origin_tangent.rotate(self.phi_of(u))
        }
    }
}
