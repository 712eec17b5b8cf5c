//! Plane vectors carrying the Euclidean, complex and symplectic structure.
//!
//! The three products used throughout the crate are
//!
//! * `dot(a, b)  = a.x*b.x + a.y*b.y` (Euclidean),
//! * `tilde(a)   = (-a.y, a.x)` (complex structure, rotation by +90°),
//! * `skew(a, b) = dot(tilde(a), b) = a.x*b.y - a.y*b.x` (symplectic, signed area).
//!
//! Everything else (rotation, reflection) is expressed through them.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point or direction in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Vec2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Vec2 { x, y }
    }
}

impl From<Vec2> for [f64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };
    pub const X: Vec2 = Vec2 { x: 1.0, y: 0.0 };
    pub const Y: Vec2 = Vec2 { x: 0.0, y: 1.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Builds a vector, rejecting NaN and infinite components.
    pub fn try_new(x: f64, y: f64, what: &'static str) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Vec2 { x, y })
        } else {
            Err(Error::NonFinite(what))
        }
    }

    /// Unit vector at `angle` radians from the x-axis.
    #[inline]
    pub fn from_angle(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Vec2::new(c, s)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Skew-orthogonal companion, `(-y, x)`.
    #[inline]
    pub fn tilde(self) -> Self {
        Vec2::new(-self.y, self.x)
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Signed area of the parallelogram spanned by `self` and `other`.
    #[inline]
    pub fn skew(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn length_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn length(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counterclockwise rotation, `cos(angle)*v + sin(angle)*tilde(v)`.
    #[inline]
    pub fn rotate(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        self * c + self.tilde() * s
    }

    /// Mirror image of `self` across the line spanned by `mirror`.
    pub fn reflect(self, mirror: Vec2) -> Result<Self> {
        let m2 = mirror.length_squared();
        if !(m2 > 0.0) {
            return Err(Error::ZeroMirror);
        }
        let mt = mirror.tilde();
        Ok((mirror * mirror.dot(self) - mt * mt.dot(self)) / m2)
    }

    /// Unit vector in the direction of `self`, or `None` when shorter than `min_len`.
    pub fn normalized(self, min_len: f64) -> Option<Self> {
        let len = self.length();
        (len.is_finite() && len >= min_len && len > 0.0).then(|| self / len)
    }

    /// Signed angle from `self` to `other`, in `(-π, π]`.
    #[inline]
    pub fn angle_to(self, other: Vec2) -> f64 {
        self.skew(other).atan2(self.dot(other))
    }

    #[inline]
    pub fn distance(self, other: Vec2) -> f64 {
        (other - self).length()
    }
}

/// Free-function form of [`Vec2::tilde`].
#[inline]
pub fn tilde(v: Vec2) -> Vec2 {
    v.tilde()
}

#[inline]
pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a.dot(b)
}

#[inline]
pub fn skew(a: Vec2, b: Vec2) -> f64 {
    a.skew(b)
}

#[inline]
pub fn rotate(v: Vec2, angle: f64) -> Vec2 {
    v.rotate(angle)
}

pub fn reflect(v: Vec2, mirror: Vec2) -> Result<Vec2> {
    v.reflect(mirror)
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl SubAssign for Vec2 {
    #[inline]
    fn sub_assign(&mut self, rhs: Vec2) {
        self.x -= rhs.x;
        self.y -= rhs.y;
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.x / s, self.y / s)
    }
}
