//! Choosing the join point of a biarc.
//!
//! Each strategy maps Hermite data to a joint parameter `u`. Strategies other
//! than equal chord can be inapplicable for a given pair; [`select`] walks a
//! fallback chain that always ends in equal chord.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::biarc::{build_from_frame, classify_with, Biarc, Case, G1Pair, JointFrame, Tolerances};
use crate::error::{Error, Result};
use crate::symplectic::Vec2;

/// Joints closer than this (in `u`) to an end point count as vanished segments.
pub const ENDPOINT_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    EqualChord,
    ParallelTangent,
    JShaped,
    CurvatureConstrained,
    CubicMidpoint,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 5] = [
        StrategyKind::EqualChord,
        StrategyKind::ParallelTangent,
        StrategyKind::JShaped,
        StrategyKind::CurvatureConstrained,
        StrategyKind::CubicMidpoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::EqualChord => "equal_chord",
            StrategyKind::ParallelTangent => "parallel_tangent",
            StrategyKind::JShaped => "j_shaped",
            StrategyKind::CurvatureConstrained => "curvature_constrained",
            StrategyKind::CubicMidpoint => "cubic_midpoint",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "equal_chord" | "equal_chords" => Ok(StrategyKind::EqualChord),
            "parallel_tangent" => Ok(StrategyKind::ParallelTangent),
            "j_shape" | "j_shaped" => Ok(StrategyKind::JShaped),
            "curvature" | "curvature_constrained" => Ok(StrategyKind::CurvatureConstrained),
            "cubic_midpoint" => Ok(StrategyKind::CubicMidpoint),
            other => Err(Error::InvalidStrategy(format!(
                "unknown strategy '{other}'"
            ))),
        }
    }
}

/// Which arc of the biarc a given radius applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Start,
    End,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "start" => Ok(Side::Start),
            "end" => Ok(Side::End),
            other => Err(Error::InvalidStrategy(format!("unknown side '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GivenRadius {
    /// Signed radius, positive for a counterclockwise arc.
    pub radius: f64,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StrategySpec {
    pub kind: StrategyKind,
    pub given_radius: Option<GivenRadius>,
    /// Tried in order when `kind` is not applicable; equal chord is always tried last.
    pub fallback: Vec<StrategyKind>,
}

impl StrategySpec {
    pub fn new(kind: StrategyKind) -> Self {
        StrategySpec {
            kind,
            given_radius: None,
            fallback: vec![StrategyKind::EqualChord],
        }
    }

    pub fn curvature(radius: f64, side: Side) -> Self {
        StrategySpec {
            kind: StrategyKind::CurvatureConstrained,
            given_radius: Some(GivenRadius { radius, side }),
            fallback: vec![StrategyKind::EqualChord],
        }
    }

    pub fn with_fallback(mut self, fallback: Vec<StrategyKind>) -> Self {
        self.fallback = fallback;
        self
    }

    pub fn validate(&self) -> Result<()> {
        match (self.kind, self.given_radius) {
            (StrategyKind::CurvatureConstrained, None) => Err(Error::InvalidStrategy(
                "curvature constrained strategy needs a radius".into(),
            )),
            (StrategyKind::CurvatureConstrained, Some(g))
                if !(g.radius.is_finite() && g.radius != 0.0) =>
            {
                Err(Error::InvalidStrategy(format!(
                    "radius must be finite and nonzero, got {}",
                    g.radius
                )))
            }
            (StrategyKind::CurvatureConstrained, Some(_)) => Ok(()),
            (kind, Some(_)) => Err(Error::InvalidStrategy(format!(
                "{kind} does not take a radius"
            ))),
            (_, None) => Ok(()),
        }
    }
}

impl Default for StrategySpec {
    fn default() -> Self {
        StrategySpec::new(StrategyKind::EqualChord)
    }
}

/// Why a strategy produced no usable joint.
#[derive(Debug, Clone, PartialEq)]
pub enum NotApplicable {
    /// ψ ≈ 0: the strategy needs a proper joint circle.
    DegenerateFrame,
    /// No solution with `φ ∈ [-|ψ|/2, |ψ|/2]`.
    OutsideWindow,
    /// The only solution puts the joint on an end point.
    VanishedSegment {
        u: f64,
    },
    /// Start and end tangents coincide.
    EqualTangents,
    Failed(String),
}

impl fmt::Display for NotApplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotApplicable::DegenerateFrame => f.write_str("joint circle degenerates to a line"),
            NotApplicable::OutsideWindow => f.write_str("no solution inside the smoothness window"),
            NotApplicable::VanishedSegment { u } => {
                write!(f, "joint coincides with an end point (u = {u})")
            }
            NotApplicable::EqualTangents => f.write_str("start and end tangents coincide"),
            NotApplicable::Failed(msg) => f.write_str(msg),
        }
    }
}

/// Equal chord lengths: always `u = 0`.
pub fn equal_chord(_frame: &JointFrame) -> f64 {
    0.0
}

/// Picks among the solutions `φ`, `φ ± π` of a `tan φ = ...` condition.
///
/// Keeps candidates inside the smoothness window that pass `accept`, drops
/// those whose joint lands on an end point, and prefers the one whose
/// shorter chord is longest.
fn pick_solution(
    frame: &JointFrame,
    phi: f64,
    accept: impl Fn(f64) -> bool,
) -> std::result::Result<f64, NotApplicable> {
    let half = 0.5 * frame.psi().abs();
    let slack = 1e-12 * half.max(1.0);
    let c = frame.chord();
    let mut best: Option<(f64, f64)> = None;
    let mut vanished = None;
    let mut any_in_window = false;
    for cand in [phi, phi + PI, phi - PI] {
        if cand.abs() > half + slack {
            continue;
        }
        let u = frame.u_of_phi(cand).clamp(-1.0, 1.0);
        if !accept(u) {
            continue;
        }
        any_in_window = true;
        if u.abs() > 1.0 - ENDPOINT_MARGIN {
            vanished = Some(u);
            continue;
        }
        let a = frame.chord_at(u);
        let shortest = a.length().min((c - a).length());
        if best.is_none_or(|(_, s)| shortest > s) {
            best = Some((u, shortest));
        }
    }
    match (best, vanished) {
        (Some((u, _)), _) => Ok(u),
        (None, Some(u)) => Err(NotApplicable::VanishedSegment { u }),
        (None, None) => {
            debug_assert!(!any_in_window);
            Err(NotApplicable::OutsideWindow)
        }
    }
}

/// Joint tangent parallel (or antiparallel) to the chord.
pub fn parallel_tangent(
    frame: &JointFrame,
    _pair: &G1Pair,
) -> std::result::Result<f64, NotApplicable> {
    if frame.is_degenerate_line() {
        return Err(NotApplicable::DegenerateFrame);
    }
    let t0 = frame.origin_tangent();
    let phi = t0.angle_to(frame.chord());
    pick_solution(frame, phi, |_| true)
}

/// One arc forced to a straight line.
///
/// The start arc is straightened when `c·t_A > c·t_B`, the end arc when
/// `c·t_A < c·t_B`; on a tie the biarc is a single arc and `u = 0`.
pub fn j_shaped(frame: &JointFrame, pair: &G1Pair) -> std::result::Result<f64, NotApplicable> {
    if frame.is_degenerate_line() {
        return Err(NotApplicable::DegenerateFrame);
    }
    let c = pair.chord;
    let diff = c.dot(pair.start_tangent) - c.dot(pair.end_tangent);
    let tie = frame.tolerances().eps_case * c.length();
    if diff.abs() <= tie {
        return Ok(0.0);
    }
    // The φ ± π candidates turn the joint tangent to -t, which bends the
    // designated chord across t into a half circle; only chords running along
    // t (cosine 1, against 0 for the spurious branch) are real lines.
    let along = |chord: Vec2, t: Vec2| chord.dot(t) > 0.5 * chord.length();
    let t0 = frame.origin_tangent();
    if diff > 0.0 {
        let t = pair.start_tangent;
        pick_solution(frame, t0.angle_to(t), |u| along(frame.chord_at(u), t))
    } else {
        let t = pair.end_tangent;
        pick_solution(frame, t0.angle_to(t), |u| along(c - frame.chord_at(u), t))
    }
}

/// The arc that [`j_shaped`] straightens; `None` on a tie (single arc).
pub fn j_shaped_line_side(pair: &G1Pair) -> Option<Side> {
    let c = pair.chord;
    let diff = c.dot(pair.start_tangent) - c.dot(pair.end_tangent);
    if diff.abs() <= Tolerances::default().eps_case * c.length() {
        None
    } else if diff > 0.0 {
        Some(Side::Start)
    } else {
        Some(Side::End)
    }
}

/// Biarc with one prescribed radius.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureSolution {
    pub radius_start: f64,
    pub radius_end: f64,
    pub joint_tangent: Vec2,
    pub u: f64,
    pub diagnostics: Vec<String>,
}

/// Solves the loop closure `A → A0 → J → B0 → B` for the missing radius,
/// the joint tangent and the joint parameter.
pub fn curvature_constrained(pair: &G1Pair, side: Side, radius: f64) -> Result<CurvatureSolution> {
    curvature_constrained_with(pair, side, radius, &Tolerances::default())
}

pub fn curvature_constrained_with(
    pair: &G1Pair,
    side: Side,
    radius: f64,
    tol: &Tolerances,
) -> Result<CurvatureSolution> {
    if !(radius.is_finite() && radius != 0.0) {
        return Err(Error::InfeasibleRadius { radius });
    }
    let frame = JointFrame::with_tolerances(pair, *tol)?;
    let case = classify_with(pair, tol)?;
    let (ta, tb, c) = (pair.start_tangent, pair.end_tangent, pair.chord);
    let half_c2 = 0.5 * c.length_squared();
    let cos_m1 = ta.dot(tb) - 1.0;
    let (num, den) = match side {
        Side::Start => (half_c2 - radius * ta.skew(c), radius * cos_m1 - tb.skew(c)),
        Side::End => (half_c2 + radius * tb.skew(c), radius * cos_m1 + ta.skew(c)),
    };
    let scale = radius.abs() + c.length();
    if den.abs() <= 1e-12 * scale {
        // 0/0: the given arc already runs from A to B, so both radii coincide
        if num.abs() <= 1e-12 * scale * c.length() {
            return Err(Error::IndeterminateJointTangent { radius });
        }
        return Err(Error::InfeasibleRadius { radius });
    }
    let other = num / den;
    let (ra, rb) = match side {
        Side::Start => (radius, other),
        Side::End => (other, radius),
    };
    if !other.is_finite() {
        return Err(Error::InfeasibleRadius { radius });
    }
    if (ra - rb).abs() <= 1e-9 * ra.abs().max(rb.abs()) {
        return Err(Error::IndeterminateJointTangent { radius: ra });
    }
    // The loop closure yields the joint normal tilde(t_J); rotate back by -90°.
    let normal = (ta.tilde() * ra - tb.tilde() * rb - c) / (ra - rb);
    let norm = normal.length();
    if !((norm - 1.0).abs() <= 1e-6) {
        return Err(Error::Inconsistent(format!(
            "joint tangent has length {norm} before normalization"
        )));
    }
    let joint_tangent = -(normal / norm).tilde();

    let u = if frame.is_degenerate_line() {
        let chord_a = (ta.tilde() - joint_tangent.tilde()) * ra;
        frame.param_of_chord(chord_a)?
    } else {
        frame.u_of_phi(frame.origin_tangent().angle_to(joint_tangent))
    };

    let biarc = build_from_frame(pair, &frame, case, u)?;
    let (built, seg) = match side {
        Side::Start => (biarc.first.radius(), biarc.first),
        Side::End => (biarc.second.radius(), biarc.second),
    };
    let Some(built) = built else {
        return Err(Error::Inconsistent(
            "constrained segment came out straight".into(),
        ));
    };
    if !((built - radius).abs() <= 1e-9 * radius.abs()) {
        return Err(Error::Inconsistent(format!(
            "rebuilt radius {built} differs from requested {radius}"
        )));
    }
    let mut diagnostics = Vec::new();
    if seg.sweep().abs() > PI {
        diagnostics.push(format!(
            "constrained arc sweeps {:.1}°, more than half a turn; check the radius sign",
            seg.sweep().to_degrees()
        ));
    }
    if u.abs() > 1.0 {
        diagnostics.push(format!(
            "joint lies outside the smoothness window (u = {u})"
        ));
    }
    Ok(CurvatureSolution {
        radius_start: ra,
        radius_end: rb,
        joint_tangent,
        u,
        diagnostics,
    })
}

/// Join point at the midpoint of a cubic Bezier through the Hermite data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicMidpoint {
    pub u: f64,
    /// Chord from the start point to the Bezier midpoint.
    pub chord: Vec2,
    /// Control point distance: `A1 = A + h t_A`, `B1 = B - h t_B`.
    pub h: f64,
    pub kappa: f64,
    /// `t_A - t_B`.
    pub t_ba: Vec2,
}

pub fn cubic_midpoint(
    frame: &JointFrame,
    pair: &G1Pair,
) -> std::result::Result<CubicMidpoint, NotApplicable> {
    if frame.is_degenerate_line() {
        return Err(NotApplicable::DegenerateFrame);
    }
    let c = pair.chord;
    let t_ba = pair.start_tangent - pair.end_tangent;
    let t2 = t_ba.length_squared();
    if t2 < 1e-18 {
        return Err(NotApplicable::EqualTangents);
    }
    let kappa = t_ba.skew(c) / t2;
    let (s, co) = (frame.sin_half(), frame.cos_half());
    // h² + 2p·h - q = 0, positive root; the two branches avoid cancellation.
    let p = 4.0 * kappa * co / (3.0 * s);
    let q = 4.0 * c.length_squared() / (9.0 * s * s);
    let root = p.hypot(q.sqrt());
    let h = if p >= 0.0 { q / (p + root) } else { root - p };
    let chord = c * 0.5 + t_ba * (0.375 * h);
    let u = frame
        .param_of_chord(chord)
        .map_err(|e| NotApplicable::Failed(e.to_string()))?;
    Ok(CubicMidpoint {
        u,
        chord,
        h,
        kappa,
        t_ba,
    })
}

/// Outcome of [`select`].
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyResult {
    pub u: f64,
    pub requested: StrategyKind,
    pub applied: StrategyKind,
    pub fell_back: bool,
    pub diagnostics: Vec<String>,
    pub biarc: Biarc,
}

pub fn select(pair: &G1Pair, spec: &StrategySpec) -> Result<StrategyResult> {
    select_with(pair, spec, &Tolerances::default())
}

/// Applies the requested strategy, falling back along `spec.fallback` and
/// finally to equal chord.
///
/// Joints outside `[-1, 1]` and biarcs that fail to build count as
/// inapplicable for every strategy except equal chord, whose errors propagate.
pub fn select_with(pair: &G1Pair, spec: &StrategySpec, tol: &Tolerances) -> Result<StrategyResult> {
    spec.validate()?;
    let frame = JointFrame::with_tolerances(pair, *tol)?;
    let case = classify_with(pair, tol)?;
    let requested = spec.kind;

    if case == Case::SingleLine {
        let biarc = build_from_frame(pair, &frame, case, 0.0)?;
        return Ok(StrategyResult {
            u: 0.0,
            requested,
            applied: requested,
            fell_back: false,
            diagnostics: vec![format!("{case}: no strategy consulted")],
            biarc,
        });
    }

    let mut diagnostics = Vec::new();
    let chain = std::iter::once(requested)
        .chain(spec.fallback.iter().copied())
        .chain(std::iter::once(StrategyKind::EqualChord));
    for kind in chain {
        let attempt = match kind {
            StrategyKind::EqualChord => Ok(equal_chord(&frame)),
            StrategyKind::ParallelTangent => parallel_tangent(&frame, pair),
            StrategyKind::JShaped => j_shaped(&frame, pair),
            StrategyKind::CubicMidpoint => cubic_midpoint(&frame, pair).map(|m| m.u),
            StrategyKind::CurvatureConstrained => match spec.given_radius {
                None => Err(NotApplicable::Failed("no radius given".into())),
                Some(g) => curvature_constrained_with(pair, g.side, g.radius, tol)
                    .map(|sol| {
                        diagnostics.extend(sol.diagnostics);
                        sol.u
                    })
                    .map_err(|e| NotApplicable::Failed(e.to_string())),
            },
        };
        let u = match attempt {
            Ok(u) => u,
            Err(reason) => {
                diagnostics.push(format!("{kind}: {reason}"));
                continue;
            }
        };
        match build_from_frame(pair, &frame, case, u) {
            Ok(biarc) if biarc.in_window() || kind == StrategyKind::EqualChord => {
                return Ok(StrategyResult {
                    u,
                    requested,
                    applied: kind,
                    fell_back: kind != requested,
                    diagnostics,
                    biarc,
                });
            }
            Ok(_) => diagnostics.push(format!(
                "{kind}: joint outside the smoothness window (u = {u})"
            )),
            Err(e) if kind == StrategyKind::EqualChord => return Err(e),
            Err(e) => diagnostics.push(format!("{kind}: {e}")),
        }
    }
    unreachable!("equal chord ends every fallback chain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::SQRT_2;

    fn north_west() -> G1Pair {
        G1Pair::new(
            Vec2::ZERO,
            Vec2::new(0.0, 1.0),
            Vec2::new(-200.0, 0.0),
            Vec2::new(-1.0, 0.0),
        )
        .unwrap()
    }

    #[test]
    fn equal_chord_north_west() {
        let p = north_west();
        let f = JointFrame::new(&p).unwrap();
        assert_eq!(equal_chord(&f), 0.0);
        let a = f.chord_at(0.0);
        let b = p.chord - a;
        assert_abs_diff_eq!(a.length(), 108.239_220_029_239_4, epsilon = 1e-9);
        assert_abs_diff_eq!(a.length(), b.length(), epsilon = 1e-12);
    }

    #[test]
    fn parallel_tangent_north_west_vanishes() {
        let p = north_west();
        let f = JointFrame::new(&p).unwrap();
        match parallel_tangent(&f, &p) {
            Err(NotApplicable::VanishedSegment { u }) => {
                assert_abs_diff_eq!(u, -1.0, epsilon = 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }
        let r = select(&p, &StrategySpec::new(StrategyKind::ParallelTangent)).unwrap();
        assert_eq!(r.applied, StrategyKind::EqualChord);
        assert!(r.fell_back);
        assert_eq!(r.u, 0.0);
    }

    #[test]
    fn parallel_tangent_mirror_symmetric() {
        let ta = Vec2::new(1.0, 2.0) / 5f64.sqrt();
        let c = Vec2::new(3.0, 1.0);
        let tb = ta.reflect(c).unwrap();
        let p = G1Pair::new(Vec2::ZERO, ta, c, tb).unwrap();
        let f = JointFrame::new(&p).unwrap();
        assert_abs_diff_eq!(parallel_tangent(&f, &p).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn j_shaped_tie_is_single_arc() {
        let p = G1Pair::new(Vec2::new(1.0, 0.0), Vec2::Y, Vec2::Y, -Vec2::X).unwrap();
        let f = JointFrame::new(&p).unwrap();
        assert_eq!(j_shaped(&f, &p).unwrap(), 0.0);
    }

    #[test]
    fn j_shaped_ending_line() {
        // quarter circle of radius 1 about (1, 0), then a straight run to (2, 1)
        let p = G1Pair::new(Vec2::ZERO, Vec2::Y, Vec2::new(2.0, 1.0), Vec2::X).unwrap();
        let f = JointFrame::new(&p).unwrap();
        let u = j_shaped(&f, &p).unwrap();
        let b = crate::build_biarc(&p, u).unwrap();
        assert!(b.second.is_line());
        assert_abs_diff_eq!(b.joint.x, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b.joint.y, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b.first.radius().unwrap(), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn curvature_north_west() {
        let p = north_west();
        let sol = curvature_constrained(&p, Side::End, -100.0 * SQRT_2).unwrap();
        assert_abs_diff_eq!(
            sol.radius_start,
            20000.0 / (200.0 + 100.0 * SQRT_2),
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(sol.u, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sol.joint_tangent.x, -SQRT_2 / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sol.joint_tangent.y, -SQRT_2 / 2.0, epsilon = 1e-12);

        let back = curvature_constrained(&p, Side::Start, sol.radius_start).unwrap();
        assert_abs_diff_eq!(back.radius_end, -100.0 * SQRT_2, epsilon = 1e-9);
    }

    #[test]
    fn curvature_equal_radii_is_indeterminate() {
        // both radii equal 1 on the single-arc quarter circle
        let p = G1Pair::new(Vec2::new(1.0, 0.0), Vec2::Y, Vec2::Y, -Vec2::X).unwrap();
        assert!(matches!(
            curvature_constrained(&p, Side::Start, 1.0),
            Err(Error::IndeterminateJointTangent { .. })
        ));
        assert!(matches!(
            curvature_constrained(&p, Side::Start, 0.0),
            Err(Error::InfeasibleRadius { .. })
        ));
    }

    #[test]
    fn cubic_midpoint_north_west() {
        let p = north_west();
        let f = JointFrame::new(&p).unwrap();
        let m = cubic_midpoint(&f, &p).unwrap();
        assert_abs_diff_eq!(m.kappa, 100.0, epsilon = 1e-9);
        assert_abs_diff_eq!(m.h, 97.6, epsilon = 0.05);
        assert_abs_diff_eq!(m.chord.x, -63.4, epsilon = 0.05);
        assert_abs_diff_eq!(m.chord.y, 36.6, epsilon = 0.05);
    }

    #[test]
    fn spec_validation() {
        assert!(StrategySpec::new(StrategyKind::CurvatureConstrained)
            .validate()
            .is_err());
        let mut s = StrategySpec::new(StrategyKind::EqualChord);
        s.given_radius = Some(GivenRadius {
            radius: 1.0,
            side: Side::Start,
        });
        assert!(s.validate().is_err());
        assert!(StrategySpec::curvature(2.0, Side::End).validate().is_ok());
    }

    #[test]
    fn kind_names_parse() {
        for k in StrategyKind::ALL {
            assert_eq!(k.name().parse::<StrategyKind>().unwrap(), k);
        }
        assert_eq!(
            "j-shape".parse::<StrategyKind>().unwrap(),
            StrategyKind::JShaped
        );
        assert_eq!(
            "curvature".parse::<StrategyKind>().unwrap(),
            StrategyKind::CurvatureConstrained
        );
        assert!("spiral".parse::<StrategyKind>().is_err());
    }

    #[test]
    fn single_line_skips_strategies() {
        let p = G1Pair::new(Vec2::ZERO, Vec2::X, Vec2::new(4.0, 0.0), Vec2::X).unwrap();
        let r = select(&p, &StrategySpec::new(StrategyKind::CubicMidpoint)).unwrap();
        assert!(!r.fell_back);
        assert_eq!(r.biarc.segments().len(), 1);
    }

    #[test]
    fn j_shaped_rejects_half_circle_branch() {
        // tB nearly perpendicular to the chord-side solution: the φ + π root
        // makes b ⟂ tB, a half circle rather than a line
        let p = G1Pair::new(
            Vec2::new(-32.92101873464665, 29.246724855788386),
            Vec2::new(-0.7154632375496522, 0.6986503816036816),
            Vec2::new(17.748781091237873, 27.771202262520063),
            Vec2::new(0.26366698939316596, 0.964613766594871),
        )
        .unwrap();
        let frame = JointFrame::new(&p).unwrap();
        if let Ok(u) = j_shaped(&frame, &p) {
            assert!(crate::biarc::build_biarc(&p, u).unwrap().second.is_line());
        }
    }
}
