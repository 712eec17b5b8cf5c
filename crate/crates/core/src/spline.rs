//! Smoothing polylines into G1 arc splines.
//!
//! Vertex tangents follow the Catmull-Rom direction rule (parallel to the
//! line from predecessor to successor); each edge then becomes one biarc.

use crate::biarc::{ArcSegment, Biarc, Case, G1Pair, Tolerances};
use crate::error::{Error, Result};
use crate::strategy::{select_with, StrategyKind, StrategySpec};
use crate::symplectic::Vec2;

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<Vec2>,
    closed: bool,
}

impl Polyline {
    /// Validates vertex count, finiteness and distinctness of neighbors.
    pub fn new(vertices: Vec<Vec2>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("polyline vertex"));
        }
        let (mut lo, mut hi) = (vertices[0], vertices[0]);
        for v in &vertices {
            lo = Vec2::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Vec2::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        let min_gap = 1e-12 * lo.distance(hi);
        let n = vertices.len();
        for i in 0..n - 1 {
            if vertices[i].distance(vertices[i + 1]) <= min_gap {
                return Err(Error::DuplicateVertex(i, i + 1));
            }
        }
        if closed {
            if vertices[n - 1].distance(vertices[0]) <= min_gap {
                return Err(Error::RepeatedClosingVertex);
            }
            if n < 3 {
                return Err(Error::TooFewVertices(n));
            }
        }
        Ok(Polyline { vertices, closed })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }
}

/// Catmull-Rom tangent directions; open ends use their single adjacent edge.
pub fn assign_tangents(poly: &Polyline) -> Result<Vec<Vec2>> {
    let v = poly.vertices();
    let n = v.len();
    (0..n)
        .map(|i| {
            let (prev, next) = if poly.is_closed() {
                (v[(i + n - 1) % n], v[(i + 1) % n])
            } else if i == 0 {
                (v[0], v[1])
            } else if i == n - 1 {
                (v[n - 2], v[n - 1])
            } else {
                (v[i - 1], v[i + 1])
            };
            (next - prev)
                .normalized(0.0)
                .filter(|t| t.is_finite())
                .ok_or(Error::UndefinedTangent(i))
        })
        .collect()
}

/// How one edge was resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeRecord {
    pub applied: StrategyKind,
    pub fell_back: bool,
    pub u: f64,
    pub case: Case,
    /// Number of segments this edge contributed.
    pub segments: usize,
    pub diagnostics: Vec<String>,
}

/// An ordered G1 chain of arcs and lines.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSpline {
    pub segments: Vec<ArcSegment>,
    pub edges: Vec<EdgeRecord>,
    pub closed: bool,
    pub total_length: f64,
}

impl ArcSpline {
    /// One-edge spline from a single biarc.
    pub fn from_biarc(biarc: &Biarc, applied: StrategyKind, fell_back: bool) -> Self {
        let segments = biarc.segments();
        let edges = vec![EdgeRecord {
            applied,
            fell_back,
            u: biarc.u,
            case: biarc.case,
            segments: segments.len(),
            diagnostics: Vec::new(),
        }];
        let total_length = spline_length(&segments);
        ArcSpline {
            segments,
            edges,
            closed: false,
            total_length,
        }
    }

    pub fn fallback_count(&self) -> usize {
        self.edges.iter().filter(|e| e.fell_back).count()
    }

    /// Largest tangent mismatch over all junctions (including the closing one).
    pub fn max_junction_error(&self) -> f64 {
        let n = self.segments.len();
        let pairs = if self.closed { n } else { n.saturating_sub(1) };
        (0..pairs)
            .map(|i| {
                let (s, t) = (&self.segments[i], &self.segments[(i + 1) % n]);
                (s.end_tangent() - t.start_tangent()).length()
            })
            .fold(0.0, f64::max)
    }

    /// True when every junction shares its end point exactly.
    pub fn is_connected(&self) -> bool {
        let n = self.segments.len();
        let pairs = if self.closed { n } else { n.saturating_sub(1) };
        (0..pairs).all(|i| self.segments[i].end() == self.segments[(i + 1) % n].start())
    }
}

/// Sum of segment lengths.
pub fn spline_length(segments: &[ArcSegment]) -> f64 {
    segments.iter().map(ArcSegment::length).sum()
}

pub fn fit_spline(poly: &Polyline, tangents: &[Vec2], spec: &StrategySpec) -> Result<ArcSpline> {
    fit_spline_with(poly, tangents, spec, &Tolerances::default())
}

/// Fits one biarc per edge and chains them.
pub fn fit_spline_with(
    poly: &Polyline,
    tangents: &[Vec2],
    spec: &StrategySpec,
    tol: &Tolerances,
) -> Result<ArcSpline> {
    let v = poly.vertices();
    let n = v.len();
    if tangents.len() != n {
        return Err(Error::TangentCount {
            expected: n,
            got: tangents.len(),
        });
    }
    spec.validate()?;
    let mut segments = Vec::with_capacity(2 * poly.edge_count());
    let mut edges = Vec::with_capacity(poly.edge_count());
    for i in 0..poly.edge_count() {
        let j = (i + 1) % n;
        let wrap = |e: Error| Error::Edge {
            index: i,
            source: Box::new(e),
        };
        let pair = G1Pair::new(v[i], tangents[i], v[j], tangents[j]).map_err(wrap)?;
        let res = select_with(&pair, spec, tol).map_err(wrap)?;
        let segs = res.biarc.segments();
        edges.push(EdgeRecord {
            applied: res.applied,
            fell_back: res.fell_back,
            u: res.u,
            case: res.biarc.case,
            segments: segs.len(),
            diagnostics: res.diagnostics,
        });
        segments.extend(segs);
    }
    let total_length = spline_length(&segments);
    Ok(ArcSpline {
        segments,
        edges,
        closed: poly.is_closed(),
        total_length,
    })
}
