use serde::{Deserialize, Serialize};

use super::format::round_sig;
use crate::biarc::ArcSegment;
use crate::error::{Error, Result};
use crate::spline::ArcSpline;
use crate::symplectic::Vec2;

/// Per-edge metadata in an arc list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub strategy: String,
    pub fell_back: bool,
    pub u: f64,
    pub case: u8,
}

/// Serialized form of an [`ArcSpline`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcJson {
    pub segments: Vec<ArcSegment>,
    pub edges: Vec<EdgeJson>,
    pub closed: bool,
    pub total_length: f64,
}

fn round_vec(v: Vec2, digits: usize) -> Vec2 {
    Vec2::new(round_sig(v.x, digits), round_sig(v.y, digits))
}

fn round_segment(s: &ArcSegment, digits: usize) -> ArcSegment {
    match *s {
        ArcSegment::Line { start, end } => ArcSegment::Line {
            start: round_vec(start, digits),
            end: round_vec(end, digits),
        },
        ArcSegment::Arc {
            start,
            end,
            center,
            radius,
            sweep,
        } => ArcSegment::Arc {
            start: round_vec(start, digits),
            end: round_vec(end, digits),
            center: round_vec(center, digits),
            radius: round_sig(radius, digits),
            sweep: round_sig(sweep, digits),
        },
    }
}

/// Arc list document: segments in chain order plus one metadata record per edge.
pub fn emit_arcjson(spline: &ArcSpline, precision: usize) -> String {
    let doc = ArcJson {
        segments: spline
            .segments
            .iter()
            .map(|s| round_segment(s, precision))
            .collect(),
        edges: spline
            .edges
            .iter()
            .map(|e| EdgeJson {
                strategy: e.applied.name().to_string(),
                fell_back: e.fell_back,
                u: round_sig(e.u, precision),
                case: e.case.id(),
            })
            .collect(),
        closed: spline.closed,
        total_length: round_sig(spline.total_length, precision),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("arc list serializes");
    out.push('\n');
    out
}

pub fn parse_arcjson(text: &str) -> Result<ArcJson> {
    serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("arc list:{}:{}", e.line(), e.column()),
            e.to_string(),
        )
    })
}
