use std::path::Path;

use serde::Deserialize;

use crate::biarc::G1Pair;
use crate::error::{Error, Result};
use crate::spline::Polyline;
use crate::symplectic::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Polyline,
    Hermite,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Polyline(Polyline),
    Hermite(G1Pair),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolylineDoc {
    vertices: Vec<[f64; 2]>,
    #[serde(default)]
    closed: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HermiteDoc {
    #[serde(rename = "A")]
    start: [f64; 2],
    #[serde(rename = "tA")]
    start_tangent: [f64; 2],
    #[serde(rename = "B")]
    end: [f64; 2],
    #[serde(rename = "tB")]
    end_tangent: [f64; 2],
}

pub fn parse_input(path: &Path, kind: InputKind) -> Result<Input> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    parse_input_str(&text, kind, &path.display().to_string())
}

/// Parses a polyline (`{"vertices": [[x, y], ...], "closed": bool}`) or a
/// Hermite pair (`{"A": [x, y], "tA": [x, y], "B": [x, y], "tB": [x, y]}`).
/// Tangents are normalized on load.
pub fn parse_input_str(text: &str, kind: InputKind, source: &str) -> Result<Input> {
    let json_err = |e: serde_json::Error| {
        Error::parse(
            format!("{source}:{}:{}", e.line(), e.column()),
            e.to_string(),
        )
    };
    let with_source = |e: Error| Error::parse(source, e.to_string());
    match kind {
        InputKind::Polyline => {
            let doc: PolylineDoc = serde_json::from_str(text).map_err(json_err)?;
            let vertices = doc.vertices.into_iter().map(Vec2::from).collect();
            Polyline::new(vertices, doc.closed)
                .map(Input::Polyline)
                .map_err(with_source)
        }
        InputKind::Hermite => {
            let doc: HermiteDoc = serde_json::from_str(text).map_err(json_err)?;
            G1Pair::new(
                doc.start.into(),
                doc.start_tangent.into(),
                doc.end.into(),
                doc.end_tangent.into(),
            )
            .map(Input::Hermite)
            .map_err(with_source)
        }
    }
}
