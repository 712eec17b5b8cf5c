//! Reading inputs and writing arc lists, SVG figures and G-code.
//!
//! All writers are deterministic: identical splines and precision give
//! byte-identical documents.

mod arcjson;
mod format;
mod gcode;
mod input;
mod svg;

pub use arcjson::{emit_arcjson, parse_arcjson, ArcJson, EdgeJson};
pub use format::{format_fixed, format_number, DEFAULT_PRECISION, MAX_PRECISION, MIN_PRECISION};
pub use gcode::{emit_gcode, parse_gcode};
pub use input::{parse_input, parse_input_str, Input, InputKind};
pub use svg::emit_svg;

use std::f64::consts::PI;

use crate::biarc::ArcSegment;

/// Segments with full circles split into two half arcs.
pub(crate) fn split_full_circles(segments: &[ArcSegment]) -> Vec<ArcSegment> {
    segments
        .iter()
        .flat_map(|s| {
            if s.is_full_circle() {
                s.split(PI)
            } else {
                vec![*s]
            }
        })
        .collect()
}
