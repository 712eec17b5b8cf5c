//! Biarc interpolation of G1 Hermite data and arc-spline fitting of polylines.
//!
//! A pair of points with unit tangents admits a one-parameter family of
//! biarcs whose join points sweep the *joint circle*. This crate exposes that
//! family ([`JointFrame`]), builds concrete biarcs ([`build_biarc`]), picks
//! join points by several strategies ([`strategy`]), fits whole polylines
//! ([`spline`]) and writes the results as arc lists, SVG and G-code ([`io`]).

// `!(x <= tol)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod biarc;
pub mod cli;
pub mod error;
pub mod io;
pub mod spline;
pub mod strategy;
pub mod symplectic;

pub use biarc::{
    build_biarc, build_biarc_with, classify, classify_with, ArcSegment, Biarc, Case, G1Pair,
    JointFrame, Tolerances,
};
pub use error::{Error, Result};
pub use spline::{assign_tangents, fit_spline, ArcSpline, Polyline};
pub use strategy::{select, StrategyKind, StrategyResult, StrategySpec};
pub use symplectic::Vec2;
