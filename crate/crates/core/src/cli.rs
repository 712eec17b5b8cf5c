//! Command-line front end: read a polyline or Hermite pair, fit, write outputs.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::biarc::Tolerances;
use crate::error::Error;
use crate::io::{
    emit_arcjson, emit_gcode, emit_svg, format_number, parse_input, Input, InputKind,
    DEFAULT_PRECISION, MAX_PRECISION, MIN_PRECISION,
};
use crate::spline::{assign_tangents, fit_spline_with, ArcSpline};
use crate::strategy::{select_with, GivenRadius, Side, StrategyKind, StrategySpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONSTRUCTION: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Polyline,
    Hermite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    EqualChord,
    ParallelTangent,
    JShape,
    CubicMidpoint,
    Curvature,
}

impl From<StrategyArg> for StrategyKind {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::EqualChord => StrategyKind::EqualChord,
            StrategyArg::ParallelTangent => StrategyKind::ParallelTangent,
            StrategyArg::JShape => StrategyKind::JShaped,
            StrategyArg::CubicMidpoint => StrategyKind::CubicMidpoint,
            StrategyArg::Curvature => StrategyKind::CurvatureConstrained,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Start,
    End,
}

/// Fit biarcs and arc splines; write arc lists, SVG and G-code.
#[derive(Debug, Parser)]
#[command(name = "biarc", version)]
struct Args {
    /// Input document (JSON).
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "polyline")]
    kind: KindArg,
    /// Treat the polyline as closed regardless of its "closed" field.
    #[arg(long)]
    closed: bool,
    #[arg(long, value_enum, default_value = "equal-chord")]
    strategy: StrategyArg,
    /// Signed radius for the curvature strategy.
    #[arg(long, allow_negative_numbers = true)]
    radius: Option<f64>,
    #[arg(long, value_enum)]
    side: Option<SideArg>,
    /// Comma-separated strategies tried when the requested one does not apply.
    #[arg(long, value_name = "LIST")]
    fallback: Option<String>,
    #[arg(long, value_name = "PATH")]
    out_json: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    out_svg: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    out_gcode: Option<PathBuf>,
    /// Significant digits in arc lists and SVG; decimal places in G-code.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
    #[arg(long)]
    eps_angle: Option<f64>,
    #[arg(long)]
    eps_line: Option<f64>,
    /// Print fallback counts and total length.
    #[arg(long)]
    report: bool,
}

/// Everything a run needs, validated.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub kind: InputKind,
    pub closed: bool,
    pub spec: StrategySpec,
    pub out_json: Option<PathBuf>,
    pub out_svg: Option<PathBuf>,
    pub out_gcode: Option<PathBuf>,
    pub report: bool,
    pub tolerances: Tolerances,
    pub precision: usize,
}

impl RunConfig {
    fn from_args(args: Args) -> Result<Self, String> {
        let kind: StrategyKind = args.strategy.into();
        let given_radius = match (kind, args.radius) {
            (StrategyKind::CurvatureConstrained, None) => {
                return Err("--strategy curvature requires --radius".into())
            }
            (StrategyKind::CurvatureConstrained, Some(radius)) => Some(GivenRadius {
                radius,
                side: match args.side.unwrap_or(SideArg::Start) {
                    SideArg::Start => Side::Start,
                    SideArg::End => Side::End,
                },
            }),
            (_, Some(_)) => return Err("--radius is only valid with --strategy curvature".into()),
            (_, None) if args.side.is_some() => {
                return Err("--side is only valid with --strategy curvature".into())
            }
            (_, None) => None,
        };
        let fallback = match &args.fallback {
            None => vec![StrategyKind::EqualChord],
            Some(list) => list
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.parse::<StrategyKind>())
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?,
        };
        let spec = StrategySpec {
            kind,
            given_radius,
            fallback,
        };
        spec.validate().map_err(|e| e.to_string())?;

        if !(MIN_PRECISION..=MAX_PRECISION).contains(&args.precision) {
            return Err(format!(
                "--precision must be between {MIN_PRECISION} and {MAX_PRECISION}"
            ));
        }
        let mut tolerances = Tolerances::default();
        for (value, slot, flag) in [
            (args.eps_angle, &mut tolerances.eps_angle, "--eps-angle"),
            (args.eps_line, &mut tolerances.eps_line, "--eps-line"),
        ] {
            if let Some(v) = value {
                if !(v.is_finite() && v >= 0.0) {
                    return Err(format!("{flag} must be a non-negative number"));
                }
                *slot = v;
            }
        }
        if args.out_json.is_none()
            && args.out_svg.is_none()
            && args.out_gcode.is_none()
            && !args.report
        {
            return Err(
                "no output requested (use --out-json, --out-svg, --out-gcode or --report)".into(),
            );
        }
        Ok(RunConfig {
            input: args.input,
            kind: match args.kind {
                KindArg::Polyline => InputKind::Polyline,
                KindArg::Hermite => InputKind::Hermite,
            },
            closed: args.closed,
            spec,
            out_json: args.out_json,
            out_svg: args.out_svg,
            out_gcode: args.out_gcode,
            report: args.report,
            tolerances,
            precision: args.precision,
        })
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_CONSTRUCTION
    }
}

/// Fits the configured input. The report lines are returned alongside the spline.
pub fn execute(cfg: &RunConfig) -> Result<(ArcSpline, Vec<String>), Error> {
    let p = cfg.precision;
    let num = |x: f64| format_number(x, p);
    let mut report = Vec::new();
    let spline = match parse_input(&cfg.input, cfg.kind)? {
        Input::Hermite(pair) => {
            let res = select_with(&pair, &cfg.spec, &cfg.tolerances)?;
            let b = &res.biarc;
            report.push(format!("case: {}", b.case.id()));
            report.push(format!("psi: {}°", num(b.psi.to_degrees())));
            report.push(format!("u: {}", num(b.u)));
            report.push(format!("alpha: {}°", num(b.alpha.to_degrees())));
            report.push(format!("beta: {}°", num(b.beta.to_degrees())));
            let radius = |r: Option<f64>| r.map_or_else(|| "line".to_string(), num);
            report.push(format!("R_A: {}", radius(b.first.radius())));
            report.push(format!("R_B: {}", radius(b.second.radius())));
            report.extend(res.diagnostics.iter().map(|d| format!("note: {d}")));
            ArcSpline::from_biarc(b, res.applied, res.fell_back)
        }
        Input::Polyline(poly) => {
            let poly = if cfg.closed && !poly.is_closed() {
                crate::spline::Polyline::new(poly.vertices().to_vec(), true)?
            } else {
                poly
            };
            let tangents = assign_tangents(&poly)?;
            fit_spline_with(&poly, &tangents, &cfg.spec, &cfg.tolerances)?
        }
    };
    report.push(format!("strategy: {}", cfg.spec.kind));
    report.push(format!("edges: {}", spline.edges.len()));
    report.push(format!("segments: {}", spline.segments.len()));
    report.push(format!("fallbacks: {}", spline.fallback_count()));
    report.push(format!("total_length: {}", num(spline.total_length)));
    Ok((spline, report))
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INPUT
                }
            };
            return code;
        }
    };
    let cfg = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    let (spline, report) = match execute(&cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let outputs = [
        (
            &cfg.out_json,
            emit_arcjson as fn(&ArcSpline, usize) -> String,
        ),
        (&cfg.out_svg, emit_svg),
        (&cfg.out_gcode, emit_gcode),
    ];
    for (path, emit) in outputs {
        if let Some(path) = path {
            if let Err(e) = std::fs::write(path, emit(&spline, cfg.precision)) {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
    }
    if cfg.report {
        for line in report {
            let _ = writeln!(out, "{line}");
        }
    }
    EXIT_OK
}
