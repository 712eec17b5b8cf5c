pub const DEFAULT_PRECISION: usize = 6;
pub const MIN_PRECISION: usize = 3;
pub const MAX_PRECISION: usize = 17;

/// Rounds to `digits` significant digits.
pub(crate) fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let digits = digits.clamp(1, MAX_PRECISION);
    let r: f64 = format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("scientific notation round-trips");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest decimal representation of `x` rounded to `digits` significant
/// digits. Never uses exponent notation; negative zero prints as `0`.
pub fn format_number(x: f64, digits: usize) -> String {
    format!("{}", round_sig(x, digits))
}

/// `x` with `decimals` places after the point, trailing zeros trimmed.
pub fn format_fixed(x: f64, decimals: usize) -> String {
    let s = format!("{:.*}", decimals, x);
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        &s
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}
