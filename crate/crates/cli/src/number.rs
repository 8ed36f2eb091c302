//! Lossless decimal rendering with a floor of nine significant digits.

use varregion::ExtendedReal;

use crate::CliError;

const MIN_DIGITS: usize = 9;

fn significant_digits(s: &str) -> usize {
    let mantissa = s.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let trimmed = digits.trim_start_matches('0');
    if trimmed.is_empty() {
        1
    } else {
        trimmed.len()
    }
}

/// Shortest round-trip form, padded with zeros to nine significant digits.
/// Moderate magnitudes are positional, the rest scientific.
pub fn render_f64(x: f64) -> String {
    debug_assert!(x.is_finite());
    let a = x.abs();
    if x == 0.0 || (1e-4..1e15).contains(&a) {
        let mut s = format!("{x}");
        let have = if x == 0.0 { 1 } else { significant_digits(&s) };
        if have < MIN_DIGITS {
            if !s.contains('.') {
                s.push('.');
            }
            s.extend(std::iter::repeat_n('0', MIN_DIGITS - have));
        }
        s
    } else {
        let s = format!("{x:e}");
        if significant_digits(&s) < MIN_DIGITS {
            format!("{x:.8e}")
        } else {
            s
        }
    }
}

pub fn parse_f64(s: &str) -> Result<f64, CliError> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(CliError::Parse(format!("not a finite number: {s:?}"))),
    }
}

pub fn render_extended(x: ExtendedReal) -> String {
    match x {
        ExtendedReal::Finite(v) => render_f64(v),
        ExtendedReal::PosInfinity => "+inf".into(),
        ExtendedReal::NegInfinity => "-inf".into(),
    }
}

pub fn parse_extended(s: &str) -> Result<ExtendedReal, CliError> {
    match s {
        "+inf" | "inf" => Ok(ExtendedReal::PosInfinity),
        "-inf" => Ok(ExtendedReal::NegInfinity),
        _ => parse_f64(s).map(ExtendedReal::Finite),
    }
}
