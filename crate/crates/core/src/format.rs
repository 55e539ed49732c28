//! Fixed numeric formatting for reports: 15 significant digits.

#![allow(clippy::excessive_precision)]

/// Format `x` with 15 significant digits, positional for exponents in
/// `[-5, 15)` and scientific otherwise. Trailing zeros after the point are
/// dropped, so integers print without a fractional part.
pub fn sig15(x: f64) -> String {
    sig(x, 15)
}

pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits_str: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    if !(-5..15).contains(&exp) {
        let m = trim_fraction(mantissa);
        return format!("{sign}{m}e{exp}");
    }
    let body = if exp >= 0 {
        let split = (exp as usize + 1).min(digits_str.len());
        let (int, frac) = digits_str.split_at(split);
        let int = format!("{int}{}", "0".repeat(exp as usize + 1 - split));
        format!("{int}.{frac}")
    } else {
        format!("0.{}{digits_str}", "0".repeat((-exp - 1) as usize))
    };
    format!("{sign}{}", trim_fraction(&body))
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
