//! `printf("%.Ng")`-style float formatting for reports.

/// Formats `x` with `digits` significant digits, trailing zeros removed,
/// switching to exponent form outside `1e-4 <= |x| < 10^digits` as C's `%g` does.
/// Non-finite input yields `null` so JSON output stays valid.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return "null".to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// 17 significant digits: enough to round-trip any `f64`.
pub fn sig17(x: f64) -> String {
    sig(x, 17)
}

/// 6 significant digits, for human-facing tables.
pub fn sig6(x: f64) -> String {
    sig(x, 6)
}
